#include "eqschubert/symbolic/parse.hpp"

#include <cctype>
#include <optional>

namespace eqschubert {

VarNames VarNames::torus_ring(int n, char prefix) {
  VarNames v;
  v.torus = n;
  for (int i = 1; i <= n; ++i) v.names.push_back(std::string(1, prefix) + std::to_string(i));
  return v;
}

VarNames VarNames::borel(int n) {
  VarNames v;
  v.torus = n;
  for (int i = 1; i <= n; ++i) v.names.push_back("t" + std::to_string(i));
  for (int i = 1; i <= n; ++i) v.names.push_back("z" + std::to_string(i));
  return v;
}

VarNamer VarNames::namer() const {
  return [names = names](int i) { return names.at(i); };
}

namespace {

template <class Poly>
class Parser {
 public:
  using Coeff = typename Poly::coeff_type;

  Parser(std::string_view text, const VarNames& vars) : text_(text), vars_(vars) {}

  Poly run() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(vars_.rank());
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Poly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    if (!accept('^')) return base;
    skip_space();
    bool negative = false;
    if (accept('-')) negative = true;
    std::string digits = read_digits();
    if (digits.empty()) fail("expected exponent");
    int k = std::stoi(digits);
    if (!negative) return base.pow(k);
    if constexpr (Poly::is_laurent) {
      if (base.size() != 1 || (base.terms()[0].second != 1 && base.terms()[0].second != -1))
        fail("negative power of a non-unit");
      const auto& [m, c] = base.terms()[0];
      Monomial inv{};
      for (int i = 0; i < kMaxVars; ++i) inv[i] = static_cast<Exponent>(-m[i] * k);
      Coeff sign = (k % 2 != 0) ? Coeff(c) : Coeff(1);
      return Poly::monomial(vars_.rank(), inv, sign);
    } else {
      fail("negative exponent in a polynomial");
    }
  }

  std::string read_digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected character");
  }

  Poly number() {
    std::string num = read_digits();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::string den = read_digits();
      if (den.empty()) fail("expected denominator");
      if constexpr (Poly::is_laurent) {
        fail("fractions are not allowed in R(T)");
      } else {
        Integer d(den);
        if (d == 0) fail("zero denominator");
        Rational q{Integer(num), d};
        q.canonicalize();
        return Poly::constant(vars_.rank(), q);
      }
    }
    return Poly::constant(vars_.rank(), Coeff(Integer(num)));
  }

  Poly identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    for (int i = 0; i < vars_.rank(); ++i)
      if (vars_.names[i] == name) return Poly::variable(vars_.rank(), i);
    if (name.size() == 3 && name[0] == 'a') {
      int i = name[1] - '0';
      int j = name[2] - '0';
      if (i >= 1 && j >= 1 && i <= vars_.torus && j <= vars_.torus && i != j) {
        LinearForm root = LinearForm::zero(vars_.rank());
        root = root + LinearForm::unit(vars_.rank(), j - 1) - LinearForm::unit(vars_.rank(), i - 1);
        if constexpr (Poly::is_laurent) {
          return root.to_character();
        } else {
          return root.to_poly();
        }
      }
    }
    pos_ = start;
    fail("unknown variable '" + name + "'");
  }

  std::string_view text_;
  const VarNames& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyS parse_poly(std::string_view text, const VarNames& vars) { return Parser<PolyS>(text, vars).run(); }

LaurentR parse_laurent(std::string_view text, const VarNames& vars) { return Parser<LaurentR>(text, vars).run(); }

}  // namespace eqschubert
