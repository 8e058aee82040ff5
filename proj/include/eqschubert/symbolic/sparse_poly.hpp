#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqschubert/error.hpp"

namespace eqschubert {

inline constexpr int kMaxVars = 16;

using Exponent = std::int16_t;
using Monomial = std::array<Exponent, kMaxVars>;

using Rational = mpq_class;
using Integer = mpz_class;

inline int monomial_degree(const Monomial& m) {
  int d = 0;
  for (Exponent e : m) d += e;
  return d;
}

inline Monomial operator+(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<Exponent>(a[i] + b[i]);
  return r;
}

inline Monomial operator-(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<Exponent>(a[i] - b[i]);
  return r;
}

/// Maps a variable index to its printed name.
using VarNamer = std::function<std::string(int)>;

/// Sparse polynomial in `rank` variables with coefficients in `Coeff`.
///
/// Terms are kept sorted by exponent vector (ascending lexicographic) with
/// no zero coefficients, so equality is structural. With `kLaurent` the
/// exponents may be negative and monomials are units.
template <class Coeff, bool kLaurent>
class SparsePoly {
 public:
  using coeff_type = Coeff;
  using Term = std::pair<Monomial, Coeff>;
  static constexpr bool is_laurent = kLaurent;

  SparsePoly() = default;
  explicit SparsePoly(int rank) : rank_(check_rank(rank)) {}

  static SparsePoly constant(int rank, const Coeff& c) {
    SparsePoly p(rank);
    if (c != 0) p.terms_.emplace_back(Monomial{}, c);
    return p;
  }

  static SparsePoly one(int rank) { return constant(rank, Coeff(1)); }

  static SparsePoly variable(int rank, int i) {
    SparsePoly p(rank);
    if (i < 0 || i >= rank) throw RankMismatch("variable index out of range");
    Monomial m{};
    m[i] = 1;
    p.terms_.emplace_back(m, Coeff(1));
    return p;
  }

  static SparsePoly monomial(int rank, const Monomial& m, const Coeff& c = Coeff(1)) {
    SparsePoly p(rank);
    check_monomial(rank, m);
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
  }

  /// Builds a polynomial from arbitrary (unsorted, possibly repeated) terms.
  static SparsePoly from_terms(int rank, std::vector<Term> terms) {
    SparsePoly p(rank);
    for (const auto& t : terms) check_monomial(rank, t.first);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
  }

  Coeff coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Coeff(0);
  }

  Coeff constant_term() const { return coefficient(Monomial{}); }

  /// Largest total degree of a term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, monomial_degree(t.first));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = monomial_degree(terms_[0].first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return monomial_degree(t.first) == d; });
  }

  /// Part of total degree exactly `d`.
  SparsePoly homogeneous_part(int d) const {
    SparsePoly r(rank_);
    for (const auto& t : terms_)
      if (monomial_degree(t.first) == d) r.terms_.push_back(t);
    return r;
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    merge_add(o, false);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    merge_add(o, true);
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& o) {
    *this = *this * o;
    return *this;
  }
  SparsePoly& operator*=(const Coeff& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Coeff& c) { return a *= c; }
  friend SparsePoly operator*(const Coeff& c, SparsePoly a) { return a *= c; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.require_same_rank(b);
    SparsePoly r(a.rank_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    const SparsePoly& big = a.terms_.size() >= b.terms_.size() ? a : b;
    const SparsePoly& small = a.terms_.size() >= b.terms_.size() ? b : a;
    if (small.terms_.size() == 1) {
      // Shifting by a fixed monomial preserves the term order.
      const auto& [m, c] = small.terms_[0];
      r.terms_.reserve(big.terms_.size());
      for (const auto& t : big.terms_) r.terms_.emplace_back(t.first + m, t.second * c);
      return r;
    }
    r.terms_.reserve(big.terms_.size() * small.terms_.size());
    for (const auto& s : small.terms_)
      for (const auto& t : big.terms_) r.terms_.emplace_back(t.first + s.first, t.second * s.second);
    r.normalize();
    return r;
  }

  SparsePoly pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power of a polynomial");
    SparsePoly r = one(rank_);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  /// Canonical text form: terms in descending lexicographic order of
  /// exponent vectors, e.g. "2*t1^2 + 2*t1*t3" or "x1^-1*x2".
  std::string to_string(const VarNamer& name) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      bool negative = c < 0;
      Coeff mag = negative ? Coeff(-c) : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (int i = 0; i < rank_; ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += name(i);
        if (m[i] != 1) mono += "^" + std::to_string(m[i]);
      }
      if (mono.empty()) {
        out += mag.get_str();
      } else if (mag == 1) {
        out += mono;
      } else {
        out += mag.get_str() + "*" + mono;
      }
    }
    return out;
  }

  std::string to_string() const {
    char prefix = kLaurent ? 'x' : 't';
    return to_string([prefix](int i) { return std::string(1, prefix) + std::to_string(i + 1); });
  }

 private:
  static int check_rank(int rank) {
    if (rank < 0 || rank > kMaxVars) throw RankMismatch("polynomial rank out of range");
    return rank;
  }

  static void check_monomial(int rank, const Monomial& m) {
    for (int i = 0; i < kMaxVars; ++i) {
      if (i >= rank && m[i] != 0) throw RankMismatch("exponent outside polynomial rank");
      if constexpr (!kLaurent) {
        if (m[i] < 0) throw std::invalid_argument("negative exponent in a polynomial");
      }
    }
  }

  void require_same_rank(const SparsePoly& o) const {
    if (rank_ != o.rank_)
      throw RankMismatch("rank mismatch: " + std::to_string(rank_) + " vs " + std::to_string(o.rank_));
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Monomial m = terms_[i].first;
      Coeff c = terms_[i].second;
      std::size_t j = i + 1;
      for (; j < terms_.size() && terms_[j].first == m; ++j) c += terms_[j].second;
      if (c != 0) terms_[out++] = Term(m, std::move(c));
      i = j;
    }
    terms_.resize(out);
  }

  void merge_add(const SparsePoly& o, bool subtract) {
    require_same_rank(o);
    if (o.terms_.empty()) return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        merged.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first < a->first) {
        merged.emplace_back(b->first, subtract ? Coeff(-b->second) : b->second);
        ++b;
      } else {
        Coeff c = subtract ? Coeff(a->second - b->second) : Coeff(a->second + b->second);
        if (c != 0) merged.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
  }

  int rank_ = 0;
  std::vector<Term> terms_;
};

/// The cohomology coefficient ring S = Q[t1..tn].
using PolyS = SparsePoly<Rational, false>;
/// The representation ring R(T) = Z[x1^±1..xn^±1]; x^λ encodes e^λ.
using LaurentR = SparsePoly<Integer, true>;

}  // namespace eqschubert
