#include "eqschubert/weyl/weyl_elem.hpp"

#include <cctype>
#include <vector>

#include "eqschubert/error.hpp"

namespace eqschubert {

WeylElem::WeylElem(std::span<const int> window) : n_(static_cast<int>(window.size())) {
  if (n_ > kMaxRank) throw InvalidElement("window longer than " + std::to_string(kMaxRank));
  std::array<bool, kMaxRank + 1> seen{};
  for (int i = 0; i < n_; ++i) {
    int a = window[i];
    int m = a < 0 ? -a : a;
    if (m < 1 || m > n_)
      throw InvalidElement("entry " + std::to_string(a) + " at position " + std::to_string(i + 1) +
                           " is out of range 1.." + std::to_string(n_));
    if (seen[m])
      throw InvalidElement("value " + std::to_string(m) + " repeated at position " + std::to_string(i + 1));
    seen[m] = true;
    w_[i] = a;
  }
}

WeylElem WeylElem::identity(int n) {
  if (n < 0 || n > kMaxRank) throw InvalidElement("rank out of range");
  WeylElem w;
  w.n_ = n;
  for (int i = 0; i < n; ++i) w.w_[i] = i + 1;
  return w;
}

WeylElem WeylElem::parse(std::string_view text) {
  std::vector<int> window;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw ParseError("empty window");
  if (text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("position " + std::to_string(i + 1) + ": expected a digit in compact window \"" +
                         std::string(text) + "\"");
      window.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    int position = 1;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      std::string_view tok = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
      bool negative = false;
      if (!tok.empty() && tok.front() == '-') {
        negative = true;
        tok.remove_prefix(1);
      }
      if (!tok.empty() && (tok.back() == 'b' || tok.back() == 'B')) {
        negative = !negative;
        tok.remove_suffix(1);
      }
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError("position " + std::to_string(position) + ": malformed entry in window \"" +
                         std::string(text) + "\"");
      int v = std::stoi(std::string(tok));
      window.push_back(negative ? -v : v);
      ++position;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return WeylElem(window);
}

bool WeylElem::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (w_[i] != i + 1) return false;
  return true;
}

int WeylElem::negative_count() const {
  int k = 0;
  for (int i = 0; i < n_; ++i) k += w_[i] < 0;
  return k;
}

WeylElem WeylElem::operator*(const WeylElem& v) const {
  if (n_ != v.n_) throw RankMismatch("cannot compose elements of different rank");
  WeylElem r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.w_[i] = image(v.w_[i]);
  return r;
}

WeylElem WeylElem::inverse() const {
  WeylElem r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) {
    int a = w_[i];
    if (a > 0) {
      r.w_[a - 1] = i + 1;
    } else {
      r.w_[-a - 1] = -(i + 1);
    }
  }
  return r;
}

LinearForm WeylElem::act(const LinearForm& lambda) const {
  if (lambda.rank() != n_) throw RankMismatch("character rank does not match the element");
  std::array<int, kMaxRank> c{};
  for (int i = 0; i < n_; ++i) {
    int a = w_[i];
    if (a > 0) {
      c[a - 1] += lambda[i];
    } else {
      c[-a - 1] -= lambda[i];
    }
  }
  return LinearForm(std::span<const int>(c.data(), static_cast<std::size_t>(n_)));
}

std::string WeylElem::to_string() const {
  if (n_ <= 9 && negative_count() == 0) {
    std::string s;
    for (int i = 0; i < n_; ++i) s += static_cast<char>('0' + w_[i]);
    return s;
  }
  return to_window_string();
}

std::string WeylElem::to_window_string() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += std::to_string(w_[i]);
  }
  return s;
}

std::uint64_t WeylElem::key() const {
  std::uint64_t k = static_cast<std::uint64_t>(n_);
  for (int i = 0; i < n_; ++i) k = (k << 7) | static_cast<std::uint64_t>(w_[i] + 64);
  return k;
}

PolyS weyl_subst(const PolyS& p, const WeylElem& w, int offset) { return signed_permute(p, w.window(), offset); }

LaurentR weyl_subst(const LaurentR& p, const WeylElem& w, int offset) {
  return signed_permute(p, w.window(), offset);
}

}  // namespace eqschubert
