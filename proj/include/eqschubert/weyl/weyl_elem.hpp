#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

#include "eqschubert/symbolic/poly.hpp"

namespace eqschubert {

inline constexpr int kMaxRank = 8;

/// A signed permutation in one-line (window) notation a_1..a_n: |a_i| is a
/// permutation of 1..n. Unsigned windows are the type A elements.
///
/// Composition is (u*v)(i) = u(v(i)) with u(-k) = -u(k), and the element
/// acts on characters by t_i -> t_{w(i)}, where t_{-k} = -t_k.
class WeylElem {
 public:
  WeylElem() = default;
  explicit WeylElem(std::span<const int> window);
  WeylElem(std::initializer_list<int> window)
      : WeylElem(std::span<const int>(window.begin(), window.size())) {}

  static WeylElem identity(int n);

  /// Accepts "2143", "3,-1,4,2" and "3,1b,4,2" (b marks a negative entry).
  static WeylElem parse(std::string_view text);

  int size() const { return n_; }
  /// Signed image of the 1-based index i.
  int operator()(int i) const { return w_[i - 1]; }
  /// Signed image of any nonzero index, with w(-k) = -w(k).
  int image(int i) const { return i > 0 ? w_[i - 1] : -w_[-i - 1]; }
  std::span<const int> window() const { return {w_.data(), static_cast<std::size_t>(n_)}; }

  bool is_identity() const;
  int negative_count() const;

  WeylElem operator*(const WeylElem& v) const;
  WeylElem inverse() const;

  /// w.λ: the coefficient of t_i moves to t_{|w(i)|} with the sign of w(i).
  LinearForm act(const LinearForm& lambda) const;

  /// Compact digits ("2143") for unsigned windows with n <= 9, otherwise
  /// comma-separated with minus signs ("3,-1,4,2").
  std::string to_string() const;
  /// Always comma separated.
  std::string to_window_string() const;

  std::uint64_t key() const;

  friend bool operator==(const WeylElem&, const WeylElem&) = default;
  friend std::strong_ordering operator<=>(const WeylElem& a, const WeylElem& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (int i = 0; i < a.n_; ++i)
      if (auto c = a.w_[i] <=> b.w_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  int n_ = 0;
  std::array<int, kMaxRank> w_{};
};

/// Right Weyl action on S and R(T): t_i -> ±t_{|w(i)|}.
PolyS weyl_subst(const PolyS& p, const WeylElem& w, int offset = 0);
LaurentR weyl_subst(const LaurentR& p, const WeylElem& w, int offset = 0);

struct WeylElemHash {
  std::size_t operator()(const WeylElem& w) const { return std::hash<std::uint64_t>{}(w.key()); }
};

}  // namespace eqschubert
