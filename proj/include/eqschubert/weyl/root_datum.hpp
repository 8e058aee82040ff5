#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eqschubert/symbolic/poly.hpp"
#include "eqschubert/weyl/weyl_elem.hpp"

namespace eqschubert {

enum class Family { A, B, C, D, Sub };

enum class WordOrder { kLexMin, kLexMax };

using ReducedWord = std::vector<int>;

class RootDatum;
using DatumPtr = std::shared_ptr<const RootDatum>;

/// A finite crystallographic root system in the character lattice Z^n,
/// together with its Weyl group realized as signed permutations.
///
/// The group is enumerated eagerly; elements are indexed in the order
/// (length, window), which is a linear extension of the Bruhat order.
/// Simple reflections are indexed 0..r-1 in the order of simple_roots().
class RootDatum {
 public:
  /// Classical types. `n` is the torus rank: ('A', n) is A_{n-1} acting on
  /// t1..tn, ('C', 4) is C4, and so on.
  static DatumPtr make(char type, int n);
  /// Parses "A3", "C4", "B2", "D4".
  static DatumPtr parse(std::string_view label);
  /// The reflection subgroup generated by `simple` inside the signed
  /// permutations of rank n; `positive` must be the positive roots it spans.
  static DatumPtr from_simple_system(std::string label, int n, std::vector<LinearForm> positive,
                                     std::vector<LinearForm> simple);

  const std::string& label() const { return label_; }
  Family family() const { return family_; }
  int rank() const { return n_; }
  int num_simple() const { return static_cast<int>(simple_.size()); }
  const std::vector<LinearForm>& positive_roots() const { return positive_; }
  const std::vector<LinearForm>& simple_roots() const { return simple_; }
  const WeylElem& simple_reflection(int i) const { return simple_reflections_[i]; }

  bool is_root(const LinearForm& alpha) const;
  /// s_α: λ -> λ - <λ, α^∨> α. Throws NotARoot.
  WeylElem reflection(const LinearForm& alpha) const;

  std::size_t size() const { return elements_.size(); }
  const std::vector<WeylElem>& elements() const { return elements_; }
  const WeylElem& element(std::size_t idx) const { return elements_[idx]; }
  std::optional<std::size_t> find(const WeylElem& w) const;
  /// Index of w; throws InvalidElement when w is not in this group.
  std::size_t index_of(const WeylElem& w) const;
  bool contains(const WeylElem& w) const { return find(w).has_value(); }
  /// Throws InvalidElement with a message naming the group.
  void require(const WeylElem& w) const;

  const WeylElem& identity() const { return elements_.front(); }
  const WeylElem& longest_element() const { return elements_.back(); }

  int length(const WeylElem& w) const;
  int length(std::size_t idx) const { return lengths_[idx]; }
  /// #{α > 0 : w.α < 0}, valid for every datum.
  int inversion_count(const WeylElem& w) const;

  WeylElem multiply(const WeylElem& u, const WeylElem& v) const;
  WeylElem inverse(const WeylElem& w) const;

  /// Index of element(idx) * s_i and s_i * element(idx).
  std::size_t right_mult_simple(std::size_t idx, int i) const { return right_simple_[idx * simple_.size() + i]; }
  std::size_t left_mult_simple(std::size_t idx, int i) const { return left_simple_[idx * simple_.size() + i]; }
  bool is_right_descent(std::size_t idx, int i) const { return lengths_[right_mult_simple(idx, i)] < lengths_[idx]; }
  bool is_left_descent(std::size_t idx, int i) const { return lengths_[left_mult_simple(idx, i)] < lengths_[idx]; }

  /// Canonical reduced word: greedy on the smallest (or largest) left
  /// descent, so w = s_{b1} s_{b2} ... s_{bN}.
  ReducedWord reduced_word(const WeylElem& w, WordOrder order = WordOrder::kLexMin) const;
  WeylElem word_product(const ReducedWord& word) const;

  bool bruhat_leq(const WeylElem& v, const WeylElem& w) const;
  bool bruhat_leq(std::size_t v, std::size_t w) const;

  /// The roots β_j = s_{b1}..s_{b_{j-1}}.α_{bj} along the canonical reduced
  /// word of w. They are positive and distinct; their product is 𝔖_w(w).
  std::vector<LinearForm> inversion_roots(const WeylElem& w) const;

 private:
  RootDatum() = default;
  void build();
  std::size_t compute_length(const WeylElem& w) const;
  bool bruhat_recursive(std::size_t v, std::size_t w) const;

  std::string label_;
  Family family_ = Family::Sub;
  int n_ = 0;
  std::vector<LinearForm> positive_;
  std::vector<LinearForm> simple_;
  std::vector<WeylElem> simple_reflections_;
  std::vector<WeylElem> elements_;
  std::vector<int> lengths_;
  std::unordered_map<WeylElem, std::size_t, WeylElemHash> index_;
  std::vector<std::size_t> right_simple_;
  std::vector<std::size_t> left_simple_;
  // Row-major |W| x |W| table: bruhat_[w * |W| + v] is v <= w. Only built
  // for groups small enough to afford it.
  std::vector<bool> bruhat_;
};

/// Parses a group label into (type letter, torus rank).
std::pair<char, int> parse_group_label(std::string_view label);

}  // namespace eqschubert
