#include "eqschubert/weyl/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "eqschubert/error.hpp"

namespace eqschubert {

namespace {

constexpr std::size_t kBruhatTableLimit = 4096;

int signed_inversions(const WeylElem& w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j) inv += w(i) > w(j);
  return inv;
}

}  // namespace

std::pair<char, int> parse_group_label(std::string_view label) {
  if (label.size() < 2) throw ParseError("group label \"" + std::string(label) + "\" is too short");
  char type = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  std::string_view digits = label.substr(1);
  if (digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw ParseError("group label \"" + std::string(label) + "\" must be a letter followed by a rank");
  int r = std::stoi(std::string(digits));
  switch (type) {
    case 'A':
      return {'A', r + 1};
    case 'B':
    case 'C':
    case 'D':
      return {type, r};
    default:
      throw UnsupportedType("unsupported group type '" + std::string(1, label[0]) + "'");
  }
}

DatumPtr RootDatum::parse(std::string_view label) {
  auto [type, n] = parse_group_label(label);
  return make(type, n);
}

DatumPtr RootDatum::make(char type, int n) {
  if (n < 1 || n > kMaxRank) throw UnsupportedType("rank " + std::to_string(n) + " out of range");
  std::shared_ptr<RootDatum> d(new RootDatum());
  d->n_ = n;
  auto e = [n](int i) { return LinearForm::unit(n, i - 1); };
  switch (type) {
    case 'A':
      d->family_ = Family::A;
      d->label_ = "A" + std::to_string(n - 1);
      break;
    case 'B':
      d->family_ = Family::B;
      d->label_ = "B" + std::to_string(n);
      break;
    case 'C':
      d->family_ = Family::C;
      d->label_ = "C" + std::to_string(n);
      break;
    case 'D':
      if (n < 2) throw UnsupportedType("type D needs rank at least 2");
      d->family_ = Family::D;
      d->label_ = "D" + std::to_string(n);
      break;
    default:
      throw UnsupportedType("unsupported group type '" + std::string(1, type) + "'");
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) d->positive_.push_back(e(j) - e(i));
  if (type != 'A') {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) d->positive_.push_back(e(i) + e(j));
  }
  if (type == 'B') {
    for (int i = 1; i <= n; ++i) d->positive_.push_back(e(i));
  } else if (type == 'C') {
    for (int i = 1; i <= n; ++i) d->positive_.push_back(e(i) * 2);
  }

  if (type == 'B') d->simple_.push_back(e(1));
  if (type == 'C') d->simple_.push_back(e(1) * 2);
  if (type == 'D') d->simple_.push_back(e(1) + e(2));
  for (int i = 1; i < n; ++i) d->simple_.push_back(e(i + 1) - e(i));
  d->build();
  return d;
}

DatumPtr RootDatum::from_simple_system(std::string label, int n, std::vector<LinearForm> positive,
                                       std::vector<LinearForm> simple) {
  std::shared_ptr<RootDatum> d(new RootDatum());
  d->family_ = Family::Sub;
  d->label_ = std::move(label);
  d->n_ = n;
  for (const auto& a : positive)
    if (a.rank() != n || !a.is_positive()) throw InputError("subsystem roots must be positive characters of rank n");
  d->positive_ = std::move(positive);
  d->simple_ = std::move(simple);
  d->build();
  return d;
}

bool RootDatum::is_root(const LinearForm& alpha) const {
  if (alpha.rank() != n_) return false;
  LinearForm pos = alpha.is_positive() ? alpha : -alpha;
  return std::find(positive_.begin(), positive_.end(), pos) != positive_.end();
}

WeylElem RootDatum::reflection(const LinearForm& alpha) const {
  if (!is_root(alpha)) throw NotARoot(alpha.to_string() + " is not a root of " + label_);
  const int norm = alpha.dot(alpha);
  std::array<int, kMaxRank> window{};
  for (int k = 0; k < n_; ++k) {
    // s(e_k) = e_k - (2 (e_k, α) / (α, α)) α must again be ±e_m.
    const int num = 2 * alpha[k];
    if (num % norm != 0) throw NotARoot(alpha.to_string() + " is not crystallographic");
    LinearForm image = LinearForm::unit(n_, k) - alpha * (num / norm);
    int slot = -1;
    for (int m = 0; m < n_; ++m) {
      if (image[m] == 0) continue;
      if (slot >= 0 || (image[m] != 1 && image[m] != -1))
        throw NotARoot(alpha.to_string() + " does not reflect into a signed permutation");
      slot = m;
    }
    if (slot < 0) throw NotARoot(alpha.to_string() + " does not reflect into a signed permutation");
    window[k] = image[slot] * (slot + 1);
  }
  return WeylElem(std::span<const int>(window.data(), static_cast<std::size_t>(n_)));
}

int RootDatum::inversion_count(const WeylElem& w) const {
  int k = 0;
  for (const auto& a : positive_) k += !w.act(a).is_positive();
  return k;
}

std::size_t RootDatum::compute_length(const WeylElem& w) const {
  int inv = signed_inversions(w);
  int extra = 0;
  switch (family_) {
    case Family::A:
      return static_cast<std::size_t>(inv);
    case Family::B:
    case Family::C:
      for (int i = 1; i <= w.size(); ++i)
        if (w(i) < 0) extra += -w(i);
      return static_cast<std::size_t>(inv + extra);
    case Family::D:
      for (int i = 1; i <= w.size(); ++i)
        if (w(i) < 0) extra += -w(i) - 1;
      return static_cast<std::size_t>(inv + extra);
    case Family::Sub:
      break;
  }
  return static_cast<std::size_t>(inversion_count(w));
}

void RootDatum::build() {
  for (const auto& a : simple_) simple_reflections_.push_back(reflection(a));

  std::unordered_map<WeylElem, std::size_t, WeylElemHash> seen;
  std::vector<WeylElem> found{WeylElem::identity(n_)};
  seen.emplace(found[0], 0);
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& s : simple_reflections_) {
      WeylElem next = found[head] * s;
      if (seen.emplace(next, found.size()).second) found.push_back(next);
    }
  }

  std::vector<std::pair<std::size_t, WeylElem>> keyed;
  keyed.reserve(found.size());
  for (const auto& w : found) keyed.emplace_back(compute_length(w), w);
  std::sort(keyed.begin(), keyed.end());
  for (auto& [len, w] : keyed) {
    index_.emplace(w, elements_.size());
    elements_.push_back(w);
    lengths_.push_back(static_cast<int>(len));
  }

  const std::size_t r = simple_.size();
  right_simple_.resize(elements_.size() * r);
  left_simple_.resize(elements_.size() * r);
  for (std::size_t idx = 0; idx < elements_.size(); ++idx) {
    for (std::size_t i = 0; i < r; ++i) {
      right_simple_[idx * r + i] = index_.at(elements_[idx] * simple_reflections_[i]);
      left_simple_[idx * r + i] = index_.at(simple_reflections_[i] * elements_[idx]);
    }
  }

  const std::size_t size = elements_.size();
  if (size <= kBruhatTableLimit) {
    bruhat_.assign(size * size, false);
    bruhat_[0] = true;
    for (std::size_t w = 1; w < size; ++w) {
      int i = 0;
      while (!is_right_descent(w, i)) ++i;
      std::size_t ws = right_mult_simple(w, i);
      for (std::size_t v = 0; v < size; ++v) {
        if (lengths_[v] > lengths_[w]) break;
        std::size_t vs = right_mult_simple(v, i);
        bruhat_[w * size + v] = lengths_[vs] < lengths_[v] ? bruhat_[ws * size + vs] : bruhat_[ws * size + v];
      }
    }
  }
}

std::optional<std::size_t> RootDatum::find(const WeylElem& w) const {
  if (w.size() != n_) return std::nullopt;
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootDatum::index_of(const WeylElem& w) const {
  auto idx = find(w);
  if (!idx) throw InvalidElement(w.to_string() + " is not an element of " + label_);
  return *idx;
}

void RootDatum::require(const WeylElem& w) const { (void)index_of(w); }

int RootDatum::length(const WeylElem& w) const { return lengths_[index_of(w)]; }

WeylElem RootDatum::multiply(const WeylElem& u, const WeylElem& v) const {
  require(u);
  require(v);
  return u * v;
}

WeylElem RootDatum::inverse(const WeylElem& w) const {
  require(w);
  return w.inverse();
}

ReducedWord RootDatum::reduced_word(const WeylElem& w, WordOrder order) const {
  std::size_t idx = index_of(w);
  ReducedWord word;
  const int r = num_simple();
  while (lengths_[idx] > 0) {
    int pick = -1;
    for (int k = 0; k < r; ++k) {
      int i = order == WordOrder::kLexMin ? k : r - 1 - k;
      if (is_left_descent(idx, i)) {
        pick = i;
        break;
      }
    }
    word.push_back(pick);
    idx = left_mult_simple(idx, pick);
  }
  return word;
}

WeylElem RootDatum::word_product(const ReducedWord& word) const {
  WeylElem w = WeylElem::identity(n_);
  for (int i : word) w = w * simple_reflections_.at(i);
  return w;
}

bool RootDatum::bruhat_recursive(std::size_t v, std::size_t w) const {
  for (;;) {
    if (lengths_[v] > lengths_[w]) return false;
    if (lengths_[w] == 0) return v == w;
    int i = 0;
    while (!is_right_descent(w, i)) ++i;
    std::size_t vs = right_mult_simple(v, i);
    if (lengths_[vs] < lengths_[v]) v = vs;
    w = right_mult_simple(w, i);
  }
}

bool RootDatum::bruhat_leq(std::size_t v, std::size_t w) const {
  if (!bruhat_.empty()) return bruhat_[w * elements_.size() + v];
  return bruhat_recursive(v, w);
}

bool RootDatum::bruhat_leq(const WeylElem& v, const WeylElem& w) const { return bruhat_leq(index_of(v), index_of(w)); }

std::vector<LinearForm> RootDatum::inversion_roots(const WeylElem& w) const {
  std::vector<LinearForm> roots;
  WeylElem prefix = WeylElem::identity(n_);
  for (int b : reduced_word(w)) {
    roots.push_back(prefix.act(simple_[b]));
    prefix = prefix * simple_reflections_[b];
  }
  return roots;
}

}  // namespace eqschubert
