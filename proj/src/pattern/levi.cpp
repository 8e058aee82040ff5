#include "eqschubert/pattern/levi.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "eqschubert/error.hpp"

namespace eqschubert {

namespace {

using Cartan = std::vector<std::vector<int>>;

Cartan cartan_matrix(const std::vector<LinearForm>& simple) {
  const std::size_t r = simple.size();
  Cartan c(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c[i][j] = 2 * simple[i].dot(simple[j]) / simple[j].dot(simple[j]);
  return c;
}

std::vector<std::vector<int>> components(const Cartan& c) {
  const int r = static_cast<int>(c.size());
  std::vector<int> comp(r, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < r; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < members.size(); ++head)
      for (int j = 0; j < r; ++j)
        if (comp[j] < 0 && c[members[head]][j] != 0) {
          comp[j] = comp[s];
          members.push_back(j);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

// Finds a bijection p with sub[comp[a]][comp[b]] == standard[p[a]][p[b]].
std::optional<std::vector<int>> match_cartan(const Cartan& sub, const std::vector<int>& comp, const Cartan& standard) {
  const int k = static_cast<int>(comp.size());
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = 0; b < k && ok; ++b) ok = sub[comp[a]][comp[b]] == standard[p[a]][p[b]];
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

LeviFactor identify(const Cartan& sub, const std::vector<int>& comp) {
  const int k = static_cast<int>(comp.size());
  std::vector<char> candidates{'A'};
  if (k >= 2) candidates.insert(candidates.end(), {'C', 'B'});
  if (k >= 4) candidates.push_back('D');
  for (char type : candidates) {
    DatumPtr standard = RootDatum::make(type, type == 'A' ? k + 1 : k);
    if (auto p = match_cartan(sub, comp, cartan_matrix(standard->simple_roots()))) {
      return LeviFactor{type, k, comp, *p, standard};
    }
  }
  throw UnsupportedType("subsystem component of rank " + std::to_string(k) + " is not of classical type");
}

}  // namespace

std::vector<int> parse_cocharacter(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view piece = text.substr(pos, comma - pos);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || end != piece.data() + piece.size())
      throw ParseError("cocharacter entry " + std::to_string(out.size() + 1) + " (\"" + std::string(piece) +
                       "\") is not an integer");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

LeviPtr LeviDatum::from_cocharacter(DatumPtr ambient, std::vector<int> eta) {
  if (static_cast<int>(eta.size()) != ambient->rank())
    throw RankMismatch("cocharacter has " + std::to_string(eta.size()) + " entries but the torus has rank " +
                       std::to_string(ambient->rank()));
  std::shared_ptr<LeviDatum> L(new LeviDatum());
  L->ambient_ = ambient;
  L->eta_ = std::move(eta);
  const int n = ambient->rank();

  std::vector<LinearForm> positive;
  for (const auto& a : ambient->positive_roots()) {
    int pairing = 0;
    for (int k = 0; k < n; ++k) pairing += a[k] * L->eta_[k];
    if (pairing == 0) positive.push_back(a);
  }
  std::vector<LinearForm> simple;
  for (const auto& a : positive) {
    bool decomposable = false;
    for (const auto& b : positive) {
      if (b == a) continue;
      LinearForm rest = a - b;
      if (std::find(positive.begin(), positive.end(), rest) != positive.end()) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  auto last_index = [](const LinearForm& a) {
    int last = -1;
    for (int k = 0; k < a.rank(); ++k)
      if (a[k] != 0) last = k;
    return last;
  };
  std::sort(simple.begin(), simple.end(), [&](const LinearForm& a, const LinearForm& b) {
    int la = last_index(a);
    int lb = last_index(b);
    return la != lb ? la < lb : a < b;
  });

  const Cartan cartan = cartan_matrix(simple);
  L->factor_of_simple_.assign(simple.size(), -1);
  L->standard_of_simple_.assign(simple.size(), -1);
  std::string label;
  for (const auto& comp : components(cartan)) {
    LeviFactor f = identify(cartan, comp);
    for (std::size_t k = 0; k < comp.size(); ++k) {
      L->factor_of_simple_[comp[k]] = static_cast<int>(L->factors_.size());
      L->standard_of_simple_[comp[k]] = f.to_standard[k];
    }
    label += (label.empty() ? "" : "x") + f.label();
    L->factors_.push_back(std::move(f));
  }
  if (label.empty()) label = "1";
  L->sub_ = RootDatum::from_simple_system(label, n, positive, simple);

  const RootDatum& sub = *L->sub_;
  const std::size_t none = static_cast<std::size_t>(-1);
  L->coset_of_.assign(ambient->size(), none);
  for (std::size_t x = 0; x < ambient->size(); ++x) {
    if (L->coset_of_[x] != none) continue;
    Coset c{ambient->element(x), {}};
    for (const auto& w : sub.elements()) {
      WeylElem y = w * c.rep;
      L->coset_of_[ambient->index_of(y)] = L->cosets_.size();
      c.members.push_back(y);
    }
    L->cosets_.push_back(std::move(c));
  }
  const auto& delta = ambient->simple_roots();
  L->standard_ = std::all_of(simple.begin(), simple.end(), [&](const LinearForm& a) {
    return std::find(delta.begin(), delta.end(), a) != delta.end();
  });
  return L;
}

bool LeviDatum::in_subsystem(const LinearForm& alpha) const { return sub_->is_root(alpha); }

std::vector<WeylElem> LeviDatum::min_coset_reps() const {
  std::vector<WeylElem> reps;
  for (const auto& c : cosets_) reps.push_back(c.rep);
  return reps;
}

bool LeviDatum::is_min_rep(const WeylElem& x) const {
  auto idx = ambient_->find(x);
  return idx && cosets_[coset_of_[*idx]].rep == x;
}

void LeviDatum::require_min_rep(const WeylElem& x) const {
  ambient_->require(x);
  if (is_min_rep(x)) return;
  std::string valid;
  for (const auto& c : cosets_) valid += (valid.empty() ? "" : " ") + c.rep.to_string();
  throw RepNotMinimal(x.to_string() + " is not a minimal coset representative; valid representatives: " + valid);
}

std::size_t LeviDatum::coset_index(const WeylElem& x) const { return coset_of_[ambient_->index_of(x)]; }

FlattenResult LeviDatum::flatten(const WeylElem& x) const {
  const Coset& c = cosets_[coset_index(x)];
  WeylElem w = x * c.rep.inverse();
  return FlattenResult{own_windows(w), c.rep, w};
}

std::vector<WeylElem> LeviDatum::own_windows(const WeylElem& w) const {
  std::vector<ReducedWord> words(factors_.size());
  for (int letter : sub_->reduced_word(w)) words[factor_of_simple_[letter]].push_back(standard_of_simple_[letter]);
  std::vector<WeylElem> out;
  for (std::size_t f = 0; f < factors_.size(); ++f) out.push_back(factors_[f].standard->word_product(words[f]));
  return out;
}

WeylElem LeviDatum::from_own_windows(std::span<const WeylElem> parts) const {
  if (parts.size() != factors_.size())
    throw InputError("expected " + std::to_string(factors_.size()) + " factor windows");
  WeylElem w = WeylElem::identity(ambient_->rank());
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const LeviFactor& factor = factors_[f];
    for (int letter : factor.standard->reduced_word(parts[f])) {
      auto it = std::find(factor.to_standard.begin(), factor.to_standard.end(), letter);
      w = w * sub_->simple_reflection(factor.simple[it - factor.to_standard.begin()]);
    }
  }
  return w;
}

}  // namespace eqschubert
