#include "eqschubert/gkm/positivity.hpp"

#include "eqschubert/error.hpp"

namespace eqschubert {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Row-reduces a copy of `rows`; returns its rank.
int matrix_rank(Matrix rows) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (int k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<Rational> to_row(const LinearForm& a) {
  std::vector<Rational> row;
  for (int k = 0; k < a.rank(); ++k) row.emplace_back(a[k]);
  return row;
}

bool nonnegative_integral(const PolyS& p) {
  for (const auto& [m, c] : p.terms())
    if (c < 0 || c.get_den() != 1) return false;
  return true;
}

}  // namespace

RootCoordinates::RootCoordinates(const std::vector<LinearForm>& leading) {
  if (leading.empty()) throw InputError("no characters to build coordinates from");
  n_ = leading[0].rank();
  r_ = static_cast<int>(leading.size());
  Matrix basis;
  for (const auto& a : leading) basis.push_back(to_row(a));
  if (matrix_rank(basis) != r_) throw InputError("characters are linearly dependent");
  for (int k = 0; k < n_ && static_cast<int>(basis.size()) < n_; ++k) {
    basis.push_back(to_row(LinearForm::unit(n_, k)));
    if (matrix_rank(basis) < static_cast<int>(basis.size())) basis.pop_back();
  }
  // Invert B (rows = basis characters); λ = u B gives u = λ B^{-1}.
  Matrix aug(n_, std::vector<Rational>(2 * n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) aug[i][j] = basis[i][j];
    aug[i][n_ + i] = 1;
  }
  for (int c = 0; c < n_; ++c) {
    int pivot = c;
    while (aug[pivot][c] == 0) ++pivot;
    std::swap(aug[c], aug[pivot]);
    Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (int r = 0; r < n_; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      Rational f = aug[r][c];
      for (int k = 0; k < 2 * n_; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  inverse_.assign(n_, std::vector<Rational>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) inverse_[i][j] = aug[i][n_ + j];
}

std::vector<Rational> RootCoordinates::coordinates(const LinearForm& lambda) const {
  std::vector<Rational> u(n_);
  for (int k = 0; k < n_; ++k) {
    if (lambda[k] == 0) continue;
    for (int j = 0; j < n_; ++j) u[j] += lambda[k] * inverse_[k][j];
  }
  return u;
}

PolyS RootCoordinates::rewrite(const PolyS& p) const {
  std::vector<PolyS> images;
  for (int k = 0; k < n_; ++k) {
    PolyS img(n_);
    for (int j = 0; j < n_; ++j)
      if (inverse_[k][j] != 0) img += PolyS::variable(n_, j) * PolyS::constant(n_, inverse_[k][j]);
    images.push_back(std::move(img));
  }
  return substitute(p, images);
}

std::optional<PolyS> in_simple_roots(const PolyS& p, const RootDatum& d) {
  RootCoordinates coords(d.simple_roots());
  PolyS q = coords.rewrite(p);
  for (const auto& [m, c] : q.terms())
    for (int j = coords.leading(); j < coords.rank(); ++j)
      if (m[j] != 0) return std::nullopt;
  return q;
}

bool is_graham_positive(const PolyS& p, const RootDatum& d) {
  auto q = in_simple_roots(p, d);
  return q && nonnegative_integral(*q);
}

std::optional<PolyS> in_agm_variables(const LaurentR& psi, const RootDatum& d, bool negative) {
  std::vector<LinearForm> gens;
  for (const auto& a : d.simple_roots()) gens.push_back(negative ? -a : a);
  RootCoordinates coords(gens);
  const int r = coords.leading();
  PolyS out(r);
  for (const auto& [m, c] : psi.terms()) {
    std::vector<Rational> u = coords.coordinates(LinearForm::from_exponent(d.rank(), m));
    PolyS term = PolyS::constant(r, Rational(c));
    for (int j = 0; j < coords.rank(); ++j) {
      if (j >= r) {
        if (u[j] != 0) return std::nullopt;
        continue;
      }
      if (u[j].get_den() != 1 || u[j] < 0) return std::nullopt;
      const int e = static_cast<int>(u[j].get_num().get_si());
      if (e > 0) term *= (PolyS::variable(r, j) + PolyS::one(r)).pow(e);
    }
    out += term;
  }
  return out;
}

bool is_agm_positive(const LaurentR& psi, int excess, const RootDatum& d, bool negative) {
  auto q = in_agm_variables(psi, d, negative);
  if (!q) return false;
  if (excess % 2 != 0) *q = -*q;
  return nonnegative_integral(*q);
}

}  // namespace eqschubert
