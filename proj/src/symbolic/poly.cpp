#include "eqschubert/symbolic/poly.hpp"

#include <map>
#include <stdexcept>

namespace eqschubert {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

LinearForm::LinearForm(std::span<const int> coeffs) : rank_(static_cast<int>(coeffs.size())) {
  if (rank_ > kMaxVars) throw RankMismatch("linear form rank out of range");
  std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

LinearForm LinearForm::zero(int rank) {
  if (rank < 0 || rank > kMaxVars) throw RankMismatch("linear form rank out of range");
  LinearForm f;
  f.rank_ = rank;
  return f;
}

LinearForm LinearForm::unit(int rank, int i) {
  LinearForm f = zero(rank);
  if (i < 0 || i >= rank) throw RankMismatch("unit index out of range");
  f.c_[i] = 1;
  return f;
}

LinearForm LinearForm::alpha(int rank, int i, int j) {
  return unit(rank, j - 1) - unit(rank, i - 1);
}

bool LinearForm::is_zero() const {
  for (int i = 0; i < rank_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool LinearForm::is_positive() const {
  for (int i = rank_ - 1; i >= 0; --i)
    if (c_[i] != 0) return c_[i] > 0;
  return false;
}

int LinearForm::dot(const LinearForm& o) const {
  if (rank_ != o.rank_) throw RankMismatch("linear form rank mismatch");
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += c_[i] * o.c_[i];
  return s;
}

LinearForm LinearForm::operator-() const {
  LinearForm r = *this;
  for (int i = 0; i < rank_; ++i) r.c_[i] = -r.c_[i];
  return r;
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
  if (rank_ != o.rank_) throw RankMismatch("linear form rank mismatch");
  LinearForm r = *this;
  for (int i = 0; i < rank_; ++i) r.c_[i] += o.c_[i];
  return r;
}

LinearForm LinearForm::operator-(const LinearForm& o) const { return *this + (-o); }

LinearForm LinearForm::operator*(int k) const {
  LinearForm r = *this;
  for (int i = 0; i < rank_; ++i) r.c_[i] *= k;
  return r;
}

PolyS LinearForm::to_poly() const {
  std::vector<PolyS::Term> terms;
  for (int i = 0; i < rank_; ++i) {
    if (c_[i] == 0) continue;
    Monomial m{};
    m[i] = 1;
    terms.emplace_back(m, Rational(c_[i]));
  }
  return PolyS::from_terms(rank_, std::move(terms));
}

Monomial LinearForm::as_exponent() const {
  Monomial m{};
  for (int i = 0; i < rank_; ++i) m[i] = static_cast<Exponent>(c_[i]);
  return m;
}

LaurentR LinearForm::to_character() const { return LaurentR::monomial(rank_, as_exponent()); }

LinearForm LinearForm::from_exponent(int rank, const Monomial& m) {
  LinearForm f = zero(rank);
  for (int i = 0; i < rank; ++i) f.c_[i] = m[i];
  return f;
}

// Write p = sum_k p_k t_i^k and alpha = a t_i + r. Matching powers of t_i in
// p = q*alpha gives q_{k-1} = (p_k - r q_k)/a from the top down, and the
// constant slice must satisfy p_0 = r q_0.
std::optional<PolyS> try_div_linear(const PolyS& p, const LinearForm& alpha) {
  if (p.rank() != alpha.rank()) throw RankMismatch("divisor rank mismatch");
  if (alpha.is_zero()) throw std::invalid_argument("division by the zero linear form");
  const int n = p.rank();
  if (p.is_zero()) return PolyS(n);
  int pivot = 0;
  while (alpha[pivot] == 0) ++pivot;
  const Rational a(alpha[pivot]);
  LinearForm rest = alpha;
  {
    std::vector<int> c(alpha.coeffs().begin(), alpha.coeffs().end());
    c[pivot] = 0;
    rest = LinearForm(c);
  }
  const PolyS r = rest.to_poly();

  int top = 0;
  for (const auto& t : p.terms()) top = std::max<int>(top, t.first[pivot]);
  std::vector<std::vector<PolyS::Term>> slice_terms(top + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial stripped = m;
    stripped[pivot] = 0;
    slice_terms[m[pivot]].emplace_back(stripped, c);
  }
  std::vector<PolyS> slices;
  slices.reserve(top + 1);
  for (auto& ts : slice_terms) slices.push_back(PolyS::from_terms(n, std::move(ts)));

  std::vector<PolyS> q(top + 1, PolyS(n));  // q[k] multiplies t_i^k; q[top] = 0
  for (int k = top; k >= 1; --k) {
    PolyS num = slices[k] - r * q[k];
    num *= Rational(1) / a;
    q[k - 1] = std::move(num);
  }
  if (slices[0] != r * q[0]) return std::nullopt;

  PolyS out(n);
  for (int k = 0; k < top; ++k) {
    if (q[k].is_zero()) continue;
    Monomial shift{};
    shift[pivot] = static_cast<Exponent>(k);
    out += q[k] * PolyS::monomial(n, shift);
  }
  return out;
}

PolyS exact_div_linear(const PolyS& p, const LinearForm& alpha) {
  auto q = try_div_linear(p, alpha);
  if (!q) throw NotDivisible(p.to_string() + " is not divisible by " + alpha.to_string());
  return *std::move(q);
}

// Terms of psi split into chains base + k*alpha. On each chain psi is a
// univariate Laurent polynomial in u = x^alpha, divisible by 1 - u exactly
// when its coefficients sum to zero; the quotient has partial-sum
// coefficients.
std::optional<LaurentR> try_div_one_minus(const LaurentR& psi, const LinearForm& alpha) {
  if (psi.rank() != alpha.rank()) throw RankMismatch("divisor rank mismatch");
  if (alpha.is_zero()) throw std::invalid_argument("division by 1 - x^0");
  const int n = psi.rank();
  int pivot = 0;
  while (alpha[pivot] == 0) ++pivot;
  const int a = alpha[pivot] > 0 ? alpha[pivot] : -alpha[pivot];
  const int sign = alpha[pivot] > 0 ? 1 : -1;
  const Monomial step = alpha.as_exponent();

  std::map<Monomial, std::map<int, Integer>> chains;
  for (const auto& [m, c] : psi.terms()) {
    int k = floor_div(m[pivot], a) * sign;
    Monomial base = m;
    for (int i = 0; i < n; ++i) base[i] = static_cast<Exponent>(m[i] - k * step[i]);
    chains[base][k] += c;
  }

  std::vector<LaurentR::Term> out;
  for (const auto& [base, coeffs] : chains) {
    Integer running = 0;
    int lo = coeffs.begin()->first;
    int hi = coeffs.rbegin()->first;
    for (int k = lo; k < hi; ++k) {
      auto it = coeffs.find(k);
      if (it != coeffs.end()) running += it->second;
      if (running != 0) {
        Monomial m = base;
        for (int i = 0; i < n; ++i) m[i] = static_cast<Exponent>(base[i] + k * step[i]);
        out.emplace_back(m, running);
      }
    }
    running += coeffs.rbegin()->second;
    if (running != 0) return std::nullopt;
  }
  return LaurentR::from_terms(n, std::move(out));
}

LaurentR exact_div_one_minus(const LaurentR& psi, const LinearForm& alpha) {
  auto q = try_div_one_minus(psi, alpha);
  if (!q) throw NotDivisible(psi.to_string() + " is not divisible by 1 - x^(" + alpha.to_string() + ")");
  return *std::move(q);
}

LaurentR one_minus_character(const LinearForm& alpha) {
  return LaurentR::one(alpha.rank()) - alpha.to_character();
}

PolyS truncate_to_cohomology(const LaurentR& psi, int degree) {
  if (degree < 0) throw std::invalid_argument("negative truncation degree");
  const int n = psi.rank();
  std::vector<Rational> inv_factorial(degree + 1);
  {
    Integer f = 1;
    for (int k = 0; k <= degree; ++k) {
      if (k > 0) f *= k;
      inv_factorial[k] = Rational(Integer(1), f);
    }
  }
  PolyS out(n);
  for (const auto& [m, c] : psi.terms()) {
    PolyS lambda = LinearForm::from_exponent(n, m).to_poly();
    PolyS power = PolyS::one(n);
    PolyS series = PolyS::one(n);
    for (int k = 1; k <= degree; ++k) {
      power *= lambda;
      series += power * inv_factorial[k];
    }
    out += series * Rational(c);
  }
  return out;
}

namespace {

void check_window(std::span<const int> window, int offset, int rank) {
  if (offset < 0 || offset + static_cast<int>(window.size()) > rank)
    throw RankMismatch("signed permutation does not fit the variable block");
}

}  // namespace

PolyS signed_permute(const PolyS& p, std::span<const int> window, int offset) {
  check_window(window, offset, p.rank());
  std::vector<PolyS::Term> out;
  out.reserve(p.size());
  const int len = static_cast<int>(window.size());
  for (const auto& [m, c] : p.terms()) {
    Monomial r = m;
    bool negate = false;
    for (int i = 0; i < len; ++i) r[offset + i] = 0;
    for (int i = 0; i < len; ++i) {
      int v = window[i];
      int target = offset + (v > 0 ? v : -v) - 1;
      Exponent e = m[offset + i];
      r[target] = e;
      if (v < 0 && (e % 2) != 0) negate = !negate;
    }
    out.emplace_back(r, negate ? Rational(-c) : c);
  }
  return PolyS::from_terms(p.rank(), std::move(out));
}

LaurentR signed_permute(const LaurentR& p, std::span<const int> window, int offset) {
  check_window(window, offset, p.rank());
  std::vector<LaurentR::Term> out;
  out.reserve(p.size());
  const int len = static_cast<int>(window.size());
  for (const auto& [m, c] : p.terms()) {
    Monomial r = m;
    for (int i = 0; i < len; ++i) r[offset + i] = 0;
    for (int i = 0; i < len; ++i) {
      int v = window[i];
      int target = offset + (v > 0 ? v : -v) - 1;
      r[target] = static_cast<Exponent>(v > 0 ? m[offset + i] : -m[offset + i]);
    }
    out.emplace_back(r, c);
  }
  return LaurentR::from_terms(p.rank(), std::move(out));
}

PolyS substitute(const PolyS& p, std::span<const PolyS> images) {
  if (static_cast<int>(images.size()) != p.rank()) throw RankMismatch("substitution needs one image per variable");
  if (images.empty()) return p;
  const int target_rank = images[0].rank();
  std::vector<std::vector<PolyS>> powers(images.size());
  PolyS out(target_rank);
  for (const auto& [m, c] : p.terms()) {
    PolyS term = PolyS::constant(target_rank, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      int e = m[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(PolyS::one(target_rank));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
      term *= cache[e];
    }
    out += term;
  }
  return out;
}

LaurentR substitute_characters(const LaurentR& p, std::span<const LinearForm> images) {
  if (static_cast<int>(images.size()) != p.rank()) throw RankMismatch("substitution needs one image per variable");
  if (images.empty()) return p;
  const int target_rank = images[0].rank();
  std::vector<LaurentR::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    LinearForm acc = LinearForm::zero(target_rank);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (m[i] != 0) acc = acc + images[i] * m[i];
    out.emplace_back(acc.as_exponent(), c);
  }
  return LaurentR::from_terms(target_rank, std::move(out));
}

}  // namespace eqschubert
