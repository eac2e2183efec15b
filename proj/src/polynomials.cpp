#include "schurp/polynomials.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <unordered_map>

#include "schurp/error.hpp"

namespace schurp {

namespace {

Rational rational_pow(Rational base, unsigned long exp) {
  Rational out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
  return out;
}

// ---------------------------------------------------------------------------
// Sparse polynomial in up to 8 variables. Exponents are packed one byte per
// variable into a 64-bit key; every degree reached here stays far below 255.
// ---------------------------------------------------------------------------

constexpr int kMaxVars = 8;
using Key = std::uint64_t;

int key_get(Key k, int var) { return static_cast<int>((k >> (8 * var)) & 0xff); }
Key key_bump(Key k, int var, int amount) { return k + (Key(amount) << (8 * var)); }

using TermTable = std::unordered_map<Key, Rational>;

void accumulate(TermTable& table, Key key, const Rational& coeff) {
  auto [it, fresh] = table.emplace(key, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) table.erase(it);
  }
}

struct VarPoly {
  int n_vars = 0;
  TermTable terms;
};

// Multiply by (x_i + sign * x_j).
VarPoly mul_binomial(const VarPoly& p, int i, int j, int sign) {
  VarPoly out{p.n_vars, {}};
  out.terms.reserve(p.terms.size() * 2);
  for (const auto& [key, coeff] : p.terms) {
    accumulate(out.terms, key_bump(key, i, 1), coeff);
    accumulate(out.terms, key_bump(key, j, 1), sign > 0 ? coeff : Rational(-coeff));
  }
  return out;
}

// Multiply by the power sum x_1^m + ... + x_n^m.
VarPoly mul_power_sum(const VarPoly& p, int m) {
  VarPoly out{p.n_vars, {}};
  out.terms.reserve(p.terms.size() * p.n_vars);
  for (const auto& [key, coeff] : p.terms)
    for (int i = 0; i < p.n_vars; ++i) accumulate(out.terms, key_bump(key, i, m), coeff);
  return out;
}

// Collapses Alt(u) into alternant coordinates: each monomial maps to the
// strictly decreasing rearrangement of its exponents with the sign of the
// sorting permutation; monomials with a repeated exponent cancel out.
TermTable alternant_collapse(const VarPoly& u) {
  TermTable alt;
  const int n = u.n_vars;
  for (const auto& [key, coeff] : u.terms) {
    int e[kMaxVars];
    for (int i = 0; i < n; ++i) e[i] = key_get(key, i);
    int inversions = 0;
    for (int a = 1; a < n; ++a) {  // insertion sort, descending
      int v = e[a];
      int b = a;
      while (b > 0 && e[b - 1] < v) {
        e[b] = e[b - 1];
        --b;
        ++inversions;
      }
      e[b] = v;
    }
    bool repeated = false;
    for (int a = 1; a < n && !repeated; ++a) repeated = e[a] == e[a - 1];
    if (repeated) continue;
    Key sorted = 0;
    for (int i = 0; i < n; ++i) sorted = key_bump(sorted, i, e[i]);
    accumulate(alt, sorted, inversions % 2 == 0 ? coeff : Rational(-coeff));
  }
  return alt;
}

// Exact division by (x_i - x_j) via synthetic division in x_i.
// The remainder must vanish; a nonzero remainder is an internal bug.
VarPoly divide_linear(const VarPoly& p, int i, int j) {
  int top = 0;
  for (const auto& [key, coeff] : p.terms) top = std::max(top, key_get(key, i));
  // bucket by the exponent of x_i, with that exponent cleared from the key
  std::vector<TermTable> buckets(static_cast<std::size_t>(top) + 1);
  for (const auto& [key, coeff] : p.terms) {
    int e = key_get(key, i);
    buckets[static_cast<std::size_t>(e)].emplace(key_bump(key, i, -e), coeff);
  }
  VarPoly out{p.n_vars, {}};
  TermTable q;  // q_e, descending from e = top-1
  for (int e = top - 1; e >= 0; --e) {
    TermTable next = std::move(buckets[static_cast<std::size_t>(e + 1)]);
    for (const auto& [key, coeff] : q) accumulate(next, key_bump(key, j, 1), coeff);
    q = std::move(next);
    for (const auto& [key, coeff] : q) accumulate(out.terms, key_bump(key, i, e), coeff);
  }
  TermTable remainder = std::move(buckets[0]);
  for (const auto& [key, coeff] : q) accumulate(remainder, key_bump(key, j, 1), coeff);
  if (!remainder.empty())
    fail(ErrorCode::NonDivisible, "antisymmetrized numerator not divisible by Vandermonde");
  return out;
}

template <typename Visitor>
void for_each_permutation(int n, Visitor&& visit) {
  int idx[kMaxVars];
  std::iota(idx, idx + n, 0);
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (idx[a] > idx[b]) ++inversions;
    visit(idx, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(idx, idx + n));
}

GradedPolynomial to_graded(const VarPoly& p) {
  GradedPolynomial out;
  for (const auto& [key, coeff] : p.terms) {
    std::vector<int> exps(static_cast<std::size_t>(p.n_vars));
    for (int i = 0; i < p.n_vars; ++i) exps[static_cast<std::size_t>(i)] = key_get(key, i);
    // the polynomial is symmetric; read each orbit once, at its sorted key
    if (!std::is_sorted(exps.begin(), exps.end(), std::greater<int>())) continue;
    Partition kappa = Partition::normalized(exps);
    int degree = static_cast<int>(kappa.weight());
    auto [it, fresh] = out.try_emplace(degree, MonomialPolynomial(degree, p.n_vars));
    it->second.add_term(kappa, coeff);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// Ordered injections of positions 0..l-1 into coordinate indices, with the
// product of the assigned factor values and the two cross-factor families.
// `factor_value(position, coordinate)` supplies x^mu or (x | mu) terms.
template <typename FactorFn>
Rational injection_sum(int l, const EvaluationPoint& x, FactorFn&& factor_value) {
  const int n = static_cast<int>(x.size());
  if (l > n) return 0;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(l));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  Rational total = 0;

  auto rec = [&](auto&& self, const Rational& partial) -> void {
    int pos = static_cast<int>(chosen.size());
    if (pos == l) {
      Rational term = partial;
      for (int a : chosen)
        for (int k = 0; k < n; ++k) {
          if (used[static_cast<std::size_t>(k)]) continue;
          term *= x[static_cast<std::size_t>(a)] + x[static_cast<std::size_t>(k)];
          term /= x[static_cast<std::size_t>(a)] - x[static_cast<std::size_t>(k)];
        }
      total += term;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      Rational next = partial * factor_value(pos, x[static_cast<std::size_t>(v)]);
      if (next == 0) continue;
      for (int b : chosen) {
        next *= x[static_cast<std::size_t>(b)] + x[static_cast<std::size_t>(v)];
        next /= x[static_cast<std::size_t>(b)] - x[static_cast<std::size_t>(v)];
      }
      used[static_cast<std::size_t>(v)] = true;
      chosen.push_back(v);
      self(self, next);
      chosen.pop_back();
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec, Rational(1));
  return total;
}

void require_distinct(const EvaluationPoint& point) {
  for (std::size_t i = 0; i < point.size(); ++i)
    for (std::size_t j = i + 1; j < point.size(); ++j)
      if (point[i] == point[j])
        fail(ErrorCode::CoincidentCoordinates, "coordinates must be pairwise distinct");
}

EvaluationPoint partition_point(const StrictPartition& lambda) {
  EvaluationPoint point;
  point.reserve(static_cast<std::size_t>(lambda.length()));
  for (int part : lambda.parts()) point.emplace_back(part);
  return point;
}

Rational factorial(int n) {
  Rational out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// MonomialPolynomial
// ---------------------------------------------------------------------------

MonomialPolynomial::MonomialPolynomial(int degree, int n_vars)
    : degree_(degree), n_vars_(n_vars) {
  if (degree < 0 || n_vars < 0)
    fail(ErrorCode::InvalidArgument, "polynomial degree and variable count must be non-negative");
}

void MonomialPolynomial::add_term(const Partition& key, const Rational& coeff) {
  if (key.weight() != degree_)
    fail(ErrorCode::InvalidArgument, "monomial weight does not match polynomial degree");
  if (key.length() > n_vars_)
    fail(ErrorCode::InvalidArgument, "monomial has more parts than variables");
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(key, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void MonomialPolynomial::add_scaled(const MonomialPolynomial& other, const Rational& factor) {
  if (other.degree_ != degree_)
    fail(ErrorCode::InvalidArgument, "cannot combine polynomials of different degree");
  for (const auto& [key, coeff] : other.terms_) add_term(key, coeff * factor);
}

Rational MonomialPolynomial::coefficient(const Partition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

MonomialPolynomial MonomialPolynomial::scaled(const Rational& factor) const {
  MonomialPolynomial out(degree_, n_vars_);
  if (factor != 0)
    for (const auto& [key, coeff] : terms_) out.add_term(key, coeff * factor);
  return out;
}

Rational MonomialPolynomial::evaluate(const EvaluationPoint& point) const {
  if (static_cast<int>(point.size()) != n_vars_)
    fail(ErrorCode::SizeMismatch, "evaluation point size must equal the variable count");
  // power table: powers[i][d] = point[i]^d
  std::vector<std::vector<Rational>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    powers[i].resize(static_cast<std::size_t>(degree_) + 1);
    powers[i][0] = 1;
    for (int d = 1; d <= degree_; ++d) powers[i][static_cast<std::size_t>(d)] =
        powers[i][static_cast<std::size_t>(d - 1)] * point[i];
  }
  Rational total = 0;
  for (const auto& [kappa, coeff] : terms_) {
    std::vector<int> exps = kappa.parts();
    exps.resize(point.size(), 0);
    std::sort(exps.begin(), exps.end());
    Rational msum = 0;
    do {  // distinct rearrangements of the exponent multiset
      Rational prod = 1;
      for (std::size_t i = 0; i < point.size(); ++i)
        if (exps[i] != 0) prod *= powers[i][static_cast<std::size_t>(exps[i])];
      msum += prod;
    } while (std::next_permutation(exps.begin(), exps.end()));
    total += coeff * msum;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Scalar evaluations
// ---------------------------------------------------------------------------

Rational falling_factorial(const Rational& x, int k) {
  if (k < 0) fail(ErrorCode::InvalidArgument, "falling factorial order must be non-negative");
  Rational out = 1;
  for (int i = 1; i <= k; ++i) out *= x - (i - 1);
  return out;
}

Rational power_sum_eval(const Partition& rho, const EvaluationPoint& point) {
  Rational out = 1;
  for (int part : rho.parts()) {
    Rational s = 0;
    for (const auto& c : point) s += rational_pow(c, static_cast<unsigned long>(part));
    out *= s;
  }
  return out;
}

Rational eval_P(const StrictPartition& mu, const EvaluationPoint& point) {
  if (mu.length() > static_cast<int>(point.size())) return 0;
  require_distinct(point);
  return injection_sum(mu.length(), point, [&](int pos, const Rational& x) {
    return rational_pow(x, static_cast<unsigned long>(mu.part(pos + 1)));
  });
}

Rational eval_Pstar_full_sum(const StrictPartition& mu, const StrictPartition& lambda) {
  EvaluationPoint point = partition_point(lambda);
  if (mu.length() > static_cast<int>(point.size())) return 0;
  return injection_sum(mu.length(), point, [&](int pos, const Rational& x) {
    return falling_factorial(x, mu.part(pos + 1));
  });
}

Rational eval_Pstar(const StrictPartition& mu, const StrictPartition& lambda) {
  if (!contains(mu, lambda)) return 0;  // vanishing property
  return eval_Pstar_full_sum(mu, lambda);
}

Rational capital_h(const StrictPartition& mu) {
  Rational out = 1;
  for (int part : mu.parts()) out *= factorial(part);
  const auto& parts = mu.parts();
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      out *= parts[i] + parts[j];
      out /= parts[i] - parts[j];
    }
  return out;
}

// ---------------------------------------------------------------------------
// Symmetrization and expansions
// ---------------------------------------------------------------------------

GradedPolynomial symmetrize_rtilde(const ExponentMap& r, int l, int n) {
  if (l < 0 || n < 1 || l > n)
    fail(ErrorCode::InvalidArgument, "symmetrization requires 0 <= l <= n and n >= 1");
  if (n > 7)
    fail(ErrorCode::DegreeTooLarge, "symbolic expansion supports at most 7 variables");

  VarPoly u{n, {}};
  for (const auto& [exps, coeff] : r) {
    if (static_cast<int>(exps.size()) > l)
      fail(ErrorCode::InvalidArgument, "exponent vector longer than l");
    Key key = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
      key = key_bump(key, static_cast<int>(i), exps[i]);
    }
    if (coeff != 0) accumulate(u.terms, key, coeff);
  }
  if (u.terms.empty()) return {};

  // u_n = r * prod_{i<=l, i<j<=n} (x_i+x_j) * prod_{l<i<j<=n} (x_i-x_j)
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < n; ++j) u = mul_binomial(u, i, j, +1);
  for (int i = l; i < n; ++i)
    for (int j = i + 1; j < n; ++j) u = mul_binomial(u, i, j, -1);

  TermTable alt = alternant_collapse(u);

  // re-expand the signed alternants into the full antisymmetrization of u_n
  VarPoly numerator{n, {}};
  for (const auto& [key, coeff] : alt) {
    int exps[kMaxVars];
    for (int i = 0; i < n; ++i) exps[i] = key_get(key, i);
    for_each_permutation(n, [&](const int* idx, int sign) {
      Key permuted = 0;
      for (int i = 0; i < n; ++i) permuted = key_bump(permuted, i, exps[idx[i]]);
      accumulate(numerator.terms, permuted, sign > 0 ? coeff : Rational(-coeff));
    });
  }

  // exact division by the Vandermonde, one linear factor at a time
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) numerator = divide_linear(numerator, i, j);

  return to_graded(numerator);
}

GradedPolynomial expand_in_monomials(PolynomialFamily family, const Partition& index, int n) {
  if (n < 1 || n > 7)
    fail(ErrorCode::DegreeTooLarge, "expansion supports 1 to 7 variables");

  if (family == PolynomialFamily::PowerSum) {
    if (!is_odd_partition(index))
      fail(ErrorCode::UnsupportedIndex, "power-sum expansion requires all parts odd");
    VarPoly p{n, {}};
    p.terms.emplace(Key{0}, Rational(1));
    for (int part : index.parts()) p = mul_power_sum(p, part);
    return to_graded(p);
  }

  if (!index.is_strict())
    fail(ErrorCode::UnsupportedIndex, "P/P* expansion requires a strict index");
  const int l = index.length();
  if (l > n) return {};  // P_{mu|n} = 0 beyond n parts

  ExponentMap r;
  if (family == PolynomialFamily::P) {
    std::vector<int> exps(index.parts());
    r.emplace(std::move(exps), Rational(1) / factorial(n - l));
  } else {
    // r = prod_i (x_i | mu_i) / (n-l)!, expanded variable by variable
    r.emplace(std::vector<int>{}, Rational(1) / factorial(n - l));
    for (int i = 0; i < l; ++i) {
      // univariate falling factorial (x | mu_{i+1}) coefficients
      std::vector<Rational> coeffs{1};
      for (int t = 0; t < index.part(i + 1); ++t) {
        coeffs.insert(coeffs.begin(), 0);
        for (std::size_t d = 0; d + 1 < coeffs.size(); ++d)
          coeffs[d] -= t * coeffs[d + 1];
      }
      ExponentMap next;
      for (const auto& [exps, coeff] : r)
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
          if (coeffs[d] == 0) continue;
          std::vector<int> e = exps;
          e.resize(static_cast<std::size_t>(l), 0);
          e[static_cast<std::size_t>(i)] = static_cast<int>(d);
          auto [it, fresh] = next.emplace(std::move(e), coeff * coeffs[d]);
          if (!fresh) it->second += coeff * coeffs[d];
        }
      r = std::move(next);
    }
  }
  return symmetrize_rtilde(r, l, n);
}

Rational eval_sstar(const Partition& nu, const EvaluationPoint& point) {
  const int n = static_cast<int>(point.size());
  if (nu.length() > n)
    fail(ErrorCode::SizeMismatch, "index has more parts than evaluation coordinates");

  Rational denom = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      denom *= point[static_cast<std::size_t>(i - 1)] - point[static_cast<std::size_t>(j - 1)] +
               (j - i);
  if (denom == 0)
    fail(ErrorCode::SingularDenominator, "shifted Vandermonde vanishes at this point");

  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          falling_factorial(point[static_cast<std::size_t>(i - 1)] + (n - i), nu.part(j) + n - j);

  // exact Gaussian elimination
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
      det = -det;
    }
    const Rational& lead = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det *= lead;
    for (int row = col + 1; row < n; ++row) {
      Rational ratio = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] / lead;
      if (ratio == 0) continue;
      for (int c2 = col; c2 < n; ++c2)
        m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c2)] -=
            ratio * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c2)];
    }
  }
  return det / denom;
}

bool supersymmetry_test(const MonomialPolynomial& poly, int trials, unsigned long seed) {
  const int n = poly.n_vars();
  if (n < 2)
    fail(ErrorCode::InvalidArgument, "supersymmetry test needs at least two variables");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(1, 1000);
  auto random_rational = [&] {
    Rational q(dist(rng), dist(rng));
    q.canonicalize();
    return q;
  };
  std::uniform_int_distribution<int> var(0, n - 1);
  for (int trial = 0; trial < trials; ++trial) {
    int i = var(rng), j = var(rng);
    while (j == i) j = var(rng);
    if (i > j) std::swap(i, j);
    EvaluationPoint base(static_cast<std::size_t>(n));
    for (auto& c : base) c = random_rational();
    Rational t1 = random_rational(), t2 = random_rational();
    while (t2 == t1) t2 = random_rational();
    EvaluationPoint p1 = base, p2 = base;
    p1[static_cast<std::size_t>(i)] = t1;
    p1[static_cast<std::size_t>(j)] = -t1;
    p2[static_cast<std::size_t>(i)] = t2;
    p2[static_cast<std::size_t>(j)] = -t2;
    if (poly.evaluate(p1) != poly.evaluate(p2)) return false;
  }
  return true;
}

MonomialPolynomial truncate_vars(const MonomialPolynomial& poly, int m) {
  MonomialPolynomial out(poly.degree(), m);
  for (const auto& [key, coeff] : poly.terms())
    if (key.length() <= m) out.add_term(key, coeff);
  return out;
}

GradedPolynomial truncate_vars(const GradedPolynomial& poly, int m) {
  GradedPolynomial out;
  for (const auto& [degree, component] : poly) {
    MonomialPolynomial reduced = truncate_vars(component, m);
    if (!reduced.is_zero()) out.emplace(degree, std::move(reduced));
  }
  return out;
}

GradedPolynomial graded_scaled(const GradedPolynomial& poly, const Rational& factor) {
  GradedPolynomial out;
  if (factor == 0) return out;
  for (const auto& [degree, component] : poly) out.emplace(degree, component.scaled(factor));
  return out;
}

}  // namespace schurp
