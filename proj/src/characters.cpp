#include "schurp/characters.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "schurp/dimensions.hpp"
#include "schurp/error.hpp"

namespace schurp {

namespace {

constexpr int kMaxCharWeight = 9;   // largest |rho| served by the transition solve
constexpr int kSolveVars = 7;       // variable cap of the symbolic engine

int solve_vars(int k) { return std::min(k, kSolveVars); }

void require_odd(const Partition& rho) {
  if (!is_odd_partition(rho))
    fail(ErrorCode::EvenPart, "class partition must have all parts odd");
}

// Cache of P_{mu|n} expansions used by the transition solve.
const MonomialPolynomial& p_family_expansion(const StrictPartition& mu, int n) {
  static std::map<std::pair<StrictPartition, int>, MonomialPolynomial> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(mu, n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    GradedPolynomial graded = expand_in_monomials(PolynomialFamily::P, mu.partition(), n);
    int degree = static_cast<int>(mu.weight());
    auto found = graded.find(degree);
    MonomialPolynomial poly =
        found == graded.end() ? MonomialPolynomial(degree, n) : found->second;
    it = cache.emplace(std::move(key), std::move(poly)).first;
  }
  return it->second;
}

}  // namespace

ClassLabel::ClassLabel(Partition rho_, int n_) : rho(std::move(rho_)), n(n_) {
  if (rho.weight() != n)
    fail(ErrorCode::SizeMismatch, "class label requires |rho| = n");
}

ThomaPoint::ThomaPoint(std::vector<Rational> gamma_) : gamma(std::move(gamma_)) {
  Rational sum = 0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] < 0)
      fail(ErrorCode::InvalidArgument, "Thoma parameters must be non-negative");
    if (i > 0 && gamma[i] > gamma[i - 1])
      fail(ErrorCode::InvalidArgument, "Thoma parameters must be weakly decreasing");
    sum += gamma[i];
  }
  if (sum > 1) fail(ErrorCode::InvalidArgument, "Thoma parameters must sum to at most 1");
}

std::map<StrictPartition, Rational> p_to_P_coefficients(const Partition& rho) {
  require_odd(rho);
  const int k = static_cast<int>(rho.weight());
  if (k > kMaxCharWeight)
    fail(ErrorCode::DegreeTooLarge, "transition solve supports |rho| <= 9");
  if (k == 0) return {{StrictPartition{}, Rational(1)}};

  const int n = solve_vars(k);
  GradedPolynomial p_graded = expand_in_monomials(PolynomialFamily::PowerSum, rho, n);
  MonomialPolynomial::TermMap work;
  if (auto it = p_graded.find(k); it != p_graded.end()) work = it->second.terms();

  // Eliminate along descending-lex leading monomials: the leading key of the
  // remainder is always the largest strict mu still carrying a coefficient.
  std::map<StrictPartition, Rational> coefficients;
  while (!work.empty()) {
    const Partition& lead = work.begin()->first;
    if (!lead.is_strict())
      fail(ErrorCode::NonDivisible, "transition solve hit a non-strict leading monomial");
    StrictPartition mu = StrictPartition::from_partition(lead);
    Rational c = work.begin()->second;
    for (const auto& [key, coeff] : p_family_expansion(mu, n).terms()) {
      auto [it, fresh] = work.emplace(key, -c * coeff);
      if (!fresh) {
        it->second -= c * coeff;
        if (it->second == 0) work.erase(it);
      }
    }
    coefficients.emplace(std::move(mu), std::move(c));
  }
  return coefficients;
}

CharacterTable CharacterTable::build(int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "character table weight must be positive");
  if (k > kMaxCharWeight)
    fail(ErrorCode::DegreeTooLarge, "character tables support k <= 9");
  CharacterTable table;
  table.k_ = k;
  auto strict = strict_partitions_of(k);
  for (const auto& rho : odd_partitions_of(k)) {
    auto coefficients = p_to_P_coefficients(rho);
    for (const auto& mu : strict) {
      Root2Value value;  // zero when mu is absent from the transition
      if (auto it = coefficients.find(mu); it != coefficients.end())
        value = pow2_half(rho.length() - mu.length()) * it->second;
      table.entries_.emplace(std::make_pair(mu, rho), std::move(value));
    }
  }
  return table;
}

const CharacterTable& CharacterTable::for_weight(int k) {
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(k);
  if (it == cache.end())
    it = cache.emplace(k, std::make_unique<CharacterTable>(build(k))).first;
  return *it->second;
}

const Root2Value& CharacterTable::value(const StrictPartition& mu, const Partition& rho) const {
  auto it = entries_.find(std::make_pair(mu, rho));
  if (it == entries_.end())
    fail(ErrorCode::SizeMismatch, "no table entry for the requested (mu, rho)");
  return it->second;
}

Root2Value char_value(const StrictPartition& mu, const Partition& rho) {
  if (mu.weight() != rho.weight())
    fail(ErrorCode::SizeMismatch, "character value requires |mu| = |rho|");
  require_odd(rho);
  if (mu.weight() == 0) return Root2Value{Rational(1), Rational(0)};
  return CharacterTable::for_weight(static_cast<int>(mu.weight())).value(mu, rho);
}

Root2Value restriction_coefficient(const StrictPartition& lambda, const StrictPartition& mu) {
  if (mu.weight() > lambda.weight())
    fail(ErrorCode::SizeMismatch, "restriction requires |mu| <= |lambda|");
  Rational ratio = eval_Pstar(mu, lambda) /
                   falling_factorial(Rational(lambda.weight()), static_cast<int>(mu.weight()));
  return pow2_half(mu.length() - mu.weight()) * ratio;
}

Root2Value xi(const StrictPartition& lambda, const Partition& rho) {
  const int k = static_cast<int>(rho.weight());
  if (k > lambda.weight())
    fail(ErrorCode::SizeMismatch, "xi requires |rho| <= |lambda|");
  require_odd(rho);
  Root2Value total;
  for (const auto& mu : strict_partitions_of(k))
    total += restriction_coefficient(lambda, mu) * char_value(mu, rho);
  return total;
}

Root2Value psi(const ThomaPoint& gamma, const Partition& rho) {
  if (!is_odd_partition(rho)) return {};
  EvaluationPoint point(gamma.gamma.begin(), gamma.gamma.end());
  Rational product = 1;
  for (int part : rho.parts()) {
    if (part < 2) continue;
    Partition single = Partition::normalized({part});
    product *= power_sum_eval(single, point);
  }
  return pow2_half(rho.length() - rho.weight()) * product;
}

StrictPartition build_lambda_sequence(const ThomaPoint& gamma, int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "sequence index must be positive");
  std::vector<int> parts;
  for (const auto& g : gamma.gamma) {
    Rational scaled = g * n;
    mpz_class floor_value = scaled.get_num() / scaled.get_den();
    parts.push_back(static_cast<int>(floor_value.get_si()));
  }
  // collisions are resolved downward, from the largest part on
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] >= parts[i - 1]) parts[i] = parts[i - 1] - 1;
  while (!parts.empty() && parts.back() <= 0) parts.pop_back();

  long assigned = 0;
  for (int p : parts) assigned += p;
  long remainder = n - assigned;
  if (remainder > 0) {
    // absorb the remainder as a staircase s, s-1, ..., 1 of parts strictly
    // below the current smallest part, with one step dropped to hit the sum
    // exactly; the staircase keeps the tail parts of order sqrt(remainder)
    long cap = parts.empty() ? remainder : parts.back() - 1;
    long s = 0;
    while (s * (s + 1) / 2 < remainder) ++s;
    if (s <= cap) {
      long excess = s * (s + 1) / 2 - remainder;  // in [0, s-1]
      for (long p = s; p >= 1; --p)
        if (p != excess) parts.push_back(static_cast<int>(p));
    } else {
      // staircase capacity shortfall: fill it completely, rest to the top part
      for (long p = cap; p >= 1; --p) parts.push_back(static_cast<int>(p));
      parts.front() += static_cast<int>(remainder - cap * (cap + 1) / 2);
    }
  }
  return StrictPartition::normalized(std::move(parts));
}

std::vector<ConvergenceRow> convergence_table(const ThomaPoint& gamma, const Partition& rho,
                                              const std::vector<int>& ns) {
  std::vector<ConvergenceRow> rows;
  Root2Value limit = psi(gamma, rho);
  for (int n : ns) {
    if (n < rho.weight())
      fail(ErrorCode::SizeMismatch, "each n must be at least |rho|");
    ConvergenceRow row;
    row.n = n;
    row.lambda = build_lambda_sequence(gamma, n);
    row.xi_value = xi(row.lambda, rho);
    row.psi_value = limit;
    row.abs_error = abs(root2_numeric(row.xi_value - limit));
    rows.push_back(std::move(row));
  }
  return rows;
}

bool multiplicativity_check(const ThomaPoint& gamma, const Partition& rho,
                            const Partition& sigma) {
  return psi(gamma, partition_union(rho, sigma)) == psi(gamma, rho) * psi(gamma, sigma);
}

bool branching_check(const StrictPartition& lambda, int k, const Partition& rho) {
  if (rho.weight() != k)
    fail(ErrorCode::SizeMismatch, "branching check requires |rho| = k");
  if (k > lambda.weight())
    fail(ErrorCode::SizeMismatch, "branching check requires k <= |lambda|");
  require_odd(rho);
  std::vector<int> padded = rho.parts();
  padded.insert(padded.end(), static_cast<std::size_t>(lambda.weight() - k), 1);
  Root2Value lhs = char_value(lambda, Partition::normalized(std::move(padded)));
  Root2Value rhs;
  for (const auto& mu : strict_partitions_of(k)) {
    Integer mult = g_skew(lambda, mu).value;
    if (mult == 0) continue;
    Root2Value weight =
        pow2_half((lambda.weight() - lambda.length()) - (mu.weight() - mu.length()));
    rhs += weight * Rational(mult) * char_value(mu, rho);
  }
  return lhs == rhs;
}

}  // namespace schurp
