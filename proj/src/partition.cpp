#include "schurp/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "schurp/error.hpp"

namespace schurp {

Partition Partition::normalized(std::vector<int> parts) {
  for (int p : parts)
    if (p < 0) fail(ErrorCode::NonPositivePart, "partition part is negative");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                            : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      fail(ErrorCode::InvalidArgument, "cannot parse partition part '" + std::string(tok) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return normalized(std::move(parts));
}

long Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

bool Partition::is_strict() const {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] == parts_[i - 1]) return false;
  return true;
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

StrictPartition StrictPartition::normalized(std::vector<int> parts) {
  return from_partition(Partition::normalized(std::move(parts)));
}

StrictPartition StrictPartition::from_partition(Partition p) {
  if (!p.is_strict()) fail(ErrorCode::NotStrict, "partition not strict: " + p.str());
  StrictPartition s;
  s.p_ = std::move(p);
  return s;
}

StrictPartition StrictPartition::parse(std::string_view text) {
  return from_partition(Partition::parse(text));
}

ShiftedSkewShape::ShiftedSkewShape(StrictPartition outer, StrictPartition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(inner_, outer_))
    fail(ErrorCode::NotContained, "inner not contained in outer");
  for (int i = 1; i <= outer_.length(); ++i) {
    // row i spans columns i .. outer_i + i - 1; the inner diagram covers
    // columns i .. inner_i + i - 1 of that row
    for (int j = inner_.part(i) + i; j <= outer_.part(i) + i - 1; ++j)
      cells_.push_back({i, j});
  }
}

bool ShiftedSkewShape::has_cell(int row, int col) const {
  return std::binary_search(cells_.begin(), cells_.end(), Cell{row, col});
}

OrdinarySkewShape::OrdinarySkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(inner_, outer_))
    fail(ErrorCode::NotContained, "inner not contained in outer");
  for (int i = 1; i <= outer_.length(); ++i)
    for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j)
      cells_.push_back({i, j});
}

bool OrdinarySkewShape::has_cell(int row, int col) const {
  return std::binary_search(cells_.begin(), cells_.end(), Cell{row, col});
}

bool contains(const Partition& mu, const Partition& lambda) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > lambda.part(i)) return false;
  return true;
}

bool contains(const StrictPartition& mu, const StrictPartition& lambda) {
  return contains(mu.partition(), lambda.partition());
}

std::vector<StrictPartition> strict_covers_below(const StrictPartition& lambda) {
  std::vector<StrictPartition> result;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<int> reduced = parts;
    reduced[i] -= 1;
    if (reduced[i] == 0)
      reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
    else if (i + 1 < parts.size() && reduced[i] == parts[i + 1])
      continue;  // would collide with the next part
    result.push_back(StrictPartition::normalized(std::move(reduced)));
  }
  std::sort(result.begin(), result.end());
  return result;
}

ShiftedSkewShape shifted_skew_shape(const StrictPartition& lambda, const StrictPartition& mu) {
  return ShiftedSkewShape(lambda, mu);
}

std::pair<Partition, Partition> remark17_to_ordinary(const StrictPartition& lambda,
                                                     const StrictPartition& mu) {
  if (!contains(mu, lambda))
    fail(ErrorCode::NotContained, "inner not contained in outer");
  int ll = lambda.length(), lm = mu.length();
  if (ll != lm && ll != lm + 1)
    fail(ErrorCode::LengthCondition,
         "shape correspondence requires l(outer) - l(inner) in {0,1}");
  std::vector<int> eta, nu;
  for (int i = 1; i <= ll; ++i) {
    eta.push_back(lambda.part(i) + i - 1);
    nu.push_back(mu.part(i) + i - 1);
  }
  return {Partition::normalized(std::move(eta)), Partition::normalized(std::move(nu))};
}

Partition partition_union(const Partition& rho, const Partition& sigma) {
  std::vector<int> parts = rho.parts();
  parts.insert(parts.end(), sigma.parts().begin(), sigma.parts().end());
  return Partition::normalized(std::move(parts));
}

bool is_odd_partition(const Partition& rho) {
  for (int p : rho.parts())
    if (p % 2 == 0) return false;
  return true;
}

namespace {

void enumerate_partitions(int remaining, int max_part, bool strict, std::vector<int>& stack,
                          std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(stack);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    stack.push_back(p);
    enumerate_partitions(remaining - p, strict ? p - 1 : p, strict, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<std::vector<int>> raw;
  std::vector<int> stack;
  if (n >= 0) enumerate_partitions(n, n, false, stack, raw);
  std::vector<Partition> out;
  out.reserve(raw.size());
  for (auto& parts : raw) out.push_back(Partition::normalized(std::move(parts)));
  return out;
}

std::vector<StrictPartition> strict_partitions_of(int n) {
  std::vector<std::vector<int>> raw;
  std::vector<int> stack;
  if (n >= 0) enumerate_partitions(n, n, true, stack, raw);
  std::vector<StrictPartition> out;
  out.reserve(raw.size());
  for (auto& parts : raw) out.push_back(StrictPartition::normalized(std::move(parts)));
  return out;
}

std::vector<Partition> odd_partitions_of(int n) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n))
    if (is_odd_partition(p)) out.push_back(p);
  return out;
}

}  // namespace schurp
