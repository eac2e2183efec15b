#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schurp {

// Integer partition with weakly decreasing positive parts. Trailing zeros are
// never stored: length() is the number of nonzero parts.
class Partition {
public:
  Partition() = default;

  // Accepts any integer sequence: sorts descending, drops zeros. Negative
  // entries raise NonPositivePart.
  static Partition normalized(std::vector<int> parts);

  // Comma-separated descending parts, e.g. "6,5,3,1"; "" is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long weight() const;
  bool empty() const { return parts_.empty(); }

  // 1-based part access; zero beyond the stored length.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  // m_i: number of parts equal to value.
  int multiplicity(int value) const;

  bool is_strict() const;

  std::string str() const;

  auto operator<=>(const Partition&) const = default;

private:
  friend class StrictPartition;
  explicit Partition(std::vector<int> sorted_parts) : parts_(std::move(sorted_parts)) {}

  std::vector<int> parts_;
};

// Partition with pairwise distinct parts; indexes shifted diagrams and spin
// characters.
class StrictPartition {
public:
  StrictPartition() = default;

  // Raises NotStrict when two equal nonzero parts remain after normalization.
  static StrictPartition normalized(std::vector<int> parts);
  static StrictPartition from_partition(Partition p);
  static StrictPartition parse(std::string_view text);

  const Partition& partition() const { return p_; }
  const std::vector<int>& parts() const { return p_.parts(); }
  int length() const { return p_.length(); }
  long weight() const { return p_.weight(); }
  bool empty() const { return p_.empty(); }
  int part(int i) const { return p_.part(i); }
  std::string str() const { return p_.str(); }

  auto operator<=>(const StrictPartition&) const = default;

private:
  Partition p_;
};

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

// Skew shifted diagram: row i of the shifted diagram of the outer partition
// occupies columns i .. outer_i + i - 1.
class ShiftedSkewShape {
public:
  // Raises NotContained when inner is not part-wise contained in outer.
  ShiftedSkewShape(StrictPartition outer, StrictPartition inner);

  const StrictPartition& outer() const { return outer_; }
  const StrictPartition& inner() const { return inner_; }
  const std::vector<Cell>& cells() const { return cells_; }
  bool has_cell(int row, int col) const;

private:
  StrictPartition outer_;
  StrictPartition inner_;
  std::vector<Cell> cells_;
};

// Ordinary skew diagram: row i occupies columns inner_i + 1 .. outer_i.
class OrdinarySkewShape {
public:
  OrdinarySkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  const std::vector<Cell>& cells() const { return cells_; }
  bool has_cell(int row, int col) const;

private:
  Partition outer_;
  Partition inner_;
  std::vector<Cell> cells_;
};

// mu_i <= lambda_i for all i.
bool contains(const Partition& mu, const Partition& lambda);
bool contains(const StrictPartition& mu, const StrictPartition& lambda);

// All strict nu contained in lambda with |nu| = |lambda| - 1, i.e. the shapes
// obtained by removing one box from the shifted diagram.
std::vector<StrictPartition> strict_covers_below(const StrictPartition& lambda);

ShiftedSkewShape shifted_skew_shape(const StrictPartition& lambda, const StrictPartition& mu);

// The shape correspondence eta_i = lambda_i + i - 1, nu_i = mu_i + i - 1,
// defined when l(lambda) - l(mu) is 0 or 1; raises LengthCondition otherwise.
std::pair<Partition, Partition> remark17_to_ordinary(const StrictPartition& lambda,
                                                     const StrictPartition& mu);

// Multiset union of parts, re-sorted descending.
Partition partition_union(const Partition& rho, const Partition& sigma);

bool is_odd_partition(const Partition& rho);

// Enumeration (descending lexicographic order within each weight).
std::vector<Partition> partitions_of(int n);
std::vector<StrictPartition> strict_partitions_of(int n);
std::vector<Partition> odd_partitions_of(int n);

}  // namespace schurp
