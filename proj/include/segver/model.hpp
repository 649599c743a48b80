#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace segver {

/// Degree tuple (d_1, ..., d_r) of O(d_1, ..., d_r) on (P^1)^r. Stored as
/// given; zero entries are allowed.
class MultiDegree {
 public:
  explicit MultiDegree(std::vector<int> degrees);

  std::size_t size() const noexcept { return degrees_.size(); }
  int operator[](std::size_t i) const { return degrees_[i]; }
  const std::vector<int>& values() const noexcept { return degrees_; }
  int sum() const noexcept;
  int max() const noexcept;

  /// prod (d_i + 1). Throws std::overflow_error past 2^62.
  std::int64_t section_count() const;
  std::int64_t projective_dim() const { return section_count() - 1; }

  MultiDegree sorted() const;
  bool has_zero() const noexcept;
  std::size_t nonzero_count() const noexcept;
  /// Drops zero entries. Throws std::invalid_argument when all are zero.
  MultiDegree without_zeros() const;

  std::string to_string() const;

  auto operator<=>(const MultiDegree&) const = default;

 private:
  std::vector<int> degrees_;
};

/// One run of points with a common multiplicity.
struct FatPoints {
  int multiplicity;
  std::int64_t count;
  auto operator<=>(const FatPoints&) const = default;
};

/// Ordered multiset of point multiplicities, stored run-length encoded.
class FatPointSpec {
 public:
  FatPointSpec() = default;
  explicit FatPointSpec(std::vector<FatPoints> entries);

  static FatPointSpec doubles(std::int64_t n);
  static FatPointSpec from_multiplicities(const std::vector<int>& mults);

  const std::vector<FatPoints>& entries() const noexcept { return entries_; }
  std::vector<int> multiplicities() const;
  std::int64_t point_count() const noexcept;
  std::int64_t count_of(int multiplicity) const noexcept;
  int max_multiplicity() const noexcept;
  bool empty() const noexcept { return point_count() == 0; }

  /// sum count * C(m - 1 + dim, dim): conditions imposed on a dim-dimensional ambient.
  std::int64_t condition_count(int dim) const;

  /// Same multiset sorted by decreasing multiplicity with equal runs merged.
  FatPointSpec canonical() const;

  /// "4^3,2^7" style; runs of length one print without exponent.
  std::string to_string() const;

  auto operator<=>(const FatPointSpec&) const = default;

 private:
  std::vector<FatPoints> entries_;
};

enum class AmbientKind { ProductOfLines, ProjectiveSpace };

std::string_view to_string(AmbientKind kind);

/// Linear system on (P^1)^r with a multi-degree, or on P^r with a single degree.
class LinearSystemSpec {
 public:
  static LinearSystemSpec product_of_lines(MultiDegree degrees, FatPointSpec points);
  static LinearSystemSpec projective_space(int dim, int degree, FatPointSpec points);

  AmbientKind ambient() const noexcept { return ambient_; }
  /// Dimension r of the ambient variety.
  int dim() const noexcept { return dim_; }
  /// Multi-degree for a product of lines; the one-entry tuple (d) for P^r.
  const MultiDegree& degrees() const noexcept { return degrees_; }
  int degree() const;
  const FatPointSpec& points() const noexcept { return points_; }

  std::int64_t section_count() const;
  std::int64_t projective_dim() const { return section_count() - 1; }
  std::int64_t condition_count() const { return points_.condition_count(dim_); }

  LinearSystemSpec with_points(FatPointSpec points) const;
  /// Points compared as multisets.
  bool equivalent(const LinearSystemSpec& other) const;

  /// "L_(2,2,2)(2^7)" or "L_6(4^3,2^7) on P^3".
  std::string to_string() const;

  auto operator<=>(const LinearSystemSpec&) const = default;

 private:
  LinearSystemSpec(AmbientKind ambient, int dim, MultiDegree degrees, FatPointSpec points);

  AmbientKind ambient_;
  int dim_;
  MultiDegree degrees_;
  FatPointSpec points_;
};

enum class DimStatus { NonSpecial, SpecialCandidate, Inconclusive };

std::string_view to_string(DimStatus status);

struct DimReport {
  std::int64_t virtual_dim = 0;
  std::int64_t expected = 0;
  std::int64_t computed = 0;
  DimStatus status = DimStatus::Inconclusive;
  int trials = 0;
  std::uint64_t seed = 0;

  bool operator==(const DimReport&) const = default;
};

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// All e with 0 <= e_i <= d_i in lexicographic order.
std::vector<std::vector<int>> monomial_basis(const MultiDegree& deg);

/// Exponent vectors of the chart monomials of a system: for (P^1)^r the
/// multi-degree basis (exponent of the second coordinate per factor); for P^r
/// all e in N^r with |e| <= d (chart x_0 = 1), lexicographic.
std::vector<std::vector<int>> monomial_basis(const LinearSystemSpec& spec);

std::int64_t virtual_dimension(const LinearSystemSpec& spec);
std::int64_t expected_dimension(const LinearSystemSpec& spec);

/// Expected dimension after dropping zero-degree factors of a product of
/// lines: a double point then imposes r' + 1 conditions, r' the number of
/// positive degrees. Equals expected_dimension when no degree is zero.
std::int64_t normalized_expected_dimension(const LinearSystemSpec& spec);

struct CriticalRange {
  std::int64_t lower;
  std::int64_t upper;
  bool operator==(const CriticalRange&) const = default;
};

/// (floor, ceil) of prod(d_i + 1) / (r + 1).
CriticalRange critical_range(const MultiDegree& deg);

}  // namespace segver
