#pragma once

#include <cstdint>
#include <vector>

#include "segver/gf.hpp"
#include "segver/model.hpp"

namespace segver::interp {

inline constexpr int kDefaultRetries = 3;

/// Points in the standard affine chart: ([1:t_1], ..., [1:t_r]) on (P^1)^r,
/// or (1 : t_1 : ... : t_r) on P^r. Pairwise distinct.
struct PointSample {
  std::vector<std::vector<std::uint32_t>> points;
  std::uint64_t seed = 0;
};

/// Draws `count` distinct points from a mt19937_64 stream seeded with `seed`.
/// The first k points of a sample do not depend on `count`.
PointSample sample_points(int dim, std::size_t count, const gf::PrimeField& field, std::uint64_t seed);

/// Homogeneous coordinates: r pairs [a:b] on (P^1)^r, one (r+1)-tuple on P^r.
using HomogeneousPoint = std::vector<std::vector<std::int64_t>>;

/// Multi-indices alpha in N^dim with |alpha| < multiplicity, by increasing
/// order and, within an order, with the first coordinate decreasing
/// (value, d/dx_1, ..., d/dx_r, d^2/dx_1^2, ...).
std::vector<std::vector<int>> derivative_operators(int dim, int multiplicity);

/// One column per monomial of monomial_basis(spec); for each point of
/// multiplicity m, one row per operator of order < m applied to every
/// monomial at that point. Rows are not divided by alpha!.
gf::Matrix conditions_matrix(const LinearSystemSpec& spec, const PointSample& sample,
                             const gf::PrimeField& field = gf::PrimeField());

/// Same matrix at explicit homogeneous points, each evaluated in a chart
/// where it is finite.
gf::Matrix conditions_matrix_at(const LinearSystemSpec& spec, const std::vector<HomogeneousPoint>& points,
                                const gf::PrimeField& field = gf::PrimeField());

std::int64_t rank_at_sample(const LinearSystemSpec& spec, const PointSample& sample,
                            const gf::PrimeField& field = gf::PrimeField());

/// section_count - 1 - rank at the given sample.
std::int64_t dim_at_sample(const LinearSystemSpec& spec, const PointSample& sample,
                           const gf::PrimeField& field = gf::PrimeField());

std::int64_t dim_at_specific_points(const LinearSystemSpec& spec, const std::vector<HomogeneousPoint>& points,
                                    const gf::PrimeField& field = gf::PrimeField());

/// Dimension at random points, minimized over up to `retries` samples with
/// seeds mix_seed(seed, trial). Stops at the first trial reaching the
/// expected dimension.
DimReport dim_linear_system(const LinearSystemSpec& spec, std::uint64_t seed = 0,
                            int retries = kDefaultRetries, const gf::PrimeField& field = gf::PrimeField());

/// dim_linear_system for every prefix of the point list: entry i is the
/// report for the first i points, with identical trial semantics. One
/// elimination pass per trial serves all prefixes.
std::vector<DimReport> dim_prefixes(const LinearSystemSpec& spec, std::uint64_t seed = 0,
                                    int retries = kDefaultRetries, const gf::PrimeField& field = gf::PrimeField());

struct SecantReport {
  std::int64_t secant_dim = 0;
  std::int64_t expected_secant_dim = 0;
  bool defective = false;
  int trials = 0;
  std::uint64_t seed = 0;

  bool operator==(const SecantReport&) const = default;
};

/// Spanning vectors of the tangent spaces to the Segre-Veronese variety at
/// the sample points, laid out as columns: one row per coordinate of P^N,
/// columns nu(p), d nu/dx_1(p), ..., d nu/dx_r(p) for each point.
gf::Matrix terracini_matrix(const MultiDegree& deg, const PointSample& sample,
                            const gf::PrimeField& field = gf::PrimeField());

/// rank(terracini_matrix) - 1.
std::int64_t secant_dimension_at(const MultiDegree& deg, const PointSample& sample,
                                 const gf::PrimeField& field = gf::PrimeField());

/// Dimension of the n-secant variety via Terracini's lemma, maximized over
/// up to `retries` samples.
SecantReport secant_dimension(const MultiDegree& deg, std::int64_t n, std::uint64_t seed = 0,
                              int retries = kDefaultRetries, const gf::PrimeField& field = gf::PrimeField());

}  // namespace segver::interp
