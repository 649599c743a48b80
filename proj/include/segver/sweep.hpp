#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segver/gf.hpp"
#include "segver/model.hpp"

namespace segver::sweep {

enum class PointPolicy {
  Critical,  ///< n in {n-, n+}
  All        ///< 0 <= n <= n+
};

struct SweepConfig {
  int r_min = 1;
  int r_max = 1;
  int d_min = 1;
  int d_max = 1;
  /// When non-empty, replaces the (r, d) grid.
  std::vector<MultiDegree> shapes;
  PointPolicy policy = PointPolicy::Critical;
  std::uint32_t prime = gf::kDefaultPrime;
  std::uint64_t seed = 0;
  int retries = 3;
  std::int64_t cap = 5000;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct Cell {
  std::vector<int> degrees;
  std::int64_t n = 0;
  /// mix_seed(master seed, tuple_key(degrees)); shared by all n of a shape.
  std::uint64_t seed = 0;
  std::optional<DimReport> report;
  std::string skip_reason;
};

/// Non-decreasing degree tuples, r ascending, then lexicographic.
std::vector<MultiDegree> grid_shapes(int r_min, int r_max, int d_min, int d_max);

/// Shapes of the base-step table: r = 2, 3 with d_i <= 6; r = 4 with d_i <= 4,
/// (1,1,d_3,d_4) with d_3, d_4 <= 6, and (2,2,2,5); r = 5 with (1,1,1,1,d_5),
/// d_5 <= 5.
std::vector<MultiDegree> base_step_shapes();

std::vector<std::int64_t> point_counts(const MultiDegree& deg, PointPolicy policy);

/// Every cell equals interp::dim_linear_system at the cell seed. Output
/// order depends only on the configuration.
std::vector<Cell> run(const SweepConfig& config);

std::string to_json(const std::vector<Cell>& cells);
std::string to_tsv(const std::vector<Cell>& cells);

}  // namespace segver::sweep
