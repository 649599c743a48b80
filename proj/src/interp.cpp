#include "segver/interp.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "segver/seeding.hpp"

namespace segver::interp {

namespace {

/// A point in a chosen affine chart: `chart[g]` is the homogeneous index set to
/// one in coordinate group g, `coords` the remaining coordinates in order.
struct LocalPoint {
  std::vector<std::uint32_t> coords;
  std::vector<int> chart;
};

void require_usable_field(const LinearSystemSpec& spec, const gf::PrimeField& field) {
  const std::uint32_t p = field.modulus();
  const int max_degree = spec.degrees().max();
  if (static_cast<std::uint64_t>(max_degree) >= p)
    throw std::invalid_argument("prime " + std::to_string(p) + " too small for degree " + std::to_string(max_degree));
  const int max_mult = spec.points().max_multiplicity();
  if (static_cast<std::uint64_t>(max_mult) >= p)
    throw std::invalid_argument("prime " + std::to_string(p) + " must exceed multiplicity " + std::to_string(max_mult));
}

class RowBuilder {
 public:
  RowBuilder(const LinearSystemSpec& spec, const gf::PrimeField& field)
      : spec_(spec), field_(field), r_(static_cast<std::size_t>(spec.dim())), basis_(monomial_basis(spec)) {
    require_usable_field(spec, field);
    max_exp_ = spec.degrees().max();
    standard_ = local_exponents(std::vector<int>(group_count(), 0));
  }

  std::size_t cols() const noexcept { return basis_.size(); }
  std::size_t dim() const noexcept { return r_; }

  std::size_t group_count() const noexcept {
    return spec_.ambient() == AmbientKind::ProductOfLines ? r_ : 1;
  }
  std::size_t group_size() const noexcept {
    return spec_.ambient() == AmbientKind::ProductOfLines ? 2 : r_ + 1;
  }

  LocalPoint standard_point(const std::vector<std::uint32_t>& coords) const {
    if (coords.size() != r_) throw std::invalid_argument("point has wrong number of coordinates");
    return {coords, std::vector<int>(group_count(), 0)};
  }

  LocalPoint local_point(const HomogeneousPoint& hp) const {
    if (hp.size() != group_count()) throw std::invalid_argument("malformed point: wrong number of coordinate groups");
    LocalPoint lp;
    for (const auto& group : hp) {
      if (group.size() != group_size()) throw std::invalid_argument("malformed point: wrong coordinate group size");
      std::vector<std::uint32_t> g;
      for (auto x : group) g.push_back(field_.reduce(x));
      const auto it = std::find_if(g.begin(), g.end(), [](std::uint32_t x) { return x != 0; });
      if (it == g.end()) throw std::invalid_argument("malformed point: all coordinates of a group vanish");
      const int j = static_cast<int>(it - g.begin());
      const std::uint32_t inv = field_.inv(g[static_cast<std::size_t>(j)]);
      for (std::size_t i = 0; i < g.size(); ++i)
        if (static_cast<int>(i) != j) lp.coords.push_back(field_.mul(g[i], inv));
      lp.chart.push_back(j);
    }
    return lp;
  }

  /// Calls sink(row) for each of the condition rows of a point.
  template <class Sink>
  void emit(const LocalPoint& pt, int multiplicity, Sink&& sink) {
    if (multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
    const bool standard = std::all_of(pt.chart.begin(), pt.chart.end(), [](int j) { return j == 0; });
    const std::vector<int> custom = standard ? std::vector<int>{} : local_exponents(pt.chart);
    const std::vector<int>& exps = standard ? standard_ : custom;

    const std::size_t width = static_cast<std::size_t>(max_exp_) + 1;
    powers_.assign(r_ * width, 0);
    for (std::size_t k = 0; k < r_; ++k) {
      std::uint32_t v = 1 % field_.modulus();
      for (std::size_t e = 0; e < width; ++e) {
        powers_[k * width + e] = v;
        v = field_.mul(v, pt.coords[k]);
      }
    }

    row_.assign(cols(), 0);
    for (const auto& alpha : derivative_operators(static_cast<int>(r_), multiplicity)) {
      for (std::size_t c = 0; c < cols(); ++c) {
        std::uint64_t v = 1;
        for (std::size_t k = 0; k < r_ && v != 0; ++k) {
          const int f = exps[c * r_ + k];
          const int a = alpha[k];
          if (f < a) {
            v = 0;
            break;
          }
          v = v * falling(f, a) % field_.modulus();
          v = v * powers_[k * width + static_cast<std::size_t>(f - a)] % field_.modulus();
        }
        row_[c] = static_cast<std::uint32_t>(v);
      }
      sink(std::span<const std::uint32_t>(row_));
    }
  }

 private:
  std::uint64_t falling(int f, int a) const {
    std::uint64_t v = 1;
    for (int i = 0; i < a; ++i) v = v * static_cast<std::uint64_t>(f - i) % field_.modulus();
    return v;
  }

  /// Flattened cols x r exponents of each monomial in the given chart.
  std::vector<int> local_exponents(const std::vector<int>& chart) const {
    std::vector<int> out;
    out.reserve(cols() * r_);
    for (const auto& e : basis_) {
      if (spec_.ambient() == AmbientKind::ProductOfLines) {
        for (std::size_t g = 0; g < r_; ++g) out.push_back(chart[g] == 0 ? e[g] : spec_.degrees()[g] - e[g]);
      } else {
        int e0 = spec_.degree();
        for (int x : e) e0 -= x;
        const int j = chart[0];
        if (j != 0) out.push_back(e0);
        for (std::size_t i = 0; i < r_; ++i)
          if (static_cast<int>(i) + 1 != j) out.push_back(e[i]);
      }
    }
    return out;
  }

  const LinearSystemSpec& spec_;
  gf::PrimeField field_;
  std::size_t r_;
  std::vector<std::vector<int>> basis_;
  int max_exp_ = 0;
  std::vector<int> standard_;
  std::vector<std::uint32_t> powers_;
  std::vector<std::uint32_t> row_;
};

void require_sample_size(const LinearSystemSpec& spec, const PointSample& sample) {
  if (static_cast<std::int64_t>(sample.points.size()) != spec.points().point_count())
    throw std::invalid_argument("sample size " + std::to_string(sample.points.size()) +
                                " does not match point count " + std::to_string(spec.points().point_count()));
  std::set<std::vector<std::uint32_t>> seen(sample.points.begin(), sample.points.end());
  if (seen.size() != sample.points.size()) throw std::invalid_argument("duplicate points");
}

}  // namespace

PointSample sample_points(int dim, std::size_t count, const gf::PrimeField& field, std::uint64_t seed) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  // p^dim distinct points exist; refuse impossible requests.
  long double available = 1;
  for (int i = 0; i < dim; ++i) available *= field.modulus();
  if (static_cast<long double>(count) > available)
    throw std::invalid_argument("cannot draw " + std::to_string(count) + " distinct points");

  PointSample sample;
  sample.seed = seed;
  sample.points.reserve(count);
  std::mt19937_64 rng(seed);
  std::set<std::vector<std::uint32_t>> seen;
  while (sample.points.size() < count) {
    std::vector<std::uint32_t> pt(static_cast<std::size_t>(dim));
    for (auto& x : pt) x = uniform_residue(rng, field.modulus());
    if (seen.insert(pt).second) sample.points.push_back(std::move(pt));
  }
  return sample;
}

std::vector<std::vector<int>> derivative_operators(int dim, int multiplicity) {
  std::vector<std::vector<int>> out;
  std::vector<int> alpha(static_cast<std::size_t>(dim), 0);
  // Compositions of `order` into dim parts, first coordinate decreasing.
  auto fill = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 >= alpha.size()) {
      if (!alpha.empty()) alpha[pos] = remaining;
      if (alpha.empty() && remaining != 0) return;
      out.push_back(alpha);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      alpha[pos] = v;
      self(self, pos + 1, remaining - v);
    }
    alpha[pos] = 0;
  };
  for (int order = 0; order < multiplicity; ++order) fill(fill, 0, order);
  return out;
}

gf::Matrix conditions_matrix(const LinearSystemSpec& spec, const PointSample& sample, const gf::PrimeField& field) {
  require_sample_size(spec, sample);
  RowBuilder builder(spec, field);
  const auto mults = spec.points().multiplicities();
  const auto rows = static_cast<std::size_t>(spec.condition_count());
  gf::Matrix m(rows, builder.cols(), field.modulus());
  std::size_t next = 0;
  for (std::size_t i = 0; i < mults.size(); ++i) {
    builder.emit(builder.standard_point(sample.points[i]), mults[i], [&](std::span<const std::uint32_t> row) {
      std::copy(row.begin(), row.end(), m.row(next++).begin());
    });
  }
  return m;
}

gf::Matrix conditions_matrix_at(const LinearSystemSpec& spec, const std::vector<HomogeneousPoint>& points,
                                const gf::PrimeField& field) {
  if (static_cast<std::int64_t>(points.size()) != spec.points().point_count())
    throw std::invalid_argument("number of explicit points does not match the spec");
  RowBuilder builder(spec, field);
  std::vector<LocalPoint> local;
  std::set<std::pair<std::vector<int>, std::vector<std::uint32_t>>> seen;
  for (const auto& hp : points) {
    local.push_back(builder.local_point(hp));
    if (!seen.insert({local.back().chart, local.back().coords}).second)
      throw std::invalid_argument("duplicate points");
  }
  const auto mults = spec.points().multiplicities();
  gf::Matrix m(static_cast<std::size_t>(spec.condition_count()), builder.cols(), field.modulus());
  std::size_t next = 0;
  for (std::size_t i = 0; i < mults.size(); ++i) {
    builder.emit(local[i], mults[i], [&](std::span<const std::uint32_t> row) {
      std::copy(row.begin(), row.end(), m.row(next++).begin());
    });
  }
  return m;
}

std::int64_t rank_at_sample(const LinearSystemSpec& spec, const PointSample& sample, const gf::PrimeField& field) {
  require_sample_size(spec, sample);
  RowBuilder builder(spec, field);
  gf::EchelonBasis basis(field, builder.cols());
  const auto mults = spec.points().multiplicities();
  for (std::size_t i = 0; i < mults.size() && !basis.full(); ++i)
    builder.emit(builder.standard_point(sample.points[i]), mults[i],
                 [&](std::span<const std::uint32_t> row) { basis.insert(row); });
  return static_cast<std::int64_t>(basis.rank());
}

std::int64_t dim_at_sample(const LinearSystemSpec& spec, const PointSample& sample, const gf::PrimeField& field) {
  return spec.projective_dim() - rank_at_sample(spec, sample, field);
}

std::int64_t dim_at_specific_points(const LinearSystemSpec& spec, const std::vector<HomogeneousPoint>& points,
                                    const gf::PrimeField& field) {
  const gf::Matrix m = conditions_matrix_at(spec, points, field);
  return spec.projective_dim() - static_cast<std::int64_t>(gf::rank(m));
}

std::vector<DimReport> dim_prefixes(const LinearSystemSpec& spec, std::uint64_t seed, int retries,
                                    const gf::PrimeField& field) {
  if (retries < 1) throw std::invalid_argument("retries must be at least 1");
  const auto mults = spec.points().multiplicities();
  for (int m : mults)
    if (m < 1) throw std::invalid_argument("multiplicity must be positive");
  const std::size_t np = mults.size();
  const std::int64_t top = spec.projective_dim();

  struct Track {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::int64_t first = 0;
    bool agree = true;
    bool done = false;
  };
  std::vector<DimReport> reports(np + 1);
  std::vector<Track> track(np + 1);
  for (std::size_t i = 0; i <= np; ++i) {
    const auto prefix = spec.with_points(FatPointSpec::from_multiplicities({mults.begin(), mults.begin() + static_cast<std::ptrdiff_t>(i)}));
    reports[i].virtual_dim = virtual_dimension(prefix);
    reports[i].expected = expected_dimension(prefix);
    reports[i].seed = seed;
  }

  RowBuilder builder(spec, field);
  std::vector<std::int64_t> rank_after(np + 1, 0);
  for (int trial = 0; trial < retries; ++trial) {
    std::size_t last = np + 1;
    for (std::size_t i = np + 1; i-- > 0;)
      if (!track[i].done) {
        last = i;
        break;
      }
    if (last == np + 1) break;

    const PointSample sample = sample_points(spec.dim(), last, field, mix_seed(seed, static_cast<std::uint64_t>(trial)));
    gf::EchelonBasis basis(field, builder.cols());
    for (std::size_t i = 0; i < last; ++i) {
      if (!basis.full())
        builder.emit(builder.standard_point(sample.points[i]), mults[i],
                     [&](std::span<const std::uint32_t> row) { basis.insert(row); });
      rank_after[i + 1] = static_cast<std::int64_t>(basis.rank());
    }

    for (std::size_t i = 0; i <= last; ++i) {
      auto& t = track[i];
      if (t.done) continue;
      const std::int64_t computed = top - rank_after[i];
      if (computed < reports[i].expected)
        throw std::logic_error("computed dimension below expected dimension");
      ++reports[i].trials;
      if (reports[i].trials == 1) t.first = computed;
      if (computed != t.first) t.agree = false;
      t.best = std::min(t.best, computed);
      if (computed == reports[i].expected) t.done = true;
    }
  }

  for (std::size_t i = 0; i <= np; ++i) {
    reports[i].computed = track[i].best;
    if (track[i].done)
      reports[i].status = DimStatus::NonSpecial;
    else
      reports[i].status = track[i].agree ? DimStatus::SpecialCandidate : DimStatus::Inconclusive;
  }
  return reports;
}

DimReport dim_linear_system(const LinearSystemSpec& spec, std::uint64_t seed, int retries,
                            const gf::PrimeField& field) {
  if (retries < 1) throw std::invalid_argument("retries must be at least 1");
  const auto mults = spec.points().multiplicities();
  for (int m : mults)
    if (m < 1) throw std::invalid_argument("multiplicity must be positive");

  DimReport report;
  report.virtual_dim = virtual_dimension(spec);
  report.expected = expected_dimension(spec);
  report.seed = seed;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::int64_t first = 0;
  bool agree = true;
  for (int trial = 0; trial < retries; ++trial) {
    const PointSample sample =
        sample_points(spec.dim(), mults.size(), field, mix_seed(seed, static_cast<std::uint64_t>(trial)));
    const std::int64_t computed = dim_at_sample(spec, sample, field);
    if (computed < report.expected) throw std::logic_error("computed dimension below expected dimension");
    ++report.trials;
    if (trial == 0) first = computed;
    if (computed != first) agree = false;
    best = std::min(best, computed);
    if (computed == report.expected) {
      report.computed = computed;
      report.status = DimStatus::NonSpecial;
      return report;
    }
  }
  report.computed = best;
  report.status = agree ? DimStatus::SpecialCandidate : DimStatus::Inconclusive;
  return report;
}

gf::Matrix terracini_matrix(const MultiDegree& deg, const PointSample& sample, const gf::PrimeField& field) {
  const auto n = static_cast<std::int64_t>(sample.points.size());
  const auto spec = LinearSystemSpec::product_of_lines(deg, FatPointSpec::doubles(n));
  RowBuilder builder(spec, field);
  const std::size_t per_point = deg.size() + 1;
  gf::Matrix m(builder.cols(), sample.points.size() * per_point, field.modulus());
  std::size_t col = 0;
  for (const auto& pt : sample.points) {
    builder.emit(builder.standard_point(pt), 2, [&](std::span<const std::uint32_t> vec) {
      for (std::size_t i = 0; i < vec.size(); ++i) m.row(i)[col] = vec[i];
      ++col;
    });
  }
  return m;
}

std::int64_t secant_dimension_at(const MultiDegree& deg, const PointSample& sample, const gf::PrimeField& field) {
  return static_cast<std::int64_t>(gf::rank(terracini_matrix(deg, sample, field))) - 1;
}

SecantReport secant_dimension(const MultiDegree& deg, std::int64_t n, std::uint64_t seed, int retries,
                              const gf::PrimeField& field) {
  if (n < 1) throw std::invalid_argument("secant order must be at least 1");
  if (retries < 1) throw std::invalid_argument("retries must be at least 1");
  const auto r = static_cast<std::int64_t>(deg.size());
  SecantReport report;
  report.seed = seed;
  report.expected_secant_dim = std::min(n * r + n - 1, deg.projective_dim());
  report.secant_dim = -1;
  for (int trial = 0; trial < retries; ++trial) {
    const PointSample sample = sample_points(static_cast<int>(r), static_cast<std::size_t>(n), field,
                                             mix_seed(seed, static_cast<std::uint64_t>(trial)));
    report.secant_dim = std::max(report.secant_dim, secant_dimension_at(deg, sample, field));
    ++report.trials;
    if (report.secant_dim == report.expected_secant_dim) break;
  }
  report.defective = report.secant_dim < report.expected_secant_dim;
  return report;
}

}  // namespace segver::interp
