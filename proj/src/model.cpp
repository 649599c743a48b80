#include "segver/model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace segver {

namespace {

constexpr std::int64_t kCountLimit = std::int64_t{1} << 62;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  if (a != 0 && b > kCountLimit / a) throw std::overflow_error("section count overflow");
  return a * b;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

MultiDegree::MultiDegree(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw std::invalid_argument("multi-degree needs at least one factor");
  for (int d : degrees_)
    if (d < 0) throw std::invalid_argument("negative degree in multi-degree");
}

int MultiDegree::sum() const noexcept { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

int MultiDegree::max() const noexcept { return *std::max_element(degrees_.begin(), degrees_.end()); }

std::int64_t MultiDegree::section_count() const {
  std::int64_t n = 1;
  for (int d : degrees_) n = checked_mul(n, d + 1);
  return n;
}

MultiDegree MultiDegree::sorted() const {
  auto v = degrees_;
  std::sort(v.begin(), v.end());
  return MultiDegree(std::move(v));
}

bool MultiDegree::has_zero() const noexcept {
  return std::find(degrees_.begin(), degrees_.end(), 0) != degrees_.end();
}

std::size_t MultiDegree::nonzero_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(degrees_.begin(), degrees_.end(), [](int d) { return d != 0; }));
}

MultiDegree MultiDegree::without_zeros() const {
  std::vector<int> v;
  std::copy_if(degrees_.begin(), degrees_.end(), std::back_inserter(v), [](int d) { return d != 0; });
  if (v.empty()) throw std::invalid_argument("all degrees are zero");
  return MultiDegree(std::move(v));
}

std::string MultiDegree::to_string() const { return "(" + join(degrees_) + ")"; }

FatPointSpec::FatPointSpec(std::vector<FatPoints> entries) {
  for (const auto& e : entries) {
    if (e.multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
    if (e.count < 0) throw std::invalid_argument("negative point count");
    if (e.count == 0) continue;
    if (!entries_.empty() && entries_.back().multiplicity == e.multiplicity)
      entries_.back().count += e.count;
    else
      entries_.push_back(e);
  }
}

FatPointSpec FatPointSpec::doubles(std::int64_t n) { return FatPointSpec({{2, n}}); }

FatPointSpec FatPointSpec::from_multiplicities(const std::vector<int>& mults) {
  std::vector<FatPoints> entries;
  for (int m : mults) entries.push_back({m, 1});
  return FatPointSpec(std::move(entries));
}

std::vector<int> FatPointSpec::multiplicities() const {
  std::vector<int> out;
  for (const auto& e : entries_) out.insert(out.end(), static_cast<std::size_t>(e.count), e.multiplicity);
  return out;
}

std::int64_t FatPointSpec::point_count() const noexcept {
  std::int64_t n = 0;
  for (const auto& e : entries_) n += e.count;
  return n;
}

std::int64_t FatPointSpec::count_of(int multiplicity) const noexcept {
  std::int64_t n = 0;
  for (const auto& e : entries_)
    if (e.multiplicity == multiplicity) n += e.count;
  return n;
}

int FatPointSpec::max_multiplicity() const noexcept {
  int m = 0;
  for (const auto& e : entries_) m = std::max(m, e.multiplicity);
  return m;
}

std::int64_t FatPointSpec::condition_count(int dim) const {
  std::int64_t total = 0;
  for (const auto& e : entries_) {
    if (e.multiplicity == 0) continue;
    total += checked_mul(e.count, binomial(e.multiplicity - 1 + dim, dim));
  }
  return total;
}

FatPointSpec FatPointSpec::canonical() const {
  auto mults = multiplicities();
  std::sort(mults.begin(), mults.end(), std::greater<>());
  return from_multiplicities(mults);
}

std::string FatPointSpec::to_string() const {
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.multiplicity);
    if (e.count != 1) out += '^' + std::to_string(e.count);
  }
  return out;
}

std::string_view to_string(AmbientKind kind) {
  return kind == AmbientKind::ProductOfLines ? "product_of_lines" : "projective_space";
}

LinearSystemSpec::LinearSystemSpec(AmbientKind ambient, int dim, MultiDegree degrees, FatPointSpec points)
    : ambient_(ambient), dim_(dim), degrees_(std::move(degrees)), points_(std::move(points)) {}

LinearSystemSpec LinearSystemSpec::product_of_lines(MultiDegree degrees, FatPointSpec points) {
  const int r = static_cast<int>(degrees.size());
  return LinearSystemSpec(AmbientKind::ProductOfLines, r, std::move(degrees), std::move(points));
}

LinearSystemSpec LinearSystemSpec::projective_space(int dim, int degree, FatPointSpec points) {
  if (dim < 1) throw std::invalid_argument("projective space dimension must be positive");
  return LinearSystemSpec(AmbientKind::ProjectiveSpace, dim, MultiDegree({degree}), std::move(points));
}

int LinearSystemSpec::degree() const {
  if (ambient_ != AmbientKind::ProjectiveSpace) throw std::logic_error("degree() on a product of lines");
  return degrees_[0];
}

std::int64_t LinearSystemSpec::section_count() const {
  if (ambient_ == AmbientKind::ProductOfLines) return degrees_.section_count();
  return binomial(degrees_[0] + dim_, dim_);
}

LinearSystemSpec LinearSystemSpec::with_points(FatPointSpec points) const {
  LinearSystemSpec copy = *this;
  copy.points_ = std::move(points);
  return copy;
}

bool LinearSystemSpec::equivalent(const LinearSystemSpec& other) const {
  return ambient_ == other.ambient_ && dim_ == other.dim_ && degrees_ == other.degrees_ &&
         points_.canonical() == other.points_.canonical();
}

std::string LinearSystemSpec::to_string() const {
  const std::string pts = points_.canonical().to_string();
  if (ambient_ == AmbientKind::ProductOfLines) return "L_" + degrees_.to_string() + "(" + pts + ")";
  return "L_" + std::to_string(degrees_[0]) + "(" + pts + ") on P^" + std::to_string(dim_);
}

std::string_view to_string(DimStatus status) {
  switch (status) {
    case DimStatus::NonSpecial: return "NonSpecial";
    case DimStatus::SpecialCandidate: return "SpecialCandidate";
    case DimStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i at every step.
    const std::int64_t num = n - k + i;
    const std::int64_t g = std::gcd(result, i);
    result = checked_mul(result / g, num / (i / g));
  }
  return result;
}

std::vector<std::vector<int>> monomial_basis(const MultiDegree& deg) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(deg.section_count()));
  std::vector<int> e(deg.size(), 0);
  while (true) {
    out.push_back(e);
    std::size_t i = deg.size();
    while (i > 0 && e[i - 1] == deg[i - 1]) e[--i] = 0;
    if (i == 0) break;
    ++e[i - 1];
  }
  return out;
}

namespace {

void bounded_exponents(std::vector<int>& e, std::size_t pos, int remaining,
                       std::vector<std::vector<int>>& out) {
  for (int v = 0; v <= remaining; ++v) {
    e[pos] = v;
    if (pos + 1 == e.size())
      out.push_back(e);
    else
      bounded_exponents(e, pos + 1, remaining - v, out);
  }
  e[pos] = 0;
}

}  // namespace

std::vector<std::vector<int>> monomial_basis(const LinearSystemSpec& spec) {
  if (spec.ambient() == AmbientKind::ProductOfLines) return monomial_basis(spec.degrees());
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(spec.section_count()));
  std::vector<int> e(static_cast<std::size_t>(spec.dim()), 0);
  bounded_exponents(e, 0, spec.degree(), out);
  return out;
}

std::int64_t virtual_dimension(const LinearSystemSpec& spec) {
  return spec.section_count() - 1 - spec.condition_count();
}

std::int64_t expected_dimension(const LinearSystemSpec& spec) {
  return std::max<std::int64_t>(virtual_dimension(spec), -1);
}

std::int64_t normalized_expected_dimension(const LinearSystemSpec& spec) {
  if (spec.ambient() != AmbientKind::ProductOfLines || !spec.degrees().has_zero())
    return expected_dimension(spec);
  const int effective_dim = static_cast<int>(spec.degrees().nonzero_count());
  const std::int64_t conditions = spec.points().condition_count(effective_dim);
  return std::max<std::int64_t>(spec.section_count() - 1 - conditions, -1);
}

CriticalRange critical_range(const MultiDegree& deg) {
  const std::int64_t n = deg.section_count();
  const std::int64_t q = static_cast<std::int64_t>(deg.size()) + 1;
  return {n / q, (n + q - 1) / q};
}

}  // namespace segver
