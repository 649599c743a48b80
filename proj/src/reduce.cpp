#include "segver/reduce.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace segver::reduce {

LinearSystemSpec to_projective(const LinearSystemSpec& spec) {
  if (spec.ambient() != AmbientKind::ProductOfLines)
    throw UnsupportedReduction("to_projective needs a product of lines");
  for (const auto& e : spec.points().entries())
    if (e.multiplicity != 2)
      throw UnsupportedReduction("to_projective supports double points only, got multiplicity " +
                                 std::to_string(e.multiplicity));
  const int d = spec.degrees().sum();
  std::vector<FatPoints> entries;
  for (int di : spec.degrees().values())
    if (d - di > 0) entries.push_back({d - di, 1});
  for (const auto& e : spec.points().entries()) entries.push_back(e);
  return LinearSystemSpec::projective_space(spec.dim(), d, FatPointSpec(std::move(entries)));
}

namespace {

void require_choice(const LinearSystemSpec& spec, const std::vector<std::size_t>& chosen) {
  if (spec.ambient() != AmbientKind::ProjectiveSpace)
    throw UnsupportedReduction("Cremona reduction needs projective space");
  const auto need = static_cast<std::size_t>(spec.dim()) + 1;
  const auto count = static_cast<std::size_t>(spec.points().point_count());
  if (count < need)
    throw ReductionNotApplicable("need " + std::to_string(need) + " points, have " + std::to_string(count));
  if (chosen.size() != need)
    throw std::invalid_argument("choose exactly " + std::to_string(need) + " points");
  std::set<std::size_t> distinct(chosen.begin(), chosen.end());
  if (distinct.size() != chosen.size()) throw std::invalid_argument("chosen point indices repeat");
  if (*distinct.rbegin() >= count) throw std::invalid_argument("chosen point index out of range");
}

}  // namespace

std::int64_t cremona_shift(const LinearSystemSpec& spec, const std::vector<std::size_t>& chosen) {
  require_choice(spec, chosen);
  const auto mults = spec.points().multiplicities();
  std::int64_t k = static_cast<std::int64_t>(spec.dim() - 1) * spec.degree();
  for (auto i : chosen) k -= mults[i];
  return k;
}

LinearSystemSpec cremona_reduce(const LinearSystemSpec& spec, const std::vector<std::size_t>& chosen) {
  const std::int64_t k = cremona_shift(spec, chosen);
  auto mults = spec.points().multiplicities();
  if (spec.degree() + k < 0)
    throw ReductionNotApplicable("degree would become " + std::to_string(spec.degree() + k));
  for (auto i : chosen) {
    if (mults[i] + k < 0) throw ReductionNotApplicable("multiplicity would become " + std::to_string(mults[i] + k));
    mults[i] += static_cast<int>(k);
  }
  std::vector<int> kept;
  std::copy_if(mults.begin(), mults.end(), std::back_inserter(kept), [](int m) { return m != 0; });
  return LinearSystemSpec::projective_space(spec.dim(), spec.degree() + static_cast<int>(k),
                                            FatPointSpec::from_multiplicities(kept));
}

std::vector<std::size_t> largest_multiplicities(const LinearSystemSpec& spec) {
  const auto mults = spec.points().multiplicities();
  const auto need = static_cast<std::size_t>(spec.dim()) + 1;
  if (mults.size() < need) return {};
  std::vector<std::size_t> idx(mults.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return mults[a] > mults[b]; });
  idx.resize(need);
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<LinearSystemSpec> greedy_cremona_chain(const LinearSystemSpec& spec) {
  if (spec.ambient() != AmbientKind::ProjectiveSpace)
    throw UnsupportedReduction("Cremona reduction needs projective space");
  std::vector<LinearSystemSpec> chain{spec};
  while (true) {
    const auto chosen = largest_multiplicities(chain.back());
    if (chosen.empty()) break;
    if (cremona_shift(chain.back(), chosen) >= 0) break;
    try {
      chain.push_back(cremona_reduce(chain.back(), chosen));
    } catch (const ReductionNotApplicable&) {
      break;
    }
  }
  return chain;
}

}  // namespace segver::reduce
