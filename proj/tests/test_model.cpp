#include <algorithm>

#include "doctest.h"
#include "segver/model.hpp"

using namespace segver;

namespace {

LinearSystemSpec doubles(std::vector<int> d, std::int64_t n) {
  return LinearSystemSpec::product_of_lines(MultiDegree(std::move(d)), FatPointSpec::doubles(n));
}

}  // namespace

TEST_CASE("monomial basis examples") {
  CHECK(monomial_basis(MultiDegree({1, 1})) == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(monomial_basis(MultiDegree({2, 2, 2})).size() == 27);
  CHECK(monomial_basis(MultiDegree({0})) == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("monomial basis is lexicographic and complete") {
  const MultiDegree d({3, 1, 2});
  const auto basis = monomial_basis(d);
  CHECK(basis.size() == 24);
  CHECK(std::is_sorted(basis.begin(), basis.end()));
  CHECK(std::adjacent_find(basis.begin(), basis.end()) == basis.end());
}

TEST_CASE("projective basis has C(d+r, r) monomials") {
  const auto spec = LinearSystemSpec::projective_space(3, 4, FatPointSpec());
  const auto basis = monomial_basis(spec);
  CHECK(basis.size() == 35);
  CHECK(spec.section_count() == 35);
  for (const auto& e : basis) CHECK(e[0] + e[1] + e[2] <= 4);
  CHECK(std::is_sorted(basis.begin(), basis.end()));
}

TEST_CASE("virtual and expected dimension examples") {
  CHECK(virtual_dimension(doubles({2, 2, 2}, 7)) == -2);
  CHECK(virtual_dimension(doubles({1, 1, 1, 1}, 3)) == 0);
  CHECK(virtual_dimension(doubles({3, 5}, 0)) == 23);
  CHECK(expected_dimension(doubles({2, 2, 2}, 7)) == -1);
  CHECK(expected_dimension(doubles({1, 1}, 1)) == 0);
  CHECK(expected_dimension(doubles({2, 4}, 5)) == -1);
  CHECK(virtual_dimension(doubles({2, 4}, 5)) == -1);
}

TEST_CASE("condition count for mixed multiplicities") {
  const FatPointSpec pts({{4, 3}, {2, 7}});
  CHECK(pts.condition_count(3) == 3 * 20 + 7 * 4);
  const auto spec = LinearSystemSpec::projective_space(3, 6, pts);
  CHECK(virtual_dimension(spec) == 84 - 1 - 88);
  CHECK(pts.to_string() == "4^3,2^7");
  CHECK(FatPointSpec::from_multiplicities({2, 4, 2, 4}).canonical() == FatPointSpec({{4, 2}, {2, 2}}));
}

TEST_CASE("virtual dimension of doubles is N - (r+1)n") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 1; c <= 3; ++c)
        for (std::int64_t n = 0; n < 12; ++n) {
          const auto v = virtual_dimension(doubles({a, b, c}, n));
          CHECK(v == (a + 1) * (b + 1) * (c + 1) - 1 - 4 * n);
          CHECK(v == virtual_dimension(doubles({c, a, b}, n)));
          CHECK(v == virtual_dimension(doubles({b, c, a}, n)));
        }
}

TEST_CASE("critical range examples") {
  CHECK(critical_range(MultiDegree({2, 2, 2})) == CriticalRange{6, 7});
  CHECK(critical_range(MultiDegree({1, 1, 1, 1})) == CriticalRange{3, 4});
  CHECK(critical_range(MultiDegree({1, 1})) == CriticalRange{1, 2});
}

TEST_CASE("critical range bounds") {
  for (int r = 1; r <= 5; ++r)
    for (int d = 1; d <= 5; ++d) {
      std::vector<int> degs(static_cast<std::size_t>(r), d);
      degs.back() = d + 1;
      const MultiDegree deg(degs);
      const auto [lo, hi] = critical_range(deg);
      CHECK(lo <= hi);
      CHECK(hi <= lo + 1);
      CHECK(virtual_dimension(doubles(degs, hi)) <= r);
      CHECK(virtual_dimension(doubles(degs, lo)) >= -r);
    }
}

TEST_CASE("zero degrees and normalization") {
  const MultiDegree d({2, 0, 3});
  CHECK(d.has_zero());
  CHECK(d.nonzero_count() == 2);
  CHECK(d.without_zeros() == MultiDegree({2, 3}));
  CHECK_THROWS_AS(MultiDegree({0, 0}).without_zeros(), std::invalid_argument);
  const auto spec = doubles({2, 0, 3}, 2);
  CHECK(normalized_expected_dimension(spec) == 12 - 1 - 6);
  CHECK(expected_dimension(spec) == 12 - 1 - 8);
  CHECK(normalized_expected_dimension(doubles({2, 3}, 2)) == expected_dimension(doubles({2, 3}, 2)));
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(MultiDegree({}), std::invalid_argument);
  CHECK_THROWS_AS(MultiDegree({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(FatPointSpec({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(FatPointSpec({{2, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(MultiDegree(std::vector<int>(70, 1)).section_count(), std::overflow_error);
}

TEST_CASE("spec rendering") {
  CHECK(doubles({2, 2, 2}, 7).to_string() == "L_(2,2,2)(2^7)");
  CHECK(LinearSystemSpec::projective_space(3, 6, FatPointSpec({{4, 3}, {2, 7}})).to_string() ==
        "L_6(4^3,2^7) on P^3");
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
}
