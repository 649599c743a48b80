#include <random>

#include "doctest.h"
#include "segver/interp.hpp"
#include "segver/reduce.hpp"

using namespace segver;
using namespace segver::reduce;

namespace {

LinearSystemSpec doubles(std::vector<int> d, std::int64_t n) {
  return LinearSystemSpec::product_of_lines(MultiDegree(std::move(d)), FatPointSpec::doubles(n));
}

LinearSystemSpec proj(int dim, int degree, std::vector<int> mults) {
  return LinearSystemSpec::projective_space(dim, degree, FatPointSpec::from_multiplicities(mults));
}

/// Virtual dimension of L_d(m_1..m_s) on P^r written out by hand.
std::int64_t projective_virtual(int r, int d, const std::vector<int>& mults) {
  std::int64_t v = binomial(d + r, r) - 1;
  for (int m : mults) v -= binomial(m - 1 + r, r);
  return v;
}

}  // namespace

TEST_CASE("to_projective examples") {
  CHECK(to_projective(doubles({2, 2, 2}, 7)).equivalent(proj(3, 6, {4, 4, 4, 2, 2, 2, 2, 2, 2, 2})));
  CHECK(to_projective(doubles({1, 1, 1, 1}, 3)).equivalent(proj(4, 4, {3, 3, 3, 3, 2, 2, 2})));
  CHECK(to_projective(doubles({2, 2}, 3)).equivalent(proj(2, 4, {2, 2, 2, 2, 2})));
  // The extra points come first.
  const auto image = to_projective(doubles({1, 3}, 2));
  CHECK(image.points().multiplicities() == std::vector<int>{3, 1, 2, 2});
  CHECK(image.degree() == 4);
  CHECK_THROWS_AS(to_projective(LinearSystemSpec::product_of_lines(MultiDegree({2, 2}), FatPointSpec({{3, 1}}))),
                  UnsupportedReduction);
  CHECK_THROWS_AS(to_projective(proj(2, 4, {2})), UnsupportedReduction);
}

TEST_CASE("to_projective image has the stated virtual dimension") {
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = 1; c <= 2; ++c)
        for (std::int64_t n = 0; n <= 8; ++n) {
          const auto image = to_projective(doubles({a, b, c}, n));
          const int d = a + b + c;
          std::vector<int> mults{d - a, d - b, d - c};
          for (std::int64_t i = 0; i < n; ++i) mults.push_back(2);
          CHECK(virtual_dimension(image) == projective_virtual(3, d, mults));
        }
}

TEST_CASE("cremona examples") {
  const auto start = proj(3, 6, {4, 4, 4, 2, 2, 2, 2, 2, 2, 2});
  CHECK(cremona_shift(start, {0, 1, 2, 3}) == -2);
  CHECK(cremona_reduce(start, {0, 1, 2, 3}).equivalent(proj(3, 4, {2, 2, 2, 2, 2, 2, 2, 2, 2})));

  const auto p2 = proj(2, 8, {6, 2, 2, 2, 2, 2, 2, 2, 2});
  CHECK(cremona_shift(p2, {0, 1, 2}) == -2);
  CHECK(cremona_reduce(p2, {0, 1, 2}).equivalent(proj(2, 6, {4, 2, 2, 2, 2, 2, 2})));

  // (n-1)d equal to the chosen sum leaves the system alone.
  const auto fixed = proj(2, 4, {2, 1, 1, 3});
  CHECK(cremona_shift(fixed, {0, 1, 2}) == 0);
  CHECK(cremona_reduce(fixed, {0, 1, 2}) == fixed);
}

TEST_CASE("cremona preconditions") {
  const auto spec = proj(2, 2, {2, 2});
  CHECK_THROWS_AS(cremona_reduce(spec, {0, 1}), ReductionNotApplicable);
  CHECK_THROWS_AS(cremona_reduce(proj(2, 2, {2, 2, 1}), {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cremona_reduce(proj(2, 2, {2, 2, 1}), {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cremona_reduce(proj(2, 2, {2, 2, 1}), {0, 1, 5}), std::invalid_argument);
  CHECK_THROWS_AS(cremona_reduce(doubles({1, 1}, 3), {0, 1, 2}), UnsupportedReduction);
  // k = 2 - 5 = -3 drives the simple point negative.
  CHECK_THROWS_AS(cremona_reduce(proj(2, 2, {2, 2, 1}), {0, 1, 2}), ReductionNotApplicable);
}

TEST_CASE("cremona is an involution") {
  std::mt19937_64 rng(5);
  int applied = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int d = 2 + static_cast<int>(rng() % 7);
    std::vector<int> mults;
    const int count = n + 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) mults.push_back(1 + static_cast<int>(rng() % d));
    const auto spec = proj(n, d, mults);
    std::vector<std::size_t> chosen;
    for (int i = 0; i <= n; ++i) chosen.push_back(static_cast<std::size_t>(i));
    try {
      const auto once = cremona_reduce(spec, chosen);
      // Only compare when no point was dropped, so indices still line up.
      if (once.points().point_count() != spec.points().point_count()) continue;
      CHECK(cremona_shift(once, chosen) == -cremona_shift(spec, chosen));
      CHECK(cremona_reduce(once, chosen) == spec);
      ++applied;
    } catch (const ReductionNotApplicable&) {
    }
  }
  CHECK(applied > 50);
}

TEST_CASE("largest multiplicities break ties by index") {
  CHECK(largest_multiplicities(proj(2, 6, {2, 4, 2, 4, 3})) == std::vector<std::size_t>{1, 3, 4});
  CHECK(largest_multiplicities(proj(2, 6, {2, 2, 2, 2})) == std::vector<std::size_t>{0, 1, 2});
  CHECK(largest_multiplicities(proj(3, 6, {2, 2})).empty());
}

TEST_CASE("greedy chains") {
  const auto a = greedy_cremona_chain(proj(3, 6, {4, 4, 4, 2, 2, 2, 2, 2, 2, 2}));
  REQUIRE(a.size() == 2);
  CHECK(a.back().equivalent(proj(3, 4, {2, 2, 2, 2, 2, 2, 2, 2, 2})));

  const auto b = greedy_cremona_chain(proj(4, 4, {3, 3, 3, 3, 2, 2, 2}));
  REQUIRE(b.size() == 3);
  CHECK(b[1].equivalent(proj(4, 2, {2, 2, 1, 1, 1, 1})));
  CHECK(b[2].equivalent(proj(4, 1, {1, 1, 1})));

  const auto c = greedy_cremona_chain(proj(2, 2, {2, 2}));
  CHECK(c.size() == 1);
}

TEST_CASE("reductions preserve dimension on the displayed chains") {
  for (const auto& start :
       {to_projective(doubles({2, 2, 2}, 7)), to_projective(doubles({1, 1, 1, 1}, 3)), to_projective(doubles({2, 4}, 5)),
        to_projective(doubles({1, 1, 4}, 5))}) {
    const auto chain = greedy_cremona_chain(start);
    for (const auto& spec : chain) {
      CAPTURE(spec.to_string());
      CHECK(interp::dim_linear_system(spec).computed == interp::dim_linear_system(chain.front()).computed);
    }
  }
}
