#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "segver/catalect.hpp"

using namespace segver;
using namespace segver::catalect;

namespace {

/// The 8 x 8 display, row by row: (coefficient, z index) pairs.
constexpr int kDisplay[8][8][2] = {
    {{8, 0}, {4, 9}, {4, 3}, {2, 12}, {4, 1}, {2, 10}, {2, 4}, {1, 13}},
    {{4, 1}, {2, 10}, {2, 4}, {1, 13}, {8, 2}, {4, 11}, {4, 5}, {2, 14}},
    {{4, 3}, {2, 12}, {8, 6}, {4, 15}, {2, 4}, {1, 13}, {4, 7}, {2, 16}},
    {{2, 4}, {1, 13}, {4, 7}, {2, 16}, {4, 5}, {2, 14}, {8, 8}, {4, 17}},
    {{4, 9}, {8, 18}, {2, 12}, {4, 21}, {2, 10}, {4, 19}, {1, 13}, {2, 22}},
    {{2, 10}, {4, 19}, {1, 13}, {2, 22}, {4, 11}, {8, 20}, {2, 14}, {4, 23}},
    {{2, 12}, {4, 21}, {4, 15}, {8, 24}, {1, 13}, {2, 22}, {2, 16}, {4, 25}},
    {{1, 13}, {2, 22}, {2, 16}, {4, 25}, {2, 14}, {4, 23}, {4, 17}, {8, 26}},
};

std::vector<std::vector<std::int64_t>> to_rows(const gf::Matrix& m) {
  std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

/// Variables a0 a1 b0 b1 c0 c1; index 0, 1, 2 is x0^2, x0 x1, x1^2.
oracle::Poly form(const Coefficients& z) {
  oracle::Poly f;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const int idx[3] = {a, b, c};
        std::vector<int> e(6, 0);
        for (int t = 0; t < 3; ++t) {
          e[2 * t] = 2 - idx[t];
          e[2 * t + 1] = idx[t];
        }
        f = f + oracle::Poly::monomial(e, z[static_cast<std::size_t>(z_index(a, b, c))]);
      }
  return f;
}

/// Row (i,j,k) holds the coefficients of d^3 f / da_i db_j dc_k on a_i' b_j' c_k'.
std::vector<std::vector<std::int64_t>> differentiated_catalecticant(const Coefficients& z, std::int64_t p) {
  const auto f = form(z);
  std::vector<std::vector<std::int64_t>> m(8, std::vector<std::int64_t>(8, 0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const auto g = f.derivative(static_cast<std::size_t>(i)).derivative(static_cast<std::size_t>(2 + j)).derivative(
            static_cast<std::size_t>(4 + k));
        for (int x = 0; x < 2; ++x)
          for (int y = 0; y < 2; ++y)
            for (int w = 0; w < 2; ++w) {
              std::vector<int> e(6, 0);
              e[static_cast<std::size_t>(x)] = 1;
              e[static_cast<std::size_t>(2 + y)] = 1;
              e[static_cast<std::size_t>(4 + w)] = 1;
              const auto it = g.terms.find(e);
              m[row_index(i, j, k)][col_index(x, y, w)] = it == g.terms.end() ? 0 : oracle::mod(it->second, p);
            }
      }
  return m;
}

Coefficients unit(std::size_t i) {
  Coefficients z{};
  z[i] = 1;
  return z;
}

}  // namespace

TEST_CASE("symbolic matrix matches the display") {
  const auto s = symbolic_catalecticant();
  for (std::size_t r = 0; r < kSize; ++r)
    for (std::size_t c = 0; c < kSize; ++c) {
      CAPTURE(r);
      CAPTURE(c);
      CHECK(s[r][c] == SymbolicEntry{kDisplay[r][c][0], kDisplay[r][c][1]});
    }
}

TEST_CASE("catalecticant matches explicit differentiation") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto z = random_coefficients(rng());
    CHECK(to_rows(catalecticant(z)) == differentiated_catalecticant(z, 307));
  }
}

TEST_CASE("catalecticant examples") {
  const auto m = catalecticant(unit(0));
  for (std::size_t r = 0; r < kSize; ++r)
    for (std::size_t c = 0; c < kSize; ++c) CHECK(m(r, c) == (r == 0 && c == 0 ? 8u : 0u));
  CHECK(catalecticant(Coefficients{}) == gf::Matrix(8, 8));

  Coefficients two{};
  two[0] = 1;
  two[26] = 1;
  CHECK(oracle::rank(to_rows(catalecticant(two)), 307) == 2);
  CHECK(gf::rank(catalecticant(two)) == 2);
}

TEST_CASE("power coefficients") {
  CHECK(power_coefficients({1, 0}, {1, 0}, {1, 0}) == unit(0));
  CHECK(power_coefficients({0, 1}, {0, 1}, {0, 1}) == unit(26));
  Coefficients expect{};
  expect[0] = 1;
  expect[1] = 2;
  expect[2] = 1;
  CHECK(power_coefficients({1, 1}, {1, 0}, {1, 0}) == expect);
  // Against the expanded polynomial (a0 + 2 a1)^2 (3 b0 - b1)^2 (c0 + 5 c1)^2.
  const auto z = power_coefficients({1, 2}, {3, -1}, {1, 5});
  CHECK(z[z_index(0, 0, 0)] == 9);
  CHECK(z[z_index(1, 1, 1)] == oracle::mod(4 * -6 * 10, 307));
  CHECK(z[z_index(2, 2, 2)] == 4 * 25);
}

TEST_CASE("secant membership") {
  int zero = 0;
  for (std::uint64_t s = 0; s < 100; ++s) zero += secant_membership_test(random_secant_sample(7, s));
  CHECK(zero == 100);
  CHECK(secant_membership_test(power_coefficients({2, 3}, {1, 7}, {5, 1})));
  int nonzero = 0;
  for (std::uint64_t s = 0; s < 100; ++s) nonzero += !secant_membership_test(random_coefficients(1000 + s));
  CHECK(nonzero >= 97);
}

TEST_CASE("rank of s-term sums") {
  for (int s = 1; s <= 8; ++s) {
    int hits = 0;
    for (std::uint64_t t = 0; t < 100; ++t)
      hits += oracle::rank(to_rows(catalecticant(random_secant_sample(s, 7919 * s + t))), 307) ==
              static_cast<std::size_t>(std::min(s, 8));
    CAPTURE(s);
    CHECK(hits >= 95);
  }
}

TEST_CASE("bilinearity") {
  const gf::PrimeField f;
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const auto z = random_coefficients(rng()), w = random_coefficients(rng());
    const std::uint32_t lambda = static_cast<std::uint32_t>(rng() % 307);
    Coefficients sum{}, scaled{};
    for (std::size_t i = 0; i < kCoefficients; ++i) {
      sum[i] = f.add(z[i], w[i]);
      scaled[i] = f.mul(lambda, z[i]);
    }
    const auto mz = catalecticant(z), mw = catalecticant(w), ms = catalecticant(sum), ml = catalecticant(scaled);
    for (std::size_t r = 0; r < kSize; ++r)
      for (std::size_t c = 0; c < kSize; ++c) {
        CHECK(ms(r, c) == f.add(mz(r, c), mw(r, c)));
        CHECK(ml(r, c) == f.mul(lambda, mz(r, c)));
      }
  }
}

TEST_CASE("rational and modular computations agree") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    RationalCoefficients q;
    Coefficients z{};
    for (std::size_t i = 0; i < kCoefficients; ++i) {
      const std::int64_t v = static_cast<std::int64_t>(rng() % 21) - 10;
      q[i] = v;
      z[i] = static_cast<std::uint32_t>(oracle::mod(v, 307));
    }
    const auto rm = catalecticant(q);
    const auto sym = symbolic_catalecticant();
    for (std::size_t r = 0; r < kSize; ++r)
      for (std::size_t c = 0; c < kSize; ++c) CHECK(rm[r][c] == sym[r][c].coefficient * q[static_cast<std::size_t>(sym[r][c].z_index)]);
    const Rational d = determinant(q);
    REQUIRE(boost::multiprecision::denominator(d) == 1);
    const boost::multiprecision::cpp_int num = boost::multiprecision::numerator(d) % 307;
    CHECK(oracle::mod(static_cast<std::int64_t>(num), 307) == determinant(z));
  }
  // Integer 7-term sums vanish exactly.
  RationalCoefficients q{};
  for (int i = 1; i <= 7; ++i) {
    const auto z = power_coefficients({i, 1}, {1, 2 * i - 5}, {3, i * i - 9}, gf::PrimeField(1000003));
    // Small forms keep every coefficient far below the modulus, but signs wrap: undo that.
    for (std::size_t k = 0; k < kCoefficients; ++k)
      q[k] += z[k] > 500000 ? Rational(static_cast<std::int64_t>(z[k]) - 1000003) : Rational(z[k]);
  }
  CHECK(determinant(q) == 0);
  CHECK(secant_membership_test(q));
  RationalCoefficients generic;
  for (std::size_t k = 0; k < kCoefficients; ++k) generic[k] = Rational(static_cast<int>(k * k % 13) + 1, 3);
  CHECK_FALSE(secant_membership_test(generic));
}

TEST_CASE("characteristic two is rejected") {
  const std::array<std::uint32_t, kCoefficients> z{};
  CHECK_THROWS_AS(catalecticant(z, gf::PrimeField(2)), std::invalid_argument);
  CHECK_THROWS_AS(catalecticant(std::span<const std::uint32_t>(z.data(), 5)), std::invalid_argument);
}
