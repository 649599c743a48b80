#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>

#include "segver/gf.hpp"

namespace segver::catalect {

/// f = sum z_m a^{(i)} b^{(j)} c^{(k)} with m = i + 3j + 9k, where index 0, 1, 2
/// stands for x_0^2, x_0 x_1, x_1^2 in each factor.
inline constexpr std::size_t kCoefficients = 27;
inline constexpr std::size_t kSize = 8;

using Coefficients = std::array<std::uint32_t, kCoefficients>;
using Rational = boost::multiprecision::cpp_rational;
using RationalCoefficients = std::array<Rational, kCoefficients>;
using RationalMatrix = std::array<std::array<Rational, kSize>, kSize>;

constexpr int z_index(int a, int b, int c) noexcept { return a + 3 * b + 9 * c; }

/// Row of the dual monomial a_i* b_j* c_k*.
constexpr std::size_t row_index(int i, int j, int k) noexcept { return static_cast<std::size_t>(i + 2 * j + 4 * k); }
/// Column of the monomial a_i b_j c_k.
constexpr std::size_t col_index(int i, int j, int k) noexcept { return static_cast<std::size_t>(4 * i + 2 * j + k); }

/// One entry: coefficient * z[z_index].
struct SymbolicEntry {
  int coefficient;
  int z_index;
  bool operator==(const SymbolicEntry&) const = default;
};

using SymbolicMatrix = std::array<std::array<SymbolicEntry, kSize>, kSize>;

/// The catalecticant with z left symbolic. Each factor contributes 2 when the
/// row and column indices agree (x_i^2 differentiated twice) and 1 otherwise.
SymbolicMatrix symbolic_catalecticant();

/// Over F_p; p = 2 is rejected.
gf::Matrix catalecticant(std::span<const std::uint32_t> z, const gf::PrimeField& field = gf::PrimeField());
RationalMatrix catalecticant(const RationalCoefficients& z);

std::uint32_t determinant(std::span<const std::uint32_t> z, const gf::PrimeField& field = gf::PrimeField());
Rational determinant(const RationalCoefficients& z);

/// True iff the determinant vanishes: a necessary condition for f to lie on
/// the 7-secant variety.
bool secant_membership_test(std::span<const std::uint32_t> z, const gf::PrimeField& field = gf::PrimeField());
bool secant_membership_test(const RationalCoefficients& z);

/// A linear form x_0 coefficient, x_1 coefficient.
using LinearForm = std::array<std::int64_t, 2>;

/// Coefficients of a^2 b^2 c^2.
Coefficients power_coefficients(const LinearForm& a, const LinearForm& b, const LinearForm& c,
                                const gf::PrimeField& field = gf::PrimeField());

/// Sum of s terms a_i^2 b_i^2 c_i^2 with uniformly random forms.
Coefficients random_secant_sample(int s, std::uint64_t seed, const gf::PrimeField& field = gf::PrimeField());

/// Uniformly random coefficient vector.
Coefficients random_coefficients(std::uint64_t seed, const gf::PrimeField& field = gf::PrimeField());

}  // namespace segver::catalect
