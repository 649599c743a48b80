#include "segver/catalect.hpp"

#include <random>
#include <stdexcept>

#include "segver/seeding.hpp"

namespace segver::catalect {

namespace {

template <class F>
void for_each_entry(F&& f) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int i2 = 0; i2 < 2; ++i2)
          for (int j2 = 0; j2 < 2; ++j2)
            for (int k2 = 0; k2 < 2; ++k2) {
              const int w = (i == i2 ? 2 : 1) * (j == j2 ? 2 : 1) * (k == k2 ? 2 : 1);
              f(row_index(i, j, k), col_index(i2, j2, k2), SymbolicEntry{w, z_index(i + i2, j + j2, k + k2)});
            }
}

void require_size(std::span<const std::uint32_t> z) {
  if (z.size() != kCoefficients) throw std::invalid_argument("expected 27 coefficients");
}

void require_odd(const gf::PrimeField& field) {
  if (field.modulus() == 2) throw std::invalid_argument("characteristic 2 is not supported");
}

}  // namespace

SymbolicMatrix symbolic_catalecticant() {
  SymbolicMatrix m{};
  for_each_entry([&](std::size_t r, std::size_t c, SymbolicEntry e) { m[r][c] = e; });
  return m;
}

gf::Matrix catalecticant(std::span<const std::uint32_t> z, const gf::PrimeField& field) {
  require_size(z);
  require_odd(field);
  gf::Matrix m(kSize, kSize, field.modulus());
  for_each_entry([&](std::size_t r, std::size_t c, SymbolicEntry e) {
    m.set(r, c, static_cast<std::int64_t>(field.mul(static_cast<std::uint32_t>(e.coefficient),
                                                     field.reduce(z[static_cast<std::size_t>(e.z_index)]))));
  });
  return m;
}

RationalMatrix catalecticant(const RationalCoefficients& z) {
  RationalMatrix m;
  for_each_entry([&](std::size_t r, std::size_t c, SymbolicEntry e) {
    m[r][c] = z[static_cast<std::size_t>(e.z_index)] * e.coefficient;
  });
  return m;
}

std::uint32_t determinant(std::span<const std::uint32_t> z, const gf::PrimeField& field) {
  return gf::determinant(catalecticant(z, field));
}

Rational determinant(const RationalCoefficients& z) {
  RationalMatrix m = catalecticant(z);
  Rational det = 1;
  for (std::size_t col = 0; col < kSize; ++col) {
    std::size_t pivot = col;
    while (pivot < kSize && m[pivot][col] == 0) ++pivot;
    if (pivot == kSize) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < kSize; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < kSize; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

bool secant_membership_test(std::span<const std::uint32_t> z, const gf::PrimeField& field) {
  return determinant(z, field) == 0;
}

bool secant_membership_test(const RationalCoefficients& z) { return determinant(z) == 0; }

Coefficients power_coefficients(const LinearForm& a, const LinearForm& b, const LinearForm& c,
                                const gf::PrimeField& field) {
  // (x_0 u + x_1 v)^2 = u^2 x_0^2 + 2uv x_0 x_1 + v^2 x_1^2
  const auto square = [&](const LinearForm& l) {
    const std::uint32_t u = field.reduce(l[0]);
    const std::uint32_t v = field.reduce(l[1]);
    return std::array<std::uint32_t, 3>{field.mul(u, u), field.mul(field.reduce(2), field.mul(u, v)), field.mul(v, v)};
  };
  const auto A = square(a), B = square(b), C = square(c);
  Coefficients z{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        z[static_cast<std::size_t>(z_index(i, j, k))] =
            field.mul(field.mul(A[static_cast<std::size_t>(i)], B[static_cast<std::size_t>(j)]),
                      C[static_cast<std::size_t>(k)]);
  return z;
}

Coefficients random_secant_sample(int s, std::uint64_t seed, const gf::PrimeField& field) {
  if (s < 0) throw std::invalid_argument("negative number of terms");
  std::mt19937_64 rng(seed);
  Coefficients z{};
  for (int t = 0; t < s; ++t) {
    LinearForm f[3];
    for (auto& l : f) l = {uniform_residue(rng, field.modulus()), uniform_residue(rng, field.modulus())};
    const auto term = power_coefficients(f[0], f[1], f[2], field);
    for (std::size_t m = 0; m < kCoefficients; ++m) z[m] = field.add(z[m], term[m]);
  }
  return z;
}

Coefficients random_coefficients(std::uint64_t seed, const gf::PrimeField& field) {
  std::mt19937_64 rng(seed);
  Coefficients z{};
  for (auto& x : z) x = uniform_residue(rng, field.modulus());
  return z;
}

}  // namespace segver::catalect
