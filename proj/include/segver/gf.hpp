#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace segver::gf {

inline constexpr std::uint32_t kDefaultPrime = 307;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_prime(std::uint64_t n) noexcept;

/// Arithmetic in F_p for a prime p < 2^31. Products are formed in 64 bits
/// before reduction.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t x) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    auto r = x % m;
    return static_cast<std::uint32_t>(r < 0 ? r + m : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p_ - b);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  }
  std::uint32_t pow(std::uint32_t base, std::uint64_t exp) const noexcept;
  /// Throws DivisionByZero for a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// An element of F_p carrying its modulus.
class FieldElement {
 public:
  explicit FieldElement(std::int64_t value, std::uint32_t p = kDefaultPrime);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return field_.modulus(); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  bool operator==(const FieldElement&) const = default;

 private:
  FieldElement(std::uint32_t value, PrimeField field) : value_(value), field_(field) {}
  void require_same_field(const FieldElement& o) const;

  std::uint32_t value_;
  PrimeField field_;
};

FieldElement field_inverse(const FieldElement& a);

/// Dense row-major matrix over F_p. Entries are kept reduced in [0, p).
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t prime = kDefaultPrime);

  static Matrix identity(std::size_t n, std::uint32_t prime = kDefaultPrime);
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                          std::uint32_t prime = kDefaultPrime);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t prime() const noexcept { return field_.modulus(); }
  const PrimeField& field() const noexcept { return field_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t value) {
    data_[i * cols_ + j] = field_.reduce(value);
  }

  std::span<const std::uint32_t> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  /// Raw row access; callers must store reduced values.
  std::span<std::uint32_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  Matrix transpose() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeField field_;
  std::vector<std::uint32_t> data_;
};

/// Row echelon basis grown one row at a time. Each stored row has pivot 1
/// and zeros left of its pivot; pivots are kept in increasing column order.
///
/// Reduction of an incoming row accumulates in 64-bit lanes and only reduces
/// modulo p when the next multiply-add could overflow, so for small primes a
/// whole insertion costs one reduction per column.
class EchelonBasis {
 public:
  EchelonBasis(PrimeField field, std::size_t cols);

  /// Returns true when the row was independent of the current basis.
  bool insert(std::span<const std::uint32_t> row);

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool full() const noexcept { return pivots_.size() == cols_; }

 private:
  PrimeField field_;
  std::size_t cols_;
  std::uint64_t batch_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::uint32_t>> basis_;
  std::vector<std::uint64_t> acc_;
};

std::size_t rank(const Matrix& m);

/// Determinant of a square matrix. Throws std::invalid_argument otherwise.
std::uint32_t determinant(const Matrix& m);

}  // namespace segver::gf
