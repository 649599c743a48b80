#include "segver/gf.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace segver::gf {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

std::uint32_t PrimeField::pow(std::uint32_t base, std::uint64_t exp) const noexcept {
  std::uint64_t result = 1 % p_;
  std::uint64_t b = base % p_;
  while (exp > 0) {
    if (exp & 1) result = result * b % p_;
    b = b * b % p_;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  a %= p_;
  if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t);
}

FieldElement::FieldElement(std::int64_t value, std::uint32_t p)
    : value_(0), field_(p) {
  value_ = field_.reduce(value);
}

void FieldElement::require_same_field(const FieldElement& o) const {
  if (field_ != o.field_) throw std::invalid_argument("field elements from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(o);
  return {field_.add(value_, o.value_), field_};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(o);
  return {field_.sub(value_, o.value_), field_};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(o);
  return {field_.mul(value_, o.value_), field_};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(o);
  return {field_.mul(value_, field_.inv(o.value_)), field_};
}
FieldElement FieldElement::operator-() const { return {field_.neg(value_), field_}; }
FieldElement FieldElement::inverse() const { return {field_.inv(value_), field_}; }

FieldElement field_inverse(const FieldElement& a) { return a.inverse(); }

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t prime)
    : rows_(rows), cols_(cols), field_(prime), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, std::uint32_t prime) {
  Matrix m(n, n, prime);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t prime) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, prime);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, prime());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  return t;
}

EchelonBasis::EchelonBasis(PrimeField field, std::size_t cols)
    : field_(field), cols_(cols), acc_(cols) {
  const std::uint64_t pm1 = field_.modulus() - 1;
  const std::uint64_t headroom = std::numeric_limits<std::uint64_t>::max() - pm1;
  batch_ = pm1 == 0 ? headroom : headroom / (pm1 * pm1);
  batch_ = std::max<std::uint64_t>(batch_, 1);
}

bool EchelonBasis::insert(std::span<const std::uint32_t> row) {
  if (row.size() != cols_) throw std::invalid_argument("row length does not match basis width");
  if (full()) return false;

  const std::uint64_t p = field_.modulus();
  std::copy(row.begin(), row.end(), acc_.begin());
  std::uint64_t pending = 0;

  for (std::size_t idx = 0; idx < pivots_.size(); ++idx) {
    const std::size_t pc = pivots_[idx];
    const std::uint64_t lead = acc_[pc] % p;
    if (lead == 0) continue;
    if (pending == batch_) {
      for (std::size_t j = pc; j < cols_; ++j) acc_[j] %= p;
      pending = 0;
    }
    const std::uint64_t c = p - lead;
    const std::uint32_t* b = basis_[idx].data();
    std::uint64_t* a = acc_.data();
    for (std::size_t j = pc; j < cols_; ++j) a[j] += c * b[j];
    ++pending;
  }

  std::size_t lead_col = cols_;
  for (std::size_t j = 0; j < cols_; ++j) {
    acc_[j] %= p;
    if (lead_col == cols_ && acc_[j] != 0) lead_col = j;
  }
  if (lead_col == cols_) return false;

  const std::uint64_t scale = field_.inv(static_cast<std::uint32_t>(acc_[lead_col]));
  std::vector<std::uint32_t> normalized(cols_, 0);
  for (std::size_t j = lead_col; j < cols_; ++j)
    normalized[j] = static_cast<std::uint32_t>(acc_[j] * scale % p);

  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead_col) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead_col);
  basis_.insert(basis_.begin() + pos, std::move(normalized));
  return true;
}

std::size_t rank(const Matrix& m) {
  EchelonBasis basis(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows() && !basis.full(); ++i) basis.insert(m.row(i));
  return basis.rank();
}

std::uint32_t determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const PrimeField& f = m.field();
  const std::size_t n = m.rows();
  Matrix a = m;
  std::uint32_t det = 1 % f.modulus();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto tmp = a(col, j);
        a.row(col)[j] = a(pivot, j);
        a.row(pivot)[j] = tmp;
      }
      det = f.neg(det);
    }
    const std::uint32_t pv = a(col, col);
    det = f.mul(det, pv);
    const std::uint32_t pinv = f.inv(pv);
    for (std::size_t i = col + 1; i < n; ++i) {
      const std::uint32_t factor = f.mul(a(i, col), pinv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < n; ++j)
        a.row(i)[j] = f.sub(a(i, j), f.mul(factor, a(col, j)));
    }
  }
  return det;
}

}  // namespace segver::gf
