#pragma once

#include <stdexcept>
#include <vector>

#include "segver/model.hpp"

namespace segver::reduce {

/// The input is outside the domain a reduction is stated for.
class UnsupportedReduction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The transformation would produce a negative degree or multiplicity.
class ReductionNotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// L_(d_1..d_r)(2^n) on (P^1)^r to L_d(d-d_1, ..., d-d_r, 2^n) on P^r with
/// d = sum d_i. Base points of multiplicity zero are dropped.
LinearSystemSpec to_projective(const LinearSystemSpec& spec);

/// k = (n-1)d - sum of the chosen multiplicities on P^n.
std::int64_t cremona_shift(const LinearSystemSpec& spec, const std::vector<std::size_t>& chosen);

/// Degree d+k, chosen multiplicities m_i+k, the rest unchanged, zeros
/// dropped. Indices refer to spec.points().multiplicities(); the result keeps
/// the original point order.
LinearSystemSpec cremona_reduce(const LinearSystemSpec& spec, const std::vector<std::size_t>& chosen);

/// Indices of the n+1 largest multiplicities, ties by lower index. Empty
/// when there are fewer than n+1 points.
std::vector<std::size_t> largest_multiplicities(const LinearSystemSpec& spec);

/// Applies cremona_reduce to the largest multiplicities while k < 0. The
/// chain starts with the input.
std::vector<LinearSystemSpec> greedy_cremona_chain(const LinearSystemSpec& spec);

}  // namespace segver::reduce
