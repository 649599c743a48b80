#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "segver/model.hpp"

namespace segver::classify {

/// The four special families of L_(d_1..d_r)(2^n) for general points.
enum class ExceptionFamily { TwoTwoA, OneOneTwoA, TwoTwoTwo, AllOnesR4 };

std::string_view to_string(ExceptionFamily family);

enum class Status { NonSpecial, Special };

std::string_view to_string(Status status);

struct Classification {
  Status status = Status::NonSpecial;
  std::int64_t dim = -1;
  std::optional<ExceptionFamily> family;

  bool operator==(const Classification&) const = default;
};

/// Dimension of L_deg(2^n) at general points. Zero degrees are dropped first;
/// the double points stay double points on the smaller product.
Classification classify(const MultiDegree& deg, std::int64_t n);

struct ExceptionInstance {
  MultiDegree degrees;
  std::int64_t n;
  std::int64_t virtual_dim;
  std::int64_t dim;
};

/// One row of the exception table, possibly depending on a parameter a >= 1.
struct ExceptionRow {
  ExceptionFamily family;
  bool parametric;
  /// Sorted degrees at parameter a (ignored for fixed rows).
  ExceptionInstance instantiate(int a = 1) const;
};

/// (2,2a) 2a+1; (1,1,2a) 2a+1; (2,2,2) 7; (1,1,1,1) 3.
const std::vector<ExceptionRow>& exception_table();

}  // namespace segver::classify
