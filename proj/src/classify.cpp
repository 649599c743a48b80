#include "segver/classify.hpp"

#include <stdexcept>

namespace segver::classify {

std::string_view to_string(ExceptionFamily family) {
  switch (family) {
    case ExceptionFamily::TwoTwoA: return "TwoTwoA";
    case ExceptionFamily::OneOneTwoA: return "OneOneTwoA";
    case ExceptionFamily::TwoTwoTwo: return "TwoTwoTwo";
    case ExceptionFamily::AllOnesR4: return "AllOnesR4";
  }
  return "?";
}

std::string_view to_string(Status status) { return status == Status::Special ? "Special" : "NonSpecial"; }

Classification classify(const MultiDegree& deg, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("negative number of points");
  const MultiDegree d = deg.without_zeros().sorted();
  const auto& v = d.values();
  const auto special = [](ExceptionFamily f, std::int64_t dim) {
    return Classification{Status::Special, dim, f};
  };

  if (v.size() == 2 && v[0] == 2 && v[1] % 2 == 0 && n == v[1] + 1) return special(ExceptionFamily::TwoTwoA, 0);
  // (2,2) is also (2,2a) with a = 1; the first branch handles it.
  if (v.size() == 3 && v[0] == 1 && v[1] == 1 && v[2] % 2 == 0 && n == v[2] + 1)
    return special(ExceptionFamily::OneOneTwoA, 0);
  if (v == std::vector<int>{2, 2, 2} && n == 7) return special(ExceptionFamily::TwoTwoTwo, 0);
  if (v == std::vector<int>{1, 1, 1, 1} && n == 3) return special(ExceptionFamily::AllOnesR4, 1);

  const auto spec = LinearSystemSpec::product_of_lines(d, FatPointSpec::doubles(n));
  return {Status::NonSpecial, expected_dimension(spec), std::nullopt};
}

ExceptionInstance ExceptionRow::instantiate(int a) const {
  if (parametric && a < 1) throw std::invalid_argument("parameter a must be at least 1");
  MultiDegree deg({1});
  std::int64_t n = 0;
  std::int64_t dim = 0;
  switch (family) {
    case ExceptionFamily::TwoTwoA:
      deg = MultiDegree({2, 2 * a});
      n = 2 * a + 1;
      break;
    case ExceptionFamily::OneOneTwoA:
      deg = MultiDegree({1, 1, 2 * a});
      n = 2 * a + 1;
      break;
    case ExceptionFamily::TwoTwoTwo:
      deg = MultiDegree({2, 2, 2});
      n = 7;
      break;
    case ExceptionFamily::AllOnesR4:
      deg = MultiDegree({1, 1, 1, 1});
      n = 3;
      dim = 1;
      break;
  }
  const auto v = virtual_dimension(LinearSystemSpec::product_of_lines(deg, FatPointSpec::doubles(n)));
  return {deg.sorted(), n, v, dim};
}

const std::vector<ExceptionRow>& exception_table() {
  static const std::vector<ExceptionRow> rows = {
      {ExceptionFamily::TwoTwoA, true},
      {ExceptionFamily::OneOneTwoA, true},
      {ExceptionFamily::TwoTwoTwo, false},
      {ExceptionFamily::AllOnesR4, false},
  };
  return rows;
}

}  // namespace segver::classify
