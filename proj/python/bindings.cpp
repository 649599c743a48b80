#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "segver/catalect.hpp"
#include "segver/classify.hpp"
#include "segver/degen.hpp"
#include "segver/interp.hpp"
#include "segver/reduce.hpp"

namespace py = pybind11;
using namespace segver;

namespace {

FatPointSpec points_of(std::optional<std::int64_t> n, const std::optional<std::vector<int>>& mults) {
  if (n && mults) throw std::invalid_argument("give either n or mults");
  if (mults) return FatPointSpec::from_multiplicities(*mults);
  return FatPointSpec::doubles(n.value_or(0));
}

py::dict report_dict(const LinearSystemSpec& spec, const DimReport& r) {
  py::dict d;
  d["system"] = spec.to_string();
  d["virtual"] = r.virtual_dim;
  d["expected"] = r.expected;
  d["computed"] = r.computed;
  d["status"] = std::string(to_string(r.status));
  d["trials"] = r.trials;
  d["seed"] = r.seed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_segver, m) {
  m.doc() = "Exact finite-field computations for linear systems on (P^1)^r";
  m.attr("DEFAULT_PRIME") = gf::kDefaultPrime;

  m.def(
      "dim",
      [](std::vector<int> degrees, std::optional<std::int64_t> n, std::optional<std::vector<int>> mults,
         std::uint64_t seed, int retries, std::uint32_t prime) {
        const auto spec = LinearSystemSpec::product_of_lines(MultiDegree(std::move(degrees)), points_of(n, mults));
        DimReport r;
        {
          py::gil_scoped_release release;
          r = interp::dim_linear_system(spec, seed, retries, gf::PrimeField(prime));
        }
        return report_dict(spec, r);
      },
      py::arg("degrees"), py::arg("n") = py::none(), py::arg("mults") = py::none(), py::arg("seed") = 0,
      py::arg("retries") = interp::kDefaultRetries, py::arg("prime") = gf::kDefaultPrime,
      "Dimension of L_degrees(2^n) (or the given multiplicities) at random points.");

  m.def(
      "dim_projective",
      [](int space_dim, int degree, std::vector<int> mults, std::uint64_t seed, int retries, std::uint32_t prime) {
        const auto spec =
            LinearSystemSpec::projective_space(space_dim, degree, FatPointSpec::from_multiplicities(mults));
        return report_dict(spec, interp::dim_linear_system(spec, seed, retries, gf::PrimeField(prime)));
      },
      py::arg("space_dim"), py::arg("degree"), py::arg("mults"), py::arg("seed") = 0,
      py::arg("retries") = interp::kDefaultRetries, py::arg("prime") = gf::kDefaultPrime);

  m.def(
      "dim_at_points",
      [](std::vector<int> degrees, std::vector<interp::HomogeneousPoint> points, std::uint32_t prime) {
        const auto spec = LinearSystemSpec::product_of_lines(
            MultiDegree(std::move(degrees)), FatPointSpec::doubles(static_cast<std::int64_t>(points.size())));
        return interp::dim_at_specific_points(spec, points, gf::PrimeField(prime));
      },
      py::arg("degrees"), py::arg("points"), py::arg("prime") = gf::kDefaultPrime,
      "Dimension with double points at explicit homogeneous coordinates [[a,b], ...] per point.");

  m.def(
      "secant",
      [](std::vector<int> degrees, std::int64_t n, std::uint64_t seed, int retries, std::uint32_t prime) {
        const auto r = interp::secant_dimension(MultiDegree(std::move(degrees)), n, seed, retries, gf::PrimeField(prime));
        py::dict d;
        d["secant_dim"] = r.secant_dim;
        d["expected_secant_dim"] = r.expected_secant_dim;
        d["defective"] = r.defective;
        d["trials"] = r.trials;
        return d;
      },
      py::arg("degrees"), py::arg("n"), py::arg("seed") = 0, py::arg("retries") = interp::kDefaultRetries,
      py::arg("prime") = gf::kDefaultPrime);

  m.def(
      "classify",
      [](std::vector<int> degrees, std::int64_t n) {
        const auto c = classify::classify(MultiDegree(std::move(degrees)), n);
        py::dict d;
        d["status"] = std::string(to_string(c.status));
        d["dim"] = c.dim;
        d["family"] = c.family ? py::object(py::str(std::string(to_string(*c.family)))) : py::object(py::none());
        return d;
      },
      py::arg("degrees"), py::arg("n"));

  m.def(
      "to_projective",
      [](std::vector<int> degrees, std::int64_t n) {
        const auto s = reduce::to_projective(
            LinearSystemSpec::product_of_lines(MultiDegree(std::move(degrees)), FatPointSpec::doubles(n)));
        return py::make_tuple(s.dim(), s.degree(), s.points().multiplicities());
      },
      py::arg("degrees"), py::arg("n"), "(space_dim, degree, multiplicities) of the system on P^r.");

  m.def(
      "cremona_chain",
      [](int space_dim, int degree, std::vector<int> mults) {
        py::list out;
        for (const auto& s : reduce::greedy_cremona_chain(
                 LinearSystemSpec::projective_space(space_dim, degree, FatPointSpec::from_multiplicities(mults))))
          out.append(py::make_tuple(s.degree(), s.points().canonical().multiplicities()));
        return out;
      },
      py::arg("space_dim"), py::arg("degree"), py::arg("mults"));

  m.def(
      "certify",
      [](std::vector<int> degrees, std::int64_t n, std::uint64_t seed, int retries, std::uint32_t prime,
         std::int64_t cap) {
        return degen::to_json(*degen::plan(MultiDegree(std::move(degrees)), n, {prime, seed, retries, cap}));
      },
      py::arg("degrees"), py::arg("n"), py::arg("seed") = 0, py::arg("retries") = interp::kDefaultRetries,
      py::arg("prime") = gf::kDefaultPrime, py::arg("cap") = 5000, "Certificate JSON for L_degrees(2^n).");

  m.def(
      "check_certificate",
      [](const std::string& text) {
        const auto r = degen::check(*degen::from_json(text));
        return py::make_tuple(r.ok, r.path, r.reason);
      },
      py::arg("certificate"), "(ok, failing path, reason).");

  m.def(
      "catalecticant",
      [](std::vector<std::uint32_t> z, std::uint32_t prime) {
        const auto mat = catalect::catalecticant(z, gf::PrimeField(prime));
        std::vector<std::vector<std::uint32_t>> rows;
        for (std::size_t i = 0; i < mat.rows(); ++i) rows.emplace_back(mat.row(i).begin(), mat.row(i).end());
        return rows;
      },
      py::arg("z"), py::arg("prime") = gf::kDefaultPrime);

  m.def(
      "catalecticant_determinant",
      [](std::vector<std::uint32_t> z, std::uint32_t prime) { return catalect::determinant(z, gf::PrimeField(prime)); },
      py::arg("z"), py::arg("prime") = gf::kDefaultPrime);

  m.def("symbolic_catalecticant", [] {
    std::vector<std::vector<std::pair<int, int>>> rows;
    for (const auto& row : catalect::symbolic_catalecticant()) {
      rows.emplace_back();
      for (const auto& e : row) rows.back().emplace_back(e.coefficient, e.z_index);
    }
    return rows;
  });

  m.def(
      "monomial_basis", [](std::vector<int> degrees) { return monomial_basis(MultiDegree(std::move(degrees))); },
      py::arg("degrees"));

  m.def(
      "critical_range",
      [](std::vector<int> degrees) {
        const auto r = critical_range(MultiDegree(std::move(degrees)));
        return py::make_tuple(r.lower, r.upper);
      },
      py::arg("degrees"));

  m.def(
      "virtual_dimension",
      [](std::vector<int> degrees, std::int64_t n) {
        return virtual_dimension(LinearSystemSpec::product_of_lines(MultiDegree(std::move(degrees)), FatPointSpec::doubles(n)));
      },
      py::arg("degrees"), py::arg("n"));

  m.def(
      "expected_dimension",
      [](std::vector<int> degrees, std::int64_t n) {
        return expected_dimension(LinearSystemSpec::product_of_lines(MultiDegree(std::move(degrees)), FatPointSpec::doubles(n)));
      },
      py::arg("degrees"), py::arg("n"));
}
