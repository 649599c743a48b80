#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "segver/catalect.hpp"
#include "segver/classify.hpp"
#include "segver/degen.hpp"
#include "segver/interp.hpp"
#include "segver/reduce.hpp"
#include "segver/sweep.hpp"

namespace segver::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Malformed input detected after argument parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint32_t prime = gf::kDefaultPrime;
  std::uint64_t seed = 0;
  int retries = interp::kDefaultRetries;
  std::string format = "json";
  unsigned threads = 0;

  gf::PrimeField field() const {
    if (!gf::is_prime(prime) || prime >= (1u << 31)) throw UsageError("--prime must be a prime below 2^31");
    return gf::PrimeField(prime);
  }
};

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_number(); })) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].dump();
    return s;
  }
  return v.is_null() ? "" : v.dump();
}

/// JSON as is; TSV as a header and one row per object.
void write(std::ostream& out, const std::string& format, const Json& data) {
  if (format == "json") {
    out << data.dump(2) << '\n';
    return;
  }
  const Json rows = data.is_array() ? data : Json::array({data});
  if (rows.empty()) return;
  bool first = true;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
    out << (first ? "" : "\t") << it.key();
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
      out << (first ? "" : "\t") << (row.contains(it.key()) ? cell(row[it.key()]) : "");
      first = false;
    }
    out << '\n';
  }
}

Json points_json(const FatPointSpec& pts) {
  Json a = Json::array();
  for (const auto& e : pts.entries()) a.push_back({{"multiplicity", e.multiplicity}, {"count", e.count}});
  return a;
}

MultiDegree degrees(const std::vector<int>& v) {
  if (v.empty()) throw UsageError("--deg needs at least one degree");
  try {
    return MultiDegree(v);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

/// An integer, or n- / n+ for the ends of the critical range.
std::int64_t point_count(const std::string& text, const MultiDegree& deg) {
  if (text == "n-" || text == "n+") {
    const auto range = critical_range(deg);
    return text == "n-" ? range.lower : range.upper;
  }
  std::size_t used = 0;
  std::int64_t n = 0;
  try {
    n = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError("--double expects an integer, n- or n+, got '" + text + "'");
  }
  if (used != text.size() || n < 0) throw UsageError("--double expects a non-negative integer, n- or n+");
  return n;
}

FatPointSpec multiplicities(const std::vector<int>& mults) {
  for (int m : mults)
    if (m < 1) throw UsageError("multiplicities must be positive");
  return FatPointSpec::from_multiplicities(mults);
}

int status_exit(DimStatus s) {
  switch (s) {
    case DimStatus::NonSpecial: return kOk;
    case DimStatus::SpecialCandidate: return kSpecial;
    case DimStatus::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

Json spec_json(const LinearSystemSpec& spec) {
  Json j;
  j["system"] = spec.to_string();
  j["ambient"] = std::string(to_string(spec.ambient()));
  if (spec.ambient() == AmbientKind::ProductOfLines)
    j["degrees"] = spec.degrees().values();
  else {
    j["space_dim"] = spec.dim();
    j["degree"] = spec.degree();
  }
  j["points"] = points_json(spec.points());
  return j;
}

// ---- subcommands ----

struct DimArgs {
  std::vector<int> deg;
  std::string doubles;
  std::vector<int> mults;
  bool projective = false;
  int space_dim = 0;
};

int cmd_dim(const DimArgs& a, const Common& c, std::ostream& out) {
  std::optional<LinearSystemSpec> spec;
  if (a.projective) {
    if (a.deg.size() != 1) throw UsageError("--projective takes a single --deg");
    if (a.space_dim < 1) throw UsageError("--projective needs --space-dim >= 1");
    if (a.deg[0] < 0) throw UsageError("degree must be non-negative");
    FatPointSpec pts = a.mults.empty() ? FatPointSpec::doubles(point_count(a.doubles.empty() ? "0" : a.doubles,
                                                                           MultiDegree({a.deg[0]})))
                                       : multiplicities(a.mults);
    spec = LinearSystemSpec::projective_space(a.space_dim, a.deg[0], pts);
  } else {
    const MultiDegree deg = degrees(a.deg);
    if (!a.mults.empty() && !a.doubles.empty()) throw UsageError("give either --double or --mults");
    FatPointSpec pts =
        a.mults.empty() ? FatPointSpec::doubles(point_count(a.doubles.empty() ? "0" : a.doubles, deg))
                        : multiplicities(a.mults);
    spec = LinearSystemSpec::product_of_lines(deg, pts);
  }
  const auto report = interp::dim_linear_system(*spec, c.seed, c.retries, c.field());
  Json j = spec_json(*spec);
  j["virtual"] = report.virtual_dim;
  j["expected"] = report.expected;
  j["computed"] = report.computed;
  j["status"] = std::string(to_string(report.status));
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["prime"] = c.prime;
  write(out, c.format, j);
  return status_exit(report.status);
}

int cmd_secant(const std::vector<int>& deg_v, const std::string& n_text, const Common& c, std::ostream& out) {
  const MultiDegree deg = degrees(deg_v);
  const std::int64_t n = point_count(n_text, deg);
  if (n < 1) throw UsageError("secant order must be at least 1");
  const auto rep = interp::secant_dimension(deg, n, c.seed, c.retries, c.field());
  Json j;
  j["degrees"] = deg.values();
  j["n"] = n;
  j["ambient_dim"] = deg.projective_dim();
  j["secant_dim"] = rep.secant_dim;
  j["expected_secant_dim"] = rep.expected_secant_dim;
  j["defective"] = rep.defective;
  j["trials"] = rep.trials;
  j["seed"] = rep.seed;
  j["prime"] = c.prime;
  write(out, c.format, j);
  return rep.defective ? kSpecial : kOk;
}

int cmd_classify(const std::vector<int>& deg_v, const std::string& n_text, const Common& c, std::ostream& out) {
  const MultiDegree deg = degrees(deg_v);
  if (deg.nonzero_count() == 0) throw UsageError("all degrees are zero");
  const std::int64_t n = point_count(n_text, deg);
  const auto cl = classify::classify(deg, n);
  Json j;
  j["degrees"] = deg.values();
  j["n"] = n;
  j["status"] = std::string(to_string(cl.status));
  j["dim"] = cl.dim;
  j["family"] = cl.family ? Json(std::string(to_string(*cl.family))) : Json(nullptr);
  write(out, c.format, j);
  return cl.status == classify::Status::Special ? kSpecial : kOk;
}

struct CertifyArgs {
  std::vector<int> deg;
  std::string doubles;
  bool check = false;
  std::string input;
  std::string output;
  std::int64_t cap = 5000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_certify(const CertifyArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  degen::NodePtr cert;
  if (!a.input.empty()) {
    if (!a.deg.empty()) throw UsageError("give either --input or --deg");
    try {
      cert = degen::from_json(read_file(a.input));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("malformed certificate: ") + e.what());
    }
  } else {
    const MultiDegree deg = degrees(a.deg);
    for (int d : deg.values())
      if (d < 1) throw UsageError("certificates need positive degrees");
    const std::int64_t n = point_count(a.doubles.empty() ? "n+" : a.doubles, deg);
    c.field();
    degen::PlanOptions opt{c.prime, c.seed, c.retries, a.cap};
    try {
      cert = degen::plan(deg, n, opt);
    } catch (const degen::PlanFailure& e) {
      err << "segver: " << e.what() << '\n';
      return kRejected;
    }
  }
  if (!a.output.empty()) {
    std::ofstream f(a.output);
    if (!f) throw UsageError("cannot write " + a.output);
    f << degen::to_json(*cert) << '\n';
  }
  if (!a.check && a.input.empty()) {
    if (a.output.empty()) out << degen::to_json(*cert) << '\n';
    return kOk;
  }
  const auto result = degen::check(*cert);
  Json j;
  j["verdict"] = result.ok ? "OK" : "REJECTED";
  j["system"] = cert->claim.spec.to_string();
  j["dim"] = cert->claim.dim;
  j["rule"] = std::string(degen::to_string(cert->rule));
  j["nodes"] = degen::node_count(*cert);
  j["depth"] = degen::depth(*cert);
  if (!result.ok) {
    j["path"] = result.path;
    j["reason"] = result.reason;
  }
  write(out, c.format, j);
  return result.ok ? kOk : kRejected;
}

struct ReduceArgs {
  std::vector<int> deg;
  std::string doubles;
  std::vector<int> mults;
  bool projective = false;
  int space_dim = 0;
  bool verify = false;
};

int cmd_reduce(const ReduceArgs& a, const Common& c, std::ostream& out) {
  std::vector<LinearSystemSpec> chain;
  std::optional<LinearSystemSpec> product;
  if (a.projective) {
    if (a.deg.size() != 1 || a.deg[0] < 0) throw UsageError("--projective takes a single non-negative --deg");
    if (a.mults.empty()) throw UsageError("--projective needs --mults");
    int r = a.space_dim;
    if (r == 0) {
      // Images of to_projective carry r base points of multiplicity other than 2.
      r = static_cast<int>(std::count_if(a.mults.begin(), a.mults.end(), [](int m) { return m != 2; }));
      if (r == 0) throw UsageError("cannot infer the space dimension; pass --space-dim");
    }
    if (r < 1) throw UsageError("--space-dim must be positive");
    chain = reduce::greedy_cremona_chain(LinearSystemSpec::projective_space(r, a.deg[0], multiplicities(a.mults)));
  } else {
    if (!a.mults.empty()) throw UsageError("--mults needs --projective; products take --double");
    const MultiDegree deg = degrees(a.deg);
    product = LinearSystemSpec::product_of_lines(deg, FatPointSpec::doubles(point_count(a.doubles.empty() ? "0" : a.doubles, deg)));
    chain = reduce::greedy_cremona_chain(reduce::to_projective(*product));
  }

  Json steps = Json::array();
  bool agree = true;
  std::optional<std::int64_t> reference;
  const auto field = c.field();
  if (a.verify && product) reference = interp::dim_linear_system(*product, c.seed, c.retries, field).computed;
  for (const auto& s : chain) {
    Json j;
    j["system"] = s.to_string();
    j["degree"] = s.degree();
    j["multiplicities"] = s.points().canonical().multiplicities();
    j["virtual"] = virtual_dimension(s);
    if (a.verify) {
      const auto d = interp::dim_linear_system(s, c.seed, c.retries, field).computed;
      j["dim"] = d;
      if (!reference) reference = d;
      agree = agree && d == *reference;
    }
    steps.push_back(std::move(j));
  }
  if (c.format == "tsv") {
    write(out, c.format, steps);
  } else {
    Json j;
    if (product) j["product"] = product->to_string();
    j["chain"] = steps;
    if (a.verify) j["agree"] = agree;
    write(out, c.format, j);
  }
  return a.verify && !agree ? kInconclusive : kOk;
}

struct CatalectArgs {
  std::vector<std::int64_t> z;
  int secant_sample = -1;
  bool random = false;
  bool symbolic = false;
};

int cmd_catalecticant(const CatalectArgs& a, const Common& c, std::ostream& out) {
  if (a.symbolic) {
    const auto m = catalect::symbolic_catalecticant();
    Json rows = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const auto& e : row) r.push_back((e.coefficient == 1 ? "" : std::to_string(e.coefficient)) + "z" +
                                            std::to_string(e.z_index));
      rows.push_back(r);
    }
    if (c.format == "tsv") {
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << r[i].get<std::string>();
        out << '\n';
      }
    } else {
      write(out, c.format, Json{{"matrix", rows}});
    }
    return kOk;
  }
  const int sources = (!a.z.empty()) + (a.secant_sample >= 0) + a.random;
  if (sources != 1) throw UsageError("give exactly one of --z, --secant-sample, --random, --symbolic");
  const auto field = c.field();
  if (field.modulus() == 2) throw UsageError("characteristic 2 is not supported");
  catalect::Coefficients z{};
  if (!a.z.empty()) {
    if (a.z.size() != catalect::kCoefficients) throw UsageError("--z needs 27 values");
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = field.reduce(a.z[i]);
  } else if (a.secant_sample >= 0) {
    z = catalect::random_secant_sample(a.secant_sample, c.seed, field);
  } else {
    z = catalect::random_coefficients(c.seed, field);
  }
  const auto m = catalect::catalecticant(z, field);
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(std::vector<std::uint32_t>(m.row(i).begin(), m.row(i).end()));
  Json j;
  j["z"] = z;
  j["matrix"] = rows;
  j["rank"] = gf::rank(m);
  j["determinant"] = gf::determinant(m);
  j["det_vanishes"] = catalect::secant_membership_test(z, field);
  j["prime"] = c.prime;
  write(out, c.format, j);
  return kOk;
}

struct SweepArgs {
  int r_min = 1, r_max = 0, d_min = 1, d_max = 0;
  std::string policy = "critical";
  std::int64_t cap = 5000;
  bool base_steps = false;
};

int cmd_sweep(const SweepArgs& a, const Common& c, std::ostream& out) {
  sweep::SweepConfig cfg;
  if (a.base_steps) {
    cfg.shapes = sweep::base_step_shapes();
  } else {
    if (a.r_max < 1 || a.d_max < 0) throw UsageError("sweep needs --rmax and --dmax (or --base-steps)");
    cfg.r_min = std::min(a.r_min, a.r_max);
    cfg.r_max = a.r_max;
    cfg.d_min = a.d_min;
    cfg.d_max = a.d_max;
    if (a.r_min > a.r_max || a.d_min > a.d_max || a.r_min < 1 || a.d_min < 0)
      throw UsageError("need 1 <= rmin <= rmax and 0 <= dmin <= dmax");
  }
  cfg.policy = a.policy == "all" ? sweep::PointPolicy::All : sweep::PointPolicy::Critical;
  cfg.prime = c.field().modulus();
  cfg.seed = c.seed;
  cfg.retries = c.retries;
  cfg.cap = a.cap;
  cfg.threads = c.threads;
  const auto cells = sweep::run(cfg);
  out << (c.format == "tsv" ? sweep::to_tsv(cells) : sweep::to_json(cells));
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimensions of linear systems of multi-degree hypersurfaces on (P^1)^r through double points"};
  app.name("segver");
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--prime", common.prime, "Field characteristic")->envname("SEGVER_PRIME")->capture_default_str();
  app.add_option("--seed", common.seed, "Master seed")->envname("SEGVER_SEED")->capture_default_str();
  app.add_option("--retries", common.retries, "Random samples per system")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  app.add_option("--threads", common.threads, "Sweep worker threads, 0 = all cores")->capture_default_str();

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim", "Dimension at random points");
  dim_cmd->add_option("--deg", dim.deg, "Degrees d1,...,dr (one degree with --projective)")->delimiter(',')->required();
  dim_cmd->add_option("--double", dim.doubles, "Number of double points, or n- / n+");
  dim_cmd->add_option("--mults", dim.mults, "Explicit multiplicities m1,...,ms")->delimiter(',');
  dim_cmd->add_flag("--projective", dim.projective, "System on P^r instead of (P^1)^r");
  dim_cmd->add_option("--space-dim", dim.space_dim, "r for --projective");

  std::vector<int> sec_deg;
  std::string sec_n;
  auto* sec_cmd = app.add_subcommand("secant", "Secant variety dimension by Terracini's lemma");
  sec_cmd->add_option("--deg", sec_deg, "Degrees d1,...,dr")->delimiter(',')->required();
  sec_cmd->add_option("--points,--double", sec_n, "Number of points n, or n- / n+")->required();

  std::vector<int> cl_deg;
  std::string cl_n;
  auto* cl_cmd = app.add_subcommand("classify", "Dimension from the classification table");
  cl_cmd->add_option("--deg", cl_deg, "Degrees d1,...,dr")->delimiter(',')->required();
  cl_cmd->add_option("--double", cl_n, "Number of double points, or n- / n+")->required();

  CertifyArgs cert;
  auto* cert_cmd = app.add_subcommand("certify", "Build or check a degeneration certificate");
  cert_cmd->add_option("--deg", cert.deg, "Degrees d1,...,dr")->delimiter(',');
  cert_cmd->add_option("--double", cert.doubles, "Number of double points, or n- / n+ (default n+)");
  cert_cmd->add_flag("--check", cert.check, "Check the certificate and print a verdict");
  cert_cmd->add_option("--input", cert.input, "Check a certificate JSON file");
  cert_cmd->add_option("--output", cert.output, "Also write the certificate to this file");
  cert_cmd->add_option("--cap", cert.cap, "Largest section count proved by rank")->capture_default_str();

  ReduceArgs red;
  auto* red_cmd = app.add_subcommand("reduce", "Reduce to P^r and apply Cremona steps");
  red_cmd->add_option("--deg", red.deg, "Degrees d1,...,dr, or d with --projective")->delimiter(',')->required();
  red_cmd->add_option("--double", red.doubles, "Number of double points on (P^1)^r, or n- / n+");
  red_cmd->add_option("--mults", red.mults, "Multiplicities on P^r")->delimiter(',');
  red_cmd->add_flag("--projective", red.projective, "Start from a system on P^r");
  red_cmd->add_option("--space-dim", red.space_dim,
                      "r for --projective; defaults to the number of multiplicities other than 2");
  red_cmd->add_flag("--verify", red.verify, "Compute every dimension along the chain");

  CatalectArgs cat;
  auto* cat_cmd = app.add_subcommand("catalecticant", "Catalecticant of a (2,2,2) form");
  cat_cmd->add_option("--z", cat.z, "27 coefficients z0,...,z26")->delimiter(',');
  cat_cmd->add_option("--secant-sample", cat.secant_sample, "Sum of s random terms a^2 b^2 c^2")
      ->check(CLI::NonNegativeNumber);
  cat_cmd->add_flag("--random", cat.random, "Random coefficients");
  cat_cmd->add_flag("--symbolic", cat.symbolic, "Print the matrix in terms of z");

  SweepArgs sw;
  auto* sw_cmd = app.add_subcommand("sweep", "Dimensions over a grid of multi-degrees");
  sw_cmd->add_option("--rmin", sw.r_min)->capture_default_str();
  sw_cmd->add_option("--rmax", sw.r_max);
  sw_cmd->add_option("--dmin", sw.d_min)->capture_default_str();
  sw_cmd->add_option("--dmax", sw.d_max);
  sw_cmd->add_option("--n", sw.policy, "Point counts per shape")
      ->check(CLI::IsMember({"critical", "all"}))
      ->capture_default_str();
  sw_cmd->add_option("--cap", sw.cap, "Skip shapes with more sections")->capture_default_str();
  sw_cmd->add_flag("--base-steps", sw.base_steps, "Use the base-step shapes instead of a grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "segver: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (*dim_cmd) return cmd_dim(dim, common, out);
    if (*sec_cmd) return cmd_secant(sec_deg, sec_n, common, out);
    if (*cl_cmd) return cmd_classify(cl_deg, cl_n, common, out);
    if (*cert_cmd) return cmd_certify(cert, common, out, err);
    if (*red_cmd) return cmd_reduce(red, common, out);
    if (*cat_cmd) return cmd_catalecticant(cat, common, out);
    if (*sw_cmd) return cmd_sweep(sw, common, out);
  } catch (const UsageError& e) {
    err << "segver: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "segver: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "segver: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "segver: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace segver::cli
