#include "segver/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "segver/interp.hpp"
#include "segver/seeding.hpp"

namespace segver::sweep {

namespace {

void grow(std::vector<int>& v, std::size_t r, int lo, int hi, std::vector<MultiDegree>& out) {
  if (v.size() == r) {
    out.emplace_back(v);
    return;
  }
  for (int d = v.empty() ? lo : v.back(); d <= hi; ++d) {
    v.push_back(d);
    grow(v, r, lo, hi, out);
    v.pop_back();
  }
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::vector<MultiDegree> grid_shapes(int r_min, int r_max, int d_min, int d_max) {
  if (r_min < 1 || r_max < r_min) throw std::invalid_argument("need 1 <= rmin <= rmax");
  if (d_min < 0 || d_max < d_min) throw std::invalid_argument("need 0 <= dmin <= dmax");
  std::vector<MultiDegree> out;
  for (int r = r_min; r <= r_max; ++r) {
    std::vector<int> v;
    grow(v, static_cast<std::size_t>(r), d_min, d_max, out);
  }
  return out;
}

std::vector<MultiDegree> base_step_shapes() {
  std::vector<MultiDegree> out = grid_shapes(2, 3, 1, 6);
  std::vector<MultiDegree> r4 = grid_shapes(4, 4, 1, 4);
  for (int d3 = 1; d3 <= 6; ++d3)
    for (int d4 = d3; d4 <= 6; ++d4) r4.push_back(MultiDegree({1, 1, d3, d4}));
  r4.push_back(MultiDegree({2, 2, 2, 5}));
  std::sort(r4.begin(), r4.end());
  r4.erase(std::unique(r4.begin(), r4.end()), r4.end());
  out.insert(out.end(), r4.begin(), r4.end());
  for (int d5 = 1; d5 <= 5; ++d5) out.push_back(MultiDegree({1, 1, 1, 1, d5}));
  return out;
}

std::vector<std::int64_t> point_counts(const MultiDegree& deg, PointPolicy policy) {
  const auto range = critical_range(deg);
  std::vector<std::int64_t> out;
  if (policy == PointPolicy::Critical) {
    out.push_back(range.lower);
    if (range.upper != range.lower) out.push_back(range.upper);
  } else {
    for (std::int64_t n = 0; n <= range.upper; ++n) out.push_back(n);
  }
  return out;
}

std::vector<Cell> run(const SweepConfig& config) {
  if (config.retries < 1) throw std::invalid_argument("retries must be at least 1");
  const gf::PrimeField field(config.prime);
  const std::vector<MultiDegree> shapes =
      config.shapes.empty() ? grid_shapes(config.r_min, config.r_max, config.d_min, config.d_max) : config.shapes;

  std::vector<std::vector<Cell>> per_shape(shapes.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  const auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= shapes.size()) return;
      try {
        const MultiDegree& deg = shapes[i];
        const auto counts = point_counts(deg, config.policy);
        const std::uint64_t seed = mix_seed(config.seed, tuple_key(deg.values()));
        auto& cells = per_shape[i];
        for (auto n : counts) cells.push_back({deg.values(), n, seed, std::nullopt, {}});

        const auto sections = deg.section_count();
        if (sections > config.cap) {
          for (auto& c : cells)
            c.skip_reason = "section count " + std::to_string(sections) + " exceeds cap " + std::to_string(config.cap);
          continue;
        }
        // One elimination per trial serves every n of the shape.
        const auto spec = LinearSystemSpec::product_of_lines(deg, FatPointSpec::doubles(counts.back()));
        const auto reports = interp::dim_prefixes(spec, seed, config.retries, field);
        for (auto& c : cells) c.report = reports[static_cast<std::size_t>(c.n)];
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(shapes.size());
      }
    }
  };

  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(shapes.size(), 1)));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);

  std::vector<Cell> out;
  for (auto& cells : per_shape) std::move(cells.begin(), cells.end(), std::back_inserter(out));
  return out;
}

std::string to_json(const std::vector<Cell>& cells) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& c : cells) {
    nlohmann::ordered_json j;
    j["degrees"] = c.degrees;
    j["n"] = c.n;
    j["seed"] = c.seed;
    if (c.report) {
      j["virtual"] = c.report->virtual_dim;
      j["expected"] = c.report->expected;
      j["computed"] = c.report->computed;
      j["status"] = std::string(to_string(c.report->status));
      j["trials"] = c.report->trials;
    } else {
      j["skipped"] = c.skip_reason;
    }
    rows.push_back(std::move(j));
  }
  return rows.dump(2) + "\n";
}

std::string to_tsv(const std::vector<Cell>& cells) {
  std::ostringstream os;
  os << "degrees\tn\tvirtual\texpected\tcomputed\tstatus\ttrials\tseed\n";
  for (const auto& c : cells) {
    os << join(c.degrees) << '\t' << c.n << '\t';
    if (c.report)
      os << c.report->virtual_dim << '\t' << c.report->expected << '\t' << c.report->computed << '\t'
         << to_string(c.report->status) << '\t' << c.report->trials;
    else
      os << "\t\t\tskipped: " << c.skip_reason << '\t';
    os << '\t' << c.seed << '\n';
  }
  return os.str();
}

}  // namespace segver::sweep
