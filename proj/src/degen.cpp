#include "segver/degen.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "segver/classify.hpp"
#include "segver/interp.hpp"
#include "segver/seeding.hpp"

namespace segver::degen {

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::BaseCase: return "BaseCase";
    case Rule::ExceptionLookup: return "ExceptionLookup";
    case Rule::Citation: return "Citation";
    case Rule::Normalize: return "Normalize";
    case Rule::SimpleDeg: return "SimpleDeg";
    case Rule::DoubleDeg: return "DoubleDeg";
  }
  return "?";
}

Rule rule_from_string(std::string_view name) {
  for (Rule r : {Rule::BaseCase, Rule::ExceptionLookup, Rule::Citation, Rule::Normalize, Rule::SimpleDeg,
                 Rule::DoubleDeg})
    if (to_string(r) == name) return r;
  throw std::invalid_argument("unknown rule '" + std::string(name) + "'");
}

bool same_tree(const CertificateNode& a, const CertificateNode& b) {
  if (a.role != b.role || !(a.claim == b.claim) || a.rule != b.rule || a.params != b.params ||
      a.evidence != b.evidence || a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!same_tree(*a.children[i], *b.children[i])) return false;
  return true;
}

LinearSystemSpec canonical(const LinearSystemSpec& spec) {
  if (spec.ambient() != AmbientKind::ProductOfLines) throw std::invalid_argument("claims live on products of lines");
  return LinearSystemSpec::product_of_lines(spec.degrees().sorted(), spec.points().canonical());
}

namespace {

std::int64_t prefix_product(const MultiDegree& deg) {
  std::int64_t p = 1;
  for (std::size_t i = 0; i + 1 < deg.size(); ++i) p *= deg[i] + 1;
  return p;
}

MultiDegree with_last(const MultiDegree& deg, int last) {
  auto v = deg.values();
  v.back() = last;
  return MultiDegree(std::move(v));
}

MultiDegree drop_last(const MultiDegree& deg) {
  auto v = deg.values();
  v.pop_back();
  return MultiDegree(std::move(v));
}

LinearSystemSpec doubles(const MultiDegree& deg, std::int64_t n) {
  return canonical(LinearSystemSpec::product_of_lines(deg, FatPointSpec::doubles(n)));
}

bool only_doubles(const FatPointSpec& pts) {
  return std::all_of(pts.entries().begin(), pts.entries().end(), [](const FatPoints& e) { return e.multiplicity == 2; });
}

bool all_positive(const MultiDegree& deg) {
  return std::all_of(deg.values().begin(), deg.values().end(), [](int d) { return d > 0; });
}

/// Spec with zero degrees and simple points removed; b = number of simple points.
std::pair<LinearSystemSpec, std::int64_t> normalized(const LinearSystemSpec& spec) {
  std::vector<FatPoints> kept;
  for (const auto& e : spec.points().entries())
    if (e.multiplicity >= 2) kept.push_back(e);
  const std::int64_t b = spec.points().count_of(1);
  return {canonical(LinearSystemSpec::product_of_lines(spec.degrees().without_zeros(), FatPointSpec(kept))), b};
}

std::uint64_t spec_key(const LinearSystemSpec& spec) {
  std::vector<int> key = spec.degrees().values();
  key.push_back(-1);
  for (const auto& e : spec.points().entries()) {
    key.push_back(e.multiplicity);
    key.push_back(static_cast<int>(e.count));
  }
  return tuple_key(key);
}

/// Rank at the points drawn with `seed`, or nullopt if the prime cannot
/// carry the system.
std::optional<std::int64_t> rank_with(const LinearSystemSpec& spec, std::uint32_t prime, std::uint64_t seed) {
  if (!gf::is_prime(prime) || prime >= (1u << 31)) return std::nullopt;
  try {
    const gf::PrimeField field(prime);
    const auto sample =
        interp::sample_points(spec.dim(), static_cast<std::size_t>(spec.points().point_count()), field, seed);
    return interp::rank_at_sample(spec, sample, field);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

bool in_base_table(const MultiDegree& d) {
  const auto& v = d.values();
  const auto r = v.size();
  const auto all_le = [&](int b) { return std::all_of(v.begin(), v.end(), [b](int x) { return x <= b; }); };
  if (r == 2 || r == 3) return all_le(6);
  if (r == 4) {
    if (all_le(4)) return true;
    if (v[0] == 1 && v[1] == 1 && v[2] <= 6 && v[3] <= 6) return true;
    return v == std::vector<int>{2, 2, 2, 5};
  }
  if (r == 5) return v[0] == 1 && v[1] == 1 && v[2] == 1 && v[3] == 1 && v[4] <= 5;
  return false;
}

NodePtr with_role(const NodePtr& node, std::string role) {
  if (!node || node->role == role) return node;
  auto copy = std::make_shared<CertificateNode>(*node);
  copy->role = std::move(role);
  return copy;
}

class Planner {
 public:
  explicit Planner(const PlanOptions& options) : opt_(options) {}

  /// plan() with the role set; one shared copy per (spec, role).
  NodePtr attach(const LinearSystemSpec& spec, const std::string& role) {
    const std::string key = spec.to_string() + "|" + role;
    if (auto it = attached_.find(key); it != attached_.end()) return it->second;
    NodePtr node = with_role(plan(spec), role);
    attached_.emplace(key, node);
    return node;
  }

  NodePtr plan(const LinearSystemSpec& raw) {
    const LinearSystemSpec spec = canonical(raw);
    const std::string key = spec.to_string();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (!active_.insert(key).second) return nullptr;
    NodePtr node = search(spec);
    active_.erase(key);
    memo_.emplace(key, node);
    return node;
  }

 private:
  NodePtr search(const LinearSystemSpec& spec) {
    const MultiDegree& d = spec.degrees();
    const std::size_t r = d.size();

    if (!all_positive(d) || !only_doubles(spec.points())) {
      if (d.has_zero())
        if (auto n = normalize(spec)) return n;
      return base(spec);
    }

    const std::int64_t n = spec.points().point_count();
    if (auto e = exception(spec)) return e;
    if (classify::classify(d, n).status == classify::Status::Special) return nullptr;

    if (in_base_table(d))
      if (auto b = base(spec)) return b;

    const auto& v = d.values();
    const auto simple_first = [&]() -> bool {
      if (r == 2 || r == 3) return true;
      if (r == 4) {
        if (v[0] == 1 && v[1] == 1 && v[2] == 1 && v[3] >= 7) return true;
        if (v[0] == 1 && v[1] == 1 && v[2] == 4 && v[3] >= 6) return true;
        if (v[0] == 1 && v[1] == 1 && v[2] >= 6 && v[3] >= 6) return true;
        if (v[0] == 2 && v[1] == 2 && v[2] == 2 && v[3] >= 6) return true;
        return false;
      }
      if (r == 5) return v[0] == 1 && v[1] == 1 && v[2] == 1 && v[3] == 1 && v[4] >= 6;
      return false;
    }();
    const bool double_allowed = [&]() -> bool {
      if (r == 4) {
        if (v[0] == 1 && v[1] == 1 && v[2] == 1) return false;
        if (v[0] == 2 && v[1] == 2 && v[2] == 2) return false;
        if (v[0] == 1 && v[1] == 1 && v[2] % 2 == 0) return false;
        return true;
      }
      return r >= 5;
    }();

    if (simple_first) {
      if (auto s = simple(spec)) return s;
    } else if (double_allowed) {
      if (auto s = double_deg(spec)) return s;
    }

    if (d.section_count() <= opt_.base_cap)
      if (auto b = base(spec)) return b;
    if (auto s = simple(spec)) return s;
    if (auto s = double_deg(spec)) return s;
    return citation(spec);
  }

  NodePtr leaf(const LinearSystemSpec& spec, std::int64_t dim, Rule rule, std::optional<LeafEvidence> ev) {
    auto node = std::make_shared<CertificateNode>(CertificateNode{"", {spec, dim}, rule, std::nullopt, {}, ev});
    return node;
  }

  NodePtr base(const LinearSystemSpec& spec) {
    if (spec.section_count() > opt_.base_cap) return nullptr;
    const std::int64_t target = normalized_expected_dimension(spec);
    const std::uint64_t s0 = mix_seed(opt_.seed, spec_key(spec));
    for (int t = 0; t < opt_.retries; ++t) {
      const std::uint64_t s = mix_seed(s0, static_cast<std::uint64_t>(t));
      const auto rank = rank_with(spec, opt_.prime, s);
      if (!rank) return nullptr;
      if (spec.projective_dim() - *rank == target)
        return leaf(spec, target, Rule::BaseCase, LeafEvidence{opt_.prime, s, *rank});
    }
    return nullptr;
  }

  NodePtr exception(const LinearSystemSpec& spec) {
    const auto c = classify::classify(spec.degrees(), spec.points().point_count());
    if (c.status != classify::Status::Special) return nullptr;
    std::optional<LeafEvidence> ev;
    if (spec.section_count() <= opt_.base_cap) {
      const std::uint64_t s = mix_seed(opt_.seed, spec_key(spec));
      const auto rank = rank_with(spec, opt_.prime, s);
      if (rank && spec.projective_dim() - *rank == c.dim) ev = LeafEvidence{opt_.prime, s, *rank};
    }
    return leaf(spec, c.dim, Rule::ExceptionLookup, ev);
  }

  NodePtr citation(const LinearSystemSpec& spec) {
    const auto& v = spec.degrees().values();
    if (v.size() < 6 || !std::all_of(v.begin(), v.end(), [](int x) { return x == 1; })) return nullptr;
    return leaf(spec, expected_dimension(spec), Rule::Citation, std::nullopt);
  }

  NodePtr normalize(const LinearSystemSpec& spec) {
    if (spec.degrees().nonzero_count() == 0) return nullptr;
    const auto [reduced, b] = normalized(spec);
    auto child = attach(reduced, "reduced");
    if (!child) return nullptr;
    const std::int64_t dim = std::max<std::int64_t>(child->claim.dim - b, -1);
    return std::make_shared<CertificateNode>(
        CertificateNode{"", {spec, dim}, Rule::Normalize, std::nullopt, {child}, std::nullopt});
  }

  NodePtr simple(const LinearSystemSpec& spec) {
    const auto& d = spec.degrees();
    const std::int64_t n = spec.points().point_count();
    DegenerationParams p;
    try {
      p = simple_params(d, n);
    } catch (const std::invalid_argument&) {
      return nullptr;
    }
    const int r = static_cast<int>(d.size());
    auto l2 = attach(doubles(with_last(d, r), p.n2), "L2");
    if (!l2 || l2->claim.dim != -1) return nullptr;
    auto hat = attach(doubles(with_last(d, d.values().back() - r - 1), p.n1), "hatL1");
    const std::int64_t e = expected_dimension(spec);
    if (!hat || hat->claim.dim != e) return nullptr;
    return std::make_shared<CertificateNode>(
        CertificateNode{"", {spec, e}, Rule::SimpleDeg, p, {l2, hat}, std::nullopt});
  }

  NodePtr double_deg(const LinearSystemSpec& spec) {
    const auto& d = spec.degrees();
    const std::int64_t n = spec.points().point_count();
    DegenerationParams p;
    try {
      p = double_params(d, n);
    } catch (const std::invalid_argument&) {
      return nullptr;
    }
    const int dr = d.values().back();
    const MultiDegree base_deg = drop_last(d);

    auto hat1 = attach(doubles(with_last(d, dr - 2), p.n1), "hatL1");
    if (!hat1 || hat1->claim.dim != -1) return nullptr;
    const auto hat2_spec = canonical(LinearSystemSpec::product_of_lines(
        with_last(d, 0), FatPointSpec({{2, p.n2 - p.beta}, {1, p.beta}})));
    auto hat2 = attach(hat2_spec, "hatL2");
    if (!hat2 || hat2->claim.dim != -1) return nullptr;
    const auto t_spec = doubles(with_last(d, dr - 1), p.n1 + p.beta);
    auto trans = attach(t_spec, "transversality");
    if (!trans || trans->claim.dim != expected_dimension(t_spec)) return nullptr;
    const auto l1_spec = doubles(with_last(d, dr - 1), p.n1);
    auto l1 = attach(l1_spec, "L1");
    if (!l1 || l1->claim.dim != expected_dimension(l1_spec)) return nullptr;
    const auto res_spec = doubles(base_deg, p.n2);
    auto res = attach(res_spec, "restriction");
    if (!res || res->claim.dim != expected_dimension(res_spec)) return nullptr;

    const int r = static_cast<int>(d.size());
    const std::int64_t dim_r =
        std::max<std::int64_t>(expected_dimension(l1_spec) - (p.n2 - p.beta) - std::int64_t{r} * p.beta, -1);
    if (dim_r != expected_dimension(spec)) return nullptr;
    return std::make_shared<CertificateNode>(
        CertificateNode{"", {spec, dim_r}, Rule::DoubleDeg, p, {hat1, hat2, trans, l1, res}, std::nullopt});
  }

  PlanOptions opt_;
  std::unordered_map<std::string, NodePtr> memo_;
  std::unordered_map<std::string, NodePtr> attached_;
  std::unordered_set<std::string> active_;
};

// ---- checker ----

class Checker {
 public:
  CheckResult run(const CertificateNode& root) {
    CheckResult out;
    visit(root, root.role.empty() ? "root" : root.role, out);
    return out;
  }

 private:
  bool fail(CheckResult& out, const std::string& path, std::string reason) {
    if (out.ok) {
      out.ok = false;
      out.path = path;
      out.reason = std::move(reason);
    }
    return false;
  }

  bool expect_child(const CertificateNode& node, std::size_t i, std::string_view role, const LinearSystemSpec& spec,
                    const std::string& path, CheckResult& out) {
    const auto& c = node.children[i];
    if (!c) return fail(out, path, "missing child " + std::string(role));
    if (c->role != role) return fail(out, path, "child " + std::to_string(i) + " should be " + std::string(role));
    const std::string cpath = path + "/" + c->role;
    if (!(c->claim.spec == spec))
      return fail(out, cpath, "spec " + c->claim.spec.to_string() + " should be " + spec.to_string());
    return visit(*c, cpath, out);
  }

  bool verify_evidence(const LinearSystemSpec& spec, const LeafEvidence& ev, std::int64_t dim,
                       const std::string& path, CheckResult& out) {
    const auto rank = rank_with(spec, ev.prime, ev.seed);
    if (!rank) return fail(out, path, "prime " + std::to_string(ev.prime) + " unusable for this system");
    if (*rank != ev.rank)
      return fail(out, path, "recorded rank " + std::to_string(ev.rank) + ", recomputed " + std::to_string(*rank));
    if (spec.projective_dim() - *rank != dim)
      return fail(out, path, "rank gives dimension " + std::to_string(spec.projective_dim() - *rank));
    return true;
  }

  bool visit(const CertificateNode& node, const std::string& path, CheckResult& out) {
    if (verified_.count(&node)) return true;
    const auto& spec = node.claim.spec;
    const std::int64_t dim = node.claim.dim;
    if (spec.ambient() != AmbientKind::ProductOfLines) return fail(out, path, "claim is not on a product of lines");
    if (!(canonical(spec) == spec)) return fail(out, path, "claim spec is not in canonical order");
    if (dim < -1) return fail(out, path, "dimension below -1");

    const auto no_structure = [&](bool evidence_allowed) {
      if (!node.children.empty()) return fail(out, path, "leaf rule with children");
      if (node.params) return fail(out, path, "leaf rule with parameters");
      if (!evidence_allowed && node.evidence) return fail(out, path, "unexpected leaf evidence");
      return true;
    };

    bool ok = false;
    switch (node.rule) {
      case Rule::BaseCase:
        if (!no_structure(true)) return false;
        if (!node.evidence) return fail(out, path, "base case without evidence");
        if (dim != normalized_expected_dimension(spec))
          return fail(out, path, "base case must assert the expected dimension");
        ok = verify_evidence(spec, *node.evidence, dim, path, out);
        break;
      case Rule::ExceptionLookup: {
        if (!no_structure(true)) return false;
        if (!only_doubles(spec.points()) || !all_positive(spec.degrees()))
          return fail(out, path, "exceptions are systems of double points with positive degrees");
        const auto c = classify::classify(spec.degrees(), spec.points().point_count());
        if (c.status != classify::Status::Special) return fail(out, path, "not an exceptional system");
        if (c.dim != dim) return fail(out, path, "exceptional dimension is " + std::to_string(c.dim));
        ok = !node.evidence || verify_evidence(spec, *node.evidence, dim, path, out);
        break;
      }
      case Rule::Citation: {
        if (!no_structure(false)) return false;
        const auto& v = spec.degrees().values();
        if (v.size() < 6 || !std::all_of(v.begin(), v.end(), [](int x) { return x == 1; }) ||
            !only_doubles(spec.points()))
          return fail(out, path, "citation covers only (1,...,1) with r >= 6 and double points");
        if (dim != expected_dimension(spec)) return fail(out, path, "citation asserts the expected dimension");
        ok = true;
        break;
      }
      case Rule::Normalize: {
        if (node.params || node.evidence) return fail(out, path, "normalization carries no parameters");
        if (!spec.degrees().has_zero() || spec.degrees().nonzero_count() == 0)
          return fail(out, path, "normalization needs a zero degree and a positive one");
        if (node.children.size() != 1) return fail(out, path, "normalization has one child");
        const auto [reduced, b] = normalized(spec);
        if (!expect_child(node, 0, "reduced", reduced, path, out)) return false;
        const std::int64_t want = std::max<std::int64_t>(node.children[0]->claim.dim - b, -1);
        if (dim != want) return fail(out, path, "normalized dimension is " + std::to_string(want));
        ok = true;
        break;
      }
      case Rule::SimpleDeg:
        ok = visit_simple(node, path, out);
        break;
      case Rule::DoubleDeg:
        ok = visit_double(node, path, out);
        break;
    }
    if (ok) verified_.insert(&node);
    return ok;
  }

  bool degeneration_prelude(const CertificateNode& node, std::size_t arity, const std::string& path,
                            CheckResult& out) {
    const auto& spec = node.claim.spec;
    if (!node.params) return fail(out, path, "degeneration without parameters");
    if (node.evidence) return fail(out, path, "degeneration with leaf evidence");
    if (node.children.size() != arity) return fail(out, path, "expected " + std::to_string(arity) + " children");
    if (!only_doubles(spec.points()) || !all_positive(spec.degrees()))
      return fail(out, path, "degenerations apply to double points and positive degrees");
    if (spec.degrees().size() < 2) return fail(out, path, "degeneration needs r >= 2");
    const auto& p = *node.params;
    if (p.n1 < 0 || p.n2 < 0 || p.n1 + p.n2 != spec.points().point_count())
      return fail(out, path, "n1 + n2 must equal the number of points");
    return true;
  }

  bool visit_simple(const CertificateNode& node, const std::string& path, CheckResult& out) {
    if (!degeneration_prelude(node, 2, path, out)) return false;
    const auto& spec = node.claim.spec;
    const auto& d = spec.degrees();
    const auto& p = *node.params;
    const int r = static_cast<int>(d.size());
    const int dr = d.values().back();
    if (p.k != r) return fail(out, path, "simple degeneration needs k = r");
    if (p.beta != 0) return fail(out, path, "simple degeneration has beta = 0");
    if (p.n2 != prefix_product(d)) return fail(out, path, "n2 must be " + std::to_string(prefix_product(d)));
    if (dr < r + 1) return fail(out, path, "last degree must be at least r + 1");

    const auto l2 = doubles(with_last(d, r), p.n2);
    const auto hat = doubles(with_last(d, dr - r - 1), p.n1);
    if (virtual_dimension(l2) != -1) return fail(out, path, "v(L2) must be -1");
    if (virtual_dimension(hat) != virtual_dimension(spec)) return fail(out, path, "v(hatL1) must equal v(L)");
    if (!expect_child(node, 0, "L2", l2, path, out)) return false;
    if (node.children[0]->claim.dim != -1) return fail(out, path + "/L2", "L2 must be empty");
    if (!expect_child(node, 1, "hatL1", hat, path, out)) return false;
    const std::int64_t e = expected_dimension(spec);
    if (node.children[1]->claim.dim != e) return fail(out, path + "/hatL1", "hatL1 must be non-special");
    if (node.claim.dim != e) return fail(out, path, "claim must be the expected dimension");
    return true;
  }

  bool visit_double(const CertificateNode& node, const std::string& path, CheckResult& out) {
    if (!degeneration_prelude(node, 5, path, out)) return false;
    const auto& spec = node.claim.spec;
    const auto& d = spec.degrees();
    const auto& p = *node.params;
    const int r = static_cast<int>(d.size());
    const int dr = d.values().back();
    const std::int64_t prod = prefix_product(d);
    if (p.k != 1) return fail(out, path, "double degeneration needs k = 1");
    if (p.beta < 0 || p.beta >= r || p.beta >= p.n2) return fail(out, path, "beta must lie in [0, min(r, n2))");
    if (prod != std::int64_t{r} * (p.n2 - p.beta) + p.beta)
      return fail(out, path, "prod_{i<r}(d_i+1) must equal r(n2 - beta) + beta");
    if (dr < 2) return fail(out, path, "last degree must be at least 2");

    const auto hat1 = doubles(with_last(d, dr - 2), p.n1);
    const auto hat2 = canonical(
        LinearSystemSpec::product_of_lines(with_last(d, 0), FatPointSpec({{2, p.n2 - p.beta}, {1, p.beta}})));
    const auto trans = doubles(with_last(d, dr - 1), p.n1 + p.beta);
    const auto l1 = doubles(with_last(d, dr - 1), p.n1);
    const auto res = doubles(drop_last(d), p.n2);

    if (!expect_child(node, 0, "hatL1", hat1, path, out)) return false;
    if (node.children[0]->claim.dim != -1) return fail(out, path + "/hatL1", "hatL1 must be empty");
    if (!expect_child(node, 1, "hatL2", hat2, path, out)) return false;
    if (node.children[1]->claim.dim != -1) return fail(out, path + "/hatL2", "hatL2 must be empty");
    if (!expect_child(node, 2, "transversality", trans, path, out)) return false;
    if (node.children[2]->claim.dim != expected_dimension(trans))
      return fail(out, path + "/transversality", "transversality system must be non-special");
    if (!expect_child(node, 3, "L1", l1, path, out)) return false;
    if (node.children[3]->claim.dim != expected_dimension(l1)) return fail(out, path + "/L1", "L1 must be non-special");
    if (!expect_child(node, 4, "restriction", res, path, out)) return false;
    if (node.children[4]->claim.dim != expected_dimension(res))
      return fail(out, path + "/restriction", "restriction system must be non-special");

    const std::int64_t dim_r =
        std::max<std::int64_t>(expected_dimension(l1) - (p.n2 - p.beta) - std::int64_t{r} * p.beta, -1);
    const std::int64_t e = expected_dimension(spec);
    if (dim_r != e) return fail(out, path, "dim R = " + std::to_string(dim_r) + " differs from e(L) = " + std::to_string(e));
    if (node.claim.dim != e) return fail(out, path, "claim must be the expected dimension");
    return true;
  }

  std::unordered_set<const CertificateNode*> verified_;
};

}  // namespace

DegenerationParams simple_params(const MultiDegree& deg, std::int64_t n) {
  const int r = static_cast<int>(deg.size());
  if (r < 2) throw std::invalid_argument("degeneration needs r >= 2");
  if (deg.values().back() < r + 1) throw std::invalid_argument("last degree must be at least r + 1");
  const std::int64_t n2 = prefix_product(deg);
  if (n < n2) throw std::invalid_argument("not enough points for a simple degeneration");
  return {r, n - n2, n2, 0};
}

DegenerationParams double_params(const MultiDegree& deg, std::int64_t n) {
  const int r = static_cast<int>(deg.size());
  if (r < 2) throw std::invalid_argument("degeneration needs r >= 2");
  if (deg.values().back() < 2) throw std::invalid_argument("last degree must be at least 2");
  const std::int64_t prod = prefix_product(deg);
  const int beta = static_cast<int>(prod % r);
  const std::int64_t n2 = (prod + std::int64_t{r - 1} * beta) / r;
  if (beta >= n2) throw std::invalid_argument("beta must be below n2");
  if (n < n2) throw std::invalid_argument("not enough points for a double degeneration");
  return {1, n - n2, n2, beta};
}

VirtualDims virtual_bookkeeping(const MultiDegree& deg, std::int64_t n, const DegenerationParams& p) {
  if (p.n1 + p.n2 != n) throw std::invalid_argument("n1 + n2 must equal n");
  const int dr = deg.values().back();
  const auto v = [](const MultiDegree& d, FatPointSpec pts) {
    return virtual_dimension(LinearSystemSpec::product_of_lines(d, std::move(pts)));
  };
  VirtualDims out{};
  out.l1 = v(with_last(deg, dr - p.k), FatPointSpec::doubles(p.n1));
  out.l2 = v(with_last(deg, p.k), FatPointSpec::doubles(p.n2));
  out.hat_l1 = dr - p.k - 1 >= 0 ? v(with_last(deg, dr - p.k - 1), FatPointSpec::doubles(p.n1)) : -1;
  if (p.k == 1 && deg.size() >= 2)
    out.hat_l2 = v(drop_last(deg), FatPointSpec({{2, p.n2 - p.beta}, {1, p.beta}}));
  else
    out.hat_l2 = v(with_last(deg, p.k - 1), FatPointSpec::doubles(p.n2));
  return out;
}

NodePtr plan(const LinearSystemSpec& spec, const PlanOptions& options) {
  if (spec.ambient() != AmbientKind::ProductOfLines) throw std::invalid_argument("plan needs a product of lines");
  if (options.retries < 1) throw std::invalid_argument("retries must be at least 1");
  Planner planner(options);
  auto node = with_role(planner.plan(spec), "root");
  if (!node) throw PlanFailure("no certificate found for " + canonical(spec).to_string());
  return node;
}

NodePtr plan(const MultiDegree& deg, std::int64_t n, const PlanOptions& options) {
  for (int d : deg.values())
    if (d < 1) throw std::invalid_argument("degrees must be positive");
  if (n < 0) throw std::invalid_argument("negative number of points");
  return plan(LinearSystemSpec::product_of_lines(deg, FatPointSpec::doubles(n)), options);
}

CheckResult check(const CertificateNode& node) {
  Checker checker;
  return checker.run(node);
}

int depth(const CertificateNode& node) {
  int best = 0;
  for (const auto& c : node.children) best = std::max(best, 1 + depth(*c));
  return best;
}

std::size_t node_count(const CertificateNode& node) {
  std::unordered_set<const CertificateNode*> seen;
  std::function<void(const CertificateNode&)> walk = [&](const CertificateNode& n) {
    if (!seen.insert(&n).second) return;
    for (const auto& c : n.children) walk(*c);
  };
  walk(node);
  return seen.size();
}

}  // namespace segver::degen
