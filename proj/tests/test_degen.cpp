#include <functional>

#include "doctest.h"
#include "json.hpp"
#include "segver/classify.hpp"
#include "segver/degen.hpp"
#include "segver/interp.hpp"

using namespace segver;
using namespace segver::degen;
using nlohmann::ordered_json;

namespace {

LinearSystemSpec doubles(std::vector<int> d, std::int64_t n) {
  return LinearSystemSpec::product_of_lines(MultiDegree(std::move(d)), FatPointSpec::doubles(n));
}

const CertificateNode* child(const CertificateNode& node, std::string_view role) {
  for (const auto& c : node.children)
    if (c->role == role) return c.get();
  return nullptr;
}

/// Serializes, edits the JSON and parses back.
NodePtr corrupt(const CertificateNode& node, const std::function<void(ordered_json&)>& edit) {
  auto j = ordered_json::parse(to_json(node));
  edit(j);
  return from_json(j.dump());
}

/// (r, sum of degrees) after dropping zero degrees.
std::pair<std::size_t, int> size_of(const LinearSystemSpec& spec) {
  const auto d = spec.degrees().without_zeros();
  return {d.size(), d.sum()};
}

void check_descent(const CertificateNode& node) {
  for (const auto& c : node.children) {
    // Normalization keeps the system and only drops zero factors.
    if (node.rule == Rule::Normalize)
      CHECK(c->claim.spec.degrees().size() < node.claim.spec.degrees().size());
    else
      CHECK(size_of(c->claim.spec) < size_of(node.claim.spec));
    check_descent(*c);
  }
}

}  // namespace

TEST_CASE("rule names round trip") {
  for (Rule r : {Rule::BaseCase, Rule::ExceptionLookup, Rule::Citation, Rule::Normalize, Rule::SimpleDeg, Rule::DoubleDeg})
    CHECK(rule_from_string(to_string(r)) == r);
  CHECK_THROWS_AS(rule_from_string("Magic"), std::invalid_argument);
}

TEST_CASE("degeneration parameters") {
  CHECK(simple_params(MultiDegree({1, 1, 1, 7}), 13) == DegenerationParams{4, 5, 8, 0});
  CHECK(simple_params(MultiDegree({2, 2, 2, 6}), 38) == DegenerationParams{4, 11, 27, 0});
  // 2 * 2 * 3 * 3 = 5 * (8 - 1) + 1
  const auto p = double_params(MultiDegree({1, 1, 2, 2, 3}), 24);
  CHECK(p == DegenerationParams{1, 16, 8, 1});
  CHECK(5 * (p.n2 - p.beta) + p.beta == 36);
  for (int r = 2; r <= 6; ++r)
    for (int d = 1; d <= 4; ++d) {
      std::vector<int> degs(static_cast<std::size_t>(r), d);
      degs.back() = d + 2;
      const MultiDegree deg(degs);
      const auto n = critical_range(deg).upper;
      const auto q = double_params(deg, n);
      std::int64_t prod = 1;
      for (int i = 0; i + 1 < r; ++i) prod *= degs[static_cast<std::size_t>(i)] + 1;
      CHECK(q.k == 1);
      CHECK(q.beta >= 0);
      CHECK(q.beta < r);
      CHECK(r * (q.n2 - q.beta) + q.beta == prod);
      CHECK(q.n1 + q.n2 == n);
    }
}

TEST_CASE("virtual bookkeeping") {
  for (const auto& d : {std::vector<int>{1, 1, 1, 7}, std::vector<int>{2, 2, 2, 6}, std::vector<int>{3, 5}, std::vector<int>{2, 3, 6}}) {
    const MultiDegree deg(d);
    const auto [lo, hi] = critical_range(deg);
    for (std::int64_t n : {lo, hi}) {
      const auto v = virtual_bookkeeping(deg, n, simple_params(deg, n));
      CHECK(v.l2 == -1);
      CHECK(v.hat_l1 == virtual_dimension(doubles(d, n)));
      const auto w = virtual_bookkeeping(deg, n, double_params(deg, n));
      CHECK(w.hat_l2 == -1);
    }
  }
}

TEST_CASE("planner follows the case analysis") {
  for (std::int64_t n : {12, 13}) {
    const auto cert = plan(MultiDegree({1, 1, 1, 7}), n);
    CHECK(cert->role == "root");
    CHECK(cert->rule == Rule::SimpleDeg);
    CHECK(cert->params->k == 4);
    CHECK(cert->params->n2 == 8);
    const auto* hat = child(*cert, "hatL1");
    REQUIRE(hat);
    CHECK(hat->claim.spec.degrees() == MultiDegree({1, 1, 1, 2}));
    CHECK(check(*cert));
  }
  const auto [lo, hi] = critical_range(MultiDegree({2, 2, 2, 6}));
  for (std::int64_t n : {lo, hi}) {
    const auto cert = plan(MultiDegree({2, 2, 2, 6}), n);
    CHECK(cert->rule == Rule::SimpleDeg);
    CHECK(cert->params->k == 4);
    CHECK(cert->params->n2 == 27);
    CHECK(child(*cert, "hatL1")->claim.spec.degrees() == MultiDegree({1, 2, 2, 2}));
    const auto result = check(*cert);
    CHECK_MESSAGE(result.ok, result.path << ": " << result.reason);
  }
  const auto leaf = plan(MultiDegree({1, 1}), 1);
  CHECK(leaf->rule == Rule::BaseCase);
  CHECK(leaf->children.empty());
  CHECK(check(*leaf));

  const auto ex = plan(MultiDegree({2, 2, 2}), 7);
  CHECK(ex->rule == Rule::ExceptionLookup);
  CHECK(ex->claim.dim == 0);
  CHECK(check(*ex));

  CHECK_THROWS(plan(MultiDegree({0, 2}), 1));
}

TEST_CASE("all-ones beyond the cap is a citation") {
  const MultiDegree deg(std::vector<int>(13, 1));
  const auto cert = plan(deg, critical_range(deg).upper);
  CHECK(cert->rule == Rule::Citation);
  CHECK(check(*cert));
}

TEST_CASE("planner descends and stays shallow") {
  for (const auto& d : {std::vector<int>{1, 1, 2, 2, 3}, std::vector<int>{2, 2, 2, 2, 2}, std::vector<int>{1, 1, 1, 1, 2, 6},
                        std::vector<int>{1, 1, 1, 7}}) {
    const MultiDegree deg(d);
    for (std::int64_t n : {critical_range(deg).lower, critical_range(deg).upper}) {
      const auto cert = plan(deg, n);
      CHECK(depth(*cert) <= deg.sum() + static_cast<int>(deg.size()));
      check_descent(*cert);
      const auto result = check(*cert);
      CHECK_MESSAGE(result.ok, result.path << ": " << result.reason);
      CHECK(cert->claim.dim == classify::classify(deg, n).dim);
    }
  }
}

TEST_CASE("json round trip") {
  const auto cert = plan(MultiDegree({1, 1, 2, 2, 3}), 24);
  const auto text = to_json(*cert);
  const auto back = from_json(text);
  CHECK(same_tree(*cert, *back));
  CHECK(to_json(*back) == text);
  // Parsing does not restore shared subtrees.
  CHECK(node_count(*back) >= node_count(*cert));
  CHECK(depth(*back) == depth(*cert));

  const auto j = ordered_json::parse(text);
  for (const char* key : {"role", "claim", "rule", "params", "children", "leafEvidence"}) CHECK(j.contains(key));
  CHECK(j["claim"]["ambient"] == "product_of_lines");

  CHECK_THROWS_AS(from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(from_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(from_json(R"({"role":"root"})"), std::invalid_argument);
  CHECK_THROWS_AS(corrupt(*cert, [](ordered_json& x) { x["rule"] = "Magic"; }), std::invalid_argument);
  CHECK_THROWS_AS(corrupt(*cert, [](ordered_json& x) { x["claim"]["degrees"] = "two"; }), std::invalid_argument);
}

TEST_CASE("corrupted certificates are rejected with a path") {
  const auto cert = plan(MultiDegree({1, 1, 2, 2, 3}), 24);
  REQUIRE(check(*cert));
  REQUIRE(cert->rule == Rule::DoubleDeg);

  SUBCASE("wrong n2") {
    const auto bad = corrupt(*cert, [](ordered_json& j) {
      j["params"]["n2"] = 9;
      j["params"]["n1"] = 15;
    });
    const auto r = check(*bad);
    CHECK_FALSE(r.ok);
    CHECK(r.path == "root");
  }
  SUBCASE("beta equal to r") {
    const auto bad = corrupt(*cert, [](ordered_json& j) { j["children"][0]["params"]["beta"] = 5; });
    const auto r = check(*bad);
    CHECK_FALSE(r.ok);
    CHECK(r.path == "root/hatL1");
  }
  SUBCASE("wrong child degree") {
    const auto bad = corrupt(*cert, [](ordered_json& j) { j["children"][0]["claim"]["degrees"] = {1, 1, 1, 2, 3}; });
    const auto r = check(*bad);
    CHECK_FALSE(r.ok);
    CHECK(r.path == "root/hatL1");
  }
  SUBCASE("tampered leaf evidence") {
    const auto bad = corrupt(*cert, [](ordered_json& j) {
      auto& leaf = j["children"][0]["children"][0]["children"][0];
      REQUIRE(leaf["rule"] == "BaseCase");
      leaf["leafEvidence"]["rank"] = leaf["leafEvidence"]["rank"].get<int>() - 1;
    });
    const auto r = check(*bad);
    CHECK_FALSE(r.ok);
    CHECK(r.path == "root/hatL1/hatL1/reduced");
  }
  SUBCASE("simple degeneration with v(L2) not -1") {
    const auto simple = plan(MultiDegree({1, 1, 1, 7}), 13);
    const auto bad = corrupt(*simple, [](ordered_json& j) {
      j["params"]["n2"] = 7;
      j["params"]["n1"] = 6;
    });
    const auto r = check(*bad);
    CHECK_FALSE(r.ok);
    CHECK(r.path == "root");
  }
  SUBCASE("wrong claimed dimension") {
    const auto bad = corrupt(*cert, [](ordered_json& j) { j["claim"]["dim"] = 0; });
    CHECK_FALSE(check(*bad).ok);
  }
}

TEST_CASE("root claims agree with interpolation") {
  for (const auto& d : {std::vector<int>{1, 2, 5}, std::vector<int>{1, 1, 3, 3}, std::vector<int>{1, 1, 1, 1, 1, 1}}) {
    const MultiDegree deg(d);
    for (std::int64_t n : {critical_range(deg).lower, critical_range(deg).upper}) {
      const auto cert = plan(deg, n);
      CHECK(check(*cert));
      CHECK(cert->claim.dim == interp::dim_linear_system(doubles(d, n)).computed);
    }
  }
}
