#include <stdexcept>

#include "json.hpp"
#include "segver/degen.hpp"

namespace segver::degen {

using nlohmann::ordered_json;

namespace {

ordered_json spec_json(const LinearSystemSpec& spec, std::int64_t dim) {
  ordered_json pts = ordered_json::array();
  for (const auto& e : spec.points().entries()) pts.push_back({{"multiplicity", e.multiplicity}, {"count", e.count}});
  return {{"ambient", to_string(spec.ambient())},
          {"degrees", spec.degrees().values()},
          {"points", pts},
          {"dim", dim}};
}

ordered_json node_json(const CertificateNode& node) {
  ordered_json j;
  j["role"] = node.role;
  j["claim"] = spec_json(node.claim.spec, node.claim.dim);
  j["rule"] = to_string(node.rule);
  if (node.params)
    j["params"] = {{"k", node.params->k}, {"n1", node.params->n1}, {"n2", node.params->n2}, {"beta", node.params->beta}};
  else
    j["params"] = nullptr;
  j["children"] = ordered_json::array();
  for (const auto& c : node.children) j["children"].push_back(node_json(*c));
  if (node.evidence)
    j["leafEvidence"] = {
        {"prime", node.evidence->prime}, {"seed", node.evidence->seed}, {"rank", node.evidence->rank}};
  else
    j["leafEvidence"] = nullptr;
  return j;
}

const ordered_json& field(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const ordered_json& j, const char* key) {
  const auto& v = field(j, key);
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("field '") + key + "' has the wrong type");
  }
}

NodePtr parse_node(const ordered_json& j, int depth) {
  if (depth > 10000) throw std::invalid_argument("certificate nested too deeply");
  auto node = std::make_shared<CertificateNode>(CertificateNode{
      get<std::string>(j, "role"),
      {LinearSystemSpec::product_of_lines(MultiDegree({1}), FatPointSpec()), 0},
      rule_from_string(get<std::string>(j, "rule")),
      std::nullopt,
      {},
      std::nullopt});

  const auto& claim = field(j, "claim");
  const auto ambient = get<std::string>(claim, "ambient");
  if (ambient != to_string(AmbientKind::ProductOfLines))
    throw std::invalid_argument("certificate claims must be on product_of_lines");
  std::vector<FatPoints> pts;
  const auto& jp = field(claim, "points");
  if (!jp.is_array()) throw std::invalid_argument("field 'points' must be an array");
  for (const auto& e : jp) pts.push_back({get<int>(e, "multiplicity"), get<std::int64_t>(e, "count")});
  node->claim = {LinearSystemSpec::product_of_lines(MultiDegree(get<std::vector<int>>(claim, "degrees")),
                                                    FatPointSpec(std::move(pts))),
                 get<std::int64_t>(claim, "dim")};

  if (const auto& p = field(j, "params"); !p.is_null())
    node->params = DegenerationParams{get<int>(p, "k"), get<std::int64_t>(p, "n1"), get<std::int64_t>(p, "n2"),
                                      get<int>(p, "beta")};
  const auto& children = field(j, "children");
  if (!children.is_array()) throw std::invalid_argument("field 'children' must be an array");
  for (const auto& c : children) node->children.push_back(parse_node(c, depth + 1));
  if (const auto& ev = field(j, "leafEvidence"); !ev.is_null())
    node->evidence = LeafEvidence{get<std::uint32_t>(ev, "prime"), get<std::uint64_t>(ev, "seed"),
                                  get<std::int64_t>(ev, "rank")};
  return node;
}

}  // namespace

std::string to_json(const CertificateNode& node, int indent) { return node_json(node).dump(indent); }

NodePtr from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  return parse_node(j, 0);
}

}  // namespace segver::degen
