#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segver/gf.hpp"
#include "segver/model.hpp"

namespace segver::degen {

/// Inference rules of a certificate.
///  BaseCase         dimension read off a rank at recorded random points
///  ExceptionLookup  one of the four special families, dimension from the table
///  Citation         all-ones multi-degree with r >= 6, non-special by an external result
///  Normalize        drop zero-degree factors and simple points
///  SimpleDeg        (r, prod_{i<r}(d_i+1))-degeneration, L_2 empty
///  DoubleDeg        (1, n_2, beta)-degeneration with transversal restrictions
enum class Rule { BaseCase, ExceptionLookup, Citation, Normalize, SimpleDeg, DoubleDeg };

std::string_view to_string(Rule rule);
/// Throws std::invalid_argument on unknown names.
Rule rule_from_string(std::string_view name);

struct DegenerationParams {
  int k = 0;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  int beta = 0;

  bool operator==(const DegenerationParams&) const = default;
};

struct LeafEvidence {
  std::uint32_t prime = gf::kDefaultPrime;
  std::uint64_t seed = 0;
  std::int64_t rank = 0;

  bool operator==(const LeafEvidence&) const = default;
};

struct Claim {
  LinearSystemSpec spec;
  std::int64_t dim;

  bool operator==(const Claim&) const = default;
};

struct CertificateNode;
using NodePtr = std::shared_ptr<const CertificateNode>;

/// Immutable once built; subtrees may be shared.
struct CertificateNode {
  std::string role;
  Claim claim;
  Rule rule;
  std::optional<DegenerationParams> params;
  std::vector<NodePtr> children;
  std::optional<LeafEvidence> evidence;
};

/// Structural equality, following children.
bool same_tree(const CertificateNode& a, const CertificateNode& b);

/// Product-of-lines spec with degrees sorted ascending and points sorted
/// descending. Claims are stated in this form.
LinearSystemSpec canonical(const LinearSystemSpec& spec);

/// Case 1 parameters: k = r, n_2 = prod_{i<r}(d_i+1). Degrees sorted.
DegenerationParams simple_params(const MultiDegree& deg, std::int64_t n);
/// Case 2 parameters: k = 1, prod_{i<r}(d_i+1) = r(n_2 - beta) + beta with
/// 0 <= beta < r.
DegenerationParams double_params(const MultiDegree& deg, std::int64_t n);

struct VirtualDims {
  std::int64_t l1;
  std::int64_t l2;
  std::int64_t hat_l1;
  std::int64_t hat_l2;

  bool operator==(const VirtualDims&) const = default;
};

/// Virtual dimensions of L_1, L_2 and the kernels, with hat L_2 taken as
/// L_(d_1..d_{r-1})(2^{n_2-beta}, 1^beta). Splits the last degree.
VirtualDims virtual_bookkeeping(const MultiDegree& deg, std::int64_t n, const DegenerationParams& params);

struct PlanOptions {
  std::uint32_t prime = gf::kDefaultPrime;
  std::uint64_t seed = 0;
  int retries = 3;
  /// Largest section count proved by a rank computation.
  std::int64_t base_cap = 5000;
};

/// Thrown when no rule applies, e.g. a special system outside the table.
class PlanFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Certificate for L_deg(2^n). Degrees must be positive.
NodePtr plan(const MultiDegree& deg, std::int64_t n, const PlanOptions& options = {});
/// Certificate for a product-of-lines system; zero degrees and mixed
/// multiplicities are allowed.
NodePtr plan(const LinearSystemSpec& spec, const PlanOptions& options = {});

struct CheckResult {
  bool ok = true;
  /// Slash-separated roles from the root to the first failing node.
  std::string path;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

/// Recomputes every child spec and side condition; BaseCase ranks are
/// recomputed at the recorded points.
CheckResult check(const CertificateNode& node);

/// Longest root-to-leaf edge count.
int depth(const CertificateNode& node);
/// Distinct nodes in the tree.
std::size_t node_count(const CertificateNode& node);

/// JSON: {role, claim{ambient, degrees, points[{multiplicity,count}], dim},
/// rule, params{k,n1,n2,beta}|null, children[], leafEvidence{prime,seed,rank}|null}.
std::string to_json(const CertificateNode& node, int indent = 2);
/// Throws std::invalid_argument on malformed input.
NodePtr from_json(std::string_view text);

}  // namespace segver::degen
