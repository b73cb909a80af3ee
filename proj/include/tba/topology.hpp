#ifndef TBA_TOPOLOGY_HPP_
#define TBA_TOPOLOGY_HPP_

#include <string>
#include <vector>

#include "tba/conditions.hpp"
#include "tba/operators.hpp"

// Named topological operators, their inter-definitions, axiom bundles,
// fixed-point classifications, composition-monoid experiments, and the
// relation <-> operator bridge.

namespace tba {

enum class OperatorRole { Closure, Interior, Exterior, Border, Frontier };

const char* role_name(OperatorRole r);
std::optional<OperatorRole> role_from_name(std::string_view name);

// The inter-definition table: given f playing role `from`, returns the
// operator playing role `to`. Total; no axioms are assumed.
Op derive(const Op& f, OperatorRole from, OperatorRole to);

struct AxiomCheck {
  std::string axiom;  // e.g. "C1 (ADDI)"
  bool holds;
};
std::vector<AxiomCheck> axiom_bundle_check(const Op& f, OperatorRole role);
bool satisfies_bundle(const Op& f, OperatorRole role);

struct ElementClassification {
  bool open = false;
  bool closed = false;
  bool clopen = false;
  bool regular_open = false;
  bool regular_closed = false;
  bool dense = false;
  bool boundary = false;
  bool nowhere_dense = false;
};
// Classifies a against the closure operator and the operators derived from
// it (I, B, F, E per the inter-definition table).
ElementClassification classify_element(const Op& closure, const Element& a);

// A reachability relation: row w holds the successor set of point w.
class Relation {
 public:
  explicit Relation(PointDomain d) : n_(d.n), rows_(d.n, 0) {}
  Relation(PointDomain d, std::vector<uint32_t> rows);

  static Relation total(PointDomain d);
  static Relation identity(PointDomain d);

  PointDomain domain() const { return PointDomain(n_); }
  int points() const { return n_; }
  uint32_t successors(int w) const { return rows_[w]; }
  bool related(int w, int v) const { return (rows_[w] >> v) & 1u; }
  void set(int w, int v, bool value = true);

  bool operator==(const Relation&) const = default;

 private:
  int n_;
  std::vector<uint32_t> rows_;
};

bool is_reflexive(const Relation& r);
bool is_transitive(const Relation& r);

// C[R](A) = { w : exists v. R w v and v in A };  R[f] w v  iff  w in f({v}).
Op closure_of_relation(const Relation& r);
Relation relation_of_operator(const Op& f);

struct OperatorBridgeReport {
  bool iaddi = false;             // infinitary additivity of f
  bool roundtrip_fixed = false;   // f == C[R[f]]
  bool iaddi_iff_roundtrip = false;
  bool expn_gives_reflexive = false;      // EXPN f -> R[f] reflexive
  bool mono_idem_give_transitive = false; // MONO f & IDEM_a f -> R[f] transitive
};
OperatorBridgeReport bridge_properties(const Op& f);

struct RelationBridgeReport {
  bool iaddi_holds = false;  // on C[R]; holds for every R
  bool norm_holds = false;   // likewise
  bool expn_iff_reflexive = false;
  bool idem_a_iff_transitive = false;
};
RelationBridgeReport bridge_properties(const Relation& r);

// Closure of a generator set under composition, capped. The empty word
// (identity) is always a member.
struct MonoidResult {
  std::vector<Op> ops;  // sorted, canonical
  bool saturated = false;
};
MonoidResult monoid_closure(const std::vector<Op>& generators, size_t cap = 64);

// Orbit of a seed element under generator application, capped.
struct OrbitResult {
  Family family;
  bool saturated = false;
};
OrbitResult orbit(const std::vector<Op>& generators, const Element& seed,
                  size_t cap = 64);

// Number of distinct operators expressible as compositions of the closure
// with an odd number of complements (the negation-like compositions),
// within the capped composition monoid.
struct OddCompositionResult {
  size_t count = 0;
  bool saturated = false;
};
OddCompositionResult odd_complement_compositions(const Op& closure,
                                                 size_t cap = 64);

// All Kuratowski closure operators over d, one per topology. Enumerated via
// reflexive-transitive relations (finite topologies are Alexandrov). n <= 4.
std::vector<Op> enumerate_topologies(PointDomain d);
// Independent route for cross-checking: brute force over open-set families
// closed under union/intersection and containing bottom and top. n <= 3.
std::vector<Op> enumerate_topologies_bruteforce(PointDomain d);

// The border operator generated from an arbitrary closure as d(fp C), the
// rear-face cube vertex. Coincides with the inter-definition table's border
// exactly when EXPN C holds.
Op border_from_fixedpoint(const Op& closure);

// Hausdorff residue: A -> B(-B(-A)) for a border operator B.
Op hausdorff_residue(const Op& border);

}  // namespace tba

#endif  // TBA_TOPOLOGY_HPP_
