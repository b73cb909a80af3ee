#ifndef TBA_CONDITIONS_HPP_
#define TBA_CONDITIONS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tba/operators.hpp"

// Uniform catalog of the axiomatic conditions on operators: the positive
// (Kuratowski) conditions and their duals, infinitary generalizations,
// negative (anti) counterparts, relativized variants and the weak
// monotonicity forms, each with a checker whose quantifier structure matches
// its defining display.

namespace tba {

enum class ConditionId {
  // positive
  MONO, ADDI_a, ADDI_b, ADDI, MULT_a, MULT_b, MULT,
  EXPN, CNTR, NORM, DNRM, IDEM_a, IDEM_b, IDEM,
  // infinitary positive
  iADDI_a, iADDI_b, iADDI, iMULT_a, iMULT_b, iMULT,
  // negative
  ANTI, nADDI_a, nADDI_b, nMULT_a, nMULT_b,
  nEXPN, nCNTR, nNORM, nDNRM, nIDEM_a, nIDEM_b,
  inADDI_a, inADDI_b, inMULT_a, inMULT_b,
  // relativized positive
  ADDIr_a, ADDIr_b, MULTr_a, MULTr_b,
  iADDIr_a, iADDIr_b, iMULTr_a, iMULTr_b,
  IDEMr_a, IDEMr_b,
  // relativized negative
  nADDIr_a, nADDIr_b, nMULTr_a, nMULTr_b, nMULTr,
  inADDIr_a, inADDIr_b, inMULTr_a, inMULTr_b,
  nIDEMr_a, nIDEMr_b,
  // weak monotonicity
  MONOw1, MONOw2, ANTIw1, ANTIw2,
};

const char* condition_name(ConditionId c);
std::optional<ConditionId> condition_from_name(std::string_view name);
const std::vector<ConditionId>& all_condition_ids();
bool condition_is_infinitary(ConditionId c);

// Counterexample: the elements (A, or A and B) and/or the family S that
// violate the condition.
struct Witness {
  std::vector<Element> elements;
  std::optional<Family> family;
};

struct CheckReport {
  ConditionId condition;
  bool holds = false;
  // Set when an infinitary check had to use bounded families (n >= 3).
  bool approximate = false;
  std::optional<Witness> witness;
};

// Bounded-family policy for infinitary checks at n >= 3. At n <= 2 every
// family is enumerated and results are exact.
struct InfinitaryPolicy {
  int family_bound = 3;
  int samples = 64;
  uint64_t seed = 1;
};

CheckReport check(ConditionId c, const Op& f);
CheckReport check(ConditionId c, const Op& f, const InfinitaryPolicy& policy);
bool holds(ConditionId c, const Op& f);

// True iff c1 and c2 agree on every operator over d. Exhaustive; n <= 2.
bool check_equiv_scan(ConditionId c1, ConditionId c2, PointDomain d);

// True iff c on f agrees with c_translated on transform(f, k). The dual
// pairing of Table 2 is k = D; Table 4 pairs via C and DC.
bool check_translation(ConditionId c, const Op& f, TransformKind k,
                       ConditionId c_translated);
bool check_dual_pair(ConditionId c, ConditionId c_dual, const Op& f);

struct TranslationPairing {
  ConditionId lhs;
  TransformKind kind;
  ConditionId rhs;
};
// Every dual/complement/dual-complement pairing from the condition tables.
const std::vector<TranslationPairing>& translation_catalog();

// The three-way correspondences under ^fp and ^fpc, e.g.
// EXPN f <-> EXPN f^fp <-> nEXPN f^fpc.
struct FpTriple {
  ConditionId base;
  ConditionId under_fp;
  ConditionId under_fpc;
};
const std::vector<FpTriple>& fp_triple_catalog();
bool check_fp_triple(ConditionId base, const Op& f);

// The conditional equivalences between plain and relativized conditions
// mediated by (n)EXPN / (n)CNTR.
struct BridgeBullet {
  std::string description;
  bool applicable;  // guard condition held for f
  bool holds;       // equivalence held (vacuously true when not applicable)
};
std::vector<BridgeBullet> check_relativization_bridge(const Op& f);

// Fast additivity-over-suprema test via singleton decomposition:
// f(X) = join of f({a}) over atoms a below X, and f(bottom) = bottom.
bool iaddi_via_singletons(const Op& f);

}  // namespace tba

#endif  // TBA_CONDITIONS_HPP_
