#ifndef TBA_EVAL_HPP_
#define TBA_EVAL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tba/formula.hpp"
#include "tba/model.hpp"

// Compositional evaluation of object-language formulas against a model.
// Every derived connective is fixed by the model's closure C:
//   negC = C^dc, negI = (C^d)^dc, cons = (C^d)^fp, det = C^fp,
//   undet = complement of det, box = C^d, dia = C, and the named operators
//   ext/bdr/frt via the inter-definition table.

namespace tba {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Element eval(const FormulaPtr& f, const Model& m);

// Local mode: meet of the premises below the join of the conclusions.
// Global mode: all premises top implies some conclusion top.
bool consequence(const Sequent& s, const Model& m);

bool valid(const FormulaPtr& f, const Model& m);

// --- negation-property catalog -----------------------------------------

enum class NegationConnective { CNot, NegC, NegI, NegIC, NegCI };
const char* negation_name(NegationConnective n);
std::optional<NegationConnective> negation_from_name(std::string_view name);
Element apply_negation(NegationConnective n, const Model& m, const Element& a);

enum class NegationPropertyId {
  weakTND, weakECQ, LNC,
  deMorgan1a, deMorgan1b, deMorgan2a, deMorgan2b,
  dblNeg_a, dblNeg_b, weakDblNeg_a, weakDblNeg_b,
  contraposition1a, contraposition1b, contraposition2a, contraposition2b,
  weakContraposition1, weakContraposition2,
  disjSyllogism_a, disjSyllogism_b,
};
const char* negation_property_name(NegationPropertyId p);
const std::vector<NegationPropertyId>& all_negation_properties();

struct PropertyReport {
  NegationPropertyId property;
  NegationConnective negation;
  bool holds = false;
  // Counterexample valuation of the schema's metavariables (A, then B when
  // the schema has two).
  std::vector<Element> witness;
};
// Checks the property schema instantiated with the negation, over every
// valuation of its metavariables in m.
PropertyReport negation_property(NegationPropertyId p, NegationConnective n,
                                 const Model& m);

// Same, but metavariables range only over elements the guard operator maps
// to top (sentence-wise recovery: guard = some operator's fixed-point
// transform).
PropertyReport negation_property_guarded(NegationPropertyId p,
                                         NegationConnective n, const Model& m,
                                         const Op& guard);

// --- recovery operators --------------------------------------------------

struct RecoveryReport {
  // (a) fixed points switch classical behavior on, sentence-wise
  bool open_gives_ecq = true;    // open A  =>  A and negC A = bottom
  bool closed_gives_tnd = true;  // closed A  =>  A or negI A = top
  // (b) gentle explosion and its dual, via the recovery connectives
  bool gentle_explosion = true;  // cons A and A and negC A = bottom
  bool determinedness = true;    // det A  <=  A or negI A
  // (c) the generalized laws for an arbitrary operator eta
  bool eta_explosion = true;     // eta^fpc A and A and eta A = bottom
  bool eta_determined = true;    // eta^fpc A <= A or eta A
  bool eta_excluded = true;      // top <= eta^fp A or A or eta A
  bool eta_exhaustive = true;    // all operators visited (n <= 2)
  // (d) identities between the recovery connectives and the cube
  bool cons_is_negc_fpc = true;
  bool det_is_negi_fpc = true;
  bool undet_is_negi_fp = true;
  bool cons_is_border_compl = true;  // with the border taken as d(fp C)
  bool det_is_border_dual = true;
  // (e) the schema: cons A and Gamma(A) <= Delta(A) implies the guarded
  // consequence for open A, over sampled formula contexts
  bool gamma_delta_schema = true;
  int contexts_sampled = 0;

  bool all() const {
    return open_gives_ecq && closed_gives_tnd && gentle_explosion &&
           determinedness && eta_explosion && eta_determined && eta_excluded &&
           cons_is_negc_fpc && det_is_negi_fpc && undet_is_negi_fp &&
           cons_is_border_compl && det_is_border_dual && gamma_delta_schema;
  }
};
RecoveryReport recovery_theorems(const Model& m, int context_samples = 50,
                                 uint64_t seed = 1);

// A random formula context (one free variable) for the schema tests.
FormulaPtr sample_formula_context(uint64_t seed, const std::string& var,
                                  int max_depth = 4);

}  // namespace tba

#endif  // TBA_EVAL_HPP_
