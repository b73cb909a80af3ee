#ifndef TBA_QUANTIFIERS_HPP_
#define TBA_QUANTIFIERS_HPP_

#include <optional>
#include <vector>

#include "tba/conditions.hpp"
#include "tba/operators.hpp"

// Type-lifted quantifiers. A quantified "predicate" is a total table from
// sort members (indexed 0..k-1) to elements; evaluation is pointwise over
// the point domain.

namespace tba {

struct DomainSpec {
  enum class Kind { Unrestricted, Constant, Varying };
  Kind kind = Kind::Unrestricted;
  // Constant: the subset of sort members forming the domain D.
  std::vector<int> constant_members;
  // Varying: one "existence" element per sort member (total).
  std::vector<Element> delta;

  static DomainSpec unrestricted() { return {}; }
  static DomainSpec constant(std::vector<int> members);
  static DomainSpec varying(std::vector<Element> delta);
};

// pi: at w, every sort member admitted at w satisfies phi at w.
// sigma: at w, some admitted member satisfies phi at w.
Element pi(const std::vector<Element>& phi, const DomainSpec& spec,
           PointDomain d);
Element sigma(const std::vector<Element>& phi, const DomainSpec& spec,
              PointDomain d);

// Lifts a constant domain to the equivalent varying one: delta maps members
// of D to top and everything else to bottom.
DomainSpec lift_up(const std::vector<int>& constant_members, size_t sort_size,
                   PointDomain d);

struct QuantifierLawsReport {
  bool duality = true;             // pi phi = -(sigma phi^c)
  bool mostowski = true;           // pi = big meet of range, sigma dually
  bool lift_up_embedding = true;   // pi[D] = pi{D^}
  bool composition_law = true;     // pi(f o g) = pi[range g] f
  bool varying_as_unrestricted = true;  // pi{delta} phi = pi(delta impl phi)
  bool drinker = true;             // exists x. Drunk x -> forall y. Drunk y
  bool prop_complement_witness = true;  // forall A. exists B. A <-> -B
  bool exhaustive = true;
  bool all() const {
    return duality && mostowski && lift_up_embedding && composition_law &&
           varying_as_unrestricted && drinker && prop_complement_witness;
  }
};
// Exercises the laws over the propositional sort of d (exhaustively when the
// table space is small, sampling otherwise) and the drinker's principle over
// individual sorts of size <= max_individuals.
QuantifierLawsReport quantifier_laws(PointDomain d, int max_individuals = 4,
                                     uint64_t seed = 1);

struct BarcanReport {
  bool cbf1 = true;  // MONO f -> f(pi psi) <= pi(f o psi)
  bool cbf2 = true;  // MONO f -> sigma(f o psi) <= f(sigma psi)
  bool bf1 = true;   // iMULT_b f -> pi(f o psi) <= f(pi psi)
  bool bf2 = true;   // iADDI_a f -> f(sigma psi) <= sigma(f o psi)
  bool cbf1_cons = true;  // constant-domain variants
  bool bf1_cons = true;
  bool exhaustive = true;
  bool all() const {
    return cbf1 && cbf2 && bf1 && bf2 && cbf1_cons && bf1_cons;
  }
};
// Checks the Barcan laws for f against every psi table on a sort of the
// given size (exhaustive when feasible) and every constant domain.
BarcanReport barcan_check(const Op& f, int sort_size, uint64_t samples = 4096,
                          uint64_t seed = 1);

// A varying-domain countermodel: an operator satisfying all the infinitary
// interior conditions together with delta and psi tables breaking BF-1-var
// (or CBF-1-var).
struct VaryingDomainCountermodel {
  Op interior;
  std::vector<Element> delta;
  std::vector<Element> psi;
  Element lhs;  // the side that fails to be below rhs
  Element rhs;
  bool converse = false;  // true when it breaks CBF-1-var instead
};
std::optional<VaryingDomainCountermodel> find_bf1_var_countermodel(
    PointDomain d, int sort_size, uint64_t budget, bool converse = false);

}  // namespace tba

#endif  // TBA_QUANTIFIERS_HPP_
