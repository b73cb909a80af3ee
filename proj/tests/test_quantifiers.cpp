#include "doctest.h"

#include "tba/eval.hpp"
#include "tba/quantifiers.hpp"
#include "tba/topology.hpp"

using namespace tba;

namespace {

const PointDomain d1(1);
const PointDomain d2(2);

std::vector<Element> identity_table(PointDomain d) {
  std::vector<Element> out;
  for (uint32_t i = 0; i < d.element_count(); ++i) out.emplace_back(i, d);
  return out;
}

}  // namespace

TEST_CASE("pi and sigma over the propositional sort") {
  auto table = identity_table(d2);
  CHECK(pi(table, DomainSpec::unrestricted(), d2) == Element::bottom(d2));
  CHECK(sigma(table, DomainSpec::unrestricted(), d2) == Element::top(d2));

  // constant domains are the big meet/join of the image
  for (uint64_t s = 0; s < 100; ++s) {
    Op f = sample_operator(d2, s);
    std::vector<Element> phi;
    for (uint32_t i = 0; i < 4; ++i) phi.emplace_back(f.apply(i), d2);
    for (uint32_t dm = 0; dm < 16; ++dm) {
      std::vector<int> members;
      Family img(d2);
      for (int i = 0; i < 4; ++i)
        if ((dm >> i) & 1u) {
          members.push_back(i);
          img.insert(phi[i]);
        }
      CHECK(pi(phi, DomainSpec::constant(members), d2) == big_meet(img));
      CHECK(sigma(phi, DomainSpec::constant(members), d2) == big_join(img));
    }
  }
}

TEST_CASE("lift up embedding") {
  auto table = identity_table(d1);
  // exhaustive at 1 point
  for (uint32_t dm = 0; dm < 4; ++dm) {
    std::vector<int> members;
    for (int i = 0; i < 2; ++i)
      if ((dm >> i) & 1u) members.push_back(i);
    auto constant = DomainSpec::constant(members);
    auto lifted = lift_up(members, table.size(), d1);
    CHECK(pi(table, constant, d1) == pi(table, lifted, d1));
    CHECK(sigma(table, constant, d1) == sigma(table, lifted, d1));
  }
  // empty domain: vacuous universal, empty existential
  auto empty = lift_up({}, table.size(), d1);
  CHECK(pi(table, empty, d1) == Element::top(d1));
  CHECK(sigma(table, empty, d1) == Element::bottom(d1));
  // full domain recovers the unrestricted quantifier
  auto full = lift_up({0, 1}, table.size(), d1);
  CHECK(pi(table, full, d1) == pi(table, DomainSpec::unrestricted(), d1));
}

TEST_CASE("domain spec validation") {
  auto table = identity_table(d2);
  CHECK_THROWS_AS(pi(table, DomainSpec::constant({7}), d2),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      pi(table, DomainSpec::varying({Element::top(d2)}), d2),
      std::invalid_argument);
  CHECK_THROWS_AS(lift_up({9}, 4, d2), std::invalid_argument);
}

TEST_CASE("quantifier law report") {
  for (int n = 1; n <= 2; ++n) {
    auto rep = quantifier_laws(PointDomain(n), 3, 1);
    CHECK(rep.all());
    CHECK(rep.exhaustive);
  }
}

TEST_CASE("quantified formulas evaluate through the model") {
  Model m(d2, OperatorRole::Interior, Op(d2, {0b00, 0b01, 0b00, 0b11}));
  CHECK(valid(parse_formula("forall a . exists b . (a <-> -b)"), m));
  // shadowing: inner binder wins
  CHECK(valid(parse_formula("forall a . exists a . (a <-> T)"), m));
  // restricted to open sets both readings of the witness formula diverge:
  // the pointwise evaluation stays valid
  CHECK(valid(parse_formula("forall[open] a . exists[open] b . (a <-> -b)"),
              m));

  // named domains and domain functions
  m.domains.emplace("two", Family({Element(0, d2), Element(3, d2)}, d2));
  CHECK(valid(parse_formula("forall[two] a . det a"), m));
  m.domain_functions.emplace("nowhere", op_bot(d2));
  CHECK(valid(parse_formula("forall{nowhere} a . F"), m));
  CHECK_FALSE(valid(parse_formula("exists{nowhere} a . T"), m));
  CHECK_THROWS_AS(valid(parse_formula("forall[missing] a . a"), m), EvalError);

  // individuals
  m.individuals = 2;
  m.predicates.emplace(
      "Drunk", std::vector<Element>{Element(0b01, d2), Element(0b10, d2)});
  CHECK(valid(
      parse_formula("Exists x . (Drunk(x) -> Forall y . Drunk(y))"), m));
  CHECK_FALSE(valid(parse_formula("Forall x . Drunk(x)"), m));
  CHECK_THROWS_AS(valid(parse_formula("Forall x . Missing(x)"), m), EvalError);

  Model no_individuals(d2, OperatorRole::Closure, Op::identity(d2));
  CHECK_THROWS_AS(valid(parse_formula("Forall x . Drunk(x)"), no_individuals),
                  EvalError);
}

TEST_CASE("barcan laws on concrete operators") {
  // a full interior satisfies everything
  Op sierpinski(d2, {0b00, 0b01, 0b00, 0b11});
  auto rep = barcan_check(sierpinski, 2);
  CHECK(rep.all());
  CHECK(rep.exhaustive);

  // a non-monotone operator is simply not constrained by the guarded laws
  Op wild(d2, {0b10, 0b00, 0b11, 0b01});
  CHECK(barcan_check(wild, 2).all());
}

TEST_CASE("varying domains break the Barcan direction") {
  auto cm = find_bf1_var_countermodel(d2, 1, 1u << 20, false);
  REQUIRE(cm.has_value());
  CHECK(holds(ConditionId::iMULT, cm->interior));
  CHECK(holds(ConditionId::CNTR, cm->interior));
  CHECK(holds(ConditionId::IDEM, cm->interior));
  CHECK_FALSE(leq(cm->lhs, cm->rhs));

  // re-derive the failure from the reported tables
  auto varying = DomainSpec::varying(cm->delta);
  std::vector<Element> f_psi;
  for (const auto& v : cm->psi) f_psi.push_back(cm->interior(v));
  CHECK(pi(f_psi, varying, d2) == cm->lhs);
  CHECK(cm->interior(pi(cm->psi, varying, d2)) == cm->rhs);

  auto converse = find_bf1_var_countermodel(d2, 1, 1u << 20, true);
  CHECK(converse.has_value());
}
