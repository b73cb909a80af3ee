#include "doctest.h"

#include "tba/topology.hpp"

using namespace tba;
using R = OperatorRole;

namespace {

const PointDomain d1(1);
const PointDomain d2(2);

Op indiscrete_closure(PointDomain d) {
  Op f(d);
  for (uint32_t i = 1; i < d.element_count(); ++i) f.set(i, d.full_mask());
  return f;
}

Op sierpinski_interior() { return Op(d2, {0b00, 0b01, 0b00, 0b11}); }

}  // namespace

TEST_CASE("inter-definition table, concrete cells") {
  Op c = indiscrete_closure(d2);
  CHECK(derive(c, R::Closure, R::Border).table() ==
        std::vector<uint32_t>{0, 1, 2, 0});
  CHECK(derive(c, R::Closure, R::Frontier).table() ==
        std::vector<uint32_t>{0, 3, 3, 0});
  CHECK(derive(c, R::Closure, R::Closure) == c);

  // the double dual is the identity on any operator
  enumerate_operators(d2, [](const Op& f) {
    CHECK(derive(derive(f, R::Closure, R::Interior), R::Interior, R::Closure) ==
          f);
  });
}

TEST_CASE("axiom bundles") {
  CHECK(satisfies_bundle(indiscrete_closure(d2), R::Closure));
  CHECK(satisfies_bundle(sierpinski_interior(), R::Interior));
  CHECK_FALSE(satisfies_bundle(Op::constant(d1, 1), R::Closure));  // normality

  auto checks = axiom_bundle_check(Op::constant(d1, 1), R::Closure);
  REQUIRE(checks.size() == 4);
  CHECK(checks[0].holds);        // additive
  CHECK_FALSE(checks[2].holds);  // normal
}

TEST_CASE("element classification on the Sierpinski space") {
  Op c = transform(sierpinski_interior(), TransformKind::D);
  auto p0 = classify_element(c, Element(0b01, d2));
  CHECK(p0.open);
  CHECK_FALSE(p0.closed);
  CHECK(p0.dense);
  auto p1 = classify_element(c, Element(0b10, d2));
  CHECK(p1.closed);
  CHECK(p1.boundary);
  CHECK_FALSE(p1.open);
  auto top = classify_element(indiscrete_closure(d2), Element::top(d2));
  CHECK(top.clopen);
}

TEST_CASE("relation to operator and back") {
  CHECK(closure_of_relation(Relation::total(d2)) == indiscrete_closure(d2));
  CHECK(relation_of_operator(indiscrete_closure(d2)) == Relation::total(d2));
  CHECK(closure_of_relation(Relation(d2)) == Op::constant(d2, 0));

  // reflexive-transitive example: 0R0, 0R1, 1R1
  Relation r(d2);
  r.set(0, 0);
  r.set(0, 1);
  r.set(1, 1);
  REQUIRE(is_reflexive(r));
  REQUIRE(is_transitive(r));
  Op c = closure_of_relation(r);
  CHECK(c.apply(0b01) == 0b01);
  CHECK(c.apply(0b10) == 0b11);
  CHECK(holds(ConditionId::EXPN, c));
  CHECK(holds(ConditionId::IDEM_a, c));
}

TEST_CASE("bridge reports") {
  auto good = bridge_properties(indiscrete_closure(d2));
  CHECK(good.iaddi);
  CHECK(good.roundtrip_fixed);
  CHECK(good.iaddi_iff_roundtrip);

  auto bad = bridge_properties(Op::constant(d1, 1));
  CHECK_FALSE(bad.iaddi);
  CHECK_FALSE(bad.roundtrip_fixed);  // C[R[f]] maps bottom to bottom
  CHECK(bad.iaddi_iff_roundtrip);

  Relation r(d2);
  r.set(0, 1);
  auto rel = bridge_properties(r);
  CHECK(rel.iaddi_holds);
  CHECK(rel.norm_holds);
  CHECK(rel.expn_iff_reflexive);
  CHECK(rel.idem_a_iff_transitive);
}

TEST_CASE("monoid closure and orbits") {
  auto only_identity = monoid_closure({Op::identity(d2)});
  CHECK(only_identity.ops.size() == 1);
  CHECK(only_identity.saturated);

  Op c = indiscrete_closure(d2);
  auto kuratowski = monoid_closure({c, Op::complement(d2)});
  CHECK(kuratowski.saturated);
  CHECK(kuratowski.ops.size() <= 14);

  auto orb = orbit({derive(c, R::Closure, R::Frontier), Op::complement(d2)},
                   Element(0b01, d2));
  CHECK(orb.saturated);
  CHECK(orb.family ==
        Family({Element(0, d2), Element(1, d2), Element(2, d2),
                Element(3, d2)},
               d2));

  CHECK_THROWS_AS(monoid_closure({}), std::invalid_argument);
  CHECK_THROWS_AS(orbit({c}, Element(0, d2), 0), std::invalid_argument);
}

TEST_CASE("topology enumeration: two independent routes agree") {
  CHECK(enumerate_topologies(d1).size() == 1);
  CHECK(enumerate_topologies(d2).size() == 4);
  CHECK(enumerate_topologies(PointDomain(3)).size() == 29);
  for (int n = 1; n <= 3; ++n) {
    PointDomain d(n);
    CHECK(enumerate_topologies(d) == enumerate_topologies_bruteforce(d));
  }
  CHECK_THROWS_AS(enumerate_topologies(PointDomain(5)), std::invalid_argument);
  // every enumerated closure really is one
  for (const Op& c : enumerate_topologies(PointDomain(3)))
    CHECK(satisfies_bundle(c, R::Closure));
}

TEST_CASE("fixed-point border agrees with the table border iff expansive") {
  enumerate_operators(d2, [](const Op& c) {
    Op fp_border = border_from_fixedpoint(c);
    // direct pointwise display: C(-A) xor -A
    Op direct(d2);
    for (uint32_t a = 0; a < 4; ++a)
      direct.set(a, c.apply(~a & 3u) ^ (~a & 3u));
    CHECK(fp_border == direct);

    Op table_border = derive(c, R::Closure, R::Border);
    CHECK((table_border == fp_border) == holds(ConditionId::EXPN, c));
  });
}

TEST_CASE("hausdorff residue sits below its argument on border algebras") {
  for (const Op& c : enumerate_topologies(PointDomain(3))) {
    Op b = derive(c, R::Closure, R::Border);
    REQUIRE(satisfies_bundle(b, R::Border));
    Op residue = hausdorff_residue(b);
    for (uint32_t a = 0; a < b.size(); ++a)
      CHECK((residue.apply(a) & ~a) == 0);
  }
}

TEST_CASE("border axiom B4 equals nIDEMr_b given the other border axioms") {
  uint64_t candidates = 0;
  enumerate_operators(d2, [&](const Op& f) {
    auto checks = axiom_bundle_check(f, R::Border);
    if (!(checks[0].holds && checks[1].holds && checks[2].holds)) return;
    ++candidates;
    CHECK(checks[3].holds == holds(ConditionId::nIDEMr_b, f));
  });
  CHECK(candidates > 0);
}

TEST_CASE("odd complement compositions stay within seven on topologies") {
  for (const Op& c : enumerate_topologies(PointDomain(3))) {
    auto odd = odd_complement_compositions(c);
    CHECK(odd.saturated);
    CHECK(odd.count <= 7);
  }
}
