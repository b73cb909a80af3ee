#include "doctest.h"

#include "tba/eval.hpp"
#include "tba/search.hpp"

using namespace tba;

namespace {

const PointDomain d1(1);
const PointDomain d2(2);

Op indiscrete_closure(PointDomain d) {
  Op f(d);
  for (uint32_t i = 1; i < d.element_count(); ++i) f.set(i, d.full_mask());
  return f;
}

Model indiscrete_model(uint32_t p_bits) {
  Model m(d2, OperatorRole::Closure, indiscrete_closure(d2));
  m.valuation.emplace("p", Element(p_bits, d2));
  return m;
}

Model sierpinski_model(uint32_t p_bits) {
  Model m(d2, OperatorRole::Interior, Op(d2, {0b00, 0b01, 0b00, 0b11}));
  m.valuation.emplace("p", Element(p_bits, d2));
  return m;
}

std::string reprint(const std::string& text) {
  return to_string(parse_formula(text));
}

}  // namespace

TEST_CASE("parser shapes") {
  auto s = parse_sequent("p & negC p |- F");
  CHECK(s.premises.size() == 1);
  CHECK(s.conclusions.size() == 1);
  CHECK(s.mode == ConsequenceMode::Local);
  CHECK(s.premises[0]->kind == FormulaKind::And);
  CHECK(s.premises[0]->rhs->kind == FormulaKind::NegC);
  CHECK(s.conclusions[0]->kind == FormulaKind::Bot);

  auto three = parse_sequent("cons p, p, negC p |- F");
  CHECK(three.premises.size() == 3);

  auto f = parse_formula("box p -> p");
  CHECK(f->kind == FormulaKind::Impl);
  CHECK(f->lhs->kind == FormulaKind::Box);

  auto global = parse_sequent("p |-g box p");
  CHECK(global.mode == ConsequenceMode::Global);

  // '|' followed by a spaced '-' is disjunction with complement
  auto disj = parse_formula("p | -q");
  CHECK(disj->kind == FormulaKind::Or);
  CHECK(disj->rhs->kind == FormulaKind::CNot);

  // empty sides are allowed
  auto axiom = parse_sequent("|- p");
  CHECK(axiom.premises.empty());
  auto refute = parse_sequent("p |-");
  CHECK(refute.conclusions.empty());
}

TEST_CASE("precedence and associativity") {
  CHECK(reprint("p & q | r") == "p & q | r");
  CHECK(parse_formula("p & q | r")->kind == FormulaKind::Or);
  CHECK(parse_formula("p -> q -> r")->rhs->kind == FormulaKind::Impl);
  CHECK(parse_formula("-p & q")->kind == FormulaKind::And);
  CHECK(parse_formula("negC p & q")->kind == FormulaKind::And);
  CHECK(parse_formula("box p -> p")->kind == FormulaKind::Impl);
  CHECK(parse_formula("(p | q) & r")->kind == FormulaKind::And);
}

TEST_CASE("printer round trips") {
  for (const char* text :
       {"p & negC p", "cons p, p, negC p |- F", "box p -> p",
        "p <-> q | -r", "det (p & q) -> undet p", "frt p | bdr q | ext r",
        "forall a . exists b . (a <-> -b)", "forall[open] a . cl a",
        "forall{d} a . a", "Forall x . (Drunk(x) -> Forall y . Drunk(y))",
        "p |-", "|- p | negI p"}) {
    std::string once, twice;
    auto v1 = parse(text);
    once = std::holds_alternative<Sequent>(v1)
               ? to_string(std::get<Sequent>(v1))
               : to_string(std::get<FormulaPtr>(v1));
    auto v2 = parse(once);
    twice = std::holds_alternative<Sequent>(v2)
                ? to_string(std::get<Sequent>(v2))
                : to_string(std::get<FormulaPtr>(v2));
    CHECK(once == twice);
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_formula("p &"), ParseError);
  CHECK_THROWS_AS(parse_formula("(p"), ParseError);
  CHECK_THROWS_AS(parse_formula("cons"), ParseError);
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);
  CHECK_THROWS_AS(parse_sequent("p"), ParseError);
  try {
    parse_formula("p & @");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  // unknown identifiers are fine at parse time, rejected at evaluation
  auto f = parse_formula("mystery_var");
  Model m = indiscrete_model(0b01);
  CHECK_THROWS_AS(eval(f, m), EvalError);
  CHECK_THROWS_WITH_AS(eval(f, m), doctest::Contains("mystery_var"),
                       EvalError);
}

TEST_CASE("evaluation in the indiscrete model") {
  Model m = indiscrete_model(0b01);
  CHECK(eval(parse_formula("p & negC p"), m) == Element(0b01, d2));
  CHECK(eval(parse_formula("cons p"), m) == Element(0b10, d2));
  CHECK(eval(parse_formula("T | F"), m) == Element::top(d2));
  CHECK(eval(parse_formula("dia p"), m) == Element::top(d2));
  CHECK(eval(parse_formula("cl p"), m) == Element::top(d2));
  CHECK(eval(parse_formula("box p"), m) == Element::bottom(d2));
  CHECK(eval(parse_formula("bdr p"), m) == Element(0b01, d2));
  CHECK(eval(parse_formula("frt p"), m) == Element::top(d2));
  CHECK(eval(parse_formula("ext p"), m) == Element::bottom(d2));
}

TEST_CASE("consequence modes") {
  CHECK_FALSE(consequence(parse_sequent("p, negC p |- F"),
                          indiscrete_model(0b01)));
  // gentle explosion, exhaustively over every closure and valuation
  Sequent gentle = parse_sequent("cons p, p, negC p |- F");
  for (int n = 1; n <= 2; ++n) {
    PointDomain d(n);
    enumerate_operators(d, [&](const Op& c) {
      Model m(d, OperatorRole::Closure, c);
      for (uint32_t p = 0; p < d.element_count(); ++p) {
        m.valuation.insert_or_assign("p", Element(p, d));
        CHECK(consequence(gentle, m));
      }
    });
  }

  // local consequence is stronger than global, witnessed on Sierpinski
  Model m = sierpinski_model(0b10);
  CHECK_FALSE(consequence(parse_sequent("p |- box p"), m));
  CHECK(consequence(parse_sequent("p |-g box p"), m));

  // and local implies global on every model, for this sequent shape
  Sequent local = parse_sequent("p |- box p");
  Sequent global = parse_sequent("p |-g box p");
  enumerate_operators(d2, [&](const Op& c) {
    Model probe(d2, OperatorRole::Closure, c);
    for (uint32_t p = 0; p < 4; ++p) {
      probe.valuation.insert_or_assign("p", Element(p, d2));
      if (consequence(local, probe)) CHECK(consequence(global, probe));
    }
  });
}

TEST_CASE("validity and the deduction bridge") {
  CHECK(valid(parse_formula("p -> p"), indiscrete_model(0b01)));
  CHECK_FALSE(valid(parse_formula("p | negI p"), sierpinski_model(0b01)));

  Sequent seq = parse_sequent("p |- q");
  FormulaPtr arrow = parse_formula("p -> q");
  enumerate_operators(d2, [&](const Op& c) {
    Model m(d2, OperatorRole::Closure, c);
    for (uint32_t p = 0; p < 4; ++p)
      for (uint32_t q = 0; q < 4; ++q) {
        m.valuation.insert_or_assign("p", Element(p, d2));
        m.valuation.insert_or_assign("q", Element(q, d2));
        CHECK(consequence(seq, m) == valid(arrow, m));
      }
  });
}

TEST_CASE("interior-primitive models derive the closure by duality") {
  Model m = sierpinski_model(0b01);
  // negI p = I(-p) = I({1}) = bottom
  CHECK(eval(parse_formula("negI p"), m) == Element::bottom(d2));
  CHECK(eval(parse_formula("p | negI p"), m) == Element(0b01, d2));
  // the closure-based connectives still work through the dual
  CHECK(eval(parse_formula("negC p"), m) == Element(0b10, d2));
}

TEST_CASE("negation connectives as tables") {
  // negI is the dual of negC, for every closure
  enumerate_operators(d2, [](const Op& c) {
    Model m(d2, OperatorRole::Closure, c);
    Op negc(d2), negi(d2);
    for (uint32_t a = 0; a < 4; ++a) {
      negc.set(a, apply_negation(NegationConnective::NegC, m,
                                 Element(a, d2)).bits());
      negi.set(a, apply_negation(NegationConnective::NegI, m,
                                 Element(a, d2)).bits());
    }
    CHECK(transform(negc, TransformKind::D) == negi);
  });
}

TEST_CASE("negation property catalog") {
  Model m = indiscrete_model(0b01);

  // classical negation validates everything classical
  CHECK(negation_property(NegationPropertyId::LNC, NegationConnective::CNot, m)
            .holds);
  CHECK(negation_property(NegationPropertyId::disjSyllogism_a,
                          NegationConnective::CNot, m)
            .holds);

  auto ecq = negation_property(NegationPropertyId::weakECQ,
                               NegationConnective::NegC, m);
  CHECK_FALSE(ecq.holds);
  REQUIRE(ecq.witness.size() == 2);
  // the witness really breaks the schema
  Element a = ecq.witness[0], b = ecq.witness[1];
  CHECK_FALSE(leq(meet(a, apply_negation(NegationConnective::NegC, m, a)),
                  apply_negation(NegationConnective::NegC, m, b)));

  // reports exist for every property/negation combination
  for (auto p : all_negation_properties())
    for (auto n : {NegationConnective::CNot, NegationConnective::NegC,
                   NegationConnective::NegI, NegationConnective::NegIC,
                   NegationConnective::NegCI}) {
      auto rep = negation_property(p, n, m);
      CHECK(rep.property == p);
      if (!rep.holds) CHECK_FALSE(rep.witness.empty());
    }
}

TEST_CASE("guarded negation properties") {
  Model m = indiscrete_model(0b01);
  // guarding by the top operator changes nothing
  auto plain = negation_property(NegationPropertyId::weakECQ,
                                 NegationConnective::NegC, m);
  auto guarded_top = negation_property_guarded(
      NegationPropertyId::weakECQ, NegationConnective::NegC, m, op_top(d2));
  CHECK(plain.holds == guarded_top.holds);
  // guarding by bottom empties the quantifier range
  auto guarded_bot = negation_property_guarded(
      NegationPropertyId::weakECQ, NegationConnective::NegC, m, op_bot(d2));
  CHECK(guarded_bot.holds);
}

TEST_CASE("recovery theorems on concrete models") {
  auto rep = recovery_theorems(indiscrete_model(0b01));
  CHECK(rep.all());
  CHECK(rep.eta_exhaustive);

  auto rep2 = recovery_theorems(sierpinski_model(0b10));
  CHECK(rep2.all());

  // and an arbitrary non-topological operator still satisfies them
  Model wild(d2, OperatorRole::Closure, Op(d2, {0b10, 0b00, 0b11, 0b01}));
  CHECK(recovery_theorems(wild).all());
}

TEST_CASE("model json round trip") {
  Model m = sierpinski_model(0b01);
  m.domains.emplace("opens",
                    Family({Element(0, d2), Element(1, d2)}, d2));
  m.domain_functions.emplace("delta", Op::identity(d2));
  m.individuals = 2;
  m.predicates.emplace(
      "Drunk", std::vector<Element>{Element(0b01, d2), Element(0b11, d2)});

  auto j = model_to_json(m);
  Model back = model_from_json(j);
  CHECK(back.points == m.points);
  CHECK(back.primitive == m.primitive);
  CHECK(back.op == m.op);
  CHECK(back.valuation.at("p") == m.valuation.at("p"));
  CHECK(back.domains.at("opens") == m.domains.at("opens"));
  CHECK(back.domain_functions.at("delta") == m.domain_functions.at("delta"));
  CHECK(back.individuals == 2);
  CHECK(back.predicates.at("Drunk") == m.predicates.at("Drunk"));

  // elements emitted as arrays, accepted as arrays or masks
  CHECK(j["valuation"]["p"] == nlohmann::json::array({0}));
  nlohmann::json masked = j;
  masked["valuation"]["p"] = 1;
  CHECK(model_from_json(masked).valuation.at("p") == Element(0b01, d2));

  CHECK_THROWS_AS(
      model_from_json(nlohmann::json{{"points", 2}}), std::invalid_argument);
}
