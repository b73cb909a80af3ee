#include "doctest.h"

#include "tba/search.hpp"

using namespace tba;
using C = ConditionId;

TEST_CASE("explosion has a countermodel, gentle explosion does not") {
  SearchOptions opts;
  opts.max_points = 2;

  Goal ecq = parse_sequent("p, negC p |- F");
  auto res = search(ecq, opts);
  REQUIRE(res.status == SearchStatus::CountermodelFound);
  REQUIRE(res.countermodel.has_value());
  CHECK_FALSE(goal_holds(ecq, *res.countermodel));

  Goal gentle = parse_sequent("cons p, p, negC p |- F");
  CHECK(search(gentle, opts).status == SearchStatus::Valid);
}

TEST_CASE("assumptions restrict the scanned operators") {
  SearchOptions opts;
  opts.max_points = 2;
  opts.primitive = OperatorRole::Interior;
  opts.assumptions = {C::MULT, C::CNTR, C::DNRM, C::IDEM};

  Goal tnd = parse_formula("p | negI p");
  auto res = search(tnd, opts);
  REQUIRE(res.status == SearchStatus::CountermodelFound);
  const Model& m = *res.countermodel;
  CHECK(m.primitive == OperatorRole::Interior);
  for (C c : opts.assumptions) CHECK(holds(c, m.op));
  CHECK_FALSE(goal_holds(tnd, m));

  // the countermodel survives a serialization round trip
  Model reloaded = model_from_json(model_to_json(m));
  CHECK_FALSE(goal_holds(tnd, reloaded));
}

TEST_CASE("no countermodel under assumptions that force the goal") {
  // anything expansive validates p |- dia p
  SearchOptions opts;
  opts.max_points = 2;
  opts.assumptions = {C::EXPN};
  CHECK(search(Goal(parse_sequent("p |- dia p")), opts).status ==
        SearchStatus::Valid);
}

TEST_CASE("search is deterministic and worker-independent") {
  SearchOptions parallel;
  parallel.max_points = 2;
  SearchOptions serial = parallel;
  serial.parallel = false;

  for (const char* text :
       {"p, negC p |- F", "p |- box p", "|- p | negC p", "p & q |- p"}) {
    Goal goal = parse_sequent(text);
    auto a = search(goal, parallel);
    auto b = search(goal, serial);
    CHECK(a.status == b.status);
    if (a.countermodel) {
      REQUIRE(b.countermodel.has_value());
      CHECK(model_to_json(*a.countermodel) == model_to_json(*b.countermodel));
    }
  }
}

TEST_CASE("strategies") {
  Goal ecq = parse_sequent("p, negC p |- F");

  SearchOptions relational;
  relational.strategy = SearchStrategy::Relational;
  relational.max_points = 3;
  auto res = search(ecq, relational);
  CHECK(res.status == SearchStatus::CountermodelFound);

  SearchOptions random;
  random.strategy = SearchStrategy::Random;
  random.max_points = 3;
  random.samples = 200;
  auto rnd = search(ecq, random);
  CHECK(rnd.status == SearchStatus::CountermodelFound);

  // an unfalsifiable goal under random search is only inconclusive
  SearchOptions bounded;
  bounded.strategy = SearchStrategy::Random;
  bounded.max_points = 3;
  bounded.samples = 50;
  CHECK(search(Goal(parse_formula("p -> p")), bounded).status ==
        SearchStatus::Inconclusive);

  // exhaustive beyond two points is refused
  SearchOptions big;
  big.max_points = 3;
  CHECK_THROWS_AS(search(ecq, big), std::invalid_argument);
}

TEST_CASE("random strategy is reproducible per seed") {
  SearchOptions random;
  random.strategy = SearchStrategy::Random;
  random.max_points = 2;
  random.samples = 64;
  random.seed = 42;
  Goal goal = parse_sequent("p, negC p |- F");
  auto a = search(goal, random);
  auto b = search(goal, random);
  REQUIRE(a.countermodel.has_value() == b.countermodel.has_value());
  if (a.countermodel)
    CHECK(model_to_json(*a.countermodel) == model_to_json(*b.countermodel));
}
