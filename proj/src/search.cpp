#include "tba/search.hpp"

#include <algorithm>

#include "tba/scan.hpp"
#include "tba/topology.hpp"

namespace tba {

bool goal_holds(const Goal& goal, const Model& m) {
  if (std::holds_alternative<FormulaPtr>(goal))
    return valid(std::get<FormulaPtr>(goal), m);
  return consequence(std::get<Sequent>(goal), m);
}

namespace {

std::vector<std::string> goal_variables(const Goal& goal) {
  std::set<std::string> vars =
      std::holds_alternative<FormulaPtr>(goal)
          ? free_variables(std::get<FormulaPtr>(goal))
          : free_variables(std::get<Sequent>(goal));
  return {vars.begin(), vars.end()};
}

std::vector<Op> candidate_operators(PointDomain d, const SearchOptions& opts) {
  std::vector<Op> out;
  switch (opts.strategy) {
    case SearchStrategy::Exhaustive: {
      uint64_t count = operator_space_size(d);  // throws for n >= 3
      out.reserve(count);
      for (uint64_t code = 0; code < count; ++code)
        out.push_back(decode_operator(d, code));
      break;
    }
    case SearchStrategy::Relational: {
      if (d.n > 4)
        throw std::invalid_argument(
            "relational search enumerates 2^(n^2) relations; capped at n <= 4");
      uint64_t count = uint64_t{1} << (d.n * d.n);
      for (uint64_t code = 0; code < count; ++code) {
        Relation r(d);
        for (int w = 0; w < d.n; ++w)
          for (int v = 0; v < d.n; ++v)
            if ((code >> (w * d.n + v)) & 1u) r.set(w, v);
        out.push_back(closure_of_relation(r));
      }
      break;
    }
    case SearchStrategy::Random: {
      out.reserve(opts.samples);
      for (uint64_t s = 0; s < opts.samples; ++s)
        out.push_back(sample_operator(d, opts.seed + s));
      break;
    }
  }
  return out;
}

Model build_model(PointDomain d, const SearchOptions& opts, const Op& op,
                  const std::vector<std::string>& vars, uint64_t val_index) {
  Model m(d, opts.primitive, op);
  uint64_t rest = val_index;
  for (const auto& name : vars) {
    m.valuation.emplace(
        name, Element(static_cast<uint32_t>(rest % d.element_count()), d));
    rest /= d.element_count();
  }
  return m;
}

}  // namespace

SearchResult search(const Goal& goal, const SearchOptions& opts) {
  if (opts.min_points < 1 || opts.max_points > kMaxPoints ||
      opts.min_points > opts.max_points)
    throw std::invalid_argument("bad point range for search");

  std::vector<std::string> vars = goal_variables(goal);
  SearchResult result;

  for (int n = opts.min_points; n <= opts.max_points; ++n) {
    PointDomain d(n);
    std::vector<Op> candidates = candidate_operators(d, opts);

    std::vector<const Op*> admissible;
    admissible.reserve(candidates.size());
    for (const Op& f : candidates) {
      bool ok = true;
      for (ConditionId c : opts.assumptions)
        if (!holds(c, f)) {
          ok = false;
          break;
        }
      if (ok) admissible.push_back(&f);
    }

    uint64_t valuations = 1;
    for (size_t i = 0; i < vars.size(); ++i) {
      if (valuations > (uint64_t{1} << 40))
        throw std::invalid_argument("too many free variables to enumerate");
      valuations *= d.element_count();
    }

    uint64_t space = admissible.size() * valuations;
    result.models_checked += space;
    auto fails = [&](uint64_t idx) {
      const Op& f = *admissible[idx / valuations];
      Model m = build_model(d, opts, f, vars, idx % valuations);
      return !goal_holds(goal, m);
    };
    uint64_t hit = opts.parallel ? scan::find_first(space, fails)
                                 : scan::serial::find_first(space, fails);
    if (hit != scan::npos) {
      result.status = SearchStatus::CountermodelFound;
      result.countermodel = build_model(d, opts, *admissible[hit / valuations],
                                        vars, hit % valuations);
      return result;
    }
  }

  result.status = opts.strategy == SearchStrategy::Random
                      ? SearchStatus::Inconclusive
                      : SearchStatus::Valid;
  return result;
}

}  // namespace tba
