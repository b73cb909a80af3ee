#ifndef TBA_SEARCH_HPP_
#define TBA_SEARCH_HPP_

#include <variant>

#include "tba/conditions.hpp"
#include "tba/eval.hpp"
#include "tba/formula.hpp"
#include "tba/model.hpp"

// Countermodel search over small models: point counts ascending, operators
// in enumeration order (or as relation closures, or sampled), valuations
// ascending. The first model where every assumption holds on the primitive
// but the goal fails is returned; deterministic regardless of worker count.

namespace tba {

enum class SearchStrategy { Exhaustive, Relational, Random };

struct SearchOptions {
  int max_points = 2;
  int min_points = 1;
  std::vector<ConditionId> assumptions;  // imposed on the primitive operator
  OperatorRole primitive = OperatorRole::Closure;
  SearchStrategy strategy = SearchStrategy::Exhaustive;
  uint64_t samples = 10000;  // Random strategy only
  uint64_t seed = 1;
  bool parallel = true;
};

enum class SearchStatus { Valid, CountermodelFound, Inconclusive };

struct SearchResult {
  SearchStatus status = SearchStatus::Valid;
  std::optional<Model> countermodel;
  uint64_t models_checked = 0;
};

using Goal = std::variant<FormulaPtr, Sequent>;

bool goal_holds(const Goal& goal, const Model& m);

SearchResult search(const Goal& goal, const SearchOptions& opts);

}  // namespace tba

#endif  // TBA_SEARCH_HPP_
