#ifndef TBA_MODEL_HPP_
#define TBA_MODEL_HPP_

#include <map>
#include <string>
#include <vector>

#include "tba/operators.hpp"
#include "tba/topology.hpp"

#include "json.hpp"

// A model binds the primitive operator (closure by default, interior
// accepted), a valuation for free variables, and named domains, domain
// functions and predicates for the quantifier machinery. Everything the
// evaluator derives (interior, exterior, border, frontier, negations,
// recovery operators) comes from the one primitive.

namespace tba {

struct Model {
  PointDomain points;
  OperatorRole primitive = OperatorRole::Closure;  // Closure or Interior
  Op op;  // the operator as supplied, playing the primitive role
  std::map<std::string, Element> valuation;
  std::map<std::string, Family> domains;
  std::map<std::string, Op> domain_functions;
  int individuals = 0;
  std::map<std::string, std::vector<Element>> predicates;

  explicit Model(PointDomain d)
      : points(d), op(Op::constant(d, 0)) {}
  Model(PointDomain d, OperatorRole role, Op primitive_op);

  // The closure operator: op itself, or its dual when an interior was given.
  Op closure() const;
  Op interior() const;
};

// JSON serialization. Elements are emitted as sorted point-index arrays and
// accepted either as arrays or as integer bitmasks.
nlohmann::json element_to_json(const Element& e);
Element element_from_json(const nlohmann::json& j, PointDomain d);

nlohmann::json family_to_json(const Family& f);
Family family_from_json(const nlohmann::json& j, PointDomain d);

nlohmann::json op_to_json(const Op& f);
Op op_from_json(const nlohmann::json& j);

nlohmann::json relation_to_json(const Relation& r);
Relation relation_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const Model& m);
Model model_from_json(const nlohmann::json& j);

Model load_model_file(const std::string& path);

}  // namespace tba

#endif  // TBA_MODEL_HPP_
