#include "tba/model.hpp"

#include <fstream>

namespace tba {

using nlohmann::json;

Model::Model(PointDomain d, OperatorRole role, Op primitive_op)
    : points(d), primitive(role), op(std::move(primitive_op)) {
  if (op.points() != d.n)
    throw std::invalid_argument("model operator over a different domain");
  if (primitive != OperatorRole::Closure && primitive != OperatorRole::Interior)
    throw std::invalid_argument(
        "model primitive must be a closure or an interior");
}

Op Model::closure() const {
  return primitive == OperatorRole::Closure ? op
                                            : transform(op, TransformKind::D);
}

Op Model::interior() const {
  return primitive == OperatorRole::Interior ? op
                                             : transform(op, TransformKind::D);
}

json element_to_json(const Element& e) {
  json out = json::array();
  for (int j = 0; j < e.points(); ++j)
    if (e.contains(j)) out.push_back(j);
  return out;
}

Element element_from_json(const json& j, PointDomain d) {
  if (j.is_number_unsigned() || j.is_number_integer()) {
    int64_t mask = j.get<int64_t>();
    if (mask < 0 || (static_cast<uint64_t>(mask) & ~uint64_t{d.full_mask()}))
      throw std::invalid_argument("element bitmask outside the domain");
    return Element(static_cast<uint32_t>(mask), d);
  }
  if (j.is_array()) {
    uint32_t mask = 0;
    for (const auto& v : j) {
      int p = v.get<int>();
      if (p < 0 || p >= d.n)
        throw std::invalid_argument("element point index outside the domain");
      mask |= 1u << p;
    }
    return Element(mask, d);
  }
  throw std::invalid_argument("element must be a point array or a bitmask");
}

json family_to_json(const Family& f) {
  json out = json::array();
  for (const auto& e : f.members()) out.push_back(element_to_json(e));
  return out;
}

Family family_from_json(const json& j, PointDomain d) {
  if (!j.is_array()) throw std::invalid_argument("family must be an array");
  std::vector<Element> members;
  for (const auto& v : j) members.push_back(element_from_json(v, d));
  return Family(std::move(members), d);
}

json op_to_json(const Op& f) {
  json out;
  out["points"] = f.points();
  out["table"] = f.table();
  return out;
}

Op op_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("table"))
    throw std::invalid_argument(
        "operator must be an object with 'points' and 'table'");
  PointDomain d(j.at("points").get<int>());
  std::vector<uint32_t> table = j.at("table").get<std::vector<uint32_t>>();
  return Op(d, std::move(table));
}

json relation_to_json(const Relation& r) {
  json edges = json::array();
  for (int w = 0; w < r.points(); ++w)
    for (int v = 0; v < r.points(); ++v)
      if (r.related(w, v)) edges.push_back(json::array({w, v}));
  json out;
  out["points"] = r.points();
  out["edges"] = std::move(edges);
  return out;
}

Relation relation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("edges"))
    throw std::invalid_argument(
        "relation must be an object with 'points' and 'edges'");
  PointDomain d(j.at("points").get<int>());
  Relation r(d);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("relation edge must be a [w,v] pair");
    r.set(e[0].get<int>(), e[1].get<int>());
  }
  return r;
}

json model_to_json(const Model& m) {
  json out;
  out["points"] = m.points.n;
  out["primitive"] =
      m.primitive == OperatorRole::Interior ? "interior" : "closure";
  out["operator"] = op_to_json(m.op);
  json valuation = json::object();
  for (const auto& [name, e] : m.valuation)
    valuation[name] = element_to_json(e);
  out["valuation"] = std::move(valuation);
  if (!m.domains.empty()) {
    json domains = json::object();
    for (const auto& [name, fam] : m.domains)
      domains[name] = family_to_json(fam);
    out["domains"] = std::move(domains);
  }
  if (!m.domain_functions.empty()) {
    json fns = json::object();
    for (const auto& [name, op] : m.domain_functions)
      fns[name] = op_to_json(op);
    out["domain_functions"] = std::move(fns);
  }
  if (m.individuals > 0) out["individuals"] = m.individuals;
  if (!m.predicates.empty()) {
    json preds = json::object();
    for (const auto& [name, rows] : m.predicates) {
      json arr = json::array();
      for (const auto& e : rows) arr.push_back(element_to_json(e));
      preds[name] = std::move(arr);
    }
    out["predicates"] = std::move(preds);
  }
  return out;
}

Model model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points"))
    throw std::invalid_argument("model must be an object with 'points'");
  PointDomain d(j.at("points").get<int>());

  OperatorRole role = OperatorRole::Closure;
  if (j.contains("primitive")) {
    std::string name = j.at("primitive").get<std::string>();
    auto parsed = role_from_name(name);
    if (!parsed ||
        (*parsed != OperatorRole::Closure && *parsed != OperatorRole::Interior))
      throw std::invalid_argument("primitive must be 'closure' or 'interior'");
    role = *parsed;
  }

  if (!j.contains("operator"))
    throw std::invalid_argument("model needs an 'operator'");
  Op op = op_from_json(j.at("operator"));
  if (op.points() != d.n)
    throw std::invalid_argument("model operator over a different domain");

  Model m(d, role, std::move(op));
  if (j.contains("valuation"))
    for (const auto& [name, v] : j.at("valuation").items())
      m.valuation.emplace(name, element_from_json(v, d));
  if (j.contains("domains"))
    for (const auto& [name, v] : j.at("domains").items())
      m.domains.emplace(name, family_from_json(v, d));
  if (j.contains("domain_functions"))
    for (const auto& [name, v] : j.at("domain_functions").items()) {
      Op fn = op_from_json(v);
      if (fn.points() != d.n)
        throw std::invalid_argument("domain function over a different domain");
      m.domain_functions.emplace(name, std::move(fn));
    }
  if (j.contains("individuals")) m.individuals = j.at("individuals").get<int>();
  if (m.individuals < 0)
    throw std::invalid_argument("individuals count must be >= 0");
  if (j.contains("predicates"))
    for (const auto& [name, v] : j.at("predicates").items()) {
      std::vector<Element> rows;
      for (const auto& row : v) rows.push_back(element_from_json(row, d));
      if (static_cast<int>(rows.size()) != m.individuals)
        throw std::invalid_argument(
            "predicate table length must equal the individuals count");
      m.predicates.emplace(name, std::move(rows));
    }
  return m;
}

Model load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  json j;
  in >> j;
  return model_from_json(j);
}

}  // namespace tba
