// Command-line front end for the finite-model workbench.
//
// Exit codes: 0 = property holds / valid; 1 = countermodel or violation
// found; 2 = usage or IO error; 3 = bounded search inconclusive.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tba/eval.hpp"
#include "tba/quantifiers.hpp"
#include "tba/scan.hpp"
#include "tba/search.hpp"
#include "tba/suite.hpp"
#include "tba/topology.hpp"

using nlohmann::json;
using namespace tba;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitCountermodel = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct CommonFlags {
  std::string format = "text";
  uint64_t seed = 1;
  uint64_t samples = 10000;
  int max_points = 2;
  int workers = 0;
  std::string assume;
  std::string strategy = "exhaustive";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", flags.seed, "random seed");
  cmd->add_option("--samples", flags.samples, "sample count for bounded scans");
  cmd->add_option("--max-points", flags.max_points,
                  "largest point domain to search");
  cmd->add_option("--workers", flags.workers, "worker threads (0 = default)");
  cmd->add_option("--assume", flags.assume,
                  "conditions on the primitive, e.g. C:ADDI,NORM or I:MULT");
  cmd->add_option("--strategy", flags.strategy,
                  "search strategy: exhaustive|relational|random")
      ->check(CLI::IsMember({"exhaustive", "relational", "random"}));
}

void apply_workers(const CommonFlags& flags) {
  if (flags.workers > 0) scan::set_workers(flags.workers);
}

std::pair<OperatorRole, std::vector<ConditionId>> parse_assume(
    const std::string& text) {
  OperatorRole role = OperatorRole::Closure;
  std::string list = text;
  if (text.size() >= 2 && text[1] == ':') {
    if (text[0] == 'C')
      role = OperatorRole::Closure;
    else if (text[0] == 'I')
      role = OperatorRole::Interior;
    else
      throw std::invalid_argument("assume prefix must be C: or I:");
    list = text.substr(2);
  }
  std::vector<ConditionId> ids;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto id = condition_from_name(item);
    if (!id) throw std::invalid_argument("unknown condition '" + item + "'");
    ids.push_back(*id);
  }
  return {role, ids};
}

SearchStrategy parse_strategy(const std::string& s) {
  if (s == "relational") return SearchStrategy::Relational;
  if (s == "random") return SearchStrategy::Random;
  return SearchStrategy::Exhaustive;
}

json witness_to_json(const Witness& w) {
  json out;
  json elems = json::array();
  for (const auto& e : w.elements) elems.push_back(element_to_json(e));
  out["elements"] = std::move(elems);
  if (w.family) out["family"] = family_to_json(*w.family);
  return out;
}

json report_to_json(const CheckReport& r) {
  json out;
  out["condition"] = condition_name(r.condition);
  out["holds"] = r.holds;
  out["approximate"] = r.approximate;
  if (r.witness) out["witness"] = witness_to_json(*r.witness);
  return out;
}

void emit(const json& j, const CommonFlags& flags) {
  if (flags.format == "json")
    std::cout << j.dump(2) << "\n";
}

// --- check-conditions ----------------------------------------------------

int run_check_conditions(const std::string& op_file,
                         const std::string& model_file,
                         const std::string& conditions,
                         const CommonFlags& flags) {
  Op op = [&] {
    if (!op_file.empty()) {
      std::ifstream in(op_file);
      if (!in) throw std::runtime_error("cannot open " + op_file);
      json j;
      in >> j;
      return op_from_json(j);
    }
    return load_model_file(model_file).op;
  }();

  std::vector<ConditionId> ids;
  if (conditions.empty() || conditions == "all") {
    ids = all_condition_ids();
  } else {
    std::stringstream ss(conditions);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto id = condition_from_name(item);
      if (!id) throw std::invalid_argument("unknown condition '" + item + "'");
      ids.push_back(*id);
    }
  }

  InfinitaryPolicy policy;
  policy.samples = static_cast<int>(flags.samples);
  policy.seed = flags.seed;

  json results = json::array();
  bool all_hold = true;
  for (ConditionId c : ids) {
    CheckReport r = check(c, op, policy);
    all_hold = all_hold && r.holds;
    if (flags.format == "json") {
      results.push_back(report_to_json(r));
    } else {
      std::cout << condition_name(c) << ": " << (r.holds ? "holds" : "fails");
      if (r.approximate) std::cout << " (approximate)";
      if (r.witness && !r.holds) {
        std::cout << "  witness:";
        for (const auto& e : r.witness->elements)
          std::cout << " " << e.to_string();
        if (r.witness->family) {
          std::cout << " S={";
          bool first = true;
          for (const auto& e : r.witness->family->members()) {
            if (!first) std::cout << ",";
            std::cout << e.to_string();
            first = false;
          }
          std::cout << "}";
        }
      }
      std::cout << "\n";
    }
  }
  emit(results, flags);
  return all_hold ? kExitHolds : kExitCountermodel;
}

// --- eval / valid / consequence -------------------------------------------

int run_eval(const std::string& model_file, const std::string& formula,
             const CommonFlags& flags) {
  Model m = load_model_file(model_file);
  Element v = eval(parse_formula(formula), m);
  if (flags.format == "json") {
    json out;
    out["value"] = element_to_json(v);
    out["is_top"] = v.bits() == m.points.full_mask();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << v.to_string() << "\n";
  }
  return kExitHolds;
}

int run_valid(const std::string& model_file, const std::string& formula,
              const CommonFlags& flags) {
  Model m = load_model_file(model_file);
  Element v = eval(parse_formula(formula), m);
  bool is_valid = v.bits() == m.points.full_mask();
  if (flags.format == "json") {
    json out;
    out["valid"] = is_valid;
    out["value"] = element_to_json(v);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (is_valid ? "valid" : "not valid: value " + v.to_string())
              << "\n";
  }
  return is_valid ? kExitHolds : kExitCountermodel;
}

int run_consequence(const std::string& model_file, const std::string& sequent,
                    const CommonFlags& flags) {
  Model m = load_model_file(model_file);
  bool holds_here = consequence(parse_sequent(sequent), m);
  if (flags.format == "json") {
    json out;
    out["holds"] = holds_here;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (holds_here ? "holds" : "fails") << "\n";
  }
  return holds_here ? kExitHolds : kExitCountermodel;
}

// --- search ---------------------------------------------------------------

int run_search(const std::string& formula, const std::string& sequent,
               const CommonFlags& flags) {
  if (formula.empty() == sequent.empty())
    throw std::invalid_argument("search needs exactly one of -f or -s");
  Goal goal = formula.empty() ? Goal(parse_sequent(sequent))
                              : Goal(parse_formula(formula));

  SearchOptions opts;
  opts.max_points = flags.max_points;
  opts.strategy = parse_strategy(flags.strategy);
  opts.samples = flags.samples;
  opts.seed = flags.seed;
  if (!flags.assume.empty()) {
    auto [role, ids] = parse_assume(flags.assume);
    opts.primitive = role;
    opts.assumptions = ids;
  }

  SearchResult res = search(goal, opts);
  switch (res.status) {
    case SearchStatus::Valid:
      if (flags.format == "json") {
        json out;
        out["status"] = "valid";
        out["models_checked"] = res.models_checked;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "VALID (" << res.models_checked << " models checked)\n";
      }
      return kExitHolds;
    case SearchStatus::CountermodelFound: {
      json out;
      out["status"] = "countermodel";
      out["model"] = model_to_json(*res.countermodel);
      if (flags.format == "json")
        std::cout << out.dump(2) << "\n";
      else
        std::cout << "COUNTERMODEL\n" << out["model"].dump(2) << "\n";
      return kExitCountermodel;
    }
    case SearchStatus::Inconclusive:
      if (flags.format == "json") {
        json out;
        out["status"] = "inconclusive";
        out["models_checked"] = res.models_checked;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "INCONCLUSIVE (bounded search, " << res.models_checked
                  << " models)\n";
      }
      return kExitInconclusive;
  }
  return kExitUsage;
}

// --- cube -----------------------------------------------------------------

int run_cube(int points, bool exhaustive, const CommonFlags& flags) {
  PointDomain d(points);
  uint64_t total, passed;
  if (exhaustive || points <= 2) {
    total = operator_space_size(d);
    passed = scan::count_if(
        total, [&](uint64_t code) { return cube_check(decode_operator(d, code)); });
  } else {
    total = flags.samples;
    passed = scan::count_if(total, [&](uint64_t s) {
      return cube_check(sample_operator(d, flags.seed + s));
    });
  }
  if (flags.format == "json") {
    json out;
    out["passed"] = passed;
    out["total"] = total;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << passed << "/" << total << " operators pass\n";
  }
  return passed == total ? kExitHolds : kExitCountermodel;
}

// --- topology-roundtrip -----------------------------------------------------

int run_topology_roundtrip(int max_points, const CommonFlags& flags) {
  static const OperatorRole roles[] = {OperatorRole::Interior,
                                       OperatorRole::Exterior,
                                       OperatorRole::Border,
                                       OperatorRole::Frontier};
  json failures = json::array();
  uint64_t checked = 0;
  for (int n = 1; n <= max_points; ++n) {
    for (const Op& c : enumerate_topologies(PointDomain(n))) {
      ++checked;
      for (OperatorRole target : roles) {
        Op derived = derive(c, OperatorRole::Closure, target);
        bool bundle = satisfies_bundle(derived, target);
        bool back = derive(derived, target, OperatorRole::Closure) == c;
        if (!bundle || !back) {
          json fail;
          fail["topology"] = op_to_json(c);
          fail["role"] = role_name(target);
          fail["bundle"] = bundle;
          fail["roundtrip"] = back;
          failures.push_back(std::move(fail));
        }
      }
    }
  }
  if (flags.format == "json") {
    json out;
    out["topologies"] = checked;
    out["failures"] = failures;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << checked << " topologies, " << failures.size()
              << " round-trip failures\n";
  }
  return failures.empty() ? kExitHolds : kExitCountermodel;
}

// --- monoid -----------------------------------------------------------------

int run_monoid(const std::string& model_file, const std::string& generators,
               int cap, const CommonFlags& flags) {
  Model m = load_model_file(model_file);
  Op c = m.closure();
  PointDomain d = m.points;
  std::vector<Op> gens;
  std::string labels;
  std::stringstream ss(generators);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "C")
      gens.push_back(c);
    else if (item == "I")
      gens.push_back(transform(c, TransformKind::D));
    else if (item == "-" || item == "n")
      gens.push_back(Op::complement(d));
    else if (auto role = role_from_name(item))
      gens.push_back(derive(c, OperatorRole::Closure, *role));
    else if (item == "B")
      gens.push_back(derive(c, OperatorRole::Closure, OperatorRole::Border));
    else if (item == "F")
      gens.push_back(derive(c, OperatorRole::Closure, OperatorRole::Frontier));
    else if (item == "E")
      gens.push_back(derive(c, OperatorRole::Closure, OperatorRole::Exterior));
    else
      throw std::invalid_argument("unknown generator '" + item +
                                  "' (use C,I,E,B,F,-)");
    labels += labels.empty() ? item : "," + item;
  }
  auto result = monoid_closure(gens, cap);
  if (flags.format == "json") {
    json out;
    out["generators"] = labels;
    out["size"] = result.ops.size();
    out["saturated"] = result.saturated;
    json ops = json::array();
    for (const auto& f : result.ops) ops.push_back(op_to_json(f));
    out["operators"] = std::move(ops);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "monoid closure of {" << labels << "}: " << result.ops.size()
              << " operators, "
              << (result.saturated ? "saturated" : "cap reached") << "\n";
  }
  return kExitHolds;
}

// --- barcan -----------------------------------------------------------------

int run_barcan(int points, int sort_size, bool find_var, uint64_t budget,
               const CommonFlags& flags) {
  PointDomain d(points);
  if (find_var) {
    auto cm = find_bf1_var_countermodel(d, sort_size, budget, false);
    if (!cm) {
      std::cout << "no varying-domain countermodel within budget\n";
      return kExitInconclusive;
    }
    json out;
    out["interior"] = op_to_json(cm->interior);
    json delta = json::array(), psi = json::array();
    for (const auto& e : cm->delta) delta.push_back(element_to_json(e));
    for (const auto& e : cm->psi) psi.push_back(element_to_json(e));
    out["delta"] = std::move(delta);
    out["psi"] = std::move(psi);
    out["lhs"] = element_to_json(cm->lhs);
    out["rhs"] = element_to_json(cm->rhs);
    if (flags.format == "json")
      std::cout << out.dump(2) << "\n";
    else
      std::cout << "varying-domain countermodel found\n" << out.dump(2) << "\n";
    return kExitCountermodel;
  }

  bool all_ok = true;
  uint64_t checked = 0;
  if (points <= 2) {
    all_ok = scan::all_of(operator_space_size(d), [&](uint64_t code) {
      return barcan_check(decode_operator(d, code), sort_size, flags.samples,
                          flags.seed)
          .all();
    });
    checked = operator_space_size(d);
  } else {
    all_ok = scan::all_of(flags.samples, [&](uint64_t s) {
      return barcan_check(sample_operator(d, flags.seed + s), sort_size,
                          flags.samples, flags.seed)
          .all();
    });
    checked = flags.samples;
  }
  if (flags.format == "json") {
    json out;
    out["holds"] = all_ok;
    out["operators_checked"] = checked;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (all_ok ? "all Barcan laws hold" : "violation found") << " ("
              << checked << " operators)\n";
  }
  return all_ok ? kExitHolds : kExitCountermodel;
}

// --- report -----------------------------------------------------------------

int run_report_suite(const CommonFlags& flags) {
  SuiteOptions opts;
  opts.seed = flags.seed;
  if (flags.format == "text")
    opts.on_result = [](const CriterionResult& r) {
      std::cout << (r.report_only ? "REPORT" : (r.pass ? "PASS  " : "FAIL  "))
                << " [" << r.number << "] " << r.name << " — " << r.detail
                << "\n";
    };
  auto results = run_paper_suite(opts);
  if (flags.format == "json") {
    json out = json::array();
    for (const auto& r : results) {
      json row;
      row["number"] = r.number;
      row["name"] = r.name;
      row["pass"] = r.pass;
      row["report_only"] = r.report_only;
      row["detail"] = r.detail;
      out.push_back(std::move(row));
    }
    std::cout << out.dump(2) << "\n";
  }
  return suite_passed(results) ? kExitHolds : kExitCountermodel;
}

int run_report_negation_map(int max_points, const CommonFlags& flags) {
  json table = json::array();
  for (auto p : all_negation_properties()) {
    for (auto n : {NegationConnective::CNot, NegationConnective::NegC,
                   NegationConnective::NegI, NegationConnective::NegIC,
                   NegationConnective::NegCI}) {
      uint64_t holds_all = 0, total_all = 0;
      uint64_t holds_kura = 0, total_kura = 0;
      for (int pts = 1; pts <= max_points && pts <= 2; ++pts) {
        PointDomain d(pts);
        enumerate_operators(d, [&](const Op& c) {
          Model m(d, OperatorRole::Closure, c);
          ++total_all;
          if (negation_property(p, n, m).holds) ++holds_all;
        });
        for (const Op& c : enumerate_topologies(d)) {
          Model m(d, OperatorRole::Closure, c);
          ++total_kura;
          if (negation_property(p, n, m).holds) ++holds_kura;
        }
      }
      json row;
      row["property"] = negation_property_name(p);
      row["negation"] = negation_name(n);
      row["holds_all_operators"] = holds_all;
      row["total_all_operators"] = total_all;
      row["holds_kuratowski"] = holds_kura;
      row["total_kuratowski"] = total_kura;
      table.push_back(row);
      if (flags.format == "text")
        std::cout << negation_property_name(p) << " with "
                  << negation_name(n) << ": " << holds_all << "/" << total_all
                  << " operators, " << holds_kura << "/" << total_kura
                  << " Kuratowski closures\n";
    }
  }
  if (flags.format == "json") std::cout << table.dump(2) << "\n";
  return kExitHolds;
}

int run_report_recovery(const std::string& model_file,
                        const CommonFlags& flags) {
  Model m = load_model_file(model_file);
  auto rep = recovery_theorems(m, static_cast<int>(flags.samples % 1000 + 50),
                               flags.seed);
  json out;
  out["open_gives_ecq"] = rep.open_gives_ecq;
  out["closed_gives_tnd"] = rep.closed_gives_tnd;
  out["gentle_explosion"] = rep.gentle_explosion;
  out["determinedness"] = rep.determinedness;
  out["eta_explosion"] = rep.eta_explosion;
  out["eta_determined"] = rep.eta_determined;
  out["eta_excluded"] = rep.eta_excluded;
  out["eta_exhaustive"] = rep.eta_exhaustive;
  out["cons_is_negc_fpc"] = rep.cons_is_negc_fpc;
  out["det_is_negi_fpc"] = rep.det_is_negi_fpc;
  out["undet_is_negi_fp"] = rep.undet_is_negi_fp;
  out["cons_is_border_compl"] = rep.cons_is_border_compl;
  out["det_is_border_dual"] = rep.det_is_border_dual;
  out["gamma_delta_schema"] = rep.gamma_delta_schema;

  // Guarded-property map: each negation property re-checked with the
  // metavariables restricted by the border fixed-point operator, recorded
  // empirically per the model.
  Op border = derive(m.closure(), OperatorRole::Closure, OperatorRole::Border);
  Op guard = transform(border, TransformKind::FP);
  json guarded = json::array();
  for (auto p : all_negation_properties()) {
    for (auto n : {NegationConnective::NegC, NegationConnective::NegI}) {
      PropertyReport plain = negation_property(p, n, m);
      PropertyReport under_guard = negation_property_guarded(p, n, m, guard);
      json row;
      row["property"] = negation_property_name(p);
      row["negation"] = negation_name(n);
      row["holds"] = plain.holds;
      row["holds_on_guarded"] = under_guard.holds;
      guarded.push_back(row);
    }
  }
  out["border_fp_guarded_properties"] = guarded;

  if (flags.format == "json")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << (rep.all() ? "recovery laws hold" : "recovery laws FAIL")
              << "\n"
              << out.dump(2) << "\n";
  return rep.all() ? kExitHolds : kExitCountermodel;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model workbench for operators on algebras of sets"};
  app.require_subcommand(1);

  CommonFlags flags;

  // check-conditions
  std::string op_file, model_file, conditions;
  auto* cmd_check = app.add_subcommand(
      "check-conditions", "check axiomatic conditions on an operator");
  cmd_check->add_option("--op", op_file, "operator JSON file");
  cmd_check->add_option("-m,--model", model_file, "model JSON file");
  cmd_check->add_option("-c,--conditions", conditions,
                        "comma-separated condition names (default: all)");
  add_common(cmd_check, flags);

  // eval / valid / consequence
  std::string formula, sequent;
  auto* cmd_eval = app.add_subcommand("eval", "evaluate a formula in a model");
  cmd_eval->add_option("-m,--model", model_file)->required();
  cmd_eval->add_option("-f,--formula", formula)->required();
  add_common(cmd_eval, flags);

  auto* cmd_valid =
      app.add_subcommand("valid", "is the formula top in the model?");
  cmd_valid->add_option("-m,--model", model_file)->required();
  cmd_valid->add_option("-f,--formula", formula)->required();
  add_common(cmd_valid, flags);

  auto* cmd_cons =
      app.add_subcommand("consequence", "check a sequent in a model");
  cmd_cons->add_option("-m,--model", model_file)->required();
  cmd_cons->add_option("-s,--sequent", sequent)->required();
  add_common(cmd_cons, flags);

  // search
  auto* cmd_search =
      app.add_subcommand("search", "search for a countermodel");
  cmd_search->add_option("-f,--formula", formula);
  cmd_search->add_option("-s,--sequent", sequent);
  add_common(cmd_search, flags);

  // cube
  int points = 2;
  bool exhaustive = false;
  auto* cmd_cube = app.add_subcommand("cube", "verify the cube of opposition");
  cmd_cube->add_option("--points", points);
  cmd_cube->add_flag("--exhaustive", exhaustive);
  add_common(cmd_cube, flags);

  // topology-roundtrip
  auto* cmd_topo = app.add_subcommand("topology-roundtrip",
                                      "operator inter-definition round trips");
  cmd_topo->add_option("--max-points", flags.max_points);
  cmd_topo->add_option("--format", flags.format);

  // monoid
  std::string generators = "C,-";
  int cap = 64;
  auto* cmd_monoid =
      app.add_subcommand("monoid", "composition closure of generators");
  cmd_monoid->add_option("-m,--model", model_file)->required();
  cmd_monoid->add_option("-g,--generators", generators,
                         "comma list from C,I,E,B,F,-");
  cmd_monoid->add_option("--cap", cap);
  add_common(cmd_monoid, flags);

  // barcan
  int sort_size = 2;
  bool find_var = false;
  uint64_t budget = 10'000'000;
  auto* cmd_barcan = app.add_subcommand("barcan", "Barcan formula checks");
  cmd_barcan->add_option("--points", points);
  cmd_barcan->add_option("--sort-size", sort_size);
  cmd_barcan->add_flag("--find-var-countermodel", find_var);
  cmd_barcan->add_option("--budget", budget);
  add_common(cmd_barcan, flags);

  // report
  std::string subject = "paper-suite";
  auto* cmd_report = app.add_subcommand("report", "run a report");
  cmd_report
      ->add_option("subject", subject,
                   "paper-suite | negation-map | recovery")
      ->check(CLI::IsMember({"paper-suite", "negation-map", "recovery"}));
  cmd_report->add_option("-m,--model", model_file);
  add_common(cmd_report, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    apply_workers(flags);
    if (cmd_check->parsed()) {
      if (op_file.empty() && model_file.empty())
        throw std::invalid_argument("check-conditions needs --op or --model");
      return run_check_conditions(op_file, model_file, conditions, flags);
    }
    if (cmd_eval->parsed()) return run_eval(model_file, formula, flags);
    if (cmd_valid->parsed()) return run_valid(model_file, formula, flags);
    if (cmd_cons->parsed()) return run_consequence(model_file, sequent, flags);
    if (cmd_search->parsed()) return run_search(formula, sequent, flags);
    if (cmd_cube->parsed()) return run_cube(points, exhaustive, flags);
    if (cmd_topo->parsed())
      return run_topology_roundtrip(flags.max_points, flags);
    if (cmd_monoid->parsed())
      return run_monoid(model_file, generators, cap, flags);
    if (cmd_barcan->parsed())
      return run_barcan(points, sort_size, find_var, budget, flags);
    if (cmd_report->parsed()) {
      if (subject == "paper-suite") return run_report_suite(flags);
      if (subject == "negation-map")
        return run_report_negation_map(flags.max_points, flags);
      if (model_file.empty())
        throw std::invalid_argument("report recovery needs --model");
      return run_report_recovery(model_file, flags);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
