#include "tba/eval.hpp"

#include <random>

#include "tba/quantifiers.hpp"

namespace tba {

namespace {

struct Env {
  const Model* model;
  Op closure;
  Op interior;
  std::map<std::string, Element> prop;  // valuation plus bound variables
  std::map<std::string, int> individuals;
};

Element eval_node(const FormulaPtr& f, Env& env);

std::vector<Element> prop_sort_members(const Env& env, QuantFilterKind filter,
                                       const std::string& filter_name) {
  PointDomain d = env.model->points;
  std::vector<Element> out;
  switch (filter) {
    case QuantFilterKind::None:
    case QuantFilterKind::NamedDelta:  // delta restricts pointwise, not here
      for (uint32_t m = 0; m < d.element_count(); ++m) out.emplace_back(m, d);
      return out;
    case QuantFilterKind::Open:
      return fixed_points(env.interior).members();
    case QuantFilterKind::Closed:
      return fixed_points(env.closure).members();
    case QuantFilterKind::NamedDomain: {
      auto it = env.model->domains.find(filter_name);
      if (it == env.model->domains.end())
        throw EvalError("unknown domain '" + filter_name + "'");
      return it->second.members();
    }
  }
  return out;
}

Element eval_prop_quant(const FormulaPtr& f, Env& env) {
  PointDomain d = env.model->points;
  std::vector<Element> members =
      prop_sort_members(env, f->filter, f->filter_name);

  std::vector<Element> values;
  values.reserve(members.size());
  auto saved = env.prop.find(f->name);
  std::optional<Element> shadowed;
  if (saved != env.prop.end()) shadowed = saved->second;
  for (const auto& member : members) {
    env.prop.insert_or_assign(f->name, member);
    values.push_back(eval_node(f->lhs, env));
  }
  if (shadowed)
    env.prop.insert_or_assign(f->name, *shadowed);
  else
    env.prop.erase(f->name);

  DomainSpec spec = DomainSpec::unrestricted();
  if (f->filter == QuantFilterKind::NamedDelta) {
    auto it = env.model->domain_functions.find(f->filter_name);
    if (it == env.model->domain_functions.end())
      throw EvalError("unknown domain function '" + f->filter_name + "'");
    std::vector<Element> delta;
    delta.reserve(members.size());
    for (const auto& member : members) delta.push_back(it->second(member));
    spec = DomainSpec::varying(std::move(delta));
  }
  return f->kind == FormulaKind::ForallProp ? pi(values, spec, d)
                                            : sigma(values, spec, d);
}

Element eval_ind_quant(const FormulaPtr& f, Env& env) {
  PointDomain d = env.model->points;
  if (env.model->individuals < 1)
    throw EvalError("individual quantifier in a model without individuals");
  std::vector<Element> values;
  auto saved = env.individuals.find(f->name);
  std::optional<int> shadowed;
  if (saved != env.individuals.end()) shadowed = saved->second;
  for (int i = 0; i < env.model->individuals; ++i) {
    env.individuals.insert_or_assign(f->name, i);
    values.push_back(eval_node(f->lhs, env));
  }
  if (shadowed)
    env.individuals.insert_or_assign(f->name, *shadowed);
  else
    env.individuals.erase(f->name);
  auto spec = DomainSpec::unrestricted();
  return f->kind == FormulaKind::ForallInd ? pi(values, spec, d)
                                           : sigma(values, spec, d);
}

Element eval_node(const FormulaPtr& f, Env& env) {
  PointDomain d = env.model->points;
  auto C = [&](const Element& x) { return env.closure(x); };
  auto I = [&](const Element& x) { return env.interior(x); };
  switch (f->kind) {
    case FormulaKind::Var: {
      auto it = env.prop.find(f->name);
      if (it == env.prop.end())
        throw EvalError("unbound variable '" + f->name + "'");
      return it->second;
    }
    case FormulaKind::Top: return Element::top(d);
    case FormulaKind::Bot: return Element::bottom(d);
    case FormulaKind::CNot: return complement(eval_node(f->lhs, env));
    case FormulaKind::And:
      return meet(eval_node(f->lhs, env), eval_node(f->rhs, env));
    case FormulaKind::Or:
      return join(eval_node(f->lhs, env), eval_node(f->rhs, env));
    case FormulaKind::Impl:
      return impl(eval_node(f->lhs, env), eval_node(f->rhs, env));
    case FormulaKind::Iff:
      return iff(eval_node(f->lhs, env), eval_node(f->rhs, env));
    case FormulaKind::Diff:
      return diff(eval_node(f->lhs, env), eval_node(f->rhs, env));
    case FormulaKind::SymDiff:
      return symdiff(eval_node(f->lhs, env), eval_node(f->rhs, env));
    case FormulaKind::NegC: return C(complement(eval_node(f->lhs, env)));
    case FormulaKind::NegI: return I(complement(eval_node(f->lhs, env)));
    case FormulaKind::NegIC: return I(C(complement(eval_node(f->lhs, env))));
    case FormulaKind::NegCI: return C(I(complement(eval_node(f->lhs, env))));
    case FormulaKind::Cons: {
      Element v = eval_node(f->lhs, env);
      return iff(I(v), v);
    }
    case FormulaKind::Det: {
      Element v = eval_node(f->lhs, env);
      return iff(C(v), v);
    }
    case FormulaKind::Undet: {
      Element v = eval_node(f->lhs, env);
      return symdiff(C(v), v);
    }
    case FormulaKind::Box:
    case FormulaKind::OpInt: return I(eval_node(f->lhs, env));
    case FormulaKind::Dia:
    case FormulaKind::OpCl: return C(eval_node(f->lhs, env));
    case FormulaKind::OpExt: return complement(C(eval_node(f->lhs, env)));
    case FormulaKind::OpBdr: {
      Element v = eval_node(f->lhs, env);
      return meet(v, C(complement(v)));
    }
    case FormulaKind::OpFrt: {
      Element v = eval_node(f->lhs, env);
      return meet(C(v), C(complement(v)));
    }
    case FormulaKind::ForallProp:
    case FormulaKind::ExistsProp: return eval_prop_quant(f, env);
    case FormulaKind::ForallInd:
    case FormulaKind::ExistsInd: return eval_ind_quant(f, env);
    case FormulaKind::PredApp: {
      auto var = env.individuals.find(f->arg_name);
      if (var == env.individuals.end())
        throw EvalError("unbound individual variable '" + f->arg_name + "'");
      auto pred = env.model->predicates.find(f->name);
      if (pred == env.model->predicates.end())
        throw EvalError("unknown predicate '" + f->name + "'");
      return pred->second.at(var->second);
    }
  }
  throw EvalError("unhandled formula node");
}

Env make_env(const Model& m) {
  Env env{&m, m.closure(), m.interior(), m.valuation, {}};
  return env;
}

}  // namespace

Element eval(const FormulaPtr& f, const Model& m) {
  Env env = make_env(m);
  return eval_node(f, env);
}

bool consequence(const Sequent& s, const Model& m) {
  Env env = make_env(m);
  PointDomain d = m.points;
  if (s.mode == ConsequenceMode::Local) {
    uint32_t prem = d.full_mask();
    for (const auto& f : s.premises) prem &= eval_node(f, env).bits();
    uint32_t concl = 0;
    for (const auto& f : s.conclusions) concl |= eval_node(f, env).bits();
    return (prem & ~concl) == 0;
  }
  for (const auto& f : s.premises)
    if (eval_node(f, env).bits() != d.full_mask()) return true;
  for (const auto& f : s.conclusions)
    if (eval_node(f, env).bits() == d.full_mask()) return true;
  return false;
}

bool valid(const FormulaPtr& f, const Model& m) {
  return eval(f, m).bits() == m.points.full_mask();
}

const char* negation_name(NegationConnective n) {
  switch (n) {
    case NegationConnective::CNot: return "-";
    case NegationConnective::NegC: return "negC";
    case NegationConnective::NegI: return "negI";
    case NegationConnective::NegIC: return "negIC";
    case NegationConnective::NegCI: return "negCI";
  }
  return "?";
}

std::optional<NegationConnective> negation_from_name(std::string_view name) {
  for (auto n : {NegationConnective::CNot, NegationConnective::NegC,
                 NegationConnective::NegI, NegationConnective::NegIC,
                 NegationConnective::NegCI})
    if (name == negation_name(n)) return n;
  return std::nullopt;
}

Element apply_negation(NegationConnective n, const Model& m,
                       const Element& a) {
  Op c = m.closure();
  switch (n) {
    case NegationConnective::CNot: return complement(a);
    case NegationConnective::NegC: return c(complement(a));
    case NegationConnective::NegI:
      return transform(c, TransformKind::D)(complement(a));
    case NegationConnective::NegIC:
      return transform(c, TransformKind::D)(c(complement(a)));
    case NegationConnective::NegCI:
      return c(transform(c, TransformKind::D)(complement(a)));
  }
  throw EvalError("unhandled negation connective");
}

namespace {

struct PropertyRow {
  NegationPropertyId id;
  const char* name;
};
constexpr PropertyRow kProperties[] = {
    {NegationPropertyId::weakTND, "weakTND"},
    {NegationPropertyId::weakECQ, "weakECQ"},
    {NegationPropertyId::LNC, "LNC"},
    {NegationPropertyId::deMorgan1a, "deMorgan1a"},
    {NegationPropertyId::deMorgan1b, "deMorgan1b"},
    {NegationPropertyId::deMorgan2a, "deMorgan2a"},
    {NegationPropertyId::deMorgan2b, "deMorgan2b"},
    {NegationPropertyId::dblNeg_a, "dblNeg_a"},
    {NegationPropertyId::dblNeg_b, "dblNeg_b"},
    {NegationPropertyId::weakDblNeg_a, "weakDblNeg_a"},
    {NegationPropertyId::weakDblNeg_b, "weakDblNeg_b"},
    {NegationPropertyId::contraposition1a, "contraposition1a"},
    {NegationPropertyId::contraposition1b, "contraposition1b"},
    {NegationPropertyId::contraposition2a, "contraposition2a"},
    {NegationPropertyId::contraposition2b, "contraposition2b"},
    {NegationPropertyId::weakContraposition1, "weakContraposition1"},
    {NegationPropertyId::weakContraposition2, "weakContraposition2"},
    {NegationPropertyId::disjSyllogism_a, "disjSyllogism_a"},
    {NegationPropertyId::disjSyllogism_b, "disjSyllogism_b"},
};

}  // namespace

const char* negation_property_name(NegationPropertyId p) {
  for (const auto& row : kProperties)
    if (row.id == p) return row.name;
  return "?";
}

const std::vector<NegationPropertyId>& all_negation_properties() {
  static const std::vector<NegationPropertyId> ids = [] {
    std::vector<NegationPropertyId> v;
    for (const auto& row : kProperties) v.push_back(row.id);
    return v;
  }();
  return ids;
}

namespace {

template <typename Admissible>
PropertyReport negation_property_impl(NegationPropertyId p,
                                      NegationConnective n, const Model& m,
                                      Admissible admissible) {
  PointDomain d = m.points;
  auto NEG = [&](const Element& x) { return apply_negation(n, m, x); };
  Element top = Element::top(d);

  // The schema quantifies over the metavariables; a failing valuation is the
  // witness. One- and two-variable schemas are both scanned as pairs.
  auto scan = [&](auto check, bool two_vars) -> PropertyReport {
    PropertyReport out{p, n, true, {}};
    for (uint32_t a = 0; a < d.element_count(); ++a) {
      if (!admissible(a)) continue;
      uint32_t b_limit = two_vars ? d.element_count() : 1;
      for (uint32_t b = 0; b < b_limit; ++b) {
        if (two_vars && !admissible(b)) continue;
        Element ea(a, d), eb(b, d);
        if (check(ea, eb)) continue;
        out.holds = false;
        out.witness = {ea};
        if (two_vars) out.witness.push_back(eb);
        return out;
      }
    }
    return out;
  };

  switch (p) {
    case NegationPropertyId::weakTND:
      return scan([&](const Element& a, const Element& b) {
        return leq(NEG(b), join(a, NEG(a)));
      }, true);
    case NegationPropertyId::weakECQ:
      return scan([&](const Element& a, const Element& b) {
        return leq(meet(a, NEG(a)), NEG(b));
      }, true);
    case NegationPropertyId::LNC:
      return scan([&](const Element& a, const Element&) {
        return eq(NEG(meet(a, NEG(a))), top);
      }, false);
    case NegationPropertyId::deMorgan1a:
      return scan([&](const Element& a, const Element& b) {
        return leq(NEG(join(a, b)), meet(NEG(a), NEG(b)));
      }, true);
    case NegationPropertyId::deMorgan1b:
      return scan([&](const Element& a, const Element& b) {
        return leq(meet(NEG(a), NEG(b)), NEG(join(a, b)));
      }, true);
    case NegationPropertyId::deMorgan2a:
      return scan([&](const Element& a, const Element& b) {
        return leq(NEG(meet(a, b)), join(NEG(a), NEG(b)));
      }, true);
    case NegationPropertyId::deMorgan2b:
      return scan([&](const Element& a, const Element& b) {
        return leq(join(NEG(a), NEG(b)), NEG(meet(a, b)));
      }, true);
    case NegationPropertyId::dblNeg_a:
      return scan([&](const Element& a, const Element&) {
        return leq(a, NEG(NEG(a)));
      }, false);
    case NegationPropertyId::dblNeg_b:
      return scan([&](const Element& a, const Element&) {
        return leq(NEG(NEG(a)), a);
      }, false);
    case NegationPropertyId::weakDblNeg_a:
      return scan([&](const Element& a, const Element&) {
        return !eq(a, top) || eq(NEG(NEG(a)), top);
      }, false);
    case NegationPropertyId::weakDblNeg_b:
      return scan([&](const Element& a, const Element&) {
        return !eq(NEG(NEG(a)), top) || eq(a, top);
      }, false);
    case NegationPropertyId::contraposition1a:
      return scan([&](const Element& a, const Element& b) {
        return leq(impl(a, b), impl(NEG(b), NEG(a)));
      }, true);
    case NegationPropertyId::contraposition1b:
      return scan([&](const Element& a, const Element& b) {
        return leq(impl(NEG(b), NEG(a)), impl(a, b));
      }, true);
    case NegationPropertyId::contraposition2a:
      return scan([&](const Element& a, const Element& b) {
        return leq(impl(a, NEG(b)), impl(b, NEG(a)));
      }, true);
    case NegationPropertyId::contraposition2b:
      return scan([&](const Element& a, const Element& b) {
        return leq(impl(b, NEG(a)), impl(a, NEG(b)));
      }, true);
    case NegationPropertyId::weakContraposition1:
      return scan([&](const Element& a, const Element& b) {
        return leq(a, b) == leq(NEG(b), NEG(a));
      }, true);
    case NegationPropertyId::weakContraposition2:
      return scan([&](const Element& a, const Element& b) {
        return leq(a, NEG(b)) == leq(b, NEG(a));
      }, true);
    case NegationPropertyId::disjSyllogism_a:
      return scan([&](const Element& a, const Element& b) {
        return leq(join(a, b), impl(NEG(a), b));
      }, true);
    case NegationPropertyId::disjSyllogism_b:
      return scan([&](const Element& a, const Element& b) {
        return leq(impl(NEG(a), b), join(a, b));
      }, true);
  }
  throw EvalError("unhandled negation property");
}

}  // namespace

PropertyReport negation_property(NegationPropertyId p, NegationConnective n,
                                 const Model& m) {
  return negation_property_impl(p, n, m, [](uint32_t) { return true; });
}

PropertyReport negation_property_guarded(NegationPropertyId p,
                                         NegationConnective n, const Model& m,
                                         const Op& guard) {
  const uint32_t full = m.points.full_mask();
  return negation_property_impl(
      p, n, m, [&](uint32_t a) { return guard.apply(a) == full; });
}

FormulaPtr sample_formula_context(uint64_t seed, const std::string& var,
                                  int max_depth) {
  std::mt19937_64 rng(seed);
  // Leaves lean on the hole variable so contexts actually use it.
  std::function<FormulaPtr(int)> gen = [&](int depth) -> FormulaPtr {
    uint64_t roll = rng() % 10;
    if (depth >= max_depth || roll < 3) {
      if (roll == 0) return make_const(rng() % 2 == 0);
      return make_var(var);
    }
    if (roll < 7) {
      static const FormulaKind unary[] = {
          FormulaKind::CNot, FormulaKind::NegC, FormulaKind::NegI,
          FormulaKind::Cons, FormulaKind::Det,  FormulaKind::Box,
          FormulaKind::Dia,  FormulaKind::OpBdr};
      return make_unary(unary[rng() % 8], gen(depth + 1));
    }
    static const FormulaKind binary[] = {FormulaKind::And, FormulaKind::Or,
                                         FormulaKind::Impl, FormulaKind::Iff};
    return make_binary(binary[rng() % 4], gen(depth + 1), gen(depth + 1));
  };
  return gen(0);
}

RecoveryReport recovery_theorems(const Model& m, int context_samples,
                                 uint64_t seed) {
  RecoveryReport r;
  PointDomain d = m.points;
  Op c = m.closure();
  Op i = transform(c, TransformKind::D);
  const uint32_t full = d.full_mask();

  auto negC = [&](uint32_t a) { return c.apply(~a & full); };
  auto negI = [&](uint32_t a) { return ~c.apply(a) & full; };
  auto cons = [&](uint32_t a) { return ~(i.apply(a) ^ a) & full; };
  auto det = [&](uint32_t a) { return ~(c.apply(a) ^ a) & full; };

  for (uint32_t a = 0; a < d.element_count(); ++a) {
    if (i.apply(a) == a && (a & negC(a)) != 0) r.open_gives_ecq = false;
    if (c.apply(a) == a && (a | negI(a)) != full) r.closed_gives_tnd = false;
    if ((cons(a) & a & negC(a)) != 0) r.gentle_explosion = false;
    if ((det(a) & ~(a | negI(a))) != 0) r.determinedness = false;
  }

  // (c) holds for arbitrary eta; exhaust the operator space when it is
  // enumerable, sample it otherwise.
  auto check_eta = [&](const Op& eta) {
    for (uint32_t a = 0; a < d.element_count(); ++a) {
      uint32_t eta_a = eta.apply(a);
      uint32_t fpc = eta_a ^ a;
      uint32_t fp = ~fpc & full;
      if ((fpc & a & eta_a) != 0) r.eta_explosion = false;
      if ((fpc & ~(a | eta_a)) != 0) r.eta_determined = false;
      if ((fp | a | eta_a) != full) r.eta_excluded = false;
    }
  };
  if (d.n <= 2) {
    enumerate_operators(d, check_eta);
  } else {
    r.eta_exhaustive = false;
    for (uint64_t s = 0; s < 2000; ++s) check_eta(sample_operator(d, seed + s));
  }

  // (d) table identities. The border here is the rear-face vertex d(fp C),
  // which matches the inter-definition border exactly when EXPN C holds.
  Op border = border_from_fixedpoint(c);
  Op cons_op(d), det_op(d), undet_op(d), negc_op(d), negi_op(d);
  for (uint32_t a = 0; a < d.element_count(); ++a) {
    cons_op.set(a, cons(a));
    det_op.set(a, det(a));
    undet_op.set(a, det(a) ^ full);
    negc_op.set(a, negC(a));
    negi_op.set(a, negI(a));
  }
  r.cons_is_negc_fpc = transform(negc_op, TransformKind::FPC) == cons_op;
  r.det_is_negi_fpc = transform(negi_op, TransformKind::FPC) == det_op;
  r.undet_is_negi_fp = transform(negi_op, TransformKind::FP) == undet_op;
  r.cons_is_border_compl = op_compl(border) == cons_op;
  r.det_is_border_dual = transform(border, TransformKind::D) == det_op;

  // (e) the Gamma/Delta schema on sampled formula contexts.
  Model probe = m;
  r.contexts_sampled = context_samples;
  for (int s = 0; s < context_samples; ++s) {
    FormulaPtr gamma = sample_formula_context(seed + 2 * s, "a");
    FormulaPtr delta = sample_formula_context(seed + 2 * s + 1, "a");
    for (uint32_t a = 0; a < d.element_count(); ++a) {
      probe.valuation.insert_or_assign("a", Element(a, d));
      uint32_t g = eval(gamma, probe).bits();
      uint32_t dd = eval(delta, probe).bits();
      bool premise = ((cons(a) & g) & ~dd) == 0;
      bool open = i.apply(a) == a;
      if (premise && open && (g & ~dd) != 0) r.gamma_delta_schema = false;
    }
  }
  return r;
}

}  // namespace tba
