#include "tba/conditions.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace tba {

namespace {

struct NameEntry {
  ConditionId id;
  const char* name;
};

constexpr NameEntry kNames[] = {
    {ConditionId::MONO, "MONO"},
    {ConditionId::ADDI_a, "ADDI_a"},
    {ConditionId::ADDI_b, "ADDI_b"},
    {ConditionId::ADDI, "ADDI"},
    {ConditionId::MULT_a, "MULT_a"},
    {ConditionId::MULT_b, "MULT_b"},
    {ConditionId::MULT, "MULT"},
    {ConditionId::EXPN, "EXPN"},
    {ConditionId::CNTR, "CNTR"},
    {ConditionId::NORM, "NORM"},
    {ConditionId::DNRM, "DNRM"},
    {ConditionId::IDEM_a, "IDEM_a"},
    {ConditionId::IDEM_b, "IDEM_b"},
    {ConditionId::IDEM, "IDEM"},
    {ConditionId::iADDI_a, "iADDI_a"},
    {ConditionId::iADDI_b, "iADDI_b"},
    {ConditionId::iADDI, "iADDI"},
    {ConditionId::iMULT_a, "iMULT_a"},
    {ConditionId::iMULT_b, "iMULT_b"},
    {ConditionId::iMULT, "iMULT"},
    {ConditionId::ANTI, "ANTI"},
    {ConditionId::nADDI_a, "nADDI_a"},
    {ConditionId::nADDI_b, "nADDI_b"},
    {ConditionId::nMULT_a, "nMULT_a"},
    {ConditionId::nMULT_b, "nMULT_b"},
    {ConditionId::nEXPN, "nEXPN"},
    {ConditionId::nCNTR, "nCNTR"},
    {ConditionId::nNORM, "nNORM"},
    {ConditionId::nDNRM, "nDNRM"},
    {ConditionId::nIDEM_a, "nIDEM_a"},
    {ConditionId::nIDEM_b, "nIDEM_b"},
    {ConditionId::inADDI_a, "inADDI_a"},
    {ConditionId::inADDI_b, "inADDI_b"},
    {ConditionId::inMULT_a, "inMULT_a"},
    {ConditionId::inMULT_b, "inMULT_b"},
    {ConditionId::ADDIr_a, "ADDIr_a"},
    {ConditionId::ADDIr_b, "ADDIr_b"},
    {ConditionId::MULTr_a, "MULTr_a"},
    {ConditionId::MULTr_b, "MULTr_b"},
    {ConditionId::iADDIr_a, "iADDIr_a"},
    {ConditionId::iADDIr_b, "iADDIr_b"},
    {ConditionId::iMULTr_a, "iMULTr_a"},
    {ConditionId::iMULTr_b, "iMULTr_b"},
    {ConditionId::IDEMr_a, "IDEMr_a"},
    {ConditionId::IDEMr_b, "IDEMr_b"},
    {ConditionId::nADDIr_a, "nADDIr_a"},
    {ConditionId::nADDIr_b, "nADDIr_b"},
    {ConditionId::nMULTr_a, "nMULTr_a"},
    {ConditionId::nMULTr_b, "nMULTr_b"},
    {ConditionId::nMULTr, "nMULTr"},
    {ConditionId::inADDIr_a, "inADDIr_a"},
    {ConditionId::inADDIr_b, "inADDIr_b"},
    {ConditionId::inMULTr_a, "inMULTr_a"},
    {ConditionId::inMULTr_b, "inMULTr_b"},
    {ConditionId::nIDEMr_a, "nIDEMr_a"},
    {ConditionId::nIDEMr_b, "nIDEMr_b"},
    {ConditionId::MONOw1, "MONOw1"},
    {ConditionId::MONOw2, "MONOw2"},
    {ConditionId::ANTIw1, "ANTIw1"},
    {ConditionId::ANTIw2, "ANTIw2"},
};

}  // namespace

const char* condition_name(ConditionId c) {
  for (const auto& e : kNames)
    if (e.id == c) return e.name;
  return "?";
}

std::optional<ConditionId> condition_from_name(std::string_view name) {
  for (const auto& e : kNames)
    if (name == e.name) return e.id;
  return std::nullopt;
}

const std::vector<ConditionId>& all_condition_ids() {
  static const std::vector<ConditionId> ids = [] {
    std::vector<ConditionId> v;
    for (const auto& e : kNames) v.push_back(e.id);
    return v;
  }();
  return ids;
}

bool condition_is_infinitary(ConditionId c) {
  switch (c) {
    case ConditionId::iADDI_a:
    case ConditionId::iADDI_b:
    case ConditionId::iADDI:
    case ConditionId::iMULT_a:
    case ConditionId::iMULT_b:
    case ConditionId::iMULT:
    case ConditionId::inADDI_a:
    case ConditionId::inADDI_b:
    case ConditionId::inMULT_a:
    case ConditionId::inMULT_b:
    case ConditionId::iADDIr_a:
    case ConditionId::iADDIr_b:
    case ConditionId::iMULTr_a:
    case ConditionId::iMULTr_b:
    case ConditionId::inADDIr_a:
    case ConditionId::inADDIr_b:
    case ConditionId::inMULTr_a:
    case ConditionId::inMULTr_b:
      return true;
    default:
      return false;
  }
}

namespace {

// --- finitary scanners -----------------------------------------------------

template <typename Viol>  // Viol(a, b) -> violated?
std::optional<Witness> scan_pairs(const Op& f, Viol violated) {
  const uint32_t count = f.size();
  for (uint32_t a = 0; a < count; ++a)
    for (uint32_t b = 0; b < count; ++b)
      if (violated(a, b))
        return Witness{{Element(a, f.domain()), Element(b, f.domain())}, {}};
  return std::nullopt;
}

template <typename Viol>  // Viol(a) -> violated?
std::optional<Witness> scan_singles(const Op& f, Viol violated) {
  for (uint32_t a = 0; a < f.size(); ++a)
    if (violated(a)) return Witness{{Element(a, f.domain())}, {}};
  return std::nullopt;
}

// --- family scanners -------------------------------------------------------

struct FamilyOutcome {
  bool exact = true;
  std::optional<std::vector<uint32_t>> witness;
};

// Violation predicates receive the family's big join, big meet, and the
// big join / big meet of its image under f.
struct FamilyView {
  uint32_t sup = 0;
  uint32_t inf = 0;
  uint32_t img_sup = 0;
  uint32_t img_inf = 0;
};

template <typename Viol>
bool family_violates(const Op& f, const std::vector<uint32_t>& members,
                     Viol violated) {
  const uint32_t full = f.domain().full_mask();
  FamilyView v;
  v.inf = full;
  v.img_inf = full;
  for (uint32_t m : members) {
    v.sup |= m;
    v.inf &= m;
    uint32_t out = f.apply(m);
    v.img_sup |= out;
    v.img_inf &= out;
  }
  return violated(v);
}

template <typename Viol>  // Viol(FamilyView) -> violated?
FamilyOutcome scan_families(const Op& f, const InfinitaryPolicy& policy,
                            Viol violated) {
  const uint32_t elems = f.size();
  FamilyOutcome out;
  if (f.points() <= 2) {
    // Exact: every one of the 2^(2^n) families, the empty one included.
    for (uint32_t fm = 0; fm < (1u << elems); ++fm) {
      std::vector<uint32_t> members;
      for (uint32_t m = 0; m < elems; ++m)
        if ((fm >> m) & 1u) members.push_back(m);
      if (family_violates(f, members, violated)) {
        out.witness = std::move(members);
        return out;
      }
    }
    return out;
  }

  out.exact = false;
  auto try_family = [&](std::vector<uint32_t> members) -> bool {
    if (family_violates(f, members, violated)) {
      out.witness = std::move(members);
      return true;
    }
    return false;
  };

  // Empty family first: it encodes the distribution over empty suprema/infima.
  if (try_family({})) return out;
  if (try_family([&] {
        std::vector<uint32_t> all(elems);
        for (uint32_t m = 0; m < elems; ++m) all[m] = m;
        return all;
      }()))
    return out;

  // Systematic small families, budget permitting.
  for (uint32_t a = 0; a < elems; ++a) {
    if (policy.family_bound >= 1 && try_family({a})) return out;
    if (elems > 256) continue;
    for (uint32_t b = a + 1; b < elems && policy.family_bound >= 2; ++b) {
      if (try_family({a, b})) return out;
      for (uint32_t c = b + 1; c < elems && policy.family_bound >= 3; ++c)
        if (try_family({a, b, c})) return out;
    }
  }

  std::mt19937_64 rng(policy.seed);
  for (int s = 0; s < policy.samples; ++s) {
    size_t size = rng() % 9;
    std::vector<uint32_t> members;
    for (size_t i = 0; i < size; ++i)
      members.push_back(static_cast<uint32_t>(rng() % elems));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (try_family(std::move(members))) return out;
  }
  return out;
}

Witness family_witness(const Op& f, const std::vector<uint32_t>& members) {
  std::vector<Element> elems;
  elems.reserve(members.size());
  for (uint32_t m : members) elems.emplace_back(m, f.domain());
  Witness w;
  w.family = Family(elems, f.domain());
  return w;
}

CheckReport report_from_family(ConditionId c, const Op& f,
                               const FamilyOutcome& out) {
  CheckReport r;
  r.condition = c;
  r.approximate = !out.exact;
  r.holds = !out.witness.has_value();
  if (out.witness) r.witness = family_witness(f, *out.witness);
  return r;
}

CheckReport report_finitary(ConditionId c, std::optional<Witness> w) {
  CheckReport r;
  r.condition = c;
  r.holds = !w.has_value();
  r.witness = std::move(w);
  return r;
}

CheckReport combine(ConditionId c, CheckReport lhs, CheckReport rhs) {
  CheckReport r;
  r.condition = c;
  r.approximate = lhs.approximate || rhs.approximate;
  if (!lhs.holds) {
    r.holds = false;
    r.witness = std::move(lhs.witness);
  } else if (!rhs.holds) {
    r.holds = false;
    r.witness = std::move(rhs.witness);
  } else {
    r.holds = true;
  }
  return r;
}

}  // namespace

CheckReport check(ConditionId c, const Op& f, const InfinitaryPolicy& policy) {
  const uint32_t full = f.domain().full_mask();
  auto F = [&](uint32_t m) { return f.apply(m); };
  auto subset = [](uint32_t a, uint32_t b) { return (a & ~b) == 0; };

  switch (c) {
    case ConditionId::MONO:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return subset(a, b) && !subset(F(a), F(b));
      }));
    case ConditionId::ANTI:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return subset(a, b) && !subset(F(b), F(a));
      }));
    case ConditionId::ADDI_a:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return !subset(F(a | b), F(a) | F(b));
      }));
    case ConditionId::ADDI_b:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return !subset(F(a) | F(b), F(a | b));
      }));
    case ConditionId::ADDI:
      return combine(c, check(ConditionId::ADDI_a, f, policy),
                     check(ConditionId::ADDI_b, f, policy));
    case ConditionId::MULT_a:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return !subset(F(a & b), F(a) & F(b));
      }));
    case ConditionId::MULT_b:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return !subset(F(a) & F(b), F(a & b));
      }));
    case ConditionId::MULT:
      return combine(c, check(ConditionId::MULT_a, f, policy),
                     check(ConditionId::MULT_b, f, policy));
    case ConditionId::EXPN:
      return report_finitary(
          c, scan_singles(f, [&](uint32_t a) { return !subset(a, F(a)); }));
    case ConditionId::CNTR:
      return report_finitary(
          c, scan_singles(f, [&](uint32_t a) { return !subset(F(a), a); }));
    case ConditionId::NORM:
      return report_finitary(
          c, F(0) == 0 ? std::nullopt
                       : std::make_optional(Witness{
                             {Element::bottom(f.domain())}, {}}));
    case ConditionId::DNRM:
      return report_finitary(
          c, F(full) == full ? std::nullopt
                             : std::make_optional(Witness{
                                   {Element::top(f.domain())}, {}}));
    case ConditionId::IDEM_a:
      return report_finitary(c, scan_singles(f, [&](uint32_t a) {
        return !subset(F(F(a)), F(a));
      }));
    case ConditionId::IDEM_b:
      return report_finitary(c, scan_singles(f, [&](uint32_t a) {
        return !subset(F(a), F(F(a)));
      }));
    case ConditionId::IDEM:
      return combine(c, check(ConditionId::IDEM_a, f, policy),
                     check(ConditionId::IDEM_b, f, policy));

    case ConditionId::iADDI_a:
      return report_from_family(c, f, scan_families(f, policy, [&](const FamilyView& v) {
        return !subset(F(v.sup), v.img_sup);
      }));
    case ConditionId::iADDI_b:
      return report_from_family(c, f, scan_families(f, policy, [&](const FamilyView& v) {
        return !subset(v.img_sup, F(v.sup));
      }));
    case ConditionId::iADDI:
      return combine(c, check(ConditionId::iADDI_a, f, policy),
                     check(ConditionId::iADDI_b, f, policy));
    case ConditionId::iMULT_a:
      return report_from_family(c, f, scan_families(f, policy, [&](const FamilyView& v) {
        return !subset(F(v.inf), v.img_inf);
      }));
    case ConditionId::iMULT_b:
      return report_from_family(c, f, scan_families(f, policy, [&](const FamilyView& v) {
        return !subset(v.img_inf, F(v.inf));
      }));
    case ConditionId::iMULT:
      return combine(c, check(ConditionId::iMULT_a, f, policy),
                     check(ConditionId::iMULT_b, f, policy));

    case ConditionId::nADDI_a:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return !subset(F(a) & F(b), F(a | b));
      }));
    case ConditionId::nADDI_b:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return !subset(F(a | b), F(a) & F(b));
      }));
    case ConditionId::nMULT_a:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return !subset(F(a) | F(b), F(a & b));
      }));
    case ConditionId::nMULT_b:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return !subset(F(a & b), F(a) | F(b));
      }));
    case ConditionId::nEXPN:
      return report_finitary(c, scan_singles(f, [&](uint32_t a) {
        return !subset(F(a), ~a & full);
      }));
    case ConditionId::nCNTR:
      return report_finitary(c, scan_singles(f, [&](uint32_t a) {
        return !subset(~a & full, F(a));
      }));
    case ConditionId::nNORM:
      return report_finitary(
          c, F(0) == full ? std::nullopt
                          : std::make_optional(Witness{
                                {Element::bottom(f.domain())}, {}}));
    case ConditionId::nDNRM:
      return report_finitary(
          c, F(full) == 0 ? std::nullopt
                          : std::make_optional(Witness{
                                {Element::top(f.domain())}, {}}));
    case ConditionId::nIDEM_a:
      return report_finitary(c, scan_singles(f, [&](uint32_t a) {
        return !subset(F(a), F(~F(a) & full));
      }));
    case ConditionId::nIDEM_b:
      return report_finitary(c, scan_singles(f, [&](uint32_t a) {
        return !subset(F(~F(a) & full), F(a));
      }));
    case ConditionId::inADDI_a:
      return report_from_family(c, f, scan_families(f, policy, [&](const FamilyView& v) {
        return !subset(v.img_inf, F(v.sup));
      }));
    case ConditionId::inADDI_b:
      return report_from_family(c, f, scan_families(f, policy, [&](const FamilyView& v) {
        return !subset(F(v.sup), v.img_inf);
      }));
    case ConditionId::inMULT_a:
      return report_from_family(c, f, scan_families(f, policy, [&](const FamilyView& v) {
        return !subset(v.img_sup, F(v.inf));
      }));
    case ConditionId::inMULT_b:
      return report_from_family(c, f, scan_families(f, policy, [&](const FamilyView& v) {
        return !subset(F(v.inf), v.img_sup);
      }));

    // Relativized variants. The subscript form restricts the (in)equality to
    // the points inside the relativizer, the superscript form to those
    // outside it.
    case ConditionId::ADDIr_a:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        uint32_t outside = ~(a | b) & full;
        return (F(a | b) & ~(F(a) | F(b)) & outside) != 0;
      }));
    case ConditionId::ADDIr_b:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        uint32_t outside = ~(a | b) & full;
        return ((F(a) | F(b)) & ~F(a | b) & outside) != 0;
      }));
    case ConditionId::MULTr_a:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return (F(a & b) & ~(F(a) & F(b)) & (a & b)) != 0;
      }));
    case ConditionId::MULTr_b:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return ((F(a) & F(b)) & ~F(a & b) & (a & b)) != 0;
      }));
    case ConditionId::iADDIr_a:
      return report_from_family(c, f, scan_families(f, policy, [&](const FamilyView& v) {
        uint32_t outside = ~v.sup & full;
        return (F(v.sup) & ~v.img_sup & outside) != 0;
      }));
    case ConditionId::iADDIr_b:
      return report_from_family(c, f, scan_families(f, policy, [&](const FamilyView& v) {
        uint32_t outside = ~v.sup & full;
        return (v.img_sup & ~F(v.sup) & outside) != 0;
      }));
    case ConditionId::iMULTr_a:
      return report_from_family(c, f, scan_families(f, policy, [&](const FamilyView& v) {
        return (F(v.inf) & ~v.img_inf & v.inf) != 0;
      }));
    case ConditionId::iMULTr_b:
      return report_from_family(c, f, scan_families(f, policy, [&](const FamilyView& v) {
        return (v.img_inf & ~F(v.inf) & v.inf) != 0;
      }));
    case ConditionId::IDEMr_a:
      return report_finitary(c, scan_singles(f, [&](uint32_t a) {
        uint32_t outside = ~a & full;
        return (F(a | F(a)) & ~F(a) & outside) != 0;
      }));
    case ConditionId::IDEMr_b:
      return report_finitary(c, scan_singles(f, [&](uint32_t a) {
        return (F(a) & ~F(a & F(a)) & a) != 0;
      }));

    case ConditionId::nADDIr_a:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        uint32_t outside = ~(a | b) & full;
        return ((F(a) & F(b)) & ~F(a | b) & outside) != 0;
      }));
    case ConditionId::nADDIr_b:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        uint32_t outside = ~(a | b) & full;
        return (F(a | b) & ~(F(a) & F(b)) & outside) != 0;
      }));
    case ConditionId::nMULTr_a:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return ((F(a) | F(b)) & ~F(a & b) & (a & b)) != 0;
      }));
    case ConditionId::nMULTr_b:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return (F(a & b) & ~(F(a) | F(b)) & (a & b)) != 0;
      }));
    case ConditionId::nMULTr:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return ((F(a & b) ^ (F(a) | F(b))) & (a & b)) != 0;
      }));
    case ConditionId::inADDIr_a:
      return report_from_family(c, f, scan_families(f, policy, [&](const FamilyView& v) {
        uint32_t outside = ~v.sup & full;
        return (v.img_inf & ~F(v.sup) & outside) != 0;
      }));
    case ConditionId::inADDIr_b:
      return report_from_family(c, f, scan_families(f, policy, [&](const FamilyView& v) {
        uint32_t outside = ~v.sup & full;
        return (F(v.sup) & ~v.img_inf & outside) != 0;
      }));
    case ConditionId::inMULTr_a:
      return report_from_family(c, f, scan_families(f, policy, [&](const FamilyView& v) {
        return (v.img_sup & ~F(v.inf) & v.inf) != 0;
      }));
    case ConditionId::inMULTr_b:
      return report_from_family(c, f, scan_families(f, policy, [&](const FamilyView& v) {
        return (F(v.inf) & ~v.img_sup & v.inf) != 0;
      }));
    case ConditionId::nIDEMr_a:
      return report_finitary(c, scan_singles(f, [&](uint32_t a) {
        uint32_t outside = ~a & full;
        return (F(a) & ~F(a | (~F(a) & full)) & outside) != 0;
      }));
    case ConditionId::nIDEMr_b:
      return report_finitary(c, scan_singles(f, [&](uint32_t a) {
        return (F(a & ~F(a)) & ~F(a) & a) != 0;
      }));

    case ConditionId::MONOw1:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return subset(a, b) && !subset(F(a), b | F(b));
      }));
    case ConditionId::MONOw2:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return subset(a, b) && !subset(a & F(a), F(b));
      }));
    case ConditionId::ANTIw1:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return subset(a, b) && !subset(F(b), b | F(a));
      }));
    case ConditionId::ANTIw2:
      return report_finitary(c, scan_pairs(f, [&](uint32_t a, uint32_t b) {
        return subset(a, b) && !subset(a & F(b), F(a));
      }));
  }
  throw std::logic_error("unhandled condition id");
}

CheckReport check(ConditionId c, const Op& f) {
  return check(c, f, InfinitaryPolicy{});
}

bool holds(ConditionId c, const Op& f) { return check(c, f).holds; }

bool check_equiv_scan(ConditionId c1, ConditionId c2, PointDomain d) {
  bool agree = true;
  enumerate_operators(d, [&](const Op& f) {
    if (agree && holds(c1, f) != holds(c2, f)) agree = false;
  });
  return agree;
}

bool check_translation(ConditionId c, const Op& f, TransformKind k,
                       ConditionId c_translated) {
  return holds(c, f) == holds(c_translated, transform(f, k));
}

bool check_dual_pair(ConditionId c, ConditionId c_dual, const Op& f) {
  return check_translation(c, f, TransformKind::D, c_dual);
}

const std::vector<TranslationPairing>& translation_catalog() {
  using C = ConditionId;
  constexpr TransformKind D = TransformKind::D;
  constexpr TransformKind Cc = TransformKind::C;
  constexpr TransformKind DC = TransformKind::DC;
  static const std::vector<TranslationPairing> table = {
      // duals
      {C::ADDI_a, D, C::MULT_b},     {C::ADDI_b, D, C::MULT_a},
      {C::EXPN, D, C::CNTR},         {C::NORM, D, C::DNRM},
      {C::IDEM_a, D, C::IDEM_b},     {C::iADDI_a, D, C::iMULT_b},
      {C::iADDI_b, D, C::iMULT_a},   {C::nADDI_a, D, C::nMULT_b},
      {C::nADDI_b, D, C::nMULT_a},   {C::inADDI_a, D, C::inMULT_b},
      {C::inADDI_b, D, C::inMULT_a}, {C::nEXPN, D, C::nCNTR},
      {C::nNORM, D, C::nDNRM},       {C::nIDEM_a, D, C::nIDEM_b},
      {C::ADDIr_a, D, C::MULTr_b},   {C::ADDIr_b, D, C::MULTr_a},
      {C::iADDIr_a, D, C::iMULTr_b}, {C::iADDIr_b, D, C::iMULTr_a},
      {C::IDEMr_a, D, C::IDEMr_b},   {C::nADDIr_a, D, C::nMULTr_b},
      {C::nADDIr_b, D, C::nMULTr_a}, {C::inADDIr_a, D, C::inMULTr_b},
      {C::inADDIr_b, D, C::inMULTr_a}, {C::nIDEMr_a, D, C::nIDEMr_b},
      {C::MONO, D, C::MONO},         {C::ANTI, D, C::ANTI},
      {C::MONOw1, D, C::MONOw2},     {C::ANTIw1, D, C::ANTIw2},
      // complements
      {C::ADDI_a, Cc, C::nADDI_a},   {C::ADDI_b, Cc, C::nADDI_b},
      {C::iADDI_a, Cc, C::inADDI_a}, {C::iADDI_b, Cc, C::inADDI_b},
      {C::EXPN, Cc, C::nEXPN},       {C::NORM, Cc, C::nNORM},
      {C::IDEM_a, Cc, C::nIDEM_a},   {C::MONO, Cc, C::ANTI},
      {C::ADDIr_a, Cc, C::nADDIr_a}, {C::ADDIr_b, Cc, C::nADDIr_b},
      {C::iADDIr_a, Cc, C::inADDIr_a}, {C::iADDIr_b, Cc, C::inADDIr_b},
      {C::MULTr_a, Cc, C::nMULTr_a}, {C::MULTr_b, Cc, C::nMULTr_b},
      {C::iMULTr_a, Cc, C::inMULTr_a}, {C::iMULTr_b, Cc, C::inMULTr_b},
      {C::IDEMr_a, Cc, C::nIDEMr_a}, {C::IDEMr_b, Cc, C::nIDEMr_b},
      {C::MONOw1, Cc, C::ANTIw1},    {C::MONOw2, Cc, C::ANTIw2},
      // dual-complements
      {C::ADDI_a, DC, C::nMULT_b},   {C::ADDI_b, DC, C::nMULT_a},
      {C::iADDI_a, DC, C::inMULT_b}, {C::iADDI_b, DC, C::inMULT_a},
      {C::EXPN, DC, C::nCNTR},       {C::NORM, DC, C::nDNRM},
      {C::IDEM_a, DC, C::nIDEM_b},   {C::MONO, DC, C::ANTI},
      {C::ADDIr_a, DC, C::nMULTr_b}, {C::ADDIr_b, DC, C::nMULTr_a},
      {C::iADDIr_a, DC, C::inMULTr_b}, {C::iADDIr_b, DC, C::inMULTr_a},
      {C::IDEMr_a, DC, C::nIDEMr_b},
  };
  return table;
}

const std::vector<FpTriple>& fp_triple_catalog() {
  using C = ConditionId;
  static const std::vector<FpTriple> table = {
      {C::EXPN, C::EXPN, C::nEXPN},
      {C::CNTR, C::nCNTR, C::CNTR},
      {C::NORM, C::nNORM, C::NORM},
      {C::DNRM, C::DNRM, C::nDNRM},
      {C::ADDIr_a, C::nADDIr_a, C::ADDIr_a},
      {C::ADDIr_b, C::nADDIr_b, C::ADDIr_b},
      {C::iADDIr_a, C::inADDIr_a, C::iADDIr_a},
      {C::iADDIr_b, C::inADDIr_b, C::iADDIr_b},
      {C::MULTr_a, C::MULTr_a, C::nMULTr_a},
      {C::MULTr_b, C::MULTr_b, C::nMULTr_b},
      {C::iMULTr_a, C::iMULTr_a, C::inMULTr_a},
      {C::iMULTr_b, C::iMULTr_b, C::inMULTr_b},
      {C::IDEMr_a, C::nIDEMr_a, C::IDEMr_a},
      {C::IDEMr_b, C::IDEMr_b, C::nIDEMr_b},
  };
  return table;
}

bool check_fp_triple(ConditionId base, const Op& f) {
  for (const auto& t : fp_triple_catalog()) {
    if (t.base != base) continue;
    bool on_f = holds(t.base, f);
    bool on_fp = holds(t.under_fp, transform(f, TransformKind::FP));
    bool on_fpc = holds(t.under_fpc, transform(f, TransformKind::FPC));
    return on_f == on_fp && on_fp == on_fpc;
  }
  throw std::invalid_argument(std::string("no fp-triple for condition ") +
                              condition_name(base));
}

std::vector<BridgeBullet> check_relativization_bridge(const Op& f) {
  using C = ConditionId;
  struct Row {
    const char* description;
    std::vector<C> guard_any;          // applicable when any of these holds
    std::vector<C> equivalent;         // must all agree on f when applicable
  };
  static const std::vector<Row> rows = {
      {"EXPN or nEXPN: ADDI_a <-> ADDIr_a",
       {C::EXPN, C::nEXPN}, {C::ADDI_a, C::ADDIr_a}},
      {"EXPN: ADDI_b <-> ADDIr_b <-> MONOw1",
       {C::EXPN}, {C::ADDI_b, C::ADDIr_b, C::MONOw1}},
      {"CNTR: MULT_a <-> MULTr_a <-> MONOw2",
       {C::CNTR}, {C::MULT_a, C::MULTr_a, C::MONOw2}},
      {"CNTR or nCNTR: MULT_b <-> MULTr_b",
       {C::CNTR, C::nCNTR}, {C::MULT_b, C::MULTr_b}},
      {"EXPN or nEXPN: nADDI_a <-> nADDIr_a",
       {C::EXPN, C::nEXPN}, {C::nADDI_a, C::nADDIr_a}},
      {"nEXPN: nADDI_b <-> nADDIr_b <-> ANTIw1",
       {C::nEXPN}, {C::nADDI_b, C::nADDIr_b, C::ANTIw1}},
      {"nCNTR: nMULT_a <-> nMULTr_a <-> ANTIw2",
       {C::nCNTR}, {C::nMULT_a, C::nMULTr_a, C::ANTIw2}},
      {"CNTR or nCNTR: nMULT_b <-> nMULTr_b",
       {C::CNTR, C::nCNTR}, {C::nMULT_b, C::nMULTr_b}},
  };

  std::vector<BridgeBullet> out;
  for (const auto& row : rows) {
    BridgeBullet bullet{row.description, false, true};
    for (C g : row.guard_any)
      if (holds(g, f)) bullet.applicable = true;
    if (bullet.applicable) {
      bool first = holds(row.equivalent[0], f);
      for (size_t i = 1; i < row.equivalent.size(); ++i)
        if (holds(row.equivalent[i], f) != first) bullet.holds = false;
    }
    out.push_back(std::move(bullet));
  }
  return out;
}

bool iaddi_via_singletons(const Op& f) {
  const uint32_t count = f.size();
  for (uint32_t x = 0; x < count; ++x) {
    uint32_t expected = 0;
    for (uint32_t rest = x; rest;) {
      uint32_t low = rest & (~rest + 1u);
      expected |= f.apply(low);
      rest ^= low;
    }
    if (f.apply(x) != expected) return false;
  }
  return true;
}

}  // namespace tba
