#include "tba/quantifiers.hpp"

#include <random>

#include "tba/topology.hpp"

namespace tba {

DomainSpec DomainSpec::constant(std::vector<int> members) {
  DomainSpec s;
  s.kind = Kind::Constant;
  s.constant_members = std::move(members);
  return s;
}

DomainSpec DomainSpec::varying(std::vector<Element> delta) {
  DomainSpec s;
  s.kind = Kind::Varying;
  s.delta = std::move(delta);
  return s;
}

namespace {

void check_spec(const std::vector<Element>& phi, const DomainSpec& spec) {
  if (spec.kind == DomainSpec::Kind::Varying &&
      spec.delta.size() != phi.size())
    throw std::invalid_argument("domain function must be total on the sort");
  if (spec.kind == DomainSpec::Kind::Constant)
    for (int m : spec.constant_members)
      if (m < 0 || static_cast<size_t>(m) >= phi.size())
        throw std::invalid_argument("constant domain member outside the sort");
}

}  // namespace

Element pi(const std::vector<Element>& phi, const DomainSpec& spec,
           PointDomain d) {
  check_spec(phi, spec);
  const uint32_t full = d.full_mask();
  uint32_t acc = full;
  switch (spec.kind) {
    case DomainSpec::Kind::Unrestricted:
      for (const auto& v : phi) acc &= v.bits();
      break;
    case DomainSpec::Kind::Constant:
      for (int m : spec.constant_members) acc &= phi[m].bits();
      break;
    case DomainSpec::Kind::Varying:
      for (size_t i = 0; i < phi.size(); ++i)
        acc &= (~spec.delta[i].bits() & full) | phi[i].bits();
      break;
  }
  return Element(acc, d);
}

Element sigma(const std::vector<Element>& phi, const DomainSpec& spec,
              PointDomain d) {
  check_spec(phi, spec);
  uint32_t acc = 0;
  switch (spec.kind) {
    case DomainSpec::Kind::Unrestricted:
      for (const auto& v : phi) acc |= v.bits();
      break;
    case DomainSpec::Kind::Constant:
      for (int m : spec.constant_members) acc |= phi[m].bits();
      break;
    case DomainSpec::Kind::Varying:
      for (size_t i = 0; i < phi.size(); ++i)
        acc |= spec.delta[i].bits() & phi[i].bits();
      break;
  }
  return Element(acc, d);
}

DomainSpec lift_up(const std::vector<int>& constant_members, size_t sort_size,
                   PointDomain d) {
  std::vector<Element> delta(sort_size, Element::bottom(d));
  for (int m : constant_members) {
    if (m < 0 || static_cast<size_t>(m) >= sort_size)
      throw std::invalid_argument("constant domain member outside the sort");
    delta[m] = Element::top(d);
  }
  return DomainSpec::varying(std::move(delta));
}

namespace {

// Decodes table index `code` into a sort_size-long table of element masks.
std::vector<Element> decode_table(uint64_t code, int sort_size,
                                  PointDomain d) {
  std::vector<Element> out;
  out.reserve(sort_size);
  for (int i = 0; i < sort_size; ++i) {
    out.emplace_back(static_cast<uint32_t>(code % d.element_count()), d);
    code /= d.element_count();
  }
  return out;
}

uint64_t table_space(int sort_size, PointDomain d) {
  uint64_t space = 1;
  for (int i = 0; i < sort_size; ++i) {
    if (space > (uint64_t{1} << 40)) return space;  // plenty; sampled anyway
    space *= d.element_count();
  }
  return space;
}

template <typename Fn>
void for_each_table(PointDomain d, int sort_size, uint64_t samples,
                    uint64_t seed, bool* exhaustive, Fn fn) {
  uint64_t space = table_space(sort_size, d);
  if (space <= 65536) {
    for (uint64_t code = 0; code < space; ++code)
      fn(decode_table(code, sort_size, d));
    return;
  }
  if (exhaustive) *exhaustive = false;
  std::mt19937_64 rng(seed);
  for (uint64_t s = 0; s < samples; ++s) {
    std::vector<Element> table;
    table.reserve(sort_size);
    for (int i = 0; i < sort_size; ++i)
      table.emplace_back(static_cast<uint32_t>(rng() % d.element_count()), d);
    fn(table);
  }
}

}  // namespace

QuantifierLawsReport quantifier_laws(PointDomain d, int max_individuals,
                                     uint64_t seed) {
  QuantifierLawsReport r;
  const auto unrestricted = DomainSpec::unrestricted();

  // Propositional sort: members are all elements; a table over it is an
  // operator. Laws quantifying over one table.
  const int prop_sort = static_cast<int>(d.element_count());
  for_each_table(d, prop_sort, 2000, seed, &r.exhaustive,
                 [&](const std::vector<Element>& phi) {
    std::vector<Element> phi_c;
    phi_c.reserve(phi.size());
    for (const auto& v : phi) phi_c.push_back(complement(v));

    Element pi_phi = pi(phi, unrestricted, d);
    Element sigma_phi = sigma(phi, unrestricted, d);
    if (!eq(pi_phi, complement(sigma(phi_c, unrestricted, d)))) r.duality = false;

    Family rng_family(d);
    for (const auto& v : phi) rng_family.insert(v);
    if (!eq(pi_phi, big_meet(rng_family)) ||
        !eq(sigma_phi, big_join(rng_family)))
      r.mostowski = false;

    // Every constant domain D over the sort, via its bitmask.
    if (prop_sort > 8) return;
    for (uint32_t dm = 0; dm < (1u << prop_sort); ++dm) {
      std::vector<int> members;
      for (int i = 0; i < prop_sort; ++i)
        if ((dm >> i) & 1u) members.push_back(i);
      auto constant = DomainSpec::constant(members);
      auto lifted = lift_up(members, phi.size(), d);
      if (!eq(pi(phi, constant, d), pi(phi, lifted, d)) ||
          !eq(sigma(phi, constant, d), sigma(phi, lifted, d)))
        r.lift_up_embedding = false;
    }
  });

  // Composition law and the varying-as-unrestricted embedding, with both
  // tables drawn from operators (sort member i = element with mask i).
  {
    PointDomain small = d;
    const bool can_enumerate = d.n <= 2;
    uint64_t ops = can_enumerate ? operator_space_size(small) : 0;
    std::mt19937_64 rng(seed + 1);
    uint64_t count = can_enumerate ? ops * ops : 512;
    if (!can_enumerate) r.exhaustive = false;
    for (uint64_t it = 0; it < count; ++it) {
      Op f = can_enumerate ? decode_operator(small, it / ops)
                           : sample_operator(small, rng());
      Op g = can_enumerate ? decode_operator(small, it % ops)
                           : sample_operator(small, rng());
      std::vector<Element> f_table, fg_table, g_table;
      for (uint32_t i = 0; i < f.size(); ++i) {
        f_table.emplace_back(f.apply(i), small);
        g_table.emplace_back(g.apply(i), small);
        fg_table.emplace_back(f.apply(g.apply(i)), small);
      }
      std::vector<int> range_members;
      Family g_range = range(g);
      for (const auto& e : g_range.members())
        range_members.push_back(static_cast<int>(e.bits()));
      if (!eq(pi(fg_table, DomainSpec::unrestricted(), small),
              pi(f_table, DomainSpec::constant(range_members), small)) ||
          !eq(sigma(fg_table, DomainSpec::unrestricted(), small),
              sigma(f_table, DomainSpec::constant(range_members), small)))
        r.composition_law = false;

      // pi{delta} phi = pi(delta impl phi); sigma{delta} phi = sigma(delta meet phi)
      std::vector<Element> impl_table, meet_table;
      for (uint32_t i = 0; i < f.size(); ++i) {
        impl_table.push_back(impl(g_table[i], f_table[i]));
        meet_table.push_back(meet(g_table[i], f_table[i]));
      }
      auto varying = DomainSpec::varying(g_table);
      if (!eq(pi(f_table, varying, small),
              pi(impl_table, DomainSpec::unrestricted(), small)) ||
          !eq(sigma(f_table, varying, small),
              sigma(meet_table, DomainSpec::unrestricted(), small)))
        r.varying_as_unrestricted = false;
    }
  }

  // Drinker's principle over individual sorts: for every predicate table,
  // (exists x. Drunk x -> forall y. Drunk y) is top.
  for (int m = 1; m <= max_individuals; ++m) {
    bool dummy = true;
    for_each_table(d, m, 2000, seed + 2 + m, &dummy,
                   [&](const std::vector<Element>& drunk) {
      Element all = pi(drunk, DomainSpec::unrestricted(), d);
      uint32_t acc = 0;
      for (const auto& v : drunk) acc |= impl(v, all).bits();
      if (acc != d.full_mask()) r.drinker = false;
    });
  }

  // forall A. exists B. A <-> -B over the unrestricted propositional sort.
  {
    uint32_t acc = d.full_mask();
    for (uint32_t a = 0; a < d.element_count(); ++a) {
      uint32_t inner = 0;
      for (uint32_t b = 0; b < d.element_count(); ++b)
        inner |= ~(a ^ (~b & d.full_mask())) & d.full_mask();
      acc &= inner;
    }
    if (acc != d.full_mask()) r.prop_complement_witness = false;
  }

  return r;
}

BarcanReport barcan_check(const Op& f, int sort_size, uint64_t samples,
                          uint64_t seed) {
  BarcanReport r;
  PointDomain d = f.domain();
  const bool mono = holds(ConditionId::MONO, f);
  const bool imult_b = holds(ConditionId::iMULT_b, f);
  const bool iaddi_a = holds(ConditionId::iADDI_a, f);
  const auto unrestricted = DomainSpec::unrestricted();

  for_each_table(d, sort_size, samples, seed, &r.exhaustive,
                 [&](const std::vector<Element>& psi) {
    std::vector<Element> f_psi;
    f_psi.reserve(psi.size());
    for (const auto& v : psi) f_psi.push_back(f(v));

    Element pi_psi = pi(psi, unrestricted, d);
    Element sigma_psi = sigma(psi, unrestricted, d);
    if (mono) {
      if (!leq(f(pi_psi), pi(f_psi, unrestricted, d))) r.cbf1 = false;
      if (!leq(sigma(f_psi, unrestricted, d), f(sigma_psi))) r.cbf2 = false;
    }
    if (imult_b && !leq(pi(f_psi, unrestricted, d), f(pi_psi))) r.bf1 = false;
    if (iaddi_a && !leq(f(sigma_psi), sigma(f_psi, unrestricted, d)))
      r.bf2 = false;

    // Constant-domain variants over every D.
    if (sort_size <= 16) {
      for (uint32_t dm = 0; dm < (1u << sort_size); ++dm) {
        std::vector<int> members;
        for (int i = 0; i < sort_size; ++i)
          if ((dm >> i) & 1u) members.push_back(i);
        auto constant = DomainSpec::constant(members);
        Element pi_d_psi = pi(psi, constant, d);
        if (mono && !leq(f(pi_d_psi), pi(f_psi, constant, d)))
          r.cbf1_cons = false;
        if (imult_b && !leq(pi(f_psi, constant, d), f(pi_d_psi)))
          r.bf1_cons = false;
      }
    }
  });
  return r;
}

std::optional<VaryingDomainCountermodel> find_bf1_var_countermodel(
    PointDomain d, int sort_size, uint64_t budget, bool converse) {
  // Candidate operators: interiors satisfying all infinitary interior
  // conditions, i.e. duals of the topology closures.
  std::vector<Op> interiors;
  for (const Op& c : enumerate_topologies(d))
    interiors.push_back(transform(c, TransformKind::D));

  uint64_t space = table_space(sort_size, d);
  uint64_t tried = 0;
  for (const Op& f : interiors) {
    for (uint64_t dc = 0; dc < space; ++dc) {
      std::vector<Element> delta = decode_table(dc, sort_size, d);
      auto varying = DomainSpec::varying(delta);
      for (uint64_t pc = 0; pc < space; ++pc) {
        if (++tried > budget) return std::nullopt;
        std::vector<Element> psi = decode_table(pc, sort_size, d);
        std::vector<Element> f_psi;
        f_psi.reserve(psi.size());
        for (const auto& v : psi) f_psi.push_back(f(v));
        Element lhs = converse ? f(pi(psi, varying, d))
                               : pi(f_psi, varying, d);
        Element rhs = converse ? pi(f_psi, varying, d)
                               : f(pi(psi, varying, d));
        if (!leq(lhs, rhs)) {
          VaryingDomainCountermodel out{f, std::move(delta), std::move(psi),
                                        lhs, rhs, converse};
          return out;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace tba
