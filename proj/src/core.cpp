#include "tba/core.hpp"

#include <algorithm>
#include <bit>

namespace tba {

std::string Element::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int j = 0; j < n_; ++j) {
    if (!contains(j)) continue;
    if (!first) out += ",";
    out += std::to_string(j);
    first = false;
  }
  out += "}";
  return out;
}

Element meet(const Element& a, const Element& b) {
  detail::require_same_domain(a, b);
  return Element(a.bits() & b.bits(), a.domain());
}

Element join(const Element& a, const Element& b) {
  detail::require_same_domain(a, b);
  return Element(a.bits() | b.bits(), a.domain());
}

Element complement(const Element& a) {
  return Element(~a.bits() & a.domain().full_mask(), a.domain());
}

Element impl(const Element& a, const Element& b) {
  detail::require_same_domain(a, b);
  return join(complement(a), b);
}

Element diff(const Element& a, const Element& b) {
  detail::require_same_domain(a, b);
  return Element(a.bits() & ~b.bits(), a.domain());
}

Element symdiff(const Element& a, const Element& b) {
  detail::require_same_domain(a, b);
  return Element(a.bits() ^ b.bits(), a.domain());
}

Element iff(const Element& a, const Element& b) {
  detail::require_same_domain(a, b);
  return Element(~(a.bits() ^ b.bits()) & a.domain().full_mask(), a.domain());
}

bool leq(const Element& a, const Element& b) {
  detail::require_same_domain(a, b);
  return (a.bits() & ~b.bits()) == 0;
}

bool eq(const Element& a, const Element& b) {
  detail::require_same_domain(a, b);
  return a.bits() == b.bits();
}

bool eq_rel(const Element& a, const Element& b, const Element& u, Side side) {
  detail::require_same_domain(a, b);
  detail::require_same_domain(a, u);
  uint32_t scope = (side == Side::Inside)
                       ? u.bits()
                       : (~u.bits() & u.domain().full_mask());
  return ((a.bits() ^ b.bits()) & scope) == 0;
}

bool leq_rel(const Element& a, const Element& b, const Element& u, Side side) {
  detail::require_same_domain(a, b);
  detail::require_same_domain(a, u);
  uint32_t scope = (side == Side::Inside)
                       ? u.bits()
                       : (~u.bits() & u.domain().full_mask());
  return (a.bits() & ~b.bits() & scope) == 0;
}

Family::Family(std::vector<Element> members, PointDomain d) : n_(d.n) {
  for (const auto& m : members)
    if (m.points() != n_)
      throw std::invalid_argument("family member over a different domain");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
}

Family Family::powerset(PointDomain d) {
  std::vector<Element> all;
  all.reserve(d.element_count());
  for (uint32_t m = 0; m < d.element_count(); ++m) all.emplace_back(m, d);
  return Family(std::move(all), d);
}

bool Family::contains(const Element& x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

void Family::insert(const Element& x) {
  if (x.points() != n_)
    throw std::invalid_argument("family member over a different domain");
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || !(*it == x)) members_.insert(it, x);
}

Element big_meet(const Family& s) {
  uint32_t acc = s.domain().full_mask();
  for (const auto& m : s.members()) acc &= m.bits();
  return Element(acc, s.domain());
}

Element big_join(const Family& s) {
  uint32_t acc = 0;
  for (const auto& m : s.members()) acc |= m.bits();
  return Element(acc, s.domain());
}

bool meet_closed(const Family& s) {
  for (const auto& x : s.members())
    for (const auto& y : s.members())
      if (!s.contains(meet(x, y))) return false;
  return true;
}

bool join_closed(const Family& s) {
  for (const auto& x : s.members())
    for (const auto& y : s.members())
      if (!s.contains(join(x, y))) return false;
  return true;
}

namespace {

// Walks every subfamily D of s (by index mask) and applies fn to the fold of
// D's members. Family sizes stay tiny here (<= 2^n elements).
template <typename Check>
bool all_subfamilies(const Family& s, bool nonempty_only, Check check) {
  const auto& ms = s.members();
  if (ms.size() > 20)
    throw std::invalid_argument("family too large for subfamily enumeration");
  uint32_t limit = 1u << ms.size();
  for (uint32_t d = nonempty_only ? 1 : 0; d < limit; ++d) {
    if (!check(d)) return false;
  }
  return true;
}

}  // namespace

bool infimum_closed(const Family& s) {
  const auto& ms = s.members();
  return all_subfamilies(s, false, [&](uint32_t d) {
    uint32_t acc = s.domain().full_mask();
    for (size_t i = 0; i < ms.size(); ++i)
      if ((d >> i) & 1u) acc &= ms[i].bits();
    return s.contains(Element(acc, s.domain()));
  });
}

bool supremum_closed(const Family& s) {
  const auto& ms = s.members();
  return all_subfamilies(s, false, [&](uint32_t d) {
    uint32_t acc = 0;
    for (size_t i = 0; i < ms.size(); ++i)
      if ((d >> i) & 1u) acc |= ms[i].bits();
    return s.contains(Element(acc, s.domain()));
  });
}

bool infimum_closed_nonempty(const Family& s) {
  const auto& ms = s.members();
  return all_subfamilies(s, true, [&](uint32_t d) {
    uint32_t acc = s.domain().full_mask();
    for (size_t i = 0; i < ms.size(); ++i)
      if ((d >> i) & 1u) acc &= ms[i].bits();
    return s.contains(Element(acc, s.domain()));
  });
}

bool supremum_closed_nonempty(const Family& s) {
  const auto& ms = s.members();
  return all_subfamilies(s, true, [&](uint32_t d) {
    uint32_t acc = 0;
    for (size_t i = 0; i < ms.size(); ++i)
      if ((d >> i) & 1u) acc |= ms[i].bits();
    return s.contains(Element(acc, s.domain()));
  });
}

std::optional<Element> least_atom(const Element& p) {
  if (p.bits() == 0) return std::nullopt;
  uint32_t low = p.bits() & (~p.bits() + 1u);
  return Element(low, p.domain());
}

bool is_atom(const Element& a) {
  if (a.bits() == 0) return false;
  PointDomain d = a.domain();
  for (uint32_t m = 0; m < d.element_count(); ++m) {
    Element p(m, d);
    if (!leq(a, p) && !leq(a, complement(p))) return false;
  }
  return true;
}

}  // namespace tba
