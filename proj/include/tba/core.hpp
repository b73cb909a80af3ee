#ifndef TBA_CORE_HPP_
#define TBA_CORE_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Boolean algebra of sets over a finite point domain. Elements are bit
// vectors: point j is a member iff bit j is set (little-endian). All values
// are immutable and all operations pure.

namespace tba {

inline constexpr int kMaxPoints = 16;

struct PointDomain {
  int n;

  explicit PointDomain(int points) : n(points) {
    if (n < 1 || n > kMaxPoints)
      throw std::invalid_argument("point count must be in [1," +
                                  std::to_string(kMaxPoints) + "], got " +
                                  std::to_string(n));
  }
  uint32_t full_mask() const { return (n == 32) ? ~0u : ((1u << n) - 1u); }
  uint32_t element_count() const { return 1u << n; }
  bool operator==(const PointDomain&) const = default;
};

class Element {
 public:
  Element(uint32_t bits, PointDomain d) : bits_(bits), n_(d.n) {
    if (bits & ~d.full_mask())
      throw std::invalid_argument("element has bits beyond the point domain");
  }

  static Element bottom(PointDomain d) { return Element(0, d); }
  static Element top(PointDomain d) { return Element(d.full_mask(), d); }
  static Element singleton(int point, PointDomain d) {
    if (point < 0 || point >= d.n)
      throw std::invalid_argument("point index out of domain");
    return Element(1u << point, d);
  }

  uint32_t bits() const { return bits_; }
  int points() const { return n_; }
  PointDomain domain() const { return PointDomain(n_); }
  bool contains(int point) const { return (bits_ >> point) & 1u; }

  bool operator==(const Element&) const = default;
  // Canonical total order: by bitmask. Used for Family normalization.
  bool operator<(const Element& o) const { return bits_ < o.bits_; }

  std::string to_string() const;

 private:
  uint32_t bits_;
  int n_;
};

namespace detail {
inline void require_same_domain(const Element& a, const Element& b) {
  if (a.points() != b.points())
    throw std::invalid_argument("elements over different point domains");
}
}  // namespace detail

// Finitary Boolean operations (pointwise classical truth-functions).
Element meet(const Element& a, const Element& b);
Element join(const Element& a, const Element& b);
Element impl(const Element& a, const Element& b);
Element complement(const Element& a);
Element diff(const Element& a, const Element& b);     // a and not b
Element symdiff(const Element& a, const Element& b);  // exactly one
Element iff(const Element& a, const Element& b);      // both or neither

// Lattice order.
bool leq(const Element& a, const Element& b);
bool eq(const Element& a, const Element& b);

// Relativized (in)equalities: agreement restricted to the points inside u
// (subscript form) or outside u (superscript form).
enum class Side { Inside, Outside };
bool eq_rel(const Element& a, const Element& b, const Element& u, Side side);
bool leq_rel(const Element& a, const Element& b, const Element& u, Side side);

// A finite set of elements over one domain; canonical = sorted, no dups.
class Family {
 public:
  explicit Family(PointDomain d) : n_(d.n) {}
  Family(std::vector<Element> members, PointDomain d);

  static Family powerset(PointDomain d);

  PointDomain domain() const { return PointDomain(n_); }
  const std::vector<Element>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  size_t size() const { return members_.size(); }
  bool contains(const Element& x) const;
  void insert(const Element& x);

  bool operator==(const Family&) const = default;

 private:
  int n_;
  std::vector<Element> members_;  // sorted by mask, unique
};

// Infinitary lattice operations. Empty infimum is top, empty supremum bottom.
Element big_meet(const Family& s);
Element big_join(const Family& s);

// Closure predicates on families. infimum_closed quantifies over every
// subfamily including the empty one, so it forces top membership (dually
// supremum_closed forces bottom).
bool meet_closed(const Family& s);
bool join_closed(const Family& s);
bool infimum_closed(const Family& s);
bool supremum_closed(const Family& s);
bool infimum_closed_nonempty(const Family& s);
bool supremum_closed_nonempty(const Family& s);

// Atoms. least_atom returns the least-index singleton below p (none for
// bottom); is_atom follows the dichotomy definition, not popcount.
std::optional<Element> least_atom(const Element& p);
bool is_atom(const Element& a);

}  // namespace tba

#endif  // TBA_CORE_HPP_
