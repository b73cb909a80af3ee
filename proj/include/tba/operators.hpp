#ifndef TBA_OPERATORS_HPP_
#define TBA_OPERATORS_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "tba/core.hpp"

// Unary operations on algebra elements, stored as dense lookup tables so that
// equality, hashing and enumeration are canonical. Entry i of the table is
// the output for the input whose bitmask is i.

namespace tba {

class Op {
 public:
  explicit Op(PointDomain d) : n_(d.n), table_(d.element_count(), 0) {}
  Op(PointDomain d, std::vector<uint32_t> table);

  static Op identity(PointDomain d);
  static Op complement(PointDomain d);  // the 0-ary connective n
  static Op constant(PointDomain d, uint32_t value_mask);

  PointDomain domain() const { return PointDomain(n_); }
  int points() const { return n_; }
  uint32_t size() const { return static_cast<uint32_t>(table_.size()); }
  const std::vector<uint32_t>& table() const { return table_; }

  uint32_t apply(uint32_t input_mask) const { return table_[input_mask]; }
  Element operator()(const Element& x) const {
    if (x.points() != n_)
      throw std::invalid_argument("operator applied across domains");
    return Element(table_[x.bits()], domain());
  }
  void set(uint32_t input_mask, uint32_t output_mask);

  bool operator==(const Op&) const = default;
  bool operator<(const Op& o) const {
    return n_ != o.n_ ? n_ < o.n_ : table_ < o.table_;
  }

 private:
  int n_;
  std::vector<uint32_t> table_;
};

// Pointwise Boolean structure on operators.
Op op_meet(const Op& f, const Op& g);
Op op_join(const Op& f, const Op& g);
Op op_impl(const Op& f, const Op& g);  // (f impl g)(X) = f(X) -> g(X)
Op op_compl(const Op& f);
Op op_top(PointDomain d);
Op op_bot(PointDomain d);

// The five involutive transformations.
enum class TransformKind { C, D, DC, FP, FPC };

Op transform(const Op& f, TransformKind k);

Op compose(const Op& f, const Op& g);  // compose(f,g)(X) = f(g(X))
Op power(const Op& f, int k);          // k >= 1

Family fixed_points(const Op& f);

Family image(const Op& f, const Family& s);
Family range(const Op& f);

// The eight cube vertices generated by f, in a fixed order.
enum CubeVertex {
  kVertexSelf,   // f
  kVertexC,      // f^c
  kVertexD,      // f^d
  kVertexDC,     // f^dc
  kVertexFP,     // f^fp
  kVertexFPC,    // f^fpc
  kVertexDFP,    // (f^d)^fp
  kVertexDFPC,   // (f^d)^fpc
};

std::array<Op, 8> cube_vertices(const Op& f);
const char* cube_vertex_name(int v);

// Verifies that every transformation edge between the eight vertices lands
// on the expected vertex (the diagram commutes).
bool cube_check(const Op& f);

// Exhaustive enumeration of all (2^n)^(2^n) operator tables, in ascending
// order of the table read as a base-2^n integer (entry 0 least significant).
// Refused for n >= 3.
uint64_t operator_space_size(PointDomain d);
Op decode_operator(PointDomain d, uint64_t code);
uint64_t encode_operator(const Op& f);
void enumerate_operators(PointDomain d, const std::function<void(const Op&)>& fn);

// Seeded uniform sampling over tables, any n <= kMaxPoints.
Op sample_operator(PointDomain d, uint64_t seed);

}  // namespace tba

#endif  // TBA_OPERATORS_HPP_
