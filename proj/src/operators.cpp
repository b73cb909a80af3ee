#include "tba/operators.hpp"

#include <random>

namespace tba {

Op::Op(PointDomain d, std::vector<uint32_t> table)
    : n_(d.n), table_(std::move(table)) {
  if (table_.size() != d.element_count())
    throw std::invalid_argument("operator table must have 2^n entries");
  for (uint32_t out : table_)
    if (out & ~d.full_mask())
      throw std::invalid_argument("operator table entry outside the domain");
}

Op Op::identity(PointDomain d) {
  Op f(d);
  for (uint32_t i = 0; i < d.element_count(); ++i) f.table_[i] = i;
  return f;
}

Op Op::complement(PointDomain d) {
  Op f(d);
  for (uint32_t i = 0; i < d.element_count(); ++i)
    f.table_[i] = ~i & d.full_mask();
  return f;
}

Op Op::constant(PointDomain d, uint32_t value_mask) {
  if (value_mask & ~d.full_mask())
    throw std::invalid_argument("constant outside the domain");
  Op f(d);
  for (uint32_t i = 0; i < d.element_count(); ++i) f.table_[i] = value_mask;
  return f;
}

void Op::set(uint32_t input_mask, uint32_t output_mask) {
  if (input_mask >= table_.size() || (output_mask & ~domain().full_mask()))
    throw std::invalid_argument("operator table entry outside the domain");
  table_[input_mask] = output_mask;
}

namespace {
void require_same_domain(const Op& f, const Op& g) {
  if (f.points() != g.points())
    throw std::invalid_argument("operators over different point domains");
}
}  // namespace

Op op_meet(const Op& f, const Op& g) {
  require_same_domain(f, g);
  Op h(f.domain());
  for (uint32_t i = 0; i < f.size(); ++i) h.set(i, f.apply(i) & g.apply(i));
  return h;
}

Op op_join(const Op& f, const Op& g) {
  require_same_domain(f, g);
  Op h(f.domain());
  for (uint32_t i = 0; i < f.size(); ++i) h.set(i, f.apply(i) | g.apply(i));
  return h;
}

Op op_impl(const Op& f, const Op& g) {
  require_same_domain(f, g);
  const uint32_t full = f.domain().full_mask();
  Op h(f.domain());
  for (uint32_t i = 0; i < f.size(); ++i)
    h.set(i, ((~f.apply(i)) & full) | g.apply(i));
  return h;
}

Op op_compl(const Op& f) {
  const uint32_t full = f.domain().full_mask();
  Op h(f.domain());
  for (uint32_t i = 0; i < f.size(); ++i) h.set(i, ~f.apply(i) & full);
  return h;
}

Op op_top(PointDomain d) { return Op::constant(d, d.full_mask()); }
Op op_bot(PointDomain d) { return Op::constant(d, 0); }

Op transform(const Op& f, TransformKind k) {
  const uint32_t full = f.domain().full_mask();
  Op h(f.domain());
  for (uint32_t i = 0; i < f.size(); ++i) {
    switch (k) {
      case TransformKind::C:
        h.set(i, ~f.apply(i) & full);
        break;
      case TransformKind::D:
        h.set(i, ~f.apply(~i & full) & full);
        break;
      case TransformKind::DC:
        h.set(i, f.apply(~i & full));
        break;
      case TransformKind::FP:
        h.set(i, ~(f.apply(i) ^ i) & full);
        break;
      case TransformKind::FPC:
        h.set(i, f.apply(i) ^ i);
        break;
    }
  }
  return h;
}

Op compose(const Op& f, const Op& g) {
  require_same_domain(f, g);
  Op h(f.domain());
  for (uint32_t i = 0; i < f.size(); ++i) h.set(i, f.apply(g.apply(i)));
  return h;
}

Op power(const Op& f, int k) {
  if (k < 1) throw std::invalid_argument("power requires k >= 1");
  Op acc = f;
  for (int i = 1; i < k; ++i) acc = compose(f, acc);
  return acc;
}

Family fixed_points(const Op& f) {
  Family out(f.domain());
  for (uint32_t i = 0; i < f.size(); ++i)
    if (f.apply(i) == i) out.insert(Element(i, f.domain()));
  return out;
}

Family image(const Op& f, const Family& s) {
  if (f.points() != s.domain().n)
    throw std::invalid_argument("operator applied across domains");
  Family out(f.domain());
  for (const auto& x : s.members())
    out.insert(Element(f.apply(x.bits()), f.domain()));
  return out;
}

Family range(const Op& f) { return image(f, Family::powerset(f.domain())); }

std::array<Op, 8> cube_vertices(const Op& f) {
  Op fd = transform(f, TransformKind::D);
  return {f,
          transform(f, TransformKind::C),
          fd,
          transform(f, TransformKind::DC),
          transform(f, TransformKind::FP),
          transform(f, TransformKind::FPC),
          transform(fd, TransformKind::FP),
          transform(fd, TransformKind::FPC)};
}

const char* cube_vertex_name(int v) {
  static const char* names[8] = {"f",    "f^c",    "f^d",      "f^dc",
                                 "f^fp", "f^fpc",  "(f^d)^fp", "(f^d)^fpc"};
  return names[v];
}

bool cube_check(const Op& f) {
  auto v = cube_vertices(f);
  // Expected target vertex when applying each transformation to each vertex.
  // Row = vertex index, column = TransformKind order {C, D, DC, FP, FPC}.
  static constexpr int edge[8][5] = {
      /* f         */ {kVertexC, kVertexD, kVertexDC, kVertexFP, kVertexFPC},
      /* f^c       */ {kVertexSelf, kVertexDC, kVertexD, kVertexFPC, kVertexFP},
      /* f^d       */ {kVertexDC, kVertexSelf, kVertexC, kVertexDFP, kVertexDFPC},
      /* f^dc      */ {kVertexD, kVertexC, kVertexSelf, kVertexDFPC, kVertexDFP},
      /* f^fp      */ {kVertexFPC, kVertexDFPC, kVertexDFP, kVertexSelf, kVertexC},
      /* f^fpc     */ {kVertexFP, kVertexDFP, kVertexDFPC, kVertexC, kVertexSelf},
      /* (f^d)^fp  */ {kVertexDFPC, kVertexFPC, kVertexFP, kVertexD, kVertexDC},
      /* (f^d)^fpc */ {kVertexDFP, kVertexFP, kVertexFPC, kVertexDC, kVertexD},
  };
  static constexpr TransformKind kinds[5] = {TransformKind::C, TransformKind::D,
                                             TransformKind::DC, TransformKind::FP,
                                             TransformKind::FPC};
  for (int src = 0; src < 8; ++src)
    for (int t = 0; t < 5; ++t)
      if (transform(v[src], kinds[t]) != v[edge[src][t]]) return false;
  return true;
}

uint64_t operator_space_size(PointDomain d) {
  if (d.n > 2)
    throw std::invalid_argument(
        "exhaustive operator enumeration capped at n <= 2; the space "
        "(2^n)^(2^n) is infeasible beyond that");
  // (2^n)^(2^n) = 2^(n * 2^n)
  return uint64_t{1} << (d.n * d.element_count());
}

Op decode_operator(PointDomain d, uint64_t code) {
  Op f(d);
  const uint32_t digit_mask = d.full_mask();
  for (uint32_t i = 0; i < d.element_count(); ++i)
    f.set(i, static_cast<uint32_t>(code >> (i * d.n)) & digit_mask);
  return f;
}

uint64_t encode_operator(const Op& f) {
  uint64_t code = 0;
  for (uint32_t i = 0; i < f.size(); ++i)
    code |= static_cast<uint64_t>(f.apply(i)) << (i * f.points());
  return code;
}

void enumerate_operators(PointDomain d,
                         const std::function<void(const Op&)>& fn) {
  const uint64_t count = operator_space_size(d);
  for (uint64_t code = 0; code < count; ++code) fn(decode_operator(d, code));
}

Op sample_operator(PointDomain d, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> dist(0, d.full_mask());
  Op f(d);
  for (uint32_t i = 0; i < d.element_count(); ++i) f.set(i, dist(rng));
  return f;
}

}  // namespace tba
