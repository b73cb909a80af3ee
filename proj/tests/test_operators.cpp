#include "doctest.h"

#include "tba/operators.hpp"

using namespace tba;

namespace {

const PointDomain d1(1);
const PointDomain d2(2);

Op indiscrete_closure(PointDomain d) {
  Op f(d);
  for (uint32_t i = 1; i < d.element_count(); ++i) f.set(i, d.full_mask());
  return f;
}

}  // namespace

TEST_CASE("lifted boolean structure") {
  Op n = Op::complement(d1);
  Op e = Op::identity(d1);
  CHECK(op_meet(n, e) == op_bot(d1));  // table [bot, bot]
  CHECK(op_meet(n, e).table() == std::vector<uint32_t>{0, 0});
  CHECK(op_join(n, e) == op_top(d1));

  for (uint64_t s = 0; s < 100; ++s) {
    Op f = sample_operator(d2, s);
    CHECK(op_impl(f, f) == op_top(d2));
    CHECK(compose(f, Op::identity(d2)) == f);
    CHECK(compose(Op::identity(d2), f) == f);
  }
  CHECK_THROWS_AS(op_meet(Op::identity(d1), Op::identity(d2)),
                  std::invalid_argument);
}

TEST_CASE("transformations") {
  CHECK(transform(Op::constant(d1, 0), TransformKind::D) ==
        Op::constant(d1, 1));
  CHECK(transform(Op::identity(d2), TransformKind::FP) == op_top(d2));
  CHECK(compose(Op::complement(d2), Op::complement(d2)) == Op::identity(d2));

  // the closure-complement composition for the indiscrete model
  Op c = indiscrete_closure(d2);
  CHECK(compose(c, Op::complement(d2)).table() ==
        std::vector<uint32_t>{3, 3, 3, 0});

  // every transformation is an involution, exhaustively at 2 points
  static const TransformKind kinds[] = {TransformKind::C, TransformKind::D,
                                        TransformKind::DC, TransformKind::FP,
                                        TransformKind::FPC};
  enumerate_operators(d2, [&](const Op& f) {
    for (auto k : kinds) CHECK(transform(transform(f, k), k) == f);
  });
}

TEST_CASE("minimal signature identities") {
  // the derived connectives agree with their composition definitions
  Op n2 = Op::complement(d2);
  Op e2 = Op::identity(d2);
  CHECK(op_bot(d2) == op_meet(n2, e2));
  CHECK(op_top(d2) == op_join(n2, e2));
  enumerate_operators(d2, [&](const Op& f) {
    CHECK(transform(f, TransformKind::C) == compose(n2, f));
    CHECK(transform(f, TransformKind::DC) == compose(f, n2));
    CHECK(transform(f, TransformKind::D) == compose(n2, compose(f, n2)));
    Op fc = transform(f, TransformKind::C);
    CHECK(transform(f, TransformKind::FP) ==
          op_join(op_meet(f, e2), op_meet(fc, n2)));
    CHECK(transform(f, TransformKind::FPC) ==
          op_meet(op_join(f, e2), op_join(fc, n2)));
    // fpc commutes through the complement on either side
    CHECK(transform(f, TransformKind::FPC) ==
          transform(transform(f, TransformKind::FP), TransformKind::C));
    CHECK(transform(f, TransformKind::FPC) ==
          transform(fc, TransformKind::FP));
  });
}

TEST_CASE("powers") {
  Op n = Op::complement(d2);
  CHECK(power(n, 1) == n);
  CHECK(power(n, 2) == Op::identity(d2));
  CHECK(power(n, 3) == n);
  CHECK_THROWS_AS(power(n, 0), std::invalid_argument);
}

TEST_CASE("fixed points") {
  CHECK(fixed_points(Op::identity(d2)) == Family::powerset(d2));
  Op c = indiscrete_closure(d2);
  CHECK(fixed_points(c) ==
        Family({Element::bottom(d2), Element::top(d2)}, d2));

  // membership in fp(f) is exactly the fp-transform being top
  enumerate_operators(d2, [](const Op& f) {
    Op fp = transform(f, TransformKind::FP);
    Family fps = fixed_points(f);
    for (uint32_t x = 0; x < f.size(); ++x)
      CHECK(fps.contains(Element(x, f.domain())) ==
            (fp.apply(x) == f.domain().full_mask()));
  });

  // fixed points of the dual are the complements of the fixed points
  enumerate_operators(d2, [](const Op& f) {
    Family fps = fixed_points(f);
    Family dual_fps = fixed_points(transform(f, TransformKind::D));
    for (uint32_t x = 0; x < f.size(); ++x)
      CHECK(dual_fps.contains(Element(x, f.domain())) ==
            fps.contains(complement(Element(x, f.domain()))));
  });
}

TEST_CASE("cube vertices and commutation") {
  auto v = cube_vertices(Op::identity(d1));
  CHECK(v[kVertexFP] == op_top(d1));
  CHECK(v[kVertexFPC] == op_bot(d1));

  enumerate_operators(d1, [](const Op& f) { CHECK(cube_check(f)); });
  CHECK(cube_check(indiscrete_closure(d2)));
}

TEST_CASE("enumeration") {
  CHECK(operator_space_size(d1) == 4);
  CHECK(operator_space_size(d2) == 256);
  CHECK_THROWS_AS(operator_space_size(PointDomain(3)), std::invalid_argument);

  uint64_t count = 0;
  Op prev = op_bot(d1);
  enumerate_operators(d1, [&](const Op& f) {
    CHECK(encode_operator(f) == count);
    if (count > 0) CHECK(prev < f);
    prev = f;
    ++count;
  });
  CHECK(count == 4);

  // decode/encode round-trip at 2 points
  for (uint64_t code = 0; code < 256; ++code)
    CHECK(encode_operator(decode_operator(d2, code)) == code);
}

TEST_CASE("sampling is deterministic") {
  PointDomain d3(3);
  CHECK(sample_operator(d3, 7) == sample_operator(d3, 7));
  CHECK(sample_operator(d3, 7) != sample_operator(d3, 8));
  CHECK(sample_operator(PointDomain(16), 1).size() == 65536u);
}

TEST_CASE("operator table validation") {
  CHECK_THROWS_AS(Op(d2, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Op(d2, {0, 1, 2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Op::identity(d2)(Element(0, d1)), std::invalid_argument);
}
