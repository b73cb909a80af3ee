#include "doctest.h"

#include <vector>

#include "tba/operators.hpp"
#include "tba/scan.hpp"

using namespace tba;

TEST_CASE("parallel kernels match the serial reference") {
  auto pred = [](uint64_t i) { return i % 7 == 3; };
  for (uint64_t count : {0ull, 1ull, 5ull, 1000ull, 65536ull}) {
    CHECK(scan::find_first(count, pred) ==
          scan::serial::find_first(count, pred));
    CHECK(scan::all_of(count, pred) == scan::serial::all_of(count, pred));
    CHECK(scan::count_if(count, pred) == scan::serial::count_if(count, pred));
  }
}

TEST_CASE("find_first returns the minimal hit even with many hits") {
  // hits everywhere past 100: the minimum must win under any scheduling
  auto pred = [](uint64_t i) { return i >= 101; };
  for (int rep = 0; rep < 20; ++rep)
    CHECK(scan::find_first(1u << 16, pred) == 101);

  auto none = [](uint64_t) { return false; };
  CHECK(scan::find_first(1u << 12, none) == scan::npos);
  CHECK(scan::all_of(1u << 12, [](uint64_t) { return true; }));
  CHECK_FALSE(scan::all_of(1u << 12, [](uint64_t i) { return i != 4095; }));
}

TEST_CASE("kernels agree on a real workload") {
  PointDomain d(2);
  uint64_t count = operator_space_size(d);
  auto is_monotone = [&](uint64_t code) {
    return holds(ConditionId::MONO, decode_operator(d, code));
  };
  CHECK(scan::count_if(count, is_monotone) ==
        scan::serial::count_if(count, is_monotone));
  auto not_monotone = [&](uint64_t code) { return !is_monotone(code); };
  CHECK(scan::find_first(count, not_monotone) ==
        scan::serial::find_first(count, not_monotone));
}
