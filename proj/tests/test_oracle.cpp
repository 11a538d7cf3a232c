#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "politrigon/oracle_union.hpp"
#include "test_util.hpp"

using namespace politrigon;
using testutil::pt;
using testutil::tri;

namespace {

void check_agreement(const Scene& s) {
  UnionResult a = union_boundary(s);
  UnionResult b = oracle_union(s);
  REQUIRE(a.simple() == b.simple());
  if (a.simple()) {
    const AnnotatedPolygon& pa = *a.polygon;
    const AnnotatedPolygon& pb = *b.polygon;
    REQUIRE(pa.vertices == pb.vertices);
    REQUIRE(pa.side_count() == pb.side_count());
    for (int k = 0; k < pa.side_count(); ++k) {
      CHECK(pa.sides[k].owner == pb.sides[k].owner);
      CHECK(pa.sides[k].edge_index == pb.sides[k].edge_index);
      CHECK(pa.sides[k].length_sq == pb.sides[k].length_sq);
    }
    CHECK(area(pa) == area(pb));
  } else {
    CHECK(a.rejection->reason == b.rejection->reason);
    CHECK(a.rejection->witness == b.rejection->witness);
  }
}

}  // namespace

TEST_CASE("the two union routes agree on hand-built scenes") {
  check_agreement(Scene{{tri(pt(0, 0), pt(4, 0), pt(1, 3))}});
  check_agreement(testutil::hexagram_scene());
  check_agreement(Scene{{tri(pt(0, 0), pt(6, 0), pt(3, 4)), tri(pt(2, 0), pt(4, 0), pt(3, -3))}});
  check_agreement(Scene{{tri(pt(0, 0), pt(1, 0), pt(0, 1)), tri(pt(5, 0), pt(6, 0), pt(5, 1))}});
  check_agreement(Scene{{tri(pt(0, 0), pt(2, 0), pt(1, 2)), tri(pt(1, 2), pt(3, 4), pt(-1, 4))}});
  check_agreement(Scene{{tri(pt(-8, -3), pt(8, -3), pt(8, -1)),
                         tri(pt(8, -3), pt(8, 6), pt(6, 6)),
                         tri(pt(8, 6), pt(-8, 6), pt(-8, 4)),
                         tri(pt(-8, 6), pt(-8, -3), pt(-6, -3))}});
}

TEST_CASE("the two union routes agree on random pairs") {
  std::mt19937_64 rng(101);
  for (int it = 0; it < 400; ++it) check_agreement(testutil::random_scene(rng, 2));
}

TEST_CASE("the two union routes agree on random triples") {
  std::mt19937_64 rng(103);
  for (int it = 0; it < 200; ++it) check_agreement(testutil::random_scene(rng, 3));
}

TEST_CASE("the two union routes agree on random quadruples on a finer grid") {
  std::mt19937_64 rng(107);
  for (int it = 0; it < 60; ++it) check_agreement(testutil::random_scene(rng, 4, 5, 8));
}
