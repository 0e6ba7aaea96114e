#include <doctest.h>

#include <vector>

#include "theta/theta.hpp"

using namespace globcat::theta;

TEST_CASE("monotone maps compose pointwise") {
  DeltaMap s0(2, 1, {0, 0, 1});
  DeltaMap d1(1, 2, {0, 2});
  auto g = delta_compose(s0, d1);
  CHECK(g.dom == 1);
  CHECK(g.cod == 1);
  CHECK(g.table == std::vector<int>{0, 1});
  CHECK(delta_compose(DeltaMap::identity(1), s0) == s0);
  CHECK(delta_compose(s0, DeltaMap::identity(2)) == s0);
  CHECK(DeltaMap::constant(3, 2, 1).is_constant());
  CHECK_FALSE(s0.is_constant());
  CHECK_THROWS(DeltaMap(1, 1, {1, 0}));       // not monotone
  CHECK_THROWS(delta_compose(d1, d1));        // cod/dom mismatch
}

TEST_CASE("hom sets of ordinals have binomial sizes") {
  CHECK(delta_hom(1, 1).size() == 3);
  CHECK(delta_hom(2, 1).size() == 4);
  CHECK(delta_hom(1, 2).size() == 6);
  CHECK(delta_hom(0, 3).size() == 4);
  CHECK(delta_hom(1, 1).front().table == std::vector<int>{0, 0});
}

TEST_CASE("objects are canonicalized after a zero coordinate") {
  CHECK(theta_object_is_canonical({2, 1}));
  CHECK(theta_object_is_canonical({2, 0}));
  CHECK_FALSE(theta_object_is_canonical({0, 2}));
  CHECK_FALSE(theta_object_is_canonical({2, 0, 3}));
  CHECK(theta_object({0, 2}).coords == std::vector<int>{0, 0});
  CHECK(theta_object({2, 0, 3}).coords == std::vector<int>{2, 0, 0});
  CHECK(theta_objects(1, 4).size() == 5);
  // Pairs (j, k) with 1 <= j <= 2, 0 <= k <= 2, plus the collapsed (0, 0).
  CHECK(theta_objects(2, 2).size() == 7);
  CHECK(theta_objects(2, 3).size() == 13);
}

TEST_CASE("morphisms collapse components after a constant axis") {
  ThetaObject one1 = theta_object({1, 1});
  auto maps = theta_hom(one1, one1);
  CHECK(maps.size() == 5);
  for (const auto& f : maps) {
    CHECK(theta_compose(theta_identity(one1), f) == f);
    CHECK(theta_compose(f, theta_identity(one1)) == f);
    for (const auto& g : maps) {
      auto gf = theta_compose(g, f);
      for (const auto& h : maps) {
        CHECK(theta_compose(h, gf) ==
              theta_compose(theta_compose(h, g), f));
      }
    }
  }
  // A constant first component forces the second to the zero constant.
  auto m = theta_morphism(one1, one1,
                          {DeltaMap::constant(1, 1, 1),
                           DeltaMap(1, 1, {0, 1})});
  CHECK(m.comps[1] == DeltaMap::constant(1, 1, 0));
}

TEST_CASE("one-axis hom agrees with the ordinal hom") {
  ThetaObject a = theta_object({1});
  CHECK(theta_hom(a, a).size() == 3);
  CHECK(theta_hom(theta_object({2}), a).size() == 4);
}

TEST_CASE("named generators tabulate correctly") {
  auto face = theta_generator(GenKind::Face, 1, 2, 0, {2, 0});
  CHECK(face.dom.coords == std::vector<int>{2, 1});
  CHECK(face.cod.coords == std::vector<int>{2, 2});
  CHECK(face.comps[0] == DeltaMap::identity(2));
  CHECK(face.comps[1].table == std::vector<int>{1, 2});

  auto degen = theta_generator(GenKind::Degeneracy, 0, 1, 1, {0, 3});
  CHECK(degen.dom.coords == std::vector<int>{2, 3});
  CHECK(degen.cod.coords == std::vector<int>{1, 3});
  CHECK(degen.comps[0].table == std::vector<int>{0, 1, 1});

  auto seg = theta_generator(GenKind::Iota, 0, 3, 1, {0, 2});
  CHECK(seg.dom.coords == std::vector<int>{1, 2});
  CHECK(seg.cod.coords == std::vector<int>{3, 2});
  CHECK(seg.comps[0].table == std::vector<int>{1, 2});

  auto s = theta_generator(GenKind::Sigma, 0, 0, 0, {0});
  CHECK(s.comps[0].table == std::vector<int>{0});
  auto t = theta_generator(GenKind::Tau, 0, 0, 0, {0});
  CHECK(t.comps[0].table == std::vector<int>{1});
}

TEST_CASE("raw per-axis data canonicalizes on entry") {
  auto f = theta_from_delta({0, 2}, {1, 1},
                            {DeltaMap::constant(0, 1, 0),
                             DeltaMap(2, 1, {0, 0, 1})});
  CHECK(f.dom.coords == std::vector<int>{0, 0});
  CHECK(f.cod.coords == std::vector<int>{1, 1});
  CHECK(f.comps[1] == DeltaMap::constant(0, 1, 0));
}
