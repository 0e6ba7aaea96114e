#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bicat/bicat.hpp"
#include "bicat/examples.hpp"
#include "fixtures.hpp"

using namespace globcat::bicat;

namespace {

bool same_tables(const Bicategory& a, const Bicategory& b) {
  return a.objects == b.objects && a.ones == b.ones && a.twos == b.twos &&
         a.id1 == b.id1 && a.id2 == b.id2 && a.hcomp1 == b.hcomp1 &&
         a.vcomp2 == b.vcomp2 && a.hcomp2 == b.hcomp2 && a.assoc == b.assoc &&
         a.lunit == b.lunit && a.runit == b.runit;
}

}  // namespace

TEST_CASE("the example bicategories pass full validation") {
  CHECK(bicat_validate(two_object_strict()).empty());
  CHECK(bicat_validate(z2_cocycle_bicategory()).empty());
  for (const Bicategory& b :
       {fixtures::strict_point(), fixtures::strict_walking_arrow(),
        fixtures::strict_parallel_ones(), fixtures::strict_walking_two_cell(),
        fixtures::strict_z2_one_object(), fixtures::strict_z2_two_cells()}) {
    CHECK(bicat_validate(b).empty());
  }
}

TEST_CASE("the two-object strict example has the advertised cells") {
  Bicategory b = two_object_strict();
  CHECK(b.objects.size() == 2);
  CHECK(b.ones.size() == 4);
  CHECK(b.twos.size() == 5);
  CHECK(b.two("g").dom == "a");
  CHECK(b.two("g").cod == "b");
  CHECK_FALSE(two_invertible(b, "g"));
  CHECK(two_invertible(b, b.id2_of("a")));
}

TEST_CASE("the cocycle example encodes the nontrivial associator") {
  Bicategory b = z2_cocycle_bicategory();
  CHECK(b.objects.size() == 1);
  CHECK(b.ones.size() == 2);
  CHECK(b.twos.size() == 4);
  // omega(s, s, s) = 1 gives the unique non-identity associator cell.
  const std::string as = b.assoc_of("s", "s", "s");
  CHECK(as != b.id2_of(b.hc1("s", b.hc1("s", "s"))));
  CHECK(two_invertible(b, as));
  CHECK(two_inverse(b, as) == as);
  // Normalisation: any identity argument yields an identity associator.
  CHECK(b.assoc_of("e", "s", "s") == b.id2_of(b.hc1("s", "s")));
  CHECK(b.lunit_of("s") == b.id2_of("s"));
}

TEST_CASE("breaking one associator is caught by the pentagon") {
  Bicategory b = fixtures::strict_z2_two_cells();
  b.assoc[{"1x", "1x", "1x"}] = "u";
  auto violations = bicat_validate(b);
  REQUIRE_FALSE(violations.empty());
  bool pentagon = std::any_of(
      violations.begin(), violations.end(), [](const std::string& v) {
        return v.find("pentagon") != std::string::npos;
      });
  CHECK(pentagon);
}

TEST_CASE("strict completion reconstructs the constraint tables") {
  Bicategory b = fixtures::strict_walking_arrow();
  Bicategory stripped = b;
  stripped.assoc.clear();
  stripped.lunit.clear();
  stripped.runit.clear();
  complete_strict_constraints(stripped);
  CHECK(same_tables(stripped, b));
}

TEST_CASE("inverses in the vertical hom groups") {
  Bicategory b = fixtures::strict_z2_two_cells();
  CHECK(two_inverse(b, "u") == "u");
  CHECK(two_inverse(b, "i1x") == "i1x");
  Bicategory s = two_object_strict();
  CHECK_FALSE(two_inverse(s, "g").has_value());
}

TEST_CASE("bracketings enumerate by the catalan numbers") {
  CHECK(br_all(1).size() == 1);
  CHECK(br_all(2).size() == 1);
  CHECK(br_all(3).size() == 2);
  CHECK(br_all(4).size() == 5);
  Bicategory b = z2_cocycle_bicategory();
  std::vector<std::string> word = {"s", "s", "s"};
  for (const auto& br : br_all(3)) {
    CHECK(eval_bracketing(b, word, br) == "s");
  }
}

TEST_CASE("coherence isomorphisms compose consistently") {
  Bicategory b = z2_cocycle_bicategory();
  std::vector<std::string> w3 = {"s", "s", "s"};
  auto brs3 = br_all(3);
  // Between the two bracketings of a triple the canonical cell is the
  // associator itself.
  const auto left = br_pair(br_pair(br_leaf(0), br_leaf(1)), br_leaf(2));
  const auto right = br_pair(br_leaf(0), br_pair(br_leaf(1), br_leaf(2)));
  CHECK(coherence_iso(b, w3, left, right) == b.assoc_of("s", "s", "s"));
  CHECK(coherence_iso(b, w3, left, left) ==
        b.id2_of(eval_bracketing(b, w3, left)));
  // Confluence over all bracketings of a 4-letter word: the canonical
  // cells compose transitively, which is exactly the pentagon.
  std::vector<std::string> w4 = {"s", "s", "s", "s"};
  auto brs = br_all(4);
  for (const auto& b1 : brs) {
    for (const auto& b2 : brs) {
      for (const auto& b3 : brs) {
        auto step1 = coherence_iso(b, w4, b1, b2);
        auto step2 = coherence_iso(b, w4, b2, b3);
        CHECK(b.vc(step2, step1) == coherence_iso(b, w4, b1, b3));
      }
    }
  }
}

TEST_CASE("strict functors validate and compose tables") {
  Bicategory a = two_object_strict();
  StrictFunctor2 id;
  for (const auto& o : a.objects) id.obj[o] = o;
  for (const auto& f : a.ones) id.one[f.id] = f.id;
  for (const auto& t : a.twos) id.two[t.id] = t.id;
  CHECK(functor_validate(a, a, id).empty());

  // Collapse everything onto the point.
  Bicategory pt = fixtures::strict_point();
  StrictFunctor2 bang;
  for (const auto& o : a.objects) bang.obj[o] = "x";
  for (const auto& f : a.ones) bang.one[f.id] = "1x";
  for (const auto& t : a.twos) bang.two[t.id] = "i1x";
  CHECK(functor_validate(a, pt, bang).empty());

  StrictFunctor2 broken = id;
  broken.two["g"] = a.id2_of("a");  // boundaries no longer match
  CHECK_FALSE(functor_validate(a, a, broken).empty());
}

TEST_CASE("free strict 2-categories enumerate their normal forms") {
  globcat::core::GlobularSet x;
  x.n = 2;
  x.cells = {{"p", "q"}, {"f", "g", "h"}, {"al", "be"}};
  for (const auto& e : {"f", "g", "h"}) {
    x.src[e] = "p";
    x.tgt[e] = "q";
  }
  x.src["al"] = "f";
  x.tgt["al"] = "g";
  x.src["be"] = "g";
  x.tgt["be"] = "h";
  Bicategory b = free_strict_bicat(x, 6);
  CHECK(bicat_validate(b).empty());
  // 1-cells: two identities and the three generators.
  CHECK(b.ones.size() == 5);
  // 2-cells: five identities, the two generators, and their vertical stack.
  CHECK(b.twos.size() == 8);
  CHECK(b.vc("2#[[be]]", "2#[[al]]") == "2#[[al|be]]");

  // A 0-composable loop makes the free category infinite.
  globcat::core::GlobularSet loop;
  loop.n = 2;
  loop.cells = {{"p"}, {"f"}, {}};
  loop.src["f"] = "p";
  loop.tgt["f"] = "p";
  CHECK_THROWS_AS(free_strict_bicat(loop, 8), std::invalid_argument);
}

TEST_CASE("bicategory json round trips") {
  for (const Bicategory& b :
       {two_object_strict(), z2_cocycle_bicategory(),
        fixtures::strict_z2_one_object()}) {
    Bicategory c = bicat_from_json(bicat_to_json(b));
    CHECK(same_tables(b, c));
    CHECK(bicat_validate(c).empty());
  }
}
