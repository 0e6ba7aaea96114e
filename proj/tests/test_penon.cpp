#include <doctest.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bicat/examples.hpp"
#include "core/globular.hpp"
#include "core/labelled.hpp"
#include "fixtures.hpp"
#include "penon/interleave.hpp"
#include "penon/nervepa.hpp"
#include "penon/pcheck.hpp"
#include "penon/presentation.hpp"
#include "precat/presheaf.hpp"
#include "precat/segal.hpp"

using namespace globcat;
using namespace globcat::penon;

namespace {

core::GlobularSet two_stack() {
  core::GlobularSet x;
  x.n = 2;
  x.cells = {{"p", "q"}, {"f", "g"}, {"al"}};
  x.src = {{"f", "p"}, {"g", "p"}, {"al", "f"}};
  x.tgt = {{"f", "q"}, {"g", "q"}, {"al", "g"}};
  return x;
}

}  // namespace

TEST_CASE("grid presentations validate and count by their index formulas") {
  for (auto [j, k] : {std::pair<int, int>{2, 1}, {3, 1}, {2, 2}}) {
    CAPTURE(j);
    CAPTURE(k);
    auto p = cuboidal_presentation({j, k});
    CHECK(presentation_validate(p).empty());
    CHECK(p.gens.cells[0].size() == static_cast<std::size_t>(j + 1));
    CHECK(p.gens.cells[1].size() == static_cast<std::size_t>(j * (k + 1)));
    CHECK(p.gens.cells[2].size() == static_cast<std::size_t>(j * k));
    CHECK(p.cells.cells[1].size() ==
          static_cast<std::size_t>((j + 1) * j / 2 * (k + 1)));
    CHECK(p.cells.cells[2].size() ==
          static_cast<std::size_t>((j + 1) * j / 2 * k));
  }
}

TEST_CASE("grid cells are interpreted by the composites filling their spans") {
  auto p = cuboidal_presentation({2, 1});
  CHECK(core::tx_to_string(p.image.at("c1(0-2;1)")) ==
        "1#[c1(0-1;1)|c1(1-2;1)]");
  CHECK(core::tx_to_string(p.image.at("c2(0-2;1)")) ==
        "2#[[c2(0-1;1)]|[c2(1-2;1)]]");
  CHECK(p.image.at("c1(0-1;0)") == core::tx_generator(p.gens, "c1(0-1;0)"));
  CHECK(p.cells.src_of("c2(0-2;1)") == "c1(0-2;0)");
  CHECK(p.cells.tgt_of("c2(0-2;1)") == "c1(0-2;1)");
  CHECK(cuboidal_point(2) == "a2");
  CHECK(cuboidal_cell(1, {{0, 2}}, 1) == "c1(0-2;1)");
  CHECK_THROWS_AS(cuboidal_presentation({0, 2}), std::invalid_argument);
  CHECK_NOTHROW(cuboidal_presentation({2, 0}));
}

TEST_CASE("free presentations interpret every cell by itself") {
  auto x = two_stack();
  auto p = free_presentation(x);
  CHECK(presentation_validate(p).empty());
  CHECK(p.shape.empty());
  CHECK(p.cells.cells == x.cells);
  CHECK(p.image.at("al") == core::tx_generator(x, "al"));
  CHECK(p.image.at("p") == core::tx_generator(x, "p"));
}

TEST_CASE("interleaving the smallest grid matches the hand inventory") {
  auto q = interleave(cuboidal_presentation({2, 1}), 3);
  auto inv = q_inventory(q);
  CHECK(inv.generating0 == 3);
  CHECK(inv.generating1 == 6);
  CHECK(inv.contraction1 == 3);
  CHECK(inv.composite1 == 4);
  CHECK(inv.generating2 == 3);
  CHECK(inv.algebraic2 == 13);
  CHECK(inv.triangular2 == 4);
  CHECK(inv.derived2 == 0);
  CHECK(inv.top_cells > 0);
  CHECK(q_parallel_distinct(q).empty());
}

TEST_CASE("wider and taller grids keep the classified counts") {
  {
    auto q = interleave(cuboidal_presentation({3, 1}), 3);
    auto inv = q_inventory(q);
    CHECK(inv.generating0 == 4);
    CHECK(inv.generating1 == 12);
    CHECK(inv.contraction1 == 4);
    CHECK(inv.composite1 == 32);
    CHECK(inv.generating2 == 6);
    CHECK(inv.algebraic2 == 64);
    CHECK(inv.triangular2 == 16);
    CHECK(inv.derived2 == 44);
    CHECK(q_parallel_distinct(q).empty());
  }
  {
    auto q = interleave(cuboidal_presentation({2, 2}), 3);
    auto inv = q_inventory(q);
    CHECK(inv.generating0 == 3);
    CHECK(inv.generating1 == 9);
    CHECK(inv.contraction1 == 3);
    CHECK(inv.composite1 == 9);
    CHECK(inv.generating2 == 6);
    CHECK(inv.algebraic2 == 21);
    CHECK(inv.triangular2 == 6);
    CHECK(inv.derived2 == 0);
    CHECK(q_parallel_distinct(q).empty());
  }
}

TEST_CASE("triangular cells are mutually inverse after the quotient") {
  auto q = interleave(cuboidal_presentation({2, 1}), 3);
  int gen = q.find_gen("c1(0-2;0)");
  int u01 = q.find_gen("c1(0-1;0)");
  int u12 = q.find_gen("c1(1-2;0)");
  REQUIRE(gen >= 0);
  REQUIRE(u01 >= 0);
  REQUIRE(u12 >= 0);
  int cmp = q_compose(q, 0, u12, u01);
  int plus = q_ctr(q, gen, cmp);
  int minus = q_ctr(q, cmp, gen);
  CHECK(q.at(plus).cls == CtrClass::Triangular);
  CHECK(q.at(minus).cls == CtrClass::Triangular);
  CHECK_FALSE(q_equal(q, plus, minus));

  // Both round trips land on the identity contractions in the quotient.
  int back = q_compose(q, 1, minus, plus);
  int forth = q_compose(q, 1, plus, minus);
  CHECK(q_equal(q, back, q_ctr(q, gen, gen)));
  CHECK(q_equal(q, forth, q_ctr(q, cmp, cmp)));

  // The canonical-triple composition agrees with the materialized one.
  auto t = top_vcomp(q, top_of(q, minus), top_of(q, plus));
  REQUIRE(t.has_value());
  CHECK(t->key() == top_of(q, q_ctr(q, gen, gen)).key());
}

TEST_CASE("the interleaving rejects ill-typed requests") {
  auto q = interleave(cuboidal_presentation({2, 1}), 3);
  int u01 = q.find_gen("c1(0-1;0)");
  int u12 = q.find_gen("c1(1-2;0)");
  int other = q.find_gen("c1(0-1;1)");
  CHECK_THROWS_AS(q_ctr(q, u01, u12), std::invalid_argument);
  CHECK_THROWS_AS(q_ctr(q, u01, other), std::invalid_argument);

  int i2 = q_ctr(q, u01, u01);
  int v = q_compose(q, 1, i2, i2);
  v = q_compose(q, 1, v, v);
  v = q_compose(q, 1, v, v);
  CHECK_THROWS_AS(q_compose(q, 1, v, v), std::out_of_range);

  core::GlobularSet one;
  one.n = 1;
  one.cells = {{"p"}, {}};
  CHECK_THROWS_AS(interleave(free_presentation(one), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(interleave(cuboidal_presentation({2, 1}), -1),
                  std::invalid_argument);
}

TEST_CASE("nerve sets count the expected assignments") {
  auto A = fixtures::strict_walking_arrow();
  CHECK(penon_nerve_set(A, 0, 0, 3).size() == 2);
  CHECK(penon_nerve_set(A, 1, 0, 3).size() == 3);
  CHECK(penon_nerve_set(A, 1, 1, 3).size() == 3);
  CHECK(penon_nerve_set(A, 2, 0, 3).size() == 4);
  CHECK(penon_nerve_set(A, 2, 1, 3).size() == 4);

  auto W = fixtures::strict_walking_two_cell();
  auto wset = penon_nerve_set(W, 1, 1, 3);
  CHECK(wset.size() == 5);
  for (std::size_t i = 0; i + 1 < wset.size(); ++i) {
    CHECK(assignment_label(wset[i]) != assignment_label(wset[i + 1]));
  }

  CHECK(penon_nerve_set(fixtures::strict_z2_two_cells(), 1, 1, 3).size() == 2);
  auto P = fixtures::strict_point();
  CHECK(penon_nerve_set(P, 2, 2, 3).size() == 1);
  CHECK(penon_nerve_set(P, 3, 1, 3).size() == 1);

  CHECK(tau_name(0, 1, 2, 0, true) == "t+(0-1-2;0)");
  CHECK(tau_name(0, 1, 2, 0, false) == "t-(0-1-2;0)");
}

TEST_CASE("nerve windows are simplicial and Segal within the window") {
  for (const auto& A : {fixtures::strict_walking_arrow(),
                        fixtures::strict_z2_two_cells()}) {
    auto w = penon_nerve_window(A, 2, 3);
    CHECK(precat::presheaf_check(w).empty());
    CHECK(precat::segal_condition(w).pass);
    // The window is stable once the square relations are in force.
    auto w2 = penon_nerve_window(A, 2, 2);
    CHECK(w2.value == w.value);
    CHECK(w2.action == w.action);
  }
}

TEST_CASE("nontrivial constraint cells are rejected as non-strict") {
  CHECK(strictness_violations(fixtures::strict_walking_arrow()).empty());
  CHECK(strictness_violations(fixtures::strict_z2_two_cells()).empty());
  auto c = bicat::z2_cocycle_bicategory();
  CHECK_FALSE(strictness_violations(c).empty());
  CHECK_THROWS_AS(penon_nerve_set(c, 1, 1, 3), std::invalid_argument);
}

TEST_CASE("functor maps reindex nerve windows") {
  auto A = fixtures::strict_walking_arrow();
  bicat::StrictFunctor2 idf;
  for (const auto& o : A.objects) idf.obj[o] = o;
  for (const auto& c : A.ones) idf.one[c.id] = c.id;
  for (const auto& c : A.twos) idf.two[c.id] = c.id;
  auto m = penon_nerve_functor_map(A, A, idf, 1, 3);
  CHECK(precat::window_map_check(m).empty());
  for (const auto& [obj, table] : m.comp) {
    for (std::size_t i = 0; i < table.size(); ++i) {
      CHECK(table[i] == static_cast<int>(i));
    }
  }

  auto P = fixtures::strict_point();
  bicat::StrictFunctor2 collapse;
  for (const auto& o : A.objects) collapse.obj[o] = "x";
  for (const auto& c : A.ones) collapse.one[c.id] = "1x";
  for (const auto& c : A.twos) collapse.two[c.id] = "i1x";
  auto m2 = penon_nerve_functor_map(A, P, collapse, 1, 3);
  CHECK(precat::window_map_check(m2).empty());
  for (const auto& [obj, table] : m2.comp) {
    for (int v : table) CHECK(v == 0);
  }
}

TEST_CASE("p-monad checks pass on the unit grid") {
  auto rep = p_monad_check(cuboidal_presentation({2, 1}).gens, 3);
  CHECK(rep.pass);
  CHECK(rep.depth == 3);
  CHECK(rep.size1 == 4);
  CHECK(rep.size2 == 4);
  REQUIRE(rep.items.size() == 4);
  CHECK(rep.items[0].name == "surjective-at-dimension-0");
  CHECK(pmonad_report_to_string(rep).find("pass") != std::string::npos);

  core::GlobularSet pt;
  pt.n = 2;
  pt.cells = {{"p"}, {}, {}};
  CHECK(p_monad_check(pt, 2).pass);

  core::GlobularSet flat;
  flat.n = 1;
  flat.cells = {{"p"}, {}};
  CHECK_THROWS_AS(p_monad_check(flat, 3), std::invalid_argument);
}
