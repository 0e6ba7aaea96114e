// Acceptance gate: one end-to-end scenario per shipped guarantee.  Each
// scenario prints a single pass/fail line; the exit code is the number of
// failing scenarios.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bicat/examples.hpp"
#include "core/labelled.hpp"
#include "core/pasting.hpp"
#include "fixtures.hpp"
#include "nerve2/nerve.hpp"
#include "nerve2/window.hpp"
#include "opterm/delta.hpp"
#include "opterm/khat.hpp"
#include "opterm/term.hpp"
#include "penon/interleave.hpp"
#include "penon/nervepa.hpp"
#include "penon/pcheck.hpp"
#include "penon/presentation.hpp"
#include "precat/category.hpp"
#include "precat/presheaf.hpp"
#include "precat/segal.hpp"

namespace {

using namespace globcat;

int g_failures = 0;

// Runs one scenario and prints its verdict.  A scenario returns the empty
// string on success and a short witness otherwise.
void criterion(int number, const char* title,
               const std::function<std::string()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string witness;
  try {
    witness = body();
  } catch (const std::exception& e) {
    witness = std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (witness.empty()) {
    std::printf("criterion %2d PASS (%6.1fs)  %s\n", number, secs, title);
  } else {
    std::printf("criterion %2d FAIL (%6.1fs)  %s -- %s\n", number, secs, title,
                witness.c_str());
    ++g_failures;
  }
  std::fflush(stdout);
}

std::string first_failure(const precat::SegalReport& rep) {
  for (const auto& item : rep.items)
    if (!item.ok) return item.name + ": " + item.witness;
  return "failed with no itemized witness";
}

// ---------------------------------------------------------------------------
// 1. Substitution and composition laws of the free strict category.

core::GlobularSet span_set() {
  core::GlobularSet x;
  x.n = 2;
  x.cells = {{"p", "q"}, {"f"}, {"al"}};
  x.src = {{"f", "p"}, {"al", "f"}};
  x.tgt = {{"f", "q"}, {"al", "f"}};
  return x;
}

core::GlobularSet loop_set() {
  core::GlobularSet x;
  x.n = 2;
  x.cells = {{"p"}, {"f"}, {"al"}};
  x.src = {{"f", "p"}, {"al", "f"}};
  x.tgt = {{"f", "p"}, {"al", "f"}};
  return x;
}

using Interp = std::map<std::string, core::LabelledDiagram>;

std::function<const core::LabelledDiagram&(const std::string&)> as_fn(
    const Interp& i) {
  return [&i](const std::string& g) -> const core::LabelledDiagram& {
    return i.at(g);
  };
}

std::string check_laws_over(const core::GlobularSet& x, const Interp& i1,
                            const Interp& i2) {
  Interp unit, composed;
  for (const auto& level : x.cells)
    for (const auto& g : level) {
      unit[g] = core::tx_generator(x, g);
      composed[g] = core::tx_flatten(x, x, i1.at(g), as_fn(i2));
    }
  for (const auto& level : x.cells)
    for (const auto& g : level)
      if (core::tx_flatten(x, x, core::tx_generator(x, g), as_fn(i1)) !=
          i1.at(g))
        return "substitution into a one-leaf cell moves generator " + g;
  for (int d = 0; d <= 2; ++d) {
    for (const auto& c : core::tx_enumerate(x, d, 5)) {
      if (core::tx_flatten(x, x, c, as_fn(unit)) != c)
        return "generatorwise substitution moves " + core::tx_to_string(c);
      auto stepwise = core::tx_flatten(
          x, x, core::tx_flatten(x, x, c, as_fn(i1)), as_fn(i2));
      auto joint = core::tx_flatten(x, x, c, as_fn(composed));
      if (stepwise != joint)
        return "substitution is not associative at " + core::tx_to_string(c);
      if (core::tx_flatten(x, x, core::tx_identity(c), as_fn(i1)) !=
          core::tx_identity(core::tx_flatten(x, x, c, as_fn(i1))))
        return "substitution breaks an identity at " + core::tx_to_string(c);
    }
  }
  // Strict-category laws: units, associativity, interchange.
  for (int m = 1; m <= 2; ++m) {
    auto cells = core::tx_enumerate(x, m, 4);
    for (const auto& c : cells) {
      for (int p = 0; p < m; ++p) {
        auto us =
            core::tx_identity_iter(core::tx_src_iter(x, c, p), m - p);
        auto ut =
            core::tx_identity_iter(core::tx_tgt_iter(x, c, p), m - p);
        if (core::tx_compose(x, c, us, p) != c)
          return "right unit law fails at " + core::tx_to_string(c);
        if (core::tx_compose(x, ut, c, p) != c)
          return "left unit law fails at " + core::tx_to_string(c);
      }
    }
    for (int p = 0; p < m; ++p) {
      for (const auto& a : cells)
        for (const auto& b : cells) {
          if (core::tx_tgt_iter(x, b, p) != core::tx_src_iter(x, a, p))
            continue;
          auto ab = core::tx_compose(x, a, b, p);
          for (const auto& c : cells) {
            if (core::tx_tgt_iter(x, c, p) != core::tx_src_iter(x, b, p))
              continue;
            if (core::tx_compose(x, ab, c, p) !=
                core::tx_compose(x, a, core::tx_compose(x, b, c, p), p))
              return "composition is not associative at dimension " +
                     std::to_string(m);
          }
        }
    }
  }
  auto twos = core::tx_enumerate(x, 2, 3);
  for (const auto& a : twos)
    for (const auto& b : twos) {
      if (core::tx_tgt_iter(x, b, 1) != core::tx_src_iter(x, a, 1)) continue;
      auto ab = core::tx_compose(x, a, b, 1);
      for (const auto& c : twos)
        for (const auto& d : twos) {
          if (core::tx_tgt_iter(x, d, 1) != core::tx_src_iter(x, c, 1))
            continue;
          auto cd = core::tx_compose(x, c, d, 1);
          if (core::tx_tgt_iter(x, cd, 0) != core::tx_src_iter(x, ab, 0))
            continue;
          auto joined = core::tx_compose(x, ab, cd, 0);
          auto crossed =
              core::tx_compose(x, core::tx_compose(x, a, c, 0),
                               core::tx_compose(x, b, d, 0), 1);
          if (joined != crossed) return "interchange fails";
        }
    }
  return "";
}

std::string criterion_free_category_laws() {
  {
    auto x = span_set();
    Interp i1, i2;
    for (const auto& level : x.cells)
      for (const auto& g : level) {
        i1[g] = core::tx_generator(x, g);
        i2[g] = core::tx_generator(x, g);
      }
    i1["al"] = core::tx_identity(core::tx_generator(x, "f"));
    i2["al"] = core::tx_compose(x, core::tx_generator(x, "al"),
                                core::tx_generator(x, "al"), 1);
    if (auto w = check_laws_over(x, i1, i2); !w.empty()) return w;
  }
  {
    auto x = loop_set();
    Interp i1, i2;
    i1["p"] = core::tx_generator(x, "p");
    i1["f"] = core::tx_compose(x, core::tx_generator(x, "f"),
                               core::tx_generator(x, "f"), 0);
    i1["al"] = core::tx_compose(x, core::tx_generator(x, "al"),
                                core::tx_generator(x, "al"), 0);
    i2["p"] = core::tx_generator(x, "p");
    i2["f"] = core::tx_identity(core::tx_generator(x, "p"));
    i2["al"] = core::tx_identity_iter(core::tx_generator(x, "p"), 2);
    if (auto w = check_laws_over(x, i1, i2); !w.empty()) return w;
  }
  return "";
}

// ---------------------------------------------------------------------------
// 2. Category nerves satisfy the Segal condition within the window.

std::string criterion_category_nerves() {
  std::vector<precat::Category> cats;
  cats.push_back(precat::walking_arrow());
  cats.push_back(precat::discrete_category(1));
  cats.push_back(precat::discrete_category(3));
  cats.push_back(precat::chain_category(2));
  cats.push_back(precat::chain_category(3));
  cats.push_back(precat::parallel_pair());
  {
    std::map<std::pair<std::string, std::string>, std::string> mult;
    mult[{"e", "e"}] = "e";
    mult[{"e", "s"}] = "s";
    mult[{"s", "e"}] = "s";
    mult[{"s", "s"}] = "e";
    cats.push_back(precat::monoid_category({"e", "s"}, mult, "e"));
  }
  {
    // The cyclic group of order three.
    std::vector<std::string> el = {"e", "a", "b"};
    std::map<std::pair<std::string, std::string>, std::string> mult;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) mult[{el[i], el[j]}] = el[(i + j) % 3];
    cats.push_back(precat::monoid_category(el, mult, "e"));
  }
  {
    // The commutative square as a preorder on four elements.
    std::vector<std::vector<bool>> leq = {{true, true, true, true},
                                          {false, true, false, true},
                                          {false, false, true, true},
                                          {false, false, false, true}};
    cats.push_back(precat::preorder_category(leq));
  }
  for (int objects = 1; objects <= 4; ++objects)
    for (std::uint32_t seed : {11u, 22u, 33u})
      cats.push_back(precat::random_category(objects, seed));
  if (cats.size() < 20)
    return "only " + std::to_string(cats.size()) + " categories";
  for (std::size_t i = 0; i < cats.size(); ++i) {
    auto bad = precat::category_validate(cats[i]);
    if (!bad.empty())
      return "category " + std::to_string(i) + ": " + bad.front();
    auto w = precat::nerve_of_category(cats[i], 4);
    auto pc = precat::presheaf_check(w);
    if (!pc.empty()) return "nerve " + std::to_string(i) + ": " + pc.front();
    auto rep = precat::segal_condition(w);
    if (!rep.pass)
      return "nerve " + std::to_string(i) + ": " + first_failure(rep);
  }
  return "";
}

// ---------------------------------------------------------------------------
// 3. Bicategory nerves: windows, direct outer comparisons, and streaming
//    certificates for the bidegrees outside the window.

std::string criterion_bicategory_nerves() {
  auto strict = bicat::two_object_strict();
  auto nws = nerve2::nerve_window(strict, 3);
  if (auto pc = precat::presheaf_check(nws.window); !pc.empty())
    return "strict window: " + pc.front();
  if (auto rep = precat::segal_condition(nws.window); !rep.pass)
    return "strict window: " + first_failure(rep);

  auto z2 = bicat::z2_cocycle_bicategory();
  auto nwz = nerve2::nerve_window(z2, 2);
  if (auto pc = precat::presheaf_check(nwz.window); !pc.empty())
    return "cocycle window: " + pc.front();
  if (auto rep = precat::segal_condition(nwz.window); !rep.pass)
    return "cocycle window: " + first_failure(rep);
  for (int j = 2; j <= 3; ++j) {
    auto f = nerve2::segal_vertical_direct(z2, j);
    for (const auto& item : precat::contractible(f))
      if (!item.ok)
        return "cocycle outer comparison " + std::to_string(j) + ": " +
               item.name + " " + item.witness;
  }
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      auto rep = nerve2::segal_stream_certify(z2, j, k);
      if (!rep.pass)
        return "cocycle stream (" + std::to_string(j) + "," +
               std::to_string(k) + "): " + rep.message;
      if (j <= 2 && k <= 2 &&
          rep.valid != static_cast<long long>(
                           nerve2::nerve_elements(z2, j, k).size()))
        return "stream count disagrees with direct enumeration at (" +
               std::to_string(j) + "," + std::to_string(k) + ")";
    }
  return "";
}

// ---------------------------------------------------------------------------
// 4. Reduction followed by completion is the identity on nerve elements.

std::string criterion_reduce_complete() {
  for (const auto& b :
       {bicat::two_object_strict(), bicat::z2_cocycle_bicategory()}) {
    for (int j = 0; j <= 3; ++j)
      for (const auto& e : nerve2::nerve_elements(b, j, 1))
        if (!(nerve2::element_complete(b, nerve2::element_reduce(e)) == e))
          return "not the identity at j=" + std::to_string(j);
  }
  return "";
}

// ---------------------------------------------------------------------------
// 5. The canonical composite section of the arity map.

std::string criterion_composite_section() {
  for (int d = 0; d <= 3; ++d)
    for (const auto& pi : core::pd_enumerate(d, 6))
      if (!(opterm::term_arity(opterm::khat(pi)) == pi))
        return "arity of the canonical composite differs at " +
               pi.to_string();
  return "";
}

// ---------------------------------------------------------------------------
// 6. Synthesized contractions: boundaries exact, closed forms verbatim.

std::pair<opterm::Term, opterm::Term> generic_pair(
    const core::PastingDiagram& pi) {
  if (pi.dim() == 1) {
    return {opterm::atom("a0", 0, core::PastingDiagram::point(), nullptr,
                         nullptr),
            opterm::atom("b0", 0, core::PastingDiagram::point(), nullptr,
                         nullptr)};
  }
  auto [s, t] = generic_pair(core::pd_boundary(pi));
  const auto beta = core::pd_boundary(pi);
  const auto tag = std::to_string(beta.dim());
  return {opterm::atom("a" + tag, beta.dim(), beta, s, t),
          opterm::atom("b" + tag, beta.dim(), beta, s, t)};
}

std::string criterion_contraction_synthesis() {
  for (int d = 1; d <= 3; ++d) {
    for (const auto& pi : core::pd_enumerate(d, 4)) {
      auto [a, b] = generic_pair(pi);
      auto t = opterm::unbiased_delta({pi, a, b});
      if (!(opterm::term_arity(t) == pi))
        return "arity differs at " + pi.to_string();
      if (!opterm::term_eq(opterm::term_src(t), a) ||
          !opterm::term_eq(opterm::term_tgt(t), b))
        return "boundary differs at " + pi.to_string();
      if (core::pd_is_identity(pi)) {
        if (!opterm::term_eq(t, opterm::gamma(a, b)))
          return "identity-shape form differs at " + pi.to_string();
      } else if (d == 1) {
        auto k = opterm::khat(pi);
        auto expect = opterm::comp(
            1, 0,
            opterm::comp(1, 0, opterm::gamma(opterm::term_tgt(k), b), k),
            opterm::gamma(a, opterm::term_src(k)));
        if (!opterm::term_eq(t, expect))
          return "one-dimensional form differs at " + pi.to_string();
      }
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// 7. Interleaving inventories on the three smallest grids.

std::string criterion_interleaving_inventory() {
  for (const auto& shape :
       {std::vector<int>{2, 1}, std::vector<int>{3, 1},
        std::vector<int>{2, 2}}) {
    const int j = shape[0], k = shape[1];
    const std::string tag =
        "(" + std::to_string(j) + "," + std::to_string(k) + ")";
    auto q = penon::interleave(penon::cuboidal_presentation(shape), 3);
    auto inv = penon::q_inventory(q);
    if (inv.generating0 != j + 1) return tag + ": point count";
    if (inv.generating1 != (j + 1) * j / 2 * (k + 1))
      return tag + ": presented 1-cell count";
    if (inv.generating2 != (j + 1) * j / 2 * k)
      return tag + ": presented 2-cell count";
    if (inv.triangular2 == 0) return tag + ": no triangular cells";
    std::vector<int> triangular;
    for (int id = 0; id < static_cast<int>(q.cells.size()); ++id)
      if (q.cells[id].kind == penon::QKind::Contraction &&
          q.cells[id].cls == penon::CtrClass::Triangular)
        triangular.push_back(id);
    for (int id : triangular) {
      const int a = q.cells[id].ctr_a, b = q.cells[id].ctr_b;
      const int rev = penon::q_ctr(q, b, a);
      auto forth = penon::top_of(q, id);
      auto back = penon::top_of(q, rev);
      auto round_a = penon::top_vcomp(q, back, forth);
      auto round_b = penon::top_vcomp(q, forth, back);
      auto id_a = penon::top_of(q, penon::q_ctr(q, a, a));
      auto id_b = penon::top_of(q, penon::q_ctr(q, b, b));
      if (!round_a || round_a->key() != id_a.key())
        return tag + ": triangular cell is not left invertible";
      if (!round_b || round_b->key() != id_b.key())
        return tag + ": triangular cell is not right invertible";
    }
    if (!penon::q_parallel_distinct(q).empty())
      return tag + ": distinct parallel top cells";
  }
  return "";
}

// ---------------------------------------------------------------------------
// 8. Nerve windows of small strict 2-categories: Segal and depth-stable.

std::string criterion_nerve_window_segal() {
  const std::vector<std::pair<std::string, bicat::Bicategory>> family = {
      {"point", fixtures::strict_point()},
      {"arrow", fixtures::strict_walking_arrow()},
      {"parallel", fixtures::strict_parallel_ones()},
      {"group-on-ones", fixtures::strict_z2_one_object()},
      {"group-on-twos", fixtures::strict_z2_two_cells()}};
  for (const auto& [name, b] : family) {
    auto w3 = penon::penon_nerve_window(b, 2, 3);
    if (auto pc = precat::presheaf_check(w3); !pc.empty())
      return name + ": " + pc.front();
    if (auto rep = precat::segal_condition(w3); !rep.pass)
      return name + ": " + first_failure(rep);
    auto w2 = penon::penon_nerve_window(b, 2, 2);
    if (w2.value != w3.value || w2.action != w3.action)
      return name + ": window changes between depths 2 and 3";
  }
  return "";
}

// ---------------------------------------------------------------------------
// 9. Distinct strict functors induce distinct nerve-window maps.

bicat::StrictFunctor2 identity_functor(const bicat::Bicategory& b) {
  bicat::StrictFunctor2 f;
  for (const auto& o : b.objects) f.obj[o] = o;
  for (const auto& m : b.ones) f.one[m.id] = m.id;
  for (const auto& t : b.twos) f.two[t.id] = t.id;
  return f;
}

bicat::StrictFunctor2 collapse_functor(const bicat::Bicategory& b,
                                       const std::string& pt) {
  bicat::StrictFunctor2 f;
  const auto& one = b.id1.at(pt);
  const auto& two = b.id2.at(one);
  for (const auto& o : b.objects) f.obj[o] = pt;
  for (const auto& m : b.ones) f.one[m.id] = one;
  for (const auto& t : b.twos) f.two[t.id] = two;
  return f;
}

std::string criterion_functor_separation() {
  auto b = bicat::two_object_strict();
  auto push = identity_functor(b);
  push.one["a"] = "b";
  push.two["ia"] = "ib";
  push.two["g"] = "ib";
  auto pull = identity_functor(b);
  pull.one["b"] = "a";
  pull.two["ib"] = "ia";
  pull.two["g"] = "ia";
  const std::vector<bicat::StrictFunctor2> functors = {
      identity_functor(b), collapse_functor(b, "x"), collapse_functor(b, "y"),
      push, pull};
  std::vector<precat::WindowMap> maps;
  for (std::size_t i = 0; i < functors.size(); ++i) {
    auto bad = bicat::functor_validate(b, b, functors[i]);
    if (!bad.empty())
      return "functor " + std::to_string(i) + ": " + bad.front();
    maps.push_back(penon::penon_nerve_functor_map(b, b, functors[i], 1, 3));
    auto nat = precat::window_map_check(maps.back());
    if (!nat.empty())
      return "map " + std::to_string(i) + ": " + nat.front();
  }
  int separated = 0;
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      if (maps[i].comp == maps[j].comp)
        return "maps " + std::to_string(i) + " and " + std::to_string(j) +
               " coincide";
      ++separated;
    }
  if (separated < 5) return "fewer than five separated pairs";
  return "";
}

// ---------------------------------------------------------------------------
// 10. Bounded surjectivity / fullness / faithfulness checks on unit grids.

std::string criterion_pmonad_checks() {
  for (const auto& shape :
       {std::vector<int>{2, 1}, std::vector<int>{2, 2}}) {
    auto x = penon::cuboidal_presentation(shape).gens;
    auto rep = penon::p_monad_check(x, 3);
    for (const auto& item : rep.items)
      if (!item.ok)
        return "(" + std::to_string(shape[0]) + "," +
               std::to_string(shape[1]) + ") " + item.name + ": " +
               item.witness;
    if (!rep.pass)
      return "(" + std::to_string(shape[0]) + "," +
             std::to_string(shape[1]) + "): failed without witness";
  }
  return "";
}

}  // namespace

int main() {
  criterion(1, "substitution and strict composition laws",
            criterion_free_category_laws);
  criterion(2, "category nerves are Segal within the window",
            criterion_category_nerves);
  criterion(3, "bicategory nerves are Segal at every certified bidegree",
            criterion_bicategory_nerves);
  criterion(4, "reduce-then-complete is the identity on nerve elements",
            criterion_reduce_complete);
  criterion(5, "the canonical composite is a section of the arity map",
            criterion_composite_section);
  criterion(6, "synthesized contractions match their closed forms",
            criterion_contraction_synthesis);
  criterion(7, "interleaving inventories and invertible triangular cells",
            criterion_interleaving_inventory);
  criterion(8, "2-categorical nerve windows are Segal and depth-stable",
            criterion_nerve_window_segal);
  criterion(9, "distinct strict functors separate nerve-window maps",
            criterion_functor_separation);
  criterion(10, "bounded fullness and faithfulness of the unit-grid checks",
            criterion_pmonad_checks);
  if (g_failures == 0) {
    std::printf("acceptance: all criteria pass\n");
  } else {
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  }
  return g_failures;
}
