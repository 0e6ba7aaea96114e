#pragma once
// Finite bicategories with explicit composition tables and constraint
// cells, exhaustive axiom validation, canonical coherence isomorphisms
// between bracketings, and strict functors.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace globcat::bicat {

struct Bicategory {
  struct One {
    std::string id, dom, cod;  // endpoints are objects
    bool operator==(const One&) const = default;
  };
  struct Two {
    std::string id, dom, cod;  // endpoints are parallel 1-cells
    bool operator==(const Two&) const = default;
  };

  std::vector<std::string> objects;
  std::vector<One> ones;
  std::vector<Two> twos;
  std::map<std::string, std::string> id1;  // object -> 1-cell
  std::map<std::string, std::string> id2;  // 1-cell -> 2-cell
  // (g, f) -> g . f for 1-cells with cod f = dom g.
  std::map<std::pair<std::string, std::string>, std::string> hcomp1;
  // (b, a) -> b after a vertically, for 2-cells with dom b = cod a.
  std::map<std::pair<std::string, std::string>, std::string> vcomp2;
  // (b, a) -> b beside a horizontally (b on the codomain side).
  std::map<std::pair<std::string, std::string>, std::string> hcomp2;
  // (h, g, f) -> associator (h.g).f => h.(g.f).
  std::map<std::tuple<std::string, std::string, std::string>, std::string>
      assoc;
  std::map<std::string, std::string> lunit;  // f -> 1_b . f => f
  std::map<std::string, std::string> runit;  // f -> f . 1_a => f

  const One& one(const std::string& id) const;
  const Two& two(const std::string& id) const;
  bool is_one(const std::string& id) const;
  bool is_two(const std::string& id) const;
  const std::string& id1_of(const std::string& o) const;
  const std::string& id2_of(const std::string& f) const;
  const std::string& hc1(const std::string& g, const std::string& f) const;
  const std::string& vc(const std::string& b, const std::string& a) const;
  const std::string& hc2(const std::string& b, const std::string& a) const;
  const std::string& assoc_of(const std::string& h, const std::string& g,
                              const std::string& f) const;
  const std::string& lunit_of(const std::string& f) const;
  const std::string& runit_of(const std::string& f) const;
};

// Exhaustive check of all bicategory axioms on the finite data: typing,
// hom-categories, functoriality of horizontal composition (interchange),
// naturality of the constraints, constraint invertibility, pentagon and
// triangle.  Returns the violations found (capped); empty means valid.
std::vector<std::string> bicat_validate(const Bicategory& b,
                                        std::size_t max_errors = 20);

bool two_invertible(const Bicategory& b, const std::string& alpha);
std::optional<std::string> two_inverse(const Bicategory& b,
                                       const std::string& alpha);

nlohmann::json bicat_to_json(const Bicategory& b);
Bicategory bicat_from_json(const nlohmann::json& j);

// Fills assoc/lunit/runit with identity 2-cells; requires horizontal
// composition to be strictly associative and unital on the nose.
void complete_strict_constraints(Bicategory& b);

// A bracketing of a composable word of 1-cells; `first` is on the source
// side of the composite.
struct BrNode;
using Br = std::shared_ptr<const BrNode>;
struct BrNode {
  int leaf = -1;
  Br first, second;
};
Br br_leaf(int i);
Br br_pair(Br first, Br second);
// Fully left-parenthesized shape on r leaves.
Br br_left_comb(int r);
// All bracketings on r leaves.
std::vector<Br> br_all(int r);

// The composite 1-cell of `word` (source end first) under a bracketing.
std::string eval_bracketing(const Bicategory& b,
                            const std::vector<std::string>& word,
                            const Br& br);

// The canonical invertible 2-cell eval(br1) => eval(br2) built from
// whiskered associators and unitors via each side's normalization to the
// left-bracketed identity-free form.
std::string coherence_iso(const Bicategory& b,
                          const std::vector<std::string>& word, const Br& br1,
                          const Br& br2);

struct StrictFunctor2 {
  std::map<std::string, std::string> obj, one, two;
};

// Totality, typing, and on-the-nose preservation of all structure
// (including the constraint cells).  Empty means valid.
std::vector<std::string> functor_validate(const Bicategory& a,
                                          const Bicategory& b,
                                          const StrictFunctor2& f);

}  // namespace globcat::bicat
