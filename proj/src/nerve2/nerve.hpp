#pragma once
// Elements of the two-variable nerve of a bicategory, indexed by a pair of
// weak-composition lengths (j, k): a grid of objects, 1-cells, comparison
// 2-cells and level-change 2-cells subject to exchange squares and cocycle
// pentagons, together with the reindexing action along monotone maps.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "bicat/bicat.hpp"
#include "theta/theta.hpp"

namespace globcat::nerve2 {

// Data at bidegree (j, k):
//   a[u]                objects, 0 <= u <= j
//   f[(u,v,z)]          1-cells a_u -> a_v, u < v, 0 <= z <= k
//   alpha[(u,v,z)]      2-cells f^{z-1}_{uv} => f^z_{uv}, 1 <= z <= k
//   iota[(u,v,w,z)]     invertible 2-cells f^z_{vw} . f^z_{uv} => f^z_{uw}
// subject to, for all admissible indices,
//   square:   iota^z . (alpha^z_{vw} * alpha^z_{uv}) = alpha^z_{uw} . iota^{z-1}
//   pentagon: iota^z_{uwx} . (1 * iota^z_{uvw}) . assoc = iota^z_{uvx} . (iota^z_{vwx} * 1)
struct NerveElement {
  int j = 0;
  int k = 0;
  std::vector<std::string> a;
  std::map<std::tuple<int, int, int>, std::string> f;
  std::map<std::tuple<int, int, int>, std::string> alpha;
  std::map<std::tuple<int, int, int, int>, std::string> iota;

  bool operator==(const NerveElement&) const = default;
  auto operator<=>(const NerveElement&) const = default;
};

// Deterministic printable label, injective on elements of a fixed bidegree.
std::string element_label(const NerveElement& e);

// All violations (typing, invertibility, squares, pentagons), capped.
std::vector<std::string> element_validate(const bicat::Bicategory& b,
                                          const NerveElement& e,
                                          std::size_t max_errors = 20);

// Every valid element at bidegree (j, k), sorted.
std::vector<NerveElement> nerve_elements(const bicat::Bicategory& b, int j,
                                         int k);

// Forget the level cells at spans >= 2.
NerveElement element_reduce(const NerveElement& e);

// Reconstruct the forgotten level cells by solving the squares through
// u+1 in ascending span order; inverse to element_reduce on valid elements.
NerveElement element_complete(const bicat::Bicategory& b,
                              const NerveElement& e);

// Reindexing along p : [j'] -> [j], q : [k'] -> [k].  Collapsed spans pick
// up identity cells and unitors; level jumps pick up vertical composites of
// the alpha cells.  The q component is immaterial when p is constant, and
// the result is returned at the canonical bidegree (k is zeroed when j'=0).
NerveElement nerve_action(const bicat::Bicategory& b, const theta::DeltaMap& p,
                          const theta::DeltaMap& q, const NerveElement& e);

// Apply a strict functor to every cell of an element.
NerveElement element_apply(const bicat::StrictFunctor2& f,
                           const NerveElement& e);

}  // namespace globcat::nerve2
