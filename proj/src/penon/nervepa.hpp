#pragma once
// Nerves of finite strict 2-categories built from the grid presentations:
// the value at index (j, k) is the set of boundary- and relation-respecting
// assignments of target cells to the presented cells and to the two
// triangular comparison 2-cells of each split interval; index morphisms act
// by reindexing assignments, inserting identity cells over collapsed spans
// and levels.

#include <map>
#include <string>
#include <vector>

#include "bicat/bicat.hpp"
#include "precat/presheaf.hpp"
#include "precat/segal.hpp"

namespace globcat::penon {

// An assignment of target cells: keys are the presented-cell names of the
// grid presentation plus the triangular-cell names "t+(u-v-w;z)" and
// "t-(u-v-w;z)".
struct NerveAssignment {
  std::map<std::string, std::string> images;

  bool operator==(const NerveAssignment&) const = default;
  auto operator<=>(const NerveAssignment&) const = default;
};

std::string tau_name(int u, int v, int w, int z, bool forward);
std::string assignment_label(const NerveAssignment& a);

// Violations of strictness on top of bicat_validate: every constraint cell
// must be an identity 2-cell.  Empty means the data is a strict 2-category.
std::vector<std::string> strictness_violations(const bicat::Bicategory& b);

// All assignments for index (j, k) into a finite strict 2-category,
// deterministically ordered.  Boundary typing always holds; with depth >= 1
// the two triangular cells of each split are forced to be mutually inverse,
// depth >= 2 adds the square relations against the level comparison cells,
// and depth >= 3 adds the pentagon relations among nested splits.  Throws
// std::invalid_argument on an invalid or non-strict target or a
// non-canonical index.
std::vector<NerveAssignment> penon_nerve_set(const bicat::Bicategory& a,
                                             int j, int k, int depth);

// The nerve window on all canonical two-axis indices within the bound, with
// reindexing actions tabulated for every canonical index morphism.
precat::PresheafWindow penon_nerve_window(const bicat::Bicategory& a,
                                          int bound, int depth);

// The window map induced by a strict functor: postcompose every assignment.
precat::WindowMap penon_nerve_functor_map(const bicat::Bicategory& a,
                                          const bicat::Bicategory& b,
                                          const bicat::StrictFunctor2& f,
                                          int bound, int depth);

}  // namespace globcat::penon
