#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "bicat/bicat.hpp"
#include "core/globular.hpp"

namespace globcat::bicat {

// Strict 2-category with objects x, y, a parallel pair a, b : x -> y and a
// single non-identity 2-cell g : a => b.
Bicategory two_object_strict();

// Data for a one-object bicategory built from a group G acting trivially on
// an abelian group M, twisted by a function omega : G^3 -> M.  The 1-cells
// are the elements of G, the 2-cells on g are the pairs (m, g), vertical and
// horizontal composition add the M components, and omega supplies the
// associator.  The unitors are zero, which is coherent exactly when omega is
// normalised; the pentagon holds exactly when omega is a 3-cocycle.
struct CocycleData {
  std::vector<std::string> group;
  std::map<std::pair<std::string, std::string>, std::string> mult;
  std::string unit;
  std::vector<std::string> module;
  std::map<std::pair<std::string, std::string>, std::string> add;
  std::string zero;
  std::map<std::tuple<std::string, std::string, std::string>, std::string>
      omega;
};

Bicategory cocycle_bicategory(const CocycleData& d);

// The cocycle bicategory for G = M = Z/2 with the nontrivial normalised
// 3-cocycle omega(s, s, s) = 1 (zero elsewhere).  Not equivalent to a strict
// 2-category, yet every required constraint cell exists and is invertible.
Bicategory z2_cocycle_bicategory();

// Strict 2-category freely generated by a globular set of dimension <= 2.
// Cells are labelled-diagram normal forms; ids are their printed forms.
// Enumeration runs up to the given shape-size budget and the composition
// tables certify closure; throws std::invalid_argument if the free
// 2-category does not fit in the budget.
Bicategory free_strict_bicat(const core::GlobularSet& x, std::size_t budget);

}  // namespace globcat::bicat
