#pragma once
// Finite windows onto presheaves: values and contravariant actions tabulated
// for every canonical index object with coordinates within a bound, plus the
// exhaustive identity/functoriality checks on that data.

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "precat/category.hpp"
#include "theta/theta.hpp"

namespace globcat::precat {

struct PresheafWindow {
  int n = 1;
  int bound = 0;
  std::vector<theta::ThetaObject> objects;  // canonical, sorted
  std::map<theta::ThetaObject, std::vector<std::string>> value;
  // For f : a -> b, a table of size |value[b]| with entries indexing
  // value[a] (actions are contravariant).
  std::map<theta::ThetaMorphism, std::vector<int>> action;

  const std::vector<std::string>& at(const theta::ThetaObject& a) const;
  const std::vector<int>& table(const theta::ThetaMorphism& f) const;
};

// Structural soundness, identity actions, and A(g.f) = A(f).A(g) for every
// composable pair of canonical morphisms within the window.  Returns the
// first violations found (capped), empty means pass.
std::vector<std::string> presheaf_check(const PresheafWindow& w,
                                        std::size_t max_errors = 20);

// Tuples (i_1..i_k) with t_maps[j][i_j] == s_maps[j][i_{j+1}], in ascending
// lexicographic order.  sizes[j] bounds i_j; k = sizes.size().
std::vector<std::vector<int>> wide_pullback(
    const std::vector<int>& sizes, const std::vector<std::vector<int>>& t_maps,
    const std::vector<std::vector<int>>& s_maps);

// The window r |-> w(head ++ r) with actions restricted along identities on
// the head axes.
PresheafWindow restrict_window(const PresheafWindow& w,
                               const std::vector<int>& head);

nlohmann::json window_to_json(const PresheafWindow& w);
PresheafWindow window_from_json(const nlohmann::json& j);

// The nerve of a finite category as a window: value at (k) is the set of
// composable k-strings of morphisms, with actions by composing/inserting
// identities along monotone reindexings.
PresheafWindow nerve_of_category(const Category& c, int bound);

}  // namespace globcat::precat
