#pragma once
// Segal comparison maps between presheaf windows and the contractibility
// checks on them: surjective at the bottom index, full at every level, and
// faithful at the top, via the induced map into the span limit.

#include <string>
#include <vector>

#include "precat/presheaf.hpp"

namespace globcat::precat {

// A map of windows over the same index shape: per object, element-index
// tables dom -> cod.
struct WindowMap {
  PresheafWindow dom, cod;
  std::map<theta::ThetaObject, std::vector<int>> comp;
};

// Commutation with every tabulated action; empty means natural.
std::vector<std::string> window_map_check(const WindowMap& f,
                                          std::size_t max_errors = 20);

struct CheckItem {
  std::string name;
  bool ok = false;
  std::string witness;  // first counterexample, empty when ok
};

struct SegalReport {
  int bound = 0;
  bool pass = false;
  std::vector<CheckItem> items;
};

// The comparison from w(head ++ {k} ++ -) to the k-fold span limit of
// w(head ++ {1} ++ -) over w(head ++ {0} ++ -), glued end to start along
// the segment inclusions on axis head.size().
WindowMap segal_map(const PresheafWindow& w, const std::vector<int>& head,
                    int k);

// Simpson-style contractibility of a window map whose index shape has m
// axes: m = 0 reduces to a bijection; otherwise surjectivity at the point
// index, fullness at each level, and faithfulness at the top level.
std::vector<CheckItem> contractible(const WindowMap& f);

// For a 1-axis window: all comparisons at 2 <= k <= bound are bijections.
// For a 2-axis window: outer comparisons are contractible for 2 <= j <=
// bound, and inner comparisons are bijections for j <= bound, 2 <= k <=
// bound.
SegalReport segal_condition(const PresheafWindow& w);

}  // namespace globcat::precat
