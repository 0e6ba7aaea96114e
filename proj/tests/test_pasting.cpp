#include <doctest.h>

#include <vector>

#include <nlohmann/json.hpp>

#include "core/pasting.hpp"

using namespace globcat::core;

namespace {

PastingDiagram chain(int k) {
  return {1, std::vector<PastingDiagram>(static_cast<std::size_t>(k),
                                         PastingDiagram::point())};
}

PastingDiagram grid(const std::vector<int>& columns) {
  std::vector<PastingDiagram> entries;
  for (int k : columns) entries.push_back(chain(k));
  return {2, std::move(entries)};
}

}  // namespace

TEST_CASE("point, empty and single-cell constructors") {
  CHECK(PastingDiagram::point().dim() == 0);
  CHECK(PastingDiagram::point().size() == 0);
  CHECK(PastingDiagram::empty(2).dim() == 2);
  CHECK(PastingDiagram::empty(2).is_empty());
  CHECK(PastingDiagram::single_cell(0) == PastingDiagram::point());
  CHECK(PastingDiagram::single_cell(1) == chain(1));
  CHECK(PastingDiagram::single_cell(2) == grid({1}));
  CHECK(PastingDiagram::single_cell(3).size() == 3);
  CHECK_THROWS(PastingDiagram(1, {chain(1)}));  // entry dimension mismatch
}

TEST_CASE("size counts entries across all nesting levels") {
  CHECK(chain(3).size() == 3);
  CHECK(grid({2, 0, 1}).size() == 6);
  CHECK(pd_identity(grid({2})).size() == 3);
}

TEST_CASE("boundary collapses one dimension") {
  CHECK(pd_boundary(chain(5)) == PastingDiagram::point());
  CHECK(pd_boundary(grid({2, 0, 1})) == chain(3));
  CHECK(pd_boundary_to(grid({2, 0, 1}), 0) == PastingDiagram::point());
  CHECK_THROWS(pd_boundary(PastingDiagram::point()));
}

TEST_CASE("identity diagrams round trip through their base") {
  PastingDiagram base = grid({1, 2});
  PastingDiagram id = pd_identity(base);
  CHECK(id.dim() == 3);
  CHECK(pd_is_identity(id));
  CHECK_FALSE(pd_is_identity(base));
  CHECK(pd_identity_base(id) == base);
  // The empty diagram is the identity on the empty diagram one level down.
  CHECK(pd_is_identity(PastingDiagram::empty(2)));
  CHECK(pd_identity_base(PastingDiagram::empty(2)) ==
        PastingDiagram::empty(1));
}

TEST_CASE("composition concatenates along the point boundary") {
  CHECK(pd_compose(chain(2), chain(3), 0) == chain(5));
  CHECK(pd_compose(grid({1}), grid({2, 0}), 0) == grid({2, 0, 1}));
}

TEST_CASE("composition at higher boundaries is entrywise") {
  // Two rows of 2-cells over the same three columns stack pairwise.
  CHECK(pd_compose(grid({1, 0, 2}), grid({2, 1, 0}), 1) == grid({3, 1, 2}));
  CHECK_THROWS(pd_compose(grid({1}), grid({1, 1}), 1));
}

TEST_CASE("composition laws hold on a sample of small diagrams") {
  auto twos = pd_enumerate(2, 4);
  for (const auto& a : twos) {
    // Units: composing with the matching empty diagram is neutral.
    auto unit = PastingDiagram(2, {});
    CHECK(pd_compose(a, unit, 0) == a);
    CHECK(pd_compose(unit, a, 0) == a);
    for (const auto& b : twos) {
      auto ab = pd_compose(b, a, 0);
      CHECK(ab.size() == a.size() + b.size());
      for (const auto& c : twos) {
        CHECK(pd_compose(c, ab, 0) == pd_compose(pd_compose(c, b, 0), a, 0));
      }
    }
  }
}

TEST_CASE("enumeration counts match the closed forms") {
  // Dimension 1: one diagram per length.
  CHECK(pd_enumerate(1, 4).size() == 5);
  // Dimension 2: compositions r + sum(k_i) <= s give 2^s diagrams.
  CHECK(pd_enumerate(2, 0).size() == 1);
  CHECK(pd_enumerate(2, 1).size() == 2);
  CHECK(pd_enumerate(2, 2).size() == 4);
  CHECK(pd_enumerate(2, 4).size() == 16);
  // Dimension 3, size <= 3: counted by hand over outer arities.
  CHECK(pd_enumerate(3, 3).size() == 9);
  // Deterministic order: by size, then lexicographically.
  auto once = pd_enumerate(2, 3);
  auto twice = pd_enumerate(2, 3);
  CHECK(once == twice);
  CHECK(once.front() == PastingDiagram::empty(2));
}

TEST_CASE("json serialization round trips") {
  for (const auto& pd : pd_enumerate(2, 3)) {
    CHECK(pd_from_json(pd_to_json(pd)) == pd);
  }
  auto j = pd_to_json(grid({2}));
  CHECK(j.at("dim") == 2);
  CHECK_THROWS(pd_from_json(nlohmann::json{{"dim", "x"}}));
}
