#include <doctest.h>

#include <nlohmann/json.hpp>

#include "core/globular.hpp"

using namespace globcat::core;

namespace {

// Two 2-cells stacked between the same pair of points.
GlobularSet two_stack() {
  GlobularSet x;
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
  return x;
}

}  // namespace

TEST_CASE("lookup helpers grade and bound cells") {
  GlobularSet x = two_stack();
  CHECK(validate_globular(x).empty());
  CHECK(x.dim_of("al") == 2);
  CHECK(x.dim_of("p") == 0);
  CHECK(x.dim_of("zz") == -1);
  CHECK(x.has_cell("g", 1));
  CHECK_FALSE(x.has_cell("g", 2));
  CHECK(x.src_of("be") == "g");
  CHECK(x.src_iter("al", 0) == "p");
  CHECK(x.tgt_iter("be", 0) == "q");
  CHECK(x.src_iter("f", 1) == "f");
}

TEST_CASE("validation catches broken globularity") {
  GlobularSet x = two_stack();
  x.tgt["al"] = "h";  // fine: still parallel over (p, q)
  CHECK(validate_globular(x).empty());
  x.src["be"] = "p";  // a 2-cell cannot bound to a point
  CHECK_FALSE(validate_globular(x).empty());

  GlobularSet y = two_stack();
  y.src.erase("g");
  CHECK_FALSE(validate_globular(y).empty());

  GlobularSet z = two_stack();
  z.cells[1].push_back("f");  // duplicate id
  CHECK_FALSE(validate_globular(z).empty());

  // Globularity failure: boundaries of a 2-cell not parallel.
  GlobularSet w = two_stack();
  w.cells[0].push_back("r");
  w.tgt["g"] = "r";
  CHECK_FALSE(validate_globular(w).empty());
}

TEST_CASE("globular maps must commute with the boundaries") {
  GlobularSet x = two_stack();
  GlobularMap id;
  for (const auto& level : x.cells)
    for (const auto& c : level) id.comp[c] = c;
  CHECK(validate_globular_map(x, x, id).empty());
  CHECK(id("al") == "al");

  GlobularMap swap = id;
  swap.comp["al"] = "be";  // boundaries disagree
  CHECK_FALSE(validate_globular_map(x, x, swap).empty());

  GlobularMap partial = id;
  partial.comp.erase("h");
  CHECK_FALSE(validate_globular_map(x, x, partial).empty());
}

TEST_CASE("json serialization round trips") {
  GlobularSet x = two_stack();
  GlobularSet y = globular_from_json(globular_to_json(x));
  CHECK(y.n == x.n);
  CHECK(y.cells == x.cells);
  CHECK(y.src.at("al") == "f");
  CHECK(validate_globular(y).empty());
}
