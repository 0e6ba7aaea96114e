#pragma once
// Presentations of globular cells by strict composites of generators: a
// globular set of presented cells together with an interpretation of each
// cell as a labelled pasting diagram over a generating globular set.  The
// cuboidal family X(j_1..j_n) / R(j_1..j_n) presents every rectangular
// sub-block of an n-dimensional grid of generators by the grid composite it
// spans; the free presentation interprets every cell by itself.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/globular.hpp"
#include "core/labelled.hpp"

namespace globcat::penon {

struct Presentation {
  // Grid sizes (j_1..j_n) for cuboidal presentations; empty for free ones.
  std::vector<int> shape;
  // The generating globular set (unit-step cells for cuboidal shapes).
  core::GlobularSet gens;
  // All presented cells; contains the generators cellwise.
  core::GlobularSet cells;
  // Interpretation of each presented cell as a composite of generators.
  std::map<std::string, core::LabelledDiagram> image;
};

// Deterministic cell names: points "a<u>", higher cells
// "c<m>(<u1>-<v1>,...;<z>)" with one span per composition axis and the level
// index z after the semicolon.
std::string cuboidal_point(int u);
std::string cuboidal_cell(int m, const std::vector<std::pair<int, int>>& spans,
                          int z);

// The grid presentation on shape (j_1..j_n), n >= 1:
//   - generators: points a_u (0 <= u <= j_1); for 0 < m < n, unit-step
//     m-cells over axes 1..m at every level z in [0, j_{m+1}]; at m = n,
//     unit-step cells with level z in [1, j_n];
//   - presented cells: the same index pattern with arbitrary spans
//     u_l < v_l on each axis;
//   - boundaries drop the last span (keeping its endpoint as the new level);
//     top-dimension boundaries step the level from z to z-1 / z;
//   - each presented cell is interpreted as the composite of the unit-step
//     generators filling its spans, so unit-span cells are interpreted by
//     themselves.
// Throws std::invalid_argument unless the shape is a canonical index object.
Presentation cuboidal_presentation(const std::vector<int>& shape);

// Every cell is its own generator, interpreted by the one-leaf diagram.
Presentation free_presentation(const core::GlobularSet& x);

// Structural soundness: generators form a sub-globular-set interpreted by
// their own one-leaf diagrams; every cell has a well-formed interpretation of
// its own dimension whose boundaries match the interpretations of its
// boundary cells.  Returns human-readable violations; empty means valid.
std::vector<std::string> presentation_validate(const Presentation& p);

}  // namespace globcat::penon
