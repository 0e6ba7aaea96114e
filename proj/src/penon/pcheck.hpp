#pragma once

#include <cstddef>
#include <vector>

#include "core/globular.hpp"
#include "penon/interleave.hpp"
#include "precat/segal.hpp"

namespace globcat::penon {

// Bounded audit of the comparison map from the interleaved free structure on
// a two-dimensional globular set to the free strict structure on the same
// generators.  Every interleaved cell carries its strict interpretation
// (`QCell::image`); the audit checks that, within the stated size bounds,
// the interpretation is
//   - surjective on points,
//   - full on strict 1-cells (every labelled 1-diagram is some cell's image),
//   - full on strict 2-cells (every labelled 2-diagram is hit by a top cell
//     between each pair of 1-cells interpreting its boundary), and
//   - faithful on top cells (parallel cells with equal images coincide).
//
// `size1` and `size2` are the labelled-diagram size bounds used for the two
// fullness sweeps; both default to depth + 1, the largest shape the bounded
// closure is guaranteed to reach from unit generators.
struct PMonadReport {
  int depth = 0;
  std::size_t size1 = 0;
  std::size_t size2 = 0;
  std::vector<precat::CheckItem> items;
  bool pass = false;
};

PMonadReport p_monad_check(const core::GlobularSet& x, int depth);

std::string pmonad_report_to_string(const PMonadReport& r);

}  // namespace globcat::penon
