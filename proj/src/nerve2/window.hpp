#pragma once
// Finite windows onto the two-variable nerve of a bicategory, the window
// maps induced by strict functors, and direct/streamed forms of the gluing
// comparisons for bidegrees too large to tabulate in full.

#include <map>
#include <string>
#include <vector>

#include "bicat/bicat.hpp"
#include "nerve2/nerve.hpp"
#include "precat/presheaf.hpp"
#include "precat/segal.hpp"

namespace globcat::nerve2 {

struct NerveWindow {
  precat::PresheafWindow window;
  // Elements per object, aligned with the window labels.
  std::map<theta::ThetaObject, std::vector<NerveElement>> elements;
};

// Tabulate the nerve on every canonical bidegree within the bound.
NerveWindow nerve_window(const bicat::Bicategory& b, int bound);

// The window map induced by a strict functor (elementwise application).
precat::WindowMap nerve_map(const NerveWindow& dom, const NerveWindow& cod,
                            const bicat::StrictFunctor2& f);

// The object-direction Segal map at width j, materialising only levels 0
// and 1 (residual bound 1): exactly what the surjective/full/faithful
// checks of `contractible` consume.
precat::WindowMap segal_vertical_direct(const bicat::Bicategory& b, int j);

// Streamed certificate that the level-direction Segal map at bidegree
// (j, k) is a bijection: chains of k matching (j,1)-elements correspond
// one-to-one with (j,k)-elements, by gluing each chain and revalidating
// every axiom on an integer-packed form of the data.
struct StreamReport {
  long long chains = 0;
  long long valid = 0;
  bool pass = false;
  std::string message;
};

StreamReport segal_stream_certify(const bicat::Bicategory& b, int j, int k);

}  // namespace globcat::nerve2
