#pragma once
// Unbiased contraction: given a diagram shape and a parallel pair of terms
// bounding it, produce a term of that shape between exactly those boundaries
// using only unit cells, composites and binary contraction cells.

#include "opterm/term.hpp"

namespace globcat::opterm {

struct ContractionProblem {
  PastingDiagram pi;  // shape, dimension m >= 1
  Term a;             // source term, dimension m-1, arity = boundary of pi
  Term b;             // target term, dimension m-1, parallel to a
};

// Validates the problem; throws std::invalid_argument on violations.
void check_contraction_problem(const ContractionProblem& prob);

// A term delta with term_arity(delta) == pi, term_src(delta) == a and
// term_tgt(delta) == b.  When pi is an identity diagram this is the single
// contraction cell gamma(a, b).
Term unbiased_delta(const ContractionProblem& prob);

}  // namespace globcat::opterm
