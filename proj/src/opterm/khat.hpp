#pragma once
// Section of the arity map: for each pasting diagram a canonical term whose
// arity is exactly that diagram, together with the dimension-shift it is
// built from.

#include "opterm/term.hpp"

namespace globcat::opterm {

// Shift every index in a term up by one, wrapping its arity in a singleton
// one dimension higher.  Defined for terms built from eta, identities and
// composites only; atoms and proper contraction cells are rejected.
Term plus_shift(const Term& t);

// The canonical term with arity pi.
Term khat(const PastingDiagram& pi);

}  // namespace globcat::opterm
