#pragma once
// Terms denoting cells of an omega-operad over the coglobular family of
// shape collections.  Every term carries a dimension and an arity (a pasting
// diagram of the same dimension); sources and targets are terms one
// dimension down.

#include <memory>
#include <string>
#include <vector>

#include "core/pasting.hpp"

namespace globcat::opterm {

using core::PastingDiagram;

enum class TermKind { Eta, Comp, Gamma, Atom };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  int m = 0;                  // dimension
  PastingDiagram arity;       // cached; dimension m

  // Comp: right after left along a shared p-boundary.
  int p = -1;
  Term left, right;

  // Gamma: contraction cell from a to b (parallel, equal arity, dim m-1).
  Term ga, gb;

  // Atom: a named generator with explicit boundary terms.
  std::string name;
  Term atom_src, atom_tgt;
};

// Constructors (validating; throw std::invalid_argument on violations).
Term eta(int m);
Term comp(int m, int p, const Term& right, const Term& left);
Term gamma(const Term& a, const Term& b);
// Identity cell on t, one dimension up; realized as gamma(t, t).
Term id_on(const Term& t);
Term id_tower(const Term& t, int times);
Term atom(const std::string& name, int dim, const PastingDiagram& arity,
          const Term& src, const Term& tgt);

bool term_eq(const Term& a, const Term& b);

const PastingDiagram& term_arity(const Term& t);

// Source/target boundary, one dimension down.
Term term_src(const Term& t);
Term term_tgt(const Term& t);
Term term_src_iter(const Term& t, int k);
Term term_tgt_iter(const Term& t, int k);

// Whether t is an identity cell (gamma(x, x) for some x).
bool term_is_identity(const Term& t);
// Whether t is an iterated identity with at least `height` levels.
bool term_is_identity_tower(const Term& t, int height);

// Remove unit composites: a composite with an identity tower on the shared
// boundary rewrites to the other factor, recursively.
Term term_normalize(const Term& t);

std::string term_to_string(const Term& t);

// One cell for each way of composing a single top cell with a single top
// cell along each dimension p <= m <= n: the generating cells of the
// system-of-compositions collection, with their arities.
struct SoCCell {
  int m = 0;
  int p = 0;
  PastingDiagram arity;
};
std::vector<SoCCell> soc_collection(int n);

}  // namespace globcat::opterm
