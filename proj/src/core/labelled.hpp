#pragma once
// Cells of the free strict omega-category on a finite globular set, in a
// canonical normal form.  A cell of dimension m is either an iterated
// identity on a single generating cell (a leaf) or a nonempty chain of
// blocks composed along 0-cells of the ambient hom, where each block is one
// nesting level deeper: its content lives between two fixed cells one
// dimension lower and is encoded by the same structure.  Two cells of the
// free category are equal iff their trees are equal.

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "core/globular.hpp"
#include "core/pasting.hpp"

namespace globcat::core {

struct LDNode {
  // Leaf (blocks empty): `anchor` names a generating cell whose dimension
  // equals the nesting depth of this node; the node stands for the iterated
  // identity on it.  Internal: a nonempty chain of blocks.
  std::string anchor;
  std::vector<LDNode> blocks;

  bool is_leaf() const { return blocks.empty(); }
  bool operator==(const LDNode&) const = default;
  std::strong_ordering operator<=>(const LDNode&) const;
};

struct LabelledDiagram {
  int dim = 0;
  LDNode root;

  bool operator==(const LabelledDiagram&) const = default;
  std::strong_ordering operator<=>(const LabelledDiagram&) const = default;
};

// Structural validation of `c` over `x`: anchors exist at the right
// dimensions, chains match up, nesting respects the dimension.  Returns
// human-readable violations; empty means valid.
std::vector<std::string> tx_validate(const GlobularSet& x,
                                     const LabelledDiagram& c);

// The generator `id` as a cell of the free category (singleton diagram).
LabelledDiagram tx_generator(const GlobularSet& x, const std::string& id);

// Identity cell (dimension +1) on `c`, and iterated version.
LabelledDiagram tx_identity(const LabelledDiagram& c);
LabelledDiagram tx_identity_iter(const LabelledDiagram& c, int times);

// Whether `c` is an identity cell; if so, the cell it is the identity on.
bool tx_is_identity(const LabelledDiagram& c);
LabelledDiagram tx_identity_base(const LabelledDiagram& c);

// Source/target boundary, one dimension down (requires dim >= 1).
LabelledDiagram tx_src(const GlobularSet& x, const LabelledDiagram& c);
LabelledDiagram tx_tgt(const GlobularSet& x, const LabelledDiagram& c);
// Iterated boundary down to dimension k.
LabelledDiagram tx_src_iter(const GlobularSet& x, const LabelledDiagram& c,
                            int k);
LabelledDiagram tx_tgt_iter(const GlobularSet& x, const LabelledDiagram& c,
                            int k);

// Composite of `second` after `first` along a shared p-boundary.  Throws
// std::invalid_argument naming the mismatched boundary cells when the
// p-boundaries disagree.
LabelledDiagram tx_compose(const GlobularSet& x, const LabelledDiagram& second,
                           const LabelledDiagram& first, int p);

// The underlying shape of `c`.
PastingDiagram tx_shape(const LabelledDiagram& c);

// Relabel generators along a globular map into another globular set.
LabelledDiagram tx_apply(const GlobularMap& f, const LabelledDiagram& c);

// Substitution: evaluate a diagram whose generators are themselves cells of
// the free category on `x`.  `outer` is a cell over `y`; `interp` assigns to
// each y-generator of dimension d a cell over `x` of dimension d.
LabelledDiagram tx_flatten(const GlobularSet& x, const GlobularSet& y,
                           const LabelledDiagram& outer,
                           const std::function<const LabelledDiagram&(
                               const std::string&)>& interp);

// All cells of dimension `dim` over `x` whose shape size is <= max_size,
// in a deterministic order.
std::vector<LabelledDiagram> tx_enumerate(const GlobularSet& x, int dim,
                                          std::size_t max_size);

std::string tx_to_string(const LabelledDiagram& c);

}  // namespace globcat::core
