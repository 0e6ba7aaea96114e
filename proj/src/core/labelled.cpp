#include "core/labelled.hpp"

#include <algorithm>
#include <stdexcept>

namespace globcat::core {

std::strong_ordering LDNode::operator<=>(const LDNode& other) const {
  if (auto c = anchor <=> other.anchor; c != 0) return c;
  return std::lexicographical_compare_three_way(
      blocks.begin(), blocks.end(), other.blocks.begin(), other.blocks.end());
}

namespace {

// Cells of x of dimension `dim` lying between `s` and `t` one dimension
// down; at dim == 0 the constraint is vacuous.
std::vector<std::string> cells_between(const GlobularSet& x, int dim,
                                       const std::string& s,
                                       const std::string& t) {
  std::vector<std::string> out;
  if (dim > x.n) return out;
  for (const auto& id : x.cells[dim]) {
    if (dim == 0 || (x.src_of(id) == s && x.tgt_of(id) == t))
      out.push_back(id);
  }
  return out;
}

// Cells one dimension below the content of a node at nesting depth e >= 1:
// the pair of (e-1)-cells the node's content lives between.
std::pair<std::string, std::string> hom_endpoints(const GlobularSet& x,
                                                  const LDNode& node, int e) {
  if (node.is_leaf())
    return {x.src_of(node.anchor), x.tgt_of(node.anchor)};
  auto inner = hom_endpoints(x, node.blocks.front(), e + 1);
  return {x.src_of(inner.first), x.tgt_of(inner.first)};
}

void validate_node(const GlobularSet& x, const LDNode& node, int e, int k,
                   std::vector<std::string>& errs) {
  if (node.is_leaf()) {
    if (!x.has_cell(node.anchor, e))
      errs.push_back("leaf anchor '" + node.anchor +
                     "' is not a cell of dimension " + std::to_string(e));
    return;
  }
  if (k < 1) {
    errs.push_back("chain node at content dimension 0");
    return;
  }
  for (const auto& b : node.blocks) validate_node(x, b, e + 1, k - 1, errs);
  if (!errs.empty()) return;
  for (std::size_t j = 0; j + 1 < node.blocks.size(); ++j) {
    auto a = hom_endpoints(x, node.blocks[j], e + 1);
    auto b = hom_endpoints(x, node.blocks[j + 1], e + 1);
    if (a.second != b.first)
      errs.push_back("blocks do not chain: " + a.second + " vs " + b.first);
  }
}

int max_leaf_depth(const LDNode& node, int e) {
  if (node.is_leaf()) return e;
  int d = 0;
  for (const auto& b : node.blocks)
    d = std::max(d, max_leaf_depth(b, e + 1));
  return d;
}

LDNode boundary_node(const GlobularSet& x, const LDNode& node, int k,
                     bool src_side) {
  if (node.is_leaf()) return node;
  if (k >= 2) {
    LDNode out;
    out.blocks.reserve(node.blocks.size());
    for (const auto& b : node.blocks)
      out.blocks.push_back(boundary_node(x, b, k - 1, src_side));
    return out;
  }
  // k == 1: the blocks form a path of edges one level deeper; its boundary
  // is the first (resp. last) endpoint of that path.
  LDNode out;
  if (src_side)
    out.anchor = x.src_of(node.blocks.front().anchor);
  else
    out.anchor = x.tgt_of(node.blocks.back().anchor);
  return out;
}

LDNode compose_node(const GlobularSet& x, const LDNode& n2, const LDNode& n1,
                    int p) {
  if (p == 0) {
    if (n1.is_leaf()) return n2;
    if (n2.is_leaf()) return n1;
    LDNode out;
    out.blocks = n1.blocks;
    out.blocks.insert(out.blocks.end(), n2.blocks.begin(), n2.blocks.end());
    return out;
  }
  if (n1.is_leaf()) return n2;
  if (n2.is_leaf()) return n1;
  if (n1.blocks.size() != n2.blocks.size())
    throw std::logic_error("tx_compose: chain length mismatch after "
                           "boundary check");
  LDNode out;
  out.blocks.reserve(n1.blocks.size());
  for (std::size_t j = 0; j < n1.blocks.size(); ++j)
    out.blocks.push_back(compose_node(x, n2.blocks[j], n1.blocks[j], p - 1));
  return out;
}

PastingDiagram shape_node(const LDNode& node, int k) {
  if (node.is_leaf())
    return k == 0 ? PastingDiagram::point() : PastingDiagram::empty(k);
  std::vector<PastingDiagram> entries;
  entries.reserve(node.blocks.size());
  for (const auto& b : node.blocks)
    entries.push_back(shape_node(b, k - 1));
  return PastingDiagram(k, std::move(entries));
}

LDNode apply_node(const GlobularMap& f, const LDNode& node) {
  if (node.is_leaf()) {
    LDNode out;
    out.anchor = f(node.anchor);
    return out;
  }
  LDNode out;
  out.blocks.reserve(node.blocks.size());
  for (const auto& b : node.blocks) out.blocks.push_back(apply_node(f, b));
  return out;
}

}  // namespace

std::vector<std::string> tx_validate(const GlobularSet& x,
                                     const LabelledDiagram& c) {
  std::vector<std::string> errs;
  if (c.dim < 0 || c.dim > x.n) {
    errs.push_back("diagram dimension out of range");
    return errs;
  }
  if (c.dim == 0 && !c.root.is_leaf()) {
    errs.push_back("0-dimensional diagram must be a single cell");
    return errs;
  }
  validate_node(x, c.root, 0, c.dim, errs);
  return errs;
}

LabelledDiagram tx_generator(const GlobularSet& x, const std::string& id) {
  int d = x.dim_of(id);
  if (d < 0) throw std::invalid_argument("tx_generator: unknown cell " + id);
  LDNode node;
  node.anchor = id;
  for (int e = d; e >= 1; --e) {
    LDNode wrap;
    wrap.blocks.push_back(std::move(node));
    node = std::move(wrap);
  }
  return {d, std::move(node)};
}

LabelledDiagram tx_identity(const LabelledDiagram& c) {
  return {c.dim + 1, c.root};
}

LabelledDiagram tx_identity_iter(const LabelledDiagram& c, int times) {
  return {c.dim + times, c.root};
}

bool tx_is_identity(const LabelledDiagram& c) {
  if (c.dim == 0) return false;
  return max_leaf_depth(c.root, 0) < c.dim;
}

LabelledDiagram tx_identity_base(const LabelledDiagram& c) {
  if (!tx_is_identity(c))
    throw std::invalid_argument("tx_identity_base: not an identity cell");
  return {c.dim - 1, c.root};
}

LabelledDiagram tx_src(const GlobularSet& x, const LabelledDiagram& c) {
  if (c.dim < 1)
    throw std::invalid_argument("tx_src: 0-cells have no boundary");
  return {c.dim - 1, boundary_node(x, c.root, c.dim, true)};
}

LabelledDiagram tx_tgt(const GlobularSet& x, const LabelledDiagram& c) {
  if (c.dim < 1)
    throw std::invalid_argument("tx_tgt: 0-cells have no boundary");
  return {c.dim - 1, boundary_node(x, c.root, c.dim, false)};
}

LabelledDiagram tx_src_iter(const GlobularSet& x, const LabelledDiagram& c,
                            int k) {
  LabelledDiagram cur = c;
  while (cur.dim > k) cur = tx_src(x, cur);
  return cur;
}

LabelledDiagram tx_tgt_iter(const GlobularSet& x, const LabelledDiagram& c,
                            int k) {
  LabelledDiagram cur = c;
  while (cur.dim > k) cur = tx_tgt(x, cur);
  return cur;
}

LabelledDiagram tx_compose(const GlobularSet& x, const LabelledDiagram& second,
                           const LabelledDiagram& first, int p) {
  if (first.dim != second.dim)
    throw std::invalid_argument("tx_compose: dimension mismatch");
  if (p < 0 || p >= first.dim)
    throw std::invalid_argument("tx_compose: need 0 <= p < dim");
  LabelledDiagram t1 = tx_tgt_iter(x, first, p);
  LabelledDiagram s2 = tx_src_iter(x, second, p);
  if (!(t1 == s2))
    throw std::invalid_argument("tx_compose: boundary mismatch at " +
                                std::to_string(p) + ": " + tx_to_string(t1) +
                                " vs " + tx_to_string(s2));
  return {first.dim, compose_node(x, second.root, first.root, p)};
}

PastingDiagram tx_shape(const LabelledDiagram& c) {
  return shape_node(c.root, c.dim);
}

LabelledDiagram tx_apply(const GlobularMap& f, const LabelledDiagram& c) {
  return {c.dim, apply_node(f, c.root)};
}

namespace {

LabelledDiagram flatten_node(const GlobularSet& x, const LDNode& node, int e,
                             int k,
                             const std::function<const LabelledDiagram&(
                                 const std::string&)>& interp) {
  if (node.is_leaf()) {
    const LabelledDiagram& base = interp(node.anchor);
    if (base.dim != e)
      throw std::invalid_argument(
          "tx_flatten: substituted cell has wrong dimension for " +
          node.anchor);
    return tx_identity_iter(base, k);
  }
  LabelledDiagram acc = flatten_node(x, node.blocks.front(), e + 1, k - 1,
                                     interp);
  for (std::size_t j = 1; j < node.blocks.size(); ++j) {
    LabelledDiagram next = flatten_node(x, node.blocks[j], e + 1, k - 1,
                                        interp);
    acc = tx_compose(x, next, acc, e);
  }
  return acc;
}

}  // namespace

LabelledDiagram tx_flatten(const GlobularSet& x, const GlobularSet& /*y*/,
                           const LabelledDiagram& outer,
                           const std::function<const LabelledDiagram&(
                               const std::string&)>& interp) {
  return flatten_node(x, outer.root, 0, outer.dim, interp);
}

namespace {

// All nodes at nesting depth e with content dimension k, confined between
// s and t (ignored when e == 0), with at most `budget` chain entries in
// total across all levels.
std::vector<LDNode> enum_node(const GlobularSet& x, int e, int k,
                              const std::string& s, const std::string& t,
                              std::size_t budget);

// Chains b_1..b_i (i >= 1) through points of dimension e between s and t
// (constraints vacuous at e == 0).  Returns all (chain, cost) pairs.
void enum_chains(const GlobularSet& x, int e, int k, const std::string& from,
                 std::size_t budget, std::vector<LDNode>& current,
                 std::vector<std::vector<LDNode>>& out) {
  if (!current.empty()) out.push_back(current);
  if (budget == 0) return;
  // Extend by one block from `from` to any next point.
  std::vector<std::string> points =
      e == 0 ? x.cells[0]
             : cells_between(x, e, x.src_of(from), x.tgt_of(from));
  for (const auto& q : points) {
    // A block costs 1 entry plus its own content.
    for (auto& b : enum_node(x, e + 1, k - 1, from, q, budget - 1)) {
      std::size_t cost = 1 + shape_node(b, k - 1).size();
      if (cost > budget) continue;
      current.push_back(std::move(b));
      enum_chains(x, e, k, q, budget - cost, current, out);
      current.pop_back();
    }
  }
}

std::vector<LDNode> enum_node(const GlobularSet& x, int e, int k,
                              const std::string& s, const std::string& t,
                              std::size_t budget) {
  std::vector<LDNode> out;
  // Leaves: iterated identities on cells of dimension e in the hom.
  for (const auto& id : cells_between(x, e, s, t)) {
    LDNode leaf;
    leaf.anchor = id;
    out.push_back(std::move(leaf));
  }
  if (k == 0) return out;
  // Chains.
  std::vector<std::string> starts =
      e == 0 ? x.cells[0] : cells_between(x, e, s, t);
  // A chain's blocks live one level deeper, between chain points of
  // dimension e... the chain points for content at depth e+1 are cells of
  // dimension e.  Enumerate by walking from each start point.
  for (const auto& p0 : starts) {
    std::vector<LDNode> current;
    std::vector<std::vector<LDNode>> chains;
    enum_chains(x, e, k, p0, budget, current, chains);
    for (auto& ch : chains) {
      LDNode node;
      node.blocks = std::move(ch);
      out.push_back(std::move(node));
    }
  }
  return out;
}

}  // namespace

std::vector<LabelledDiagram> tx_enumerate(const GlobularSet& x, int dim,
                                          std::size_t max_size) {
  std::vector<LabelledDiagram> out;
  if (dim > x.n || dim < 0) return out;
  if (dim == 0) {
    for (const auto& id : x.cells[0]) out.push_back(tx_generator(x, id));
    return out;
  }
  for (auto& node : enum_node(x, 0, dim, "", "", max_size))
    out.push_back({dim, std::move(node)});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string tx_to_string(const LabelledDiagram& c) {
  std::function<std::string(const LDNode&)> go = [&](const LDNode& n) {
    if (n.is_leaf()) return n.anchor;
    std::string s = "[";
    for (std::size_t j = 0; j < n.blocks.size(); ++j) {
      if (j) s += "|";
      s += go(n.blocks[j]);
    }
    s += "]";
    return s;
  };
  return std::to_string(c.dim) + "#" + go(c.root);
}

}  // namespace globcat::core
