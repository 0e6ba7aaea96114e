#include "penon/presentation.hpp"

#include <stdexcept>
#include <string>

#include "theta/theta.hpp"

namespace globcat::penon {

namespace {

using core::GlobularSet;
using core::LabelledDiagram;
using core::LDNode;

// All tuples of spans (u_l, v_l) with 0 <= u_l < v_l <= bounds[l], in
// lexicographic order; unit_only restricts to v_l == u_l + 1.
std::vector<std::vector<std::pair<int, int>>> span_tuples(
    const std::vector<int>& bounds, bool unit_only) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  auto rec = [&](auto&& self, std::size_t axis) -> void {
    if (axis == bounds.size()) {
      out.push_back(cur);
      return;
    }
    for (int u = 0; u < bounds[axis]; ++u) {
      int vmax = unit_only ? u + 1 : bounds[axis];
      for (int v = u + 1; v <= vmax; ++v) {
        cur.push_back({u, v});
        self(self, axis + 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0);
  return out;
}

// The grid composite interpreting the cell with the given spans and level:
// nodes at nesting depth l run over the unit steps of span l, and every leaf
// is the unit-step cell at the current grid position.  Top-dimension cells
// carry no span on the last axis, so their leaves sit one wrap deeper.
LDNode grid_tree(int n, int m, const std::vector<std::pair<int, int>>& spans,
                 int z, std::size_t depth,
                 std::vector<std::pair<int, int>>& prefix) {
  if (depth == spans.size()) {
    LDNode leaf;
    leaf.anchor = cuboidal_cell(m, prefix, z);
    if (m == n) {
      LDNode wrap;
      wrap.blocks.push_back(std::move(leaf));
      return wrap;
    }
    return leaf;
  }
  LDNode node;
  for (int w = spans[depth].first; w < spans[depth].second; ++w) {
    prefix.push_back({w, w + 1});
    node.blocks.push_back(grid_tree(n, m, spans, z, depth + 1, prefix));
    prefix.pop_back();
  }
  return node;
}

void add_cuboidal_cells(const std::vector<int>& shape, bool unit_only,
                        GlobularSet& out) {
  int n = static_cast<int>(shape.size());
  out.n = n;
  out.cells.assign(static_cast<std::size_t>(n) + 1, {});
  for (int u = 0; u <= shape[0]; ++u) out.cells[0].push_back(cuboidal_point(u));
  for (int m = 1; m <= n; ++m) {
    int axes = (m < n) ? m : n - 1;
    std::vector<int> bounds(shape.begin(), shape.begin() + axes);
    int zlo = (m < n) ? 0 : 1;
    int zhi = (m < n) ? shape[m] : shape[n - 1];
    for (const auto& spans : span_tuples(bounds, unit_only)) {
      for (int z = zlo; z <= zhi; ++z) {
        std::string id = cuboidal_cell(m, spans, z);
        out.cells[m].push_back(id);
        if (m == 1 && n == 1) {
          out.src[id] = cuboidal_point(z - 1);
          out.tgt[id] = cuboidal_point(z);
        } else if (m == 1) {
          out.src[id] = cuboidal_point(spans[0].first);
          out.tgt[id] = cuboidal_point(spans[0].second);
        } else if (m < n) {
          std::vector<std::pair<int, int>> head(spans.begin(),
                                                spans.end() - 1);
          out.src[id] = cuboidal_cell(m - 1, head, spans.back().first);
          out.tgt[id] = cuboidal_cell(m - 1, head, spans.back().second);
        } else {
          out.src[id] = cuboidal_cell(m - 1, spans, z - 1);
          out.tgt[id] = cuboidal_cell(m - 1, spans, z);
        }
      }
    }
  }
}

}  // namespace

std::string cuboidal_point(int u) { return "a" + std::to_string(u); }

std::string cuboidal_cell(int m, const std::vector<std::pair<int, int>>& spans,
                          int z) {
  std::string s = "c" + std::to_string(m) + "(";
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(spans[i].first) + "-" + std::to_string(spans[i].second);
  }
  s += ";" + std::to_string(z) + ")";
  return s;
}

Presentation cuboidal_presentation(const std::vector<int>& shape) {
  if (shape.empty()) {
    throw std::invalid_argument("cuboidal_presentation: empty shape");
  }
  if (!theta::theta_object_is_canonical(shape)) {
    throw std::invalid_argument(
        "cuboidal_presentation: shape is not a canonical index object");
  }
  Presentation p;
  p.shape = shape;
  add_cuboidal_cells(shape, /*unit_only=*/true, p.gens);
  add_cuboidal_cells(shape, /*unit_only=*/false, p.cells);

  int n = static_cast<int>(shape.size());
  for (const auto& id : p.cells.cells[0]) {
    p.image.emplace(id, core::tx_generator(p.gens, id));
  }
  for (int m = 1; m <= n; ++m) {
    int axes = (m < n) ? m : n - 1;
    std::vector<int> bounds(shape.begin(), shape.begin() + axes);
    int zlo = (m < n) ? 0 : 1;
    int zhi = (m < n) ? shape[m] : shape[n - 1];
    for (const auto& spans : span_tuples(bounds, /*unit_only=*/false)) {
      for (int z = zlo; z <= zhi; ++z) {
        std::vector<std::pair<int, int>> prefix;
        LabelledDiagram d;
        d.dim = m;
        d.root = grid_tree(n, m, spans, z, 0, prefix);
        p.image.emplace(cuboidal_cell(m, spans, z), std::move(d));
      }
    }
  }
  return p;
}

Presentation free_presentation(const core::GlobularSet& x) {
  Presentation p;
  p.gens = x;
  p.cells = x;
  for (const auto& level : x.cells) {
    for (const auto& id : level) {
      p.image.emplace(id, core::tx_generator(x, id));
    }
  }
  return p;
}

std::vector<std::string> presentation_validate(const Presentation& p) {
  std::vector<std::string> errs;
  for (const auto& e : core::validate_globular(p.gens)) {
    errs.push_back("gens: " + e);
  }
  for (const auto& e : core::validate_globular(p.cells)) {
    errs.push_back("cells: " + e);
  }
  if (!errs.empty()) return errs;
  if (p.gens.n != p.cells.n) {
    errs.push_back("generator and cell dimensions disagree");
    return errs;
  }
  for (int m = 0; m <= p.gens.n; ++m) {
    for (const auto& id : p.gens.cells[m]) {
      if (!p.cells.has_cell(id, m)) {
        errs.push_back("generator " + id + " is not a presented cell");
        continue;
      }
      auto it = p.image.find(id);
      if (it != p.image.end() &&
          !(it->second == core::tx_generator(p.gens, id))) {
        errs.push_back("generator " + id +
                       " is not interpreted by its own diagram");
      }
    }
  }
  for (int m = 0; m <= p.cells.n; ++m) {
    for (const auto& id : p.cells.cells[m]) {
      auto it = p.image.find(id);
      if (it == p.image.end()) {
        errs.push_back("cell " + id + " has no interpretation");
        continue;
      }
      const LabelledDiagram& d = it->second;
      if (d.dim != m) {
        errs.push_back("cell " + id + " has an interpretation of dimension " +
                       std::to_string(d.dim));
        continue;
      }
      auto cell_errs = core::tx_validate(p.gens, d);
      for (const auto& e : cell_errs) {
        errs.push_back("cell " + id + ": " + e);
      }
      if (!cell_errs.empty() || m == 0) continue;
      if (!(core::tx_src(p.gens, d) == p.image.at(p.cells.src_of(id)))) {
        errs.push_back("cell " + id +
                       ": interpretation source differs from the source "
                       "cell's interpretation");
      }
      if (!(core::tx_tgt(p.gens, d) == p.image.at(p.cells.tgt_of(id)))) {
        errs.push_back("cell " + id +
                       ": interpretation target differs from the target "
                       "cell's interpretation");
      }
    }
  }
  return errs;
}

}  // namespace globcat::penon
