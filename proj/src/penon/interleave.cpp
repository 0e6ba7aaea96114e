#include "penon/interleave.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

namespace globcat::penon {

namespace {

std::string gen_key(const std::string& name) { return "g:" + name; }
std::string ctr_key(int a, int b) {
  return "c:" + std::to_string(a) + "," + std::to_string(b);
}
std::string comp_key(int p, int second, int first) {
  return "m:" + std::to_string(p) + "," + std::to_string(second) + "," +
         std::to_string(first);
}

int intern(QStructure& q, QCell cell, const std::string& key) {
  int id = static_cast<int>(q.cells.size());
  q.cells.push_back(std::move(cell));
  q.by_dim[static_cast<std::size_t>(q.cells.back().dim)].push_back(id);
  q.index.emplace(key, id);
  return id;
}

void leaf_names(const QStructure& q, int id, std::vector<std::string>& out) {
  const QCell& c = q.at(id);
  switch (c.kind) {
    case QKind::Generating:
      out.push_back(c.gen);
      break;
    case QKind::Contraction:
      break;  // interpreted by an identity: contributes no generators
    case QKind::Composite:
      leaf_names(q, c.first, out);
      leaf_names(q, c.second, out);
      break;
  }
}

bool is_two_generator_composite(const QStructure& q, int id) {
  const QCell& c = q.at(id);
  return c.kind == QKind::Composite && c.comp_p == 0 &&
         q.at(c.first).kind == QKind::Generating &&
         q.at(c.second).kind == QKind::Generating;
}

CtrClass classify_ctr(const QStructure& q, int a, int b) {
  std::vector<std::string> la, lb;
  leaf_names(q, a, la);
  leaf_names(q, b, lb);
  if (la == lb) return CtrClass::Algebraic;
  bool tri = (q.at(a).kind == QKind::Generating &&
              is_two_generator_composite(q, b)) ||
             (q.at(b).kind == QKind::Generating &&
              is_two_generator_composite(q, a));
  return tri ? CtrClass::Triangular : CtrClass::Derived;
}

void register_top(QStructure& q, int id) {
  if (q.at(id).dim != 2) return;
  TopTriple t = top_of(q, id);
  auto it = q.top.find(t.key());
  if (it == q.top.end()) {
    q.top.emplace(t.key(), std::move(t));
  } else if (t.depth < it->second.depth) {
    it->second = std::move(t);
  }
}

// Find-or-intern a dimension-1 composite; -1 when it would exceed the depth
// bound or take a contraction cell as a factor (identity padding adds no
// new interpretations).  Assumes the arguments are composable 1-cells.
int find_or_intern_comp1(QStructure& q, int second, int first) {
  if (q.at(second).kind == QKind::Contraction ||
      q.at(first).kind == QKind::Contraction)
    return -1;
  std::string key = comp_key(0, second, first);
  if (auto it = q.index.find(key); it != q.index.end()) return it->second;
  int d = std::max(q.at(second).depth, q.at(first).depth) + 1;
  if (d > q.depth) return -1;
  QCell c;
  c.kind = QKind::Composite;
  c.dim = 1;
  c.depth = d;
  c.comp_p = 0;
  c.second = second;
  c.first = first;
  c.src = q.at(first).src;
  c.tgt = q.at(second).tgt;
  c.image =
      core::tx_compose(q.pres.gens, q.at(second).image, q.at(first).image, 0);
  return intern(q, std::move(c), key);
}

}  // namespace

const QCell& QStructure::at(int id) const {
  return cells.at(static_cast<std::size_t>(id));
}

int QStructure::find_gen(const std::string& name) const {
  auto it = index.find(gen_key(name));
  return it == index.end() ? -1 : it->second;
}

QStructure interleave(const Presentation& p, int depth) {
  if (p.cells.n != 2) {
    throw std::invalid_argument(
        "interleave: the presentation must be 2-dimensional");
  }
  auto errs = presentation_validate(p);
  if (!errs.empty()) {
    throw std::invalid_argument("interleave: invalid presentation: " +
                                errs.front());
  }
  if (depth < 0) throw std::invalid_argument("interleave: negative depth");

  QStructure q;
  q.pres = p;
  q.depth = depth;
  q.by_dim.resize(3);

  // Dimension 0: the presented points.
  for (const auto& name : p.cells.cells[0]) {
    QCell c;
    c.kind = QKind::Generating;
    c.dim = 0;
    c.gen = name;
    c.image = p.image.at(name);
    intern(q, std::move(c), gen_key(name));
  }

  // Dimension 1, generating cells.
  for (const auto& name : p.cells.cells[1]) {
    QCell c;
    c.kind = QKind::Generating;
    c.dim = 1;
    c.gen = name;
    c.src = q.find_gen(p.cells.src_of(name));
    c.tgt = q.find_gen(p.cells.tgt_of(name));
    c.image = p.image.at(name);
    intern(q, std::move(c), gen_key(name));
  }

  // Dimension 1, contraction phase: parallel equal-image pairs of points.
  for (int a : q.by_dim[0]) {
    for (int b : q.by_dim[0]) {
      if (!(q.at(a).image == q.at(b).image)) continue;
      q_ctr(q, a, b);
    }
  }

  // Dimension 1, composite phase, layered by nesting depth.
  std::vector<int> pool;
  for (int id : q.by_dim[1]) {
    if (q.at(id).kind == QKind::Generating) pool.push_back(id);
  }
  for (int d = 1; d <= depth; ++d) {
    std::vector<int> snapshot = pool;
    for (int s : snapshot) {
      for (int f : snapshot) {
        if (std::max(q.at(s).depth, q.at(f).depth) + 1 != d) continue;
        if (q.at(f).tgt != q.at(s).src) continue;
        int made = find_or_intern_comp1(q, s, f);
        if (made >= 0 &&
            std::find(pool.begin(), pool.end(), made) == pool.end()) {
          pool.push_back(made);
        }
      }
    }
  }

  // Dimension 2, generating cells.
  for (const auto& name : p.cells.cells[2]) {
    QCell c;
    c.kind = QKind::Generating;
    c.dim = 2;
    c.gen = name;
    c.src = q.find_gen(p.cells.src_of(name));
    c.tgt = q.find_gen(p.cells.tgt_of(name));
    c.image = p.image.at(name);
    int id = intern(q, std::move(c), gen_key(name));
    register_top(q, id);
  }

  // Dimension 2, contraction phase: every parallel equal-image pair of
  // 1-cells present at the bound.
  std::map<std::tuple<int, int, std::string>, std::vector<int>> classes;
  for (int id : q.by_dim[1]) {
    classes[{q.at(id).src, q.at(id).tgt, core::tx_to_string(q.at(id).image)}]
        .push_back(id);
  }
  for (const auto& [sig, members] : classes) {
    for (int a : members) {
      for (int b : members) {
        q_ctr(q, a, b);
      }
    }
  }

  // Top-dimension closure under both compositions.
  std::vector<TopTriple> seeds;
  for (int id : q.by_dim[2]) seeds.push_back(top_of(q, id));
  q.top = top_closure(q, std::move(seeds));
  return q;
}

int q_ctr(QStructure& q, int a, int b) {
  const QCell& ca = q.at(a);
  const QCell& cb = q.at(b);
  if (ca.dim != cb.dim) {
    throw std::invalid_argument("q_ctr: dimension mismatch");
  }
  if (ca.dim >= 2) {
    throw std::invalid_argument(
        "q_ctr: contraction endpoints must lie below the top dimension");
  }
  if (ca.src != cb.src || ca.tgt != cb.tgt) {
    throw std::invalid_argument("q_ctr: endpoints are not parallel");
  }
  if (!(ca.image == cb.image)) {
    throw std::invalid_argument(
        "q_ctr: endpoints have different interpretations");
  }
  std::string key = ctr_key(a, b);
  if (auto it = q.index.find(key); it != q.index.end()) return it->second;
  QCell c;
  c.kind = QKind::Contraction;
  c.dim = ca.dim + 1;
  c.ctr_a = a;
  c.ctr_b = b;
  c.src = a;
  c.tgt = b;
  c.image = core::tx_identity(ca.image);
  c.cls = classify_ctr(q, a, b);
  int id = intern(q, std::move(c), key);
  register_top(q, id);
  return id;
}

int q_compose(QStructure& q, int p, int second, int first) {
  const QCell& cs = q.at(second);
  const QCell& cf = q.at(first);
  if (cs.dim != cf.dim) {
    throw std::invalid_argument("q_compose: dimension mismatch");
  }
  if (p < 0 || p >= cs.dim) {
    throw std::invalid_argument("q_compose: bad gluing dimension");
  }
  if (cs.dim == 1 &&
      (cs.kind == QKind::Contraction || cf.kind == QKind::Contraction)) {
    throw std::invalid_argument(
        "q_compose: contraction cells cannot be composite factors");
  }
  std::string key = comp_key(p, second, first);
  if (auto it = q.index.find(key); it != q.index.end()) return it->second;

  int d = std::max(cs.depth, cf.depth) + 1;
  if (d > q.depth) {
    throw std::out_of_range("q_compose: composite exceeds the depth bound");
  }
  QCell c;
  c.kind = QKind::Composite;
  c.dim = cs.dim;
  c.depth = d;
  c.comp_p = p;
  c.second = second;
  c.first = first;
  if (p == cs.dim - 1) {
    if (cf.tgt != cs.src) {
      throw std::invalid_argument("q_compose: cells are not composable");
    }
    c.src = cf.src;
    c.tgt = cs.tgt;
  } else {
    // Binary 2-cells glued along objects: compose the boundary 1-cells.
    if (q.at(cf.src).tgt != q.at(cs.src).src) {
      throw std::invalid_argument("q_compose: cells are not composable");
    }
    int bsrc = find_or_intern_comp1(q, cs.src, cf.src);
    int btgt = find_or_intern_comp1(q, cs.tgt, cf.tgt);
    if (bsrc < 0 || btgt < 0) {
      throw std::out_of_range(
          "q_compose: boundary composite exceeds the depth bound");
    }
    c.src = bsrc;
    c.tgt = btgt;
  }
  c.image = core::tx_compose(q.pres.gens, cs.image, cf.image, p);
  int id = intern(q, std::move(c), key);
  register_top(q, id);
  return id;
}

bool q_equal(const QStructure& q, int c1, int c2) {
  const QCell& a = q.at(c1);
  const QCell& b = q.at(c2);
  if (a.dim != b.dim) {
    throw std::invalid_argument("q_equal: dimension mismatch");
  }
  if (a.dim == 2) {
    return a.src == b.src && a.tgt == b.tgt && a.image == b.image;
  }
  return c1 == c2;
}

TopTriple top_of(const QStructure& q, int id) {
  const QCell& c = q.at(id);
  if (c.dim != 2) {
    throw std::invalid_argument("top_of: not a top-dimension cell");
  }
  TopTriple t;
  t.src = c.src;
  t.tgt = c.tgt;
  t.image = c.image;
  t.image_key = core::tx_to_string(c.image);
  t.depth = c.depth;
  return t;
}

std::optional<TopTriple> top_vcomp(QStructure& q, const TopTriple& second,
                                   const TopTriple& first) {
  if (first.tgt != second.src) return std::nullopt;
  int d = std::max(first.depth, second.depth) + 1;
  if (d > q.depth) return std::nullopt;
  TopTriple t;
  t.src = first.src;
  t.tgt = second.tgt;
  t.image = core::tx_compose(q.pres.gens, second.image, first.image, 1);
  t.image_key = core::tx_to_string(t.image);
  t.depth = d;
  return t;
}

std::optional<TopTriple> top_hcomp(QStructure& q, const TopTriple& second,
                                   const TopTriple& first) {
  if (q.at(first.src).tgt != q.at(second.src).src) return std::nullopt;
  int d = std::max(first.depth, second.depth) + 1;
  if (d > q.depth) return std::nullopt;
  int bsrc = find_or_intern_comp1(q, second.src, first.src);
  int btgt = find_or_intern_comp1(q, second.tgt, first.tgt);
  if (bsrc < 0 || btgt < 0) return std::nullopt;
  TopTriple t;
  t.src = bsrc;
  t.tgt = btgt;
  t.image = core::tx_compose(q.pres.gens, second.image, first.image, 0);
  t.image_key = core::tx_to_string(t.image);
  t.depth = d;
  return t;
}

std::map<std::tuple<int, int, std::string>, TopTriple> top_closure(
    QStructure& q, std::vector<TopTriple> seeds) {
  std::map<std::tuple<int, int, std::string>, TopTriple> best;
  std::vector<TopTriple> items;
  auto push = [&](const TopTriple& t) {
    auto it = best.find(t.key());
    if (it == best.end()) {
      best.emplace(t.key(), t);
      items.push_back(t);
    } else if (t.depth < it->second.depth) {
      it->second = t;
      items.push_back(t);
    }
  };
  for (const auto& s : seeds) push(s);
  for (std::size_t i = 0; i < items.size(); ++i) {
    TopTriple a = items[i];
    for (std::size_t j = 0; j <= i; ++j) {
      TopTriple b = items[j];
      if (auto t = top_vcomp(q, a, b)) push(*t);
      if (auto t = top_vcomp(q, b, a)) push(*t);
      if (auto t = top_hcomp(q, a, b)) push(*t);
      if (auto t = top_hcomp(q, b, a)) push(*t);
    }
  }
  return best;
}

std::vector<std::pair<TopTriple, TopTriple>> q_parallel_distinct(
    const QStructure& q) {
  std::vector<std::pair<TopTriple, TopTriple>> out;
  std::map<std::pair<int, int>, std::vector<const TopTriple*>> groups;
  for (const auto& [key, t] : q.top) {
    groups[{t.src, t.tgt}].push_back(&t);
  }
  for (const auto& [sig, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        out.push_back({*members[i], *members[j]});
      }
    }
  }
  return out;
}

QInventory q_inventory(const QStructure& q) {
  QInventory inv;
  inv.generating0 = static_cast<int>(q.by_dim[0].size());
  for (int id : q.by_dim[1]) {
    switch (q.at(id).kind) {
      case QKind::Generating:
        ++inv.generating1;
        break;
      case QKind::Contraction:
        ++inv.contraction1;
        break;
      case QKind::Composite:
        ++inv.composite1;
        break;
    }
  }
  for (int id : q.by_dim[2]) {
    const QCell& c = q.at(id);
    if (c.kind == QKind::Generating) {
      ++inv.generating2;
    } else if (c.kind == QKind::Contraction) {
      switch (c.cls) {
        case CtrClass::Algebraic:
          ++inv.algebraic2;
          break;
        case CtrClass::Triangular:
          ++inv.triangular2;
          break;
        case CtrClass::Derived:
          ++inv.derived2;
          break;
        case CtrClass::NotContraction:
          break;
      }
    }
  }
  inv.top_cells = static_cast<int>(q.top.size());
  return inv;
}

std::string q_cell_to_string(const QStructure& q, int id) {
  const QCell& c = q.at(id);
  switch (c.kind) {
    case QKind::Generating:
      return c.gen;
    case QKind::Contraction:
      return "ctr(" + q_cell_to_string(q, c.ctr_a) + " => " +
             q_cell_to_string(q, c.ctr_b) + ")";
    case QKind::Composite:
      return "(" + q_cell_to_string(q, c.second) + " o" +
             std::to_string(c.comp_p) + " " + q_cell_to_string(q, c.first) +
             ")";
  }
  return "?";
}

nlohmann::json q_to_json(const QStructure& q) {
  QInventory inv = q_inventory(q);
  nlohmann::json j;
  j["shape"] = q.pres.shape;
  j["depth"] = q.depth;
  j["counts"] = {{"points", inv.generating0},
                 {"generating1", inv.generating1},
                 {"contraction1", inv.contraction1},
                 {"composite1", inv.composite1},
                 {"generating2", inv.generating2},
                 {"algebraic2", inv.algebraic2},
                 {"triangular2", inv.triangular2},
                 {"derived2", inv.derived2},
                 {"top_cells", inv.top_cells}};
  nlohmann::json wit = nlohmann::json::array();
  for (const auto& [a, b] : q_parallel_distinct(q)) {
    wit.push_back("parallel top cells with distinct interpretations: " +
                  a.image_key + " vs " + b.image_key);
  }
  j["parallel_distinct"] = wit;
  return j;
}

}  // namespace globcat::penon
