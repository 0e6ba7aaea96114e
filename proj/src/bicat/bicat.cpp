#include "bicat/bicat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace globcat::bicat {

const Bicategory::One& Bicategory::one(const std::string& id) const {
  for (const auto& f : ones)
    if (f.id == id) return f;
  throw std::invalid_argument("Bicategory: unknown 1-cell " + id);
}

const Bicategory::Two& Bicategory::two(const std::string& id) const {
  for (const auto& a : twos)
    if (a.id == id) return a;
  throw std::invalid_argument("Bicategory: unknown 2-cell " + id);
}

bool Bicategory::is_one(const std::string& id) const {
  for (const auto& f : ones)
    if (f.id == id) return true;
  return false;
}

bool Bicategory::is_two(const std::string& id) const {
  for (const auto& a : twos)
    if (a.id == id) return true;
  return false;
}

const std::string& Bicategory::id1_of(const std::string& o) const {
  auto it = id1.find(o);
  if (it == id1.end())
    throw std::invalid_argument("Bicategory: no identity 1-cell on " + o);
  return it->second;
}

const std::string& Bicategory::id2_of(const std::string& f) const {
  auto it = id2.find(f);
  if (it == id2.end())
    throw std::invalid_argument("Bicategory: no identity 2-cell on " + f);
  return it->second;
}

const std::string& Bicategory::hc1(const std::string& g,
                                   const std::string& f) const {
  auto it = hcomp1.find({g, f});
  if (it == hcomp1.end())
    throw std::invalid_argument("Bicategory: no composite " + g + " . " + f);
  return it->second;
}

const std::string& Bicategory::vc(const std::string& b,
                                  const std::string& a) const {
  auto it = vcomp2.find({b, a});
  if (it == vcomp2.end())
    throw std::invalid_argument("Bicategory: no vertical composite " + b +
                                " . " + a);
  return it->second;
}

const std::string& Bicategory::hc2(const std::string& b,
                                   const std::string& a) const {
  auto it = hcomp2.find({b, a});
  if (it == hcomp2.end())
    throw std::invalid_argument("Bicategory: no horizontal composite " + b +
                                " * " + a);
  return it->second;
}

const std::string& Bicategory::assoc_of(const std::string& h,
                                        const std::string& g,
                                        const std::string& f) const {
  auto it = assoc.find({h, g, f});
  if (it == assoc.end())
    throw std::invalid_argument("Bicategory: no associator at (" + h + ", " +
                                g + ", " + f + ")");
  return it->second;
}

const std::string& Bicategory::lunit_of(const std::string& f) const {
  auto it = lunit.find(f);
  if (it == lunit.end())
    throw std::invalid_argument("Bicategory: no left unitor at " + f);
  return it->second;
}

const std::string& Bicategory::runit_of(const std::string& f) const {
  auto it = runit.find(f);
  if (it == runit.end())
    throw std::invalid_argument("Bicategory: no right unitor at " + f);
  return it->second;
}

bool two_invertible(const Bicategory& b, const std::string& alpha) {
  return two_inverse(b, alpha).has_value();
}

std::optional<std::string> two_inverse(const Bicategory& b,
                                       const std::string& alpha) {
  const auto& a = b.two(alpha);
  for (const auto& cand : b.twos) {
    if (cand.dom != a.cod || cand.cod != a.dom) continue;
    auto down = b.vcomp2.find({cand.id, alpha});
    auto up = b.vcomp2.find({alpha, cand.id});
    if (down == b.vcomp2.end() || up == b.vcomp2.end()) continue;
    if (down->second == b.id2_of(a.dom) && up->second == b.id2_of(a.cod))
      return cand.id;
  }
  return std::nullopt;
}

std::vector<std::string> bicat_validate(const Bicategory& b,
                                        std::size_t max_errors) {
  std::vector<std::string> errs;
  auto report = [&](std::string msg) {
    if (errs.size() < max_errors) errs.push_back(std::move(msg));
  };
  auto done = [&] { return errs.size() >= max_errors; };

  std::set<std::string> obj_set(b.objects.begin(), b.objects.end());
  if (obj_set.size() != b.objects.size()) report("duplicate objects");
  std::set<std::string> one_ids, two_ids;
  for (const auto& f : b.ones) {
    if (!one_ids.insert(f.id).second) report("duplicate 1-cell " + f.id);
    if (!obj_set.count(f.dom) || !obj_set.count(f.cod))
      report("1-cell " + f.id + " has unknown endpoint");
  }
  for (const auto& a : b.twos) {
    if (!two_ids.insert(a.id).second) report("duplicate 2-cell " + a.id);
    if (!one_ids.count(a.dom) || !one_ids.count(a.cod)) {
      report("2-cell " + a.id + " has unknown endpoint");
      continue;
    }
    const auto& d = b.one(a.dom);
    const auto& c = b.one(a.cod);
    if (d.dom != c.dom || d.cod != c.cod)
      report("2-cell " + a.id + " between non-parallel 1-cells");
  }
  if (!errs.empty()) return errs;

  for (const auto& o : b.objects) {
    auto it = b.id1.find(o);
    if (it == b.id1.end() || !one_ids.count(it->second)) {
      report("missing identity 1-cell on " + o);
      continue;
    }
    const auto& f = b.one(it->second);
    if (f.dom != o || f.cod != o)
      report("identity 1-cell on " + o + " has wrong endpoints");
  }
  for (const auto& f : b.ones) {
    auto it = b.id2.find(f.id);
    if (it == b.id2.end() || !two_ids.count(it->second)) {
      report("missing identity 2-cell on " + f.id);
      continue;
    }
    const auto& a = b.two(it->second);
    if (a.dom != f.id || a.cod != f.id)
      report("identity 2-cell on " + f.id + " has wrong endpoints");
  }
  if (!errs.empty()) return errs;

  // Horizontal composition of 1-cells.
  for (const auto& g : b.ones)
    for (const auto& f : b.ones) {
      bool composable = f.cod == g.dom;
      auto it = b.hcomp1.find({g.id, f.id});
      if (!composable) {
        if (it != b.hcomp1.end())
          report("composite of non-composable 1-cells " + g.id + " . " +
                 f.id);
        continue;
      }
      if (it == b.hcomp1.end() || !one_ids.count(it->second)) {
        report("missing 1-cell composite " + g.id + " . " + f.id);
        continue;
      }
      const auto& gf = b.one(it->second);
      if (gf.dom != f.dom || gf.cod != g.cod)
        report("1-cell composite " + g.id + " . " + f.id +
               " has wrong endpoints");
    }
  if (!errs.empty()) return errs;

  // Vertical composition.
  for (const auto& q : b.twos)
    for (const auto& a : b.twos) {
      bool composable = a.cod == q.dom;
      auto it = b.vcomp2.find({q.id, a.id});
      if (!composable) {
        if (it != b.vcomp2.end())
          report("vertical composite of non-composable " + q.id + " . " +
                 a.id);
        continue;
      }
      if (it == b.vcomp2.end() || !two_ids.count(it->second)) {
        report("missing vertical composite " + q.id + " . " + a.id);
        continue;
      }
      const auto& qa = b.two(it->second);
      if (qa.dom != a.dom || qa.cod != q.cod)
        report("vertical composite " + q.id + " . " + a.id +
               " has wrong endpoints");
    }
  if (!errs.empty()) return errs;

  // Horizontal composition of 2-cells.
  for (const auto& q : b.twos)
    for (const auto& a : b.twos) {
      bool composable = b.one(a.dom).cod == b.one(q.dom).dom;
      auto it = b.hcomp2.find({q.id, a.id});
      if (!composable) {
        if (it != b.hcomp2.end())
          report("horizontal composite of non-composable " + q.id + " * " +
                 a.id);
        continue;
      }
      if (it == b.hcomp2.end() || !two_ids.count(it->second)) {
        report("missing horizontal composite " + q.id + " * " + a.id);
        continue;
      }
      const auto& qa = b.two(it->second);
      if (qa.dom != b.hc1(q.dom, a.dom) || qa.cod != b.hc1(q.cod, a.cod))
        report("horizontal composite " + q.id + " * " + a.id +
               " has wrong endpoints");
    }
  if (!errs.empty()) return errs;

  // Hom-categories: unit and associativity laws for vertical composition.
  for (const auto& a : b.twos) {
    if (b.vc(a.id, b.id2_of(a.dom)) != a.id)
      report("vertical right unit fails at " + a.id);
    if (b.vc(b.id2_of(a.cod), a.id) != a.id)
      report("vertical left unit fails at " + a.id);
  }
  for (const auto& c : b.twos)
    for (const auto& q : b.twos) {
      if (q.cod != c.dom) continue;
      for (const auto& a : b.twos) {
        if (a.cod != q.dom) continue;
        if (done()) return errs;
        if (b.vc(c.id, b.vc(q.id, a.id)) != b.vc(b.vc(c.id, q.id), a.id))
          report("vertical associativity fails at " + c.id + ", " + q.id +
                 ", " + a.id);
      }
    }
  if (!errs.empty()) return errs;

  // Horizontal composition is a functor on homs.
  for (const auto& g : b.ones)
    for (const auto& f : b.ones) {
      if (f.cod != g.dom) continue;
      if (b.hc2(b.id2_of(g.id), b.id2_of(f.id)) !=
          b.id2_of(b.hc1(g.id, f.id)))
        report("horizontal composite of identities fails at " + g.id +
               " . " + f.id);
    }
  for (const auto& a : b.twos)
    for (const auto& a2 : b.twos) {
      if (a.cod != a2.dom) continue;  // a2 after a vertically
      for (const auto& q : b.twos) {
        if (b.one(a.dom).cod != b.one(q.dom).dom) continue;
        for (const auto& q2 : b.twos) {
          if (q.cod != q2.dom) continue;
          if (done()) return errs;
          if (b.vc(b.hc2(q2.id, a2.id), b.hc2(q.id, a.id)) !=
              b.hc2(b.vc(q2.id, q.id), b.vc(a2.id, a.id)))
            report("interchange fails at (" + q2.id + ", " + a2.id +
                   ") . (" + q.id + ", " + a.id + ")");
        }
      }
    }
  if (!errs.empty()) return errs;

  // Constraint cells: totality, typing, invertibility.
  for (const auto& h : b.ones)
    for (const auto& g : b.ones) {
      if (g.cod != h.dom) continue;
      for (const auto& f : b.ones) {
        if (f.cod != g.dom) continue;
        auto it = b.assoc.find({h.id, g.id, f.id});
        if (it == b.assoc.end() || !two_ids.count(it->second)) {
          report("missing associator at (" + h.id + ", " + g.id + ", " +
                 f.id + ")");
          continue;
        }
        const auto& s = b.two(it->second);
        if (s.dom != b.hc1(b.hc1(h.id, g.id), f.id) ||
            s.cod != b.hc1(h.id, b.hc1(g.id, f.id)))
          report("associator at (" + h.id + ", " + g.id + ", " + f.id +
                 ") has wrong endpoints");
        else if (!two_invertible(b, it->second))
          report("associator at (" + h.id + ", " + g.id + ", " + f.id +
                 ") is not invertible");
      }
    }
  for (const auto& f : b.ones) {
    auto lit = b.lunit.find(f.id);
    if (lit == b.lunit.end() || !two_ids.count(lit->second)) {
      report("missing left unitor at " + f.id);
    } else {
      const auto& l = b.two(lit->second);
      if (l.dom != b.hc1(b.id1_of(f.cod), f.id) || l.cod != f.id)
        report("left unitor at " + f.id + " has wrong endpoints");
      else if (!two_invertible(b, lit->second))
        report("left unitor at " + f.id + " is not invertible");
    }
    auto rit = b.runit.find(f.id);
    if (rit == b.runit.end() || !two_ids.count(rit->second)) {
      report("missing right unitor at " + f.id);
    } else {
      const auto& r = b.two(rit->second);
      if (r.dom != b.hc1(f.id, b.id1_of(f.dom)) || r.cod != f.id)
        report("right unitor at " + f.id + " has wrong endpoints");
      else if (!two_invertible(b, rit->second))
        report("right unitor at " + f.id + " is not invertible");
    }
  }
  if (!errs.empty()) return errs;

  // Naturality of the associator.
  for (const auto& c : b.twos)
    for (const auto& q : b.twos) {
      if (b.one(q.dom).cod != b.one(c.dom).dom) continue;
      for (const auto& a : b.twos) {
        if (b.one(a.dom).cod != b.one(q.dom).dom) continue;
        if (done()) return errs;
        const std::string& start = b.assoc_of(c.dom, q.dom, a.dom);
        const std::string& end = b.assoc_of(c.cod, q.cod, a.cod);
        if (b.vc(end, b.hc2(b.hc2(c.id, q.id), a.id)) !=
            b.vc(b.hc2(c.id, b.hc2(q.id, a.id)), start))
          report("associator naturality fails at (" + c.id + ", " + q.id +
                 ", " + a.id + ")");
      }
    }
  // Naturality of the unitors.
  for (const auto& a : b.twos) {
    const auto& f = b.one(a.dom);
    const std::string& lu = b.id2_of(b.id1_of(f.cod));
    if (b.vc(b.lunit_of(a.cod), b.hc2(lu, a.id)) !=
        b.vc(a.id, b.lunit_of(a.dom)))
      report("left unitor naturality fails at " + a.id);
    const std::string& ru = b.id2_of(b.id1_of(f.dom));
    if (b.vc(b.runit_of(a.cod), b.hc2(a.id, ru)) !=
        b.vc(a.id, b.runit_of(a.dom)))
      report("right unitor naturality fails at " + a.id);
  }
  if (!errs.empty()) return errs;

  // Pentagon.
  for (const auto& k : b.ones)
    for (const auto& h : b.ones) {
      if (h.cod != k.dom) continue;
      for (const auto& g : b.ones) {
        if (g.cod != h.dom) continue;
        for (const auto& f : b.ones) {
          if (f.cod != g.dom) continue;
          if (done()) return errs;
          const std::string path1 =
              b.vc(b.assoc_of(k.id, h.id, b.hc1(g.id, f.id)),
                   b.assoc_of(b.hc1(k.id, h.id), g.id, f.id));
          const std::string path2 =
              b.vc(b.hc2(b.id2_of(k.id), b.assoc_of(h.id, g.id, f.id)),
                   b.vc(b.assoc_of(k.id, b.hc1(h.id, g.id), f.id),
                        b.hc2(b.assoc_of(k.id, h.id, g.id),
                              b.id2_of(f.id))));
          if (path1 != path2)
            report("pentagon fails at (" + k.id + ", " + h.id + ", " + g.id +
                   ", " + f.id + ")");
        }
      }
    }
  // Triangle.
  for (const auto& g : b.ones)
    for (const auto& f : b.ones) {
      if (f.cod != g.dom) continue;
      if (b.vc(b.hc2(b.id2_of(g.id), b.lunit_of(f.id)),
               b.assoc_of(g.id, b.id1_of(f.cod), f.id)) !=
          b.hc2(b.runit_of(g.id), b.id2_of(f.id)))
        report("triangle fails at (" + g.id + ", " + f.id + ")");
    }
  return errs;
}

void complete_strict_constraints(Bicategory& b) {
  for (const auto& h : b.ones)
    for (const auto& g : b.ones) {
      if (g.cod != h.dom) continue;
      for (const auto& f : b.ones) {
        if (f.cod != g.dom) continue;
        const std::string left = b.hc1(b.hc1(h.id, g.id), f.id);
        const std::string right = b.hc1(h.id, b.hc1(g.id, f.id));
        if (left != right)
          throw std::invalid_argument(
              "complete_strict_constraints: composition is not strictly "
              "associative at (" + h.id + ", " + g.id + ", " + f.id + ")");
        b.assoc[{h.id, g.id, f.id}] = b.id2_of(left);
      }
    }
  for (const auto& f : b.ones) {
    if (b.hc1(b.id1_of(f.cod), f.id) != f.id ||
        b.hc1(f.id, b.id1_of(f.dom)) != f.id)
      throw std::invalid_argument(
          "complete_strict_constraints: units are not strict at " + f.id);
    b.lunit[f.id] = b.id2_of(f.id);
    b.runit[f.id] = b.id2_of(f.id);
  }
}

Br br_leaf(int i) {
  auto n = std::make_shared<BrNode>();
  n->leaf = i;
  return n;
}

Br br_pair(Br first, Br second) {
  auto n = std::make_shared<BrNode>();
  n->first = std::move(first);
  n->second = std::move(second);
  return n;
}

Br br_left_comb(int r) {
  Br acc = br_leaf(0);
  for (int i = 1; i < r; ++i) acc = br_pair(acc, br_leaf(i));
  return acc;
}

namespace {

std::vector<Br> br_range(int lo, int hi) {
  std::vector<Br> out;
  if (hi - lo == 1) {
    out.push_back(br_leaf(lo));
    return out;
  }
  for (int s = lo + 1; s < hi; ++s)
    for (const auto& u : br_range(lo, s))
      for (const auto& v : br_range(s, hi)) out.push_back(br_pair(u, v));
  return out;
}

void collect_leaves(const Br& br, std::vector<int>& out) {
  if (br->leaf >= 0) {
    out.push_back(br->leaf);
    return;
  }
  collect_leaves(br->first, out);
  collect_leaves(br->second, out);
}

void check_parse(const Br& br, std::size_t r) {
  std::vector<int> leaves;
  collect_leaves(br, leaves);
  if (leaves.size() != r)
    throw std::invalid_argument("bracketing has wrong leaf count");
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i] != static_cast<int>(i))
      throw std::invalid_argument("bracketing leaves out of order");
}

}  // namespace

std::vector<Br> br_all(int r) {
  if (r <= 0) return {};
  return br_range(0, r);
}

std::string eval_bracketing(const Bicategory& b,
                            const std::vector<std::string>& word,
                            const Br& br) {
  if (br->leaf >= 0) return word[static_cast<size_t>(br->leaf)];
  return b.hc1(eval_bracketing(b, word, br->second),
               eval_bracketing(b, word, br->first));
}

namespace {

std::string left_comb_cell(const Bicategory& b,
                           const std::vector<std::string>& ids) {
  std::string acc = ids.front();
  for (std::size_t i = 1; i < ids.size(); ++i) acc = b.hc1(ids[i], acc);
  return acc;
}

// LC(M) . LC(L) => LC(L ++ M), by peeling associators off the far end.
std::string append_path(const Bicategory& b, const std::vector<std::string>& l,
                        const std::vector<std::string>& m) {
  if (m.size() == 1) return b.id2_of(b.hc1(m.front(), left_comb_cell(b, l)));
  std::vector<std::string> m_head(m.begin(), m.end() - 1);
  const std::string& y = m.back();
  std::string step1 =
      b.assoc_of(y, left_comb_cell(b, m_head), left_comb_cell(b, l));
  std::string step2 = b.hc2(b.id2_of(y), append_path(b, l, m_head));
  return b.vc(step2, step1);
}

struct CombResult {
  std::string cell;                // eval(br) => LC(segment)
  std::vector<std::string> ids;    // the word segment, source end first
};

CombResult to_left_comb(const Bicategory& b,
                        const std::vector<std::string>& word, const Br& br) {
  if (br->leaf >= 0) {
    const std::string& f = word[static_cast<size_t>(br->leaf)];
    return {b.id2_of(f), {f}};
  }
  CombResult u = to_left_comb(b, word, br->first);
  CombResult v = to_left_comb(b, word, br->second);
  std::string base = b.hc2(v.cell, u.cell);
  std::string merged = b.vc(append_path(b, u.ids, v.ids), base);
  std::vector<std::string> ids = u.ids;
  ids.insert(ids.end(), v.ids.begin(), v.ids.end());
  return {std::move(merged), std::move(ids)};
}

struct StripResult {
  std::string cell;       // LC(L) => canonical
  std::string canonical;  // left comb of the non-identities, or an identity
};

StripResult strip_identities(const Bicategory& b,
                             const std::vector<std::string>& l,
                             const std::set<std::string>& unit_ones,
                             bool* all_units) {
  if (l.size() == 1) {
    *all_units = unit_ones.count(l.front()) > 0;
    return {b.id2_of(l.front()), l.front()};
  }
  std::vector<std::string> head(l.begin(), l.end() - 1);
  const std::string& y = l.back();
  bool head_units = false;
  StripResult inner = strip_identities(b, head, unit_ones, &head_units);
  std::string whisk = b.hc2(b.id2_of(y), inner.cell);
  if (unit_ones.count(y)) {
    *all_units = head_units;
    return {b.vc(b.lunit_of(inner.canonical), whisk), inner.canonical};
  }
  *all_units = false;
  if (head_units)
    return {b.vc(b.runit_of(y), whisk), y};
  return {std::move(whisk), b.hc1(y, inner.canonical)};
}

}  // namespace

std::string coherence_iso(const Bicategory& b,
                          const std::vector<std::string>& word, const Br& br1,
                          const Br& br2) {
  if (word.empty())
    throw std::invalid_argument("coherence_iso: empty word");
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (b.one(word[i]).cod != b.one(word[i + 1]).dom)
      throw std::invalid_argument("coherence_iso: word is not composable");
  check_parse(br1, word.size());
  check_parse(br2, word.size());

  std::set<std::string> unit_ones;
  for (const auto& [o, f] : b.id1) unit_ones.insert(f);

  auto normalize = [&](const Br& br) {
    CombResult comb = to_left_comb(b, word, br);
    bool all_units = false;
    StripResult s = strip_identities(b, comb.ids, unit_ones, &all_units);
    return std::pair<std::string, std::string>(b.vc(s.cell, comb.cell),
                                               s.canonical);
  };
  auto [p1, canon1] = normalize(br1);
  auto [p2, canon2] = normalize(br2);
  if (canon1 != canon2)
    throw std::logic_error("coherence_iso: normal forms disagree");
  auto inv = two_inverse(b, p2);
  if (!inv)
    throw std::logic_error("coherence_iso: normalization cell has no "
                           "inverse");
  return b.vc(*inv, p1);
}

std::vector<std::string> functor_validate(const Bicategory& a,
                                          const Bicategory& b,
                                          const StrictFunctor2& f) {
  std::vector<std::string> errs;
  auto img = [&errs](const std::map<std::string, std::string>& m,
                     const std::string& k,
                     const char* kind) -> const std::string* {
    auto it = m.find(k);
    if (it == m.end()) {
      errs.push_back(std::string("no image for ") + kind + " " + k);
      return nullptr;
    }
    return &it->second;
  };
  for (const auto& o : a.objects) img(f.obj, o, "object");
  for (const auto& x : a.ones) img(f.one, x.id, "1-cell");
  for (const auto& x : a.twos) img(f.two, x.id, "2-cell");
  if (!errs.empty()) return errs;

  for (const auto& x : a.ones) {
    const auto& fx = b.one(f.one.at(x.id));
    if (fx.dom != f.obj.at(x.dom) || fx.cod != f.obj.at(x.cod))
      errs.push_back("1-cell image endpoints wrong for " + x.id);
  }
  for (const auto& x : a.twos) {
    const auto& fx = b.two(f.two.at(x.id));
    if (fx.dom != f.one.at(x.dom) || fx.cod != f.one.at(x.cod))
      errs.push_back("2-cell image endpoints wrong for " + x.id);
  }
  // Ill-typed images make the preservation lookups below meaningless.
  if (!errs.empty()) return errs;
  for (const auto& o : a.objects)
    if (f.one.at(a.id1_of(o)) != b.id1_of(f.obj.at(o)))
      errs.push_back("identity 1-cell not preserved at " + o);
  for (const auto& x : a.ones)
    if (f.two.at(a.id2_of(x.id)) != b.id2_of(f.one.at(x.id)))
      errs.push_back("identity 2-cell not preserved at " + x.id);
  for (const auto& [pair, gf] : a.hcomp1)
    if (f.one.at(gf) !=
        b.hc1(f.one.at(pair.first), f.one.at(pair.second)))
      errs.push_back("1-cell composition not preserved at " + pair.first +
                     " . " + pair.second);
  for (const auto& [pair, qa] : a.vcomp2)
    if (f.two.at(qa) != b.vc(f.two.at(pair.first), f.two.at(pair.second)))
      errs.push_back("vertical composition not preserved at " + pair.first +
                     " . " + pair.second);
  for (const auto& [pair, qa] : a.hcomp2)
    if (f.two.at(qa) != b.hc2(f.two.at(pair.first), f.two.at(pair.second)))
      errs.push_back("horizontal composition not preserved at " + pair.first +
                     " * " + pair.second);
  for (const auto& [triple, s] : a.assoc)
    if (f.two.at(s) != b.assoc_of(f.one.at(std::get<0>(triple)),
                                  f.one.at(std::get<1>(triple)),
                                  f.one.at(std::get<2>(triple))))
      errs.push_back("associator not preserved");
  for (const auto& [x, l] : a.lunit)
    if (f.two.at(l) != b.lunit_of(f.one.at(x)))
      errs.push_back("left unitor not preserved at " + x);
  for (const auto& [x, r] : a.runit)
    if (f.two.at(r) != b.runit_of(f.one.at(x)))
      errs.push_back("right unitor not preserved at " + x);
  return errs;
}

nlohmann::json bicat_to_json(const Bicategory& b) {
  nlohmann::json j;
  j["objects"] = b.objects;
  j["ones"] = nlohmann::json::array();
  for (const auto& f : b.ones)
    j["ones"].push_back({{"id", f.id}, {"dom", f.dom}, {"cod", f.cod}});
  j["twos"] = nlohmann::json::array();
  for (const auto& a : b.twos)
    j["twos"].push_back({{"id", a.id}, {"dom", a.dom}, {"cod", a.cod}});
  j["id1"] = b.id1;
  j["id2"] = b.id2;
  auto pairs = [](const std::map<std::pair<std::string, std::string>,
                                 std::string>& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, v] : m) arr.push_back({k.first, k.second, v});
    return arr;
  };
  j["hcomp1"] = pairs(b.hcomp1);
  j["vcomp2"] = pairs(b.vcomp2);
  j["hcomp2"] = pairs(b.hcomp2);
  j["assoc"] = nlohmann::json::array();
  for (const auto& [k, v] : b.assoc)
    j["assoc"].push_back(
        {std::get<0>(k), std::get<1>(k), std::get<2>(k), v});
  j["lunit"] = b.lunit;
  j["runit"] = b.runit;
  return j;
}

Bicategory bicat_from_json(const nlohmann::json& j) {
  Bicategory b;
  b.objects = j.at("objects").get<std::vector<std::string>>();
  for (const auto& f : j.at("ones"))
    b.ones.push_back({f.at("id").get<std::string>(),
                      f.at("dom").get<std::string>(),
                      f.at("cod").get<std::string>()});
  for (const auto& a : j.at("twos"))
    b.twos.push_back({a.at("id").get<std::string>(),
                      a.at("dom").get<std::string>(),
                      a.at("cod").get<std::string>()});
  b.id1 = j.at("id1").get<std::map<std::string, std::string>>();
  b.id2 = j.at("id2").get<std::map<std::string, std::string>>();
  auto pairs = [](const nlohmann::json& arr) {
    std::map<std::pair<std::string, std::string>, std::string> m;
    for (const auto& t : arr)
      m[{t.at(0).get<std::string>(), t.at(1).get<std::string>()}] =
          t.at(2).get<std::string>();
    return m;
  };
  b.hcomp1 = pairs(j.at("hcomp1"));
  b.vcomp2 = pairs(j.at("vcomp2"));
  b.hcomp2 = pairs(j.at("hcomp2"));
  for (const auto& t : j.at("assoc"))
    b.assoc[{t.at(0).get<std::string>(), t.at(1).get<std::string>(),
             t.at(2).get<std::string>()}] = t.at(3).get<std::string>();
  b.lunit = j.at("lunit").get<std::map<std::string, std::string>>();
  b.runit = j.at("runit").get<std::map<std::string, std::string>>();
  return b;
}

}  // namespace globcat::bicat
