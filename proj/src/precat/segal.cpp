#include "precat/segal.hpp"

#include <algorithm>
#include <stdexcept>

namespace globcat::precat {

using theta::DeltaMap;
using theta::GenKind;
using theta::ThetaMorphism;
using theta::ThetaObject;

std::vector<std::string> window_map_check(const WindowMap& f,
                                          std::size_t max_errors) {
  std::vector<std::string> errs;
  auto report = [&](std::string msg) {
    if (errs.size() < max_errors) errs.push_back(std::move(msg));
  };
  for (const auto& a : f.dom.objects) {
    auto it = f.comp.find(a);
    if (it == f.comp.end()) {
      report("missing component at " + theta_object_to_string(a));
      continue;
    }
    if (it->second.size() != f.dom.at(a).size())
      report("component size mismatch at " + theta_object_to_string(a));
  }
  if (!errs.empty()) return errs;
  for (const auto& [g, td] : f.dom.action) {
    const auto& tc = f.cod.table(g);
    const auto& ca = f.comp.at(g.dom);
    const auto& cb = f.comp.at(g.cod);
    for (std::size_t i = 0; i < td.size(); ++i)
      if (ca[static_cast<size_t>(td[i])] != tc[static_cast<size_t>(cb[i])]) {
        report("naturality fails for " + theta_morphism_to_string(g) +
               " at element " + f.dom.at(g.cod)[i]);
        break;
      }
  }
  return errs;
}

namespace {

std::vector<int> concat(const std::vector<int>& head, int mid,
                        const std::vector<int>& rest) {
  std::vector<int> out = head;
  out.push_back(mid);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

// Action table of the morphism that is the identity on `head` axes, `seg`
// on the next axis, and the identity on the residual axes.
const std::vector<int>& axis_action(const PresheafWindow& w,
                                    const std::vector<int>& head,
                                    const DeltaMap& seg,
                                    const ThetaObject& r) {
  std::vector<DeltaMap> comps;
  comps.reserve(static_cast<size_t>(w.n));
  for (int h : head) comps.push_back(DeltaMap::identity(h));
  comps.push_back(seg);
  for (int i = 0; i < r.n(); ++i) comps.push_back(DeltaMap::identity(r[i]));
  return w.table(theta::theta_from_delta(concat(head, seg.dom, r.coords),
                                         concat(head, seg.cod, r.coords),
                                         comps));
}

}  // namespace

WindowMap segal_map(const PresheafWindow& w, const std::vector<int>& head,
                    int k) {
  int axis = static_cast<int>(head.size());
  if (axis >= w.n)
    throw std::invalid_argument("segal_map: head uses every axis");
  if (k < 0 || k > w.bound)
    throw std::invalid_argument("segal_map: k outside window");

  WindowMap out;
  std::vector<int> head_k = head, head_1 = head, head_0 = head;
  head_k.push_back(k);
  head_1.push_back(1);
  head_0.push_back(0);
  out.dom = restrict_window(w, head_k);
  PresheafWindow e1 = restrict_window(w, head_1);
  PresheafWindow e0 = restrict_window(w, head_0);

  DeltaMap sigma(0, 1, {0}), tau(0, 1, {1});

  // Span-limit tuples per residual object, with index lookup.
  PresheafWindow p;
  p.n = out.dom.n;
  p.bound = w.bound;
  p.objects = out.dom.objects;
  std::map<ThetaObject, std::vector<std::vector<int>>> tuples;
  std::map<ThetaObject, std::map<std::vector<int>, int>> tuple_index;
  for (const auto& r : p.objects) {
    int sz = static_cast<int>(e1.at(r).size());
    const std::vector<int>& t_tbl = axis_action(w, head, tau, r);
    const std::vector<int>& s_tbl = axis_action(w, head, sigma, r);
    std::vector<std::vector<int>> t_maps(k == 0 ? 0 : k - 1, t_tbl);
    std::vector<std::vector<int>> s_maps(k == 0 ? 0 : k - 1, s_tbl);
    tuples[r] = wide_pullback(std::vector<int>(static_cast<size_t>(k), sz),
                              t_maps, s_maps);
    auto& labels = p.value[r];
    for (const auto& t : tuples[r]) {
      tuple_index[r][t] = static_cast<int>(labels.size());
      std::string lab = "(";
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) lab += ",";
        lab += e1.at(r)[static_cast<size_t>(t[i])];
      }
      labels.push_back(lab + ")");
    }
  }
  for (const auto& [phi, tbl] : e1.action) {
    std::vector<int> newt;
    newt.reserve(tuples[phi.cod].size());
    for (const auto& t : tuples[phi.cod]) {
      std::vector<int> img;
      img.reserve(t.size());
      for (int c : t) img.push_back(tbl[static_cast<size_t>(c)]);
      auto it = tuple_index[phi.dom].find(img);
      if (it == tuple_index[phi.dom].end())
        throw std::logic_error(
            "segal_map: restriction left the span limit (window is not "
            "functorial)");
      newt.push_back(it->second);
    }
    p.action[phi] = std::move(newt);
  }
  out.cod = std::move(p);

  // The comparison itself: restrict along each segment inclusion.
  for (const auto& r : out.dom.objects) {
    std::vector<const std::vector<int>*> legs;
    for (int i = 0; i < k; ++i)
      legs.push_back(&axis_action(
          w, head, DeltaMap(1, k, {i, i + 1}), r));
    std::vector<int> table;
    table.reserve(out.dom.at(r).size());
    for (std::size_t e = 0; e < out.dom.at(r).size(); ++e) {
      std::vector<int> t;
      t.reserve(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i)
        t.push_back((*legs[static_cast<size_t>(i)])[e]);
      auto it = tuple_index[r].find(t);
      if (it == tuple_index[r].end())
        throw std::logic_error(
            "segal_map: comparison leaves the span limit (window is not "
            "functorial)");
      table.push_back(it->second);
    }
    out.comp[r] = std::move(table);
  }
  return out;
}

namespace {

ThetaObject ones_then_zeros(int m, int p) {
  std::vector<int> coords(static_cast<size_t>(m), 0);
  for (int i = 0; i < p; ++i) coords[static_cast<size_t>(i)] = 1;
  return theta::theta_object(std::move(coords));
}

}  // namespace

std::vector<CheckItem> contractible(const WindowMap& f) {
  std::vector<CheckItem> items;
  int m = f.dom.n;
  if (m == 0) {
    ThetaObject pt = theta::theta_object({});
    const auto& t = f.comp.at(pt);
    int cod_size = static_cast<int>(f.cod.at(pt).size());
    CheckItem inj{"injective-at-()", true, ""};
    CheckItem surj{"surjective-at-()", true, ""};
    std::vector<int> hits(static_cast<size_t>(cod_size), -1);
    for (std::size_t i = 0; i < t.size(); ++i) {
      int v = t[i];
      if (hits[static_cast<size_t>(v)] >= 0 && inj.ok) {
        inj.ok = false;
        inj.witness = f.dom.at(pt)[static_cast<size_t>(
                          hits[static_cast<size_t>(v)])] +
                      " and " + f.dom.at(pt)[i] + " map to " +
                      f.cod.at(pt)[static_cast<size_t>(v)];
      }
      hits[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    for (int v = 0; v < cod_size; ++v)
      if (hits[static_cast<size_t>(v)] < 0 && surj.ok) {
        surj.ok = false;
        surj.witness = "nothing maps to " + f.cod.at(pt)[static_cast<size_t>(v)];
      }
    items.push_back(std::move(surj));
    items.push_back(std::move(inj));
    return items;
  }

  if (f.dom.bound < 1) {
    items.push_back({"window", false, "bound < 1: contractibility "
                                      "indeterminate"});
    return items;
  }

  // (i) Surjective at the point index.
  {
    ThetaObject a = ones_then_zeros(m, 0);
    const auto& t = f.comp.at(a);
    int cod_size = static_cast<int>(f.cod.at(a).size());
    std::vector<bool> hit(static_cast<size_t>(cod_size), false);
    for (int v : t) hit[static_cast<size_t>(v)] = true;
    CheckItem item{"surjective-at-" + theta_object_to_string(a), true, ""};
    for (int v = 0; v < cod_size; ++v)
      if (!hit[static_cast<size_t>(v)]) {
        item.ok = false;
        item.witness =
            "nothing maps to " + f.cod.at(a)[static_cast<size_t>(v)];
        break;
      }
    items.push_back(std::move(item));
  }

  // (ii)/(iii) Fullness at each level, faithfulness at the top, through the
  // induced map into A(p) x_{B(p)} B(p+1) x_{B(p)} A(p).
  for (int p = 0; p < m; ++p) {
    ThetaObject a = ones_then_zeros(m, p);
    ThetaObject b = ones_then_zeros(m, p + 1);
    ThetaMorphism sig =
        theta::theta_generator(GenKind::Sigma, p, 0, 0, b.coords);
    ThetaMorphism tav =
        theta::theta_generator(GenKind::Tau, p, 0, 0, b.coords);
    const auto& sA = f.dom.table(sig);
    const auto& tA = f.dom.table(tav);
    const auto& sB = f.cod.table(sig);
    const auto& tB = f.cod.table(tav);
    const auto& ca = f.comp.at(a);
    const auto& cb = f.comp.at(b);

    auto triple_label = [&](int x, int g, int y) {
      return "(" + f.dom.at(a)[static_cast<size_t>(x)] + ", " +
             f.cod.at(b)[static_cast<size_t>(g)] + ", " +
             f.dom.at(a)[static_cast<size_t>(y)] + ")";
    };

    std::map<std::vector<int>, int> seen;  // triple -> witnessing element
    for (std::size_t e = 0; e < f.dom.at(b).size(); ++e) {
      std::vector<int> key = {sA[e], cb[e], tA[e]};
      if (!seen.count(key)) seen[key] = static_cast<int>(e);
    }

    CheckItem full{"full-at-" + theta_object_to_string(b), true, ""};
    int na = static_cast<int>(f.dom.at(a).size());
    for (std::size_t g = 0; g < f.cod.at(b).size() && full.ok; ++g)
      for (int x = 0; x < na && full.ok; ++x) {
        if (ca[static_cast<size_t>(x)] != sB[g]) continue;
        for (int y = 0; y < na && full.ok; ++y) {
          if (ca[static_cast<size_t>(y)] != tB[g]) continue;
          if (!seen.count({x, static_cast<int>(g), y})) {
            full.ok = false;
            full.witness = "no lift over " + triple_label(x,
                                                          static_cast<int>(g),
                                                          y);
          }
        }
      }
    items.push_back(std::move(full));

    if (p == m - 1) {
      CheckItem faithful{"faithful-at-" + theta_object_to_string(b), true,
                         ""};
      std::map<std::vector<int>, int> first;
      for (std::size_t e = 0; e < f.dom.at(b).size(); ++e) {
        std::vector<int> key = {sA[e], cb[e], tA[e]};
        auto [it, inserted] = first.emplace(key, static_cast<int>(e));
        if (!inserted) {
          faithful.ok = false;
          faithful.witness =
              f.dom.at(b)[static_cast<size_t>(it->second)] + " and " +
              f.dom.at(b)[e] + " share " +
              triple_label(key[0], key[1], key[2]);
          break;
        }
      }
      items.push_back(std::move(faithful));
    }
  }
  return items;
}

SegalReport segal_condition(const PresheafWindow& w) {
  SegalReport rep;
  rep.bound = w.bound;
  auto add = [&](const std::string& prefix, std::vector<CheckItem> items) {
    for (auto& it : items) {
      it.name = prefix + ":" + it.name;
      rep.items.push_back(std::move(it));
    }
  };
  if (w.n == 1) {
    for (int k = 2; k <= w.bound; ++k)
      add("S_" + std::to_string(k), contractible(segal_map(w, {}, k)));
  } else if (w.n == 2) {
    for (int j = 2; j <= w.bound; ++j)
      add("S_" + std::to_string(j), contractible(segal_map(w, {}, j)));
    for (int j = 0; j <= w.bound; ++j)
      for (int k = 2; k <= w.bound; ++k)
        add("S_" + std::to_string(j) + "," + std::to_string(k),
            contractible(segal_map(w, {j}, k)));
  } else {
    throw std::invalid_argument("segal_condition: supported for 1 or 2 axes");
  }
  rep.pass = std::all_of(rep.items.begin(), rep.items.end(),
                         [](const CheckItem& it) { return it.ok; });
  return rep;
}

}  // namespace globcat::precat
