#include "nerve2/nerve.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace globcat::nerve2 {

using bicat::Bicategory;

std::string element_label(const NerveElement& e) {
  std::string s;
  for (std::size_t i = 0; i < e.a.size(); ++i) {
    if (i) s += ",";
    s += e.a[i];
  }
  auto join = [&s](const auto& m) {
    s += "|";
    bool first = true;
    for (const auto& [k, v] : m) {
      if (!first) s += ",";
      first = false;
      s += v;
    }
  };
  join(e.f);
  join(e.alpha);
  join(e.iota);
  return s;
}

std::vector<std::string> element_validate(const Bicategory& b,
                                          const NerveElement& e,
                                          std::size_t max_errors) {
  std::vector<std::string> errs;
  auto report = [&](std::string msg) {
    if (errs.size() < max_errors) errs.push_back(std::move(msg));
  };
  auto slot = [](int u, int v, int z) {
    return std::to_string(u) + "," + std::to_string(v) + ";" +
           std::to_string(z);
  };

  if (e.j < 0 || e.k < 0 || static_cast<int>(e.a.size()) != e.j + 1)
    return {"object tuple has wrong length"};
  for (const auto& o : e.a)
    if (std::find(b.objects.begin(), b.objects.end(), o) == b.objects.end())
      report("unknown object " + o);

  for (int u = 0; u <= e.j; ++u)
    for (int v = u + 1; v <= e.j; ++v)
      for (int z = 0; z <= e.k; ++z) {
        auto it = e.f.find({u, v, z});
        if (it == e.f.end() || !b.is_one(it->second)) {
          report("missing 1-cell at " + slot(u, v, z));
          continue;
        }
        const auto& c = b.one(it->second);
        if (c.dom != e.a[static_cast<size_t>(u)] ||
            c.cod != e.a[static_cast<size_t>(v)])
          report("1-cell endpoints wrong at " + slot(u, v, z));
      }
  std::size_t pairs = static_cast<size_t>(e.j) * (e.j + 1) / 2;
  if (e.f.size() != pairs * static_cast<size_t>(e.k + 1))
    report("extra 1-cell entries");

  for (int u = 0; u <= e.j; ++u)
    for (int v = u + 1; v <= e.j; ++v)
      for (int z = 1; z <= e.k; ++z) {
        auto it = e.alpha.find({u, v, z});
        if (it == e.alpha.end() || !b.is_two(it->second)) {
          report("missing level cell at " + slot(u, v, z));
          continue;
        }
        const auto& c = b.two(it->second);
        if (c.dom != e.f.at({u, v, z - 1}) || c.cod != e.f.at({u, v, z}))
          report("level cell endpoints wrong at " + slot(u, v, z));
      }
  if (e.alpha.size() != pairs * static_cast<size_t>(e.k))
    report("extra level-cell entries");

  std::size_t triples = 0;
  for (int u = 0; u <= e.j; ++u)
    for (int v = u + 1; v <= e.j; ++v)
      for (int w = v + 1; w <= e.j; ++w) {
        ++triples;
        for (int z = 0; z <= e.k; ++z) {
          auto it = e.iota.find({u, v, w, z});
          if (it == e.iota.end() || !b.is_two(it->second)) {
            report("missing comparison cell at " + slot(u, w, z));
            continue;
          }
          const auto& c = b.two(it->second);
          if (c.dom != b.hc1(e.f.at({v, w, z}), e.f.at({u, v, z})) ||
              c.cod != e.f.at({u, w, z}))
            report("comparison cell endpoints wrong at " + slot(u, w, z));
          else if (!bicat::two_invertible(b, it->second))
            report("comparison cell not invertible at " + slot(u, w, z));
        }
      }
  if (e.iota.size() != triples * static_cast<size_t>(e.k + 1))
    report("extra comparison-cell entries");
  if (!errs.empty()) return errs;

  for (int u = 0; u <= e.j; ++u)
    for (int v = u + 1; v <= e.j; ++v)
      for (int w = v + 1; w <= e.j; ++w)
        for (int z = 1; z <= e.k; ++z) {
          const std::string lhs =
              b.vc(e.iota.at({u, v, w, z}),
                   b.hc2(e.alpha.at({v, w, z}), e.alpha.at({u, v, z})));
          const std::string rhs =
              b.vc(e.alpha.at({u, w, z}), e.iota.at({u, v, w, z - 1}));
          if (lhs != rhs)
            report("square fails at " + slot(u, w, z) + " through " +
                   std::to_string(v));
        }
  for (int u = 0; u <= e.j; ++u)
    for (int v = u + 1; v <= e.j; ++v)
      for (int w = v + 1; w <= e.j; ++w)
        for (int x = w + 1; x <= e.j; ++x)
          for (int z = 0; z <= e.k; ++z) {
            const std::string& fuv = e.f.at({u, v, z});
            const std::string& fvw = e.f.at({v, w, z});
            const std::string& fwx = e.f.at({w, x, z});
            const std::string lhs =
                b.vc(e.iota.at({u, w, x, z}),
                     b.vc(b.hc2(b.id2_of(fwx), e.iota.at({u, v, w, z})),
                          b.assoc_of(fwx, fvw, fuv)));
            const std::string rhs = b.vc(
                e.iota.at({u, v, x, z}),
                b.hc2(e.iota.at({v, w, x, z}), b.id2_of(fuv)));
            if (lhs != rhs)
              report("pentagon fails at (" + std::to_string(u) + "," +
                     std::to_string(v) + "," + std::to_string(w) + "," +
                     std::to_string(x) + ");" + std::to_string(z));
          }
  return errs;
}

std::vector<NerveElement> nerve_elements(const Bicategory& b, int j, int k) {
  if (j < 0 || k < 0)
    throw std::invalid_argument("nerve_elements: negative bidegree");

  std::map<std::pair<std::string, std::string>, std::vector<std::string>>
      hom1, twos_by, inv2;
  for (const auto& f : b.ones) hom1[{f.dom, f.cod}].push_back(f.id);
  for (const auto& a : b.twos) {
    twos_by[{a.dom, a.cod}].push_back(a.id);
    if (bicat::two_invertible(b, a.id)) inv2[{a.dom, a.cod}].push_back(a.id);
  }
  auto nonempty = [](const auto& m, const auto& key) {
    auto it = m.find(key);
    return it != m.end() && !it->second.empty();
  };

  std::vector<std::tuple<int, int, int>> f_slots;  // level, then span, then u
  for (int z = 0; z <= k; ++z)
    for (int s = 1; s <= j; ++s)
      for (int u = 0; u + s <= j; ++u) f_slots.push_back({u, u + s, z});
  std::vector<std::tuple<int, int, int, int>> i_slots;
  for (int z = 0; z <= k; ++z)
    for (int u = 0; u <= j; ++u)
      for (int v = u + 1; v <= j; ++v)
        for (int w = v + 1; w <= j; ++w) i_slots.push_back({u, v, w, z});
  std::vector<std::tuple<int, int, int, int>> quads;
  for (int u = 0; u <= j; ++u)
    for (int v = u + 1; v <= j; ++v)
      for (int w = v + 1; w <= j; ++w)
        for (int x = w + 1; x <= j; ++x) quads.push_back({u, v, w, x});
  std::vector<std::tuple<int, int, int>> a_slots;  // consecutive spans only
  for (int z = 1; z <= k; ++z)
    for (int u = 0; u + 1 <= j; ++u) a_slots.push_back({u, u + 1, z});

  std::vector<NerveElement> out;
  NerveElement e;
  e.j = j;
  e.k = k;
  e.a.resize(static_cast<size_t>(j) + 1);

  auto pentagon_ok = [&](int u, int v, int w, int x, int z) {
    const std::string& fuv = e.f.at({u, v, z});
    const std::string& fvw = e.f.at({v, w, z});
    const std::string& fwx = e.f.at({w, x, z});
    return b.vc(e.iota.at({u, w, x, z}),
                b.vc(b.hc2(b.id2_of(fwx), e.iota.at({u, v, w, z})),
                     b.assoc_of(fwx, fvw, fuv))) ==
           b.vc(e.iota.at({u, v, x, z}),
                b.hc2(e.iota.at({v, w, x, z}), b.id2_of(fuv)));
  };

  std::function<void(std::size_t)> choose_alpha = [&](std::size_t i) {
    if (i == a_slots.size()) {
      NerveElement full = element_complete(b, e);
      if (element_validate(b, full).empty()) out.push_back(std::move(full));
      return;
    }
    auto [u, v, z] = a_slots[i];
    auto it = twos_by.find({e.f.at({u, v, z - 1}), e.f.at({u, v, z})});
    if (it == twos_by.end()) return;
    for (const auto& cand : it->second) {
      e.alpha[{u, v, z}] = cand;
      choose_alpha(i + 1);
    }
    e.alpha.erase({u, v, z});
  };

  std::function<void(std::size_t)> choose_iota = [&](std::size_t i) {
    if (i == i_slots.size()) {
      choose_alpha(0);
      return;
    }
    auto [u, v, w, z] = i_slots[i];
    auto it = inv2.find(
        {b.hc1(e.f.at({v, w, z}), e.f.at({u, v, z})), e.f.at({u, w, z})});
    if (it == inv2.end()) return;
    for (const auto& cand : it->second) {
      e.iota[{u, v, w, z}] = cand;
      bool ok = true;
      for (const auto& [p, q, r, s] : quads) {
        bool involves = (p == u && q == v && r == w) ||
                        (p == u && q == v && s == w) ||
                        (p == u && r == v && s == w) ||
                        (q == u && r == v && s == w);
        if (!involves) continue;
        if (e.iota.count({p, q, r, z}) && e.iota.count({p, q, s, z}) &&
            e.iota.count({p, r, s, z}) && e.iota.count({q, r, s, z}) &&
            !pentagon_ok(p, q, r, s, z)) {
          ok = false;
          break;
        }
      }
      if (ok) choose_iota(i + 1);
    }
    e.iota.erase({u, v, w, z});
  };

  std::function<void(std::size_t)> choose_f = [&](std::size_t i) {
    if (i == f_slots.size()) {
      choose_iota(0);
      return;
    }
    auto [u, v, z] = f_slots[i];
    auto it = hom1.find({e.a[static_cast<size_t>(u)],
                         e.a[static_cast<size_t>(v)]});
    if (it == hom1.end()) return;
    for (const auto& cand : it->second) {
      if (z >= 1 && !nonempty(twos_by, std::pair(e.f.at({u, v, z - 1}), cand)))
        continue;
      bool ok = true;
      for (int w = u + 1; w < v && ok; ++w)
        ok = nonempty(inv2, std::pair(b.hc1(e.f.at({w, v, z}),
                                            e.f.at({u, w, z})),
                                      cand));
      if (!ok) continue;
      e.f[{u, v, z}] = cand;
      choose_f(i + 1);
    }
    e.f.erase({u, v, z});
  };

  std::function<void(int)> choose_a = [&](int v) {
    if (v > j) {
      choose_f(0);
      return;
    }
    for (const auto& o : b.objects) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = nonempty(hom1, std::pair(e.a[static_cast<size_t>(u)], o));
      if (!ok) continue;
      e.a[static_cast<size_t>(v)] = o;
      choose_a(v + 1);
    }
  };

  choose_a(0);
  std::sort(out.begin(), out.end());
  return out;
}

NerveElement element_reduce(const NerveElement& e) {
  NerveElement out = e;
  for (auto it = out.alpha.begin(); it != out.alpha.end();) {
    auto [u, v, z] = it->first;
    if (v - u >= 2)
      it = out.alpha.erase(it);
    else
      ++it;
  }
  return out;
}

NerveElement element_complete(const bicat::Bicategory& b,
                              const NerveElement& e) {
  NerveElement out = e;
  for (int z = 1; z <= out.k; ++z)
    for (int s = 2; s <= out.j; ++s)
      for (int u = 0; u + s <= out.j; ++u) {
        int v = u + s, w = u + 1;
        auto inv = bicat::two_inverse(b, out.iota.at({u, w, v, z - 1}));
        if (!inv)
          throw std::invalid_argument(
              "element_complete: comparison cell is not invertible");
        out.alpha[{u, v, z}] =
            b.vc(out.iota.at({u, w, v, z}),
                 b.vc(b.hc2(out.alpha.at({w, v, z}), out.alpha.at({u, w, z})),
                      *inv));
      }
  return out;
}

NerveElement nerve_action(const Bicategory& b, const theta::DeltaMap& p,
                          const theta::DeltaMap& q, const NerveElement& e) {
  if (p.cod != e.j || q.cod != e.k)
    throw std::invalid_argument("nerve_action: map does not match bidegree");
  NerveElement out;
  out.j = p.dom;
  out.k = q.dom;
  for (int u = 0; u <= p.dom; ++u)
    out.a.push_back(e.a[static_cast<size_t>(p(u))]);

  for (int u = 0; u <= out.j; ++u)
    for (int v = u + 1; v <= out.j; ++v) {
      bool flat = p(u) == p(v);
      for (int z = 0; z <= out.k; ++z)
        out.f[{u, v, z}] = flat ? b.id1_of(out.a[static_cast<size_t>(u)])
                                : e.f.at({p(u), p(v), q(z)});
      for (int z = 1; z <= out.k; ++z) {
        if (flat) {
          out.alpha[{u, v, z}] =
              b.id2_of(b.id1_of(out.a[static_cast<size_t>(u)]));
        } else if (q(z - 1) == q(z)) {
          out.alpha[{u, v, z}] = b.id2_of(e.f.at({p(u), p(v), q(z)}));
        } else {
          std::string acc = b.id2_of(e.f.at({p(u), p(v), q(z - 1)}));
          for (int w = q(z - 1) + 1; w <= q(z); ++w)
            acc = b.vc(e.alpha.at({p(u), p(v), w}), acc);
          out.alpha[{u, v, z}] = acc;
        }
      }
    }

  for (int u = 0; u <= out.j; ++u)
    for (int v = u + 1; v <= out.j; ++v)
      for (int w = v + 1; w <= out.j; ++w)
        for (int z = 0; z <= out.k; ++z) {
          std::string cell;
          if (p(u) < p(v) && p(v) < p(w)) {
            cell = e.iota.at({p(u), p(v), p(w), q(z)});
          } else if (p(u) == p(v) && p(v) < p(w)) {
            cell = b.runit_of(e.f.at({p(v), p(w), q(z)}));
          } else if (p(u) < p(v) && p(v) == p(w)) {
            cell = b.lunit_of(e.f.at({p(u), p(v), q(z)}));
          } else {
            cell = b.lunit_of(b.id1_of(out.a[static_cast<size_t>(u)]));
          }
          out.iota[{u, v, w, z}] = cell;
        }

  if (out.j == 0) out.k = 0;
  return out;
}

NerveElement element_apply(const bicat::StrictFunctor2& f,
                           const NerveElement& e) {
  NerveElement out;
  out.j = e.j;
  out.k = e.k;
  for (const auto& o : e.a) out.a.push_back(f.obj.at(o));
  for (const auto& [key, v] : e.f) out.f[key] = f.one.at(v);
  for (const auto& [key, v] : e.alpha) out.alpha[key] = f.two.at(v);
  for (const auto& [key, v] : e.iota) out.iota[key] = f.two.at(v);
  return out;
}

}  // namespace globcat::nerve2
