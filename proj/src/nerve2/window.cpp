#include "nerve2/window.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace globcat::nerve2 {

using bicat::Bicategory;
using precat::PresheafWindow;
using precat::WindowMap;
using theta::DeltaMap;
using theta::ThetaObject;

namespace {

std::map<NerveElement, int> index_of(const std::vector<NerveElement>& els) {
  std::map<NerveElement, int> m;
  for (std::size_t i = 0; i < els.size(); ++i)
    m[els[i]] = static_cast<int>(i);
  return m;
}

std::vector<std::string> labels_of(const std::vector<NerveElement>& els) {
  std::vector<std::string> out;
  out.reserve(els.size());
  for (const auto& e : els) out.push_back(element_label(e));
  return out;
}

}  // namespace

NerveWindow nerve_window(const Bicategory& b, int bound) {
  NerveWindow nw;
  PresheafWindow& w = nw.window;
  w.n = 2;
  w.bound = bound;
  w.objects = theta::theta_objects(2, bound);
  std::map<ThetaObject, std::map<NerveElement, int>> index;
  for (const auto& o : w.objects) {
    auto els = nerve_elements(b, o[0], o[1]);
    index[o] = index_of(els);
    w.value[o] = labels_of(els);
    nw.elements[o] = std::move(els);
  }
  for (const auto& a : w.objects)
    for (const auto& c : w.objects)
      for (const auto& phi : theta::theta_hom(a, c)) {
        const auto& src = nw.elements.at(c);
        std::vector<int> tbl;
        tbl.reserve(src.size());
        for (const auto& el : src) {
          NerveElement img = nerve_action(b, phi.comps[0], phi.comps[1], el);
          auto it = index.at(a).find(img);
          if (it == index.at(a).end())
            throw std::logic_error(
                "nerve_window: action left the tabulated set");
          tbl.push_back(it->second);
        }
        w.action[phi] = std::move(tbl);
      }
  return nw;
}

WindowMap nerve_map(const NerveWindow& dom, const NerveWindow& cod,
                    const bicat::StrictFunctor2& f) {
  WindowMap out;
  out.dom = dom.window;
  out.cod = cod.window;
  for (const auto& [o, els] : dom.elements) {
    auto idx = index_of(cod.elements.at(o));
    std::vector<int> comp;
    comp.reserve(els.size());
    for (const auto& e : els) {
      auto it = idx.find(element_apply(f, e));
      if (it == idx.end())
        throw std::logic_error("nerve_map: image element is not tabulated");
      comp.push_back(it->second);
    }
    out.comp[o] = std::move(comp);
  }
  return out;
}

WindowMap segal_vertical_direct(const Bicategory& b, int j) {
  if (j < 1)
    throw std::invalid_argument("segal_vertical_direct: width must be >= 1");

  std::map<int, std::vector<NerveElement>> nj, n1;
  std::map<int, std::map<NerveElement, int>> idxj, idx1;
  for (int kk = 0; kk <= 1; ++kk) {
    nj[kk] = nerve_elements(b, j, kk);
    n1[kk] = nerve_elements(b, 1, kk);
    idxj[kk] = index_of(nj[kk]);
    idx1[kk] = index_of(n1[kk]);
  }
  std::vector<NerveElement> n00 = nerve_elements(b, 0, 0);
  auto idx00 = index_of(n00);

  WindowMap out;

  // Values at width j over the two residual levels, with every residual
  // action tabulated.
  PresheafWindow& dom = out.dom;
  dom.n = 1;
  dom.bound = 1;
  dom.objects = theta::theta_objects(1, 1);
  for (const auto& o : dom.objects) dom.value[o] = labels_of(nj[o[0]]);
  for (const auto& a : dom.objects)
    for (const auto& c : dom.objects)
      for (const auto& phi : theta::theta_hom(a, c)) {
        std::vector<int> tbl;
        tbl.reserve(nj[c[0]].size());
        for (const auto& el : nj[c[0]])
          tbl.push_back(idxj[a[0]].at(
              nerve_action(b, DeltaMap::identity(j), phi.comps[0], el)));
        dom.action[phi] = std::move(tbl);
      }

  // The span limit of j width-1 factors glued over the endpoint objects.
  PresheafWindow& cod = out.cod;
  cod.n = 1;
  cod.bound = 1;
  cod.objects = dom.objects;
  std::map<int, std::vector<std::vector<int>>> tuples;
  std::map<int, std::map<std::vector<int>, int>> tuple_index;
  for (const auto& o : cod.objects) {
    int kk = o[0];
    int sz = static_cast<int>(n1[kk].size());
    std::vector<int> t_tbl, s_tbl;
    for (const auto& el : n1[kk]) {
      t_tbl.push_back(idx00.at(
          nerve_action(b, DeltaMap(0, 1, {1}), DeltaMap::identity(kk), el)));
      s_tbl.push_back(idx00.at(
          nerve_action(b, DeltaMap(0, 1, {0}), DeltaMap::identity(kk), el)));
    }
    std::vector<std::vector<int>> t_maps(j == 0 ? 0 : j - 1, t_tbl);
    std::vector<std::vector<int>> s_maps(j == 0 ? 0 : j - 1, s_tbl);
    tuples[kk] = precat::wide_pullback(
        std::vector<int>(static_cast<size_t>(j), sz), t_maps, s_maps);
    auto& labs = cod.value[o];
    for (const auto& t : tuples[kk]) {
      tuple_index[kk][t] = static_cast<int>(labs.size());
      std::string lab = "(";
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) lab += ",";
        lab += element_label(n1[kk][static_cast<size_t>(t[i])]);
      }
      labs.push_back(lab + ")");
    }
  }
  for (const auto& a : cod.objects)
    for (const auto& c : cod.objects)
      for (const auto& phi : theta::theta_hom(a, c)) {
        std::vector<int> one_tbl;
        one_tbl.reserve(n1[c[0]].size());
        for (const auto& el : n1[c[0]])
          one_tbl.push_back(idx1[a[0]].at(
              nerve_action(b, DeltaMap::identity(1), phi.comps[0], el)));
        std::vector<int> tbl;
        tbl.reserve(tuples[c[0]].size());
        for (const auto& t : tuples[c[0]]) {
          std::vector<int> img;
          img.reserve(t.size());
          for (int c2 : t) img.push_back(one_tbl[static_cast<size_t>(c2)]);
          tbl.push_back(tuple_index[a[0]].at(img));
        }
        cod.action[phi] = std::move(tbl);
      }

  // The comparison: restrict along each width-1 segment inclusion.
  for (const auto& o : dom.objects) {
    int kk = o[0];
    std::vector<int> table;
    table.reserve(nj[kk].size());
    for (const auto& el : nj[kk]) {
      std::vector<int> t;
      t.reserve(static_cast<size_t>(j));
      for (int i = 0; i < j; ++i)
        t.push_back(idx1[kk].at(nerve_action(
            b, DeltaMap(1, j, {i, i + 1}), DeltaMap::identity(kk), el)));
      table.push_back(tuple_index[kk].at(t));
    }
    out.comp[o] = std::move(table);
  }
  return out;
}

StreamReport segal_stream_certify(const Bicategory& b, int j, int k) {
  if (j < 0 || k < 1)
    throw std::invalid_argument("segal_stream_certify: bidegree out of range");
  StreamReport rep;

  // Integer-packed bicategory tables.
  std::map<std::string, int> obj_ix, one_ix, two_ix;
  for (const auto& o : b.objects)
    obj_ix.emplace(o, static_cast<int>(obj_ix.size()));
  for (const auto& f : b.ones)
    one_ix.emplace(f.id, static_cast<int>(one_ix.size()));
  for (const auto& a : b.twos)
    two_ix.emplace(a.id, static_cast<int>(two_ix.size()));
  const int n1 = static_cast<int>(one_ix.size());
  const int n2 = static_cast<int>(two_ix.size());
  std::vector<int> one_dom(static_cast<size_t>(n1)),
      one_cod(static_cast<size_t>(n1));
  for (const auto& f : b.ones) {
    one_dom[static_cast<size_t>(one_ix[f.id])] = obj_ix.at(f.dom);
    one_cod[static_cast<size_t>(one_ix[f.id])] = obj_ix.at(f.cod);
  }
  std::vector<int> src2(static_cast<size_t>(n2)),
      tgt2(static_cast<size_t>(n2)), inv2t(static_cast<size_t>(n2), -1),
      id2t(static_cast<size_t>(n1), -1);
  for (const auto& a : b.twos) {
    int i = two_ix[a.id];
    src2[static_cast<size_t>(i)] = one_ix.at(a.dom);
    tgt2[static_cast<size_t>(i)] = one_ix.at(a.cod);
    if (auto inv = bicat::two_inverse(b, a.id))
      inv2t[static_cast<size_t>(i)] = two_ix.at(*inv);
  }
  for (const auto& [f, a] : b.id2)
    id2t[static_cast<size_t>(one_ix.at(f))] = two_ix.at(a);
  std::vector<int> hc1t(static_cast<size_t>(n1) * n1, -1),
      vct(static_cast<size_t>(n2) * n2, -1),
      hc2t(static_cast<size_t>(n2) * n2, -1),
      asst(static_cast<size_t>(n1) * n1 * n1, -1);
  for (const auto& [p, v] : b.hcomp1)
    hc1t[static_cast<size_t>(one_ix.at(p.first)) * n1 +
         one_ix.at(p.second)] = one_ix.at(v);
  for (const auto& [p, v] : b.vcomp2)
    vct[static_cast<size_t>(two_ix.at(p.first)) * n2 + two_ix.at(p.second)] =
        two_ix.at(v);
  for (const auto& [p, v] : b.hcomp2)
    hc2t[static_cast<size_t>(two_ix.at(p.first)) * n2 + two_ix.at(p.second)] =
        two_ix.at(v);
  for (const auto& [t, v] : b.assoc)
    asst[(static_cast<size_t>(one_ix.at(std::get<0>(t))) * n1 +
          one_ix.at(std::get<1>(t))) *
             n1 +
         one_ix.at(std::get<2>(t))] = two_ix.at(v);

  // Pair/triple slot numbering at width j.
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::array<int, 3>> triples;
  std::map<std::pair<int, int>, int> pid;
  std::map<std::array<int, 3>, int> tid;
  for (int u = 0; u <= j; ++u)
    for (int v = u + 1; v <= j; ++v) {
      pid[{u, v}] = static_cast<int>(pairs.size());
      pairs.push_back({u, v});
      for (int w = v + 1; w <= j; ++w) {
        tid[{u, v, w}] = static_cast<int>(triples.size());
        triples.push_back({u, v, w});
      }
    }
  std::vector<std::array<int, 4>> quads;
  for (int u = 0; u <= j; ++u)
    for (int v = u + 1; v <= j; ++v)
      for (int w = v + 1; w <= j; ++w)
        for (int x = w + 1; x <= j; ++x) quads.push_back({u, v, w, x});

  // Packed (j,1)-elements and their level-0/1 slice keys.
  struct Packed {
    std::vector<int> a, f0, f1, al, i0, i1;
    std::vector<int> key0, key1;
  };
  std::vector<NerveElement> e1 = nerve_elements(b, j, 1);
  std::vector<Packed> packed;
  packed.reserve(e1.size());
  for (const auto& e : e1) {
    Packed p;
    for (const auto& o : e.a) p.a.push_back(obj_ix.at(o));
    p.f0.resize(pairs.size());
    p.f1.resize(pairs.size());
    p.al.resize(pairs.size());
    for (const auto& [uv, _] : pid) {
      auto [u, v] = uv;
      int i = pid.at(uv);
      p.f0[static_cast<size_t>(i)] = one_ix.at(e.f.at({u, v, 0}));
      p.f1[static_cast<size_t>(i)] = one_ix.at(e.f.at({u, v, 1}));
      p.al[static_cast<size_t>(i)] = two_ix.at(e.alpha.at({u, v, 1}));
    }
    p.i0.resize(triples.size());
    p.i1.resize(triples.size());
    for (const auto& [uvw, _] : tid) {
      auto [u, v, w] = uvw;
      int i = tid.at(uvw);
      p.i0[static_cast<size_t>(i)] = two_ix.at(e.iota.at({u, v, w, 0}));
      p.i1[static_cast<size_t>(i)] = two_ix.at(e.iota.at({u, v, w, 1}));
    }
    auto key = [&p](const std::vector<int>& f, const std::vector<int>& io) {
      std::vector<int> out = p.a;
      out.insert(out.end(), f.begin(), f.end());
      out.insert(out.end(), io.begin(), io.end());
      return out;
    };
    p.key0 = key(p.f0, p.i0);
    p.key1 = key(p.f1, p.i1);
    packed.push_back(std::move(p));
  }

  std::map<std::vector<int>, std::vector<int>> bucket;
  for (std::size_t i = 0; i < packed.size(); ++i)
    bucket[packed[i].key0].push_back(static_cast<int>(i));
  static const std::vector<int> kNoSucc;
  std::vector<const std::vector<int>*> succ(packed.size(), &kNoSucc);
  for (std::size_t i = 0; i < packed.size(); ++i)
    if (auto it = bucket.find(packed[i].key1); it != bucket.end())
      succ[i] = &it->second;

  std::vector<int> chain(static_cast<size_t>(k) + 1, -1);
  auto F = [&](int z, int p) {
    return z == 0 ? packed[static_cast<size_t>(chain[1])].f0[
                        static_cast<size_t>(p)]
                  : packed[static_cast<size_t>(chain[static_cast<size_t>(z)])]
                        .f1[static_cast<size_t>(p)];
  };
  auto AL = [&](int z, int p) {
    return packed[static_cast<size_t>(chain[static_cast<size_t>(z)])]
        .al[static_cast<size_t>(p)];
  };
  auto IO = [&](int z, int t) {
    return z == 0 ? packed[static_cast<size_t>(chain[1])].i0[
                        static_cast<size_t>(t)]
                  : packed[static_cast<size_t>(chain[static_cast<size_t>(z)])]
                        .i1[static_cast<size_t>(t)];
  };

  auto chain_valid = [&]() -> bool {
    const auto& a = packed[static_cast<size_t>(chain[1])].a;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [u, v] = pairs[p];
      for (int z = 0; z <= k; ++z) {
        int f = F(z, static_cast<int>(p));
        if (one_dom[static_cast<size_t>(f)] != a[static_cast<size_t>(u)] ||
            one_cod[static_cast<size_t>(f)] != a[static_cast<size_t>(v)])
          return false;
      }
      for (int z = 1; z <= k; ++z) {
        int al = AL(z, static_cast<int>(p));
        if (src2[static_cast<size_t>(al)] != F(z - 1, static_cast<int>(p)) ||
            tgt2[static_cast<size_t>(al)] != F(z, static_cast<int>(p)))
          return false;
      }
    }
    for (std::size_t t = 0; t < triples.size(); ++t) {
      auto [u, v, w] = triples[t];
      int puv = pid.at({u, v}), pvw = pid.at({v, w}), puw = pid.at({u, w});
      for (int z = 0; z <= k; ++z) {
        int io = IO(z, static_cast<int>(t));
        int comp = hc1t[static_cast<size_t>(F(z, pvw)) * n1 + F(z, puv)];
        if (comp < 0 || src2[static_cast<size_t>(io)] != comp ||
            tgt2[static_cast<size_t>(io)] != F(z, puw) ||
            inv2t[static_cast<size_t>(io)] < 0)
          return false;
      }
      for (int z = 1; z <= k; ++z) {
        int hor = hc2t[static_cast<size_t>(AL(z, pvw)) * n2 + AL(z, puv)];
        if (hor < 0) return false;
        int lhs = vct[static_cast<size_t>(IO(z, static_cast<int>(t))) * n2 +
                      hor];
        int rhs = vct[static_cast<size_t>(AL(z, puw)) * n2 +
                      IO(z - 1, static_cast<int>(t))];
        if (lhs < 0 || lhs != rhs) return false;
      }
    }
    for (const auto& q : quads) {
      auto [u, v, w, x] = q;
      int tuvw = tid.at({u, v, w}), tuwx = tid.at({u, w, x});
      int tuvx = tid.at({u, v, x}), tvwx = tid.at({v, w, x});
      int puv = pid.at({u, v}), pvw = pid.at({v, w}), pwx = pid.at({w, x});
      for (int z = 0; z <= k; ++z) {
        int fuv = F(z, puv), fvw = F(z, pvw), fwx = F(z, pwx);
        int as = asst[(static_cast<size_t>(fwx) * n1 + fvw) * n1 + fuv];
        int whisk = hc2t[static_cast<size_t>(id2t[static_cast<size_t>(fwx)]) *
                             n2 +
                         IO(z, tuvw)];
        if (as < 0 || whisk < 0) return false;
        int lhs = vct[static_cast<size_t>(IO(z, tuwx)) * n2 +
                      vct[static_cast<size_t>(whisk) * n2 + as]];
        int rhs = vct[static_cast<size_t>(IO(z, tuvx)) * n2 +
                      hc2t[static_cast<size_t>(IO(z, tvwx)) * n2 +
                           id2t[static_cast<size_t>(F(z, puv))]]];
        if (lhs < 0 || lhs != rhs) return false;
      }
    }
    return true;
  };

  std::function<void(int, int)> walk = [&](int idx, int depth) {
    chain[static_cast<size_t>(depth)] = idx;
    if (depth == k) {
      ++rep.chains;
      if (chain_valid())
        ++rep.valid;
      else if (rep.message.empty())
        rep.message = "chain " + std::to_string(rep.chains) +
                      " glues to an invalid element";
      return;
    }
    for (int nxt : *succ[static_cast<size_t>(idx)]) walk(nxt, depth + 1);
  };
  for (std::size_t i = 0; i < packed.size(); ++i)
    walk(static_cast<int>(i), 1);

  rep.pass = rep.chains == rep.valid;
  if (rep.message.empty())
    rep.message = std::to_string(rep.chains) + " chains, all glue to valid "
                  "elements";
  return rep;
}

}  // namespace globcat::nerve2
