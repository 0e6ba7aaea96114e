#include "theta/theta.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace globcat::theta {

DeltaMap::DeltaMap(int dom_, int cod_, std::vector<int> table_)
    : dom(dom_), cod(cod_), table(std::move(table_)) {
  if (dom < 0 || cod < 0)
    throw std::invalid_argument("DeltaMap: negative ordinal");
  if (table.size() != static_cast<size_t>(dom) + 1)
    throw std::invalid_argument("DeltaMap: table size must be dom + 1");
  for (size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0 || table[i] > cod)
      throw std::invalid_argument("DeltaMap: value out of range");
    if (i > 0 && table[i - 1] > table[i])
      throw std::invalid_argument("DeltaMap: table not monotone");
  }
}

DeltaMap DeltaMap::identity(int k) {
  std::vector<int> t(static_cast<size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) t[static_cast<size_t>(i)] = i;
  return DeltaMap(k, k, std::move(t));
}

DeltaMap DeltaMap::constant(int dom_, int cod_, int value) {
  return DeltaMap(dom_, cod_,
                  std::vector<int>(static_cast<size_t>(dom_) + 1, value));
}

bool DeltaMap::is_constant() const {
  return table.front() == table.back();
}

DeltaMap delta_compose(const DeltaMap& g, const DeltaMap& f) {
  if (f.cod != g.dom)
    throw std::invalid_argument("delta_compose: middle ordinal mismatch");
  std::vector<int> t(f.table.size());
  for (size_t i = 0; i < t.size(); ++i)
    t[i] = g.table[static_cast<size_t>(f.table[i])];
  return DeltaMap(f.dom, g.cod, std::move(t));
}

std::vector<DeltaMap> delta_hom(int j, int k) {
  std::vector<DeltaMap> out;
  std::vector<int> t(static_cast<size_t>(j) + 1, 0);
  while (true) {
    out.emplace_back(j, k, t);
    // Next weakly increasing tuple with entries in [0, k].
    int i = j;
    while (i >= 0 && t[static_cast<size_t>(i)] == k) --i;
    if (i < 0) break;
    int v = t[static_cast<size_t>(i)] + 1;
    for (int l = i; l <= j; ++l) t[static_cast<size_t>(l)] = v;
  }
  return out;
}

ThetaObject theta_object(std::vector<int> coords) {
  for (int c : coords)
    if (c < 0) throw std::invalid_argument("theta_object: negative coord");
  int n = static_cast<int>(coords.size());
  for (int i = 0; i + 1 < n; ++i) {
    if (coords[static_cast<size_t>(i)] == 0) {
      std::fill(coords.begin() + i + 1, coords.end(), 0);
      break;
    }
  }
  return ThetaObject{std::move(coords)};
}

bool theta_object_is_canonical(const std::vector<int>& coords) {
  ThetaObject c = theta_object(coords);
  return c.coords == coords;
}

namespace {

std::vector<DeltaMap> canonical_comps(const ThetaObject& dom,
                                      const ThetaObject& cod,
                                      std::vector<DeltaMap> comps) {
  int n = dom.n();
  for (int i = 0; i + 1 < n; ++i) {
    if (comps[static_cast<size_t>(i)].is_constant()) {
      for (int l = i + 1; l < n; ++l)
        comps[static_cast<size_t>(l)] = DeltaMap::constant(dom[l], cod[l], 0);
      break;
    }
  }
  return comps;
}

}  // namespace

ThetaMorphism theta_morphism(const ThetaObject& dom, const ThetaObject& cod,
                             std::vector<DeltaMap> comps) {
  if (dom.n() != cod.n() || static_cast<int>(comps.size()) != dom.n())
    throw std::invalid_argument("theta_morphism: axis count mismatch");
  ThetaObject d = theta_object(dom.coords);
  ThetaObject c = theta_object(cod.coords);
  if (!(d == dom) || !(c == cod))
    throw std::invalid_argument("theta_morphism: endpoints not canonical");
  for (int i = 0; i < dom.n(); ++i) {
    const DeltaMap& f = comps[static_cast<size_t>(i)];
    if (f.dom != dom[i] || f.cod != cod[i])
      throw std::invalid_argument("theta_morphism: component shape mismatch");
  }
  return ThetaMorphism{d, c, canonical_comps(d, c, std::move(comps))};
}

ThetaMorphism theta_identity(const ThetaObject& a) {
  std::vector<DeltaMap> comps;
  comps.reserve(static_cast<size_t>(a.n()));
  for (int i = 0; i < a.n(); ++i) comps.push_back(DeltaMap::identity(a[i]));
  return theta_morphism(a, a, std::move(comps));
}

ThetaMorphism theta_compose(const ThetaMorphism& g, const ThetaMorphism& f) {
  if (!(f.cod == g.dom))
    throw std::invalid_argument("theta_compose: middle object mismatch");
  std::vector<DeltaMap> comps;
  comps.reserve(f.comps.size());
  for (size_t i = 0; i < f.comps.size(); ++i)
    comps.push_back(delta_compose(g.comps[i], f.comps[i]));
  return theta_morphism(f.dom, g.cod, std::move(comps));
}

std::vector<ThetaObject> theta_objects(int n, int bound) {
  std::vector<ThetaObject> out;
  std::vector<int> coords(static_cast<size_t>(n), 0);
  while (true) {
    if (theta_object_is_canonical(coords)) out.push_back(ThetaObject{coords});
    int i = n - 1;
    while (i >= 0 && coords[static_cast<size_t>(i)] == bound) --i;
    if (i < 0) break;
    ++coords[static_cast<size_t>(i)];
    std::fill(coords.begin() + i + 1, coords.end(), 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ThetaMorphism> theta_hom(const ThetaObject& a,
                                     const ThetaObject& b) {
  int n = a.n();
  std::vector<std::vector<DeltaMap>> per_axis;
  per_axis.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) per_axis.push_back(delta_hom(a[i], b[i]));
  std::vector<ThetaMorphism> out;
  std::vector<DeltaMap> pick;
  std::function<void(int)> rec = [&](int axis) {
    if (axis == n) {
      out.push_back(theta_morphism(a, b, pick));
      return;
    }
    for (const DeltaMap& f : per_axis[static_cast<size_t>(axis)]) {
      pick.push_back(f);
      rec(axis + 1);
      pick.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ThetaMorphism theta_from_delta(const std::vector<int>& dom,
                               const std::vector<int>& cod,
                               const std::vector<DeltaMap>& comps) {
  if (dom.size() != cod.size() || comps.size() != dom.size())
    throw std::invalid_argument("theta_from_delta: axis count mismatch");
  ThetaObject d = theta_object(dom);
  ThetaObject c = theta_object(cod);
  std::vector<DeltaMap> out;
  out.reserve(comps.size());
  for (int l = 0; l < d.n(); ++l) {
    const DeltaMap& f = comps[static_cast<size_t>(l)];
    if (f.dom == d[l] && f.cod == c[l])
      out.push_back(f);
    else
      // Collapse only happens past a constant component, where the choice
      // is quotiented away; use the canonical constant at 0.
      out.push_back(DeltaMap::constant(d[l], c[l], 0));
  }
  return theta_morphism(d, c, std::move(out));
}

ThetaMorphism theta_generator(GenKind kind, int axis, int k, int i,
                              std::vector<int> other) {
  int n = static_cast<int>(other.size());
  if (axis < 0 || axis >= n)
    throw std::invalid_argument("theta_generator: axis out of range");
  int d = 0, c = 0;
  std::vector<int> table;
  switch (kind) {
    case GenKind::Face:
      if (k < 1 || i < 0 || i > k)
        throw std::invalid_argument("theta_generator: bad face index");
      d = k - 1;
      c = k;
      for (int j = 0; j <= d; ++j) table.push_back(j < i ? j : j + 1);
      break;
    case GenKind::Degeneracy:
      if (k < 0 || i < 0 || i > k)
        throw std::invalid_argument("theta_generator: bad degeneracy index");
      d = k + 1;
      c = k;
      for (int j = 0; j <= d; ++j) table.push_back(j <= i ? j : j - 1);
      break;
    case GenKind::Iota:
      if (k < 1 || i < 0 || i >= k)
        throw std::invalid_argument("theta_generator: bad segment index");
      d = 1;
      c = k;
      table = {i, i + 1};
      break;
    case GenKind::Sigma:
      d = 0;
      c = 1;
      table = {0};
      break;
    case GenKind::Tau:
      d = 0;
      c = 1;
      table = {1};
      break;
  }
  std::vector<int> dom_coords = other;
  std::vector<int> cod_coords = std::move(other);
  dom_coords[static_cast<size_t>(axis)] = d;
  cod_coords[static_cast<size_t>(axis)] = c;
  ThetaObject dom = theta_object(std::move(dom_coords));
  ThetaObject cod = theta_object(std::move(cod_coords));
  std::vector<DeltaMap> comps;
  comps.reserve(static_cast<size_t>(n));
  for (int l = 0; l < n; ++l) {
    if (l == axis && dom[l] == d && cod[l] == c)
      comps.emplace_back(d, c, table);
    else if (dom[l] == cod[l])
      comps.push_back(DeltaMap::identity(dom[l]));
    else
      // Canonicalizing an endpoint zeroed this axis on one side; the
      // component is forced to be constant anyway, so pick the map at 0.
      comps.push_back(DeltaMap::constant(dom[l], cod[l], 0));
  }
  return theta_morphism(dom, cod, std::move(comps));
}

std::string theta_object_to_string(const ThetaObject& a) {
  std::string s = "(";
  for (int i = 0; i < a.n(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

std::string theta_morphism_to_string(const ThetaMorphism& f) {
  std::string s = theta_object_to_string(f.dom) + "->" +
                  theta_object_to_string(f.cod) + ":";
  for (size_t i = 0; i < f.comps.size(); ++i) {
    if (i) s += "x";
    s += "[";
    for (size_t j = 0; j < f.comps[i].table.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(f.comps[i].table[j]);
    }
    s += "]";
  }
  return s;
}

}  // namespace globcat::theta
