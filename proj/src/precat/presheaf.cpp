#include "precat/presheaf.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace globcat::precat {

using theta::DeltaMap;
using theta::ThetaMorphism;
using theta::ThetaObject;

const std::vector<std::string>& PresheafWindow::at(
    const ThetaObject& a) const {
  auto it = value.find(a);
  if (it == value.end())
    throw std::invalid_argument("PresheafWindow: no value at " +
                                theta::theta_object_to_string(a));
  return it->second;
}

const std::vector<int>& PresheafWindow::table(const ThetaMorphism& f) const {
  auto it = action.find(f);
  if (it == action.end())
    throw std::invalid_argument("PresheafWindow: no action for " +
                                theta::theta_morphism_to_string(f));
  return it->second;
}

std::vector<std::string> presheaf_check(const PresheafWindow& w,
                                        std::size_t max_errors) {
  std::vector<std::string> errs;
  auto report = [&](std::string msg) {
    if (errs.size() < max_errors) errs.push_back(std::move(msg));
  };
  for (const auto& a : w.objects) {
    if (!w.value.count(a)) report("no value at " + theta_object_to_string(a));
    if (a.n() != w.n) report("object with wrong axis count");
  }
  if (!errs.empty()) return errs;

  // Structural soundness of the provided tables.
  for (const auto& [f, t] : w.action) {
    if (!w.value.count(f.dom) || !w.value.count(f.cod)) {
      report("action endpoints outside window: " +
             theta_morphism_to_string(f));
      continue;
    }
    if (t.size() != w.at(f.cod).size()) {
      report("action table has wrong size: " + theta_morphism_to_string(f));
      continue;
    }
    int dom_size = static_cast<int>(w.at(f.dom).size());
    for (int v : t)
      if (v < 0 || v >= dom_size) {
        report("action entry out of range: " + theta_morphism_to_string(f));
        break;
      }
  }
  if (!errs.empty()) return errs;

  // Completeness: every canonical morphism within the window is tabulated.
  for (const auto& a : w.objects)
    for (const auto& b : w.objects)
      for (const auto& f : theta_hom(a, b))
        if (!w.action.count(f))
          report("missing action for " + theta_morphism_to_string(f));
  if (!errs.empty()) return errs;

  // Identities act as identities.
  for (const auto& a : w.objects) {
    const auto& t = w.table(theta_identity(a));
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] != static_cast<int>(i)) {
        report("identity action is not the identity at " +
               theta_object_to_string(a));
        break;
      }
  }

  // Functoriality over all composable pairs.
  std::map<ThetaObject, std::vector<const ThetaMorphism*>> by_cod;
  for (const auto& [f, t] : w.action) by_cod[f.cod].push_back(&f);
  for (const auto& [g, tg] : w.action) {
    auto it = by_cod.find(g.dom);
    if (it == by_cod.end()) continue;
    for (const ThetaMorphism* f : it->second) {
      if (errs.size() >= max_errors) return errs;
      ThetaMorphism gf = theta_compose(g, *f);
      const auto& tf = w.table(*f);
      const auto& tgf = w.table(gf);
      for (std::size_t i = 0; i < tg.size(); ++i)
        if (tgf[i] != tf[static_cast<size_t>(tg[i])]) {
          report("functoriality fails: A(g.f) != A(f).A(g) for g = " +
                 theta_morphism_to_string(g) + ", f = " +
                 theta_morphism_to_string(*f) + " at element " +
                 w.at(g.cod)[i]);
          break;
        }
    }
  }
  return errs;
}

std::vector<std::vector<int>> wide_pullback(
    const std::vector<int>& sizes, const std::vector<std::vector<int>>& t_maps,
    const std::vector<std::vector<int>>& s_maps) {
  std::size_t k = sizes.size();
  std::size_t legs = k == 0 ? 0 : k - 1;
  if (t_maps.size() != legs || s_maps.size() != legs)
    throw std::invalid_argument("wide_pullback: need k-1 leg maps");
  std::vector<std::vector<int>> out;
  std::vector<int> tuple;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == k) {
      out.push_back(tuple);
      return;
    }
    for (int i = 0; i < sizes[j]; ++i) {
      if (j > 0 && t_maps[j - 1][static_cast<size_t>(tuple.back())] !=
                       s_maps[j - 1][static_cast<size_t>(i)])
        continue;
      tuple.push_back(i);
      rec(j + 1);
      tuple.pop_back();
    }
  };
  rec(0);
  return out;
}

PresheafWindow restrict_window(const PresheafWindow& w,
                               const std::vector<int>& head) {
  int residual = w.n - static_cast<int>(head.size());
  if (residual < 0)
    throw std::invalid_argument("restrict_window: head too long");
  PresheafWindow out;
  out.n = residual;
  out.bound = w.bound;
  out.objects = theta::theta_objects(residual, w.bound);
  auto full = [&](const ThetaObject& r) {
    std::vector<int> coords = head;
    coords.insert(coords.end(), r.coords.begin(), r.coords.end());
    return theta::theta_object(std::move(coords));
  };
  for (const auto& r : out.objects) out.value[r] = w.at(full(r));
  for (const auto& r : out.objects)
    for (const auto& r2 : out.objects)
      for (const auto& phi : theta_hom(r, r2)) {
        std::vector<int> dc = head, cc = head;
        dc.insert(dc.end(), r.coords.begin(), r.coords.end());
        cc.insert(cc.end(), r2.coords.begin(), r2.coords.end());
        std::vector<DeltaMap> comps;
        for (int h : head) comps.push_back(DeltaMap::identity(h));
        comps.insert(comps.end(), phi.comps.begin(), phi.comps.end());
        out.action[phi] = w.table(theta::theta_from_delta(dc, cc, comps));
      }
  return out;
}

nlohmann::json window_to_json(const PresheafWindow& w) {
  nlohmann::json j;
  j["n"] = w.n;
  j["bound"] = w.bound;
  j["values"] = nlohmann::json::array();
  for (const auto& a : w.objects)
    j["values"].push_back({{"object", a.coords}, {"labels", w.at(a)}});
  j["actions"] = nlohmann::json::array();
  for (const auto& [f, t] : w.action) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : f.comps) comps.push_back(c.table);
    j["actions"].push_back({{"dom", f.dom.coords},
                            {"cod", f.cod.coords},
                            {"comps", comps},
                            {"table", t}});
  }
  return j;
}

PresheafWindow window_from_json(const nlohmann::json& j) {
  PresheafWindow w;
  w.n = j.at("n").get<int>();
  w.bound = j.at("bound").get<int>();
  for (const auto& v : j.at("values")) {
    ThetaObject a = theta::theta_object(v.at("object").get<std::vector<int>>());
    w.objects.push_back(a);
    w.value[a] = v.at("labels").get<std::vector<std::string>>();
  }
  std::sort(w.objects.begin(), w.objects.end());
  for (const auto& ac : j.at("actions")) {
    std::vector<int> dc = ac.at("dom").get<std::vector<int>>();
    std::vector<int> cc = ac.at("cod").get<std::vector<int>>();
    std::vector<DeltaMap> comps;
    auto tables = ac.at("comps").get<std::vector<std::vector<int>>>();
    for (std::size_t i = 0; i < tables.size(); ++i)
      comps.emplace_back(static_cast<int>(tables[i].size()) - 1,
                         cc[i], tables[i]);
    w.action[theta::theta_from_delta(dc, cc, comps)] =
        ac.at("table").get<std::vector<int>>();
  }
  return w;
}

namespace {

// A composable string in a category: the base object for length 0,
// otherwise the arrow ids in order.
struct CatString {
  std::string base;
  std::vector<std::string> arrows;
};

std::string string_label(const CatString& s) {
  if (s.arrows.empty()) return s.base;
  std::string out;
  for (std::size_t i = 0; i < s.arrows.size(); ++i) {
    if (i) out += ">";
    out += s.arrows[i];
  }
  return out;
}

std::string object_at(const Category& c, const CatString& s, int i) {
  if (s.arrows.empty()) return s.base;
  if (i == 0) return c.mor(s.arrows.front()).dom;
  return c.mor(s.arrows[static_cast<size_t>(i) - 1]).cod;
}

}  // namespace

PresheafWindow nerve_of_category(const Category& c, int bound) {
  PresheafWindow w;
  w.n = 1;
  w.bound = bound;
  w.objects = theta::theta_objects(1, bound);

  std::vector<std::vector<CatString>> strings(static_cast<size_t>(bound) + 1);
  for (const auto& o : c.objects) strings[0].push_back({o, {}});
  for (int k = 1; k <= bound; ++k)
    for (const auto& s : strings[static_cast<size_t>(k) - 1])
      for (const auto& m : c.morphisms)
        if (m.dom == object_at(c, s, k - 1)) {
          CatString ext = s;
          if (ext.arrows.empty()) ext.base.clear();
          ext.arrows.push_back(m.id);
          strings[static_cast<size_t>(k)].push_back(std::move(ext));
        }

  std::vector<std::map<std::string, int>> index(static_cast<size_t>(bound) +
                                                1);
  for (int k = 0; k <= bound; ++k) {
    auto& labels = w.value[theta::theta_object({k})];
    for (const auto& s : strings[static_cast<size_t>(k)]) {
      index[static_cast<size_t>(k)][string_label(s)] =
          static_cast<int>(labels.size());
      labels.push_back(string_label(s));
    }
  }

  for (int r = 0; r <= bound; ++r)
    for (int k = 0; k <= bound; ++k)
      for (const auto& phi : theta::delta_hom(r, k)) {
        std::vector<int> tbl;
        tbl.reserve(strings[static_cast<size_t>(k)].size());
        for (const auto& s : strings[static_cast<size_t>(k)]) {
          CatString out;
          if (r == 0) {
            out.base = object_at(c, s, phi(0));
          } else {
            for (int i = 1; i <= r; ++i) {
              std::string acc = c.id_of(object_at(c, s, phi(i - 1)));
              for (int l = phi(i - 1) + 1; l <= phi(i); ++l)
                acc = c.compose(s.arrows[static_cast<size_t>(l) - 1], acc);
              out.arrows.push_back(std::move(acc));
            }
          }
          tbl.push_back(index[static_cast<size_t>(r)].at(string_label(out)));
        }
        w.action[theta::theta_morphism(theta::theta_object({r}),
                                       theta::theta_object({k}), {phi})] =
            std::move(tbl);
      }
  return w;
}

}  // namespace globcat::precat
