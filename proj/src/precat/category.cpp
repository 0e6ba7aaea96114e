#include "precat/category.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace globcat::precat {

const Category::Mor& Category::mor(const std::string& id) const {
  for (const auto& m : morphisms)
    if (m.id == id) return m;
  throw std::invalid_argument("Category: unknown morphism " + id);
}

bool Category::has_object(const std::string& o) const {
  return std::find(objects.begin(), objects.end(), o) != objects.end();
}

const std::string& Category::id_of(const std::string& o) const {
  auto it = identity.find(o);
  if (it == identity.end())
    throw std::invalid_argument("Category: no identity for " + o);
  return it->second;
}

const std::string& Category::compose(const std::string& g,
                                     const std::string& f) const {
  auto it = comp.find({g, f});
  if (it == comp.end())
    throw std::invalid_argument("Category: no composite " + g + " . " + f);
  return it->second;
}

std::vector<std::string> category_validate(const Category& c) {
  std::vector<std::string> errs;
  std::set<std::string> obj_set(c.objects.begin(), c.objects.end());
  if (obj_set.size() != c.objects.size()) errs.push_back("duplicate objects");
  std::set<std::string> mor_ids;
  for (const auto& m : c.morphisms) {
    if (!mor_ids.insert(m.id).second)
      errs.push_back("duplicate morphism id " + m.id);
    if (!obj_set.count(m.dom) || !obj_set.count(m.cod))
      errs.push_back("morphism " + m.id + " has unknown endpoint");
  }
  for (const auto& [pair, gf] : c.comp)
    if (!mor_ids.count(pair.first) || !mor_ids.count(pair.second) ||
        !mor_ids.count(gf))
      errs.push_back("composition table mentions unknown morphism " +
                     pair.first + " . " + pair.second + " = " + gf);
  if (!errs.empty()) return errs;
  for (const auto& o : c.objects) {
    auto it = c.identity.find(o);
    if (it == c.identity.end() || !mor_ids.count(it->second)) {
      errs.push_back("missing identity for " + o);
      continue;
    }
    const auto& m = c.mor(it->second);
    if (m.dom != o || m.cod != o)
      errs.push_back("identity of " + o + " has wrong endpoints");
  }
  for (const auto& g : c.morphisms) {
    for (const auto& f : c.morphisms) {
      if (f.cod != g.dom) {
        if (c.comp.count({g.id, f.id}))
          errs.push_back("composite of non-composable " + g.id + " . " + f.id);
        continue;
      }
      auto it = c.comp.find({g.id, f.id});
      if (it == c.comp.end()) {
        errs.push_back("missing composite " + g.id + " . " + f.id);
        continue;
      }
      if (!mor_ids.count(it->second)) {
        errs.push_back("composite " + g.id + " . " + f.id + " unknown");
        continue;
      }
      const auto& gf = c.mor(it->second);
      if (gf.dom != f.dom || gf.cod != g.cod)
        errs.push_back("composite " + g.id + " . " + f.id +
                       " has wrong endpoints");
    }
  }
  if (!errs.empty()) return errs;
  for (const auto& f : c.morphisms) {
    if (c.compose(f.id, c.id_of(f.dom)) != f.id)
      errs.push_back("right unit law fails at " + f.id);
    if (c.compose(c.id_of(f.cod), f.id) != f.id)
      errs.push_back("left unit law fails at " + f.id);
  }
  for (const auto& h : c.morphisms)
    for (const auto& g : c.morphisms) {
      if (g.cod != h.dom) continue;
      for (const auto& f : c.morphisms) {
        if (f.cod != g.dom) continue;
        if (c.compose(h.id, c.compose(g.id, f.id)) !=
            c.compose(c.compose(h.id, g.id), f.id))
          errs.push_back("associativity fails at " + h.id + ", " + g.id +
                         ", " + f.id);
      }
    }
  return errs;
}

nlohmann::json category_to_json(const Category& c) {
  nlohmann::json j;
  j["objects"] = c.objects;
  j["morphisms"] = nlohmann::json::array();
  for (const auto& m : c.morphisms)
    j["morphisms"].push_back({{"id", m.id}, {"dom", m.dom}, {"cod", m.cod}});
  j["identity"] = c.identity;
  j["comp"] = nlohmann::json::array();
  for (const auto& [pair, gf] : c.comp)
    j["comp"].push_back({pair.first, pair.second, gf});
  return j;
}

Category category_from_json(const nlohmann::json& j) {
  Category c;
  c.objects = j.at("objects").get<std::vector<std::string>>();
  for (const auto& m : j.at("morphisms"))
    c.morphisms.push_back({m.at("id").get<std::string>(),
                           m.at("dom").get<std::string>(),
                           m.at("cod").get<std::string>()});
  c.identity = j.at("identity").get<std::map<std::string, std::string>>();
  for (const auto& t : j.at("comp"))
    c.comp[{t.at(0).get<std::string>(), t.at(1).get<std::string>()}] =
        t.at(2).get<std::string>();
  return c;
}

Category walking_arrow() {
  Category c;
  c.objects = {"0", "1"};
  c.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"f", "0", "1"}};
  c.identity = {{"0", "id0"}, {"1", "id1"}};
  c.comp = {{{"id0", "id0"}, "id0"}, {{"id1", "id1"}, "id1"},
            {{"f", "id0"}, "f"},    {{"id1", "f"}, "f"}};
  return c;
}

Category discrete_category(int d) {
  Category c;
  for (int i = 0; i < d; ++i) {
    std::string o = "o" + std::to_string(i);
    std::string m = "id" + std::to_string(i);
    c.objects.push_back(o);
    c.morphisms.push_back({m, o, o});
    c.identity[o] = m;
    c.comp[{m, m}] = m;
  }
  return c;
}

Category chain_category(int n) {
  std::vector<std::vector<bool>> leq(static_cast<size_t>(n) + 1,
                                     std::vector<bool>(
                                         static_cast<size_t>(n) + 1, false));
  for (int x = 0; x <= n; ++x)
    for (int y = x; y <= n; ++y)
      leq[static_cast<size_t>(x)][static_cast<size_t>(y)] = true;
  return preorder_category(leq);
}

Category monoid_category(const std::vector<std::string>& elems,
                         const std::map<std::pair<std::string, std::string>,
                                        std::string>& mult,
                         const std::string& unit) {
  Category c;
  c.objects = {"*"};
  for (const auto& e : elems) c.morphisms.push_back({e, "*", "*"});
  c.identity = {{"*", unit}};
  for (const auto& g : elems)
    for (const auto& f : elems) c.comp[{g, f}] = mult.at({g, f});
  return c;
}

Category preorder_category(const std::vector<std::vector<bool>>& leq) {
  int n = static_cast<int>(leq.size());
  Category c;
  auto arrow = [](int x, int y) {
    return "a" + std::to_string(x) + "_" + std::to_string(y);
  };
  for (int x = 0; x < n; ++x) {
    std::string o = "o" + std::to_string(x);
    c.objects.push_back(o);
    c.identity[o] = arrow(x, x);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y && !leq[static_cast<size_t>(x)][static_cast<size_t>(y)])
        throw std::invalid_argument("preorder_category: not reflexive");
      if (leq[static_cast<size_t>(x)][static_cast<size_t>(y)])
        c.morphisms.push_back({arrow(x, y), "o" + std::to_string(x),
                               "o" + std::to_string(y)});
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!leq[static_cast<size_t>(x)][static_cast<size_t>(y)]) continue;
      for (int z = 0; z < n; ++z) {
        if (!leq[static_cast<size_t>(y)][static_cast<size_t>(z)]) continue;
        if (!leq[static_cast<size_t>(x)][static_cast<size_t>(z)])
          throw std::invalid_argument("preorder_category: not transitive");
        c.comp[{arrow(y, z), arrow(x, y)}] = arrow(x, z);
      }
    }
  return c;
}

Category parallel_pair() {
  Category c;
  c.objects = {"x", "y"};
  c.morphisms = {{"idx", "x", "x"},
                 {"idy", "y", "y"},
                 {"a", "x", "y"},
                 {"b", "x", "y"}};
  c.identity = {{"x", "idx"}, {"y", "idy"}};
  c.comp = {{{"idx", "idx"}, "idx"}, {{"idy", "idy"}, "idy"},
            {{"a", "idx"}, "a"},     {{"idy", "a"}, "a"},
            {{"b", "idx"}, "b"},     {{"idy", "b"}, "b"}};
  return c;
}

Category random_category(int objects, std::uint32_t seed) {
  if (objects < 1)
    throw std::invalid_argument("random_category: needs at least one object");
  std::mt19937 rng(seed);
  int n = objects;

  // Random partial order: upward edges only, then transitive closure, so
  // no non-identity arrow composes back to an identity.
  std::vector<std::vector<bool>> leq(static_cast<size_t>(n),
                                     std::vector<bool>(static_cast<size_t>(n)));
  std::uniform_int_distribution<int> coin(0, 1);
  for (int x = 0; x < n; ++x) {
    leq[static_cast<size_t>(x)][static_cast<size_t>(x)] = true;
    for (int y = x + 1; y < n; ++y)
      leq[static_cast<size_t>(x)][static_cast<size_t>(y)] = coin(rng) == 1;
  }
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (leq[static_cast<size_t>(x)][static_cast<size_t>(k)] &&
            leq[static_cast<size_t>(k)][static_cast<size_t>(y)])
          leq[static_cast<size_t>(x)][static_cast<size_t>(y)] = true;
  Category c = preorder_category(leq);

  // Extra endomorphisms: per object a cyclic monoid on the identity plus
  // `extra` loops.  Any composite mixing a loop with a non-identity order
  // arrow collapses to that arrow, which keeps composition associative.
  std::uniform_int_distribution<int> nloops(0, 2);
  auto loop = [](int x, int k) {
    return k == 0 ? "a" + std::to_string(x) + "_" + std::to_string(x)
                  : "m" + std::to_string(x) + "_" + std::to_string(k);
  };
  for (int x = 0; x < n; ++x) {
    int extra = nloops(rng);
    if (extra == 0) continue;
    std::string o = "o" + std::to_string(x);
    for (int k = 1; k <= extra; ++k) c.morphisms.push_back({loop(x, k), o, o});
    int order = extra + 1;
    for (int i = 0; i < order; ++i)
      for (int j = 0; j < order; ++j)
        c.comp[{loop(x, i), loop(x, j)}] = loop(x, (i + j) % order);
    for (const auto& m : c.morphisms) {
      if (m.dom == m.cod) continue;
      for (int k = 1; k <= extra; ++k) {
        if (m.dom == o) c.comp[{m.id, loop(x, k)}] = m.id;
        if (m.cod == o) c.comp[{loop(x, k), m.id}] = m.id;
      }
    }
  }
  return c;
}

}  // namespace globcat::precat
