#include "core/globular.hpp"

#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace globcat::core {

int GlobularSet::dim_of(const std::string& id) const {
  for (int m = 0; m < static_cast<int>(cells.size()); ++m)
    for (const auto& c : cells[m])
      if (c == id) return m;
  return -1;
}

bool GlobularSet::has_cell(const std::string& id, int dim) const {
  if (dim < 0 || dim >= static_cast<int>(cells.size())) return false;
  for (const auto& c : cells[dim])
    if (c == id) return true;
  return false;
}

const std::string& GlobularSet::src_of(const std::string& id) const {
  auto it = src.find(id);
  if (it == src.end())
    throw std::invalid_argument("globular set: no source for " + id);
  return it->second;
}

const std::string& GlobularSet::tgt_of(const std::string& id) const {
  auto it = tgt.find(id);
  if (it == tgt.end())
    throw std::invalid_argument("globular set: no target for " + id);
  return it->second;
}

std::string GlobularSet::src_iter(const std::string& id, int k) const {
  std::string cur = id;
  int d = dim_of(id);
  while (d > k) {
    cur = src_of(cur);
    --d;
  }
  return cur;
}

std::string GlobularSet::tgt_iter(const std::string& id, int k) const {
  std::string cur = id;
  int d = dim_of(id);
  while (d > k) {
    cur = tgt_of(cur);
    --d;
  }
  return cur;
}

std::vector<std::string> validate_globular(const GlobularSet& x) {
  std::vector<std::string> errs;
  if (static_cast<int>(x.cells.size()) != x.n + 1) {
    errs.push_back("cells must have exactly n+1 grades");
    return errs;
  }
  std::unordered_set<std::string> seen;
  for (const auto& grade : x.cells)
    for (const auto& id : grade) {
      if (!seen.insert(id).second) errs.push_back("duplicate cell id " + id);
    }
  for (int m = 1; m <= x.n; ++m) {
    for (const auto& id : x.cells[m]) {
      auto s = x.src.find(id);
      auto t = x.tgt.find(id);
      if (s == x.src.end()) {
        errs.push_back("missing source for " + id);
        continue;
      }
      if (t == x.tgt.end()) {
        errs.push_back("missing target for " + id);
        continue;
      }
      if (!x.has_cell(s->second, m - 1))
        errs.push_back("source of " + id + " is not a cell of dimension " +
                       std::to_string(m - 1));
      if (!x.has_cell(t->second, m - 1))
        errs.push_back("target of " + id + " is not a cell of dimension " +
                       std::to_string(m - 1));
      if (m >= 2 && x.has_cell(s->second, m - 1) &&
          x.has_cell(t->second, m - 1)) {
        auto ss = x.src.find(s->second), ts = x.src.find(t->second);
        auto st = x.tgt.find(s->second), tt = x.tgt.find(t->second);
        // Boundary cells missing their own boundaries are reported at m-1.
        if (ss != x.src.end() && ts != x.src.end() &&
            ss->second != ts->second)
          errs.push_back("globularity src-src failed at " + id);
        if (st != x.tgt.end() && tt != x.tgt.end() &&
            st->second != tt->second)
          errs.push_back("globularity tgt-tgt failed at " + id);
      }
    }
  }
  // No stray boundary assignments for 0-cells or unknown ids.
  for (const auto& [id, _] : x.src) {
    int d = x.dim_of(id);
    if (d <= 0) errs.push_back("source assigned to non-positive-dim id " + id);
  }
  for (const auto& [id, _] : x.tgt) {
    int d = x.dim_of(id);
    if (d <= 0) errs.push_back("target assigned to non-positive-dim id " + id);
  }
  return errs;
}

const std::string& GlobularMap::operator()(const std::string& id) const {
  auto it = comp.find(id);
  if (it == comp.end())
    throw std::invalid_argument("globular map: no image for " + id);
  return it->second;
}

std::vector<std::string> validate_globular_map(const GlobularSet& dom,
                                               const GlobularSet& cod,
                                               const GlobularMap& f) {
  std::vector<std::string> errs;
  for (int m = 0; m <= dom.n; ++m) {
    for (const auto& id : dom.cells[m]) {
      auto it = f.comp.find(id);
      if (it == f.comp.end()) {
        errs.push_back("no image for " + id);
        continue;
      }
      if (!cod.has_cell(it->second, m)) {
        errs.push_back("image of " + id + " is not a codomain cell of dim " +
                       std::to_string(m));
        continue;
      }
      if (m >= 1) {
        if (f.comp.count(dom.src_of(id)) &&
            cod.src_of(it->second) != f.comp.at(dom.src_of(id)))
          errs.push_back("map does not commute with src at " + id);
        if (f.comp.count(dom.tgt_of(id)) &&
            cod.tgt_of(it->second) != f.comp.at(dom.tgt_of(id)))
          errs.push_back("map does not commute with tgt at " + id);
      }
    }
  }
  return errs;
}

nlohmann::json globular_to_json(const GlobularSet& x) {
  nlohmann::json j;
  j["n"] = x.n;
  j["cells"] = x.cells;
  j["src"] = x.src;
  j["tgt"] = x.tgt;
  return j;
}

GlobularSet globular_from_json(const nlohmann::json& j) {
  GlobularSet x;
  x.n = j.at("n").get<int>();
  x.cells = j.at("cells").get<std::vector<std::vector<std::string>>>();
  x.src = j.at("src").get<std::unordered_map<std::string, std::string>>();
  x.tgt = j.at("tgt").get<std::unordered_map<std::string, std::string>>();
  return x;
}

}  // namespace globcat::core
