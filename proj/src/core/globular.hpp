#pragma once
// Finite globular sets: graded families of cells with source/target maps
// one dimension down, subject to the globularity equations
// src(src(x)) = src(tgt(x)) and tgt(src(x)) = tgt(tgt(x)).

#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace globcat::core {

struct GlobularSet {
  int n = 0;  // top dimension
  // cells[m] lists the m-cell ids, 0 <= m <= n, in a fixed order.
  std::vector<std::vector<std::string>> cells;
  // src/tgt of a cell of dimension >= 1 (ids are globally unique).
  std::unordered_map<std::string, std::string> src;
  std::unordered_map<std::string, std::string> tgt;

  int dim_of(const std::string& id) const;  // -1 when absent
  bool has_cell(const std::string& id, int dim) const;
  const std::string& src_of(const std::string& id) const;
  const std::string& tgt_of(const std::string& id) const;
  // Iterated boundary down to dimension k.
  std::string src_iter(const std::string& id, int k) const;
  std::string tgt_iter(const std::string& id, int k) const;
};

// Structural validation; returns a list of human-readable violations
// (empty means valid): duplicate ids, missing or wrongly-graded boundaries,
// failed globularity equations.
std::vector<std::string> validate_globular(const GlobularSet& x);

// A map of globular sets: dimension-preserving, commuting with src/tgt.
struct GlobularMap {
  std::unordered_map<std::string, std::string> comp;  // cell id -> cell id

  const std::string& operator()(const std::string& id) const;
};

std::vector<std::string> validate_globular_map(const GlobularSet& dom,
                                               const GlobularSet& cod,
                                               const GlobularMap& f);

nlohmann::json globular_to_json(const GlobularSet& x);
GlobularSet globular_from_json(const nlohmann::json& j);

}  // namespace globcat::core
