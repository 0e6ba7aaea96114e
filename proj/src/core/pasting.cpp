#include "core/pasting.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace globcat::core {

PastingDiagram::PastingDiagram(int dim, std::vector<PastingDiagram> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim < 1) throw std::invalid_argument("pasting diagram: dim must be >= 1");
  for (const auto& e : entries_) {
    if (e.dim() != dim - 1)
      throw std::invalid_argument(
          "pasting diagram: entry dimension must be dim-1");
  }
}

PastingDiagram PastingDiagram::point() { return PastingDiagram(); }

PastingDiagram PastingDiagram::empty(int dim) {
  return PastingDiagram(dim, {});
}

PastingDiagram PastingDiagram::single_cell(int dim) {
  PastingDiagram result;  // the point
  for (int d = 1; d <= dim; ++d) result = PastingDiagram(d, {result});
  return result;
}

std::size_t PastingDiagram::size() const {
  std::size_t total = entries_.size();
  for (const auto& e : entries_) total += e.size();
  return total;
}

std::strong_ordering PastingDiagram::operator<=>(
    const PastingDiagram& other) const {
  if (auto c = dim_ <=> other.dim_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      entries_.begin(), entries_.end(), other.entries_.begin(),
      other.entries_.end());
}

std::string PastingDiagram::to_string() const {
  if (dim_ == 0) return "*";
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += entries_[i].to_string();
  }
  s += ")";
  return s;
}

PastingDiagram pd_boundary(const PastingDiagram& pd) {
  if (pd.dim() < 1)
    throw std::invalid_argument("pd_boundary: the point has no boundary");
  if (pd.dim() == 1) return PastingDiagram::point();
  std::vector<PastingDiagram> entries;
  entries.reserve(pd.entries().size());
  for (const auto& e : pd.entries()) entries.push_back(pd_boundary(e));
  return PastingDiagram(pd.dim() - 1, std::move(entries));
}

PastingDiagram pd_boundary_to(const PastingDiagram& pd, int target_dim) {
  if (target_dim > pd.dim())
    throw std::invalid_argument("pd_boundary_to: target above dimension");
  PastingDiagram result = pd;
  while (result.dim() > target_dim) result = pd_boundary(result);
  return result;
}

PastingDiagram pd_identity(const PastingDiagram& pd) {
  if (pd.dim() == 0) return PastingDiagram::empty(1);
  std::vector<PastingDiagram> entries;
  entries.reserve(pd.entries().size());
  for (const auto& e : pd.entries()) entries.push_back(pd_identity(e));
  return PastingDiagram(pd.dim() + 1, std::move(entries));
}

bool pd_is_identity(const PastingDiagram& pd) {
  if (pd.dim() == 0) return false;
  if (pd.dim() == 1) return pd.is_empty();
  return std::all_of(pd.entries().begin(), pd.entries().end(),
                     pd_is_identity);
}

PastingDiagram pd_identity_base(const PastingDiagram& pd) {
  if (!pd_is_identity(pd))
    throw std::invalid_argument("pd_identity_base: not an identity diagram");
  if (pd.dim() == 1) return PastingDiagram::point();
  std::vector<PastingDiagram> entries;
  entries.reserve(pd.entries().size());
  for (const auto& e : pd.entries()) entries.push_back(pd_identity_base(e));
  return PastingDiagram(pd.dim() - 1, std::move(entries));
}

PastingDiagram pd_compose(const PastingDiagram& second,
                          const PastingDiagram& first, int p) {
  if (first.dim() != second.dim())
    throw std::invalid_argument("pd_compose: dimension mismatch");
  const int m = first.dim();
  if (p < 0 || p >= m)
    throw std::invalid_argument("pd_compose: need 0 <= p < dim");
  if (p == 0) {
    std::vector<PastingDiagram> entries = first.entries();
    entries.insert(entries.end(), second.entries().begin(),
                   second.entries().end());
    return PastingDiagram(m, std::move(entries));
  }
  if (first.entries().size() != second.entries().size())
    throw std::invalid_argument(
        "pd_compose: boundary mismatch at p (unequal entry counts)");
  std::vector<PastingDiagram> entries;
  entries.reserve(first.entries().size());
  for (std::size_t i = 0; i < first.entries().size(); ++i)
    entries.push_back(
        pd_compose(second.entries()[i], first.entries()[i], p - 1));
  return PastingDiagram(m, std::move(entries));
}

namespace {

// All diagrams of dimension dim with size() <= budget, sorted.
void enumerate_into(int dim, std::size_t budget,
                    std::vector<PastingDiagram>& out) {
  if (dim == 0) {
    out.push_back(PastingDiagram::point());
    return;
  }
  std::vector<PastingDiagram> lower;
  if (budget >= 1) enumerate_into(dim - 1, budget - 1, lower);
  // Build sequences over `lower`; each entry costs 1 + its own size.
  std::vector<PastingDiagram> result;
  result.push_back(PastingDiagram::empty(dim));
  std::vector<std::pair<std::vector<PastingDiagram>, std::size_t>> frontier;
  frontier.push_back({{}, 0});
  while (!frontier.empty()) {
    std::vector<std::pair<std::vector<PastingDiagram>, std::size_t>> next;
    for (auto& [seq, used] : frontier) {
      for (const auto& cand : lower) {
        std::size_t cost = 1 + cand.size();
        if (used + cost > budget) continue;
        auto extended = seq;
        extended.push_back(cand);
        result.push_back(PastingDiagram(dim, extended));
        next.push_back({std::move(extended), used + cost});
      }
    }
    frontier = std::move(next);
  }
  out = std::move(result);
}

}  // namespace

std::vector<PastingDiagram> pd_enumerate(int dim, std::size_t max_size) {
  std::vector<PastingDiagram> out;
  enumerate_into(dim, max_size, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

nlohmann::json pd_body(const PastingDiagram& pd) {
  if (pd.dim() == 0) return 0;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : pd.entries()) arr.push_back(pd_body(e));
  return arr;
}

PastingDiagram pd_parse_body(const nlohmann::json& body, int dim) {
  if (dim == 0) {
    if (!body.is_number())
      throw std::invalid_argument("pasting diagram JSON: point must be 0");
    return PastingDiagram::point();
  }
  if (!body.is_array())
    throw std::invalid_argument("pasting diagram JSON: expected array body");
  std::vector<PastingDiagram> entries;
  for (const auto& e : body) entries.push_back(pd_parse_body(e, dim - 1));
  return PastingDiagram(dim, std::move(entries));
}

}  // namespace

nlohmann::json pd_to_json(const PastingDiagram& pd) {
  return nlohmann::json{{"dim", pd.dim()}, {"body", pd_body(pd)}};
}

PastingDiagram pd_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("body"))
    throw std::invalid_argument(
        "pasting diagram JSON: expected {\"dim\",\"body\"}");
  return pd_parse_body(j.at("body"), j.at("dim").get<int>());
}

}  // namespace globcat::core
