#pragma once
// Pasting diagrams: the shapes of composable cell arrangements in a strict
// omega-category, encoded as nested finite sequences.  A diagram of dimension
// 0 is the point; a diagram of dimension m >= 1 is a finite (possibly empty)
// sequence of diagrams of dimension m-1.  The empty sequence at dimension m
// is the shape of an (iterated) identity cell.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace globcat::core {

class PastingDiagram {
 public:
  // The point (dimension 0).
  PastingDiagram() = default;

  // Diagram of dimension dim >= 1 with the given entries (each of
  // dimension dim-1).  Throws std::invalid_argument on mismatched entries.
  PastingDiagram(int dim, std::vector<PastingDiagram> entries);

  static PastingDiagram point();
  // Empty diagram of dimension dim >= 1 (identity tower over the point).
  static PastingDiagram empty(int dim);
  // The unique diagram of dimension m consisting of a single top cell:
  // the m-fold singleton nesting of the point.
  static PastingDiagram single_cell(int dim);

  int dim() const { return dim_; }
  const std::vector<PastingDiagram>& entries() const { return entries_; }
  bool is_empty() const { return entries_.empty(); }

  // Total number of sequence entries across all nesting levels.
  std::size_t size() const;

  bool operator==(const PastingDiagram&) const = default;
  std::strong_ordering operator<=>(const PastingDiagram&) const;

  std::string to_string() const;

 private:
  int dim_ = 0;
  std::vector<PastingDiagram> entries_;
};

// Source/target boundary, one dimension down.  In this encoding source and
// target coincide: boundaries are computed entrywise, collapsing dimension 1
// to the point.  Requires dim >= 1.
PastingDiagram pd_boundary(const PastingDiagram& pd);

// Iterated boundary down to dimension `target_dim`.
PastingDiagram pd_boundary_to(const PastingDiagram& pd, int target_dim);

// The identity diagram (dimension +1) on `pd`.
PastingDiagram pd_identity(const PastingDiagram& pd);

// Whether `pd` is the identity diagram on some diagram one dimension down.
bool pd_is_identity(const PastingDiagram& pd);

// If pd = pd_identity(q), return q.  Requires pd_is_identity(pd).
PastingDiagram pd_identity_base(const PastingDiagram& pd);

// Composite of `second` after `first` along a shared p-dimensional boundary,
// 0 <= p < dim.  Along p = 0 this concatenates (first, then second); along
// p >= 1 both diagrams must have the same number of entries and the entries
// are composed pairwise along p-1.  Throws std::invalid_argument when the
// diagrams are not composable at p.
PastingDiagram pd_compose(const PastingDiagram& second,
                          const PastingDiagram& first, int p);

// All diagrams of dimension `dim` with size() <= max_size, in a
// deterministic order (by size, then lexicographically).
std::vector<PastingDiagram> pd_enumerate(int dim, std::size_t max_size);

// Nested-array serialization: the point encodes as 0, a diagram of
// dimension >= 1 as the array of its entries' encodings, wrapped as
// {"dim": m, "body": ...}.
nlohmann::json pd_to_json(const PastingDiagram& pd);
PastingDiagram pd_from_json(const nlohmann::json& j);

}  // namespace globcat::core
