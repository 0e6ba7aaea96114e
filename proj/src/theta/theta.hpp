#pragma once
// The indexing category for n-precategories: products of finite ordinals
// with weakly monotone maps, quotiented so that everything after a zero
// coordinate (respectively after a component that factors through a point)
// is collapsed.  Objects and morphisms are kept in canonical form, so
// equality of the quotient is plain structural equality.

#include <compare>
#include <string>
#include <vector>

namespace globcat::theta {

// A weakly monotone map [dom] -> [cod] between the ordinals {0..dom} and
// {0..cod}, tabulated pointwise.
struct DeltaMap {
  int dom = 0;
  int cod = 0;
  std::vector<int> table{0};

  DeltaMap() = default;
  DeltaMap(int dom_, int cod_, std::vector<int> table_);

  static DeltaMap identity(int k);
  static DeltaMap constant(int dom_, int cod_, int value);

  int operator()(int i) const { return table.at(static_cast<size_t>(i)); }
  bool is_constant() const;

  bool operator==(const DeltaMap&) const = default;
  auto operator<=>(const DeltaMap&) const = default;
};

// g after f; domains must match up.
DeltaMap delta_compose(const DeltaMap& g, const DeltaMap& f);

// All weakly monotone maps [j] -> [k], in lexicographic table order.
std::vector<DeltaMap> delta_hom(int j, int k);

// Canonical object: once a coordinate before the last is zero, all later
// coordinates are zero as well.
struct ThetaObject {
  std::vector<int> coords;

  int n() const { return static_cast<int>(coords.size()); }
  int operator[](int axis) const {
    return coords.at(static_cast<size_t>(axis));
  }

  bool operator==(const ThetaObject&) const = default;
  auto operator<=>(const ThetaObject&) const = default;
};

ThetaObject theta_object(std::vector<int> coords);
bool theta_object_is_canonical(const std::vector<int>& coords);

// Canonical morphism: dom/cod canonical; after the first axis (before the
// last) whose component is constant, every later component is the constant
// map at 0.
struct ThetaMorphism {
  ThetaObject dom, cod;
  std::vector<DeltaMap> comps;

  int n() const { return dom.n(); }

  bool operator==(const ThetaMorphism&) const = default;
  auto operator<=>(const ThetaMorphism&) const = default;
};

// Validates component shapes against dom/cod and canonicalizes.
ThetaMorphism theta_morphism(const ThetaObject& dom, const ThetaObject& cod,
                             std::vector<DeltaMap> comps);
ThetaMorphism theta_identity(const ThetaObject& a);
ThetaMorphism theta_compose(const ThetaMorphism& g, const ThetaMorphism& f);

// All canonical objects with every coordinate <= bound, sorted.
std::vector<ThetaObject> theta_objects(int n, int bound);

// All morphisms a -> b, canonical and deduplicated, sorted.
std::vector<ThetaMorphism> theta_hom(const ThetaObject& a,
                                     const ThetaObject& b);

// Builds the canonical morphism presented by raw per-axis data between
// possibly non-canonical coordinate tuples: components whose endpoints get
// collapsed by canonicalization are replaced by the forced constant map.
ThetaMorphism theta_from_delta(const std::vector<int>& dom,
                               const std::vector<int>& cod,
                               const std::vector<DeltaMap>& comps);

// Named generating maps, placed on one axis with identities elsewhere.
//   Face       d_i : [k-1] -> [k]   (skip i, 0 <= i <= k, k >= 1)
//   Degeneracy s_i : [k+1] -> [k]   (repeat i, 0 <= i <= k)
//   Iota       i_i : [1]   -> [k]   (the segment {i, i+1}, 0 <= i < k)
//   Sigma          : [0]   -> [1]   (the 0 end)
//   Tau            : [0]   -> [1]   (the 1 end)
enum class GenKind { Face, Degeneracy, Iota, Sigma, Tau };

// `other` supplies the coordinates of the untouched axes (entry at `axis`
// is ignored); for Sigma/Tau, `k` and `i` are ignored.
ThetaMorphism theta_generator(GenKind kind, int axis, int k, int i,
                              std::vector<int> other);

std::string theta_object_to_string(const ThetaObject& a);
std::string theta_morphism_to_string(const ThetaMorphism& f);

}  // namespace globcat::theta
