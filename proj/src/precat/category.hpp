#pragma once
// Finite categories given by explicit object/morphism lists with a total
// composition table, plus constructors for the standard small examples used
// throughout the test corpus.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace globcat::precat {

struct Category {
  struct Mor {
    std::string id, dom, cod;
    bool operator==(const Mor&) const = default;
  };

  std::vector<std::string> objects;
  std::vector<Mor> morphisms;  // includes the identities
  std::map<std::string, std::string> identity;  // object -> identity morphism
  // (g, f) -> g after f, for every composable pair.
  std::map<std::pair<std::string, std::string>, std::string> comp;

  const Mor& mor(const std::string& id) const;
  bool has_object(const std::string& o) const;
  const std::string& id_of(const std::string& o) const;
  const std::string& compose(const std::string& g, const std::string& f) const;
};

// Human-readable violations; empty means the data is a category.
std::vector<std::string> category_validate(const Category& c);

nlohmann::json category_to_json(const Category& c);
Category category_from_json(const nlohmann::json& j);

// The category with objects 0, 1 and one non-identity arrow 0 -> 1.
Category walking_arrow();
// d objects and only identities.
Category discrete_category(int d);
// The linear order 0 < 1 < ... < n as a category.
Category chain_category(int n);
// One object; morphisms from a finite monoid given by its table.
Category monoid_category(const std::vector<std::string>& elems,
                         const std::map<std::pair<std::string, std::string>,
                                        std::string>& mult,
                         const std::string& unit);
// At most one morphism x -> y, present iff leq[x][y]; leq must be reflexive
// and transitive.
Category preorder_category(const std::vector<std::vector<bool>>& leq);
// Two objects with a parallel pair of non-identity arrows between them.
Category parallel_pair();
// Deterministic pseudo-random category: a random partial order of arrows on
// `objects` objects plus, per object, a small cyclic monoid of extra
// endomorphisms that absorb into the order arrows.  The same seed always
// yields the same category.
Category random_category(int objects, std::uint32_t seed);

}  // namespace globcat::precat
