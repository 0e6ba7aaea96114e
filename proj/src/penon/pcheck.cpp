#include "penon/pcheck.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core/labelled.hpp"
#include "penon/presentation.hpp"

namespace globcat::penon {

namespace {

precat::CheckItem make_item(std::string name, const std::string& witness) {
  precat::CheckItem it;
  it.name = std::move(name);
  it.ok = witness.empty();
  it.witness = witness;
  return it;
}

}  // namespace

PMonadReport p_monad_check(const core::GlobularSet& x, int depth) {
  if (x.n != 2) {
    throw std::invalid_argument(
        "p_monad_check: the generating globular set must be two-dimensional");
  }
  Presentation pres = free_presentation(x);
  QStructure q = interleave(pres, depth);

  PMonadReport rep;
  rep.depth = depth;
  rep.size1 = static_cast<std::size_t>(depth) + 1;
  rep.size2 = static_cast<std::size_t>(depth) + 1;

  // Surjectivity on points: every generating point is the interpretation of
  // a materialized point cell.
  {
    std::set<std::string> images;
    for (int id : q.by_dim[0]) {
      images.insert(core::tx_to_string(q.at(id).image));
    }
    std::string witness;
    for (const auto& p : x.cells[0]) {
      if (images.count(core::tx_to_string(core::tx_generator(x, p))) == 0) {
        witness = "point " + p + " is not interpreted by any cell";
        break;
      }
    }
    rep.items.push_back(make_item("surjective-at-dimension-0", witness));
  }

  // Index the materialized 1-cells by their interpretation.
  std::map<std::string, std::vector<int>> ones_by_image;
  for (int id : q.by_dim[1]) {
    ones_by_image[core::tx_to_string(q.at(id).image)].push_back(id);
  }

  // Fullness at dimension 1: every labelled 1-diagram within the size bound
  // is the interpretation of some materialized 1-cell.
  {
    std::string witness;
    for (const auto& t : core::tx_enumerate(x, 1, rep.size1)) {
      if (ones_by_image.count(core::tx_to_string(t)) == 0) {
        witness = "no 1-cell interprets " + core::tx_to_string(t);
        break;
      }
    }
    rep.items.push_back(make_item("full-at-dimension-1", witness));
  }

  // Fullness at dimension 2: for every labelled 2-diagram within the size
  // bound and every parallel pair of 1-cells interpreting its boundary,
  // some top cell between the pair carries that interpretation.
  {
    std::string witness;
    for (const auto& g : core::tx_enumerate(x, 2, rep.size2)) {
      const std::string gs = core::tx_to_string(g);
      const std::string ss = core::tx_to_string(core::tx_src(x, g));
      const std::string ts = core::tx_to_string(core::tx_tgt(x, g));
      auto sa = ones_by_image.find(ss);
      auto ta = ones_by_image.find(ts);
      if (sa == ones_by_image.end() || ta == ones_by_image.end()) {
        witness = "boundary of " + gs + " is not interpreted by any 1-cell";
        break;
      }
      for (int a : sa->second) {
        for (int b : ta->second) {
          if (q.at(a).src != q.at(b).src || q.at(a).tgt != q.at(b).tgt) {
            continue;
          }
          if (q.top.count({a, b, gs}) == 0) {
            witness = "no top cell between " + q_cell_to_string(q, a) +
                      " and " + q_cell_to_string(q, b) + " interprets " + gs;
            break;
          }
        }
        if (!witness.empty()) break;
      }
      if (!witness.empty()) break;
    }
    rep.items.push_back(make_item("full-at-dimension-2", witness));
  }

  // Faithfulness at the top dimension: distinct top cells sharing both
  // boundaries must carry distinct interpretations.
  {
    std::string witness;
    std::map<std::pair<int, int>, std::vector<const TopTriple*>> groups;
    for (const auto& [key, t] : q.top) {
      groups[{t.src, t.tgt}].push_back(&t);
    }
    for (const auto& [sig, members] : groups) {
      for (std::size_t i = 0; i < members.size() && witness.empty(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          if (members[i]->image_key == members[j]->image_key) {
            witness = "two distinct parallel top cells share the image " +
                      members[i]->image_key;
            break;
          }
        }
      }
      if (!witness.empty()) break;
    }
    rep.items.push_back(make_item("faithful-at-dimension-2", witness));
  }

  rep.pass = std::all_of(rep.items.begin(), rep.items.end(),
                         [](const precat::CheckItem& it) { return it.ok; });
  return rep;
}

std::string pmonad_report_to_string(const PMonadReport& r) {
  std::ostringstream os;
  os << "p-monad check at depth " << r.depth << " (size bounds " << r.size1
     << "/" << r.size2 << "): " << (r.pass ? "pass" : "FAIL") << "\n";
  for (const auto& it : r.items) {
    os << "  [" << (it.ok ? "ok" : "FAIL") << "] " << it.name;
    if (!it.ok) os << " -- " << it.witness;
    os << "\n";
  }
  return os.str();
}

}  // namespace globcat::penon
