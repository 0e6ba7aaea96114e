#include "penon/nervepa.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

#include "penon/presentation.hpp"
#include "theta/theta.hpp"

namespace globcat::penon {

namespace {

using bicat::Bicategory;
using precat::PresheafWindow;
using theta::ThetaMorphism;
using theta::ThetaObject;

std::string pname(int u) { return cuboidal_point(u); }
std::string fname(int u, int v, int z) {
  return cuboidal_cell(1, {{u, v}}, z);
}
std::string aname(int u, int v, int z) {
  return cuboidal_cell(2, {{u, v}}, z);
}

using Env = std::map<std::string, std::string>;

// Backtracking enumeration: variables in a fixed order, candidates filtered
// by boundary typing against the partial assignment, and every relation
// checked as soon as its last variable is placed.
struct Solver {
  const Bicategory& a;
  int j, k, depth;

  std::map<std::pair<std::string, std::string>, std::vector<std::string>>
      ones_by, twos_by;
  std::vector<std::string> order;
  std::map<std::string, std::function<std::vector<std::string>(const Env&)>>
      cands;
  std::map<std::string, std::vector<std::function<bool(const Env&)>>> checks;
  std::vector<NerveAssignment> out;

  Solver(const Bicategory& a_, int j_, int k_, int depth_)
      : a(a_), j(j_), k(k_), depth(depth_) {
    for (const auto& o : a.ones) ones_by[{o.dom, o.cod}].push_back(o.id);
    for (const auto& t : a.twos) twos_by[{t.dom, t.cod}].push_back(t.id);
    build_vars();
    build_checks();
  }

  std::vector<std::string> typed_ones(const std::string& dom,
                                      const std::string& cod) const {
    auto it = ones_by.find({dom, cod});
    return it == ones_by.end() ? std::vector<std::string>{} : it->second;
  }
  std::vector<std::string> typed_twos(const std::string& dom,
                                      const std::string& cod) const {
    auto it = twos_by.find({dom, cod});
    return it == twos_by.end() ? std::vector<std::string>{} : it->second;
  }

  void build_vars() {
    for (int u = 0; u <= j; ++u) {
      order.push_back(pname(u));
      cands[pname(u)] = [this](const Env&) { return a.objects; };
    }
    for (int z = 0; z <= k; ++z) {
      for (int u = 0; u < j; ++u) {
        for (int v = u + 1; v <= j; ++v) {
          order.push_back(fname(u, v, z));
          cands[fname(u, v, z)] = [this, u, v](const Env& env) {
            return typed_ones(env.at(pname(u)), env.at(pname(v)));
          };
        }
      }
    }
    for (int z = 1; z <= k; ++z) {
      for (int u = 0; u < j; ++u) {
        for (int v = u + 1; v <= j; ++v) {
          order.push_back(aname(u, v, z));
          cands[aname(u, v, z)] = [this, u, v, z](const Env& env) {
            return typed_twos(env.at(fname(u, v, z - 1)),
                              env.at(fname(u, v, z)));
          };
        }
      }
    }
    for (int z = 0; z <= k; ++z) {
      for (int u = 0; u <= j; ++u) {
        for (int v = u + 1; v <= j; ++v) {
          for (int w = v + 1; w <= j; ++w) {
            std::string plus = tau_name(u, v, w, z, true);
            std::string minus = tau_name(u, v, w, z, false);
            order.push_back(plus);
            cands[plus] = [this, u, v, w, z](const Env& env) {
              return typed_twos(env.at(fname(u, w, z)),
                                a.hc1(env.at(fname(v, w, z)),
                                      env.at(fname(u, v, z))));
            };
            order.push_back(minus);
            if (depth >= 1) {
              cands[minus] = [this,
                              plus](const Env& env) -> std::vector<std::string> {
                auto inv = bicat::two_inverse(a, env.at(plus));
                if (!inv) return {};
                return {*inv};
              };
            } else {
              cands[minus] = [this, u, v, w, z](const Env& env) {
                return typed_twos(a.hc1(env.at(fname(v, w, z)),
                                        env.at(fname(u, v, z))),
                                  env.at(fname(u, w, z)));
              };
            }
          }
        }
      }
    }
  }

  void build_checks() {
    if (depth >= 2) {
      for (int z = 1; z <= k; ++z) {
        for (int u = 0; u <= j; ++u) {
          for (int v = u + 1; v <= j; ++v) {
            for (int w = v + 1; w <= j; ++w) {
              // The level-z comparison square of the split (u, v, w).
              checks[tau_name(u, v, w, z, true)].push_back(
                  [this, u, v, w, z](const Env& env) {
                    const std::string& lhs =
                        a.vc(env.at(tau_name(u, v, w, z, true)),
                             env.at(aname(u, w, z)));
                    const std::string& whisk =
                        a.hc2(env.at(aname(v, w, z)), env.at(aname(u, v, z)));
                    const std::string& rhs =
                        a.vc(whisk, env.at(tau_name(u, v, w, z - 1, true)));
                    return lhs == rhs;
                  });
            }
          }
        }
      }
    }
    if (depth >= 3) {
      for (int z = 0; z <= k; ++z) {
        for (int u = 0; u <= j; ++u) {
          for (int v = u + 1; v <= j; ++v) {
            for (int w = v + 1; w <= j; ++w) {
              for (int x = w + 1; x <= j; ++x) {
                // Pentagon among the nested splits of (u, v, w, x).
                checks[tau_name(v, w, x, z, true)].push_back(
                    [this, u, v, w, x, z](const Env& env) {
                      const std::string& l1 =
                          a.hc2(env.at(tau_name(v, w, x, z, true)),
                                a.id2_of(env.at(fname(u, v, z))));
                      const std::string& lhs =
                          a.vc(l1, env.at(tau_name(u, v, x, z, true)));
                      const std::string& r1 =
                          a.hc2(a.id2_of(env.at(fname(w, x, z))),
                                env.at(tau_name(u, v, w, z, true)));
                      const std::string& rhs =
                          a.vc(r1, env.at(tau_name(u, w, x, z, true)));
                      return lhs == rhs;
                    });
              }
            }
          }
        }
      }
    }
  }

  void dfs(std::size_t i, Env& env) {
    if (i == order.size()) {
      out.push_back(NerveAssignment{env});
      return;
    }
    const std::string& name = order[i];
    for (const auto& cand : cands.at(name)(env)) {
      env[name] = cand;
      bool ok = true;
      if (auto it = checks.find(name); it != checks.end()) {
        for (const auto& c : it->second) {
          if (!c(env)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) dfs(i + 1, env);
      env.erase(name);
    }
  }
};

NerveAssignment pull_back(const Bicategory& a, const ThetaMorphism& phi,
                          const NerveAssignment& psi, int j, int k) {
  const theta::DeltaMap& p = phi.comps[0];
  const theta::DeltaMap& q = phi.comps[1];
  const auto& im = psi.images;
  NerveAssignment out;
  for (int u = 0; u <= j; ++u) {
    out.images[pname(u)] = im.at(pname(p(u)));
  }
  for (int z = 0; z <= k; ++z) {
    for (int u = 0; u < j; ++u) {
      for (int v = u + 1; v <= j; ++v) {
        out.images[fname(u, v, z)] =
            p(u) < p(v) ? im.at(fname(p(u), p(v), q(z)))
                        : a.id1_of(im.at(pname(p(u))));
      }
    }
  }
  for (int z = 1; z <= k; ++z) {
    for (int u = 0; u < j; ++u) {
      for (int v = u + 1; v <= j; ++v) {
        std::string val;
        if (p(u) == p(v)) {
          val = a.id2_of(a.id1_of(im.at(pname(p(u)))));
        } else if (q(z - 1) == q(z)) {
          val = a.id2_of(im.at(fname(p(u), p(v), q(z))));
        } else {
          val = a.id2_of(im.at(fname(p(u), p(v), q(z - 1))));
          for (int w = q(z - 1) + 1; w <= q(z); ++w) {
            val = a.vc(im.at(aname(p(u), p(v), w)), val);
          }
        }
        out.images[aname(u, v, z)] = val;
      }
    }
  }
  for (int z = 0; z <= k; ++z) {
    for (int u = 0; u <= j; ++u) {
      for (int v = u + 1; v <= j; ++v) {
        for (int w = v + 1; w <= j; ++w) {
          for (bool fwd : {true, false}) {
            std::string val;
            if (p(u) < p(v) && p(v) < p(w)) {
              val = im.at(tau_name(p(u), p(v), p(w), q(z), fwd));
            } else {
              const std::string& fuw =
                  p(u) < p(w) ? im.at(fname(p(u), p(w), q(z)))
                              : a.id1_of(im.at(pname(p(u))));
              val = a.id2_of(fuw);
            }
            out.images[tau_name(u, v, w, z, fwd)] = val;
          }
        }
      }
    }
  }
  return out;
}

struct BuiltWindow {
  PresheafWindow w;
  std::map<ThetaObject, std::vector<NerveAssignment>> sets;
  std::map<ThetaObject, std::map<std::string, int>> index;
};

BuiltWindow build_window(const Bicategory& a, int bound, int depth) {
  BuiltWindow b;
  b.w.n = 2;
  b.w.bound = bound;
  b.w.objects = theta::theta_objects(2, bound);
  for (const auto& obj : b.w.objects) {
    auto set = penon_nerve_set(a, obj[0], obj[1], depth);
    auto& labels = b.w.value[obj];
    auto& idx = b.index[obj];
    for (std::size_t i = 0; i < set.size(); ++i) {
      labels.push_back(assignment_label(set[i]));
      idx[labels.back()] = static_cast<int>(i);
    }
    b.sets.emplace(obj, std::move(set));
  }
  for (const auto& dom : b.w.objects) {
    for (const auto& cod : b.w.objects) {
      for (const auto& phi : theta::theta_hom(dom, cod)) {
        std::vector<int> table;
        for (const auto& psi : b.sets.at(cod)) {
          NerveAssignment pulled =
              pull_back(a, phi, psi, dom[0], dom[1]);
          auto it = b.index.at(dom).find(assignment_label(pulled));
          if (it == b.index.at(dom).end()) {
            throw std::logic_error(
                "penon_nerve_window: a reindexing action left the "
                "tabulated assignment set");
          }
          table.push_back(it->second);
        }
        b.w.action[phi] = std::move(table);
      }
    }
  }
  return b;
}

}  // namespace

std::string tau_name(int u, int v, int w, int z, bool forward) {
  return std::string(forward ? "t+(" : "t-(") + std::to_string(u) + "-" +
         std::to_string(v) + "-" + std::to_string(w) + ";" +
         std::to_string(z) + ")";
}

std::string assignment_label(const NerveAssignment& a) {
  std::string s;
  for (const auto& [key, val] : a.images) {
    s += key;
    s += "=";
    s += val;
    s += ";";
  }
  return s;
}

std::vector<std::string> strictness_violations(const bicat::Bicategory& b) {
  std::vector<std::string> errs;
  for (const auto& [f, cell] : b.lunit) {
    const auto& unit = b.id1_of(b.one(f).cod);
    if (b.hc1(unit, f) != f) {
      errs.push_back("left unit composite of " + f + " differs from " + f);
    } else if (cell != b.id2_of(f)) {
      errs.push_back("left unit comparison at " + f + " is not an identity");
    }
  }
  for (const auto& [f, cell] : b.runit) {
    const auto& unit = b.id1_of(b.one(f).dom);
    if (b.hc1(f, unit) != f) {
      errs.push_back("right unit composite of " + f + " differs from " + f);
    } else if (cell != b.id2_of(f)) {
      errs.push_back("right unit comparison at " + f + " is not an identity");
    }
  }
  for (const auto& [key, cell] : b.assoc) {
    const auto& [h, g, f] = key;
    const auto& left = b.hc1(b.hc1(h, g), f);
    const auto& right = b.hc1(h, b.hc1(g, f));
    if (left != right) {
      errs.push_back("composition is not associative at (" + h + ", " + g +
                     ", " + f + ")");
    } else if (cell != b.id2_of(left)) {
      errs.push_back("associativity comparison at (" + h + ", " + g + ", " +
                     f + ") is not an identity");
    }
  }
  return errs;
}

std::vector<NerveAssignment> penon_nerve_set(const bicat::Bicategory& a,
                                             int j, int k, int depth) {
  if (j < 0 || k < 0 || (j == 0 && k > 0)) {
    throw std::invalid_argument(
        "penon_nerve_set: index is not a canonical object");
  }
  if (depth < 0) {
    throw std::invalid_argument("penon_nerve_set: negative depth");
  }
  auto errs = bicat::bicat_validate(a, 1);
  if (errs.empty()) {
    auto strict = strictness_violations(a);
    errs.insert(errs.end(), strict.begin(), strict.end());
  }
  if (!errs.empty()) {
    throw std::invalid_argument("penon_nerve_set: target is not a strict "
                                "2-category: " +
                                errs.front());
  }
  Solver s(a, j, k, depth);
  Env env;
  s.dfs(0, env);
  return std::move(s.out);
}

precat::PresheafWindow penon_nerve_window(const bicat::Bicategory& a,
                                          int bound, int depth) {
  return build_window(a, bound, depth).w;
}

precat::WindowMap penon_nerve_functor_map(const bicat::Bicategory& a,
                                          const bicat::Bicategory& b,
                                          const bicat::StrictFunctor2& f,
                                          int bound, int depth) {
  auto errs = bicat::functor_validate(a, b, f);
  if (!errs.empty()) {
    throw std::invalid_argument("penon_nerve_functor_map: invalid functor: " +
                                errs.front());
  }
  BuiltWindow wa = build_window(a, bound, depth);
  BuiltWindow wb = build_window(b, bound, depth);
  precat::WindowMap m;
  m.dom = wa.w;
  m.cod = wb.w;
  for (const auto& obj : wa.w.objects) {
    std::vector<int> table;
    for (const auto& psi : wa.sets.at(obj)) {
      NerveAssignment mapped;
      for (const auto& [key, val] : psi.images) {
        if (key[0] == 'a') {
          mapped.images[key] = f.obj.at(val);
        } else if (key.rfind("c1", 0) == 0) {
          mapped.images[key] = f.one.at(val);
        } else {
          mapped.images[key] = f.two.at(val);
        }
      }
      auto it = wb.index.at(obj).find(assignment_label(mapped));
      if (it == wb.index.at(obj).end()) {
        throw std::logic_error(
            "penon_nerve_functor_map: the functor image of an assignment "
            "is not an assignment");
      }
      table.push_back(it->second);
    }
    m.comp[obj] = std::move(table);
  }
  return m;
}

}  // namespace globcat::penon
