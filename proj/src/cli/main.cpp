// Batch front end: each subcommand runs one family of finite checks and
// emits a report envelope {"command", "bounds", "verdicts", "witnesses"}
// (plus command-specific payload fields).  Exit 0 when every check in scope
// passes, 1 on a check failure, 2 on an input error or an over-budget bound.

#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bicat/bicat.hpp"
#include "bicat/examples.hpp"
#include "core/globular.hpp"
#include "core/pasting.hpp"
#include "nerve2/window.hpp"
#include "opterm/delta.hpp"
#include "opterm/khat.hpp"
#include "opterm/term.hpp"
#include "penon/interleave.hpp"
#include "penon/nervepa.hpp"
#include "penon/pcheck.hpp"
#include "penon/presentation.hpp"
#include "precat/category.hpp"
#include "precat/presheaf.hpp"
#include "precat/segal.hpp"

namespace {

using nlohmann::json;
namespace core = globcat::core;
namespace precat = globcat::precat;
namespace bicat = globcat::bicat;
namespace nerve2 = globcat::nerve2;
namespace opterm = globcat::opterm;
namespace penon = globcat::penon;

// Input problems that should terminate with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string command;
  json bounds = json::object();
  std::vector<precat::CheckItem> verdicts;
  json payload = json::object();

  void add(std::string name, const std::string& witness) {
    verdicts.push_back({std::move(name), witness.empty(), witness});
  }
  void add(std::string name, const std::vector<std::string>& violations) {
    add(std::move(name), violations.empty() ? "" : violations.front());
  }
};

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

int emit(const Report& r, const std::string& out_path,
         const std::string& format) {
  json env;
  env["command"] = r.command;
  env["bounds"] = r.bounds;
  env["verdicts"] = json::array();
  env["witnesses"] = json::array();
  bool all_ok = true;
  for (const auto& v : r.verdicts) {
    env["verdicts"].push_back({{"name", v.name}, {"ok", v.ok}});
    if (!v.ok) {
      all_ok = false;
      env["witnesses"].push_back(v.name + ": " + v.witness);
    }
  }
  for (const auto& [key, value] : r.payload.items()) env[key] = value;

  std::string text;
  if (format == "json") {
    text = env.dump(2) + "\n";
  } else if (format == "csv") {
    text = "name,ok,witness\n";
    for (const auto& v : r.verdicts) {
      text += csv_quote(v.name);
      text += v.ok ? ",1," : ",0,";
      text += csv_quote(v.witness) + "\n";
    }
  } else {
    std::ostringstream os;
    os << r.command << " " << r.bounds.dump() << "\n";
    for (const auto& v : r.verdicts) {
      os << "  [" << (v.ok ? "ok" : "FAIL") << "] " << v.name;
      if (!v.ok) os << " -- " << v.witness;
      os << "\n";
    }
    os << (all_ok ? "pass" : "fail") << "\n";
    text = os.str();
  }

  if (out_path.empty()) {
    std::cout << text;
  } else {
    const std::string tmp = out_path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary);
      if (!out) throw InputError("cannot open output file: " + out_path);
      out << text;
    }
    if (std::rename(tmp.c_str(), out_path.c_str()) != 0)
      throw InputError("cannot move report into place: " + out_path);
  }
  return all_ok ? 0 : 1;
}

json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file: " + path);
  return json::parse(in);  // parse_error carries the byte position
}

// Accept either a bare object dump or a report envelope carrying one.
const json& unwrap(const json& j, const char* key) {
  return j.is_object() && j.contains(key) ? j.at(key) : j;
}

void require_budget(bool ok, const std::string& advisory) {
  if (!ok) throw InputError("bound exceeds the memory budget: " + advisory);
}

// Shared per-subcommand configuration, bound to CLI11 flags.
struct Config {
  std::string input, out, format = "json", example = "strict2";
  int size = 4, depth = 3, window = 2, dim = 2, j = 2, k = 1;
  std::uint32_t seed = 0;
};

void add_io(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--out", cfg.out, "Write the report to this file");
  cmd->add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

// Parallel generic atoms bounding a contraction problem of shape `pi`:
// one shared chain of named atoms per dimension below pi.
std::pair<opterm::Term, opterm::Term> generic_pair(
    const core::PastingDiagram& pi) {
  std::function<std::pair<opterm::Term, opterm::Term>(
      const core::PastingDiagram&)>
      go = [&](const core::PastingDiagram& beta)
      -> std::pair<opterm::Term, opterm::Term> {
    const std::string tag = std::to_string(beta.dim());
    if (beta.dim() == 0) {
      return {opterm::atom("a" + tag, 0, beta, nullptr, nullptr),
              opterm::atom("b" + tag, 0, beta, nullptr, nullptr)};
    }
    auto [s, t] = go(core::pd_boundary(beta));
    return {opterm::atom("a" + tag, beta.dim(), beta, s, t),
            opterm::atom("b" + tag, beta.dim(), beta, s, t)};
  };
  return go(core::pd_boundary(pi));
}

int cmd_pd_enum(const Config& cfg) {
  require_budget(cfg.dim <= 4 && cfg.size <= 8,
                 "pd enum supports --dim <= 4 and --size <= 8");
  Report r;
  r.command = "pd enum";
  r.bounds = {{"dim", cfg.dim}, {"size", cfg.size}};
  auto all = core::pd_enumerate(cfg.dim, static_cast<std::size_t>(cfg.size));
  json rows = json::array();
  std::string witness;
  for (const auto& pd : all) {
    rows.push_back({{"shape", pd.to_string()}, {"data", core::pd_to_json(pd)}});
    if (witness.empty() &&
        !(core::pd_from_json(core::pd_to_json(pd)) == pd)) {
      witness = "round trip changed " + pd.to_string();
    }
  }
  r.add("serialization-round-trip", witness);
  r.payload["count"] = all.size();
  r.payload["diagrams"] = std::move(rows);
  return emit(r, cfg.out, cfg.format);
}

int cmd_nerve_cat(const Config& cfg) {
  require_budget(cfg.size <= 6 && cfg.window <= 5,
                 "nerve-cat supports --size <= 6 and --window <= 5");
  precat::Category c;
  if (!cfg.input.empty()) {
    c = precat::category_from_json(unwrap(load_json(cfg.input), "category"));
  } else {
    c = precat::random_category(cfg.size, cfg.seed);
  }
  Report r;
  r.command = "nerve-cat";
  r.bounds = {{"window", cfg.window}, {"size", cfg.size}, {"seed", cfg.seed}};
  r.add("category-laws", precat::category_validate(c));
  auto w = precat::nerve_of_category(c, cfg.window);
  r.add("presheaf-laws", precat::presheaf_check(w));
  r.payload["category"] = precat::category_to_json(c);
  r.payload["window"] = precat::window_to_json(w);
  return emit(r, cfg.out, cfg.format);
}

int cmd_nerve_bicat(const Config& cfg) {
  require_budget(cfg.window <= 3, "nerve-bicat supports --window <= 3");
  bicat::Bicategory b;
  if (!cfg.input.empty()) {
    b = bicat::bicat_from_json(unwrap(load_json(cfg.input), "bicategory"));
  } else if (cfg.example == "cocycle") {
    b = bicat::z2_cocycle_bicategory();
  } else {
    b = bicat::two_object_strict();
  }
  Report r;
  r.command = "nerve-bicat";
  r.bounds = {{"window", cfg.window}};
  r.add("bicategory-laws", bicat::bicat_validate(b));
  auto nw = nerve2::nerve_window(b, cfg.window);
  r.add("presheaf-laws", precat::presheaf_check(nw.window));
  r.payload["window"] = precat::window_to_json(nw.window);
  return emit(r, cfg.out, cfg.format);
}

int cmd_segal_check(const Config& cfg) {
  auto w = precat::window_from_json(unwrap(load_json(cfg.input), "window"));
  Report r;
  r.command = "segal-check";
  r.bounds = {{"window", w.bound}, {"axes", w.n}};
  r.add("presheaf-laws", precat::presheaf_check(w));
  auto rep = precat::segal_condition(w);
  for (auto& item : rep.items) r.verdicts.push_back(std::move(item));
  return emit(r, cfg.out, cfg.format);
}

int cmd_khat(const Config& cfg) {
  require_budget(cfg.dim <= 3 && cfg.size <= 8,
                 "khat supports --dim <= 3 and --size <= 8");
  Report r;
  r.command = "khat";
  r.bounds = {{"dim", cfg.dim}, {"size", cfg.size}};
  json rows = json::array();
  std::string witness;
  for (int d = 0; d <= cfg.dim; ++d) {
    for (const auto& pi :
         core::pd_enumerate(d, static_cast<std::size_t>(cfg.size))) {
      auto t = opterm::khat(pi);
      bool ok = opterm::term_arity(t) == pi;
      rows.push_back({{"shape", pi.to_string()},
                      {"term", opterm::term_to_string(t)},
                      {"section", ok}});
      if (!ok && witness.empty())
        witness = "arity of khat(" + pi.to_string() + ") differs";
    }
  }
  r.add("section-property", witness);
  r.payload["table"] = std::move(rows);
  return emit(r, cfg.out, cfg.format);
}

int cmd_delta(const Config& cfg) {
  require_budget(cfg.dim <= 3 && cfg.size <= 6,
                 "delta supports --dim <= 3 and --size <= 6");
  Report r;
  r.command = "delta";
  r.bounds = {{"dim", cfg.dim}, {"size", cfg.size}};
  json rows = json::array();
  std::string witness;
  for (int d = 1; d <= cfg.dim; ++d) {
    for (const auto& pi :
         core::pd_enumerate(d, static_cast<std::size_t>(cfg.size))) {
      auto [a, b] = generic_pair(pi);
      opterm::ContractionProblem prob{pi, a, b};
      opterm::check_contraction_problem(prob);
      auto t = opterm::unbiased_delta(prob);
      bool ok = opterm::term_arity(t) == pi &&
                opterm::term_eq(opterm::term_src(t), a) &&
                opterm::term_eq(opterm::term_tgt(t), b);
      rows.push_back({{"shape", pi.to_string()},
                      {"term", opterm::term_to_string(t)},
                      {"bounded", ok}});
      if (!ok && witness.empty())
        witness = "synthesis misses the boundary for " + pi.to_string();
    }
  }
  r.add("contraction-synthesis", witness);
  r.payload["table"] = std::move(rows);
  return emit(r, cfg.out, cfg.format);
}

int cmd_i2_build(const Config& cfg) {
  require_budget(cfg.j >= 1 && cfg.k >= 0 && cfg.j + cfg.k <= 6 &&
                     cfg.depth <= 4,
                 "i2 build supports --j + --k <= 6 and --depth <= 4");
  auto pres = penon::cuboidal_presentation({cfg.j, cfg.k});
  Report r;
  r.command = "i2 build";
  r.bounds = {{"j", cfg.j}, {"k", cfg.k}, {"depth", cfg.depth}};
  r.add("presentation-sound", penon::presentation_validate(pres));
  auto q = penon::interleave(pres, cfg.depth);
  auto clashes = penon::q_parallel_distinct(q);
  std::string witness;
  if (!clashes.empty()) {
    witness = clashes.front().first.image_key + " and " +
              clashes.front().second.image_key;
  }
  r.add("no-parallel-distinct-top-cells", witness);
  r.payload["inventory"] = penon::q_to_json(q);
  return emit(r, cfg.out, cfg.format);
}

int cmd_penon_nerve(const Config& cfg) {
  require_budget(cfg.window <= 2 && cfg.depth <= 4,
                 "penon-nerve supports --window <= 2 and --depth <= 4");
  bicat::Bicategory b;
  if (!cfg.input.empty()) {
    b = bicat::bicat_from_json(unwrap(load_json(cfg.input), "bicategory"));
  } else {
    b = bicat::two_object_strict();
  }
  Report r;
  r.command = "penon-nerve";
  r.bounds = {{"window", cfg.window}, {"depth", cfg.depth}};
  r.add("bicategory-laws", bicat::bicat_validate(b));
  r.add("strictness", penon::strictness_violations(b));
  auto w = penon::penon_nerve_window(b, cfg.window, cfg.depth);
  r.add("presheaf-laws", precat::presheaf_check(w));
  auto rep = precat::segal_condition(w);
  for (auto& item : rep.items) r.verdicts.push_back(std::move(item));
  r.payload["window"] = precat::window_to_json(w);
  return emit(r, cfg.out, cfg.format);
}

int cmd_pcheck(const Config& cfg) {
  require_budget(cfg.j >= 1 && cfg.k >= 0 && cfg.j + cfg.k <= 5 &&
                     cfg.depth <= 4,
                 "pcheck supports --j + --k <= 5 and --depth <= 4");
  auto pres = penon::cuboidal_presentation({cfg.j, cfg.k});
  auto rep = penon::p_monad_check(pres.gens, cfg.depth);
  Report r;
  r.command = "pcheck";
  r.bounds = {{"j", cfg.j},
              {"k", cfg.k},
              {"depth", rep.depth},
              {"size1", rep.size1},
              {"size2", rep.size2}};
  for (auto& item : rep.items) r.verdicts.push_back(std::move(item));
  return emit(r, cfg.out, cfg.format);
}

int cmd_validate(const Config& cfg) {
  json j = load_json(cfg.input);
  Report r;
  r.command = "validate";
  r.bounds = json::object();
  if (!j.is_object()) throw InputError("unrecognized payload: not an object");
  auto all = [&r](const std::string& name,
                  const std::vector<std::string>& violations) {
    r.add(name, violations);
    for (std::size_t i = 1; i < violations.size(); ++i)
      r.payload["extra_witnesses"].push_back(violations[i]);
  };
  if (j.contains("ones") && j.contains("twos")) {
    r.payload["detected"] = "bicategory";
    all("bicategory-laws", bicat::bicat_validate(bicat::bicat_from_json(j)));
  } else if (j.contains("morphisms") && j.contains("comp")) {
    r.payload["detected"] = "category";
    all("category-laws",
        precat::category_validate(precat::category_from_json(j)));
  } else if (j.contains("value") && j.contains("action")) {
    r.payload["detected"] = "presheaf-window";
    all("presheaf-laws", precat::presheaf_check(precat::window_from_json(j)));
  } else if (j.contains("cells") && j.contains("src")) {
    r.payload["detected"] = "globular-set";
    all("globular-laws",
        core::validate_globular(core::globular_from_json(j)));
  } else {
    throw InputError("unrecognized payload: expected a bicategory, category, "
                     "presheaf window, or globular set dump");
  }
  return emit(r, cfg.out, cfg.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite checks for globular higher-category structures"};
  app.require_subcommand(1);
  Config cfg;
  int rc = 0;

  auto* pd = app.add_subcommand("pd", "Pasting-diagram utilities");
  pd->require_subcommand(1);
  auto* pd_enum = pd->add_subcommand("enum", "Enumerate diagrams by size");
  pd_enum->add_option("--dim", cfg.dim, "Diagram dimension");
  pd_enum->add_option("--size", cfg.size, "Maximum diagram size");
  add_io(pd_enum, cfg);
  pd_enum->callback([&] { rc = cmd_pd_enum(cfg); });

  auto* nc = app.add_subcommand("nerve-cat", "Nerve window of a category");
  nc->add_option("--input", cfg.input, "Category JSON (else a seeded random one)");
  nc->add_option("--size", cfg.size, "Objects in the random category");
  nc->add_option("--seed", cfg.seed, "Random-category seed");
  nc->add_option("--window", cfg.window, "Window bound");
  add_io(nc, cfg);
  nc->callback([&] { rc = cmd_nerve_cat(cfg); });

  auto* nb = app.add_subcommand("nerve-bicat", "Nerve window of a bicategory");
  nb->add_option("--input", cfg.input, "Bicategory JSON (else a built-in example)");
  nb->add_option("--example", cfg.example, "Built-in example when no input")
      ->check(CLI::IsMember({"strict2", "cocycle"}));
  nb->add_option("--window", cfg.window, "Window bound");
  add_io(nb, cfg);
  nb->callback([&] { rc = cmd_nerve_bicat(cfg); });

  auto* sc = app.add_subcommand("segal-check", "Segal condition on a window");
  sc->add_option("--input", cfg.input, "Window JSON or a report carrying one")
      ->required();
  add_io(sc, cfg);
  sc->callback([&] { rc = cmd_segal_check(cfg); });

  auto* kh = app.add_subcommand("khat", "Section of the arity map on terms");
  kh->add_option("--dim", cfg.dim, "Maximum diagram dimension");
  kh->add_option("--size", cfg.size, "Maximum diagram size");
  add_io(kh, cfg);
  kh->callback([&] { rc = cmd_khat(cfg); });

  auto* dl = app.add_subcommand("delta", "Unbiased contraction synthesis");
  dl->add_option("--dim", cfg.dim, "Maximum diagram dimension");
  dl->add_option("--size", cfg.size, "Maximum diagram size");
  add_io(dl, cfg);
  dl->callback([&] { rc = cmd_delta(cfg); });

  auto* i2 = app.add_subcommand("i2", "Interleaved cuboidal structures");
  i2->require_subcommand(1);
  auto* i2b = i2->add_subcommand("build", "Build and inventory one structure");
  i2b->add_option("--j", cfg.j, "First grid size");
  i2b->add_option("--k", cfg.k, "Second grid size");
  i2b->add_option("--depth", cfg.depth, "Composite nesting depth");
  add_io(i2b, cfg);
  i2b->callback([&] { rc = cmd_i2_build(cfg); });

  auto* pn = app.add_subcommand("penon-nerve",
                                "Assignment nerve of a strict 2-category");
  pn->add_option("--input", cfg.input, "Bicategory JSON (else a built-in example)");
  pn->add_option("--window", cfg.window, "Window bound");
  pn->add_option("--depth", cfg.depth, "Interleaving depth");
  add_io(pn, cfg);
  pn->callback([&] { rc = cmd_penon_nerve(cfg); });

  auto* pc = app.add_subcommand("pcheck", "Bounded free-structure comparison");
  pc->add_option("--j", cfg.j, "First grid size");
  pc->add_option("--k", cfg.k, "Second grid size");
  pc->add_option("--depth", cfg.depth, "Interleaving depth");
  add_io(pc, cfg);
  pc->callback([&] { rc = cmd_pcheck(cfg); });

  auto* va = app.add_subcommand("validate", "Validate a structure dump");
  va->add_option("--input", cfg.input, "JSON file to validate")->required();
  add_io(va, cfg);
  va->callback([&] { rc = cmd_validate(cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const json::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
