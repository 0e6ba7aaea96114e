#pragma once
// Bounded two-phase interleaving over a 2-dimensional presentation: per
// dimension, first add contraction cells for every parallel pair of cells
// with equal interpretation, then add binary composites up to a nesting
// depth bound.  At the top dimension the result is quotiented so that
// parallel cells with equal interpretation coincide; top cells are therefore
// kept as canonical (source, target, interpretation) triples.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "core/labelled.hpp"
#include "penon/presentation.hpp"

namespace globcat::penon {

enum class QKind { Generating, Contraction, Composite };
enum class CtrClass { NotContraction, Algebraic, Triangular, Derived };

struct QCell {
  QKind kind = QKind::Generating;
  int dim = 0;
  int depth = 0;               // composite nesting count
  std::string gen;             // Generating: presented cell name
  int ctr_a = -1, ctr_b = -1;  // Contraction: parallel equal-image endpoints
  int comp_p = -1;             // Composite: gluing dimension
  int second = -1, first = -1;  // Composite: arguments, first is source-side
  int src = -1, tgt = -1;       // boundary cell ids (dimension >= 1)
  core::LabelledDiagram image;
  // Contraction cells only: rebracketing-style (equal generator leaves),
  // the single-split generator-versus-composite shape, or anything else.
  CtrClass cls = CtrClass::NotContraction;
};

// Canonical representative of a top-dimension cell.
struct TopTriple {
  int src = -1, tgt = -1;  // 1-cell ids
  std::string image_key;   // printed interpretation, the comparison key
  core::LabelledDiagram image;
  int depth = 0;

  std::tuple<int, int, std::string> key() const {
    return {src, tgt, image_key};
  }
};

struct QStructure {
  Presentation pres;
  int depth = 0;
  std::vector<QCell> cells;
  std::vector<std::vector<int>> by_dim;  // materialized ids per dimension
  std::map<std::string, int> index;      // structural key -> cell id
  // All generated top cells after closure under both compositions.
  std::map<std::tuple<int, int, std::string>, TopTriple> top;

  const QCell& at(int id) const;
  int find_gen(const std::string& name) const;  // -1 when absent
};

// Build the bounded interleaving.  Composite arguments range over generating
// cells and composites only; contraction cells enter composites one
// dimension up (as 2-cell endpoints), never as 1-cell factors, since
// identity padding adds no new interpretations at any depth.
QStructure interleave(const Presentation& p, int depth);

// Find-or-intern a contraction cell between parallel equal-image cells, or a
// binary composite.  Throw std::invalid_argument on ill-typed input and
// std::out_of_range when the cell would exceed the depth bound.
int q_ctr(QStructure& q, int a, int b);
int q_compose(QStructure& q, int p, int second, int first);

// Top-dimension equality is "parallel with equal interpretation"; below the
// top it is structural.  Throws std::invalid_argument on dimension mismatch.
bool q_equal(const QStructure& q, int c1, int c2);

// The canonical triple of a materialized 2-cell.
TopTriple top_of(const QStructure& q, int id);

// Vertical / horizontal composition of canonical top cells; nullopt when the
// cells are not composable or the composite would exceed the depth bound.
std::optional<TopTriple> top_vcomp(QStructure& q, const TopTriple& second,
                                   const TopTriple& first);
std::optional<TopTriple> top_hcomp(QStructure& q, const TopTriple& second,
                                   const TopTriple& first);

// Closure of the seeds under both compositions within the depth bound.
std::map<std::tuple<int, int, std::string>, TopTriple> top_closure(
    QStructure& q, std::vector<TopTriple> seeds);

// Distinct generated top cells sharing both boundaries (their
// interpretations necessarily differ); empty on every structure where the
// top-dimension quotient leaves no parallel pairs.
std::vector<std::pair<TopTriple, TopTriple>> q_parallel_distinct(
    const QStructure& q);

struct QInventory {
  int generating0 = 0;
  int generating1 = 0, contraction1 = 0, composite1 = 0;
  int generating2 = 0, algebraic2 = 0, triangular2 = 0, derived2 = 0;
  int top_cells = 0;
};
QInventory q_inventory(const QStructure& q);

std::string q_cell_to_string(const QStructure& q, int id);
nlohmann::json q_to_json(const QStructure& q);

}  // namespace globcat::penon
