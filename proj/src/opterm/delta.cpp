#include "opterm/delta.hpp"

#include <stdexcept>

#include "opterm/khat.hpp"

namespace globcat::opterm {

using core::pd_boundary;
using core::pd_is_identity;

void check_contraction_problem(const ContractionProblem& prob) {
  const int m = prob.pi.dim();
  if (m < 1)
    throw std::invalid_argument("contraction problem: shape must have "
                                "dimension >= 1");
  if (!prob.a || !prob.b)
    throw std::invalid_argument("contraction problem: missing boundary term");
  if (prob.a->m != m - 1 || prob.b->m != m - 1)
    throw std::invalid_argument(
        "contraction problem: boundary terms must have dimension m-1");
  const PastingDiagram bd = pd_boundary(prob.pi);
  if (!(term_arity(prob.a) == bd) || !(term_arity(prob.b) == bd))
    throw std::invalid_argument(
        "contraction problem: boundary term arity must be the shape "
        "boundary");
  if (m >= 2 && (!term_eq(term_src(prob.a), term_src(prob.b)) ||
                 !term_eq(term_tgt(prob.a), term_tgt(prob.b))))
    throw std::invalid_argument(
        "contraction problem: boundary terms not parallel");
}

namespace {

Term lift_to(const Term& t, int m) {
  Term cur = t;
  while (cur->m < m) cur = id_on(cur);
  return cur;
}

}  // namespace

Term unbiased_delta(const ContractionProblem& prob) {
  check_contraction_problem(prob);
  const int m = prob.pi.dim();
  const Term& a = prob.a;
  const Term& b = prob.b;
  if (pd_is_identity(prob.pi)) return gamma(a, b);

  const Term t0 = khat(prob.pi);
  // Correct the 0-boundaries first: funnel the source side out of a and the
  // target side into b, then walk the correction up one dimension at a time.
  Term delta = comp(
      m, 0,
      comp(m, 0, lift_to(gamma(term_tgt_iter(t0, 0), term_tgt_iter(b, 0)), m),
           t0),
      lift_to(gamma(term_src_iter(a, 0), term_src_iter(t0, 0)), m));
  for (int j = 0; j <= m - 2; ++j) {
    Term gsrc = gamma(term_src_iter(a, j + 1), term_src_iter(delta, j + 1));
    Term gtgt = gamma(term_tgt_iter(delta, j + 1), term_tgt_iter(b, j + 1));
    delta = comp(m, j + 1, comp(m, j + 1, lift_to(gtgt, m), delta),
                 lift_to(gsrc, m));
  }
  return delta;
}

}  // namespace globcat::opterm
