#include "opterm/term.hpp"

#include <stdexcept>

namespace globcat::opterm {

using core::pd_boundary;
using core::pd_compose;
using core::pd_identity;

namespace {

Term make(TermNode node) {
  return std::make_shared<const TermNode>(std::move(node));
}

}  // namespace

Term eta(int m) {
  if (m < 0) throw std::invalid_argument("eta: negative dimension");
  TermNode n;
  n.kind = TermKind::Eta;
  n.m = m;
  n.arity = PastingDiagram::single_cell(m);
  return make(std::move(n));
}

Term comp(int m, int p, const Term& right, const Term& left) {
  if (!right || !left) throw std::invalid_argument("comp: null factor");
  if (right->m != m || left->m != m)
    throw std::invalid_argument("comp: factor dimension mismatch");
  if (p < 0 || p >= m) throw std::invalid_argument("comp: need 0 <= p < m");
  if (!term_eq(term_src_iter(right, p), term_tgt_iter(left, p)))
    throw std::invalid_argument(
        "comp: boundary mismatch at " + std::to_string(p) + ": src " +
        term_to_string(term_src_iter(right, p)) + " vs tgt " +
        term_to_string(term_tgt_iter(left, p)));
  TermNode n;
  n.kind = TermKind::Comp;
  n.m = m;
  n.p = p;
  n.left = left;
  n.right = right;
  n.arity = pd_compose(right->arity, left->arity, p);
  return make(std::move(n));
}

Term gamma(const Term& a, const Term& b) {
  if (!a || !b) throw std::invalid_argument("gamma: null boundary");
  if (a->m != b->m) throw std::invalid_argument("gamma: dimension mismatch");
  if (!(a->arity == b->arity))
    throw std::invalid_argument("gamma: arities differ: " +
                                a->arity.to_string() + " vs " +
                                b->arity.to_string());
  if (a->m >= 1) {
    if (!term_eq(term_src(a), term_src(b)) ||
        !term_eq(term_tgt(a), term_tgt(b)))
      throw std::invalid_argument("gamma: boundaries not parallel");
  }
  TermNode n;
  n.kind = TermKind::Gamma;
  n.m = a->m + 1;
  n.ga = a;
  n.gb = b;
  n.arity = pd_identity(a->arity);
  return make(std::move(n));
}

Term id_on(const Term& t) { return gamma(t, t); }

Term id_tower(const Term& t, int times) {
  Term cur = t;
  for (int i = 0; i < times; ++i) cur = id_on(cur);
  return cur;
}

Term atom(const std::string& name, int dim, const PastingDiagram& arity,
          const Term& src, const Term& tgt) {
  if (arity.dim() != dim)
    throw std::invalid_argument("atom: arity dimension mismatch");
  if (dim >= 1) {
    if (!src || !tgt) throw std::invalid_argument("atom: missing boundary");
    if (src->m != dim - 1 || tgt->m != dim - 1)
      throw std::invalid_argument("atom: boundary dimension mismatch");
    if (!(src->arity == pd_boundary(arity)) ||
        !(tgt->arity == pd_boundary(arity)))
      throw std::invalid_argument(
          "atom: boundary arity must be the arity boundary");
    if (dim >= 2 &&
        (!term_eq(term_src(src), term_src(tgt)) ||
         !term_eq(term_tgt(src), term_tgt(tgt))))
      throw std::invalid_argument("atom: boundary terms not parallel");
  }
  TermNode n;
  n.kind = TermKind::Atom;
  n.m = dim;
  n.arity = arity;
  n.name = name;
  n.atom_src = src;
  n.atom_tgt = tgt;
  return make(std::move(n));
}

bool term_eq(const Term& a, const Term& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->m != b->m) return false;
  switch (a->kind) {
    case TermKind::Eta:
      return true;
    case TermKind::Comp:
      return a->p == b->p && term_eq(a->left, b->left) &&
             term_eq(a->right, b->right);
    case TermKind::Gamma:
      return term_eq(a->ga, b->ga) && term_eq(a->gb, b->gb);
    case TermKind::Atom:
      return a->name == b->name && a->arity == b->arity &&
             term_eq(a->atom_src, b->atom_src) &&
             term_eq(a->atom_tgt, b->atom_tgt);
  }
  return false;
}

const PastingDiagram& term_arity(const Term& t) {
  if (!t) throw std::invalid_argument("term_arity: null term");
  return t->arity;
}

Term term_src(const Term& t) {
  if (!t || t->m < 1)
    throw std::invalid_argument("term_src: no boundary below dimension 1");
  switch (t->kind) {
    case TermKind::Eta:
      return eta(t->m - 1);
    case TermKind::Gamma:
      return t->ga;
    case TermKind::Atom:
      return t->atom_src;
    case TermKind::Comp:
      if (t->p == t->m - 1) return term_src(t->left);
      return comp(t->m - 1, t->p, term_src(t->right), term_src(t->left));
  }
  throw std::logic_error("term_src: unreachable");
}

Term term_tgt(const Term& t) {
  if (!t || t->m < 1)
    throw std::invalid_argument("term_tgt: no boundary below dimension 1");
  switch (t->kind) {
    case TermKind::Eta:
      return eta(t->m - 1);
    case TermKind::Gamma:
      return t->gb;
    case TermKind::Atom:
      return t->atom_tgt;
    case TermKind::Comp:
      if (t->p == t->m - 1) return term_tgt(t->right);
      return comp(t->m - 1, t->p, term_tgt(t->right), term_tgt(t->left));
  }
  throw std::logic_error("term_tgt: unreachable");
}

Term term_src_iter(const Term& t, int k) {
  Term cur = t;
  while (cur->m > k) cur = term_src(cur);
  return cur;
}

Term term_tgt_iter(const Term& t, int k) {
  Term cur = t;
  while (cur->m > k) cur = term_tgt(cur);
  return cur;
}

bool term_is_identity(const Term& t) {
  return t && t->kind == TermKind::Gamma && term_eq(t->ga, t->gb);
}

bool term_is_identity_tower(const Term& t, int height) {
  Term cur = t;
  for (int i = 0; i < height; ++i) {
    if (!term_is_identity(cur)) return false;
    cur = cur->ga;
  }
  return true;
}

Term term_normalize(const Term& t) {
  if (!t) return t;
  switch (t->kind) {
    case TermKind::Eta:
    case TermKind::Atom:
      return t;
    case TermKind::Gamma: {
      Term a = term_normalize(t->ga);
      Term b = term_normalize(t->gb);
      if (term_eq(a, t->ga) && term_eq(b, t->gb)) return t;
      return gamma(a, b);
    }
    case TermKind::Comp: {
      Term l = term_normalize(t->left);
      Term r = term_normalize(t->right);
      int height = t->m - t->p;
      if (term_is_identity_tower(l, height)) return r;
      if (term_is_identity_tower(r, height)) return l;
      return comp(t->m, t->p, r, l);
    }
  }
  throw std::logic_error("term_normalize: unreachable");
}

std::string term_to_string(const Term& t) {
  if (!t) return "<null>";
  switch (t->kind) {
    case TermKind::Eta:
      return "(eta " + std::to_string(t->m) + ")";
    case TermKind::Comp:
      return "(comp " + std::to_string(t->m) + " " + std::to_string(t->p) +
             " " + term_to_string(t->right) + " " + term_to_string(t->left) +
             ")";
    case TermKind::Gamma:
      return "(gamma " + term_to_string(t->ga) + " " + term_to_string(t->gb) +
             ")";
    case TermKind::Atom:
      return "(atom " + t->name + ")";
  }
  return "<bad>";
}

std::vector<SoCCell> soc_collection(int n) {
  std::vector<SoCCell> out;
  for (int m = 0; m <= n; ++m) {
    for (int p = 0; p <= m; ++p) {
      SoCCell c;
      c.m = m;
      c.p = p;
      if (p == m) {
        c.arity = PastingDiagram::single_cell(m);
      } else {
        c.arity = pd_compose(PastingDiagram::single_cell(m),
                             PastingDiagram::single_cell(m), p);
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace globcat::opterm
