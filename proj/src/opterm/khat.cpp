#include "opterm/khat.hpp"

#include <stdexcept>

namespace globcat::opterm {

Term plus_shift(const Term& t) {
  if (!t) throw std::invalid_argument("plus_shift: null term");
  switch (t->kind) {
    case TermKind::Eta:
      return eta(t->m + 1);
    case TermKind::Gamma:
      if (!term_eq(t->ga, t->gb))
        throw std::invalid_argument(
            "plus_shift: proper contraction cell not supported");
      return id_on(plus_shift(t->ga));
    case TermKind::Comp:
      return comp(t->m + 1, t->p + 1, plus_shift(t->right),
                  plus_shift(t->left));
    case TermKind::Atom:
      throw std::invalid_argument("plus_shift: atoms not supported");
  }
  throw std::logic_error("plus_shift: unreachable");
}

Term khat(const PastingDiagram& pi) {
  if (pi.dim() == 0) return eta(0);
  if (pi.is_empty()) {
    Term t = eta(0);
    for (int i = 0; i < pi.dim(); ++i) t = id_on(t);
    return t;
  }
  const auto& entries = pi.entries();
  Term acc = plus_shift(khat(entries.back()));
  for (int j = static_cast<int>(entries.size()) - 2; j >= 0; --j)
    acc = comp(pi.dim(), 0, acc, plus_shift(khat(entries[j])));
  return acc;
}

}  // namespace globcat::opterm
