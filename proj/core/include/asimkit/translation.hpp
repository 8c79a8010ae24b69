#pragma once

#include <string>

#include "asimkit/formula.hpp"

namespace asimkit {

// Standard x-translation of intuitionistic formulas:
//   st(p_n, x)    = P_n(x)
//   st(false, x)  = ~(x = x)
//   st(i & j, x)  = st(i, x) & st(j, x)
//   st(i | j, x)  = st(i, x) | st(j, x)
//   st(i -> j, x) = forall y. (R(x,y) -> (st(i, y) -> st(j, y)))
//
// Every implication introduces a fresh bound variable y0, y1, ... numbered in
// pre-order by a counter local to the call; names equal to x are skipped.
// Throws PreconditionError when x is not a valid variable name.
[[nodiscard]] FOFormula st(const IntFormula& formula, const std::string& x = "x");

// Standard modal translation:
//   tr(p_n, x) = P_n(x), tr(m & m', x) = tr(m, x) & tr(m', x),
//   tr(~m, x) = ~tr(m, x), tr([]m, x) = forall y. (R(x,y) -> tr(m, y))
[[nodiscard]] FOFormula tr(const ModalFormula& formula, const std::string& x = "x");

}  // namespace asimkit
