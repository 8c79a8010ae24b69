#pragma once

#include <string>

#include "asimkit/formula.hpp"

namespace asimkit {

// Renderings parse back to structurally equal trees. Binary operands that
// are themselves binary (or quantified) are always parenthesized.
[[nodiscard]] std::string render(const IntFormula& formula);
[[nodiscard]] std::string render(const ModalFormula& formula);
[[nodiscard]] std::string render(const FOFormula& formula);

}  // namespace asimkit
