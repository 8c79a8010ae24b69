#pragma once

// Surface grammar shared by the three languages. Precedence, tightest first:
//   ~ and []  >  &  >  |  >  ->      (& and | associate left, -> right)
// Quantifiers "forall v." / "exists v." extend as far right as possible.
//
// Tokens: false ~ & | -> forall exists . ( ) = , R P<digits> p<digits> []
// and identifiers for first-order variables.

#include <string_view>

#include "asimkit/formula.hpp"

namespace asimkit {

struct IntParseOptions {
  // Accept "~i" and read it as "i -> false".
  bool sugar = false;
};

// All three throw ParseError (with the byte offset) on malformed input.
[[nodiscard]] IntFormula parse_int(std::string_view text, IntParseOptions options = {});
[[nodiscard]] ModalFormula parse_modal(std::string_view text);
[[nodiscard]] FOFormula parse_fo(std::string_view text);

}  // namespace asimkit
