#pragma once

#include <string>
#include <string_view>

#include "rnlab/roever.hpp"

namespace rnlab {

// Element files hold an arity line and one entry per line:
//
//   arity 3
//   1 2 1
//   2 1 1
//   3 3 b a'
//
// Each entry is `dom ran word`: prefixes are digit strings over 1..d ("-"
// for the root), the word uses the machine's state names with ' for
// inverses and "1" for the identity. Arity is limited to 9 by the digit
// encoding. Parsing checks syntax only; use rn_validate for the code
// invariants.

RNElement parse_rn_element(std::string_view text, MachinePtr machine);
std::string serialize_rn_element(const RNElement& e);
RNElement load_rn_element(const std::string& path, MachinePtr machine);

}  // namespace rnlab
