#pragma once

#include <string>
#include <string_view>

#include "rnlab/mealy.hpp"

namespace rnlab {

// Machine files are line oriented:
//
//   # comment
//   arity 3
//   state a
//     perm 1 3 2
//     section 1 a
//     section 2 a
//     section 3 b a
//   state b
//     perm 2 3 1
//     section 1 1
//     section 2 1
//     section 3 b
//
// `perm` lists the images of 1..d. Section words are state names separated
// by whitespace, a trailing ' marks an inverse and "1" is the empty word.
// Indentation and blank lines are ignored. The serializer emits states in
// declaration order, so parse(serialize(m)) == m and serialize(parse(f)) == f
// for canonical f.

/// Throws ParseError carrying the offending line number.
MealyMachine parse_machine(std::string_view text);
std::string serialize_machine(const MealyMachine& m);

MealyMachine load_machine(const std::string& path);

}  // namespace rnlab
