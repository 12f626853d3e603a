#pragma once

#include <string>

#include "cellplus/presentation.hpp"

namespace cellplus {

// Text forms:
//   group { gens: a b; rels: a^2 b^3 (a*b)^5 }
//   hom   { to: <group>; a -> <word>; b -> <word>; certified: true }
//   space { group: <group>; cells2: <word|1>*; aspherical: true|false }
// `*` concatenation, `^` integer powers, parentheses group subwords,
// `1` is the empty word. Parse errors carry line/column.
Presentation parse_group(const std::string& text);
GroupHom parse_hom(const std::string& text, const Presentation& source);
SpaceModel parse_space(const std::string& text);

std::string serialize_group(const Presentation& p);
std::string serialize_hom(const GroupHom& h);
std::string serialize_space(const SpaceModel& s);

} // namespace cellplus
