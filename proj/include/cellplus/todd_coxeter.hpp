#pragma once

#include <variant>

#include "cellplus/cayley.hpp"
#include "cellplus/presentation.hpp"

namespace cellplus {

// Enumeration gave up after creating `budget` cosets; the group may be
// infinite or the budget too small — indistinguishable by design.
struct Overflow {
    size_t budget;
};

using CosetResult = std::variant<CayleyTable, Overflow>;

// Coset enumeration over the trivial subgroup (HLT-style relator scanning,
// immediate coincidence handling, deterministic scan order). On success the
// table is the regular action of the presented group.
CosetResult todd_coxeter(const Presentation& p, size_t max_cosets);

} // namespace cellplus
