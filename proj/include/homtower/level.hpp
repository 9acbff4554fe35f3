#pragma once

#include "homtower/int_matrix.hpp"
#include "homtower/laurent.hpp"

namespace homtower {

// Relation rows expanded over the finite level ring Z[Q/Q^(p^s)] through the
// regular representation. The cokernel, as an abelian group, presents the
// level-s coinvariants of the module. Columns are generator-major, then
// lexicographic on exponent vectors in [0, p^s)^n.
struct LevelMatrix {
    long p = 0;
    int s = 0;
    int n = 0;
    int g = 0;
    long group_order = 0;  // p^(n*s)
    IntegerMatrix mat{0, 0};
};

LevelMatrix expand_level(const ModulePresentation& pres, int s,
                         long column_cap = 20000);

}  // namespace homtower
