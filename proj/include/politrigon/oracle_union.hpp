#pragma once

#include "politrigon/union_boundary.hpp"

namespace politrigon {

// Same contract as union_boundary, computed by a structurally different
// route: vertical decomposition at all vertex and crossing abscissae, 1-D
// interval union within each slab, boundary read off the merged trapezoids.
// The two implementations cross-validate each other.
UnionResult oracle_union(const Scene& s);

}  // namespace politrigon
