#pragma once

#include <vector>

#include "horo/vec.hpp"

namespace horo {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    VecQ x;          // primal solution (standard-form variables)
    rational value;  // objective at the optimum
    VecQ duals;      // one multiplier per equality row
};

/// Solves min c.x subject to A x = b, x >= 0, exactly (two-phase simplex,
/// Bland's rule). Rows with negative b are flipped internally.
LpResult solve_lp(const MatQ& a, const VecQ& b, const VecQ& c);

struct InequalityLpResult {
    LpStatus status = LpStatus::infeasible;
    VecQ y;  // free-variable solution
    rational value;
};

/// Solves max c.y subject to <a_i, y> <= b_i with y free.
InequalityLpResult maximize_over_halfspaces(const MatQ& normals, const VecQ& offsets,
                                            const VecQ& objective);

/// Finds y maximizing t with <a_i, y> + t <= b_i; t > 0 iff the polytope
/// has nonempty interior. Returns the optimizing y and t.
struct InteriorPointResult {
    LpStatus status = LpStatus::infeasible;
    VecQ point;
    rational margin;
};
InteriorPointResult interior_point(const MatQ& normals, const VecQ& offsets);

}  // namespace horo
