#pragma once

#include <optional>
#include <vector>

#include "horo/rational.hpp"

namespace horo {

using VecQ = std::vector<rational>;
using VecD = std::vector<double>;
using MatQ = std::vector<VecQ>;  // row-major

VecD to_double(const VecQ& v);
VecQ rationalize(const VecD& v, int64_t denom = (int64_t{1} << 26));

rational dot(const VecQ& a, const VecQ& b);
double dot(const VecD& a, const VecD& b);
VecQ add(const VecQ& a, const VecQ& b);
VecQ sub(const VecQ& a, const VecQ& b);
VecQ scale(const VecQ& a, const rational& t);
VecD sub(const VecD& a, const VecD& b);
double euclidean_norm(const VecD& v);
double euclidean_distance(const VecD& a, const VecD& b);

bool is_zero(const VecQ& v);

/// Rank of the row span, exact.
int rank(MatQ rows);

/// Rank of the affine span of a point set (dimension of their affine hull).
int affine_rank(const std::vector<VecQ>& points);

struct LinearSolveResult {
    bool consistent = false;
    VecQ solution;  // free variables pinned to zero
};

/// Solves A x = b by Gaussian elimination, exact. A may be rectangular;
/// when underdetermined the free variables are set to zero so the result
/// is deterministic.
LinearSolveResult solve_linear(const MatQ& a, const VecQ& b);

}  // namespace horo
