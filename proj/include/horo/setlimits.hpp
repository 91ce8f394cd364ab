#pragma once

#include <string>
#include <vector>

#include "horo/vec.hpp"

namespace horo {

/// Finite point set standing in for a compact set.
struct PointCloud {
    std::vector<VecD> points;
};

/// max of the two directed sup-inf distances, Euclidean ambient metric.
double hausdorff_distance(const PointCloud& a, const PointCloud& b);

/// Resolution-limited estimate of an upper/lower closed set limit over a
/// finite prefix of a sequence. `points` may be empty for the lower limit
/// (flagged via `empty`).
struct SetLimitEstimate {
    PointCloud points;
    bool empty = false;
    double resolution = 0;
    std::string note;  // resolution disclaimer
};

SetLimitEstimate pk_upper_limit(const std::vector<PointCloud>& seq, double resolution);
SetLimitEstimate pk_lower_limit(const std::vector<PointCloud>& seq, double resolution);

}  // namespace horo
