#include "horo/setlimits.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace horo {

namespace {

double directed_distance(const PointCloud& from, const PointCloud& to) {
    double worst = 0;
    for (const auto& p : from.points) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : to.points) best = std::min(best, euclidean_distance(p, q));
        worst = std::max(worst, best);
    }
    return worst;
}

struct Cluster {
    VecD representative;
    VecD sum;
    size_t count = 0;
    std::vector<size_t> member_indices;  // sequence indices contributing
};

// Greedy clustering of tail points at the given resolution; deterministic
// because points are visited in (index, lexicographic) order.
std::vector<Cluster> cluster_tail(const std::vector<PointCloud>& seq, size_t tail_start,
                                  double resolution) {
    std::vector<Cluster> clusters;
    for (size_t n = tail_start; n < seq.size(); ++n) {
        std::vector<VecD> pts = seq[n].points;
        std::sort(pts.begin(), pts.end());
        for (const auto& p : pts) {
            Cluster* home = nullptr;
            for (auto& c : clusters) {
                if (euclidean_distance(p, c.representative) <= resolution) {
                    home = &c;
                    break;
                }
            }
            if (!home) {
                clusters.push_back({p, VecD(p.size(), 0.0), 0, {}});
                home = &clusters.back();
            }
            for (size_t j = 0; j < p.size(); ++j) home->sum[j] += p[j];
            home->count += 1;
            if (home->member_indices.empty() || home->member_indices.back() != n)
                home->member_indices.push_back(n);
        }
    }
    return clusters;
}

VecD centroid(const Cluster& c) {
    VecD out = c.sum;
    for (auto& x : out) x /= static_cast<double>(c.count);
    return out;
}

SetLimitEstimate estimate(const std::vector<PointCloud>& seq, double resolution, bool upper) {
    if (seq.empty()) throw std::invalid_argument("empty sequence");
    const size_t tail_start = seq.size() / 2;
    const size_t tail_len = seq.size() - tail_start;
    const auto clusters = cluster_tail(seq, tail_start, resolution);

    SetLimitEstimate out;
    out.resolution = resolution;
    out.note = "resolution-limited estimate from a finite prefix";
    for (const auto& c : clusters) {
        const double fraction =
            static_cast<double>(c.member_indices.size()) / static_cast<double>(tail_len);
        // Upper limit keeps clusters hit by cofinally many terms (here: at
        // least two tail terms, or all of a short tail); the lower limit
        // demands essentially every tail term.
        const bool keep = upper ? (c.member_indices.size() >= std::min<size_t>(2, tail_len))
                                : (fraction >= 0.95);
        if (keep) out.points.points.push_back(centroid(c));
    }
    std::sort(out.points.points.begin(), out.points.points.end());
    out.empty = out.points.points.empty();
    return out;
}

}  // namespace

double hausdorff_distance(const PointCloud& a, const PointCloud& b) {
    if (a.points.empty() || b.points.empty())
        throw std::invalid_argument("hausdorff_distance: empty point cloud");
    return std::max(directed_distance(a, b), directed_distance(b, a));
}

SetLimitEstimate pk_upper_limit(const std::vector<PointCloud>& seq, double resolution) {
    return estimate(seq, resolution, /*upper=*/true);
}

SetLimitEstimate pk_lower_limit(const std::vector<PointCloud>& seq, double resolution) {
    return estimate(seq, resolution, /*upper=*/false);
}

}  // namespace horo
