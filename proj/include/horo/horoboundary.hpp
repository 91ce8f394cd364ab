#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "horo/convexfn.hpp"
#include "horo/normedspace.hpp"
#include "horo/polytope.hpp"

namespace horo {

/// The dual-side data (E, p): an extreme set E of the dual ball and a
/// primal point p, inducing the function I_E + <., p> - inf_E <., p>.
struct DualHorodata {
    Face face;        // face of the dual ball
    Polytope domain;  // the face as a polytope
    VecQ p;
    rational canonical_offset;  // inf over E of <y, p>
    AffineOnPolytope h;
};

DualHorodata build_dual_horodata(const NormedSpace& space, const Face& e, const VecQ& p);

/// The transform of a dual horodatum: x -> |p - x|_E - |p|_E. Convex,
/// oriented 1-Lipschitz, zero at the origin.
class BusemannPoint {
  public:
    explicit BusemannPoint(DualHorodata source);

    const DualHorodata& source() const { return source_; }
    double value(const VecD& x) const;
    rational value(const VecQ& x) const;
    Fn as_fn() const;
    MaxAffine as_max_affine() const;

  private:
    DualHorodata source_;
    double norm_p_d_;
    rational norm_p_q_;
};

double eval_busemann(const BusemannPoint& bp, const VecD& x);

/// Whether two data induce the same boundary function: equal faces and
/// <., p_a - p_b> constant on the face.
bool busemann_equal(const DualHorodata& a, const DualHorodata& b);

/// Hook for the builtin smooth bodies: exact statements about the true
/// (undiscretized) dual ball. nullopt means the set is outside the
/// decided families.
class SymbolicDualBall {
  public:
    virtual ~SymbolicDualBall() = default;
    virtual std::optional<bool> is_extreme(const Polytope& e) const = 0;
    virtual std::optional<ExtremalityWitness> extremality_witness(const Polytope& e) const = 0;
};

enum class HoroClass { interior, busemann, horofunction_not_busemann, not_in_compactification };
enum class LimitEvidence { none, caller_asserted, ray_detected };

struct Classification {
    HoroClass kind = HoroClass::not_in_compactification;
    std::optional<VecQ> base_point;        // interior: phi_z recovered
    std::optional<Face> face;              // Busemann: realized face of the dual ball
    std::optional<Polytope> extreme_set;   // domain of the transform
    std::optional<VecQ> parameter;         // Busemann: p
    std::string reason;
};

struct IdentifyOptions {
    LimitEvidence evidence = LimitEvidence::none;
    const SymbolicDualBall* symbolic = nullptr;
    /// Count the whole dual ball as a proper extreme set (then phi_z also
    /// carries the (E, p) parameterization).
    bool whole_ball_proper = false;
};

/// Classifies a convex 1-Lipschitz function vanishing at the origin by the
/// structure of its transform: full-domain affine -> interior point;
/// affine on an extreme set -> Busemann; affine on a non-extreme set ->
/// horofunction without Busemann status when limit evidence exists;
/// anything else is outside the compactification. Throws when the
/// preconditions fail.
Classification identify_horofunction(const NormedSpace& space, const MaxAffine& f,
                                     const IdentifyOptions& opts = {});

struct RayLimitReport {
    std::vector<double> schedule;
    std::vector<double> residuals;  // per schedule entry, against the fit or successor
    bool converged = false;
    std::optional<MaxAffine> fit;  // exact limit for polytopal gauges
    Fn empirical;                  // last-stage evaluator
    std::string note;
};

/// Follows phi along t * direction over the schedule and reports the
/// empirical limit. Polytopal gauges admit an exact piecewise-affine fit:
/// the support face of the dual ball in the ray direction.
RayLimitReport limit_along_ray(const NormedSpace& space, const VecD& direction,
                               const std::vector<double>& schedule, const FnGridProbe& probe);

std::vector<double> default_ray_schedule(double t_max = 67108864.0);

struct AlmostGeodesic {
    std::vector<VecD> points;
    double epsilon = 0;
    std::optional<std::pair<Face, VecQ>> target;  // (E, p)
};

struct AlmostGeodesicReport {
    double min_epsilon = 0;            // smallest feasible budget over all prefixes
    std::vector<double> prefix_slack;  // per n: path length minus direct distance
    double rieffel_max_dev = 0;        // two-parameter deviation on tail pairs
};

AlmostGeodesicReport verify_almost_geodesic(const NormedSpace& space, const AlmostGeodesic& ag);

struct LiftOptions {
    double lambda_cap = 1.152921504606847e18;  // 2^60
    int refine_steps = 20;
    bool stepwise_chain = false;  // descend one facet at a time
    std::function<bool(int)> progress;
};

struct AlmostGeodesicBuild {
    AlmostGeodesic geodesic;
    std::vector<double> lambdas;
    AlmostGeodesicReport verification;
    double probe_distance = 0;    // uniform distance to the target on the schedule
    int chain_length = 0;
};

/// Constructs an almost-geodesic converging to the Busemann point of
/// (e, p): iterates the exposed-face lift, choosing each scale by doubling
/// and binary refinement against the per-step gap thresholds. The dense
/// point schedule is {0} followed by the probe samples.
AlmostGeodesicBuild build_almost_geodesic(const NormedSpace& space, const Face& e, const VecQ& p,
                                          int n_points, const FnGridProbe& probe,
                                          const LiftOptions& opts = {});

enum class ClosureVerdict { closed, not_closed, inconclusive };

struct ClosureReport {
    ClosureVerdict verdict = ClosureVerdict::inconclusive;
    std::string reason;
    std::vector<std::vector<VecD>> witness_sets;  // extreme sets approaching the limit
    std::vector<VecD> limit_set;
    std::optional<ExtremalityWitness> limit_witness;  // segment defeating extremality
};

struct ClosureOptions {
    std::function<ClosureReport()> symbolic_report;  // builtin smooth bodies
    bool discretized_smooth = false;
};

/// Theorem-of-the-artifact check: polytopal balls and all planar balls are
/// closed; builtin smooth families answer exactly through their symbolic
/// descriptor; other discretized hulls are inconclusive.
ClosureReport check_extreme_closure(const NormedSpace& space, const ClosureOptions& opts = {});

struct MinDecompositionCertificate {
    bool valid = false;
    double min_mismatch = 0;  // max |min(f1,f2) - f| over the probe
    LipschitzReport lip1, lip2;
    double difference1 = 0, difference2 = 0;  // max |f_i - f| over the probe
    double tolerance = 0;
};

/// A valid certificate shows f = min(f1, f2) with both f_i 1-Lipschitz and
/// both different from f, which rules out Busemann status for f.
MinDecompositionCertificate verify_min_decomposition(
    const NormedSpace& space, const Fn& f, const Fn& f1, const Fn& f2, const FnGridProbe& probe,
    const std::vector<std::pair<VecD, VecD>>& pairs, double tol = 1e-9);

}  // namespace horo
