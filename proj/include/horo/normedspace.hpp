#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "horo/convexfn.hpp"
#include "horo/polytope.hpp"

namespace horo {

/// Planar circle in ambient space: center + radius * (cos t * axis1 +
/// sin t * axis2). Enters the exact kernel through m-gon discretization.
struct CirclePiece {
    VecQ center;
    VecQ axis1;
    VecQ axis2;
    rational radius;
    enum class Mode { circumscribed, inscribed } mode = Mode::circumscribed;
};

struct PointsPiece {
    std::vector<VecQ> points;
};

using BallPiece = std::variant<CirclePiece, PointsPiece>;

enum class BallKind { vpolytope, hull, hpolytope_intersection };

struct BallSpec {
    int dimension = 0;
    BallKind kind = BallKind::vpolytope;
    bool dual_side = false;  // when set, the pieces describe the dual ball
    std::vector<BallPiece> pieces;
    int discretization = 64;
};

/// A finite-dimensional space with a (possibly asymmetric) gauge given by a
/// compact convex body with 0 interior. Holds the realized dual ball and
/// the primal H-representation; the primal vertex enumeration can be
/// expensive for hulls given on the dual side, so it is materialized lazily.
class NormedSpace {
  public:
    NormedSpace(Polytope dual_ball, std::vector<Halfspace> ball_hrep, int dim);

    int dim() const { return dim_; }
    const Polytope& dual_ball() const { return dual_ball_; }
    const std::vector<Halfspace>& ball_hrep() const { return ball_hrep_; }

    /// Full primal ball (both representations); computed on first use.
    const Polytope& ball() const;
    bool ball_materialized() const;
    /// Installs an already-computed primal ball into the cache.
    void seed_ball(Polytope b) const;

    /// gauge(z) = max over dual-ball vertices of -<y, z>.
    rational gauge(const VecQ& z) const;
    double gauge(const VecD& z) const;
    /// Same value through the primal route max_i <a_i, z> / b_i.
    rational gauge_primal(const VecQ& z) const;

    /// d(x, y) = gauge(y - x); possibly asymmetric.
    double metric(const VecD& x, const VecD& y) const;
    rational metric(const VecQ& x, const VecQ& y) const;

    /// Gauge used by numeric evaluators: the exact closed form when the
    /// space carries one (builtin smooth bodies), else the polytopal gauge.
    double eval_gauge(const VecD& z) const;
    double eval_metric(const VecD& x, const VecD& y) const;
    void set_exact_gauge(Fn g) { exact_gauge_ = std::move(g); }
    bool has_exact_gauge() const { return static_cast<bool>(exact_gauge_); }

  private:
    int dim_;
    Polytope dual_ball_;
    std::vector<Halfspace> ball_hrep_;
    std::vector<std::pair<VecD, double>> ball_hrep_d_;
    std::vector<VecD> neg_dual_vertices_d_;
    Fn exact_gauge_;
    mutable std::shared_ptr<Polytope> ball_cache_;
    mutable std::shared_ptr<std::once_flag> ball_once_;
};

/// Realizes a ball spec: discretizes circles, builds the body and its
/// polar. Throws unless 0 is interior ("origin not interior").
NormedSpace realize_ball(const BallSpec& spec);

/// |p|_C = -inf over C of <q, p> = max over vertices of <q, -p>.
rational support_neg(const Polytope& c, const VecQ& p);
double support_neg_d(const Polytope& c, const VecD& p);

/// phi_z(x) = gauge(z - x) - gauge(z); vanishes at the origin.
struct PhiFunction {
    VecD base;
    Fn gauge_fn;
    double gauge_at_base = 0;
    double operator()(const VecD& x) const;
};

PhiFunction phi(const NormedSpace& space, const VecD& z);
/// Forced-polytopal variant (ignores any exact closed-form gauge).
PhiFunction phi_polytopal(const NormedSpace& space, const VecD& z);

/// phi_z as an exact max-affine function over the dual-ball vertices.
MaxAffine phi_as_max_affine(const NormedSpace& space, const VecQ& z);

/// The transform of phi_z in closed form: affine with gradient z and
/// offset gauge(z) on the dual ball.
AffineOnPolytope phi_star_closed_form(const NormedSpace& space, const VecQ& z);

/// Probe over the gauge ball of the given radius: an axis grid over the
/// bounding box filtered to the ball, plus Halton samples. Deterministic.
FnGridProbe make_probe(const NormedSpace& space, double radius, int per_axis = 33,
                       int quasi_random = 1000);

/// Seeded sample of ordered point pairs in the gauge ball; both orders of
/// every drawn pair are included.
std::vector<std::pair<VecD, VecD>> sample_pairs(const NormedSpace& space, double radius,
                                                int unordered_count, uint64_t seed);

/// Deterministic Halton points inside the gauge ball.
std::vector<VecD> halton_in_ball(const NormedSpace& space, double radius, int count,
                                 int skip = 0);

}  // namespace horo
