#include "horo/normedspace.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <stdexcept>

#include "horo/simplex_lp.hpp"

namespace horo {

namespace {

constexpr double kPi = 3.14159265358979323846;

VecQ circle_point(const CirclePiece& c, double angle) {
    const rational cos_q = rational_from_double(std::cos(angle));
    const rational sin_q = rational_from_double(std::sin(angle));
    VecQ p = c.center;
    for (size_t j = 0; j < p.size(); ++j)
        p[j] += c.radius * (cos_q * c.axis1[j] + sin_q * c.axis2[j]);
    return p;
}

std::vector<VecQ> discretize_circle_vertices(const CirclePiece& c, int m) {
    std::vector<VecQ> pts;
    pts.reserve(m);
    for (int k = 0; k < m; ++k) pts.push_back(circle_point(c, 2.0 * kPi * k / m));
    return pts;
}

// Halfspaces of the cylinder over the circle's plane. Circumscribed mode
// uses tangent planes at the sample angles; inscribed mode uses the facet
// planes of the inscribed m-gon (offset shrunk by cos(pi/m)).
std::vector<Halfspace> discretize_circle_constraints(const CirclePiece& c, int m) {
    std::vector<Halfspace> out;
    out.reserve(m);
    const bool inscribed = c.mode == CirclePiece::Mode::inscribed;
    const rational shrink = inscribed ? rational_from_double(std::cos(kPi / m)) : rational(1);
    const double phase = inscribed ? kPi / m : 0.0;
    for (int k = 0; k < m; ++k) {
        const double angle = 2.0 * kPi * k / m + phase;
        const rational cos_q = rational_from_double(std::cos(angle));
        const rational sin_q = rational_from_double(std::sin(angle));
        VecQ normal(c.center.size(), rational(0));
        for (size_t j = 0; j < normal.size(); ++j)
            normal[j] = cos_q * c.axis1[j] + sin_q * c.axis2[j];
        const rational offset = c.radius * shrink + dot(normal, c.center);
        out.push_back({std::move(normal), offset});
    }
    return out;
}

std::vector<Halfspace> hrep_from_dual_vertices(const Polytope& dual_ball) {
    // <y, x> >= -1 for every dual vertex y.
    std::vector<Halfspace> hrep;
    hrep.reserve(dual_ball.vertices().size());
    for (const auto& y : dual_ball.vertices()) {
        VecQ n(y.size());
        for (size_t j = 0; j < y.size(); ++j) n[j] = -y[j];
        hrep.push_back({std::move(n), rational(1)});
    }
    return hrep;
}

void require_origin_interior(const Polytope& body) {
    if (!body.full_dimensional()) throw std::invalid_argument("origin not interior");
    for (const auto& f : body.facets())
        if (f.offset <= 0) throw std::invalid_argument("origin not interior");
}

double halton_axis(int index, int base) {
    double f = 1.0, r = 0.0;
    int i = index;
    while (i > 0) {
        f /= base;
        r += f * (i % base);
        i /= base;
    }
    return r;
}

}  // namespace

NormedSpace::NormedSpace(Polytope dual_ball, std::vector<Halfspace> ball_hrep, int dim)
    : dim_(dim), dual_ball_(std::move(dual_ball)), ball_hrep_(std::move(ball_hrep)) {
    for (const auto& h : ball_hrep_)
        ball_hrep_d_.push_back({horo::to_double(h.normal), to_double(h.offset)});
    for (const auto& v : dual_ball_.vertices_d()) {
        VecD neg(v.size());
        for (size_t j = 0; j < v.size(); ++j) neg[j] = -v[j];
        neg_dual_vertices_d_.push_back(std::move(neg));
    }
    ball_once_ = std::make_shared<std::once_flag>();
}

const Polytope& NormedSpace::ball() const {
    std::call_once(*ball_once_, [this] {
        ball_cache_ = std::make_shared<Polytope>(polytope_from_halfspaces(ball_hrep_));
    });
    return *ball_cache_;
}

bool NormedSpace::ball_materialized() const { return static_cast<bool>(ball_cache_); }

void NormedSpace::seed_ball(Polytope b) const {
    std::call_once(*ball_once_,
                   [&] { ball_cache_ = std::make_shared<Polytope>(std::move(b)); });
}

rational NormedSpace::gauge(const VecQ& z) const {
    rational best = 0;
    for (const auto& y : dual_ball_.vertices()) {
        const rational v = -dot(y, z);
        if (v > best) best = v;
    }
    return best;
}

double NormedSpace::gauge(const VecD& z) const {
    double best = 0;
    for (const auto& ny : neg_dual_vertices_d_) best = std::max(best, dot(ny, z));
    return best;
}

rational NormedSpace::gauge_primal(const VecQ& z) const {
    rational best = 0;
    for (const auto& h : ball_hrep_) {
        const rational v = dot(h.normal, z) / h.offset;
        if (v > best) best = v;
    }
    return best;
}

double NormedSpace::metric(const VecD& x, const VecD& y) const { return gauge(sub(y, x)); }
rational NormedSpace::metric(const VecQ& x, const VecQ& y) const { return gauge(sub(y, x)); }

double NormedSpace::eval_gauge(const VecD& z) const {
    return exact_gauge_ ? exact_gauge_(z) : gauge(z);
}

double NormedSpace::eval_metric(const VecD& x, const VecD& y) const {
    return eval_gauge(sub(y, x));
}

NormedSpace realize_ball(const BallSpec& spec) {
    const int d = spec.dimension;
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    const int m = spec.discretization;

    if (spec.kind == BallKind::hpolytope_intersection) {
        if (spec.dual_side)
            throw std::invalid_argument("intersection form describes the primal ball");
        std::vector<Halfspace> constraints;
        for (const auto& piece : spec.pieces) {
            if (std::holds_alternative<CirclePiece>(piece)) {
                for (auto& h : discretize_circle_constraints(std::get<CirclePiece>(piece), m))
                    constraints.push_back(std::move(h));
            } else {
                for (const auto& p : std::get<PointsPiece>(piece).points)
                    constraints.push_back({p, rational(1)});
            }
        }
        for (const auto& h : constraints)
            if (h.offset <= 0) throw std::invalid_argument("origin not interior");
        Polytope ball = polytope_from_halfspaces(constraints);
        require_origin_interior(ball);
        Polytope dual = polar(ball);
        NormedSpace space(std::move(dual), ball.facets(), d);
        space.seed_ball(std::move(ball));
        return space;
    }

    std::vector<VecQ> points;
    for (const auto& piece : spec.pieces) {
        if (std::holds_alternative<CirclePiece>(piece)) {
            for (auto& p : discretize_circle_vertices(std::get<CirclePiece>(piece), m))
                points.push_back(std::move(p));
        } else {
            for (const auto& p : std::get<PointsPiece>(piece).points) points.push_back(p);
        }
    }
    if (points.empty()) throw std::invalid_argument("empty ball spec");
    Polytope body = convex_hull(points);
    require_origin_interior(body);

    if (spec.dual_side) {
        auto hrep = hrep_from_dual_vertices(body);
        return NormedSpace(std::move(body), std::move(hrep), d);
    }
    Polytope dual = polar(body);
    NormedSpace space(std::move(dual), body.facets(), d);
    space.seed_ball(std::move(body));
    return space;
}

rational support_neg(const Polytope& c, const VecQ& p) {
    if (c.vertices().empty()) throw std::invalid_argument("empty set");
    rational best;
    bool first = true;
    for (const auto& q : c.vertices()) {
        const rational v = -dot(q, p);
        if (first || v > best) {
            best = v;
            first = false;
        }
    }
    return best;
}

double support_neg_d(const Polytope& c, const VecD& p) {
    if (c.vertices_d().empty()) throw std::invalid_argument("empty set");
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& q : c.vertices_d()) best = std::max(best, -dot(q, p));
    return best;
}

double PhiFunction::operator()(const VecD& x) const {
    return gauge_fn(sub(base, x)) - gauge_at_base;
}

PhiFunction phi(const NormedSpace& space, const VecD& z) {
    PhiFunction f;
    f.base = z;
    const NormedSpace* s = &space;
    if (space.has_exact_gauge()) {
        f.gauge_fn = [s](const VecD& v) { return s->eval_gauge(v); };
    } else {
        f.gauge_fn = [s](const VecD& v) { return s->gauge(v); };
    }
    f.gauge_at_base = f.gauge_fn(z);
    return f;
}

PhiFunction phi_polytopal(const NormedSpace& space, const VecD& z) {
    PhiFunction f;
    f.base = z;
    const NormedSpace* s = &space;
    f.gauge_fn = [s](const VecD& v) { return s->gauge(v); };
    f.gauge_at_base = f.gauge_fn(z);
    return f;
}

MaxAffine phi_as_max_affine(const NormedSpace& space, const VecQ& z) {
    const rational gz = space.gauge(z);
    std::vector<AffinePiece> pieces;
    pieces.reserve(space.dual_ball().vertices().size());
    for (const auto& w : space.dual_ball().vertices())
        pieces.push_back({w, -dot(w, z) - gz});
    return MaxAffine(std::move(pieces));
}

AffineOnPolytope phi_star_closed_form(const NormedSpace& space, const VecQ& z) {
    return AffineOnPolytope{space.dual_ball(), z, space.gauge(z)};
}

namespace {

// max { s >= 0 : s * direction lies in the hull of the given vertices }.
// A (d+1)-row exact LP over the convex weights; cheap even for hulls with
// hundreds of vertices.
rational max_scale_in_hull(const std::vector<VecQ>& vertices, const VecQ& direction) {
    const size_t k = vertices.size();
    const size_t d = direction.size();
    MatQ a(d + 1, VecQ(k + 1, rational(0)));
    VecQ b(d + 1, rational(0));
    for (size_t r = 0; r < d; ++r) {
        for (size_t i = 0; i < k; ++i) a[r][i] = vertices[i][r];
        a[r][k] = -direction[r];
    }
    for (size_t i = 0; i < k; ++i) a[d][i] = 1;
    b[d] = 1;
    VecQ c(k + 1, rational(0));
    c[k] = -1;  // maximize s
    const LpResult res = solve_lp(a, b, c);
    if (res.status != LpStatus::optimal)
        throw std::logic_error("scale LP failed; dual ball malformed");
    return res.x[k];
}

// Per-axis bounds of the gauge ball of radius R. The support value of the
// ball in direction u is 1 / max{ s : -s u in dual ball }.
std::pair<VecD, VecD> ball_bounding_box(const NormedSpace& space, double radius) {
    const int d = space.dim();
    VecD lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        VecQ axis(d, rational(0));
        axis[j] = -1;
        const rational up = max_scale_in_hull(space.dual_ball().vertices(), axis);
        axis[j] = 1;
        const rational down = max_scale_in_hull(space.dual_ball().vertices(), axis);
        if (up <= 0 || down <= 0) throw std::logic_error("origin not interior to the dual ball");
        hi[j] = radius / to_double(up);
        lo[j] = -radius / to_double(down);
    }
    return {lo, hi};
}

}  // namespace

FnGridProbe make_probe(const NormedSpace& space, double radius, int per_axis, int quasi_random) {
    const auto [lo, hi] = ball_bounding_box(space, radius);
    const int d = space.dim();
    FnGridProbe probe;
    probe.radius = radius;

    std::vector<int> idx(d, 0);
    VecD x(d);
    const double tol = 1e-12;
    for (;;) {
        for (int j = 0; j < d; ++j)
            x[j] = per_axis == 1 ? (lo[j] + hi[j]) / 2
                                 : lo[j] + (hi[j] - lo[j]) * idx[j] / (per_axis - 1);
        if (space.eval_gauge(x) <= radius + tol) probe.samples.push_back(x);
        int j = 0;
        while (j < d && ++idx[j] == per_axis) idx[j++] = 0;
        if (j == d) break;
    }
    for (auto& p : halton_in_ball(space, radius, quasi_random)) probe.samples.push_back(std::move(p));
    return probe;
}

std::vector<VecD> halton_in_ball(const NormedSpace& space, double radius, int count, int skip) {
    static const int bases[] = {2, 3, 5, 7, 11, 13};
    const auto [lo, hi] = ball_bounding_box(space, radius);
    const int d = space.dim();
    std::vector<VecD> out;
    VecD x(d);
    int index = 1 + skip;
    int guard = 0;
    while (static_cast<int>(out.size()) < count && guard < 1000 * count + 10000) {
        for (int j = 0; j < d; ++j)
            x[j] = lo[j] + (hi[j] - lo[j]) * halton_axis(index, bases[j]);
        if (space.eval_gauge(x) <= radius) out.push_back(x);
        ++index;
        ++guard;
    }
    return out;
}

std::vector<std::pair<VecD, VecD>> sample_pairs(const NormedSpace& space, double radius,
                                                int unordered_count, uint64_t seed) {
    const auto [lo, hi] = ball_bounding_box(space, radius);
    const int d = space.dim();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw = [&]() {
        VecD x(d);
        for (;;) {
            for (int j = 0; j < d; ++j) x[j] = lo[j] + (hi[j] - lo[j]) * unit(rng);
            if (space.eval_gauge(x) <= radius) return x;
        }
    };
    std::vector<std::pair<VecD, VecD>> pairs;
    pairs.reserve(2 * unordered_count);
    for (int i = 0; i < unordered_count; ++i) {
        VecD a = draw();
        VecD b = draw();
        pairs.emplace_back(a, b);
        pairs.emplace_back(std::move(b), std::move(a));
    }
    return pairs;
}

}  // namespace horo
