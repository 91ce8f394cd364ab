#include "horo/horoboundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace horo {

DualHorodata build_dual_horodata(const NormedSpace& space, const Face& e, const VecQ& p) {
    const Polytope& dual = space.dual_ball();
    const Face resolved = smallest_face_containing(dual, e.vertices);
    if (resolved.vertices != e.vertices) throw std::invalid_argument("not an extreme set");

    DualHorodata data;
    data.face = resolved;
    data.domain = resolved.as_polytope(dual);
    data.p = p;
    rational inf;
    bool first = true;
    for (const auto& y : data.domain.vertices()) {
        const rational v = dot(y, p);
        if (first || v < inf) {
            inf = v;
            first = false;
        }
    }
    data.canonical_offset = inf;
    data.h = AffineOnPolytope{data.domain, p, -inf};
    return data;
}

BusemannPoint::BusemannPoint(DualHorodata source) : source_(std::move(source)) {
    norm_p_q_ = support_neg(source_.domain, source_.p);
    norm_p_d_ = to_double(norm_p_q_);
}

double BusemannPoint::value(const VecD& x) const {
    const VecD p_d = horo::to_double(source_.p);
    return support_neg_d(source_.domain, sub(p_d, x)) - norm_p_d_;
}

rational BusemannPoint::value(const VecQ& x) const {
    return support_neg(source_.domain, sub(source_.p, x)) - norm_p_q_;
}

Fn BusemannPoint::as_fn() const {
    const Polytope domain = source_.domain;
    const VecD p_d = horo::to_double(source_.p);
    const double norm_p = norm_p_d_;
    return [domain, p_d, norm_p](const VecD& x) {
        return support_neg_d(domain, sub(p_d, x)) - norm_p;
    };
}

MaxAffine BusemannPoint::as_max_affine() const { return lf_transform_dual(source_.h); }

double eval_busemann(const BusemannPoint& bp, const VecD& x) { return bp.value(x); }

bool busemann_equal(const DualHorodata& a, const DualHorodata& b) {
    if (a.face.vertices != b.face.vertices) return false;
    const VecQ diff = sub(a.p, b.p);
    bool first = true;
    rational level;
    for (const auto& y : a.domain.vertices()) {
        const rational v = dot(y, diff);
        if (first) {
            level = v;
            first = false;
        } else if (v != level) {
            return false;
        }
    }
    return true;
}

Classification identify_horofunction(const NormedSpace& space, const MaxAffine& f,
                                     const IdentifyOptions& opts) {
    // Normalization: the largest offset is the value at the origin.
    rational at_origin;
    bool first = true;
    for (const auto& piece : f.pieces()) {
        if (first || piece.offset > at_origin) {
            at_origin = piece.offset;
            first = false;
        }
    }
    if (at_origin != 0) throw std::invalid_argument("function does not vanish at the origin");

    const PrimalConjugate conjugate(f);
    const Polytope& dom = conjugate.domain();

    // Oriented 1-Lipschitz <=> the transform's domain sits inside the dual
    // ball; checking the hull vertices is exact.
    for (const auto& v : dom.vertices())
        if (!space.dual_ball().contains(v))
            throw std::invalid_argument("not 1-Lipschitz for this gauge");

    Classification out;
    out.extreme_set = dom;
    if (!conjugate.affine_on_domain()) {
        out.kind = HoroClass::not_in_compactification;
        out.reason = "transform is not affine on its finiteness domain";
        return out;
    }
    const auto& [p, c] = conjugate.affine_witness();

    const bool whole_ball = dom.vertices() == space.dual_ball().vertices();
    if (whole_ball) {
        out.kind = HoroClass::interior;
        out.base_point = p;
        out.reason = "transform affine on the whole dual ball: distance function based at z";
        if (opts.whole_ball_proper) {
            Face all;
            for (size_t i = 0; i < space.dual_ball().vertices().size(); ++i)
                all.vertices.push_back(static_cast<int>(i));
            all.dim = space.dual_ball().dim();
            out.face = smallest_face_containing(space.dual_ball(), all.vertices);
            out.parameter = p;
        }
        return out;
    }

    bool extreme;
    std::string extremality_note;
    if (opts.symbolic) {
        const auto symbolic = opts.symbolic->is_extreme(dom);
        if (symbolic) {
            extreme = *symbolic;
        } else {
            extreme = is_extreme_set(space.dual_ball(), dom);
            extremality_note = " (outside the symbolic families; tested against the "
                               "realized dual ball)";
        }
    } else {
        extreme = is_extreme_set(space.dual_ball(), dom);
    }

    if (extreme) {
        out.kind = HoroClass::busemann;
        out.parameter = p;
        out.reason = "transform affine on a proper extreme set of the dual ball" + extremality_note;
        if (!opts.symbolic) {
            // Only a realized polytopal face carries index data.
            std::vector<VecQ> pts = dom.vertices();
            const Face face = smallest_face_containing_points(space.dual_ball(), pts);
            out.face = face;
        }
        return out;
    }

    if (opts.evidence != LimitEvidence::none) {
        out.kind = HoroClass::horofunction_not_busemann;
        out.reason = "limit of distance functions whose transform domain is not an extreme set" +
                     extremality_note;
    } else {
        out.kind = HoroClass::not_in_compactification;
        out.reason = "transform domain is not an extreme set and no limit evidence was supplied" +
                     extremality_note;
    }
    return out;
}

std::vector<double> default_ray_schedule(double t_max) {
    std::vector<double> schedule;
    for (double t = 1; t <= t_max; t *= 4) schedule.push_back(t);
    return schedule;
}

RayLimitReport limit_along_ray(const NormedSpace& space, const VecD& direction,
                               const std::vector<double>& schedule, const FnGridProbe& probe) {
    if (euclidean_norm(direction) == 0) throw std::invalid_argument("zero direction");
    if (schedule.empty()) throw std::invalid_argument("empty schedule");

    RayLimitReport rep;
    rep.schedule = schedule;

    if (!space.has_exact_gauge()) {
        // Exact limit: the dual-ball face where <., u> is minimal.
        const VecQ u = rationalize(direction);
        rational best;
        bool first = true;
        for (const auto& w : space.dual_ball().vertices()) {
            const rational v = dot(w, u);
            if (first || v < best) {
                best = v;
                first = false;
            }
        }
        std::vector<AffinePiece> pieces;
        for (const auto& w : space.dual_ball().vertices())
            if (dot(w, u) == best) pieces.push_back({w, rational(0)});
        rep.fit = MaxAffine(std::move(pieces));
        const Fn fit_fn = rep.fit->as_fn();
        for (double t : schedule) {
            VecD z(direction.size());
            for (size_t j = 0; j < z.size(); ++j) z[j] = t * direction[j];
            const PhiFunction ph = phi_polytopal(space, z);
            double worst = 0;
            for (const auto& x : probe.samples) worst = std::max(worst, std::abs(ph(x) - fit_fn(x)));
            rep.residuals.push_back(worst);
        }
        rep.empirical = fit_fn;
        // Gauge values of size t round at ~1e-16 t, so the exact-fit
        // residual bottoms out near 3e-8 at the default schedule.
        rep.converged = rep.residuals.back() <= 1e-6;
        if (!rep.converged) rep.note = "no convergence at this schedule";
        return rep;
    }

    // Smooth gauge: successive Cauchy gaps, last stage as the empirical limit.
    std::vector<std::vector<double>> values;
    for (double t : schedule) {
        VecD z(direction.size());
        for (size_t j = 0; j < z.size(); ++j) z[j] = t * direction[j];
        const PhiFunction ph = phi(space, z);
        std::vector<double> row;
        row.reserve(probe.samples.size());
        for (const auto& x : probe.samples) row.push_back(ph(x));
        values.push_back(std::move(row));
    }
    for (size_t k = 0; k + 1 < values.size(); ++k) {
        double gap = 0;
        for (size_t i = 0; i < probe.samples.size(); ++i)
            gap = std::max(gap, std::abs(values[k][i] - values[k + 1][i]));
        rep.residuals.push_back(gap);
    }
    const double t_last = schedule.back();
    const VecD dir = direction;
    const NormedSpace* s = &space;
    rep.empirical = [s, dir, t_last](const VecD& x) {
        VecD z(dir.size());
        for (size_t j = 0; j < z.size(); ++j) z[j] = t_last * dir[j];
        const double gz = s->eval_gauge(z);
        return s->eval_gauge(sub(z, x)) - gz;
    };
    rep.converged = !rep.residuals.empty() && rep.residuals.back() <= 1e-6;
    if (!rep.converged) rep.note = "no convergence at this schedule";
    return rep;
}

AlmostGeodesicReport verify_almost_geodesic(const NormedSpace& space, const AlmostGeodesic& ag) {
    if (ag.points.size() < 2) throw std::invalid_argument("need at least two points");
    AlmostGeodesicReport rep;
    const auto& q = ag.points;
    std::vector<double> cumulative{0.0};
    for (size_t i = 0; i + 1 < q.size(); ++i)
        cumulative.push_back(cumulative.back() + space.eval_metric(q[i], q[i + 1]));
    for (size_t n = 1; n < q.size(); ++n) {
        const double slack = cumulative[n] - space.eval_metric(q[0], q[n]);
        rep.prefix_slack.push_back(slack);
        rep.min_epsilon = std::max(rep.min_epsilon, slack);
    }
    // Two-parameter form on tail pairs with the cumulative-length clock.
    const size_t n0 = q.size() / 2;
    const size_t stride = std::max<size_t>(1, (q.size() - n0) / 64);
    for (size_t j = n0; j < q.size(); j += stride) {
        for (size_t k = j; k < q.size(); k += stride) {
            const double dev = std::abs(space.eval_metric(q[j], q[k]) +
                                        space.eval_metric(q[0], q[j]) - cumulative[k]);
            rep.rieffel_max_dev = std::max(rep.rieffel_max_dev, dev);
        }
    }
    return rep;
}

namespace {

struct LiftLevel {
    Polytope parent;  // C
    Polytope face;    // F, exposed in C
    VecD functional_gradient;
};

// One application of the exposed-face lift: moves a sequence adapted to F
// out to C along the functional's gradient, with per-step scale chosen by
// a doubling search plus binary refinement. The gap thresholds are 2^-n
// for consecutive steps and 1/n on the point schedule.
std::vector<VecD> lift_sequence(const NormedSpace& space, const LiftLevel& level,
                                const std::vector<VecD>& base, const std::vector<VecD>& schedule,
                                const LiftOptions& opts, std::vector<double>* lambdas_out) {
    const size_t n_points = base.size();
    const VecD& v = level.functional_gradient;

    auto gap = [&](const VecD& w) {
        return support_neg_d(level.parent, w) - support_neg_d(level.face, w);
    };
    auto point_at = [&](size_t n, double lambda) {
        VecD q = base[n];
        for (size_t j = 0; j < q.size(); ++j) q[j] += lambda * v[j];
        return q;
    };

    std::vector<VecD> out(n_points);
    std::vector<double> lambdas(n_points, 0.0);
    // The dyadic step threshold dives below double precision near n = 50;
    // a floor keeps the search meaningful. The final budget is verified on
    // the built sequence directly, so the floor cannot hide slack.
    constexpr double kThresholdFloor = 1e-12;
    double prev_lambda = 1.0;
    for (size_t n = 0; n < n_points; ++n) {
        if (opts.progress && !opts.progress(static_cast<int>(n)))
            throw std::runtime_error("interrupted");
        const double threshold_step =
            n >= 1 ? std::max(std::ldexp(1.0, -static_cast<int>(n - 1)), kThresholdFloor)
                   : std::numeric_limits<double>::infinity();
        const double threshold_points =
            n >= 1 ? std::max(1.0 / static_cast<double>(n), kThresholdFloor)
                   : std::numeric_limits<double>::infinity();
        auto admissible = [&](double lambda) {
            // Step vector (q_n - q_{n-1}) assembled from the scale delta to
            // dodge cancellation between two nearly equal large points.
            if (n >= 1) {
                VecD step = sub(base[n], base[n - 1]);
                const double dl = lambda - lambdas[n - 1];
                for (size_t j = 0; j < step.size(); ++j) step[j] += dl * v[j];
                if (gap(step) >= threshold_step) return false;
            }
            const VecD q = point_at(n, lambda);
            const size_t covered = std::min(n + 1, schedule.size());
            for (size_t i = 0; i < covered; ++i)
                if (gap(sub(q, schedule[i])) >= threshold_points) return false;
            return true;
        };

        double lambda = std::max(prev_lambda, 1.0);
        if (!admissible(lambda)) {
            double lo = lambda;
            double hi = lambda;
            do {
                lo = hi;
                hi *= 2;
                if (hi > opts.lambda_cap) throw std::runtime_error("lambda search diverged");
            } while (!admissible(hi));
            for (int step = 0; step < opts.refine_steps; ++step) {
                const double mid = 0.5 * (lo + hi);
                if (admissible(mid))
                    hi = mid;
                else
                    lo = mid;
            }
            lambda = hi;
        }
        lambdas[n] = lambda;
        out[n] = point_at(n, lambda);
        prev_lambda = lambda;
    }
    if (lambdas_out) *lambdas_out = std::move(lambdas);
    return out;
}

}  // namespace

AlmostGeodesicBuild build_almost_geodesic(const NormedSpace& space, const Face& e, const VecQ& p,
                                          int n_points, const FnGridProbe& probe,
                                          const LiftOptions& opts) {
    if (n_points < 2) throw std::invalid_argument("need at least two points");
    const Polytope& dual = space.dual_ball();
    const Face resolved = smallest_face_containing(dual, e.vertices);
    if (resolved.vertices != e.vertices) throw std::invalid_argument("not an extreme set");
    if (resolved.vertices.size() == dual.vertices().size())
        throw std::invalid_argument("face must be proper");

    const auto chain = opts.stepwise_chain ? exposed_face_chain_stepwise(dual, resolved)
                                           : exposed_face_chain(dual, resolved);

    // Dense point schedule: the origin, then the probe samples.
    std::vector<VecD> schedule;
    schedule.reserve(probe.samples.size() + 1);
    schedule.push_back(VecD(space.dim(), 0.0));
    for (const auto& x : probe.samples) schedule.push_back(x);

    std::vector<VecD> seq(static_cast<size_t>(n_points), horo::to_double(p));
    std::vector<double> lambdas;

    // Innermost level first: each chain step lifts from its face to the
    // face one level up (the first step's parent is the dual ball itself).
    std::vector<Polytope> bodies{dual};
    for (const auto& step : chain) bodies.push_back(step.face.as_polytope(dual));
    for (size_t level = chain.size(); level >= 1; --level) {
        LiftLevel lift;
        lift.parent = bodies[level - 1];
        lift.face = bodies[level];
        lift.functional_gradient = horo::to_double(chain[level - 1].functional.gradient);
        std::vector<double> level_lambdas;
        seq = lift_sequence(space, lift, seq, schedule, opts, &level_lambdas);
        lambdas = std::move(level_lambdas);  // outermost level's scales are reported
    }

    AlmostGeodesicBuild build;
    build.chain_length = static_cast<int>(chain.size());
    build.geodesic.points = std::move(seq);
    build.geodesic.target = std::make_pair(resolved, p);
    build.lambdas = std::move(lambdas);
    build.verification = verify_almost_geodesic(space, build.geodesic);
    build.geodesic.epsilon = build.verification.min_epsilon;

    // Distance between the last stage's horofunction and the target on the
    // build schedule.
    const BusemannPoint target(build_dual_horodata(space, resolved, p));
    const VecD& q_last = build.geodesic.points.back();
    const double gauge_last = space.gauge(q_last);
    double worst = 0;
    for (const auto& z : schedule) {
        const double phi_val = space.gauge(sub(q_last, z)) - gauge_last;
        worst = std::max(worst, std::abs(phi_val - target.value(z)));
    }
    build.probe_distance = worst;
    return build;
}

ClosureReport check_extreme_closure(const NormedSpace& space, const ClosureOptions& opts) {
    if (opts.symbolic_report) return opts.symbolic_report();
    ClosureReport rep;
    if (space.dim() == 2) {
        rep.verdict = ClosureVerdict::closed;
        rep.reason = "two-dimensional space: the extreme sets of a planar convex body form "
                     "a closed family";
        return rep;
    }
    if (opts.discretized_smooth) {
        rep.verdict = ClosureVerdict::inconclusive;
        rep.reason = "discretized surrogate of a smooth body: the realized face lattice is "
                     "finite at every resolution, so closure of the true family is undecided";
        return rep;
    }
    rep.verdict = ClosureVerdict::closed;
    rep.reason = "polytopal dual ball: finitely many extreme sets, hence a closed family";
    return rep;
}

MinDecompositionCertificate verify_min_decomposition(
    const NormedSpace& space, const Fn& f, const Fn& f1, const Fn& f2, const FnGridProbe& probe,
    const std::vector<std::pair<VecD, VecD>>& pairs, double tol) {
    MinDecompositionCertificate cert;
    cert.tolerance = tol;
    double scale = 1.0;
    for (const auto& x : probe.samples) {
        const double fv = f(x);
        const double m = std::min(f1(x), f2(x));
        cert.min_mismatch = std::max(cert.min_mismatch, std::abs(m - fv));
        cert.difference1 = std::max(cert.difference1, std::abs(f1(x) - fv));
        cert.difference2 = std::max(cert.difference2, std::abs(f2(x) - fv));
        scale = std::max(scale, std::abs(fv));
    }
    const auto metric = [&space](const VecD& a, const VecD& b) {
        return space.eval_metric(a, b);
    };
    cert.lip1 = lipschitz_check(f1, metric, pairs);
    cert.lip2 = lipschitz_check(f2, metric, pairs);
    cert.valid = cert.min_mismatch <= tol * scale && cert.lip1.ok && cert.lip2.ok &&
                 cert.difference1 > tol && cert.difference2 > tol;
    return cert;
}

}  // namespace horo
