#include <cmath>
#include <random>
#include <thread>

#include "doctest.h"

#include "horo/builtins.hpp"
#include "horo/normedspace.hpp"

using namespace horo;

namespace {

VecQ qv(std::initializer_list<int> xs) {
    VecQ v;
    for (int x : xs) v.push_back(rational(x));
    return v;
}

NormedSpace asymmetric_plane() {
    BallSpec spec;
    spec.dimension = 2;
    spec.kind = BallKind::vpolytope;
    spec.pieces.push_back(PointsPiece{{qv({2, 0}), qv({-1, 0}), qv({0, 1}), qv({0, -1})}});
    return realize_ball(spec);
}

}  // namespace

TEST_CASE("realize_ball: vpolytope plane and its dual") {
    BallSpec spec;
    spec.dimension = 2;
    spec.kind = BallKind::vpolytope;
    spec.pieces.push_back(PointsPiece{{qv({1, 1}), qv({1, -1}), qv({-1, 1}), qv({-1, -1})}});
    const NormedSpace space = realize_ball(spec);
    // Dual of the sup-norm square is the cross-polytope.
    std::vector<VecQ> expected = {qv({-1, 0}), qv({0, -1}), qv({0, 1}), qv({1, 0})};
    CHECK(space.dual_ball().vertices() == expected);
    CHECK(space.ball().vertices().size() == 4);
}

TEST_CASE("realize_ball rejects balls without the origin inside") {
    BallSpec spec;
    spec.dimension = 2;
    spec.kind = BallKind::vpolytope;
    spec.pieces.push_back(PointsPiece{{qv({1, 1}), qv({2, 1}), qv({1, 2}), qv({2, 2})}});
    CHECK_THROWS_WITH(realize_ball(spec), "origin not interior");
}

TEST_CASE("gauge matches hand values") {
    auto linf = make_builtin("linf", 2);
    CHECK(linf.space.gauge(qv({3, -2})) == 3);  // max(|3|, |-2|)
    CHECK(linf.space.gauge(qv({0, 0})) == 0);
    auto ex2 = make_builtin("example2", 3, 32);
    CHECK(ex2.space.gauge(qv({1, 0, 0})) == 1);
    CHECK(example2::exact_gauge({1.0, 0.0, 0.0}) == 1.0);
    CHECK(example2::exact_gauge({1.0, 0.0, 1.0}) == 2.0);
    CHECK(example2::exact_gauge({0.0, 1.0, 0.0}) == 1.0);
}

TEST_CASE("asymmetric ball: the gauge depends on direction") {
    const NormedSpace space = asymmetric_plane();
    // Along +x the ball reaches 2, along -x only 1.
    CHECK(space.gauge(qv({1, 0})) == rational(1, 2));
    CHECK(space.gauge(qv({-1, 0})) == 1);
    CHECK(space.metric(VecD{0.0, 0.0}, VecD{1.0, 0.0}) == doctest::Approx(0.5));
    CHECK(space.metric(VecD{1.0, 0.0}, VecD{0.0, 0.0}) == doctest::Approx(1.0));
}

TEST_CASE("gauge: dual-vertex route equals primal route exactly") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> numerator(-20, 20);
    std::vector<NormedSpace> spaces;
    spaces.push_back(make_builtin("linf", 3).space);
    spaces.push_back(asymmetric_plane());
    spaces.push_back(realize_ball(random_ball_spec(3, 6, 2024)));
    for (const auto& space : spaces) {
        for (int trial = 0; trial < 300; ++trial) {
            VecQ z(space.dim());
            for (int j = 0; j < space.dim(); ++j) z[j] = rational(numerator(rng), 4);
            CHECK(space.gauge(z) == space.gauge_primal(z));
        }
    }
}

TEST_CASE("gauge homogeneity and triangle inequality") {
    const NormedSpace space = asymmetric_plane();
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> numerator(-10, 10);
    for (int trial = 0; trial < 200; ++trial) {
        const VecQ x = {rational(numerator(rng), 3), rational(numerator(rng), 3)};
        const VecQ y = {rational(numerator(rng), 3), rational(numerator(rng), 3)};
        const rational t(std::uniform_int_distribution<int>(0, 8)(rng), 2);
        CHECK(space.gauge(scale(x, t)) == t * space.gauge(x));
        CHECK(space.gauge(add(x, y)) <= space.gauge(x) + space.gauge(y));
    }
}

TEST_CASE("support functional on explicit sets") {
    auto linf = make_builtin("linf", 2);
    // With the dual ball it recovers the gauge.
    const VecQ p = qv({3, -1});
    CHECK(support_neg(linf.space.dual_ball(), p) == linf.space.gauge(p));
    // Singleton: -<q0, p>, possibly negative.
    const auto point = convex_hull({qv({1, 1})});
    CHECK(support_neg(point, qv({1, 1})) == -2);
    // Segment [(1,0), (0,1)] at p = (1,1): both vertices give -1.
    const auto segment = convex_hull({qv({1, 0}), qv({0, 1})});
    CHECK(support_neg(segment, qv({1, 1})) == -1);
    CHECK_THROWS(support_neg(Polytope{}, qv({0, 0})));
}

TEST_CASE("phi vanishes at the origin and is oriented 1-Lipschitz") {
    const NormedSpace space = asymmetric_plane();
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> unit(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const VecD z = {unit(rng), unit(rng)};
        const PhiFunction ph = phi(space, z);
        CHECK(ph(VecD{0.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-12));
        for (int pair = 0; pair < 50; ++pair) {
            const VecD a = {unit(rng), unit(rng)};
            const VecD b = {unit(rng), unit(rng)};
            CHECK(ph(b) - ph(a) <= space.metric(b, a) + 1e-9);
            // Convexity via midpoints.
            VecD mid = {(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
            CHECK(ph(mid) <= 0.5 * ph(a) + 0.5 * ph(b) + 1e-9);
        }
    }
}

TEST_CASE("closed-form transform of phi agrees with the generic transform") {
    auto linf = make_builtin("linf", 2);
    const VecQ z = qv({1, 0});
    const AffineOnPolytope closed = phi_star_closed_form(linf.space, z);
    CHECK(closed.gradient == z);
    CHECK(closed.offset == 1);
    CHECK(closed.domain.vertices() == linf.space.dual_ball().vertices());

    // The infimum over the dual ball is 0, at the vertices minimizing <y,z>.
    rational inf(1000);
    for (const auto& y : closed.domain.vertices())
        if (closed.value_on_domain(y) < inf) inf = closed.value_on_domain(y);
    CHECK(inf == 0);

    // Generic route: conjugate of the max-affine realization of phi_z.
    const PrimalConjugate conj(phi_as_max_affine(linf.space, z));
    CHECK(conj.affine_on_domain());
    CHECK(conj.domain().vertices() == closed.domain.vertices());
    for (const auto& v : conj.domain().vertices()) {
        const auto q = conj.query(v);
        REQUIRE(q.finite);
        CHECK(q.value == closed.value_on_domain(v));
    }
}

TEST_CASE("circumscribed discretization converges at fourth-ratio rate") {
    // The worst-case gauge error against the closed form drops ~4x per
    // doubling of m. The sup is taken over many directions; the pointwise
    // error at a single direction depends on grid alignment.
    std::vector<double> err;
    for (int m : {32, 64, 128}) {
        auto ex2 = make_builtin("example2", 3, m);
        double worst = 0;
        for (int k = 0; k < 5000; ++k) {
            const double a = 2.0 * M_PI * std::fmod(k * 0.6180339887498949, 1.0);
            const VecD z = {0.9 * std::cos(a), 0.9 * std::sin(a), 0.05};
            worst = std::max(worst, std::abs(ex2.space.gauge(z) - example2::exact_gauge(z)));
        }
        err.push_back(worst);
    }
    CHECK(err[0] > 0);
    CHECK(err[0] / err[1] == doctest::Approx(4.0).epsilon(0.35));
    CHECK(err[1] / err[2] == doctest::Approx(4.0).epsilon(0.35));
}

TEST_CASE("inscribed and circumscribed discretizations bracket the smooth gauge") {
    BallSpec spec;
    spec.dimension = 2;
    spec.kind = BallKind::hpolytope_intersection;
    spec.discretization = 32;
    CirclePiece c;
    c.center = qv({0, 0});
    c.axis1 = qv({1, 0});
    c.axis2 = qv({0, 1});
    c.radius = 1;
    spec.pieces.push_back(c);
    const NormedSpace outer = realize_ball(spec);  // circumscribed: bigger ball
    std::get<CirclePiece>(spec.pieces[0]).mode = CirclePiece::Mode::inscribed;
    const NormedSpace inner = realize_ball(spec);
    const VecD z = {0.7, 0.45};
    const double exact = std::hypot(z[0], z[1]);
    CHECK(outer.gauge(z) <= exact + 1e-9);
    CHECK(inner.gauge(z) >= exact - 1e-9);
    CHECK(inner.gauge(z) - outer.gauge(z) < 6e-3);
}

TEST_CASE("probes cover the gauge ball") {
    auto linf = make_builtin("linf", 2);
    const FnGridProbe probe = make_probe(linf.space, 2.0, 9, 100);
    CHECK(probe.samples.size() > 80);
    for (const auto& x : probe.samples) CHECK(linf.space.gauge(x) <= 2.0 + 1e-9);
    // Deterministic construction.
    const FnGridProbe again = make_probe(linf.space, 2.0, 9, 100);
    CHECK(probe.samples == again.samples);
}

TEST_CASE("pair sampling is seeded and contains both orders") {
    auto linf = make_builtin("linf", 2);
    const auto pairs = sample_pairs(linf.space, 2.0, 50, 7);
    CHECK(pairs.size() == 100);
    for (size_t i = 0; i < pairs.size(); i += 2) {
        CHECK(pairs[i].first == pairs[i + 1].second);
        CHECK(pairs[i].second == pairs[i + 1].first);
    }
    const auto again = sample_pairs(linf.space, 2.0, 50, 7);
    CHECK(pairs == again);
    const auto other = sample_pairs(linf.space, 2.0, 50, 8);
    CHECK(pairs != other);
}

TEST_CASE("gauge evaluation is safe to run concurrently") {
    auto ex2 = make_builtin("example2", 3, 32);
    const NormedSpace& space = ex2.space;
    std::vector<double> results(8, 0.0);
    std::vector<std::thread> workers;
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] {
            double acc = 0;
            for (int i = 0; i < 2000; ++i) {
                const double s = 0.001 * i;
                acc += space.gauge(VecD{s, 1 - s, 0.5 * s});
            }
            results[t] = acc;
        });
    }
    for (auto& w : workers) w.join();
    for (int t = 1; t < 8; ++t) CHECK(results[t] == results[0]);
}
