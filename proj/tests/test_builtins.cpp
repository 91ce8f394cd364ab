#include <cmath>

#include "doctest.h"

#include "horo/builtins.hpp"

using namespace horo;

namespace {

VecQ qv(std::initializer_list<int> xs) {
    VecQ v;
    for (int x : xs) v.push_back(rational(x));
    return v;
}

}  // namespace

TEST_CASE("builtin catalogue") {
    CHECK(make_builtin("linf", 2).space.dual_ball().vertices().size() == 4);
    CHECK(make_builtin("linf", 3).space.dual_ball().vertices().size() == 6);
    CHECK(make_builtin("l1", 3).space.dual_ball().vertices().size() == 8);
    CHECK(make_builtin("euclid-m", 2, 32).space.dual_ball().vertices().size() == 32);
    CHECK_THROWS(make_builtin("does-not-exist"));
}

TEST_CASE("example-2 space: realized against closed form") {
    auto ex2 = make_builtin("example2", 3, 64);
    CHECK(ex2.space.dim() == 3);
    CHECK(ex2.discretized_smooth);
    // 4 prism facets + 64 tangent planes, minus the two that only touch in
    // a point.
    CHECK(ex2.space.ball_hrep().size() == 66);
    // Circumscribed: realized gauge never exceeds the smooth gauge.
    for (const VecD z : {VecD{0.3, 0.4, 0.2}, VecD{1.0, 0.5, -0.3}, VecD{-0.2, 0.9, 0.6}}) {
        CHECK(ex2.space.gauge(z) <= example2::exact_gauge(z) + 1e-12);
        CHECK(std::abs(ex2.space.gauge(z) - example2::exact_gauge(z)) < 2e-3);
    }
    CHECK(ex2.space.eval_gauge({0.3, 0.4, 0.2}) == example2::exact_gauge({0.3, 0.4, 0.2}));
}

TEST_CASE("example-2 symbolic extremality") {
    auto ex2 = make_builtin("example2", 3, 32);
    const auto& sym = *ex2.symbolic;

    // Square corners and generic circle points are extreme points.
    CHECK(sym.is_extreme(convex_hull({qv({1, 0, 1})})) == std::optional<bool>(true));
    CHECK(sym.is_extreme(convex_hull({{rational(3, 5), rational(4, 5), rational(0)}})) ==
          std::optional<bool>(true));
    // The two poles are not, with a certifying vertical segment.
    const auto pole = convex_hull({qv({-1, 0, 0})});
    CHECK(sym.is_extreme(pole) == std::optional<bool>(false));
    const auto witness = sym.extremality_witness(pole);
    REQUIRE(witness.has_value());
    CHECK(witness->interior_point == qv({-1, 0, 0}));
    CHECK(witness->endpoint_a[2] != witness->endpoint_b[2]);
    // Interior points are not extreme.
    CHECK(sym.is_extreme(convex_hull({qv({0, 0, 0})})) == std::optional<bool>(false));

    // Square edges and vertical segments are extreme; diagonals are not.
    CHECK(sym.is_extreme(convex_hull({qv({-1, 0, 1}), qv({1, 0, 1})})) ==
          std::optional<bool>(true));
    CHECK(sym.is_extreme(convex_hull({qv({1, 0, 1}), qv({1, 0, -1})})) ==
          std::optional<bool>(true));
    CHECK(sym.is_extreme(convex_hull({qv({1, 0, 1}), qv({-1, 0, -1})})) ==
          std::optional<bool>(false));

    // Corner-to-circle rulings: extreme on the matching side only.
    const VecQ near_side = {rational(3, 5), rational(4, 5), rational(0)};
    const VecQ far_side = {rational(-3, 5), rational(4, 5), rational(0)};
    CHECK(sym.is_extreme(convex_hull({qv({1, 0, 1}), near_side})) == std::optional<bool>(true));
    CHECK(sym.is_extreme(convex_hull({qv({1, 0, 1}), far_side})) == std::optional<bool>(false));
    // Equator contact (x = 0) is the triangle edge case, still a face.
    CHECK(sym.is_extreme(convex_hull({qv({1, 0, 1}), qv({0, 1, 0})})) ==
          std::optional<bool>(true));

    // The four triangles are the only two-dimensional proper extreme sets.
    CHECK(sym.is_extreme(convex_hull({qv({-1, 0, 1}), qv({1, 0, 1}), qv({0, 1, 0})})) ==
          std::optional<bool>(true));
    CHECK(sym.is_extreme(convex_hull({qv({-1, 0, -1}), qv({1, 0, -1}), qv({0, -1, 0})})) ==
          std::optional<bool>(true));
    CHECK(sym.is_extreme(convex_hull({qv({-1, 0, 1}), qv({1, 0, 1}), qv({0, 0, -1})})) ==
          std::optional<bool>(false));
}

TEST_CASE("example-2 functions: the minimum decomposition identities") {
    // min(f1, f2) = f everywhere, exactly.
    for (double z : {-1.5, -0.25, 0.0, 0.75, 2.0}) {
        for (double x : {-1.0, 0.0, 0.5}) {
            const VecD q = {x, 0.3, z};
            CHECK(std::min(example2::f1()(q), example2::f2()(q)) == example2::f()(q));
        }
    }
    // The max-affine realizations agree with the case definitions.
    for (double z : {-2.0, -0.1, 0.4, 1.3}) {
        const VecD q = {0.2, -0.7, z};
        CHECK(example2::f1_max_affine().value(q) == doctest::Approx(example2::f1()(q)));
        CHECK(example2::f2_max_affine().value(q) == doctest::Approx(example2::f2()(q)));
    }
}

TEST_CASE("example-3 space: gauge and dual ball") {
    auto ex3 = make_builtin("example3", 4, 16);
    CHECK(ex3.space.dim() == 4);
    CHECK(ex3.space.dual_ball().vertices().size() == 4 * 16 - 4);  // shared corner points
    // Exact gauge formula at hand values: gauge of (1,0,0,0) is 1.
    CHECK(example3::exact_gauge({1, 0, 0, 0}) == 1.0);
    CHECK(example3::exact_gauge({0, 1, 0, 0}) == 1.0);
    CHECK(example3::exact_gauge({0, 0, 1, 0}) == 1.0);
    CHECK(example3::exact_gauge({1, 0, 1, 0}) == 2.0);
    // Realized (inscribed hull) gauge is below the smooth gauge, up to the
    // vertex rationalization error.
    for (const VecD z : {VecD{0.3, 0.1, -0.4, 0.2}, VecD{1, 1, 1, 1}}) {
        CHECK(ex3.space.gauge(z) <= example3::exact_gauge(z) + 5e-8);
        CHECK(std::abs(ex3.space.gauge(z) - example3::exact_gauge(z)) < 0.05);
    }
}

TEST_CASE("example-3: f_theta is at most one on the ball, one on the triangle") {
    for (double theta : {0.1, 0.5, 1.0}) {
        const Fn f = example3::f_theta(theta);
        for (int which = 0; which < 4; ++which)
            for (const auto& q : example3::circle_samples(which, 720))
                CHECK(f(q) <= 1.0 + 1e-12);
        for (const auto& v : example3::t_theta_vertices(theta))
            CHECK(f(v) == doctest::Approx(1.0).epsilon(1e-12));
        // Interior triangle points too.
        const auto verts = example3::t_theta_vertices(theta);
        VecD mid(4, 0.0);
        for (const auto& v : verts)
            for (int j = 0; j < 4; ++j) mid[j] += v[j] / 3;
        CHECK(f(mid) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("example-3: the limit triangle is inside the disc but not extreme") {
    const auto disc = example3::disc_s2plus(64);
    const auto triangle = example3::limit_triangle();
    for (const auto& v : triangle.vertices()) CHECK(disc.contains(v));
    CHECK_FALSE(is_extreme_set(disc, triangle));
    const auto witness = find_extremality_witness(disc, triangle);
    REQUIRE(witness.has_value());
    CHECK(disc.contains(witness->endpoint_a));
    CHECK(triangle.contains(witness->interior_point));

    // T_theta converges to the limit triangle at rate <= 2 theta.
    for (double theta : {0.5, 0.25, 0.1, 0.05}) {
        const auto moving = example3::t_theta_vertices(theta);
        const auto limit = example3::limit_triangle_vertices();
        double worst = 0;
        for (size_t i = 0; i < moving.size(); ++i)
            worst = std::max(worst, euclidean_distance(moving[i], limit[i]));
        CHECK(worst <= 2 * theta);
        CHECK(worst == doctest::Approx(2 * std::sin(theta / 2)).epsilon(1e-9));
    }
}

TEST_CASE("example-3 symbolic extremality") {
    auto ex3 = make_builtin("example3", 4, 16);
    const auto& sym = *ex3.symbolic;
    CHECK(sym.is_extreme(convex_hull({qv({1, 0, 0, 1})})) == std::optional<bool>(true));
    CHECK(sym.is_extreme(convex_hull({qv({0, 1, 1, 0})})) == std::optional<bool>(true));
    CHECK(sym.is_extreme(convex_hull({qv({0, 0, 0, 0})})) == std::optional<bool>(false));
    CHECK(sym.is_extreme(example3::limit_triangle()) == std::optional<bool>(false));
    REQUIRE(sym.extremality_witness(example3::limit_triangle()).has_value());
    // T_theta with exact rational circle points (3/5, 4/5).
    const auto t_rational = convex_hull({{rational(3, 5), rational(4, 5), rational(1), rational(0)},
                                         {rational(3, 5), rational(4, 5), rational(-1), rational(0)},
                                         qv({1, 0, 0, 1})});
    CHECK(sym.is_extreme(t_rational) == std::optional<bool>(true));
}

TEST_CASE("example-3: g equals min(g1, g2) with matching realizations") {
    for (const VecD q : {VecD{0.1, -0.4, 0.8, 0.2}, VecD{1, 0, 0, 1}, VecD{-0.5, 0.3, -0.2, 0.9},
                         VecD{0.0, 0.0, 0.5, -0.5}}) {
        CHECK(std::min(example3::g1()(q), example3::g2()(q)) ==
              doctest::Approx(example3::g()(q)).epsilon(1e-12));
        CHECK(example3::g_max_affine().value(q) == doctest::Approx(example3::g()(q)));
        CHECK(example3::g1_max_affine().value(q) ==
              doctest::Approx(example3::g1()(q)).epsilon(1e-7));
        CHECK(example3::g2_max_affine().value(q) ==
              doctest::Approx(example3::g2()(q)).epsilon(1e-7));
    }
}

TEST_CASE("limits of the moving-triangle boundary points reach g") {
    // The boundary functions of the triangles T_theta converge to g as
    // theta drops to zero.
    auto probe_points = [] {
        std::vector<VecD> out;
        for (double a : {-1.5, -0.5, 0.5, 1.5})
            for (double b : {-1.0, 0.0, 1.0})
                out.push_back({a, b, a * b / 2, a - b});
        return out;
    }();
    double prev = 1e9;
    for (double theta : {0.5, 0.25, 0.125, 0.0625}) {
        const auto verts = example3::t_theta_vertices(theta);
        double dist = 0;
        for (const auto& x : probe_points) {
            double sup = -1e9;
            for (const auto& v : verts) sup = std::max(sup, dot(v, x));
            dist = std::max(dist, std::abs(sup - example3::g()(x)));
        }
        CHECK(dist < prev);
        prev = dist;
    }
    CHECK(prev < 0.1);
}

TEST_CASE("random ball specs realize with the origin interior") {
    for (uint64_t seed = 0; seed < 5; ++seed) {
        const NormedSpace space = realize_ball(random_ball_spec(3, 6, seed));
        CHECK(space.dim() == 3);
        CHECK(space.gauge(qv({1, 1, 1})) > 0);
        // 0 interior <=> all primal facet offsets positive.
        for (const auto& h : space.ball_hrep()) CHECK(h.offset > 0);
    }
}
