#include "horo/builtins.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace horo {

namespace {

constexpr double kPi = 3.14159265358979323846;

VecQ qvec(std::initializer_list<int> entries) {
    VecQ v;
    for (int e : entries) v.push_back(rational(e));
    return v;
}

std::vector<VecQ> hypercube_vertices(int d) {
    std::vector<VecQ> pts;
    for (int mask = 0; mask < (1 << d); ++mask) {
        VecQ v(d);
        for (int j = 0; j < d; ++j) v[j] = (mask >> j) & 1 ? 1 : -1;
        pts.push_back(std::move(v));
    }
    return pts;
}

std::vector<VecQ> cross_polytope_vertices(int d, const rational& scale = rational(1)) {
    std::vector<VecQ> pts;
    for (int j = 0; j < d; ++j) {
        VecQ plus(d, rational(0)), minus(d, rational(0));
        plus[j] = scale;
        minus[j] = -scale;
        pts.push_back(std::move(plus));
        pts.push_back(std::move(minus));
    }
    return pts;
}

CirclePiece planar_circle(int dim, int axis_a, int axis_b, VecQ center) {
    CirclePiece c;
    c.center = std::move(center);
    c.axis1.assign(dim, rational(0));
    c.axis2.assign(dim, rational(0));
    c.axis1[axis_a] = 1;
    c.axis2[axis_b] = 1;
    c.radius = 1;
    return c;
}

// ---- Example 2 symbolic dual ball: conv(square {(+-1,0,+-1)} u circle
// {x^2+y^2=1, z=0}) in R^3. Exact answers for singletons, segments, the
// four triangle faces and full-dimensional sets.

bool on_unit_circle_xy(const VecQ& q) {
    return q[2] == 0 && q[0] * q[0] + q[1] * q[1] == 1;
}

bool is_square_corner(const VecQ& q) {
    return q[1] == 0 && (q[0] == 1 || q[0] == -1) && (q[2] == 1 || q[2] == -1);
}

bool is_pole(const VecQ& q) { return q[1] == 0 && q[2] == 0 && (q[0] == 1 || q[0] == -1); }

bool is_extreme_point_ex2(const VecQ& q) {
    if (is_square_corner(q)) return true;
    return on_unit_circle_xy(q) && !is_pole(q);
}

class Example2Symbolic : public SymbolicDualBall {
  public:
    std::optional<bool> is_extreme(const Polytope& e) const override {
        const auto& verts = e.vertices();
        if (e.dim() == 0) {
            const VecQ& q = verts[0];
            if (is_extreme_point_ex2(q)) return true;
            return false;
        }
        if (e.dim() == 1) {
            const VecQ& a = verts[0];
            const VecQ& b = verts[1];
            if (!point_is_extreme_or_pole(a) || !point_is_extreme_or_pole(b)) return false;
            if (is_pole(a) || is_pole(b)) return false;
            if (is_square_corner(a) && is_square_corner(b)) {
                // Edges of the square are faces; its diagonals are not.
                return a[0] == b[0] || a[2] == b[2];
            }
            const bool a_corner = is_square_corner(a);
            const VecQ& corner = a_corner ? a : b;
            const VecQ& circ = a_corner ? b : a;
            if (is_square_corner(circ) || !on_unit_circle_xy(circ)) return false;
            // Corner-to-circle rulings support the body iff the circle
            // point sits on the corner's side (or the equator).
            return corner[0] * circ[0] >= 0;
        }
        if (e.dim() == 2) {
            // The only two-dimensional proper extreme sets are the four
            // triangles conv{(-1,0,t),(1,0,t),(0,+-1,0)}.
            if (verts.size() != 3) return false;
            std::vector<VecQ> corners, circle_pts;
            for (const auto& v : verts) {
                if (is_square_corner(v))
                    corners.push_back(v);
                else if (on_unit_circle_xy(v) && !is_pole(v))
                    circle_pts.push_back(v);
            }
            if (corners.size() != 2 || circle_pts.size() != 1) return false;
            return corners[0][2] == corners[1][2] && corners[0][0] != corners[1][0] &&
                   circle_pts[0][0] == 0;
        }
        return false;  // the only 3-dimensional extreme set is the ball itself
    }

    std::optional<ExtremalityWitness> extremality_witness(const Polytope& e) const override {
        if (e.dim() == 0 && is_pole(e.vertices()[0])) {
            const VecQ& q = e.vertices()[0];
            ExtremalityWitness w;
            w.endpoint_a = {q[0], rational(0), rational(1)};
            w.endpoint_b = {q[0], rational(0), rational(-1)};
            w.interior_point = q;
            return w;
        }
        return std::nullopt;
    }

  private:
    static bool point_is_extreme_or_pole(const VecQ& q) {
        return is_square_corner(q) || on_unit_circle_xy(q);
    }
};

ClosureReport example2_closure() {
    ClosureReport rep;
    rep.verdict = ClosureVerdict::not_closed;
    rep.reason = "the singleton extreme sets {(cos 1/n, sin 1/n, 0)} converge to {(1,0,0)}, "
                 "the midpoint of the boundary segment from (1,0,1) to (1,0,-1), which is "
                 "not an extreme set";
    for (int n = 1; n <= 8; ++n)
        rep.witness_sets.push_back({{std::cos(1.0 / n), std::sin(1.0 / n), 0.0}});
    rep.limit_set = {{1.0, 0.0, 0.0}};
    ExtremalityWitness w;
    w.endpoint_a = qvec({1, 0, 1});
    w.endpoint_b = qvec({1, 0, -1});
    w.interior_point = qvec({1, 0, 0});
    rep.limit_witness = w;
    return rep;
}

// ---- Example 3 symbolic dual ball: conv of the four circles
// S1+- = {(cos,sin,+-1,0)}, S2+- = {(+-1,0,cos,sin)} in R^4.

bool on_s1(const VecQ& q) {
    return q[3] == 0 && (q[2] == 1 || q[2] == -1) && q[0] * q[0] + q[1] * q[1] == 1;
}

bool on_s2(const VecQ& q) {
    return q[1] == 0 && (q[0] == 1 || q[0] == -1) && q[2] * q[2] + q[3] * q[3] == 1;
}

class Example3Symbolic : public SymbolicDualBall {
  public:
    std::optional<bool> is_extreme(const Polytope& e) const override {
        const auto& verts = e.vertices();
        if (e.dim() == 0) return on_s1(verts[0]) || on_s2(verts[0]);
        if (e.dim() == 2 && verts.size() == 3) {
            if (matches_limit_triangle(verts)) return false;
            // T_theta triangles: {(a,b,1,0), (a,b,-1,0), (1,0,0,1)} with
            // a^2+b^2 = 1 and 0 < a < 1, b > 0.
            const VecQ* s1_pair[2] = {nullptr, nullptr};
            const VecQ* apex = nullptr;
            for (const auto& v : verts) {
                if (on_s1(v))
                    s1_pair[s1_pair[0] ? 1 : 0] = &v;
                else if (on_s2(v))
                    apex = &v;
            }
            if (s1_pair[0] && s1_pair[1] && apex) {
                const VecQ& a = *s1_pair[0];
                const VecQ& b = *s1_pair[1];
                const bool opposite = a[0] == b[0] && a[1] == b[1] && a[2] == -b[2];
                const bool apex_ok = (*apex)[0] == 1 && (*apex)[2] == 0 && (*apex)[3] == 1;
                if (opposite && apex_ok && a[1] > 0 && a[0] > 0 && a[0] < 1) return true;
            }
            return std::nullopt;
        }
        return std::nullopt;
    }

    std::optional<ExtremalityWitness> extremality_witness(const Polytope& e) const override {
        if (e.dim() == 2 && matches_limit_triangle(e.vertices()))
            return find_extremality_witness(example3::disc_s2plus(64), e);
        return std::nullopt;
    }

  private:
    static bool matches_limit_triangle(const std::vector<VecQ>& verts) {
        if (verts.size() != 3) return false;
        int hits = 0;
        for (const auto& v : verts) {
            if (v == qvec({1, 0, -1, 0}) || v == qvec({1, 0, 1, 0}) || v == qvec({1, 0, 0, 1}))
                ++hits;
        }
        return hits == 3;
    }
};

ClosureReport example3_closure() {
    ClosureReport rep;
    rep.verdict = ClosureVerdict::not_closed;
    rep.reason = "the triangle faces T_theta converge, as theta tends to 0, to a triangle "
                 "inside conv S2+ that contains a relative interior point of the disc and "
                 "is a proper subset of it, hence is not an extreme set";
    for (int k = 0; k <= 5; ++k) rep.witness_sets.push_back(example3::t_theta_vertices(std::ldexp(1.0, -k)));
    rep.limit_set = example3::limit_triangle_vertices();
    rep.limit_witness = find_extremality_witness(example3::disc_s2plus(64), example3::limit_triangle());
    return rep;
}

}  // namespace

namespace example2 {

double exact_gauge(const VecD& v) {
    return std::max(std::abs(v[0]) + std::abs(v[2]), std::hypot(v[0], v[1]));
}

VecD p_n(int n) { return {std::cos(1.0 / n), std::sin(1.0 / n), 0.0}; }

Fn xi(int n) {
    const VecD p = p_n(n);
    return [p](const VecD& x) { return -(p[0] * x[0] + p[1] * x[1] + p[2] * x[2]); };
}

Fn f() {
    return [](const VecD& x) { return -x[0]; };
}

MaxAffine f_max_affine() { return MaxAffine({{qvec({-1, 0, 0}), rational(0)}}); }

Fn f1() {
    return [](const VecD& x) { return x[2] >= 0 ? -x[0] + x[2] : -x[0]; };
}

Fn f2() {
    return [](const VecD& x) { return x[2] >= 0 ? -x[0] : -x[0] - x[2]; };
}

MaxAffine f1_max_affine() {
    return MaxAffine({{qvec({-1, 0, 1}), rational(0)}, {qvec({-1, 0, 0}), rational(0)}});
}

MaxAffine f2_max_affine() {
    return MaxAffine({{qvec({-1, 0, 0}), rational(0)}, {qvec({-1, 0, -1}), rational(0)}});
}

}  // namespace example2

namespace example3 {

double exact_gauge(const VecD& v) {
    return std::max(std::hypot(v[0], v[1]) + std::abs(v[2]),
                    std::abs(v[0]) + std::hypot(v[2], v[3]));
}

Fn f_theta(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return [c, s](const VecD& q) { return q[0] * c + q[1] * s + q[3] * (1 - c); };
}

std::vector<VecD> t_theta_vertices(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {{c, s, -1.0, 0.0}, {c, s, 1.0, 0.0}, {1.0, 0.0, 0.0, 1.0}};
}

std::vector<VecD> limit_triangle_vertices() {
    return {{1, 0, -1, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}};
}

Polytope limit_triangle() {
    return convex_hull({qvec({1, 0, -1, 0}), qvec({1, 0, 1, 0}), qvec({1, 0, 0, 1})});
}

Polytope disc_s2plus(int m) {
    if (m % 4 != 0) throw std::invalid_argument("disc discretization must be divisible by 4");
    std::vector<VecQ> pts;
    for (int k = 0; k < m; ++k) {
        const double angle = 2.0 * kPi * k / m;
        pts.push_back({rational(1), rational(0), rational_from_double(std::cos(angle)),
                       rational_from_double(std::sin(angle))});
    }
    return convex_hull(pts);
}

std::vector<VecD> circle_samples(int which, int count) {
    std::vector<VecD> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        const double a = 2.0 * kPi * k / count;
        switch (which) {
            case 0: out.push_back({std::cos(a), std::sin(a), 1.0, 0.0}); break;
            case 1: out.push_back({std::cos(a), std::sin(a), -1.0, 0.0}); break;
            case 2: out.push_back({1.0, 0.0, std::cos(a), std::sin(a)}); break;
            default: out.push_back({-1.0, 0.0, std::cos(a), std::sin(a)}); break;
        }
    }
    return out;
}

Fn g() {
    return [](const VecD& q) {
        return std::max({q[0] - q[2], q[0] + q[2], q[0] + q[3]});
    };
}

MaxAffine g_max_affine() {
    return MaxAffine({{qvec({1, 0, -1, 0}), rational(0)},
                      {qvec({1, 0, 1, 0}), rational(0)},
                      {qvec({1, 0, 0, 1}), rational(0)}});
}

namespace {
const double kInvRoot2 = 1.0 / std::sqrt(2.0);
}

Fn g1() {
    return [](const VecD& q) {
        return std::max({q[0] - q[2], q[0] + q[2], q[0] + q[3],
                         q[0] + kInvRoot2 * q[2] + kInvRoot2 * q[3]});
    };
}

Fn g2() {
    return [](const VecD& q) {
        return std::max({q[0] - q[2], q[0] + q[2], q[0] + q[3],
                         q[0] - kInvRoot2 * q[2] + kInvRoot2 * q[3]});
    };
}

MaxAffine g1_max_affine() {
    const rational r = rational_from_double(kInvRoot2);
    return MaxAffine({{qvec({1, 0, -1, 0}), rational(0)},
                      {qvec({1, 0, 1, 0}), rational(0)},
                      {qvec({1, 0, 0, 1}), rational(0)},
                      {{rational(1), rational(0), r, r}, rational(0)}});
}

MaxAffine g2_max_affine() {
    const rational r = rational_from_double(kInvRoot2);
    return MaxAffine({{qvec({1, 0, -1, 0}), rational(0)},
                      {qvec({1, 0, 1, 0}), rational(0)},
                      {qvec({1, 0, 0, 1}), rational(0)},
                      {{rational(1), rational(0), -r, r}, rational(0)}});
}

}  // namespace example3

BuiltinSpace make_builtin(const std::string& name, int dim, int m) {
    if (name == "linf") {
        BallSpec spec;
        spec.dimension = dim;
        spec.kind = BallKind::vpolytope;
        spec.pieces.push_back(PointsPiece{hypercube_vertices(dim)});
        return {name, realize_ball(spec), nullptr, nullptr, false};
    }
    if (name == "l1") {
        BallSpec spec;
        spec.dimension = dim;
        spec.kind = BallKind::vpolytope;
        spec.pieces.push_back(PointsPiece{cross_polytope_vertices(dim)});
        return {name, realize_ball(spec), nullptr, nullptr, false};
    }
    if (name == "euclid-m") {
        BallSpec spec;
        spec.dimension = 2;
        spec.kind = BallKind::hull;
        spec.discretization = m;
        spec.pieces.push_back(planar_circle(2, 0, 1, qvec({0, 0})));
        return {name, realize_ball(spec), nullptr, nullptr, true};
    }
    if (name == "example2") {
        BallSpec spec;
        spec.dimension = 3;
        spec.kind = BallKind::hpolytope_intersection;
        spec.discretization = m;
        spec.pieces.push_back(PointsPiece{
            {qvec({1, 0, 1}), qvec({1, 0, -1}), qvec({-1, 0, 1}), qvec({-1, 0, -1})}});
        spec.pieces.push_back(planar_circle(3, 0, 1, qvec({0, 0, 0})));
        BuiltinSpace b{name, realize_ball(spec), std::make_shared<Example2Symbolic>(),
                       example2_closure, true};
        b.space.set_exact_gauge([](const VecD& v) { return example2::exact_gauge(v); });
        return b;
    }
    if (name == "example3") {
        BallSpec spec;
        spec.dimension = 4;
        spec.kind = BallKind::hull;
        spec.dual_side = true;
        spec.discretization = m;
        spec.pieces.push_back(planar_circle(4, 0, 1, qvec({0, 0, 1, 0})));
        spec.pieces.push_back(planar_circle(4, 0, 1, qvec({0, 0, -1, 0})));
        spec.pieces.push_back(planar_circle(4, 2, 3, qvec({1, 0, 0, 0})));
        spec.pieces.push_back(planar_circle(4, 2, 3, qvec({-1, 0, 0, 0})));
        BuiltinSpace b{name, realize_ball(spec), std::make_shared<Example3Symbolic>(),
                       example3_closure, true};
        b.space.set_exact_gauge([](const VecD& v) { return example3::exact_gauge(v); });
        return b;
    }
    throw std::invalid_argument("unknown builtin '" + name + "'");
}

BallSpec random_ball_spec(int dim, int extra_points, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numerator(-16, 16);
    std::uniform_int_distribution<int> denominator(1, 8);
    BallSpec spec;
    spec.dimension = dim;
    spec.kind = BallKind::vpolytope;
    PointsPiece pts;
    pts.points = cross_polytope_vertices(dim, rational(1, 2));
    for (int i = 0; i < extra_points; ++i) {
        VecQ p(dim);
        for (int j = 0; j < dim; ++j) p[j] = rational(numerator(rng), denominator(rng));
        pts.points.push_back(std::move(p));
    }
    spec.pieces.push_back(std::move(pts));
    return spec;
}

}  // namespace horo
