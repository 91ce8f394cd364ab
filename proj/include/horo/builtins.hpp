#pragma once

#include <memory>
#include <string>

#include "horo/horoboundary.hpp"
#include "horo/normedspace.hpp"

namespace horo {

/// A named space together with whatever exact extras it carries: a closed
/// form gauge for the smooth bodies and a symbolic dual-ball descriptor.
struct BuiltinSpace {
    std::string name;
    NormedSpace space;
    std::shared_ptr<SymbolicDualBall> symbolic;       // smooth builtins only
    std::function<ClosureReport()> closure_report;    // smooth builtins only
    bool discretized_smooth = false;
};

/// Builtins: "linf", "l1" (dimension 2..6), "euclid-m" (planar m-gon disc),
/// "example2" (3-d prism-cylinder intersection), "example3" (4-d hull of
/// four circles, given on the dual side). `m` is the circle discretization.
BuiltinSpace make_builtin(const std::string& name, int dim = 2, int m = 64);

/// Seeded rational polytope ball: hull of a small cross-polytope (keeps 0
/// interior) and random rational points; generally asymmetric.
BallSpec random_ball_spec(int dim, int extra_points, uint64_t seed);

namespace example2 {
double exact_gauge(const VecD& v);
VecD p_n(int n);  // (cos 1/n, sin 1/n, 0)
/// xi_n(x) = -p_n . x, the limit along the ray through m * p_n.
Fn xi(int n);
Fn f();  // (x,y,z) -> -x
MaxAffine f_max_affine();
Fn f1();  // -x+z for z >= 0, -x otherwise == max(-x+z, -x)
Fn f2();  // -x for z >= 0, -x-z otherwise == max(-x, -x-z)
MaxAffine f1_max_affine();
MaxAffine f2_max_affine();
}  // namespace example2

namespace example3 {
double exact_gauge(const VecD& v);
/// f_theta(x,y,w,z) = x cos t + y sin t + z (1 - cos t); at most 1 on the
/// dual ball, with equality exactly on the triangle t_theta.
Fn f_theta(double theta);
std::vector<VecD> t_theta_vertices(double theta);
std::vector<VecD> limit_triangle_vertices();
Polytope limit_triangle();
/// conv S2+ as an m-gon disc (m divisible by 4 keeps the triangle's
/// vertices exact).
Polytope disc_s2plus(int m);
std::vector<VecD> circle_samples(int which, int count);  // which in 0..3
Fn g();  // max(x-w, x+w, x+z)
MaxAffine g_max_affine();
Fn g1();
Fn g2();
MaxAffine g1_max_affine();
MaxAffine g2_max_affine();
}  // namespace example3

}  // namespace horo
