#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "horo/polytope.hpp"
#include "horo/vec.hpp"

namespace horo {

/// Numeric evaluator used by probe-based operations.
using Fn = std::function<double(const VecD&)>;

/// Finite convex piecewise-affine function max_i (<gradient_i, x> + offset_i).
struct AffinePiece {
    VecQ gradient;
    rational offset;
};

class MaxAffine {
  public:
    MaxAffine() = default;
    explicit MaxAffine(std::vector<AffinePiece> pieces);

    const std::vector<AffinePiece>& pieces() const { return pieces_; }
    int dim() const { return pieces_.empty() ? 0 : static_cast<int>(pieces_[0].gradient.size()); }

    double value(const VecD& x) const;
    rational value(const VecQ& x) const;
    /// Indices of the attaining pieces, as a sorted set (ties reported, no
    /// winner chosen). Double path uses a relative 1e-12 tie band.
    std::vector<int> argmax(const VecD& x) const;

    Fn as_fn() const;

  private:
    std::vector<AffinePiece> pieces_;
    std::vector<VecD> gradients_d_;
    std::vector<double> offsets_d_;
};

/// Proper l.s.c. convex function affine on a polytope and +infinity outside:
/// value(q) = <q, gradient> + offset on `domain`.
struct AffineOnPolytope {
    Polytope domain;  // lives in the dual space
    VecQ gradient;    // a primal vector
    rational offset;

    rational value_on_domain(const VecQ& q) const { return dot(q, gradient) + offset; }
    std::optional<rational> value(const VecQ& q) const;
    double value(const VecD& q, double tol = 1e-9) const;  // +inf outside
};

/// Exact transform of a dual-side affine-on-polytope function:
/// h*(x) = max over domain vertices v of (<v,x> - h(v)).
MaxAffine lf_transform_dual(const AffineOnPolytope& h);

/// Point query of the transform of a primal max-of-affine function, exact
/// via LP over the convex envelope of the pieces' conjugate points.
struct ConjugateQuery {
    bool finite = false;
    rational value;
    VecQ subdifferential_point;  // a maximizer x with f(x) + f*(q) = <q,x>
};

class PrimalConjugate {
  public:
    explicit PrimalConjugate(const MaxAffine& f);

    /// f*(q); infinite outside the domain polytope.
    ConjugateQuery query(const VecQ& q) const;

    /// The polytope where f* is finite (convex hull of the gradients).
    const Polytope& domain() const { return domain_; }

    /// Whether f* is affine on its domain; if so the witness (p, c) with
    /// f*(q) = <q, p> + c there.
    bool affine_on_domain() const { return affine_.has_value(); }
    const std::pair<VecQ, rational>& affine_witness() const;

  private:
    std::vector<AffinePiece> pieces_;
    Polytope domain_;
    std::optional<std::pair<VecQ, rational>> affine_;
};

/// Sample carrier for uniform-on-compacts comparisons: points covering a
/// gauge ball of the stated radius.
struct FnGridProbe {
    double radius = 0;
    std::vector<VecD> samples;
};

/// max |f - g| over the probe; throws on a non-finite value.
double uniform_distance(const Fn& f, const Fn& g, const FnGridProbe& probe);

struct LipschitzReport {
    bool ok = false;
    double worst_ratio = 0;
    VecD worst_from, worst_to;
};

/// Checks the oriented 1-Lipschitz inequality f(b) - f(a) <= d(b, a) over
/// the sampled ordered pairs (the orientation satisfied by every function
/// of the form d(., z) - d(0, z); pair sets should contain both orders).
LipschitzReport lipschitz_check(const Fn& f, const std::function<double(const VecD&, const VecD&)>& metric,
                                const std::vector<std::pair<VecD, VecD>>& pairs);

/// Pointwise minimum, evaluation-only (the minimum need not be convex).
Fn min_eval(const Fn& f1, const Fn& f2);

}  // namespace horo
