#include "horo/convexfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "horo/simplex_lp.hpp"

namespace horo {

MaxAffine::MaxAffine(std::vector<AffinePiece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("max-affine function needs pieces");
    for (const auto& p : pieces_) {
        gradients_d_.push_back(horo::to_double(p.gradient));
        offsets_d_.push_back(to_double(p.offset));
    }
}

double MaxAffine::value(const VecD& x) const {
    double best = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < gradients_d_.size(); ++i)
        best = std::max(best, dot(gradients_d_[i], x) + offsets_d_[i]);
    return best;
}

rational MaxAffine::value(const VecQ& x) const {
    rational best;
    bool first = true;
    for (const auto& p : pieces_) {
        const rational v = dot(p.gradient, x) + p.offset;
        if (first || v > best) {
            best = v;
            first = false;
        }
    }
    return best;
}

std::vector<int> MaxAffine::argmax(const VecD& x) const {
    const double best = value(x);
    const double band = 1e-12 * (1.0 + std::abs(best));
    std::vector<int> ids;
    for (size_t i = 0; i < gradients_d_.size(); ++i)
        if (dot(gradients_d_[i], x) + offsets_d_[i] >= best - band)
            ids.push_back(static_cast<int>(i));
    return ids;
}

Fn MaxAffine::as_fn() const {
    MaxAffine copy = *this;
    return [copy](const VecD& x) { return copy.value(x); };
}

std::optional<rational> AffineOnPolytope::value(const VecQ& q) const {
    if (!domain.contains(q)) return std::nullopt;
    return value_on_domain(q);
}

double AffineOnPolytope::value(const VecD& q, double tol) const {
    // Numeric membership: exactness is only needed on rational queries.
    if (domain.dim() == 0) {
        if (euclidean_distance(q, domain.vertices_d()[0]) > tol)
            return std::numeric_limits<double>::infinity();
    } else if (domain.full_dimensional()) {
        for (const auto& f : domain.facets())
            if (dot(horo::to_double(f.normal), q) > to_double(f.offset) + tol)
                return std::numeric_limits<double>::infinity();
    } else {
        const auto local = domain.affine_hull().to_local(rationalize(q));
        if (!local) return std::numeric_limits<double>::infinity();
        for (const auto& f : domain.facets_local())
            if (to_double(dot(f.normal, *local)) > to_double(f.offset) + tol)
                return std::numeric_limits<double>::infinity();
    }
    double s = to_double(offset);
    const VecD g = horo::to_double(gradient);
    return s + dot(g, q);
}

MaxAffine lf_transform_dual(const AffineOnPolytope& h) {
    if (h.domain.vertices().empty()) throw std::invalid_argument("improper function");
    std::vector<AffinePiece> pieces;
    pieces.reserve(h.domain.vertices().size());
    for (const auto& v : h.domain.vertices())
        pieces.push_back({v, -h.value_on_domain(v)});
    return MaxAffine(std::move(pieces));
}

PrimalConjugate::PrimalConjugate(const MaxAffine& f) : pieces_(f.pieces()) {
    std::vector<VecQ> gradients;
    gradients.reserve(pieces_.size());
    for (const auto& p : pieces_) gradients.push_back(p.gradient);
    domain_ = convex_hull(gradients);

    // f* is affine on its domain iff some affine a(q) = <q,p> + c matches
    // the conjugate at every domain vertex and stays below every piece's
    // conjugate point (g_i, -b_i).
    std::map<VecQ, rational> vertex_value;
    for (const auto& p : pieces_) {
        auto it = vertex_value.find(p.gradient);
        if (it == vertex_value.end() || -p.offset < it->second)
            vertex_value[p.gradient] = -p.offset;
    }
    const int d = domain_.ambient_dim();
    MatQ rows;
    VecQ rhs;
    for (const auto& v : domain_.vertices()) {
        VecQ row = v;
        row.push_back(rational(1));
        rows.push_back(std::move(row));
        rhs.push_back(vertex_value.at(v));
    }
    const auto fit = solve_linear(rows, rhs);
    if (fit.consistent) {
        VecQ p(fit.solution.begin(), fit.solution.begin() + d);
        const rational c = fit.solution[d];
        bool below = true;
        for (const auto& piece : pieces_) {
            if (dot(piece.gradient, p) + c > -piece.offset) {
                below = false;
                break;
            }
        }
        if (below) affine_ = std::make_pair(std::move(p), c);
    }
}

const std::pair<VecQ, rational>& PrimalConjugate::affine_witness() const {
    if (!affine_) throw std::logic_error("transform is not affine on its domain");
    return *affine_;
}

ConjugateQuery PrimalConjugate::query(const VecQ& q) const {
    // f*(q) = min sum lambda_i (-b_i) over lambda in the simplex with
    // sum lambda_i g_i = q; the equality-row duals certify a maximizer.
    const size_t k = pieces_.size();
    const int d = static_cast<int>(q.size());
    MatQ a(d + 1, VecQ(k));
    VecQ b(d + 1);
    for (int j = 0; j < d; ++j) {
        for (size_t i = 0; i < k; ++i) a[j][i] = pieces_[i].gradient[j];
        b[j] = q[j];
    }
    for (size_t i = 0; i < k; ++i) a[d][i] = 1;
    b[d] = 1;
    VecQ c(k);
    for (size_t i = 0; i < k; ++i) c[i] = -pieces_[i].offset;

    const LpResult r = solve_lp(a, b, c);
    ConjugateQuery out;
    if (r.status != LpStatus::optimal) return out;  // q outside the domain
    out.finite = true;
    out.value = r.value;
    out.subdifferential_point.assign(r.duals.begin(), r.duals.begin() + d);
    return out;
}

double uniform_distance(const Fn& f, const Fn& g, const FnGridProbe& probe) {
    double worst = 0;
    for (const auto& x : probe.samples) {
        const double fv = f(x);
        const double gv = g(x);
        if (!std::isfinite(fv) || !std::isfinite(gv))
            throw std::invalid_argument("non-finite value on a probe sample");
        worst = std::max(worst, std::abs(fv - gv));
    }
    return worst;
}

LipschitzReport lipschitz_check(const Fn& f,
                                const std::function<double(const VecD&, const VecD&)>& metric,
                                const std::vector<std::pair<VecD, VecD>>& pairs) {
    LipschitzReport rep;
    rep.ok = true;
    for (const auto& [a, b] : pairs) {
        const double d_ba = metric(b, a);
        if (d_ba <= 0) continue;
        const double ratio = (f(b) - f(a)) / d_ba;
        if (ratio > rep.worst_ratio) {
            rep.worst_ratio = ratio;
            rep.worst_from = a;
            rep.worst_to = b;
        }
    }
    rep.ok = rep.worst_ratio <= 1.0 + 1e-12;
    return rep;
}

Fn min_eval(const Fn& f1, const Fn& f2) {
    return [f1, f2](const VecD& x) { return std::min(f1(x), f2(x)); };
}

}  // namespace horo
