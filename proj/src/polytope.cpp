#include "horo/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "horo/simplex_lp.hpp"

namespace horo {

namespace {

VecQ zeros(int d) { return VecQ(static_cast<size_t>(d), rational(0)); }

// Canonical scaling: first nonzero normal entry becomes +-1.
Halfspace normalize_halfspace(Halfspace h) {
    for (const auto& x : h.normal) {
        if (x != 0) {
            const rational s = boost::multiprecision::abs(x);
            for (auto& y : h.normal) y /= s;
            h.offset /= s;
            break;
        }
    }
    return h;
}

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct DdResult {
    std::vector<VecQ> vertices;
};

// Vertex enumeration of {y : <a_i,y> <= b_i} by sequential halfspace
// insertion into a bounding box. Requires a strictly interior point and a
// bounded body; both are certified by exact LPs unless supplied.
DdResult dd_enumerate(const std::vector<Halfspace>& constraints, int d,
                      const std::optional<VecQ>& known_interior) {
    MatQ normals;
    VecQ offsets;
    for (const auto& h : constraints) {
        normals.push_back(h.normal);
        offsets.push_back(h.offset);
    }

    if (!known_interior) {
        const InteriorPointResult ip = interior_point(normals, offsets);
        if (ip.status != LpStatus::optimal || ip.margin <= 0)
            throw std::invalid_argument("halfspace body has empty interior");
    }

    // Bounding box via 2d exact LPs; unboundedness is rejected here.
    VecQ lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        VecQ obj = zeros(d);
        obj[j] = 1;
        auto up = maximize_over_halfspaces(normals, offsets, obj);
        obj[j] = -1;
        auto down = maximize_over_halfspaces(normals, offsets, obj);
        if (up.status != LpStatus::optimal || down.status != LpStatus::optimal)
            throw std::invalid_argument("unbounded halfspace body");
        hi[j] = up.value + 1;
        lo[j] = -down.value - 1;
    }

    struct Vert {
        VecQ point;
        std::vector<int> tight;  // indices into `all`
    };

    // all[0..2d) are the box planes, real constraints follow.
    std::vector<Halfspace> all;
    for (int j = 0; j < d; ++j) {
        Halfspace up{zeros(d), hi[j]};
        up.normal[j] = 1;
        all.push_back(up);
        Halfspace down{zeros(d), -lo[j]};
        down.normal[j] = -1;
        all.push_back(down);
    }
    const int first_real = static_cast<int>(all.size());
    for (const auto& h : constraints) all.push_back(h);

    std::vector<Vert> verts;
    for (int mask = 0; mask < (1 << d); ++mask) {
        Vert v;
        v.point.resize(d);
        for (int j = 0; j < d; ++j) {
            const bool high = mask & (1 << j);
            v.point[j] = high ? hi[j] : lo[j];
            v.tight.push_back(2 * j + (high ? 0 : 1));
        }
        std::sort(v.tight.begin(), v.tight.end());
        verts.push_back(std::move(v));
    }

    int processed_end = first_real;
    for (size_t k = 0; k < constraints.size(); ++k) {
        const int ci = first_real + static_cast<int>(k);
        const Halfspace& h = all[ci];
        std::vector<rational> slack(verts.size());
        bool any_out = false;
        for (size_t i = 0; i < verts.size(); ++i) {
            slack[i] = h.offset - dot(h.normal, verts[i].point);
            if (slack[i] < 0) any_out = true;
        }
        ++processed_end;
        if (!any_out) {
            for (size_t i = 0; i < verts.size(); ++i)
                if (slack[i] == 0) verts[i].tight.push_back(ci);
            continue;
        }
        std::vector<Vert> next;
        std::vector<size_t> ins, outs;
        for (size_t i = 0; i < verts.size(); ++i) {
            if (slack[i] > 0) {
                ins.push_back(i);
                next.push_back(verts[i]);
            } else if (slack[i] == 0) {
                Vert v = verts[i];
                v.tight.push_back(ci);
                next.push_back(std::move(v));
            } else {
                outs.push_back(i);
            }
        }
        std::map<VecQ, bool> seen;
        for (size_t iu : ins) {
            for (size_t iw : outs) {
                const auto common = sorted_intersection(verts[iu].tight, verts[iw].tight);
                if (static_cast<int>(common.size()) < d - 1) continue;
                MatQ rows;
                rows.reserve(common.size());
                for (int t : common) rows.push_back(all[t].normal);
                if (rank(std::move(rows)) != d - 1) continue;
                const rational theta = slack[iu] / (slack[iu] - slack[iw]);
                VecQ x(d);
                for (int j = 0; j < d; ++j)
                    x[j] = verts[iu].point[j] +
                           theta * (verts[iw].point[j] - verts[iu].point[j]);
                if (seen.count(x)) continue;
                seen[x] = true;
                Vert v;
                v.point = x;
                for (int t = 0; t < processed_end; ++t)
                    if (all[t].offset - dot(all[t].normal, x) == 0) v.tight.push_back(t);
                next.push_back(std::move(v));
            }
        }
        verts = std::move(next);
        if (verts.empty()) throw std::invalid_argument("halfspace body has empty interior");
    }

    DdResult out;
    for (auto& v : verts) {
        for (int t : v.tight)
            if (t < first_real)
                throw std::logic_error("bounding box touched; bounds were not strict");
        out.vertices.push_back(std::move(v.point));
    }
    return out;
}

}  // namespace

VecQ AffineHull::to_ambient(const VecQ& local) const {
    VecQ out = origin;
    for (size_t k = 0; k < basis.size(); ++k)
        for (size_t j = 0; j < out.size(); ++j) out[j] += local[k] * basis[k][j];
    return out;
}

std::optional<VecQ> AffineHull::to_local(const VecQ& ambient) const {
    // Solve sum_k xi_k basis_k = ambient - origin, then verify exactly.
    const size_t d = origin.size();
    MatQ a(d, VecQ(basis.size()));
    for (size_t j = 0; j < d; ++j)
        for (size_t k = 0; k < basis.size(); ++k) a[j][k] = basis[k][j];
    const auto res = solve_linear(a, sub(ambient, origin));
    if (!res.consistent) return std::nullopt;
    return res.solution;
}

const std::vector<Halfspace>& Polytope::facets() const {
    if (!full_dimensional())
        throw std::logic_error("ambient facets undefined for lower-dimensional polytope");
    return facets_;
}

void Polytope::finish() {
    vertices_d_.clear();
    for (const auto& v : vertices_) vertices_d_.push_back(horo::to_double(v));
}

Polytope Polytope::build_full(int dim, std::vector<VecQ> vertices, std::vector<Halfspace> facets) {
    Polytope p;
    p.ambient_dim_ = dim;
    p.dim_ = dim;
    std::sort(vertices.begin(), vertices.end());
    for (auto& f : facets) f = normalize_halfspace(std::move(f));
    std::sort(facets.begin(), facets.end(), halfspace_less);
    p.vertices_ = std::move(vertices);
    p.facets_ = std::move(facets);
    p.facets_local_ = p.facets_;
    p.vertices_local_ = p.vertices_;
    p.hull_.origin = zeros(dim);
    p.hull_.basis.assign(dim, zeros(dim));
    for (int j = 0; j < dim; ++j) p.hull_.basis[j][j] = 1;
    p.incidence_.assign(p.facets_.size(), {});
    for (size_t f = 0; f < p.facets_.size(); ++f)
        for (size_t v = 0; v < p.vertices_.size(); ++v)
            if (dot(p.facets_[f].normal, p.vertices_[v]) == p.facets_[f].offset)
                p.incidence_[f].push_back(static_cast<int>(v));
    p.finish();
    return p;
}

Polytope Polytope::build_lower(int ambient_dim, AffineHull hull, const Polytope& local) {
    Polytope p;
    p.ambient_dim_ = ambient_dim;
    p.dim_ = local.dim();
    p.hull_ = std::move(hull);
    p.vertices_local_ = local.vertices_;
    p.facets_local_ = local.facets_local_;
    p.incidence_ = local.incidence_;
    for (const auto& lv : p.vertices_local_) p.vertices_.push_back(p.hull_.to_ambient(lv));
    p.finish();
    return p;
}

Polytope Polytope::intrinsic_view() const {
    if (full_dimensional()) return *this;
    Polytope p;
    p.ambient_dim_ = dim_;
    p.dim_ = dim_;
    p.vertices_ = vertices_local_;
    p.facets_ = facets_local_;
    p.facets_local_ = facets_local_;
    p.vertices_local_ = vertices_local_;
    p.incidence_ = incidence_;
    p.hull_.origin = zeros(dim_);
    p.hull_.basis.assign(dim_, zeros(dim_));
    for (int j = 0; j < dim_; ++j) p.hull_.basis[j][j] = 1;
    p.finish();
    return p;
}

bool Polytope::contains(const VecQ& point) const {
    if (static_cast<int>(point.size()) != ambient_dim_)
        throw std::invalid_argument("dimension mismatch in contains");
    if (dim_ == 0) return point == vertices_[0];
    if (full_dimensional()) {
        for (const auto& f : facets_)
            if (dot(f.normal, point) > f.offset) return false;
        return true;
    }
    const auto local = hull_.to_local(point);
    if (!local) return false;
    for (const auto& f : facets_local_)
        if (dot(f.normal, *local) > f.offset) return false;
    return true;
}

rational Polytope::support(const VecQ& direction) const {
    rational best;
    bool first = true;
    for (const auto& v : vertices_) {
        const rational s = dot(v, direction);
        if (first || s > best) {
            best = s;
            first = false;
        }
    }
    if (first) throw std::invalid_argument("empty polytope");
    return best;
}

std::vector<int> Polytope::support_argmax(const VecQ& direction) const {
    const rational best = support(direction);
    std::vector<int> ids;
    for (size_t i = 0; i < vertices_.size(); ++i)
        if (dot(vertices_[i], direction) == best) ids.push_back(static_cast<int>(i));
    return ids;
}

Polytope convex_hull(const std::vector<VecQ>& points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    const int d = static_cast<int>(points[0].size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("inconsistent point dimensions");

    std::vector<VecQ> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const int r = affine_rank(pts);
    if (r == 0) {
        Polytope p;
        p.ambient_dim_ = d;
        p.dim_ = 0;
        p.vertices_ = {pts[0]};
        p.vertices_local_ = {VecQ{}};
        p.hull_.origin = pts[0];
        p.finish();
        return p;
    }

    if (r == d) {
        VecQ centroid = zeros(d);
        for (const auto& p : pts) centroid = add(centroid, p);
        const rational inv_n = rational(1) / rational(static_cast<int64_t>(pts.size()));
        centroid = scale(centroid, inv_n);

        std::vector<Halfspace> polar_constraints;
        polar_constraints.reserve(pts.size());
        for (const auto& p : pts) polar_constraints.push_back({sub(p, centroid), rational(1)});
        const DdResult dd = dd_enumerate(polar_constraints, d, centroid.size() ? std::optional<VecQ>(zeros(d)) : std::nullopt);

        std::vector<Halfspace> facets;
        facets.reserve(dd.vertices.size());
        for (const auto& w : dd.vertices) facets.push_back({w, 1 + dot(w, centroid)});

        // A point is a hull vertex iff its tight facet normals span d dims.
        std::vector<VecQ> vertices;
        for (const auto& p : pts) {
            MatQ tight_normals;
            for (const auto& f : facets)
                if (dot(f.normal, p) == f.offset) tight_normals.push_back(f.normal);
            if (static_cast<int>(tight_normals.size()) >= d &&
                rank(std::move(tight_normals)) == d)
                vertices.push_back(p);
        }
        return Polytope::build_full(d, std::move(vertices), std::move(facets));
    }

    // Lower-dimensional: recurse inside the affine hull.
    AffineHull hull;
    hull.origin = pts[0];
    for (const auto& p : pts) {
        if (static_cast<int>(hull.basis.size()) == r) break;
        VecQ dir = sub(p, pts[0]);
        MatQ probe = hull.basis;
        probe.push_back(dir);
        if (rank(std::move(probe)) > static_cast<int>(hull.basis.size()))
            hull.basis.push_back(std::move(dir));
    }
    std::vector<VecQ> local_pts;
    local_pts.reserve(pts.size());
    for (const auto& p : pts) {
        const auto local = hull.to_local(p);
        if (!local) throw std::logic_error("affine hull construction failed");
        local_pts.push_back(*local);
    }
    const Polytope local = convex_hull(local_pts);
    return Polytope::build_lower(d, std::move(hull), local);
}

Polytope polytope_from_halfspaces(const std::vector<Halfspace>& halfspaces) {
    if (halfspaces.empty()) throw std::invalid_argument("no halfspaces");
    const int d = static_cast<int>(halfspaces[0].normal.size());
    const DdResult dd = dd_enumerate(halfspaces, d, std::nullopt);

    // Keep facet-supporting constraints only.
    std::vector<Halfspace> facets;
    for (const auto& h : halfspaces) {
        std::vector<VecQ> tight;
        for (const auto& v : dd.vertices)
            if (dot(h.normal, v) == h.offset) tight.push_back(v);
        if (tight.size() >= static_cast<size_t>(d) && affine_rank(tight) == d - 1)
            facets.push_back(h);
    }
    // Coincident halfspaces would duplicate a facet; keep one copy.
    for (auto& f : facets) f = normalize_halfspace(std::move(f));
    std::sort(facets.begin(), facets.end(), halfspace_less);
    facets.erase(std::unique(facets.begin(), facets.end(),
                             [](const Halfspace& a, const Halfspace& b) {
                                 return a.normal == b.normal && a.offset == b.offset;
                             }),
                 facets.end());
    return Polytope::build_full(d, dd.vertices, std::move(facets));
}

Polytope polar(const Polytope& body) {
    if (!body.full_dimensional())
        throw std::invalid_argument("origin not interior");
    for (const auto& f : body.facets())
        if (f.offset <= 0) throw std::invalid_argument("origin not interior");

    std::vector<VecQ> vertices;
    vertices.reserve(body.facets().size());
    for (const auto& f : body.facets()) {
        VecQ v(f.normal.size());
        for (size_t j = 0; j < v.size(); ++j) v[j] = -f.normal[j] / f.offset;
        vertices.push_back(std::move(v));
    }
    std::vector<Halfspace> facets;
    facets.reserve(body.vertices().size());
    for (const auto& v : body.vertices()) {
        VecQ n(v.size());
        for (size_t j = 0; j < v.size(); ++j) n[j] = -v[j];
        facets.push_back({std::move(n), rational(1)});
    }
    return Polytope::build_full(body.ambient_dim(), std::move(vertices), std::move(facets));
}

Polytope Face::as_polytope(const Polytope& parent) const {
    std::vector<VecQ> pts;
    pts.reserve(vertices.size());
    for (int id : vertices) pts.push_back(parent.vertices()[id]);
    return convex_hull(pts);
}

std::vector<Face> enumerate_faces(const Polytope& p) {
    if (!p.full_dimensional()) return enumerate_faces(p.intrinsic_view());
    const int n = static_cast<int>(p.vertices().size());
    const auto& inc = p.facet_vertices();

    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;

    std::map<std::vector<int>, bool> seen;
    std::vector<std::vector<int>> queue{all};
    seen[all] = true;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        const auto current = queue[qi];
        for (const auto& s : inc) {
            auto next = sorted_intersection(current, s);
            if (next.empty() || seen.count(next)) continue;
            seen[next] = true;
            queue.push_back(std::move(next));
        }
    }

    std::vector<Face> faces;
    faces.reserve(queue.size());
    for (const auto& vs : queue) {
        Face f;
        f.vertices = vs;
        for (size_t t = 0; t < inc.size(); ++t)
            if (sorted_intersection(vs, inc[t]).size() == vs.size())
                f.tight_facets.push_back(static_cast<int>(t));
        std::vector<VecQ> pts;
        for (int id : vs) pts.push_back(p.vertices()[id]);
        f.dim = affine_rank(pts);
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(),
              [](const Face& a, const Face& b) { return a.tight_facets < b.tight_facets; });
    return faces;
}

Face smallest_face_containing(const Polytope& p, const std::vector<int>& vertex_ids) {
    std::vector<VecQ> pts;
    pts.reserve(vertex_ids.size());
    for (int id : vertex_ids) pts.push_back(p.vertices()[id]);
    return smallest_face_containing_points(p, pts);
}

Face smallest_face_containing_points(const Polytope& p, const std::vector<VecQ>& points) {
    if (!p.full_dimensional()) {
        // Work in the intrinsic view; vertex ids and facet ids carry over.
        std::vector<VecQ> local_pts;
        for (const auto& q : points) {
            const auto local = p.affine_hull().to_local(q);
            if (!local) throw std::invalid_argument("point not in polytope");
            local_pts.push_back(*local);
        }
        return smallest_face_containing_points(p.intrinsic_view(), local_pts);
    }
    if (points.empty()) throw std::invalid_argument("no points given");
    for (const auto& q : points)
        if (!p.contains(q)) throw std::invalid_argument("point not in polytope");

    Face f;
    const auto& facets = p.facets_local();
    for (size_t t = 0; t < facets.size(); ++t) {
        bool tight_on_all = true;
        for (const auto& q : points)
            if (dot(facets[t].normal, q) != facets[t].offset) {
                tight_on_all = false;
                break;
            }
        if (tight_on_all) f.tight_facets.push_back(static_cast<int>(t));
    }
    for (size_t v = 0; v < p.vertices().size(); ++v) {
        bool on_all = true;
        for (int t : f.tight_facets)
            if (dot(facets[t].normal, p.vertices()[v]) != facets[t].offset) {
                on_all = false;
                break;
            }
        if (on_all) f.vertices.push_back(static_cast<int>(v));
    }
    std::vector<VecQ> pts;
    for (int id : f.vertices) pts.push_back(p.vertices()[id]);
    f.dim = affine_rank(pts);
    return f;
}

namespace {

// Shared by is_extreme_set and the witness construction: the smallest face
// of c containing e, with everything mapped into c's intrinsic view.
struct ExtremeAnalysis {
    Polytope view;               // c, full-dimensional
    std::vector<VecQ> e_points;  // e's vertices in view coordinates
    Face smallest;
    bool extreme = false;
    MatQ view_basis;  // to map witnesses back (empty when c was full-dim)
    VecQ view_origin;
    bool lowered = false;
};

ExtremeAnalysis analyze_extreme(const Polytope& c, const Polytope& e) {
    ExtremeAnalysis a;
    a.lowered = !c.full_dimensional();
    a.view = c.intrinsic_view();
    for (const auto& v : e.vertices()) {
        VecQ q = v;
        if (a.lowered) {
            const auto local = c.affine_hull().to_local(v);
            if (!local) throw std::invalid_argument("set not contained in parent");
            q = *local;
        }
        if (!a.view.contains(q)) throw std::invalid_argument("set not contained in parent");
        a.e_points.push_back(std::move(q));
    }
    if (a.lowered) {
        a.view_basis = c.affine_hull().basis;
        a.view_origin = c.affine_hull().origin;
    }
    if (c.dim() == 0) {
        a.extreme = true;
        return a;
    }
    a.smallest = smallest_face_containing_points(a.view, a.e_points);
    a.extreme = true;
    const Polytope e_local = convex_hull(a.e_points);
    for (int id : a.smallest.vertices) {
        if (!e_local.contains(a.view.vertices()[id])) {
            a.extreme = false;
            break;
        }
    }
    return a;
}

VecQ lift_if_lowered(const ExtremeAnalysis& a, const VecQ& local) {
    if (!a.lowered) return local;
    AffineHull h{a.view_origin, a.view_basis};
    return h.to_ambient(local);
}

}  // namespace

bool is_extreme_set(const Polytope& c, const Polytope& e) {
    return analyze_extreme(c, e).extreme;
}

std::optional<ExtremalityWitness> find_extremality_witness(const Polytope& c, const Polytope& e) {
    ExtremeAnalysis a = analyze_extreme(c, e);
    if (a.extreme) return std::nullopt;

    const int d = a.view.dim();
    VecQ m = zeros(d);
    for (const auto& q : a.e_points) m = add(m, q);
    m = scale(m, rational(1) / rational(static_cast<int64_t>(a.e_points.size())));

    const Polytope e_local = convex_hull(a.e_points);
    VecQ w;
    for (int id : a.smallest.vertices) {
        if (!e_local.contains(a.view.vertices()[id])) {
            w = a.view.vertices()[id];
            break;
        }
    }
    const VecQ dir = sub(m, w);
    // Largest step keeping m + alpha * dir inside the view polytope.
    rational alpha;
    bool bounded = false;
    for (const auto& f : a.view.facets()) {
        const rational rate = dot(f.normal, dir);
        if (rate <= 0) continue;
        const rational room = f.offset - dot(f.normal, m);
        const rational bound = room / rate;
        if (!bounded || bound < alpha) {
            alpha = bound;
            bounded = true;
        }
    }
    if (!bounded || alpha <= 0)
        throw std::logic_error("witness construction failed; centroid not relatively interior");

    ExtremalityWitness out;
    out.endpoint_a = lift_if_lowered(a, w);
    out.endpoint_b = lift_if_lowered(a, add(m, scale(dir, alpha)));
    out.interior_point = lift_if_lowered(a, m);
    return out;
}

double AffineFunctional::value_d(const VecD& q) const {
    double s = to_double(constant);
    for (size_t j = 0; j < q.size(); ++j) s += q[j] * to_double(gradient[j]);
    return s;
}

namespace {

// Functional summing the slack of the face's tight facets: zero exactly on
// the face, positive on the rest of the polytope. For lower-dimensional
// polytopes the intrinsic functional is lifted to ambient coordinates.
AffineFunctional face_support_functional(const Polytope& c, const std::vector<int>& tight) {
    const auto& facets = c.facets_local();
    const int d_local = c.dim();
    VecQ grad_local = zeros(d_local);
    rational constant = 0;
    for (int t : tight) {
        for (int j = 0; j < d_local; ++j) grad_local[j] -= facets[t].normal[j];
        constant += facets[t].offset;
    }
    if (c.full_dimensional()) return {std::move(grad_local), constant};

    // Ambient gradient g solves basis^T g = grad_local; constant adjusts for
    // the hull origin.
    const auto& hull = c.affine_hull();
    MatQ rows = hull.basis;
    const auto solved = solve_linear(rows, grad_local);
    if (!solved.consistent) throw std::logic_error("functional lift failed");
    const rational k = constant - dot(hull.origin, solved.solution);
    return {solved.solution, k};
}

Face whole_face(const Polytope& c) {
    Face f;
    for (size_t i = 0; i < c.vertices().size(); ++i) f.vertices.push_back(static_cast<int>(i));
    f.dim = c.dim();
    return f;
}

void require_face(const Polytope& c, const Face& e) {
    const Face f = smallest_face_containing(c, e.vertices);
    if (f.vertices != e.vertices) throw std::invalid_argument("not an extreme set");
}

}  // namespace

std::vector<ChainStep> exposed_face_chain(const Polytope& c, const Face& e) {
    require_face(c, e);
    if (e.vertices.size() == c.vertices().size()) return {};
    const Face resolved = smallest_face_containing(c, e.vertices);
    std::vector<ChainStep> chain;
    chain.push_back({resolved, face_support_functional(c, resolved.tight_facets)});
    return chain;
}

std::vector<ChainStep> exposed_face_chain_stepwise(const Polytope& c, const Face& e) {
    require_face(c, e);
    if (e.vertices.size() == c.vertices().size()) return {};
    const Face resolved = smallest_face_containing(c, e.vertices);

    std::vector<ChainStep> chain;
    std::vector<int> current = [&] {
        std::vector<int> all(c.vertices().size());
        for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        return all;
    }();
    for (int t : resolved.tight_facets) {
        auto next = sorted_intersection(current, c.facet_vertices()[t]);
        if (next.size() == current.size()) continue;  // facet already tight
        Face f = smallest_face_containing(c, next);
        chain.push_back({f, face_support_functional(c, {t})});
        current = f.vertices;
        if (current == resolved.vertices) break;
    }
    return chain;
}

bool verify_face_chain(const Polytope& c, const std::vector<ChainStep>& chain) {
    std::vector<int> current(c.vertices().size());
    for (size_t i = 0; i < current.size(); ++i) current[i] = static_cast<int>(i);
    const auto& verts = c.vertices();
    for (const auto& step : chain) {
        for (int id : current) {
            const rational v = step.functional.value(verts[id]);
            const bool in_next = std::binary_search(step.face.vertices.begin(),
                                                    step.face.vertices.end(), id);
            if (in_next && v != 0) return false;
            if (!in_next && v <= 0) return false;
        }
        for (int id : step.face.vertices)
            if (!std::binary_search(current.begin(), current.end(), id)) return false;
        current = step.face.vertices;
    }
    return true;
}

}  // namespace horo
