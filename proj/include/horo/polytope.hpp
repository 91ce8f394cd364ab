#pragma once

#include <optional>
#include <string>
#include <vector>

#include "horo/vec.hpp"

namespace horo {

/// Halfspace <normal, x> <= offset.
struct Halfspace {
    VecQ normal;
    rational offset;
};

/// Affine subspace origin + span(basis), exact.
struct AffineHull {
    VecQ origin;
    MatQ basis;  // basis vectors, one per intrinsic coordinate

    VecQ to_ambient(const VecQ& local) const;
    /// Intrinsic coordinates of an ambient point; nullopt if off the flat.
    std::optional<VecQ> to_local(const VecQ& ambient) const;
};

/// A compact convex polytope carrying both an irredundant V-representation
/// and H-representation. Lower-dimensional polytopes store their affine
/// hull and an intrinsic H-representation inside it; the vertex list is
/// always in ambient coordinates. Immutable after construction.
class Polytope {
  public:
    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return dim_; }
    bool full_dimensional() const { return dim_ == ambient_dim_; }

    const std::vector<VecQ>& vertices() const { return vertices_; }
    const std::vector<VecD>& vertices_d() const { return vertices_d_; }

    /// Facets in ambient coordinates; requires a full-dimensional polytope.
    const std::vector<Halfspace>& facets() const;
    /// Facets of the intrinsic representation (same as facets() when
    /// full-dimensional).
    const std::vector<Halfspace>& facets_local() const { return facets_local_; }
    const std::vector<std::vector<int>>& facet_vertices() const { return incidence_; }
    const AffineHull& affine_hull() const { return hull_; }
    const std::vector<VecQ>& vertices_local() const { return vertices_local_; }

    /// The polytope as a full-dimensional body in its own affine hull.
    Polytope intrinsic_view() const;

    bool contains(const VecQ& point) const;

    /// max over vertices of <v, direction>, with the attaining vertex ids.
    rational support(const VecQ& direction) const;
    std::vector<int> support_argmax(const VecQ& direction) const;

    friend Polytope convex_hull(const std::vector<VecQ>& points);
    friend Polytope polytope_from_halfspaces(const std::vector<Halfspace>& halfspaces);
    friend Polytope polar(const Polytope& body);

  private:
    static Polytope build_full(int dim, std::vector<VecQ> vertices, std::vector<Halfspace> facets);
    static Polytope build_lower(int ambient_dim, AffineHull hull, const Polytope& local);
    void finish();

    int ambient_dim_ = 0;
    int dim_ = 0;
    std::vector<VecQ> vertices_;
    std::vector<VecD> vertices_d_;
    std::vector<Halfspace> facets_;        // ambient, full-dim only
    std::vector<Halfspace> facets_local_;  // intrinsic
    std::vector<std::vector<int>> incidence_;
    AffineHull hull_;
    std::vector<VecQ> vertices_local_;
};

/// Irredundant hull of a finite point set. Lower-dimensional input is
/// returned inside its recorded affine hull. Throws on empty input.
Polytope convex_hull(const std::vector<VecQ>& points);

/// Vertex enumeration of a bounded full-dimensional H-polytope (double
/// description by sequential halfspace insertion). Throws if the input is
/// unbounded or has empty interior.
Polytope polytope_from_halfspaces(const std::vector<Halfspace>& halfspaces);

/// Dual-ball polarity, sign convention polar(B) = {y : <y,x> >= -1 on B}.
/// Requires 0 in the interior; polar(polar(B)) == B.
Polytope polar(const Polytope& body);

/// Extreme set of a polytope: tight facets, vertex ids, intrinsic dimension.
struct Face {
    std::vector<int> tight_facets;
    std::vector<int> vertices;
    int dim = 0;

    Polytope as_polytope(const Polytope& parent) const;
};

/// All nonempty faces including the polytope itself, deduplicated, ordered
/// lexicographically by tight-facet key. Lower-dimensional polytopes are
/// enumerated in their intrinsic view (ids refer to facets_local()).
std::vector<Face> enumerate_faces(const Polytope& p);

/// Smallest face of `p` containing the given vertices / points.
Face smallest_face_containing(const Polytope& p, const std::vector<int>& vertex_ids);
Face smallest_face_containing_points(const Polytope& p, const std::vector<VecQ>& points);

/// Whether `e` is an extreme set of `c`; for polytopes this is exactly
/// "e is a face of c". Throws if e is not contained in c.
bool is_extreme_set(const Polytope& c, const Polytope& e);

/// Segment in `c` whose interior meets `e` but with an endpoint outside
/// `e`; exists exactly when `e` is not extreme.
struct ExtremalityWitness {
    VecQ endpoint_a;
    VecQ endpoint_b;
    VecQ interior_point;
};
std::optional<ExtremalityWitness> find_extremality_witness(const Polytope& c, const Polytope& e);

/// Affine functional value(q) = <q, gradient> + constant.
struct AffineFunctional {
    VecQ gradient;
    rational constant;
    rational value(const VecQ& q) const { return dot(q, gradient) + constant; }
    double value_d(const VecD& q) const;
};

/// One link of an exposed-face chain: `face` is an exposed face of the
/// previous link, certified by `functional` (zero on `face`, positive on
/// the rest of the previous link).
struct ChainStep {
    Face face;
    AffineFunctional functional;
};

/// Chain from `c` down to face `e`. Every face of a polytope is exposed,
/// so the direct chain has a single certified step; the chain is empty
/// when e is all of c. Throws if e is not extreme in c.
std::vector<ChainStep> exposed_face_chain(const Polytope& c, const Face& e);

/// Chain descending one facet at a time, for exercising multi-step lifts;
/// same certificate contract as exposed_face_chain.
std::vector<ChainStep> exposed_face_chain_stepwise(const Polytope& c, const Face& e);

/// Checks a chain's certificates by exact sign tests on vertices.
bool verify_face_chain(const Polytope& c, const std::vector<ChainStep>& chain);

}  // namespace horo
