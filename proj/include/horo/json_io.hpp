#pragma once

#include <string>

#include "json.hpp"

#include "horo/builtins.hpp"
#include "horo/convexfn.hpp"
#include "horo/horoboundary.hpp"
#include "horo/normedspace.hpp"
#include "horo/polytope.hpp"

namespace horo {

using ordered_json = nlohmann::ordered_json;

// Exact scalars travel as "p" / "p/q" strings; doubles as JSON numbers.
ordered_json scalar_to_json(const rational& q);
rational scalar_from_json(const nlohmann::json& j);

ordered_json vec_to_json(const VecQ& v);
ordered_json vec_to_json(const VecD& v);
VecQ vec_from_json(const nlohmann::json& j);

ordered_json polytope_to_json(const Polytope& p);
/// Rebuilds from the vertex list (the facets are re-derived).
Polytope polytope_from_json(const nlohmann::json& j);

ordered_json face_to_json(const Face& f);
Face face_from_json(const nlohmann::json& j);

ordered_json max_affine_to_json(const MaxAffine& f);
MaxAffine max_affine_from_json(const nlohmann::json& j);

ordered_json affine_on_polytope_to_json(const AffineOnPolytope& h);
AffineOnPolytope affine_on_polytope_from_json(const nlohmann::json& j);

ordered_json ball_spec_to_json(const BallSpec& spec);
BallSpec ball_spec_from_json(const nlohmann::json& j);

ordered_json almost_geodesic_to_json(const AlmostGeodesic& ag);

ordered_json closure_report_to_json(const ClosureReport& rep);

ordered_json classification_to_json(const Classification& c);

ordered_json min_decomposition_to_json(const MinDecompositionCertificate& cert);

/// Probe CSV: one row per sample, columns x1..xd then f.
std::string probe_csv(const FnGridProbe& probe, const Fn& f);

}  // namespace horo
