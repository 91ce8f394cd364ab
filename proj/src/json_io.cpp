#include "horo/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace horo {

ordered_json scalar_to_json(const rational& q) { return format_rational(q); }

rational scalar_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return rational(j.get<int64_t>());
    if (j.is_number_float()) return rational_from_double(j.get<double>());
    throw std::invalid_argument("bad scalar in JSON");
}

ordered_json vec_to_json(const VecQ& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(scalar_to_json(x));
    return a;
}

ordered_json vec_to_json(const VecD& v) {
    ordered_json a = ordered_json::array();
    for (double x : v) a.push_back(x);
    return a;
}

VecQ vec_from_json(const nlohmann::json& j) {
    VecQ v;
    for (const auto& x : j) v.push_back(scalar_from_json(x));
    return v;
}

ordered_json polytope_to_json(const Polytope& p) {
    ordered_json j;
    j["dimension"] = p.ambient_dim();
    j["dim"] = p.dim();
    ordered_json verts = ordered_json::array();
    for (const auto& v : p.vertices()) verts.push_back(vec_to_json(v));
    j["vertices"] = std::move(verts);
    if (p.full_dimensional() && p.dim() > 0) {
        ordered_json facets = ordered_json::array();
        for (const auto& f : p.facets()) {
            ordered_json fj;
            fj["normal"] = vec_to_json(f.normal);
            fj["offset"] = scalar_to_json(f.offset);
            facets.push_back(std::move(fj));
        }
        j["facets"] = std::move(facets);
    }
    return j;
}

Polytope polytope_from_json(const nlohmann::json& j) {
    std::vector<VecQ> pts;
    for (const auto& v : j.at("vertices")) pts.push_back(vec_from_json(v));
    return convex_hull(pts);
}

ordered_json face_to_json(const Face& f) {
    ordered_json j;
    j["tight_facets"] = f.tight_facets;
    j["vertices"] = f.vertices;
    j["dim"] = f.dim;
    return j;
}

Face face_from_json(const nlohmann::json& j) {
    Face f;
    f.tight_facets = j.at("tight_facets").get<std::vector<int>>();
    f.vertices = j.at("vertices").get<std::vector<int>>();
    f.dim = j.at("dim").get<int>();
    return f;
}

ordered_json max_affine_to_json(const MaxAffine& f) {
    ordered_json pieces = ordered_json::array();
    for (const auto& p : f.pieces()) {
        ordered_json pj;
        pj["gradient"] = vec_to_json(p.gradient);
        pj["offset"] = scalar_to_json(p.offset);
        pieces.push_back(std::move(pj));
    }
    ordered_json j;
    j["pieces"] = std::move(pieces);
    return j;
}

MaxAffine max_affine_from_json(const nlohmann::json& j) {
    std::vector<AffinePiece> pieces;
    for (const auto& pj : j.at("pieces"))
        pieces.push_back({vec_from_json(pj.at("gradient")), scalar_from_json(pj.at("offset"))});
    return MaxAffine(std::move(pieces));
}

ordered_json affine_on_polytope_to_json(const AffineOnPolytope& h) {
    ordered_json j;
    j["domain"] = polytope_to_json(h.domain);
    j["gradient"] = vec_to_json(h.gradient);
    j["offset"] = scalar_to_json(h.offset);
    return j;
}

AffineOnPolytope affine_on_polytope_from_json(const nlohmann::json& j) {
    return AffineOnPolytope{polytope_from_json(j.at("domain")), vec_from_json(j.at("gradient")),
                            scalar_from_json(j.at("offset"))};
}

ordered_json ball_spec_to_json(const BallSpec& spec) {
    ordered_json j;
    j["dimension"] = spec.dimension;
    switch (spec.kind) {
        case BallKind::vpolytope: j["kind"] = "vpolytope"; break;
        case BallKind::hull: j["kind"] = "hull"; break;
        case BallKind::hpolytope_intersection: j["kind"] = "hpolytope-intersection"; break;
    }
    j["dual_side"] = spec.dual_side;
    ordered_json pieces = ordered_json::array();
    for (const auto& piece : spec.pieces) {
        ordered_json pj;
        if (std::holds_alternative<CirclePiece>(piece)) {
            const auto& c = std::get<CirclePiece>(piece);
            pj["kind"] = "circle";
            pj["center"] = vec_to_json(c.center);
            pj["axis1"] = vec_to_json(c.axis1);
            pj["axis2"] = vec_to_json(c.axis2);
            pj["radius"] = scalar_to_json(c.radius);
            if (c.mode == CirclePiece::Mode::inscribed) pj["mode"] = "inscribed";
        } else {
            const auto& p = std::get<PointsPiece>(piece);
            pj["kind"] = "points";
            ordered_json pts = ordered_json::array();
            for (const auto& q : p.points) pts.push_back(vec_to_json(q));
            pj["points"] = std::move(pts);
        }
        pieces.push_back(std::move(pj));
    }
    j["pieces"] = std::move(pieces);
    j["discretization"] = spec.discretization;
    return j;
}

BallSpec ball_spec_from_json(const nlohmann::json& j) {
    BallSpec spec;
    spec.dimension = j.at("dimension").get<int>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "vpolytope")
        spec.kind = BallKind::vpolytope;
    else if (kind == "hull")
        spec.kind = BallKind::hull;
    else if (kind == "hpolytope-intersection")
        spec.kind = BallKind::hpolytope_intersection;
    else
        throw std::invalid_argument("unknown ball kind '" + kind + "'");
    spec.dual_side = j.value("dual_side", false);
    spec.discretization = j.value("discretization", 64);
    for (const auto& pj : j.at("pieces")) {
        const std::string pk = pj.at("kind").get<std::string>();
        if (pk == "circle") {
            CirclePiece c;
            c.center = vec_from_json(pj.at("center"));
            c.axis1 = vec_from_json(pj.at("axis1"));
            c.axis2 = vec_from_json(pj.at("axis2"));
            c.radius = scalar_from_json(pj.at("radius"));
            if (pj.value("mode", "circumscribed") == std::string("inscribed"))
                c.mode = CirclePiece::Mode::inscribed;
            spec.pieces.push_back(std::move(c));
        } else if (pk == "points") {
            PointsPiece p;
            for (const auto& q : pj.at("points")) p.points.push_back(vec_from_json(q));
            spec.pieces.push_back(std::move(p));
        } else {
            throw std::invalid_argument("unknown piece kind '" + pk + "'");
        }
    }
    return spec;
}

ordered_json almost_geodesic_to_json(const AlmostGeodesic& ag) {
    ordered_json j;
    ordered_json pts = ordered_json::array();
    for (const auto& q : ag.points) pts.push_back(vec_to_json(q));
    j["points"] = std::move(pts);
    j["epsilon"] = ag.epsilon;
    if (ag.target) {
        ordered_json t;
        t["E"] = face_to_json(ag.target->first);
        t["p"] = vec_to_json(ag.target->second);
        j["target"] = std::move(t);
    }
    return j;
}

ordered_json closure_report_to_json(const ClosureReport& rep) {
    ordered_json j;
    switch (rep.verdict) {
        case ClosureVerdict::closed: j["verdict"] = "closed"; break;
        case ClosureVerdict::not_closed: j["verdict"] = "not-closed"; break;
        case ClosureVerdict::inconclusive: j["verdict"] = "inconclusive"; break;
    }
    j["reason"] = rep.reason;
    if (!rep.witness_sets.empty()) {
        ordered_json witness = ordered_json::array();
        for (const auto& set : rep.witness_sets) {
            ordered_json fj;
            fj["tight_facets"] = ordered_json::array();
            fj["vertices"] = ordered_json::array();
            ordered_json pts = ordered_json::array();
            for (const auto& p : set) pts.push_back(vec_to_json(p));
            fj["points"] = std::move(pts);
            fj["dim"] = set.size() == 1 ? 0 : static_cast<int>(set.size()) - 1;
            witness.push_back(std::move(fj));
        }
        j["witness"] = std::move(witness);
    }
    if (!rep.limit_set.empty()) {
        ordered_json limit;
        limit["dimension"] = static_cast<int>(rep.limit_set[0].size());
        ordered_json pts = ordered_json::array();
        for (const auto& p : rep.limit_set) pts.push_back(vec_to_json(p));
        limit["vertices"] = std::move(pts);
        j["limit"] = std::move(limit);
    }
    if (rep.limit_witness) {
        ordered_json w;
        w["endpoint_a"] = vec_to_json(rep.limit_witness->endpoint_a);
        w["endpoint_b"] = vec_to_json(rep.limit_witness->endpoint_b);
        w["interior_point"] = vec_to_json(rep.limit_witness->interior_point);
        j["limit_witness"] = std::move(w);
    }
    return j;
}

ordered_json classification_to_json(const Classification& c) {
    ordered_json j;
    switch (c.kind) {
        case HoroClass::interior: j["kind"] = "interior"; break;
        case HoroClass::busemann: j["kind"] = "busemann"; break;
        case HoroClass::horofunction_not_busemann:
            j["kind"] = "horofunction-not-busemann";
            break;
        case HoroClass::not_in_compactification:
            j["kind"] = "not-in-compactification";
            break;
    }
    j["reason"] = c.reason;
    if (c.base_point) j["z"] = vec_to_json(*c.base_point);
    if (c.face) j["E"] = face_to_json(*c.face);
    if (c.extreme_set) j["transform_domain"] = polytope_to_json(*c.extreme_set);
    if (c.parameter) j["p"] = vec_to_json(*c.parameter);
    return j;
}

ordered_json min_decomposition_to_json(const MinDecompositionCertificate& cert) {
    ordered_json j;
    j["valid"] = cert.valid;
    j["min_mismatch"] = cert.min_mismatch;
    j["lipschitz1"] = {{"ok", cert.lip1.ok}, {"worst_ratio", cert.lip1.worst_ratio}};
    j["lipschitz2"] = {{"ok", cert.lip2.ok}, {"worst_ratio", cert.lip2.worst_ratio}};
    j["difference1"] = cert.difference1;
    j["difference2"] = cert.difference2;
    j["tolerance"] = cert.tolerance;
    return j;
}

std::string probe_csv(const FnGridProbe& probe, const Fn& f) {
    std::ostringstream out;
    if (probe.samples.empty()) return "";
    const size_t d = probe.samples[0].size();
    for (size_t j = 1; j <= d; ++j) out << "x" << j << ",";
    out << "f\n";
    out.precision(17);
    for (const auto& x : probe.samples) {
        for (double c : x) out << c << ",";
        out << f(x) << "\n";
    }
    return out.str();
}

}  // namespace horo
