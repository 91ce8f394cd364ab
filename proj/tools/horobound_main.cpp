// Command-line front end: dual balls, face lattices, horofunction
// classification, almost-geodesics, closure checks.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "horo/builtins.hpp"
#include "horo/horoboundary.hpp"
#include "horo/json_io.hpp"

namespace {

using namespace horo;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;
constexpr int kExitInconclusive = 4;

struct Options {
    std::string ball_path;
    std::string builtin;
    int dim = 2;
    int m = 64;
    double radius = 2.0;
    int density = 33;
    int quasi = 1000;
    uint64_t seed = 0;
    std::string out_dir;
    std::string format = "json";
    bool gnuplot = false;
    bool force_vertex_enum = false;
};

// Variables follow the worked examples: planar x,y; spatial x,y,z; in four
// dimensions x,y,w,z. The forms x1..x6 always work.
int variable_index(const std::string& name, int dim) {
    if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '6')
        return name[1] - '1';
    static const std::vector<std::vector<std::string>> tables = {
        {"x"}, {"x", "y"}, {"x", "y", "z"}, {"x", "y", "w", "z"}};
    if (dim >= 1 && dim <= 4) {
        const auto& table = tables[dim - 1];
        for (size_t i = 0; i < table.size(); ++i)
            if (table[i] == name) return static_cast<int>(i);
    }
    return -1;
}

// Parses "max(lin, lin, ...)" or a bare linear expression into a
// max-affine function. Coefficients are exact decimals or fractions.
class FunctionParser {
  public:
    FunctionParser(std::string text, int dim) : text_(std::move(text)), dim_(dim) {}

    MaxAffine parse() {
        skip_space();
        std::vector<AffinePiece> pieces;
        if (peek_word("max")) {
            pos_ += 3;
            expect('(');
            pieces.push_back(parse_linear());
            while (peek() == ',') {
                ++pos_;
                pieces.push_back(parse_linear());
            }
            expect(')');
        } else {
            pieces.push_back(parse_linear());
        }
        skip_space();
        if (pos_ != text_.size()) fail("trailing input");
        return MaxAffine(std::move(pieces));
    }

  private:
    AffinePiece parse_linear() {
        AffinePiece piece{VecQ(dim_, rational(0)), rational(0)};
        bool first = true;
        for (;;) {
            skip_space();
            rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (text_[pos_] == '-') sign = -1;
                ++pos_;
            } else if (!first) {
                break;
            }
            first = false;
            skip_space();
            rational coeff = sign;
            bool saw_number = false;
            if (std::isdigit(peek()) || peek() == '.') {
                coeff = sign * parse_number();
                saw_number = true;
                skip_space();
                if (peek() == '*') {
                    ++pos_;
                    skip_space();
                }
            }
            if (std::isalpha(peek())) {
                const std::string var = parse_word();
                const int idx = variable_index(var, dim_);
                if (idx < 0 || idx >= dim_) fail("unknown variable '" + var + "'");
                piece.gradient[idx] += coeff;
            } else if (saw_number) {
                piece.offset += coeff;
            } else {
                fail("expected a term");
            }
            skip_space();
            if (peek() != '+' && peek() != '-') break;
        }
        return piece;
    }

    rational parse_number() {
        const size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(text_[pos_]) || text_[pos_] == '.' || text_[pos_] == '/'))
            ++pos_;
        return parse_rational(text_.substr(start, pos_ - start));
    }

    std::string parse_word() {
        const size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    bool peek_word(const std::string& w) {
        return text_.compare(pos_, w.size(), w) == 0 &&
               (pos_ + w.size() >= text_.size() || !std::isalnum(text_[pos_ + w.size()]));
    }

    char peek() { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(text_[pos_])) ++pos_;
    }
    void expect(char c) {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("function parse error: " + msg + " in '" + text_ + "'");
    }

    std::string text_;
    int dim_;
    size_t pos_ = 0;
};

VecD parse_direction(const std::string& text) {
    VecD out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

BuiltinSpace load_space(const Options& opt) {
    if (!opt.builtin.empty()) return make_builtin(opt.builtin, opt.dim, opt.m);
    if (opt.ball_path.empty())
        throw std::invalid_argument("give --builtin or --ball");
    std::ifstream in(opt.ball_path);
    if (!in) throw std::invalid_argument("cannot open '" + opt.ball_path + "'");
    nlohmann::json j;
    in >> j;
    BallSpec spec = ball_spec_from_json(j);
    spec.discretization = opt.m;
    bool smooth = false;
    for (const auto& piece : spec.pieces)
        if (std::holds_alternative<CirclePiece>(piece)) smooth = true;
    return BuiltinSpace{std::filesystem::path(opt.ball_path).stem().string(),
                        realize_ball(spec), nullptr, nullptr, smooth};
}

void emit(const Options& opt, const std::string& name, const std::string& payload) {
    if (opt.out_dir.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::filesystem::create_directories(opt.out_dir);
    std::ofstream out(std::filesystem::path(opt.out_dir) / name);
    out << payload << "\n";
}

void emit_json(const Options& opt, const std::string& name, const ordered_json& j) {
    emit(opt, name, j.dump(2));
}

int cmd_dual_ball(const Options& opt) {
    const BuiltinSpace b = load_space(opt);
    emit_json(opt, "dual_ball.json", polytope_to_json(b.space.dual_ball()));
    // Vertex enumeration of the primal ball can be expensive for hulls
    // given on the dual side; skip it above the work guard unless forced.
    const bool enumerate = b.space.ball_materialized() || opt.force_vertex_enum ||
                           b.space.dim() <= 3 || b.space.ball_hrep().size() <= 80;
    if (enumerate) {
        emit_json(opt, "ball.json", polytope_to_json(b.space.ball()));
    } else {
        ordered_json j;
        j["dimension"] = b.space.dim();
        j["vertices_omitted"] =
            "vertex enumeration skipped (large dual-side hull); rerun with --full-vertex-enum";
        ordered_json facets = ordered_json::array();
        for (const auto& h : b.space.ball_hrep()) {
            ordered_json fj;
            fj["normal"] = vec_to_json(h.normal);
            fj["offset"] = scalar_to_json(h.offset);
            facets.push_back(std::move(fj));
        }
        j["facets"] = std::move(facets);
        emit_json(opt, "ball.json", j);
    }
    return kExitOk;
}

int cmd_faces(const Options& opt) {
    const BuiltinSpace b = load_space(opt);
    const auto faces = enumerate_faces(b.space.dual_ball());
    ordered_json list = ordered_json::array();
    std::map<int, int> by_dim;
    for (const auto& f : faces) {
        list.push_back(face_to_json(f));
        by_dim[f.dim] += 1;
    }
    ordered_json j;
    j["count"] = faces.size();
    ordered_json counts;
    for (const auto& [dim, count] : by_dim) counts[std::to_string(dim)] = count;
    j["counts_by_dim"] = std::move(counts);
    j["faces"] = std::move(list);
    emit_json(opt, "faces.json", j);
    return kExitOk;
}

int classify_function(const Options& opt, const BuiltinSpace& b, const MaxAffine& f,
                      LimitEvidence evidence) {
    IdentifyOptions io;
    io.evidence = evidence;
    io.symbolic = b.symbolic.get();
    const Classification cls = identify_horofunction(b.space, f, io);
    ordered_json j = classification_to_json(cls);

    // The worked spaces carry explicit 1-Lipschitz minimum decompositions
    // for their non-Busemann horofunctions; attach the certificate when the
    // queried function is one of them.
    if (cls.kind == HoroClass::horofunction_not_busemann ||
        cls.kind == HoroClass::not_in_compactification) {
        const FnGridProbe probe = make_probe(b.space, opt.radius, std::min(opt.density, 17), 500);
        const auto pairs = sample_pairs(b.space, opt.radius, 2000, opt.seed);
        std::optional<std::pair<Fn, Fn>> decomposition;
        if (b.name == "example2" &&
            uniform_distance(f.as_fn(), example2::f(), probe) < 1e-12)
            decomposition = std::make_pair(example2::f1(), example2::f2());
        if (b.name == "example3" &&
            uniform_distance(f.as_fn(), example3::g(), probe) < 1e-12)
            decomposition = std::make_pair(example3::g1(), example3::g2());
        if (decomposition) {
            const auto cert = verify_min_decomposition(b.space, f.as_fn(), decomposition->first,
                                                       decomposition->second, probe, pairs);
            j["min_decomposition"] = min_decomposition_to_json(cert);
            emit_json(opt, "classification.json", j);
            return cert.valid ? kExitOk : kExitVerification;
        }
    }
    emit_json(opt, "classification.json", j);
    return kExitOk;
}

int cmd_classify(const Options& opt, const std::string& function_text,
                 const std::string& direction_text) {
    const BuiltinSpace b = load_space(opt);
    if (!function_text.empty()) {
        const MaxAffine f = FunctionParser(function_text, b.space.dim()).parse();
        return classify_function(opt, b, f, LimitEvidence::caller_asserted);
    }
    if (direction_text.empty()) throw std::invalid_argument("give --function or --direction");
    const VecD dir = parse_direction(direction_text);
    if (static_cast<int>(dir.size()) != b.space.dim())
        throw std::invalid_argument("direction dimension mismatch");
    const FnGridProbe probe = make_probe(b.space, opt.radius, std::min(opt.density, 17), 500);
    const RayLimitReport ray = limit_along_ray(b.space, dir, default_ray_schedule(), probe);
    if (!ray.fit) {
        ordered_json j;
        j["note"] = "no exact fit for smooth gauges; classify the limit via --function";
        emit_json(opt, "classification.json", j);
        return kExitInconclusive;
    }
    return classify_function(opt, b, *ray.fit, LimitEvidence::ray_detected);
}

int cmd_limit_ray(const Options& opt, const std::string& direction_text) {
    const BuiltinSpace b = load_space(opt);
    const VecD dir = parse_direction(direction_text);
    if (static_cast<int>(dir.size()) != b.space.dim())
        throw std::invalid_argument("direction dimension mismatch");
    const FnGridProbe probe =
        make_probe(b.space, opt.radius, std::min(opt.density, 17), opt.quasi);
    const RayLimitReport ray = limit_along_ray(b.space, dir, default_ray_schedule(), probe);
    ordered_json j;
    j["schedule"] = ray.schedule;
    j["residuals"] = ray.residuals;
    j["converged"] = ray.converged;
    if (!ray.note.empty()) j["note"] = ray.note;
    if (ray.fit) j["fit"] = max_affine_to_json(*ray.fit);
    emit_json(opt, "limit_ray.json", j);
    if (opt.format == "csv") emit(opt, "limit_ray.csv", probe_csv(probe, ray.empirical));
    if (opt.gnuplot) {
        std::ostringstream table;
        table << "# t residual\n";
        table.precision(17);
        for (size_t i = 0; i < ray.residuals.size(); ++i)
            table << ray.schedule[i] << " " << ray.residuals[i] << "\n";
        emit(opt, "limit_ray.dat", table.str());
    }
    return ray.converged ? kExitOk : kExitInconclusive;
}

int cmd_almost_geodesic(const Options& opt, int face_index, const std::string& p_text,
                        int n_points) {
    const BuiltinSpace b = load_space(opt);
    const auto faces = enumerate_faces(b.space.dual_ball());
    if (face_index < 0 || face_index >= static_cast<int>(faces.size()))
        throw std::invalid_argument("face index out of range");
    VecQ p(b.space.dim(), rational(0));
    if (!p_text.empty()) {
        const VecD pd = parse_direction(p_text);
        if (static_cast<int>(pd.size()) != b.space.dim())
            throw std::invalid_argument("p dimension mismatch");
        p = rationalize(pd);
    }
    FnGridProbe probe;
    probe.radius = opt.radius;
    probe.samples = halton_in_ball(b.space, opt.radius, n_points - 1);

    const auto build = build_almost_geodesic(b.space, faces[face_index], p, n_points, probe);
    ordered_json j = almost_geodesic_to_json(build.geodesic);
    j["lambdas"] = build.lambdas;
    j["prefix_slack"] = build.verification.prefix_slack;
    j["min_epsilon"] = build.verification.min_epsilon;
    j["rieffel_max_dev"] = build.verification.rieffel_max_dev;
    j["probe_distance"] = build.probe_distance;
    j["chain_length"] = build.chain_length;
    emit_json(opt, "almost_geodesic.json", j);
    if (opt.format == "csv") {
        std::ostringstream table;
        for (int c = 1; c <= b.space.dim(); ++c) table << "x" << c << (c < b.space.dim() ? "," : "\n");
        table.precision(17);
        for (const auto& q : build.geodesic.points) {
            for (size_t c = 0; c < q.size(); ++c) table << q[c] << (c + 1 < q.size() ? "," : "\n");
        }
        emit(opt, "points.csv", table.str());
    }
    if (opt.gnuplot) {
        std::ostringstream table;
        table << "# n lambda slack\n";
        table.precision(17);
        for (size_t i = 0; i < build.lambdas.size(); ++i)
            table << i << " " << build.lambdas[i] << " "
                  << (i > 0 ? build.verification.prefix_slack[i - 1] : 0.0) << "\n";
        emit(opt, "almost_geodesic.dat", table.str());
    }
    const bool ok = build.verification.min_epsilon <= 2.0 + 1e-6;
    return ok ? kExitOk : kExitVerification;
}

int cmd_check_closure(const Options& opt) {
    const BuiltinSpace b = load_space(opt);
    ClosureOptions co;
    co.symbolic_report = b.closure_report;
    co.discretized_smooth = b.discretized_smooth;
    const ClosureReport rep = check_extreme_closure(b.space, co);
    emit_json(opt, "closure.json", closure_report_to_json(rep));
    return rep.verdict == ClosureVerdict::inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_verify_min(const Options& opt, const std::string& f_text, const std::string& f1_text,
                   const std::string& f2_text) {
    const BuiltinSpace b = load_space(opt);
    const int d = b.space.dim();
    const MaxAffine f = FunctionParser(f_text, d).parse();
    const MaxAffine f1 = FunctionParser(f1_text, d).parse();
    const MaxAffine f2 = FunctionParser(f2_text, d).parse();
    const FnGridProbe probe = make_probe(b.space, opt.radius, std::min(opt.density, 17), 500);
    const auto pairs = sample_pairs(b.space, opt.radius, 5000, opt.seed);
    const auto cert =
        verify_min_decomposition(b.space, f.as_fn(), f1.as_fn(), f2.as_fn(), probe, pairs);
    emit_json(opt, "min_decomposition.json", min_decomposition_to_json(cert));
    return cert.valid ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Horofunction boundary computations for finite-dimensional normed spaces"};
    app.add_option("--ball", opt.ball_path, "ball spec JSON file");
    app.add_option("--builtin", opt.builtin, "builtin space: linf, l1, euclid-m, example2, example3");
    app.add_option("--dim", opt.dim, "dimension for linf/l1 builtins");
    app.add_option("--m", opt.m, "circle discretization");
    app.add_option("--radius", opt.radius, "probe radius");
    app.add_option("--density", opt.density, "probe grid points per axis");
    app.add_option("--quasi", opt.quasi, "probe quasi-random sample count");
    app.add_option("--seed", opt.seed, "seed for sampled pairs");
    app.add_option("--out", opt.out_dir, "output directory (default: stdout)");
    app.add_option("--format", opt.format, "json|csv");
    app.add_flag("--gnuplot", opt.gnuplot, "also emit plot-ready columns");
    app.add_flag("--full-vertex-enum", opt.force_vertex_enum,
                 "force primal vertex enumeration in dual-ball");

    auto* dual_ball = app.add_subcommand("dual-ball", "emit the ball and its dual ball");
    auto* faces = app.add_subcommand("faces", "emit the dual ball's face lattice");

    std::string function_text, direction_text;
    auto* classify = app.add_subcommand("classify", "classify a function or a ray limit");
    classify->add_option("--function", function_text, "max-affine expression, e.g. \"max(x-w,x+w,x+z)\"");
    classify->add_option("--direction", direction_text, "ray direction, e.g. \"1,0\"");

    auto* limit_ray = app.add_subcommand("limit-ray", "follow phi along a ray");
    std::string ray_direction;
    limit_ray->add_option("--direction", ray_direction, "ray direction")->required();

    auto* almost = app.add_subcommand("almost-geodesic", "build and verify an almost-geodesic");
    int face_index = 0, n_points = 2000;
    std::string p_text;
    almost->add_option("--face-index", face_index, "index into the face list")->required();
    almost->add_option("--p", p_text, "base point p (comma separated)");
    almost->add_option("--n", n_points, "number of points");

    auto* closure = app.add_subcommand("check-closure", "closure of the extreme-set family");

    auto* verify_min = app.add_subcommand("verify-min", "check a 1-Lipschitz min decomposition");
    std::string vm_f, vm_f1, vm_f2;
    verify_min->add_option("--function", vm_f, "the function")->required();
    verify_min->add_option("--f1", vm_f1, "first function")->required();
    verify_min->add_option("--f2", vm_f2, "second function")->required();

    app.require_subcommand(1);
    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(dual_ball)) return cmd_dual_ball(opt);
        if (app.got_subcommand(faces)) return cmd_faces(opt);
        if (app.got_subcommand(classify)) return cmd_classify(opt, function_text, direction_text);
        if (app.got_subcommand(limit_ray)) return cmd_limit_ray(opt, ray_direction);
        if (app.got_subcommand(almost))
            return cmd_almost_geodesic(opt, face_index, p_text, n_points);
        if (app.got_subcommand(closure)) return cmd_check_closure(opt);
        if (app.got_subcommand(verify_min)) return cmd_verify_min(opt, vm_f, vm_f1, vm_f2);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
