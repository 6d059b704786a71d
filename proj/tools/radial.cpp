#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "radial/io.hpp"

using namespace radial;
using io::Json;

namespace {

enum Exit { kPass = 0, kInputError = 1, kNonStrict = 2, kFail = 3 };

// Bad user input: reported on stderr with the offending field, exit 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<double> radii;
    std::vector<double> weights;
    std::string input;
    std::string output;
    std::string render;
    bool strict = false;
    bool paper_faithful = false;
    std::uint64_t seed = 0;
    std::uint64_t budget = 10000;
    std::size_t grid = 0;
    std::optional<double> rel_eps;
    std::optional<double> abs_floor;
};

bool is_input_error(ErrorCode c)
{
    switch (c) {
    case ErrorCode::InvalidRadius:
    case ErrorCode::TooFewPoints:
    case ErrorCode::RadiiNotDistinct:
    case ErrorCode::RepetitionTooHigh:
    case ErrorCode::WeightOutOfRange:
    case ErrorCode::NonUnitInput:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::LengthMismatch:
        return true;
    default:
        return false;
    }
}

Tolerance tolerance_of(const Options& o)
{
    Tolerance tol;
    if (const char* env = std::getenv("RADIAL_CONVEX_TOL")) {
        std::istringstream in(env);
        double v = 0.0;
        if (!(in >> v) || !(in >> std::ws).eof())
            throw InputError("RADIAL_CONVEX_TOL: not a number: '" + std::string(env) + "'");
        tol.rel_eps = v;
    }
    if (o.rel_eps) tol.rel_eps = *o.rel_eps;
    if (o.abs_floor) tol.abs_floor = *o.abs_floor;
    try {
        validate(tol);
    } catch (const Error& e) {
        throw InputError(std::string("tolerance: ") + e.what());
    }
    return tol;
}

Json read_document(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("input: cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InputError("input: " + std::string(e.what()));
    }
}

std::vector<double> number_list(const Json& doc, const std::string& field)
{
    if (!doc.contains(field)) throw InputError(field + ": missing");
    const Json& a = doc.at(field);
    if (!a.is_array()) throw InputError(field + ": expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_number()) throw InputError(field + "[" + std::to_string(i) + "]: not a number");
        out.push_back(a[i].get<double>());
    }
    return out;
}

// Values from the inline flag, or from `field` of the input document.
std::vector<double> values_of(const Options& o, const std::vector<double>& inline_values, const std::string& field)
{
    if (!inline_values.empty()) return inline_values;
    if (o.input.empty()) throw InputError(field + ": give --" + field + " or --input");
    return number_list(read_document(o.input), field);
}

RadiiSet radii_set(const std::vector<double>& values)
{
    try {
        return RadiiSet(values);
    } catch (const Error& e) {
        throw InputError(std::string("radii: ") + e.what());
    }
}

Json header(const std::string& mode, const Options& o, const Tolerance& tol)
{
    return {{"mode", mode}, {"seed", o.seed}, {"tolerance", io::to_json(tol)}};
}

void check_render(const Options& o, const std::string& ext)
{
    if (o.render.empty()) return;
    if (o.render.size() < ext.size() || o.render.compare(o.render.size() - ext.size(), ext.size(), ext) != 0)
        throw InputError("render: this mode writes " + ext + " files");
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

void emit(const Options& o, const Json& doc)
{
    const std::string text = io::dump(doc);
    if (o.output.empty())
        std::cout << text;
    else
        write_file(o.output, text);
}

int exit_for(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return kPass;
    case Verdict::PassNonStrict: return kNonStrict;
    case Verdict::Fail: return kFail;
    }
    return kFail;
}

// Construction failures that are not input errors still produce a document.
int emit_failure(const Options& o, Json doc, const Error& e)
{
    doc["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    emit(o, doc);
    return kFail;
}

int run_construct2d(const Options& o)
{
    const Tolerance tol = tolerance_of(o);
    check_render(o, ".svg");
    const std::vector<double> values = values_of(o, o.radii, "radii");
    const RadiiSet radii = radii_set(values);
    Json doc = header("construct2d", o, tol);
    doc["radii"] = values;
    doc["strict"] = o.strict;
    Configuration2D c;
    try {
        if (radii.all_distinct()) {
            c = construct_distinct_2d(radii);
            if (o.strict) c = strictify_distinct_2d(c, tol);
        } else {
            c = construct_repeated_2d(radii);
            if (o.strict) c = strictify_repeated_2d(c, tol);
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::RepetitionTooHigh)
            throw InputError("radii: a radius repeats more than 4 times; no planar construction is known. "
                             "Search with `radial probe --radii ...` instead");
        if (is_input_error(e.code())) throw InputError(std::string("radii: ") + e.what());
        return emit_failure(o, doc, e);
    }
    const VerificationReport rep = verify(c, tol);
    doc.update(io::configuration_document(c, rep));
    emit(o, doc);
    if (!o.render.empty()) write_file(o.render, io::to_svg(c));
    return exit_for(rep.verdict);
}

int run_construct3d(const Options& o)
{
    const Tolerance tol = tolerance_of(o);
    check_render(o, ".off");
    const std::vector<double> values = values_of(o, o.radii, "radii");
    const RadiiSet radii = radii_set(values);
    Json doc = header("construct3d", o, tol);
    doc["radii"] = values;
    doc["strict"] = o.strict;
    doc["paper_faithful"] = o.paper_faithful;
    Configuration3D c;
    try {
        if (o.paper_faithful)
            c = construct_layered_3d(radii, LayeredMode::PaperFaithful);
        else if (radii.all_distinct())
            c = construct_distinct_3d(radii);
        else
            c = construct_layered_3d(radii, LayeredMode::Robust);
        if (o.strict) c = strictify_3d(c, tol);
    } catch (const Error& e) {
        if (is_input_error(e.code())) throw InputError(std::string("radii: ") + e.what());
        return emit_failure(o, doc, e);
    }
    const VerificationReport rep = verify(c, tol);
    doc.update(io::configuration_document(c, rep));
    emit(o, doc);
    if (!o.render.empty()) write_file(o.render, io::to_off(c, tol));
    return exit_for(rep.verdict);
}

int run_slvd(const Options& o)
{
    const Tolerance tol = tolerance_of(o);
    if (!o.render.empty()) throw InputError("render: slvd has no rendering");
    Json doc = header("slvd", o, tol);
    SphericalCircleSet circles;
    std::optional<Configuration3D> placed;
    try {
        if (o.weights.empty() && !o.input.empty() && read_document(o.input).contains("centers")) {
            // Explicit circles: check them as given.
            const Json in = read_document(o.input);
            circles.weights = number_list(in, "weights");
            const Json& cs = in.at("centers");
            if (!cs.is_array()) throw InputError("centers: expected an array of [x, y, z]");
            for (std::size_t i = 0; i < cs.size(); ++i) {
                if (!cs[i].is_array() || cs[i].size() != 3)
                    throw InputError("centers[" + std::to_string(i) + "]: expected [x, y, z]");
                circles.centers.push_back({cs[i][0].get<double>(), cs[i][1].get<double>(), cs[i][2].get<double>()});
            }
        } else {
            const GeneratorPlacement g = place_generators(values_of(o, o.weights, "weights"));
            circles = g.circles;
            placed = g.configuration;
        }
        doc["weights"] = circles.weights;
        const DualPointSet duals = dual_points(circles, tol);
        Json centers = Json::array(), dj = Json::array();
        for (const Point3& p : circles.centers) centers.push_back(io::to_json(p));
        for (const Point3& p : duals.duals) dj.push_back(io::to_json(p));
        doc["centers"] = centers;
        doc["duals"] = dj;
        std::vector<double> radii;
        for (double w : circles.weights) radii.push_back(weight_to_radius(w));
        std::vector<std::size_t> identity(radii.size());
        for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
        doc["report"] = io::to_json(verify_configuration(duals.duals, RadiiSet(radii), tol, identity));
        const EmptinessReport cells = check_nonemptiness(circles, tol);
        doc["cells"] = io::to_json(cells);
        if (o.grid > 0) doc["sampling"] = io::to_json(sample_cells(circles, o.grid));
        if (placed) doc["meta"] = io::to_json(placed->meta);
        emit(o, doc);
        if (cells.count(CellVerdict::Empty) > 0 || !cells.cross_check_agrees) return kFail;
        return cells.count(CellVerdict::Borderline) > 0 ? kNonStrict : kPass;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::WeightOutOfRange) throw InputError(std::string("weights: ") + e.what());
        if (e.code() == ErrorCode::NonUnitInput) throw InputError(std::string("centers: ") + e.what());
        if (is_input_error(e.code())) throw InputError(std::string("weights: ") + e.what());
        return emit_failure(o, doc, e);
    }
}

int run_verify(const Options& o)
{
    const Tolerance tol = tolerance_of(o);
    if (o.input.empty()) throw InputError("input: verify needs --input");
    const Json in = read_document(o.input);
    const std::string radii_field = in.contains("radii") ? "radii" : "vertex_radii";
    const std::vector<double> values = number_list(in, radii_field);
    if (!in.contains("points") || !in.at("points").is_array()) throw InputError("points: missing");
    const Json& pts = in.at("points");
    if (pts.empty()) throw InputError("points: empty");
    const std::size_t dim = pts[0].is_array() ? pts[0].size() : 0;
    if (dim != 2 && dim != 3) throw InputError("points[0]: expected 2 or 3 coordinates");
    std::vector<Point2> p2;
    std::vector<Point3> p3;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string name = "points[" + std::to_string(i) + "]";
        if (!pts[i].is_array() || pts[i].size() != dim)
            throw InputError(name + ": " + to_string(ErrorCode::DimensionMismatch) + ", expected " +
                             std::to_string(dim) + " coordinates");
        for (const Json& x : pts[i])
            if (!x.is_number()) throw InputError(name + ": not a number");
        if (dim == 2)
            p2.push_back({pts[i][0].get<double>(), pts[i][1].get<double>()});
        else
            p3.push_back({pts[i][0].get<double>(), pts[i][1].get<double>(), pts[i][2].get<double>()});
    }
    std::vector<std::size_t> assignment;
    if (in.contains("radius_assignment") && radii_field == "radii")
        assignment = in.at("radius_assignment").get<std::vector<std::size_t>>();
    // vertex_radii are already per point.
    if (radii_field == "vertex_radii")
        for (std::size_t i = 0; i < values.size(); ++i) assignment.push_back(i);
    const RadiiSet radii = radii_set(values);
    VerificationReport rep;
    try {
        rep = dim == 2 ? verify_configuration(p2, radii, tol, assignment)
                       : verify_configuration(p3, radii, tol, assignment);
    } catch (const Error& e) {
        throw InputError(std::string(e.code() == ErrorCode::LengthMismatch ? "points: " : "input: ") + e.what());
    }
    Json doc = header("verify", o, tol);
    doc["radii"] = values;
    doc["points"] = pts;
    doc["report"] = io::to_json(rep);
    emit(o, doc);
    return exit_for(rep.verdict);
}

int run_probe(const Options& o)
{
    const Tolerance tol = tolerance_of(o);
    check_render(o, ".svg");
    const std::vector<double> values = values_of(o, o.radii, "radii");
    const RadiiSet radii = radii_set(values);
    ProbeOutcome out;
    try {
        out = probe_conjecture_2d(radii, o.budget, o.seed, tol);
    } catch (const Error& e) {
        throw InputError(std::string("radii: ") + e.what());
    }
    Json doc = header("probe", o, tol);
    doc["radii"] = values;
    doc["budget"] = o.budget;
    doc["found"] = out.found;
    doc["iterations"] = out.iterations;
    doc["budget_exhausted"] = out.budget_exhausted;
    doc["best_score"] = out.best_score;
    if (out.configuration) {
        doc.update(io::configuration_document(*out.configuration, verify(*out.configuration, tol)));
        if (!o.render.empty()) write_file(o.render, io::to_svg(*out.configuration));
    }
    emit(o, doc);
    return out.found ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Convex configurations with prescribed distances from the origin"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--input,-i", o.input, "JSON document with the input fields");
        sub->add_option("--output,-o", o.output, "Write the result document here instead of stdout");
        sub->add_option("--seed", o.seed, "Random seed");
        sub->add_option("--rel-eps", o.rel_eps, "Relative tolerance (overrides RADIAL_CONVEX_TOL)");
        sub->add_option("--abs-floor", o.abs_floor, "Absolute tolerance floor");
    };

    CLI::App* c2 = app.add_subcommand("construct2d", "Planar configuration for the given radii");
    common(c2);
    c2->add_option("--radii,-r", o.radii, "Comma separated radii")->delimiter(',');
    c2->add_flag("--strict", o.strict, "Strictify so every point is a vertex");
    c2->add_option("--render", o.render, "SVG drawing of the result");

    CLI::App* c3 = app.add_subcommand("construct3d", "Spatial configuration for the given radii");
    common(c3);
    c3->add_option("--radii,-r", o.radii, "Comma separated radii")->delimiter(',');
    c3->add_flag("--strict", o.strict, "Strictify a paper-faithful grid");
    c3->add_flag("--paper-faithful", o.paper_faithful, "Cone grid with shared longitudes");
    c3->add_option("--render", o.render, "OFF mesh of the hull");

    CLI::App* sl = app.add_subcommand("slvd", "Spherical Laguerre cells from weights");
    common(sl);
    sl->add_option("--weights,-w", o.weights, "Comma separated weights in radians")->delimiter(',');
    sl->add_option("--grid", o.grid, "Also sample this many lattice points (0: off)");

    CLI::App* ve = app.add_subcommand("verify", "Verify points against radii");
    common(ve);

    CLI::App* pr = app.add_subcommand("probe", "Randomised search for a planar configuration");
    common(pr);
    pr->add_option("--radii,-r", o.radii, "Comma separated radii")->delimiter(',');
    pr->add_option("--budget", o.budget, "Iteration budget");
    pr->add_option("--render", o.render, "SVG drawing of a found configuration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (c2->parsed()) return run_construct2d(o);
        if (c3->parsed()) return run_construct3d(o);
        if (sl->parsed()) return run_slvd(o);
        if (ve->parsed()) return run_verify(o);
        return run_probe(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return kInputError;
    } catch (const Json::exception& e) {
        std::cerr << "error: input: " << e.what() << '\n';
        return kInputError;
    }
}
