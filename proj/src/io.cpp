#include "radial/io.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "radial/hull.hpp"

namespace radial::io {

namespace {

std::string fmt(const char* spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

template <class P>
Json points_json(const std::vector<P>& pts)
{
    Json a = Json::array();
    for (const P& p : pts) a.push_back(to_json(p));
    return a;
}

}  // namespace

Json to_json(Point2 p) { return Json::array({p.x, p.y}); }

Json to_json(Point3 p) { return Json::array({p.x, p.y, p.z}); }

Json to_json(const Tolerance& tol) { return {{"rel_eps", tol.rel_eps}, {"abs_floor", tol.abs_floor}}; }

Json to_json(const VerificationReport& rep)
{
    Json classes = Json::array();
    for (PointClass c : rep.classifications) classes.push_back(to_string(c));
    return {
        {"verdict", to_string(rep.verdict)},
        {"reason", to_string(rep.reason)},
        {"strict", rep.strict},
        {"origin_inside", rep.origin_inside},
        {"degenerate", rep.degenerate},
        {"max_residual", rep.max_residual()},
        {"radius_residuals", rep.radius_residuals},
        {"classifications", classes},
    };
}

Json to_json(const PlanarMeta& m)
{
    return {
        {"construction", to_string(m.construction)},
        {"chord", m.chord},
        {"gamma", m.gamma},
        {"zeta", m.zeta},
        {"theta", m.theta},
        {"turn_budget", m.turn_budget},
        {"outward_bend", m.outward_bend},
        {"strictified", m.strictified},
    };
}

Json to_json(const SpatialMeta& m)
{
    Json layers = Json::array();
    for (const LayerPlacement& l : m.layers)
        layers.push_back({
            {"radius", l.radius},
            {"z", l.z},
            {"ring", l.ring},
            {"bottom", l.bottom},
            {"first", l.first},
            {"azimuths", l.azimuths},
        });
    return {
        {"construction", to_string(m.construction)},
        {"mode", to_string(m.mode)},
        {"apex", to_json(m.apex)},
        {"half_angle", m.half_angle},
        {"epsilon", m.epsilon},
        {"gamma", m.gamma},
        {"reference_layer", m.reference_layer},
        {"sphere_center_z", m.sphere_center_z},
        {"sphere_radius", m.sphere_radius},
        {"strictified", m.strictified},
        {"layers", layers},
    };
}

Json to_json(const EmptinessReport& rep)
{
    Json verdicts = Json::array();
    for (CellVerdict v : rep.verdicts) verdicts.push_back(to_string(v));
    Json out = {{"method", to_string(rep.method)}, {"verdicts", verdicts}};
    if (!rep.cross_check.empty()) {
        Json cc = Json::array();
        for (CellVerdict v : rep.cross_check) cc.push_back(to_string(v));
        out["feasibility"] = cc;
        out["feasibility_agrees"] = rep.cross_check_agrees;
    }
    if (!rep.margins.empty()) out["margins"] = rep.margins;
    if (!rep.sample_counts.empty()) out["sample_counts"] = rep.sample_counts;
    return out;
}

Json configuration_document(const Configuration2D& c, const VerificationReport& rep)
{
    return {
        {"points", points_json(c.vertices)},
        {"vertex_radii", c.vertex_radii},
        {"radius_assignment", c.radius_assignment},
        {"report", to_json(rep)},
        {"meta", to_json(c.meta)},
    };
}

Json configuration_document(const Configuration3D& c, const VerificationReport& rep)
{
    return {
        {"points", points_json(c.vertices)},
        {"vertex_radii", c.vertex_radii},
        {"radius_assignment", c.radius_assignment},
        {"report", to_json(rep)},
        {"meta", to_json(c.meta)},
    };
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string to_svg(const Configuration2D& c)
{
    double r_max = 0.0;
    for (double r : c.vertex_radii) r_max = std::max(r_max, r);
    if (r_max <= 0.0) r_max = 1.0;
    const double half = 500.0, s = 0.9 * half / r_max;
    auto x = [&](double v) { return fmt("%.6f", half + s * v); };
    auto y = [&](double v) { return fmt("%.6f", half - s * v); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
    out << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
    const std::set<double> radii(c.vertex_radii.begin(), c.vertex_radii.end());
    for (double r : radii)
        out << "<circle cx=\"500\" cy=\"500\" r=\"" << fmt("%.6f", s * r)
            << "\" fill=\"none\" stroke=\"#9aa\" stroke-width=\"1\"/>\n";
    out << "<polygon points=\"";
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        out << (i ? " " : "") << x(c.vertices[i].x) << ',' << y(c.vertices[i].y);
    out << "\" fill=\"none\" stroke=\"#124\" stroke-width=\"2\"/>\n";
    for (const Point2& p : c.vertices)
        out << "<circle cx=\"" << x(p.x) << "\" cy=\"" << y(p.y) << "\" r=\"4\" fill=\"#124\"/>\n";
    out << "<path d=\"M490 500 H510 M500 490 V510\" stroke=\"#c20\" stroke-width=\"2\"/>\n";
    out << "</svg>\n";
    return out.str();
}

std::string to_off(const Configuration3D& c, const Tolerance& tol)
{
    std::vector<Facet3> facets;
    try {
        facets = convex_hull(c.vertices, tol).facets;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateHull && e.code() != ErrorCode::TooFewPoints) throw;
    }
    std::ostringstream out;
    out << "OFF\n" << c.vertices.size() << ' ' << facets.size() << " 0\n";
    for (const Point3& p : c.vertices)
        out << fmt("%.17g", p.x) << ' ' << fmt("%.17g", p.y) << ' ' << fmt("%.17g", p.z) << '\n';
    for (const Facet3& f : facets) out << "3 " << f.v[0] << ' ' << f.v[1] << ' ' << f.v[2] << '\n';
    return out.str();
}

}  // namespace radial::io
