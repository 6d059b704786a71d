#include "radial/slvd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "radial/hull.hpp"

namespace radial {

const char* to_string(CellVerdict v)
{
    switch (v) {
    case CellVerdict::NonEmpty: return "NonEmpty";
    case CellVerdict::Empty: return "Empty";
    case CellVerdict::Borderline: return "Borderline";
    }
    return "?";
}

const char* to_string(EmptinessMethod m)
{
    switch (m) {
    case EmptinessMethod::DualHull: return "DualHull";
    case EmptinessMethod::Feasibility: return "Feasibility";
    case EmptinessMethod::Sampling: return "Sampling";
    }
    return "?";
}

std::size_t EmptinessReport::count(CellVerdict v) const
{
    return static_cast<std::size_t>(std::count(verdicts.begin(), verdicts.end(), v));
}

namespace {

void check_weight(double w)
{
    if (!(w >= 0.0 && w < std::numbers::pi / 2))
        throw Error(ErrorCode::WeightOutOfRange, "weight " + std::to_string(w) + " is outside [0, pi/2)");
}

void check_unit(Point3 p, const Tolerance& tol)
{
    if (!is_finite(p) || std::abs(norm(p) - 1.0) > tol.threshold(1.0))
        throw Error(ErrorCode::NonUnitInput, "point is not on the unit sphere");
}

void validate(const SphericalCircleSet& circles, const Tolerance& tol)
{
    if (circles.centers.size() != circles.weights.size())
        throw Error(ErrorCode::LengthMismatch, "centers and weights differ in length");
    if (circles.centers.size() < 4) throw Error(ErrorCode::TooFewPoints, "need at least 4 circles");
    for (double w : circles.weights) check_weight(w);
    for (const Point3& p : circles.centers) check_unit(p, tol);
}

// Dense tableau simplex for: maximise c.x subject to A x <= b, x >= 0, with
// b >= 0 so the origin is a feasible start. Bland's rule; returns the optimum.
double simplex_max(std::vector<std::vector<double>> a, std::vector<double> b, const std::vector<double>& c)
{
    const std::size_t m = a.size(), nv = c.size(), cols = nv + m;
    std::vector<std::vector<double>> t(m, std::vector<double>(cols + 1, 0.0));
    for (std::size_t r = 0; r < m; ++r) {
        std::copy(a[r].begin(), a[r].end(), t[r].begin());
        t[r][nv + r] = 1.0;
        t[r][cols] = b[r];
    }
    std::vector<double> z(cols + 1, 0.0);  // reduced costs; z[cols] is the objective
    for (std::size_t j = 0; j < nv; ++j) z[j] = c[j];
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) basis[r] = nv + r;

    constexpr double eps = 1e-12;
    for (std::size_t iter = 0; iter < 50 * (m + cols); ++iter) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (z[j] > eps) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = m;
        double best = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
            if (t[r][enter] <= eps) continue;
            const double ratio = t[r][cols] / t[r][enter];
            if (leave == m || ratio < best - eps || (ratio <= best + eps && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == m) return std::numeric_limits<double>::infinity();
        const double piv = t[leave][enter];
        for (double& v : t[leave]) v /= piv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leave || t[r][enter] == 0.0) continue;
            const double f = t[r][enter];
            for (std::size_t j = 0; j <= cols; ++j) t[r][j] -= f * t[leave][j];
        }
        const double f = z[enter];
        for (std::size_t j = 0; j <= cols; ++j) z[j] -= f * t[leave][j];
        basis[leave] = enter;
    }
    return -z[cols];
}

// Variables (x+, x-, t) with x = x+ - x- in [-1, 1]^3.
double cell_margin(const std::vector<Point3>& duals, std::size_t i)
{
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (std::size_t j = 0; j < duals.size(); ++j) {
        if (j == i) continue;
        const Point3 d = duals[i] - duals[j];
        const double len = norm(d);
        const Point3 u = len > 0.0 ? (1.0 / len) * d : Point3{0, 0, 0};
        // t - u.x <= 0
        a.push_back({-u.x, -u.y, -u.z, u.x, u.y, u.z, 1.0});
        b.push_back(0.0);
    }
    for (std::size_t k = 0; k < 6; ++k) {
        std::vector<double> row(7, 0.0);
        row[k] = 1.0;
        a.push_back(std::move(row));
        b.push_back(1.0);
    }
    return simplex_max(std::move(a), std::move(b), {0, 0, 0, 0, 0, 0, 1.0});
}

// Fibonacci lattice point k of n.
Point3 lattice_point(std::size_t k, std::size_t n)
{
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(n);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(k);
    return {r * std::cos(phi), r * std::sin(phi), z};
}

}  // namespace

double weight_to_radius(double w)
{
    check_weight(w);
    return 1.0 / std::cos(w);
}

double laguerre_proximity(Point3 center, double weight, Point3 p, const Tolerance& tol)
{
    check_weight(weight);
    check_unit(center, tol);
    check_unit(p, tol);
    return dot(p, center) / std::cos(weight);
}

DualPointSet dual_points(const SphericalCircleSet& circles, const Tolerance& tol)
{
    validate(circles, tol);
    DualPointSet out;
    for (std::size_t i = 0; i < circles.centers.size(); ++i)
        out.duals.push_back((1.0 / std::cos(circles.weights[i])) * circles.centers[i]);
    return out;
}

GeneratorPlacement place_generators(const std::vector<double>& weights)
{
    if (weights.size() < 4) throw Error(ErrorCode::TooFewPoints, "need at least 4 weights");
    std::vector<double> radii;
    for (double w : weights) radii.push_back(weight_to_radius(w));
    const RadiiSet set(radii);

    // The layered placement also for distinct radii: the bent planar chord of
    // construct_distinct_3d leaves cells too thin to sample.
    GeneratorPlacement g;
    g.configuration = construct_layered_3d(set, LayeredMode::Robust);
    const std::size_t n = weights.size();
    g.circles.centers.resize(n);
    g.circles.weights = weights;
    g.duals.duals.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Point3 v = g.configuration.vertices[k];
        const std::size_t i = g.configuration.radius_assignment[k];
        g.duals.duals[i] = v;
        g.circles.centers[i] = normalized(v);
    }
    return g;
}

EmptinessReport check_feasibility(const SphericalCircleSet& circles, const Tolerance& tol)
{
    const DualPointSet d = dual_points(circles, tol);
    EmptinessReport rep;
    rep.method = EmptinessMethod::Feasibility;
    for (std::size_t i = 0; i < d.duals.size(); ++i) {
        const double m = cell_margin(d.duals, i);
        rep.margins.push_back(m);
        rep.verdicts.push_back(m > tol.rel_eps ? CellVerdict::NonEmpty : CellVerdict::Empty);
    }
    return rep;
}

EmptinessReport check_nonemptiness(const SphericalCircleSet& circles, const Tolerance& tol)
{
    const DualPointSet d = dual_points(circles, tol);
    const Classification cls = classify_points(d.duals, tol);
    EmptinessReport rep;
    rep.method = EmptinessMethod::DualHull;
    for (PointClass c : cls.classes) {
        switch (c) {
        case PointClass::StrictVertex: rep.verdicts.push_back(CellVerdict::NonEmpty); break;
        case PointClass::BoundaryNonVertex: rep.verdicts.push_back(CellVerdict::Borderline); break;
        case PointClass::Interior: rep.verdicts.push_back(CellVerdict::Empty); break;
        }
    }
    const EmptinessReport feas = check_feasibility(circles, tol);
    rep.cross_check = feas.verdicts;
    rep.margins = feas.margins;
    for (std::size_t i = 0; i < rep.verdicts.size(); ++i)
        if (rep.verdicts[i] == CellVerdict::NonEmpty && rep.cross_check[i] != CellVerdict::NonEmpty)
            rep.cross_check_agrees = false;
    return rep;
}

EmptinessReport sample_cells(const SphericalCircleSet& circles, std::size_t grid)
{
    if (grid < 1000) throw Error(ErrorCode::TooFewPoints, "sampling needs a grid of at least 1000 points");
    const DualPointSet d = dual_points(circles);
    EmptinessReport rep;
    rep.method = EmptinessMethod::Sampling;
    rep.sample_counts.assign(d.duals.size(), 0);
    for (std::size_t k = 0; k < grid; ++k) {
        const Point3 p = lattice_point(k, grid);
        std::size_t best = 0;
        double best_v = dot(p, d.duals[0]);
        for (std::size_t i = 1; i < d.duals.size(); ++i) {
            const double v = dot(p, d.duals[i]);
            if (v > best_v) {
                best_v = v;
                best = i;
            }
        }
        ++rep.sample_counts[best];
    }
    for (std::size_t c : rep.sample_counts)
        rep.verdicts.push_back(c > 0 ? CellVerdict::NonEmpty : CellVerdict::Empty);
    return rep;
}

}  // namespace radial
