#pragma once

#include <cstddef>
#include <vector>

#include "radial/geometry.hpp"
#include "radial/spatial.hpp"

namespace radial {

/// Circles on the unit sphere: centre p_i and angular radius (weight) w_i.
struct SphericalCircleSet {
    std::vector<Point3> centers;
    std::vector<double> weights;  // radians, in [0, pi/2)
};

/// P*_i = p_i / cos(w_i), the pole of the plane carrying circle i.
struct DualPointSet {
    std::vector<Point3> duals;
};

enum class CellVerdict { NonEmpty, Empty, Borderline };
enum class EmptinessMethod { DualHull, Feasibility, Sampling };

const char* to_string(CellVerdict v);
const char* to_string(EmptinessMethod m);

struct EmptinessReport {
    EmptinessMethod method = EmptinessMethod::DualHull;
    std::vector<CellVerdict> verdicts;
    // DualHull only: the feasibility verdict for each cell and whether every
    // NonEmpty cell was confirmed by it.
    std::vector<CellVerdict> cross_check;
    bool cross_check_agrees = true;
    // Feasibility: largest t with (P*_i - P*_j)/|P*_i - P*_j| . x >= t for all
    // j, over x in [-1, 1]^3.
    std::vector<double> margins;
    // Sampling: lattice points won by each cell.
    std::vector<std::size_t> sample_counts;

    std::size_t count(CellVerdict v) const;
};

/// 1 / cos(w). Throws WeightOutOfRange unless 0 <= w < pi/2.
double weight_to_radius(double w);

/// cos(d(p, center)) / cos(w) = (p . center) / cos(w). Larger is closer.
/// Throws WeightOutOfRange, or NonUnitInput when p or center is off the sphere.
double laguerre_proximity(Point3 center, double weight, Point3 p, const Tolerance& tol = {});

DualPointSet dual_points(const SphericalCircleSet& circles, const Tolerance& tol = {});

struct GeneratorPlacement {
    SphericalCircleSet circles;  // circle i carries weights[i]
    DualPointSet duals;
    Configuration3D configuration;
};

/// Centres whose Laguerre cells are all non-empty: the duals are a strictly
/// convex configuration with radii 1 / cos(w_i).
/// Throws WeightOutOfRange or TooFewPoints (n < 4).
GeneratorPlacement place_generators(const std::vector<double>& weights);

/// Dual-hull verdicts (StrictVertex -> NonEmpty, BoundaryNonVertex ->
/// Borderline, Interior -> Empty), cross-checked cell by cell with
/// check_feasibility.
EmptinessReport check_nonemptiness(const SphericalCircleSet& circles, const Tolerance& tol = {});

/// Cell i has interior iff some direction x has x . P*_i > x . P*_j for all
/// j != i. Solved as a small linear program; NonEmpty iff the margin exceeds
/// tol.rel_eps, Empty otherwise.
EmptinessReport check_feasibility(const SphericalCircleSet& circles, const Tolerance& tol = {});

/// Assigns `grid` Fibonacci-lattice points to the circle of largest
/// proximity (ties go to the lower index). NonEmpty iff a cell wins a
/// point; zero hits are not a proof of emptiness. Throws TooFewPoints when
/// grid < 1000.
EmptinessReport sample_cells(const SphericalCircleSet& circles, std::size_t grid);

}  // namespace radial
