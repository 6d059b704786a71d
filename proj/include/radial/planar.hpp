#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radial/geometry.hpp"
#include "radial/radii.hpp"
#include "radial/verify.hpp"

namespace radial {

enum class PlanarConstruction { Distinct, RepeatedFourChords, RepeatedTwoChords, Regular };

const char* to_string(PlanarConstruction c);

struct PlanarMeta {
    PlanarConstruction construction = PlanarConstruction::Distinct;
    double chord = 0.0;       // chord offset c from the origin
    double gamma = 0.0;       // distinct case: angle at O between the chord's end points
    double zeta = 0.0;
    double theta = 0.0;       // gamma - zeta
    double turn_budget = 0.0; // total turning spent by the last strictify, radians
    bool outward_bend = false; // strictify bent the chord from its inner end
    bool strictified = false;
};

/// Points in counterclockwise order; vertices[i] realises
/// `vertex_radii[i]`, which is input radius number `radius_assignment[i]`.
struct Configuration2D {
    std::vector<Point2> vertices;
    std::vector<double> vertex_radii;
    std::vector<std::size_t> radius_assignment;
    PlanarMeta meta;
};

/// Verification of a configuration against its own radii and assignment.
VerificationReport verify(const Configuration2D& config, const Tolerance& tol = {});

/// Chord construction for pairwise distinct radii. Collinear chord points
/// are allowed; the origin lies strictly inside.
/// Throws TooFewPoints (n < 3) or RadiiNotDistinct.
Configuration2D construct_distinct_2d(const RadiiSet& radii);

/// Bends the chord of a distinct-radii construction so every point becomes
/// a strict vertex. Radii are preserved exactly up to rounding.
/// Throws BudgetUnderflow when the construction leaves no angular slack.
Configuration2D strictify_distinct_2d(const Configuration2D& config, const Tolerance& tol = {});

/// Two-chord construction for radii repeated at most four times.
/// Throws RepetitionTooHigh or TooFewPoints.
Configuration2D construct_repeated_2d(const RadiiSet& radii);

/// Per-chain bending of a repeated-radii construction.
Configuration2D strictify_repeated_2d(const Configuration2D& config, const Tolerance& tol = {});

struct ProbeOutcome {
    bool found = false;
    std::optional<Configuration2D> configuration;
    std::uint64_t iterations = 0;
    bool budget_exhausted = false;
    double best_score = 0.0;
};

/// Randomised multi-start search for a strictly convex configuration. A
/// negative outcome is not a proof of non-existence.
ProbeOutcome probe_conjecture_2d(const RadiiSet& radii, std::uint64_t budget, std::uint64_t seed,
                                 const Tolerance& tol = {});

}  // namespace radial
