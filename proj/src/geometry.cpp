#include "radial/geometry.hpp"

#include <numbers>

namespace radial {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NonUnitInput: return "NonUnitInput";
    case ErrorCode::DegenerateHull: return "DegenerateHull";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::RadiiNotDistinct: return "RadiiNotDistinct";
    case ErrorCode::RepetitionTooHigh: return "RepetitionTooHigh";
    case ErrorCode::BudgetUnderflow: return "BudgetUnderflow";
    case ErrorCode::DegenerateGrid: return "DegenerateGrid";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidRadius: return "InvalidRadius";
    }
    return "Unknown";
}

void validate(const Tolerance& tol)
{
    if (!(tol.rel_eps > 0.0) || !std::isfinite(tol.rel_eps))
        throw std::invalid_argument("tolerance rel_eps must be positive and finite");
    if (!(tol.abs_floor >= 0.0) || !std::isfinite(tol.abs_floor))
        throw std::invalid_argument("tolerance abs_floor must be non-negative and finite");
}

void require_unit(Point3 p, const Tolerance& tol)
{
    const double n = norm(p);
    if (!std::isfinite(n) || std::abs(n - 1.0) > tol.threshold(1.0))
        throw Error(ErrorCode::NonUnitInput,
                    "expected a unit vector, got norm " + std::to_string(n));
}

double geodesic_distance(Point3 p, Point3 q, const Tolerance& tol)
{
    require_unit(p, tol);
    require_unit(q, tol);
    const double c = std::clamp(dot(p, q), -1.0, 1.0);
    return std::acos(c);
}

}  // namespace radial
