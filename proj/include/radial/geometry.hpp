#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace radial {

enum class ErrorCode {
    NonUnitInput,
    DegenerateHull,
    TooFewPoints,
    RadiiNotDistinct,
    RepetitionTooHigh,
    BudgetUnderflow,
    DegenerateGrid,
    WeightOutOfRange,
    DimensionMismatch,
    LengthMismatch,
    InvalidRadius,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Point2&, const Point2&) = default;
};

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Point3 operator*(double s, Point3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend Point3 operator*(Point3 a, double s) { return {s * a.x, s * a.y, s * a.z}; }
    friend bool operator==(const Point3&, const Point3&) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

// z-component of the 2D cross product; positive when b is counterclockwise of a.
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

inline Point3 cross(Point3 a, Point3 b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double norm(Point3 a) { return std::hypot(a.x, a.y, a.z); }

template <class P>
P normalized(P a)
{
    return (1.0 / norm(a)) * a;
}

inline bool is_finite(Point2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }
inline bool is_finite(Point3 a)
{
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// Rotates `p` counterclockwise about the origin by `angle` radians.
inline Point2 rotate(Point2 p, double angle)
{
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

/// Relative geometric tolerance.
///
/// Every sidedness test compares a signed distance against
/// `max(rel_eps * S, abs_floor)`. For a point against a line or plane, S is
/// how far that line or plane can move at the point's foot when every point
/// moves by its own norm (barycentric-weighted norms plus the point's norm).
/// Radii may span several orders of magnitude, so the scale is taken per
/// predicate rather than from the whole input.
struct Tolerance {
    double rel_eps = 1e-9;
    double abs_floor = 0.0;

    double threshold(double scale) const { return std::max(rel_eps * scale, abs_floor); }
};

void validate(const Tolerance& tol);

/// Great-circle distance between two unit vectors, in radians.
double geodesic_distance(Point3 p, Point3 q, const Tolerance& tol = {});

/// Throws NonUnitInput unless |p| = 1 within a scaled tolerance.
void require_unit(Point3 p, const Tolerance& tol);

}  // namespace radial
