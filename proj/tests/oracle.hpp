#pragma once

// Brute-force reference classifiers used only by the tests. They enumerate
// simplices and supporting lines/planes directly and share no code with the
// hull-based classification in the library.

#include <vector>

#include "radial/hull.hpp"

namespace oracle {

using radial::Point2;
using radial::Point3;
using radial::PointClass;

inline double scale_of(std::initializer_list<double> xs)
{
    double m = 0.0;
    for (double x : xs) m = std::max(m, x);
    return m;
}

// p lies in triangle abc (closed, within eps scaled by magnitudes).
inline bool in_triangle(Point2 p, Point2 a, Point2 b, Point2 c, double eps)
{
    const double area = radial::cross(b - a, c - a);
    if (std::abs(area) <= eps * radial::norm(b - a) + 1e-300) return false;
    const double s = area > 0 ? 1.0 : -1.0;
    const double d1 = s * radial::cross(b - a, p - a) / radial::norm(b - a);
    const double d2 = s * radial::cross(c - b, p - b) / radial::norm(c - b);
    const double d3 = s * radial::cross(a - c, p - c) / radial::norm(a - c);
    return d1 >= -eps && d2 >= -eps && d3 >= -eps;
}

inline bool on_segment(Point2 p, Point2 a, Point2 b, double eps)
{
    const Point2 d = b - a;
    const double len = radial::norm(d);
    if (len <= eps) return radial::norm(p - a) <= eps;
    const double t = radial::dot(p - a, d) / (len * len);
    if (t < -eps / len || t > 1 + eps / len) return false;
    return std::abs(radial::cross(d, p - a)) / len <= eps;
}

inline bool on_segment(Point3 p, Point3 a, Point3 b, double eps)
{
    const Point3 d = b - a;
    const double len = radial::norm(d);
    if (len <= eps) return radial::norm(p - a) <= eps;
    const double t = radial::dot(p - a, d) / (len * len);
    if (t < -eps / len || t > 1 + eps / len) return false;
    return radial::norm(radial::cross(d, p - a)) / len <= eps;
}

inline bool in_triangle(Point3 p, Point3 a, Point3 b, Point3 c, double eps)
{
    const Point3 n = radial::cross(b - a, c - a);
    const double nn = radial::norm(n);
    if (nn <= 1e-300) return false;
    const Point3 u = (1.0 / nn) * n;
    if (std::abs(radial::dot(u, p - a)) > eps) return false;
    const double e1 = radial::dot(u, radial::cross(b - a, p - a)) / radial::norm(b - a);
    const double e2 = radial::dot(u, radial::cross(c - b, p - b)) / radial::norm(c - b);
    const double e3 = radial::dot(u, radial::cross(a - c, p - c)) / radial::norm(a - c);
    return e1 >= -eps && e2 >= -eps && e3 >= -eps;
}

inline bool in_tetrahedron(Point3 p, Point3 a, Point3 b, Point3 c, Point3 d, double eps)
{
    const double vol = radial::dot(radial::cross(b - a, c - a), d - a);
    if (std::abs(vol) <= 1e-300) return false;
    const Point3 q[4] = {a, b, c, d};
    static constexpr int faces[4][4] = {{1, 2, 3, 0}, {0, 3, 2, 1}, {0, 1, 3, 2}, {0, 2, 1, 3}};
    for (const auto& f : faces) {
        Point3 n = radial::cross(q[f[1]] - q[f[0]], q[f[2]] - q[f[0]]);
        const double nn = radial::norm(n);
        if (nn <= 1e-300) return false;
        n = (1.0 / nn) * n;
        // Orient so the opposite vertex is on the positive side.
        if (radial::dot(n, q[f[3]] - q[f[0]]) < 0) n = -1.0 * n;
        if (radial::dot(n, p - q[f[0]]) < -eps) return false;
    }
    return true;
}

// Extreme iff p is not within a segment/triangle of the other points.
inline std::vector<PointClass> classify(const std::vector<Point2>& pts, double rel_eps = 1e-9)
{
    const std::size_t n = pts.size();
    double scale = 0.0;
    for (const auto& p : pts) scale = std::max(scale, radial::norm(p));
    const double eps = rel_eps * scale;
    std::vector<PointClass> out(n, PointClass::StrictVertex);
    for (std::size_t i = 0; i < n; ++i) {
        bool covered = false;
        for (std::size_t a = 0; a < n && !covered; ++a) {
            if (a == i) continue;
            for (std::size_t b = a + 1; b < n && !covered; ++b) {
                if (b == i) continue;
                if (on_segment(pts[i], pts[a], pts[b], eps)) covered = true;
                for (std::size_t c = b + 1; c < n && !covered; ++c)
                    if (c != i && in_triangle(pts[i], pts[a], pts[b], pts[c], eps)) covered = true;
            }
            if (radial::norm(pts[i] - pts[a]) <= eps) covered = true;
        }
        if (!covered) continue;
        // On the boundary iff some line through two points supports the set and contains p.
        out[i] = PointClass::Interior;
        for (std::size_t a = 0; a < n && out[i] == PointClass::Interior; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b || radial::norm(pts[b] - pts[a]) <= eps) continue;
                const Point2 d = pts[b] - pts[a];
                const double len = radial::norm(d);
                if (std::abs(radial::cross(d, pts[i] - pts[a])) / len > eps) continue;
                bool support = true;
                for (const auto& q : pts)
                    if (radial::cross(d, q - pts[a]) / len > eps) { support = false; break; }
                if (support) { out[i] = PointClass::BoundaryNonVertex; break; }
            }
    }
    return out;
}

inline std::vector<PointClass> classify(const std::vector<Point3>& pts, double rel_eps = 1e-9)
{
    const std::size_t n = pts.size();
    double scale = 0.0;
    for (const auto& p : pts) scale = std::max(scale, radial::norm(p));
    const double eps = rel_eps * scale;
    std::vector<PointClass> out(n, PointClass::StrictVertex);
    for (std::size_t i = 0; i < n; ++i) {
        bool covered = false;
        for (std::size_t a = 0; a < n && !covered; ++a) {
            if (a == i) continue;
            if (radial::norm(pts[i] - pts[a]) <= eps) covered = true;
            for (std::size_t b = a + 1; b < n && !covered; ++b) {
                if (b == i) continue;
                if (on_segment(pts[i], pts[a], pts[b], eps)) covered = true;
                for (std::size_t c = b + 1; c < n && !covered; ++c) {
                    if (c == i) continue;
                    if (in_triangle(pts[i], pts[a], pts[b], pts[c], eps)) covered = true;
                    for (std::size_t d = c + 1; d < n && !covered; ++d)
                        if (d != i && in_tetrahedron(pts[i], pts[a], pts[b], pts[c], pts[d], eps))
                            covered = true;
                }
            }
        }
        if (!covered) continue;
        out[i] = PointClass::Interior;
        for (std::size_t a = 0; a < n && out[i] == PointClass::Interior; ++a)
            for (std::size_t b = a + 1; b < n && out[i] == PointClass::Interior; ++b)
                for (std::size_t c = b + 1; c < n; ++c) {
                    Point3 nrm = radial::cross(pts[b] - pts[a], pts[c] - pts[a]);
                    const double nn = radial::norm(nrm);
                    if (nn <= 1e-300) continue;
                    nrm = (1.0 / nn) * nrm;
                    if (std::abs(radial::dot(nrm, pts[i] - pts[a])) > eps) continue;
                    bool above = false, below = false;
                    for (const auto& q : pts) {
                        const double s = radial::dot(nrm, q - pts[a]);
                        if (s > eps) above = true;
                        if (s < -eps) below = true;
                    }
                    if (!(above && below)) { out[i] = PointClass::BoundaryNonVertex; break; }
                }
    }
    return out;
}

}  // namespace oracle
