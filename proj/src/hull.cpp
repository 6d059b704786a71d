#include "radial/hull.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_map>

namespace radial {

const char* to_string(PointClass c)
{
    switch (c) {
    case PointClass::StrictVertex: return "StrictVertex";
    case PointClass::BoundaryNonVertex: return "BoundaryNonVertex";
    case PointClass::Interior: return "Interior";
    }
    return "Unknown";
}

std::size_t Classification::count(PointClass c) const
{
    return static_cast<std::size_t>(std::count(classes.begin(), classes.end(), c));
}

namespace {

template <class P>
double max_norm(std::span<const P> points)
{
    double m = 0.0;
    for (const P& p : points) m = std::max(m, norm(p));
    return m;
}

template <class P>
void require_finite(std::span<const P> points)
{
    for (const P& p : points)
        if (!is_finite(p)) throw std::invalid_argument("point coordinates must be finite");
}

// Signed distance of `p` to the right of the directed line a->b.
double right_distance(Point2 a, Point2 b, Point2 p)
{
    const Point2 d = b - a;
    return cross(p - a, d) / norm(d);
}

// How far the line a-b can move at p's foot point, plus p itself, when every
// point moves by rel_eps times its own norm. Scales point-versus-line tests
// so that a far-away endpoint does not swamp a small local configuration.
double reach(Point2 a, Point2 b, Point2 p)
{
    const Point2 d = b - a;
    const double len2 = dot(d, d);
    const double t = len2 > 0.0 ? dot(p - a, d) / len2 : 0.0;
    return std::abs(1.0 - t) * norm(a) + std::abs(t) * norm(b) + norm(p);
}

// Same for the plane through a, b, c: barycentric weights of p's foot point.
double reach(Point3 a, Point3 b, Point3 c, Point3 p)
{
    const Point3 n = cross(b - a, c - a);
    const double area2 = dot(n, n);
    if (area2 == 0.0) return std::max({norm(a), norm(b), norm(c), norm(p)});
    const Point3 foot = p - (dot(n, p - a) / area2) * n;
    const double la = dot(n, cross(b - foot, c - foot)) / area2;
    const double lb = dot(n, cross(c - foot, a - foot)) / area2;
    const double lc = 1.0 - la - lb;
    return std::abs(la) * norm(a) + std::abs(lb) * norm(b) + std::abs(lc) * norm(c) + norm(p);
}

// ---------------------------------------------------------------------------
// 2D: monotone chain.

std::vector<std::size_t> monotone_chain(std::span<const Point2> pts, const Tolerance& tol)
{
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
        if (pts[a].y != pts[b].y) return pts[a].y < pts[b].y;
        return a < b;
    });

    // Pops the middle point when it is not to the right of o->b by more than the threshold.
    auto keeps_turn = [&](std::size_t o, std::size_t a, std::size_t b) {
        const Point2 ob = pts[b] - pts[o];
        const double len = norm(ob);
        if (len == 0.0) return false;
        return cross(pts[a] - pts[o], ob) / len > tol.threshold(reach(pts[o], pts[b], pts[a]));
    };

    std::vector<std::size_t> hull;
    hull.reserve(2 * pts.size());
    for (std::size_t idx : order) {
        while (hull.size() >= 2 && !keeps_turn(hull[hull.size() - 2], hull.back(), idx))
            hull.pop_back();
        hull.push_back(idx);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
        while (hull.size() >= lower && !keeps_turn(hull[hull.size() - 2], hull.back(), *it))
            hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();
    return hull;
}

// Collinear within tolerance of the line through the two most distant extreme points.
bool collinear(std::span<const Point2> pts, const Tolerance& tol)
{
    const double thr = tol.threshold(max_norm(pts));
    std::size_t a = 0, b = 0;
    double best = -1.0;
    std::size_t ext[4] = {0, 0, 0, 0};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].x < pts[ext[0]].x) ext[0] = i;
        if (pts[i].x > pts[ext[1]].x) ext[1] = i;
        if (pts[i].y < pts[ext[2]].y) ext[2] = i;
        if (pts[i].y > pts[ext[3]].y) ext[3] = i;
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            const double d = norm(pts[ext[i]] - pts[ext[j]]);
            if (d > best) { best = d; a = ext[i]; b = ext[j]; }
        }
    if (best <= thr) return true;
    for (const Point2& p : pts)
        if (std::abs(right_distance(pts[a], pts[b], p)) > thr) return false;
    return true;
}

// ---------------------------------------------------------------------------
// 3D: quickhull with per-facet tolerance.

struct QFace {
    std::array<int, 3> v{};
    std::array<int, 3> adj{-1, -1, -1};  // neighbour across edge v[i] -> v[i+1]
    Point3 n;
    double off = 0.0;
    std::vector<int> outside;
    int far = -1;
    double far_d = 0.0;
    bool alive = true;
    int visit = -1;
};

class QuickHull {
public:
    QuickHull(std::span<const Point3> pts, const Tolerance& tol)
        : pts_(pts), tol_(tol), norms_(pts.size())
    {
        for (std::size_t i = 0; i < pts.size(); ++i) norms_[i] = norm(pts[i]);
    }

    Hull3 run();

    // Indices of the initial simplex; set after run() throws DegenerateHull too.
    std::array<int, 3> plane_seed{-1, -1, -1};
    bool collinear_input = false;

private:
    double distance(const QFace& f, int p) const { return dot(f.n, pts_[p]) - f.off; }
    double threshold(const QFace& f, int p) const
    {
        return tol_.threshold(reach(pts_[f.v[0]], pts_[f.v[1]], pts_[f.v[2]], pts_[p]));
    }
    int make_face(int a, int b, int c);
    void assign(int p, std::span<const int> candidates);
    void add_point(int face);

    std::span<const Point3> pts_;
    Tolerance tol_;
    std::vector<double> norms_;
    std::vector<QFace> faces_;
    int iteration_ = 0;
};

int QuickHull::make_face(int a, int b, int c)
{
    QFace f;
    f.v = {a, b, c};
    const Point3 pa = pts_[a], pb = pts_[b], pc = pts_[c];
    Point3 n = cross(pb - pa, pc - pa);
    const double len = norm(n);
    f.n = len > 0.0 ? (1.0 / len) * n : Point3{0, 0, 0};
    f.off = (dot(f.n, pa) + dot(f.n, pb) + dot(f.n, pc)) / 3.0;
    faces_.push_back(std::move(f));
    return static_cast<int>(faces_.size()) - 1;
}

void QuickHull::assign(int p, std::span<const int> candidates)
{
    int best = -1;
    double best_d = 0.0;
    for (int fi : candidates) {
        const QFace& f = faces_[fi];
        const double d = distance(f, p);
        if (d > 0.0 && (best < 0 || d > best_d) && d > threshold(f, p)) {
            best = fi;
            best_d = d;
        }
    }
    if (best < 0) return;
    QFace& f = faces_[best];
    f.outside.push_back(p);
    if (f.far < 0 || best_d > f.far_d) {
        f.far = p;
        f.far_d = best_d;
    }
}

void QuickHull::add_point(int start)
{
    const int eye = faces_[start].far;
    ++iteration_;

    std::vector<int> visible{start};
    faces_[start].visit = iteration_;
    struct Edge {
        int face;
        int edge;
    };
    std::vector<Edge> horizon;
    for (std::size_t k = 0; k < visible.size(); ++k) {
        const int fi = visible[k];
        for (int e = 0; e < 3; ++e) {
            const int h = faces_[fi].adj[e];
            QFace& hf = faces_[h];
            if (hf.visit == iteration_) continue;
            const double d = distance(hf, eye);
            if (d > 0.0 && d > threshold(hf, eye)) {
                hf.visit = iteration_;
                visible.push_back(h);
            }
        }
    }
    for (int fi : visible)
        for (int e = 0; e < 3; ++e)
            if (faces_[faces_[fi].adj[e]].visit != iteration_) horizon.push_back({fi, e});

    // Order the horizon into a single cycle keyed by edge start vertex.
    std::unordered_map<int, std::size_t> by_start;
    by_start.reserve(horizon.size() * 2);
    for (std::size_t i = 0; i < horizon.size(); ++i) {
        const QFace& f = faces_[horizon[i].face];
        if (!by_start.emplace(f.v[horizon[i].edge], i).second)
            throw std::logic_error("quickhull: horizon is not a simple cycle");
    }
    std::vector<Edge> cycle;
    cycle.reserve(horizon.size());
    std::vector<char> seen(horizon.size(), 0);
    std::size_t cur = 0;
    for (std::size_t step = 0; step < horizon.size(); ++step) {
        if (seen[cur]) throw std::logic_error("quickhull: horizon has several loops");
        seen[cur] = 1;
        cycle.push_back(horizon[cur]);
        const QFace& f = faces_[horizon[cur].face];
        const int end = f.v[(horizon[cur].edge + 1) % 3];
        auto it = by_start.find(end);
        if (it == by_start.end()) throw std::logic_error("quickhull: open horizon");
        cur = it->second;
    }
    if (cur != 0) throw std::logic_error("quickhull: horizon has several loops");

    std::vector<int> orphans;
    for (int fi : visible) {
        QFace& f = faces_[fi];
        f.alive = false;
        for (int p : f.outside)
            if (p != eye) orphans.push_back(p);
        f.outside.clear();
        f.outside.shrink_to_fit();
    }

    std::vector<int> created;
    created.reserve(cycle.size());
    for (const Edge& he : cycle) {
        const QFace& old = faces_[he.face];
        const int a = old.v[he.edge];
        const int b = old.v[(he.edge + 1) % 3];
        const int neighbour = old.adj[he.edge];
        const int nf = make_face(a, b, eye);
        faces_[nf].adj[0] = neighbour;
        QFace& nb = faces_[neighbour];
        for (int e = 0; e < 3; ++e)
            if (nb.v[e] == b && nb.v[(e + 1) % 3] == a) nb.adj[e] = nf;
        created.push_back(nf);
    }
    const std::size_t m = created.size();
    for (std::size_t i = 0; i < m; ++i) {
        faces_[created[i]].adj[1] = created[(i + 1) % m];
        faces_[created[i]].adj[2] = created[(i + m - 1) % m];
    }
    for (int p : orphans) assign(p, created);
}

Hull3 QuickHull::run()
{
    const int n = static_cast<int>(pts_.size());
    const double gthr = tol_.threshold(*std::max_element(norms_.begin(), norms_.end()));

    int ext[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < n; ++i) {
        const Point3& p = pts_[i];
        if (p.x < pts_[ext[0]].x) ext[0] = i;
        if (p.x > pts_[ext[1]].x) ext[1] = i;
        if (p.y < pts_[ext[2]].y) ext[2] = i;
        if (p.y > pts_[ext[3]].y) ext[3] = i;
        if (p.z < pts_[ext[4]].z) ext[4] = i;
        if (p.z > pts_[ext[5]].z) ext[5] = i;
    }
    int i0 = 0, i1 = 0;
    double best = -1.0;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            const double d = norm(pts_[ext[a]] - pts_[ext[b]]);
            if (d > best) { best = d; i0 = ext[a]; i1 = ext[b]; }
        }
    if (best <= gthr) {
        collinear_input = true;
        throw Error(ErrorCode::DegenerateHull, "all points coincide");
    }

    const Point3 axis = normalized(pts_[i1] - pts_[i0]);
    int i2 = -1;
    best = -1.0;
    for (int i = 0; i < n; ++i) {
        const Point3 r = pts_[i] - pts_[i0];
        const double d = norm(r - dot(r, axis) * axis);
        if (d > best) { best = d; i2 = i; }
    }
    if (best <= gthr) {
        collinear_input = true;
        throw Error(ErrorCode::DegenerateHull, "points are collinear");
    }
    plane_seed = {i0, i1, i2};

    const Point3 pn = normalized(cross(pts_[i1] - pts_[i0], pts_[i2] - pts_[i0]));
    int i3 = -1;
    best = -1.0;
    for (int i = 0; i < n; ++i) {
        const double d = std::abs(dot(pn, pts_[i] - pts_[i0]));
        if (d > best) { best = d; i3 = i; }
    }
    if (best <= gthr) throw Error(ErrorCode::DegenerateHull, "points are coplanar");

    // Initial tetrahedron with outward orientation.
    if (dot(pn, pts_[i3] - pts_[i0]) > 0.0) std::swap(i1, i2);
    faces_.reserve(static_cast<std::size_t>(8 * n));
    const int f0 = make_face(i0, i1, i2);
    const int f1 = make_face(i0, i3, i1);
    const int f2 = make_face(i1, i3, i2);
    const int f3 = make_face(i2, i3, i0);
    faces_[f0].adj = {f1, f2, f3};
    faces_[f1].adj = {f3, f2, f0};
    faces_[f2].adj = {f1, f3, f0};
    faces_[f3].adj = {f2, f1, f0};

    const int initial[4] = {f0, f1, f2, f3};
    for (int i = 0; i < n; ++i)
        if (i != i0 && i != i1 && i != i2 && i != i3) assign(i, initial);

    for (std::size_t fi = 0; fi < faces_.size(); ++fi) {
        if (!faces_[fi].alive || faces_[fi].outside.empty()) continue;
        add_point(static_cast<int>(fi));
    }

    Hull3 hull;
    std::vector<char> used(pts_.size(), 0);
    for (const QFace& f : faces_) {
        if (!f.alive) continue;
        Facet3 out;
        for (int k = 0; k < 3; ++k) {
            out.v[k] = static_cast<std::size_t>(f.v[k]);
            used[f.v[k]] = 1;
        }
        out.normal = f.n;
        out.offset = f.off;
        hull.facets.push_back(out);
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (used[i]) hull.vertices.push_back(i);
    return hull;
}

// Marks exact or near-duplicate points as non-strict.
template <class P>
void demote_duplicates(std::span<const P> pts, const Tolerance& tol, std::vector<PointClass>& classes)
{
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pts[a].x < pts[b].x; });
    for (std::size_t i = 0; i < order.size(); ++i) {
        const P& p = pts[order[i]];
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            const P& q = pts[order[j]];
            const double thr = tol.threshold(std::max(norm(p), norm(q)));
            if (q.x - p.x > thr) break;
            if (norm(q - p) <= thr) {
                for (std::size_t k : {order[i], order[j]})
                    if (classes[k] == PointClass::StrictVertex)
                        classes[k] = PointClass::BoundaryNonVertex;
            }
        }
    }
}

// Classification inside a line: the two extreme points are vertices.
template <class P>
std::vector<PointClass> classify_on_line(std::span<const P> pts, const Tolerance& tol)
{
    std::size_t a = 0, b = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size() && pts.size() <= 64; ++j) {
            const double d = norm(pts[i] - pts[j]);
            if (d > best) { best = d; a = i; b = j; }
        }
    if (pts.size() > 64) {
        // Far point from an arbitrary start, then far point from that one.
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (norm(pts[i] - pts[0]) > best) { best = norm(pts[i] - pts[0]); a = i; }
        best = -1.0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (norm(pts[i] - pts[a]) > best) { best = norm(pts[i] - pts[a]); b = i; }
    }
    std::vector<PointClass> classes(pts.size(), PointClass::Interior);
    if (best > tol.threshold(max_norm(pts))) {
        classes[a] = PointClass::StrictVertex;
        classes[b] = PointClass::StrictVertex;
    }
    demote_duplicates(pts, tol, classes);
    return classes;
}

std::vector<PointClass> classify_planar(std::span<const Point2> pts, const Hull2& hull,
                                        const Tolerance& tol)
{
    std::vector<PointClass> classes(pts.size(), PointClass::Interior);
    std::vector<char> on_hull(pts.size(), 0);
    const std::size_t h = hull.cycle.size();
    for (std::size_t i = 0; i < h; ++i) {
        const std::size_t prev = hull.cycle[(i + h - 1) % h];
        const std::size_t cur = hull.cycle[i];
        const std::size_t next = hull.cycle[(i + 1) % h];
        on_hull[cur] = 1;
        const double d = right_distance(pts[prev], pts[next], pts[cur]);
        const double scale = reach(pts[prev], pts[next], pts[cur]);
        classes[cur] = d > tol.threshold(scale) ? PointClass::StrictVertex
                                                : PointClass::BoundaryNonVertex;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (on_hull[i]) continue;
        for (std::size_t e = 0; e < h; ++e) {
            const Point2 a = pts[hull.cycle[e]];
            const Point2 b = pts[hull.cycle[(e + 1) % h]];
            if (right_distance(a, b, pts[i]) >= -tol.threshold(reach(a, b, pts[i]))) {
                classes[i] = PointClass::BoundaryNonVertex;
                break;
            }
        }
    }
    demote_duplicates(pts, tol, classes);
    return classes;
}

// Orthonormal in-plane coordinates of points lying (nearly) on a plane.
std::vector<Point2> project_to_plane(std::span<const Point3> pts, Point3 a, Point3 b, Point3 c)
{
    const Point3 e1 = normalized(b - a);
    const Point3 n = cross(b - a, c - a);
    const Point3 e2 = normalized(cross(n, e1));
    std::vector<Point2> out;
    out.reserve(pts.size());
    for (const Point3& p : pts) out.push_back({dot(p, e1), dot(p, e2)});
    return out;
}

// Whether `v` is strictly outside the convex hull of its hull neighbours.
bool strictly_outside_link(Point3 v, std::span<const Point3> link, const Tolerance& tol)
{
    const double vn = norm(v);
    if (link.size() >= 4) {
        try {
            const Hull3 lh = convex_hull(link, tol);
            double worst = -std::numeric_limits<double>::infinity();
            bool outside = false;
            for (const Facet3& f : lh.facets) {
                const double scale = reach(link[f.v[0]], link[f.v[1]], link[f.v[2]], v);
                const double d = dot(f.normal, v) - f.offset;
                worst = std::max(worst, d);
                if (d > tol.threshold(scale)) outside = true;
            }
            return outside;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DegenerateHull) throw;
        }
    }
    // Flat or tiny link: compare against its supporting plane, or its line.
    double scale = vn;
    for (const Point3& w : link) scale = std::max(scale, norm(w));
    const double thr = tol.threshold(scale);
    std::size_t a = 0, b = 0;
    double best = -1.0;
    if (link.size() <= 64) {
        for (std::size_t i = 0; i < link.size(); ++i)
            for (std::size_t j = i + 1; j < link.size(); ++j) {
                const double d = norm(link[i] - link[j]);
                if (d > best) { best = d; a = i; b = j; }
            }
    } else {
        // Far point from an arbitrary start, then far point from that one.
        for (std::size_t i = 0; i < link.size(); ++i)
            if (norm(link[i] - link[0]) > best) { best = norm(link[i] - link[0]); a = i; }
        best = -1.0;
        for (std::size_t i = 0; i < link.size(); ++i)
            if (norm(link[i] - link[a]) > best) { best = norm(link[i] - link[a]); b = i; }
    }
    if (best <= thr) return norm(v - link[0]) > thr;
    const Point3 axis = normalized(link[b] - link[a]);
    std::size_t c = a;
    best = -1.0;
    for (std::size_t i = 0; i < link.size(); ++i) {
        const Point3 r = link[i] - link[a];
        const double d = norm(r - dot(r, axis) * axis);
        if (d > best) { best = d; c = i; }
    }
    const Point3 rv = v - link[a];
    if (best <= thr) return norm(rv - dot(rv, axis) * axis) > thr;
    const Point3 pn = normalized(cross(link[b] - link[a], link[c] - link[a]));
    return std::abs(dot(pn, rv)) > tol.threshold(reach(link[a], link[b], link[c], v));
}

std::vector<PointClass> classify_spatial(std::span<const Point3> pts, const Hull3& hull,
                                         const Tolerance& tol)
{
    std::vector<PointClass> classes(pts.size(), PointClass::Interior);
    std::vector<std::vector<std::size_t>> neighbours(pts.size());
    for (const Facet3& f : hull.facets)
        for (int k = 0; k < 3; ++k) {
            neighbours[f.v[k]].push_back(f.v[(k + 1) % 3]);
            neighbours[f.v[k]].push_back(f.v[(k + 2) % 3]);
        }
    std::vector<Point3> link;
    for (std::size_t v : hull.vertices) {
        auto& nb = neighbours[v];
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        link.clear();
        for (std::size_t w : nb) link.push_back(pts[w]);
        classes[v] = strictly_outside_link(pts[v], link, tol) ? PointClass::StrictVertex
                                                              : PointClass::BoundaryNonVertex;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!neighbours[i].empty()) continue;
        for (const Facet3& f : hull.facets) {
            const double d = dot(f.normal, pts[i]) - f.offset;
            if (d >= -tol.threshold(reach(pts[f.v[0]], pts[f.v[1]], pts[f.v[2]], pts[i]))) {
                classes[i] = PointClass::BoundaryNonVertex;
                break;
            }
        }
    }
    demote_duplicates(pts, tol, classes);
    return classes;
}

}  // namespace

Hull2 convex_hull(std::span<const Point2> points, const Tolerance& tol)
{
    validate(tol);
    require_finite(points);
    if (points.size() < 3) throw Error(ErrorCode::TooFewPoints, "2D hull needs at least 3 points");
    if (collinear(points, tol)) throw Error(ErrorCode::DegenerateHull, "points are collinear");
    Hull2 hull;
    hull.cycle = monotone_chain(points, tol);
    if (hull.cycle.size() < 3) throw Error(ErrorCode::DegenerateHull, "points are collinear");
    return hull;
}

Hull3 convex_hull(std::span<const Point3> points, const Tolerance& tol)
{
    validate(tol);
    require_finite(points);
    if (points.size() < 4) throw Error(ErrorCode::TooFewPoints, "3D hull needs at least 4 points");
    QuickHull qh(points, tol);
    return qh.run();
}

Classification classify_points(std::span<const Point2> points, const Tolerance& tol)
{
    validate(tol);
    require_finite(points);
    if (points.size() < 3) throw Error(ErrorCode::TooFewPoints, "need at least 3 points");
    Classification out;
    if (collinear(points, tol)) {
        out.degenerate = true;
        out.classes = classify_on_line(points, tol);
        return out;
    }
    const Hull2 hull = convex_hull(points, tol);
    out.classes = classify_planar(points, hull, tol);
    return out;
}

Classification classify_points(std::span<const Point3> points, const Tolerance& tol)
{
    validate(tol);
    require_finite(points);
    if (points.size() < 4) throw Error(ErrorCode::TooFewPoints, "need at least 4 points");
    Classification out;
    QuickHull qh(points, tol);
    try {
        const Hull3 hull = qh.run();
        out.classes = classify_spatial(points, hull, tol);
        return out;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateHull) throw;
    }
    out.degenerate = true;
    if (qh.collinear_input) {
        out.classes = classify_on_line(points, tol);
        return out;
    }
    const auto seed = qh.plane_seed;
    const std::vector<Point2> flat =
        project_to_plane(points, points[seed[0]], points[seed[1]], points[seed[2]]);
    out.classes = classify_points(std::span<const Point2>(flat), tol).classes;
    return out;
}

// The origin's clearance from a hull edge or facet is compared against how far
// that line or plane can move near the origin when each endpoint is perturbed
// by rel_eps of its own norm: sum_i |lambda_i| |v_i| for the barycentric
// weights lambda_i of the origin's foot point. Far-away endpoints thus do not
// swamp the clearance of a small configuration near the origin.
bool origin_interior(const Hull2& hull, std::span<const Point2> points, const Tolerance& tol)
{
    const std::size_t h = hull.cycle.size();
    if (h < 3) return false;
    for (std::size_t e = 0; e < h; ++e) {
        const Point2 a = points[hull.cycle[e]];
        const Point2 b = points[hull.cycle[(e + 1) % h]];
        const Point2 d = b - a;
        const double len2 = dot(d, d);
        if (len2 == 0.0) return false;
        const double clearance = cross(a, b) / std::sqrt(len2);  // > 0 when O is left of a->b
        const double t = -dot(a, d) / len2;
        const double reach = std::abs(1.0 - t) * norm(a) + std::abs(t) * norm(b);
        if (clearance <= tol.threshold(reach)) return false;
    }
    return true;
}

bool origin_interior(const Hull3& hull, std::span<const Point3> points, const Tolerance& tol)
{
    if (hull.facets.size() < 4) return false;
    for (const Facet3& f : hull.facets) {
        const Point3 a = points[f.v[0]], b = points[f.v[1]], c = points[f.v[2]];
        const Point3 n = cross(b - a, c - a);
        const double area2 = dot(n, n);
        if (area2 == 0.0) return false;
        const double clearance = dot(a, cross(b, c)) / std::sqrt(area2);
        const Point3 foot = (dot(a, n) / area2) * n;
        const double la = dot(n, cross(b - foot, c - foot)) / area2;
        const double lb = dot(n, cross(c - foot, a - foot)) / area2;
        const double lc = 1.0 - la - lb;
        const double reach = std::abs(la) * norm(a) + std::abs(lb) * norm(b) + std::abs(lc) * norm(c);
        if (clearance <= tol.threshold(reach)) return false;
    }
    return true;
}

}  // namespace radial
