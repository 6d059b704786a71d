#include "radial/planar.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

namespace radial {

const char* to_string(PlanarConstruction c)
{
    switch (c) {
    case PlanarConstruction::Distinct: return "distinct-chord";
    case PlanarConstruction::RepeatedFourChords: return "repeated-four";
    case PlanarConstruction::RepeatedTwoChords: return "repeated-two";
    case PlanarConstruction::Regular: return "regular";
    }
    return "unknown";
}

namespace {

constexpr double kPi = std::numbers::pi;

// Half-open angle in [0, 2pi).
double polar_angle(Point2 p)
{
    const double a = std::atan2(p.y, p.x);
    return a < 0.0 ? a + 2.0 * kPi : a;
}

void sort_ccw(Configuration2D& c)
{
    std::vector<std::size_t> order(c.vertices.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return polar_angle(c.vertices[a]) < polar_angle(c.vertices[b]);
    });
    Configuration2D out;
    out.meta = c.meta;
    for (std::size_t i : order) {
        out.vertices.push_back(c.vertices[i]);
        out.vertex_radii.push_back(c.vertex_radii[i]);
        out.radius_assignment.push_back(c.radius_assignment[i]);
    }
    c = std::move(out);
}

double clamped_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

// Signed turning angle from direction a to direction b.
double turn_angle(Point2 a, Point2 b) { return std::atan2(cross(a, b), dot(a, b)); }

// Intersection of the ray from `origin` along unit `dir` with the circle of
// radius r about O, choosing the root closest to `hint`.
std::optional<Point2> ray_circle(Point2 origin, Point2 dir, double r, Point2 hint)
{
    const double b = dot(origin, dir);
    const double disc = b * b - (dot(origin, origin) - r * r);
    if (disc < 0.0) return std::nullopt;
    const double s = std::sqrt(disc);
    std::optional<Point2> best;
    double best_d = 0.0;
    for (double t : {-b - s, -b + s}) {
        if (t <= 0.0) continue;
        Point2 p = origin + t * dir;
        p = (r / norm(p)) * p;  // land exactly on the circle
        const double d = norm(p - hint);
        if (!best || d < best_d) {
            best = p;
            best_d = d;
        }
    }
    return best;
}

// Bends a chain of nearly collinear points, turning left by turns[j] at
// chain[j]. Each point is moved along its own circle onto the ray leaving its
// predecessor. The first two points stay fixed.
bool bend_chain(std::vector<Point2>& pts, const std::vector<double>& radii,
                std::span<const std::size_t> chain, std::span<const double> turns)
{
    for (std::size_t j = 2; j < chain.size(); ++j) {
        const Point2 a = pts[chain[j - 2]];
        const Point2 b = pts[chain[j - 1]];
        const Point2 dir = rotate(normalized(b - a), turns[j - 1]);
        const auto p = ray_circle(b, dir, radii[chain[j]], pts[chain[j]]);
        if (!p) return false;
        pts[chain[j]] = *p;
    }
    return true;
}

// Distance from O to the line through a and b.
double line_clearance(Point2 a, Point2 b) { return std::abs(cross(a, b)) / norm(b - a); }

struct BendPlan {
    std::vector<std::size_t> chain;
    std::vector<double> turns;  // signed, turns[j] applied at chain[j]
    double lambda = 0.0;        // planned deviation of each vertex per unit of reach
};

// Turn at each inner chain vertex, proportional to what that vertex needs to
// clear the tolerance: its perturbation reach (as in the hull predicates) over
// the harmonic spacing to its neighbours. The total is capped by
// `angle_budget`. Turning at a vertex before O's foot point lowers the rest of
// the line toward O by about turn times the distance to the foot; that drop is
// capped by half the line's clearance from O.
BendPlan plan_bend(const std::vector<Point2>& pts, const std::vector<double>& radii,
                   std::vector<std::size_t> chain, double angle_budget, double sign)
{
    BendPlan plan;
    const std::size_t m = chain.size();
    plan.turns.assign(m, 0.0);
    const Point2 u = normalized(pts[chain[1]] - pts[chain[0]]);
    double total = 0.0, drop = 0.0;
    for (std::size_t j = 1; j + 1 < m; ++j) {
        const Point2 prev = pts[chain[j - 1]], v = pts[chain[j]], next = pts[chain[j + 1]];
        const double a = norm(v - prev), b = norm(next - v);
        const double t = dot(v - prev, next - prev) / dot(next - prev, next - prev);
        const double reach = std::abs(1.0 - t) * norm(prev) + std::abs(t) * norm(next) + norm(v);
        const double w = reach * (a + b) / (a * b);
        plan.turns[j] = w;
        total += w;
        drop += w * std::max(0.0, -dot(v, u));
    }
    const double drop_budget = 0.5 * std::min(line_clearance(pts[chain[0]], pts[chain[1]]),
                                              angle_budget * radii[chain[m - 1]]);
    double lambda = total > 0.0 ? angle_budget / total : 0.0;
    if (drop > 0.0) lambda = std::min(lambda, drop_budget / drop);
    for (double& x : plan.turns) x *= sign * lambda;
    plan.lambda = lambda;
    plan.chain = std::move(chain);
    return plan;
}

using Finish = std::function<void(std::vector<Point2>&)>;

// Applies the plans with a small deviation that comfortably clears the
// tolerance, stepping down toward it; small turns keep the far ends of long
// chains away from their junctions. If none verifies, retries from each
// plan's full budget with halving scales. `finish` may re-place points that
// depend on the bent chains.
std::optional<std::vector<Point2>> bend_until_strict(const Configuration2D& config,
                                                     const std::vector<BendPlan>& plans,
                                                     const Tolerance& tol, double& spent,
                                                     const Finish& finish = {})
{
    Configuration2D trial = config;
    auto attempt = [&](auto&& scale_of) {
        trial.vertices = config.vertices;
        bool ok = true;
        spent = 0.0;
        for (const BendPlan& p : plans) {
            std::vector<double> turns = p.turns;
            const double f = scale_of(p);
            double sum = 0.0;
            for (double& x : turns) {
                x *= f;
                sum += std::abs(x);
            }
            spent = std::max(spent, sum);
            ok = ok && bend_chain(trial.vertices, config.vertex_radii, p.chain, turns);
        }
        if (ok && finish) finish(trial.vertices);
        return ok && verify(trial, tol).passed();
    };
    double start = 1e4 * tol.rel_eps;
    for (const BendPlan& p : plans) start = std::min(start, p.lambda);
    for (double lambda = start; lambda > tol.rel_eps; lambda *= 0.25)
        if (attempt([&](const BendPlan& p) { return lambda / p.lambda; })) return std::move(trial.vertices);
    for (double f = 1.0;; f *= 0.5) {
        double smallest = std::numeric_limits<double>::infinity();
        for (const BendPlan& p : plans) smallest = std::min(smallest, f * p.lambda);
        if (smallest <= start) break;
        if (attempt([&](const BendPlan&) { return f; })) return std::move(trial.vertices);
    }
    return std::nullopt;
}

Configuration2D regular_polygon(const RadiiSet& radii)
{
    Configuration2D c;
    const std::size_t n = radii.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double a = kPi / 2 + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
        c.vertices.push_back(radii[i] * Point2{std::cos(a), std::sin(a)});
        c.vertex_radii.push_back(radii[i]);
        c.radius_assignment.push_back(i);
    }
    c.meta.construction = PlanarConstruction::Regular;
    sort_ccw(c);
    return c;
}

}  // namespace

VerificationReport verify(const Configuration2D& config, const Tolerance& tol)
{
    std::vector<std::size_t> identity(config.vertices.size());
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    return verify_configuration(config.vertices, RadiiSet(config.vertex_radii), tol, identity);
}

Configuration2D construct_distinct_2d(const RadiiSet& radii)
{
    const std::size_t n = radii.size();
    if (n < 3) throw Error(ErrorCode::TooFewPoints, "need at least 3 radii in the plane");
    if (!radii.all_distinct()) throw Error(ErrorCode::RadiiNotDistinct, "radii are not distinct");

    const auto& layers = radii.layers();  // descending
    const double c = 0.5 * (layers[n - 1].value + layers[n - 2].value);

    Configuration2D cfg;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double r = layers[i].value;
        cfg.vertices.push_back({std::sqrt(r * r - c * c), c});
        cfg.vertex_radii.push_back(r);
        cfg.radius_assignment.push_back(layers[i].members.front());
    }
    const Point2 mid = 0.5 * (cfg.vertices.front() + cfg.vertices.back());
    const double rn = layers[n - 1].value;
    cfg.vertices.push_back((-rn / norm(mid)) * mid);
    cfg.vertex_radii.push_back(rn);
    cfg.radius_assignment.push_back(layers[n - 1].members.front());

    cfg.meta.construction = PlanarConstruction::Distinct;
    cfg.meta.chord = c;
    // Already counterclockwise: chord points right to left, then the closing point.
    return cfg;
}

Configuration2D strictify_distinct_2d(const Configuration2D& config, const Tolerance& tol)
{
    if (config.meta.construction != PlanarConstruction::Distinct)
        throw std::invalid_argument("strictify_distinct_2d expects a distinct-chord construction");
    Configuration2D out = config;
    const std::size_t n = config.vertices.size();
    if (n <= 3 || config.meta.strictified) {
        out.meta.strictified = true;
        return out;
    }

    const Point2 first = config.vertices[0];
    const Point2 last_chord = config.vertices[n - 2];
    const Point2 closing = config.vertices[n - 1];
    const Point2 mid = 0.5 * (first + last_chord);
    const double r1 = config.vertex_radii[0];
    const double rl = config.vertex_radii[n - 2];
    const double d1l = norm(first - last_chord);
    const double dnm = norm(closing - mid);
    const double dml = norm(mid - last_chord);
    const double gamma = clamped_acos((r1 * r1 + rl * rl - d1l * d1l) / (2.0 * r1 * rl));
    const double zeta = clamped_acos((dnm * dnm + rl * rl - dml * dml) / (2.0 * dnm * rl));
    const double theta = gamma - zeta;
    out.meta.gamma = gamma;
    out.meta.zeta = zeta;
    out.meta.theta = theta;
    if (!(theta > tol.rel_eps))
        throw Error(ErrorCode::BudgetUnderflow, "no angular slack: theta = " + std::to_string(theta));

    // First the literal perturbation: v1, v2 and the closing point stay, the
    // rest of the chord turns toward O within theta / 2.
    std::vector<std::size_t> chain(n - 1);
    std::iota(chain.begin(), chain.end(), std::size_t{0});
    double spent = 0.0;
    if (auto pts = bend_until_strict(
            config, {plan_bend(config.vertices, config.vertex_radii, chain, 0.5 * theta, 1.0)}, tol,
            spent)) {
        out.vertices = std::move(*pts);
        out.meta.turn_budget = spent;
        out.meta.strictified = true;
        return out;
    }

    // That drop is capped by the chord height. Bending from the inner end
    // outward has no such cap; the closing point is then re-placed by the
    // same midpoint rule.
    std::reverse(chain.begin(), chain.end());
    const double rn = config.vertex_radii[n - 1];
    const Finish close = [n, rn](std::vector<Point2>& pts) {
        const Point2 m = 0.5 * (pts[0] + pts[n - 2]);
        pts[n - 1] = (-rn / norm(m)) * m;
    };
    if (auto pts = bend_until_strict(
            config, {plan_bend(config.vertices, config.vertex_radii, chain, kPi / 8, -1.0)}, tol,
            spent, close)) {
        out.vertices = std::move(*pts);
        out.meta.turn_budget = spent;
        out.meta.outward_bend = true;
        out.meta.strictified = true;
        return out;
    }
    throw Error(ErrorCode::BudgetUnderflow, "could not bend the chord into strict position");
}

Configuration2D construct_repeated_2d(const RadiiSet& radii)
{
    const std::size_t n = radii.size();
    if (n < 3) throw Error(ErrorCode::TooFewPoints, "need at least 3 radii in the plane");
    const std::size_t mmax = radii.max_multiplicity();
    if (mmax > 4)
        throw Error(ErrorCode::RepetitionTooHigh,
                    "a radius is repeated " + std::to_string(mmax) +
                        " times; at most 4 are supported (try probe)");
    if (mmax == 1) return construct_distinct_2d(radii);

    const auto& layers = radii.layers();
    const std::size_t k = layers.size();
    if (k == 1 && mmax == 3) return regular_polygon(radii);

    Configuration2D cfg;
    auto place = [&](Point2 p, const Layer& layer, std::size_t slot) {
        cfg.vertices.push_back(p);
        cfg.vertex_radii.push_back(layer.value);
        cfg.radius_assignment.push_back(layer.members[slot]);
    };
    auto height = [](double r, double x) { return std::sqrt(r * r - x * x); };

    if (mmax == 4) {
        const double c = 0.5 * layers[k - 1].value;
        cfg.meta.construction = PlanarConstruction::RepeatedFourChords;
        cfg.meta.chord = c;
        for (const Layer& layer : layers) {
            const double y = height(layer.value, c);
            const Point2 quadrant[4] = {{c, y}, {-c, -y}, {-c, y}, {c, -y}};
            for (std::size_t s = 0; s < layer.multiplicity(); ++s) place(quadrant[s], layer, s);
        }
    } else {
        // One point per layer on x = c in the first quadrant; the rest on a
        // vertical chord through the far intersection of MO with the fullest circle.
        const double c = 0.25 * layers[k - 1].value;
        cfg.meta.construction = PlanarConstruction::RepeatedTwoChords;
        cfg.meta.chord = c;
        const Point2 top{c, height(layers.front().value, c)};
        const Point2 bottom{c, height(layers.back().value, c)};
        const Point2 mid = 0.5 * (top + bottom);
        std::size_t p = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (layers[j].multiplicity() > layers[p].multiplicity()) p = j;
        const Point2 m1 = (-layers[p].value / norm(mid)) * mid;
        const double x2 = m1.x;
        for (const Layer& layer : layers) {
            place({c, height(layer.value, c)}, layer, 0);
            const double y = height(layer.value, x2);
            if (layer.multiplicity() >= 2) place({x2, -y}, layer, 1);
            if (layer.multiplicity() >= 3) place({x2, y}, layer, 2);
        }
    }
    sort_ccw(cfg);
    return cfg;
}

Configuration2D strictify_repeated_2d(const Configuration2D& config, const Tolerance& tol)
{
    switch (config.meta.construction) {
    case PlanarConstruction::Distinct: return strictify_distinct_2d(config, tol);
    case PlanarConstruction::Regular: {
        Configuration2D out = config;
        out.meta.strictified = true;
        return out;
    }
    default: break;
    }
    Configuration2D out = config;
    if (config.meta.strictified) return out;

    const std::size_t n = config.vertices.size();
    const auto& v = config.vertices;
    // Right chord bottom to top, then left chord top to bottom: both contiguous ccw runs.
    std::vector<std::size_t> right, left;
    for (std::size_t i = 0; i < n; ++i) (v[i].x > 0.0 ? right : left).push_back(i);
    std::sort(right.begin(), right.end(), [&](auto a, auto b) { return v[a].y < v[b].y; });
    std::sort(left.begin(), left.end(), [&](auto a, auto b) { return v[a].y > v[b].y; });

    // A chord is held fixed at one consecutive pair and bent away from it in
    // both directions. Turns made before O's foot point lower the line toward
    // O, so the pair is tried at either end and at the smallest radius. A half
    // may spend a quarter of the angular slack at the junction it runs into.
    struct Option {
        std::vector<BendPlan> plans;
        double lambda = std::numeric_limits<double>::infinity();
    };
    std::vector<std::vector<Option>> options;
    for (auto* side : {&right, &left}) {
        const std::vector<std::size_t>& run = *side;
        const std::size_t m = run.size();
        if (m < 3) continue;
        const auto& other = side == &right ? left : right;
        const std::size_t after = other.empty() ? run.front() : other.front();
        const std::size_t before = other.empty() ? run.back() : other.back();
        const double end_slack = turn_angle(v[run[m - 1]] - v[run[m - 2]], v[after] - v[run[m - 1]]);
        const double start_slack = turn_angle(v[run[0]] - v[before], v[run[1]] - v[run[0]]);
        std::size_t inner = 0;
        for (std::size_t i = 1; i < m; ++i)
            if (config.vertex_radii[run[i]] < config.vertex_radii[run[inner]]) inner = i;
        inner = std::min(inner, m - 2);

        std::vector<Option> side_options;
        for (std::size_t k : {std::size_t{0}, inner, m - 2}) {
            if (std::any_of(side_options.begin(), side_options.end(),
                            [&](const Option& o) { return o.plans.front().chain[0] == run[k]; }))
                continue;
            Option opt;
            auto add = [&](std::vector<std::size_t> half, double slack, double sign) {
                if (half.size() < 3) return;
                BendPlan p = plan_bend(v, config.vertex_radii, std::move(half),
                                       0.25 * std::max(slack, 0.0), sign);
                opt.lambda = std::min(opt.lambda, p.lambda);
                opt.plans.push_back(std::move(p));
            };
            add({run.begin() + static_cast<std::ptrdiff_t>(k), run.end()}, end_slack, 1.0);
            add({run.rend() - static_cast<std::ptrdiff_t>(k + 2), run.rend()}, start_slack, -1.0);
            side_options.push_back(std::move(opt));
        }
        options.push_back(std::move(side_options));
    }
    if (options.empty()) {
        out.meta.strictified = true;
        return out;
    }

    std::vector<Option> combined = options[0];
    if (options.size() == 2) {
        combined.clear();
        for (const Option& a : options[0])
            for (const Option& b : options[1]) {
                Option ab = a;
                ab.plans.insert(ab.plans.end(), b.plans.begin(), b.plans.end());
                ab.lambda = std::min(a.lambda, b.lambda);
                combined.push_back(std::move(ab));
            }
    }
    std::stable_sort(combined.begin(), combined.end(),
                     [](const Option& a, const Option& b) { return a.lambda > b.lambda; });
    double spent = 0.0;
    for (const Option& opt : combined) {
        if (auto pts = bend_until_strict(config, opt.plans, tol, spent)) {
            out.vertices = std::move(*pts);
            out.meta.turn_budget = spent;
            out.meta.strictified = true;
            return out;
        }
    }
    throw Error(ErrorCode::BudgetUnderflow, "could not bend the chords into strict position");
}

namespace {

// Positive iff the angularly sorted polygon is strictly convex and surrounds O.
double convexity_score(const std::vector<double>& radii, const std::vector<double>& phi,
                       std::vector<std::size_t>& order, std::vector<Point2>& pts)
{
    const std::size_t n = radii.size();
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return phi[a] < phi[b]; });
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = order[i];
        pts[i] = radii[k] * Point2{std::cos(phi[k]), std::sin(phi[k])};
    }
    double score = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double gap = i + 1 < n ? phi[order[i + 1]] - phi[order[i]]
                                     : phi[order[0]] + 2.0 * kPi - phi[order[i]];
        score = std::min(score, (kPi - gap) / kPi);
        const Point2 e0 = pts[i] - pts[(i + n - 1) % n];
        const Point2 e1 = pts[(i + 1) % n] - pts[i];
        const double l = norm(e0) * norm(e1);
        if (l == 0.0) return -1.0;
        score = std::min(score, cross(e0, e1) / l);
    }
    return score;
}

double wrap(double a)
{
    a = std::fmod(a, 2.0 * kPi);
    return a < 0.0 ? a + 2.0 * kPi : a;
}

}  // namespace

ProbeOutcome probe_conjecture_2d(const RadiiSet& radii, std::uint64_t budget, std::uint64_t seed,
                                 const Tolerance& tol)
{
    const std::size_t n = radii.size();
    if (n < 3) throw Error(ErrorCode::TooFewPoints, "need at least 3 radii in the plane");
    const std::vector<double>& r = radii.values();

    ProbeOutcome outcome;
    outcome.best_score = -std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * kPi);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<std::size_t> order(n);
    std::vector<Point2> pts(n);
    std::vector<double> phi(n), cand(n);

    auto evaluate = [&](const std::vector<double>& angles) {
        ++outcome.iterations;
        return convexity_score(r, angles, order, pts);
    };
    auto try_accept = [&](const std::vector<double>& angles) -> bool {
        Configuration2D cfg;
        convexity_score(r, angles, order, pts);
        for (std::size_t i = 0; i < n; ++i) {
            cfg.vertices.push_back(pts[i]);
            cfg.vertex_radii.push_back(r[order[i]]);
            cfg.radius_assignment.push_back(order[i]);
        }
        cfg.meta.construction = PlanarConstruction::Regular;
        cfg.meta.strictified = true;
        if (!verify(cfg, tol).passed()) return false;
        outcome.found = true;
        outcome.configuration = std::move(cfg);
        return true;
    };

    bool first_start = true;
    while (outcome.iterations < budget) {
        // Start: equal spacing first, random angles afterwards.
        for (std::size_t i = 0; i < n; ++i)
            phi[i] = first_start ? 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n)
                                 : uniform(rng);
        first_start = false;
        double current = evaluate(phi);
        double sigma = 0.5;
        std::size_t failures = 0;
        bool checked = false;
        while (outcome.iterations < budget && sigma > 1e-9) {
            outcome.best_score = std::max(outcome.best_score, current);
            if (current > 0.0 && !checked) {
                if (try_accept(phi)) return outcome;
                checked = true;
            }
            cand = phi;
            const std::size_t i = pick(rng);
            cand[i] = wrap(cand[i] + sigma * gauss(rng));
            const double s = evaluate(cand);
            if (s > current) {
                phi.swap(cand);
                current = s;
                failures = 0;
                checked = false;
                sigma = std::min(1.0, sigma * 1.5);
            } else if (++failures > 4 * n) {
                sigma *= 0.5;
                failures = 0;
            }
        }
    }
    outcome.budget_exhausted = true;
    return outcome;
}

}  // namespace radial
