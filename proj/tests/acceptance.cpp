// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <sys/wait.h>

#include "oracle.hpp"
#include "radial/planar.hpp"
#include "radial/slvd.hpp"
#include "radial/spatial.hpp"

using namespace radial;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<double> distinct_radii(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> u(std::log(1e-3), std::log(1e3));
    for (;;) {
        std::vector<double> r(n);
        for (double& x : r) x = std::exp(u(rng));
        std::sort(r.begin(), r.end());
        bool ok = true;
        for (std::size_t i = 1; i < n; ++i) ok = ok && r[i] > r[i - 1] * (1 + 1e-6);
        if (ok) {
            std::shuffle(r.begin(), r.end(), rng);
            return r;
        }
    }
}

// n radii in a random number of layers of random sizes, log-uniform in [lo, hi].
std::vector<double> layered_radii(std::mt19937_64& rng, std::size_t n, double lo, double hi)
{
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    std::vector<std::size_t> cuts(n - 1);
    std::iota(cuts.begin(), cuts.end(), std::size_t{1});
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(k - 1);
    cuts.push_back(0);
    cuts.push_back(n);
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> r;
    for (std::size_t j = 0; j < k; ++j) {
        const double v = std::exp(u(rng));
        for (std::size_t m = cuts[j]; m < cuts[j + 1]; ++m) r.push_back(v);
    }
    std::shuffle(r.begin(), r.end(), rng);
    return r;
}

Outcome planar_distinct()
{
    std::mt19937_64 rng(1);
    int pass = 0;
    const auto t0 = Clock::now();
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(4, 64)(rng);
        const RadiiSet radii(distinct_radii(rng, n));
        try {
            if (verify(strictify_distinct_2d(construct_distinct_2d(radii))).passed()) ++pass;
        } catch (const Error&) {
        }
    }
    const double secs = seconds_since(t0);
    return {pass == 500 && secs < 5.0, fmt("%d/500 Pass in %.2f s", pass, secs)};
}

Outcome planar_repeated()
{
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> layers(1, 12), mult(1, 4);
    std::uniform_real_distribution<double> u(std::log(1e-2), std::log(1e2));
    int pass = 0, done = 0;
    while (done < 500) {
        std::vector<double> r;
        const int k = layers(rng);
        for (int j = 0; j < k; ++j) {
            const double v = std::exp(u(rng));
            for (int m = mult(rng); m > 0; --m) r.push_back(v);
        }
        if (r.size() < 3) continue;
        ++done;
        try {
            if (verify(strictify_repeated_2d(construct_repeated_2d(RadiiSet(r)))).passed()) ++pass;
        } catch (const Error&) {
        }
    }
    return {pass == 500, fmt("%d/500 Pass", pass)};
}

Outcome spatial_robust()
{
    std::mt19937_64 rng(3);
    int pass = 0;
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(4, 256)(rng);
        try {
            if (verify(construct_layered_3d(RadiiSet(layered_radii(rng, n, 1e-2, 1e2)), LayeredMode::Robust))
                    .passed())
                ++pass;
        } catch (const Error&) {
        }
    }
    const std::vector<double> big = layered_radii(rng, 10000, 1e-2, 1e2);
    const RadiiSet big_set(big);
    const auto t0 = Clock::now();
    bool big_pass = false;
    try {
        big_pass = verify(construct_layered_3d(big_set, LayeredMode::Robust)).passed();
    } catch (const Error&) {
    }
    const double secs = seconds_since(t0);
    return {pass == 500 && big_pass && secs < 1.0,
            fmt("%d/500 Pass; n=10000 (%zu layers) %s in %.3f s", pass, big_set.layers().size(),
                big_pass ? "Pass" : "not Pass", secs)};
}

Outcome spatial_paper_faithful()
{
    std::mt19937_64 rng(4);
    int ok = 0, nonstrict = 0, upgraded = 0, done = 0;
    while (done < 100) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(4, 64)(rng);
        const RadiiSet radii(layered_radii(rng, n, 1e-2, 1e2));
        const auto& layers = radii.layers();
        std::size_t mp = 0;
        for (std::size_t j = 0; j + 1 < layers.size(); ++j) mp = std::max(mp, layers[j].multiplicity());
        if (layers.size() < 2 || mp < 3) continue;
        ++done;
        try {
            const Configuration3D c = construct_layered_3d(radii, LayeredMode::PaperFaithful);
            const VerificationReport rep = verify(c);
            const bool no_interior = std::none_of(rep.classifications.begin(), rep.classifications.end(),
                                                  [](PointClass k) { return k == PointClass::Interior; });
            if (rep.verdict != Verdict::Fail && no_interior && rep.origin_inside) ++ok;
            if (rep.verdict == Verdict::PassNonStrict) {
                ++nonstrict;
                if (verify(strictify_3d(c)).passed()) ++upgraded;
            }
        } catch (const Error&) {
        }
    }
    return {ok == 100 && upgraded == nonstrict,
            fmt("%d/100 Pass or PassNonStrict; %d/%d PassNonStrict upgraded by strictify", ok, upgraded,
                nonstrict)};
}

Outcome oracle_equivalence()
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1, 1);
    std::size_t agree = 0, total = 0;
    for (int t = 0; t < 200; ++t) {
        const int n = std::uniform_int_distribution<int>(3, 12)(rng);
        std::vector<Point2> pts;
        const bool lattice = t % 3 == 0;  // exact collinearities and duplicates
        for (int i = 0; i < n; ++i)
            pts.push_back(lattice ? Point2{double(std::uniform_int_distribution<int>(-2, 2)(rng)),
                                           double(std::uniform_int_distribution<int>(-2, 2)(rng))}
                                  : Point2{u(rng), u(rng)});
        const auto got = classify_points(pts).classes;
        const auto want = oracle::classify(pts);
        for (std::size_t i = 0; i < pts.size(); ++i) agree += got[i] == want[i];
        total += pts.size();
    }
    for (int t = 0; t < 200; ++t) {
        const int n = std::uniform_int_distribution<int>(4, 12)(rng);
        std::vector<Point3> pts;
        const bool lattice = t % 3 == 0;
        for (int i = 0; i < n; ++i)
            pts.push_back(lattice ? Point3{double(std::uniform_int_distribution<int>(-1, 1)(rng)),
                                           double(std::uniform_int_distribution<int>(-1, 1)(rng)),
                                           double(std::uniform_int_distribution<int>(-1, 1)(rng))}
                                  : Point3{u(rng), u(rng), u(rng)});
        const auto got = classify_points(pts).classes;
        const auto want = oracle::classify(pts);
        for (std::size_t i = 0; i < pts.size(); ++i) agree += got[i] == want[i];
        total += pts.size();
    }
    return {agree == total, fmt("%zu/%zu points agree over 200 + 200 instances", agree, total)};
}

// Shared by criteria 6 and 7.
double worst_dual_consistency = 0.0;

Outcome slvd_nonemptiness()
{
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.0, 1.4);
    int dual_hull = 0, feasibility = 0, sampled = 0, small = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(4, 32)(rng);
        std::vector<double> w(n);
        for (double& x : w) x = u(rng);
        try {
            const GeneratorPlacement g = place_generators(w);
            for (std::size_t i = 0; i < n; ++i)
                worst_dual_consistency =
                    std::max(worst_dual_consistency, std::abs(norm(g.duals.duals[i]) * std::cos(w[i]) - 1.0));
            const EmptinessReport rep = check_nonemptiness(g.circles);
            dual_hull += rep.count(CellVerdict::NonEmpty) == n;
            feasibility += std::count(rep.cross_check.begin(), rep.cross_check.end(), CellVerdict::NonEmpty) ==
                           static_cast<long>(n);
            if (n <= 8) {
                ++small;
                const EmptinessReport s = sample_cells(g.circles, 200000);
                sampled += std::all_of(s.sample_counts.begin(), s.sample_counts.end(),
                                       [](std::size_t c) { return c >= 1; });
            }
        } catch (const Error&) {
            worst_dual_consistency = std::numeric_limits<double>::infinity();
        }
    }
    return {dual_hull == 200 && feasibility == 200 && sampled == small,
            fmt("DualHull %d/200, Feasibility %d/200 all NonEmpty; sampling hit every cell in %d/%d sets", dual_hull,
                feasibility, sampled, small)};
}

Outcome spot_checks()
{
    const double radius = weight_to_radius(std::numbers::pi / 3);
    const double geo = geodesic_distance({1, 0, 0}, {0, 1, 0});
    const bool ok = std::abs(radius - 2.0) <= 1e-12 && std::abs(geo - std::numbers::pi / 2) <= 1e-12 &&
                    worst_dual_consistency <= 1e-9;
    return {ok, fmt("|r(pi/3) - 2| = %.1e, |d - pi/2| = %.1e, max ||P*|| cos w - 1| = %.1e", std::abs(radius - 2.0),
                    std::abs(geo - std::numbers::pi / 2), worst_dual_consistency)};
}

Outcome probe_behaviour()
{
    const ProbeOutcome five = probe_conjecture_2d(RadiiSet({1, 1, 1, 1, 1}), 10000, 0);
    const bool five_ok = five.found && five.iterations <= 10000 && verify(*five.configuration).passed();
    const auto t0 = Clock::now();
    const ProbeOutcome six = probe_conjecture_2d(RadiiSet({1, 1, 1, 1, 1, 0.1}), 100000, 0);
    const double secs = seconds_since(t0);
    const bool six_ok = six.iterations <= 100000 && (!six.found || verify(*six.configuration).passed());
    return {five_ok && six_ok,
            fmt("{1,1,1,1,1}: %s after %llu iterations; {1,1,1,1,1,0.1}: %s after %llu iterations (%.2f s, "
                "budget exhausted: %s)",
                five.found ? "found" : "not found", static_cast<unsigned long long>(five.iterations),
                six.found ? "found" : "not found", static_cast<unsigned long long>(six.iterations), secs,
                six.budget_exhausted ? "yes" : "no")};
}

std::pair<int, std::string> capture(const std::string& args)
{
    const std::string cmd = std::string(RADIAL_CLI) + " " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, out};
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Outcome determinism()
{
    const std::array<std::string, 5> jobs{
        "construct2d --radii 7,5,5,3,2,2,1 --strict --seed 9",
        "construct3d --radii 4,4,4,3,3,3,2,2,2,1 --paper-faithful --strict --seed 9",
        "slvd --weights 0.3,0.3,1.1,0.2,0.9,0.05 --grid 20000 --seed 9",
        "probe --radii 1,1,1,1,1,0.1 --budget 5000 --seed 9",
        "construct3d --radii 2,2,2,1,1,1 --seed 9",
    };
    int same = 0;
    for (const std::string& j : jobs) {
        const auto a = capture(j), b = capture(j);
        same += a.first == b.first && a.second == b.second && !a.second.empty();
    }
    return {same == static_cast<int>(jobs.size()), fmt("%d/%zu CLI jobs byte-identical across two runs", same, jobs.size())};
}

}  // namespace

int main()
{
    const std::array<std::pair<const char*, std::function<Outcome()>>, 9> criteria{{
        {"2D distinct suite", planar_distinct},
        {"2D repeated suite", planar_repeated},
        {"3D robust suite", spatial_robust},
        {"3D paper-faithful property", spatial_paper_faithful},
        {"oracle equivalence", oracle_equivalence},
        {"SLVD non-emptiness", slvd_nonemptiness},
        {"formula spot checks", spot_checks},
        {"conjecture probe", probe_behaviour},
        {"CLI determinism", determinism},
    }};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Outcome o = criteria[i].second();
        failed += !o.pass;
        std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
