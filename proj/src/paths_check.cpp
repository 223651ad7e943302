#include "tcbounds/paths_check.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "tcbounds/errors.hpp"

namespace tcb::paths {

namespace {

constexpr double zero_gap = 1e-14;

void summarize(ContinuityReport& r)
{
    r.strictly_decreasing = true;
    r.suspected_discontinuity = false;
    for (std::size_t l = 1; l < r.max_gaps.size(); ++l) {
        if (!(r.max_gaps[l] < r.max_gaps[l - 1]))
            r.strictly_decreasing = false;
        if (r.max_gaps[l] >= r.max_gaps[l - 1] && r.max_gaps[l] > zero_gap)
            r.suspected_discontinuity = true;
    }
}

std::vector<double> grid_params(long index, int points, int arity)
{
    std::vector<double> p(static_cast<std::size_t>(arity));
    for (int a = arity - 1; a >= 0; --a) {
        p[static_cast<std::size_t>(a)] = static_cast<double>(index % points) / (points - 1);
        index /= points;
    }
    return p;
}

}  // namespace

ContinuityReport check_continuity(const PathMap& f, int levels, int first_level)
{
    if (levels < 2)
        throw InvalidArgument("check_continuity needs levels >= 2");
    if (first_level < 1 || first_level + levels - 1 > 12)
        throw InvalidArgument("check_continuity levels out of range");
    const int arity = f.arity();
    ContinuityReport report;
    for (int level = first_level; level < first_level + levels; ++level) {
        const int points = (1 << level) + 1;
        long total = 1;
        for (int a = 0; a < arity; ++a)
            total *= points;

        const auto dim = static_cast<std::size_t>(f.space()->dimension());
        std::vector<double> samples(static_cast<std::size_t>(total) * dim);
        std::exception_ptr failure;
#pragma omp parallel for schedule(static)
        for (long i = 0; i < total; ++i) {
            try {
                const Point p = f.at(grid_params(i, points, arity));
                if (p.coords.size() != dim)
                    throw InvalidArgument("sample outside the declared model space");
                std::copy(p.coords.begin(), p.coords.end(), samples.begin() + static_cast<long>(i * dim));
            }
            catch (...) {
#pragma omp critical(tcb_continuity_failure)
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);

        double gap = 0;
#pragma omp parallel for schedule(static) reduction(max : gap)
        for (long i = 0; i < total; ++i) {
            long stride = 1;
            for (int a = arity - 1; a >= 0; --a) {
                const long coord = (i / stride) % points;
                if (coord + 1 < points) {
                    const std::span<const double> here(samples.data() + i * dim, dim);
                    const std::span<const double> next(samples.data() + (i + stride) * dim, dim);
                    gap = std::max(gap, f.space()->distance(here, next));
                }
                stride *= points;
            }
        }
        report.max_gaps.push_back(gap);
    }
    summarize(report);
    return report;
}

ContinuityReport check_continuity_serial(const PathMap& f, int levels, int first_level)
{
    if (levels < 2)
        throw InvalidArgument("check_continuity needs levels >= 2");
    if (first_level < 1 || first_level + levels - 1 > 12)
        throw InvalidArgument("check_continuity levels out of range");
    const int arity = f.arity();
    ContinuityReport report;
    for (int level = first_level; level < first_level + levels; ++level) {
        const int points = (1 << level) + 1;
        const double h = 1.0 / (points - 1);
        double gap = 0;
        std::vector<int> idx(static_cast<std::size_t>(arity), 0);
        for (;;) {
            std::vector<double> p(idx.size());
            for (std::size_t a = 0; a < idx.size(); ++a)
                p[a] = idx[a] * h;
            const Point here = f.at(p);
            for (std::size_t a = 0; a < idx.size(); ++a) {
                if (idx[a] + 1 >= points)
                    continue;
                std::vector<double> q = p;
                q[a] = (idx[a] + 1) * h;
                gap = std::max(gap, distance(here, f.at(q)));
            }
            std::size_t a = idx.size();
            while (a > 0 && ++idx[a - 1] == points)
                idx[--a] = 0;
            if (a == 0)
                break;
        }
        report.max_gaps.push_back(gap);
    }
    summarize(report);
    return report;
}

double LiftBoundaryErrors::worst() const
{
    return std::max({initial, waypoints, base});
}

LiftBoundaryErrors check_lift_boundaries(const PathMap& lifted, const PathMap& G, const std::vector<PathMap>& hs,
                                         const Point& x0, int n, int points, int per_unit)
{
    const int s_steps = per_unit * n;
    double initial = 0, waypoints = 0, base = 0;
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) reduction(max : initial, waypoints, base)
    for (int yi = 0; yi < points; ++yi) {
        try {
            const double y = static_cast<double>(yi) / (points - 1);
            for (int k = 0; k <= s_steps; ++k) {
                const double s = static_cast<double>(k) / s_steps;
                initial = std::max(initial, distance(lifted(y, 0.0, s), G(y, s)));
            }
            for (int ti = 0; ti < points; ++ti) {
                const double t = static_cast<double>(ti) / (points - 1);
                base = std::max(base, distance(lifted(y, t, 0.0), x0));
                for (int i = 1; i <= n; ++i) {
                    const double s = static_cast<double>(i * per_unit) / s_steps;
                    waypoints = std::max(waypoints, distance(lifted(y, t, s), hs[static_cast<std::size_t>(i - 1)](y, t)));
                }
            }
        }
        catch (...) {
#pragma omp critical(tcb_lift_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return {initial, waypoints, base};
}

LiftBoundaryErrors check_lift_boundaries_serial(const PathMap& lifted, const PathMap& G,
                                                const std::vector<PathMap>& hs, const Point& x0, int n,
                                                int points, int per_unit)
{
    LiftBoundaryErrors e;
    const int s_steps = per_unit * n;
    for (int yi = 0; yi < points; ++yi) {
        const double y = static_cast<double>(yi) / (points - 1);
        for (int k = 0; k <= s_steps; ++k) {
            const double s = static_cast<double>(k) / s_steps;
            e.initial = std::max(e.initial, distance(lifted(y, 0.0, s), G(y, s)));
        }
        for (int ti = 0; ti < points; ++ti) {
            const double t = static_cast<double>(ti) / (points - 1);
            e.base = std::max(e.base, distance(lifted(y, t, 0.0), x0));
            for (int i = 1; i <= n; ++i) {
                const double s = static_cast<double>(i) / n;
                e.waypoints = std::max(e.waypoints, distance(lifted(y, t, s), hs[static_cast<std::size_t>(i - 1)](y, t)));
            }
        }
    }
    return e;
}

double PathSampler::uniform(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Point PathSampler::random_point(const SpacePtr& space, double radius)
{
    Point p{space, std::vector<double>(static_cast<std::size_t>(space->dimension()))};
    for (auto& c : p.coords)
        c = uniform(-radius, radius);
    return p;
}

PathMap PathSampler::random_pl_path(const SpacePtr& space, const Point& x0, Boundary boundary)
{
    const int pieces = std::uniform_int_distribution<int>(2, 8)(rng_);
    std::vector<double> knots{0.0};
    for (int i = 1; i < pieces; ++i)
        knots.push_back(uniform(0.0, 1.0));
    knots.push_back(1.0);
    std::sort(knots.begin(), knots.end());

    std::vector<Point> values;
    for (int i = 0; i <= pieces; ++i)
        values.push_back(random_point(space, 2.0));
    if (boundary != Boundary::free)
        values.front() = x0;
    if (boundary == Boundary::loop)
        values.back() = x0;

    auto curve = [knots, values](double t) {
        t = std::clamp(t, 0.0, 1.0);
        auto it = std::upper_bound(knots.begin(), knots.end(), t);
        std::size_t hi = static_cast<std::size_t>(it - knots.begin());
        if (hi >= knots.size())
            return values.back();
        const std::size_t lo = hi - 1;
        if (t == knots[lo])
            return values[lo];
        const double u = (t - knots[lo]) / (knots[hi] - knots[lo]);
        Point p = values[lo];
        for (std::size_t c = 0; c < p.coords.size(); ++c)
            p.coords[c] = (1 - u) * values[lo].coords[c] + u * values[hi].coords[c];
        return p;
    };
    switch (boundary) {
    case Boundary::free: return PathMap::free_curve(space, curve);
    case Boundary::based: return PathMap::based(x0, curve);
    case Boundary::loop: return PathMap::loop(x0, curve);
    }
    throw InvalidArgument("unknown boundary kind");
}

PathSampler::LiftInput PathSampler::random_lift_input(int n, int d)
{
    const auto space = ModelSpace::euclidean(d);
    const Point x0 = random_point(space);

    struct Wave {
        double amplitude, wy, ws, phase;
    };
    auto waves = [&](int count) {
        std::vector<Wave> w;
        for (int i = 0; i < count; ++i)
            w.push_back({uniform(-1, 1), uniform(0.5, 2.5), uniform(0.5, 2.5), uniform(0, 6.28)});
        return w;
    };
    std::vector<std::vector<Wave>> g_waves, h_waves;
    for (int c = 0; c < d; ++c)
        g_waves.push_back(waves(3));
    for (int i = 0; i < n * d; ++i)
        h_waves.push_back(waves(2));

    // G(y,s) = x0 + s * F(y,s) vanishes to x0 at s = 0.
    auto g_value = [x0, g_waves](double y, double s) {
        Point p = x0;
        for (std::size_t c = 0; c < p.coords.size(); ++c) {
            double f = 0;
            for (const auto& w : g_waves[c])
                f += w.amplitude * std::sin(w.wy * y + w.ws * s + w.phase);
            p.coords[c] += s * f;
        }
        return p;
    };
    PathMap G = PathMap::free(space, 2, [g_value](std::span<const double> p) { return g_value(p[0], p[1]); });

    // h_i(y,t) = G(y,i/n) + t * K_i(y,t) agrees with G at t = 0.
    std::vector<PathMap> hs;
    for (int i = 1; i <= n; ++i) {
        std::vector<std::vector<Wave>> mine(h_waves.begin() + (i - 1) * d, h_waves.begin() + i * d);
        const double anchor = static_cast<double>(i) / n;
        hs.push_back(PathMap::free(space, 2, [g_value, mine, anchor](std::span<const double> p) {
            Point q = g_value(p[0], anchor);
            for (std::size_t c = 0; c < q.coords.size(); ++c) {
                double k = 0;
                for (const auto& w : mine[c])
                    k += w.amplitude * std::cos(w.wy * p[0] + w.ws * p[1] + w.phase);
                q.coords[c] += p[1] * k;
            }
            return q;
        }));
    }
    return {std::move(G), std::move(hs), x0};
}

bool SuiteReport::passed() const
{
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.passed; });
}

namespace {

double tuple_error(const WaypointTuple& a, const WaypointTuple& b)
{
    if (a.size() != b.size())
        return INFINITY;
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, distance(a[i], b[i]));
    return worst;
}

CheckLine line(std::string label, double error, double tolerance)
{
    return {std::move(label), error, tolerance, error <= tolerance};
}

}  // namespace

SuiteReport run_reparam_suite(std::uint64_t seed, int paths)
{
    PathSampler sampler(seed);
    const std::vector<SpacePtr> spaces{ModelSpace::euclidean(3), ModelSpace::circle(),
                                       ModelSpace::product({ModelSpace::euclidean(2), ModelSpace::circle()})};
    SuiteReport report{"reparam", {}};
    for (int n = 1; n <= 5; ++n) {
        double fold = 0, scale = 0, shift = 0;
        for (int k = 0; k < paths; ++k) {
            const auto& space = spaces[static_cast<std::size_t>(k) % spaces.size()];
            const Point x0 = sampler.random_point(space);
            const PathMap phi = sampler.random_pl_path(space, x0, Boundary::based);
            const PathMap loop = sampler.random_pl_path(space, x0, Boundary::loop);
            const WaypointTuple p = evaluate_fibration(phi, Fibration::p, n);

            fold = std::max(fold, tuple_error(evaluate_fibration(loop_fold(phi, n), Fibration::q, n), p));
            scale = std::max(scale, tuple_error(evaluate_fibration(prefix_scale(loop, {n, n + 1}), Fibration::p, n),
                                                evaluate_fibration(loop, Fibration::q, n)));
            if (n >= 2)
                shift = std::max(shift, tuple_error(evaluate_fibration(shift_embed(phi, n), Fibration::P, n), p));
        }
        const std::string at = " (n=" + std::to_string(n) + ")";
        report.lines.push_back(line("q_n o loop_fold = p_n" + at, fold, reparam_tolerance));
        report.lines.push_back(line("p_n o prefix_scale(n/(n+1)) = q_n" + at, scale, reparam_tolerance));
        if (n >= 2)
            report.lines.push_back(line("P_n o shift_embed = p_n" + at, shift, reparam_tolerance));
    }
    return report;
}

SuiteReport run_lift_suite(std::uint64_t seed, int levels)
{
    PathSampler sampler(seed);
    SuiteReport report{"lift", {}};
    for (int n : {2, 3}) {
        auto input = sampler.random_lift_input(n);
        const PathMap lifted = lift_extend(input.G, input.hs, n, input.x0);
        const LiftBoundaryErrors e = check_lift_boundaries(lifted, input.G, input.hs, input.x0, n);
        const std::string at = " (n=" + std::to_string(n) + ")";
        report.lines.push_back(line("H~(y,0,s) = G(y,s)" + at, e.initial, boundary_identity_tolerance));
        report.lines.push_back(line("H~(y,t,i/n) = h_i(y,t)" + at, e.waypoints, boundary_identity_tolerance));
        report.lines.push_back(line("H~(y,t,0) = x0" + at, e.base, boundary_identity_tolerance));
        const ContinuityReport c = check_continuity(lifted, levels, lift_first_level);
        report.lines.push_back({"max gaps strictly decreasing over " + std::to_string(levels) + " levels" + at,
                                c.max_gaps.back(), 0.0, c.strictly_decreasing && !c.suspected_discontinuity});
    }
    return report;
}

SuiteReport run_section_suite(std::uint64_t seed, int tuples)
{
    PathSampler sampler(seed);
    const auto r3 = ModelSpace::euclidean(3);
    SuiteReport report{"section", {}};
    const PointMap identity = [](const Point& x) { return x; };
    const Homotopy stay = [](const Point& x, double) { return x; };

    for (int n : {2, 3, 4}) {
        const Point x0 = sampler.random_point(r3);
        const PathMap phi = PathMap::based(x0, [x0](double) { return x0; });
        const Section s = straight_line_section(x0, n);
        const Section moved = transport_section(s, identity, identity, stay, phi, n, x0);

        // Contraction of R^3 onto the origin: f = 0, g = id, H(x,t) = (1-t)x.
        const Point origin{r3, {0.0, 0.0, 0.0}};
        const PointMap to_origin = [origin](const Point&) { return origin; };
        const Homotopy shrink = [](const Point& x, double t) {
            Point p = x;
            for (auto& c : p.coords)
                c *= 1 - t;
            return p;
        };
        const Section contracted = transport_section(straight_line_section(origin, n), to_origin, identity, shrink,
                                                     PathMap::based(origin, [origin](double) { return origin; }), n,
                                                     origin);

        double identity_error = 0, contraction_error = 0;
        for (int k = 0; k < tuples; ++k) {
            WaypointTuple xs;
            for (int i = 0; i < n; ++i)
                xs.push_back(sampler.random_point(r3, 3.0));
            identity_error = std::max(identity_error, tuple_error(evaluate_fibration(moved(xs), Fibration::p, n), xs));
            contraction_error =
                std::max(contraction_error, tuple_error(evaluate_fibration(contracted(xs), Fibration::p, n), xs));
        }
        const std::string at = " (n=" + std::to_string(n) + ")";
        report.lines.push_back(line("p_n o s' = id, identity homotopy" + at, identity_error, reparam_tolerance));
        report.lines.push_back(line("p_n o s' = id, contraction of R^3" + at, contraction_error, reparam_tolerance));
    }
    return report;
}

}  // namespace tcb::paths
