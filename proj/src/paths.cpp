#include "tcbounds/paths.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tcbounds/errors.hpp"

namespace tcb::paths {

ModelSpace::ModelSpace(std::vector<Factor> factors) : factors_(std::move(factors)), dimension_(0)
{
    for (const auto& f : factors_) {
        if (f.dim < 1 || (f.kind == Kind::Circle && f.dim != 1))
            throw InvalidArgument("malformed model space factor");
        dimension_ += f.dim;
    }
}

SpacePtr ModelSpace::euclidean(int d)
{
    return std::make_shared<const ModelSpace>(std::vector<Factor>{{Kind::Euclidean, d}});
}

SpacePtr ModelSpace::circle()
{
    return std::make_shared<const ModelSpace>(std::vector<Factor>{{Kind::Circle, 1}});
}

SpacePtr ModelSpace::product(const std::vector<SpacePtr>& parts)
{
    std::vector<Factor> factors;
    for (const auto& p : parts)
        factors.insert(factors.end(), p->factors().begin(), p->factors().end());
    return std::make_shared<const ModelSpace>(std::move(factors));
}

double ModelSpace::distance(std::span<const double> a, std::span<const double> b) const
{
    double sum = 0;
    std::size_t at = 0;
    for (const auto& f : factors_) {
        for (int i = 0; i < f.dim; ++i, ++at) {
            double d = a[at] - b[at];
            if (f.kind == Kind::Circle) {
                d = std::abs(d - std::floor(d));
                d = std::min(d, 1.0 - d);
            }
            sum += d * d;
        }
    }
    return std::sqrt(sum);
}

std::string ModelSpace::tag() const
{
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty())
            out += "x";
        out += f.kind == Kind::Circle ? "S1" : "R^" + std::to_string(f.dim);
    }
    return out;
}

double distance(const Point& a, const Point& b)
{
    if (!a.space || !b.space || !(*a.space == *b.space))
        throw InvalidArgument("points live in different model spaces");
    return a.space->distance(a.coords, b.coords);
}

PathMap::PathMap(SpacePtr space, int arity, Boundary boundary, std::optional<Point> basepoint, Evaluator f)
    : space_(std::move(space)), arity_(arity), boundary_(boundary), basepoint_(std::move(basepoint)), f_(std::move(f))
{
    if (arity_ < 1 || arity_ > 3)
        throw InvalidArgument("path maps have arity 1, 2 or 3");
    if (!space_ || !f_)
        throw InvalidArgument("path map needs a space and an evaluator");
}

PathMap PathMap::free(SpacePtr space, int arity, Evaluator f)
{
    return PathMap(std::move(space), arity, Boundary::free, std::nullopt, std::move(f));
}

PathMap PathMap::free_curve(SpacePtr space, Curve f)
{
    return PathMap(std::move(space), 1, Boundary::free, std::nullopt,
                   [f = std::move(f)](std::span<const double> t) { return f(t[0]); });
}

PathMap PathMap::based(Point x0, Curve f)
{
    const double gap = distance(f(0.0), x0);
    if (gap > boundary_tolerance)
        throw PreconditionError("based path misses the basepoint at t = 0 by " + std::to_string(gap));
    auto space = x0.space;
    return PathMap(std::move(space), 1, Boundary::based, std::move(x0),
                   [f = std::move(f)](std::span<const double> t) { return f(t[0]); });
}

PathMap PathMap::loop(Point x0, Curve f)
{
    const double start = distance(f(0.0), x0), end = distance(f(1.0), x0);
    if (start > boundary_tolerance || end > boundary_tolerance)
        throw PreconditionError("loop misses the basepoint by " + std::to_string(std::max(start, end)));
    auto space = x0.space;
    return PathMap(std::move(space), 1, Boundary::loop, std::move(x0),
                   [f = std::move(f)](std::span<const double> t) { return f(t[0]); });
}

Point PathMap::at(std::span<const double> params) const
{
    if (static_cast<int>(params.size()) != arity_)
        throw InvalidArgument("expected " + std::to_string(arity_) + " parameter(s)");
    return f_(params);
}

Point PathMap::operator()(double t) const
{
    const double p[1] = {t};
    return at(p);
}

Point PathMap::operator()(double a, double b) const
{
    const double p[2] = {a, b};
    return at(p);
}

Point PathMap::operator()(double a, double b, double c) const
{
    const double p[3] = {a, b, c};
    return at(p);
}

namespace {

double clamp01(double x)
{
    return std::clamp(x, 0.0, 1.0);
}

void require_curve(const PathMap& f)
{
    if (f.arity() != 1)
        throw InvalidArgument("expected a path (arity 1)");
}

void require_based(const PathMap& f)
{
    require_curve(f);
    if (f.boundary() == Boundary::free)
        throw InvalidArgument("expected a based path");
}

}  // namespace

WaypointTuple evaluate_fibration(const PathMap& f, Fibration kind, int n)
{
    require_curve(f);
    WaypointTuple out;
    switch (kind) {
    case Fibration::p:
        require_based(f);
        if (n < 1)
            throw InvalidArgument("p_n needs n >= 1");
        for (int i = 1; i <= n; ++i)
            out.push_back(f(static_cast<double>(i) / n));
        break;
    case Fibration::q:
        if (f.boundary() != Boundary::loop)
            throw InvalidArgument("q_n is defined on based loops");
        if (n < 1)
            throw InvalidArgument("q_n needs n >= 1");
        for (int i = 1; i <= n; ++i)
            out.push_back(f(static_cast<double>(i) / (n + 1)));
        break;
    case Fibration::P:
        if (n < 2)
            throw InvalidArgument("P_n needs n >= 2");
        for (int i = 0; i <= n - 1; ++i)
            out.push_back(f(static_cast<double>(i) / (n - 1)));
        break;
    case Fibration::Q: {
        if (n < 2)
            throw InvalidArgument("Q_n needs n >= 2");
        if (distance(f(0.0), f(1.0)) > PathMap::boundary_tolerance)
            throw InvalidArgument("Q_n is defined on closed paths");
        for (int i = 0; i <= n - 1; ++i)
            out.push_back(f(static_cast<double>(i) / n));
        break;
    }
    }
    return out;
}

PathMap prefix_scale(const PathMap& f, Rational c)
{
    require_curve(f);
    if (c.den <= 0 || c.num <= 0 || c.num > c.den)
        throw InvalidArgument("scale factor must lie in (0, 1]");
    const double num = static_cast<double>(c.num), den = static_cast<double>(c.den);
    auto scaled = [f, num, den](double t) { return f(clamp01(num * t / den)); };
    if (f.boundary() == Boundary::free)
        return PathMap::free_curve(f.space(), scaled);
    if (f.boundary() == Boundary::loop && c.num == c.den)
        return PathMap::loop(*f.basepoint(), scaled);
    return PathMap::based(*f.basepoint(), scaled);
}

PathMap loop_fold(const PathMap& f, int n)
{
    require_based(f);
    if (n < 1)
        throw InvalidArgument("loop_fold needs n >= 1");
    const double k = n;
    return PathMap::loop(*f.basepoint(), [f, k](double t) {
        if (t * (k + 1) <= k)
            return f(clamp01((k + 1) * t / k));
        return f(clamp01((k + 1) * (1 - t)));
    });
}

PathMap shift_embed(const PathMap& f, int n)
{
    require_based(f);
    if (n < 2)
        throw InvalidArgument("shift_embed needs n >= 2");
    const double k = n;
    return PathMap::free_curve(f.space(), [f, k](double t) { return f(clamp01(((k - 1) * t + 1) / k)); });
}

double t_star(double t, double s, int j, int n)
{
    const double u = 5.0 * n * s - 5.0 * (j + 1);
    const double a = u + 2 + t;
    const double b = u + 2 * t;
    return clamp01((a - std::sqrt(std::max(0.0, a * a - 4 * b))) / 2);
}

double t_star2(double t, double s, int j, int n)
{
    const double w = 5.0 * n * s - 5.0 * j;
    const double r = (w - 2 - t) * (w - 2 - t) + 4 * (w - 2 * t);
    return clamp01((-w + 2 + t - std::sqrt(std::max(0.0, r))) / 2);
}

namespace {

Point constant(const Point& x0)
{
    return x0;
}

enum class Branch { upper, lower, middle };

struct BranchChoice {
    int j;
    Branch branch;
};

BranchChoice exact_branch(double s, double t, int n)
{
    const mpq_class S(s), T(t);
    const mpq_class ns = S * n;
    int j = static_cast<int>(mpz_class(ns.get_num() / ns.get_den()).get_si());
    j = std::clamp(j, 0, n - 1);
    const mpq_class five_ns = 5 * ns;
    if (five_ns >= 5 * (j + 1) - 2 * T)
        return {j, Branch::upper};
    if (five_ns <= 5 * j + 2 * T)
        return {j, Branch::lower};
    return {j, Branch::middle};
}

// Decides in doubles when every comparison clears a margin far above the
// rounding error, otherwise defers to the rational test.
BranchChoice choose_branch(double s, double t, int n)
{
    constexpr double margin = 1e-9;
    const double ns = s * n;
    const double floor_ns = std::floor(ns);
    if (ns - floor_ns < margin || floor_ns + 1 - ns < margin)
        return exact_branch(s, t, n);
    const int j = std::clamp(static_cast<int>(floor_ns), 0, n - 1);
    const double upper = 5 * ns - (5.0 * (j + 1) - 2 * t);
    const double lower = 5 * ns - (5.0 * j + 2 * t);
    if (std::abs(upper) < margin || std::abs(lower) < margin)
        return exact_branch(s, t, n);
    if (upper > 0)
        return {j, Branch::upper};
    if (lower < 0)
        return {j, Branch::lower};
    return {j, Branch::middle};
}

}  // namespace

PathMap lift_extend(const PathMap& G, const std::vector<PathMap>& hs, int n, const Point& x0)
{
    if (n < 1)
        throw InvalidArgument("lift_extend needs n >= 1");
    if (G.arity() != 2)
        throw InvalidArgument("G must have arity 2");
    if (static_cast<int>(hs.size()) != n)
        throw InvalidArgument("need exactly n maps h_1..h_n");
    for (const auto& h : hs)
        if (h.arity() != 2)
            throw InvalidArgument("each h_i must have arity 2");

    // Compatibility: G(y,0) = x0 and G(y,i/n) = h_i(y,0).
    double worst = 0;
    std::string where;
    for (int k = 0; k <= 64; ++k) {
        const double y = k / 64.0;
        for (int i = 0; i <= n; ++i) {
            const Point target = i == 0 ? x0 : hs[static_cast<std::size_t>(i - 1)](y, 0.0);
            const double gap = distance(G(y, static_cast<double>(i) / n), target);
            if (gap > worst) {
                worst = gap;
                std::ostringstream os;
                os << "y=" << y << ", i=" << i;
                where = os.str();
            }
        }
    }
    if (worst > compatibility_tolerance)
        throw PreconditionError("compatibility condition violated by " + std::to_string(worst) + " at " + where);

    auto h = [hs, x0](int i, double y, double t) {
        return i == 0 ? constant(x0) : hs[static_cast<std::size_t>(i - 1)](y, t);
    };
    return PathMap::free(G.space(), 3, [G, h, n](std::span<const double> p) {
        const double y = p[0], t = p[1], s = p[2];
        if (t == 0.0)
            return G(y, s);
        const BranchChoice c = choose_branch(s, t, n);
        if (c.branch == Branch::upper)
            return h(c.j + 1, y, t_star(t, s, c.j, n));
        if (c.branch == Branch::lower)
            return h(c.j, y, t_star2(t, s, c.j, n));
        return G(y, clamp01((5 * s - (4.0 * c.j + 2) * t / n) / (5 - 4 * t)));
    });
}

Section transport_section(Section s, PointMap fwd, PointMap bwd, Homotopy H, PathMap phi, int n, Point x0)
{
    if (n < 1)
        throw InvalidArgument("transport_section needs n >= 1");
    require_curve(phi);
    if (distance(H(x0, 0.0), x0) > compatibility_tolerance)
        throw PreconditionError("H(x0, 0) != x0");
    if (distance(phi(0.0), fwd(x0)) > compatibility_tolerance)
        throw PreconditionError("phi(0) != f(x0)");
    const Point y0 = phi(1.0);

    return [=](const WaypointTuple& xs) -> PathMap {
        if (static_cast<int>(xs.size()) != n)
            throw InvalidArgument("expected " + std::to_string(n) + " waypoints");
        WaypointTuple ys;
        for (const auto& x : xs) {
            if (distance(H(x, 0.0), x) > compatibility_tolerance)
                throw PreconditionError("H(x, 0) != x at a waypoint");
            ys.push_back(fwd(x));
        }
        const PathMap sy = s(ys);
        if (distance(sy(0.0), y0) > compatibility_tolerance)
            throw PreconditionError("section path does not start at y0");

        return PathMap::based(x0, [=](double t) -> Point {
            const mpq_class T(t);
            const mpq_class nt = T * n;
            int i = static_cast<int>(mpz_class(nt.get_num() / nt.get_den()).get_si());
            i = std::clamp(i, 0, n - 1);
            if (i == 0) {
                const mpq_class q = 4 * nt;  // 4nt
                if (q <= 1)
                    return H(x0, clamp01(4.0 * n * t));
                if (q <= 2)
                    return bwd(phi(clamp01(4.0 * n * t - 1)));
                if (q <= 3)
                    return bwd(sy(clamp01(4.0 * t - 2.0 / n)));
                return H(xs[0], clamp01(4 - 4.0 * n * t));
            }
            const mpq_class q = 3 * nt - 3 * i;  // 3nt - 3i
            if (q <= 1)
                return H(xs[static_cast<std::size_t>(i - 1)], clamp01(3.0 * n * t - 3.0 * i));
            if (q <= 2)
                return bwd(sy(clamp01(3 * t - (2.0 * i + 1) / n)));
            return H(xs[static_cast<std::size_t>(i)], clamp01(3 + 3.0 * i - 3.0 * n * t));
        });
    };
}

Section straight_line_section(Point x0, int n)
{
    if (n < 1)
        throw InvalidArgument("straight_line_section needs n >= 1");
    return [x0, n](const WaypointTuple& xs) {
        if (static_cast<int>(xs.size()) != n)
            throw InvalidArgument("expected " + std::to_string(n) + " waypoints");
        WaypointTuple knots{x0};
        knots.insert(knots.end(), xs.begin(), xs.end());
        return PathMap::based(x0, [knots, n](double t) {
            const double scaled = clamp01(t) * n;
            const int i = std::min(static_cast<int>(scaled), n - 1);
            const double u = scaled - i;
            const auto& a = knots[static_cast<std::size_t>(i)];
            const auto& b = knots[static_cast<std::size_t>(i + 1)];
            Point p{a.space, a.coords};
            for (std::size_t c = 0; c < p.coords.size(); ++c)
                p.coords[c] = (1 - u) * a.coords[c] + u * b.coords[c];
            // Hit the knots exactly.
            if (u == 0.0)
                return a;
            return p;
        });
    };
}

}  // namespace tcb::paths
