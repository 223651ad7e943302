#pragma once

// Path spaces over small model spaces (R^d, the circle R/Z, and finite
// products), the evaluation fibrations p_n, q_n, P_n, Q_n, the
// reparametrizations comparing them, the explicit lifting extension for p_n
// and the section transport along a homotopy equivalence.
//
// Everything is checked numerically on dyadic grids; see paths_check.hpp.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tcb::paths {

class ModelSpace {
public:
    enum class Kind { Euclidean, Circle };
    struct Factor {
        Kind kind;
        int dim;  // 1 for the circle

        friend bool operator==(const Factor&, const Factor&) = default;
    };

    static std::shared_ptr<const ModelSpace> euclidean(int d);
    static std::shared_ptr<const ModelSpace> circle();
    static std::shared_ptr<const ModelSpace> product(const std::vector<std::shared_ptr<const ModelSpace>>& parts);

    explicit ModelSpace(std::vector<Factor> factors);

    /// Number of coordinates.
    int dimension() const noexcept { return dimension_; }
    const std::vector<Factor>& factors() const noexcept { return factors_; }
    /// Euclidean on R^d factors, arc distance on circle factors, combined in l2.
    double distance(std::span<const double> a, std::span<const double> b) const;
    /// "R^3", "S1", "R^2xS1"
    std::string tag() const;

    friend bool operator==(const ModelSpace&, const ModelSpace&) = default;

private:
    std::vector<Factor> factors_;
    int dimension_;
};

using SpacePtr = std::shared_ptr<const ModelSpace>;

struct Point {
    SpacePtr space;
    std::vector<double> coords;
};

/// Throws InvalidArgument for points of different model spaces.
double distance(const Point& a, const Point& b);

using WaypointTuple = std::vector<Point>;

enum class Boundary { free, based, loop };

/// A map from [0,1]^arity (arity 1, 2 or 3) into a model space.
class PathMap {
public:
    using Evaluator = std::function<Point(std::span<const double>)>;
    using Curve = std::function<Point(double)>;

    static constexpr double boundary_tolerance = 1e-12;

    static PathMap free(SpacePtr space, int arity, Evaluator f);
    static PathMap free_curve(SpacePtr space, Curve f);
    /// Checks f(0) = x0 within boundary_tolerance.
    static PathMap based(Point x0, Curve f);
    /// Checks f(0) = f(1) = x0 within boundary_tolerance.
    static PathMap loop(Point x0, Curve f);

    int arity() const noexcept { return arity_; }
    Boundary boundary() const noexcept { return boundary_; }
    const SpacePtr& space() const noexcept { return space_; }
    const std::optional<Point>& basepoint() const noexcept { return basepoint_; }

    Point at(std::span<const double> params) const;
    Point operator()(double t) const;
    Point operator()(double a, double b) const;
    Point operator()(double a, double b, double c) const;

private:
    PathMap(SpacePtr space, int arity, Boundary boundary, std::optional<Point> basepoint, Evaluator f);

    SpacePtr space_;
    int arity_;
    Boundary boundary_;
    std::optional<Point> basepoint_;
    Evaluator f_;
};

enum class Fibration { p, q, P, Q };

/// p: (f(1/n), ..., f(1)); q: (f(1/(n+1)), ..., f(n/(n+1)));
/// P: (f(0), f(1/(n-1)), ..., f(1)); Q: (f(0), f(1/n), ..., f((n-1)/n)).
/// p needs a based path, q a based loop, Q a closed path; P and Q need n >= 2.
WaypointTuple evaluate_fibration(const PathMap& f, Fibration kind, int n);

struct Rational {
    std::int64_t num;
    std::int64_t den;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// t -> f(c t), c in (0, 1].
PathMap prefix_scale(const PathMap& f, Rational c);
/// Based path to based loop: run f on [0, n/(n+1)], then back to x0.
PathMap loop_fold(const PathMap& f, int n);
/// t -> f((n-1)t/n + 1/n), a free path.
PathMap shift_embed(const PathMap& f, int n);

/// H~(y,t,s) extending G on t = 0, h_i on s = i/n and x0 on s = 0, via the
/// collar formula with the radical reparametrizations t_*, t_**.
/// hs[i-1] = h_i. Checks G(y,0) = x0 and G(y,i/n) = h_i(y,0) on a 65-point
/// grid in y (tolerance compatibility_tolerance) and throws
/// PreconditionError naming the worst sample otherwise.
PathMap lift_extend(const PathMap& G, const std::vector<PathMap>& hs, int n, const Point& x0);

inline constexpr double compatibility_tolerance = 1e-9;

/// The radical reparametrizations, exposed for testing. `s` lies in the
/// upper collar of [j/n, (j+1)/n] for t_star and in the lower one for t_star2.
double t_star(double t, double s, int j, int n);
double t_star2(double t, double s, int j, int n);

using Section = std::function<PathMap(const WaypointTuple&)>;
using PointMap = std::function<Point(const Point&)>;
/// H(x, t) with H(x, 0) = x.
using Homotopy = std::function<Point(const Point&, double)>;

/// Given a local section s of p_n for Y, maps f: X -> Y, g: Y -> X, a
/// homotopy H from id_X to g f, and a path phi from f(x0) to y0, builds the
/// section s' of p_n for X. Preconditions are checked at x0 on construction
/// and at the waypoints on each call.
Section transport_section(Section s, PointMap fwd, PointMap bwd, Homotopy H, PathMap phi, int n, Point x0);

/// Piecewise-linear section of p_n on R^d: x0 at 0, x_i at i/n.
Section straight_line_section(Point x0, int n);

}  // namespace tcb::paths
