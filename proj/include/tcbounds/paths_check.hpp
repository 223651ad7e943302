#pragma once

// Sampled verification of the path formulas: continuity on dyadic grids,
// lifting-extension boundary identities, and the deterministic property
// suites behind `check-paths`.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tcbounds/paths.hpp"

namespace tcb::paths {

struct ContinuityReport {
    std::vector<double> max_gaps;  // one entry per level, coarsest first
    bool strictly_decreasing = false;
    bool suspected_discontinuity = false;
};

/// Max distance between axis-adjacent samples on 2^l intervals per axis, for
/// l = first_level .. first_level + levels - 1. A level whose max gap fails to
/// shrink is flagged (all-zero gaps are not).
ContinuityReport check_continuity(const PathMap& f, int levels, int first_level = 1);
ContinuityReport check_continuity_serial(const PathMap& f, int levels, int first_level = 1);

struct LiftBoundaryErrors {
    double initial = 0;  // |H~(y,0,s) - G(y,s)|
    double waypoints = 0;  // |H~(y,t,i/n) - h_i(y,t)|
    double base = 0;  // |H~(y,t,0) - x0|

    double worst() const;
};

/// Boundary identities of lift_extend on the grid y, t in k/(points-1) and
/// s in k/(per_unit * n).
LiftBoundaryErrors check_lift_boundaries(const PathMap& lifted, const PathMap& G, const std::vector<PathMap>& hs,
                                         const Point& x0, int n, int points = 65, int per_unit = 16);
LiftBoundaryErrors check_lift_boundaries_serial(const PathMap& lifted, const PathMap& G,
                                                const std::vector<PathMap>& hs, const Point& x0, int n,
                                                int points = 65, int per_unit = 16);

/// Deterministic random inputs.
class PathSampler {
public:
    explicit PathSampler(std::uint64_t seed) : rng_(seed) {}

    Point random_point(const SpacePtr& space, double radius = 1.0);
    /// Piecewise-linear path with 2..8 pieces and random breakpoints.
    PathMap random_pl_path(const SpacePtr& space, const Point& x0, Boundary boundary);

    struct LiftInput {
        PathMap G;
        std::vector<PathMap> hs;
        Point x0;
    };
    /// Smooth G: I x I -> R^d and h_1..h_n satisfying the compatibility
    /// condition by construction.
    LiftInput random_lift_input(int n, int d = 2);

    std::mt19937_64& engine() { return rng_; }

private:
    double uniform(double lo, double hi);
    std::mt19937_64 rng_;
};

struct CheckLine {
    std::string label;
    double worst_error;
    double tolerance;
    bool passed;
};

struct SuiteReport {
    std::string name;
    std::vector<CheckLine> lines;

    bool passed() const;
};

/// q_n o loop_fold = p_n, p_n o prefix_scale(n/(n+1)) = q_n, P_n o shift_embed
/// = p_n on `paths` random piecewise-linear paths per n, n = 1..5.
SuiteReport run_reparam_suite(std::uint64_t seed, int paths = 100);
/// lift_extend boundary identities on 65x65x(16n+1) grids and continuity
/// over `levels` refinements starting at 16 intervals per axis, n = 2, 3.
/// The collar ramps span 1/(5n) in s; coarser grids alias them.
SuiteReport run_lift_suite(std::uint64_t seed, int levels = 5);
/// p_n o s' = id for the identity configuration and for a contraction of
/// R^3, on `tuples` random waypoint tuples, n = 2, 3, 4.
SuiteReport run_section_suite(std::uint64_t seed, int tuples = 100);

inline constexpr double reparam_tolerance = 1e-12;
inline constexpr double boundary_identity_tolerance = 1e-9;
inline constexpr int lift_first_level = 4;

}  // namespace tcb::paths
