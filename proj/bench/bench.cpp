// Parallel kernels against their serial references.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "tcbounds/catalog.hpp"
#include "tcbounds/cuplength.hpp"
#include "tcbounds/kunneth.hpp"
#include "tcbounds/paths.hpp"
#include "tcbounds/paths_check.hpp"

using namespace tcb;

namespace {

double best_of(int reps, const std::function<void()>& f)
{
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto start = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

void row(const std::string& name, double serial, double parallel, bool agree)
{
    std::printf("%-34s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name.c_str(), serial, parallel,
                serial / parallel, agree ? "agree" : "DISAGREE");
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv)
{
    const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
    std::printf("threads %d, best of %d\n", omp_get_max_threads(), reps);

    for (auto [designator, n] : {std::pair{"conf:2:4", 2}, {"torus-sum:2", 3}, {"spheres:2:3", 2}}) {
        const auto p = tensor_power(space(designator).presentation, n).result;
        CupLengthResult s, q;
        const double ts = best_of(reps, [&] { s = cup_length_serial(p); });
        const double tp = best_of(reps, [&] { q = cup_length(p); });
        row(std::string("cup_length ") + designator + " ^" + std::to_string(n), ts, tp,
            s.cup_length == q.cup_length && s.witness == q.witness);
    }

    const auto plane = paths::ModelSpace::euclidean(2);
    const auto f = paths::PathMap::free(plane, 3, [plane](std::span<const double> x) {
        return paths::Point{plane, {std::sin(3 * x[0]) * x[1], std::cos(x[2] + x[0])}};
    });
    for (int levels : {4, 5}) {
        paths::ContinuityReport s, q;
        const double ts = best_of(reps, [&] { s = paths::check_continuity_serial(f, levels); });
        const double tp = best_of(reps, [&] { q = paths::check_continuity(f, levels); });
        row("check_continuity R^3->R^2 L=" + std::to_string(levels), ts, tp, s.max_gaps == q.max_gaps);
    }
    return 0;
}
