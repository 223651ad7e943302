#include "tcbounds/cuplength.hpp"

#include <exception>

#include "tcbounds/errors.hpp"
#include "tcbounds/kunneth.hpp"

namespace tcb {

std::string to_string(CupMode mode)
{
    return mode == CupMode::direct ? "direct" : "factorized";
}

CupMode parse_cup_mode(const std::string& text)
{
    if (text == "direct")
        return CupMode::direct;
    if (text == "factorized")
        return CupMode::factorized;
    throw InvalidArgument("unknown cup-length mode '" + text + "'");
}

CupLengthResult cup_length(const QuotientRing& ring)
{
    const auto& alg = *ring.algebra();
    const long branches = static_cast<long>(alg.size());
    std::vector<detail::SearchBest> results(alg.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1)
    for (long b = 0; b < branches; ++b) {
        try {
            const auto g = static_cast<std::size_t>(b);
            Monomial current = alg.one();
            if (!detail::extension_survives(ring, current, 0, g))
                continue;
            std::vector<std::size_t> word{g};
            ++current.exponents[g];
            detail::extend_products(ring, word, current, alg.degree_of(g), results[g]);
        }
        catch (...) {
#pragma omp critical(tcb_cup_length_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    // Branches in index order; strict comparison keeps the lexicographically
    // least witness among the longest.
    detail::SearchBest best;
    for (auto& r : results)
        if (r.length > best.length)
            best = std::move(r);
    return {best.length, best.length + 1, std::move(best.witness), CupMode::direct};
}

CupLengthResult cup_length(const Presentation& p)
{
    return cup_length(QuotientRing(p));
}

CupLengthResult cup_length_power(const Presentation& p, int n, CupMode mode)
{
    if (n < 1)
        throw InvalidArgument("power must be >= 1");
    if (mode == CupMode::direct) {
        if (n == 1 && !p.kunneth_safe())
            return cup_length(p);
        return cup_length(tensor_power(p, n).result);
    }
    if (!p.kunneth_safe())
        throw InvalidArgument("factorized mode needs a Kunneth-safe presentation");
    const CupLengthResult base = cup_length(p);
    CupLengthResult out;
    out.cup_length = n * base.cup_length;
    out.nil_index = out.cup_length + 1;
    out.mode = CupMode::factorized;
    const std::size_t width = p.algebra()->size();
    for (int i = 0; i < n; ++i)
        for (auto g : base.witness)
            out.witness.push_back(static_cast<std::size_t>(i) * width + g);
    return out;
}

int nil_lower_bound(const Presentation& p, int n, CupMode mode)
{
    return cup_length_power(p, n, mode).nil_index;
}

}  // namespace tcb
