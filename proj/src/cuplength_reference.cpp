#include "tcbounds/cuplength.hpp"

namespace tcb {

namespace detail {

bool extension_survives(const QuotientRing& ring, const Monomial& current, int degree, std::size_t g)
{
    const auto& alg = *ring.algebra();
    if (degree + alg.degree_of(g) > alg.top_degree())
        return false;
    if (alg.exterior() && alg.is_odd(g) && current.exponents[g] > 0)
        return false;
    Monomial next = current;
    ++next.exponents[g];
    return !ring.is_zero(next);
}

void extend_products(const QuotientRing& ring, std::vector<std::size_t>& word, Monomial& current, int degree,
                     SearchBest& best)
{
    if (static_cast<int>(word.size()) > best.length) {
        best.length = static_cast<int>(word.size());
        best.witness = word;
    }
    const auto& alg = *ring.algebra();
    const std::size_t lo = word.empty() ? 0 : word.back();
    for (std::size_t g = lo; g < alg.size(); ++g) {
        if (!extension_survives(ring, current, degree, g))
            continue;
        word.push_back(g);
        ++current.exponents[g];
        extend_products(ring, word, current, degree + alg.degree_of(g), best);
        --current.exponents[g];
        word.pop_back();
    }
}

}  // namespace detail

CupLengthResult cup_length_serial(const QuotientRing& ring)
{
    detail::SearchBest best;
    std::vector<std::size_t> word;
    Monomial current = ring.algebra()->one();
    detail::extend_products(ring, word, current, 0, best);
    return {best.length, best.length + 1, std::move(best.witness), CupMode::direct};
}

CupLengthResult cup_length_serial(const Presentation& p)
{
    return cup_length_serial(QuotientRing(p));
}

}  // namespace tcb
