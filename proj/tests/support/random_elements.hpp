#pragma once

#include <random>
#include <vector>

#include "oracle.hpp"
#include "tcbounds/algebra.hpp"

namespace gen {

/// Degrees 1..top whose basis is nonempty.
inline std::vector<int> live_degrees(const tcb::GradedAlgebra& alg)
{
    std::vector<int> out;
    for (int d = 1; d <= alg.top_degree(); ++d)
        if (!oracle::basis(alg, d).empty())
            out.push_back(d);
    return out;
}

/// Homogeneous element with 1..3 terms and coefficients in [-5, 5].
inline tcb::Element homogeneous(const tcb::AlgebraPtr& alg, std::mt19937_64& rng, int degree)
{
    const auto basis = oracle::basis(*alg, degree);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> count(1, 3);
    std::vector<tcb::Term> terms;
    for (int i = count(rng); i > 0; --i)
        terms.push_back({coeff(rng), basis[pick(rng)]});
    return tcb::Element(alg, std::move(terms));
}

inline tcb::Element homogeneous(const tcb::AlgebraPtr& alg, std::mt19937_64& rng)
{
    const auto degrees = live_degrees(*alg);
    std::uniform_int_distribution<std::size_t> pick(0, degrees.size() - 1);
    return homogeneous(alg, rng, degrees[pick(rng)]);
}

/// Sum of up to three homogeneous elements of random degrees.
inline tcb::Element mixed(const tcb::AlgebraPtr& alg, std::mt19937_64& rng)
{
    tcb::Element x = tcb::Element::zero(alg);
    for (int i = std::uniform_int_distribution<int>(1, 3)(rng); i > 0; --i)
        x = x + homogeneous(alg, rng);
    return x;
}

/// Random word of generator indices.
inline std::vector<std::size_t> word(const tcb::GradedAlgebra& alg, std::mt19937_64& rng, std::size_t max_length)
{
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    std::uniform_int_distribution<std::size_t> g(0, alg.size() - 1);
    std::vector<std::size_t> w(len(rng));
    for (auto& x : w)
        x = g(rng);
    return w;
}

}  // namespace gen
