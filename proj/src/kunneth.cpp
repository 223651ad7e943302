#include "tcbounds/kunneth.hpp"

#include "tcbounds/errors.hpp"

namespace tcb {

std::string tagged_name(const std::string& name, int factor)
{
    return name + "<" + std::to_string(factor) + ">";
}

namespace {

Presentation build(const Presentation& p, int n)
{
    const auto& base = *p.algebra();
    std::vector<Generator> gens;
    gens.reserve(base.size() * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (const auto& g : base.generators())
            gens.push_back({tagged_name(g.name, i), g.degree});
    auto alg = make_algebra(base.coefficients(), std::move(gens), n * base.top_degree());

    std::vector<Element> relations;
    for (int i = 1; i <= n; ++i) {
        for (const auto& r : p.relations()) {
            std::vector<Term> terms;
            for (const auto& t : r.terms()) {
                Monomial m = alg->one();
                for (std::size_t g = 0; g < base.size(); ++g)
                    m.exponents[static_cast<std::size_t>(i - 1) * base.size() + g] = t.monomial.exponents[g];
                terms.push_back({t.coefficient, std::move(m)});
            }
            relations.emplace_back(alg, std::move(terms));
        }
    }
    return Presentation(alg, std::move(relations), true);
}

}  // namespace

TensorPower tensor_power(const Presentation& p, int n)
{
    if (n < 1)
        throw InvalidArgument("tensor power exponent must be >= 1");
    if (!p.kunneth_safe())
        throw InvalidArgument("presentation is not marked Kunneth-safe");
    return TensorPower{p, n, build(p, n)};
}

std::size_t TensorPower::generator_index(std::size_t g, int i) const
{
    if (i < 1 || i > n)
        throw InvalidArgument("factor index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
    if (g >= base.algebra()->size())
        throw InvalidArgument("unknown generator index " + std::to_string(g));
    return static_cast<std::size_t>(i - 1) * base.algebra()->size() + g;
}

Element TensorPower::inject(const Element& x, int i) const
{
    if (!same_algebra(x.algebra(), base.algebra()))
        throw MismatchError("element is not over the base algebra");
    if (i < 1 || i > n)
        throw InvalidArgument("factor index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
    const auto& alg = result.algebra();
    const std::size_t width = base.algebra()->size();
    std::vector<Term> terms;
    for (const auto& t : x.terms()) {
        Monomial m = alg->one();
        for (std::size_t g = 0; g < width; ++g)
            m.exponents[static_cast<std::size_t>(i - 1) * width + g] = t.monomial.exponents[g];
        terms.push_back({t.coefficient, std::move(m)});
    }
    return Element(alg, std::move(terms));
}

}  // namespace tcb
