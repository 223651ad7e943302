#include "tcbounds/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "tcbounds/errors.hpp"

namespace tcb {

bool is_prime(Coeff p)
{
    if (p < 2)
        return false;
    for (Coeff d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

Coefficients Coefficients::modulo(Coeff p)
{
    if (p >= (Coeff(1) << 31) || !is_prime(p))
        throw InvalidArgument("coefficient modulus " + std::to_string(p) + " is not a prime below 2^31");
    return Coefficients(p);
}

Coeff Coefficients::reduce(Coeff c) const noexcept
{
    if (modulus_ == 0)
        return c;
    Coeff r = c % modulus_;
    return r < 0 ? r + modulus_ : r;
}

Coeff Coefficients::add(Coeff a, Coeff b) const
{
    if (modulus_ != 0)
        return reduce(a + b);  // both reduced below 2^31
    Coeff r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer coefficient overflow in addition");
    return r;
}

Coeff Coefficients::mul(Coeff a, Coeff b) const
{
    if (modulus_ != 0)
        return reduce(a * b);
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer coefficient overflow in multiplication");
    return r;
}

Coeff Coefficients::neg(Coeff a) const
{
    if (modulus_ != 0)
        return reduce(-a);
    if (a == INT64_MIN)
        throw OverflowError("integer coefficient overflow in negation");
    return -a;
}

std::string Coefficients::name() const
{
    return modulus_ == 0 ? "Z" : "Z/" + std::to_string(modulus_);
}

bool Monomial::is_one() const noexcept
{
    return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

int Monomial::total_exponent() const noexcept
{
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

GradedAlgebra::GradedAlgebra(Coefficients coefficients, std::vector<Generator> generators, int top_degree)
    : coefficients_(coefficients), generators_(std::move(generators)), top_degree_(top_degree)
{
    if (top_degree_ < 0)
        throw InvalidArgument("top degree must be non-negative");
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (g.degree < 1)
            throw InvalidArgument("generator '" + g.name + "' must have degree >= 1");
        if (!index_.emplace(g.name, i).second)
            throw InvalidArgument("duplicate generator name '" + g.name + "'");
    }
}

std::optional<std::size_t> GradedAlgebra::index_of(std::string_view name) const
{
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int GradedAlgebra::degree(const Monomial& m) const
{
    int d = 0;
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        d += m.exponents[i] * generators_[i].degree;
    return d;
}

bool operator==(const GradedAlgebra& a, const GradedAlgebra& b)
{
    return a.coefficients_ == b.coefficients_ && a.top_degree_ == b.top_degree_ && a.generators_ == b.generators_;
}

AlgebraPtr make_algebra(Coefficients coefficients, std::vector<Generator> generators, int top_degree)
{
    return std::make_shared<const GradedAlgebra>(coefficients, std::move(generators), top_degree);
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    return a == b || (a && b && *a == *b);
}

NormalizedWord normalize_word(const GradedAlgebra& algebra, std::span<const std::size_t> word, Coeff coeff)
{
    for (auto g : word)
        if (g >= algebra.size())
            throw InvalidArgument("unknown generator index " + std::to_string(g));

    // Each inversion between two odd generators is one odd transposition.
    bool negative = false;
    if (algebra.coefficients().signs_matter()) {
        for (std::size_t i = 0; i < word.size(); ++i)
            for (std::size_t j = i + 1; j < word.size(); ++j)
                if (word[i] > word[j] && algebra.is_odd(word[i]) && algebra.is_odd(word[j]))
                    negative = !negative;
    }

    Monomial m = algebra.one();
    for (auto g : word)
        ++m.exponents[g];
    if (algebra.exterior())
        for (std::size_t g = 0; g < algebra.size(); ++g)
            if (m.exponents[g] > 1 && algebra.is_odd(g))
                return {0, algebra.one()};

    const auto& k = algebra.coefficients();
    Coeff c = k.reduce(coeff);
    if (negative)
        c = k.neg(c);
    if (c == 0)
        return {0, algebra.one()};
    return {c, std::move(m)};
}

int product_sign(const GradedAlgebra& algebra, const Monomial& m1, const Monomial& m2)
{
    const std::size_t n = algebra.size();
    if (algebra.exterior())
        for (std::size_t g = 0; g < n; ++g)
            if (algebra.is_odd(g) && m1.exponents[g] + m2.exponents[g] > 1)
                return 0;
    if (!algebra.coefficients().signs_matter())
        return 1;
    // Moving each odd factor of m2 left past the odd factors of m1 with a
    // larger index.
    long parity = 0;
    long odd_above = 0;
    for (std::size_t g = n; g-- > 0;) {
        if (!algebra.is_odd(g))
            continue;
        parity += odd_above * m2.exponents[g];
        odd_above += m1.exponents[g];
    }
    return parity % 2 == 0 ? 1 : -1;
}

Element::Element(AlgebraPtr algebra) : algebra_(std::move(algebra))
{
    if (!algebra_)
        throw InvalidArgument("element needs an algebra");
}

Element::Element(AlgebraPtr algebra, std::vector<Term> terms) : Element(std::move(algebra))
{
    const auto& k = algebra_->coefficients();
    for (auto& t : terms) {
        if (t.monomial.exponents.size() != algebra_->size())
            throw MismatchError("monomial length does not match the algebra");
        t.coefficient = k.reduce(t.coefficient);
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return MonomialOrder{}(a.monomial, b.monomial); });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().monomial == t.monomial)
            terms_.back().coefficient = k.add(terms_.back().coefficient, t.coefficient);
        else
            terms_.push_back(std::move(t));
    }
    std::erase_if(terms_, [](const Term& t) { return t.coefficient == 0; });
}

Element Element::constant(AlgebraPtr algebra, Coeff c)
{
    Monomial one = algebra->one();
    return Element(std::move(algebra), {Term{c, std::move(one)}});
}

Element Element::generator(AlgebraPtr algebra, std::size_t index)
{
    if (index >= algebra->size())
        throw InvalidArgument("unknown generator index " + std::to_string(index));
    Monomial m = algebra->one();
    m.exponents[index] = 1;
    return Element(std::move(algebra), {Term{1, std::move(m)}});
}

Element Element::monomial(AlgebraPtr algebra, Monomial m, Coeff c)
{
    return Element(std::move(algebra), {Term{c, std::move(m)}});
}

bool Element::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    const int d = algebra_->degree(terms_.front().monomial);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return algebra_->degree(t.monomial) == d; });
}

std::optional<int> Element::degree() const
{
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return algebra_->degree(terms_.front().monomial);
}

std::map<int, Element> Element::homogeneous_parts() const
{
    std::map<int, std::vector<Term>> buckets;
    for (const auto& t : terms_)
        buckets[algebra_->degree(t.monomial)].push_back(t);
    std::map<int, Element> parts;
    for (auto& [d, ts] : buckets)
        parts.emplace(d, Element(algebra_, std::move(ts)));
    return parts;
}

Element Element::operator-() const
{
    return scaled(-1);
}

Element Element::scaled(Coeff c) const
{
    const auto& k = algebra_->coefficients();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
        out.push_back({k.mul(t.coefficient, k.reduce(c)), t.monomial});
    return Element(algebra_, std::move(out));
}

bool operator==(const Element& a, const Element& b)
{
    return same_algebra(a.algebra_, b.algebra_) && a.terms_ == b.terms_;
}

namespace {

void require_same(const Element& a, const Element& b)
{
    if (!same_algebra(a.algebra(), b.algebra()))
        throw MismatchError("elements belong to different algebras");
}

}  // namespace

Element add(const Element& a, const Element& b)
{
    require_same(a, b);
    std::vector<Term> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return Element(a.algebra(), std::move(terms));
}

Element subtract(const Element& a, const Element& b)
{
    return add(a, -b);
}

Element multiply(const Element& a, const Element& b)
{
    require_same(a, b);
    const auto& alg = *a.algebra();
    const auto& k = alg.coefficients();
    const int top = alg.top_degree();
    std::vector<Term> out;
    for (const auto& ta : a.terms()) {
        const int da = alg.degree(ta.monomial);
        for (const auto& tb : b.terms()) {
            if (da + alg.degree(tb.monomial) > top)
                continue;
            const int sign = product_sign(alg, ta.monomial, tb.monomial);
            if (sign == 0)
                continue;
            Monomial m = ta.monomial;
            for (std::size_t g = 0; g < m.exponents.size(); ++g)
                m.exponents[g] += tb.monomial.exponents[g];
            Coeff c = k.mul(ta.coefficient, tb.coefficient);
            if (sign < 0)
                c = k.neg(c);
            out.push_back({c, std::move(m)});
        }
    }
    return Element(a.algebra(), std::move(out));
}

Presentation::Presentation(AlgebraPtr algebra, std::vector<Element> relations, bool kunneth_safe)
    : algebra_(std::move(algebra)), relations_(std::move(relations)), kunneth_safe_(kunneth_safe)
{
    for (const auto& r : relations_) {
        if (!same_algebra(r.algebra(), algebra_))
            throw MismatchError("relation is not over the presentation's algebra");
        if (!r.is_homogeneous())
            throw InvalidArgument("relation '" + render(r) + "' is not homogeneous");
    }
}

Element transfer(const Element& x, const AlgebraPtr& target)
{
    if (x.algebra()->generators() != target->generators())
        throw MismatchError("cannot transfer between algebras with different generators");
    return Element(target, x.terms());
}

Presentation with_coefficients(const Presentation& p, const Coefficients& coefficients)
{
    const auto& alg = *p.algebra();
    auto target = make_algebra(coefficients, alg.generators(), alg.top_degree());
    std::vector<Element> relations;
    for (const auto& r : p.relations()) {
        // Re-normalize: the exterior convention may differ between rings.
        std::vector<Term> terms;
        for (const auto& t : r.terms()) {
            std::vector<std::size_t> word;
            for (std::size_t g = 0; g < t.monomial.exponents.size(); ++g)
                word.insert(word.end(), t.monomial.exponents[g], g);
            auto nw = normalize_word(*target, word, t.coefficient);
            if (nw.coefficient != 0)
                terms.push_back({nw.coefficient, std::move(nw.monomial)});
        }
        relations.emplace_back(target, std::move(terms));
    }
    return Presentation(target, std::move(relations), p.kunneth_safe());
}

Presentation with_top_degree(const Presentation& p, int top_degree)
{
    const auto& alg = *p.algebra();
    auto target = make_algebra(alg.coefficients(), alg.generators(), top_degree);
    std::vector<Element> relations;
    for (const auto& r : p.relations())
        relations.push_back(transfer(r, target));
    return Presentation(target, std::move(relations), p.kunneth_safe());
}

}  // namespace tcb
