#pragma once

// Exact arithmetic in free graded-commutative algebras over Z or Z/p.
//
// Ambient convention: away from characteristic 2 the free object is a
// polynomial algebra on the even generators tensored with an exterior algebra
// on the odd ones, so the square of an odd generator is identically zero. In
// characteristic 2 it is a plain commutative polynomial algebra.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcb {

using Coeff = std::int64_t;

class Coefficients {
public:
    static Coefficients integers() { return Coefficients(0); }
    /// Throws InvalidArgument unless `p` is a prime below 2^31.
    static Coefficients modulo(Coeff p);

    bool is_modular() const noexcept { return modulus_ != 0; }
    Coeff modulus() const noexcept { return modulus_; }
    Coeff characteristic() const noexcept { return modulus_; }
    /// Koszul signs and the exterior convention only apply away from 2.
    bool signs_matter() const noexcept { return modulus_ != 2; }

    Coeff reduce(Coeff c) const noexcept;
    Coeff add(Coeff a, Coeff b) const;
    Coeff mul(Coeff a, Coeff b) const;
    Coeff neg(Coeff a) const;

    /// "Z" or "Z/p".
    std::string name() const;

    friend bool operator==(const Coefficients&, const Coefficients&) = default;

private:
    explicit Coefficients(Coeff modulus) : modulus_(modulus) {}
    Coeff modulus_;
};

bool is_prime(Coeff p);

struct Generator {
    std::string name;
    int degree = 1;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Exponent vector indexed by the algebra's generator order.
struct Monomial {
    std::vector<int> exponents;

    bool is_one() const noexcept;
    int total_exponent() const noexcept;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Global monomial order: lexicographic on exponent vectors, larger exponent
/// on an earlier generator first. Elements list their terms in this order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.exponents > b.exponents; }
};

/// The free graded-commutative algebra on a list of generators, truncated
/// above `top_degree`. Immutable; shared between elements.
class GradedAlgebra {
public:
    GradedAlgebra(Coefficients coefficients, std::vector<Generator> generators, int top_degree);

    const Coefficients& coefficients() const noexcept { return coefficients_; }
    const std::vector<Generator>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    int top_degree() const noexcept { return top_degree_; }

    int degree_of(std::size_t generator) const { return generators_.at(generator).degree; }
    bool is_odd(std::size_t generator) const { return generators_.at(generator).degree % 2 != 0; }
    /// True when odd generators square to zero (characteristic != 2).
    bool exterior() const noexcept { return coefficients_.signs_matter(); }

    std::optional<std::size_t> index_of(std::string_view name) const;
    int degree(const Monomial& m) const;
    Monomial one() const { return Monomial{std::vector<int>(generators_.size(), 0)}; }

    /// Structural equality (same ring, same generators, same cap).
    friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b);

private:
    Coefficients coefficients_;
    std::vector<Generator> generators_;
    int top_degree_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

AlgebraPtr make_algebra(Coefficients coefficients, std::vector<Generator> generators, int top_degree);
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct NormalizedWord {
    Coeff coefficient = 0;
    Monomial monomial;
};

/// Sorts a word of generator indices into canonical order, picking up a
/// factor (-1)^(deg a * deg b) per transposition. Returns coefficient 0 and
/// the unit monomial when an odd generator repeats under the exterior
/// convention. Does not truncate at the top degree.
NormalizedWord normalize_word(const GradedAlgebra& algebra, std::span<const std::size_t> word, Coeff coeff);

/// Sign of m1 * m2 relative to the merged monomial: +1, -1, or 0 when the
/// product vanishes in the ambient algebra.
int product_sign(const GradedAlgebra& algebra, const Monomial& m1, const Monomial& m2);

struct Term {
    Coeff coefficient;
    Monomial monomial;

    friend bool operator==(const Term&, const Term&) = default;
};

/// A canonical element: nonzero coefficients, distinct monomials, terms in
/// MonomialOrder.
class Element {
public:
    explicit Element(AlgebraPtr algebra);
    /// Canonicalizes arbitrary terms (merges duplicates, drops zeros, sorts).
    Element(AlgebraPtr algebra, std::vector<Term> terms);

    static Element zero(AlgebraPtr algebra) { return Element(std::move(algebra)); }
    static Element constant(AlgebraPtr algebra, Coeff c);
    static Element generator(AlgebraPtr algebra, std::size_t index);
    static Element monomial(AlgebraPtr algebra, Monomial m, Coeff c = 1);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_homogeneous() const;
    /// Degree of a nonzero homogeneous element.
    std::optional<int> degree() const;
    /// Homogeneous components keyed by degree.
    std::map<int, Element> homogeneous_parts() const;

    Element operator-() const;
    Element scaled(Coeff c) const;

    friend bool operator==(const Element& a, const Element& b);

private:
    AlgebraPtr algebra_;
    std::vector<Term> terms_;
};

Element add(const Element& a, const Element& b);
Element subtract(const Element& a, const Element& b);
/// Cup product; monomials above the top degree are dropped.
Element multiply(const Element& a, const Element& b);

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return subtract(a, b); }
inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

/// A finitely presented graded-commutative algebra: the ambient algebra
/// modulo the ideal generated by homogeneous relations.
class Presentation {
public:
    Presentation(AlgebraPtr algebra, std::vector<Element> relations, bool kunneth_safe = false);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const std::vector<Element>& relations() const noexcept { return relations_; }
    const Coefficients& coefficients() const noexcept { return algebra_->coefficients(); }
    int top_degree() const noexcept { return algebra_->top_degree(); }
    /// Each graded piece is a finitely generated free module, so the tensor
    /// power computes the cohomology of the product.
    bool kunneth_safe() const noexcept { return kunneth_safe_; }

private:
    AlgebraPtr algebra_;
    std::vector<Element> relations_;
    bool kunneth_safe_;
};

/// The same presentation over a different coefficient ring, or with a
/// different cap. Relations are re-read through their integer coefficients.
Presentation with_coefficients(const Presentation& p, const Coefficients& coefficients);
Presentation with_top_degree(const Presentation& p, int top_degree);
/// Element re-expressed over another algebra with the same generator list.
Element transfer(const Element& x, const AlgebraPtr& target);

// Text form. Grammar:
//   element := ['+'|'-'] term (('+' | '-') term)* | '0'
//   term    := integer | [integer '*'] factor ('*' factor)*
//   factor  := name ['^' positive-integer]
//   name    := [A-Za-z][A-Za-z0-9_]* ['<' digits '>']
Element parse_element(std::string_view text, const AlgebraPtr& algebra);
Element parse_element(std::string_view text, const Presentation& p);
std::string render(const Element& x);
std::string render(const GradedAlgebra& algebra, const Monomial& m);

}  // namespace tcb
