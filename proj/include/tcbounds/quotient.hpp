#pragma once

// Zero-testing in A / I degree by degree. Over Z membership means integer
// solvability of the coordinate system, decided by integer row echelon form
// in arbitrary precision; over Z/p by Gaussian elimination.

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "tcbounds/algebra.hpp"

namespace tcb {

struct GradedBasis {
    int degree = 0;
    std::vector<Monomial> monomials;  // MonomialOrder
    std::map<Monomial, std::size_t> position;

    std::size_t size() const noexcept { return monomials.size(); }
    std::optional<std::size_t> index_of(const Monomial& m) const;
    /// Coordinates of the degree-`degree` part of `x` (other degrees ignored).
    std::vector<Coeff> coordinates(const Element& x) const;
};

struct IdealSlice {
    int degree = 0;
    /// One vector per (relation, complementary monomial) pair.
    std::vector<std::vector<Coeff>> vectors;
};

/// All monomials of total degree `d`, respecting the exterior convention.
/// Throws InvalidArgument when d is negative or above the cap.
GradedBasis graded_basis(const GradedAlgebra& algebra, int d);
GradedBasis graded_basis(const Presentation& p, int d);

IdealSlice ideal_slice(const Presentation& p, int d);

/// A presentation together with a computed-once cache of reduced ideal
/// slices. Copies share the cache; safe for concurrent readers.
class QuotientRing {
public:
    explicit QuotientRing(Presentation p);

    const Presentation& presentation() const noexcept;
    const AlgebraPtr& algebra() const noexcept { return presentation().algebra(); }

    /// Mixed elements are zero iff every homogeneous piece is.
    bool is_zero(const Element& x) const;
    bool is_zero(const Monomial& m) const;
    /// Rank of the ideal slice in degree `d`.
    std::size_t ideal_rank(int d) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

bool is_zero_in_quotient(const Presentation& p, const Element& x);

}  // namespace tcb
