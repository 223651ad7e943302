#include "tcbounds/quotient.hpp"

#include <gmpxx.h>

#include <mutex>

#include "tcbounds/errors.hpp"

namespace tcb {

std::optional<std::size_t> GradedBasis::index_of(const Monomial& m) const
{
    auto it = position.find(m);
    if (it == position.end())
        return std::nullopt;
    return it->second;
}

std::vector<Coeff> GradedBasis::coordinates(const Element& x) const
{
    std::vector<Coeff> v(size(), 0);
    for (const auto& t : x.terms()) {
        if (x.algebra()->degree(t.monomial) != degree)
            continue;
        v[position.at(t.monomial)] = t.coefficient;
    }
    return v;
}

namespace {

void enumerate(const GradedAlgebra& alg, std::size_t g, int remaining, Monomial& current, GradedBasis& out)
{
    if (g == alg.size()) {
        if (remaining == 0) {
            out.position.emplace(current, out.monomials.size());
            out.monomials.push_back(current);
        }
        return;
    }
    const int deg = alg.degree_of(g);
    int max_exp = remaining / deg;
    if (alg.exterior() && alg.is_odd(g))
        max_exp = std::min(max_exp, 1);
    for (int e = max_exp; e >= 0; --e) {
        current.exponents[g] = e;
        enumerate(alg, g + 1, remaining - e * deg, current, out);
    }
    current.exponents[g] = 0;
}

}  // namespace

GradedBasis graded_basis(const GradedAlgebra& algebra, int d)
{
    if (d < 0 || d > algebra.top_degree())
        throw InvalidArgument("degree " + std::to_string(d) + " outside [0, " +
                              std::to_string(algebra.top_degree()) + "]");
    GradedBasis basis;
    basis.degree = d;
    Monomial current = algebra.one();
    enumerate(algebra, 0, d, current, basis);
    return basis;
}

GradedBasis graded_basis(const Presentation& p, int d)
{
    return graded_basis(*p.algebra(), d);
}

namespace {

IdealSlice slice_over(const Presentation& p, const GradedBasis& basis)
{
    const auto& alg = p.algebra();
    const int d = basis.degree;
    IdealSlice slice;
    slice.degree = d;
    for (const auto& r : p.relations()) {
        auto e = r.degree();
        if (!e || *e > d)
            continue;
        const GradedBasis complement = graded_basis(*alg, d - *e);
        for (const auto& m : complement.monomials)
            slice.vectors.push_back(basis.coordinates(multiply(Element::monomial(alg, m), r)));
    }
    return slice;
}

}  // namespace

IdealSlice ideal_slice(const Presentation& p, int d)
{
    return slice_over(p, graded_basis(p, d));
}

namespace {

/// Row echelon basis of the ideal slice's span (over Z: the lattice).
struct Echelon {
    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::size_t> pivots;
};

Echelon integer_echelon(const IdealSlice& slice, std::size_t columns)
{
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& v : slice.vectors) {
        std::vector<mpz_class> row(columns);
        bool nonzero = false;
        for (std::size_t c = 0; c < columns; ++c) {
            row[c] = static_cast<long>(v[c]);
            nonzero |= v[c] != 0;
        }
        if (nonzero)
            rows.push_back(std::move(row));
    }
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
        // Euclid on column c among rows r.. until one nonzero entry remains.
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
                    best = i;
            if (best == rows.size())
                break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                for (std::size_t k = c; k < columns; ++k)
                    rows[i][k] -= q * rows[r][k];
                if (rows[i][c] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (r < rows.size() && rows[r][c] != 0) {
            if (rows[r][c] < 0)
                for (auto& x : rows[r])
                    x = -x;
            out.pivots.push_back(c);
            out.rows.push_back(rows[r]);
            ++r;
        }
    }
    return out;
}

bool integer_member(const Echelon& e, const std::vector<Coeff>& v)
{
    std::vector<mpz_class> w(v.size());
    for (std::size_t c = 0; c < v.size(); ++c)
        w[c] = static_cast<long>(v[c]);
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        const std::size_t c = e.pivots[i];
        if (w[c] == 0)
            continue;
        if (!mpz_divisible_p(w[c].get_mpz_t(), e.rows[i][c].get_mpz_t()))
            return false;
        mpz_class q = w[c] / e.rows[i][c];
        for (std::size_t k = c; k < w.size(); ++k)
            w[k] -= q * e.rows[i][k];
    }
    for (const auto& x : w)
        if (x != 0)
            return false;
    return true;
}

Coeff inverse_mod(Coeff a, Coeff p)
{
    // p prime: a^(p-2)
    Coeff result = 1, base = a % p, exp = p - 2;
    while (exp > 0) {
        if (exp & 1)
            result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

struct ModEchelon {
    std::vector<std::vector<Coeff>> rows;  // pivot entry normalized to 1
    std::vector<std::size_t> pivots;
};

ModEchelon modular_echelon(const IdealSlice& slice, std::size_t columns, Coeff p)
{
    std::vector<std::vector<Coeff>> rows;
    for (const auto& v : slice.vectors)
        rows.push_back(v);
    ModEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        const Coeff inv = inverse_mod(rows[r][c], p);
        for (auto& x : rows[r])
            x = x * inv % p;
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            const Coeff f = rows[i][c];
            if (f == 0)
                continue;
            for (std::size_t k = c; k < columns; ++k)
                rows[i][k] = ((rows[i][k] - f * rows[r][k]) % p + p) % p;
        }
        out.pivots.push_back(c);
        out.rows.push_back(rows[r]);
        ++r;
    }
    return out;
}

bool modular_member(const ModEchelon& e, std::vector<Coeff> w, Coeff p)
{
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        const std::size_t c = e.pivots[i];
        const Coeff f = w[c];
        if (f == 0)
            continue;
        for (std::size_t k = c; k < w.size(); ++k)
            w[k] = ((w[k] - f * e.rows[i][k]) % p + p) % p;
    }
    for (auto x : w)
        if (x != 0)
            return false;
    return true;
}

}  // namespace

struct QuotientRing::Impl {
    struct Slot {
        std::once_flag once;
        GradedBasis basis;
        Echelon integer;
        ModEchelon modular;
    };

    explicit Impl(Presentation p) : presentation(std::move(p))
    {
        for (int d = 0; d <= presentation.top_degree(); ++d)
            slots.push_back(std::make_unique<Slot>());
    }

    const Slot& slot(int d)
    {
        Slot& s = *slots[static_cast<std::size_t>(d)];
        std::call_once(s.once, [&] {
            s.basis = graded_basis(presentation, d);
            const IdealSlice slice = slice_over(presentation, s.basis);
            const auto& k = presentation.coefficients();
            if (k.is_modular())
                s.modular = modular_echelon(slice, s.basis.size(), k.modulus());
            else
                s.integer = integer_echelon(slice, s.basis.size());
        });
        return s;
    }

    bool homogeneous_zero(int d, const std::vector<Coeff>& v)
    {
        const Slot& s = slot(d);
        const auto& k = presentation.coefficients();
        return k.is_modular() ? modular_member(s.modular, v, k.modulus()) : integer_member(s.integer, v);
    }

    Presentation presentation;
    std::vector<std::unique_ptr<Slot>> slots;
};

QuotientRing::QuotientRing(Presentation p) : impl_(std::make_shared<Impl>(std::move(p))) {}

const Presentation& QuotientRing::presentation() const noexcept
{
    return impl_->presentation;
}

bool QuotientRing::is_zero(const Element& x) const
{
    if (!same_algebra(x.algebra(), algebra()))
        throw MismatchError("element is not over the quotient's algebra");
    const int top = presentation().top_degree();
    for (const auto& [d, part] : x.homogeneous_parts()) {
        if (d > top)
            continue;
        const auto& basis = impl_->slot(d).basis;
        if (!impl_->homogeneous_zero(d, basis.coordinates(part)))
            return false;
    }
    return true;
}

bool QuotientRing::is_zero(const Monomial& m) const
{
    const int d = algebra()->degree(m);
    if (d > presentation().top_degree())
        return true;
    const auto& basis = impl_->slot(d).basis;
    std::vector<Coeff> v(basis.size(), 0);
    auto at = basis.index_of(m);
    if (!at)
        return true;  // odd square under the exterior convention
    v[*at] = 1;
    return impl_->homogeneous_zero(d, v);
}

std::size_t QuotientRing::ideal_rank(int d) const
{
    if (d < 0 || d > presentation().top_degree())
        throw InvalidArgument("degree outside the presentation's range");
    const auto& s = impl_->slot(d);
    return presentation().coefficients().is_modular() ? s.modular.rows.size() : s.integer.rows.size();
}

bool is_zero_in_quotient(const Presentation& p, const Element& x)
{
    return QuotientRing(p).is_zero(x);
}

}  // namespace tcb
