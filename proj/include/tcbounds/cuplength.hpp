#pragma once

// Cup-length and nilpotency index of a presented quotient.
//
// The search runs over generator multisets in non-decreasing index order and
// prunes every extension of a product that is already zero. A nonzero k-fold
// product of positive-degree classes expands into a nonzero product of at
// least k generators, so generator products suffice.

#include <cstddef>
#include <string>
#include <vector>

#include "tcbounds/algebra.hpp"
#include "tcbounds/quotient.hpp"

namespace tcb {

enum class CupMode { direct, factorized };

std::string to_string(CupMode mode);
CupMode parse_cup_mode(const std::string& text);

struct CupLengthResult {
    int cup_length = 0;
    int nil_index = 1;                  // always cup_length + 1
    std::vector<std::size_t> witness;   // generator indices; lexicographically least maximal
    CupMode mode = CupMode::direct;
};

/// OpenMP fan-out over the first generator of the product. Same result as
/// cup_length_serial for any thread count.
CupLengthResult cup_length(const QuotientRing& ring);
CupLengthResult cup_length(const Presentation& p);

/// Single-threaded reference search.
CupLengthResult cup_length_serial(const QuotientRing& ring);
CupLengthResult cup_length_serial(const Presentation& p);

/// Cup-length of the n-th tensor power. Factorized mode returns n times the
/// base cup-length (requires a Kunneth-safe base); direct mode searches the
/// tensor power presentation. Witness indices refer to the tensor power's
/// generators.
CupLengthResult cup_length_power(const Presentation& p, int n, CupMode mode);

/// nil index of X^n, a lower bound for cat(X^n).
int nil_lower_bound(const Presentation& p, int n, CupMode mode = CupMode::factorized);

namespace detail {

struct SearchBest {
    int length = 0;
    std::vector<std::size_t> witness;
};

/// Depth-first search below `word` (already nonzero), extending with
/// generators >= word.back(). Updates `best` on strictly longer products,
/// so the first maximal product found in preorder is kept.
void extend_products(const QuotientRing& ring, std::vector<std::size_t>& word, Monomial& current, int degree,
                     SearchBest& best);

/// Whether the word extended by generator `g` survives: within the cap,
/// nonzero in the ambient algebra and nonzero in the quotient.
bool extension_survives(const QuotientRing& ring, const Monomial& current, int degree, std::size_t g);

}  // namespace detail

}  // namespace tcb
