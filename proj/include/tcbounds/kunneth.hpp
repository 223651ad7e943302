#pragma once

#include "tcbounds/algebra.hpp"

namespace tcb {

/// H*(X)^{\otimes n} as a presentation: generator g of factor i becomes
/// "g<i>" (factor-major order), relations are copied per factor, and the cap
/// is n times the base cap. Cross-factor commutation comes from the ambient
/// graded commutativity, not from relations.
struct TensorPower {
    Presentation base;
    int n;
    Presentation result;

    /// Image of `x` (over the base algebra) under the i-th factor inclusion,
    /// 1 <= i <= n.
    Element inject(const Element& x, int i) const;
    /// Index of base generator `g` in factor `i` of the result.
    std::size_t generator_index(std::size_t g, int i) const;
};

/// Throws InvalidArgument when n < 1 or the base is not Kunneth-safe.
TensorPower tensor_power(const Presentation& p, int n);

std::string tagged_name(const std::string& name, int factor);

}  // namespace tcb
