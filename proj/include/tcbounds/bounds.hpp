#pragma once

// Integer intervals for cat(X^j), tc_j, TC_j, ltc_j and LTC_j of one space,
// seeded from cohomology and dimension/connectivity and tightened to a
// fixpoint by the comparison inequalities between the quantities.
//
// Unreduced convention throughout: cat(point) = 1. An absent upper bound
// means +infinity.

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcbounds/catalog.hpp"

namespace tcb {

enum class QuantityKind { CatPower, Tc, TC, Ltc, LTC };

struct Quantity {
    QuantityKind kind;
    int index;  // j >= 1; j >= 2 for TC and LTC

    /// "cat(X^j)", "tc_j", "TC_j", "ltc_j", "LTC_j"
    std::string label() const;
    /// "cat", "tc", "TC", "ltc", "LTC"
    std::string kind_name() const;
    bool valid() const;

    friend auto operator<=>(const Quantity&, const Quantity&) = default;
};

/// Every quantity defined for j = 1..n_max, in report order.
std::vector<Quantity> quantities_up_to(int n_max);

namespace rule {
inline constexpr const char* trivial = "trivial";
inline constexpr const char* nil_index = "nil-index";
inline constexpr const char* dimension_connectivity = "dimension-connectivity";
inline constexpr const char* product_inequality = "product-inequality";
inline constexpr const char* tc_equals_cat = "tc-equals-cat";
inline constexpr const char* ltc_equals_tc = "ltc-equals-tc";
inline constexpr const char* LTC_equals_TC = "LTC-equals-TC";
inline constexpr const char* tc_monotone = "tc-monotone";
inline constexpr const char* TC_below_tc = "TC-below-tc";
inline constexpr const char* tc_below_TC = "tc-below-TC";
}  // namespace rule

struct BoundFact {
    Quantity quantity;
    int lower = 1;
    std::optional<int> upper;
    std::vector<std::string> provenance;  // ordered rule tags
    std::string citation;
};

struct Interval {
    int lower = 1;
    std::optional<int> upper;
    std::vector<std::string> lower_chain;
    std::vector<std::string> upper_chain;

    bool resolved() const { return upper && *upper == lower; }
    std::string render() const;  // "[3, 4]" or "[2, inf]"
};

std::string render_bound(const std::optional<int>& upper);

struct Tightening {
    Quantity quantity;
    bool upper;  // which endpoint moved
    std::optional<int> before;
    int after;
    std::vector<std::string> chain;
};

struct IntervalTable {
    int n_max = 0;
    std::map<Quantity, Interval> intervals;
    std::vector<Tightening> log;

    const Interval& at(Quantity q) const;
    /// One fact per endpoint that differs from the trivial [1, inf).
    std::vector<BoundFact> as_facts() const;
};

class ContradictionError : public std::runtime_error {
public:
    ContradictionError(Quantity q, int lower, int upper, std::vector<std::string> lower_chain,
                       std::vector<std::string> upper_chain);

    Quantity quantity;
    int lower;
    int upper;
    std::vector<std::string> lower_chain;
    std::vector<std::string> upper_chain;
};

/// Cohomological lower bounds, dimension/connectivity upper bounds and the
/// product inequality, for j = 1..n_max.
std::vector<BoundFact> seed_facts(const SpaceEntry& entry, int n_max);

/// Applies the facts, then the comparison rules until nothing tightens.
/// Throws ContradictionError on an empty interval.
IntervalTable propagate(const std::vector<BoundFact>& facts, int n_max);

struct TableRow {
    std::string space;
    std::string title;
    int n;
    Interval tc;
    std::optional<int> expected;

    bool resolved() const { return tc.resolved(); }
    bool matches() const { return expected && tc.resolved() && tc.lower == *expected; }
};

/// tc_n intervals for every entry and n = 1..n_max; entries are processed in
/// parallel, rows come back in input order.
std::vector<TableRow> tc_table(const std::vector<SpaceEntry>& entries, int n_max);

/// Grid syntax: comma-separated designators whose numeric fields may be
/// ranges "lo..hi", e.g. "sphere:1..4,conf:2..4:1..4". Empty text is an empty
/// grid.
std::vector<SpaceEntry> expand_grid(const std::string& grid);
/// The seven families with m, k in 1..4 (m >= 2 for configuration spaces)
/// and g in 1..3.
std::string default_grid();

}  // namespace tcb
