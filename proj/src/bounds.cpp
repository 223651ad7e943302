#include "tcbounds/bounds.hpp"

#include <exception>
#include <sstream>

#include "tcbounds/cuplength.hpp"
#include "tcbounds/errors.hpp"

namespace tcb {

std::string Quantity::kind_name() const
{
    switch (kind) {
    case QuantityKind::CatPower: return "cat";
    case QuantityKind::Tc: return "tc";
    case QuantityKind::TC: return "TC";
    case QuantityKind::Ltc: return "ltc";
    case QuantityKind::LTC: return "LTC";
    }
    return "?";
}

std::string Quantity::label() const
{
    if (kind == QuantityKind::CatPower)
        return "cat(X^" + std::to_string(index) + ")";
    return kind_name() + "_" + std::to_string(index);
}

bool Quantity::valid() const
{
    const bool free_kind = kind == QuantityKind::TC || kind == QuantityKind::LTC;
    return index >= (free_kind ? 2 : 1);
}

std::vector<Quantity> quantities_up_to(int n_max)
{
    std::vector<Quantity> out;
    for (int j = 1; j <= n_max; ++j)
        for (auto k : {QuantityKind::CatPower, QuantityKind::Tc, QuantityKind::Ltc, QuantityKind::TC, QuantityKind::LTC}) {
            Quantity q{k, j};
            if (q.valid())
                out.push_back(q);
        }
    return out;
}

std::string render_bound(const std::optional<int>& upper)
{
    return upper ? std::to_string(*upper) : "inf";
}

std::string Interval::render() const
{
    return "[" + std::to_string(lower) + ", " + render_bound(upper) + "]";
}

const Interval& IntervalTable::at(Quantity q) const
{
    auto it = intervals.find(q);
    if (it == intervals.end())
        throw InvalidArgument("no interval for " + q.label());
    return it->second;
}

std::vector<BoundFact> IntervalTable::as_facts() const
{
    std::vector<BoundFact> out;
    for (const auto& [q, iv] : intervals) {
        if (iv.lower > 1)
            out.push_back({q, iv.lower, std::nullopt, iv.lower_chain, "propagated lower bound"});
        if (iv.upper)
            out.push_back({q, 1, iv.upper, iv.upper_chain, "propagated upper bound"});
    }
    return out;
}

namespace {

std::string join_chain(const std::vector<std::string>& chain)
{
    std::string out;
    for (const auto& t : chain)
        out += (out.empty() ? "" : " > ") + t;
    return out;
}

}  // namespace

ContradictionError::ContradictionError(Quantity q, int lo, int hi, std::vector<std::string> lc,
                                       std::vector<std::string> uc)
    : std::runtime_error("empty interval for " + q.label() + ": lower " + std::to_string(lo) + " via [" +
                         join_chain(lc) + "] exceeds upper " + std::to_string(hi) + " via [" + join_chain(uc) + "]"),
      quantity(q), lower(lo), upper(hi), lower_chain(std::move(lc)), upper_chain(std::move(uc))
{
}

std::vector<BoundFact> seed_facts(const SpaceEntry& entry, int n_max)
{
    if (n_max < 1)
        throw InvalidArgument("n_max must be >= 1");
    std::vector<BoundFact> facts;
    for (const auto& q : quantities_up_to(n_max))
        facts.push_back({q, 1, std::nullopt, {rule::trivial}, "every category is at least 1"});

    const auto& p = entry.presentation;
    const CupLengthResult base = cup_length(p);
    const int r = entry.connectivity;
    const int dim = entry.dimension;
    const int cat_upper = dim / r + 1;

    for (int j = 1; j <= n_max; ++j) {
        const Quantity cat{QuantityKind::CatPower, j};
        const int nil = p.kunneth_safe() ? j * base.cup_length + 1 : nil_lower_bound(p, j, CupMode::direct);
        facts.push_back({cat, nil, std::nullopt, {rule::nil_index},
                         "nil index " + std::to_string(nil) + " of H*(X^" + std::to_string(j) + ") bounds cat below"});
        // X^j is (r-1)-connected of dimension j*dim; all quantities are
        // integers, so the quotient is floored.
        const int whitehead = (j * dim) / r + 1;
        facts.push_back({cat, 1, whitehead, {rule::dimension_connectivity},
                         "dim(X^" + std::to_string(j) + ")/r + 1 = " + std::to_string(j * dim) + "/" +
                             std::to_string(r) + " + 1"});
        if (j >= 2)
            facts.push_back({cat, 1, j * (cat_upper - 1) + 1,
                             {rule::dimension_connectivity, rule::product_inequality},
                             "cat(X^" + std::to_string(j) + ") <= " + std::to_string(j) + "(cat(X) - 1) + 1 with cat(X) <= " +
                                 std::to_string(cat_upper)});
    }
    return facts;
}

namespace {

class Engine {
public:
    explicit Engine(int n_max)
    {
        table_.n_max = n_max;
        for (const auto& q : quantities_up_to(n_max))
            table_.intervals[q] = Interval{1, std::nullopt, {rule::trivial}, {}};
    }

    void apply(const BoundFact& f)
    {
        auto it = table_.intervals.find(f.quantity);
        if (it == table_.intervals.end())
            return;  // outside 1..n_max
        raise_lower(f.quantity, f.lower, f.provenance);
        if (f.upper)
            cut_upper(f.quantity, *f.upper, f.provenance);
    }

    /// a <= b: lower(b) >= lower(a), upper(a) <= upper(b).
    bool less_equal(Quantity a, Quantity b, const char* tag)
    {
        if (!table_.intervals.count(a) || !table_.intervals.count(b))
            return false;
        bool changed = false;
        const Interval ia = table_.intervals.at(a);
        const Interval ib = table_.intervals.at(b);
        changed |= raise_lower(b, ia.lower, extend(ia.lower_chain, tag));
        if (ib.upper)
            changed |= cut_upper(a, *ib.upper, extend(ib.upper_chain, tag));
        return changed;
    }

    bool equal(Quantity a, Quantity b, const char* tag)
    {
        bool changed = less_equal(a, b, tag);
        changed |= less_equal(b, a, tag);
        return changed;
    }

    IntervalTable take() { return std::move(table_); }

private:
    static std::vector<std::string> extend(std::vector<std::string> chain, const char* tag)
    {
        chain.emplace_back(tag);
        return chain;
    }

    bool raise_lower(Quantity q, int value, const std::vector<std::string>& chain)
    {
        Interval& iv = table_.intervals.at(q);
        if (value <= iv.lower)
            return false;
        table_.log.push_back({q, false, iv.lower, value, chain});
        iv.lower = value;
        iv.lower_chain = chain;
        check(q, iv);
        return true;
    }

    bool cut_upper(Quantity q, int value, const std::vector<std::string>& chain)
    {
        Interval& iv = table_.intervals.at(q);
        if (iv.upper && value >= *iv.upper)
            return false;
        table_.log.push_back({q, true, iv.upper, value, chain});
        iv.upper = value;
        iv.upper_chain = chain;
        check(q, iv);
        return true;
    }

    static void check(Quantity q, const Interval& iv)
    {
        if (iv.upper && iv.lower > *iv.upper)
            throw ContradictionError(q, iv.lower, *iv.upper, iv.lower_chain, iv.upper_chain);
    }

    IntervalTable table_;
};

}  // namespace

IntervalTable propagate(const std::vector<BoundFact>& facts, int n_max)
{
    if (n_max < 1)
        throw InvalidArgument("n_max must be >= 1");
    Engine engine(n_max);
    for (const auto& f : facts)
        engine.apply(f);

    // Integer endpoints only move inward, so this terminates.
    for (bool changed = true; changed;) {
        changed = false;
        for (int j = 1; j <= n_max; ++j) {
            const Quantity cat{QuantityKind::CatPower, j}, tc{QuantityKind::Tc, j}, ltc{QuantityKind::Ltc, j};
            changed |= engine.equal(tc, cat, rule::tc_equals_cat);
            changed |= engine.equal(ltc, tc, rule::ltc_equals_tc);
            if (j + 1 <= n_max)
                changed |= engine.less_equal(tc, Quantity{QuantityKind::Tc, j + 1}, rule::tc_monotone);
            if (j >= 2) {
                const Quantity TC{QuantityKind::TC, j}, LTC{QuantityKind::LTC, j};
                changed |= engine.equal(LTC, TC, rule::LTC_equals_TC);
                changed |= engine.less_equal(TC, tc, rule::TC_below_tc);
                changed |= engine.less_equal(Quantity{QuantityKind::Tc, j - 1}, TC, rule::tc_below_TC);
            }
        }
    }
    return engine.take();
}

std::vector<TableRow> tc_table(const std::vector<SpaceEntry>& entries, int n_max)
{
    std::vector<std::vector<TableRow>> per_entry(entries.size());
    std::exception_ptr failure;
    const long count = static_cast<long>(entries.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (long e = 0; e < count; ++e) {
        try {
            const auto& entry = entries[static_cast<std::size_t>(e)];
            const IntervalTable table = propagate(seed_facts(entry, n_max), n_max);
            for (int n = 1; n <= n_max; ++n)
                per_entry[static_cast<std::size_t>(e)].push_back(
                    {entry.designator, entry.title, n, table.at({QuantityKind::Tc, n}), entry.expected_tc(n)});
        }
        catch (...) {
#pragma omp critical(tcb_table_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<TableRow> rows;
    for (auto& block : per_entry)
        for (auto& row : block)
            rows.push_back(std::move(row));
    return rows;
}

namespace {

std::pair<int, int> parse_range(const std::string& field)
{
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        }
        catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size())
            throw ParseError("malformed grid field '" + field + "'", 0);
        return v;
    };
    const auto dots = field.find("..");
    if (dots == std::string::npos) {
        const int v = to_int(field);
        return {v, v};
    }
    const std::pair<int, int> range{to_int(field.substr(0, dots)), to_int(field.substr(dots + 2))};
    if (range.first > range.second)
        throw ParseError("empty range '" + field + "'", 0);
    return range;
}

void expand_fields(const std::string& key, const std::vector<std::pair<int, int>>& ranges, std::size_t at,
                   std::vector<int>& current, std::vector<SpaceEntry>& out)
{
    if (at == ranges.size()) {
        std::string designator = key;
        for (int v : current)
            designator += ":" + std::to_string(v);
        out.push_back(space(designator));
        return;
    }
    for (int v = ranges[at].first; v <= ranges[at].second; ++v) {
        current.push_back(v);
        expand_fields(key, ranges, at + 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<SpaceEntry> expand_grid(const std::string& grid)
{
    std::vector<SpaceEntry> out;
    std::stringstream items(grid);
    std::string item;
    while (std::getline(items, item, ',')) {
        std::erase_if(item, [](char c) { return c == ' ' || c == '\t'; });
        if (item.empty())
            continue;
        std::stringstream fields(item);
        std::string key, field;
        std::getline(fields, key, ':');
        std::vector<std::pair<int, int>> ranges;
        while (std::getline(fields, field, ':'))
            ranges.push_back(parse_range(field));
        std::vector<int> current;
        expand_fields(key, ranges, 0, current, out);
    }
    return out;
}

std::string default_grid()
{
    return "sphere:1..4,spheres:1..4:1..4,torus-sum:1..3,proj-sum:1..3,rp:1..4,cp:1..4,conf:2..4:1..4";
}

}  // namespace tcb
