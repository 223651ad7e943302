#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "tcbounds/bounds.hpp"
#include "tcbounds/catalog.hpp"
#include "tcbounds/cuplength.hpp"
#include "tcbounds/errors.hpp"
#include "tcbounds/kunneth.hpp"
#include "tcbounds/paths_check.hpp"
#include "tcbounds/ringfile.hpp"

using nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, property_failure = 1, parse_failure = 2, invalid_parameters = 3, contradiction = 4 };

struct Globals {
    bool json = false;
    std::uint64_t seed = 1;
    int threads = 0;
};

struct Target {
    std::string name;
    tcb::Presentation presentation;
};

Target load_target(const std::string& text)
{
    if (std::filesystem::is_regular_file(text))
        return {text, tcb::load_ring_file(text)};
    auto entry = tcb::space(text);
    return {entry.designator, entry.presentation};
}

ordered_json upper_json(const std::optional<int>& upper)
{
    return upper ? ordered_json(*upper) : ordered_json("inf");
}

std::string scientific(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

void print(const ordered_json& j)
{
    std::cout << j.dump(2) << '\n';
}

int cmd_catalog(const Globals& g)
{
    ordered_json out = ordered_json::array();
    for (const auto& d : tcb::list_catalog()) {
        ordered_json params = ordered_json::array();
        std::string ranges;
        for (const auto& p : d.params) {
            params.push_back({{"name", p.name}, {"min", p.min}, {"max", p.max}});
            ranges += " " + p.name + "=" + std::to_string(p.min) + ".." + std::to_string(p.max);
        }
        if (g.json) {
            out.push_back({{"key", d.key},
                           {"title", d.title},
                           {"coefficients", d.coefficients},
                           {"params", params},
                           {"tc_n", d.closed_form}});
        }
        else {
            std::cout << d.key << "  " << d.title << "  coeff " << d.coefficients << " " << ranges
                      << "  tc_n = " << d.closed_form << '\n';
        }
    }
    if (g.json)
        print(out);
    return ok;
}

int cmd_nil(const Globals& g, const std::string& target_text, int power, std::string mode_text)
{
    const Target target = load_target(target_text);
    const auto& p = target.presentation;
    if (mode_text.empty())
        mode_text = p.kunneth_safe() ? "factorized" : "direct";
    const tcb::CupMode mode = tcb::parse_cup_mode(mode_text);
    const auto result = tcb::cup_length_power(p, power, mode);

    const bool untagged = mode == tcb::CupMode::direct && power == 1 && !p.kunneth_safe();
    const auto& gens = p.algebra()->generators();
    std::vector<std::string> witness;
    for (auto index : result.witness) {
        if (untagged)
            witness.push_back(gens[index].name);
        else
            witness.push_back(tcb::tagged_name(gens[index % gens.size()].name,
                                               static_cast<int>(index / gens.size()) + 1));
    }
    std::string product;
    for (const auto& w : witness)
        product += (product.empty() ? "" : "*") + w;
    if (product.empty())
        product = "1";

    if (g.json) {
        print({{"space", target.name},
               {"quantity", "nil"},
               {"n", power},
               {"lower", result.nil_index},
               {"upper", result.nil_index},
               {"provenance", {tcb::rule::nil_index, tcb::to_string(result.mode)}},
               {"cup_length", result.cup_length},
               {"nil_index", result.nil_index},
               {"witness", witness},
               {"mode", tcb::to_string(result.mode)}});
    }
    else {
        std::cout << "space       " << target.name << '\n'
                  << "power       " << power << '\n'
                  << "mode        " << tcb::to_string(result.mode) << '\n'
                  << "cup-length  " << result.cup_length << '\n'
                  << "nil-index   " << result.nil_index << '\n'
                  << "witness     " << product << '\n';
    }
    return ok;
}

std::string chain_text(const std::vector<std::string>& chain)
{
    std::string out;
    for (const auto& c : chain)
        out += (out.empty() ? "" : " > ") + c;
    return out.empty() ? "-" : out;
}

ordered_json provenance(const tcb::Interval& iv)
{
    ordered_json out = ordered_json::array();
    for (const auto& c : iv.lower_chain)
        out.push_back("lower:" + c);
    for (const auto& c : iv.upper_chain)
        out.push_back("upper:" + c);
    return out;
}

int cmd_bounds(const Globals& g, const std::string& designator, int n)
{
    if (n < 1)
        throw tcb::InvalidArgument("--n must be >= 1");
    const auto entry = tcb::space(designator);
    const auto table = tcb::propagate(tcb::seed_facts(entry, n), n);
    ordered_json out = ordered_json::array();
    for (const auto& q : tcb::quantities_up_to(n)) {
        const auto& iv = table.at(q);
        if (g.json) {
            out.push_back({{"space", entry.designator},
                           {"quantity", q.kind_name()},
                           {"n", q.index},
                           {"lower", iv.lower},
                           {"upper", upper_json(iv.upper)},
                           {"provenance", provenance(iv)}});
        }
        else {
            std::string label = q.label();
            label.resize(std::max<std::size_t>(label.size(), 10), ' ');
            std::string value = iv.render();
            value.resize(std::max<std::size_t>(value.size(), 10), ' ');
            std::cout << label << value << "lower: " << chain_text(iv.lower_chain)
                      << "; upper: " << chain_text(iv.upper_chain) << '\n';
        }
    }
    if (g.json)
        print(out);
    return ok;
}

int cmd_table(const Globals& g, int n_max, const std::string& grid)
{
    if (n_max < 1)
        throw tcb::InvalidArgument("--n-max must be >= 1");
    const auto rows = tcb::tc_table(tcb::expand_grid(grid), n_max);
    ordered_json out = ordered_json::array();
    for (const auto& row : rows) {
        const std::string status = !row.resolved() ? "unresolved" : !row.expected ? "no-closed-form"
                                   : row.matches() ? "ok" : "mismatch";
        if (g.json) {
            out.push_back({{"space", row.space},
                           {"quantity", "tc"},
                           {"n", row.n},
                           {"lower", row.tc.lower},
                           {"upper", upper_json(row.tc.upper)},
                           {"provenance", provenance(row.tc)},
                           {"title", row.title},
                           {"expected", row.expected ? ordered_json(*row.expected) : ordered_json(nullptr)},
                           {"status", status}});
        }
        else {
            std::string space = row.space, title = row.title;
            space.resize(std::max<std::size_t>(space.size(), 14), ' ');
            title.resize(std::max<std::size_t>(title.size(), 14), ' ');
            std::string value = row.tc.render();
            value.resize(std::max<std::size_t>(value.size(), 10), ' ');
            std::cout << space << title << "tc_" << row.n << " = " << value << "expected "
                      << (row.expected ? std::to_string(*row.expected) : "-") << "  " << status << '\n';
        }
    }
    if (g.json)
        print(out);
    return ok;
}

int cmd_check_paths(const Globals& g, const std::string& suite, int levels, int samples)
{
    tcb::paths::SuiteReport report;
    if (suite == "reparam")
        report = tcb::paths::run_reparam_suite(g.seed, samples);
    else if (suite == "lift")
        report = tcb::paths::run_lift_suite(g.seed, levels);
    else if (suite == "section")
        report = tcb::paths::run_section_suite(g.seed, samples);
    else
        throw tcb::InvalidArgument("unknown suite '" + suite + "'");

    if (g.json) {
        ordered_json lines = ordered_json::array();
        for (const auto& l : report.lines)
            lines.push_back({{"label", l.label},
                             {"worst_error", l.worst_error},
                             {"tolerance", l.tolerance},
                             {"passed", l.passed}});
        print({{"suite", report.name}, {"seed", g.seed}, {"passed", report.passed()}, {"checks", lines}});
    }
    else {
        for (const auto& l : report.lines)
            std::cout << (l.passed ? "PASS " : "FAIL ") << l.label << "  worst " << scientific(l.worst_error)
                      << "  tolerance " << scientific(l.tolerance) << '\n';
        std::cout << report.name << ": " << (report.passed() ? "all checks passed" : "FAILED") << '\n';
    }
    return report.passed() ? ok : property_failure;
}

int cmd_ring_show(const Globals& g, const std::string& target_text)
{
    const Target target = load_target(target_text);
    const auto& p = target.presentation;
    if (g.json) {
        const auto& alg = *p.algebra();
        ordered_json gens = ordered_json::array();
        for (const auto& gen : alg.generators())
            gens.push_back({{"name", gen.name}, {"degree", gen.degree}});
        ordered_json rels = ordered_json::array();
        for (const auto& r : p.relations())
            rels.push_back(tcb::render(r));
        print({{"space", target.name},
               {"coefficients", alg.coefficients().name()},
               {"top_degree", alg.top_degree()},
               {"generators", gens},
               {"relations", rels},
               {"kunneth_safe", p.kunneth_safe()}});
    }
    else {
        std::cout << tcb::render_ring_file(p);
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bounds for sequential topological complexity from cohomology"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "Structured output");
    app.add_option("--seed", g.seed, "Seed for the path suites");
    app.add_option("--threads", g.threads, "OpenMP thread count")->check(CLI::PositiveNumber);

    app.add_subcommand("catalog", "List the space families");

    auto* nil = app.add_subcommand("nil", "Cup-length and nil index of X^n");
    std::string nil_target, mode;
    int power = 1;
    nil->add_option("space", nil_target, "Designator such as rp:3, or a ring file")->required();
    nil->add_option("--power", power, "Tensor power n");
    nil->add_option("--mode", mode, "direct or factorized");

    auto* bounds = app.add_subcommand("bounds", "Propagated intervals up to index n");
    std::string bounds_target;
    int bounds_n = 2;
    bounds->add_option("space", bounds_target, "Designator")->required();
    bounds->add_option("--n", bounds_n, "Largest index j");

    auto* table = app.add_subcommand("table", "tc_n over a grid of spaces");
    int n_max = 4;
    std::string grid = tcb::default_grid();
    table->add_option("--n-max", n_max, "Largest n");
    table->add_option("--grid", grid, "Comma-separated designators with lo..hi ranges");

    auto* check = app.add_subcommand("check-paths", "Sampled checks of the path formulas");
    std::string suite;
    int levels = 5, samples = 100;
    check->add_option("--suite", suite, "reparam, lift or section")->required();
    check->add_option("--levels", levels, "Refinement levels for continuity");
    check->add_option("--samples", samples, "Random paths or tuples per n");

    auto* ring = app.add_subcommand("ring", "Ring presentations");
    ring->require_subcommand(1);
    auto* show = ring->add_subcommand("show", "Print a presentation in ring-file form");
    std::string ring_target;
    show->add_option("space", ring_target, "Designator or ring file")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : parse_failure;
    }

    if (g.threads > 0)
        omp_set_num_threads(g.threads);

    try {
        if (app.got_subcommand("catalog"))
            return cmd_catalog(g);
        if (*nil)
            return cmd_nil(g, nil_target, power, mode);
        if (*bounds)
            return cmd_bounds(g, bounds_target, bounds_n);
        if (*table)
            return cmd_table(g, n_max, grid);
        if (*check)
            return cmd_check_paths(g, suite, levels, samples);
        if (*show)
            return cmd_ring_show(g, ring_target);
    }
    catch (const tcb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return parse_failure;
    }
    catch (const tcb::ContradictionError& e) {
        std::cerr << "contradiction: " << e.what() << '\n';
        return contradiction;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return invalid_parameters;
    }
    return invalid_parameters;
}
