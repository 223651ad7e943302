#include "tcbounds/ringfile.hpp"

#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "tcbounds/errors.hpp"

namespace tcb {

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

long long to_integer(const std::string& s, std::size_t line)
{
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    }
    catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size())
        throw ParseError("expected an integer, got '" + s + "'", line);
    return v;
}

/// [A-Za-z][A-Za-z0-9_]* with an optional factor tag "<digits>".
bool valid_name(const std::string& name)
{
    static const std::regex pattern("[A-Za-z][A-Za-z0-9_]*(<[0-9]+>)?");
    return std::regex_match(name, pattern);
}

}  // namespace

Presentation parse_ring_file(std::string_view text)
{
    Coefficients coefficients = Coefficients::integers();
    std::optional<int> top;
    std::vector<Generator> gens;
    std::vector<std::pair<std::string, std::size_t>> rels;
    bool kunneth_safe = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string content = trim(std::string_view(raw).substr(0, hash));
        if (content.empty())
            continue;
        std::istringstream words(content);
        std::string keyword;
        words >> keyword;
        std::string rest;
        std::getline(words, rest);
        rest = trim(rest);

        if (keyword == "rel") {
            if (rest.empty())
                throw ParseError("empty relation", line);
            rels.emplace_back(rest, line);
            continue;
        }
        if (!rels.empty() && keyword != "kunneth-safe")
            throw ParseError("'" + keyword + "' after the first relation", line);
        if (keyword == "coeff") {
            if (rest == "Z")
                coefficients = Coefficients::integers();
            else if (rest.rfind("Zmod", 0) == 0)
                coefficients = Coefficients::modulo(to_integer(trim(rest.substr(4)), line));
            else
                throw ParseError("expected 'Z' or 'Zmod <p>'", line);
        }
        else if (keyword == "topdeg") {
            const long long d = to_integer(rest, line);
            if (d < 0 || d > 4096)
                throw InvalidArgument("top degree out of range on line " + std::to_string(line));
            top = static_cast<int>(d);
        }
        else if (keyword == "gen") {
            std::istringstream fields(rest);
            std::string name, degree, extra;
            fields >> name >> degree;
            if (name.empty() || degree.empty() || (fields >> extra))
                throw ParseError("expected 'gen <name> <degree>'", line);
            if (!valid_name(name))
                throw ParseError("invalid generator name '" + name + "'", line);
            const long long d = to_integer(degree, line);
            if (d < 1 || d > 4096)
                throw InvalidArgument("generator degree out of range on line " + std::to_string(line));
            gens.push_back({name, static_cast<int>(d)});
        }
        else if (keyword == "kunneth-safe") {
            if (!rest.empty())
                throw ParseError("'kunneth-safe' takes no arguments", line);
            kunneth_safe = true;
        }
        else {
            throw ParseError("unknown keyword '" + keyword + "'", line);
        }
    }
    if (!top)
        throw ParseError("missing 'topdeg'", line);

    auto alg = make_algebra(coefficients, std::move(gens), *top);
    std::vector<Element> relations;
    for (const auto& [textual, at] : rels) {
        try {
            relations.push_back(parse_element(textual, alg));
        }
        catch (const ParseError& e) {
            throw ParseError(std::string("relation: ") + e.what(), at);
        }
        if (!relations.back().is_homogeneous())
            throw InvalidArgument("relation on line " + std::to_string(at) + " is not homogeneous");
    }
    return Presentation(alg, std::move(relations), kunneth_safe);
}

Presentation load_ring_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open ring file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_ring_file(buffer.str());
}

std::string render_ring_file(const Presentation& p)
{
    const auto& alg = *p.algebra();
    std::ostringstream out;
    const auto& k = alg.coefficients();
    out << "coeff " << (k.is_modular() ? "Zmod " + std::to_string(k.modulus()) : std::string("Z")) << '\n';
    out << "topdeg " << alg.top_degree() << '\n';
    for (const auto& g : alg.generators())
        out << "gen " << g.name << ' ' << g.degree << '\n';
    for (const auto& r : p.relations())
        if (!r.is_zero())  // e.g. odd squares, already zero in the ambient algebra
            out << "rel " << render(r) << '\n';
    if (p.kunneth_safe())
        out << "kunneth-safe\n";
    return out.str();
}

}  // namespace tcb
