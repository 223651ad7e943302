#include "tcbounds/catalog.hpp"

#include <charconv>

#include "tcbounds/errors.hpp"

namespace tcb {

bool FamilyDescriptor::accepts(const std::vector<int>& values) const
{
    if (values.size() != params.size())
        return false;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] < params[i].min || values[i] > params[i].max)
            return false;
    return true;
}

const std::vector<FamilyDescriptor>& list_catalog()
{
    static const std::vector<FamilyDescriptor> families = {
        {Family::Sphere, "sphere", "S^m", "Z", {{"m", 1, 64}}, "n+1"},
        {Family::SphereProduct, "spheres", "(S^m)^k", "Z", {{"m", 1, 64}, {"k", 1, 16}}, "nk+1"},
        {Family::OrientableSurface, "torus-sum", "#_g T^2", "Z", {{"g", 1, 16}}, "2n+1"},
        {Family::NonorientableSurface, "proj-sum", "#_g P^2", "Z/2", {{"g", 1, 16}}, "2n+1"},
        {Family::RealProjective, "rp", "RP^m", "Z/2", {{"m", 1, 64}}, "nm+1"},
        {Family::ComplexProjective, "cp", "CP^m", "Z", {{"m", 1, 64}}, "nm+1"},
        {Family::ConfigurationSpace, "conf", "F(R^m,k)", "Z", {{"m", 2, 64}, {"k", 1, 12}}, "n(k-1)+1"},
    };
    return families;
}

const FamilyDescriptor& descriptor(Family family)
{
    for (const auto& d : list_catalog())
        if (d.family == family)
            return d;
    throw InvalidArgument("unknown family");
}

std::optional<int> SpaceEntry::expected_tc(int n) const
{
    if (!closed_form_tc)
        return std::nullopt;
    return closed_form_tc(n);
}

namespace {

std::string indexed(const std::string& stem, int i)
{
    return stem + std::to_string(i);
}

std::string pair_name(int a, int b, int k)
{
    if (k < 10)
        return "a" + std::to_string(a) + std::to_string(b);
    return "a" + std::to_string(a) + "_" + std::to_string(b);
}

struct Builder {
    Coefficients coefficients;
    std::vector<Generator> generators;
    std::vector<std::string> relations;
    int top_degree;

    Presentation build() const
    {
        auto alg = make_algebra(coefficients, generators, top_degree);
        std::vector<Element> rels;
        for (const auto& r : relations)
            rels.push_back(parse_element(r, alg));
        return Presentation(alg, std::move(rels), true);
    }
};

Builder sphere_product(int m, int k, const std::string& stem)
{
    Builder b{Coefficients::integers(), {}, {}, m * k};
    for (int i = 1; i <= k; ++i) {
        const std::string a = k == 1 ? stem : indexed(stem, i);
        b.generators.push_back({a, m});
        b.relations.push_back(a + "*" + a);
    }
    return b;
}

Builder orientable_surface(int g)
{
    Builder b{Coefficients::integers(), {}, {}, 2};
    for (int i = 1; i <= g; ++i) {
        b.generators.push_back({indexed("a", i), 1});
        b.generators.push_back({indexed("b", i), 1});
    }
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            if (i != j)
                b.relations.push_back(indexed("a", i) + "*" + indexed("b", j));
    for (int k = 1; k <= g; ++k)
        b.relations.push_back(indexed("a", k) + "*" + indexed("b", k) + " + " + indexed("b", k) + "*" + indexed("a", k));
    for (int i = 1; i <= g; ++i)
        for (int j = i; j <= g; ++j) {
            b.relations.push_back(indexed("a", i) + "*" + indexed("a", j));
            b.relations.push_back(indexed("b", i) + "*" + indexed("b", j));
        }
    // Closed surface: every a_j b_j is the fundamental class.
    for (int j = 2; j <= g; ++j)
        b.relations.push_back("a1*b1 - " + indexed("a", j) + "*" + indexed("b", j));
    return b;
}

Builder nonorientable_surface(int g)
{
    Builder b{Coefficients::modulo(2), {}, {}, 2};
    for (int i = 1; i <= g; ++i)
        b.generators.push_back({indexed("g", i), 1});
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j)
            b.relations.push_back(indexed("g", i) + "*" + indexed("g", j));
    for (int k = 1; k <= g; ++k)
        b.relations.push_back(indexed("g", k) + "^3");
    for (int j = 2; j <= g; ++j)
        b.relations.push_back("g1^2 - " + indexed("g", j) + "^2");
    return b;
}

Builder configuration_space(int m, int k)
{
    Builder b{Coefficients::integers(), {}, {}, (m - 1) * (k - 1)};
    for (int a = 1; a <= k; ++a)
        for (int c = a + 1; c <= k; ++c)
            b.generators.push_back({pair_name(a, c, k), m - 1});
    for (int a = 1; a <= k; ++a)
        for (int c = a + 1; c <= k; ++c)
            b.relations.push_back(pair_name(a, c, k) + "*" + pair_name(a, c, k));
    // Arnold relations.
    for (int a = 1; a <= k; ++a)
        for (int bb = a + 1; bb <= k; ++bb)
            for (int c = bb + 1; c <= k; ++c) {
                const auto ab = pair_name(a, bb, k), bc = pair_name(bb, c, k), ac = pair_name(a, c, k);
                b.relations.push_back(ab + "*" + bc + " - " + ab + "*" + ac + " - " + ac + "*" + bc);
            }
    return b;
}

std::string join(const std::string& key, const std::vector<int>& params)
{
    std::string out = key;
    for (int p : params)
        out += ":" + std::to_string(p);
    return out;
}

}  // namespace

SpaceEntry space(Family family, const std::vector<int>& params)
{
    const FamilyDescriptor& d = descriptor(family);
    if (!d.accepts(params)) {
        std::string ranges;
        for (const auto& r : d.params)
            ranges += " " + r.name + " in [" + std::to_string(r.min) + "," + std::to_string(r.max) + "]";
        throw InvalidArgument("parameters out of range for " + d.key + ":" + ranges);
    }

    Builder b{Coefficients::integers(), {}, {}, 0};
    int connectivity = 1;
    std::string title;
    std::function<int(int)> tc;
    switch (family) {
    case Family::Sphere: {
        const int m = params[0];
        b = sphere_product(m, 1, "a");
        connectivity = m;
        title = "S^" + std::to_string(m);
        tc = [](int n) { return n + 1; };
        break;
    }
    case Family::SphereProduct: {
        const int m = params[0], k = params[1];
        b = sphere_product(m, k, "a");
        connectivity = m;
        title = "(S^" + std::to_string(m) + ")^" + std::to_string(k);
        tc = [k](int n) { return n * k + 1; };
        break;
    }
    case Family::OrientableSurface: {
        b = orientable_surface(params[0]);
        title = "#_" + std::to_string(params[0]) + " T^2";
        tc = [](int n) { return 2 * n + 1; };
        break;
    }
    case Family::NonorientableSurface: {
        b = nonorientable_surface(params[0]);
        title = "#_" + std::to_string(params[0]) + " P^2";
        tc = [](int n) { return 2 * n + 1; };
        break;
    }
    case Family::RealProjective: {
        const int m = params[0];
        b = Builder{Coefficients::modulo(2), {{"g", 1}}, {"g^" + std::to_string(m + 1)}, m};
        title = "RP^" + std::to_string(m);
        tc = [m](int n) { return n * m + 1; };
        break;
    }
    case Family::ComplexProjective: {
        const int m = params[0];
        b = Builder{Coefficients::integers(), {{"b", 2}}, {"b^" + std::to_string(m + 1)}, 2 * m};
        connectivity = 2;
        title = "CP^" + std::to_string(m);
        tc = [m](int n) { return n * m + 1; };
        break;
    }
    case Family::ConfigurationSpace: {
        const int m = params[0], k = params[1];
        b = configuration_space(m, k);
        connectivity = m - 1;
        title = "F(R^" + std::to_string(m) + "," + std::to_string(k) + ")";
        tc = [k](int n) { return n * (k - 1) + 1; };
        break;
    }
    }

    Presentation p = b.build();
    const int dim = p.top_degree();
    return SpaceEntry{family, params, join(d.key, params), title, std::move(p), dim, connectivity, true, tc};
}

SpaceEntry space(std::string_view designator)
{
    const auto colon = designator.find(':');
    const std::string_view key = designator.substr(0, colon);
    const FamilyDescriptor* d = nullptr;
    for (const auto& f : list_catalog())
        if (f.key == key)
            d = &f;
    if (!d)
        throw ParseError("unknown space family '" + std::string(key) + "'", 0);

    std::vector<int> params;
    std::size_t pos = colon;
    while (pos != std::string_view::npos) {
        const std::size_t start = pos + 1;
        const std::size_t next = designator.find(':', start);
        const std::string_view field = designator.substr(start, next == std::string_view::npos ? next : next - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw ParseError("malformed parameter '" + std::string(field) + "' in designator", start);
        params.push_back(value);
        pos = next;
    }
    if (params.size() != d->params.size())
        throw ParseError("designator '" + std::string(designator) + "' needs " + std::to_string(d->params.size()) +
                             " parameter(s)",
                         0);
    return space(d->family, params);
}

}  // namespace tcb
