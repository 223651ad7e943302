#include "doctest.h"
#include "tcbounds/catalog.hpp"
#include "tcbounds/errors.hpp"
#include "tcbounds/quotient.hpp"

using namespace tcb;

TEST_CASE("list_catalog")
{
    const auto& c = list_catalog();
    REQUIRE(c.size() == 7);
    std::vector<std::string> keys;
    for (const auto& d : c) {
        keys.push_back(d.key);
        CHECK((d.coefficients == "Z" || d.coefficients == "Z/2"));
        CHECK(!d.closed_form.empty());
    }
    CHECK(keys == std::vector<std::string>{"sphere", "spheres", "torus-sum", "proj-sum", "rp", "cp", "conf"});
    const auto& conf = descriptor(Family::ConfigurationSpace);
    CHECK(!conf.accepts({1, 3}));
    CHECK(conf.accepts({2, 3}));
    CHECK(!conf.accepts({2}));
    CHECK(descriptor(Family::RealProjective).coefficients == "Z/2");
    CHECK(descriptor(Family::NonorientableSurface).coefficients == "Z/2");
}

TEST_CASE("space examples")
{
    const auto s2 = space(Family::Sphere, {2});
    CHECK(s2.dimension == 2);
    CHECK(s2.connectivity == 2);
    CHECK(s2.presentation.algebra()->size() == 1);
    CHECK(s2.presentation.relations().size() == 1);
    for (int n = 1; n <= 4; ++n)
        CHECK(s2.expected_tc(n) == n + 1);

    const auto conf = space(Family::ConfigurationSpace, {2, 3});
    CHECK(conf.presentation.algebra()->size() == 3);
    for (const auto& g : conf.presentation.algebra()->generators())
        CHECK(g.degree == 1);
    CHECK(conf.presentation.relations().size() == 4);
    CHECK(conf.dimension == 2);
    CHECK(conf.connectivity == 1);

    const auto rp2 = space(Family::NonorientableSurface, {1});
    CHECK(rp2.presentation.coefficients() == Coefficients::modulo(2));
    CHECK(rp2.presentation.top_degree() == 2);
    CHECK(rp2.presentation.algebra()->size() == 1);
    const auto& g = rp2.presentation.algebra();
    const auto gamma = Element::generator(g, 0);
    CHECK(!is_zero_in_quotient(rp2.presentation, gamma * gamma));

    CHECK_THROWS_AS(space(Family::ConfigurationSpace, {1, 3}), InvalidArgument);
    CHECK_THROWS_AS(space(Family::Sphere, {0}), InvalidArgument);
    CHECK_THROWS_AS(space(Family::Sphere, {1, 2}), InvalidArgument);
}

TEST_CASE("metadata invariants")
{
    for (int m = 1; m <= 4; ++m) {
        CHECK(space(Family::Sphere, {m}).dimension == m);
        CHECK(space(Family::Sphere, {m}).connectivity == m);
        CHECK(space(Family::RealProjective, {m}).dimension == m);
        CHECK(space(Family::RealProjective, {m}).connectivity == 1);
        CHECK(space(Family::ComplexProjective, {m}).dimension == 2 * m);
        CHECK(space(Family::ComplexProjective, {m}).connectivity == 2);
        for (int k = 1; k <= 4; ++k) {
            CHECK(space(Family::SphereProduct, {m, k}).dimension == m * k);
            CHECK(space(Family::SphereProduct, {m, k}).connectivity == m);
            if (m >= 2) {
                const auto c = space(Family::ConfigurationSpace, {m, k});
                CHECK(c.dimension == (m - 1) * (k - 1));
                CHECK(c.connectivity == m - 1);
                CHECK(c.presentation.algebra()->size() == static_cast<std::size_t>(k * (k - 1) / 2));
            }
        }
    }
    for (int g = 1; g <= 3; ++g) {
        for (auto f : {Family::OrientableSurface, Family::NonorientableSurface}) {
            const auto e = space(f, {g});
            CHECK(e.dimension == 2);
            CHECK(e.connectivity == 1);
            CHECK(e.kunneth_safe);
            QuotientRing q(e.presentation);
            CHECK(graded_basis(e.presentation, 2).size() - q.ideal_rank(2) == 1);
            CHECK(graded_basis(e.presentation, 1).size() - q.ideal_rank(1) ==
                  static_cast<std::size_t>(f == Family::OrientableSurface ? 2 * g : g));
        }
    }
    for (const auto& d : list_catalog()) {
        std::vector<int> params;
        for (const auto& r : d.params)
            params.push_back(r.min == 1 && r.max > 1 ? 2 : r.min + 1);
        const auto e = space(d.family, params);
        CHECK(e.dimension == e.presentation.top_degree());
        CHECK(e.connectivity >= 1);
    }
}

TEST_CASE("surface top classes are identified")
{
    const auto t = space("torus-sum:3").presentation;
    const auto& alg = t.algebra();
    auto top = [&](int j) {
        return Element::generator(alg, *alg->index_of("a" + std::to_string(j))) *
               Element::generator(alg, *alg->index_of("b" + std::to_string(j)));
    };
    CHECK(is_zero_in_quotient(t, top(1) - top(2)));
    CHECK(is_zero_in_quotient(t, top(1) - top(3)));
    CHECK(!is_zero_in_quotient(t, top(1)));

    const auto p = space("proj-sum:3").presentation;
    auto square = [&](int j) {
        const auto x = Element::generator(p.algebra(), *p.algebra()->index_of("g" + std::to_string(j)));
        return x * x;
    };
    CHECK(is_zero_in_quotient(p, square(1) - square(3)));
    CHECK(!is_zero_in_quotient(p, square(2)));
}

TEST_CASE("designators")
{
    CHECK(space("conf:3:4").title == "F(R^3,4)");
    CHECK(space("conf:3:4").designator == "conf:3:4");
    CHECK(space("spheres:2:3").family == Family::SphereProduct);
    CHECK(space("cp:1").expected_tc(2) == 3);
    CHECK(space("conf:2:11").presentation.algebra()->index_of("a1_11").has_value());
    CHECK_THROWS_AS(space("klein:1"), ParseError);
    CHECK_THROWS_AS(space("sphere"), ParseError);
    CHECK_THROWS_AS(space("sphere:x"), ParseError);
    CHECK_THROWS_AS(space("sphere:1:2"), ParseError);
    CHECK_THROWS_AS(space("conf:1:3"), InvalidArgument);
    CHECK_THROWS_AS(space("rp:65"), InvalidArgument);
}
