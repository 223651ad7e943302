#include <random>

#include "doctest.h"
#include "support/random_elements.hpp"
#include "tcbounds/catalog.hpp"
#include "tcbounds/errors.hpp"
#include "tcbounds/kunneth.hpp"
#include "tcbounds/quotient.hpp"

using namespace tcb;

namespace {

std::vector<std::string> names(const Presentation& p)
{
    std::vector<std::string> out;
    for (const auto& g : p.algebra()->generators())
        out.push_back(g.name);
    return out;
}

std::vector<std::string> relations(const Presentation& p)
{
    std::vector<std::string> out;
    for (const auto& r : p.relations())
        out.push_back(render(r));
    return out;
}

}  // namespace

TEST_CASE("tensor_power examples")
{
    const auto s3 = tensor_power(space("sphere:2").presentation, 3);
    CHECK(names(s3.result) == std::vector<std::string>{"a<1>", "a<2>", "a<3>"});
    CHECK(relations(s3.result) == std::vector<std::string>{"a<1>^2", "a<2>^2", "a<3>^2"});
    CHECK(s3.result.top_degree() == 6);
    CHECK(s3.result.kunneth_safe());

    const auto rp = tensor_power(space("rp:2").presentation, 2);
    CHECK(names(rp.result) == std::vector<std::string>{"g<1>", "g<2>"});
    CHECK(relations(rp.result) == std::vector<std::string>{"g<1>^3", "g<2>^3"});
    CHECK(rp.result.top_degree() == 4);

    const auto conf = space("conf:2:3").presentation;
    const auto one = tensor_power(conf, 1);
    CHECK(one.result.algebra()->size() == conf.algebra()->size());
    CHECK(one.result.relations().size() == conf.relations().size());
    CHECK(one.result.top_degree() == conf.top_degree());
    for (std::size_t i = 0; i < conf.relations().size(); ++i)
        CHECK(one.inject(conf.relations()[i], 1) == one.result.relations()[i]);
}

TEST_CASE("tensor_power errors")
{
    const auto p = space("sphere:2").presentation;
    CHECK_THROWS_AS(tensor_power(p, 0), InvalidArgument);
    const Presentation unsafe(p.algebra(), p.relations(), false);
    CHECK_THROWS_AS(tensor_power(unsafe, 2), InvalidArgument);
    const auto t = tensor_power(p, 2);
    CHECK_THROWS_AS(t.inject(Element::generator(p.algebra(), 0), 3), InvalidArgument);
    CHECK_THROWS_AS(t.inject(Element::generator(p.algebra(), 0), 0), InvalidArgument);
    CHECK_THROWS_AS(t.inject(Element::generator(t.result.algebra(), 0), 1), MismatchError);
}

TEST_CASE("inject examples")
{
    const auto s = space("sphere:3").presentation;
    const auto t = tensor_power(s, 3);
    const auto a = Element::generator(s.algebra(), 0);
    CHECK(render(t.inject(a, 2)) == "a<2>");
    CHECK(t.generator_index(0, 2) == 1);

    const auto conf = space("conf:2:3").presentation;
    const auto tc = tensor_power(conf, 2);
    const auto arnold = parse_element("a12*a23 - a12*a13 - a13*a23", conf);
    CHECK(tc.inject(arnold, 1) == parse_element("a12<1>*a23<1> - a12<1>*a13<1> - a13<1>*a23<1>", tc.result));

    const auto s2 = tensor_power(space("sphere:2").presentation, 2);
    const auto base = Element::generator(s2.base.algebra(), 0);
    CHECK(!is_zero_in_quotient(s2.result, s2.inject(base, 1) * s2.inject(base, 2)));
}

TEST_CASE("inject is a ring map with cross-factor Koszul signs")
{
    // The base truncates above its cap and the power only above n times it,
    // so multiplicativity holds in the quotient rather than termwise.
    std::mt19937_64 rng(17);
    for (std::string designator : {"torus-sum:2", "conf:3:3", "rp:3", "spheres:1:2", "cp:2"}) {
        CAPTURE(designator);
        const auto p = space(designator).presentation;
        const auto t = tensor_power(p, 3);
        QuotientRing power(t.result);
        for (int trial = 0; trial < 100; ++trial) {
            const auto x = gen::homogeneous(p.algebra(), rng);
            const auto y = gen::homogeneous(p.algebra(), rng);
            const int i = 1 + trial % 3, j = 1 + (trial / 3) % 3;
            CHECK(power.is_zero(t.inject(x * y, i) - t.inject(x, i) * t.inject(y, i)));
            CHECK(t.inject(x + y, i) == t.inject(x, i) + t.inject(y, i));
            if (i != j) {
                const int sign = (*x.degree() * *y.degree()) % 2 == 0 ? 1 : -1;
                CHECK(t.inject(x, i) * t.inject(y, j) == (t.inject(y, j) * t.inject(x, i)).scaled(sign));
            }
        }
    }
}

TEST_CASE("products of nonzero classes from distinct factors are nonzero")
{
    for (std::string designator : {"sphere:2", "torus-sum:1", "proj-sum:2", "rp:2", "conf:2:3", "cp:1"}) {
        CAPTURE(designator);
        const auto p = space(designator).presentation;
        const auto t = tensor_power(p, 2);
        QuotientRing base(p), power(t.result);
        for (int d = 1; d <= p.top_degree(); ++d)
            for (const auto& m : graded_basis(p, d).monomials) {
                const auto x = Element::monomial(p.algebra(), m);
                if (base.is_zero(x))
                    continue;
                for (int e = 1; e <= p.top_degree(); ++e)
                    for (const auto& n : graded_basis(p, e).monomials) {
                        const auto y = Element::monomial(p.algebra(), n);
                        if (!base.is_zero(y))
                            CHECK(!power.is_zero(t.inject(x, 1) * t.inject(y, 2)));
                    }
            }
    }
}
