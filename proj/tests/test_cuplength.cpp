#include <algorithm>
#include <numeric>
#include <random>

#include <omp.h>

#include "doctest.h"
#include "tcbounds/catalog.hpp"
#include "tcbounds/cuplength.hpp"
#include "tcbounds/errors.hpp"
#include "tcbounds/kunneth.hpp"
#include "tcbounds/quotient.hpp"

using namespace tcb;

namespace {

Element product(const AlgebraPtr& alg, const std::vector<std::size_t>& word)
{
    Element x = Element::constant(alg, 1);
    for (auto g : word)
        x = x * Element::generator(alg, g);
    return x;
}

/// Same ring with the generators listed in the order `perm`.
Presentation relabel(const Presentation& p, const std::vector<std::size_t>& perm)
{
    const auto& alg = *p.algebra();
    std::vector<Generator> gens;
    for (auto i : perm)
        gens.push_back(alg.generators()[i]);
    auto target = make_algebra(alg.coefficients(), gens, alg.top_degree());
    std::vector<Element> rels;
    for (const auto& r : p.relations())
        rels.push_back(parse_element(render(r), target));
    return Presentation(target, rels, p.kunneth_safe());
}

}  // namespace

TEST_CASE("cup_length examples")
{
    for (int m : {1, 2, 5}) {
        const auto r = cup_length(space(Family::Sphere, {m}).presentation);
        CHECK(r.cup_length == 1);
        CHECK(r.nil_index == 2);
        CHECK(r.witness == std::vector<std::size_t>{0});
    }
    for (int m : {1, 3, 4}) {
        const auto r = cup_length(space(Family::RealProjective, {m}).presentation);
        CHECK(r.cup_length == m);
        CHECK(r.witness == std::vector<std::size_t>(static_cast<std::size_t>(m), 0));
    }
    for (int m : {2, 3}) {
        for (int k : {2, 3, 4}) {
            CAPTURE(m);
            CAPTURE(k);
            const auto p = space(Family::ConfigurationSpace, {m, k}).presentation;
            const auto r = cup_length(p);
            CHECK(r.cup_length == k - 1);
            CHECK(!is_zero_in_quotient(p, product(p.algebra(), r.witness)));
            // a12 * a23 * ... * a(k-1)k
            std::vector<std::size_t> chain;
            for (int a = 1; a < k; ++a)
                chain.push_back(*p.algebra()->index_of("a" + std::to_string(a) + std::to_string(a + 1)));
            CHECK(!is_zero_in_quotient(p, product(p.algebra(), chain)));
        }
    }
    const auto conf = space("conf:2:3").presentation;
    CHECK(cup_length(conf).witness == std::vector<std::size_t>{0, 1});  // a12*a13, the least index sequence

    const Presentation empty(make_algebra(Coefficients::integers(), {}, 0), {});
    const auto r = cup_length(empty);
    CHECK(r.cup_length == 0);
    CHECK(r.nil_index == 1);
    CHECK(r.witness.empty());
}

TEST_CASE("degenerate multiplications")
{
    auto alg = make_algebra(Coefficients::integers(), {{"x", 1}, {"y", 1}}, 2);
    const auto x = Element::generator(alg, 0), y = Element::generator(alg, 1);
    const Presentation trivial_products(alg, {x * y});
    const auto r = cup_length(trivial_products);
    CHECK(r.cup_length == 1);
    CHECK(r.nil_index == 2);

    auto one = make_algebra(Coefficients::integers(), {{"z", 2}}, 4);
    const Presentation killed(one, {Element::generator(one, 0)});
    CHECK(cup_length(killed).nil_index == 1);
}

TEST_CASE("cup_length_power")
{
    for (int m : {1, 2, 3})
        for (int n : {1, 2, 3}) {
            const auto p = space(Family::Sphere, {m}).presentation;
            const auto f = cup_length_power(p, n, CupMode::factorized);
            CHECK(f.cup_length == n);
            CHECK(f.nil_index == n + 1);
            CHECK(f.mode == CupMode::factorized);
        }
    CHECK(cup_length_power(space("rp:3").presentation, 2, CupMode::direct).cup_length == 6);
    const auto conf = cup_length_power(space("conf:2:3").presentation, 2, CupMode::direct);
    CHECK(conf.cup_length == 4);
    CHECK(conf.mode == CupMode::direct);

    const auto p = space("sphere:2").presentation;
    CHECK_THROWS_AS(cup_length_power(p, 0, CupMode::direct), InvalidArgument);
    const Presentation unsafe(p.algebra(), p.relations(), false);
    CHECK_THROWS_AS(cup_length_power(unsafe, 2, CupMode::factorized), InvalidArgument);
    CHECK(cup_length_power(unsafe, 1, CupMode::direct).cup_length == 1);

    CHECK(parse_cup_mode("direct") == CupMode::direct);
    CHECK(to_string(CupMode::factorized) == "factorized");
    CHECK_THROWS_AS(parse_cup_mode("fast"), InvalidArgument);
}

TEST_CASE("nil_lower_bound examples")
{
    for (int n = 1; n <= 4; ++n) {
        CHECK(nil_lower_bound(space("sphere:4").presentation, n) == n + 1);
        for (int g = 1; g <= 3; ++g) {
            CHECK(nil_lower_bound(space(Family::OrientableSurface, {g}).presentation, n) == 2 * n + 1);
            CHECK(nil_lower_bound(space(Family::NonorientableSurface, {g}).presentation, n) == 2 * n + 1);
        }
    }
}

TEST_CASE("factorized equals direct on small catalog entries")
{
    for (const auto& d : list_catalog()) {
        std::vector<int> params;
        for (const auto& r : d.params)
            params.push_back(std::min(r.max, std::max(r.min, 2)));
        const auto p = space(d.family, params).presentation;
        for (int n : {1, 2}) {
            CAPTURE(d.key);
            CAPTURE(n);
            CHECK(cup_length_power(p, n, CupMode::direct).cup_length ==
                  cup_length_power(p, n, CupMode::factorized).cup_length);
        }
    }
}

TEST_CASE("witnesses are nonzero and maximal")
{
    for (std::string designator : {"torus-sum:3", "proj-sum:3", "conf:3:4", "spheres:2:3", "cp:3", "rp:4"}) {
        CAPTURE(designator);
        const auto p = space(designator).presentation;
        QuotientRing q(p);
        const auto r = cup_length(q);
        REQUIRE(static_cast<int>(r.witness.size()) == r.cup_length);
        CHECK(std::is_sorted(r.witness.begin(), r.witness.end()));
        CHECK(!q.is_zero(product(p.algebra(), r.witness)));
        for (std::size_t g = 0; g < p.algebra()->size(); ++g) {
            auto longer = r.witness;
            longer.push_back(g);
            CHECK(q.is_zero(product(p.algebra(), longer)));
        }
    }
}

TEST_CASE("surface witnesses")
{
    for (int g = 1; g <= 3; ++g) {
        const auto t = space(Family::OrientableSurface, {g}).presentation;
        const auto rt = cup_length(t);
        CHECK(rt.cup_length == 2);
        const auto& ta = *t.algebra();
        CHECK(ta.generators()[rt.witness[0]].name == "a1");
        CHECK(ta.generators()[rt.witness[1]].name == "b1");
        for (int j = 1; j <= g; ++j) {
            const std::vector<std::size_t> w{*ta.index_of("a" + std::to_string(j)), *ta.index_of("b" + std::to_string(j))};
            CHECK(!is_zero_in_quotient(t, product(t.algebra(), w)));
        }

        const auto pp = space(Family::NonorientableSurface, {g}).presentation;
        const auto rp = cup_length(pp);
        CHECK(rp.cup_length == 2);
        CHECK(rp.witness == std::vector<std::size_t>{0, 0});
        for (int j = 1; j <= g; ++j) {
            const auto gj = *pp.algebra()->index_of("g" + std::to_string(j));
            CHECK(!is_zero_in_quotient(pp, product(pp.algebra(), {gj, gj})));
        }
    }
}

TEST_CASE("serial and parallel searches agree")
{
    for (std::string designator : {"conf:2:4", "conf:3:5", "torus-sum:4", "proj-sum:4", "spheres:2:4", "rp:7"}) {
        CAPTURE(designator);
        const auto p = space(designator).presentation;
        const auto serial = cup_length_serial(p);
        for (int threads : {1, 2, 4}) {
            omp_set_num_threads(threads);
            const auto parallel = cup_length(p);
            CHECK(parallel.cup_length == serial.cup_length);
            CHECK(parallel.witness == serial.witness);
        }
    }
    const auto t = tensor_power(space("conf:2:3").presentation, 2).result;
    CHECK(cup_length(t).witness == cup_length_serial(t).witness);
}

TEST_CASE("cup_length is invariant under relabeling")
{
    std::mt19937_64 rng(12);
    for (std::string designator : {"torus-sum:2", "conf:2:4", "proj-sum:3", "spheres:1:3"}) {
        CAPTURE(designator);
        const auto p = space(designator).presentation;
        const int expected = cup_length(p).cup_length;
        std::vector<std::size_t> perm(p.algebra()->size());
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 8; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto q = relabel(p, perm);
            const auto r = cup_length(q);
            CHECK(r.cup_length == expected);
            CHECK(!is_zero_in_quotient(q, product(q.algebra(), r.witness)));
        }
    }
}
