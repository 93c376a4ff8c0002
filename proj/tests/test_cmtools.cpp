#include <doctest.h>

#include <random>

#include "pdo/cmtools.hpp"
#include "pdo/parser.hpp"

using namespace pdo;

namespace {

const std::vector<std::string> kXH{"x", "h"};

Poly pp(const std::string& text) { return parse_poly(text, kXH); }

Poly random_nonzero(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 2);
    std::uniform_int_distribution<int> cdist(-4, 4);
    Poly f(2);
    for (int t = 0; t < 3; ++t) {
        int c = cdist(rng);
        if (c == 0) continue;
        f = f + Poly::monomial(2, {deg(rng), deg(rng)}, Scalar(c));
    }
    if (f.is_zero()) f = Poly::constant(2, Scalar(1));
    return f;
}

}  // namespace

TEST_CASE("order along a curve") {
    CurveLocalization at_x(pp("x"));
    CurveLocalization at_h(pp("h"));
    CurveLocalization diag(pp("x - h"));

    CHECK(ord_along({pp("x^2"), pp("1")}, at_x) == 2);
    CHECK(ord_along({pp("x^2"), pp("h")}, at_h) == -1);
    CHECK(ord_along({pp("h"), pp("1")}, at_x) == 0);
    CHECK(ord_along({pp("(x-h)^3*x"), pp("x-h")}, diag) == 2);
    CHECK(ord_along({pp("x^2+h"), pp("1")}, at_x) == 0);

    CHECK_THROWS_AS(ord_along({Poly(2), pp("1")}, at_x), ZeroInput);
    CHECK_THROWS_AS(CurveLocalization(pp("3")), Error);
    CHECK_THROWS_AS(CurveLocalization(Poly(2)), Error);
}

TEST_CASE("order is additive over products") {
    std::mt19937_64 rng(904);
    std::vector<CurveLocalization> primes{CurveLocalization(pp("x")),
                                          CurveLocalization(pp("h")),
                                          CurveLocalization(pp("x + h"))};
    for (int trial = 0; trial < 60; ++trial) {
        RationalFunction f{random_nonzero(rng), random_nonzero(rng)};
        RationalFunction g{random_nonzero(rng), random_nonzero(rng)};
        RationalFunction prod{f.num * g.num, f.den * g.den};
        for (const auto& p : primes)
            CHECK(ord_along(prod, p) == ord_along(f, p) + ord_along(g, p));
    }
}

TEST_CASE("cycle of a rational function") {
    std::vector<CurveLocalization> primes{CurveLocalization(pp("x")),
                                          CurveLocalization(pp("h"))};
    WeilCycle z = cycle_of({pp("x^2*h"), pp("1")}, primes);
    REQUIRE(z.components.size() == 2);
    CHECK(z.components[0].first == pp("x"));
    CHECK(z.components[0].second == 2);
    CHECK(z.components[1].first == pp("h"));
    CHECK(z.components[1].second == 1);

    // zero multiplicities are dropped, poles are negative
    WeilCycle w = cycle_of({pp("x^2"), pp("h")}, primes);
    REQUIRE(w.components.size() == 2);
    CHECK(w.components[1].second == -1);
    WeilCycle v = cycle_of({pp("h"), pp("1")}, primes);
    REQUIRE(v.components.size() == 1);
    CHECK(v.components[0].first == pp("h"));
}

TEST_CASE("the cusp ring is already S2") {
    MonomialAlgebra cusp;
    cusp.generators = {pp("h"), pp("x^2"), pp("x^3")};
    S2Result res = s2_closure(cusp, 12);
    CHECK(res.trace.empty());
    CHECK(is_cm(cusp, 12));
    std::vector<std::string> closure;
    for (const auto& g : res.closure.generators) closure.push_back(g.str(kXH));
    CHECK(closure == std::vector<std::string>{"h", "x^2", "x^3"});
    std::vector<std::string> cond;
    for (const auto& g : res.conductor_gens) cond.push_back(g.str(kXH));
    CHECK(cond == std::vector<std::string>{"x^2"});
}

TEST_CASE("the even subring has an empty conductor") {
    // k[x^2, xh, h^2] only reaches even degrees, so no nonzero element
    // multiplies the odd part of the plane into it
    MonomialAlgebra veronese;
    veronese.generators = {pp("x^2"), pp("x*h"), pp("h^2")};
    CHECK_THROWS_AS(s2_closure(veronese, 12), NoConductorFound);
}

TEST_CASE("the fat-point ring closes up to the whole plane") {
    MonomialAlgebra fat;
    fat.generators = {pp("x^2"),   pp("x*h"),   pp("h^2"),  pp("x^3"),
                      pp("x^2*h"), pp("x*h^2"), pp("h^3")};
    S2Result res = s2_closure(fat, 12);
    CHECK_FALSE(res.trace.empty());
    CHECK_FALSE(is_cm(fat, 12));
    std::vector<std::string> closure;
    for (const auto& g : res.closure.generators) closure.push_back(g.str(kXH));
    CHECK(closure == std::vector<std::string>{"x", "h"});
    std::vector<std::string> cond;
    for (const auto& g : res.conductor_gens) cond.push_back(g.str(kXH));
    CHECK(cond == std::vector<std::string>{"x^2", "x*h", "h^2"});

    // the closure is a fixed point
    S2Result again = s2_closure(res.closure, 12);
    CHECK(again.trace.empty());
}

TEST_CASE("the plane is its own closure") {
    MonomialAlgebra plane;
    plane.generators = {pp("x"), pp("h")};
    CHECK(is_cm(plane, 12));
}
