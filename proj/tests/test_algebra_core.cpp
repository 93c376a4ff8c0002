#include <doctest.h>

#include <random>
#include <vector>

#include "pdo/poly.hpp"
#include "pdo/series.hpp"
#include "pdo/ut_laurent.hpp"

using namespace pdo;

namespace {

Poly xpow(int nvars, int var, int e) {
    Exp exp(static_cast<std::size_t>(nvars), 0);
    exp[static_cast<std::size_t>(var)] = e;
    return Poly::monomial(nvars, exp, Scalar(1));
}

UTLaurent random_element(std::mt19937_64& rng, const Window& w, int tlo, int thi,
                         int umax) {
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> tdist(tlo, thi);
    std::uniform_int_distribution<int> udist(0, umax);
    std::uniform_int_distribution<int> cdist(1, 9);
    std::uniform_int_distribution<int> sdist(0, 1);
    std::map<UTLaurent::Key, Scalar> acc;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        int c = cdist(rng) * (sdist(rng) ? 1 : -1);
        acc[{tdist(rng), udist(rng)}] += Scalar(c);
    }
    std::vector<std::pair<UTLaurent::Key, Scalar>> terms;
    for (const auto& [k, c] : acc)
        if (!c.is_zero()) terms.push_back({k, c});
    if (terms.empty()) terms.push_back({{thi, 0}, Scalar(1)});
    return UTLaurent::make(w, terms);
}

}  // namespace

TEST_CASE("rational scalars are exact") {
    Scalar a(1, 3), b(1, 6);
    CHECK((a + b) == Scalar(1, 2));
    CHECK((a * b) == Scalar(1, 18));
    CHECK(Scalar::from_string("-7/4").str() == "-7/4");
    CHECK(inverse(Scalar(2, 5)) == Scalar(5, 2));
    CHECK(factorial(6) == Scalar(720));
    CHECK(binomial(14, 2) == Scalar(91));
    CHECK(Scalar(3, 6) == Scalar(1, 2));  // canonical form
    CHECK(Scalar(-2).sign() == -1);
}

TEST_CASE("polynomial arithmetic and graded-lex order") {
    int n = 2;
    Poly x = Poly::variable(n, 0);
    Poly h = Poly::variable(n, 1);
    Poly f = x * x - h;          // x^2 - h
    Poly g = x * h + Poly::constant(n, Scalar(3));

    Poly p = f * g;  // x^3 h + 3 x^2 - x h^2 - 3 h
    CHECK(p.coeff({3, 1}) == Scalar(1));
    CHECK(p.coeff({2, 0}) == Scalar(3));
    CHECK(p.coeff({1, 2}) == Scalar(-1));
    CHECK(p.coeff({0, 1}) == Scalar(-3));
    CHECK(p.degree() == 4);

    // graded-lex leading term of x^2 - h is x^2
    auto lead = f.leading_term();
    CHECK(lead.first == Exp{2, 0});
    CHECK_THROWS_AS(Poly(n).leading_term(), ZeroInput);

    CHECK(p.derivative(0).coeff({2, 1}) == Scalar(3));
    CHECK(f.str({"x", "h"}) == "x^2 - h");
}

TEST_CASE("polynomial division, reduction, gcd") {
    int n = 2;
    Poly x = Poly::variable(n, 0);
    Poly h = Poly::variable(n, 1);

    auto q = try_divide_exact(x * x * h + x * h * h, x * h);
    REQUIRE(q.has_value());
    CHECK(*q == x + h);
    CHECK_FALSE(try_divide_exact(x * x + h, x).has_value());

    // reduce x^2 h by {x^2 - h} leaves h^2
    Poly r = reduce(x * x * h, {x * x - h});
    CHECK(r == h * h);

    Poly g = poly_gcd((x + h) * (x + h) * x, (x + h) * h);
    CHECK(g == x + h);
    CHECK(poly_gcd(Poly(n), Poly(n)).is_zero());
}

TEST_CASE("truncated series: inversion and sharp product precision") {
    int n = 2;
    Poly one = Poly::constant(n, Scalar(1));
    Poly x2 = Poly::variable(n, 1);
    TruncatedSeries f(one - x2, 6);
    TruncatedSeries g = series_invert(f);
    // geometric series 1 + x2 + x2^2 + ...
    for (int k = 0; k < 6; ++k) {
        Exp e{0, k};
        CHECK(g.body().coeff(e) == Scalar(1));
    }
    TruncatedSeries prod = f * g;
    CHECK(prod.agrees_with(TruncatedSeries::constant(n, Scalar(1), 6)));
    CHECK(prod.precision() == 6);

    CHECK_THROWS_AS(series_invert(TruncatedSeries(Poly::variable(n, 0), 4)),
                    ZeroConstantTerm);

    // multiplying by something of positive order keeps more digits than the
    // naive min-of-precisions rule would: (x1^3 + O(M^5)) * x1^2 is certified
    // to order 5 + 2.
    TruncatedSeries x1once(xpow(n, 0, 1), 2);
    TruncatedSeries x1cubed(xpow(n, 0, 3), 5);
    TruncatedSeries x1sq(xpow(n, 0, 2), kExact);
    CHECK((x1cubed * x1sq).precision() == 7);
    CHECK((x1once * x1once).precision() == 3);  // prec 2 + ord 1 on both sides
}

TEST_CASE("series derivative lowers precision by one") {
    int n = 2;
    TruncatedSeries f(xpow(n, 1, 3), 5);
    TruncatedSeries d = f.derivative(1);
    CHECK(d.precision() == 4);
    CHECK(d.body().coeff({0, 2}) == Scalar(3));
    TruncatedSeries c = TruncatedSeries::constant(n, Scalar(4));
    CHECK(c.derivative(0).precision() == kExact);
}

TEST_CASE("window discipline of explicit Laurent construction") {
    Window w{-6, 4, 3};
    UTLaurent f = UTLaurent::monomial(w, 2, -4);  // u^2 t^-4
    CHECK(f.coeff(2, -4) == Scalar(1));
    CHECK(f.str() == "u^2*t^-4");
    CHECK_THROWS_AS(UTLaurent::make(w, {{{-7, 0}, Scalar(1)}}), WindowTooSmall);
    CHECK_THROWS_AS(UTLaurent::make(w, {{{0, 4}, Scalar(1)}}), WindowTooSmall);

    // products place their support where exponent arithmetic says
    UTLaurent g = UTLaurent::monomial(w, 1, -2);  // u t^-2
    UTLaurent p = ut_mul(f, g);
    CHECK(p.coeff(3, -6) == Scalar(1));
}

TEST_CASE("valuation is multiplicative") {
    Window w{-12, 12, 8};
    UTLaurent f = UTLaurent::monomial(w, 1, -2) + UTLaurent::monomial(w, 3, 1);
    UTValuation v = ut_valuation(f);
    CHECK(v.l == -2);
    CHECK(v.m == 1);
    CHECK_THROWS_AS(ut_valuation(UTLaurent(w)), ZeroInput);
    // support on the floor leaves the valuation uncertified
    CHECK_THROWS_AS(ut_valuation(UTLaurent::monomial(w, 0, -12)), WindowTooSmall);

    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 200; ++trial) {
        UTLaurent a = random_element(rng, w, -5, 5, 4);
        UTLaurent b = random_element(rng, w, -5, 5, 4);
        UTValuation va = ut_valuation(a);
        UTValuation vb = ut_valuation(b);
        UTValuation vp = ut_valuation(ut_mul(a, b));
        CHECK(vp.l == va.l + vb.l);
        CHECK(vp.m == va.m + vb.m);
    }
}

TEST_CASE("coordinate change round-trips inside the margin") {
    Window w{-20, 20, 6};
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        UTLaurent f = random_element(rng, w, -20, 8, 6);
        UTLaurent back = psi1_map(psi_map(f));
        CHECK(back.same_terms(f));
    }
    // a term whose image crosses the ceiling is dropped, not misplaced
    Window tight{-2, 2, 3};
    UTLaurent g = UTLaurent::monomial(tight, 3, 1);  // u^3 t -> u^3 t^4: outside
    CHECK(psi_map(g).is_zero());
}
