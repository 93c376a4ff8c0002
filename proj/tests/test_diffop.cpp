#include <doctest.h>

#include <random>

#include "pdo/diffop.hpp"
#include "pdo/spectral.hpp"

using namespace pdo;

namespace {

TruncatedSeries xs(int v, int prec = kExact) {
    return TruncatedSeries(Poly::variable(2, v), prec);
}

// random polynomial in the two symbol variables, constant coefficients
DiffOp random_constant_op(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> deg(0, 2);
    std::uniform_int_distribution<int> cdist(1, 4);
    std::uniform_int_distribution<int> sdist(0, 1);
    DiffOp p(2, kExact);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Exp a{deg(rng), deg(rng)};
        Scalar c(cdist(rng) * (sdist(rng) ? 1 : -1));
        p.add_term(a, TruncatedSeries::constant(2, c));
    }
    if (p.is_zero()) p = DiffOp::partial(2, 0);
    return p;
}

DiffOp random_op(std::mt19937_64& rng, int precision) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> deg(0, 2);
    std::uniform_int_distribution<int> cdist(-3, 3);
    DiffOp p(2, precision);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        int a1 = deg(rng);
        std::uniform_int_distribution<int> rest(0, 2 - a1);
        Exp a{a1, rest(rng)};  // total derivative order at most 2
        Poly coef(2);
        for (int t = 0; t < 2; ++t) {
            int c = cdist(rng);
            if (c == 0) continue;
            Exp e{deg(rng), deg(rng)};
            coef = coef + Poly::monomial(2, e, Scalar(c));
        }
        if (coef.is_zero()) coef = Poly::constant(2, Scalar(1));
        p.add_term(a, TruncatedSeries(coef, precision));
    }
    if (p.is_zero()) p = DiffOp::partial(2, 0, precision);
    return p;
}

}  // namespace

TEST_CASE("application and the Heisenberg relation") {
    DiffOp d1 = DiffOp::partial(2, 0);
    TruncatedSeries f(Poly::variable(2, 0) * Poly::variable(2, 0), kExact);
    CHECK(apply(d1, f).agrees_with(xs(0).scaled(Scalar(2))));

    // [d1, x1] = 1
    DiffOp x1 = DiffOp::mult(xs(0));
    DiffOp c = op_commutator(d1, x1);
    CHECK(c.agrees_with(DiffOp::constant(2, Scalar(1))));
    // and [d1, x2] = 0
    CHECK(op_commutator(d1, DiffOp::mult(xs(1))).is_zero());
}

TEST_CASE("orders and principal symbols") {
    DiffOp d1 = DiffOp::partial(2, 0);
    DiffOp d2 = DiffOp::partial(2, 1);
    DiffOp p = op_mul(d1, d2) + d1;  // d1 d2 + d1
    CHECK(order_of(p) == 2);
    SymbolPoly s = principal_symbol(p);
    CHECK(s.degree() == 1 + 1);
    CHECK(s.coeff({1, 1}).agrees_with(TruncatedSeries::constant(2, Scalar(1))));
    CHECK(s.is_constant_in_x());
    CHECK(symbol_image(s) == Poly::variable(2, 0) * Poly::variable(2, 1));

    // an operator whose top coefficient vanishes at x = 0 drops order in the
    // symbol-stable count
    DiffOp q(2, 6);
    q.add_term({2, 0}, xs(0, 6));
    q.add_term({1, 0}, TruncatedSeries::constant(2, Scalar(1), 6));
    CHECK(order_of(q, OrderKind::kRaw) == 2);
    CHECK(order_of(q, OrderKind::kSymbolStable) == 1);
}

TEST_CASE("symbol of a commutator is the Poisson bracket") {
    std::mt19937_64 rng(501);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        DiffOp p = random_op(rng, 5);
        DiffOp q = random_op(rng, 5);
        int i = order_of(p), j = order_of(q);
        if (i + j == 0) continue;
        DiffOp c = op_commutator(p, q);
        SymbolPoly expect = poisson_bracket(principal_symbol(p), principal_symbol(q));
        CHECK(grade_component(c, i + j - 1).agrees_with(expect));
        ++checked;
    }
    CHECK(checked >= 30);
}

TEST_CASE("composition is associative") {
    std::mt19937_64 rng(502);
    for (int trial = 0; trial < 40; ++trial) {
        DiffOp a = random_op(rng, 6);
        DiffOp b = random_op(rng, 6);
        DiffOp c = random_op(rng, 6);
        CHECK(op_mul(op_mul(a, b), c).agrees_with(op_mul(a, op_mul(b, c))));
    }
}

TEST_CASE("normal-ordered exponential acts as evaluation at x1 = 0") {
    DiffOp e = normal_ordered_exp(2, 8);
    CHECK(e.dhat());
    for (int a = 0; a < 5; ++a)
        for (int b = 0; a + b < 5; ++b) {
            Exp m{a, b};
            TruncatedSeries f(Poly::monomial(2, m, Scalar(1)), kExact);
            TruncatedSeries image = apply(e, f);
            CHECK(image.precision() >= 6);
            if (a == 0)
                CHECK(image.agrees_with(f));
            else
                CHECK(image.agrees_with(TruncatedSeries(Poly(2), image.precision())));
        }
    // idempotent within certified precision
    DiffOp ee = op_mul(e, e);
    CHECK(ee.agrees_with(e));
    CHECK_THROWS_AS(normal_ordered_exp(2, kExact), Error);
}

TEST_CASE("a conjugated constant-coefficient family still commutes exactly") {
    // conjugation by exp(x1 x2) sends d_i to d_i + (d h/d x_i), h = x1 x2:
    // images of the commuting pair (d1^2, d2) and of d1 d2
    DiffOp d1 = DiffOp::partial(2, 0);
    DiffOp d2 = DiffOp::partial(2, 1);
    DiffOp t1 = d1 + DiffOp::mult(xs(1));  // d1 + x2
    DiffOp t2 = d2 + DiffOp::mult(xs(0));  // d2 + x1
    DiffOp p = op_mul(t1, t1);
    DiffOp q = op_mul(t1, t2);

    CHECK(op_commutator(p, t2).is_zero());
    CHECK(op_commutator(q, p).is_zero());
    CHECK(op_commutator(q, t2).is_zero());

    // the symbols stay x-free even though the coefficients are not constant
    CHECK(principal_symbol(p).is_constant_in_x());
    CHECK(principal_symbol(q).is_constant_in_x());
    CHECK_FALSE(q.coeff({0, 0}).body().is_constant());
}

TEST_CASE("x-freeness of symbols commuting with a nondegenerate pair") {
    std::mt19937_64 rng(510);
    int rounds = 0;
    while (rounds < 12) {
        DiffOp p1 = random_constant_op(rng);
        DiffOp p2 = random_constant_op(rng);
        if (order_of(p1) < 1 || order_of(p2) < 1) continue;
        if (symbol_jacobian({p1, p2}).is_zero()) continue;
        DiffOp q = random_constant_op(rng);
        if (!op_commutator(q, p1).is_zero()) continue;  // constant coefficients
        CHECK(op_commutator(q, p2).is_zero());
        CHECK(principal_symbol(q).is_constant_in_x());
        ++rounds;
    }
    CHECK(rounds == 12);
}

TEST_CASE("precision bookkeeping certifies deep commutators") {
    // same shape as the operators the CLI parses: coefficients built from the
    // inverse of 1 - x2 at finite precision
    int prec = 8;
    TruncatedSeries f = series_invert(
        TruncatedSeries(Poly::constant(2, Scalar(1)) - Poly::variable(2, 1), prec));
    DiffOp e = normal_ordered_exp(2, prec);
    DiffOp d1 = DiffOp::partial(2, 0, prec);
    DiffOp d2 = DiffOp::partial(2, 1, prec);

    DiffOp p = op_mul(d2, d2) - op_mul(DiffOp::mult(f * f), e).scaled(Scalar(2));
    DiffOp q = op_mul(d1, d2) + op_mul(op_mul(DiffOp::mult(f), e), d1);
    DiffOp c = op_commutator(p, q);
    CHECK(c.is_zero());
    CHECK(c.precision() >= 4);
}
