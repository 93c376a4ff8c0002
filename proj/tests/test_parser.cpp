#include <doctest.h>

#include "pdo/parser.hpp"

using namespace pdo;

TEST_CASE("operator expressions build the intended operators") {
    OpGrammar g;
    g.nvars = 2;
    g.precision = 8;

    DiffOp d1 = DiffOp::partial(2, 0, 8);
    DiffOp d2 = DiffOp::partial(2, 1, 8);
    CHECK(parse_op("d1", g).agrees_with(d1));
    CHECK(parse_op("d1*d2 + 3", g).agrees_with(
        op_mul(d1, d2) + DiffOp::constant(2, Scalar(3), 8)));
    CHECK(parse_op("d2^3", g).agrees_with(op_mul(d2, op_mul(d2, d2))));
    CHECK(parse_op("-x1*d1", g).agrees_with(
        op_mul(DiffOp::mult(TruncatedSeries(Poly::variable(2, 0), 8)), d1).scaled(
            Scalar(-1))));
    CHECK(parse_op("d2/2", g).agrees_with(d2.scaled(Scalar(1, 2))));

    // inversion expands the geometric series to the grammar precision
    DiffOp f = parse_op("inv(1-x2)", g);
    TruncatedSeries geo = series_invert(
        TruncatedSeries(Poly::constant(2, Scalar(1)) - Poly::variable(2, 1), 8));
    CHECK(f.agrees_with(DiffOp::mult(geo)));
    CHECK(parse_op("1/(1-x2)", g).agrees_with(f));

    // the worked family parses to the same operators as direct construction
    DiffOp e = normal_ordered_exp(2, 8);
    DiffOp p = op_mul(d2, d2) - op_mul(DiffOp::mult(geo * geo), e).scaled(Scalar(2));
    CHECK(parse_op("d2^2 - 2*inv((1-x2)^2)*E", g).agrees_with(p));
    DiffOp q = op_mul(d1, d2) + op_mul(op_mul(DiffOp::mult(geo), e), d1);
    CHECK(parse_op("d1*d2 + inv(1-x2)*E*d1", g).agrees_with(q));
}

TEST_CASE("operator parse failures are reported") {
    OpGrammar g;
    g.nvars = 2;
    g.precision = 8;
    CHECK_THROWS_AS(parse_op("", g), ParseError);
    CHECK_THROWS_AS(parse_op("d3", g), ParseError);
    CHECK_THROWS_AS(parse_op("x0", g), ParseError);
    CHECK_THROWS_AS(parse_op("(d1", g), ParseError);
    CHECK_THROWS_AS(parse_op("d1 d2", g), ParseError);
    CHECK_THROWS_AS(parse_op("foo", g), ParseError);
    // only order-zero units can be inverted
    CHECK_THROWS_AS(parse_op("inv(d1)", g), ParseError);
    CHECK_THROWS_AS(parse_op("inv(x1)", g), ZeroConstantTerm);
}

TEST_CASE("polynomial expressions over named variables") {
    std::vector<std::string> names{"x", "h"};
    Poly x = Poly::variable(2, 0);
    Poly h = Poly::variable(2, 1);
    CHECK(parse_poly("x^2 - h", names) == x * x - h);
    CHECK(parse_poly("(x+h)*(x-h)", names) == x * x - h * h);
    CHECK(parse_poly("3*x*h/2", names) == (x * h).scaled(Scalar(3, 2)));
    CHECK_THROWS_AS(parse_poly("y", names), ParseError);
    CHECK_THROWS_AS(parse_poly("x/h", names), ParseError);
    CHECK_THROWS_AS(parse_poly("", names), ParseError);
}
