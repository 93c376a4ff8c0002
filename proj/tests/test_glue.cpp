#include <doctest.h>

#include "pdo/glue.hpp"
#include "pdo/parser.hpp"

using namespace pdo;

namespace {

const std::vector<std::string> kXH{"x", "h"};

Poly pp(const std::string& text) { return parse_poly(text, kXH); }

std::vector<std::string> rendered(const std::vector<Poly>& polys) {
    std::vector<std::string> out;
    for (const auto& f : polys) out.push_back(f.str(kXH));
    return out;
}

}  // namespace

TEST_CASE("groebner basis and normal forms in the plane") {
    auto basis = groebner({pp("x^2 - h"), pp("x*h")});
    CHECK(normal_form(pp("x^3"), basis).is_zero());
    CHECK(normal_form(pp("h^2"), basis).is_zero());  // x*(xh) - h*(x^2-h)
    CHECK(normal_form(pp("h"), basis) == pp("h"));
    CHECK(normal_form(pp("x^2"), basis) == pp("h"));

    // the unit ideal reduces everything to zero
    auto unit = groebner({pp("x"), pp("x - 1")});
    CHECK(normal_form(pp("h"), unit).is_zero());
}

TEST_CASE("monomial algebra spans decide membership") {
    std::vector<Poly> gens{pp("x^2"), pp("x^3")};
    auto span = algebra_span(gens, 10);
    CHECK(span_contains(span, pp("x^5")));
    CHECK(span_contains(span, pp("x^4 + x^6")));
    CHECK(span_contains(span, Poly::constant(2, Scalar(1))));
    CHECK_FALSE(span_contains(span, pp("x")));
    CHECK_FALSE(span_contains(span, pp("h")));
}

TEST_CASE("minimal generator pruning") {
    auto gens = minimal_generators({pp("x"), pp("x^2"), pp("h"), pp("2*h")}, 8);
    CHECK(rendered(gens) == std::vector<std::string>{"x", "h"});
}

TEST_CASE("cusp glueing: line ring glued into the plane along x^2") {
    GlueInput in;
    in.ideal_gens = {pp("x^2")};
    in.subring_gens = {pp("h")};
    in.budget = 10;
    GlueResult res = glue_affine(in);

    CHECK(res.f1 == pp("x^2"));
    CHECK(res.certificate.f2 == pp("h"));
    CHECK(res.certificate.k == 1);
    REQUIRE(res.certificate.coeffs.size() == 1);
    CHECK(res.certificate.coeffs[0] == pp("-h"));
    CHECK(res.certificate.b.is_zero());
    CHECK(res.saturated);

    CHECK(rendered(res.algebra.generators) ==
          std::vector<std::string>{"h", "x^2", "x^3"});

    auto cond = conductor(res.algebra, 10);
    CHECK(rendered(cond) == std::vector<std::string>{"x^2"});
}

TEST_CASE("cusp glueing: membership of named elements") {
    GlueInput in;
    in.ideal_gens = {pp("x^2")};
    in.subring_gens = {pp("h")};
    in.budget = 10;
    CHECK(glued_membership(pp("x^2"), in));
    CHECK(glued_membership(pp("x^3"), in));
    CHECK(glued_membership(pp("h"), in));
    CHECK(glued_membership(pp("h^4 + x^2*h"), in));
    CHECK(glued_membership(pp("x^5"), in));
    CHECK_FALSE(glued_membership(pp("x"), in));
    CHECK_FALSE(glued_membership(pp("x*h"), in));
    CHECK_FALSE(glued_membership(pp("x + x^2"), in));
}

TEST_CASE("fat point glueing: constants glued along the squared maximal ideal") {
    GlueInput in;
    in.ideal_gens = {pp("x^2"), pp("x*h"), pp("h^2")};
    in.budget = 10;
    GlueResult res = glue_affine(in);

    CHECK(res.certificate.f2 == pp("h"));
    CHECK(res.certificate.k == 2);
    for (const auto& a : res.certificate.coeffs) CHECK(a.is_zero());
    CHECK(res.certificate.b == pp("h^2"));

    CHECK(rendered(res.algebra.generators) ==
          std::vector<std::string>{"x^2", "x*h", "h^2", "x^3", "x^2*h", "x*h^2",
                                   "h^3"});

    CHECK(glued_membership(pp("x^2"), in));
    CHECK(glued_membership(pp("x^3*h"), in));
    CHECK_FALSE(glued_membership(pp("x"), in));
    CHECK_FALSE(glued_membership(pp("h"), in));
}

TEST_CASE("whole plane: conductor is the unit ideal") {
    MonomialAlgebra plane;
    plane.generators = {pp("x"), pp("h")};
    auto cond = conductor(plane, 10);
    CHECK(rendered(cond) == std::vector<std::string>{"1"});
}

TEST_CASE("no linear partner exists over a totally degenerate ideal") {
    // x^3 h - x h^3 vanishes on all four candidate lines, so no candidate
    // makes the plane module-finite over the pair
    GlueInput in;
    in.ideal_gens = {pp("x^3*h - x*h^3")};
    in.budget = 6;
    CHECK_THROWS_AS(glue_affine(in), NoNoetherPair);
}

TEST_CASE("collapsing the axes is detected as non-finite") {
    // k + (xh): the plane is not module-finite over it, and the certificate
    // search reports the failure as a budget wall rather than guessing
    GlueInput in;
    in.ideal_gens = {pp("x*h")};
    in.budget = 6;
    CHECK_THROWS_AS(glue_affine(in), BudgetExceeded);
}

TEST_CASE("degenerate inputs are rejected") {
    GlueInput empty;
    CHECK_THROWS_AS(glue_affine(empty), ZeroInput);
    GlueInput unit;
    unit.ideal_gens = {pp("x"), pp("x - 1")};
    CHECK_THROWS_AS(glue_affine(unit), Error);
}

TEST_CASE("comma lists of polynomials") {
    auto polys = parse_xh_list("x^2, (x+h)*(x-h), 3");
    REQUIRE(polys.size() == 3);
    CHECK(polys[1] == pp("x^2 - h^2"));
    CHECK_THROWS_AS(parse_xh_list("x,,h"), ParseError);
    CHECK_THROWS_AS(parse_xh_list(""), ParseError);
}
