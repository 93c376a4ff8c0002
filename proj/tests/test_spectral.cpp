#include <doctest.h>

#include <set>

#include "pdo/spectral.hpp"

using namespace pdo;

namespace {

DiffOp d(int v) { return DiffOp::partial(2, v); }

// lattice-count oracle for the filtration of k[s2, s1 s2 + s1^2]: the two
// symbols are algebraically independent with weights 1 and 2, so the slice of
// order <= m counts pairs (a, b) with a + 2b <= m.
int weight12_count(int m) {
    int count = 0;
    for (int b = 0; 2 * b <= m; ++b) count += m - 2 * b + 1;
    return count;
}

}  // namespace

TEST_CASE("commutation gate of a ring presentation") {
    DiffOp p = op_mul(d(0), d(1)) + op_mul(d(0), d(0));
    RingPresentation ring = make_ring({d(1), p});
    CHECK(ring.nvars == 2);
    CHECK(ring.certified_precision == kExact);

    DiffOp x1d1 = op_mul(DiffOp::mult(TruncatedSeries(Poly::variable(2, 0), kExact)), d(0));
    CHECK_THROWS_AS(make_ring({d(0), x1d1}), CommutationFailed);
}

TEST_CASE("reduced symbols and the nondegeneracy certificate") {
    DiffOp p = op_mul(d(0), d(1)) + op_mul(d(0), d(0));
    Poly s = reduced_symbol(p);
    Poly xi1 = Poly::variable(2, 0), xi2 = Poly::variable(2, 1);
    CHECK(s == xi1 * xi2 + xi1 * xi1);
    CHECK(spectral_order(p) == 2);

    SymbolCheck chk = check_symbol_condition({d(1), p});
    CHECK(chk.constant_symbols);
    CHECK(chk.exact);
    CHECK(chk.no_common_zero);
    CHECK_FALSE(chk.resultant.is_zero());

    // common projective zero xi2 = 0 is caught
    SymbolCheck bad = check_symbol_condition({op_mul(d(1), d(1)), op_mul(d(0), d(1))});
    CHECK_FALSE(bad.no_common_zero);

    CHECK_FALSE(symbol_jacobian({d(0), d(1)}).is_zero());
    // a functionally dependent pair degenerates
    DiffOp q = op_mul(d(0), d(1));
    CHECK(symbol_jacobian({q, op_mul(q, q)}).is_zero());

    // x-dependent top coefficient has no reduced symbol
    DiffOp r(2, 6);
    r.add_term({1, 0}, TruncatedSeries(Poly::variable(2, 0), 6));
    CHECK_THROWS_AS(reduced_symbol(r), NonConstantSymbol);
}

TEST_CASE("filtration dimensions match the lattice count") {
    DiffOp p = op_mul(d(0), d(1)) + op_mul(d(0), d(0));
    FiltrationTable table = graded_dims({d(1), p}, 10);
    REQUIRE(table.dims.size() == 11);
    for (int m = 0; m <= 10; ++m) CHECK(table.dims[m] == weight12_count(m));
    CHECK(table.dims[4] == 9);
    CHECK(table.delta == 1);

    // full polynomial ring in the two symbols
    FiltrationTable full = graded_dims({d(0), d(1)}, 8);
    for (int m = 0; m <= 8; ++m)
        CHECK(full.dims[m] == (m + 1) * (m + 2) / 2);
}

TEST_CASE("quasi-polynomial fit recovers leading data") {
    DiffOp p = op_mul(d(0), d(1)) + op_mul(d(0), d(0));
    FiltrationTable table = graded_dims({d(1), p}, 24);
    SelfIntersection si = self_intersection(table, 12, 24, 2);
    CHECK(si.leading == Scalar(1, 4));
    CHECK(si.c2 == Scalar(1, 2));
    CHECK(si.rank == Scalar(2));

    FiltrationTable full = graded_dims({d(0), d(1)}, 16);
    SelfIntersection plane = self_intersection(full, 8, 16, 1);
    CHECK(plane.leading == Scalar(1, 2));
    CHECK(plane.c2 == Scalar(1));
    CHECK(plane.rank == Scalar(1));
}

TEST_CASE("generator degrees of the graded algebra") {
    DiffOp p = op_mul(d(0), d(1)) + op_mul(d(0), d(0));
    auto gens = rees_generator_degrees({d(1), p}, 10);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].second == 1);
    CHECK(gens[1].second == 2);
    Poly xi1 = Poly::variable(2, 0), xi2 = Poly::variable(2, 1);
    CHECK(gens[0].first == xi2);
    CHECK(gens[1].first == xi1 * xi2 + xi1 * xi1);
}

TEST_CASE("rank-one comparison module") {
    // dimension of words of length <= m is the plane count
    auto dims = l_filtration_dims(2, 8);
    REQUIRE(dims.size() == 9);
    for (int m = 0; m <= 8; ++m)
        CHECK(dims[m] == (m + 1) * (m + 2) / 2);

    // the projection is a right-module morphism
    DiffOp p = op_mul(d(0), d(1)) + DiffOp::mult(TruncatedSeries(Poly::variable(2, 1), kExact));
    DiffOp q = op_mul(d(1), d(1)) + op_mul(DiffOp::mult(TruncatedSeries(Poly::variable(2, 0), kExact)), d(0));
    CHECK(l_project(op_mul(p, q)) == l_act(l_project(p), q, 2));
    CHECK(l_project(op_mul(q, p)) == l_act(l_project(q), p, 2));
}

TEST_CASE("full spectral analysis of the worked ring") {
    DiffOp p = op_mul(d(0), d(1)) + op_mul(d(0), d(0));
    SpectralConfig cfg;
    cfg.mmax = 30;
    cfg.window_lo = 15;
    cfg.window_hi = 30;
    cfg.supplied_rank = Scalar(1);
    SpectralReport rep = analyze_ring({d(1), p}, cfg);
    CHECK(rep.nvars == 2);
    CHECK(rep.orders == std::vector<int>{1, 2});
    CHECK(rep.symbol_check.no_common_zero);
    CHECK(rep.jacobian_nonzero);
    CHECK(rep.trdeg == 2);
    CHECK(rep.table.dims[4] == 9);
    CHECK(rep.veronese_d == 2);
    CHECK(rep.intersection.c2 == Scalar(1, 2));
    CHECK(rep.intersection.rank == Scalar(2));
    REQUIRE(rep.coherent.has_value());
    CHECK_FALSE(*rep.coherent);  // c2 = 1/2 is not 1/r for r = 1

    SpectralConfig plain;
    plain.mmax = 16;
    SpectralReport flat = analyze_ring({d(0), d(1)}, plain);
    CHECK(flat.intersection.c2 == Scalar(1));
    CHECK(flat.intersection.rank == Scalar(1));
    CHECK_FALSE(flat.coherent.has_value());
}
