#include <doctest.h>

#include <set>

#include "pdo/schur.hpp"

using namespace pdo;

namespace {

const int kBudget = 1 << 20;

// semigroup-count oracle for the algebra k[t^-2, t^-3, u t^-2]: monomials are
// u^g t^-s with s - 2g a sum of 2s and 3s, i.e. s - 2g in {0, 2, 3, 4, ...}
int algebra_count(int n) {
    int count = 0;
    for (int g = 0; 2 * g <= n; ++g)
        for (int s = 2 * g; s <= n; ++s) {
            int rest = s - 2 * g;
            if (rest != 1) ++count;
        }
    return count;
}

}  // namespace

TEST_CASE("worked pair filtration matches the triangle count") {
    SchurPair pair = example_pair(8);
    auto dims_w = filtration_dims(pair.w, 1, 8, kBudget);
    REQUIRE(dims_w.size() == 9);
    for (int n = 0; n <= 8; ++n)
        CHECK(dims_w[n] == (n + 1) * (n + 2) / 2);
    auto inc = graded_increments(dims_w);
    for (int n = 0; n <= 8; ++n) CHECK(inc[n] == n + 1);
}

TEST_CASE("algebra filtration matches the semigroup count") {
    SchurPair pair = example_pair(10);
    auto dims_a = filtration_dims(pair.a, 1, 10, kBudget);
    REQUIRE(dims_a.size() == 11);
    for (int n = 0; n <= 10; ++n)
        CHECK(dims_a[n] == algebra_count(n));
    CHECK(dims_a[6] == 13);
}

TEST_CASE("rank detection on the worked pair and controls") {
    SchurPair pair = example_pair(8);
    RankDetection det = detect_rank(pair.w, 1, 8, 4, kBudget);
    CHECK(det.r == 1);
    CHECK(det.d == 1);

    // every even level completely filled, odd levels adding nothing: rank 2
    Window w{-16, 4, 26};
    SubspaceUT w2;
    w2.kind = SubspaceUT::Kind::kModule;
    w2.window = w;
    w2.generators = {UTLaurent::monomial(w, 0, 0)};
    w2.rule = TriangleRule{2, 2, 2};
    RankDetection det2 = detect_rank(w2, 1, 6, 4, kBudget);
    CHECK(det2.r == 2);

    // a line never matches any triangle count
    SubspaceUT flat;
    flat.kind = SubspaceUT::Kind::kModule;
    flat.window = w;
    flat.generators = {UTLaurent::monomial(w, 0, 0)};
    CHECK_THROWS_AS(detect_rank(flat, 1, 4, 4, kBudget), NoRankFits);
}

TEST_CASE("stability holds for the worked pair and fails off it") {
    SchurPair pair = example_pair(8);
    StabilityReport rep = check_stability(pair.a, pair.w, 8, 1, kBudget);
    CHECK(rep.stable);
    CHECK(rep.counterexample.empty());

    // t^-1 times (1 + t) leaves the module span
    Window w{-10, 4, 6};
    SubspaceUT a;
    a.kind = SubspaceUT::Kind::kAlgebra;
    a.window = w;
    a.generators = {UTLaurent::monomial(w, 0, -1)};
    SubspaceUT mod;
    mod.kind = SubspaceUT::Kind::kModule;
    mod.window = w;
    mod.generators = {UTLaurent::monomial(w, 0, 0) + UTLaurent::monomial(w, 0, 1)};
    mod.rule = TriangleRule{1, 1, 1};
    StabilityReport bad = check_stability(a, mod, 4, 1, kBudget);
    CHECK_FALSE(bad.stable);
    CHECK_FALSE(bad.counterexample.empty());
}

TEST_CASE("finite generation witnesses survive at every level") {
    SchurPair pair = example_pair(6);
    auto witness = fg_witness(pair.a, pair.w, 6, 1, kBudget);
    REQUIRE(witness.size() == 6);
    for (const auto& lvl : witness) {
        UTLaurent expect =
            UTLaurent::monomial(pair.w.window, lvl.level, -lvl.level);
        bool found = false;
        for (const auto& m : lvl.witnesses)
            if (m.same_terms(expect)) found = true;
        CHECK(found);
    }
}

TEST_CASE("budget and window guards") {
    SchurPair pair = example_pair(6);
    CHECK_THROWS_AS(basis_at_level(pair.a, 12, 1), BudgetExceeded);
    // a window that cannot hold the family at the requested depth
    Window tiny{-3, 2, 2};
    SubspaceUT mod;
    mod.kind = SubspaceUT::Kind::kModule;
    mod.window = tiny;
    mod.rule = TriangleRule{1, 1, 1};
    CHECK_THROWS_AS(basis_at_level(mod, 3, kBudget), WindowTooSmall);
}

TEST_CASE("pair serialization round-trips") {
    SchurPair pair = example_pair(5);
    Json j = pair_to_json(pair);
    SchurPair back = pair_from_json(j);
    CHECK(back.a.kind == SubspaceUT::Kind::kAlgebra);
    CHECK(back.w.kind == SubspaceUT::Kind::kModule);
    CHECK(back.a.window == pair.a.window);
    CHECK(back.w.window == pair.w.window);
    REQUIRE(back.a.generators.size() == pair.a.generators.size());
    for (std::size_t i = 0; i < pair.a.generators.size(); ++i)
        CHECK(back.a.generators[i].same_terms(pair.a.generators[i]));
    REQUIRE(back.w.rule.has_value());
    CHECK(back.w.rule->imin == pair.w.rule->imin);
    CHECK(back.w.rule->step == pair.w.rule->step);
    CHECK(back.w.rule->slope == pair.w.rule->slope);

    auto dims = filtration_dims(back.w, 1, 5, kBudget);
    CHECK(dims[5] == 6 * 7 / 2);
}
