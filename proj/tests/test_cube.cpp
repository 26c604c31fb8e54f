#include <doctest.h>

#include <stdexcept>

#include <random>

#include "mcheck/corpus.hpp"
#include "mcheck/cube.hpp"
#include "mcheck/matrix.hpp"
#include "test_util.hpp"

using namespace mcheck;
using namespace test_util;

namespace {

BooleanOperation random_operation(std::mt19937_64& rng, int arity) {
    BooleanOperation op;
    op.symbol = "f";
    op.arity = arity;
    op.table.resize(std::size_t{1} << arity);
    for (auto& v : op.table) v = static_cast<std::uint8_t>(rng() & 1);
    return op;
}

const BooleanOperation kMajority = from_formula("p1", 3, [](const std::vector<int>& a) {
    return (a[0] & a[1]) | (a[0] & a[2]) | (a[1] & a[2]);
});

}  // namespace

TEST_SUITE("cube") {

TEST_CASE("row test on the examples") {
    const CubeSimpleResult mal = implies_cube_simple(make_mal(), 2);
    CHECK(mal.holds);
    CHECK(mal.witness.rows == std::vector<int>{0, 1});
    CHECK(check_row_witness(make_mal(), mal.witness));
    CHECK(mal.comparisons <= 2 * 3 * 4);

    const CubeSimpleResult maj2 = implies_cube_simple(make_maj(), 2);
    CHECK(!maj2.holds);
    CHECK(check_cover_table(make_maj(), 2, maj2.cover));
    CHECK(maj2.cover.size() == 9);
    CHECK(maj2.cover[1].rows == std::vector<int>{0, 1});
    CHECK(maj2.cover[1].column == 0);
    CHECK(maj2.cover[5].rows == std::vector<int>{1, 2});
    CHECK(maj2.cover[5].column == 2);

    const CubeSimpleResult maj3 = implies_cube_simple(make_maj(), 3);
    CHECK(maj3.holds);
    CHECK(maj3.witness.rows == std::vector<int>{0, 1, 2});
    CHECK(maj3.comparisons <= 3 * 3 * 27);

    const CubeSimpleResult ari = implies_cube_simple(make_ari(), 2);
    CHECK(ari.holds);
    CHECK(ari.witness.rows == std::vector<int>{0, 1});
}

TEST_CASE("empty left part holds with zero comparisons") {
    const ExtendedMatrix m = simple_matrix({{}, {}}, {1, 2}, 2);
    const CubeSimpleResult r = implies_cube_simple(m, 2);
    CHECK(r.holds);
    CHECK(r.comparisons == 0);
    CHECK(comparison_count(m, 5) == 0);
}

TEST_CASE("row test preconditions") {
    CHECK_THROWS_AS(implies_cube_simple(make_perm(3), 2), std::invalid_argument);
    CHECK_THROWS_AS(implies_cube_simple(make_mal(), 1), std::invalid_argument);
}

TEST_CASE("row test matches the naive oracle") {
    std::mt19937_64 rng(43);
    const CorpusBounds bounds{4, 4, 3};
    for (int t = 0; t < 200; ++t) {
        const ExtendedMatrix m = random_simple_matrix(rng, bounds);
        for (int n_prime : {2, 3})
            CHECK(implies_cube_simple(m, n_prime).holds == naive_implies_cube_simple(m, n_prime));
    }
    for (const ExtendedMatrix& m : {make_mal(), make_ari(), make_maj(), make_edge(4)})
        for (int n_prime : {2, 3, 4})
            CHECK(implies_cube_simple(m, n_prime).holds == naive_implies_cube_simple(m, n_prime));
}

TEST_CASE("comparison count stays within the advertised bounds") {
    std::mt19937_64 rng(47);
    const CorpusBounds bounds{4, 4, 3};
    for (int t = 0; t < 150; ++t) {
        const ExtendedMatrix m = random_simple_matrix(rng, bounds);
        for (int n_prime : {2, 3}) {
            long long bound = n_prime * static_cast<long long>(m.left_cols());
            for (int a = 0; a < n_prime; ++a) bound *= m.rows();
            CHECK(implies_cube_simple(m, n_prime).comparisons <= bound);
        }
        CHECK(implies_cube_simple(m, 2).comparisons <=
              2LL * m.left_cols() * m.rows() * m.rows());
    }
}

TEST_CASE("monotone in the cube dimension") {
    std::mt19937_64 rng(53);
    const CorpusBounds bounds{4, 4, 3};
    for (int t = 0; t < 100; ++t) {
        const ExtendedMatrix m = random_simple_matrix(rng, bounds);
        if (implies_cube_simple(m, 2).holds) CHECK(implies_cube_simple(m, 3).holds);
        if (implies_cube_simple(m, 3).holds) CHECK(implies_cube_simple(m, 4).holds);
    }
}

TEST_CASE("cube matrices pass their own test in both parameters") {
    for (int n = 2; n <= 3; ++n)
        for (int k = 2; k <= 3; ++k) CHECK(implies_cube_simple(make_cube(n, k), n).holds);
}

TEST_CASE("counterexample operation for maj is the majority function") {
    const BooleanOperation p = build_counterexample_algebra(make_maj(), 2);
    CHECK(p.arity == 3);
    CHECK(p.table == std::vector<std::uint8_t>{0, 0, 0, 1, 0, 1, 1, 1});
    CHECK(p.table == kMajority.table);
    CHECK(algebra_satisfies(TwoElementAlgebra{{p}}, presentation(make_maj())));
    CHECK(preserves(p, CubeRelation{2}));
    CHECK(preserves_direct(p, CubeRelation{2}));  // all 27 argument triples
    CHECK(naive_preserves(p, 2));
}

TEST_CASE("a column agreeing with the right part everywhere forces a projection") {
    const ExtendedMatrix m = simple_matrix({{1, 2}, {1, 2}}, {1, 1}, 2);
    const BooleanOperation p = build_counterexample_algebra(m, 2);
    CHECK(p.table == std::vector<std::uint8_t>{0, 0, 1, 1});  // first projection
}

TEST_CASE("counterexample construction refuses holding instances") {
    CHECK_THROWS_AS(build_counterexample_algebra(make_mal(), 2), std::logic_error);
}

TEST_CASE("algebra_satisfies on the examples") {
    CHECK(algebra_satisfies(TwoElementAlgebra{{kMajority}}, presentation(make_maj())));

    const BooleanOperation proj1 =
        from_formula("p1", 3, [](const std::vector<int>& a) { return a[0]; });
    CHECK(!algebra_satisfies(TwoElementAlgebra{{proj1}}, presentation(make_mal())));

    const BooleanOperation p1 = from_formula(
        "p1", 3, [](const std::vector<int>& a) { return a[0] | (~a[1] & a[2]); });
    const BooleanOperation p2 = from_formula(
        "p2", 3, [](const std::vector<int>& a) { return a[2] | (a[0] & ~a[1]); });
    const BooleanOperation q1 =
        from_formula("q1", 2, [](const std::vector<int>& a) { return a[0] | a[1]; });
    CHECK(algebra_satisfies(TwoElementAlgebra{{p1, p2, q1}}, presentation(make_perm(3))));

    CHECK_THROWS_AS(algebra_satisfies(TwoElementAlgebra{{q1}}, presentation(make_mal())),
                    std::invalid_argument);
}

TEST_CASE("preservation examples") {
    const BooleanOperation orr =
        from_formula("f", 2, [](const std::vector<int>& a) { return a[0] | a[1]; });
    CHECK(preserves(orr, CubeRelation{2}));

    const BooleanOperation zero = from_formula("f", 1, [](const std::vector<int>&) { return 0; });
    CHECK(!preserves(zero, CubeRelation{2}));

    CHECK(preserves(kMajority, CubeRelation{2}));
}

TEST_CASE("pairwise zero overlap is not enough beyond dimension two") {
    // Zeros (0,0,1), (0,1,0), (1,0,0): each pair shares a zero coordinate,
    // but no coordinate is zero in all three.
    BooleanOperation op = from_formula("f", 3, [](const std::vector<int>&) { return 1; });
    op.table[0b001] = 0;
    op.table[0b010] = 0;
    op.table[0b100] = 0;
    CHECK(preserves(op, CubeRelation{2}));
    CHECK(preserves_direct(op, CubeRelation{2}));
    CHECK(!preserves(op, CubeRelation{3}));
    CHECK(!preserves_direct(op, CubeRelation{3}));
}

TEST_CASE("both preservation routes and the oracle agree") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 300; ++t) {
        const int arity = static_cast<int>(rng() % 5);
        const BooleanOperation op = random_operation(rng, arity);
        for (int n_prime : {2, 3}) {
            const bool zero_route = preserves(op, CubeRelation{n_prime});
            CHECK(zero_route == preserves_direct(op, CubeRelation{n_prime}));
            CHECK(zero_route == naive_preserves(op, n_prime));
        }
    }
}

TEST_CASE("cube relation membership") {
    const CubeRelation r{3};
    CHECK(r.members().size() == 7);
    CHECK(!r.contains({0, 0, 0}));
    CHECK(r.contains({0, 1, 0}));
    CHECK(!r.contains({0, 1}));
}

TEST_CASE("algebra search on the examples") {
    CHECK(implies_cube_general(make_mal(), 2).outcome == SearchOutcome::Holds);
    CHECK(implies_cube_general(make_perm(2), 2).outcome == SearchOutcome::Holds);

    const CubeGeneralResult perm3 = implies_cube_general(make_perm(3), 2);
    REQUIRE(perm3.outcome == SearchOutcome::Fails);
    REQUIRE(perm3.witness);
    REQUIRE(perm3.witness->ops.size() == 3);
    CHECK(perm3.witness->ops[0].symbol == "p1");
    CHECK(perm3.witness->ops[0].table == std::vector<std::uint8_t>{0, 1, 0, 0, 1, 1, 1, 1});
    CHECK(perm3.witness->ops[1].table == std::vector<std::uint8_t>{0, 1, 0, 1, 1, 1, 0, 1});
    CHECK(perm3.witness->ops[2].symbol == "q1");
    CHECK(perm3.witness->ops[2].table == std::vector<std::uint8_t>{0, 1, 1, 1});
    CHECK(algebra_satisfies(*perm3.witness, presentation(make_perm(3))));
    for (const BooleanOperation& op : perm3.witness->ops)
        CHECK(preserves(op, CubeRelation{2}));
}

TEST_CASE("a tiny node cap yields undecided") {
    const CubeGeneralResult r = implies_cube_general(make_perm(3), 2, 1);
    CHECK(r.outcome == SearchOutcome::Undecided);
    CHECK(!r.witness);
}

TEST_CASE("a matrix with no right columns always fails") {
    const ExtendedMatrix m = general_matrix({{1}}, {{}}, 1, 1);
    const CubeGeneralResult r = implies_cube_general(m, 2);
    CHECK(r.outcome == SearchOutcome::Fails);
    CHECK(r.witness->ops.empty());
}

TEST_CASE("search and row test agree on simple matrices") {
    std::mt19937_64 rng(61);
    const CorpusBounds bounds{3, 4, 2};
    for (int t = 0; t < 150; ++t) {
        const ExtendedMatrix m = random_simple_matrix(rng, bounds);
        for (int n_prime : {2, 3}) {
            const CubeGeneralResult r = implies_cube_general(m, n_prime);
            REQUIRE(r.outcome != SearchOutcome::Undecided);
            CHECK((r.outcome == SearchOutcome::Holds) == implies_cube_simple(m, n_prime).holds);
        }
    }
}

TEST_CASE("witnesses from failing instances always check") {
    std::mt19937_64 rng(67);
    const CorpusBounds bounds{3, 4, 2};
    for (int t = 0; t < 80; ++t) {
        const ExtendedMatrix m = random_simple_matrix(rng, bounds);
        for (int n_prime : {2, 3}) {
            const CubeSimpleResult r = implies_cube_simple(m, n_prime);
            if (r.holds) {
                CHECK(check_row_witness(m, r.witness));
                continue;
            }
            const BooleanOperation p = build_counterexample_algebra(m, n_prime);
            CHECK(algebra_satisfies(TwoElementAlgebra{{p}}, presentation(m)));
            CHECK(preserves(p, CubeRelation{n_prime}));
            const CubeGeneralResult g = implies_cube_general(m, n_prime);
            REQUIRE(g.outcome == SearchOutcome::Fails);
            CHECK(algebra_satisfies(*g.witness, presentation(m)));
            for (const BooleanOperation& op : g.witness->ops)
                CHECK(preserves(op, CubeRelation{n_prime}));
        }
    }
}

TEST_CASE("intersection law on random pairs") {
    std::mt19937_64 rng(71);
    const CorpusBounds bounds{3, 4, 2};
    for (int t = 0; t < 120; ++t) {
        const ExtendedMatrix m1 = random_simple_matrix(rng, bounds);
        const ExtendedMatrix m2 = random_simple_matrix(rng, bounds);
        for (int n_prime : {2, 3}) {
            const bool either = implies_cube_simple(m1, n_prime).holds ||
                                implies_cube_simple(m2, n_prime).holds;
            CHECK(implies_cube_simple(intersect(m1, m2), n_prime).holds == either);
        }
    }
}

TEST_CASE("family disjunction") {
    const FamilyCubeResult holds = implies_cube_family({make_maj(), make_ari()}, 2);
    CHECK(holds.holds);
    CHECK(holds.member == 1);
    CHECK(holds.consistent);

    const FamilyCubeResult fails = implies_cube_family({make_maj()}, 2);
    CHECK(!fails.holds);
    CHECK(fails.consistent);

    const FamilyCubeResult first = implies_cube_family({make_mal(), make_maj()}, 2);
    CHECK(first.holds);
    CHECK(first.member == 0);
    CHECK(first.consistent);
    REQUIRE(first.intersection_result);
    CHECK(first.intersection_result->holds);

    const FamilyCubeResult empty = implies_cube_family({}, 2);
    CHECK(!empty.holds);
    CHECK(empty.consistent);
    CHECK(!empty.intersection_result);

    CHECK_THROWS_AS(implies_cube_family({make_perm(3)}, 2), std::invalid_argument);
}

}  // TEST_SUITE
