#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gyro/builtins.hpp"
#include "gyro/gyrogroup.hpp"
#include "gyro/table_io.hpp"

using namespace gyro;

namespace {

std::vector<std::vector<int>> table_rows(const CayleyTable& t) {
    std::vector<std::vector<int>> rows(t.order(), std::vector<int>(t.order()));
    for (int a = 0; a < t.order(); ++a)
        for (int b = 0; b < t.order(); ++b) rows[a][b] = t(a, b);
    return rows;
}

// oracle: inverse of a is the column where row a holds the identity
int scan_inverse(const CayleyTable& t, int e, int a) {
    for (int x = 0; x < t.order(); ++x)
        if (t(a, x) == e && t(x, a) == e) return x;
    return -1;
}

CayleyTable cyclic_table(int n) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
    return CayleyTable(rows);
}

// Klein four-group as xor on 2 bits
CayleyTable klein_table() {
    std::vector<std::vector<int>> rows(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) rows[a][b] = a ^ b;
    return CayleyTable(rows);
}

}  // namespace

TEST_CASE("permutation basics") {
    const auto id = Permutation::identity(5);
    CHECK(id.is_identity());
    CHECK(id.inverse() == id);

    const Permutation p(std::vector<int>{1, 2, 0, 4, 3});
    CHECK(p(0) == 1);
    CHECK(p.inverse()(1) == 0);
    CHECK(p.then(p.inverse()) == id);
    CHECK_FALSE(p.is_identity());

    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), GyroError);
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 3}), GyroError);
}

TEST_CASE("cayley table shape and range checks") {
    CHECK_THROWS_AS(CayleyTable(std::vector<std::vector<int>>{}), GyroError);
    CHECK_THROWS_AS(CayleyTable({{0, 1}, {1}}), GyroError);
    CHECK_THROWS_AS(CayleyTable({{0, 2}, {1, 0}}), GyroError);
    const CayleyTable t({{0, 1}, {1, 0}});
    CHECK(t.entry(1, 0) == 1);
    CHECK_THROWS_AS(t.entry(2, 0), std::out_of_range);
}

TEST_CASE("builtins validate and addition matches the published tables") {
    for (const auto& name : builtin_names()) {
        const Gyrogroup& g = builtin(name);
        const auto result = verify_axioms(g.table(), g.gyrations(), name);
        CHECK(result.report.passed());
        REQUIRE(result.group.has_value());
    }
    const Gyrogroup& g15 = builtin("g15");
    CHECK(g15.add(4, 10) == 7);
    CHECK(g15.add(0, 13) == 13);
    CHECK(builtin("g8").add(3, 5) == 1);
}

TEST_CASE("negation agrees with a table scan on every builtin") {
    for (const auto& name : builtin_names()) {
        const Gyrogroup& g = builtin(name);
        for (int a = 0; a < g.order(); ++a)
            CHECK(g.neg(a) == scan_inverse(g.table(), g.identity(), a));
        CHECK(g.neg(g.identity()) == g.identity());
    }
    CHECK(builtin("g15").neg(1) == 2);
    CHECK(builtin("g16").neg(2) == 3);
}

TEST_CASE("gyration application") {
    const Gyrogroup& g15 = builtin("g15");
    CHECK(g15.gyr_apply(1, 3, 1) == 7);
    for (int b = 0; b < 15; ++b)
        for (int c = 0; c < 15; ++c) CHECK(g15.gyr_apply(0, b, c) == c);
    CHECK(builtin("g16").gyr_apply(4, 8, 8) == 9);
}

TEST_CASE("derived gyrations match the stored tables and the published cycles") {
    for (const auto& name : builtin_names()) {
        const Gyrogroup& g = builtin(name);
        CHECK(derive_gyrations(g.table()) == g.gyrations());
    }

    const auto derived15 = derive_gyrations(builtin("g15").table());
    const auto& pool15 = derived15.pool();
    REQUIRE(pool15.size() == 5);
    CHECK(pool15[1] == parse_cycles("(1 7 5 10 6)(2 3 8 11 14)", 15));
    CHECK(pool15[2] == parse_cycles("(1 6 10 5 7)(2 14 11 8 3)", 15));
    CHECK(pool15[3] == parse_cycles("(1 10 7 6 5)(2 11 3 14 8)", 15));
    CHECK(pool15[4] == parse_cycles("(1 5 6 7 10)(2 8 14 3 11)", 15));

    const Gyrogroup& g8 = builtin("g8");
    CHECK(g8.gyr(1, 2) == parse_cycles("(1 6)(2 5)", 8));

    const auto& pool16 = builtin("g16").gyrations().pool();
    REQUIRE(pool16.size() == 2);
    CHECK(pool16[1] == parse_cycles("(8 9)(10 11)(12 13)(14 15)", 16));
}

TEST_CASE("groups have trivial gyrations") {
    const auto gyr = derive_gyrations(cyclic_table(4));
    CHECK(gyr.pool().size() == 1);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(gyr(a, b).is_identity());

    const auto klein = verify_axioms(klein_table());
    CHECK(klein.report.passed());
    CHECK(klein.group->gyrations().pool().size() == 1);
}

TEST_CASE("derive_gyrations rejects structurally broken tables") {
    // Latin square whose only left identity (0) is not a right identity
    const CayleyTable no_identity({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}});
    CHECK_THROWS_WITH_AS(derive_gyrations(no_identity), "table has no two-sided identity element",
                         GyroError);

    // a loop where 2 has left inverse 4 but right inverse 3
    const CayleyTable lopsided({{0, 1, 2, 3, 4},
                                {1, 0, 3, 4, 2},
                                {2, 3, 4, 0, 1},
                                {3, 4, 1, 2, 0},
                                {4, 2, 0, 1, 3}});
    CHECK_THROWS_WITH_AS(derive_gyrations(lopsided), "element 2 has no two-sided inverse",
                         GyroError);

    // not a Latin square at all
    CHECK_THROWS_AS(derive_gyrations(CayleyTable({{0, 0}, {1, 1}})), GyroError);

    // the validator reports the same defects instead of throwing
    const auto no_id = verify_axioms(no_identity);
    REQUIRE_FALSE(no_id.report.passed());
    CHECK(no_id.report.violations.front().axiom == Axiom::identity_element);
    const auto lop = verify_axioms(lopsided);
    REQUIRE_FALSE(lop.report.passed());
    CHECK(lop.report.violations.front().axiom == Axiom::inverse_element);
    CHECK(lop.report.violations.front().witness == std::vector<int>{2});
}

TEST_CASE("verify_axioms fails on a mutated g15 table") {
    auto rows = table_rows(builtin("g15").table());
    std::swap(rows[1][1], rows[1][2]);
    const auto result = verify_axioms(CayleyTable(rows));
    CHECK_FALSE(result.report.passed());
    CHECK_FALSE(result.group.has_value());
    CHECK_FALSE(result.report.violations.front().witness.empty());

    // deterministic: identical input, identical report
    const auto again = verify_axioms(CayleyTable(rows));
    REQUIRE(again.report.violations.size() == result.report.violations.size());
    for (size_t i = 0; i < again.report.violations.size(); ++i) {
        CHECK(again.report.violations[i].axiom == result.report.violations[i].axiom);
        CHECK(again.report.violations[i].witness == result.report.violations[i].witness);
    }
}

TEST_CASE("latin-square violations carry row/column witnesses") {
    const auto rowdup = verify_axioms(CayleyTable({{0, 0}, {1, 1}}));
    REQUIRE_FALSE(rowdup.report.passed());
    CHECK(rowdup.report.violations.front().axiom == Axiom::latin_row);
    CHECK(rowdup.report.violations.front().witness == std::vector<int>{0, 0, 1});

    const auto coldup = verify_axioms(CayleyTable({{0, 1}, {0, 1}}));
    REQUIRE_FALSE(coldup.report.passed());
    // rows are fine; the first column repeats 0
    CHECK(coldup.report.violations.front().axiom == Axiom::latin_col);
    CHECK(coldup.report.violations.front().witness == std::vector<int>{0, 0, 1});
}

TEST_CASE("a wrong supplied gyration table is rejected") {
    const Gyrogroup& g8 = builtin("g8");
    std::vector<std::vector<Permutation>> grid(8);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) grid[a].push_back(g8.gyr(a, b));
    grid[1][2] = Permutation::identity(8);  // truth is (1 6)(2 5)
    const auto result = verify_axioms(g8.table(), GyrationTable(8, grid));
    REQUIRE_FALSE(result.report.passed());
    CHECK(result.report.violations.front().axiom == Axiom::gyration_mismatch);
    CHECK(result.report.violations.front().witness == std::vector<int>{1, 2, 1});
}

TEST_CASE("coaddition") {
    for (const auto& name : builtin_names()) {
        const Gyrogroup& g = builtin(name);
        const int e = g.identity();
        for (int a = 0; a < g.order(); ++a) CHECK(g.coadd(a, e) == a);
        // right cancellation II, quantified
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b) CHECK(g.add(g.cosub(a, b), b) == a);
    }
    CHECK(builtin("g15").coadd(1, 1) == 2);
}

TEST_CASE("identity suite holds on every builtin") {
    for (const auto& name : builtin_names()) CHECK(check_identities(builtin(name)).passed());

    // two spot instances, worked straight from the g15 tables
    const Gyrogroup& g15 = builtin("g15");
    CHECK(g15.add(g15.neg(1), g15.add(1, 5)) == 5);  // -1+(1+5) = 2+11
    const int lhs = g15.add(g15.add(3, 4), 2);       // (3+4)+2 = 8+2
    const int rhs = g15.add(3, g15.add(4, g15.gyr_apply(4, 3, 2)));
    CHECK(lhs == 6);
    CHECK(rhs == 6);
}

TEST_CASE("left loop property and automorphism property, quantified") {
    for (const auto& name : builtin_names()) {
        const Gyrogroup& g = builtin(name);
        const int n = g.order();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                CHECK(g.gyr(g.op(a, b), b) == g.gyr(a, b));
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        CHECK(g.gyr_image(a, b, g.op(x, y)) ==
                              g.op(g.gyr_image(a, b, x), g.gyr_image(a, b, y)));
            }
    }
}

TEST_CASE("nested products") {
    const Gyrogroup& g8 = builtin("g8");
    const std::vector<int> single{4};
    CHECK(g8.left_nested_product(single) == 4);
    CHECK(g8.right_nested_product(single) == 4);

    const std::vector<int> pair{3, 1};
    CHECK(g8.left_nested_product(pair) == 5);

    const std::vector<int> pair16{8, 9};
    CHECK(builtin("g16").right_nested_product(pair16) == 1);

    CHECK_THROWS_AS(g8.left_nested_product(std::vector<int>{}), GyroError);
    CHECK_THROWS_AS(g8.right_nested_product(std::vector<int>{}), GyroError);

    // with three factors the two nestings genuinely differ
    const Gyrogroup& g15 = builtin("g15");
    const std::vector<int> triple{3, 4, 2};
    CHECK(g15.right_nested_product(triple) == 6);  // (3+4)+2 = 8+2
    CHECK(g15.left_nested_product(triple) == 1);   // 3+(4+2) = 3+8
}

TEST_CASE("the identity may sit at any index") {
    // cyclic group of order 3 relabeled so the identity is element 2
    const auto result = verify_axioms(CayleyTable({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}));
    REQUIRE(result.report.passed());
    CHECK(result.group->identity() == 2);
    CHECK(result.group->neg(0) == 1);
    CHECK(result.group->add(2, 0) == 0);
}

TEST_CASE("element range checks") {
    const Gyrogroup& g8 = builtin("g8");
    CHECK_THROWS_AS(g8.add(0, 8), GyroError);
    CHECK_THROWS_AS(g8.add(-1, 0), GyroError);
    CHECK_THROWS_AS(g8.neg(8), GyroError);
    CHECK_THROWS_AS(g8.gyr_apply(1, 2, 99), GyroError);
}
