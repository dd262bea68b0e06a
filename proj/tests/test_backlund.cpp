#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "backlund.hpp"
#include "errors.hpp"
#include "partitions.hpp"

using namespace sgc;

namespace {

Expr jet_scaled(unsigned k, long num, int a_exp, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return Expr::jet(k).scaled(Coupling::monomial(q, a_exp));
}

}  // namespace

TEST_CASE("partition enumeration: pinned examples and order") {
    auto sols = enumerate_partitions({1, 3, 1});
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == PartitionSolution{2, 1});

    sols = enumerate_partitions({0, 0, 0});
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == PartitionSolution{0});

    sols = enumerate_partitions({2, 2, 2});
    REQUIRE(sols.size() == 2);
    CHECK(sols[0] == PartitionSolution{1, 0, 1});
    CHECK(sols[1] == PartitionSolution{0, 2, 0});

    CHECK(enumerate_partitions({0, 1, 2}).empty());
}

TEST_CASE("partition enumeration agrees with brute force") {
    for (int r = 0; r <= 8; ++r) {
        for (int s = 0; s <= 8; ++s) {
            for (int w = 0; w <= 12; ++w) {
                auto fast = enumerate_partitions({r, s, w});
                auto slow = enumerate_partitions_brute_force({r, s, w});
                std::sort(fast.begin(), fast.end());
                CHECK(fast == slow);
            }
        }
    }
}

TEST_CASE("base coefficients and the first recursion steps") {
    BacklundTable table = BacklundTable::build(4);
    CHECK(table.at(0) == Expr::field());
    CHECK(table.at(1) == jet_scaled(1, 2, -1));
    CHECK(table.at(2) == jet_scaled(2, 2, -2));

    Expr a3 = jet_scaled(3, 2, -3) +
              Expr::jet(1).pow(3).scaled(Coupling::monomial(Rat(1, 3), -1));
    CHECK(table.at(3) == a3);

    Expr a4 = jet_scaled(4, 2, -4) +
              (Expr::jet(1).pow(2) * Expr::jet(2)).scaled(Coupling::monomial(Rat(2), -2));
    CHECK(table.at(4) == a4);
}

TEST_CASE("coefficients are trig free in positive jet orders") {
    BacklundTable table = BacklundTable::build(8);
    for (int nu = 1; nu <= 8; ++nu) {
        CHECK(table.at(nu).is_trig_free());
        CHECK_FALSE(table.at(nu).has_field_factor());
    }
}

TEST_CASE("homogeneity of the table") {
    BacklundTable table = BacklundTable::build(8);
    HomogeneityReport report = verify_homogeneity(table);
    CHECK(report.all_ok);
    REQUIRE(report.entries.size() == 9);
    for (int nu = 0; nu <= 8; ++nu) {
        CHECK(report.entries[static_cast<std::size_t>(nu)].ok);
        CHECK(report.entries[static_cast<std::size_t>(nu)].degree == nu);
    }
}

TEST_CASE("table access, truncation and extension") {
    BacklundTable table = BacklundTable::build(3);
    CHECK(table.max_nu() == 3);
    CHECK_THROWS_AS(table.at(4), TruncationError);
    CHECK_THROWS_AS(table.truncated(9), TruncationError);

    BacklundTable prefix = table.truncated(1);
    CHECK(prefix.max_nu() == 1);
    CHECK(prefix.at(1) == table.at(1));

    table.extend(5);
    CHECK(table.max_nu() == 5);
    CHECK(table.at(3) == BacklundTable::build(3).at(3));
    CHECK(verify_homogeneity(table).all_ok);
}

TEST_CASE("defining-equation residual vanishes order by order") {
    BacklundTable table = BacklundTable::build(7);
    for (int order = 0; order <= 6; ++order) {
        AlphaSeries residual = verify_pde_series(table, order);
        CHECK(residual.is_zero());
    }
    CHECK_THROWS_AS(verify_pde_series(table, 7), TruncationError);
}

TEST_CASE("unit coupling specialization") {
    BacklundTable table = BacklundTable::build(5);
    Expr a3_unit = Expr::jet(3).scaled(Rat(2)) + Expr::jet(1).pow(3).scaled(Rat(1, 3));
    CHECK(table.at(3).substitute_coupling(Rat(1)) == a3_unit);

    BacklundTable unit = table.substituted_coupling(Rat(1));
    for (int nu = 0; nu <= 5; ++nu)
        CHECK(unit.at(nu) == table.at(nu).substitute_coupling(Rat(1)));
    CHECK(verify_homogeneity(unit).all_ok);
}

TEST_CASE("series shift guards") {
    AlphaSeries s(2);
    s.at(0) = Expr::one();
    CHECK_THROWS_AS(s.shifted_down(1), ShiftError);
    AlphaSeries ok(2);
    ok.at(1) = Expr::one();
    CHECK(ok.shifted_down(1).at(0) == Expr::one());
}
