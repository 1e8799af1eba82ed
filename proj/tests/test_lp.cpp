#include "doctest.h"

#include <limits>
#include <random>

#include "sforest/lp.hpp"

using namespace sforest;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("two-variable textbook LP") {
    // min -x - 2y st x + y <= 4, x <= 3, y <= 2, x,y >= 0 -> (2,2), obj -6
    LpProgram lp;
    int x = lp.add_column(-1.0, 0.0, 3.0);
    int y = lp.add_column(-2.0, 0.0, 2.0);
    lp.add_row(RowSense::LE, 4.0, {{x, 1.0}, {y, 1.0}});
    LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(-6.0));
    CHECK(sol.x[static_cast<std::size_t>(x)] == doctest::Approx(2.0));
    CHECK(sol.x[static_cast<std::size_t>(y)] == doctest::Approx(2.0));
}

TEST_CASE("equality rows force phase one") {
    // min x + y st x + 2y = 3, x - y = 0 -> x = y = 1, obj 2
    LpProgram lp;
    int x = lp.add_column(1.0, 0.0, kInf);
    int y = lp.add_column(1.0, 0.0, kInf);
    lp.add_row(RowSense::EQ, 3.0, {{x, 1.0}, {y, 2.0}});
    lp.add_row(RowSense::EQ, 0.0, {{x, 1.0}, {y, -1.0}});
    LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(2.0));
    CHECK(sol.x[static_cast<std::size_t>(x)] == doctest::Approx(1.0));
}

TEST_CASE("infeasible program is reported") {
    LpProgram lp;
    int x = lp.add_column(1.0, 0.0, 1.0);
    lp.add_row(RowSense::GE, 2.0, {{x, 1.0}});
    CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded program is reported") {
    LpProgram lp;
    int x = lp.add_column(-1.0, 0.0, kInf);
    lp.add_row(RowSense::GE, 0.0, {{x, 1.0}});
    CHECK(solve_lp(lp).status == LpStatus::Unbounded);
}

TEST_CASE("free and negative variables") {
    // min x st x >= -5 as a row, x free -> -5
    LpProgram lp;
    int x = lp.add_column(1.0, -kInf, kInf);
    lp.add_row(RowSense::GE, -5.0, {{x, 1.0}});
    LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(-5.0));
}

TEST_CASE("warm restart after appending rows matches a cold solve") {
    LpProgram lp;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    const int n = 12;
    for (int j = 0; j < n; ++j) lp.add_column(coeff(rng), 0.0, 5.0);
    auto random_row = [&] {
        std::vector<std::pair<int, double>> terms;
        for (int j = 0; j < n; ++j) {
            if (rng() % 3 == 0) terms.push_back({j, coeff(rng)});
        }
        return terms;
    };
    for (int i = 0; i < 6; ++i) lp.add_row(RowSense::GE, -1.0, random_row());

    SimplexSolver warm;
    LpSolution base = warm.solve(lp);
    REQUIRE(base.status == LpStatus::Optimal);

    for (int round = 0; round < 5; ++round) {
        for (int i = 0; i < 3; ++i) lp.add_row(RowSense::LE, 4.0, random_row());
        LpSolution hot = warm.resolve(lp);
        LpSolution cold = solve_lp(lp);
        REQUIRE(hot.status == cold.status);
        if (hot.status == LpStatus::Optimal) {
            CHECK(hot.objective == doctest::Approx(cold.objective).epsilon(1e-6));
        }
    }
}

TEST_CASE("duplicate coefficients merge and bad indices throw") {
    LpProgram lp;
    int x = lp.add_column(1.0, 0.0, kInf);
    int r = lp.add_row(RowSense::GE, 2.0, {{x, 0.5}, {x, 0.5}});
    CHECK(lp.row(r).coeffs.size() == 1);
    CHECK(lp.row(r).coeffs[0].second == doctest::Approx(1.0));
    CHECK_THROWS(lp.add_row(RowSense::LE, 0.0, {{5, 1.0}}));
    LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(2.0));
}

TEST_CASE("degenerate problem still terminates") {
    // many redundant constraints through the origin
    LpProgram lp;
    int x = lp.add_column(-1.0, 0.0, 1.0);
    int y = lp.add_column(-1.0, 0.0, 1.0);
    for (int i = 1; i <= 8; ++i) {
        lp.add_row(RowSense::LE, 0.0, {{x, static_cast<double>(i)}, {y, -static_cast<double>(i)}});
    }
    lp.add_row(RowSense::LE, 1.0, {{x, 1.0}, {y, 1.0}});
    LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(-1.0));
}

TEST_CASE("export renders objective, rows and bounds") {
    LpProgram lp;
    lp.add_column(2.0, 0.0, 1.0, "edge0");
    lp.add_column(0.0, -kInf, kInf);
    lp.add_row(RowSense::GE, 1.0, {{0, 1.0}, {1, -1.0}}, "cut0");
    std::string text = export_lp(lp);
    CHECK(text.find("minimize") != std::string::npos);
    CHECK(text.find("cut0: 1 edge0 + -1 c1 >= 1") != std::string::npos);
    CHECK(text.find("0 <= edge0 <= 1") != std::string::npos);
    CHECK(text.find("c1 free") != std::string::npos);
    CHECK(text.rfind("end\n") == text.size() - 4);
}
