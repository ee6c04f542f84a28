#include <doctest.h>

#include <cmath>

#include "polyrate/rates.hpp"

using namespace polyrate;

TEST_CASE("registry contents")
{
    CHECK(test_function_registry().size() == 7);
    const auto& cub = find_test_function("|x|^3");
    REQUIRE(cub.regularity.has_value());
    CHECK(cub.regularity->r == 3);
    CHECK(cub.regularity->total_variation == 12.0);
    CHECK(find_test_function("|x|^5").regularity->total_variation == 240.0);
    CHECK(find_test_function("|x|^7").regularity->total_variation == 10080.0);
    CHECK(find_test_function("|x|").regularity->total_variation == 2.0);
    CHECK(find_test_function("exp(-1/x^2)").f(0.0) == 0.0);
    CHECK_FALSE(find_test_function("runge").regularity.has_value());
    CHECK_THROWS_AS(find_test_function("nope"), precondition_error);

    // analytic derivatives vs finite differences
    for (const auto& tf : test_function_registry()) {
        for (double x : {-0.7, 0.33, 0.81}) {
            const double h = 1e-6;
            const double fd = (tf.f(x + h) - tf.f(x - h)) / (2.0 * h);
            CHECK(std::abs(tf.d1(x) - fd) < 1e-4 * (1.0 + std::abs(tf.d1(x))));
            const double fd2 = (tf.d1(x + h) - tf.d1(x - h)) / (2.0 * h);
            CHECK(std::abs(tf.d2(x) - fd2) < 1e-4 * (1.0 + std::abs(tf.d2(x))));
        }
    }
}

TEST_CASE("predicted exponents")
{
    const RegularityClass r1{1, 2.0}, r3{3, 12.0};
    CHECK(predicted_exponent({PointFamily::GaussJacobi, {0.0, 0.0}, 0}, r1) == -1.0);
    CHECK(predicted_exponent({PointFamily::GaussJacobi, {2.5, 0.0}, 0}, r1) == 1.0);
    CHECK(predicted_exponent({PointFamily::GaussJacobi, {-0.5, -0.5}, 0}, r3) == -3.0);
    CHECK(predicted_exponent({PointFamily::JacobiGaussLobatto, {1.0, 1.0}, 0}, r3) == -3.0);
    CHECK(predicted_exponent({PointFamily::JacobiGaussLobatto, {-0.5, -0.5}, 0}, r1) == -1.0);
    // outside the flat region the lobatto exponent picks up the deficit
    CHECK(predicted_exponent({PointFamily::JacobiGaussLobatto, {-0.9, 0.0}, 0}, r1) ==
          doctest::Approx(-1.0 + 0.4));
    CHECK(predicted_exponent({PointFamily::JacobiGaussRadauPlus1, {1.5, -0.5}, 0}, r1) == -1.0);
    CHECK(predicted_exponent({PointFamily::JacobiGaussRadauPlus1, {0.0, 2.0}, 0}, r1) ==
          doctest::Approx(1.0));
    CHECK(predicted_exponent({PointFamily::JacobiGaussRadauMinus1, {2.0, 0.0}, 0}, r1) ==
          doctest::Approx(1.0));
    // chebyshev families map onto the +-1/2 jacobi cases
    CHECK(predicted_exponent({PointFamily::ChebyshevFirst, {}, 0}, r1) == -1.0);
    CHECK(predicted_exponent({PointFamily::ChebyshevSecond, {}, 0}, r1) == -1.0);
    CHECK_THROWS_AS(predicted_exponent({PointFamily::Equispaced, {}, 0}, r1),
                    precondition_error);
}

TEST_CASE("convergence sweep recovers the first-order rate")
{
    RateReport rep = run_convergence({PointFamily::GaussJacobi, {0.0, 0.0}, 0}, "|x|",
                                     {16, 32, 64, 128, 256, 512});
    REQUIRE(rep.has_prediction);
    CHECK(rep.predicted_slope == -1.0);
    CHECK(std::abs(rep.fitted_slope - rep.predicted_slope) <= 0.2);
    CHECK(rep.verdict);
    for (const auto& row : rep.rows)
        if (row.bound > 0.0) CHECK(row.error <= row.bound + 1e-12);
}

TEST_CASE("chebyshev |x| errors respect the classical bound")
{
    RateReport rep = run_convergence({PointFamily::ChebyshevSecond, {}, 0}, "|x|",
                                     {16, 32, 64, 128, 256});
    for (const auto& row : rep.rows) CHECK(row.error <= 4.0 / (M_PI * (row.n - 1)));
}

TEST_CASE("polynomial data is flagged exact")
{
    // x^2 is not in the registry; exp converges geometrically and bottoms out,
    // so probe exactness through a degree-covering kink-free proxy instead:
    // exp at generous n is within the floor on every row
    RateReport rep = run_convergence({PointFamily::ChebyshevFirst, {}, 0}, "exp",
                                     {30, 40, 50});
    CHECK(rep.exact);
    CHECK_FALSE(rep.has_prediction);
    CHECK_FALSE(rep.verdict);
}

TEST_CASE("increasing n_list is required")
{
    CHECK_THROWS_AS(run_convergence({PointFamily::ChebyshevFirst, {}, 0}, "|x|", {8, 8}),
                    precondition_error);
}

TEST_CASE("derivative comparison on a smooth function bottoms out")
{
    auto rows = run_derivative_comparison({PointFamily::ChebyshevSecond, {}, 0}, "exp",
                                          {24}, {0, 1, 2});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].interp_error < 1e-12);
    CHECK(rows[0].remez_error < 1e-12);
    CHECK(rows[1].interp_error < 1e-9);
    CHECK(rows[2].interp_error < 1e-5);
}

TEST_CASE("derivative comparison rejects bad orders")
{
    CHECK_THROWS_AS(run_derivative_comparison({PointFamily::ChebyshevSecond, {}, 0}, "exp",
                                              {10}, {3}),
                    precondition_error);
}
