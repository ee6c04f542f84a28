#include <doctest.h>

#include <cmath>

#include "polyrate/lebesgue.hpp"

using namespace polyrate;

namespace {

constexpr double euler_gamma = 0.5772156649015329;

NodeSet cheb1(int n) { return generate_nodes({PointFamily::ChebyshevFirst, {}, n}); }
NodeSet cheb2(int n) { return generate_nodes({PointFamily::ChebyshevSecond, {}, n}); }

NodeSet tri()
{
    NodeSet ns;
    ns.nodes = {-1.0, 0.0, 1.0};
    ns.bary_weights = barycentric_weights(ns.nodes);
    return ns;
}

} // namespace

TEST_CASE("lebesgue function special values")
{
    NodeSet ns = cheb1(9);
    for (double x : ns.nodes) CHECK(lebesgue_function(ns, x) == 1.0);

    NodeSet two;
    two.nodes = {-1.0, 1.0};
    two.bary_weights = barycentric_weights(two.nodes);
    for (double x : {-1.0, -0.3, 0.0, 0.77, 1.0})
        CHECK(lebesgue_function(two, x) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK(lebesgue_function(tri(), 0.5) == doctest::Approx(1.25).epsilon(1e-13));
}

TEST_CASE("lebesgue constant brackets for chebyshev points")
{
    auto r = lebesgue_constant(cheb1(10));
    const double lo = 2.0 / M_PI * (euler_gamma + std::log(4.0 / M_PI)) +
                      2.0 / M_PI * std::log(10.0);
    const double hi = 1.0 + 2.0 / M_PI * std::log(10.0);
    CHECK(r.value > lo);
    CHECK(r.value <= hi);

    NodeSet two;
    two.nodes = {-1.0, 1.0};
    two.bary_weights = barycentric_weights(two.nodes);
    CHECK(lebesgue_constant(two).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("chebyshev second kind ties first kind at even counts")
{
    CHECK(lebesgue_constant(cheb2(6)).value ==
          doctest::Approx(lebesgue_constant(cheb1(5)).value).epsilon(1e-8));
}

TEST_CASE("ehlich-zeller relation across parities")
{
    for (int n = 4; n <= 40; ++n) {
        const double u = lebesgue_constant(cheb2(n)).value;
        const double t = lebesgue_constant(cheb1(n - 1)).value;
        if (n % 2 == 0) {
            CHECK(std::abs(u - t) < 1e-6);
        } else {
            CHECK(t - u >= -1e-9);
            CHECK(t - u <= 1.0 / ((n - 1.0) * (n - 1.0)) + 1e-9);
        }
    }
}

TEST_CASE("equispaced points blow up")
{
    CHECK(lebesgue_constant(generate_nodes({PointFamily::Equispaced, {}, 20})).value > 1000.0);
}

TEST_CASE("lebesgue function dominates one and the basis norms")
{
    for (auto fam : {PointFamily::GaussJacobi, PointFamily::JacobiGaussLobatto,
                     PointFamily::ChebyshevFirst}) {
        NodeSet ns = generate_nodes({fam, {1.1, -0.4}, 21});
        for (int i = 0; i <= 200; ++i) {
            const double x = -1.0 + 2.0 * i / 200.0;
            CHECK(lebesgue_function(ns, x) >= 1.0 - 1e-12);
        }
        const double lc = lebesgue_constant(ns).value;
        const double mb = max_basis_norm(ns).value;
        CHECK(lc >= mb - 1e-10);
        CHECK(mb >= 1.0 - 1e-12);
    }
}

TEST_CASE("max basis norm growth regimes")
{
    // bounded regime at chebyshev extreme points
    const double a = max_basis_norm(cheb2(64)).value;
    const double b = max_basis_norm(cheb2(256)).value;
    CHECK(std::abs(a - b) <= 0.1 * std::max(a, b));

    // growth ~ n^(gamma - 1/2) = n^2 for gamma = 2.5
    const double g1 = max_basis_norm(generate_nodes({PointFamily::GaussJacobi, {2.5, 2.5}, 64})).value;
    const double g2 = max_basis_norm(generate_nodes({PointFamily::GaussJacobi, {2.5, 2.5}, 128})).value;
    const double g3 = max_basis_norm(generate_nodes({PointFamily::GaussJacobi, {2.5, 2.5}, 256})).value;
    CHECK(g2 / g1 >= 3.0);
    CHECK(g2 / g1 <= 5.0);
    CHECK(g3 / g2 >= 3.0);
    CHECK(g3 / g2 <= 5.0);
}

TEST_CASE("growth exponent fits")
{
    std::vector<std::pair<int, double>> quad, flat;
    for (int n : {8, 16, 32, 64, 128}) {
        quad.emplace_back(n, 3.7 * n * n);
        flat.emplace_back(n, 0.42);
    }
    CHECK(growth_exponent(quad) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(growth_exponent(flat) == doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(growth_exponent({{2, 1.0}, {4, 0.0}, {8, 1.0}}), precondition_error);
    CHECK_THROWS_AS(growth_exponent({{2, 1.0}, {4, 2.0}}), precondition_error);

    // Lambda_n(T_n) grows logarithmically, so the effective power-law slope
    // is small and shrinking (d log Lambda / d log n = (2/pi)/Lambda)
    std::vector<std::pair<int, double>> sweep;
    for (int n = 16; n <= 1024; n *= 2)
        sweep.emplace_back(n, lebesgue_constant(cheb1(n)).value);
    const double slope = growth_exponent(sweep);
    CHECK(slope > 0.0);
    CHECK(slope < 0.3);
}
