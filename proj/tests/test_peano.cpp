#include <doctest.h>

#include <cmath>
#include <random>

#include "polyrate/peano.hpp"

using namespace polyrate;

namespace {

NodeSet gj(double a, double b, int n) { return generate_nodes({PointFamily::GaussJacobi, {a, b}, n}); }

// E_n[f](x) = f(x) - L_n[f](x)
double direct_error(const NodeSet& ns, const std::function<double(double)>& f, double x)
{
    Interpolant ip = make_interpolant(ns, f);
    return f(x) - eval_interpolant(ip, x);
}

double peano_integral(const NodeSet& ns, const std::function<double(double)>& fs, double x, int s)
{
    const PeanoKernel k = make_peano_kernel(ns, x, s);
    return detail::integrate_piecewise([&](double t) { return fs(t) * kernel_eval(k, t); },
                                       -1.0, 1.0, k);
}

} // namespace

TEST_CASE("kernel vanishes at both endpoints for s >= 2")
{
    for (int s : {2, 3}) {
        for (int n : {5, 9, 14}) {
            const PeanoKernel k = make_peano_kernel(gj(0.4, -0.2, n), 0.3, s);
            CHECK(std::abs(kernel_eval(k, -1.0)) < 1e-10);
            CHECK(std::abs(kernel_eval(k, 1.0)) < 1e-10);
        }
    }
}

TEST_CASE("order-one kernel is an indicator above the top node")
{
    NodeSet ns = gj(0.0, 0.0, 6);
    const double top = ns.nodes.back();
    const double x = 0.5 * (top + 1.0);
    const PeanoKernel k = make_peano_kernel(ns, x, 1);
    CHECK(kernel_eval(k, 0.5 * (top + x)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kernel_eval(k, 0.5 * (x + 1.0)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("order-one kernel on the explicit three-point example")
{
    NodeSet ns;
    ns.nodes = {-1.0, 0.0, 1.0};
    ns.bary_weights = barycentric_weights(ns.nodes);
    const PeanoKernel k = make_peano_kernel(ns, 0.5, 1);
    // for t in the gap (0,1) with t <= x the kernel collapses to the one-sided
    // basis sum over the nodes below t: ell_0(0.5) + ell_1(0.5)
    CHECK(kernel_eval(k, 0.25) == doctest::Approx(0.625).epsilon(1e-13));
    // for t > x it is minus the sum over the nodes above t
    CHECK(kernel_eval(k, 0.75) == doctest::Approx(-0.375).epsilon(1e-13));
}

TEST_CASE("integral recursion between consecutive orders")
{
    NodeSet ns = gj(0.7, 0.1, 5);
    CHECK(kernel_recursion_check(ns, 0.3, 2, -0.5) < 1e-8);
    CHECK(kernel_recursion_check(ns, 0.3, 3, 0.9) < 1e-8);
    CHECK(kernel_recursion_check(ns, 0.3, 2, 1.0) < 1e-12);

    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n : {6, 12}) {
        NodeSet big = gj(0.0, 0.0, n);
        for (int trial = 0; trial < 20; ++trial)
            CHECK(kernel_recursion_check(big, u(rng), 2 + trial % 2, u(rng)) < 1e-8);
    }
}

TEST_CASE("kernel sup-norm chain across orders")
{
    for (int n : {10, 25, 50}) {
        NodeSet ns = gj(-0.5, 0.5, n);
        const PeanoKernel k1 = make_peano_kernel(ns, 0.37, 1);
        const PeanoKernel k2 = make_peano_kernel(ns, 0.37, 2);
        const PeanoKernel k3 = make_peano_kernel(ns, 0.37, 3);
        const PeanoKernel k4 = make_peano_kernel(ns, 0.37, 4);
        double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0;
        for (int i = 0; i <= 2000; ++i) {
            const double t = -1.0 + 2.0 * i / 2000.0;
            s1 = std::max(s1, std::abs(kernel_eval(k1, t)));
            s2 = std::max(s2, std::abs(kernel_eval(k2, t)));
            s3 = std::max(s3, std::abs(kernel_eval(k3, t)));
            s4 = std::max(s4, std::abs(kernel_eval(k4, t)));
        }
        CHECK(s2 <= M_PI / (n - 1) * s1 + 1e-9);
        CHECK(s3 <= M_PI / (n - 2) * s2 + 1e-9);
        CHECK(s4 <= M_PI / (n - 3) * s3 + 1e-9);
        CHECK(s1 <= max_basis_norm(ns).value + 1e-9);
    }
}

TEST_CASE("error representation is exact on polynomials")
{
    NodeSet ns = gj(0.0, 0.0, 7);
    auto f = [](double x) { return x * x * x * x - 0.5 * x * x + 2.0 * x; };
    auto f1 = [](double x) { return 4.0 * x * x * x - x + 2.0; };
    auto f2 = [](double x) { return 12.0 * x * x - 1.0; };
    for (double x : {-0.8, 0.1, 0.6}) {
        CHECK(std::abs(peano_integral(ns, f1, x, 1)) < 1e-8);
        CHECK(std::abs(peano_integral(ns, f2, x, 2)) < 1e-8);
    }
    (void)f;
}

TEST_CASE("error representation matches the direct error for exp")
{
    auto f = [](double x) { return std::exp(x); };
    for (int n : {5, 8}) {
        NodeSet ns = gj(0.0, 0.0, n);
        for (double x : {-0.6, 0.2, 0.9}) {
            const double direct = direct_error(ns, f, x);
            CHECK(std::abs(peano_integral(ns, f, x, 1) - direct) < 1e-7);
            CHECK(std::abs(peano_integral(ns, f, x, 2) - direct) < 1e-7);
        }
    }
}

TEST_CASE("error bounds")
{
    NodeSet c2 = generate_nodes({PointFamily::ChebyshevSecond, {}, 101});
    const RegularityClass abs1{1, 2.0};
    CHECK(error_bound(c2, abs1) ==
          doctest::Approx(2.0 * M_PI / 100.0 * max_basis_norm(c2).value).epsilon(1e-12));
    CHECK(error_bound(c2, {1, 0.0}) == 0.0);
    CHECK_THROWS_AS(error_bound(gj(0.0, 0.0, 3), RegularityClass{3, 1.0}), precondition_error);

    // the bound must dominate the measured error
    NodeSet leg = gj(0.0, 0.0, 50);
    auto cub = [](double x) { return std::abs(x) * x * x; };
    const double bound = error_bound(leg, {3, 12.0});
    CHECK(bound == doctest::Approx(12.0 * std::pow(M_PI, 3) / (49.0 * 48.0 * 47.0) *
                                   max_basis_norm(leg).value).epsilon(1e-12));
    Interpolant ip = make_interpolant(leg, cub);
    CHECK(max_grid_error(ip, cub, 0.001, 0) <= bound);
}

TEST_CASE("strongly normal bound")
{
    NodeSet lgl = generate_nodes({PointFamily::JacobiGaussLobatto, {1.0, 1.0}, 101});
    CHECK(strongly_normal_bound(lgl, {1, 2.0}, 1.0) ==
          doctest::Approx(2.0 * M_PI / 100.0).epsilon(1e-13));
    CHECK(strongly_normal_bound(lgl, {1, 0.0}, 1.0) == 0.0);
    CHECK_THROWS_AS(strongly_normal_bound(lgl, {1, 2.0}, 0.0), precondition_error);
    CHECK_THROWS_AS(strongly_normal_bound(lgl, {1, 2.0}, -1.0), precondition_error);

    NodeSet ch = gj(-0.5, -0.5, 100);
    auto absf = [](double x) { return std::abs(x); };
    Interpolant ip = make_interpolant(ch, absf);
    CHECK(max_grid_error(ip, absf, 0.001, 0) <=
          strongly_normal_bound(ch, {1, 2.0}, 0.5));
}
