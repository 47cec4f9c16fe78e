#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hermjost/errors.hpp"
#include "hermjost/special.hpp"
#include "support/approx.hpp"
#include "support/reference_values.hpp"

using namespace hermjost;
using namespace hermjost::special;
using testing::rel;

TEST_CASE("faddeeva matches reference values") {
    for (const auto& p : ref::faddeeva) {
        const cplx z(p.x, p.y);
        CAPTURE(z);
        CHECK(rel(faddeeva_w(z), cplx(p.re, p.im)) < 1e-13);
    }
}

TEST_CASE("faddeeva at the origin and on the imaginary axis") {
    CHECK(faddeeva_w(0.0) == cplx(1.0, 0.0));
    // w(iy) = exp(y^2) erfc(y)
    for (double y : {0.3, 1.0, 4.0, 10.0})
        CHECK(rel(faddeeva_w(cplx(0, y)), std::exp(y * y) * std::erfc(y)) < 1e-13);
}

TEST_CASE("contour oracle") {
    CHECK(rel(w_contour_oracle(1.5), faddeeva_w(1.5)) < 1e-10);
    for (const auto& p : ref::faddeeva) {
        const cplx z(p.x, p.y);
        if (std::abs(z) > 30.0) continue;
        CAPTURE(z);
        CHECK(rel(w_contour_oracle(z), cplx(p.re, p.im)) < 1e-10);
    }
}

TEST_CASE("faddeeva vs oracle on a disk of radius 30") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> r(0.0, 30.0), t(0.0, 2.0 * pi);
    for (int k = 0; k < 40; ++k) {
        const cplx z = std::polar(r(rng), t(rng));
        if (z.imag() * z.imag() - z.real() * z.real() > 700.0) continue;  // exp(-z^2) overflows
        const cplx o = w_contour_oracle(z);
        CAPTURE(z);
        CHECK(rel(faddeeva_w(z), o) < 1e-10);
    }
}

TEST_CASE("reflection w(-z) = 2 exp(-z^2) - w(z)") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (int k = 0; k < 100; ++k) {
        const cplx z(u(rng), u(rng));
        const cplx a = faddeeva_w(z), b = faddeeva_w(-z), e = 2.0 * std::exp(-z * z);
        CHECK(std::abs(a + b - e) / (std::abs(a) + std::abs(b) + std::abs(e)) < 1e-12);
    }
}

TEST_CASE("derivative table matches reference values") {
    for (const auto& p : ref::derivatives) {
        const cplx z(p.x, p.y);
        const auto t = w_derivative_table(z, std::max<std::size_t>(p.k, 1));
        CAPTURE(z);
        CAPTURE(p.k);
        CHECK(rel(t.scaled(p.k), cplx(p.re, p.im)) < 1e-12);
        CHECK(t.error_estimate() < 1e-8);
    }
}

TEST_CASE("derivative table basics") {
    const auto t = w_derivative_table(0.0, 4);
    CHECK(t.value(0) == cplx(1.0, 0.0));
    // w'(0) = 2i/sqrt(pi)
    CHECK(rel(t.value(1), cplx(0.0, 2.0 / sqrt_pi)) < 1e-14);
    // w''(z) = -2w - 2z w' => w''(0) = -2
    CHECK(rel(t.value(2), cplx(-2.0, 0.0)) < 1e-14);
    CHECK(t.max_recurrence_residual() < 1e-13);
    CHECK(WDerivativeTable::log_scale(0) == 0.0);
    CHECK(WDerivativeTable::log_scale(3) == doctest::Approx(0.5 * std::log(48.0)));
}

TEST_CASE("derivative table method selection") {
    CHECK(w_derivative_table(cplx(0.5, 2.0), 300).method_at(300) == Recurrence::backward);
    const auto fwd = w_derivative_table(cplx(0.5, 0.0), 50, Direction::forward);
    CHECK(fwd.method_at(50) == Recurrence::forward);
    const auto auto_real = w_derivative_table(cplx(5.66, 0.0), 2000);
    CHECK(auto_real.error_estimate() < 1e-8);
    CHECK(std::string(to_string(Recurrence::shifted_backward)).size() > 0);
}

TEST_CASE("derivative table recurrence residual") {
    for (cplx z : {cplx(0.5, 0.0), cplx(-1.0, -0.5), cplx(3.5, 0.2), cplx(0.0, 0.7)}) {
        const auto t = w_derivative_table(z, 400);
        CAPTURE(z);
        CHECK(t.max_recurrence_residual() < 1e-12);
    }
}

TEST_CASE("zoukowski map") {
    CHECK(std::abs(zoukowski_phi(0.0).value - cplx(0, 1)) < 1e-15);
    const auto v = zoukowski_phi(0.6);
    CHECK(std::abs(v.value - cplx(0.6, 0.8)) < 1e-15);
    CHECK_FALSE(v.near_branch_point);
    CHECK(zoukowski_phi(1.0).near_branch_point);
    // phi + 1/phi = 2 mu
    const cplx mu(0.2, -0.05);
    const cplx p = zoukowski_phi(mu).value;
    CHECK(std::abs(p + 1.0 / p - 2.0 * mu) < 1e-14);
}

TEST_CASE("plancherel-rotach accuracy and rate off the origin") {
    for (double mu : {-0.25, -0.1, 0.1, 0.25}) {
        std::vector<double> e;
        for (std::size_t n : {64u, 1024u}) {
            const auto t = w_derivative_table(mu * std::sqrt(2.0 * n), n - 1);
            e.push_back(relative_error(plancherel_rotach_w(mu, n), t));
        }
        CAPTURE(mu);
        CHECK(e[1] < 0.05);
        CHECK(e[1] < e[0]);
    }
}

TEST_CASE("plancherel-rotach domain") {
    CHECK_THROWS_AS(plancherel_rotach_w(0.5, 64), DomainError);
    CHECK_THROWS_AS(w_fixed_z_asymptotic(6.0, 64), DomainError);
}

TEST_CASE("fixed-z asymptotics decay at z = i") {
    const cplx z(0.0, 1.0);
    const double e64 = relative_error(w_fixed_z_asymptotic(z, 64), w_derivative_table(z, 63));
    const double e1024 = relative_error(w_fixed_z_asymptotic(z, 1024), w_derivative_table(z, 1023));
    CHECK(e1024 < 0.05);
    const double slope = std::log(e1024 / e64) / std::log(16.0);
    CHECK(slope < -0.35);
    CHECK(slope > -0.65);
}
