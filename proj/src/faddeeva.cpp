// w(z) after the Poppe-Wijers scheme: power series near the origin, Laplace
// continued fraction elsewhere with Gautschi's convergence acceleration in the
// intermediate ring. Evaluated in the first quadrant and mapped back.

#include <cmath>

#include "hermjost/quadrature.hpp"
#include "hermjost/special.hpp"

namespace hermjost::special {

namespace {

constexpr double two_over_sqrt_pi = 1.1283791670955125739;

cplx w_first_quadrant(double xabs, double yabs) {
    const double x = xabs / 6.3;
    const double y = yabs / 4.4;
    double qrho = x * x + y * y;
    const double xquad = xabs * xabs - yabs * yabs;
    const double yquad = 2.0 * xabs * yabs;

    if (qrho < 0.085264) {
        // w = exp(-z^2) * (1 + 2i z/sqrt(pi) * sum (-z^2)^k/(k!(2k+1)))
        const double r = (1.0 - 0.85 * y) * std::sqrt(qrho);
        const int n = static_cast<int>(std::lround(6.0 + 72.0 * r));
        int j = 2 * n + 1;
        double xsum = 1.0 / j, ysum = 0.0;
        for (int i = n; i >= 1; --i) {
            j -= 2;
            const double xaux = (xsum * xquad - ysum * yquad) / i;
            ysum = (xsum * yquad + ysum * xquad) / i;
            xsum = xaux + 1.0 / j;
        }
        const double u1 = -two_over_sqrt_pi * (xsum * yabs + ysum * xabs) + 1.0;
        const double v1 = two_over_sqrt_pi * (xsum * xabs - ysum * yabs);
        const double e = std::exp(-xquad);
        const double u2 = e * std::cos(yquad);
        const double v2 = -e * std::sin(yquad);
        return {u1 * u2 - v1 * v2, u1 * v2 + v1 * u2};
    }

    double h = 0.0, h2 = 0.0;
    int kapn = 0, nu;
    if (qrho > 1.0) {
        nu = static_cast<int>(3.0 + 1442.0 / (26.0 * std::sqrt(qrho) + 77.0));
    } else {
        qrho = (1.0 - y) * std::sqrt(1.0 - qrho);
        h = 1.88 * qrho;
        h2 = 2.0 * h;
        kapn = static_cast<int>(std::lround(7.0 + 34.0 * qrho));
        nu = static_cast<int>(std::lround(16.0 + 26.0 * qrho));
    }
    double qlambda = h > 0.0 ? std::pow(h2, kapn) : 0.0;
    double rx = 0.0, ry = 0.0, sx = 0.0, sy = 0.0;
    for (int n = nu; n >= 0; --n) {
        const int np1 = n + 1;
        double tx = yabs + h + np1 * rx;
        double ty = xabs - np1 * ry;
        const double c = 0.5 / (tx * tx + ty * ty);
        rx = c * tx;
        ry = c * ty;
        if (h > 0.0 && n <= kapn) {
            tx = qlambda + sx;
            sx = rx * tx - ry * sy;
            sy = ry * tx + rx * sy;
            qlambda /= h2;
        }
    }
    double u, v;
    if (h == 0.0) {
        u = two_over_sqrt_pi * rx;
        v = two_over_sqrt_pi * ry;
    } else {
        u = two_over_sqrt_pi * sx;
        v = two_over_sqrt_pi * sy;
    }
    if (yabs == 0.0) u = std::exp(-xabs * xabs);
    return {u, v};
}

}  // namespace

cplx faddeeva_w(cplx z) {
    const double x = z.real(), y = z.imag();
    const cplx w = w_first_quadrant(std::abs(x), std::abs(y));
    if (y >= 0.0) return x >= 0.0 ? w : std::conj(w);
    // w(z) = 2 exp(-z^2) - w(-z)
    const cplx wm = x <= 0.0 ? w : std::conj(w);
    return 2.0 * std::exp(-z * z) - wm;
}

cplx w_contour_oracle(cplx z) {
    if (!is_finite(z) || std::abs(z) > 30.0)
        throw DomainError("w_contour_oracle: |z| must not exceed 30");
    const double y = z.imag();
    double c;
    cplx residue = 0.0;
    if (y >= 1.0) {
        c = 0.0;
    } else if (y <= -1.0) {
        // contour above the pole: pick up the residue exp(-z^2)
        c = 0.0;
        residue = 2.0 * std::exp(-z * z);
    } else {
        c = y - 1.0;
    }
    auto f = [&](double t) {
        const cplx zeta(t, c);
        return std::exp(-zeta * zeta) / (zeta - z);
    };
    const double L = std::sqrt(c * c + 46.0);
    quad::Options opt;
    opt.abs_tol = 1e-17;
    opt.rel_tol = 1e-13;
    opt.max_intervals = 4000;
    std::vector<double> breaks{-1.0, 0.0, 1.0};
    if (std::abs(z.real()) < L) breaks.push_back(z.real());
    auto r = quad::integrate<cplx>(f, -L, L, opt, breaks);
    return r.value / (pi * I) + residue;
}

}  // namespace hermjost::special
