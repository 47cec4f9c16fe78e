#pragma once

// Globally adaptive Gauss-Kronrod (7/15) integration for real or complex
// integrands on a finite interval.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <vector>

#include "hermjost/errors.hpp"

namespace hermjost::quad {

namespace detail {

inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd Kronrod nodes xgk[1], xgk[3], xgk[5], xgk[7].
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(std::complex<double> v) { return std::abs(v); }

template <class T>
struct Piece {
    double a, b;
    T value;
    double error;
    bool operator<(const Piece& o) const { return error < o.error; }
};

template <class T, class F>
Piece<T> gk15(F& f, double a, double b, std::size_t& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T fc = f(c);
    T kron = fc * wgk[7];
    T gauss = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        T s = f(c - h * xgk[j]) + f(c + h * xgk[j]);
        kron += s * wgk[j];
        if (j % 2 == 1) gauss += s * wg[j / 2];
    }
    evals += 15;
    return {a, b, kron * h, magnitude((kron - gauss) * h)};
}

}  // namespace detail

template <class T>
struct Result {
    T value{};
    double error = 0.0;
    std::size_t evaluations = 0;
};

struct Options {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    std::size_t max_intervals = 2000;
};

// Integrates f over [a, b]. breaks are optional interior points that seed the
// initial partition. Throws ConvergenceError when the interval budget runs out.
template <class T, class F>
Result<T> integrate(F&& f, double a, double b, const Options& opt = {},
                    const std::vector<double>& breaks = {}) {
    Result<T> res;
    if (a == b) return res;
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }
    std::vector<double> edges{a};
    for (double x : breaks)
        if (x > a && x < b) edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());

    std::priority_queue<detail::Piece<T>> heap;
    T total{};
    double err = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        auto p = detail::gk15<T>(f, edges[i], edges[i + 1], res.evaluations);
        total += p.value;
        err += p.error;
        heap.push(p);
    }
    while (err > std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(total))) {
        if (heap.size() >= opt.max_intervals)
            throw ConvergenceError("adaptive quadrature did not converge within the interval budget");
        auto worst = heap.top();
        heap.pop();
        const double m = 0.5 * (worst.a + worst.b);
        if (!(m > worst.a && m < worst.b))
            throw ConvergenceError("adaptive quadrature interval collapsed");
        auto left = detail::gk15<T>(f, worst.a, m, res.evaluations);
        auto right = detail::gk15<T>(f, m, worst.b, res.evaluations);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to shed the drift of the running updates.
    T sum{};
    double esum = 0.0;
    while (!heap.empty()) {
        sum += heap.top().value;
        esum += heap.top().error;
        heap.pop();
    }
    res.value = sum * sign;
    res.error = esum;
    return res;
}

}  // namespace hermjost::quad
