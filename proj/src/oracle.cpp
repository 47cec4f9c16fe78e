#include "hermjost/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "hermjost/errors.hpp"
#include "hermjost/quadrature.hpp"

namespace hermjost::oracle {

namespace {

constexpr std::size_t max_size = 20000;
constexpr int max_sweeps = 30;
constexpr double node_gap = 1e-9;

// Implicit QL with Wilkinson-type shifts. Only the first row of the
// eigenvector matrix is carried along.
void ql_first_row(std::vector<double>& d, std::vector<double>& e, std::vector<double>& q) {
    const std::size_t n = d.size();
    const double eps = std::numeric_limits<double>::epsilon();
    e.resize(n, 0.0);
    e[n - 1] = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (iter++ == max_sweeps) {
                char buf[128];
                std::snprintf(buf, sizeof buf,
                              "truncated_measure: QL iteration stuck at index %zu", l + 1);
                throw ConvergenceError(buf);
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                const double t = q[i + 1];
                q[i + 1] = s * q[i] + c * t;
                q[i] = c * q[i] - s * t;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (true);
    }
}

}  // namespace

DiscreteMeasure tridiagonal_measure(std::vector<double> diag, std::vector<double> off) {
    const std::size_t n = diag.size();
    if (n == 0) throw DomainError("tridiagonal_measure: empty matrix");
    if (off.size() + 1 < n) throw DomainError("tridiagonal_measure: off-diagonal too short");
    off.resize(n);
    std::vector<double> q(n, 0.0);
    q[0] = 1.0;
    ql_first_row(diag, off, q);

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return diag[i] < diag[j]; });
    DiscreteMeasure m;
    m.nodes.reserve(n);
    m.weights.reserve(n);
    for (std::size_t i : idx) {
        m.nodes.push_back(diag[i]);
        m.weights.push_back(q[i] * q[i]);
    }
    return m;
}

DiscreteMeasure truncated_measure(const jacobi::JacobiOperator& op, std::size_t N) {
    if (N == 0 || N > max_size) throw DomainError("truncated_measure: need 1 <= N <= 20000");
    if (N > op.horizon() + 1) throw DomainError("truncated_measure: N exceeds the operator horizon");
    std::vector<double> d(N), e(N, 0.0);
    for (std::size_t n = 1; n <= N; ++n) {
        d[n - 1] = op.b(n);
        if (n < N) e[n - 1] = op.a(n);
    }
    return tridiagonal_measure(std::move(d), std::move(e));
}

double empirical_cdf(const DiscreteMeasure& m, double x) {
    const auto it = std::upper_bound(m.nodes.begin(), m.nodes.end(), x);
    const auto k = static_cast<std::size_t>(it - m.nodes.begin());
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += m.weights[i];
    return s;
}

namespace {

double nudge(const DiscreteMeasure& m, double x) {
    auto it = std::lower_bound(m.nodes.begin(), m.nodes.end(), x - node_gap);
    while (it != m.nodes.end() && *it <= x + node_gap) {
        x = *it + node_gap;
        ++it;
    }
    return x;
}

}  // namespace

std::vector<double> cdf_deviations(const DiscreteMeasure& m,
                                   const std::function<double(double)>& cdf,
                                   const std::vector<double>& grid) {
    std::vector<double> out;
    out.reserve(grid.size());
    for (double x0 : grid) {
        const double x = nudge(m, x0);
        out.push_back(std::abs(empirical_cdf(m, x) - cdf(x)));
    }
    return out;
}

std::vector<double> integrated_density(const std::function<double(double)>& density,
                                       const std::vector<double>& sorted_grid, double lower) {
    quad::Options opt;
    opt.abs_tol = 1e-11;
    opt.rel_tol = 1e-10;
    std::vector<double> out;
    out.reserve(sorted_grid.size());
    double acc = 0.0, prev = lower;
    for (double x : sorted_grid) {
        if (x > prev) {
            acc += quad::integrate<double>(density, prev, x, opt).value;
            prev = x;
        }
        out.push_back(x > lower ? acc : 0.0);
    }
    return out;
}

double cdf_compare(const DiscreteMeasure& m, const std::function<double(double)>& density,
                   const std::vector<double>& grid, std::optional<double> lower) {
    if (m.size() == 0) throw DomainError("cdf_compare: empty measure");
    const double lo = lower.value_or(m.nodes.front());
    std::vector<double> pts;
    pts.reserve(grid.size());
    for (double x : grid) pts.push_back(nudge(m, x));
    std::vector<double> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    const auto F = integrated_density(density, sorted, lo);
    double worst = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        worst = std::max(worst, std::abs(empirical_cdf(m, sorted[i]) - F[i]));
    return worst;
}

cplx herglotz_quadrature(const std::function<double(double)>& density, cplx lambda, double lo,
                         double hi) {
    if (lambda.imag() < 0.05) throw DomainError("herglotz_quadrature: need Im lambda >= 0.05");
    if (!(hi > lo)) throw DomainError("herglotz_quadrature: empty interval");
    auto f = [&](double x) { return cplx(density(x)) / (x - lambda); };
    quad::Options opt;
    opt.abs_tol = 1e-12;
    opt.rel_tol = 1e-10;
    opt.max_intervals = 4000;
    return quad::integrate<cplx>(f, lo, hi, opt, {lambda.real()}).value;
}

}  // namespace hermjost::oracle
