#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "hermjost/errors.hpp"
#include "hermjost/freeop.hpp"
#include "hermjost/jost.hpp"

namespace hermjost::jost {

namespace {

constexpr std::size_t base_level = 1000;
constexpr std::size_t max_levels = 6;

struct Partials {
    std::vector<cplx> S;        // S[n-1] = sum_{k<=n} term_k
    std::vector<double> ratio;  // |term_n| / admissibility term
};

Partials series(const JacobiOperator& op, cplx lambda, std::size_t N) {
    const auto ip = freeop::i_pm(lambda, N + 1, freeop::Sign::plus);
    const auto lam = jacobi::apply_lambda(op, ip, N);
    const auto P = jacobi::solve_recurrence(op, lambda, jacobi::PolyKind::P, N);
    Partials out;
    out.S.resize(N);
    out.ratio.resize(N);
    // Neumaier summation, componentwise
    double sr = 0.0, si = 0.0, cr = 0.0, ci = 0.0;
    auto add = [](double& s, double& c, double x) {
        const double t = s + x;
        c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
        s = t;
    };
    for (std::size_t n = 1; n <= N; ++n) {
        const cplx t = lam[n - 1] * P[n];
        add(sr, cr, t.real());
        add(si, ci, t.imag());
        out.S[n - 1] = {sr + cr, si + ci};
        const double s = jacobi::admissibility_term(op, n);
        out.ratio[n - 1] = s > 0.0 ? std::abs(t) / s : 0.0;
    }
    return out;
}

cplx smoothed(const std::vector<cplx>& S, std::size_t N) {
    static constexpr double w[6] = {1, 5, 10, 10, 5, 1};
    cplx s = 0.0;
    for (std::size_t j = 0; j < 6; ++j) s += w[j] * S[N - 1 - j];
    return s / 32.0;
}

// Correction exponents for the smoothed partial sums S_N = F + sum_j a_j N^-e_j.
std::vector<double> correction_exponents(const JacobiOperator& op) {
    std::vector<double> base = op.spec().c.decay_exponents();
    for (double e : op.spec().b.decay_exponents()) base.push_back(e - 0.5);
    if (base.empty()) base.push_back(0.5);
    std::vector<double> all;
    for (double e : base)
        for (int j = 0; j < static_cast<int>(max_levels); ++j) all.push_back(e + 0.5 * j);
    std::sort(all.begin(), all.end());
    std::vector<double> out;
    for (double e : all)
        if (out.empty() || e - out.back() > 1e-9) out.push_back(e);
    return out;
}

// Extrapolate to N -> infinity through the given levels by solving the
// collocation system in the scaled basis (N_0/N)^e.
cplx extrapolate(const std::vector<std::size_t>& Ns, const std::vector<cplx>& vals,
                 const std::vector<double>& exps) {
    const std::size_t L = Ns.size();
    std::vector<std::vector<double>> A(L, std::vector<double>(L));
    std::vector<cplx> rhs = vals;
    for (std::size_t i = 0; i < L; ++i) {
        A[i][0] = 1.0;
        const double r = static_cast<double>(Ns[0]) / static_cast<double>(Ns[i]);
        for (std::size_t j = 1; j < L; ++j) A[i][j] = std::pow(r, exps[j - 1]);
    }
    for (std::size_t col = 0; col < L; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < L; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        std::swap(A[col], A[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (std::size_t r = col + 1; r < L; ++r) {
            const double f = A[r][col] / A[col][col];
            for (std::size_t j = col; j < L; ++j) A[r][j] -= f * A[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<cplx> x(L);
    for (std::size_t i = L; i-- > 0;) {
        cplx s = rhs[i];
        for (std::size_t j = i + 1; j < L; ++j) s -= A[i][j] * x[j];
        x[i] = s / A[i][i];
    }
    return x[0];
}

void require_admissible(const JacobiOperator& op) {
    const auto rep = jacobi::check_conditions(op.spec(), 1000);
    if (!rep.passes)
        throw NotAdmissible("operator is not admissible: " + rep.diagnostic);
}

void check_tol(double tol) {
    if (!(tol >= 1e-12 && tol <= 1e-4)) throw DomainError("tol must lie in [1e-12, 1e-4]");
}

}  // namespace

JostValue jost_function(const JacobiOperator& op, cplx lambda, double tol) {
    check_tol(tol);
    if (!is_finite(lambda) || lambda.imag() < 0.0)
        throw DomainError("jost_function: need finite lambda with Im lambda >= 0");
    require_admissible(op);
    if (op.is_free()) return {1.0, 0, 0.0, false};

    const cplx pref = I * sqrt_2pi * std::exp(-0.5 * lambda * lambda);
    const double apref = std::abs(pref);
    const std::size_t H = op.horizon();

    // Finitely supported perturbations give a finite sum.
    const auto sc = op.spec().c.support(), sb = op.spec().b.support();
    if (sc && sb) {
        const std::size_t N = std::max<std::size_t>(std::max(*sc + 1, *sb), 2);
        if (N > H) throw ConvergenceError("jost_function: support exceeds the operator horizon");
        const auto p = series(op, lambda, N);
        return {1.0 + pref * p.S[N - 1], N, 0.0, false};
    }

    const auto exps = correction_exponents(op);
    std::vector<std::size_t> levels;
    for (std::size_t N = base_level; N <= H; N *= 2) levels.push_back(N);
    if (levels.empty()) levels.push_back(H);

    double best_est = std::numeric_limits<double>::infinity();
    std::size_t cap_index = std::min<std::size_t>(2, levels.size() - 1);
    while (true) {
        const std::size_t cap = levels[cap_index];
        const auto p = series(op, lambda, cap);

        // Analytic tail of the smallness series times the measured term ratio.
        auto ct = op.spec().c.c_tail(cap);
        auto bt = op.spec().b.b_tail(cap);
        if (ct && bt) {
            double C = 0.0;
            for (std::size_t n = cap / 2; n <= cap; ++n) C = std::max(C, p.ratio[n - 1]);
            const cplx F = 1.0 + pref * p.S[cap - 1];
            const double tail = 2.0 * apref * C * (*ct + *bt);
            if (tail <= tol * std::max(1.0, std::abs(F))) return {F, cap, tail, false};
        }

        if (cap_index >= 2) {
            const std::size_t L = std::min(cap_index + 1, max_levels);
            std::vector<std::size_t> Ns(levels.begin() + (cap_index + 1 - L),
                                        levels.begin() + cap_index + 1);
            std::vector<cplx> vals;
            for (std::size_t N : Ns) vals.push_back(smoothed(p.S, N));
            const cplx full = extrapolate(Ns, vals, exps);
            const cplx less = extrapolate({Ns.begin() + 1, Ns.end()}, {vals.begin() + 1, vals.end()}, exps);
            const cplx F = 1.0 + pref * full;
            const double est = apref * std::abs(full - less);
            best_est = std::min(best_est, est);
            if (est <= tol * std::max(1.0, std::abs(F))) return {F, cap, est, true};
        }
        if (cap_index + 1 >= levels.size())
        {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "jost_function: tail not converged within horizon %zu (estimate %.3g)", H,
                          best_est);
            throw ConvergenceError(buf);
        }
        ++cap_index;
    }
}

JostValue cropped_jost(const JacobiOperator& op, cplx lambda, double tol) {
    const auto crop = op.cropped();
    JostValue v = jost_function(crop, lambda, tol);
    const double a1 = op.a(1);
    v.value = -I * v.value / a1;
    v.tail_estimate /= a1;
    return v;
}

cplx weyl_m(const JacobiOperator& op, cplx lambda, double tol) {
    const auto F = jost_function(op, lambda, tol);
    if (std::abs(F.value) < 1e-12)
        throw Error("weyl_m: degenerate Jost function |F| < 1e-12");
    const auto F1 = cropped_jost(op, lambda, tol);
    return -F1.value / F.value;
}

cplx weyl_m_boundary(const JacobiOperator& op, double lambda, double tol) {
    return weyl_m(op, cplx(lambda, 0.0), tol);
}

double spectral_density(const JacobiOperator& op, double lambda, double tol) {
    const auto F = jost_function(op, cplx(lambda, 0.0), tol);
    return std::exp(-0.5 * lambda * lambda) / (sqrt_2pi * std::norm(F.value));
}

double identity_residual(cplx F, cplx F1, double lambda) {
    const double g = sqrt_2pi * std::exp(-0.5 * lambda * lambda);
    return std::abs(F1 * std::conj(F) - std::conj(F1) * F + I * g) / g;
}

SpectralSample evaluate(const JacobiOperator& op, double lambda, double tol) {
    const auto F = jost_function(op, cplx(lambda, 0.0), tol);
    if (std::abs(F.value) < 1e-12)
        throw Error("evaluate: degenerate Jost function |F| < 1e-12 at lambda = " +
                    std::to_string(lambda));
    const auto F1 = cropped_jost(op, cplx(lambda, 0.0), tol);
    SpectralSample s;
    s.lambda = lambda;
    s.F = F.value;
    s.F1 = F1.value;
    s.m_boundary = -F1.value / F.value;
    s.rho = std::exp(-0.5 * lambda * lambda) / (sqrt_2pi * std::norm(F.value));
    s.series_terms_used = std::max(F.series_terms_used, F1.series_terms_used);
    s.tail_estimate = std::max(F.tail_estimate, F1.tail_estimate);
    s.identity_residual = identity_residual(F.value, F1.value, lambda);
    return s;
}

std::vector<std::size_t> limit_grid(std::size_t n_max) {
    std::vector<std::size_t> g;
    for (std::size_t n = 2; n <= n_max; ++n) g.push_back(n);
    return g;
}

LimitDensity density_via_limit(const JacobiOperator& op, double lambda,
                               std::span<const std::size_t> n_grid) {
    if (n_grid.size() < 4) throw DomainError("density_via_limit: need at least 4 grid points");
    for (std::size_t i = 0; i < n_grid.size(); ++i)
        if (n_grid[i] < 1 || (i > 0 && n_grid[i] <= n_grid[i - 1]))
            throw DomainError("density_via_limit: n_grid must be increasing and positive");
    const std::size_t top = n_grid.back();
    if (top + 1 > op.horizon()) throw DomainError("density_via_limit: grid exceeds the horizon");
    const auto P = jacobi::solve_recurrence(op, cplx(lambda, 0.0), jacobi::PolyKind::P, top + 1);

    LimitDensity out{};
    for (std::size_t n : n_grid) {
        const double p0 = P[n].real(), p1 = P[n + 1].real();
        out.table.emplace_back(n, 1.0 / (pi * std::sqrt(static_cast<double>(n)) * (p0 * p0 + p1 * p1)));
    }
    // least squares on y = a + b x, x = n^{-1/2}
    const std::size_t first = n_grid.size() / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(n_grid.size() - first);
    for (std::size_t i = first; i < n_grid.size(); ++i) {
        const double x = 1.0 / std::sqrt(static_cast<double>(out.table[i].first));
        const double y = out.table[i].second;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double det = m * sxx - sx * sx;
    out.slope = (m * sxy - sx * sy) / det;
    out.value = (sy - out.slope * sx) / m;
    double ss = 0.0;
    for (std::size_t i = first; i < n_grid.size(); ++i) {
        const double x = 1.0 / std::sqrt(static_cast<double>(out.table[i].first));
        const double r = out.table[i].second - out.value - out.slope * x;
        ss += r * r;
    }
    out.fit_residual = std::sqrt(ss / m);
    out.converged = out.fit_residual <= 0.1 * std::abs(out.value);
    return out;
}

}  // namespace hermjost::jost
