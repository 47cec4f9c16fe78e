#include "hermjost/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "hermjost/errors.hpp"
#include "hermjost/freeop.hpp"
#include "hermjost/jacobi.hpp"
#include "hermjost/jost.hpp"
#include "hermjost/oracle.hpp"
#include "hermjost/special.hpp"

namespace hermjost::verify {

namespace {

Check less(std::string name, double value, double threshold, std::string detail = {}) {
    return {std::move(name), value < threshold, value, threshold, std::move(detail)};
}

std::string at(const char* what, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s %.6g", what, x);
    return buf;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = a + (b - a) * static_cast<double>(i) / (n - 1.0);
    return g;
}

}  // namespace

std::vector<Check> faddeeva_checks(std::uint64_t seed) {
    std::vector<Check> out;
    // 20 points on four circles |z| = 0.5, 1.5, 3, 5
    double worst = 0.0;
    for (double r : {0.5, 1.5, 3.0, 5.0})
        for (int k = 0; k < 5; ++k) {
            const cplx z = std::polar(r, 2.0 * pi * (k + 0.3) / 5.0);
            const cplx o = special::w_contour_oracle(z);
            worst = std::max(worst, std::abs(special::faddeeva_w(z) - o) / std::abs(o));
        }
    out.push_back(less("faddeeva-oracle", worst, 1e-10));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const cplx z(u(rng), u(rng));
        const cplx a = special::faddeeva_w(z), b = special::faddeeva_w(-z);
        const cplx e = 2.0 * std::exp(-z * z);
        worst = std::max(worst, std::abs(a + b - e) / (std::abs(a) + std::abs(b) + std::abs(e)));
    }
    out.push_back(less("faddeeva-reflection", worst, 1e-12));
    return out;
}

std::vector<Check> free_operator_checks() {
    std::vector<Check> out;
    double worst = 0.0;
    for (double lam : {-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0}) {
        const auto ip = freeop::i_pm(lam, 501, freeop::Sign::plus);
        const auto im = freeop::i_pm(lam, 501, freeop::Sign::minus);
        const cplx W = freeop::i_pm_wronskian(lam);
        for (std::size_t n = 1; n <= 500; ++n)
            worst = std::max(worst, std::abs(freeop::free_wronskian(ip, im, n) - W) / std::abs(W));
    }
    out.push_back(less("free-wronskian", worst, 1e-9));

    worst = 0.0;
    for (double lam : {0.5, std::sqrt(2.0), 3.0}) {
        const auto p = freeop::free_polynomials(lam, 30);
        double lf = 0.0;  // log sqrt(2^{n-1} (n-1)!)
        for (std::size_t n = 1; n <= 30; ++n) {
            if (n > 1) lf += 0.5 * std::log(2.0 * (n - 1.0));
            const cplx h = freeop::hermite_poly(n - 1, lam / sqrt2);
            const cplx lhs = p[n] * std::exp(lf);
            worst = std::max(worst, std::abs(lhs - h) / std::max(1.0, std::abs(h)));
        }
    }
    out.push_back(less("hermite-connection", worst, 1e-10));

    const auto op = jacobi::build_operator(jacobi::free_spec(), 1000);
    worst = 0.0;
    for (double lam : linspace(-4.0, 4.0, 201)) {
        const double rho = jost::spectral_density(op, lam, 1e-10);
        worst = std::max(worst, std::abs(rho - std::exp(-0.5 * lam * lam) / sqrt_2pi));
    }
    out.push_back(less("free-density", worst, 1e-10));
    return out;
}

std::vector<Check> operator_checks(const config::RunConfig& cfg) {
    std::vector<Check> out;
    const auto op = jacobi::build_operator(cfg.spec, cfg.horizon);
    std::mt19937_64 rng(cfg.seed);

    {
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) {
            const double lam = u(rng);
            const auto P = jacobi::solve_recurrence(op, lam, jacobi::PolyKind::P, 2000);
            const auto Q = jacobi::solve_recurrence(op, lam, jacobi::PolyKind::Q, 2000);
            for (std::size_t n = 1; n < 2000; ++n)
                worst = std::max(worst, std::abs(freeop::wronskian(P, Q, op.a_values(), n) - 1.0));
        }
        out.push_back(less("wronskian-PQ", worst, 1e-9));
    }
    {
        std::normal_distribution<double> g;
        double worst = 0.0;
        for (int k = 0; k < 10; ++k) {
            SolutionSequence s;
            s.values.resize(201);
            for (auto& v : s.values) v = cplx(g(rng), g(rng));
            const auto J = jacobi::apply_operator(op, s, 200);
            const auto J0 = jacobi::apply_free(s, 200);
            const auto L = jacobi::apply_lambda(op, s, 200);
            for (std::size_t n = 0; n < 200; ++n)
                worst = std::max(worst, std::abs(J[n] - J0[n] - L[n]) /
                                            (std::abs(J[n]) + std::abs(J0[n]) + std::abs(L[n])));
        }
        out.push_back(less("lambda-consistency", worst, 1e-12));
    }
    {
        double worst = 0.0, where = 0.0;
        for (double lam : linspace(-4.0, 4.0, 33)) {
            const auto s = jost::evaluate(op, lam, cfg.tol);
            if (s.identity_residual >= worst) {
                worst = s.identity_residual;
                where = lam;
            }
        }
        out.push_back(less("jost-identity", worst, 1e-8, at("worst at lambda", where)));
    }
    {
        double lowest = INFINITY;
        for (double lam : linspace(-4.0, 4.0, 50))
            lowest = std::min(lowest, jost::weyl_m_boundary(op, lam, cfg.tol).imag());
        out.push_back({"herglotz-sign", lowest > 0.0, lowest, 0.0, "min Im m"});
    }
    {
        const auto m = oracle::truncated_measure(op, cfg.oracle_n);
        double total = 0.0;
        for (double w : m.weights) total += w;
        out.push_back(less("measure-normalization", std::abs(total - 1.0), 1e-12));

        bool ok = true;
        for (std::size_t N = 2; N <= 50 && ok; ++N) {
            const auto a = oracle::truncated_measure(op, N);
            const auto b = oracle::truncated_measure(op, N + 1);
            for (std::size_t i = 0; i < N; ++i)
                if (!(b.nodes[i] < a.nodes[i] && a.nodes[i] < b.nodes[i + 1])) ok = false;
        }
        out.push_back({"measure-interlacing", ok, ok ? 0.0 : 1.0, 0.0, "N <= 50"});
    }
    {
        const auto d = jost::volterra_nu(op, cplx(1.0, 0.5), 2000);
        out.push_back({"growth-bound", d.observed_sup <= d.norm_bound, d.observed_sup, d.norm_bound,
                       "observed sup vs v_norm e^nu at lambda = 1+0.5i"});
    }
    out.push_back(less("variation-of-parameters", jost::variation_of_parameters_check(op, 1.5, 300),
                       1e-8, "lambda = 1.5"));
    out.push_back(less("variation-of-parameters-complex",
                       jost::variation_of_parameters_check(op, cplx(0.5, 0.5), 300), 1e-7,
                       "lambda = 0.5+0.5i"));
    return out;
}

std::vector<Check> run_all(const config::RunConfig& cfg) {
    auto out = faddeeva_checks(cfg.seed);
    for (auto& c : free_operator_checks()) out.push_back(std::move(c));
    for (auto& c : operator_checks(cfg)) out.push_back(std::move(c));
    return out;
}

}  // namespace hermjost::verify
