// One PASS/FAIL line per acceptance criterion.

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hermjost/freeop.hpp"
#include "hermjost/jacobi.hpp"
#include "hermjost/jost.hpp"
#include "hermjost/oracle.hpp"
#include "hermjost/pipeline.hpp"
#include "hermjost/special.hpp"

using namespace hermjost;
using jacobi::Family;

namespace {

constexpr std::uint64_t seed = 20240611;

struct Outcome {
    bool passed;
    std::string detail;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = a + (b - a) * static_cast<double>(i) / (n - 1.0);
    g.back() = b;
    return g;
}

double gaussian(double x) { return std::exp(-0.5 * x * x) / sqrt_2pi; }

jacobi::PerturbationSpec power_spec() {
    return jacobi::make_spec(Family::power(0.1, 0.5), Family::power(0.2, 1.0));
}

const jacobi::JacobiOperator& power_op() {
    static const auto op = jacobi::build_operator(power_spec(), jost::default_horizon);
    return op;
}

Outcome free_density() {
    const auto op = jacobi::build_operator(jacobi::free_spec(), jost::default_horizon);
    double worst = 0.0;
    for (double lam : linspace(-4.0, 4.0, 201))
        worst = std::max(worst, std::abs(jost::spectral_density(op, lam, 1e-10) - gaussian(lam)));
    return {worst < 1e-10, fmt("max |rho - gaussian| = %.2e", worst)};
}

Outcome wronskian() {
    double worst = 0.0;
    for (double lam : {0.0, 1.0, -1.0, 2.0, -2.0, 3.0, -3.0}) {
        const auto ip = freeop::i_pm(lam, 501, freeop::Sign::plus);
        const auto im = freeop::i_pm(lam, 501, freeop::Sign::minus);
        const cplx W = freeop::i_pm_wronskian(lam);
        for (std::size_t n = 1; n <= 500; ++n)
            worst = std::max(worst, std::abs(freeop::free_wronskian(ip, im, n) - W) / std::abs(W));
    }
    return {worst < 1e-9, fmt("max relative deviation = %.2e", worst)};
}

Outcome free_asymptotics() {
    bool ok = true;
    std::string d;
    for (double lam : {0.0, 1.0, 2.0})
        for (auto sign : {freeop::Sign::plus, freeop::Sign::minus}) {
            const auto seq = freeop::i_pm(lam, 400, sign);
            auto err = [&](std::size_t n) {
                return std::abs(freeop::i_pm_asymptotic(lam, n, sign) / seq[n] - 1.0);
            };
            const double ratio = err(400) / err(100);
            const bool in = ratio >= 0.3 && ratio <= 0.8;
            ok = ok && in;
            d += fmt("%s%g%c:%.3f", d.empty() ? "err(400)/err(100) " : " ", lam,
                     sign == freeop::Sign::plus ? '+' : '-', ratio);
        }
    return {ok, d};
}

Outcome jost_identity() {
    const auto grid = linspace(-4.0, 4.0, 33);
    const auto free = jacobi::build_operator(jacobi::free_spec(), jost::default_horizon);
    const auto crop = jacobi::build_operator(jacobi::cropped_spec(jacobi::free_spec()), jost::default_horizon);
    double wf = 0.0, wc = 0.0, wp = 0.0;
    for (double lam : grid) {
        wf = std::max(wf, jost::evaluate(free, lam, 1e-10).identity_residual);
        wc = std::max(wc, jost::evaluate(crop, lam, 1e-10).identity_residual);
        wp = std::max(wp, jost::evaluate(power_op(), lam, 1e-10).identity_residual);
    }
    const double worst = std::max({wf, wc, wp});
    return {worst < 1e-8, fmt("max residual free %.2e, free crop %.2e, power %.2e", wf, wc, wp)};
}

Outcome triple_density() {
    const std::vector<double> pts{-2.0, -1.0, 0.0, 1.0, 2.0};
    const auto n_grid = jost::limit_grid(4000);
    double wl = 0.0;
    for (double lam : pts) {
        const double rho = jost::spectral_density(power_op(), lam, 1e-10);
        const auto lim = jost::density_via_limit(power_op(), lam, n_grid);
        wl = std::max(wl, std::abs(rho - lim.value));
    }
    const auto measure = oracle::truncated_measure(power_op(), 2000);
    const double dev = oracle::cdf_compare(
        measure, [](double x) { return jost::spectral_density(power_op(), x, 1e-10); }, pts, -8.0);
    return {wl < 1e-3 && dev < 5e-3,
            fmt("max |rho - rho_limit| = %.2e, max CDF deviation = %.2e", wl, dev)};
}

Outcome variation_of_parameters() {
    const double real = jost::variation_of_parameters_check(power_op(), 1.5, 300);
    const double cx = jost::variation_of_parameters_check(power_op(), cplx(0.5, 0.5), 300);
    return {real < 1e-8 && cx < 1e-7, fmt("lambda=1.5: %.2e, lambda=0.5+0.5i: %.2e", real, cx)};
}

Outcome plancherel_rotach() {
    const std::vector<std::size_t> ns{64, 128, 256, 512, 1024};
    bool ok = true;
    std::string d;
    for (const auto& row : pipeline::asymptotics_table()) {
        const bool pr = row.kind == "plancherel-rotach";
        const bool slope_ok = row.slope >= -0.65 && row.slope <= -0.35;
        const bool err_ok = !pr || row.rel_error.back() < 0.05;
        ok = ok && slope_ok && err_ok;
        if (pr)
            d += fmt("%smu=%g:%.2f", d.empty() ? "slopes " : " ", row.param.real(), row.slope);
        else
            d += fmt(" z=%g%+gi:%.2f", row.param.real(), row.param.imag(), row.slope);
    }
    return {ok, d};
}

Outcome faddeeva() {
    double worst = 0.0;
    for (double r : {0.5, 1.5, 3.0, 5.0})
        for (int k = 0; k < 5; ++k) {
            const cplx z = std::polar(r, 2.0 * pi * (k + 0.3) / 5.0);
            const cplx o = special::w_contour_oracle(z);
            worst = std::max(worst, std::abs(special::faddeeva_w(z) - o) / std::abs(o));
        }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    double refl = 0.0;
    for (int k = 0; k < 100; ++k) {
        const cplx z(u(rng), u(rng));
        const cplx a = special::faddeeva_w(z), b = special::faddeeva_w(-z);
        const cplx e = 2.0 * std::exp(-z * z);
        refl = std::max(refl, std::abs(a + b - e) / (std::abs(a) + std::abs(b) + std::abs(e)));
    }
    return {worst < 1e-10 && refl < 1e-12, fmt("oracle %.2e, reflection %.2e", worst, refl)};
}

Outcome hermite() {
    double worst = 0.0;
    for (double lam : {0.5, std::sqrt(2.0), 3.0}) {
        const auto p = freeop::free_polynomials(lam, 30);
        double lf = 0.0;
        for (std::size_t n = 1; n <= 30; ++n) {
            if (n > 1) lf += 0.5 * std::log(2.0 * (n - 1.0));
            const cplx h = freeop::hermite_poly(n - 1, lam / sqrt2);
            worst = std::max(worst, std::abs(p[n] * std::exp(lf) - h) / std::max(1.0, std::abs(h)));
        }
    }
    return {worst < 1e-10, fmt("max relative deviation = %.2e", worst)};
}

Outcome properties() {
    std::mt19937_64 rng(seed);
    const auto& op = power_op();
    std::string d;
    bool ok = true;

    double wpq = 0.0;
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int k = 0; k < 20; ++k) {
        const double lam = u(rng);
        const auto P = jacobi::solve_recurrence(op, lam, jacobi::PolyKind::P, 2000);
        const auto Q = jacobi::solve_recurrence(op, lam, jacobi::PolyKind::Q, 2000);
        for (std::size_t n = 1; n < 2000; ++n)
            wpq = std::max(wpq, std::abs(freeop::wronskian(P, Q, op.a_values(), n) - 1.0));
    }
    ok = ok && wpq < 1e-9;
    d += fmt("W(P,Q) %.1e", wpq);

    double wl = 0.0;
    std::normal_distribution<double> g;
    for (int k = 0; k < 20; ++k) {
        SolutionSequence s;
        s.values.resize(501);
        for (auto& v : s.values) v = cplx(g(rng), g(rng));
        const auto J = jacobi::apply_operator(op, s, 500);
        const auto J0 = jacobi::apply_free(s, 500);
        const auto L = jacobi::apply_lambda(op, s, 500);
        for (std::size_t n = 0; n < 500; ++n)
            wl = std::max(wl, std::abs(J[n] - J0[n] - L[n]) / (std::abs(J[n]) + std::abs(J0[n])));
    }
    ok = ok && wl < 1e-12;
    d += fmt(", Lambda %.1e", wl);

    const auto b1 = jacobi::build_operator(jacobi::make_spec(Family::zero(), Family::finite({0.5})), jost::default_horizon);
    double im_min = INFINITY;
    for (double lam : linspace(-4.0, 4.0, 50)) {
        im_min = std::min(im_min, jost::weyl_m_boundary(b1, lam, 1e-10).imag());
        im_min = std::min(im_min, jost::weyl_m_boundary(op, lam, 1e-10).imag());
    }
    ok = ok && im_min > 0.0;
    d += fmt(", min Im m %.1e", im_min);

    const auto m = oracle::truncated_measure(op, 2000);
    double total = 0.0;
    for (double w : m.weights) total += w;
    bool inter = true;
    for (std::size_t N = 2; N <= 50; ++N) {
        const auto a = oracle::truncated_measure(op, N);
        const auto b = oracle::truncated_measure(op, N + 1);
        for (std::size_t i = 0; i < N; ++i) inter = inter && b.nodes[i] < a.nodes[i] && a.nodes[i] < b.nodes[i + 1];
    }
    ok = ok && std::abs(total - 1.0) < 1e-12 && inter;
    d += fmt(", |sum w - 1| %.1e, interlacing %s", std::abs(total - 1.0), inter ? "ok" : "broken");

    bool growth = true;
    for (cplx lam : {cplx(1.0, 0.5), cplx(-0.5, 0.2), cplx(0.0, 1.0)}) {
        const auto v = jost::volterra_nu(op, lam, 4000);
        growth = growth && v.observed_sup <= v.norm_bound;
    }
    ok = ok && growth;
    d += fmt(", growth bound %s", growth ? "ok" : "violated");
    return {ok, d};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"free-density", free_density},
        {"wronskian", wronskian},
        {"free-asymptotics-rate", free_asymptotics},
        {"jost-identity", jost_identity},
        {"triple-density", triple_density},
        {"variation-of-parameters", variation_of_parameters},
        {"plancherel-rotach", plancherel_rotach},
        {"faddeeva-oracle", faddeeva},
        {"hermite-connection", hermite},
        {"property-suites", properties},
    };
    const double limits[] = {5.0, 1e9, 1e9, 60.0, 120.0, 1e9, 1e9, 1e9, 1e9, 1e9};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > limits[i]) {
            o.passed = false;
            o.detail += fmt(" (runtime limit %.0f s exceeded)", limits[i]);
        }
        std::printf("%s %2zu %-24s %s [%.2f s]\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.passed;
    }
    return failed ? 1 : 0;
}
