#include <algorithm>
#include <cmath>

#include "hermjost/errors.hpp"
#include "hermjost/freeop.hpp"
#include "hermjost/jost.hpp"

namespace hermjost::jost {

namespace {

struct Kernel {
    SolutionSequence ip, im, p0;
    std::vector<cplx> lp, lm;  // (Lambda I+)_k, (Lambda I-)_k, index k-1
    SolutionSequence P;
    cplx W;
};

Kernel kernel(const JacobiOperator& op, cplx lambda, std::size_t n_max) {
    Kernel k;
    k.ip = freeop::i_pm(lambda, n_max + 1, freeop::Sign::plus);
    k.im = freeop::i_pm(lambda, n_max + 1, freeop::Sign::minus);
    k.lp = jacobi::apply_lambda(op, k.ip, n_max);
    k.lm = jacobi::apply_lambda(op, k.im, n_max);
    k.p0 = freeop::free_polynomials(lambda, n_max);
    k.P = jacobi::solve_recurrence(op, lambda, jacobi::PolyKind::P, n_max);
    k.W = freeop::i_pm_wronskian(lambda);
    return k;
}

double weight(cplx lambda, std::size_t n) {
    const double x = static_cast<double>(n);
    return std::pow(x, 0.25) * std::exp(-std::abs(lambda.imag()) * std::sqrt(x));
}

}  // namespace

double variation_of_parameters_check(const JacobiOperator& op, cplx lambda, std::size_t n_max) {
    if (n_max < 2 || n_max > 500) throw DomainError("variation_of_parameters_check: need 2 <= n_max <= 500");
    if (n_max > op.horizon()) throw DomainError("variation_of_parameters_check: n_max exceeds horizon");
    const auto k = kernel(op, lambda, n_max);
    cplx sp = 0.0, sm = 0.0;  // sum_{j<n} (Lambda I+)_j P_j and (Lambda I-)_j P_j
    double dev = 0.0, norm = 0.0;
    for (std::size_t n = 2; n <= n_max; ++n) {
        sp += k.lp[n - 2] * k.P[n - 1];
        sm += k.lm[n - 2] * k.P[n - 1];
        const cplx lhs = op.a(n - 1) / std::sqrt(n - 1.0) * k.P[n];
        const cplx rhs = k.p0[n] - (sp * k.im[n] - k.ip[n] * sm) / k.W;
        const double w = weight(lambda, n);
        dev = std::max(dev, std::abs(lhs - rhs) * w);
        norm = std::max(norm, std::abs(lhs) * w);
    }
    return norm > 0.0 ? dev / norm : dev;
}

VolterraDiagnostics volterra_nu(const JacobiOperator& op, cplx lambda, std::size_t horizon) {
    if (horizon < 4 || horizon > op.horizon()) throw DomainError("volterra_nu: horizon out of range");
    if (std::abs(lambda.imag()) * std::sqrt(static_cast<double>(horizon)) > 600.0)
        throw DomainError("volterra_nu: |Im lambda| sqrt(horizon) exceeds 600");
    const auto jr = jacobi::check_conditions(op.spec(), std::max<std::size_t>(horizon, 1000));
    if (!jr.passes) throw NotAdmissible("operator is not admissible: " + jr.diagnostic);

    VolterraDiagnostics d{};
    d.horizon = horizon;
    const auto k = kernel(op, lambda, horizon);
    const double y = std::abs(lambda.imag());

    double v_norm = weight(lambda, 1);  // v_1 = 1
    double obs = std::abs(k.P[1]) * weight(lambda, 1);
    double nu = 0.0, nu_half = 0.0;
    std::vector<double> sk(horizon + 1), qk(horizon + 1);
    for (std::size_t j = 1; j <= horizon; ++j) {
        sk[j] = std::sqrt(static_cast<double>(j));
        qk[j] = std::pow(static_cast<double>(j), -0.25);
    }
    for (std::size_t n = 2; n <= horizon; ++n) {
        const double f = std::sqrt(n - 1.0) / op.a(n - 1);
        const cplx im = k.im[n], ip = k.ip[n];
        double row = 0.0;
        if (!op.is_free()) {
            for (std::size_t j = 1; j < n; ++j) {
                const cplx V = f * (k.lp[j - 1] * im - ip * k.lm[j - 1]) / k.W;
                row += std::abs(V) * std::exp(y * (sk[j] - sk[n])) * qk[j] / qk[n];
            }
        }
        nu = std::max(nu, row);
        if (n == horizon / 2) nu_half = nu;
        const double w = weight(lambda, n);
        v_norm = std::max(v_norm, std::abs(f * k.p0[n]) * w);
        obs = std::max(obs, std::abs(k.P[n]) * w);
    }
    d.nu = nu;
    d.v_norm = v_norm;
    d.norm_bound = v_norm * std::exp(nu);
    d.observed_sup = obs;
    d.saturated = nu - nu_half <= 0.05 * nu;
    return d;
}

}  // namespace hermjost::jost
