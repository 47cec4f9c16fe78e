#include <algorithm>
#include <cmath>
#include <string>

#include "hermjost/errors.hpp"
#include "hermjost/freeop.hpp"
#include "hermjost/special.hpp"

namespace hermjost::freeop {

SolutionSequence i_pm(cplx lambda, std::size_t n_max, Sign sign) {
    if (n_max < 2) throw DomainError("i_pm: n_max must be >= 2");
    if (!is_finite(lambda) || std::abs(lambda) > 8.0)
        throw DomainError("i_pm: |lambda| must not exceed 8");
    const cplx z = (sign == Sign::plus ? 1.0 : -1.0) * lambda / sqrt2;
    const auto table = special::w_derivative_table(z, n_max - 1);
    const cplx pref = 0.5 * std::exp(0.5 * lambda * lambda);
    SolutionSequence out;
    out.lambda = lambda;
    out.start_index = 1;
    out.kind = sign == Sign::plus ? SequenceKind::Iplus : SequenceKind::Iminus;
    out.values.resize(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        cplx v = pref * table.scaled(n - 1);
        if (sign == Sign::plus && (n - 1) % 2 == 1) v = -v;
        out.values[n - 1] = v;
    }
    return out;
}

cplx i_pm_asymptotic(cplx lambda, std::size_t n, Sign sign) {
    if (n < 2) throw DomainError("i_pm_asymptotic: n must be >= 2");
    const double nd = static_cast<double>(n);
    const double s = sign == Sign::plus ? 1.0 : -1.0;
    static const cplx ipow[4] = {1.0, I, -1.0, -I};
    cplx phase = ipow[(n - 1) % 4];
    if (sign == Sign::plus) phase = std::conj(phase);
    return phase * std::exp(0.25 * lambda * lambda + s * I * lambda * std::sqrt(nd)) /
           std::pow(8.0 * pi * nd, 0.25);
}

SolutionSequence free_polynomials(cplx lambda, std::size_t n_max) {
    if (n_max < 2) throw DomainError("free_polynomials: n_max must be >= 2");
    if (std::abs(lambda.imag()) * std::sqrt(static_cast<double>(n_max)) > 600.0)
        throw DomainError("free_polynomials: |Im lambda| sqrt(n_max) exceeds 600");
    SolutionSequence out;
    out.lambda = lambda;
    out.kind = SequenceKind::P0;
    out.values.resize(n_max);
    out.values[0] = 1.0;
    out.values[1] = lambda;
    for (std::size_t n = 2; n < n_max; ++n) {
        const double nd = static_cast<double>(n);
        out.values[n] = (lambda * out.values[n - 1] - std::sqrt(nd - 1.0) * out.values[n - 2]) /
                        std::sqrt(nd);
    }
    return out;
}

cplx hermite_poly(std::size_t n, cplx x) {
    if (n > 150) throw DomainError("hermite_poly: n must not exceed 150");
    cplx hm = 1.0, h = 2.0 * x;
    if (n == 0) return hm;
    for (std::size_t k = 1; k < n; ++k) {
        const cplx next = 2.0 * x * h - 2.0 * static_cast<double>(k) * hm;
        hm = h;
        h = next;
    }
    if (!is_finite(h)) throw DomainError("hermite_poly: overflow");
    return h;
}

cplx wronskian(const SolutionSequence& u, const SolutionSequence& v,
               std::span<const double> weights, std::size_t n) {
    if (n < 1 || n > weights.size())
        throw IndexError("wronskian: no weight for index " + std::to_string(n));
    return weights[n - 1] * (u.at(n) * v.at(n + 1) - u.at(n + 1) * v.at(n));
}

cplx free_wronskian(const SolutionSequence& u, const SolutionSequence& v, std::size_t n) {
    if (n < 1) throw IndexError("wronskian: index must be >= 1");
    return std::sqrt(static_cast<double>(n)) * (u.at(n) * v.at(n + 1) - u.at(n + 1) * v.at(n));
}

cplx i_pm_wronskian(cplx lambda) {
    return I * std::exp(0.5 * lambda * lambda) / sqrt_2pi;
}

double free_recurrence_residual(const SolutionSequence& u) {
    double worst = 0.0;
    const std::size_t lo = std::max<std::size_t>(u.start_index + 1, 2);
    for (std::size_t n = lo; n < u.last_index(); ++n) {
        const double nd = static_cast<double>(n);
        const cplx t1 = std::sqrt(nd - 1.0) * u[n - 1];
        const cplx t2 = std::sqrt(nd) * u[n + 1];
        const cplx t3 = u.lambda * u[n];
        const double den = std::abs(t1) + std::abs(t2) + std::abs(t3);
        if (den > 0.0) worst = std::max(worst, std::abs(t1 + t2 - t3) / den);
    }
    return worst;
}

}  // namespace hermjost::freeop
