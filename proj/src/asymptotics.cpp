#include <cmath>

#include "hermjost/errors.hpp"
#include "hermjost/special.hpp"

namespace hermjost::special {

ZoukowskiValue zoukowski_phi(cplx mu) {
    if (!is_finite(mu)) throw DomainError("zoukowski_phi: mu must be finite");
    // mu + i sqrt(1 - mu^2): principal root, cut only on real |mu| >= 1
    const cplx phi = mu + I * std::sqrt(1.0 - mu * mu);
    return {phi, std::abs(mu * mu - 1.0) < 1e-12};
}

PlancherelRotachResult plancherel_rotach_w(cplx mu, std::size_t n) {
    if (n < 2) throw DomainError("plancherel_rotach_w: n must be >= 2");
    if (!is_finite(mu) || std::abs(mu) > pr_mu_window)
        throw DomainError("plancherel_rotach_w: |mu| outside the validity window 0.3");
    const double nd = static_cast<double>(n);
    const cplx phi = zoukowski_phi(mu).value;
    // sqrt(2/n)^n (n-1)! (-1)^{n-1} exp(-n/2 (phi - 2mu)^2) / (sqrt(pi) phi^{n-1} sqrt(1 - phi^2))
    const cplx d = phi - 2.0 * mu;
    const cplx e = -0.5 * nd * d * d - (nd - 1.0) * std::log(phi);
    const double log_scale = 0.5 * nd * std::log(2.0 / nd) + std::lgamma(nd) - 0.5 * std::log(pi) +
                             e.real();
    const double sign = (n - 1) % 2 == 0 ? 1.0 : -1.0;
    const cplx mant = sign * std::exp(I * e.imag()) / std::sqrt(1.0 - phi * phi);
    return {mu, n, mant, phi, log_scale};
}

PlancherelRotachResult w_fixed_z_asymptotic(cplx z, std::size_t n) {
    if (n < 2) throw DomainError("w_fixed_z_asymptotic: n must be >= 2");
    if (!is_finite(z) || std::abs(z) > 5.0)
        throw DomainError("w_fixed_z_asymptotic: |z| must not exceed 5");
    const double nd = static_cast<double>(n);
    const cplx e = I * z * std::sqrt(2.0 * nd) - 0.5 * z * z;
    const double log_scale = 0.5 * nd * std::log(2.0 / nd) + std::lgamma(nd) + 0.5 * nd -
                             0.5 * std::log(2.0 * pi) + e.real();
    static const cplx ipow[4] = {1.0, I, -1.0, -I};
    const cplx mant = ipow[(n - 1) % 4] * std::exp(I * e.imag());
    const cplx phi = zoukowski_phi(z / std::sqrt(2.0 * nd)).value;
    return {z, n, mant, phi, log_scale};
}

double relative_error(const PlancherelRotachResult& r, const WDerivativeTable& t) {
    const std::size_t k = r.n - 1;
    const cplx exact = t.scaled(k);
    const cplx approx = r.value * std::exp(r.log_scale - WDerivativeTable::log_scale(k));
    return std::abs(approx / exact - 1.0);
}

}  // namespace hermjost::special
