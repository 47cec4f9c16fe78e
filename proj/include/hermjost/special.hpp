#pragma once

// Faddeeva function w(z) = exp(-z^2) erfc(-iz), its derivative tables and
// large-order asymptotics.

#include <cstddef>
#include <span>
#include <vector>

#include "hermjost/types.hpp"

namespace hermjost::special {

cplx faddeeva_w(cplx z);

// Quadrature of w(z) = (1/(pi i)) * integral of exp(-t^2)/(t - z) dt along a
// horizontal line below the pole, plus residues. Test oracle only, |z| <= 30.
cplx w_contour_oracle(cplx z);

enum class Direction { automatic, forward, backward };

enum class Recurrence { forward, backward, shifted_backward };

const char* to_string(Recurrence r);

struct MethodRange {
    std::size_t first;
    std::size_t last;  // inclusive
    Recurrence method;
};

// Derivatives w^(k)(z), k = 0..n_max. Stored scaled as w^(k)(z)/sqrt(2^k k!),
// which stays O(1)-ish where the raw derivatives overflow.
class WDerivativeTable {
public:
    WDerivativeTable(cplx z, std::vector<cplx> scaled, std::vector<MethodRange> methods,
                     double error_estimate);

    cplx z() const { return z_; }
    std::size_t n_max() const { return scaled_.size() - 1; }

    cplx scaled(std::size_t k) const { return scaled_.at(k); }
    std::span<const cplx> scaled_values() const { return scaled_; }
    // log sqrt(2^k k!)
    static double log_scale(std::size_t k);
    // Unscaled w^(k)(z). Overflows to inf for large k.
    cplx value(std::size_t k) const;

    const std::vector<MethodRange>& methods() const { return methods_; }
    Recurrence method_at(std::size_t k) const;
    double error_estimate() const { return error_estimate_; }

    // |w_{k+1} + 2z w_k + 2k w_{k-1}| over the sum of the term magnitudes.
    double recurrence_residual(std::size_t k) const;
    double max_recurrence_residual() const;

private:
    cplx z_;
    std::vector<cplx> scaled_;
    std::vector<MethodRange> methods_;
    double error_estimate_;
};

// Throws PrecisionLoss when the estimated relative error exceeds 1e-8.
WDerivativeTable w_derivative_table(cplx z, std::size_t n_max,
                                    Direction hint = Direction::automatic);

struct ZoukowskiValue {
    cplx value;
    bool near_branch_point;  // |mu^2 - 1| < 1e-12
};

// mu + sqrt(mu^2 - 1) on the branch with phi(0) = i.
ZoukowskiValue zoukowski_phi(cplx mu);

// Leading-order value = mantissa * exp(log_scale).
struct PlancherelRotachResult {
    cplx mu;
    std::size_t n;
    cplx value;
    cplx phi_mu;
    double log_scale;

    double log_abs() const { return std::log(std::abs(value)) + log_scale; }
    cplx full() const { return value * std::exp(log_scale); }
};

// Leading term for w^(n-1)(mu sqrt(2n)), |mu| <= 0.3, n >= 2.
PlancherelRotachResult plancherel_rotach_w(cplx mu, std::size_t n);

// Fixed-z form for w^(n-1)(z), |z| <= 5, n >= 2.
PlancherelRotachResult w_fixed_z_asymptotic(cplx z, std::size_t n);

// Relative error of an asymptotic result against a derivative table entry n-1.
double relative_error(const PlancherelRotachResult& r, const WDerivativeTable& t);

inline constexpr double pr_mu_window = 0.3;

}  // namespace hermjost::special
