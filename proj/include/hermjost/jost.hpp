#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hermjost/jacobi.hpp"

namespace hermjost::jost {

using jacobi::JacobiOperator;

inline constexpr std::size_t default_horizon = std::size_t{1} << 18;

struct JostValue {
    cplx value;
    std::size_t series_terms_used = 0;
    double tail_estimate = 0.0;
    bool extrapolated = false;
};

// F(lambda) = 1 + i sqrt(2pi) exp(-lambda^2/2) sum_n (Lambda I+)_n P_n.
// Im lambda >= 0, tol in [1e-12, 1e-4] (absolute on F, relative when |F| > 1).
// Throws NotAdmissible, or ConvergenceError when the horizon is exhausted.
JostValue jost_function(const JacobiOperator& op, cplx lambda, double tol);

// Jost function F_1 of the operator with the first row and column removed,
// normalized so that F_1 conj(F) - conj(F_1) F = -i sqrt(2pi) exp(-lambda^2/2).
JostValue cropped_jost(const JacobiOperator& op, cplx lambda, double tol);

// m = -F_1/F for Im lambda >= 0. Throws Error when |F| < 1e-12.
cplx weyl_m(const JacobiOperator& op, cplx lambda, double tol);
cplx weyl_m_boundary(const JacobiOperator& op, double lambda, double tol);

// exp(-lambda^2/2) / (sqrt(2pi) |F|^2)
double spectral_density(const JacobiOperator& op, double lambda, double tol);

struct SpectralSample {
    double lambda;
    cplx F;
    cplx F1;
    cplx m_boundary;
    double rho;
    std::size_t series_terms_used;
    double tail_estimate;
    double identity_residual;
};

SpectralSample evaluate(const JacobiOperator& op, double lambda, double tol);

// |F1 conj(F) - conj(F1) F + i sqrt(2pi) e^{-lambda^2/2}| / (sqrt(2pi) e^{-lambda^2/2})
double identity_residual(cplx F, cplx F1, double lambda);

struct LimitDensity {
    double value;
    double slope;  // b in a + b n^-1/2
    double fit_residual;
    bool converged;
    std::vector<std::pair<std::size_t, double>> table;
};

// Fits a + b n^{-1/2} to 1/(pi sqrt(n) (P_n^2 + P_{n+1}^2)) over the top half of n_grid.
LimitDensity density_via_limit(const JacobiOperator& op, double lambda,
                               std::span<const std::size_t> n_grid);
std::vector<std::size_t> limit_grid(std::size_t n_max);  // 2..n_max

// Max deviation between the two sides of the variation-of-parameters formula
// for (a_{n-1}/sqrt(n-1)) P_n, n = 2..n_max <= 500, in the weighted sup norm
// |u_n| n^{1/4} e^{-|Im lambda| sqrt n}, relative to the norm of the left side.
double variation_of_parameters_check(const JacobiOperator& op, cplx lambda, std::size_t n_max);

struct VolterraDiagnostics {
    double nu;
    double v_norm;
    double norm_bound;  // v_norm * e^nu
    double observed_sup;
    bool saturated;  // nu grew by less than 5% over the second half of the horizon
    std::size_t horizon;
};

VolterraDiagnostics volterra_nu(const JacobiOperator& op, cplx lambda, std::size_t horizon);

}  // namespace hermjost::jost
