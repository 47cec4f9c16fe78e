#pragma once

// Free Hermite operator: a_n = sqrt(n), b_n = 0.

#include <cstddef>
#include <span>

#include "hermjost/sequence.hpp"

namespace hermjost::freeop {

enum class Sign { plus, minus };

// I_n^{+/-}(lambda), n = 1..n_max, from one derivative table at +/- lambda/sqrt2.
// |lambda| <= 8.
SolutionSequence i_pm(cplx lambda, std::size_t n_max, Sign sign);

// (-/+ i)^{n-1} exp(lambda^2/4 +/- i lambda sqrt(n)) / (8 pi n)^{1/4}
cplx i_pm_asymptotic(cplx lambda, std::size_t n, Sign sign);

// {P_0}_n(lambda), n = 1..n_max. Requires |Im lambda| sqrt(n_max) <= 600.
SolutionSequence free_polynomials(cplx lambda, std::size_t n_max);

// Physicists' Hermite polynomial, n <= 150.
cplx hermite_poly(std::size_t n, cplx x);

// a_n (u_n v_{n+1} - u_{n+1} v_n) with weights[n-1] = a_n.
cplx wronskian(const SolutionSequence& u, const SolutionSequence& v,
               std::span<const double> weights, std::size_t n);

// Same with a_n = sqrt(n).
cplx free_wronskian(const SolutionSequence& u, const SolutionSequence& v, std::size_t n);

// W(I+, I-) = i exp(lambda^2/2) / sqrt(2 pi)
cplx i_pm_wronskian(cplx lambda);

// max over interior n of |sqrt(n-1) u_{n-1} + sqrt(n) u_{n+1} - lambda u_n| relative
// to the sum of the term magnitudes.
double free_recurrence_residual(const SolutionSequence& u);

}  // namespace hermjost::freeop
