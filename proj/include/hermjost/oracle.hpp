#pragma once

// Reference data independent of the Jost machinery.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "hermjost/jacobi.hpp"

namespace hermjost::oracle {

struct DiscreteMeasure {
    std::vector<double> nodes;    // increasing
    std::vector<double> weights;  // squared first eigenvector components
    std::size_t size() const { return nodes.size(); }
};

// Spectral measure of the leading N x N block, N <= 20000 and N <= horizon + 1.
// Throws ConvergenceError naming the stuck index.
DiscreteMeasure truncated_measure(const jacobi::JacobiOperator& op, std::size_t N);

// Same for an explicit tridiagonal matrix: diag[i], off[i] couples i and i+1.
DiscreteMeasure tridiagonal_measure(std::vector<double> diag, std::vector<double> off);

// Right-continuous distribution function of the measure.
double empirical_cdf(const DiscreteMeasure& m, double x);

// |empirical - cdf| at each grid point, in grid order. Grid points within 1e-9
// of a node are moved 1e-9 to its right.
std::vector<double> cdf_deviations(const DiscreteMeasure& m,
                                   const std::function<double(double)>& cdf,
                                   const std::vector<double>& grid);

// Max deviation against the integral of density from lower (default: the
// smallest node) to each grid point.
double cdf_compare(const DiscreteMeasure& m, const std::function<double(double)>& density,
                   const std::vector<double>& grid, std::optional<double> lower = std::nullopt);

// Integrated density at each sorted grid point, accumulated from lower.
std::vector<double> integrated_density(const std::function<double(double)>& density,
                                       const std::vector<double>& sorted_grid, double lower);

// integral of density(x)/(x - lambda) over [lo, hi], Im lambda >= 0.05.
cplx herglotz_quadrature(const std::function<double(double)>& density, cplx lambda,
                         double lo = -8.0, double hi = 8.0);

}  // namespace hermjost::oracle
