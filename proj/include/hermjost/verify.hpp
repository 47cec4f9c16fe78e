#pragma once

// Invariant suite run by the verify subcommand.

#include <cstdint>
#include <string>
#include <vector>

#include "hermjost/config.hpp"

namespace hermjost::verify {

struct Check {
    std::string name;
    bool passed = false;
    double value = 0.0;      // observed worst case
    double threshold = 0.0;  // pass when value < threshold (or <= for bounds)
    std::string detail;
};

std::vector<Check> faddeeva_checks(std::uint64_t seed);
std::vector<Check> free_operator_checks();
// Checks that depend on the perturbation: Wronskian of P and Q, Lambda consistency,
// Jost identity, Herglotz sign, measure weights, growth bound, variation of parameters.
std::vector<Check> operator_checks(const config::RunConfig& cfg);

std::vector<Check> run_all(const config::RunConfig& cfg);

}  // namespace hermjost::verify
