#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hermjost/config.hpp"

namespace hermjost::pipeline {

inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 2;
inline constexpr int exit_admissibility = 3;
inline constexpr int exit_numerical = 4;

struct Row {
    double lambda = 0.0;
    cplx F, F1;
    double im_m = 0.0;
    double rho = 0.0;
    std::optional<double> rho_limit;
    std::optional<double> rho_oracle_cdf_dev;
    std::size_t terms_used = 0;
    double tail_estimate = 0.0;
    double identity_residual = 0.0;
};

struct AsymptoticsRow {
    std::string kind;  // plancherel-rotach or fixed-z
    cplx param;        // mu or z
    std::vector<std::size_t> n;
    std::vector<double> rel_error;
    double slope = 0.0;  // least-squares slope of log error against log n
};

struct Result {
    int status = exit_ok;
    std::string message;
    std::vector<Row> rows;
    std::vector<AsymptoticsRow> asymptotics;
};

// Error-decay table over mu in {0, +-0.1, +-0.25} and z in {0, 1, i}, n = 64..1024.
std::vector<AsymptoticsRow> asymptotics_table();

double loglog_slope(const std::vector<std::size_t>& n, const std::vector<double>& err);

// Runs f(i) for i in [0, count) on up to threads workers.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& f);

Result compute(const config::RunConfig& cfg);

void write_csv(const config::RunConfig& cfg, const Result& r, std::ostream& out);
void write_json(const config::RunConfig& cfg, const Result& r, std::ostream& out);

// compute, then write rows to out on success and the message to err otherwise.
int run_pipeline(const config::RunConfig& cfg, std::ostream& out, std::ostream& err);

// CSV row/header formatting, %.17g.
std::string format_number(double v);
std::vector<std::string> csv_header(const config::RunConfig& cfg);

}  // namespace hermjost::pipeline
