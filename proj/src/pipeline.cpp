#include "hermjost/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "hermjost/errors.hpp"
#include "hermjost/jost.hpp"
#include "hermjost/oracle.hpp"
#include "hermjost/special.hpp"

namespace hermjost::pipeline {

using config::Output;
using config::RunConfig;

namespace {

constexpr double cdf_lower = -8.0;
constexpr double panel_width = 0.25;
constexpr int gl_order = 8;

struct GaussLegendre {
    double x[gl_order];
    double w[gl_order];
};

// P_0..P_{k} at t
void legendre(double t, int k, double* p) {
    p[0] = 1.0;
    if (k > 0) p[1] = t;
    for (int j = 1; j < k; ++j) p[j + 1] = ((2 * j + 1) * t * p[j] - j * p[j - 1]) / (j + 1);
}

const GaussLegendre& gauss_legendre() {
    static const GaussLegendre g = [] {
        GaussLegendre r{};
        for (int i = 0; i < gl_order; ++i) {
            double t = std::cos(pi * (i + 0.75) / (gl_order + 0.5));
            double p[gl_order + 1];
            for (int it = 0; it < 100; ++it) {
                legendre(t, gl_order, p);
                const double dp = gl_order * (t * p[gl_order] - p[gl_order - 1]) / (t * t - 1.0);
                const double dt = p[gl_order] / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            legendre(t, gl_order, p);
            const double dp = gl_order * (t * p[gl_order] - p[gl_order - 1]) / (t * t - 1.0);
            r.x[i] = t;
            r.w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
        return r;
    }();
    return g;
}

// Integral over [-1, s] of the degree-7 interpolant through the nodes.
double partial_panel(const double* f, double s) {
    const auto& g = gauss_legendre();
    double coef[gl_order] = {};
    double p[gl_order + 1];
    for (int j = 0; j < gl_order; ++j) {
        legendre(g.x[j], gl_order - 1, p);
        for (int k = 0; k < gl_order; ++k) coef[k] += g.w[j] * f[j] * p[k];
    }
    legendre(s, gl_order, p);
    double total = coef[0] * 0.5 * (s + 1.0);
    for (int k = 1; k < gl_order; ++k)
        total += coef[k] * 0.5 * (p[k + 1] - p[k - 1]);  // (2k+1)/2 * (P_{k+1} - P_{k-1})/(2k+1)
    return total;
}

char* fmt(char* buf, std::size_t size, const char* f, double v) {
    std::snprintf(buf, size, f, v);
    return buf;
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    return fmt(buf, sizeof buf, "%.17g", v);
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& f) {
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first;
    std::size_t first_index = count;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (i < first_index) {
                        first_index = i;
                        first = std::current_exception();
                    }
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first) std::rethrow_exception(first);
}

double loglog_slope(const std::vector<std::size_t>& n, const std::vector<double>& err) {
    const std::size_t m = n.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double x = std::log(static_cast<double>(n[i]));
        const double y = std::log(err[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::vector<AsymptoticsRow> asymptotics_table() {
    const std::vector<std::size_t> ns{64, 128, 256, 512, 1024};
    std::vector<AsymptoticsRow> out;
    for (double mu : {-0.25, -0.1, 0.0, 0.1, 0.25}) {
        AsymptoticsRow r{"plancherel-rotach", cplx(mu, 0.0), ns, {}, 0.0};
        for (std::size_t n : ns) {
            const cplx z = mu * std::sqrt(2.0 * static_cast<double>(n));
            const auto t = special::w_derivative_table(z, n - 1);
            r.rel_error.push_back(special::relative_error(special::plancherel_rotach_w(mu, n), t));
        }
        r.slope = loglog_slope(r.n, r.rel_error);
        out.push_back(std::move(r));
    }
    for (cplx z : {cplx(0, 0), cplx(1, 0), cplx(0, 1)}) {
        AsymptoticsRow r{"fixed-z", z, ns, {}, 0.0};
        for (std::size_t n : ns) {
            const auto t = special::w_derivative_table(z, n - 1);
            r.rel_error.push_back(special::relative_error(special::w_fixed_z_asymptotic(z, n), t));
        }
        r.slope = loglog_slope(r.n, r.rel_error);
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

bool wants_rows(const RunConfig& cfg) {
    return cfg.wants(Output::density) || cfg.wants(Output::jost) ||
           cfg.wants(Output::limit_formula) || cfg.wants(Output::oracle_compare);
}

// |empirical CDF - integrated density| at each grid point, density integrated from -8
// by 8-point Gauss-Legendre panels with exact partial panels at the grid points.
std::vector<double> cdf_deviation_column(const RunConfig& cfg, const jacobi::JacobiOperator& op,
                                         const std::vector<double>& grid) {
    const auto measure = oracle::truncated_measure(op, cfg.oracle_n);
    const double top = grid.back();
    const auto panels =
        static_cast<std::size_t>(std::ceil((top - cdf_lower) / panel_width - 1e-12));
    const auto& g = gauss_legendre();
    std::vector<double> f(panels * gl_order);
    parallel_for(f.size(), cfg.threads, [&](std::size_t i) {
        const double a = cdf_lower + panel_width * static_cast<double>(i / gl_order);
        const double x = a + 0.5 * panel_width * (g.x[i % gl_order] + 1.0);
        f[i] = jost::spectral_density(op, x, cfg.tol);
    });
    std::vector<double> prefix(panels + 1, 0.0);
    for (std::size_t p = 0; p < panels; ++p) {
        double s = 0.0;
        for (int j = 0; j < gl_order; ++j) s += g.w[j] * f[p * gl_order + j];
        prefix[p + 1] = prefix[p] + 0.5 * panel_width * s;
    }
    std::vector<double> dev(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        auto p = static_cast<std::size_t>(std::floor((x - cdf_lower) / panel_width));
        p = std::min(p, panels - 1);
        const double a = cdf_lower + panel_width * static_cast<double>(p);
        const double s = std::clamp(2.0 * (x - a) / panel_width - 1.0, -1.0, 1.0);
        const double integral = prefix[p] + 0.5 * panel_width * partial_panel(&f[p * gl_order], s);
        const auto d = oracle::cdf_deviations(
            measure, [&](double) { return integral; }, {x});
        dev[i] = d[0];
    }
    return dev;
}

}  // namespace

Result compute(const RunConfig& cfg) {
    Result res;
    if (wants_rows(cfg)) {
        const auto report = jacobi::check_conditions(cfg.spec, std::max<std::size_t>(cfg.horizon, 1000));
        if (!report.passes) {
            res.status = exit_admissibility;
            res.message = report.inconclusive
                              ? "admissibility inconclusive: " + report.diagnostic
                              : "operator is not admissible: " + report.diagnostic;
            return res;
        }
        std::optional<jacobi::JacobiOperator> op;
        try {
            op = jacobi::build_operator(cfg.spec, cfg.horizon);
        } catch (const Error& e) {
            res.status = exit_admissibility;
            res.message = e.what();
            return res;
        }
        const auto grid = cfg.lambda_grid();
        res.rows.resize(grid.size());
        std::vector<std::size_t> n_grid;
        if (cfg.wants(Output::limit_formula)) n_grid = jost::limit_grid(cfg.n_max);
        std::vector<std::string> errors(grid.size());
        std::vector<int> codes(grid.size(), exit_ok);
        parallel_for(grid.size(), cfg.threads, [&](std::size_t i) {
            Row& r = res.rows[i];
            r.lambda = grid[i];
            try {
                const auto s = jost::evaluate(*op, grid[i], cfg.tol);
                r.F = s.F;
                r.F1 = s.F1;
                r.im_m = s.m_boundary.imag();
                r.rho = s.rho;
                r.terms_used = s.series_terms_used;
                r.tail_estimate = s.tail_estimate;
                r.identity_residual = s.identity_residual;
                if (cfg.wants(Output::limit_formula))
                    r.rho_limit = jost::density_via_limit(*op, grid[i], n_grid).value;
            } catch (const NotAdmissible& e) {
                codes[i] = exit_admissibility;
                errors[i] = e.what();
            } catch (const std::exception& e) {
                codes[i] = exit_numerical;
                errors[i] = e.what();
            }
        });
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (codes[i] != exit_ok) {
                res.status = codes[i];
                res.message = "lambda=" + format_number(grid[i]) + ": " + errors[i];
                res.rows.clear();
                return res;
            }
        if (cfg.wants(Output::oracle_compare)) {
            try {
                const auto dev = cdf_deviation_column(cfg, *op, grid);
                for (std::size_t i = 0; i < grid.size(); ++i) res.rows[i].rho_oracle_cdf_dev = dev[i];
            } catch (const std::exception& e) {
                res.status = exit_numerical;
                res.message = std::string("oracle comparison: ") + e.what();
                res.rows.clear();
                return res;
            }
        }
    }
    if (cfg.wants(Output::asymptotics_check)) {
        try {
            res.asymptotics = asymptotics_table();
        } catch (const std::exception& e) {
            res.status = exit_numerical;
            res.message = std::string("asymptotics: ") + e.what();
        }
    }
    return res;
}

std::vector<std::string> csv_header(const RunConfig& cfg) {
    std::vector<std::string> h{"lambda", "re_F", "im_F", "re_F1", "im_F1", "im_m", "rho"};
    if (cfg.wants(Output::limit_formula)) h.push_back("rho_limit");
    if (cfg.wants(Output::oracle_compare)) h.push_back("rho_oracle_cdf_dev");
    h.push_back("terms_used");
    if (cfg.wants(Output::jost)) {
        h.push_back("tail_estimate");
        h.push_back("identity_residual");
    }
    return h;
}

void write_csv(const RunConfig& cfg, const Result& r, std::ostream& out) {
    auto join = [&](const std::vector<std::string>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
        out << '\n';
    };
    if (wants_rows(cfg)) {
        join(csv_header(cfg));
        for (const auto& row : r.rows) {
            std::vector<std::string> v{format_number(row.lambda),    format_number(row.F.real()),
                                       format_number(row.F.imag()),  format_number(row.F1.real()),
                                       format_number(row.F1.imag()), format_number(row.im_m),
                                       format_number(row.rho)};
            if (cfg.wants(Output::limit_formula)) v.push_back(format_number(*row.rho_limit));
            if (cfg.wants(Output::oracle_compare)) v.push_back(format_number(*row.rho_oracle_cdf_dev));
            v.push_back(std::to_string(row.terms_used));
            if (cfg.wants(Output::jost)) {
                v.push_back(format_number(row.tail_estimate));
                v.push_back(format_number(row.identity_residual));
            }
            join(v);
        }
    }
    if (cfg.wants(Output::asymptotics_check)) {
        if (wants_rows(cfg)) out << '\n';
        join({"kind", "re_param", "im_param", "n", "rel_error", "slope"});
        for (const auto& a : r.asymptotics)
            for (std::size_t i = 0; i < a.n.size(); ++i)
                join({a.kind, format_number(a.param.real()), format_number(a.param.imag()),
                      std::to_string(a.n[i]), format_number(a.rel_error[i]), format_number(a.slope)});
    }
}

void write_json(const RunConfig& cfg, const Result& r, std::ostream& out) {
    nlohmann::ordered_json j;
    j["c"] = cfg.c_text;
    j["b"] = cfg.b_text;
    j["tol"] = cfg.tol;
    j["seed"] = cfg.seed;
    if (wants_rows(cfg)) {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : r.rows) {
            nlohmann::ordered_json o;
            o["lambda"] = row.lambda;
            o["re_F"] = row.F.real();
            o["im_F"] = row.F.imag();
            o["re_F1"] = row.F1.real();
            o["im_F1"] = row.F1.imag();
            o["im_m"] = row.im_m;
            o["rho"] = row.rho;
            if (row.rho_limit) o["rho_limit"] = *row.rho_limit;
            if (row.rho_oracle_cdf_dev) o["rho_oracle_cdf_dev"] = *row.rho_oracle_cdf_dev;
            o["terms_used"] = row.terms_used;
            if (cfg.wants(Output::jost)) {
                o["tail_estimate"] = row.tail_estimate;
                o["identity_residual"] = row.identity_residual;
            }
            rows.push_back(std::move(o));
        }
        j["rows"] = std::move(rows);
    }
    if (cfg.wants(Output::asymptotics_check)) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& a : r.asymptotics) {
            nlohmann::ordered_json o;
            o["kind"] = a.kind;
            o["re_param"] = a.param.real();
            o["im_param"] = a.param.imag();
            o["n"] = a.n;
            o["rel_error"] = a.rel_error;
            o["slope"] = a.slope;
            arr.push_back(std::move(o));
        }
        j["asymptotics"] = std::move(arr);
    }
    out << j.dump(2) << '\n';
}

int run_pipeline(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto r = compute(cfg);
    if (r.status != exit_ok) {
        err << "error: " << r.message << '\n';
        return r.status;
    }
    if (cfg.format == config::Format::csv)
        write_csv(cfg, r, out);
    else
        write_json(cfg, r, out);
    return exit_ok;
}

}  // namespace hermjost::pipeline
