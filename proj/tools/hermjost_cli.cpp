// hermjost: spectral densities of perturbed Hermite Jacobi matrices.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hermjost/config.hpp"
#include "hermjost/errors.hpp"
#include "hermjost/jacobi.hpp"
#include "hermjost/pipeline.hpp"
#include "hermjost/verify.hpp"

namespace {

using namespace hermjost;

struct Flags {
    std::string config_file;
    std::string output_file;
    std::vector<std::pair<std::string, std::string*>> fields;
    std::string c, b, c_tail, b_tail, lambda, n_max, tol, out, format, seed, horizon, oracle_n, threads;
};

void add_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config_file, "key=value configuration file");
    cmd->add_option("-o,--output", f.output_file, "write results here instead of stdout");
    const std::pair<const char*, std::string*> opts[] = {
        {"c", &f.c},           {"b", &f.b},           {"c_tail", &f.c_tail},
        {"b_tail", &f.b_tail}, {"lambda", &f.lambda}, {"n_max", &f.n_max},
        {"tol", &f.tol},       {"out", &f.out},       {"format", &f.format},
        {"seed", &f.seed},     {"horizon", &f.horizon}, {"oracle_n", &f.oracle_n},
        {"threads", &f.threads}};
    for (const auto& [key, dst] : opts) {
        std::string flag = std::string("--") + key;
        for (auto& ch : flag)
            if (ch == '_') ch = '-';
        cmd->add_option(flag, *dst, std::string("overrides ") + key + "=");
        f.fields.emplace_back(key, dst);
    }
}

config::RunConfig load(const Flags& f, const char* forced_out) {
    std::string text;
    if (!f.config_file.empty()) {
        std::ifstream in(f.config_file);
        if (!in) throw ConfigError("cannot open config file '" + f.config_file + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    auto entries = config::parse_entries(text);
    for (const auto& [key, value] : f.fields)
        if (!value->empty()) config::set_entry(entries, key, *value);
    if (forced_out) config::set_entry(entries, "out", forced_out);
    return config::make_config(entries);
}

int emit(const Flags& f, const std::function<int(std::ostream&)>& body) {
    if (f.output_file.empty()) return body(std::cout);
    std::ofstream out(f.output_file, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << f.output_file << "'\n";
        return pipeline::exit_config;
    }
    return body(out);
}

int run_density(const Flags& f, const char* forced_out) {
    const auto cfg = load(f, forced_out);
    return emit(f, [&](std::ostream& out) { return pipeline::run_pipeline(cfg, out, std::cerr); });
}

int run_verify(const Flags& f) {
    const auto cfg = load(f, nullptr);
    const auto report = jacobi::check_conditions(cfg.spec, std::max<std::size_t>(cfg.horizon, 1000));
    if (!report.passes) {
        std::cerr << "error: operator is not admissible: " << report.diagnostic << '\n';
        return pipeline::exit_admissibility;
    }
    return emit(f, [&](std::ostream& out) {
        bool all = true;
        for (const auto& c : verify::run_all(cfg)) {
            char buf[256];
            std::snprintf(buf, sizeof buf, "%s %-34s value=%.3e threshold=%.3e%s%s",
                          c.passed ? "PASS" : "FAIL", c.name.c_str(), c.value, c.threshold,
                          c.detail.empty() ? "" : "  ", c.detail.c_str());
            out << buf << '\n';
            all = all && c.passed;
        }
        return all ? pipeline::exit_ok : pipeline::exit_numerical;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral density of Jacobi matrices a_n = sqrt(n) + c_n, diagonal b_n"};
    app.require_subcommand(1);
    Flags density, verify_flags, asym, oracle;
    auto* d = app.add_subcommand("density", "per-lambda Jost function, m and density rows");
    auto* v = app.add_subcommand("verify", "run the invariant suite");
    auto* a = app.add_subcommand("asymptotics-check", "asymptotic error-decay table");
    auto* o = app.add_subcommand("oracle-compare", "density rows with the truncated-matrix CDF deviation");
    add_flags(d, density);
    add_flags(v, verify_flags);
    add_flags(a, asym);
    add_flags(o, oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : pipeline::exit_config;
    }
    try {
        if (d->parsed()) return run_density(density, nullptr);
        if (v->parsed()) return run_verify(verify_flags);
        if (a->parsed()) return run_density(asym, "asymptotics-check");
        if (o->parsed()) {
            const std::string out = (oracle.out.empty() ? std::string("density") : oracle.out) + ",oracle-compare";
            return run_density(oracle, out.c_str());
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error";
        if (!e.field().empty()) std::cerr << " [" << e.field() << "]";
        std::cerr << ": " << e.what() << '\n';
        return pipeline::exit_config;
    } catch (const NotAdmissible& e) {
        std::cerr << "error: " << e.what() << '\n';
        return pipeline::exit_admissibility;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return pipeline::exit_numerical;
    }
    return pipeline::exit_config;
}
