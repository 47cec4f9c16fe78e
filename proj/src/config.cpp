#include "hermjost/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "hermjost/errors.hpp"

namespace hermjost::config {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

double to_double(const std::string& s, const std::string& field) {
    double v = 0.0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last || !std::isfinite(v))
        throw ConfigError(field + ": not a finite number: '" + s + "'", 0, field);
    return v;
}

std::uint64_t to_index(const std::string& s, const std::string& field) {
    std::uint64_t v = 0;
    const auto* last = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), last, v);
    if (ec != std::errc() || p != last || s.empty())
        throw ConfigError(field + ": not a non-negative integer: '" + s + "'", 0, field);
    return v;
}

Output to_output(const std::string& s) {
    if (s == "density") return Output::density;
    if (s == "jost") return Output::jost;
    if (s == "limit-formula") return Output::limit_formula;
    if (s == "oracle-compare") return Output::oracle_compare;
    if (s == "asymptotics-check") return Output::asymptotics_check;
    throw ConfigError("out: unknown output '" + s + "'", 0, "out");
}

}  // namespace

const char* to_string(Output o) {
    switch (o) {
        case Output::density: return "density";
        case Output::jost: return "jost";
        case Output::limit_formula: return "limit-formula";
        case Output::oracle_compare: return "oracle-compare";
        case Output::asymptotics_check: return "asymptotics-check";
    }
    return "?";
}

const char* to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

std::vector<double> RunConfig::lambda_grid() const {
    std::vector<double> g(points);
    const double h = (lambda_max - lambda_min) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) g[i] = lambda_min + h * static_cast<double>(i);
    g.back() = lambda_max;
    return g;
}

std::vector<Entry> parse_entries(const std::string& text) {
    std::vector<Entry> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line) + ": expected key=value", line);
        Entry e{trim(s.substr(0, eq)), trim(s.substr(eq + 1)), line};
        if (e.key.empty())
            throw ConfigError("line " + std::to_string(line) + ": empty key", line);
        for (const auto& prev : out)
            if (prev.key == e.key)
                throw ConfigError("line " + std::to_string(line) + ": duplicate key '" + e.key + "'",
                                  line, e.key);
        out.push_back(std::move(e));
    }
    return out;
}

void set_entry(std::vector<Entry>& entries, const std::string& key, const std::string& value) {
    for (auto& e : entries)
        if (e.key == key) {
            e.value = value;
            e.line = 0;
            return;
        }
    entries.push_back({key, value, 0});
}

jacobi::Family parse_family(const std::string& text, bool b_column,
                            std::optional<jacobi::Family> tail) {
    using jacobi::Family;
    const std::string field = b_column ? "b" : "c";
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? std::string{} : text.substr(colon + 1);
    const auto args = split(rest, ':');
    auto need = [&](std::size_t k) {
        if (args.size() != k || (k == 0 && !rest.empty()))
            throw ConfigError(field + ": '" + kind + "' takes " + std::to_string(k) + " argument(s)", 0,
                              field);
    };
    if (kind == "zero") {
        if (colon != std::string::npos) need(0);
        return Family::zero();
    }
    if (kind == "power") {
        need(2);
        const double amp = to_double(args[0], field);
        const double p = to_double(args[1], field);
        if (!(p > 0.0)) throw ConfigError(field + ": exponent must be > 0", 0, field);
        return Family::power(amp, p);
    }
    if (kind == "const") {
        need(1);
        return Family::constant(to_double(args[0], field));
    }
    if (kind == "sqrtshift") {
        need(1);
        const double k = to_double(args[0], field);
        if (!(k > -1.0)) throw ConfigError(field + ": sqrtshift needs k > -1", 0, field);
        return Family::sqrt_shift(k);
    }
    if (kind == "list") {
        if (rest.empty()) throw ConfigError(field + ": empty list", 0, field);
        std::vector<double> v;
        for (const auto& s : split(rest, ',')) v.push_back(to_double(s, field));
        return Family::finite(std::move(v));
    }
    if (kind == "file") {
        if (rest.empty()) throw ConfigError(field + ": missing file path", 0, field);
        jacobi::PerturbationTable t;
        try {
            t = jacobi::read_perturbation_file(rest);
        } catch (const ConfigError& e) {
            throw ConfigError(field + ": " + e.what(), e.line(), field);
        }
        return Family::table(b_column ? t.b : t.c, std::move(tail), rest);
    }
    throw ConfigError(field + ": unknown family '" + kind + "'", 0, field);
}

RunConfig make_config(const std::vector<Entry>& entries) {
    RunConfig cfg;
    std::optional<jacobi::Family> c_tail, b_tail;
    std::string c_text = "zero", b_text = "zero";
    for (const auto& e : entries) {
        try {
            const std::string& k = e.key;
            const std::string& v = e.value;
            if (k == "c") {
                c_text = v;
            } else if (k == "b") {
                b_text = v;
            } else if (k == "c_tail") {
                c_tail = parse_family(v, false);
            } else if (k == "b_tail") {
                b_tail = parse_family(v, true);
            } else if (k == "lambda") {
                const auto p = split(v, ':');
                if (p.size() != 3) throw ConfigError("lambda: expected min:max:points", 0, k);
                cfg.lambda_min = to_double(p[0], k);
                cfg.lambda_max = to_double(p[1], k);
                cfg.points = to_index(p[2], k);
                if (!(cfg.lambda_min < cfg.lambda_max))
                    throw ConfigError("lambda: need lambda_min < lambda_max", 0, k);
                if (cfg.points < 2) throw ConfigError("lambda: need points >= 2", 0, k);
                if (cfg.lambda_min < -8.0 || cfg.lambda_max > 8.0)
                    throw ConfigError("lambda: range must lie within [-8, 8]", 0, k);
            } else if (k == "n_max") {
                cfg.n_max = to_index(v, k);
                if (cfg.n_max < 2) throw ConfigError("n_max: need n_max >= 2", 0, k);
            } else if (k == "tol") {
                cfg.tol = to_double(v, k);
                if (!(cfg.tol >= 1e-12 && cfg.tol <= 1e-4))
                    throw ConfigError("tol: must lie in [1e-12, 1e-4]", 0, k);
            } else if (k == "out") {
                cfg.outputs.clear();
                for (const auto& s : split(v, ',')) cfg.outputs.insert(to_output(s));
                if (cfg.outputs.empty()) throw ConfigError("out: empty output set", 0, k);
            } else if (k == "format") {
                if (v == "csv") cfg.format = Format::csv;
                else if (v == "json") cfg.format = Format::json;
                else throw ConfigError("format: expected csv or json", 0, k);
            } else if (k == "seed") {
                cfg.seed = to_index(v, k);
            } else if (k == "horizon") {
                cfg.horizon = to_index(v, k);
                if (cfg.horizon < 1000) throw ConfigError("horizon: need horizon >= 1000", 0, k);
            } else if (k == "oracle_n") {
                cfg.oracle_n = to_index(v, k);
                if (cfg.oracle_n < 2 || cfg.oracle_n > 20000)
                    throw ConfigError("oracle_n: need 2 <= oracle_n <= 20000", 0, k);
            } else if (k == "threads") {
                cfg.threads = to_index(v, k);
                if (cfg.threads < 1) throw ConfigError("threads: need threads >= 1", 0, k);
            } else {
                throw ConfigError("unknown key '" + k + "'", 0, k);
            }
        } catch (const ConfigError& err) {
            const std::size_t line = err.line() ? err.line() : e.line;
            const std::string prefix = line ? "line " + std::to_string(line) + ": " : "";
            throw ConfigError(prefix + err.what(), line, err.field().empty() ? e.key : err.field());
        }
    }
    auto family = [](const std::string& text, bool b_column, std::optional<jacobi::Family> tail) {
        const std::string field = b_column ? "b" : "c";
        try {
            return parse_family(text, b_column, std::move(tail));
        } catch (const ConfigError&) {
            throw;
        } catch (const Error& err) {
            throw ConfigError(field + ": " + err.what(), 0, field);
        }
    };
    cfg.spec = jacobi::make_spec(family(c_text, false, c_tail), family(b_text, true, b_tail));
    cfg.c_text = c_text;
    cfg.b_text = b_text;
    if (cfg.n_max > cfg.horizon) throw ConfigError("n_max: exceeds horizon", 0, "n_max");
    if (cfg.oracle_n > cfg.horizon + 1) throw ConfigError("oracle_n: exceeds horizon", 0, "oracle_n");
    return cfg;
}

RunConfig parse_config(const std::string& text) { return make_config(parse_entries(text)); }

}  // namespace hermjost::config
