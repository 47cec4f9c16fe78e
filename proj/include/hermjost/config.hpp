#pragma once

// Flat key=value run configuration.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hermjost/jacobi.hpp"

namespace hermjost::config {

enum class Output { density, jost, limit_formula, oracle_compare, asymptotics_check };
enum class Format { csv, json };

const char* to_string(Output o);
const char* to_string(Format f);

struct RunConfig {
    jacobi::PerturbationSpec spec = jacobi::free_spec();
    std::string c_text = "zero";
    std::string b_text = "zero";
    double lambda_min = -4.0;
    double lambda_max = 4.0;
    std::size_t points = 201;
    std::size_t n_max = 4000;
    double tol = 1e-10;
    std::set<Output> outputs{Output::density};
    Format format = Format::csv;
    std::uint64_t seed = 0;
    std::size_t horizon = std::size_t{1} << 18;
    std::size_t oracle_n = 2000;
    std::size_t threads = 1;

    bool wants(Output o) const { return outputs.count(o) != 0; }
    std::vector<double> lambda_grid() const;
};

struct Entry {
    std::string key;
    std::string value;
    std::size_t line = 0;
};

// Splits text into entries; blank lines and lines starting with # are skipped.
// Throws ConfigError with the line number on malformed or duplicate keys.
std::vector<Entry> parse_entries(const std::string& text);

// Validates and builds. Unknown keys and bad values throw ConfigError naming the field.
RunConfig make_config(const std::vector<Entry>& entries);

RunConfig parse_config(const std::string& text);

// Replaces the value of key, or appends it.
void set_entry(std::vector<Entry>& entries, const std::string& key, const std::string& value);

// zero | power:A:P | const:V | sqrtshift:K | list:v1,v2,... | file:PATH
// file:PATH reads the c or b column of an "n c_n b_n" table; tail, if given, applies beyond it.
jacobi::Family parse_family(const std::string& text, bool b_column,
                            std::optional<jacobi::Family> tail = std::nullopt);

}  // namespace hermjost::config
