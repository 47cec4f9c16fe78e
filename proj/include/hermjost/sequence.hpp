#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hermjost/errors.hpp"
#include "hermjost/types.hpp"

namespace hermjost {

enum class SequenceKind { P, Q, P0, Iplus, Iminus, general };

// u_n for n = start_index .. start_index + values.size() - 1.
struct SolutionSequence {
    cplx lambda{};
    std::size_t start_index = 1;
    std::vector<cplx> values;
    SequenceKind kind = SequenceKind::general;

    std::size_t last_index() const { return start_index + values.size() - 1; }
    bool covers(std::size_t n) const {
        return !values.empty() && n >= start_index && n <= last_index();
    }
    cplx at(std::size_t n) const {
        if (!covers(n)) throw IndexError("SolutionSequence: index " + std::to_string(n) + " not covered");
        return values[n - start_index];
    }
    cplx operator[](std::size_t n) const { return values[n - start_index]; }
};

}  // namespace hermjost
