#pragma once

// Jacobi operators with a_n = sqrt(n) + c_n and diagonal b_n.

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hermjost/sequence.hpp"

namespace hermjost::jacobi {

enum class Verdict { converges, diverges, unknown };

// Parametric rule n -> f_n, n >= 1. Immutable and cheap to copy.
class Family {
public:
    Family();  // zero

    static Family zero();
    static Family power(double amplitude, double exponent);  // amplitude * n^-exponent, exponent > 0
    static Family constant(double value);
    static Family sqrt_shift(double k);  // sqrt(n + k) - sqrt(n), k > -1
    static Family finite(std::vector<double> values);  // values[0] = f_1, zero afterwards
    // Tabulated values; beyond the table the tail rule applies, if any.
    static Family table(std::vector<double> values, std::optional<Family> tail,
                        std::string source);
    static Family shifted(const Family& base, std::size_t s);  // n -> base(n + s)
    static Family sum(const Family& f, const Family& g);

    double operator()(std::size_t n) const;

    bool is_zero() const;
    // Last nonzero index when the rule is finitely supported.
    std::optional<std::size_t> support() const;

    // sum |f_n|/n + |f_{n+1} - f_n|/sqrt(n)
    Verdict c_series() const;
    // sum |f_n|/sqrt(n)
    Verdict b_series() const;
    // Upper bounds for the series tails over n > N, when known in closed form.
    std::optional<double> c_tail(std::size_t N) const;
    std::optional<double> b_tail(std::size_t N) const;
    std::optional<bool> small_o_sqrt() const;
    // Exponents e of the leading power laws f_n ~ n^-e, ascending. Empty for
    // finitely supported rules.
    std::vector<double> decay_exponents() const;

    std::string describe() const;

    struct Node;

private:
    explicit Family(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct PerturbationSpec {
    Family c;
    Family b;
    std::string description;
};

PerturbationSpec free_spec();
PerturbationSpec make_spec(Family c, Family b);
// Drop the first row and column: c'_n = sqrt(n+1) - sqrt(n) + c_{n+1}, b'_n = b_{n+1}.
PerturbationSpec cropped_spec(const PerturbationSpec& spec);

class JacobiOperator {
public:
    const PerturbationSpec& spec() const { return spec_; }
    std::size_t horizon() const { return horizon_; }

    // 1-based; valid for n <= horizon + 1.
    double a(std::size_t n) const { return a_[n - 1]; }
    double b(std::size_t n) const { return b_[n - 1]; }
    double c(std::size_t n) const { return c_[n - 1]; }
    std::span<const double> a_values() const { return a_; }

    bool is_free() const { return spec_.c.is_zero() && spec_.b.is_zero(); }
    // Carleman's condition holds for every operator of this shape (a_n ~ sqrt n).
    static constexpr bool carleman = true;

    JacobiOperator cropped() const;

    friend JacobiOperator build_operator(const PerturbationSpec& spec, std::size_t horizon);

private:
    PerturbationSpec spec_;
    std::size_t horizon_ = 0;
    std::vector<double> a_, b_, c_;
};

// Throws NonpositiveWeight if some a_n <= 0, n <= horizon + 1.
JacobiOperator build_operator(const PerturbationSpec& spec, std::size_t horizon);

struct AdmissibilityReport {
    bool passes = false;
    double partial_sum = 0.0;
    std::optional<double> tail_bound;
    bool small_o_check = false;
    bool inconclusive = false;
    bool analytic = false;  // verdict from the family rules rather than saturation
    std::size_t horizon = 0;
    std::string diagnostic;
};

AdmissibilityReport check_conditions(const PerturbationSpec& spec, std::size_t horizon);

// Terms of the admissibility series: |c_n|/n + (|c_{n+1} - c_n| + |b_n|)/sqrt(n).
double admissibility_term(const JacobiOperator& op, std::size_t n);

// (Lambda u)_n for n = 1..n_max; u must cover 1..n_max+1. Result index n-1.
std::vector<cplx> apply_lambda(const JacobiOperator& op, const SolutionSequence& u,
                               std::size_t n_max);
// Tridiagonal actions (J u)_n and (J_0 u)_n, n = 1..n_max.
std::vector<cplx> apply_operator(const JacobiOperator& op, const SolutionSequence& u,
                                 std::size_t n_max);
std::vector<cplx> apply_free(const SolutionSequence& u, std::size_t n_max);

enum class PolyKind { P, Q };

// Forward recurrence, n = 1..n_max <= horizon, |Im lambda| sqrt(n_max) <= 600.
SolutionSequence solve_recurrence(const JacobiOperator& op, cplx lambda, PolyKind kind,
                                  std::size_t n_max);

// Relative residual of a_{n-1}u_{n-1} + b_n u_n + a_n u_{n+1} = lambda u_n.
double recurrence_residual(const JacobiOperator& op, const SolutionSequence& u);

// Text table "n c_n b_n", one line per n, 1-based contiguous. Throws ConfigError
// with the line number on malformed input.
struct PerturbationTable {
    std::vector<double> c;
    std::vector<double> b;
};
PerturbationTable parse_perturbation_table(std::istream& in);
PerturbationTable read_perturbation_file(const std::string& path);

}  // namespace hermjost::jacobi
