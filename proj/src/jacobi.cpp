#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hermjost/errors.hpp"
#include "hermjost/jacobi.hpp"

namespace hermjost {

NonpositiveWeight::NonpositiveWeight(std::size_t index, double value)
    : Error("nonpositive weight a_" + std::to_string(index) + " = " + std::to_string(value)),
      index_(index), value_(value) {}

}  // namespace hermjost

namespace hermjost::jacobi {

PerturbationSpec free_spec() { return make_spec(Family::zero(), Family::zero()); }

PerturbationSpec make_spec(Family c, Family b) {
    PerturbationSpec s{std::move(c), std::move(b), {}};
    s.description = "c=" + s.c.describe() + " b=" + s.b.describe();
    return s;
}

PerturbationSpec cropped_spec(const PerturbationSpec& spec) {
    PerturbationSpec s = make_spec(
        Family::sum(Family::sqrt_shift(1.0), Family::shifted(spec.c, 1)),
        Family::shifted(spec.b, 1));
    s.description = "crop(" + spec.description + ")";
    return s;
}

JacobiOperator build_operator(const PerturbationSpec& spec, std::size_t horizon) {
    if (horizon < 10) throw DomainError("build_operator: horizon must be >= 10");
    JacobiOperator op;
    op.spec_ = spec;
    op.horizon_ = horizon;
    const std::size_t m = horizon + 1;
    op.a_.resize(m);
    op.b_.resize(m);
    op.c_.resize(m);
    for (std::size_t n = 1; n <= m; ++n) {
        const double c = spec.c(n);
        const double a = std::sqrt(static_cast<double>(n)) + c;
        if (!(a > 0.0)) throw NonpositiveWeight(n, a);
        op.c_[n - 1] = c;
        op.a_[n - 1] = a;
        op.b_[n - 1] = spec.b(n);
    }
    return op;
}

JacobiOperator JacobiOperator::cropped() const {
    return build_operator(cropped_spec(spec_), horizon_ - 1);
}

double admissibility_term(const JacobiOperator& op, std::size_t n) {
    const double cn = op.c(n);
    return std::abs(cn) / n +
           (std::abs(op.c(n + 1) - cn) + std::abs(op.b(n))) / std::sqrt(static_cast<double>(n));
}

namespace {

double partial_sum(const PerturbationSpec& spec, std::size_t N) {
    double s = 0.0, cn = spec.c(1);
    for (std::size_t n = 1; n <= N; ++n) {
        const double cn1 = spec.c(n + 1);
        s += std::abs(cn) / n +
             (std::abs(cn1 - cn) + std::abs(spec.b(n))) / std::sqrt(static_cast<double>(n));
        cn = cn1;
    }
    return s;
}

bool numeric_small_o(const PerturbationSpec& spec, std::size_t N) {
    auto peak = [&](std::size_t lo, std::size_t hi) {
        double m = 0.0;
        for (std::size_t n = lo; n <= hi; ++n)
            m = std::max(m, std::abs(spec.c(n)) / std::sqrt(static_cast<double>(n)));
        return m;
    };
    return peak(N / 2, N) <= peak(N / 20, N / 10);
}

}  // namespace

AdmissibilityReport check_conditions(const PerturbationSpec& spec, std::size_t horizon) {
    if (horizon < 1000) throw DomainError("check_conditions: horizon must be >= 1000");
    AdmissibilityReport r;
    r.horizon = horizon;

    const Verdict cv = spec.c.c_series();
    const Verdict bv = spec.b.b_series();
    if (cv == Verdict::diverges || bv == Verdict::diverges) {
        r.analytic = true;
        r.passes = false;
        if (cv == Verdict::diverges)
            r.diagnostic = "sum |c_n|/n + |c_{n+1}-c_n|/sqrt(n) diverges for c = " + spec.c.describe();
        else
            r.diagnostic = "sum |b_n|/sqrt(n) diverges for b = " + spec.b.describe();
        try {
            r.partial_sum = partial_sum(spec, horizon);
        } catch (const DomainError&) {
        }
        return r;
    }

    try {
        r.partial_sum = partial_sum(spec, horizon);
    } catch (const DomainError& e) {
        r.inconclusive = true;
        r.diagnostic = e.what();
        return r;
    }
    auto ct = spec.c.c_tail(horizon);
    auto bt = spec.b.b_tail(horizon);
    if (ct && bt) r.tail_bound = *ct + *bt;
    auto so = spec.c.small_o_sqrt();
    r.small_o_check = so ? *so : numeric_small_o(spec, horizon);

    if (cv == Verdict::converges && bv == Verdict::converges) {
        r.analytic = true;
        r.passes = r.small_o_check;
        if (!r.passes) r.diagnostic = "c_n/sqrt(n) does not decay";
        return r;
    }

    // No closed-form verdict: look for saturation over the last decade.
    const double early = partial_sum(spec, horizon / 10);
    const double incr = r.partial_sum > 0.0 ? (r.partial_sum - early) / r.partial_sum : 0.0;
    if (incr < 1e-9 && r.small_o_check) {
        r.passes = true;
        r.diagnostic = "partial sums saturate";
    } else {
        r.inconclusive = true;
        r.diagnostic = "partial sums still growing over the last decade (relative increment " +
                       std::to_string(incr) + ")";
    }
    return r;
}

std::vector<cplx> apply_lambda(const JacobiOperator& op, const SolutionSequence& u,
                               std::size_t n_max) {
    if (n_max < 1 || !u.covers(1) || !u.covers(n_max + 1))
        throw IndexError("apply_lambda: sequence must cover indices 1.." + std::to_string(n_max + 1));
    if (n_max > op.horizon()) throw IndexError("apply_lambda: n_max exceeds the operator horizon");
    std::vector<cplx> out(n_max);
    out[0] = op.b(1) * u[1] + op.c(1) * u[2];
    for (std::size_t n = 2; n <= n_max; ++n)
        out[n - 1] = op.c(n - 1) * u[n - 1] + op.b(n) * u[n] + op.c(n) * u[n + 1];
    return out;
}

std::vector<cplx> apply_operator(const JacobiOperator& op, const SolutionSequence& u,
                                 std::size_t n_max) {
    if (!u.covers(1) || !u.covers(n_max + 1) || n_max > op.horizon())
        throw IndexError("apply_operator: index coverage");
    std::vector<cplx> out(n_max);
    out[0] = op.b(1) * u[1] + op.a(1) * u[2];
    for (std::size_t n = 2; n <= n_max; ++n)
        out[n - 1] = op.a(n - 1) * u[n - 1] + op.b(n) * u[n] + op.a(n) * u[n + 1];
    return out;
}

std::vector<cplx> apply_free(const SolutionSequence& u, std::size_t n_max) {
    if (!u.covers(1) || !u.covers(n_max + 1)) throw IndexError("apply_free: index coverage");
    std::vector<cplx> out(n_max);
    out[0] = u[2];
    for (std::size_t n = 2; n <= n_max; ++n)
        out[n - 1] = std::sqrt(n - 1.0) * u[n - 1] + std::sqrt(static_cast<double>(n)) * u[n + 1];
    return out;
}

SolutionSequence solve_recurrence(const JacobiOperator& op, cplx lambda, PolyKind kind,
                                  std::size_t n_max) {
    if (n_max < 2 || n_max > op.horizon())
        throw DomainError("solve_recurrence: need 2 <= n_max <= horizon");
    if (std::abs(lambda.imag()) * std::sqrt(static_cast<double>(n_max)) > 600.0)
        throw DomainError("solve_recurrence: |Im lambda| sqrt(n_max) exceeds 600");
    SolutionSequence u;
    u.lambda = lambda;
    u.kind = kind == PolyKind::P ? SequenceKind::P : SequenceKind::Q;
    u.values.resize(n_max);
    if (kind == PolyKind::P) {
        u.values[0] = 1.0;
        u.values[1] = (lambda - op.b(1)) / op.a(1);
    } else {
        u.values[0] = 0.0;
        u.values[1] = 1.0 / op.a(1);
    }
    for (std::size_t n = 2; n < n_max; ++n)
        u.values[n] = ((lambda - op.b(n)) * u.values[n - 1] - op.a(n - 1) * u.values[n - 2]) / op.a(n);
    return u;
}

double recurrence_residual(const JacobiOperator& op, const SolutionSequence& u) {
    double worst = 0.0;
    const std::size_t lo = std::max<std::size_t>(u.start_index + 1, 2);
    for (std::size_t n = lo; n < u.last_index(); ++n) {
        const cplx t1 = op.a(n - 1) * u[n - 1];
        const cplx t2 = (op.b(n) - u.lambda) * u[n];
        const cplx t3 = op.a(n) * u[n + 1];
        const double den = std::abs(t1) + std::abs(t2) + std::abs(t3);
        if (den > 0.0) worst = std::max(worst, std::abs(t1 + t2 + t3) / den);
    }
    return worst;
}

PerturbationTable parse_perturbation_table(std::istream& in) {
    PerturbationTable t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ss(line);
        long long n;
        double c, b;
        std::string extra;
        if (!(ss >> n >> c >> b) || (ss >> extra))
            throw ConfigError("perturbation table: expected 'n c_n b_n' at line " +
                                  std::to_string(lineno),
                              lineno);
        if (n != static_cast<long long>(t.c.size()) + 1)
            throw ConfigError("perturbation table: expected index " + std::to_string(t.c.size() + 1) +
                                  " at line " + std::to_string(lineno),
                              lineno);
        if (!std::isfinite(c) || !std::isfinite(b))
            throw ConfigError("perturbation table: non-finite value at line " + std::to_string(lineno),
                              lineno);
        t.c.push_back(c);
        t.b.push_back(b);
    }
    if (t.c.empty()) throw ConfigError("perturbation table: no rows");
    return t;
}

PerturbationTable read_perturbation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open perturbation file '" + path + "'");
    return parse_perturbation_table(in);
}

}  // namespace hermjost::jacobi
