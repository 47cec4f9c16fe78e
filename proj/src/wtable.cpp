#include <algorithm>
#include <cmath>
#include <limits>

#include "hermjost/errors.hpp"
#include "hermjost/special.hpp"

namespace hermjost::special {

// Scaled values s_k = w^(k)/sqrt(2^k k!) obey
//   sqrt(2(k+1)) s_{k+1} + 2z s_k + sqrt(2k) s_{k-1} = 0.

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double accept_forward = 1e-13;
constexpr double max_error = 1e-8;
constexpr double shift_height = 0.5;

cplx seed1(cplx z, cplx w0) {
    return (-2.0 * z * w0 + 2.0 * I / sqrt_pi) / sqrt2;
}

struct Run {
    std::vector<cplx> s;
    double error;
};

// Forward recurrence from (s0, s1) over [first, n_top]. s must already hold
// valid entries at first-1 and first (first >= 1). A twin run with a
// perturbed seed measures how fast the rounding errors get amplified.
double forward_fill(cplx z, std::vector<cplx>& s, std::size_t first, std::size_t n_top,
                    double seed_rel = 4.0 * eps) {
    if (n_top <= first) return 0.0;
    constexpr double delta = 1e-7;
    cplx pm = s[first - 1];
    cplx p = s[first] * (1.0 + delta);
    double amp = 1.0;
    for (std::size_t k = first; k < n_top; ++k) {
        const double a = std::sqrt(2.0 * k), b = std::sqrt(2.0 * (k + 1));
        s[k + 1] = -(2.0 * z * s[k] + a * s[k - 1]) / b;
        const cplx pn = -(2.0 * z * p + a * pm) / b;
        pm = p;
        p = pn;
        const double m = std::abs(s[k + 1]);
        const double d = std::abs(p - s[k + 1]);
        if (m == 0.0 || !std::isfinite(m)) return std::numeric_limits<double>::infinity();
        amp = std::max(amp, d / (m * delta));
    }
    return seed_rel * amp + eps * std::sqrt(static_cast<double>(n_top));
}

std::size_t miller_start(cplx z, std::size_t n_top) {
    const double y = z.imag();
    const double r = std::sqrt(2.0 * n_top) + 40.0 / (2.0 * y);
    const double n = 0.5 * r * r + 20.0 + std::norm(z);
    return std::max<std::size_t>(static_cast<std::size_t>(n), n_top + 30);
}

std::vector<cplx> miller_once(cplx z, std::size_t n_top, std::size_t start) {
    std::vector<cplx> out(n_top + 1);
    constexpr double big = 1e200, shrink = 1e-200;
    cplx up = 0.0, cur = 1.0;  // u_{k+1}, u_k
    std::size_t k = start;
    if (k <= n_top) out[k] = cur;
    for (; k >= 1; --k) {
        const cplx down = -(std::sqrt(2.0 * (k + 1)) * up + 2.0 * z * cur) / std::sqrt(2.0 * k);
        up = cur;
        cur = down;
        if (k - 1 <= n_top) out[k - 1] = cur;
        if (std::abs(cur) > big) {
            up *= shrink;
            cur *= shrink;
            for (std::size_t j = k - 1; j <= n_top && j < out.size(); ++j) out[j] *= shrink;
        }
    }
    const cplx factor = faddeeva_w(z) / out[0];
    for (auto& v : out) v *= factor;
    out[0] = faddeeva_w(z);
    return out;
}

double max_rel_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double e = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double m = std::abs(b[k]);
        if (m == 0.0) continue;
        e = std::max(e, std::abs(a[k] - b[k]) / m);
    }
    return e;
}

Run miller(cplx z, std::size_t n_top) {
    const std::size_t n1 = miller_start(z, n_top);
    const std::size_t n2 = n1 + n1 / 4 + 20;
    auto shallow = miller_once(z, n_top, n1);
    auto deep = miller_once(z, n_top, n2);
    const double e = max_rel_diff(shallow, deep) + eps * 8.0;
    return {std::move(deep), e};
}

// Taylor shift from the Miller table at z' = Re z + 0.5i:
//   s_n(z) = sum_k s_{n+k}(z') * prod_{j=1..k} sqrt(2) h sqrt(n+j)/j,  h = z - z'.
Run shifted(cplx z, std::size_t n_top) {
    const cplx zp(z.real(), shift_height);
    const cplx h = z - zp;
    const double ah = std::abs(h);
    std::size_t K = static_cast<std::size_t>(std::exp(1.0) * ah * std::sqrt(2.0 * n_top)) + 80;
    K = static_cast<std::size_t>(std::exp(1.0) * ah * std::sqrt(2.0 * (n_top + K))) + 80;
    if (ah * std::sqrt(2.0 * (n_top + K)) > 600.0)
        throw PrecisionLoss("w_derivative_table: shift distance too large for the table size",
                            std::numeric_limits<double>::infinity());
    Run base = miller(zp, n_top + K);
    const auto& M = base.s;
    std::vector<cplx> out(n_top + 1);
    double cancel = 0.0;
    const cplx hr2 = sqrt2 * h;
    for (std::size_t n = 0; n <= n_top; ++n) {
        cplx sum = M[n], c = 1.0;
        double mag = std::abs(M[n]);
        bool done = false;
        for (std::size_t k = 1; n + k < M.size(); ++k) {
            c *= hr2 * std::sqrt(static_cast<double>(n + k)) / static_cast<double>(k);
            const cplx t = c * M[n + k];
            sum += t;
            mag += std::abs(t);
            if (static_cast<double>(k) > ah * std::sqrt(2.0 * (n + k)) + 5.0 &&
                std::abs(t) < 1e-18 * std::abs(sum)) {
                done = true;
                break;
            }
        }
        if (!done)
            throw PrecisionLoss("w_derivative_table: Taylor shift did not converge",
                                std::numeric_limits<double>::infinity());
        out[n] = sum;
        cancel = std::max(cancel, eps * mag / std::abs(sum));
    }
    return {std::move(out), base.error + cancel};
}

void check(const WDerivativeTable& t) {
    if (!(t.error_estimate() <= max_error))
        throw PrecisionLoss("w_derivative_table: estimated relative error exceeds 1e-8",
                            t.error_estimate());
}

}  // namespace

const char* to_string(Recurrence r) {
    switch (r) {
        case Recurrence::forward: return "forward-recurrence";
        case Recurrence::backward: return "backward-recurrence";
        case Recurrence::shifted_backward: return "shifted-backward-recurrence";
    }
    return "?";
}

WDerivativeTable::WDerivativeTable(cplx z, std::vector<cplx> scaled,
                                   std::vector<MethodRange> methods, double error_estimate)
    : z_(z), scaled_(std::move(scaled)), methods_(std::move(methods)),
      error_estimate_(error_estimate) {}

double WDerivativeTable::log_scale(std::size_t k) {
    return 0.5 * (static_cast<double>(k) * std::log(2.0) + std::lgamma(k + 1.0));
}

cplx WDerivativeTable::value(std::size_t k) const {
    return scaled_.at(k) * std::exp(log_scale(k));
}

Recurrence WDerivativeTable::method_at(std::size_t k) const {
    for (const auto& m : methods_)
        if (k >= m.first && k <= m.last) return m.method;
    throw IndexError("WDerivativeTable: index out of range");
}

double WDerivativeTable::recurrence_residual(std::size_t k) const {
    if (k < 1 || k + 1 > n_max()) throw IndexError("recurrence_residual: need 1 <= k < n_max");
    const cplx t1 = std::sqrt(2.0 * (k + 1)) * scaled_[k + 1];
    const cplx t2 = 2.0 * z_ * scaled_[k];
    const cplx t3 = std::sqrt(2.0 * k) * scaled_[k - 1];
    const double den = std::abs(t1) + std::abs(t2) + std::abs(t3);
    return den == 0.0 ? 0.0 : std::abs(t1 + t2 + t3) / den;
}

double WDerivativeTable::max_recurrence_residual() const {
    double r = 0.0;
    for (std::size_t k = 1; k < n_max(); ++k) r = std::max(r, recurrence_residual(k));
    return r;
}

WDerivativeTable w_derivative_table(cplx z, std::size_t n_max, Direction hint) {
    if (n_max < 1) throw DomainError("w_derivative_table: n_max must be >= 1");
    if (!is_finite(z)) throw DomainError("w_derivative_table: z must be finite");

    auto forward_table = [&] {
        std::vector<cplx> s(n_max + 1);
        s[0] = faddeeva_w(z);
        s[1] = seed1(z, s[0]);
        // -2z w + 2i/sqrt(pi) cancels for large real z
        const double cancel = std::abs(2.0 * z * s[0]) / std::abs(s[1] * sqrt2);
        const double e = forward_fill(z, s, 1, n_max, 8.0 * eps * (1.0 + cancel)) + 2.0 * eps;
        return WDerivativeTable(z, std::move(s), {{0, n_max, Recurrence::forward}}, e);
    };

    auto backward_table = [&] {
        if (z.imag() >= shift_height) {
            Run r = miller(z, n_max);
            return WDerivativeTable(z, std::move(r.s), {{0, n_max, Recurrence::backward}},
                                    r.error);
        }
        // Past the turning region the companion solutions no longer separate
        // (real axis) or the wanted one dominates (lower half plane), so the
        // shifted values only seed a forward continuation.
        const std::size_t n_sw = static_cast<std::size_t>(std::norm(z)) + 60;
        const double y = std::max(z.imag(), 0.0);
        const bool hybrid =
            n_sw + 1 < n_max &&
            2.0 * y * (std::sqrt(2.0 * n_max) - std::sqrt(2.0 * n_sw)) <= 2.3;
        if (!hybrid) {
            Run r = shifted(z, n_max);
            return WDerivativeTable(z, std::move(r.s),
                                    {{0, n_max, Recurrence::shifted_backward}}, r.error);
        }
        Run r = shifted(z, n_sw + 1);
        std::vector<cplx> s(n_max + 1);
        std::copy(r.s.begin(), r.s.end(), s.begin());
        const double e = r.error * 10.0 + forward_fill(z, s, n_sw + 1, n_max);
        return WDerivativeTable(z, std::move(s),
                                {{0, n_sw + 1, Recurrence::shifted_backward},
                                 {n_sw + 2, n_max, Recurrence::forward}},
                                e);
    };

    switch (hint) {
        case Direction::forward: {
            auto t = forward_table();
            check(t);
            return t;
        }
        case Direction::backward: {
            auto t = backward_table();
            check(t);
            return t;
        }
        case Direction::automatic: break;
    }
    if (z.imag() < shift_height) {
        auto t = forward_table();
        if (t.error_estimate() <= accept_forward) return t;
    }
    auto t = backward_table();
    check(t);
    return t;
}

}  // namespace hermjost::special
