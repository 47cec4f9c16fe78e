#include <algorithm>
#include <cmath>
#include <cstdio>
#include <variant>

#include "hermjost/errors.hpp"
#include "hermjost/jacobi.hpp"

namespace hermjost::jacobi {

namespace {

struct Zero {};
struct Power {
    double amp, p;
};
struct Constant {
    double v;
};
struct SqrtShift {
    double k;
};
struct Finite {
    std::vector<double> v;
};
struct Table {
    std::vector<double> v;
    std::optional<Family> tail;
    std::string source;
};
struct Shifted {
    Family base;
    std::size_t s;
};
struct Sum {
    Family f, g;
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Exact sum of the c-series terms over N < n <= M for a computable rule.
double c_terms(const Family& f, std::size_t N, std::size_t M) {
    double s = 0.0;
    for (std::size_t n = N + 1; n <= M; ++n) {
        const double fn = f(n);
        s += std::abs(fn) / n + std::abs(f(n + 1) - fn) / std::sqrt(static_cast<double>(n));
    }
    return s;
}

double b_terms(const Family& f, std::size_t N, std::size_t M) {
    double s = 0.0;
    for (std::size_t n = N + 1; n <= M; ++n) s += std::abs(f(n)) / std::sqrt(static_cast<double>(n));
    return s;
}

Verdict combine(Verdict a, Verdict b) {
    if (a == Verdict::converges && b == Verdict::converges) return Verdict::converges;
    if (a == Verdict::unknown || b == Verdict::unknown) return Verdict::unknown;
    if (a == Verdict::diverges && b == Verdict::diverges) return Verdict::unknown;
    return Verdict::diverges;
}

}  // namespace

struct Family::Node {
    std::variant<Zero, Power, Constant, SqrtShift, Finite, Table, Shifted, Sum> v;
};

Family::Family() : node_(std::make_shared<Node>(Node{Zero{}})) {}

Family Family::zero() { return Family(); }

Family Family::power(double amplitude, double exponent) {
    if (!std::isfinite(amplitude) || !std::isfinite(exponent))
        throw DomainError("power family: parameters must be finite");
    if (!(exponent > 0.0)) throw DomainError("power family: exponent must be > 0");
    return Family(std::make_shared<Node>(Node{Power{amplitude, exponent}}));
}

Family Family::constant(double value) {
    if (!std::isfinite(value)) throw DomainError("constant family: value must be finite");
    return Family(std::make_shared<Node>(Node{Constant{value}}));
}

Family Family::sqrt_shift(double k) {
    if (!std::isfinite(k) || !(k > -1.0)) throw DomainError("sqrt-shift family: k must be > -1");
    return Family(std::make_shared<Node>(Node{SqrtShift{k}}));
}

Family Family::finite(std::vector<double> values) {
    for (double x : values)
        if (!std::isfinite(x)) throw DomainError("list family: values must be finite");
    while (!values.empty() && values.back() == 0.0) values.pop_back();
    return Family(std::make_shared<Node>(Node{Finite{std::move(values)}}));
}

Family Family::table(std::vector<double> values, std::optional<Family> tail, std::string source) {
    for (double x : values)
        if (!std::isfinite(x)) throw DomainError("table family: values must be finite");
    return Family(std::make_shared<Node>(Node{Table{std::move(values), std::move(tail), std::move(source)}}));
}

Family Family::shifted(const Family& base, std::size_t s) {
    if (s == 0) return base;
    return Family(std::make_shared<Node>(Node{Shifted{base, s}}));
}

Family Family::sum(const Family& f, const Family& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    return Family(std::make_shared<Node>(Node{Sum{f, g}}));
}

double Family::operator()(std::size_t n) const {
    return std::visit(
        overloaded{
            [](const Zero&) { return 0.0; },
            [n](const Power& p) { return p.amp * std::pow(static_cast<double>(n), -p.p); },
            [](const Constant& c) { return c.v; },
            [n](const SqrtShift& s) {
                const double x = static_cast<double>(n);
                return s.k / (std::sqrt(x + s.k) + std::sqrt(x));
            },
            [n](const Finite& f) { return n <= f.v.size() ? f.v[n - 1] : 0.0; },
            [n](const Table& t) {
                if (n <= t.v.size()) return t.v[n - 1];
                if (!t.tail)
                    throw DomainError("table family '" + t.source +
                                      "' has no tail rule beyond index " +
                                      std::to_string(t.v.size()));
                return (*t.tail)(n);
            },
            [n](const Shifted& s) { return s.base(n + s.s); },
            [n](const Sum& s) { return s.f(n) + s.g(n); },
        },
        node_->v);
}

bool Family::is_zero() const {
    return std::visit(overloaded{
                          [](const Zero&) { return true; },
                          [](const Power& p) { return p.amp == 0.0; },
                          [](const Constant& c) { return c.v == 0.0; },
                          [](const SqrtShift& s) { return s.k == 0.0; },
                          [](const Finite& f) { return f.v.empty(); },
                          [](const Table&) { return false; },
                          [](const Shifted& s) { return s.base.is_zero(); },
                          [](const Sum& s) { return s.f.is_zero() && s.g.is_zero(); },
                      },
                      node_->v);
}

std::optional<std::size_t> Family::support() const {
    using R = std::optional<std::size_t>;
    if (is_zero()) return std::size_t{0};
    return std::visit(overloaded{
                          [](const Finite& f) -> R { return f.v.size(); },
                          [](const Shifted& s) -> R {
                              auto b = s.base.support();
                              if (!b) return std::nullopt;
                              return *b > s.s ? *b - s.s : 0;
                          },
                          [](const Sum& s) -> R {
                              auto a = s.f.support(), b = s.g.support();
                              if (!a || !b) return std::nullopt;
                              return std::max(*a, *b);
                          },
                          [](const auto&) -> R { return std::nullopt; },
                      },
                      node_->v);
}

Verdict Family::c_series() const {
    return std::visit(
        overloaded{
            [](const Zero&) { return Verdict::converges; },
            [](const Power&) { return Verdict::converges; },
            [](const Constant& c) { return c.v == 0.0 ? Verdict::converges : Verdict::diverges; },
            [](const SqrtShift&) { return Verdict::converges; },
            [](const Finite&) { return Verdict::converges; },
            [](const Table& t) { return t.tail ? t.tail->c_series() : Verdict::unknown; },
            [](const Shifted& s) { return s.base.c_series(); },
            [](const Sum& s) { return combine(s.f.c_series(), s.g.c_series()); },
        },
        node_->v);
}

Verdict Family::b_series() const {
    return std::visit(
        overloaded{
            [](const Zero&) { return Verdict::converges; },
            [](const Power& p) {
                return p.amp == 0.0 || p.p > 0.5 ? Verdict::converges : Verdict::diverges;
            },
            [](const Constant& c) { return c.v == 0.0 ? Verdict::converges : Verdict::diverges; },
            [](const SqrtShift& s) { return s.k == 0.0 ? Verdict::converges : Verdict::diverges; },
            [](const Finite&) { return Verdict::converges; },
            [](const Table& t) { return t.tail ? t.tail->b_series() : Verdict::unknown; },
            [](const Shifted& s) { return s.base.b_series(); },
            [](const Sum& s) { return combine(s.f.b_series(), s.g.b_series()); },
        },
        node_->v);
}

std::optional<double> Family::c_tail(std::size_t N) const {
    using R = std::optional<double>;
    const double x = static_cast<double>(std::max<std::size_t>(N, 1));
    return std::visit(
        overloaded{
            [](const Zero&) -> R { return 0.0; },
            [x](const Power& p) -> R {
                const double a = std::abs(p.amp);
                // sum n^{-p-1} <= N^{-p}/p;  |f_{n+1}-f_n| <= a p n^{-p-1}
                return a * std::pow(x, -p.p) / p.p +
                       a * p.p * std::pow(x, -p.p - 0.5) / (p.p + 0.5);
            },
            [](const Constant& c) -> R {
                if (c.v == 0.0) return 0.0;
                return std::nullopt;
            },
            [x](const SqrtShift& s) -> R {
                const double k = std::abs(s.k);
                const double xm = std::max(x - 1.0, 0.5);
                return 2.0 * k / std::sqrt(x) + k / (2.0 * xm);
            },
            [this, N](const Finite& f) -> R {
                if (N > f.v.size()) return 0.0;
                return c_terms(*this, N, f.v.size());
            },
            [this, N](const Table& t) -> R {
                if (!t.tail) return std::nullopt;
                const std::size_t L = t.v.size();
                if (N >= L) return t.tail->c_tail(N);
                auto rest = t.tail->c_tail(L);
                if (!rest) return std::nullopt;
                return c_terms(*this, N, L) + *rest;
            },
            [N](const Shifted& s) -> R {
                auto b = s.base.c_tail(N + s.s);
                if (!b) return std::nullopt;
                return *b * (static_cast<double>(N + s.s + 1) / static_cast<double>(N + 1));
            },
            [N](const Sum& s) -> R {
                auto a = s.f.c_tail(N), b = s.g.c_tail(N);
                if (!a || !b) return std::nullopt;
                return *a + *b;
            },
        },
        node_->v);
}

std::optional<double> Family::b_tail(std::size_t N) const {
    using R = std::optional<double>;
    const double x = static_cast<double>(std::max<std::size_t>(N, 1));
    return std::visit(
        overloaded{
            [](const Zero&) -> R { return 0.0; },
            [x](const Power& p) -> R {
                if (p.amp == 0.0) return 0.0;
                if (p.p <= 0.5) return std::nullopt;
                return std::abs(p.amp) * std::pow(x, 0.5 - p.p) / (p.p - 0.5);
            },
            [](const Constant& c) -> R {
                if (c.v == 0.0) return 0.0;
                return std::nullopt;
            },
            [](const SqrtShift& s) -> R {
                if (s.k == 0.0) return 0.0;
                return std::nullopt;
            },
            [this, N](const Finite& f) -> R {
                if (N >= f.v.size()) return 0.0;
                return b_terms(*this, N, f.v.size());
            },
            [this, N](const Table& t) -> R {
                if (!t.tail) return std::nullopt;
                const std::size_t L = t.v.size();
                if (N >= L) return t.tail->b_tail(N);
                auto rest = t.tail->b_tail(L);
                if (!rest) return std::nullopt;
                return b_terms(*this, N, L) + *rest;
            },
            [N](const Shifted& s) -> R {
                auto b = s.base.b_tail(N + s.s);
                if (!b) return std::nullopt;
                return *b * std::sqrt(static_cast<double>(N + s.s + 1) / static_cast<double>(N + 1));
            },
            [N](const Sum& s) -> R {
                auto a = s.f.b_tail(N), b = s.g.b_tail(N);
                if (!a || !b) return std::nullopt;
                return *a + *b;
            },
        },
        node_->v);
}

std::optional<bool> Family::small_o_sqrt() const {
    using R = std::optional<bool>;
    return std::visit(overloaded{
                          [](const Table& t) -> R {
                              if (!t.tail) return std::nullopt;
                              return t.tail->small_o_sqrt();
                          },
                          [](const Shifted& s) -> R { return s.base.small_o_sqrt(); },
                          [](const Sum& s) -> R {
                              auto a = s.f.small_o_sqrt(), b = s.g.small_o_sqrt();
                              if (!a || !b) return std::nullopt;
                              return *a && *b;
                          },
                          [](const auto&) -> R { return true; },
                      },
                      node_->v);
}

std::vector<double> Family::decay_exponents() const {
    using R = std::vector<double>;
    R out = std::visit(overloaded{
                           [](const Power& p) -> R { return p.amp == 0.0 ? R{} : R{p.p}; },
                           [](const SqrtShift& s) -> R { return s.k == 0.0 ? R{} : R{0.5}; },
                           [](const Table& t) -> R { return t.tail ? t.tail->decay_exponents() : R{}; },
                           [](const Shifted& s) -> R { return s.base.decay_exponents(); },
                           [](const Sum& s) -> R {
                               R a = s.f.decay_exponents(), b = s.g.decay_exponents();
                               a.insert(a.end(), b.begin(), b.end());
                               return a;
                           },
                           [](const auto&) -> R { return {}; },
                       },
                       node_->v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string Family::describe() const {
    return std::visit(
        overloaded{
            [](const Zero&) { return std::string("zero"); },
            [](const Power& p) { return "power:" + num(p.amp) + ":" + num(p.p); },
            [](const Constant& c) { return "const:" + num(c.v); },
            [](const SqrtShift& s) { return "sqrtshift:" + num(s.k); },
            [](const Finite& f) {
                std::string s = "list:";
                for (std::size_t i = 0; i < f.v.size(); ++i) s += (i ? "," : "") + num(f.v[i]);
                if (f.v.empty()) s += "0";
                return s;
            },
            [](const Table& t) {
                std::string s = "file:" + t.source;
                if (t.tail) s += " tail " + t.tail->describe();
                return s;
            },
            [](const Shifted& s) {
                return "shift(" + s.base.describe() + "," + std::to_string(s.s) + ")";
            },
            [](const Sum& s) { return "sum(" + s.f.describe() + "," + s.g.describe() + ")"; },
        },
        node_->v);
}

}  // namespace hermjost::jacobi
