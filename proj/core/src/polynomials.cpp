#include "cohex/polynomials.hpp"

#include "cohex/quadrature.hpp"
#include "compensated.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cohex {

double log_factorial(int n) {
    if (n < 0) throw std::domain_error("log_factorial: negative argument");
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::domain_error("log_binomial: k outside [0, n]");
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

namespace {

// Discrete supports accept only (numerically) integer abscissas.
int require_grid_point(double x, int x_min, int x_max, const char* family) {
    const double rounded = std::round(x);
    if (std::abs(x - rounded) > 1e-9) {
        throw std::domain_error(std::string(family) + ": support is an integer grid, got x=" +
                                std::to_string(x));
    }
    const int xi = static_cast<int>(rounded);
    if (xi < x_min || (x_max >= 0 && xi > x_max)) {
        throw std::domain_error(std::string(family) + ": x outside support");
    }
    return xi;
}

} // namespace

PolynomialFamily PolynomialFamily::hermite() {
    PolynomialFamily f;
    f.kind_ = FamilyKind::Hermite;
    f.coeffs_.fbar = [](int n) { return n > 0 ? std::sqrt(static_cast<double>(n)) : 0.0; };
    f.coeffs_.r = std::numbers::sqrt2;
    f.coeffs_.s = [](int) { return 0.0; };
    f.p0_ = std::pow(std::numbers::pi, -0.25);
    return f;
}

PolynomialFamily PolynomialFamily::charlier(double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("charlier: mu must be > 0");
    PolynomialFamily f;
    f.kind_ = FamilyKind::Charlier;
    f.mu_ = mu;
    const double sqrt_mu = std::sqrt(mu);
    f.coeffs_.fbar = [](int n) { return n > 0 ? std::sqrt(static_cast<double>(n)) : 0.0; };
    f.coeffs_.r = -1.0 / sqrt_mu;
    f.coeffs_.s = [sqrt_mu](int n) { return static_cast<double>(n) / sqrt_mu + sqrt_mu; };
    f.p0_ = 1.0;
    return f;
}

PolynomialFamily PolynomialFamily::kravchuk(double p, int n_levels) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("kravchuk: p must lie in (0,1)");
    if (n_levels < 1) throw std::invalid_argument("kravchuk: N must be >= 1");
    PolynomialFamily f;
    f.kind_ = FamilyKind::Kravchuk;
    f.p_ = p;
    f.n_levels_ = n_levels;
    f.degree_bound_ = n_levels;
    const double q = 1.0 - p;
    const double N = static_cast<double>(n_levels);
    f.coeffs_.fbar = [N](int n) {
        if (n <= 0 || n > static_cast<int>(N)) return 0.0; // fbar(N+1) = 0 exactly
        return std::sqrt(static_cast<double>(n) * (N + 1.0 - n) / N);
    };
    f.coeffs_.r = 1.0 / std::sqrt(p * q * N);
    const double r = f.coeffs_.r;
    f.coeffs_.s = [r, p, q, N](int n) { return r * (p - q) * n - r * p * N; };
    f.p0_ = 1.0;
    return f;
}

double PolynomialFamily::mu() const {
    if (kind_ != FamilyKind::Charlier) throw std::logic_error("mu(): not a Charlier family");
    return mu_;
}

double PolynomialFamily::p() const {
    if (kind_ != FamilyKind::Kravchuk) throw std::logic_error("p(): not a Kravchuk family");
    return p_;
}

double PolynomialFamily::q() const { return 1.0 - p(); }

int PolynomialFamily::N() const {
    if (kind_ != FamilyKind::Kravchuk) throw std::logic_error("N(): not a Kravchuk family");
    return n_levels_;
}

double PolynomialFamily::weight(double x) const {
    switch (kind_) {
    case FamilyKind::Hermite:
        return std::exp(-x * x);
    case FamilyKind::Charlier: {
        const int xi = require_grid_point(x, 0, -1, "charlier weight");
        return std::exp(xi * std::log(mu_) - mu_ - log_factorial(xi));
    }
    case FamilyKind::Kravchuk: {
        const int xi = require_grid_point(x, 0, n_levels_, "kravchuk weight");
        const double q = 1.0 - p_;
        return std::exp(log_binomial(n_levels_, xi) + xi * std::log(p_) +
                        (n_levels_ - xi) * std::log(q));
    }
    }
    throw std::logic_error("weight: unknown family kind");
}

std::vector<double> PolynomialFamily::eval_sequence(double x, int n_max) const {
    if (n_max < 0) throw std::domain_error("eval_sequence: n_max must be >= 0");
    if (degree_bound_ && n_max > *degree_bound_) {
        throw std::domain_error("eval_sequence: n_max exceeds the family's top degree");
    }

    switch (kind_) {
    case FamilyKind::Hermite:
        return forward_sequence(x, n_max);
    case FamilyKind::Charlier: {
        const int xi = require_grid_point(x, 0, -1, "eval_sequence");
        return charlier_sequence(xi, n_max);
    }
    case FamilyKind::Kravchuk: {
        const int xi = require_grid_point(x, 0, n_levels_, "eval_sequence");
        return kravchuk_sequence(xi, n_max);
    }
    }
    throw std::logic_error("eval_sequence: unknown family kind");
}

std::vector<double> PolynomialFamily::forward_sequence(double x, int n_max) const {
    std::vector<double> values(static_cast<size_t>(n_max) + 1);
    values[0] = p0_;
    double prev = 0.0; // p_{-1}
    for (int n = 0; n < n_max; ++n) {
        const double next =
            ((coeffs_.r * x + coeffs_.s(n)) * values[n] - coeffs_.fbar(n) * prev) /
            coeffs_.fbar(n + 1);
        prev = values[n];
        values[static_cast<size_t>(n) + 1] = next;
    }
    return values;
}

double PolynomialFamily::forward_value(double x, int degree) const {
    double prev = 0.0;
    double value = p0_;
    for (int n = 0; n < degree; ++n) {
        const double next =
            ((coeffs_.r * x + coeffs_.s(n)) * value - coeffs_.fbar(n) * prev) /
            coeffs_.fbar(n + 1);
        prev = value;
        value = next;
    }
    return value;
}

// The forward degree recurrence loses all accuracy once the true values
// decay (the rounding noise rides the growing second solution). For n
// beyond x that regime is reached quickly, but self-duality of the
// Charlier sequence maps those entries onto a polynomial of degree x <= n
// evaluated at the point n, which the forward recurrence handles in its
// stable (non-decaying) direction:
//
//   p_n(x) = p_x(n) * mu^{(n-x)/2} * sqrt(x!/n!).
std::vector<double> PolynomialFamily::charlier_sequence(int xi, int n_max) const {
    std::vector<double> values = forward_sequence(static_cast<double>(xi), n_max);
    const double log_mu = std::log(mu_);
    for (int n = xi + 1; n <= n_max; ++n) {
        const double dual = forward_value(static_cast<double>(n), xi);
        const double log_factor =
            0.5 * (n - xi) * log_mu + 0.5 * (log_factorial(xi) - log_factorial(n));
        values[static_cast<size_t>(n)] = dual * std::exp(log_factor);
    }
    return values;
}

// Same instability for the finite family, but here the terminating
// recurrence provides exact top seeds in closed form,
//
//   p_N(x)     = (-1)^{N+x} (q/p)^{x - N/2},
//   p_{N-1}(x) = (r x + s_N) p_N(x)      (from fbar(N+1) = 0),
//
// so the sequence is assembled two-sided over the full 0..N range: the
// forward pass is accurate up to the true envelope peak, the backward pass
// from the exact seeds is accurate down to it, and the splice point is the
// index where the two passes agree best (both are exact near the peak,
// wildly different in each other's garbage zone).
std::vector<double> PolynomialFamily::kravchuk_sequence(int xi, int n_max) const {
    const int N = n_levels_;
    const double x = static_cast<double>(xi);
    std::vector<double> forward = forward_sequence(x, N);

    const double q = 1.0 - p_;
    const double log_seed = (xi - 0.5 * N) * (std::log(q) - std::log(p_));
    if (std::abs(log_seed) > 690.0) {
        // Top value not representable: |p_N| huge means pure growth (the
        // forward pass is fine); |p_N| below denormal range means no usable
        // backward seed, so degrade to the forward pass.
        forward.resize(static_cast<size_t>(n_max) + 1);
        return forward;
    }

    std::vector<double> backward(static_cast<size_t>(N) + 1);
    const double sign = ((N + xi) % 2 == 0) ? 1.0 : -1.0;
    backward[static_cast<size_t>(N)] = sign * std::exp(log_seed);
    double above = 0.0; // p_{n+1}
    double current = backward[static_cast<size_t>(N)];
    for (int n = N; n >= 1; --n) {
        const double below = ((coeffs_.r * x + coeffs_.s(n)) * current -
                              coeffs_.fbar(n + 1) * above) /
                             coeffs_.fbar(n);
        above = current;
        current = below;
        backward[static_cast<size_t>(n) - 1] = below;
    }

    size_t splice = static_cast<size_t>(N);
    double best = std::numeric_limits<double>::infinity();
    for (size_t n = 0; n <= static_cast<size_t>(N); ++n) {
        const double f = forward[n];
        const double b = backward[n];
        if (!std::isfinite(f) || !std::isfinite(b)) continue;
        const double denom = std::abs(f) + std::abs(b);
        if (denom == 0.0) continue;
        const double mismatch = std::abs(f - b) / denom;
        if (mismatch < best) {
            best = mismatch;
            splice = n;
        }
    }

    std::vector<double> values(static_cast<size_t>(n_max) + 1);
    for (size_t n = 0; n < values.size(); ++n) {
        values[n] = n <= splice ? forward[n] : backward[n];
    }
    return values;
}

std::vector<int> PolynomialFamily::support_points(double tail_rel_cutoff) const {
    switch (kind_) {
    case FamilyKind::Hermite:
        throw std::logic_error("support_points: Hermite support is continuous");
    case FamilyKind::Kravchuk: {
        std::vector<int> xs(static_cast<size_t>(n_levels_) + 1);
        for (int x = 0; x <= n_levels_; ++x) xs[static_cast<size_t>(x)] = x;
        return xs;
    }
    case FamilyKind::Charlier: {
        // Poisson tail bound: x_max >= mu + 40 sqrt(mu) + 40 puts the weight
        // far below any practical cutoff; then extend until the ratio test
        // actually holds.
        const double log_cut = std::log(tail_rel_cutoff);
        const int mode = std::max(0, static_cast<int>(std::floor(mu_)));
        const double log_max = mode * std::log(mu_) - mu_ - log_factorial(mode);
        int x_max = static_cast<int>(std::ceil(mu_ + 40.0 * std::sqrt(mu_) + 40.0));
        auto log_weight = [this](int x) {
            return x * std::log(mu_) - mu_ - log_factorial(x);
        };
        while (log_weight(x_max) - log_max >= log_cut) ++x_max;
        std::vector<int> xs(static_cast<size_t>(x_max) + 1);
        for (int x = 0; x <= x_max; ++x) xs[static_cast<size_t>(x)] = x;
        return xs;
    }
    }
    throw std::logic_error("support_points: unknown family kind");
}

double gram_residual(const PolynomialFamily& family, int n_max, const QuadSpec& spec) {
    const size_t count = static_cast<size_t>(n_max) + 1;

    std::vector<double> abscissas;
    std::vector<double> weights;
    if (family.kind() == FamilyKind::Hermite) {
        const int order = spec.hermite_order > 0 ? spec.hermite_order : n_max + 8;
        if (order < n_max + 1) {
            throw std::invalid_argument("gram_residual: Hermite order must be >= n_max + 1");
        }
        GaussHermiteRule rule = gauss_hermite_rule(order);
        abscissas = std::move(rule.nodes);
        weights = std::move(rule.weights);
    } else {
        for (int x : family.support_points(spec.charlier_rel_cutoff)) {
            abscissas.push_back(static_cast<double>(x));
            weights.push_back(family.weight(x));
        }
    }

    std::vector<detail::CompensatedSum> gram(count * count);
    std::vector<double> values;
    for (size_t i = 0; i < abscissas.size(); ++i) {
        values = family.eval_sequence(abscissas[i], n_max);
        for (size_t m = 0; m < count; ++m) {
            for (size_t n = m; n < count; ++n) {
                const double term = weights[i] * values[m] * values[n];
                if (!std::isfinite(term)) {
                    // Weight underflow against value overflow: the product
                    // left double range, so orthonormality cannot be
                    // certified at these parameters.
                    return std::numeric_limits<double>::infinity();
                }
                gram[m * count + n].add(term);
            }
        }
    }

    double residual = 0.0;
    for (size_t m = 0; m < count; ++m) {
        for (size_t n = m; n < count; ++n) {
            const double expected = (m == n) ? 1.0 : 0.0;
            residual = std::max(residual, std::abs(gram[m * count + n].value() - expected));
        }
    }
    return residual;
}

double recurrence_residual(const PolynomialFamily& family, int n_max,
                           std::span<const double> sample_points,
                           const SequenceEvaluator& evaluate) {
    const auto& c = family.coeffs();
    double residual = 0.0;
    for (double x : sample_points) {
        const std::vector<double> v = evaluate
            ? evaluate(x, n_max)
            : family.eval_sequence(x, n_max);
        for (int n = 1; n < n_max; ++n) {
            const size_t un = static_cast<size_t>(n);
            const double defect = c.fbar(n + 1) * v[un + 1] + c.fbar(n) * v[un - 1] -
                                  (c.r * x + c.s(n)) * v[un];
            residual = std::max(residual, std::abs(defect) / std::max(1.0, std::abs(v[un])));
        }
    }
    return residual;
}

} // namespace cohex
