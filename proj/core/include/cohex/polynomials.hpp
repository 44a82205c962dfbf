#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace cohex {

double log_factorial(int n);
double log_binomial(int n, int k);

/// Coefficients of the normalized three-term recurrence
///
///   fbar(n+1) p_{n+1}(x) = (r x + s(n)) p_n(x) - fbar(n) p_{n-1}(x),
///
/// with fbar(0) = 0 and fbar(1) = 1. For a finite family of top degree N,
/// fbar(N+1) = 0 terminates the sequence.
struct RecurrenceCoefficients {
    std::function<double(int)> fbar;
    double r = 0.0;
    std::function<double(int)> s;
};

enum class FamilyKind { Hermite, Charlier, Kravchuk };

/// One orthonormal polynomial family: weight function, support, and the
/// recurrence coefficients in normalized form. Instances are immutable and
/// safe to share across threads.
class PolynomialFamily {
public:
    static PolynomialFamily hermite();
    static PolynomialFamily charlier(double mu);
    static PolynomialFamily kravchuk(double p, int n_levels);

    FamilyKind kind() const noexcept { return kind_; }
    const RecurrenceCoefficients& coeffs() const noexcept { return coeffs_; }

    /// Seed value p_0 making <p_0, p_0> = 1 under the weight.
    double p0() const noexcept { return p0_; }

    /// Top polynomial degree for finite families (Kravchuk), else nullopt.
    std::optional<int> degree_bound() const noexcept { return degree_bound_; }
    bool finite() const noexcept { return degree_bound_.has_value(); }

    double mu() const;  // Charlier only
    double p() const;   // Kravchuk only
    double q() const;   // Kravchuk only
    int N() const;      // Kravchuk only

    /// Weight sigma(x). Discrete weights are evaluated in log space.
    /// Throws std::domain_error for x outside the support (discrete supports
    /// require integer x).
    double weight(double x) const;

    /// Orthonormal values p_0(x) ... p_{n_max}(x) by forward recurrence.
    std::vector<double> eval_sequence(double x, int n_max) const;

    /// Discrete support grid used for weighted sums: {0..N} for Kravchuk,
    /// {0..x_max} for Charlier with the tail cut where the weight drops
    /// below `tail_rel_cutoff` of its maximum. Throws std::logic_error for
    /// Hermite (continuous support).
    std::vector<int> support_points(double tail_rel_cutoff = 1e-18) const;

private:
    PolynomialFamily() = default;

    std::vector<double> forward_sequence(double x, int n_max) const;
    double forward_value(double x, int degree) const;
    std::vector<double> charlier_sequence(int xi, int n_max) const;
    std::vector<double> kravchuk_sequence(int xi, int n_max) const;

    FamilyKind kind_ = FamilyKind::Hermite;
    RecurrenceCoefficients coeffs_;
    double p0_ = 1.0;
    std::optional<int> degree_bound_;
    double mu_ = 0.0;       // Charlier
    double p_ = 0.0;        // Kravchuk
    int n_levels_ = 0;      // Kravchuk N
};

/// Settings for the inner products behind gram_residual.
struct QuadSpec {
    int hermite_order = 0;              // 0 = automatic (n_max + 8)
    double charlier_rel_cutoff = 1e-18; // weight tail cut relative to max
};

/// max_{m,n <= n_max} |<p_m, p_n> - delta_{m,n}| with the inner product
/// taken as the weighted discrete sum (Charlier, Kravchuk) or Gauss-Hermite
/// quadrature of order >= n_max + 1 (Hermite).
double gram_residual(const PolynomialFamily& family, int n_max, const QuadSpec& spec = {});

/// Evaluates p_0..p_{n_max} at one point; used to plug independent
/// evaluation routes into recurrence_residual.
using SequenceEvaluator = std::function<std::vector<double>(double x, int n_max)>;

/// max over sample points and 1 <= n < n_max of the recurrence defect
/// |fbar(n+1) p_{n+1} + fbar(n) p_{n-1} - (r x + s(n)) p_n| / max(1, |p_n|).
/// With the default evaluator this checks self-consistency; passing an
/// independent route (hypergeometric form, textbook values) makes it a
/// cross-validation of the recurrence coefficients.
double recurrence_residual(const PolynomialFamily& family, int n_max,
                           std::span<const double> sample_points,
                           const SequenceEvaluator& evaluate = {});

} // namespace cohex
