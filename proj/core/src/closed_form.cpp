#include "cohex/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cohex {

namespace {

constexpr std::complex<double> kImagUnit{0.0, 1.0};

std::complex<double> unit_phase(double arg) {
    return {std::cos(arg), std::sin(arg)};
}

// i^n without accumulating rounding.
std::complex<double> imag_unit_power(int n) {
    switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

void require_nonnegative_time(double t, const char* where) {
    if (t < 0.0) throw std::domain_error(std::string(where) + ": t must be >= 0");
}

} // namespace

std::vector<std::complex<double>> harmonic_resonant_amplitudes(double t, int n_max) {
    require_nonnegative_time(t, "harmonic_resonant_amplitudes");
    if (n_max < 0) throw std::domain_error("harmonic_resonant_amplitudes: n_max must be >= 0");

    std::vector<std::complex<double>> amps(static_cast<size_t>(n_max) + 1);
    if (t == 0.0) {
        amps[0] = 1.0;
        return amps;
    }
    const double log_t = std::log(t);
    for (int n = 0; n <= n_max; ++n) {
        const double log_mag = n * log_t - 0.5 * t * t - 0.5 * log_factorial(n);
        amps[static_cast<size_t>(n)] = imag_unit_power(n) * std::exp(log_mag);
    }
    return amps;
}

std::vector<std::complex<double>> harmonic_detuned_amplitudes(double t, double epsilon,
                                                              int n_max) {
    require_nonnegative_time(t, "harmonic_detuned_amplitudes");
    if (n_max < 0) throw std::domain_error("harmonic_detuned_amplitudes: n_max must be >= 0");
    if (epsilon == 0.0) {
        throw std::domain_error(
            "harmonic_detuned_amplitudes: eps = 0 is the resonant case; "
            "use harmonic_resonant_amplitudes");
    }
    // The formula extends to eps < 0 as written: evaluated at signed eps it
    // equals (-1)^n conj(a_n at |eps|), which is what the amplitude
    // equations demand (checked amplitude-by-amplitude against the oracle;
    // a bare (-1)^n flip without the conjugation does not solve them).
    std::vector<std::complex<double>> amps(static_cast<size_t>(n_max) + 1);
    const std::complex<double> theta = 1.0 - unit_phase(-epsilon * t);
    const double abs_theta = std::abs(theta);

    if (abs_theta == 0.0) { // eps*t at a multiple of 2*pi: full return to level 0
        amps[0] = unit_phase(t / epsilon);
        return amps;
    }

    const std::complex<double> ratio = theta / epsilon;
    const double log_ratio = std::log(std::abs(ratio));
    const double arg_ratio = std::arg(ratio);
    const double eps_sq = epsilon * epsilon;
    const double damping = theta.real() / eps_sq; // Re(theta)/eps^2 = <n>/2
    const double osc = -theta.imag() / eps_sq;
    for (int n = 0; n <= n_max; ++n) {
        const double log_mag = n * log_ratio - damping - 0.5 * log_factorial(n);
        const double arg = (n * epsilon + 1.0 / epsilon) * t + n * arg_ratio + osc;
        amps[static_cast<size_t>(n)] = std::exp(log_mag) * unit_phase(arg);
    }
    return amps;
}

double poisson_parameter(double epsilon, double t) {
    if (epsilon == 0.0) return t * t;
    const double s = std::sin(0.5 * epsilon * t);
    return (4.0 / (epsilon * epsilon)) * s * s;
}

std::vector<double> poisson_populations(double lambda, int n_max) {
    if (lambda < 0.0) throw std::domain_error("poisson_populations: lambda must be >= 0");
    if (n_max < 0) throw std::domain_error("poisson_populations: n_max must be >= 0");
    std::vector<double> rho(static_cast<size_t>(n_max) + 1, 0.0);
    if (lambda == 0.0) {
        rho[0] = 1.0;
        return rho;
    }
    const double log_lambda = std::log(lambda);
    for (int n = 0; n <= n_max; ++n) {
        rho[static_cast<size_t>(n)] = std::exp(n * log_lambda - lambda - log_factorial(n));
    }
    return rho;
}

int poisson_truncation_levels(double lambda_max) {
    const double lam = std::max(0.0, lambda_max);
    return static_cast<int>(std::ceil(lam + 12.0 * std::sqrt(lam) + 30.0));
}

std::vector<std::complex<double>> kravchuk_amplitudes(const KravchukParameters& params,
                                                      double t) {
    require_nonnegative_time(t, "kravchuk_amplitudes");
    const int N = params.N;
    const double p = params.p;
    const double q = params.q;
    const double rt = params.r * t;

    const std::complex<double> rot = unit_phase(rt);
    const std::complex<double> alpha = p * rot + q; // |alpha|^2 = 1 - 4pq sin^2(rt/2)
    const std::complex<double> beta = rot - 1.0;    // |beta|^2  = 4 sin^2(rt/2)
    const double abs_alpha = std::abs(alpha);
    const double abs_beta = std::abs(beta);
    const double log_pq = std::log(p * q);

    std::vector<std::complex<double>> amps(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        // Zero modulus with positive integer exponent kills the amplitude;
        // exponent zero contributes the empty product.
        if ((abs_beta == 0.0 && n > 0) || (abs_alpha == 0.0 && n < N)) {
            amps[static_cast<size_t>(n)] = 0.0;
            continue;
        }
        double log_mag = 0.5 * (log_binomial(N, n) + n * log_pq);
        double arg = ((p - q) * n - p * N) * rt;
        if (N - n > 0) {
            log_mag += (N - n) * std::log(abs_alpha);
            arg += (N - n) * std::arg(alpha);
        }
        if (n > 0) {
            log_mag += n * std::log(abs_beta);
            arg += n * std::arg(beta);
        }
        amps[static_cast<size_t>(n)] = std::exp(log_mag) * unit_phase(arg);
    }
    return amps;
}

BinomialPopulations kravchuk_populations(const KravchukParameters& params, double t) {
    require_nonnegative_time(t, "kravchuk_populations");
    const int N = params.N;
    const double s = std::sin(0.5 * params.r * t);
    // 4/(N r^2) = 4/(4 + N eps^2) <= 1, so y lands in [0,1] by construction.
    double y = 4.0 / (N * params.r * params.r) * s * s;
    y = std::clamp(y, 0.0, 1.0);

    BinomialPopulations result;
    result.y = y;
    result.rho.assign(static_cast<size_t>(N) + 1, 0.0);
    if (y == 0.0) {
        result.rho[0] = 1.0;
        return result;
    }
    if (y == 1.0) {
        result.rho[static_cast<size_t>(N)] = 1.0;
        return result;
    }
    const double log_y = std::log(y);
    const double log_1my = std::log1p(-y);
    for (int n = 0; n <= N; ++n) {
        result.rho[static_cast<size_t>(n)] =
            std::exp(log_binomial(N, n) + n * log_y + (N - n) * log_1my);
    }
    return result;
}

TwoLevelPopulations two_level(double epsilon, double t) {
    const double omega = std::sqrt(1.0 + 0.25 * epsilon * epsilon);
    const double s = std::sin(omega * t);
    TwoLevelPopulations result;
    result.y = s * s / (omega * omega);
    result.rho0 = 1.0 - result.y;
    result.rho1 = result.y;
    return result;
}

std::vector<double> poisson_limit_distances(std::span<const int> ladder_sizes,
                                            double epsilon, double t) {
    const double lambda = poisson_parameter(epsilon, t);
    std::vector<double> distances;
    distances.reserve(ladder_sizes.size());
    for (int N : ladder_sizes) {
        const KravchukParameters params = kravchuk_from_detuning(N, epsilon);
        const BinomialPopulations binom = kravchuk_populations(params, t);
        const int n_hi = std::max(N, poisson_truncation_levels(lambda));
        const std::vector<double> poisson = poisson_populations(lambda, n_hi);
        double d = 0.0;
        for (int n = 0; n <= n_hi; ++n) {
            const double rho_k = n <= N ? binom.rho[static_cast<size_t>(n)] : 0.0;
            d = std::max(d, std::abs(rho_k - poisson[static_cast<size_t>(n)]));
        }
        distances.push_back(d);
    }
    return distances;
}

std::function<double(double)> spectrum(const PolynomialFamily& family, int n) {
    if (n < 0) throw std::domain_error("spectrum: n must be >= 0");
    if (family.degree_bound() && n > *family.degree_bound()) {
        throw std::domain_error("spectrum: n exceeds the family's top degree");
    }
    return [family, n](double x) {
        return family.weight(x) * family.p0() * family.eval_sequence(x, n).back();
    };
}

} // namespace cohex
