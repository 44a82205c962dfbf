#include "cohex/polynomials.hpp"

#include "reference_polynomials.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace cohex;

TEST_CASE("weights at hand-checked points") {
    CHECK(PolynomialFamily::kravchuk(0.5, 2).weight(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(PolynomialFamily::hermite().weight(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(PolynomialFamily::charlier(1.0).weight(0.0) ==
          doctest::Approx(0.36787944117144233).epsilon(1e-14));
}

TEST_CASE("discrete weights reject off-grid and out-of-range points") {
    const PolynomialFamily kravchuk = PolynomialFamily::kravchuk(0.3, 5);
    CHECK_THROWS_AS(kravchuk.weight(1.5), std::domain_error);
    CHECK_THROWS_AS(kravchuk.weight(6.0), std::domain_error);
    CHECK_THROWS_AS(kravchuk.weight(-1.0), std::domain_error);
    CHECK_THROWS_AS(PolynomialFamily::charlier(2.0).weight(-3.0), std::domain_error);
}

TEST_CASE("weight normalization over the support") {
    SUBCASE("kravchuk sums to 1 exactly (binomial theorem)") {
        for (double p : {0.05, 0.3, 0.5, 0.77, 0.95}) {
            const PolynomialFamily family = PolynomialFamily::kravchuk(p, 23);
            double sum = 0.0;
            for (int x : family.support_points()) sum += family.weight(x);
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
    SUBCASE("charlier sums to 1 within the truncation tolerance") {
        for (double mu : {0.25, 1.0, 4.0}) {
            const PolynomialFamily family = PolynomialFamily::charlier(mu);
            double sum = 0.0;
            for (int x : family.support_points()) sum += family.weight(x);
            CHECK(std::abs(sum - 1.0) < 1e-15);
        }
    }
    SUBCASE("positivity inside the support") {
        const PolynomialFamily family = PolynomialFamily::kravchuk(0.11, 9);
        for (int x : family.support_points()) CHECK(family.weight(x) > 0.0);
    }
}

TEST_CASE("eval_sequence hand-run examples") {
    SUBCASE("two-point family: p_1(x) = 2x - 1") {
        const PolynomialFamily family = PolynomialFamily::kravchuk(0.5, 1);
        const std::vector<double> at1 = family.eval_sequence(1.0, 1);
        CHECK(at1[0] == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(at1[1] == doctest::Approx(1.0).epsilon(1e-15));
        const std::vector<double> at0 = family.eval_sequence(0.0, 1);
        CHECK(at0[1] == doctest::Approx(-1.0).epsilon(1e-15));
    }
    SUBCASE("hermite seed is pi^(-1/4)") {
        const std::vector<double> values = PolynomialFamily::hermite().eval_sequence(0.0, 0);
        CHECK(values[0] == doctest::Approx(0.7511255444649425).epsilon(1e-15));
    }
    SUBCASE("degree zero is independent of x") {
        const PolynomialFamily family = PolynomialFamily::charlier(2.5);
        CHECK(family.eval_sequence(0.0, 0)[0] == family.eval_sequence(17.0, 0)[0]);
    }
    SUBCASE("n_max beyond the top degree is rejected") {
        CHECK_THROWS_AS(PolynomialFamily::kravchuk(0.5, 3).eval_sequence(1.0, 4),
                        std::domain_error);
    }
}

TEST_CASE("gram residuals") {
    SUBCASE("two-point family is exact") {
        CHECK(gram_residual(PolynomialFamily::kravchuk(0.5, 1), 1) < 1e-14);
    }
    SUBCASE("hermite degree 0 is the seed normalization") {
        CHECK(gram_residual(PolynomialFamily::hermite(), 0) < 1e-14);
    }
    SUBCASE("kravchuk p=0.3 N=30 full degree") {
        CHECK(gram_residual(PolynomialFamily::kravchuk(0.3, 30), 30) < 1e-10);
    }
    SUBCASE("orthonormality across the stated domain") {
        CHECK(gram_residual(PolynomialFamily::hermite(), 30) < 1e-10);
        for (double mu : {0.25, 1.0, 4.0}) {
            CHECK(gram_residual(PolynomialFamily::charlier(mu), 30) < 1e-10);
        }
        for (double p : {0.05, 0.5, 0.95}) {
            CHECK(gram_residual(PolynomialFamily::kravchuk(p, 50), 50) < 1e-10);
        }
    }
}

TEST_CASE("recurrence residuals against independent evaluation routes") {
    SUBCASE("self-consistency at the smallest family") {
        const double xs[] = {0.0, 1.0};
        CHECK(recurrence_residual(PolynomialFamily::kravchuk(0.5, 1), 1, xs) < 1e-15);
    }
    SUBCASE("hypergeometric route, N=10") {
        const PolynomialFamily family = PolynomialFamily::kravchuk(0.4, 10);
        std::vector<double> xs;
        for (int x = 0; x <= 10; ++x) xs.push_back(static_cast<double>(x));
        const double residual = recurrence_residual(
            family, 10, xs,
            [](double x, int n_max) {
                return testref::hypergeometric_kravchuk_sequence(0.4, 10, x, n_max);
            });
        CHECK(residual < 1e-10);
    }
    SUBCASE("textbook hermite route, n <= 20") {
        std::vector<double> xs;
        for (int i = 0; i <= 20; ++i) xs.push_back(-5.0 + 0.5 * i);
        const double residual =
            recurrence_residual(PolynomialFamily::hermite(), 20, xs,
                                [](double x, int n_max) {
                                    return testref::textbook_hermite_sequence(x, n_max);
                                });
        CHECK(residual < 1e-10);
    }
    SUBCASE("hypergeometric values agree pointwise for N <= 10") {
        for (int N = 1; N <= 10; ++N) {
            for (double p : {0.3, 0.5, 0.7}) {
                const PolynomialFamily family = PolynomialFamily::kravchuk(p, N);
                for (int x = 0; x <= N; ++x) {
                    const auto ours = family.eval_sequence(x, N);
                    const auto reference =
                        testref::hypergeometric_kravchuk_sequence(p, N, x, N);
                    for (int n = 0; n <= N; ++n) {
                        CHECK(std::abs(ours[size_t(n)] - reference[size_t(n)]) < 1e-10);
                    }
                }
            }
        }
    }
}

TEST_CASE("kravchuk structure") {
    SUBCASE("reflection symmetry at p = 1/2") {
        const int N = 12;
        const PolynomialFamily family = PolynomialFamily::kravchuk(0.5, N);
        for (int x = 0; x <= N; ++x) {
            const auto direct = family.eval_sequence(x, N);
            const auto mirrored = family.eval_sequence(N - x, N);
            for (int n = 0; n <= N; ++n) {
                const double sign = (n % 2 == 0) ? 1.0 : -1.0;
                CHECK(direct[size_t(n)] ==
                      doctest::Approx(sign * mirrored[size_t(n)]).epsilon(1e-10));
            }
        }
    }
    SUBCASE("termination: fbar(N+1) vanishes exactly") {
        const PolynomialFamily family = PolynomialFamily::kravchuk(0.37, 8);
        CHECK(family.coeffs().fbar(9) == 0.0);
        CHECK(family.coeffs().fbar(8) > 0.0);
    }
}

TEST_CASE("coefficient normalization shared by all families") {
    for (const PolynomialFamily& family :
         {PolynomialFamily::hermite(), PolynomialFamily::charlier(2.0),
          PolynomialFamily::kravchuk(0.25, 14)}) {
        CHECK(family.coeffs().fbar(0) == 0.0);
        CHECK(family.coeffs().fbar(1) == doctest::Approx(1.0).epsilon(1e-15));
        for (int n = 1; n <= 10; ++n) CHECK(family.coeffs().fbar(n) > 0.0);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(PolynomialFamily::charlier(0.0), std::invalid_argument);
    CHECK_THROWS_AS(PolynomialFamily::charlier(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(PolynomialFamily::kravchuk(0.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(PolynomialFamily::kravchuk(1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(PolynomialFamily::kravchuk(0.5, 0), std::invalid_argument);
}

TEST_CASE("charlier truncation respects the tail bound") {
    for (double mu : {0.5, 4.0}) {
        const PolynomialFamily family = PolynomialFamily::charlier(mu);
        const std::vector<int> xs = family.support_points();
        CHECK(xs.front() == 0);
        CHECK(xs.back() >= static_cast<int>(mu + 40.0 * std::sqrt(mu) + 40.0));
        const double max_weight = family.weight(std::floor(mu));
        CHECK(family.weight(xs.back()) / max_weight < 1e-18);
    }
}
