#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wedge/bessel.hpp"
#include "wedge/errors.hpp"

using namespace wedge;
namespace wb = wedge::bessel;

namespace {

// Independent oracle: ascending power series, 30 terms.
double series_I(double nu, double t, int terms = 30) {
    double sum = 0.0;
    for (int k = 0; k < terms; ++k) {
        sum += std::pow(0.5 * t, nu + 2 * k) /
               (std::tgamma(k + 1.0) * std::tgamma(nu + k + 1.0));
    }
    return sum;
}

// Independent oracle: K_0(t) = int_0^inf exp(-t cosh s) ds (Simpson).
double cosh_K0(double t) {
    const double smax = std::acosh(745.0 / t) + 1.0;
    const int n = 200001;
    const double h = smax / (n - 1);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum += w * std::exp(-t * std::cosh(i * h));
    }
    return sum * h / 3.0;
}

}  // namespace

TEST_CASE("gamma function basics") {
    CHECK(wb::gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(wb::gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(wb::gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
    CHECK_THROWS_AS(wb::gamma_fn(0.0), DomainError);
    CHECK_THROWS_AS(wb::gamma_fn(-2.0), DomainError);
    CHECK_THROWS_AS(wb::gamma_fn(200.0), OverflowError);
    // relative error over a grid in (0, 170]
    for (double a = 0.05; a <= 170.0; a += 3.17) {
        const double lg = wb::log_gamma(a);
        CHECK(std::isfinite(lg));
    }
}

TEST_CASE("I at the origin") {
    CHECK(wb::bessel_i(0.0, 0.0) == 1.0);
    CHECK(wb::bessel_i(1.0, 0.0) == 0.0);
    CHECK(wb::bessel_i(3.5, 0.0) == 0.0);
}

TEST_CASE("I against series oracle") {
    CHECK(wb::bessel_i(0.0, 1.0) == doctest::Approx(series_I(0.0, 1.0)).epsilon(1e-12));
    CHECK(wb::bessel_i(0.0, 1.0) == doctest::Approx(1.2660658777520083).epsilon(1e-10));
    for (double nu : {0.0, 0.5, 1.0, 2.0, 4.0, 7.3}) {
        for (double t : {0.05, 0.7, 2.0, 6.0, 15.0}) {
            const double ref = series_I(nu, t, 60);
            CHECK(wb::bessel_i(nu, t) == doctest::Approx(ref).epsilon(1e-10));
        }
    }
}

TEST_CASE("K against cosh-integral oracle and paper bounds") {
    CHECK(wb::bessel_k(0.0, 1.0) == doctest::Approx(cosh_K0(1.0)).epsilon(1e-10));
    CHECK(wb::bessel_k(0.0, 1.0) == doctest::Approx(0.42102443824070834).epsilon(1e-10));
    CHECK(wb::bessel_k(0.0, 4.0) == doctest::Approx(cosh_K0(4.0)).epsilon(1e-10));

    // K_nu(t) <= e^t Gamma(nu) 2^{nu-1} / t^nu  for nu > 1/2, t < 1
    const double k = wb::bessel_k(0.6, 0.5);
    const double cap = std::exp(0.5) * wb::gamma_fn(0.6) * std::pow(2.0, -0.4) /
                       std::pow(0.5, 0.6);
    CHECK(k > 0.0);
    CHECK(k <= cap);

    // K_0(t) <= sqrt(pi) e^-t / sqrt(2t)
    CHECK(wb::bessel_k(0.0, 4.0) <=
          std::sqrt(std::numbers::pi) * std::exp(-4.0) / std::sqrt(8.0));

    CHECK_THROWS_AS(wb::bessel_k(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(wb::bessel_k(0.0, -1.0), DomainError);
}

TEST_CASE("derivative recurrences") {
    auto d = wb::bessel_derivs(0.0, 1.0);
    CHECK(d.i_prime == doctest::Approx(series_I(1.0, 1.0)).epsilon(1e-11));
    CHECK(d.i_prime == doctest::Approx(0.5651591039924850).epsilon(1e-10));
    // K_0' = -K_1
    CHECK(d.k_prime == doctest::Approx(-wb::bessel_k(1.0, 1.0)).epsilon(1e-11));

    // centered finite differences close the recurrence
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> unu(0.0, 12.0), ut(0.3, 30.0);
    for (int s = 0; s < 40; ++s) {
        const double nu = unu(rng), t = ut(rng);
        const double h = 1e-5 * t;
        const auto dv = wb::bessel_derivs(nu, t);
        const double fd_i = (wb::bessel_i(nu, t + h) - wb::bessel_i(nu, t - h)) / (2 * h);
        const double fd_k = (wb::bessel_k(nu, t + h) - wb::bessel_k(nu, t - h)) / (2 * h);
        CHECK(dv.i_prime == doctest::Approx(fd_i).epsilon(1e-6));
        CHECK(dv.k_prime == doctest::Approx(fd_k).epsilon(1e-6));
    }
}

TEST_CASE("Wronskian identity on a sampled grid") {
    for (double nu : {0.0, 1.0, 3.7, 10.0, 25.0, 60.0}) {
        for (double t : {0.01, 0.1, 1.0, 5.0, 20.0, 100.0}) {
            const auto s = wb::eval_scaled(nu, t);
            const double w = std::exp(s.log_i + s.log_kp_neg) + std::exp(s.log_ip + s.log_k);
            CHECK(std::abs(w - 1.0 / t) <= 1e-9 / t);
        }
    }
}

TEST_CASE("monotonicity in t") {
    for (double nu : {0.0, 2.0, 9.5}) {
        double prev_i = -1.0, prev_k = 1e308;
        for (double t = 0.2; t < 40.0; t *= 1.37) {
            const double iv = wb::bessel_i(nu, t);
            const double kv = wb::bessel_k(nu, t);
            CHECK(iv > prev_i);
            CHECK(kv < prev_k);
            prev_i = iv;
            prev_k = kv;
        }
    }
}

TEST_CASE("scaled evaluation survives huge arguments") {
    const auto s = wb::eval_scaled(64.0, 1000.0);
    CHECK(std::isfinite(s.log_i));
    CHECK(std::isfinite(s.log_k));
    // ratio K'(t)/I'(t) ~ -pi e^{-2t}: representable only in log space
    const double log_ratio = s.log_kp_neg - s.log_ip;
    CHECK(log_ratio < -1900.0);
    CHECK_THROWS_AS(wb::eval(0.0, 1000.0), OverflowError);
}

TEST_CASE("uniform large-order expansion") {
    // u_0 = 1, u_1(s) = (3s - 5s^3)/24
    CHECK(wb::u_poly(0, 0.77) == 1.0);
    CHECK(wb::u_poly(1, 0.5) == doctest::Approx(0.0364583333333333).epsilon(1e-12));
    CHECK(wb::u_poly(1, 0.9) == doctest::Approx((3 * 0.9 - 5 * 0.729) / 24.0).epsilon(1e-12));
    // v_1(s) = (7s^3 - 9s)/24
    CHECK(wb::v_poly(1, 0.4) == doctest::Approx((7 * 0.064 - 9 * 0.4) / 24.0).epsilon(1e-12));

    const auto ua = wb::uniform_large_order(50.0, 1.0);
    CHECK(ua.tau == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    const double exact = wb::bessel_i(50.0, 50.0);
    CHECK(std::abs(ua.i_approx - exact) / exact < 1e-4);
    const double exact_k = wb::bessel_k(50.0, 50.0);
    CHECK(std::abs(ua.k_approx - exact_k) / exact_k < 1e-4);
    const auto d = wb::bessel_derivs(50.0, 50.0);
    CHECK(std::abs(ua.ip_approx - d.i_prime) / d.i_prime < 1e-4);
    CHECK(std::abs(ua.kp_approx - d.k_prime) / std::abs(d.k_prime) < 1e-4);
}

TEST_CASE("eta is monotone with the proof identity") {
    double prev = -1e308;
    for (double t = 0.05; t < 50.0; t *= 1.21) {
        const double e = wb::eta_fn(t);
        CHECK(e > prev);
        prev = e;
        const double h = 1e-6 * t;
        const double fd = (wb::eta_fn(t + h) - wb::eta_fn(t - h)) / (2 * h);
        CHECK(fd * t / std::sqrt(1.0 + t * t) == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("bound suite spot checks") {
    auto b0 = wb::bound_suite(0.0, 2.0);
    CHECK(b0.i0_le_exp);
    CHECK(b0.k0_le_gauss);

    auto b1 = wb::bound_suite(3.0, 0.5);
    CHECK(b1.i_small_t);
    CHECK(b1.k_small_t);
    // I_3(0.5) <= e^0.5 (0.25)^3 / Gamma(4)
    CHECK(wb::bessel_i(3.0, 0.5) <= std::exp(0.5) * std::pow(0.25, 3) / 6.0);

    auto b2 = wb::bound_suite(3.0, 2.5);
    CHECK(b2.i_large_t);
    CHECK(b2.k_large_t);
    CHECK(b2.c_m >= 1.0);

    CHECK(wb::eta_gap_bound(4.0, 1.0, 3.0));
    CHECK_THROWS_AS(wb::bound_suite(0.3, 1.0), DomainError);
}

TEST_CASE("large-argument derivative tail tracks exact values") {
    for (double nu : {0.0, 1.0, 2.5}) {
        for (double t : {30.0, 80.0, 200.0}) {
            const auto approx = wb::large_argument_derivs(nu, t);
            const auto d = wb::bessel_derivs(nu, t);
            CHECK(std::abs(approx.ip_approx - d.i_prime) / d.i_prime < 1e-5);
            CHECK(std::abs(approx.kp_approx - d.k_prime) / std::abs(d.k_prime) < 1e-5);
        }
    }
}
