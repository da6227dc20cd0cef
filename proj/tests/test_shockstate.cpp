#include <doctest.h>

#include <cmath>
#include <vector>

#include "wedge/errors.hpp"
#include "wedge/shockstate.hpp"

using namespace wedge;
using namespace wedge::shock;

TEST_CASE("sound speed and enthalpy closed forms") {
    GasParams gas{2.0, 1.0, 1.0};
    CHECK(sound_speed(gas, 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(sound_speed(gas, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(enthalpy(gas, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    // c^2/(gamma-1) == h identically
    for (double r : {0.3, 1.0, 5.0}) {
        const double c = sound_speed(gas, r);
        CHECK(c * c / (gas.gamma - 1.0) == doctest::Approx(enthalpy(gas, r)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(enthalpy(gas, 0.0), DomainError);
    CHECK_THROWS_AS(sound_speed(gas, -1.0), DomainError);
}

TEST_CASE("enthalpy round trip and monotone limit") {
    GasParams gas{1.4, 0.7, 1.3};
    for (double r = 0.1; r <= 100.0; r *= 2.3) {
        CHECK(inverse_enthalpy(gas, enthalpy(gas, r)) == doctest::Approx(r).epsilon(1e-12));
    }
    double prev = enthalpy(gas, 1.0);
    for (double r = 0.5; r > 1e-8; r *= 0.5) {
        const double h = enthalpy(gas, r);
        CHECK(h < prev);
        prev = h;
    }
    CHECK(prev < 1e-2);
}

TEST_CASE("background state solves the full system") {
    GasParams gas{1.4, 1.0, 1.0};
    const auto geom = make_geometry(0.1);
    const auto st = solve_background(gas, 10.0, geom);
    CHECK(st.residual <= 1e-12);
    CHECK(st.rho_plus > 1.0);
    CHECK(st.u3_plus == doctest::Approx(0.1 * st.u1_plus).epsilon(1e-10));
    CHECK(st.s0 > geom.b0);
    CHECK(st.u1_plus * st.u1_plus + st.u3_plus * st.u3_plus < st.c_plus_sq);
    // alpha = 1 solves the jump equation trivially but must never be returned
    CHECK(st.alpha > 1.0 + 1e-3);
}

TEST_CASE("background residual across gammas and slopes") {
    for (double gamma : {1.2, 1.4, 2.0}) {
        for (double b0 : {0.05, 0.1}) {
            GasParams gas{gamma, 1.0, 1.0};
            const auto geom = make_geometry(b0);
            for (double q0 = 10.0; q0 <= 1.1e5; q0 *= 10.0) {
                const auto st = solve_background(gas, q0, geom);
                CHECK(st.residual <= 1e-12);
                CHECK(st.rho_plus > gas.rho0);
            }
        }
    }
}

TEST_CASE("asymptotic leading terms converge along a q0 sweep") {
    GasParams gas{1.4, 1.0, 1.0};
    const auto geom = make_geometry(0.1);
    // spec arithmetic: s0_leading(q0=10) = 10 * (1/7)^2.5 * 1e5
    const auto a10 = asymptotic_background(gas, 10.0, geom);
    CHECK(a10.leading.s0 ==
          doctest::Approx(10.0 * std::pow(1.0 / 7.0, 2.5) * 1e5).epsilon(1e-12));

    double prev_gap = 1e300;
    for (double q0 : {10.0, 30.0, 100.0, 300.0}) {
        const auto st = solve_background(gas, q0, geom);
        const auto asym = asymptotic_background(gas, q0, geom);
        const double ratio = st.s0 / asym.leading.s0;
        const double gap = std::abs(ratio - 1.0);
        CHECK(gap < prev_gap);  // monotone trend toward 1
        prev_gap = gap;
    }

    // c^2(rho+)/q0^2 -> (gamma-1)/2
    const auto big = solve_background(gas, 1e4, geom);
    CHECK(big.c_plus_sq / 1e8 == doctest::Approx(0.2).epsilon(1e-3));
}

TEST_CASE("u1 magnitude exponent matches Lemma trend") {
    GasParams gas{1.4, 1.0, 1.0};
    const auto geom = make_geometry(0.1);
    // log-log slope of u1+ over a decade sweep ~ (gamma-3)/(gamma-1) = -4
    std::vector<double> lq, lu;
    for (double q0 = 30.0; q0 <= 3.1e4; q0 *= 10.0) {
        const auto st = solve_background(gas, q0, geom);
        lq.push_back(std::log(q0));
        lu.push_back(std::log(st.u1_plus));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = lq.size();
    for (std::size_t i = 0; i < lq.size(); ++i) {
        sx += lq[i]; sy += lu[i]; sxx += lq[i] * lq[i]; sxy += lq[i] * lu[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(std::abs(slope - (-4.0)) < 0.2);
}

TEST_CASE("failure modes are reported") {
    GasParams gas{1.4, 1.0, 1.0};
    const auto geom = make_geometry(0.1);
    CHECK_THROWS_AS(solve_background(gas, 0.5, geom), DomainError);  // subsonic upstream
    CHECK_THROWS_AS(make_geometry(0.0), DomainError);
    const auto qmin = smallest_strong_q0(gas, geom, 100.0);
    REQUIRE(qmin.has_value());
    CHECK(*qmin < 100.0);
}
