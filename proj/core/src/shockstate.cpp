#include "wedge/shockstate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wedge/errors.hpp"

namespace wedge::shock {

WedgeGeometry make_geometry(double b0) {
    if (!(b0 > 0.0)) throw DomainError("make_geometry: b0 must be > 0");
    return {b0, std::atan(b0)};
}

double sound_speed(const GasParams& gas, double rho) {
    if (!(rho > 0.0)) throw DomainError("sound_speed: rho must be > 0");
    return std::sqrt(gas.a_const * gas.gamma * std::pow(rho, gas.gamma - 1.0));
}

double enthalpy(const GasParams& gas, double rho) {
    if (!(rho > 0.0)) throw DomainError("enthalpy: rho must be > 0");
    return gas.a_const * gas.gamma * std::pow(rho, gas.gamma - 1.0) / (gas.gamma - 1.0);
}

double inverse_enthalpy(const GasParams& gas, double h_val) {
    if (!(h_val > 0.0)) throw VacuumError("inverse_enthalpy: non-positive enthalpy");
    return std::pow(h_val * (gas.gamma - 1.0) / (gas.a_const * gas.gamma),
                    1.0 / (gas.gamma - 1.0));
}

UpstreamState upstream(const GasParams& gas, double q0) {
    return {q0, 0.5 * q0 * q0 + enthalpy(gas, gas.rho0)};
}

namespace {

// Strong-branch slope from the ramp condition: b0 s0^2 - (alpha-1) s0 + alpha b0 = 0.
std::optional<double> strong_s0(double alpha, double b0) {
    const double disc = (alpha - 1.0) * (alpha - 1.0) - 4.0 * alpha * b0 * b0;
    if (disc < 0.0) return std::nullopt;
    return ((alpha - 1.0) + std::sqrt(disc)) / (2.0 * b0);
}

std::optional<double> weak_s0(double alpha, double b0) {
    const double disc = (alpha - 1.0) * (alpha - 1.0) - 4.0 * alpha * b0 * b0;
    if (disc < 0.0) return std::nullopt;
    return ((alpha - 1.0) - std::sqrt(disc)) / (2.0 * b0);
}

// Density-jump equation with s0 eliminated:
//   alpha^{gamma-1} - 1 - Cq (1 - 1/(1+s0^2)) (1 - 1/alpha^2) = 0.
double alpha_equation(double alpha, double b0, double cq, double gamma) {
    const auto s0 = strong_s0(alpha, b0);
    if (!s0) return std::numeric_limits<double>::quiet_NaN();
    const double s2 = *s0 * *s0;
    return std::pow(alpha, gamma - 1.0) - 1.0 -
           cq * (s2 / (1.0 + s2)) * (1.0 - 1.0 / (alpha * alpha));
}

BackgroundState fill_state(const GasParams& gas, double q0, const WedgeGeometry& geom,
                           double alpha, double s0) {
    BackgroundState st{};
    st.alpha = alpha;
    st.s0 = s0;
    st.rho_plus = alpha * gas.rho0;
    const double s2 = s0 * s0;
    st.u3_plus = s0 * q0 * (1.0 - 1.0 / alpha) / (1.0 + s2);
    st.u1_plus = q0 / (1.0 + s2) + s2 * q0 / ((1.0 + s2) * alpha);
    st.c_plus_sq = gas.a_const * gas.gamma * std::pow(st.rho_plus, gas.gamma - 1.0);
    if (auto w = weak_s0(alpha, geom.b0)) st.weak_branch_s0 = *w;
    return st;
}

}  // namespace

double background_residual(const GasParams& gas, double q0, const WedgeGeometry& geom,
                           const BackgroundState& st) {
    const double rho0 = gas.rho0, b0 = geom.b0;
    const double c0 = 0.5 * q0 * q0 + enthalpy(gas, rho0);
    const double e1 = st.s0 * (st.rho_plus * st.u1_plus - rho0 * q0) - st.rho_plus * st.u3_plus;
    const double n1 = std::abs(st.s0 * st.rho_plus * st.u1_plus) +
                      std::abs(st.s0 * rho0 * q0) + std::abs(st.rho_plus * st.u3_plus);
    const double e2 = st.u1_plus - q0 + st.s0 * st.u3_plus;
    const double n2 = std::abs(q0) + std::abs(st.s0 * st.u3_plus);
    const double e3 =
        0.5 * (st.u1_plus * st.u1_plus + st.u3_plus * st.u3_plus) + enthalpy(gas, st.rho_plus) - c0;
    const double n3 = std::abs(c0);
    const double e4 = st.u3_plus - b0 * st.u1_plus;
    const double n4 = std::abs(st.u3_plus) + std::abs(b0 * st.u1_plus);
    double r = 0.0;
    r = std::max(r, std::abs(e1) / std::max(n1, 1e-300));
    r = std::max(r, std::abs(e2) / std::max(n2, 1e-300));
    r = std::max(r, std::abs(e3) / std::max(n3, 1e-300));
    r = std::max(r, std::abs(e4) / std::max(n4, 1e-300));
    return r;
}

AsymptoticBackground asymptotic_background(const GasParams& gas, double q0,
                                           const WedgeGeometry& geom) {
    const double g = gas.gamma;
    const double e = 1.0 / (g - 1.0);
    const double base = std::pow((g - 1.0) / (2.0 * gas.a_const * g), e) * std::pow(q0, 2.0 * e);
    AsymptoticBackground out{};
    out.leading.alpha = std::pow(gas.rho0, -1.0) * base;  // rho+ = base independent of rho0
    out.leading.rho_plus = base;
    out.leading.s0 = base / (geom.b0 * gas.rho0);
    out.leading.c_plus_sq = 0.5 * (g - 1.0) * q0 * q0;
    // velocities from (2.6) at leading order: u1 ~ q0/alpha + q0/s0^2
    out.leading.u1_plus = q0 / out.leading.alpha + q0 / (out.leading.s0 * out.leading.s0);
    out.leading.u3_plus = geom.b0 * out.leading.u1_plus;
    out.leading.residual = std::numeric_limits<double>::quiet_NaN();
    out.u1_exponent = (g - 3.0) / (g - 1.0);
    out.u3_exponent = (g - 3.0) / (g - 1.0);
    out.mach_gap_scale = -0.5 * (g - 1.0) * q0 * q0;
    return out;
}

BackgroundState solve_background(const GasParams& gas, double q0, const WedgeGeometry& geom) {
    if (!(gas.gamma > 1.0 && gas.gamma < 3.0)) throw DomainError("gamma must lie in (1,3)");
    if (!(q0 > sound_speed(gas, gas.rho0)))
        throw DomainError("solve_background: upstream must be supersonic");
    const double b0 = geom.b0, g = gas.gamma;
    const double cq = std::pow(gas.rho0, 1.0 - g) * (g - 1.0) * q0 * q0 / (2.0 * gas.a_const * g);

    // Newton on (log alpha, log s0) for
    //   E1 = (gamma-1) log(alpha) - log(1 + cq (1-1/(1+s0^2)) (1-1/alpha^2))
    //   E2 = b0 s0^2 - (alpha-1) s0 + alpha b0   (scaled by s0^2 b0)
    const auto asym = asymptotic_background(gas, q0, geom);
    double la = std::log(std::max(asym.leading.alpha, 1.0 + 1e-3));
    double ls = std::log(std::max(asym.leading.s0, 2.0 * b0));
    bool newton_ok = false;
    for (int it = 0; it < 200; ++it) {
        const double a = std::exp(la), s = std::exp(ls);
        const double s2 = s * s;
        const double inner = 1.0 + cq * (s2 / (1.0 + s2)) * (1.0 - 1.0 / (a * a));
        const double e1 = (g - 1.0) * la - std::log(inner);
        const double e2 = (b0 * s2 - (a - 1.0) * s + a * b0) / (b0 * s2);
        // partials wrt (la, ls)
        const double dinner_da = cq * (s2 / (1.0 + s2)) * (2.0 / (a * a)) * a;  // * da/dla = a folded
        const double dinner_ds = cq * (1.0 - 1.0 / (a * a)) * (2.0 * s / ((1.0 + s2) * (1.0 + s2))) * s;
        const double j11 = (g - 1.0) - dinner_da / inner;
        const double j12 = -dinner_ds / inner;
        const double j21 = (-s + b0) * a / (b0 * s2);
        const double j22 = ((a - 1.0) * s - 2.0 * a * b0) / (b0 * s2);
        const double det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-300) break;
        double dla = (-e1 * j22 + e2 * j12) / det;
        double dls = (-j11 * e2 + j21 * e1) / det;
        const double cap = 0.5;
        dla = std::clamp(dla, -cap, cap);
        dls = std::clamp(dls, -cap, cap);
        la += dla;
        ls += dls;
        if (std::abs(dla) + std::abs(dls) < 1e-15) {
            newton_ok = true;
            break;
        }
    }

    double alpha = std::exp(la);
    BackgroundState st{};
    if (newton_ok && std::isfinite(alpha) && alpha > 1.0) {
        st = fill_state(gas, q0, geom, alpha, std::exp(ls));
    } else {
        // Bisection fallback on alpha with s0 eliminated through the ramp quadratic.
        double lo = 1.0 + 1e-12, hi = std::max(4.0 * asym.leading.alpha, 64.0);
        while (!strong_s0(lo, b0) && lo < hi) lo = 1.0 + 2.0 * (lo - 1.0) + 1e-12;
        double flo = alpha_equation(lo, b0, cq, g);
        double fhi = alpha_equation(hi, b0, cq, g);
        if (!(std::isfinite(flo) && std::isfinite(fhi)) || flo * fhi > 0.0)
            throw NoRootError("solve_background: no bracket for alpha in (" +
                              std::to_string(lo) + ", " + std::to_string(hi) +
                              "); f(lo)=" + std::to_string(flo) +
                              " f(hi)=" + std::to_string(fhi));
        for (int it = 0; it < 400; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = alpha_equation(mid, b0, cq, g);
            if (fm == 0.0 || (hi - lo) < 1e-16 * hi) break;
            if (flo * fm <= 0.0) {
                hi = mid;
            } else {
                lo = mid;
                flo = fm;
            }
        }
        alpha = 0.5 * (lo + hi);
        const auto s0 = strong_s0(alpha, b0);
        if (!s0) throw NoRootError("solve_background: ramp quadratic lost its real root");
        st = fill_state(gas, q0, geom, alpha, *s0);
    }

    st.residual = background_residual(gas, q0, geom, st);
    if (!(st.rho_plus > gas.rho0))
        throw EntropyError("solve_background: entropy condition rho+ > rho0 failed");
    if (!(st.u1_plus * st.u1_plus + st.u3_plus * st.u3_plus < st.c_plus_sq))
        throw NotSubsonicError("solve_background: downstream state is not subsonic");
    if (!(st.s0 > geom.b0)) throw NoRootError("solve_background: s0 <= b0");
    if (!(st.residual < 1e-10))
        throw NoRootError("solve_background: residual " + std::to_string(st.residual));
    return st;
}

std::optional<double> smallest_strong_q0(const GasParams& gas, const WedgeGeometry& geom,
                                         double q0_hi, double ratio) {
    std::optional<double> best;
    double q = q0_hi;
    const double qmin = sound_speed(gas, gas.rho0) * (1.0 + 1e-9);
    while (q > qmin) {
        try {
            (void)solve_background(gas, q, geom);
            best = q;
        } catch (const std::exception&) {
            break;
        }
        q /= ratio;
    }
    return best;
}

}  // namespace wedge::shock
