#pragma once

#include <optional>
#include <vector>

namespace wedge::shock {

/// Polytropic gas P = A rho^gamma, 1 < gamma < 3.
struct GasParams {
    double gamma;
    double a_const;
    double rho0;
};

struct UpstreamState {
    double q0;
    double bernoulli_c0;  ///< C0 = q0^2/2 + h(rho0)
};

struct WedgeGeometry {
    double b0;      ///< ramp slope
    double theta0;  ///< arctan(b0)
};

WedgeGeometry make_geometry(double b0);

double sound_speed(const GasParams& gas, double rho);
double enthalpy(const GasParams& gas, double rho);
double inverse_enthalpy(const GasParams& gas, double h_val);
UpstreamState upstream(const GasParams& gas, double q0);

/// The uniform downstream transonic state behind the attached plane shock
/// x3 = s0 x1, strong branch (subsonic downstream).
struct BackgroundState {
    double s0;         ///< shock slope
    double alpha;      ///< density ratio rho+/rho0
    double rho_plus;
    double u1_plus;
    double u3_plus;
    double c_plus_sq;
    double residual;   ///< max scaled residual of the four coupled equations
    std::optional<double> weak_branch_s0;  ///< diagnostic, when detected
};

/// Exact solve by damped Newton in (log alpha, log s0) with the asymptotic
/// state as the initial guess; bisection fallback on alpha with s0 eliminated.
/// Throws NoRootError / EntropyError / NotSubsonicError.
BackgroundState solve_background(const GasParams& gas, double q0, const WedgeGeometry& geom);

/// Leading-order state with the O(.) corrections dropped, plus the predicted
/// magnitude exponents d(log .)/d(log q0) of the small quantities.
struct AsymptoticBackground {
    BackgroundState leading;
    double u1_exponent;      ///< (gamma-3)/(gamma-1)
    double u3_exponent;      ///< (gamma-3)/(gamma-1)
    double mach_gap_scale;   ///< (q+)^2 - c+^2 ~ -(gamma-1)/2 q0^2
};

AsymptoticBackground asymptotic_background(const GasParams& gas, double q0,
                                           const WedgeGeometry& geom);

/// Max scaled residual of system (mass flux / tangency / Bernoulli / ramp slip).
double background_residual(const GasParams& gas, double q0, const WedgeGeometry& geom,
                           const BackgroundState& st);

/// Smallest q0 in a geometric sweep down from q0_hi at which the strong
/// branch still exists; empirical report, no claim about the true threshold.
std::optional<double> smallest_strong_q0(const GasParams& gas, const WedgeGeometry& geom,
                                         double q0_hi, double ratio = 1.25);

}  // namespace wedge::shock
