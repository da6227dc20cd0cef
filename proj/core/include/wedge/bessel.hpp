#pragma once

#include <array>
#include <string>

namespace wedge::bessel {

/// Gamma function for a > 0 (throws DomainError otherwise, OverflowError past
/// the double range at a > 171.6).
double gamma_fn(double a);
double log_gamma(double a);

enum class Method { series, integral_quadrature, uniform_asymptotic };
std::string method_name(Method m);

struct BesselArgs {
    double nu;  ///< order, nu >= 0
    double t;   ///< argument, t > 0 for K, t >= 0 for I
};

/// Log-scaled evaluation of the modified Bessel pair at (nu, t).
///
/// All four functions are of one sign for t > 0 (I, I' > 0; K > 0, K' < 0),
/// so their natural logs are carried instead of raw values.  This is what the
/// spectral solver consumes: ratios like K'(nL)/I'(nL) at nL ~ 1e3 combine
/// exponents without ever forming an overflowing intermediate.
struct ScaledPair {
    double log_i;        ///< ln I_nu(t)        (-inf when I = 0, i.e. t = 0, nu > 0)
    double log_k;        ///< ln K_nu(t)
    double log_ip;       ///< ln I'_nu(t)
    double log_kp_neg;   ///< ln(-K'_nu(t))
    Method method;
    double est_rel_err;
};

ScaledPair eval_scaled(double nu, double t);

/// Values only (no derivatives): half the quadrature work of eval_scaled.
struct ScaledIK {
    double log_i;
    double log_k;
};
ScaledIK eval_scaled_ik(double nu, double t);

/// Raw values; throws OverflowError when unscaling exceeds the double range.
struct BesselEval {
    double i_val;
    double k_val;
    double i_prime;
    double k_prime;
    Method method;
    double est_rel_err;
};

BesselEval eval(double nu, double t);
double bessel_i(double nu, double t);
double bessel_k(double nu, double t);

struct Derivs {
    double i_prime;
    double k_prime;
};
Derivs bessel_derivs(double nu, double t);

// --- uniform large-order expansion machinery ---

double eta_fn(double t);  ///< sqrt(1+t^2) + ln(t / (1 + sqrt(1+t^2))), t > 0
double tau_fn(double t);  ///< 1/sqrt(1+t^2)

/// The expansion of I_nu(nu t), K_nu(nu t) and their derivatives with
/// correction terms k <= 3, built from the u_{k+1}/v_k polynomial recursion.
struct UniformAsymptotics {
    double eta;
    double tau;
    std::array<double, 4> u_coeffs;  ///< u_0..u_3 evaluated at tau
    std::array<double, 4> v_coeffs;  ///< v_0(=1), v_1..v_3 evaluated at tau
    double i_approx;                 ///< exp(log_i_approx), inf if out of range
    double k_approx;
    double ip_approx;
    double kp_approx;                ///< negative
    double log_i_approx;
    double log_k_approx;
    double log_ip_approx;
    double log_kp_neg_approx;
};

UniformAsymptotics uniform_large_order(double nu, double t_scaled);

/// Evaluate the large-order polynomial u_k / v_k at s (k <= 3); exposed for
/// checking the printed recursion against hand expansions.
double u_poly(int k, double s);
double v_poly(int k, double s);

/// 3-term large-argument tail for I'_nu, K'_nu (divergent series, truncated).
struct LargeArgDerivs {
    double ip_approx;
    double kp_approx;
};
LargeArgDerivs large_argument_derivs(double nu, double t);

// --- bound suite ---

/// Each predicate mirrors one inequality hypothesis region; requesting a
/// predicate outside its region throws DomainError.  Margins are relative:
/// (bound - value) / |bound| >= -margin_tol passes.
struct BoundSuite {
    bool i0_le_exp;          ///< (iii)(a): I_0(t) <= e^t                       [nu = 0]
    bool k0_le_gauss;        ///< (iii)(b): K_0(t) <= sqrt(pi) e^-t / sqrt(2t)  [nu = 0]
    bool i_small_t;          ///< (iv)(a):  I_nu <= e^t (t/2)^nu / Gamma(nu+1)  [nu>1/2, t<1]
    bool k_small_t;          ///< (iv)(b):  K_nu <= e^t Gamma(nu) 2^{nu-1}/t^nu [nu>1/2, t<1]
    bool i_large_t;          ///< (v):      I_nu <= e^t / sqrt(2 pi t)          [nu>1/2, t>=1]
    bool k_large_t;          ///< (vi):     K_nu <= C_M sqrt(pi) e^-t/sqrt(2t)  [1/2<nu<=M, t>=1]
    double c_m;              ///< the computed constant used in (vi)
    double worst_margin;     ///< most negative relative margin over evaluated predicates
};

/// which: bitmask of hypothesis regions to check, or all that apply when 0.
BoundSuite bound_suite(double nu, double t, double m_cap = 64.0, double margin_tol = 1e-9);

/// (ix): for t1 <= t2, exp(nu*eta(t1) - nu*eta(t2)) <= exp(-nu (t2-t1)).
bool eta_gap_bound(double nu, double t1, double t2, double margin_tol = 1e-9);

/// Constant of bound (vi): max of K_nu(t) / (sqrt(pi) e^-t / sqrt(2t)) over
/// (1/2, m_cap] x [1, inf); the ratio is increasing in nu and decreasing in t,
/// so it is attained at (m_cap, 1).
double k_bound_constant(double m_cap);

}  // namespace wedge::bessel
