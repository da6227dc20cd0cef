#include "wedge/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "wedge/errors.hpp"
#include "wedge/quadrature.hpp"

namespace wedge::bessel {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLnMax = 709.0;  // ln(DBL_MAX) with a little headroom
const double kSqrtPi = std::sqrt(std::numbers::pi);
}  // namespace

double gamma_fn(double a) {
    if (!(a > 0.0)) throw DomainError("gamma_fn: a must be > 0");
    if (a > 171.62) throw OverflowError("gamma_fn: overflow for a > 171.62");
    return std::tgamma(a);
}

double log_gamma(double a) {
    if (!(a > 0.0)) throw DomainError("log_gamma: a must be > 0");
    return std::lgamma(a);
}

std::string method_name(Method m) {
    switch (m) {
        case Method::series: return "series";
        case Method::integral_quadrature: return "integral-quadrature";
        case Method::uniform_asymptotic: return "uniform-asymptotic";
    }
    return "?";
}

namespace {

// ln I_nu(t) by the ascending series; accurate wherever the term ratio
// t^2/(4 k (nu+k)) falls below 1 quickly (we use it for t < max(1, nu/4)).
double log_i_series(double nu, double t) {
    if (t == 0.0) return nu == 0.0 ? 0.0 : -kInf;
    const double q = 0.25 * t * t;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 400; ++k) {
        term *= q / (k * (nu + k));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return nu * std::log(0.5 * t) - std::lgamma(nu + 1.0) + std::log(sum);
}

// ln I_nu(t) from the finite-interval integral representation,
//   I_nu(t) = 2 e^t (2t)^nu / (sqrt(pi) Gamma(nu+1/2)) *
//             int_0^1 e^{-2 t u^2} u^{2nu} (1-u^2)^{nu-1/2} du,
// after u = sin(phi), which removes the endpoint singularity:
//   int_0^{pi/2} e^{-2 t sin^2 phi} (sin phi cos phi)^{2 nu} dphi.
double log_i_integral(double nu, double t) {
    auto g = [&](double phi) {
        const double sp = std::sin(phi), cp = std::cos(phi);
        double v = -2.0 * t * sp * sp;
        if (nu > 0.0) {
            const double m = sp * cp;
            v += (m > 0.0) ? 2.0 * nu * std::log(m) : -kInf;
        }
        return v;
    };
    const double log_int = quad::tanh_sinh_log(g, 0.0, 0.5 * std::numbers::pi, 1e-14);
    return std::numbers::ln2 + t + nu * std::log(2.0 * t) - 0.5 * std::log(std::numbers::pi) -
           std::lgamma(nu + 0.5) + log_int;
}

// ln K_nu(t) from the semi-infinite integral representation,
//   K_nu(t) = sqrt(pi) e^{-t} / (sqrt(2t) Gamma(nu+1/2)) *
//             int_0^inf e^{-u} u^{nu-1/2} (1 + u/(2t))^{nu-1/2} du,
// after u = w^2 (removes the u^{-1/2} endpoint for nu < 1/2); the range is
// truncated at u = 50 + 20 nu where the integrand has decayed below 1e-18
// relative to its peak.
double log_k_integral(double nu, double t) {
    const double ucut = 50.0 + 20.0 * nu;
    const double wcut = std::sqrt(ucut);
    auto g = [&](double w) {
        const double u = w * w;
        double v = -u + std::log(2.0);
        if (w > 0.0)
            v += 2.0 * nu * std::log(w);
        else if (nu > 0.0)
            v = -kInf;
        v += (nu - 0.5) * std::log1p(u / (2.0 * t));
        return v;
    };
    const double log_int = quad::tanh_sinh_log(g, 0.0, wcut, 1e-14);
    return 0.5 * std::log(std::numbers::pi) - t - 0.5 * std::log(2.0 * t) -
           std::lgamma(nu + 0.5) + log_int;
}

struct LogIK {
    double log_i;
    double log_k;
    Method method_i;
    Method method_k;
};

LogIK log_ik(double nu, double t) {
    LogIK out{};
    if (t < std::max(1.0, 0.25 * nu)) {
        out.log_i = log_i_series(nu, t);
        out.method_i = Method::series;
    } else {
        out.log_i = log_i_integral(nu, t);
        out.method_i = Method::integral_quadrature;
    }
    out.log_k = log_k_integral(nu, t);
    out.method_k = Method::integral_quadrature;
    return out;
}

// log(a + b) given log a, log b (a, b >= 0).
double log_add(double la, double lb) {
    if (la == -kInf) return lb;
    if (lb == -kInf) return la;
    const double m = std::max(la, lb);
    return m + std::log1p(std::exp(std::min(la, lb) - m));
}

}  // namespace

ScaledIK eval_scaled_ik(double nu, double t) {
    if (nu < 0.0) throw DomainError("bessel: nu must be >= 0");
    if (!(t > 0.0)) throw DomainError("bessel: t must be > 0");
    const LogIK v = log_ik(nu, t);
    return {v.log_i, v.log_k};
}

ScaledPair eval_scaled(double nu, double t) {
    if (nu < 0.0) throw DomainError("bessel: nu must be >= 0");
    if (t < 0.0) throw DomainError("bessel: t must be >= 0");
    if (t == 0.0) throw DomainError("bessel: K and derivatives need t > 0");

    const LogIK main = log_ik(nu, t);
    const LogIK up = log_ik(nu + 1.0, t);      // I_{nu+1} for I'
    const double num1 = std::abs(nu - 1.0);    // K_{nu-1} = K_{|nu-1|}
    const double log_k_down = (num1 == nu) ? main.log_k : log_k_integral(num1, t);

    ScaledPair out{};
    out.log_i = main.log_i;
    out.log_k = main.log_k;
    // I'_nu = I_{nu+1} + (nu/t) I_nu ; both terms positive.
    out.log_ip = (nu == 0.0) ? up.log_i
                             : log_add(up.log_i, main.log_i + std::log(nu / t));
    // K'_nu = -K_{nu-1} - (nu/t) K_nu ; both magnitudes positive.
    out.log_kp_neg = (nu == 0.0) ? log_k_down
                                 : log_add(log_k_down, main.log_k + std::log(nu / t));
    out.method = main.method_i;

    // Error estimate from the Wronskian: t (I |K'| + I' K) = 1.
    const double lt = std::log(t);
    const double w1 = std::exp(out.log_i + out.log_kp_neg + lt);
    const double w2 = std::exp(out.log_ip + out.log_k + lt);
    out.est_rel_err = std::max(std::abs(w1 + w2 - 1.0) / std::max(1.0, w1 + w2), 1e-15);
    return out;
}

BesselEval eval(double nu, double t) {
    const ScaledPair s = eval_scaled(nu, t);
    if (s.log_i > kLnMax || s.log_k > kLnMax || s.log_ip > kLnMax || s.log_kp_neg > kLnMax)
        throw OverflowError("bessel: raw value exceeds double range; use eval_scaled");
    BesselEval out{};
    out.i_val = std::exp(s.log_i);
    out.k_val = std::exp(s.log_k);
    out.i_prime = std::exp(s.log_ip);
    out.k_prime = -std::exp(s.log_kp_neg);
    out.method = s.method;
    out.est_rel_err = s.est_rel_err;
    return out;
}

double bessel_i(double nu, double t) {
    if (nu < 0.0) throw DomainError("bessel_i: nu must be >= 0");
    if (t < 0.0) throw DomainError("bessel_i: t must be >= 0");
    if (t == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    const LogIK v = log_ik(nu, t);
    if (v.log_i > kLnMax) throw OverflowError("bessel_i: overflow; use eval_scaled");
    return std::exp(v.log_i);
}

double bessel_k(double nu, double t) {
    if (nu < 0.0) throw DomainError("bessel_k: nu must be >= 0");
    if (!(t > 0.0)) throw DomainError("bessel_k: t must be > 0");
    const double lk = log_k_integral(nu, t);
    if (lk > kLnMax) throw OverflowError("bessel_k: overflow; use eval_scaled");
    return std::exp(lk);
}

Derivs bessel_derivs(double nu, double t) {
    const BesselEval e = eval(nu, t);
    return {e.i_prime, e.k_prime};
}

double eta_fn(double t) {
    if (!(t > 0.0)) throw DomainError("eta_fn: t must be > 0");
    const double s = std::sqrt(1.0 + t * t);
    return s + std::log(t / (1.0 + s));
}

double tau_fn(double t) { return 1.0 / std::sqrt(1.0 + t * t); }

namespace {

// Polynomials in s with double coefficients: p[i] multiplies s^i.
using Poly = std::vector<double>;

Poly poly_deriv(const Poly& p) {
    Poly d(p.size() > 1 ? p.size() - 1 : 1, 0.0);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<double>(i);
    return d;
}

Poly poly_integrate(const Poly& p) {  // from 0 to s
    Poly q(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) q[i + 1] = p[i] / static_cast<double>(i + 1);
    return q;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

Poly poly_add(Poly a, const Poly& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0.0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

Poly poly_scale(Poly a, double c) {
    for (auto& v : a) v *= c;
    return a;
}

double poly_eval(const Poly& p, double s) {
    double v = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * s + p[i];
    return v;
}

// u_{k+1}(s) = 1/2 s^2 (1-s^2) u_k'(s) + 1/8 int_0^s (1 - 5 sigma^2) u_k(sigma) dsigma
// v_k(s)     = u_k(s) + s (s^2 - 1) (1/2 u_{k-1}(s) + s u_{k-1}'(s)),  u_0 = 1.
struct LargeOrderPolys {
    std::array<Poly, 4> u;
    std::array<Poly, 4> v;
    LargeOrderPolys() {
        u[0] = {1.0};
        const Poly half_s2_1ms2 = {0.0, 0.0, 0.5, 0.0, -0.5};  // 1/2 s^2 (1-s^2)
        const Poly one_m5s2 = {1.0, 0.0, -5.0};
        for (int k = 0; k < 3; ++k) {
            Poly a = poly_mul(half_s2_1ms2, poly_deriv(u[k]));
            Poly b = poly_scale(poly_integrate(poly_mul(one_m5s2, u[k])), 0.125);
            u[k + 1] = poly_add(a, b);
        }
        v[0] = {1.0};
        const Poly s3ms = {0.0, -1.0, 0.0, 1.0};  // s(s^2-1)
        for (int k = 1; k <= 3; ++k) {
            Poly inner = poly_add(poly_scale(u[k - 1], 0.5),
                                  poly_mul(Poly{0.0, 1.0}, poly_deriv(u[k - 1])));
            v[k] = poly_add(u[k], poly_mul(s3ms, inner));
        }
    }
};

const LargeOrderPolys& large_order_polys() {
    static const LargeOrderPolys p;
    return p;
}

}  // namespace

double u_poly(int k, double s) {
    if (k < 0 || k > 3) throw DomainError("u_poly: only k <= 3 are built");
    return poly_eval(large_order_polys().u[k], s);
}

double v_poly(int k, double s) {
    if (k < 0 || k > 3) throw DomainError("v_poly: only k <= 3 are built");
    return poly_eval(large_order_polys().v[k], s);
}

UniformAsymptotics uniform_large_order(double nu, double t_scaled) {
    if (!(nu > 0.0)) throw DomainError("uniform_large_order: nu must be > 0");
    if (!(t_scaled > 0.0)) throw DomainError("uniform_large_order: t must be > 0");
    UniformAsymptotics out{};
    out.eta = eta_fn(t_scaled);
    out.tau = tau_fn(t_scaled);
    double su_p = 1.0, su_m = 1.0, sv_p = 1.0, sv_m = 1.0;
    for (int k = 0; k <= 3; ++k) {
        out.u_coeffs[k] = u_poly(k, out.tau);
        out.v_coeffs[k] = v_poly(k, out.tau);
        if (k >= 1) {
            const double nk = std::pow(nu, -k);
            const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
            su_p += out.u_coeffs[k] * nk;
            su_m += sgn * out.u_coeffs[k] * nk;
            sv_p += out.v_coeffs[k] * nk;
            sv_m += sgn * out.v_coeffs[k] * nk;
        }
    }
    const double q = 1.0 + t_scaled * t_scaled;
    const double lq4 = 0.25 * std::log(q);
    const double half_l2pinu = 0.5 * std::log(2.0 * std::numbers::pi * nu);
    out.log_i_approx = nu * out.eta - lq4 - half_l2pinu + std::log(std::abs(su_p));
    out.log_k_approx = -nu * out.eta - lq4 + 0.5 * std::log(std::numbers::pi / (2.0 * nu)) +
                       std::log(std::abs(su_m));
    out.log_ip_approx =
        nu * out.eta + lq4 - std::log(t_scaled) - half_l2pinu + std::log(std::abs(sv_p));
    out.log_kp_neg_approx = -nu * out.eta + lq4 - std::log(t_scaled) +
                            0.5 * std::log(std::numbers::pi / (2.0 * nu)) +
                            std::log(std::abs(sv_m));
    auto unscale = [](double lg) { return lg > kLnMax ? kInf : std::exp(lg); };
    out.i_approx = unscale(out.log_i_approx);
    out.k_approx = unscale(out.log_k_approx);
    out.ip_approx = unscale(out.log_ip_approx);
    out.kp_approx = -unscale(out.log_kp_neg_approx);
    return out;
}

LargeArgDerivs large_argument_derivs(double nu, double t) {
    if (!(t > 0.0)) throw DomainError("large_argument_derivs: t must be > 0");
    const double mu = 4.0 * nu * nu;
    const double c1 = (mu + 3.0) / (8.0 * t);
    const double c2 = (mu - 1.0) * (mu + 15.0) / (2.0 * 64.0 * t * t);
    const double c3 = (mu - 1.0) * (mu - 9.0) * (mu + 35.0) / (6.0 * 512.0 * t * t * t);
    LargeArgDerivs out{};
    out.ip_approx = std::exp(t) / std::sqrt(2.0 * std::numbers::pi * t) * (1.0 - c1 + c2 - c3);
    out.kp_approx = -std::sqrt(std::numbers::pi / (2.0 * t)) * std::exp(-t) * (1.0 + c1 + c2 + c3);
    return out;
}

double k_bound_constant(double m_cap) {
    if (!(m_cap > 0.5)) throw DomainError("k_bound_constant: m_cap must exceed 1/2");
    // Ratio K_nu(t) / (sqrt(pi) e^-t / sqrt(2t)) is increasing in nu and
    // decreasing in t on (1/2, M] x [1, inf); sup at (M, 1).
    const double lk = eval_scaled(m_cap, 1.0).log_k;
    const double lbound = 0.5 * std::log(std::numbers::pi) - 1.0 - 0.5 * std::log(2.0);
    return std::exp(lk - lbound);
}

namespace {
double rel_margin(double bound_log, double value_log) {
    // (bound - value)/bound in log-safe form
    return 1.0 - std::exp(value_log - bound_log);
}
}  // namespace

BoundSuite bound_suite(double nu, double t, double m_cap, double margin_tol) {
    if (!(t > 0.0)) throw DomainError("bound_suite: t must be > 0");
    BoundSuite out{};
    out.worst_margin = kInf;
    auto note = [&](double margin) {
        out.worst_margin = std::min(out.worst_margin, margin);
        return margin >= -margin_tol;
    };

    if (nu == 0.0) {
        const ScaledPair s = eval_scaled(0.0, t);
        out.i0_le_exp = note(rel_margin(t, s.log_i));
        const double lb = 0.5 * std::log(std::numbers::pi) - t - 0.5 * std::log(2.0 * t);
        out.k0_le_gauss = note(rel_margin(lb, s.log_k));
        return out;
    }
    if (!(nu > 0.5)) throw DomainError("bound_suite: region needs nu = 0 or nu > 1/2");

    const ScaledPair s = eval_scaled(nu, t);
    if (t < 1.0) {
        const double lbi = t + nu * std::log(0.5 * t) - std::lgamma(nu + 1.0);
        out.i_small_t = note(rel_margin(lbi, s.log_i));
        const double lbk = t + std::lgamma(nu) + (nu - 1.0) * std::numbers::ln2 - nu * std::log(t);
        out.k_small_t = note(rel_margin(lbk, s.log_k));
    } else {
        const double lbi = t - 0.5 * std::log(2.0 * std::numbers::pi * t);
        out.i_large_t = note(rel_margin(lbi, s.log_i));
        if (nu <= m_cap) {
            out.c_m = k_bound_constant(m_cap);
            const double lbk = std::log(out.c_m) + 0.5 * std::log(std::numbers::pi) - t -
                               0.5 * std::log(2.0 * t);
            out.k_large_t = note(rel_margin(lbk, s.log_k));
        }
    }
    return out;
}

bool eta_gap_bound(double nu, double t1, double t2, double margin_tol) {
    if (!(t1 > 0.0) || !(t2 >= t1)) throw DomainError("eta_gap_bound: need 0 < t1 <= t2");
    // nu(eta(t1) - eta(t2)) <= -nu (t2 - t1)
    const double lhs = nu * (eta_fn(t1) - eta_fn(t2));
    const double rhs = -nu * (t2 - t1);
    return lhs <= rhs + margin_tol * std::max(1.0, std::abs(rhs));
}

}  // namespace wedge::bessel
