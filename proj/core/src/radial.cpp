#include "wedge/radial.hpp"

#include <algorithm>
#include <cmath>

#include "wedge/bessel.hpp"
#include "wedge/errors.hpp"
#include "wedge/threading.hpp"

namespace wedge::spectral {

RadialProfile::RadialProfile(std::shared_ptr<const std::vector<double>> grid,
                             std::vector<double> val, std::vector<double> dval,
                             std::vector<double> d2val, double at0)
    : grid_(std::move(grid)),
      val_(std::move(val)),
      dval_(std::move(dval)),
      d2val_(std::move(d2val)),
      at0_(at0) {}

std::size_t RadialProfile::locate(double r) const {
    const auto& g = *grid_;
    auto it = std::upper_bound(g.begin(), g.end(), r);
    if (it == g.begin()) return 0;
    std::size_t k = static_cast<std::size_t>(it - g.begin()) - 1;
    return std::min(k, g.size() - 2);
}

namespace {
// two-point quintic Hermite coefficients on t in [0,1]
struct Quintic {
    double v0, D0, S0, c3, c4, c5, h;
};
Quintic make_quintic(double a, double b, double v0, double d0, double s0, double v1, double d1,
                     double s1) {
    Quintic q{};
    q.h = b - a;
    q.v0 = v0;
    q.D0 = d0 * q.h;
    q.S0 = s0 * q.h * q.h;
    const double D1 = d1 * q.h, S1 = s1 * q.h * q.h;
    const double A = v1 - v0 - q.D0 - 0.5 * q.S0;
    const double B = D1 - q.D0 - q.S0;
    const double C = S1 - q.S0;
    q.c3 = 10.0 * A - 4.0 * B + 0.5 * C;
    q.c4 = -15.0 * A + 7.0 * B - C;
    q.c5 = 6.0 * A - 3.0 * B + 0.5 * C;
    return q;
}
}  // namespace

double RadialProfile::value(double r) const {
    if (empty()) return at0_;
    const auto& g = *grid_;
    if (r <= 0.0) return at0_;
    if (r >= g.back()) return val_.back();
    if (r < g.front()) {  // linear blend below the first node
        const double t = r / g.front();
        return at0_ + t * (val_.front() - at0_);
    }
    const std::size_t k = locate(r);
    const auto q = make_quintic(g[k], g[k + 1], val_[k], dval_[k], d2val_[k], val_[k + 1],
                                dval_[k + 1], d2val_[k + 1]);
    const double t = (r - g[k]) / q.h;
    return q.v0 + t * (q.D0 + t * (0.5 * q.S0 + t * (q.c3 + t * (q.c4 + t * q.c5))));
}

double RadialProfile::deriv(double r) const {
    if (empty()) return 0.0;
    const auto& g = *grid_;
    if (r >= g.back()) return dval_.back();
    if (r < g.front()) return (val_.front() - at0_) / g.front();
    const std::size_t k = locate(r);
    const auto q = make_quintic(g[k], g[k + 1], val_[k], dval_[k], d2val_[k], val_[k + 1],
                                dval_[k + 1], d2val_[k + 1]);
    const double t = (r - g[k]) / q.h;
    return (q.D0 + t * (q.S0 + t * (3.0 * q.c3 + t * (4.0 * q.c4 + t * 5.0 * q.c5)))) / q.h;
}

double RadialProfile::deriv2(double r) const {
    if (empty()) return 0.0;
    const auto& g = *grid_;
    if (r >= g.back()) return d2val_.back();
    if (r < g.front()) return 0.0;
    const std::size_t k = locate(r);
    const auto q = make_quintic(g[k], g[k + 1], val_[k], dval_[k], d2val_[k], val_[k + 1],
                                dval_[k + 1], d2val_[k + 1]);
    const double t = (r - g[k]) / q.h;
    return (q.S0 + t * (6.0 * q.c3 + t * (12.0 * q.c4 + t * 20.0 * q.c5))) / (q.h * q.h);
}

void RadialProfile::shift(double c) {
    at0_ += c;
    for (auto& v : val_) v += c;
}

RadialWorkspace::RadialWorkspace(const WedgeDomain& dom, const Truncation& trunc, int grid_nodes)
    : dom_(dom), trunc_(trunc) {
    auto grid = radial_grid(dom, grid_nodes);
    grid_ = std::make_shared<const std::vector<double>>(std::move(grid));
    std::vector<double> edges;
    edges.reserve(grid_->size() + 1);
    edges.push_back(0.0);
    edges.insert(edges.end(), grid_->begin(), grid_->end());
    const auto rule = quad::composite_gl(edges, quad::gl8());
    qnodes_ = rule.nodes;
    qweights_ = rule.weights;
    pts_per_cell_ = 8;
    all_nodes_ = qnodes_;
    all_nodes_.insert(all_nodes_.end(), grid_->begin(), grid_->end());
    log_qnodes_.resize(qnodes_.size());
    for (std::size_t q = 0; q < qnodes_.size(); ++q) log_qnodes_[q] = std::log(qnodes_[q]);
    log_gnodes_.resize(grid_->size());
    for (std::size_t k = 0; k < grid_->size(); ++k) log_gnodes_[k] = std::log((*grid_)[k]);

    // Bessel kernel tables per (m, n); parallel, entries independent.
    kernels_.resize(static_cast<std::size_t>(trunc_.m_max + 1) * trunc_.n_max);
    threads::parallel_for(kernels_.size(), [&](std::size_t idx) {
        const int m = static_cast<int>(idx) / trunc_.n_max;
        const int n = static_cast<int>(idx) % trunc_.n_max + 1;
        const double nu = sqrt_mu(dom_.theta0, m);
        Kernel& ker = kernels_[idx];
        ker.li_q.resize(qnodes_.size());
        ker.lk_q.resize(qnodes_.size());
        for (std::size_t q = 0; q < qnodes_.size(); ++q) {
            const auto ik = bessel::eval_scaled_ik(nu, n * qnodes_[q]);
            ker.li_q[q] = ik.log_i;
            ker.lk_q[q] = ik.log_k;
        }
        const std::size_t ng = grid_->size();
        ker.li_g.resize(ng);
        ker.lk_g.resize(ng);
        ker.lip_g.resize(ng);
        ker.lkp_g.resize(ng);
        for (std::size_t k = 0; k < ng; ++k) {
            const auto s = bessel::eval_scaled(nu, n * (*grid_)[k]);
            ker.li_g[k] = s.log_i;
            ker.lk_g[k] = s.log_k;
            ker.lip_g[k] = s.log_ip;
            ker.lkp_g[k] = s.log_kp_neg;
        }
        ker.li_L = ker.li_g.back();
        ker.lip_L = ker.lip_g.back();
        ker.lkp_L = ker.lkp_g.back();
    });
}

const RadialWorkspace::Kernel& RadialWorkspace::kernel(int m, int n) const {
    if (m < 0 || m > trunc_.m_max || n < 1 || n > trunc_.n_max)
        throw DomainError("RadialWorkspace::kernel: mode outside truncation");
    return kernels_[static_cast<std::size_t>(m) * trunc_.n_max + (n - 1)];
}

double RadialWorkspace::compat_defect(std::span<const double> f00, double c_L) const {
    double a = 0.0;
    for (std::size_t q = 0; q < qnodes_.size(); ++q)
        a += qweights_[q] * qnodes_[q] * f00[q];
    return dom_.L * c_L - a;
}

RadialProfile RadialWorkspace::radial_00(std::span<const double> f, double c_L,
                                         double pinned_edge_value, double compat_tol_abs) const {
    const auto& g = *grid_;
    const std::size_t ng = g.size();
    const int ppc = pts_per_cell_;
    std::vector<double> A(ng, 0.0), T(ng, 0.0);
    double a_run = 0.0, t_run = 0.0;
    for (std::size_t k = 0; k < ng; ++k) {
        if (k > 0) t_run += std::log(g[k] / g[k - 1]) * a_run;
        double cell_a = 0.0, cell_t = 0.0;
        const double lgk = log_gnodes_[k];
        for (int j = 0; j < ppc; ++j) {
            const std::size_t q = k * ppc + j;
            const double wsf = qweights_[q] * qnodes_[q] * f[q];
            cell_a += wsf;
            cell_t += wsf * (lgk - log_qnodes_[q]);
        }
        a_run += cell_a;
        t_run += cell_t;
        A[k] = a_run;
        T[k] = t_run;
    }
    const double defect = dom_.L * c_L - a_run;
    if (std::abs(defect) > compat_tol_abs)
        throw CompatibilityError("radial_00: outer closure incompatible, C00^2 = " +
                                 std::to_string(defect));
    std::vector<double> val(ng), dval(ng), d2(ng);
    for (std::size_t k = 0; k < ng; ++k) {
        val[k] = pinned_edge_value + T[k];
        dval[k] = A[k] / g[k];
        d2[k] = f[qnodes_.size() + k] - dval[k] / g[k];
    }
    return RadialProfile(grid_, std::move(val), std::move(dval), std::move(d2),
                         pinned_edge_value);
}

RadialProfile RadialWorkspace::radial_m0(std::span<const double> f, int m) const {
    if (m < 1) throw DomainError("radial_m0: m >= 1");
    const double nu = sqrt_mu(dom_.theta0, m);
    const auto& g = *grid_;
    const std::size_t ng = g.size();
    const int ppc = pts_per_cell_;
    const double logL = log_gnodes_.back();

    double W = 0.0;
    for (std::size_t q = 0; q < qnodes_.size(); ++q)
        W += qweights_[q] * qnodes_[q] * f[q] * std::exp(nu * (log_qnodes_[q] - logL));

    std::vector<double> P1(ng), P2(ng), P3(ng);
    for (std::size_t k = 0; k < ng; ++k) P1[k] = std::exp(nu * (log_gnodes_[k] - logL)) * W;

    double run = 0.0;
    for (std::size_t k = 0; k < ng; ++k) {
        if (k > 0) run *= std::exp(nu * (log_gnodes_[k - 1] - log_gnodes_[k]));
        for (int j = 0; j < ppc; ++j) {
            const std::size_t q = k * ppc + j;
            run += qweights_[q] * qnodes_[q] * f[q] *
                   std::exp(nu * (log_qnodes_[q] - log_gnodes_[k]));
        }
        P2[k] = run;
    }
    run = 0.0;
    P3[ng - 1] = 0.0;
    for (std::size_t k = ng - 1; k-- > 0;) {
        run *= std::exp(nu * (log_gnodes_[k] - log_gnodes_[k + 1]));
        for (int j = 0; j < ppc; ++j) {
            const std::size_t q = (k + 1) * ppc + j;
            run += qweights_[q] * qnodes_[q] * f[q] *
                   std::exp(nu * (log_gnodes_[k] - log_qnodes_[q]));
        }
        P3[k] = run;
    }

    const double mu = nu * nu;
    std::vector<double> val(ng), dval(ng), d2(ng);
    for (std::size_t k = 0; k < ng; ++k) {
        val[k] = -(P1[k] + P2[k] + P3[k]) / (2.0 * nu);
        dval[k] = -(P1[k] - P2[k] + P3[k]) / (2.0 * g[k]);
        d2[k] = mu / (g[k] * g[k]) * val[k] - dval[k] / g[k] + f[qnodes_.size() + k];
    }
    return RadialProfile(grid_, std::move(val), std::move(dval), std::move(d2), 0.0);
}

RadialProfile RadialWorkspace::radial_0n(std::span<const double> f, int n) const {
    return bessel_mode(f, 0, n);
}

RadialProfile RadialWorkspace::radial_mn(std::span<const double> f, int m, int n) const {
    if (m < 1) throw DomainError("radial_mn: m >= 1");
    return bessel_mode(f, m, n);
}

RadialProfile RadialWorkspace::bessel_mode(std::span<const double> f, int m, int n) const {
    if (n < 1) throw DomainError("bessel_mode: n >= 1");
    const Kernel& ker = kernel(m, n);
    const double nu = sqrt_mu(dom_.theta0, m);
    const double mu = nu * nu;
    const auto& g = *grid_;
    const std::size_t ng = g.size();
    const int ppc = pts_per_cell_;

    // V = int_0^L s f I(ns) ds scaled by I(nL)
    double V = 0.0;
    for (std::size_t q = 0; q < qnodes_.size(); ++q)
        V += qweights_[q] * qnodes_[q] * f[q] * std::exp(ker.li_q[q] - ker.li_L);

    // PA = I(nr) (K'(nL)/I'(nL)) * int_0^L s I f ds  (K' < 0)
    std::vector<double> PA(ng), PB(ng), PC(ng);
    const double base = ker.lkp_L - ker.lip_L + ker.li_L;
    for (std::size_t k = 0; k < ng; ++k) PA[k] = -std::exp(base + ker.li_g[k]) * V;

    // PB = I(nr_k) int_{r_k}^L s K f ds   (suffix over cells)
    double run = 0.0;
    PB[ng - 1] = 0.0;
    for (std::size_t k = ng - 1; k-- > 0;) {
        run *= std::exp(ker.li_g[k] - ker.li_g[k + 1]);
        for (int j = 0; j < ppc; ++j) {
            const std::size_t q = (k + 1) * ppc + j;
            run += qweights_[q] * qnodes_[q] * f[q] * std::exp(ker.li_g[k] + ker.lk_q[q]);
        }
        PB[k] = run;
    }
    // PC = K(nr_k) int_0^{r_k} s I f ds   (prefix over cells)
    run = 0.0;
    for (std::size_t k = 0; k < ng; ++k) {
        if (k > 0) run *= std::exp(ker.lk_g[k] - ker.lk_g[k - 1]);
        for (int j = 0; j < ppc; ++j) {
            const std::size_t q = k * ppc + j;
            run += qweights_[q] * qnodes_[q] * f[q] * std::exp(ker.lk_g[k] + ker.li_q[q]);
        }
        PC[k] = run;
    }

    std::vector<double> val(ng), dval(ng), d2(ng);
    for (std::size_t k = 0; k < ng; ++k) {
        val[k] = PA[k] - PB[k] - PC[k];
        dval[k] = n * (std::exp(ker.lip_g[k] - ker.li_g[k]) * (PA[k] - PB[k]) +
                       std::exp(ker.lkp_g[k] - ker.lk_g[k]) * PC[k]);
        d2[k] = (mu / (g[k] * g[k]) + static_cast<double>(n) * n) * val[k] - dval[k] / g[k] +
                f[qnodes_.size() + k];
    }

    double at0 = 0.0;
    if (m == 0) {
        // I_0(0) = 1: at0 = PA(0) - int_0^L s K f ds
        double pb0 = std::exp(-ker.li_g[0]) * PB[0];
        for (int j = 0; j < ppc; ++j)
            pb0 += qweights_[j] * qnodes_[j] * f[j] * std::exp(ker.lk_q[j]);
        at0 = -std::exp(base) * V - pb0;
    }
    return RadialProfile(grid_, std::move(val), std::move(dval), std::move(d2), at0);
}

}  // namespace wedge::spectral
