#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "wedge/projection.hpp"
#include "wedge/radial.hpp"
#include "wedge/wedge_domain.hpp"

namespace wedge::spectral {

/// Value and derivatives of a boundary datum g(r, y2) on one ray, as needed
/// by the lift's analytic Laplacian.
struct RayJet {
    double g = 0.0;
    double g_r = 0.0;
    double g_rr = 0.0;
    double g_y2 = 0.0;
    double g_y2y2 = 0.0;
    double g_ry2 = 0.0;
};
using RayData = std::function<RayJet(double r, double y2)>;
using RayValues = std::function<double(double r, double y2)>;

/// Cylindrical jet of a scalar field (orthonormal-frame second derivatives
/// are assembled by callers via r^-1 factors where needed).
struct Jet {
    double v = 0.0;
    double dr = 0.0, dth = 0.0, dy2 = 0.0;
    double drr = 0.0, dthth = 0.0, dy2y2 = 0.0;
    double drth = 0.0, dry2 = 0.0, dthy2 = 0.0;
};

/// Linear-in-theta lift absorbing inhomogeneous ray data:
///   h = r [ (g1+g2)(r,y2)/(2 w) (theta-theta0)^2 - g1(r,y2) theta ],
/// which satisfies d_n h = g1 on theta = theta0 and d_n h = g2 on pi/2
/// (d_n the outward normal derivative, d_n = -(1/r) d_theta at theta0).
class LiftField {
  public:
    LiftField() = default;
    LiftField(RayData g1, RayData g2, WedgeDomain dom);
    bool zero() const { return !g1_ && !g2_; }
    Jet jet(double r, double theta, double y2) const;
    double laplacian(double r, double theta, double y2) const;
    RayJet ray1(double r, double y2) const { return g1_ ? g1_(r, y2) : RayJet{}; }
    RayJet ray2(double r, double y2) const { return g2_ ? g2_(r, y2) : RayJet{}; }

  private:
    RayData g1_, g2_;
    WedgeDomain dom_{0.1, 4.0};
};

LiftField neumann_lift(const RayData& g1, const RayData& g2, const WedgeDomain& dom);

struct SolveOptions {
    int grid_nodes = 200;
    int n_theta = 0;  ///< 0 = max(4 m_max, 24)
    int n_y2 = 0;     ///< 0 = max(4 n_max, 16)
    double compat_tol = 1e-8;  ///< relative, scaled by the 00-mode mass
};

/// The assembled eigenfunction-series solution of the cut-off problem.
class SeriesSolution {
  public:
    WedgeDomain dom{0.1, 4.0};
    Truncation trunc{1, 1};
    WeightExponents weights{0.3, 0.3, 0.5};
    double c_L = 0.0;
    double pinned_edge_value = 0.0;  ///< -sum_n R0n^(2)(0)
    double source_scale = 1.0;       ///< max sampled |f|, for residual scaling
    LiftField lift;                  ///< zero unless solve used analytic ray data

    RadialProfile R00;
    std::vector<RadialProfile> Rm0;   ///< m = 1..m_max
    std::vector<RadialProfile> R0n;   ///< (n-1)*2 + (i-1)
    std::vector<RadialProfile> Rmn;   ///< ((m-1)*n_max + (n-1))*2 + (i-1)

    const RadialProfile& r0n(int n, int i) const { return R0n[(n - 1) * 2 + (i - 1)]; }
    const RadialProfile& rmn(int m, int n, int i) const {
        return Rmn[(static_cast<std::size_t>(m - 1) * trunc.n_max + (n - 1)) * 2 + (i - 1)];
    }

    /// Pointwise evaluation; fixed ascending (m, then n) summation order.
    /// deriv_order 0: value only; 1: + gradient; 2: + second derivatives.
    Jet assemble(double r, double theta, double y2, int deriv_order = 2,
                 bool include_lift = true) const;

    /// Edge trace v(0+, y2) (theta-independent after pinning).
    double edge_trace(double y2) const;

    /// Residual of the per-m pinning identity R_m0(0) + sum_n R_mn^(2)(0),
    /// reported for m >= 1 (the construction only enforces m = 0).
    std::vector<double> m_pinning_residuals() const;
};

/// Tensor-grid jet assembly (contracted mode sums; deterministic for any
/// worker count).  jets[(ir*nth + it)*ny + iy].
std::vector<Jet> assemble_on_grid(const SeriesSolution& s, std::span<const double> r_nodes,
                                  std::span<const double> theta_nodes,
                                  std::span<const double> y2_nodes, int deriv_order = 2,
                                  bool include_lift = true);

/// Cut-off solve with analytic Neumann ray data (lifted to zero-flux form).
SeriesSolution solve_cutoff(const Source& f, const RayData& g1, const RayData& g2,
                            const WedgeDomain& dom, const Truncation& trunc,
                            const WeightExponents& weights,
                            std::shared_ptr<const RadialWorkspace> ws = nullptr,
                            const SolveOptions& opts = {});

/// Cut-off solve with value-only Neumann data, folded into the mode sources
/// through the boundary terms of the theta projection.
SeriesSolution solve_cutoff_weak(const Source& f, const RayValues& g1, const RayValues& g2,
                                 const WedgeDomain& dom, const Truncation& trunc,
                                 const WeightExponents& weights,
                                 std::shared_ptr<const RadialWorkspace> ws = nullptr,
                                 const SolveOptions& opts = {});

struct SolutionReport {
    double pde_residual = 0.0;    ///< max |Lap v - f|/scale, verification grid
    double bc_theta0 = 0.0;       ///< max |d_n u - g1| on the ramp ray
    double bc_pihalf = 0.0;       ///< max |d_n u - g2| on the other ray
    double outer_residual = 0.0;  ///< max |d_r v(L) - c_L| / max(1,|c_L|)
    double edge_value = 0.0;      ///< max_theta |v(0,theta,0)|
    double m_pinning = 0.0;       ///< max over m >= 1 pinning residuals
};

SolutionReport verify_solution(const SeriesSolution& s, const Source& f, const RayValues& g1,
                               const RayValues& g2, int nr = 24, int nth = 12, int ny = 16);

struct TailReport {
    double m0_near_sup = 0.0;      ///< sup_{r<=1} sum_m |R_m0(r)|
    double m0_far_exponent = 0.0;  ///< log-log slope of the same sum on r >= 1
    double on_exponent = 0.0;      ///< slope of sum_n n^2 |R_0n| near the edge
    double mn_exponent = 0.0;      ///< slope of sum_mn n^2 |R_mn| near the edge
    double on_bound_const = 0.0;   ///< sup of the sum scaled by r^{5/2-delta}
    double doubling_change = -1.0; ///< rel. change vs doubled truncation (-1 = n/a)
};

TailReport tail_diagnostics(const SeriesSolution& s, const WeightExponents& w,
                            const SeriesSolution* doubled = nullptr,
                            double fit_lo = 1e-3, double fit_hi = 1e-1);

}  // namespace wedge::spectral
