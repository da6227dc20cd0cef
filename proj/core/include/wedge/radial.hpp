#pragma once

#include <memory>
#include <span>
#include <vector>

#include "wedge/quadrature.hpp"
#include "wedge/wedge_domain.hpp"

namespace wedge::spectral {

/// One radial function stored as (value, first, second derivative) at the grid
/// nodes, with C2 quintic-Hermite evaluation in between.  The second
/// derivative comes from the mode ODE, so it is exact given (R, R').
class RadialProfile {
  public:
    RadialProfile() = default;
    RadialProfile(std::shared_ptr<const std::vector<double>> grid, std::vector<double> val,
                  std::vector<double> dval, std::vector<double> d2val, double at0);

    double value(double r) const;
    double deriv(double r) const;
    double deriv2(double r) const;
    double at_zero() const { return at0_; }
    double at_outer() const { return val_.empty() ? 0.0 : val_.back(); }
    double deriv_outer() const { return dval_.empty() ? 0.0 : dval_.back(); }

    std::span<const double> values() const { return val_; }
    std::span<const double> derivs() const { return dval_; }
    const std::vector<double>& grid() const { return *grid_; }
    bool empty() const { return val_.empty(); }

    void shift(double c);  ///< add a constant (pinning)

  private:
    struct Piece {
        double v, d, s;  // scaled-to-cell value/derivative data at both ends
    };
    std::size_t locate(double r) const;
    std::shared_ptr<const std::vector<double>> grid_;
    std::vector<double> val_, dval_, d2val_;
    double at0_ = 0.0;
};

/// Fixed per (domain, grid): cell structure, composite quadrature, and the
/// log-scaled Bessel kernel tables for every (m, n) in the truncation.
/// Immutable after construction; safe to share across threads and reuse
/// across solves with the same domain/truncation/grid.
class RadialWorkspace {
  public:
    RadialWorkspace(const WedgeDomain& dom, const Truncation& trunc, int grid_nodes = 200);

    const WedgeDomain& domain() const { return dom_; }
    const Truncation& trunc() const { return trunc_; }
    const std::vector<double>& grid() const { return *grid_; }
    std::shared_ptr<const std::vector<double>> grid_ptr() const { return grid_; }
    /// quadrature nodes spanning (0, L], cells delimited by the grid nodes
    const std::vector<double>& quad_nodes() const { return qnodes_; }
    const std::vector<double>& quad_weights() const { return qweights_; }
    /// all radial sample points a source must be projected at: quad + grid
    const std::vector<double>& all_nodes() const { return all_nodes_; }
    std::size_t quad_count() const { return qnodes_.size(); }
    int points_per_cell() const { return pts_per_cell_; }

    struct Kernel {
        // at quadrature nodes: log I_nu(n s), log K_nu(n s)
        std::vector<double> li_q, lk_q;
        // at grid nodes: log I, log K, log I', log(-K') of (n r)
        std::vector<double> li_g, lk_g, lip_g, lkp_g;
        double li_L, lip_L, lkp_L;
    };
    /// kernel for order sqrt(mu_m) and frequency n >= 1
    const Kernel& kernel(int m, int n) const;

    /// solve one mode problem; f sampled on all_nodes() (quad part first)
    RadialProfile radial_00(std::span<const double> f, double c_L, double pinned_edge_value,
                            double compat_tol_abs) const;
    RadialProfile radial_m0(std::span<const double> f, int m) const;
    RadialProfile radial_0n(std::span<const double> f, int n) const;  // nu = 0
    RadialProfile radial_mn(std::span<const double> f, int m, int n) const;

    /// compatibility defect C_00^2 = L c_L - int_0^L xi f00 dxi (radial_00
    /// throws CompatibilityError when |C| > compat_tol_abs)
    double compat_defect(std::span<const double> f00, double c_L) const;

  private:
    RadialProfile bessel_mode(std::span<const double> f, int m, int n) const;

    WedgeDomain dom_;
    Truncation trunc_;
    std::shared_ptr<const std::vector<double>> grid_;
    std::vector<double> qnodes_, qweights_, all_nodes_;
    std::vector<double> log_qnodes_, log_gnodes_;
    int pts_per_cell_ = 8;
    std::vector<Kernel> kernels_;  // (m * n_max + (n-1))
};

}  // namespace wedge::spectral
