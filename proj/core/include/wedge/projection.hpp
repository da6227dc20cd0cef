#pragma once

#include <functional>
#include <span>
#include <vector>

#include "wedge/quadrature.hpp"
#include "wedge/wedge_domain.hpp"

namespace wedge::spectral {

/// Scalar source on the wedge, sampled at cylindrical points.
using Source = std::function<double(double r, double theta, double y2)>;

/// Angular quadrature shared by projection and assembly.
///   theta: Gauss-Legendre on [theta0, pi/2], >= 4 m_max nodes;
///   y2:    equispaced trapezoid on [0, 2pi), >= 4 n_max nodes
/// (exact for trigonometric integrands inside the truncation band).
struct AngularRule {
    std::vector<double> theta_nodes;
    std::vector<double> theta_weights;
    std::vector<double> y2_nodes;
    double y2_weight;
};

AngularRule angular_rule(const WedgeDomain& dom, const Truncation& trunc,
                         int n_theta = 0, int n_y2 = 0);

/// Radial profiles of the Fourier coefficients f_{mn}^{(i)} on a radial node
/// set.  parity i: 1 = sin(n y2), 2 = cos(n y2); n = 0 lives in parity 2.
class ModeTable {
  public:
    ModeTable() = default;
    ModeTable(Truncation trunc, std::vector<double> radial_nodes);

    double value(int m, int n, int parity, std::size_t k) const;
    double& at(int m, int n, int parity, std::size_t k);
    std::span<const double> profile(int m, int n, int parity) const;
    std::span<double> profile_mut(int m, int n, int parity);

    const std::vector<double>& radial_nodes() const { return nodes_; }
    const Truncation& trunc() const { return trunc_; }

    /// Fraction of sampled energy outside the truncation band (diagnostic
    /// attached by project_modes; 0 when unknown).
    double aliasing_fraction = 0.0;

  private:
    std::size_t index(int m, int n, int parity) const;
    Truncation trunc_{0, 0};
    std::vector<double> nodes_;
    std::vector<double> data_;  // [(m*(n_max+1)+n)*2 + (parity-1)] * n_r + k
};

/// Tensor-quadrature projection of f onto the eigenbasis at the given radial
/// nodes.  Parallel over radial nodes; per-node reductions are serial and
/// fixed-order, so results are independent of the worker count.
ModeTable project_modes(const Source& f, const Truncation& trunc, const WedgeDomain& dom,
                        std::span<const double> radial_nodes, const AngularRule& rule);
ModeTable project_modes(const Source& f, const Truncation& trunc, const WedgeDomain& dom,
                        std::span<const double> radial_nodes);

/// Compatibility constant of the outer Neumann closure:
///   c_L = (integral of f over Q_L) / (2 pi L (pi/2 - theta0)).
/// Radial integration uses composite GL between the cells of `radial_edges`
/// (must start at 0 and end at L).
double compat_constant(const Source& f, const WedgeDomain& dom, const Truncation& trunc,
                       std::span<const double> radial_edges, const AngularRule& rule);
double compat_constant(const Source& f, const WedgeDomain& dom, const Truncation& trunc);

/// Decay-shape report for the (4.7)-style bound |c_L| <= C L^{delta0-1} ||f||.
struct CompatReport {
    double c_L;
    double decay_ratio;  ///< |c_L| / (L^{delta0-1} * norm_handle)
};
CompatReport compat_report(const Source& f, const WedgeDomain& dom, const Truncation& trunc,
                           double norm_handle, double delta0);

}  // namespace wedge::spectral
