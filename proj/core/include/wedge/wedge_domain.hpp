#pragma once

#include <vector>

namespace wedge::spectral {

/// Bounded wedge Q_L = {0 < r < L} x {theta0 <= theta <= pi/2} x [0, 2pi).
struct WedgeDomain {
    double theta0;
    double L;

    double width() const;  ///< pi/2 - theta0
};

WedgeDomain make_domain(double theta0, double L);

struct Truncation {
    int m_max;  ///< angular cosine modes 0..m_max
    int n_max;  ///< periodic modes 0..n_max
};

struct WeightExponents {
    double delta;    ///< edge decay exponent, 0 < delta < sqrt(mu_1) - 1
    double delta0;   ///< far-field exponent, 0 < delta0 < 1
    double alpha_h;  ///< Hoelder exponent, 0 < alpha_h < 1
};

WeightExponents make_weights(double delta, double delta0, double alpha_h, double theta0);

struct EigenPair {
    double lambda_n;  ///< n^2
    double mu_m;      ///< (m pi / (pi/2 - theta0))^2
};

EigenPair eigenvalues(double theta0, int m, int n);
double mu_of(double theta0, int m);
double sqrt_mu(double theta0, int m);

/// Radial grid on (0, L]: geometric cluster toward the edge below r = min(1, L),
/// uniform from there to L.  The first node is L*edge_frac, not 0.
std::vector<double> radial_grid(const WedgeDomain& dom, int n_nodes = 200,
                                double edge_frac = 1e-6);

}  // namespace wedge::spectral
