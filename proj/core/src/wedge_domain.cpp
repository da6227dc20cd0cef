#include "wedge/wedge_domain.hpp"

#include <cmath>
#include <numbers>

#include "wedge/errors.hpp"

namespace wedge::spectral {

double WedgeDomain::width() const { return 0.5 * std::numbers::pi - theta0; }

WedgeDomain make_domain(double theta0, double L) {
    if (!(theta0 > 0.0 && theta0 < 0.5 * std::numbers::pi))
        throw DomainError("make_domain: theta0 must lie in (0, pi/2)");
    if (!(L >= 4.0)) throw DomainError("make_domain: L >= 4 required");
    return {theta0, L};
}

EigenPair eigenvalues(double theta0, int m, int n) {
    if (m < 0 || n < 0) throw DomainError("eigenvalues: m, n >= 0");
    return {static_cast<double>(n) * n, mu_of(theta0, m)};
}

double mu_of(double theta0, int m) {
    const double w = 0.5 * std::numbers::pi - theta0;
    const double s = m * std::numbers::pi / w;
    return s * s;
}

double sqrt_mu(double theta0, int m) {
    const double w = 0.5 * std::numbers::pi - theta0;
    return m * std::numbers::pi / w;
}

WeightExponents make_weights(double delta, double delta0, double alpha_h, double theta0) {
    const double cap = sqrt_mu(theta0, 1) - 1.0;
    if (!(delta > 0.0 && delta < cap))
        throw DomainError("make_weights: need 0 < delta < sqrt(mu_1) - 1");
    if (!(delta0 > 0.0 && delta0 < 1.0)) throw DomainError("make_weights: delta0 in (0,1)");
    if (!(alpha_h > 0.0 && alpha_h < 1.0)) throw DomainError("make_weights: alpha in (0,1)");
    return {delta, delta0, alpha_h};
}

std::vector<double> radial_grid(const WedgeDomain& dom, int n_nodes, double edge_frac) {
    if (n_nodes < 16) throw DomainError("radial_grid: too few nodes");
    std::vector<double> r;
    r.reserve(n_nodes);
    const double split = std::min(1.0, 0.25 * dom.L);
    const int n_geo = n_nodes / 2;
    const double r0 = dom.L * edge_frac;
    const double ratio = std::pow(split / r0, 1.0 / (n_geo - 1));
    double v = r0;
    for (int i = 0; i < n_geo; ++i) {
        r.push_back(v);
        v *= ratio;
    }
    const int n_uni = n_nodes - n_geo;
    const double h = (dom.L - split) / n_uni;
    for (int i = 1; i <= n_uni; ++i) r.push_back(split + h * i);
    r.back() = dom.L;
    return r;
}

}  // namespace wedge::spectral
