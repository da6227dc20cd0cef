#include "wedge/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wedge/errors.hpp"
#include "wedge/threading.hpp"

namespace wedge::spectral {

AngularRule angular_rule(const WedgeDomain& dom, const Truncation& trunc, int n_theta, int n_y2) {
    if (n_theta <= 0) n_theta = std::max(4 * trunc.m_max, 24);
    if (n_y2 <= 0) n_y2 = std::max(4 * trunc.n_max, 16);
    AngularRule rule;
    const quad::GaussLegendre gl(n_theta);
    const double a = dom.theta0, b = 0.5 * std::numbers::pi;
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    rule.theta_nodes.resize(n_theta);
    rule.theta_weights.resize(n_theta);
    for (int i = 0; i < n_theta; ++i) {
        rule.theta_nodes[i] = c + h * gl.nodes[i];
        rule.theta_weights[i] = h * gl.weights[i];
    }
    rule.y2_nodes.resize(n_y2);
    for (int i = 0; i < n_y2; ++i) rule.y2_nodes[i] = 2.0 * std::numbers::pi * i / n_y2;
    rule.y2_weight = 2.0 * std::numbers::pi / n_y2;
    return rule;
}

ModeTable::ModeTable(Truncation trunc, std::vector<double> radial_nodes)
    : trunc_(trunc), nodes_(std::move(radial_nodes)) {
    data_.assign(static_cast<std::size_t>(trunc_.m_max + 1) * (trunc_.n_max + 1) * 2 *
                     nodes_.size(),
                 0.0);
}

std::size_t ModeTable::index(int m, int n, int parity) const {
    return ((static_cast<std::size_t>(m) * (trunc_.n_max + 1) + n) * 2 + (parity - 1)) *
           nodes_.size();
}

double ModeTable::value(int m, int n, int parity, std::size_t k) const {
    return data_[index(m, n, parity) + k];
}

double& ModeTable::at(int m, int n, int parity, std::size_t k) {
    return data_[index(m, n, parity) + k];
}

std::span<const double> ModeTable::profile(int m, int n, int parity) const {
    return {data_.data() + index(m, n, parity), nodes_.size()};
}

std::span<double> ModeTable::profile_mut(int m, int n, int parity) {
    return {data_.data() + index(m, n, parity), nodes_.size()};
}

namespace {

struct TrigTables {
    // cos(sqrt(mu_m)(theta-theta0)) at theta nodes, [m][itheta]
    std::vector<std::vector<double>> cosm;
    // sin(n y2), cos(n y2) at y2 nodes, [n][iy2]
    std::vector<std::vector<double>> sinn, cosn;
};

TrigTables trig_tables(const WedgeDomain& dom, const Truncation& trunc, const AngularRule& rule) {
    TrigTables t;
    t.cosm.resize(trunc.m_max + 1);
    for (int m = 0; m <= trunc.m_max; ++m) {
        const double sm = sqrt_mu(dom.theta0, m);
        t.cosm[m].resize(rule.theta_nodes.size());
        for (std::size_t i = 0; i < rule.theta_nodes.size(); ++i)
            t.cosm[m][i] = std::cos(sm * (rule.theta_nodes[i] - dom.theta0));
    }
    t.sinn.resize(trunc.n_max + 1);
    t.cosn.resize(trunc.n_max + 1);
    for (int n = 0; n <= trunc.n_max; ++n) {
        t.sinn[n].resize(rule.y2_nodes.size());
        t.cosn[n].resize(rule.y2_nodes.size());
        for (std::size_t i = 0; i < rule.y2_nodes.size(); ++i) {
            t.sinn[n][i] = std::sin(n * rule.y2_nodes[i]);
            t.cosn[n][i] = std::cos(n * rule.y2_nodes[i]);
        }
    }
    return t;
}

}  // namespace

ModeTable project_modes(const Source& f, const Truncation& trunc, const WedgeDomain& dom,
                        std::span<const double> radial_nodes) {
    return project_modes(f, trunc, dom, radial_nodes, angular_rule(dom, trunc));
}

ModeTable project_modes(const Source& f, const Truncation& trunc, const WedgeDomain& dom,
                        std::span<const double> radial_nodes, const AngularRule& rule) {
    if (trunc.m_max < 1 || trunc.n_max < 1) throw DomainError("project_modes: truncation >= 1");
    ModeTable table(trunc, {radial_nodes.begin(), radial_nodes.end()});
    const TrigTables trig = trig_tables(dom, trunc, rule);
    const double w = dom.width();
    const std::size_t nth = rule.theta_nodes.size(), ny = rule.y2_nodes.size();
    const std::size_t nr = radial_nodes.size();

    std::vector<double> total_energy(nr, 0.0), band_energy(nr, 0.0);

    threads::parallel_for(nr, [&](std::size_t k) {
        const double r = radial_nodes[k];
        // sample f on the angular grid
        std::vector<double> fv(nth * ny);
        double energy = 0.0;
        for (std::size_t it = 0; it < nth; ++it)
            for (std::size_t iy = 0; iy < ny; ++iy) {
                const double v = f(r, rule.theta_nodes[it], rule.y2_nodes[iy]);
                fv[it * ny + iy] = v;
                energy += rule.theta_weights[it] * rule.y2_weight * v * v;
            }
        total_energy[k] = energy;
        // contract theta first: S[m][iy]
        std::vector<double> S((trunc.m_max + 1) * ny, 0.0);
        for (int m = 0; m <= trunc.m_max; ++m) {
            for (std::size_t it = 0; it < nth; ++it) {
                const double wcos = rule.theta_weights[it] * trig.cosm[m][it];
                const double* row = &fv[it * ny];
                double* srow = &S[m * ny];
                for (std::size_t iy = 0; iy < ny; ++iy) srow[iy] += wcos * row[iy];
            }
        }
        double band = 0.0;
        for (int m = 0; m <= trunc.m_max; ++m) {
            const double* srow = &S[m * ny];
            for (int n = 0; n <= trunc.n_max; ++n) {
                double cs = 0.0, cc = 0.0;
                for (std::size_t iy = 0; iy < ny; ++iy) {
                    cs += srow[iy] * trig.sinn[n][iy];
                    cc += srow[iy] * trig.cosn[n][iy];
                }
                cs *= rule.y2_weight;
                cc *= rule.y2_weight;
                // (4.13) normalizations
                double norm_cos, norm_sin;
                if (m == 0 && n == 0) {
                    norm_cos = 1.0 / (2.0 * std::numbers::pi * w);
                    norm_sin = 0.0;
                } else if (m == 0 || n == 0) {
                    norm_cos = norm_sin = 1.0 / (std::numbers::pi * w);
                } else {
                    norm_cos = norm_sin = 2.0 / (std::numbers::pi * w);
                }
                if (n > 0) table.at(m, n, 1, k) = cs * norm_sin;
                table.at(m, n, 2, k) = cc * norm_cos;
                // Parseval block of the retained band
                const double thn = (m == 0) ? w : 0.5 * w;
                const double y2n = (n == 0) ? 2.0 * std::numbers::pi : std::numbers::pi;
                const double a = table.value(m, n, 2, k);
                band += a * a * thn * y2n;
                if (n > 0) {
                    const double b = table.value(m, n, 1, k);
                    band += b * b * thn * y2n;
                }
            }
        }
        band_energy[k] = band;
    });

    double tot = 0.0, band = 0.0;
    for (std::size_t k = 0; k < nr; ++k) {
        tot += total_energy[k];
        band += band_energy[k];
    }
    table.aliasing_fraction = tot > 0.0 ? std::max(0.0, (tot - band) / tot) : 0.0;
    return table;
}

double compat_constant(const Source& f, const WedgeDomain& dom, const Truncation& trunc) {
    std::vector<double> edges;
    const auto grid = radial_grid(dom);
    edges.push_back(0.0);
    edges.insert(edges.end(), grid.begin(), grid.end());
    return compat_constant(f, dom, trunc, edges, angular_rule(dom, trunc));
}

double compat_constant(const Source& f, const WedgeDomain& dom, const Truncation& trunc,
                       std::span<const double> radial_edges, const AngularRule& rule) {
    (void)trunc;
    if (radial_edges.front() != 0.0 || std::abs(radial_edges.back() - dom.L) > 1e-12 * dom.L)
        throw DomainError("compat_constant: radial edges must span [0, L]");
    const auto rq = quad::composite_gl(radial_edges);
    std::vector<double> shell(rq.nodes.size(), 0.0);
    threads::parallel_for(rq.nodes.size(), [&](std::size_t q) {
        const double r = rq.nodes[q];
        double s = 0.0;
        for (std::size_t it = 0; it < rule.theta_nodes.size(); ++it) {
            double sy = 0.0;
            for (std::size_t iy = 0; iy < rule.y2_nodes.size(); ++iy)
                sy += f(r, rule.theta_nodes[it], rule.y2_nodes[iy]);
            s += rule.theta_weights[it] * sy * rule.y2_weight;
        }
        shell[q] = rq.weights[q] * r * s;
    });
    double integral = 0.0;
    for (double v : shell) integral += v;
    const double area = 2.0 * std::numbers::pi * dom.L * dom.width();
    if (!std::isfinite(integral)) throw QuadratureError("compat_constant: integral not finite");
    return integral / area;
}

CompatReport compat_report(const Source& f, const WedgeDomain& dom, const Truncation& trunc,
                           double norm_handle, double delta0) {
    CompatReport rep{};
    rep.c_L = compat_constant(f, dom, trunc);
    rep.decay_ratio = std::abs(rep.c_L) / (std::pow(dom.L, delta0 - 1.0) * norm_handle);
    return rep;
}

}  // namespace wedge::spectral
