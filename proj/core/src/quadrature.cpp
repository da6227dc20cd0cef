#include "wedge/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wedge/errors.hpp"

namespace wedge::quad {

GaussLegendre::GaussLegendre(int npts) {
    nodes.resize(npts);
    weights.resize(npts);
    // Newton iteration from Chebyshev-like initial guesses.
    const int m = (npts + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (npts + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < npts; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = npts * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        nodes[i] = -x;
        nodes[npts - 1 - i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[npts - 1 - i] = weights[i];
    }
}

const GaussLegendre& gl16() {
    static const GaussLegendre rule(16);
    return rule;
}

const GaussLegendre& gl8() {
    static const GaussLegendre rule(8);
    return rule;
}

double gl_fixed(const std::function<double(double)>& f, double a, double b,
                const GaussLegendre& rule) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        s += rule.weights[i] * f(c + h * rule.nodes[i]);
    return s * h;
}

namespace {

double adapt(const std::function<double(double)>& f, double a, double b, double whole,
             double abs_tol, int depth, int max_depth, bool* gave_up) {
    const double c = 0.5 * (a + b);
    const double left = gl_fixed(f, a, c);
    const double right = gl_fixed(f, c, b);
    const double err = std::abs(left + right - whole);
    if (err <= abs_tol || depth >= max_depth) {
        if (depth >= max_depth && err > 1e3 * abs_tol) *gave_up = true;
        return left + right;
    }
    return adapt(f, a, c, left, 0.5 * abs_tol, depth + 1, max_depth, gave_up) +
           adapt(f, c, b, right, 0.5 * abs_tol, depth + 1, max_depth, gave_up);
}

}  // namespace

double gl_adaptive(const std::function<double(double)>& f, double a, double b,
                   double abs_tol, int max_depth) {
    bool gave_up = false;
    const double whole = gl_fixed(f, a, b);
    const double v = adapt(f, a, b, whole, abs_tol, 0, max_depth, &gave_up);
    if (gave_up) throw QuadratureError("adaptive Gauss-Legendre failed to reach tolerance");
    return v;
}

double gl_adaptive_log(const std::function<double(double)>& g, double a, double b,
                       double rel_tol, int max_depth) {
    // Hoist the peak of g so exp() stays representable.
    double gmax = -std::numeric_limits<double>::infinity();
    const int nscan = 129;
    for (int i = 0; i < nscan; ++i) {
        const double x = a + (b - a) * i / (nscan - 1.0);
        gmax = std::max(gmax, g(x));
    }
    if (!std::isfinite(gmax)) throw QuadratureError("log-integrand peak not finite");
    auto f = [&](double x) { return std::exp(g(x) - gmax); };
    // Scale of the hoisted integral is at most (b-a).
    const double v = gl_adaptive(f, a, b, rel_tol * (b - a), max_depth);
    if (v <= 0.0) return -std::numeric_limits<double>::infinity();
    return gmax + std::log(v);
}

double tanh_sinh_log(const std::function<double(double)>& g, double a, double b,
                     double rel_tol) {
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    const double umax = 3.6;
    const double half_pi = 0.5 * std::numbers::pi;
    double prev = std::numeric_limits<double>::quiet_NaN();
    double last_diff = std::numeric_limits<double>::infinity();
    double last_val = 0.0;
    // logs hold g(x_i) + ln(local weight without the step factor h); h is
    // applied per level so nodes can be reused across refinements.
    std::vector<double> logs;
    auto node_log = [&](double u) {
        const double sh = half_pi * std::sinh(u);
        const double x = c + hw * std::tanh(sh);
        const double lw = std::log(hw * half_pi * std::cosh(u)) - 2.0 * std::log(std::cosh(sh));
        const double gv = g(x);
        return gv == -std::numeric_limits<double>::infinity()
                   ? -std::numeric_limits<double>::infinity()
                   : gv + lw;
    };
    const int n0 = 48, nmax = 6144;
    for (int n = n0; n <= nmax; n *= 2) {
        const double h = 2.0 * umax / n;
        if (n == n0) {
            for (int i = 0; i <= n; ++i) logs.push_back(node_log(-umax + i * h));
        } else {
            for (int i = 1; i <= n; i += 2) logs.push_back(node_log(-umax + i * h));
        }
        double lmax = -std::numeric_limits<double>::infinity();
        for (double l : logs) lmax = std::max(lmax, l);
        if (lmax == -std::numeric_limits<double>::infinity())
            return -std::numeric_limits<double>::infinity();
        double s = 0.0, comp = 0.0;  // Kahan
        for (double l : logs) {
            if (l == -std::numeric_limits<double>::infinity()) continue;
            const double term = std::exp(l - lmax) - comp;
            const double tmp = s + term;
            comp = (tmp - s) - term;
            s = tmp;
        }
        const double val = lmax + std::log(h * s);
        // log-difference == relative error; can't resolve below sum noise
        if (std::isfinite(prev) && std::abs(val - prev) < std::max(rel_tol, 1e-13)) return val;
        if (std::isfinite(prev)) last_diff = std::abs(val - prev);
        last_val = val;
        prev = val;
    }
    if (last_diff < 1e-11) return last_val;
    throw QuadratureError("tanh-sinh quadrature failed to converge");
}

double periodic_trapezoid(const std::function<double(double)>& f, int n) {
    const double h = 2.0 * std::numbers::pi / n;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += f(i * h);
    return s * h;
}

CompositeRule composite_gl(std::span<const double> cell_edges, const GaussLegendre& rule) {
    CompositeRule out;
    if (cell_edges.size() < 2) return out;
    out.nodes.reserve((cell_edges.size() - 1) * rule.nodes.size());
    out.weights.reserve(out.nodes.capacity());
    for (std::size_t c = 0; c + 1 < cell_edges.size(); ++c) {
        const double a = cell_edges[c], b = cell_edges[c + 1];
        const double mid = 0.5 * (a + b), h = 0.5 * (b - a);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            out.nodes.push_back(mid + h * rule.nodes[i]);
            out.weights.push_back(h * rule.weights[i]);
        }
    }
    return out;
}

}  // namespace wedge::quad
