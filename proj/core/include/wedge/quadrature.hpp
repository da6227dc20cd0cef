#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace wedge::quad {

/// Gauss-Legendre rule on [-1,1]; nodes ascending, deterministic construction.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
    explicit GaussLegendre(int npts);
};

const GaussLegendre& gl16();
const GaussLegendre& gl8();

/// Integrate f over [a,b] with a fixed n-point Gauss-Legendre rule.
double gl_fixed(const std::function<double(double)>& f, double a, double b,
                const GaussLegendre& rule = gl16());

/// Adaptive Gauss-Legendre to absolute tolerance; throws QuadratureError on
/// depth exhaustion with the error estimate still above 1e3*abs_tol.
double gl_adaptive(const std::function<double(double)>& f, double a, double b,
                   double abs_tol, int max_depth = 28);

/// Integrate exp(g(x)) over [a,b] where g may reach +-1e4; returns the value
/// as log(integral).  Peak is hoisted so the quadrature itself stays in range.
double gl_adaptive_log(const std::function<double(double)>& g, double a, double b,
                       double rel_tol, int max_depth = 28);

/// Same contract as gl_adaptive_log but via tanh-sinh nodes, which absorb
/// algebraic endpoint singularities (x-a)^p with fractional p > -1.
double tanh_sinh_log(const std::function<double(double)>& g, double a, double b,
                     double rel_tol);

/// Trapezoid rule for a 2*pi-periodic integrand sampled at n equispaced points
/// (spectrally exact for trigonometric polynomials of degree < n/2).
double periodic_trapezoid(const std::function<double(double)>& f, int n);

/// Quadrature nodes+weights covering [a,b] split into the given cell
/// boundaries with an npts-point GL rule per cell.
struct CompositeRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
CompositeRule composite_gl(std::span<const double> cell_edges, const GaussLegendre& rule = gl8());

}  // namespace wedge::quad
