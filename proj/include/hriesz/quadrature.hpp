#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace hriesz {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generalized Gauss-Laguerre rule for the weight s^mu e^{-s} on (0, inf):
//   sum_i weights[i] * F(nodes[i])  ~=  int_0^inf s^mu e^{-s} F(s) ds,
// exact for polynomials F of degree <= 2*count - 1.
//
// total_weights[i] = weights[i] * e^{nodes[i]} absorbs the e^{-s} factor,
// for integrating functions that carry their own decay.
struct QuadGrid {
    double mu = 0.0;
    std::vector<double> nodes;          // ascending
    std::vector<double> weights;
    std::vector<double> total_weights;  // weights[i] * exp(nodes[i])

    int count() const { return static_cast<int>(nodes.size()); }
};

// Golub-Welsch: nodes/weights from the symmetric tridiagonal eigenproblem of
// the L_k^mu recurrence.  Requires count >= 1 and mu > -1; an eigensolver
// failure surfaces as QuadratureError.
QuadGrid gauss_laguerre(int count, double mu);

// --- adaptive 1-D quadrature -------------------------------------------------

struct AdaptiveResult {
    double value = 0.0;
    double est_error = 0.0;
    int evaluations = 0;
    bool converged = false;
};

// Tanh-sinh rule on a finite interval [a, b]; level doubles until two
// consecutive refinements agree within target_abs_err (or max_level is hit,
// in which case converged = false).
AdaptiveResult tanh_sinh(const std::function<double(double)>& f, double a, double b,
                         double target_abs_err = 1e-10, int max_level = 12);

// Same rule on (0, inf) after the compactification x = tan(theta).
AdaptiveResult tanh_sinh_semi_infinite(const std::function<double(double)>& f,
                                       double target_abs_err = 1e-10, int max_level = 12);

// Iterated 2-D integral over (0,inf)^2: integrates g(x, y) dy inside, dx outside.
AdaptiveResult tanh_sinh_2d(const std::function<double(double, double)>& g,
                            double target_abs_err = 1e-10, int max_level = 11);

// Trapezoid on a uniform grid over [a, b] with npts samples.
double trapezoid(const std::function<double(double)>& f, double a, double b, int npts);

}  // namespace hriesz
