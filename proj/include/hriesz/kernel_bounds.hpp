#pragma once

#include <functional>

namespace hriesz {

struct RadialIntegralResult {
    int n = 0;
    double value = 0.0;
    double est_error = 0.0;
    int node_count = 0;
    bool converged = false;  // est_error <= 1e-8 * max(1, |value|)
};

// Normalization constant of the fundamental-solution kernel:
//   c_n^{-1} = n (n+2) omega_{2n-1} int_0^inf int_0^inf (1+t^2+r^4)^{-(n+4)/2} r^{2n+1} dr dt,
// computed once per n and cached.  The one-sided t-integral is the convention
// under which n c_n int |K(z,1)| dz equals pi^{-1/2} Gamma(n/2)/Gamma((n+1)/2)
// exactly; see lemma34_numeric.
double folland_c(int n);

// phi_0(r, t) = c_n (r^4 + t^2)^{-n/2}; the origin is rejected.
double folland_phi0(int n, double r, double t);

// K = d phi_0 / dt = -n c_n t (r^4 + t^2)^{-n/2 - 1}; odd in t and
// homogeneous of degree -(2n+2) under (r, t) -> (s r, s^2 t).
double kernel_K(int n, double r, double t);

// n c_n int_{C^n} (1 + |z|^4)^{-n/2-1} dz by polar reduction.
double christ_bound(int n);

struct Lemma34Result {
    RadialIntegralResult ratio;  // numerator / ((n+2) * denominator)

    double numerator_quad = 0.0;  // int_0^inf (1+r^4)^{-n/2-1} r^{2n-1} dr
    double numerator_closed = 0.0;  // Gamma(1) Gamma(n/2) / (4 Gamma(n/2+1))

    double t_factor_quad = 0.0;  // int_0^inf (1+t^2)^{-3/2} dt
    double t_factor_closed = 0.0;  // Gamma(1/2) Gamma(1) / (2 Gamma(3/2)) = 1

    double u_factor_quad = 0.0;  // int_0^inf (1+u^4)^{-(n+4)/2} u^{2n+1} du
    double u_factor_closed = 0.0;  // Gamma(3/2) Gamma((n+1)/2) / (4 Gamma((n+4)/2))

    double denominator_quad = 0.0;  // iterated 2-D integral, independent of the factors
};

// Numerator and denominator of the kernel-bound ratio by independent adaptive
// quadrature, plus each beta-integral factor from the product form for a
// factor-by-factor cross-check against the closed expressions.
Lemma34Result lemma34_numeric(int n);

// Hecke-Bochner radial coefficient
//   R_k^lambda(f) = Gamma(k-p+1) Gamma(n) / Gamma(k+q+n)
//                   * int_{C^{n+p+q}} f(|z|) phi_{k,lambda}^{n+p+q-1}(z) dz
// by polar reduction to one dimension.  Requires k >= pdeg.
double hecke_radial_coeff(const std::function<double(double)>& f, int k, int pdeg,
                          int qdeg, int n, double lambda);

// log of the surface measure of S^{d-1} in R^d (= 2 pi^{d/2} / Gamma(d/2)).
double log_sphere_area(int real_dim);

}  // namespace hriesz
