#pragma once

#include <functional>
#include <vector>

#include "hriesz/multi_index.hpp"
#include "hriesz/quadrature.hpp"

namespace hriesz {

// log Gamma and log k!; thin wrappers so every factorial in the library goes
// through the same overflow-safe route.
double log_gamma(double x);
double log_factorial(int k);

// Generalized Laguerre polynomial L_k^nu(x) by the forward recurrence
//   (k+1) L_{k+1}^nu = (2k+nu+1-x) L_k^nu - (k+nu) L_{k-1}^nu.
// Rejects nu <= -1.
double laguerre_poly(int k, double nu, double x);

// All of L_0^nu(x) .. L_kmax^nu(x) in one recurrence sweep.
std::vector<double> laguerre_poly_seq(int kmax, double nu, double x);

// Laguerre function of type nu:  L_k^nu(lambda r^2 / 2) e^{-lambda r^2 / 4}.
double laguerre_fn(int k, double nu, double lambda, double r);

// One tensor factor of the multiple Laguerre basis:
//   (2^{-m} a! / (a+m)!)^{1/2} phi_a^m(r)   with lambda = 1.
double psi_axis(int a, int m, double r);

// Multiple Laguerre function Psi_alpha^m(r) = prod_j psi_axis(alpha_j, m_j, r_j);
// orthonormal in L^2(R_+^n, dmu_m), dmu_m = prod r_j^{2 m_j + 1} dr_j.
double psi(const MultiIndex& alpha, const MultiIndex& m, const std::vector<double>& r);

// 1-D Hermite function (lambda/pi)^{1/4} (2^k k!)^{-1/2} H_k(sqrt(lambda) x)
// e^{-lambda x^2/2}, L^2(R)-normalized; physicists' H_k by recurrence.
double hermite_fn(int k, double lambda, double x);

// pi^{-1/2} Gamma(n/2) / Gamma((n+1)/2), evaluated through log_gamma.
double gamma_ratio(int n);

using RadialEvaluator = std::function<double(const std::vector<double>&)>;

// int f g dmu_m over R_+^n by the per-axis substitution s = r^2/2, so that
// r^{2m+1} dr = 2^m s^m ds and each axis uses its generalized Gauss-Laguerre
// grid (grids[j].mu must equal m_j).
double inner_mu(const RadialEvaluator& f, const RadialEvaluator& g, const MultiIndex& m,
                const std::vector<QuadGrid>& grids);

// Grids for inner_mu against dmu_m, count points per axis.
std::vector<QuadGrid> grids_for(const MultiIndex& m, int count);

}  // namespace hriesz
