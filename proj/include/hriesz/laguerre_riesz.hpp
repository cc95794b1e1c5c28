#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hriesz/multi_index.hpp"
#include "hriesz/quadrature.hpp"
#include "hriesz/special_fn.hpp"

namespace hriesz {

// Truncated multiple Laguerre basis of type m: {Psi_alpha^m : |alpha| <= K},
// orthonormal in L^2(R_+^n, dmu_m), with per-axis quadrature exponent m_j.
struct LaguerreBasisSpec {
    int n = 1;
    MultiIndex m;
    int K = 0;
    std::vector<QuadGrid> quad;

    static LaguerreBasisSpec make(const MultiIndex& m, int K, int quad_points = 64);
};

struct LagCoeffs {
    LaguerreBasisSpec spec;
    std::map<MultiIndex, double> data;

    double norm_sq() const;
    double norm() const;
};

// data[alpha] = (f, Psi_alpha^m)_{dmu_m} for all |alpha| <= K.
LagCoeffs analyze(const RadialEvaluator& f, const LaguerreBasisSpec& spec);

// sum_alpha c_alpha Psi_alpha^m(r)
double synthesize(const LagCoeffs& c, const std::vector<double>& r);

// Image of the Laguerre Riesz transform: type-(m+e_j) coefficients plus the
// r_j prefactor, which lives in the evaluation rule so that the coefficient
// map stays an exact contraction between orthonormal systems.
struct LaguerreRieszImage {
    LagCoeffs coeffs;  // type m + e_j
    int axis = 0;

    // value(r) = r_axis * sum_beta d_beta Psi_beta^{m+e_j}(r)
    double evaluate(const std::vector<double>& r) const;
};

// d_{alpha - e_j} = (2 alpha_j)^{1/2} (2|alpha| + n)^{-1/2} c_alpha, alpha_j >= 1.
LaguerreRieszImage riesz_laguerre(int axis, const LagCoeffs& c);

// (lhs, rhs) with lhs = int |R_{j,m} f|^p prod r_i^{m_i(p-2)} dmu_m and
// rhs the same integral of |f|^p; per-axis quadrature exponent m_i p / 2.
// Rejects p <= 1 and exponents <= -1.
std::pair<double, double> weighted_probe(int axis, const MultiIndex& m, double p,
                                         const RadialEvaluator& f, int K = 20,
                                         int quad_points = 64);

}  // namespace hriesz
