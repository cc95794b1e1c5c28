#pragma once

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "hriesz/laguerre_riesz.hpp"
#include "hriesz/multi_index.hpp"
#include "hriesz/special_fn.hpp"

namespace hriesz {

using Complex = std::complex<double>;
using CPoint = std::vector<Complex>;  // point of C^n

// Phase constant of the index-lowering operator on the Phi_{alpha,alpha+m}
// basis as normalized by phi_special:
//   Zbar_j(1) Phi_{alpha,alpha+m} = kLoweringPhase (2 alpha_j)^{1/2} Phi_{alpha-e_j,alpha+m}.
// Pinned by the finite-difference oracle in the tests.
inline const Complex kLoweringPhase{0.0, -1.0};

// Net phase of the intertwining identity
//   t_zbar(g)(z) = kIntertwinePhase z^m (z_j/|z_j|) (R_{j,m} f)(|z|):
// the composite of kLoweringPhase with the i^{|m|} carried by (g, Phi) and the
// (-i)^{|m|+1} carried by the gap-shifted Phi factor; the |m|-dependent parts
// cancel and kLoweringPhase (-i) = -1 remains.  Pinned by the dual-path tests.
inline const Complex kIntertwinePhase{-1.0, 0.0};

// Special Hermite function of bidegree (alpha, alpha+m):
//   (2 pi)^{-n/2} (alpha!/(alpha+m)!)^{1/2} 2^{-|m|/2} (-i)^{|m|} z^m
//   prod_j phi_{alpha_j}^{m_j}(|z_j|)          (lambda = 1 Laguerre functions)
Complex phi_special(const MultiIndex& alpha, const MultiIndex& m, const CPoint& z);

// g(z) = z^m f(|z_1|, ..., |z_n|) with a polyradial profile f.
struct MHomogeneous {
    MultiIndex m;
    RadialEvaluator profile;
};

// (g, Phi_{alpha,alpha+m}) via per-axis radial integrals:
//   (2 pi)^{n/2} i^{|m|} (f, Psi_alpha^m)_{dmu_m};
// no 2n-dimensional quadrature is involved.
Complex coeff_reduce(const MHomogeneous& g, const MultiIndex& alpha, int quad_points = 64);

// Truncated ladder series
//   kLoweringPhase sum_{|alpha|<=K} (2 alpha_j)^{1/2} (2|alpha|+n)^{-1/2}
//                  (g, Phi_{alpha,alpha+m}) Phi_{alpha-e_j,alpha+m}(z);
// the shifted factor is phi_special with bidegree gap m+e_j.  The series
// coefficients are computed once at construction.
class TZbarSeries {
public:
    TZbarSeries(int axis, const MHomogeneous& g, int K, int quad_points = 64);
    TZbarSeries(int axis, const LagCoeffs& coeffs, const MultiIndex& m);

    Complex operator()(const CPoint& z) const;

private:
    int axis_;
    MultiIndex m_;
    LagCoeffs coeffs_;  // (f, Psi_alpha^m)
};

Complex t_zbar(int axis, const MHomogeneous& g, const CPoint& z, int K, int quad_points = 64);

// Dual-path check: max_z |t_zbar(g)(z) - kLoweringPhase z^m (z_j/|z_j|) (R_{j,m} f)(|z|)|
// relative to max_z of the first path (absolute when that vanishes).  Samples
// with z_j = 0 are rejected.
double intertwine_defect(int axis, const MHomogeneous& g, const std::vector<CPoint>& samples,
                         int K, int quad_points = 64);

// ---- plane grid machinery (n = 1) ---------------------------------------------

// Complex samples on the half-open symmetric lattice {(i - N/2) h : 0 <= i < N},
// h = 2R/N, row-major [iy][ix].  The lattice contains 0 and is closed under
// differences, which twisted_conv needs.
struct PlaneGridFn {
    double R = 8.0;
    int N = 128;
    std::vector<Complex> vals;

    PlaneGridFn(double extent, int points);
    static PlaneGridFn sample(double extent, int points,
                              const std::function<Complex(Complex)>& f);

    double spacing() const { return 2.0 * R / N; }
    double coord(int i) const { return (i - N / 2) * spacing(); }
    Complex& at(int ix, int iy) { return vals[static_cast<size_t>(iy) * N + ix]; }
    const Complex& at(int ix, int iy) const { return vals[static_cast<size_t>(iy) * N + ix]; }

    double max_abs() const;
    double edge_ratio() const;  // max |v| on the outermost ring / max |v| overall
    double sup_distance(const PlaneGridFn& other) const;
    PlaneGridFn& add_scaled(const PlaneGridFn& other, Complex factor);
};

struct TwistedConvStats {
    double edge_ratio_f = 0.0;
    double edge_ratio_g = 0.0;
    bool decay_ok = true;  // edge_ratio_f * edge_ratio_g <= 1e-12
};

// f x g(z) = int f(z-w) g(w) e^{(i/2) Im(z conj(w))} dw by direct quadrature
// at every grid point; O(N^4), row-parallel.  Boundary decay of the product
// integrand is reported through stats, not enforced.
PlaneGridFn twisted_conv(const PlaneGridFn& F, const PlaneGridFn& G,
                         TwistedConvStats* stats = nullptr);

// P_k F = (2 pi)^{-1} F x phi_k^0 on the same grid (n = 1).
PlaneGridFn project_k(const PlaneGridFn& F, int k, TwistedConvStats* stats = nullptr);

// ---- kernel series -------------------------------------------------------------

struct KernelSeriesResult {
    double value = 0.0;  // partial sum at the stopping index (or at the scan cap)
    bool converged = false;
    int terms = 0;
    double last_term = 0.0;
};

// Truncated series sum_k (2k + 2 pdeg + n)^{-m/2} phi_k^{n+pdeg+qdeg-1}(r) with
// m = pdeg + qdeg >= 1.  Summation stops once at least K terms are in and the
// last term is below 1e-12 |partial sum|; if that never happens within the
// scan cap of max(4K, 1000) terms the result reports non-convergence at this r.
KernelSeriesResult kernel_km(int pdeg, int qdeg, int n, double r, int K);

}  // namespace hriesz
