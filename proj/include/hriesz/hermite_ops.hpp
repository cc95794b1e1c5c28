#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "hriesz/multi_index.hpp"
#include "hriesz/rng.hpp"

namespace hriesz {

using Complex = std::complex<double>;

// Coefficient vector of a Hermite expansion against the eigenbasis of the
// Hermite operator H(lambda): a sparse map alpha -> c_alpha supported in
// {|alpha| <= K}.  H(lambda) acts diagonally with eigenvalue (2|alpha|+n)|lambda|.
//
// Ladder applications that would leave the truncation drop those coefficients
// and accumulate their squared mass in dropped_norm_sq; identity checks keep
// inputs in the interior so nothing is dropped.
class CoeffVec {
public:
    CoeffVec(int n, int K, double lambda);

    int dim() const { return n_; }
    int trunc() const { return K_; }
    double lambda() const { return lambda_; }

    void set(const MultiIndex& alpha, Complex value);
    void add(const MultiIndex& alpha, Complex value);
    Complex at(const MultiIndex& alpha) const;

    const std::map<MultiIndex, Complex>& data() const { return data_; }

    double norm_sq() const;
    double norm() const;
    // <c, d> = sum_alpha c_alpha conj(d_alpha)
    Complex inner(const CoeffVec& other) const;

    CoeffVec& add_scaled(const CoeffVec& other, Complex factor);
    CoeffVec& scale(Complex factor);

    int max_order() const;  // largest |alpha| in the support (-1 if empty)

    double dropped_norm_sq = 0.0;

private:
    void check_key(const MultiIndex& alpha) const;

    int n_;
    int K_;
    double lambda_;
    std::map<MultiIndex, Complex> data_;
};

// A_j(lambda) = -d/dxi_j + lambda xi_j:  e_alpha -> sqrt((2 alpha_j + 2) lambda)
// e_{alpha+e_j}.  The constant is pinned by the finite-difference oracle in the
// tests, not assumed from the stated commutator.  Requires lambda > 0.
CoeffVec raise(int axis, const CoeffVec& c);

// A_j*(lambda) = d/dxi_j + lambda xi_j:  e_alpha -> sqrt(2 alpha_j lambda)
// e_{alpha-e_j}, annihilating alpha_j = 0.
CoeffVec lower(int axis, const CoeffVec& c);

// H(lambda)^s: e_alpha -> ((2|alpha| + n) |lambda|)^s e_alpha, exact diagonal.
CoeffVec h_power(double s, const CoeffVec& c);

// First-order Riesz multiplier.  annihilate_side applies A_j H^{-1/2}
// (index-raising), create_side applies A_j* H^{-1/2} (index-lowering); the
// side names follow the Z_j / Z_j-bar pairing of the transforms.
enum class RieszSide { annihilate_side, create_side };
CoeffVec riesz_first(int axis, RieszSide side, const CoeffVec& c);

// Monomial higher-order multiplier A_k^q A_j^{*p} H^{-(p+q)/2} (axes 0-based,
// axis_lower = j, axis_raise = k != j, n >= 2).  The support must stay within
// |alpha| <= K - q; a violation throws with the offending index.
CoeffVec riesz_monomial(int p, int q, int axis_lower, int axis_raise, const CoeffVec& c);

// || LHS c - RHS c || / ||c|| with
//   LHS = A_2^q A_1^{*p} H^{-(p+q)/2}
//   RHS = A_2^{q-p} H^{-(q-p)/2} (H^{-1/2} A_2 A_1^* H^{-1/2})^p,
// both built from raise/lower/h_power.  Requires q >= p >= 1, n >= 2.
double factorization_defect(int p, int q, const CoeffVec& c);

struct CommutatorReport {
    double c_star = 0.0;        // measured constant in (A_j A_j* - A_j* A_j) = c* I
    double max_residual = 0.0;  // max_alpha ||(raise lower - lower raise) e_alpha - c* e_alpha||
    double shift_defect = 0.0;  // max_alpha ||(H A_j - A_j H + c* A_j) e_alpha||
};

// Measures the ladder commutator constant over all interior basis vectors
// (|alpha| <= K-1) and the induced H A_j - A_j H shift.
CommutatorReport commutator_measure(int n, int axis, double lambda, int K);

// (||riesz vector of c||, ||riesz vector after A_j -> sum_k U_{jk} A_k||),
// ell^2-aggregated over axes.  U is n x n row-major, unitary to 1e-12.
std::pair<double, double> rotation_norm_equality(const std::vector<Complex>& U,
                                                 const CoeffVec& c);

// Relative defect of sum_j (||R_j c||^2 + ||R_j-bar c||^2) = 2 ||c||^2.
double square_function_defect(const CoeffVec& c);

// Random vector supported in |alpha| <= max_order with unit-scale complex
// gaussian entries; deterministic for a fixed rng state.
CoeffVec random_coeff_vec(int n, int K, double lambda, int max_order, Rng& rng);

}  // namespace hriesz
