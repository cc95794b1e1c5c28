#include "hriesz/hermite_ops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hriesz {

CoeffVec::CoeffVec(int n, int K, double lambda) : n_(n), K_(K), lambda_(lambda) {
    if (n < 1) throw std::invalid_argument("CoeffVec: n must be >= 1");
    if (K < 0) throw std::invalid_argument("CoeffVec: K must be >= 0");
    if (lambda == 0.0) throw std::invalid_argument("CoeffVec: lambda must be nonzero");
}

void CoeffVec::check_key(const MultiIndex& alpha) const {
    if (alpha.size() != n_) throw std::invalid_argument("CoeffVec: index length != n");
    if (alpha.order() > K_) throw std::invalid_argument("CoeffVec: index outside |alpha| <= K");
}

void CoeffVec::set(const MultiIndex& alpha, Complex value) {
    check_key(alpha);
    if (value == Complex(0.0, 0.0))
        data_.erase(alpha);
    else
        data_[alpha] = value;
}

void CoeffVec::add(const MultiIndex& alpha, Complex value) {
    check_key(alpha);
    data_[alpha] += value;
}

Complex CoeffVec::at(const MultiIndex& alpha) const {
    const auto it = data_.find(alpha);
    return it == data_.end() ? Complex(0.0, 0.0) : it->second;
}

double CoeffVec::norm_sq() const {
    double s = 0.0;
    for (const auto& [alpha, v] : data_) s += std::norm(v);
    return s;
}

double CoeffVec::norm() const { return std::sqrt(norm_sq()); }

Complex CoeffVec::inner(const CoeffVec& other) const {
    if (other.n_ != n_) throw std::invalid_argument("CoeffVec::inner: dimension mismatch");
    Complex s(0.0, 0.0);
    for (const auto& [alpha, v] : data_) s += v * std::conj(other.at(alpha));
    return s;
}

CoeffVec& CoeffVec::add_scaled(const CoeffVec& other, Complex factor) {
    if (other.n_ != n_ || other.K_ != K_)
        throw std::invalid_argument("CoeffVec::add_scaled: shape mismatch");
    for (const auto& [alpha, v] : other.data_) data_[alpha] += factor * v;
    dropped_norm_sq += std::norm(factor) * other.dropped_norm_sq;
    return *this;
}

CoeffVec& CoeffVec::scale(Complex factor) {
    for (auto& [alpha, v] : data_) v *= factor;
    dropped_norm_sq *= std::norm(factor);
    return *this;
}

int CoeffVec::max_order() const {
    int m = -1;
    for (const auto& [alpha, v] : data_) m = std::max(m, alpha.order());
    return m;
}

namespace {
void require_axis(int axis, const CoeffVec& c, const char* who) {
    if (axis < 0 || axis >= c.dim())
        throw std::invalid_argument(std::string(who) + ": axis out of range");
}
void require_positive_lambda(const CoeffVec& c, const char* who) {
    if (c.lambda() <= 0.0)
        throw std::domain_error(std::string(who) + ": requires lambda > 0");
}
}  // namespace

CoeffVec raise(int axis, const CoeffVec& c) {
    require_axis(axis, c, "raise");
    require_positive_lambda(c, "raise");
    CoeffVec out(c.dim(), c.trunc(), c.lambda());
    out.dropped_norm_sq = c.dropped_norm_sq;
    for (const auto& [alpha, v] : c.data()) {
        const double kappa = std::sqrt((2.0 * alpha[axis] + 2.0) * c.lambda());
        if (alpha.order() + 1 > c.trunc())
            out.dropped_norm_sq += std::norm(kappa * v);
        else
            out.add(alpha.plus(axis), kappa * v);
    }
    return out;
}

CoeffVec lower(int axis, const CoeffVec& c) {
    require_axis(axis, c, "lower");
    require_positive_lambda(c, "lower");
    CoeffVec out(c.dim(), c.trunc(), c.lambda());
    out.dropped_norm_sq = c.dropped_norm_sq;
    for (const auto& [alpha, v] : c.data()) {
        if (alpha[axis] == 0) continue;  // vacuum annihilation
        const double kappa = std::sqrt(2.0 * alpha[axis] * c.lambda());
        out.add(alpha.minus(axis), kappa * v);
    }
    return out;
}

CoeffVec h_power(double s, const CoeffVec& c) {
    CoeffVec out(c.dim(), c.trunc(), c.lambda());
    out.dropped_norm_sq = c.dropped_norm_sq;
    const double abs_lambda = std::abs(c.lambda());
    for (const auto& [alpha, v] : c.data()) {
        const double eig = (2.0 * alpha.order() + c.dim()) * abs_lambda;
        out.add(alpha, std::pow(eig, s) * v);
    }
    return out;
}

CoeffVec riesz_first(int axis, RieszSide side, const CoeffVec& c) {
    const CoeffVec half = h_power(-0.5, c);
    return side == RieszSide::annihilate_side ? raise(axis, half) : lower(axis, half);
}

CoeffVec riesz_monomial(int p, int q, int axis_lower, int axis_raise, const CoeffVec& c) {
    if (p < 0 || q < 0) throw std::invalid_argument("riesz_monomial: p, q must be >= 0");
    if (c.dim() < 2) throw std::invalid_argument("riesz_monomial: requires n >= 2");
    if (axis_lower == axis_raise)
        throw std::invalid_argument("riesz_monomial: axes must differ");
    require_axis(axis_lower, c, "riesz_monomial");
    require_axis(axis_raise, c, "riesz_monomial");
    for (const auto& [alpha, v] : c.data()) {
        if (alpha.order() > c.trunc() - q) {
            std::ostringstream msg;
            msg << "riesz_monomial: support violates |alpha| <= K - q at alpha = " << alpha;
            throw std::domain_error(msg.str());
        }
    }
    CoeffVec out = h_power(-0.5 * (p + q), c);
    for (int i = 0; i < p; ++i) out = lower(axis_lower, out);
    for (int i = 0; i < q; ++i) out = raise(axis_raise, out);
    return out;
}

double factorization_defect(int p, int q, const CoeffVec& c) {
    if (p < 1 || q < p) throw std::invalid_argument("factorization_defect: need q >= p >= 1");
    if (c.dim() < 2) throw std::invalid_argument("factorization_defect: requires n >= 2");
    const double cnorm = c.norm();
    if (cnorm == 0.0) return 0.0;

    const CoeffVec lhs = riesz_monomial(p, q, 0, 1, c);

    CoeffVec rhs = c;
    for (int i = 0; i < p; ++i) {
        rhs = h_power(-0.5, rhs);
        rhs = lower(0, rhs);
        rhs = raise(1, rhs);
        rhs = h_power(-0.5, rhs);
    }
    rhs = h_power(-0.5 * (q - p), rhs);
    for (int i = 0; i < q - p; ++i) rhs = raise(1, rhs);

    CoeffVec diff = lhs;
    diff.add_scaled(rhs, Complex(-1.0, 0.0));
    return diff.norm() / cnorm;
}

CommutatorReport commutator_measure(int n, int axis, double lambda, int K) {
    if (K < 2) throw std::invalid_argument("commutator_measure: K must be >= 2");
    if (lambda <= 0.0) throw std::domain_error("commutator_measure: lambda must be > 0");

    const auto interior = simplex_indices(n, K - 1);

    // (raise lower - lower raise) e_alpha is diagonal; collect the measured
    // diagonal values and fit the minimax constant.
    std::vector<double> diag;
    diag.reserve(interior.size());
    for (const auto& alpha : interior) {
        CoeffVec e(n, K, lambda);
        e.set(alpha, 1.0);
        CoeffVec v = raise(axis, lower(axis, e));
        v.add_scaled(lower(axis, raise(axis, e)), -1.0);
        diag.push_back(v.at(alpha).real());
    }
    const auto [lo, hi] = std::minmax_element(diag.begin(), diag.end());
    CommutatorReport report;
    report.c_star = 0.5 * (*lo + *hi);

    for (size_t i = 0; i < interior.size(); ++i) {
        CoeffVec e(n, K, lambda);
        e.set(interior[i], 1.0);
        CoeffVec v = raise(axis, lower(axis, e));
        v.add_scaled(lower(axis, raise(axis, e)), -1.0);
        v.add(interior[i], -report.c_star);
        report.max_residual = std::max(report.max_residual, v.norm());
    }

    // H A_j - A_j H = -c* A_j on interior vectors (the shift constant has the
    // opposite sign of the commutator constant).
    for (const auto& alpha : interior) {
        CoeffVec e(n, K, lambda);
        e.set(alpha, 1.0);
        CoeffVec d = h_power(1.0, raise(axis, e));
        d.add_scaled(raise(axis, h_power(1.0, e)), -1.0);
        d.add_scaled(raise(axis, e), report.c_star);
        report.shift_defect = std::max(report.shift_defect, d.norm());
    }
    return report;
}

std::pair<double, double> rotation_norm_equality(const std::vector<Complex>& U,
                                                 const CoeffVec& c) {
    const int n = c.dim();
    if (static_cast<int>(U.size()) != n * n)
        throw std::invalid_argument("rotation_norm_equality: U must be n x n");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Complex s(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                s += U[static_cast<size_t>(i * n + k)] * std::conj(U[static_cast<size_t>(j * n + k)]);
            const double expect = (i == j) ? 1.0 : 0.0;
            if (std::abs(s - expect) > 1e-12)
                throw std::invalid_argument("rotation_norm_equality: U is not unitary");
        }
    }

    std::vector<CoeffVec> v;
    v.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) v.push_back(riesz_first(k, RieszSide::annihilate_side, c));

    double base_sq = 0.0;
    for (const auto& vk : v) base_sq += vk.norm_sq();

    double rotated_sq = 0.0;
    for (int j = 0; j < n; ++j) {
        CoeffVec w(c.dim(), c.trunc(), c.lambda());
        for (int k = 0; k < n; ++k) w.add_scaled(v[static_cast<size_t>(k)], U[static_cast<size_t>(j * n + k)]);
        rotated_sq += w.norm_sq();
    }
    return {std::sqrt(base_sq), std::sqrt(rotated_sq)};
}

double square_function_defect(const CoeffVec& c) {
    const double target = 2.0 * c.norm_sq();
    if (target == 0.0) return 0.0;
    double total = 0.0;
    for (int j = 0; j < c.dim(); ++j) {
        total += riesz_first(j, RieszSide::annihilate_side, c).norm_sq();
        total += riesz_first(j, RieszSide::create_side, c).norm_sq();
    }
    return std::abs(total - target) / target;
}

CoeffVec random_coeff_vec(int n, int K, double lambda, int max_order, Rng& rng) {
    if (max_order > K) throw std::invalid_argument("random_coeff_vec: max_order > K");
    CoeffVec c(n, K, lambda);
    for (const auto& alpha : simplex_indices(n, max_order))
        c.set(alpha, Complex(rng.gaussian(), rng.gaussian()));
    return c;
}

}  // namespace hriesz
