#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "hriesz/hermite_ops.hpp"
#include "hriesz/quadrature.hpp"
#include "hriesz/special_fn.hpp"

using namespace hriesz;

namespace {

// Projects (-d/dx + lambda x) h_k (or with +d/dx) onto h_{k+-1} by trapezoid;
// the derivative is a central difference with step 1e-4.  This grounds the
// ladder constants independently of the coefficient bookkeeping.
double measured_ladder_constant(int k, double lambda, bool raising) {
    const double step = 1e-4;
    const double L = 14.0 / std::sqrt(std::min(lambda, 1.0));
    const int target = raising ? k + 1 : k - 1;
    auto integrand = [&](double x) {
        const double dh =
            (hermite_fn(k, lambda, x + step) - hermite_fn(k, lambda, x - step)) / (2.0 * step);
        const double ax = (raising ? -dh : dh) + lambda * x * hermite_fn(k, lambda, x);
        return ax * hermite_fn(target, lambda, x);
    };
    return trapezoid(integrand, -L, L, 6001);
}

}  // namespace

TEST_CASE("ladder constants match the finite-difference oracle") {
    for (double lambda : {0.5, 1.0, 2.0}) {
        for (int k = 0; k <= 5; ++k) {
            const double kappa_plus = measured_ladder_constant(k, lambda, true);
            CHECK(std::abs(kappa_plus - std::sqrt((2.0 * k + 2.0) * lambda)) /
                      std::sqrt((2.0 * k + 2.0) * lambda) <=
                  1e-6);
            if (k >= 1) {
                const double kappa_minus = measured_ladder_constant(k, lambda, false);
                CHECK(std::abs(kappa_minus - std::sqrt(2.0 * k * lambda)) /
                          std::sqrt(2.0 * k * lambda) <=
                      1e-6);
            }
        }
    }
}

TEST_CASE("raise and lower bookkeeping") {
    CoeffVec zero(1, 6, 1.0);
    CHECK(raise(0, zero).norm() == 0.0);

    CoeffVec e0(1, 6, 1.0);
    e0.set(MultiIndex{0}, 1.0);
    const CoeffVec r = raise(0, e0);
    CHECK(std::abs(r.at(MultiIndex{1}) - std::sqrt(2.0)) <= 1e-15);

    CHECK(lower(0, e0).norm() == 0.0);  // vacuum annihilation

    // lower(raise(e_0)) = kappa+(0) kappa-(1) e_0 = 2 e_0 at lambda = 1
    const CoeffVec lr = lower(0, raise(0, e0));
    CHECK(std::abs(lr.at(MultiIndex{0}) - 2.0) <= 1e-14);

    CoeffVec neg(1, 6, -1.0);
    neg.set(MultiIndex{0}, 1.0);
    CHECK_THROWS_AS(raise(0, neg), std::domain_error);
    CHECK_THROWS_AS(lower(0, neg), std::domain_error);
}

TEST_CASE("raise reports dropped truncation mass") {
    CoeffVec top(1, 3, 1.0);
    top.set(MultiIndex{3}, 2.0);
    const CoeffVec r = raise(0, top);
    CHECK(r.norm() == 0.0);
    CHECK(r.dropped_norm_sq == doctest::Approx(8.0 * 4.0).epsilon(1e-14));  // |kappa+ * 2|^2
}

TEST_CASE("h_power diagonal action and exponent law") {
    CoeffVec e0(2, 8, 1.0);
    e0.set(MultiIndex{0, 0}, 1.0);
    CHECK(std::abs(h_power(-0.5, e0).at(MultiIndex{0, 0}) - std::pow(2.0, -0.5)) <= 1e-15);
    CHECK(std::abs(h_power(0.0, e0).at(MultiIndex{0, 0}) - 1.0) == 0.0);

    Rng rng(7);
    const CoeffVec c = random_coeff_vec(2, 8, 0.7, 8, rng);
    CoeffVec ab = h_power(0.3, h_power(-0.8, c));
    CoeffVec direct = h_power(-0.5, c);
    ab.add_scaled(direct, Complex(-1.0, 0.0));
    CHECK(ab.norm() / direct.norm() <= 1e-13);
}

TEST_CASE("riesz_first composition of validated constants") {
    CoeffVec e0(1, 6, 1.0);
    e0.set(MultiIndex{0}, 1.0);
    CHECK(riesz_first(0, RieszSide::create_side, e0).norm() == 0.0);

    CoeffVec e1(1, 6, 1.0);
    e1.set(MultiIndex{1}, 1.0);
    const CoeffVec out = riesz_first(0, RieszSide::create_side, e1);
    // kappa-(1,1) * eigenvalue(|alpha|=1, n=1)^{-1/2} = sqrt(2)/sqrt(3)
    CHECK(std::abs(out.at(MultiIndex{0}) - std::sqrt(2.0 / 3.0)) <= 1e-14);
}

TEST_CASE("riesz_monomial identity, vacuum, and single-term composition") {
    Rng rng(11);
    const CoeffVec c = random_coeff_vec(2, 10, 1.0, 8, rng);
    CoeffVec same = riesz_monomial(0, 0, 0, 1, c);
    same.add_scaled(c, Complex(-1.0, 0.0));
    CHECK(same.norm() <= 1e-14 * c.norm());

    CoeffVec e0(2, 10, 1.0);
    e0.set(MultiIndex{0, 0}, 1.0);
    CHECK(riesz_monomial(1, 0, 0, 1, e0).norm() == 0.0);

    CoeffVec e10(2, 10, 1.0);
    e10.set(MultiIndex{1, 0}, 1.0);
    const CoeffVec out = riesz_monomial(1, 1, 0, 1, e10);
    // kappa-(1,1) kappa+(0,1) / (2*1+2) = 2/4
    CHECK(std::abs(out.at(MultiIndex{0, 1}) - 0.5) <= 1e-14);
}

TEST_CASE("riesz_monomial rejects support outside |alpha| <= K - q") {
    CoeffVec c(2, 4, 1.0);
    c.set(MultiIndex{2, 2}, 1.0);
    CHECK_THROWS_AS(riesz_monomial(1, 1, 0, 1, c), std::domain_error);
}

TEST_CASE("factorization identity holds to 1e-12") {
    for (int n : {2, 3}) {
        for (double lambda : {0.5, 1.0, 2.0}) {
            Rng rng(100 + n);
            for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
                const int K = 12;
                const CoeffVec c = random_coeff_vec(n, K, lambda, K - q, rng);
                CHECK(factorization_defect(p, q, c) <= 1e-12);
            }
        }
    }
    // pinned single-basis case: (1,2) on e_(2,0)
    CoeffVec e(2, 10, 1.0);
    e.set(MultiIndex{2, 0}, 1.0);
    CHECK(factorization_defect(1, 2, e) <= 1e-12);
    CoeffVec z(2, 10, 1.0);
    CHECK(factorization_defect(1, 1, z) == 0.0);
}

TEST_CASE("square-function identity on random interior vectors") {
    for (int n : {1, 2, 3}) {
        for (double lambda : {0.5, 1.0, 2.0}) {
            Rng rng(n * 17 + static_cast<int>(lambda * 10));
            for (int trial = 0; trial < 20; ++trial) {
                const CoeffVec c = random_coeff_vec(n, 10, lambda, 9, rng);
                CHECK(square_function_defect(c) <= 1e-10);
            }
        }
    }
}

TEST_CASE("diagonal contraction factors of H^{-1/2} A_2 A_1* H^{-1/2}") {
    for (int n : {2, 3, 4}) {
        for (const auto& alpha : simplex_indices(n, 10)) {
            const double factor = std::sqrt(2.0 * alpha[0]) * std::sqrt(2.0 * alpha[1] + 2.0) /
                                  (2.0 * alpha.order() + n);
            CHECK(factor <= 1.0 + 1e-15);
        }
    }
}

TEST_CASE("A_2 A_1* preserves |alpha| and commutes with h_power") {
    const int n = 2, K = 8;
    for (const auto& alpha : simplex_indices(n, K - 1)) {
        CoeffVec e(n, K, 1.0);
        e.set(alpha, 1.0);
        CoeffVec left = h_power(-0.5, raise(1, lower(0, e)));
        const CoeffVec right = raise(1, lower(0, h_power(-0.5, e)));
        left.add_scaled(right, Complex(-1.0, 0.0));
        CHECK(left.norm() <= 1e-13);
    }
}

TEST_CASE("adjointness of raise and lower") {
    Rng rng(23);
    const CoeffVec c = random_coeff_vec(2, 9, 1.3, 8, rng);
    const CoeffVec d = random_coeff_vec(2, 9, 1.3, 9, rng);
    for (int axis : {0, 1}) {
        const Complex lhs = raise(axis, c).inner(d);
        const Complex rhs = c.inner(lower(axis, d));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
    }
}

TEST_CASE("commutator measurement") {
    const CommutatorReport r1 = commutator_measure(1, 0, 1.0, 8);
    CHECK(r1.max_residual <= 1e-12);
    CHECK(r1.c_star == doctest::Approx(-2.0).epsilon(1e-13));  // measured; stated value is -4 lambda
    CHECK(r1.shift_defect <= 1e-12);

    const CommutatorReport rh = commutator_measure(1, 0, 0.5, 8);
    const CommutatorReport r2 = commutator_measure(1, 0, 2.0, 8);
    CHECK(std::abs(rh.c_star / r1.c_star - 0.5) <= 1e-12);
    CHECK(std::abs(r2.c_star / r1.c_star - 2.0) <= 1e-12);

    const CommutatorReport rn = commutator_measure(2, 1, 1.0, 6);
    CHECK(rn.max_residual <= 1e-12);
    CHECK(rn.shift_defect <= 1e-12);
}

TEST_CASE("rotation invariance of the aggregated Riesz norm") {
    Rng rng(31);
    const CoeffVec c = random_coeff_vec(2, 10, 1.0, 9, rng);

    const std::vector<Complex> id = {1.0, 0.0, 0.0, 1.0};
    auto [a0, b0] = rotation_norm_equality(id, c);
    CHECK(a0 == b0);

    const std::vector<Complex> swap = {0.0, 1.0, 1.0, 0.0};
    auto [a1, b1] = rotation_norm_equality(swap, c);
    CHECK(std::abs(a1 - b1) <= 1e-12 * a1);

    const std::vector<Complex> phases = {Complex(0.0, 1.0), 0.0, 0.0,
                                         std::polar(1.0, 0.73)};
    auto [a2, b2] = rotation_norm_equality(phases, c);
    CHECK(std::abs(a2 - b2) <= 1e-12 * a2);

    // dense unitary: diag(phases) * Givens rotation
    const double th = 0.6;
    const Complex ph1(0.0, 1.0), ph2 = std::polar(1.0, -0.2);
    const std::vector<Complex> dense = {ph1 * std::cos(th), ph1 * std::sin(th),
                                        -ph2 * std::sin(th), ph2 * std::cos(th)};
    auto [a3, b3] = rotation_norm_equality(dense, c);
    CHECK(std::abs(a3 - b3) <= 1e-12 * a3);

    const std::vector<Complex> not_unitary = {1.0, 0.0, 0.0, 2.0};
    CHECK_THROWS_AS(rotation_norm_equality(not_unitary, c), std::invalid_argument);
}
