#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "doctest.h"
#include "hriesz/rng.hpp"
#include "hriesz/special_hermite.hpp"

using namespace hriesz;

namespace {

const double kPi = 3.141592653589793238463;

// ∫ A conj(B) dA over [-L, L]^2 by trapezoid (2-D oracle, independent of the
// radial-integral route).
Complex inner_plane(const std::function<Complex(Complex)>& A,
                    const std::function<Complex(Complex)>& B, double L, int npts) {
    const double h = 2.0 * L / (npts - 1);
    Complex sum(0.0, 0.0);
    for (int iy = 0; iy < npts; ++iy) {
        const double wy = (iy == 0 || iy == npts - 1) ? 0.5 : 1.0;
        const double y = -L + iy * h;
        for (int ix = 0; ix < npts; ++ix) {
            const double wx = (ix == 0 || ix == npts - 1) ? 0.5 : 1.0;
            const Complex z(-L + ix * h, y);
            sum += wx * wy * A(z) * std::conj(B(z));
        }
    }
    return sum * h * h;
}

// Zbar(1) = 2 d/dzbar + z/2 by central differences (d/dzbar = (d/dx + i d/dy)/2).
Complex zbar_fd(const std::function<Complex(Complex)>& f, Complex z, double h = 1e-5) {
    const Complex fx = (f(z + h) - f(z - h)) / (2.0 * h);
    const Complex fy = (f(z + Complex(0.0, h)) - f(z - Complex(0.0, h))) / (2.0 * h);
    return fx + Complex(0.0, 1.0) * fy + 0.5 * z * f(z);
}

std::vector<CPoint> annulus_samples(int n, int count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CPoint> samples;
    samples.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        CPoint z(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j)
            z[static_cast<size_t>(j)] = std::polar(rng.uniform(0.2, 3.0), rng.uniform(0.0, 2.0 * kPi));
        samples.push_back(std::move(z));
    }
    return samples;
}

}  // namespace

TEST_CASE("phi_special values") {
    const Complex base = phi_special(MultiIndex{0}, MultiIndex{0}, {Complex(0.0, 0.0)});
    CHECK(base.real() == doctest::Approx(std::pow(2.0 * kPi, -0.5)).epsilon(1e-14));
    CHECK(base.imag() == 0.0);
    CHECK(std::abs(phi_special(MultiIndex{0}, MultiIndex{1}, {Complex(0.0, 0.0)})) == 0.0);
    CHECK_THROWS_AS(phi_special(MultiIndex{0, 1}, MultiIndex{0}, {Complex(1.0, 0.0)}),
                    std::invalid_argument);
}

TEST_CASE("phi_special is L2-normalized on the plane") {
    for (int a = 0; a <= 3; ++a) {
        for (int m = 0; m <= 2; ++m) {
            auto f = [&](Complex z) { return phi_special(MultiIndex{a}, MultiIndex{m}, {z}); };
            const Complex nrm = inner_plane(f, f, 11.0, 221);
            CHECK(std::abs(nrm.real() - 1.0) <= 1e-6);
            CHECK(std::abs(nrm.imag()) <= 1e-12);
        }
    }
}

TEST_CASE("index-lowering phase constant matches the finite-difference oracle") {
    for (auto [a, m] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 0}, {2, 2}, {3, 1}}) {
        auto f = [&](Complex z) { return phi_special(MultiIndex{a}, MultiIndex{m}, {z}); };
        auto shifted = [&](Complex z) {
            return phi_special(MultiIndex{a - 1}, MultiIndex{m + 1}, {z});
        };
        const Complex expect = kLoweringPhase * std::sqrt(2.0 * a);
        for (Complex z : {Complex(0.7, 0.3), Complex(-1.1, 0.9), Complex(0.2, -1.4)}) {
            const Complex measured = zbar_fd(f, z) / shifted(z);
            CHECK(std::abs(measured - expect) <= 1e-6 * std::abs(expect));
        }
    }
    // one multi-axis case: Zbar_1 with the second coordinate frozen
    auto f2 = [&](Complex z1) {
        return phi_special(MultiIndex{2, 1}, MultiIndex{1, 0}, {z1, Complex(0.4, -0.6)});
    };
    auto shifted2 = [&](Complex z1) {
        return phi_special(MultiIndex{1, 1}, MultiIndex{2, 0}, {z1, Complex(0.4, -0.6)});
    };
    const Complex measured = zbar_fd(f2, Complex(0.9, 0.2)) / shifted2(Complex(0.9, 0.2));
    CHECK(std::abs(measured - kLoweringPhase * 2.0) <= 1e-6 * 2.0);
}

TEST_CASE("coeff_reduce agrees with the direct plane inner product") {
    const MHomogeneous g{MultiIndex{1},
                         [](const std::vector<double>& r) { return std::exp(-r[0] * r[0] / 4.0); }};
    auto g_plane = [&](Complex z) { return z * std::exp(-std::norm(z) / 4.0); };
    for (int a : {0, 1, 2}) {
        const Complex reduced = coeff_reduce(g, MultiIndex{a});
        auto phi = [&](Complex z) { return phi_special(MultiIndex{a}, MultiIndex{1}, {z}); };
        const Complex direct = inner_plane(g_plane, phi, 11.0, 221);
        CHECK(std::abs(reduced - direct) <= 1e-6 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("coeff_reduce indicator behavior and zero profile") {
    const MultiIndex m{1, 0};
    const MHomogeneous zero{m, [](const std::vector<double>&) { return 0.0; }};
    CHECK(std::abs(coeff_reduce(zero, MultiIndex{1, 1})) == 0.0);

    const MultiIndex beta{1, 2};
    const MHomogeneous mode{m, [&](const std::vector<double>& r) { return psi(beta, m, r); }};
    const double scale = std::pow(2.0 * kPi, 1.0);  // (2 pi)^{n/2}, n = 2
    for (const auto& alpha : simplex_indices(2, 3)) {
        const Complex c = coeff_reduce(mode, alpha);
        CHECK(std::abs(std::abs(c) - (alpha == beta ? scale : 0.0)) <= 1e-8 * scale);
    }
}

TEST_CASE("t_zbar kills alpha = 0 content and is linear") {
    const MultiIndex m{1};
    const MHomogeneous ground{m, [&](const std::vector<double>& r) {
                                  return psi(MultiIndex{0}, m, r);
                              }};
    CHECK(std::abs(t_zbar(0, ground, {Complex(0.8, -0.1)}, 8)) <= 1e-12);

    const MHomogeneous f1{m, [&](const std::vector<double>& r) { return psi(MultiIndex{1}, m, r); }};
    const MHomogeneous f2{m, [&](const std::vector<double>& r) { return psi(MultiIndex{2}, m, r); }};
    const MHomogeneous mix{m, [&](const std::vector<double>& r) {
                               return 2.0 * psi(MultiIndex{1}, m, r) - 0.5 * psi(MultiIndex{2}, m, r);
                           }};
    const CPoint z = {Complex(1.1, 0.4)};
    const Complex lin = 2.0 * t_zbar(0, f1, z, 8) - 0.5 * t_zbar(0, f2, z, 8);
    CHECK(std::abs(t_zbar(0, mix, z, 8) - lin) <= 1e-12);
}

TEST_CASE("intertwining defect is small on both dual paths") {
    // n = 1, type m = (2), finite-Psi profile
    {
        const MultiIndex m{2};
        const MHomogeneous g{m, [&](const std::vector<double>& r) {
                                 return psi(MultiIndex{0}, m, r) + 0.5 * psi(MultiIndex{2}, m, r);
                             }};
        const double defect = intertwine_defect(0, g, annulus_samples(1, 40, 2024), 20);
        CHECK(defect <= 1e-6);
    }
    // n = 2, m = (1,0), wide Gaussian profile (width-mismatched so every mode
    // contributes)
    {
        const MultiIndex m{1, 0};
        const MHomogeneous g{m, [](const std::vector<double>& r) {
                                 return std::exp(-(r[0] * r[0] + r[1] * r[1]) / 8.0);
                             }};
        const double defect = intertwine_defect(0, g, annulus_samples(2, 40, 77), 20);
        CHECK(defect <= 1e-6);
    }
    // matched Gaussian is the pure alpha = 0 mode: both paths vanish
    {
        const MultiIndex m{1};
        const MHomogeneous g{m, [](const std::vector<double>& r) {
                                 return std::exp(-r[0] * r[0] / 4.0);
                             }};
        const double defect = intertwine_defect(0, g, annulus_samples(1, 20, 5), 12);
        CHECK(defect <= 1e-9);  // absolute; max |left side| is ~0
    }
    // zero profile
    {
        const MultiIndex m{1};
        const MHomogeneous g{m, [](const std::vector<double>&) { return 0.0; }};
        CHECK(intertwine_defect(0, g, annulus_samples(1, 10, 9), 8) == 0.0);
    }
    // z_j = 0 sample rejected
    {
        const MultiIndex m{1};
        const MHomogeneous g{m, [](const std::vector<double>& r) {
                                 return std::exp(-r[0] * r[0] / 8.0);
                             }};
        std::vector<CPoint> bad = {{Complex(0.0, 0.0)}};
        CHECK_THROWS_AS(intertwine_defect(0, g, bad, 8), std::domain_error);
    }
}

TEST_CASE("twisted convolution of Gaussians") {
    const int N = 128;
    const double R = 8.0;
    const PlaneGridFn phi0 = PlaneGridFn::sample(R, N, [](Complex z) {
        return Complex(std::exp(-std::norm(z) / 4.0), 0.0);
    });
    TwistedConvStats stats;
    const PlaneGridFn conv = twisted_conv(phi0, phi0, &stats);
    CHECK(stats.decay_ok);

    // (phi0 x phi0)(0) = int e^{-|w|^2/2} dw = 2 pi
    const int c = N / 2;
    CHECK(std::abs(conv.at(c, c) - Complex(2.0 * kPi, 0.0)) <= 1e-3 * 2.0 * kPi);

    // pointwise: phi0 x phi0 = 2 pi phi0
    PlaneGridFn expect = phi0;
    expect.add_scaled(phi0, Complex(2.0 * kPi - 1.0, 0.0));  // scale to 2 pi phi0
    CHECK(conv.sup_distance(expect) <= 1e-3);

    // |F x G| <= ||F||_1 ||G||_inf at every grid point
    double l1 = 0.0;
    for (const Complex& v : phi0.vals) l1 += std::abs(v);
    l1 *= phi0.spacing() * phi0.spacing();
    const double bound = l1 * phi0.max_abs() * (1.0 + 1e-12);
    for (const Complex& v : conv.vals) CHECK(std::abs(v) <= bound);
}

TEST_CASE("twisted convolution trivial and diagnostic cases") {
    const PlaneGridFn zero(8.0, 64);
    const PlaneGridFn g = PlaneGridFn::sample(8.0, 64, [](Complex z) {
        return Complex(std::exp(-std::norm(z) / 4.0), 0.0);
    });
    CHECK(twisted_conv(g, zero).max_abs() == 0.0);

    // a non-decayed input trips the boundary report
    const PlaneGridFn flat = PlaneGridFn::sample(8.0, 64, [](Complex) { return Complex(1.0, 0.0); });
    TwistedConvStats stats;
    twisted_conv(flat, flat, &stats);
    CHECK(!stats.decay_ok);

    const PlaneGridFn other(6.0, 64);
    CHECK_THROWS_AS(twisted_conv(g, other), std::invalid_argument);

    CHECK_THROWS_AS(PlaneGridFn(8.0, 16), std::invalid_argument);  // < 32 per axis
    CHECK_THROWS_AS(PlaneGridFn(-1.0, 64), std::invalid_argument);
}

TEST_CASE("projection algebra at reduced resolution") {
    const int N = 96;
    const double R = 8.0;
    const PlaneGridFn F = PlaneGridFn::sample(R, N, [](Complex z) {
        return Complex(std::exp(-std::norm(z) / 4.0), 0.0);
    });

    const PlaneGridFn p0 = project_k(F, 0);
    CHECK(p0.sup_distance(F) <= 1e-3);
    CHECK(project_k(F, 1).max_abs() <= 1e-3);

    const PlaneGridFn zero(R, N);
    CHECK(project_k(zero, 2).max_abs() == 0.0);

    // idempotence and cross-orthogonality for k, l <= 2
    std::vector<PlaneGridFn> proj;
    for (int l = 0; l <= 2; ++l) proj.push_back(project_k(F, l));
    for (int l = 0; l <= 2; ++l) {
        for (int k = 0; k <= 2; ++k) {
            const PlaneGridFn pk = project_k(proj[static_cast<size_t>(l)], k);
            if (k == l)
                CHECK(pk.sup_distance(proj[static_cast<size_t>(l)]) <= 2e-3);
            else
                CHECK(pk.max_abs() <= 2e-3);
        }
    }
}

TEST_CASE("projection completeness on a mode mixture") {
    const int N = 96;
    const PlaneGridFn F = PlaneGridFn::sample(8.0, N, [](Complex z) {
        return phi_special(MultiIndex{0}, MultiIndex{0}, {z}) +
               0.5 * phi_special(MultiIndex{1}, MultiIndex{1}, {z});
    });
    PlaneGridFn sum(8.0, N);
    for (int k = 0; k <= 8; ++k) sum.add_scaled(project_k(F, k), Complex(1.0, 0.0));
    CHECK(sum.sup_distance(F) <= 2e-3);
}

TEST_CASE("kernel series stopping rule reports honestly") {
    CHECK_THROWS_AS(kernel_km(0, 0, 2, 1.0, 100), std::invalid_argument);

    // the raw series does not settle at r = 1: growing oscillatory terms
    const KernelSeriesResult a = kernel_km(1, 0, 2, 1.0, 2000);
    CHECK(!a.converged);
    CHECK(std::isfinite(a.value));
    CHECK(a.terms == 8000);  // scanned to the cap

    // below the turning point every term is tiny, but the oscillatory range
    // re-enters before the relative cutoff can fire
    const KernelSeriesResult b = kernel_km(1, 0, 2, 20.0, 40);
    CHECK(!b.converged);
    CHECK(std::isfinite(b.value));

    const KernelSeriesResult c = kernel_km(2, 1, 2, 1.0, 500);
    CHECK(!c.converged);
}
