#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace hriesz {

using Complex = std::complex<double>;

// Scalar Fourier multiplier lambda -> m(lambda).  continuous_at_integers is an
// asserted flag supplied by the caller, not verified pointwise.
struct MultiplierSpec {
    std::function<Complex(double)> symbol;
    std::string label;
    bool continuous_at_integers = true;
};

MultiplierSpec identity_multiplier();
MultiplierSpec shift_multiplier(double a);  // e^{i a lambda}
MultiplierSpec hilbert_multiplier();        // -i sgn(lambda), 0 at lambda = 0

enum class SignalDomain { line, circle };

// Uniformly sampled signal.  N is a power of two >= 64.
//  line:   t_i = (i - N/2) h on the window [-Nh/2, Nh/2)
//  circle: t_i = i h with h N = 2 pi
struct SampledSignal {
    SignalDomain domain = SignalDomain::line;
    int N = 0;
    double h = 0.0;
    std::vector<Complex> samples;

    static SampledSignal line(int N, double h);
    static SampledSignal circle(int N);

    double coord(int i) const {
        return domain == SignalDomain::line ? (i - N / 2) * h : i * h;
    }
};

// In-place radix-2 transform: a_k <- sum_j a_j e^{sign 2 pi i j k / N}.
void fft_radix2(std::vector<Complex>& a, int sign);

struct EdgeStats {
    double edge_ratio = 0.0;  // max |s| over the outer samples / max |s|
    bool ok = true;           // edge_ratio <= 1e-10
};

// Bin j carries frequency lambda_j = 2 pi j_signed / (N h) with
// j_signed = j for j < N/2 and j - N for j >= N/2.  The transform is
// DFT -> multiply by m(lambda_j) -> inverse DFT.  Window-edge mass is
// reported through stats, not enforced.
SampledSignal apply_line(const MultiplierSpec& mspec, const SampledSignal& s,
                         EdgeStats* stats = nullptr);

// Exact Fourier-series route: coefficients multiplied by m(k) at integer k.
SampledSignal apply_circle(const MultiplierSpec& mspec, const SampledSignal& s);

double lp_norm(const std::vector<Complex>& v, double p);

struct NormComparison {
    double line_norm_est = 0.0;
    double circle_norm_est = 0.0;
};

// Empirical operator-norm lower bounds: max of ||T s||_p / ||s||_p over the
// versioned ensemble (200 signals; band-limited / wrapped-bump / chirp kinds
// in rotation, line members enveloped by a sigma = 4 pi Gaussian).
// Deterministic for a fixed seed.
NormComparison norm_compare(const MultiplierSpec& mspec, double p, std::uint64_t seed);

// Ensemble internals, exposed for the consistency tests: member i of the
// circle ensemble and its enveloped line counterpart.
SampledSignal ensemble_circle_member(int index, std::uint64_t seed, int N = 4096);
SampledSignal ensemble_line_member(int index, std::uint64_t seed, int N = 4096,
                                   double window_half = 32.0 * 3.141592653589793238463);

}  // namespace hriesz
