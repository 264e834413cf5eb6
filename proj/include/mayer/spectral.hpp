#pragma once

#include <cstdint>
#include <vector>

#include "mayer/operator.hpp"
#include "mayer/orbit_sum.hpp"

namespace mayer {

enum class TraceMethod { ClosedForm, OrbitSum, KernelIntegral, MatrixTrace };
const char* trace_method_name(TraceMethod m);

struct TraceReport {
    Complex s;
    int n = 1;
    Complex value;
    TraceMethod method = TraceMethod::ClosedForm;
    double tail_bound = 0.0;  // bound on |tr L_s^n - value| from truncation
};

// Σ_{k ≤ n_cap} (z_k*)^{2s} / (1 + (z_k*)^2). With tail_correction the remaining
// k > n_cap are summed analytically (expansion in 1/k^2 against Hurwitz zetas).
TraceReport trace_closed_form(Complex s, std::int64_t n_cap, bool tail_correction = true);

// Σ over Fix+T^n of P^{2s} / (1 - (-1)^n P^2).
TraceReport trace_orbit_sum(Complex s, int n, const OrbitSumOptions& opt);
TraceReport trace_orbit_sum(Complex s, int n, std::int64_t max_digit);

struct KernelOptions {
    double tol = 1e-12;
    double window = 40.0;  // each integral runs over [0, window/k]
};

// Σ_{k ≤ n_cap} ∫_0^∞ e^{-kt} J_{2s-1}(2t) dt by adaptive quadrature; for n_cap ≥ 2 the
// remaining k are added from the term-wise Laplace transform of the Bessel series.
TraceReport trace_kernel_integral(Complex s, int n_cap, const KernelOptions& opt = {});
// One term of the sum above, by quadrature.
Complex kernel_term(Complex s, int k, const KernelOptions& opt = {});

TraceReport trace_matrix(Complex s, int n, int M, const MatrixOptions& opt = {});
TraceReport trace_matrix(const OperatorMatrix& A, int n);

enum class DetKind { Minus, Plus, MinusSquare };
const char* det_kind_name(DetKind k);

enum class DetMethod { TraceSeries, FiniteDet };
const char* det_method_name(DetMethod m);

struct DetReport {
    Complex s;
    Complex value;
    DetMethod method = DetMethod::FiniteDet;
    DetKind kind = DetKind::Minus;
    int order = 0;    // M (FiniteDet)
    int n_max = 0;    // series length (TraceSeries)
    double last_term = 0.0;  // |tr L^{n_max}| / n_max
    double tail_bound = 0.0; // Σ_n certified orbit tails / n
    Complex extrapolated;    // geometric estimate of Σ_{n > n_max}, zero unless requested
};

struct DetSeriesOptions {
    // digit box / cap for each orbit sum; 0 picks ⌈(1e-10)^{-1/(2σ)}⌉ capped at 10^4
    std::int64_t max_digit = 0;
    // n ≤ accelerated_max use the box completion, longer words the pruned walk
    int accelerated_max = 3;
    double prune_eps = 1e-13;
    // add Σ_{n > n_max} t_N ρ^{n-N} / n with ρ = t_N / t_{N-1}, estimated from the last two traces
    bool extrapolate = false;
};

// exp(-Σ_{n ≤ n_max} sign^n / n · tr L_s^n) = det(1 - sign·L_s), traces from orbit sums.
DetReport fredholm_det_series(Complex s, int sign, int n_max, const DetSeriesOptions& opt = {});
// The orbit-sum options used for the n-th trace of the series.
OrbitSumOptions det_series_orbit_options(Complex s, int n, const DetSeriesOptions& opt);

DetReport det_finite(Complex s, DetKind kind, int M, const MatrixOptions& opt = {});
Complex det_of(const OperatorMatrix& A, DetKind kind);

// k largest-magnitude eigenvalues, by decreasing |λ| then increasing arg.
std::vector<Complex> spectrum(Complex s, int M, int k, const MatrixOptions& opt = {});
std::vector<Complex> spectrum(const OperatorMatrix& A, int k);

struct ZeroOptions {
    int companion_order = 0;  // 0 means M/2
    int max_iterations = 100;
    double step = 1e-3;       // second secant point start + step
    MatrixOptions matrix{};
};

struct ZeroReport {
    Complex start;
    Complex root;
    double det_abs = 0.0;        // |det| at the root
    Complex companion_root;      // root recomputed at the companion order
    double displacement = 0.0;   // |root - companion_root|
    int order = 0;
    int companion_order = 0;
    int iterations = 0;
};

ZeroReport find_zero(Complex start, DetKind kind, int M, double tol, const ZeroOptions& opt = {});

}  // namespace mayer
