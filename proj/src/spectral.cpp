#include "mayer/spectral.hpp"

#include <algorithm>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "mayer/quadrature.hpp"
#include "mayer/specfun.hpp"

namespace mayer {

const char* trace_method_name(TraceMethod m) {
    switch (m) {
        case TraceMethod::ClosedForm: return "ClosedForm";
        case TraceMethod::OrbitSum: return "OrbitSum";
        case TraceMethod::KernelIntegral: return "KernelIntegral";
        case TraceMethod::MatrixTrace: return "MatrixTrace";
    }
    return "?";
}

const char* det_kind_name(DetKind k) {
    switch (k) {
        case DetKind::Minus: return "Minus";
        case DetKind::Plus: return "Plus";
        case DetKind::MinusSquare: return "MinusSquare";
    }
    return "?";
}

const char* det_method_name(DetMethod m) { return m == DetMethod::TraceSeries ? "TraceSeries" : "FiniteDet"; }

TraceReport trace_closed_form(Complex s, std::int64_t n_cap, bool tail_correction) {
    require_half_plane(s, "trace_closed_form", false);
    if (n_cap < 0) throw DomainError("trace_closed_form: negative n_cap");
    TraceReport r;
    r.s = s;
    r.method = TraceMethod::ClosedForm;
    Complex sum = 0.0;
    for (std::int64_t k = n_cap; k >= 1; --k) {
        const double kd = double(k);
        // z_k* = 2 / (k + sqrt(k^2 + 4)), cancellation-free
        const double z = 2.0 / (kd + std::sqrt(kd * kd + 4.0));
        sum += std::exp(2.0 * s * std::log(z)) / (1.0 + z * z);
    }
    const double rest = hurwitz_zeta_real(2.0 * s.real(), double(n_cap) + 1.0);
    if (tail_correction) {
        sum += orbit_last_digit_sum(s, 1, OrbitWeight::Trace, 1.0L, 0.0L, double(n_cap) + 1.0L);
        r.tail_bound = 1e-14 * rest;
    } else {
        // z_k* < 1/k
        r.tail_bound = rest;
    }
    r.value = checked(sum, "trace_closed_form");
    return r;
}

TraceReport trace_orbit_sum(Complex s, int n, const OrbitSumOptions& opt) {
    require_half_plane(s, "trace_orbit_sum", false);
    const OrbitSumResult o = orbit_sum(s, n, OrbitWeight::Trace, opt);
    TraceReport r;
    r.s = s;
    r.n = n;
    r.method = TraceMethod::OrbitSum;
    r.value = checked(o.value, "trace_orbit_sum");
    r.tail_bound = o.tail_bound + o.prune_bound;
    return r;
}

TraceReport trace_orbit_sum(Complex s, int n, std::int64_t max_digit) {
    OrbitSumOptions opt;
    opt.max_digit = max_digit;
    opt.mode = (n <= 3 && max_digit >= 6) ? OrbitMode::Accelerated : OrbitMode::Pruned;
    return trace_orbit_sum(s, n, opt);
}

Complex kernel_term(Complex s, int k, const KernelOptions& opt) {
    require_half_plane(s, "kernel_term", false);
    if (k < 1) throw DomainError("kernel_term: k must be positive");
    const Complex nu = 2.0 * s - 1.0;
    auto f = [&](double t) -> Complex {
        if (t == 0.0) return 0.0;
        return std::exp(-double(k) * t) * bessel_j(nu, Complex(2.0 * t, 0.0));
    };
    return integrate_gk15(f, 0.0, opt.window / double(k), opt.tol, 0.0, 4000).value;
}

TraceReport trace_kernel_integral(Complex s, int n_cap, const KernelOptions& opt) {
    require_half_plane(s, "trace_kernel_integral", false);
    if (n_cap < 0) throw DomainError("trace_kernel_integral: negative n_cap");
    TraceReport r;
    r.s = s;
    r.method = TraceMethod::KernelIntegral;
    Complex sum = 0.0;
    double err = 0.0;
    const Complex nu = 2.0 * s - 1.0;
    for (int k = n_cap; k >= 1; --k) {
        auto f = [&](double t) -> Complex {
            if (t == 0.0) return 0.0;
            return std::exp(-double(k) * t) * bessel_j(nu, Complex(2.0 * t, 0.0));
        };
        const QuadratureResult q = integrate_gk15(f, 0.0, opt.window / double(k), opt.tol, 0.0, 4000);
        sum += q.value;
        err += q.error;
    }
    if (n_cap >= 2) {
        // Σ_{k>n_cap} ∫ e^{-kt} J_ν(2t) dt = Σ_j (-1)^j Γ(2j+ν+1)/(j! Γ(j+ν+1)) ζ(2j+ν+1, n_cap+1)
        const int J = 400;
        std::vector<Complex> hz(J);
        hurwitz_zeta_batch(nu + 1.0, 2.0, Complex(double(n_cap) + 1.0, 0.0), J, hz.data());
        Complex tail = 0.0;
        double last = 0.0;
        int j = 0;
        for (; j < J; ++j) {
            const Complex lc = log_gamma(2.0 * j + nu + 1.0) - std::lgamma(j + 1.0) - log_gamma(double(j) + nu + 1.0);
            const Complex term = ((j % 2) ? -1.0 : 1.0) * std::exp(lc) * hz[j];
            tail += term;
            last = std::abs(term);
            if (last < 1e-18 * std::max(std::abs(tail), 1e-300)) break;
        }
        if (j == J) throw NonConvergence("trace_kernel_integral: tail series did not converge");
        sum += tail;
        r.tail_bound = err + 2.0 * last;
    } else {
        r.tail_bound = err + hurwitz_zeta_real(2.0 * s.real(), double(n_cap) + 1.0);
    }
    r.value = checked(sum, "trace_kernel_integral");
    return r;
}

TraceReport trace_matrix(const OperatorMatrix& A, int n) {
    if (n < 1) throw DomainError("trace_matrix: n must be positive");
    CMatrix P = A.entries();
    for (int i = 1; i < n; ++i) P = P * A.entries();
    TraceReport r;
    r.s = A.s();
    r.n = n;
    r.method = TraceMethod::MatrixTrace;
    r.value = checked(P.trace(), "trace_matrix");
    // truncation indicator: diagonal mass in the last quarter of the basis
    const int M = A.order();
    for (int m = M - M / 4; m < M; ++m) r.tail_bound += std::abs(P(m, m));
    return r;
}

TraceReport trace_matrix(Complex s, int n, int M, const MatrixOptions& opt) {
    require_half_plane(s, "trace_matrix", false);
    return trace_matrix(matrix_monomial(s, M, opt), n);
}

OrbitSumOptions det_series_orbit_options(Complex s, int n, const DetSeriesOptions& opt) {
    const double sigma = s.real();
    OrbitSumOptions o;
    o.prune_eps = opt.prune_eps;
    if (n <= opt.accelerated_max) {
        o.mode = OrbitMode::Accelerated;
        std::int64_t D = opt.max_digit;
        if (D <= 0) {
            const auto cap = std::int64_t(std::min(1e4, std::ceil(std::pow(1e-10, -1.0 / (2.0 * sigma)))));
            // smallest box whose three-large-digit remainder is below 1e-12
            D = 8;
            while (D < cap && n >= 3 && std::pow(hurwitz_zeta_real(2.0 * sigma, double(D) + 1.0), 3) * n * n * n > 1e-12)
                D *= 2;
            D = std::min(D, cap);
        }
        o.max_digit = std::max<std::int64_t>(D, 6);
    } else {
        o.mode = OrbitMode::Pruned;
        o.max_digit = opt.max_digit > 0 ? opt.max_digit : 1000000;
    }
    return o;
}

DetReport fredholm_det_series(Complex s, int sign, int n_max, const DetSeriesOptions& opt) {
    require_half_plane(s, "fredholm_det_series", false);
    if (sign != 1 && sign != -1) throw DomainError("fredholm_det_series: sign must be +1 or -1");
    if (n_max < 1) throw DomainError("fredholm_det_series: n_max must be positive");
    DetReport r;
    r.s = s;
    r.method = DetMethod::TraceSeries;
    r.kind = sign == 1 ? DetKind::Minus : DetKind::Plus;
    r.n_max = n_max;
    Complex sum = 0.0, prev = 0.0, last = 0.0;
    double tails = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const TraceReport t = trace_orbit_sum(s, n, det_series_orbit_options(s, n, opt));
        const double sg = (sign == -1 && n % 2) ? -1.0 : 1.0;
        prev = last;
        last = sg * t.value;
        sum += last / double(n);
        tails += t.tail_bound / double(n);
        r.last_term = std::abs(t.value) / double(n);
    }
    if (opt.extrapolate && n_max >= 2 && prev != 0.0) {
        const Complex rho = last / prev;
        if (std::abs(rho) < 0.9) {
            Complex term = last, ext = 0.0;
            for (int n = n_max + 1; n < n_max + 2000; ++n) {
                term *= rho;
                ext += term / double(n);
                if (std::abs(term) < 1e-18 * std::abs(ext)) break;
            }
            r.extrapolated = ext;
            sum += ext;
        }
    }
    r.value = checked(std::exp(-sum), "fredholm_det_series");
    r.tail_bound = std::abs(r.value) * std::expm1(tails);
    return r;
}

Complex det_of(const OperatorMatrix& A, DetKind kind) {
    const int M = A.order();
    const CMatrix I = CMatrix::Identity(M, M);
    CMatrix B;
    switch (kind) {
        case DetKind::Minus: B = I - A.entries(); break;
        case DetKind::Plus: B = I + A.entries(); break;
        case DetKind::MinusSquare: B = I - A.entries() * A.entries(); break;
    }
    return checked(Eigen::PartialPivLU<CMatrix>(B).determinant(), "det_finite");
}

DetReport det_finite(Complex s, DetKind kind, int M, const MatrixOptions& opt) {
    DetReport r;
    r.s = s;
    r.method = DetMethod::FiniteDet;
    r.kind = kind;
    r.order = M;
    r.value = det_of(matrix_monomial(s, M, opt), kind);
    return r;
}

std::vector<Complex> spectrum(const OperatorMatrix& A, int k) {
    if (k < 1 || k > A.order()) throw DomainError("spectrum: need 1 <= k <= M");
    Eigen::ComplexEigenSolver<CMatrix> es(A.entries(), false);
    if (es.info() != Eigen::Success) throw EigensolverError("spectrum: eigensolver did not converge");
    std::vector<Complex> ev(es.eigenvalues().data(), es.eigenvalues().data() + A.order());
    std::sort(ev.begin(), ev.end(), [](Complex a, Complex b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma > mb;
        return std::arg(a) < std::arg(b);
    });
    ev.resize(k);
    return ev;
}

std::vector<Complex> spectrum(Complex s, int M, int k, const MatrixOptions& opt) {
    require_half_plane(s, "spectrum", true);
    return spectrum(matrix_monomial(s, M, opt), k);
}

namespace {

struct SecantResult {
    Complex root;
    Complex value;
    int iterations;
};

SecantResult secant(Complex start, DetKind kind, int M, double tol, const ZeroOptions& opt) {
    auto f = [&](Complex s) {
        if (!(s.real() >= 0.5 - kCriticalSlack) || !is_finite(s))
            throw DomainError("find_zero: iteration left the half-plane Re(s) >= 1/2");
        return det_of(matrix_monomial(s, M, opt.matrix), kind);
    };
    Complex s0 = start, s1 = start + opt.step;
    Complex f0 = f(s0), f1 = f(s1);
    for (int it = 1; it <= opt.max_iterations; ++it) {
        if (f1 == 0.0) return {s1, f1, it};
        if (f1 == f0) throw NonConvergence("find_zero: secant step degenerated");
        const Complex s2 = s1 - f1 * (s1 - s0) / (f1 - f0);
        s0 = s1;
        f0 = f1;
        s1 = s2;
        f1 = f(s1);
        if (std::abs(s1 - s0) < tol) return {s1, f1, it};
    }
    throw NonConvergence("find_zero: no convergence after " + std::to_string(opt.max_iterations) + " iterations");
}

}  // namespace

ZeroReport find_zero(Complex start, DetKind kind, int M, double tol, const ZeroOptions& opt) {
    if (!is_finite(start) || !(start.real() >= 0.5 - kCriticalSlack))
        throw DomainError("find_zero: requires Re(start) >= 1/2");
    if (!(tol > 0.0)) throw DomainError("find_zero: tol must be positive");
    if (M < 2) throw DomainError("find_zero: order must be at least 2");
    ZeroReport z;
    z.start = start;
    z.order = M;
    z.companion_order = opt.companion_order > 0 ? opt.companion_order : std::max(1, M / 2);
    const SecantResult a = secant(start, kind, M, tol, opt);
    z.root = a.root;
    z.det_abs = std::abs(a.value);
    z.iterations = a.iterations;
    const SecantResult b = secant(a.root, kind, z.companion_order, tol, opt);
    z.companion_root = b.root;
    z.displacement = std::abs(a.root - b.root);
    return z;
}

}  // namespace mayer
