#include "mayer/operator.hpp"

#include <numbers>
#include <string>

#include "mayer/specfun.hpp"

namespace mayer {

namespace {

constexpr double kPi = std::numbers::pi;

Complex pairwise_sum(const Complex* x, std::size_t n) {
    if (n <= 8) {
        Complex s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += x[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

std::vector<std::vector<double>> binomial_table(int n) {
    std::vector<std::vector<double>> c(n + 1, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i <= n; ++i) {
        c[i][0] = 1.0;
        for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0.0);
    }
    return c;
}

// Σ_j C(k,j)(-1)^{m+k-j}/m! Γ(2s+j+m)/Γ(2s+j) ζ(2s+j+m, Q): the contribution of bases q ≥ Q.
CMatrix binomial_block(Complex s, int M, double Q) {
    const int U = 2 * M - 1;
    std::vector<Complex> H(U), LG(U);
    hurwitz_zeta_batch(2.0 * s, 1.0, Complex(Q, 0.0), U, H.data());
    for (int u = 0; u < U; ++u) LG[u] = log_gamma(2.0 * s + double(u));
    std::vector<double> lf(M);
    for (int m = 0; m < M; ++m) lf[m] = std::lgamma(double(m) + 1.0);
    const auto C = binomial_table(M);

    CMatrix A(M, M);
    std::vector<Complex> terms(M);
    for (int m = 0; m < M; ++m) {
        for (int k = 0; k < M; ++k) {
            for (int j = 0; j <= k; ++j) {
                const double sign = ((m + k - j) % 2) ? -1.0 : 1.0;
                const Complex ratio = std::exp(LG[j + m] - LG[j] - lf[m]);
                terms[j] = sign * C[k][j] * ratio * H[j + m];
            }
            A(m, k) = checked(pairwise_sum(terms.data(), std::size_t(k + 1)), "matrix_monomial");
        }
    }
    return A;
}

void finish(CMatrix& A, Complex s, const MatrixOptions& opt) {
    if (s.imag() == 0.0) A = A.real().cast<Complex>();
    if (opt.sign_fault) {
        auto [m, k] = *opt.sign_fault;
        if (m >= 0 && k >= 0 && m < A.rows() && k < A.cols()) A(m, k) = -A(m, k);
    }
}

}  // namespace

DiscDomain::DiscDomain(double radius) : r_(radius) {
    if (!(radius >= 1.0 && radius < golden()))
        throw DomainError("DiscDomain: radius must lie in [1, (1+sqrt5)/2)");
}

const char* basis_name(Basis b) { return b == Basis::MonomialAtOne ? "MonomialAtOne" : "HurwitzBasis"; }

void require_half_plane(Complex s, const char* where, bool allow_critical_line) {
    if (!is_finite(s)) throw DomainError(std::string(where) + ": non-finite s");
    const double lim = allow_critical_line ? 0.5 - kCriticalSlack : 0.5;
    const bool ok = allow_critical_line ? s.real() >= lim : s.real() > lim;
    if (!ok) throw DomainError(std::string(where) + ": requires Re(s) > 1/2");
}

OperatorMatrix matrix_monomial(Complex s, int M, const MatrixOptions& opt) {
    require_half_plane(s, "matrix_monomial", true);
    if (M < 1) throw DomainError("matrix_monomial: order must be positive");
    const int Q = std::max(2, opt.split_bases);
    const int P = 2 * M + 64;

    CMatrix W(M, P);
    for (int m = 0; m < M; ++m)
        for (int p = 0; p < P; ++p) {
            const double th = -2.0 * kPi * double((long(m) * p) % P) / double(P);
            W(m, p) = Complex(std::cos(th), std::sin(th)) / double(P);
        }

    CMatrix A = binomial_block(s, M, double(Q));
    CMatrix G(P, M);
    for (int q = Q - 1; q >= 2; --q) {
        const double rho = 0.5 * q;
        for (int p = 0; p < P; ++p) {
            const double th = 2.0 * kPi * double(p) / double(P);
            const Complex v = double(q) + rho * Complex(std::cos(th), std::sin(th));
            const Complex u = 1.0 / v - 1.0;
            Complex pw = std::exp(-2.0 * s * std::log(v));
            for (int k = 0; k < M; ++k) {
                G(p, k) = pw;
                pw *= u;
            }
        }
        CMatrix Cq = W * G;
        double scale = 1.0;
        for (int m = 0; m < M; ++m) {
            A.row(m) += Cq.row(m) * scale;
            scale /= rho;
        }
    }
    finish(A, s, opt);
    for (int m = 0; m < M; ++m)
        for (int k = 0; k < M; ++k) checked(A(m, k), "matrix_monomial");
    return OperatorMatrix(s, Basis::MonomialAtOne, opt.disc, std::move(A));
}

OperatorMatrix matrix_monomial_binomial(Complex s, int M, const MatrixOptions& opt) {
    require_half_plane(s, "matrix_monomial_binomial", true);
    if (M < 1) throw DomainError("matrix_monomial_binomial: order must be positive");
    // ζ(β) - 1 = ζ(β, 2)
    CMatrix A = binomial_block(s, M, 2.0);
    finish(A, s, opt);
    return OperatorMatrix(s, Basis::MonomialAtOne, opt.disc, std::move(A));
}

OperatorMatrix matrix_hurwitz(Complex s, int M, const MatrixOptions& opt) {
    require_half_plane(s, "matrix_hurwitz", true);
    if (M < 1) throw DomainError("matrix_hurwitz: order must be positive");
    const int U = 2 * M - 1;
    std::vector<Complex> Z(U), LG(U);
    hurwitz_zeta_batch(2.0 * s, 1.0, Complex(1.0, 0.0), U, Z.data());
    for (int u = 0; u < U; ++u) LG[u] = log_gamma(2.0 * s + double(u));
    CMatrix A(M, M);
    for (int m = 0; m < M; ++m) {
        const double sign = (m % 2) ? -1.0 : 1.0;
        const double lf = std::lgamma(double(m) + 1.0);
        for (int k = 0; k < M; ++k)
            A(m, k) = checked(sign * std::exp(LG[k + m] - LG[k] - lf) * Z[k + m], "matrix_hurwitz");
    }
    finish(A, s, opt);
    return OperatorMatrix(s, Basis::HurwitzBasis, opt.disc, std::move(A));
}

std::vector<Complex> sample_grid(const DiscDomain& disc) {
    std::vector<Complex> pts;
    pts.reserve(65);
    const double rad = 0.5 * disc.radius();
    for (int p = 0; p < 64; ++p) {
        const double th = 2.0 * kPi * double(p) / 64.0;
        pts.push_back(1.0 + rad * Complex(std::cos(th), std::sin(th)));
    }
    pts.push_back(1.0);
    return pts;
}

HolomorphicSample sample(const HolomorphicFn& f, const DiscDomain& disc) {
    HolomorphicSample h;
    h.points = sample_grid(disc);
    for (auto z : h.points) h.values.push_back(checked(f(z), "HolomorphicSample"));
    return h;
}

ApplyResult apply_direct(Complex s, const HolomorphicFn& f, Complex z, int n_cap, const ApplyOptions& opt) {
    require_half_plane(s, "apply_direct", false);
    if (!opt.disc.contains(z)) throw DomainError("apply_direct: z outside D_r");
    if (n_cap < 0) throw DomainError("apply_direct: negative n_cap");
    const double r = opt.disc.radius();
    const double sigma = s.real();

    ApplyResult res{};
    std::vector<Complex> terms;
    terms.reserve(n_cap);
    for (int n = n_cap; n >= 1; --n) {
        const Complex v = z + double(n);
        terms.push_back(std::exp(-2.0 * s * std::log(v)) * f(1.0 / v));
    }
    res.partial = pairwise_sum(terms.data(), terms.size());

    double fnorm = 0.0;
    for (int p = 0; p < 64; ++p) {
        const double th = 2.0 * kPi * double(p) / 64.0;
        fnorm = std::max(fnorm, std::abs(f(1.0 + r * Complex(std::cos(th), std::sin(th)))));
    }
    res.tail_bound = fnorm * hurwitz_zeta_real(2.0 * sigma, double(n_cap) + 2.0 - r);
    res.value = res.partial;
    res.residual = res.tail_bound;
    res.corrected = false;

    const double rho_c = 0.9 * (r - 1.0);
    if (opt.tail_correction && rho_c > 0.04) {
        // Σ_{n≥n0} (z+n)^{-2s} f(1/(z+n)) = Σ_k f_k ζ(2s+k, z+n0), |1/(z+n0)| ≤ rho_c/2
        const int n0 = std::max(n_cap + 1, int(std::ceil(2.0 / rho_c + r)) + 1);
        Complex extra = 0.0;
        for (int n = n0 - 1; n > n_cap; --n) {
            const Complex v = z + double(n);
            extra += std::exp(-2.0 * s * std::log(v)) * f(1.0 / v);
        }
        const int K = 48;
        auto fk = taylor_coefficients(f, 0.0, rho_c, K, 128);
        std::vector<Complex> hz(K);
        hurwitz_zeta_batch(2.0 * s, 1.0, z + double(n0), K, hz.data());
        std::vector<Complex> tail(K);
        for (int k = 0; k < K; ++k) tail[k] = fk[k] * hz[k];
        extra += pairwise_sum(tail.data(), tail.size());
        const double x = 1.0 / (double(n0) + 1.0 - r);
        double fmax_c = 0.0;
        for (int k = 0; k < K; ++k) fmax_c = std::max(fmax_c, std::abs(fk[k]) * std::pow(rho_c, k));
        res.residual = 2.0 * fmax_c * std::pow(x / rho_c, K) * hurwitz_zeta_real(2.0 * sigma, double(n0) + 1.0 - r);
        res.value = res.partial + extra;
        res.corrected = true;
    }
    res.value = checked(res.value, "apply_direct");
    return res;
}

ImageDisc image_disc_raw(int n, double r) {
    if (n < 1) throw DomainError("image_disc: n must be positive");
    const double np1 = n + 1.0;
    const double den = np1 * np1 - r * r;
    if (!(den > 0.0)) throw DomainError("image_disc: disc contains the pole of psi_n");
    return {np1 / den, r / den};
}

ImageDisc image_disc(int n, const DiscDomain& disc) { return image_disc_raw(n, disc.radius()); }

bool image_contained(int n, double r) {
    const ImageDisc d = image_disc_raw(n, r);
    return std::abs(d.center - 1.0) + d.radius < r;
}

}  // namespace mayer
