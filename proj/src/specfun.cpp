#include "mayer/specfun.hpp"

#include <algorithm>
#include <array>
#include <numbers>

namespace mayer {

const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::Ok: return "ok";
        case ErrorCode::Domain: return "DomainError";
        case ErrorCode::Pole: return "PoleError";
        case ErrorCode::Overflow: return "OverflowError";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::Resource: return "ResourceError";
        case ErrorCode::Parity: return "ParityError";
        case ErrorCode::Quadrature: return "QuadratureError";
        case ErrorCode::Eigensolver: return "EigensolverError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Internal: return "InternalError";
    }
    return "unknown";
}

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex log_gamma_lanczos(Complex z) {
    // valid for Re z >= 1/2
    z -= 1.0;
    Complex x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    Complex t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// 1/(2k)! * B_{2k}, k = 1..15
std::array<double, 15> bernoulli_over_factorial() {
    const auto& b = bernoulli_even();
    std::array<double, 15> out{};
    double fact = 1.0;
    for (int k = 1; k <= 15; ++k) {
        fact *= double(2 * k - 1) * double(2 * k);
        out[k - 1] = b[k - 1] / fact;
    }
    return out;
}

const std::array<double, 15>& bern_fact() {
    static const std::array<double, 15> v = bernoulli_over_factorial();
    return v;
}

// Euler–Maclaurin tail at a = q+N: a^{1-w}/(w-1) + a^{-w}/2 + corrections.
Complex em_tail(Complex w, Complex a, Complex log_a, int terms) {
    Complex a_w = std::exp(-w * log_a);
    Complex sum = a * a_w / (w - 1.0) + 0.5 * a_w;
    Complex inv_a2 = 1.0 / (a * a);
    Complex poch = w;
    Complex apow = a_w / a;
    const auto& bf = bern_fact();
    for (int k = 1; k <= terms; ++k) {
        sum += bf[k - 1] * poch * apow;
        poch *= (w + double(2 * k - 1)) * (w + double(2 * k));
        apow *= inv_a2;
    }
    return sum;
}

int cutoff_for(Complex w, int floor = 0) {
    const int base = floor > 0 ? floor : zeta_tuning().min_cutoff;
    return std::max(base, int(std::ceil(std::abs(w))) + 1);
}

// binary128 complex, only what the Bessel series needs
struct Q128 {
    __float128 re, im;
};

inline Q128 qmul(Q128 a, Q128 b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

inline Q128 qdiv(Q128 a, Q128 b) {
    __float128 den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

inline double qabs(Q128 a) { return std::hypot(double(a.re), double(a.im)); }

}  // namespace

ZetaTuning& zeta_tuning() {
    static ZetaTuning t;
    return t;
}

const std::vector<double>& bernoulli_even() {
    static const std::vector<double> b = {
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
        43867.0 / 798.0,
        -174611.0 / 330.0,
        854513.0 / 138.0,
        -236364091.0 / 2730.0,
        8553103.0 / 6.0,
        -23749461029.0 / 870.0,
        8615841276005.0 / 14322.0,
    };
    return b;
}

Complex log_gamma(Complex z) {
    if (!is_finite(z)) throw DomainError("log_gamma: non-finite argument");
    if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return log_gamma_lanczos(z);
    // reflection: Γ(z)Γ(1-z) = π / sin(πz)
    Complex r = std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_lanczos(1.0 - z);
    return checked(r, "log_gamma");
}

Complex gamma(Complex z) { return checked(std::exp(log_gamma(z)), "gamma"); }

Complex riemann_zeta(Complex s) {
    if (!is_finite(s)) throw DomainError("riemann_zeta: non-finite argument");
    if (s == Complex(1.0, 0.0)) throw PoleError("riemann_zeta: pole at s=1");
    const int n_cut = cutoff_for(s);
    Complex sum = 0.0;
    for (int n = n_cut - 1; n >= 1; --n) sum += std::exp(-s * std::log(double(n)));
    const double a = n_cut;
    sum += em_tail(s, a, std::log(a), zeta_tuning().bernoulli_terms);
    return checked(sum, "riemann_zeta");
}

Complex hurwitz_zeta(Complex w, Complex q) {
    if (!is_finite(w) || !is_finite(q)) throw DomainError("hurwitz_zeta: non-finite argument");
    if (w == Complex(1.0, 0.0)) throw PoleError("hurwitz_zeta: pole at w=1");
    if (q.real() <= 0.0) throw DomainError("hurwitz_zeta: Re(q) must be positive");
    const int cut = cutoff_for(w);
    const int n_direct = std::max(0, int(std::ceil(cut - q.real())));
    Complex sum = 0.0;
    for (int n = n_direct - 1; n >= 0; --n) sum += std::exp(-w * std::log(q + double(n)));
    Complex a = q + double(n_direct);
    sum += em_tail(w, a, std::log(a), zeta_tuning().bernoulli_terms);
    return checked(sum, "hurwitz_zeta");
}

void hurwitz_zeta_batch(Complex w0, double step, Complex q, std::size_t count, Complex* out, int min_cutoff) {
    if (count == 0) return;
    if (q.real() <= 0.0) throw DomainError("hurwitz_zeta_batch: Re(q) must be positive");
    Complex w_max = w0 + step * double(count - 1);
    const int cut = std::max(cutoff_for(w0, min_cutoff), cutoff_for(w_max, min_cutoff));
    const int n_direct = std::max(0, int(std::ceil(cut - q.real())));
    std::fill(out, out + count, Complex(0.0));
    for (int n = n_direct - 1; n >= 0; --n) {
        Complex lg = std::log(q + double(n));
        Complex term = std::exp(-w0 * lg);
        Complex ratio = std::exp(-step * lg);
        for (std::size_t j = 0; j < count; ++j) {
            out[j] += term;
            term *= ratio;
        }
    }
    Complex a = q + double(n_direct);
    Complex la = std::log(a);
    for (std::size_t j = 0; j < count; ++j) {
        Complex w = w0 + step * double(j);
        if (w == Complex(1.0, 0.0)) throw PoleError("hurwitz_zeta_batch: pole at w=1");
        out[j] += em_tail(w, a, la, zeta_tuning().bernoulli_terms);
    }
}

double hurwitz_zeta_real(double x, double a) { return hurwitz_zeta(Complex(x, 0.0), Complex(a, 0.0)).real(); }

Complex bessel_j(Complex nu, Complex u) {
    if (!is_finite(nu) || !is_finite(u)) throw DomainError("bessel_j: non-finite argument");
    const bool integer_order = nu.imag() == 0.0 && nu.real() == std::round(nu.real());
    if (integer_order && nu.real() < 0.0) {
        const int n = int(-nu.real());
        const double sign = (n % 2) ? -1.0 : 1.0;
        return sign * bessel_j(Complex(double(n), 0.0), u);
    }
    if (u == Complex(0.0, 0.0)) {
        if (nu == Complex(0.0, 0.0)) return 1.0;
        if (nu.real() > 0.0) return 0.0;
        throw DomainError("bessel_j: singular at u=0 for Re(nu) <= 0");
    }
    if (!integer_order && u.imag() == 0.0 && u.real() < 0.0)
        throw DomainError("bessel_j: u on the branch cut for non-integer order");

    const Complex half = 0.5 * u;
    Complex pre;
    if (integer_order) {
        const int n = int(nu.real());
        pre = std::pow(half, n) / std::exp(std::lgamma(double(n) + 1.0));
    } else {
        pre = std::exp(nu * std::log(half) - log_gamma(nu + 1.0));
    }

    const Complex x = -half * half;
    const Q128 xq{x.real(), x.imag()};
    Q128 term{1, 0};
    Q128 sum{1, 0};
    constexpr int kMaxTerms = 10000;
    for (int k = 1; k <= kMaxTerms; ++k) {
        const Q128 den{__float128(k) * (__float128(k) + nu.real()), __float128(k) * __float128(nu.imag())};
        term = qdiv(qmul(term, xq), den);
        sum.re += term.re;
        sum.im += term.im;
        const double tk = qabs(term);
        const bool decreasing = std::abs(x) < double(k) * std::abs(double(k) + nu);
        if (decreasing && tk < 1e-17 * qabs(sum)) {
            return checked(pre * Complex(double(sum.re), double(sum.im)), "bessel_j");
        }
        if (tk == 0.0) return checked(pre * Complex(double(sum.re), double(sum.im)), "bessel_j");
    }
    throw NonConvergence("bessel_j: series did not converge in 10^4 terms");
}

std::vector<Complex> taylor_coefficients(const std::function<Complex(Complex)>& f, Complex center,
                                         double rho, std::size_t count, std::size_t points) {
    if (points == 0) points = std::max<std::size_t>(64, 2 * count + 16);
    std::vector<Complex> samples(points);
    for (std::size_t p = 0; p < points; ++p) {
        const double th = 2.0 * kPi * double(p) / double(points);
        samples[p] = f(center + rho * Complex(std::cos(th), std::sin(th)));
    }
    std::vector<Complex> c(count);
    double scale = 1.0;
    for (std::size_t m = 0; m < count; ++m) {
        Complex acc = 0.0;
        for (std::size_t p = 0; p < points; ++p) {
            const double th = -2.0 * kPi * double((m * p) % points) / double(points);
            acc += samples[p] * Complex(std::cos(th), std::sin(th));
        }
        c[m] = acc / (double(points) * scale);
        scale *= rho;
    }
    return c;
}

}  // namespace mayer
