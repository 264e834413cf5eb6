#include "mayer/orbit_sum.hpp"

#include <algorithm>
#include <unordered_map>

#include "mayer/specfun.hpp"

namespace mayer {

namespace {

using i128 = __int128;

// Below this trace the weight is summed term by term; above it the expansion in 1/t^2 is used.
constexpr long double kT0 = 32.0L;
constexpr int kHurwitzCut = 14;

struct Mat {
    i128 a, b, c, d;
};

inline i128 mul_add(i128 x, i128 y, i128 z) {
    i128 p, r;
    if (__builtin_mul_overflow(y, z, &p) || __builtin_add_overflow(x, p, &r))
        throw OverflowError("orbit_sum: continuant overflow");
    return r;
}

// m * (0 1; 1 i)
inline Mat step(const Mat& m, i128 i) { return {m.b, mul_add(m.a, m.b, i), m.d, mul_add(m.c, m.d, i)}; }

inline long double ld(i128 x) { return static_cast<long double>(x); }

class Kernel {
public:
    Kernel(Complex s, int n, OrbitWeight w) : s_(s) {
        eps_ = (n % 2) ? -1 : 1;
        eps_den_ = (w == OrbitWeight::Trace) ? eps_ : 0;
        // Φ(v) = μ^{-2s} / (1 - ε' v μ^{-2}),  μ = (1 + sqrt(1 - 4εv))/2,  v = 1/t^2
        const int e = eps_, ed = eps_den_;
        auto phi = [s, e, ed](Complex v) {
            Complex mu = 0.5 * (1.0 + std::sqrt(1.0 - 4.0 * double(e) * v));
            Complex lm = std::log(mu);
            return std::exp(-2.0 * s * lm) / (1.0 - double(ed) * v * std::exp(-2.0 * lm));
        };
        phi_ = taylor_coefficients(phi, 0.0, 0.125, 24, 128);
    }

    Complex G(long double t) const {
        const long double lam = 0.5L * (t + std::sqrt(t * t - 4.0L * eps_));
        const double logP = -double(std::log(lam));
        Complex v = std::exp(2.0 * s_ * logP);
        if (eps_den_ != 0) v /= (1.0 - double(eps_den_) * std::exp(2.0 * logP));
        return v;
    }

    // Σ_{i ≥ i0} G(d i + e)
    Complex sum_from(long double d, long double e, long double i0) const {
        long double ia = std::max(i0, std::ceil((kT0 - e) / d));
        Complex acc = 0.0;
        for (long double i = i0; i < ia; i += 1.0L) acc += G(d * i + e);
        const long double tmin = d * ia + e;
        const double ratio = double(4.0L / (tmin * tmin));
        int J = int(std::ceil(std::log(1e-19) / std::log(ratio)));
        J = std::clamp(J, 1, int(phi_.size()));
        Complex hz[24];
        const Complex q = double(ia + e / d);
        hurwitz_zeta_batch(2.0 * s_, 2.0, q, std::size_t(J), hz, kHurwitzCut);
        const double logd = double(std::log(d));
        Complex dpow = std::exp(-2.0 * s_ * logd);
        const double d2 = double(1.0L / (d * d));
        Complex an = 0.0;
        for (int j = 0; j < J; ++j) {
            an += phi_[j] * dpow * hz[j];
            dpow *= d2;
        }
        return acc + an;
    }

    // Σ_{x,y > D} G(α x y + β x + γ y + δ)
    Complex double_tail(i128 al, i128 be, i128 ga, i128 de, long double D) const {
        if (al < 1) throw Error(ErrorCode::Internal, "orbit_sum: degenerate bilinear trace");
        const long double A = ld(al);
        const long double X0 = D + 1.0L + ld(ga) / A;
        const long double Y0 = D + 1.0L + ld(be) / A;
        i128 num;
        long double c;
        if (!__builtin_mul_overflow(al, de, &num)) {
            i128 bg;
            if (!__builtin_mul_overflow(be, ga, &bg)) c = ld(num - bg) / A;
            else c = ld(de) - ld(be) * ld(ga) / A;
        } else {
            c = ld(de) - ld(be) * ld(ga) / A;
        }
        const long double amin = A * X0 * Y0;
        if (amin + std::min(c, 0.0L) < kT0) throw Error(ErrorCode::Internal, "orbit_sum: box too small for the double tail");
        const double ratio = double(std::max(std::fabs(c), 2.0L) / amin);
        int U = int(std::ceil(std::log(1e-19) / std::log(ratio)));
        U = std::clamp(U, 1, 40);
        std::vector<Complex> hx(U), hy(U), coef(U, 0.0);
        hurwitz_zeta_batch(2.0 * s_, 1.0, double(X0), std::size_t(U), hx.data(), kHurwitzCut);
        hurwitz_zeta_batch(2.0 * s_, 1.0, double(Y0), std::size_t(U), hy.data(), kHurwitzCut);
        const double cd = double(c);
        for (int j = 0; 2 * j < U && j < int(phi_.size()); ++j) {
            // binom(-w, m) c^m with w = 2s + 2j
            const Complex w = 2.0 * s_ + 2.0 * double(j);
            Complex b = 1.0;
            for (int m = 0; 2 * j + m < U; ++m) {
                coef[2 * j + m] += phi_[j] * b;
                b *= -(w + double(m)) * cd / double(m + 1);
            }
        }
        const double loga = double(std::log(A));
        Complex apow = std::exp(-2.0 * s_ * loga);
        Complex out = 0.0;
        for (int u = 0; u < U; ++u) {
            out += coef[u] * apow * hx[u] * hy[u];
            apow /= double(A);
        }
        return out;
    }

private:
    Complex s_;
    int eps_, eps_den_;
    std::vector<Complex> phi_;
};

double denominator_bound(int n, OrbitWeight w) {
    if (w == OrbitWeight::Zeta || n % 2) return 1.0;
    const double phi = 0.5 * (1.0 + std::sqrt(5.0));
    return 1.0 / (1.0 - std::pow(phi, -2.0 * n));
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
    return r;
}

class RealHurwitzCache {
public:
    explicit RealHurwitzCache(double x) : x_(x) {}
    double operator()(std::int64_t a) {
        auto it = cache_.find(a);
        if (it != cache_.end()) return it->second;
        const double v = hurwitz_zeta_real(x_, double(a));
        cache_.emplace(a, v);
        return v;
    }

private:
    double x_;
    std::unordered_map<std::int64_t, double> cache_;
};

OrbitSumResult run_plain(Complex s, int n, OrbitWeight weight, const OrbitSumOptions& opt) {
    const Kernel K(s, n, weight);
    const std::int64_t D = opt.max_digit;
    if (std::pow(double(D), n - 1) > opt.max_prefixes) throw ResourceError("orbit_sum: enumeration cap exceeded");
    OrbitSumResult res;
    Complex total = 0.0;
    std::vector<Mat> stack{Mat{1, 0, 0, 1}};
    std::vector<std::int64_t> idx(n - 1, 1);
    // odometer over prefixes in [1,D]^{n-1}
    auto leaf = [&](const Mat& m) {
        const long double d = ld(m.d), e = ld(m.b + m.c);
        total += K.sum_from(d, e, 1.0L) - K.sum_from(d, e, double(D) + 1.0L);
        ++res.prefixes;
    };
    if (n == 1) {
        leaf(stack.back());
    } else {
        for (int p = 0; p < n - 1; ++p) stack.push_back(step(stack.back(), 1));
        while (true) {
            leaf(stack.back());
            int pos = n - 2;
            while (pos >= 0 && idx[pos] == D) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int p = pos + 1; p < n - 1; ++p) idx[p] = 1;
            stack.resize(pos + 1);
            for (int p = pos; p < n - 1; ++p) stack.push_back(step(stack.back(), idx[p]));
        }
    }
    const double sig2 = 2.0 * s.real();
    const double z2 = hurwitz_zeta_real(sig2, 1.0);
    const double zd = z2 - hurwitz_zeta_real(sig2, double(D) + 1.0);
    res.value = total;
    res.tail_bound = (std::pow(z2, n) - std::pow(zd, n)) * denominator_bound(n, weight);
    return res;
}

OrbitSumResult run_accelerated(Complex s, int n, OrbitWeight weight, const OrbitSumOptions& opt) {
    const Kernel K(s, n, weight);
    const std::int64_t D = opt.max_digit;
    OrbitSumResult res;
    if (n == 1) {
        res.value = K.sum_from(1.0L, 0.0L, 1.0L);
        return res;
    }
    if (D < 6) throw DomainError("orbit_sum: accelerated mode needs max_digit >= 6");
    const double count = std::pow(double(D), n - 1) + (n - 1) * std::pow(double(D), n - 2);
    if (count > opt.max_prefixes) throw ResourceError("orbit_sum: enumeration cap exceeded");

    // at most one digit > D: prefixes in the box, last digit summed analytically
    Complex box = 0.0;
    {
        std::vector<Mat> stack{Mat{1, 0, 0, 1}};
        std::vector<std::int64_t> idx(n - 1, 1);
        for (int p = 0; p < n - 1; ++p) stack.push_back(step(stack.back(), 1));
        const long double Dp1 = double(D) + 1.0L;
        while (true) {
            const Mat& m = stack.back();
            const long double d = ld(m.d), e = ld(m.b + m.c);
            box += K.sum_from(d, e, 1.0L) + double(n - 1) * K.sum_from(d, e, Dp1);
            ++res.prefixes;
            int pos = n - 2;
            while (pos >= 0 && idx[pos] == D) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int p = pos + 1; p < n - 1; ++p) idx[p] = 1;
            stack.resize(pos + 1);
            for (int p = pos; p < n - 1; ++p) stack.push_back(step(stack.back(), idx[p]));
        }
    }

    // exactly two digits > D: one of them rotated to the end, the other at position p
    Complex pairs = 0.0;
    for (int p = 0; p < n - 1; ++p) {
        std::vector<std::int64_t> small(std::max(0, n - 2), 1);
        while (true) {
            std::vector<std::int64_t> w(n);
            for (int i = 0, k = 0; i < n - 1; ++i)
                if (i != p) w[i] = small[k++];
            auto tr = [&](std::int64_t x, std::int64_t y) {
                w[p] = x;
                w[n - 1] = y;
                Mat m{1, 0, 0, 1};
                for (auto i : w) m = step(m, i);
                return m.a + m.d;
            };
            const i128 t00 = tr(0, 0), t10 = tr(1, 0), t01 = tr(0, 1), t11 = tr(1, 1);
            const i128 delta = t00, beta = t10 - t00, gamma = t01 - t00, alpha = t11 - t10 - t01 + t00;
            pairs += K.double_tail(alpha, beta, gamma, delta, double(D));
            ++res.prefixes;
            int pos = n - 3;
            while (pos >= 0 && small[pos] == D) --pos;
            if (pos < 0) break;
            ++small[pos];
            for (int q = pos + 1; q < n - 2; ++q) small[q] = 1;
        }
    }
    res.value = box + 0.5 * double(n) * pairs;

    // three or more digits > D
    const double sig2 = 2.0 * s.real();
    const double tail1 = hurwitz_zeta_real(sig2, double(D) + 1.0);
    const double zd = hurwitz_zeta_real(sig2, 1.0) - tail1;
    double r3 = 0.0;
    for (int k = 3; k <= n; ++k) r3 += binom(n, k) * std::pow(tail1, k) * std::pow(zd, n - k);
    res.tail_bound = r3 * denominator_bound(n, weight);
    return res;
}

// Words are counted through the rotation that puts a maximal digit last, so every
// prefix digit is bounded by the last one and the last digit is summed analytically.
class PrunedWalker {
public:
    PrunedWalker(Complex s, int n, OrbitWeight weight, const OrbitSumOptions& opt)
        : K_(s, n, weight), n_(n), sig2_(2.0 * s.real()), eps_(opt.prune_eps), D_(opt.max_digit),
          restrict_(opt.restrict_digits), max_leaves_(opt.max_prefixes), hz_(2.0 * s.real()) {
        mu_ = pair_mass_bound(s.real());
        zeta2_ = hz_(1);
        scale_ = double(n) * denominator_bound(n, weight);
    }

    OrbitSumResult run() {
        if (n_ == 1) {
            OrbitSumResult r;
            r.value = restrict_ ? K_.sum_from(1, 0, 1) - K_.sum_from(1, 0, double(D_) + 1.0L) : K_.sum_from(1, 0, 1);
            r.prefixes = 1;
            if (restrict_) r.tail_bound = hz_(D_ + 1);
            return r;
        }
        walk(0, Mat{1, 0, 0, 1}, 1.0, 0, 0, 0);
        OrbitSumResult r;
        r.value = total_ * double(n_);
        r.prefixes = leaves_;
        if (restrict_) {
            r.prune_bound = pruned_;
            const double zd = zeta2_ - hz_(D_ + 1);
            r.tail_bound = (std::pow(zeta2_, n_) - std::pow(zd, n_)) * scale_ / double(n_);
        } else {
            r.tail_bound = pruned_;
        }
        return r;
    }

private:
    // remaining factor after a pair ending at 1-based position e, including the last digit ≥ Mp
    double last_factor(std::int64_t Mp, int e) {
        if (n_ % 2) return std::pow(mu_, (n_ - 1 - e) / 2) * hz_(Mp);
        return std::pow(mu_, (n_ - e) / 2 - 1) * zeta2_ * hz_(Mp);
    }

    void leaf(const Mat& m, std::int64_t M, int cnt) {
        if (++leaves_ > max_leaves_) throw ResourceError("orbit_sum: pruned enumeration exceeded its cap");
        const long double d = ld(m.d), e = ld(m.b + m.c);
        Complex above;
        if (restrict_) {
            above = (M + 1 <= D_) ? K_.sum_from(d, e, double(M) + 1.0L) - K_.sum_from(d, e, double(D_) + 1.0L) : 0.0;
        } else {
            above = K_.sum_from(d, e, double(M) + 1.0L);
        }
        const Complex tie = K_.G(d * double(M) + e) / double(cnt + 1);
        total_ += above + tie;
    }

    void walk(int pos, const Mat& m, double B, std::int64_t M, int cnt, std::int64_t open_a) {
        if (pos == n_ - 1) {
            leaf(m, M, cnt);
            return;
        }
        const int p = pos + 1;  // 1-based position being filled
        if (pos % 2 == 0) {
            for (std::int64_t a = 1;; ++a) {
                const std::int64_t Mp = std::max(a, M);
                double mass;
                if (p + 1 == n_) mass = B * hz_(a) * hz_(Mp);
                else mass = B * hz_(a) * zeta2_ * last_factor(Mp, p + 1);
                mass *= scale_;
                if (a > D_) {
                    if (!restrict_) pruned_ += mass;
                    break;
                }
                if (mass < eps_) {
                    pruned_ += mass;
                    break;
                }
                const int c2 = (a > M) ? 1 : (a == M ? cnt + 1 : cnt);
                walk(pos + 1, step(m, a), B, Mp, c2, a);
            }
        } else {
            const double a_pow = std::pow(double(open_a), -sig2_);
            for (std::int64_t b = 1;; ++b) {
                const std::int64_t Mp = std::max(b, M);
                const double mass = scale_ * B * a_pow * hz_(b) * last_factor(Mp, p);
                if (b > D_) {
                    if (!restrict_) pruned_ += mass;
                    break;
                }
                if (mass < eps_) {
                    pruned_ += mass;
                    break;
                }
                const int c2 = (b > M) ? 1 : (b == M ? cnt + 1 : cnt);
                const double Bn = B * std::pow(double(open_a) * double(b) + 1.0, -sig2_);
                walk(pos + 1, step(m, b), Bn, Mp, c2, 0);
            }
        }
    }

    Kernel K_;
    int n_;
    double sig2_, eps_;
    std::int64_t D_;
    bool restrict_;
    double max_leaves_;
    RealHurwitzCache hz_;
    double mu_ = 0.0, zeta2_ = 0.0, scale_ = 1.0;
    Complex total_ = 0.0;
    double pruned_ = 0.0;
    std::uint64_t leaves_ = 0;
};

}  // namespace

double pair_mass_bound(double sigma) {
    if (!(sigma > 0.5)) throw DomainError("pair_mass_bound: requires sigma > 1/2");
    static thread_local std::unordered_map<double, double> cache;
    auto it = cache.find(sigma);
    if (it != cache.end()) return it->second;
    const double x = 2.0 * sigma;
    const int A = 4000;
    double mu = 0.0;
    for (int a = A; a >= 1; --a) mu += std::pow(double(a), -x) * hurwitz_zeta_real(x, 1.0 + 1.0 / a);
    mu += hurwitz_zeta_real(x, A + 1.0) * hurwitz_zeta_real(x, 1.0);
    mu *= 1.0 + 1e-12;
    cache.emplace(sigma, mu);
    return mu;
}

Complex orbit_weight(Complex s, int n, OrbitWeight weight, long double trace) {
    return Kernel(s, n, weight).G(trace);
}

Complex orbit_last_digit_sum(Complex s, int n, OrbitWeight weight, long double d, long double e, long double i0) {
    if (!(s.real() > 0.5)) throw DomainError("orbit_last_digit_sum: requires Re(s) > 1/2");
    if (!(d >= 1.0L) || !(i0 >= 1.0L)) throw DomainError("orbit_last_digit_sum: need d >= 1, i0 >= 1");
    return Kernel(s, n, weight).sum_from(d, e, std::floor(i0));
}

OrbitSumResult orbit_sum(Complex s, int n, OrbitWeight weight, const OrbitSumOptions& opt) {
    if (!(s.real() > 0.5)) throw DomainError("orbit_sum: requires Re(s) > 1/2");
    if (n < 1) throw DomainError("orbit_sum: n must be positive");
    if (opt.max_digit < 1) throw DomainError("orbit_sum: max_digit must be positive");
    switch (opt.mode) {
        case OrbitMode::Plain: return run_plain(s, n, weight, opt);
        case OrbitMode::Accelerated: return run_accelerated(s, n, weight, opt);
        case OrbitMode::Pruned: return PrunedWalker(s, n, weight, opt).run();
    }
    throw Error(ErrorCode::Internal, "orbit_sum: unknown mode");
}

}  // namespace mayer
