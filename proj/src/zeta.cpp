#include "mayer/zeta.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "mayer/dynamics.hpp"
#include "mayer/specfun.hpp"

namespace mayer {

namespace {

void require_re_above_one(Complex s, const char* where) {
    if (!is_finite(s) || !(s.real() > 1.0)) throw DomainError(std::string(where) + ": requires Re(s) > 1");
}

ZetaValue ratio(Complex s, Complex num, Complex den, int M) {
    ZetaValue z;
    z.s = s;
    z.route = ZetaRoute::DetRatio;
    z.numerator = num;
    z.denominator = den;
    z.caps = {{"M", double(M)}};
    if (std::abs(den) < kPoleThreshold) {
        z.pole = true;
        z.value = Complex(std::numeric_limits<double>::infinity(), 0.0);
    } else {
        z.value = checked(num / den, "determinant ratio");
    }
    return z;
}

Complex det_at(Complex s, DetKind kind, int M) { return det_finite(s, kind, M).value; }

// weight of a word with matrix trace t and length n, P = 1/λ
Complex orbit_power(Complex s, long double t, int n) {
    const long double lam = expanding_eigenvalue(t, (n % 2) ? -1 : 1);
    return std::exp(-2.0 * s * double(std::log(lam)));
}

bool least_rotation_primitive(const std::vector<std::int64_t>& w) {
    const std::size_t n = w.size();
    for (std::size_t k = 1; k < n; ++k) {
        // compare rotation starting at k against w
        for (std::size_t i = 0; i < n; ++i) {
            const auto a = w[(k + i) % n], b = w[i];
            if (a < b) return false;
            if (a > b) break;
            if (i + 1 == n) return false;  // equal rotation: not primitive
        }
    }
    return true;
}

OrbitSumOptions route_options(Complex s, int n, const OrbitRouteOptions& opt) {
    if (opt.restrict_digits) {
        OrbitSumOptions o;
        o.mode = OrbitMode::Pruned;
        o.restrict_digits = true;
        o.max_digit = opt.max_digit > 0 ? opt.max_digit : 40;
        o.prune_eps = opt.prune_eps;
        return o;
    }
    DetSeriesOptions d;
    d.max_digit = opt.max_digit;
    d.prune_eps = opt.prune_eps;
    return det_series_orbit_options(s, n, d);
}

ZetaValue orbit_exponential(Complex s, int n_max, const OrbitRouteOptions& opt, bool even_only) {
    require_half_plane(s, even_only ? "eta_orbit_sum" : "xi_orbit_sum", false);
    if (n_max < 1) throw DomainError("orbit route: n_max must be positive");
    ZetaValue z;
    z.s = s;
    z.route = ZetaRoute::OrbitSum;
    Complex sum = 0.0;
    double tails = 0.0, last = 0.0;
    const double factor = even_only ? 2.0 : 1.0;
    for (int n = even_only ? 2 : 1; n <= n_max; n += even_only ? 2 : 1) {
        const OrbitSumResult r = orbit_sum(s, n, OrbitWeight::Zeta, route_options(s, n, opt));
        sum += factor * r.value / double(n);
        tails += factor * (r.tail_bound + r.prune_bound) / double(n);
        last = factor * std::abs(r.value) / double(n);
    }
    z.value = checked(std::exp(sum), "orbit route");
    z.tail = std::abs(z.value) * std::expm1(tails);
    z.caps = {{"n_max", double(n_max)},
              {"max_digit", double(opt.max_digit)},
              {"restrict_digits", opt.restrict_digits ? 1.0 : 0.0},
              {"prune_eps", opt.prune_eps},
              {"last_term", last}};
    return z;
}

}  // namespace

const char* zeta_route_name(ZetaRoute r) {
    switch (r) {
        case ZetaRoute::DetRatio: return "DetRatio";
        case ZetaRoute::EulerProduct: return "EulerProduct";
        case ZetaRoute::DetIdentity: return "DetIdentity";
        case ZetaRoute::ReducedSum: return "ReducedSum";
        case ZetaRoute::OrbitSum: return "OrbitSum";
    }
    return "?";
}

ZetaValue xi_det_ratio(Complex s, int M) {
    require_half_plane(s, "xi_det_ratio", false);
    return ratio(s, det_at(s + 1.0, DetKind::Plus, M), det_at(s, DetKind::Minus, M), M);
}

ZetaValue eta_det_ratio(Complex s, int M) {
    require_half_plane(s, "eta_det_ratio", false);
    return ratio(s, det_at(s + 1.0, DetKind::MinusSquare, M), det_at(s, DetKind::MinusSquare, M), M);
}

ZetaValue selberg_det_identity(Complex s, int M) {
    require_half_plane(s, "selberg_det_identity", true);
    ZetaValue z;
    z.s = s;
    z.route = ZetaRoute::DetIdentity;
    z.value = det_at(s, DetKind::MinusSquare, M);
    z.caps = {{"M", double(M)}};
    return z;
}

int default_euler_k_max() {
    const double n0 = std::pow(0.5 * (3.0 + std::sqrt(5.0)), 2);
    return int(std::ceil(40.0 / std::log(n0)));
}

ZetaValue selberg_euler_product(Complex s, double norm_cap, int k_max) {
    require_re_above_one(s, "selberg_euler_product");
    if (!(norm_cap > 6.0)) throw DomainError("selberg_euler_product: norm_cap must exceed 6");
    if (k_max < 0) k_max = default_euler_k_max();
    // a word of length 2l has trace at least the Lucas number L_{2l} > φ^{2l}
    const double phi = 0.5 * (1.0 + std::sqrt(5.0));
    const double t_cap = std::sqrt(norm_cap) + 1.0 / std::sqrt(norm_cap);
    const int length_cap = int(std::ceil(std::log(t_cap + 1.0) / (2.0 * std::log(phi)))) + 1;
    const auto classes = enumerate_classes(norm_cap, length_cap);
    Complex log_sum = 0.0;
    std::size_t primitive = 0;
    for (const auto& c : classes) {
        if (c.primitivity_k != 1) continue;
        ++primitive;
        const double ln_n = std::log(c.norm);
        for (int k = 0; k <= k_max; ++k) log_sum += std::log(1.0 - std::exp(-(double(k) + s) * ln_n));
    }
    ZetaValue z;
    z.s = s;
    z.route = ZetaRoute::EulerProduct;
    z.value = checked(std::exp(log_sum), "selberg_euler_product");
    // prime geodesic density 1/ln N: Σ_{N > cap} N^{-σ} ≈ cap^{1-σ} / ((σ-1) ln cap)
    const double sigma = s.real();
    z.tail = std::abs(z.value) * std::pow(norm_cap, 1.0 - sigma) / ((sigma - 1.0) * std::log(norm_cap));
    z.caps = {{"norm_cap", norm_cap}, {"k_max", double(k_max)}, {"primitive_classes", double(primitive)}};
    return z;
}

TelescopeResult telescoped_product(Complex s, int L, int M) {
    require_re_above_one(s, "telescoped_product");
    if (L < 0) throw DomainError("telescoped_product: L must be non-negative");
    std::vector<Complex> d(L + 2);
    for (int l = 0; l <= L + 1; ++l) d[l] = det_at(s + double(l), DetKind::MinusSquare, M);
    Complex prod = 1.0;
    for (int l = 0; l <= L; ++l) prod *= d[l + 1] / d[l];
    TelescopeResult r;
    r.product.s = r.telescoped.s = s;
    r.product.route = r.telescoped.route = ZetaRoute::DetRatio;
    r.product.caps = r.telescoped.caps = {{"L", double(L)}, {"M", double(M)}};
    r.product.value = checked(prod, "telescoped_product");
    r.telescoped.numerator = d[L + 1];
    r.telescoped.denominator = d[0];
    r.telescoped.value = checked(d[L + 1] / d[0], "telescoped_product");
    return r;
}

ZetaValue lewis_zagier_log_z(Complex s, int l_max, std::int64_t max_digit, double prune_eps) {
    require_re_above_one(s, "lewis_zagier_log_z");
    if (l_max < 1 || max_digit < 1) throw DomainError("lewis_zagier_log_z: l_max and max_digit must be positive");
    OrbitSumOptions o;
    o.mode = OrbitMode::Pruned;
    o.restrict_digits = true;
    o.max_digit = max_digit;
    o.prune_eps = prune_eps;
    Complex sum = 0.0;
    double pruned = 0.0, cap_tail = 0.0;
    for (int l = 1; l <= l_max; ++l) {
        const OrbitSumResult r = orbit_sum(s, 2 * l, OrbitWeight::Trace, o);
        sum += r.value / double(l);
        pruned += r.prune_bound / double(l);
        cap_tail += r.tail_bound / double(l);
    }
    ZetaValue z;
    z.s = s;
    z.route = ZetaRoute::ReducedSum;
    z.value = checked(std::exp(-sum), "lewis_zagier_log_z");
    z.tail = std::abs(z.value) * std::expm1(pruned);
    z.caps = {{"l_max", double(l_max)}, {"max_digit", double(max_digit)}, {"prune_eps", prune_eps}, {"digit_cap_tail", cap_tail}};
    return z;
}

Complex lewis_zagier_word_sum(Complex s, int l_max, std::int64_t max_digit) {
    require_re_above_one(s, "lewis_zagier_word_sum");
    Complex sum = 0.0;
    for (int l = 1; l <= l_max; ++l) {
        Complex part = 0.0;
        for (const auto& w : enumerate_fix_words(2 * l, max_digit)) {
            const HyperbolicClass h = reduced_matrix(w);
            const double ln_n = std::log(h.norm);
            part += std::exp(-s * ln_n) / (1.0 - 1.0 / h.norm);
        }
        sum += part / double(l);
    }
    return sum;
}

ZetaValue xi_orbit_sum(Complex s, int n_max, const OrbitRouteOptions& opt) {
    return orbit_exponential(s, n_max, opt, false);
}

ZetaValue eta_orbit_sum(Complex s, int n_max, const OrbitRouteOptions& opt) {
    return orbit_exponential(s, n_max, opt, true);
}

ZetaValue eta_euler_product(Complex s, int max_period, std::int64_t max_digit, double weight_eps) {
    require_half_plane(s, "eta_euler_product", false);
    if (max_period < 1 || max_digit < 1) throw DomainError("eta_euler_product: caps must be positive");
    const double sig2 = 2.0 * s.real();
    Complex log_eta = 0.0;
    std::size_t orbits = 0;
    std::vector<std::int64_t> w;
    // prefix matrices as long double continuants (exact below 2^64)
    struct M2 {
        long double a, b, c, d;
    };
    std::vector<M2> stack{M2{1, 0, 0, 1}};
    std::vector<double> bound{1.0};
    std::function<void(int)> dfs = [&](int m) {
        const int len = int(w.size());
        if (len == m) {
            if (!least_rotation_primitive(w)) return;
            ++orbits;
            const M2& x = stack.back();
            const Complex wt = orbit_power(s, x.a + x.d, m);
            log_eta += (m % 2) ? -std::log(1.0 - wt * wt) : -2.0 * std::log(1.0 - wt);
            return;
        }
        for (std::int64_t i = 1; i <= max_digit; ++i) {
            // a least rotation never has a digit below its first one
            if (len > 0 && i < w[0]) continue;
            const double b = bound.back() * std::pow(double(i), -sig2);
            if (b < weight_eps) break;
            const M2& x = stack.back();
            const long double li = (long double)i;
            stack.push_back({x.b, x.a + x.b * li, x.d, x.c + x.d * li});
            bound.push_back(b);
            w.push_back(i);
            dfs(m);
            w.pop_back();
            bound.pop_back();
            stack.pop_back();
        }
    };
    for (int m = 1; m <= max_period; ++m) dfs(m);
    ZetaValue z;
    z.s = s;
    z.route = ZetaRoute::EulerProduct;
    z.value = checked(std::exp(log_eta), "eta_euler_product");
    z.caps = {{"max_period", double(max_period)},
              {"max_digit", double(max_digit)},
              {"weight_eps", weight_eps},
              {"orbits", double(orbits)}};
    return z;
}

}  // namespace mayer
