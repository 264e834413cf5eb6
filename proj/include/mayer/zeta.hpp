#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mayer/spectral.hpp"

namespace mayer {

enum class ZetaRoute { DetRatio, EulerProduct, DetIdentity, ReducedSum, OrbitSum };
const char* zeta_route_name(ZetaRoute r);

struct ZetaValue {
    Complex s;
    Complex value;
    ZetaRoute route = ZetaRoute::DetIdentity;
    std::vector<std::pair<std::string, double>> caps;
    double tail = 0.0;
    // ratios only: raw parts, and whether the denominator vanished
    bool pole = false;
    Complex numerator, denominator;
};

// |denominator| below this marks a pole of a determinant ratio
constexpr double kPoleThreshold = 1e-13;

// ξ(s) = det(1 + L_{s+1}) / det(1 - L_s)
ZetaValue xi_det_ratio(Complex s, int M);
// η(s) = det(1 - L_{s+1}^2) / det(1 - L_s^2)
ZetaValue eta_det_ratio(Complex s, int M);

// Z(s) = det(1 - L_s^2)
ZetaValue selberg_det_identity(Complex s, int M);

// ⌈40 / ln N0⌉ with N0 the smallest norm
int default_euler_k_max();
// Π over primitive classes with N ≤ norm_cap, 0 ≤ k ≤ k_max (k_max < 0: default)
ZetaValue selberg_euler_product(Complex s, double norm_cap, int k_max = -1);

struct TelescopeResult {
    ZetaValue product;     // Π_{l ≤ L} η(s+l)
    ZetaValue telescoped;  // det(1 - L^2_{s+L+1}) / det(1 - L^2_s)
};
TelescopeResult telescoped_product(Complex s, int L, int M);

// exp(-Σ_{l ≤ l_max} (1/l) Σ_{|w| = 2l, digits ≤ D} N^{-s}/(1 - N^{-1})), by pruned enumeration
ZetaValue lewis_zagier_log_z(Complex s, int l_max, std::int64_t max_digit, double prune_eps = 1e-13);
// The same exponent summed literally over every reduced word, from exact norms (small caps only).
Complex lewis_zagier_word_sum(Complex s, int l_max, std::int64_t max_digit);

struct OrbitRouteOptions {
    std::int64_t max_digit = 0;  // 0: automatic box / uncapped walk
    bool restrict_digits = false;
    double prune_eps = 1e-13;
};

// ξ(s) = exp(Σ_{n ≤ n_max} (1/n) Σ_{Fix+T^n} P^{2s})
ZetaValue xi_orbit_sum(Complex s, int n_max, const OrbitRouteOptions& opt = {});
// η(s) = exp(2 Σ_{n even ≤ n_max} (1/n) Σ_{Fix+T^n} P^{2s}); odd n are never evaluated
ZetaValue eta_orbit_sum(Complex s, int n_max, const OrbitRouteOptions& opt = {});

// η as a product over primitive Gauss-map orbits of period ≤ max_period with digits ≤ max_digit:
// (1 - w)^{-2} for even periods, (1 - w^2)^{-1} for odd ones, w = P^{2s}.
// Orbits whose digit bound Π i_k^{-2σ} is below weight_eps are skipped.
ZetaValue eta_euler_product(Complex s, int max_period, std::int64_t max_digit, double weight_eps = 1e-16);

}  // namespace mayer
