#pragma once

#include <cstdint>
#include <vector>

#include "mayer/types.hpp"

namespace mayer {

// Sums over Fix+T^n of a weight depending on the orbit product P of each word.
//   Trace:  P^{2s} / (1 - (-1)^n P^2)   (terms of tr L_s^n)
//   Zeta:   P^{2s}                      (terms of the dynamical zetas)
enum class OrbitWeight { Trace, Zeta };

enum class OrbitMode {
    Plain,        // every word with digits <= max_digit, nothing else
    Accelerated,  // box [1,D]^n completed analytically for up to two digits > D
    Pruned,       // weight-pruned prefix enumeration, last digit summed analytically
};

struct OrbitSumOptions {
    OrbitMode mode = OrbitMode::Accelerated;
    std::int64_t max_digit = 200;
    double prune_eps = 1e-14;
    // Pruned mode: restrict every digit (including the last) to [1, max_digit].
    bool restrict_digits = false;
    double max_prefixes = 4e7;
};

struct OrbitSumResult {
    Complex value;
    // Plain / restricted: bound on the omitted part of the infinite sum (digit cap).
    // Accelerated / Pruned: certified bound on |full sum - value|.
    double tail_bound = 0.0;
    // restricted pruned mode: bound on the pruned part of the capped sum
    double prune_bound = 0.0;
    std::uint64_t prefixes = 0;
};

OrbitSumResult orbit_sum(Complex s, int n, OrbitWeight weight, const OrbitSumOptions& opt);

// Weight of a single word from its matrix trace (exact integer passed as long double).
Complex orbit_weight(Complex s, int n, OrbitWeight weight, long double trace);

// Σ_{i ≥ i0} of the weight of a word whose matrix trace is d·i + e (d ≥ 1).
Complex orbit_last_digit_sum(Complex s, int n, OrbitWeight weight, long double d, long double e, long double i0);

// μ(σ) ≥ Σ_{a,b≥1} (ab+1)^{-2σ}, the per-pair factor of the pruning bound.
double pair_mass_bound(double sigma);

}  // namespace mayer
