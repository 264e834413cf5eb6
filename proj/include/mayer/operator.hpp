#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mayer/types.hpp"

namespace mayer {

using CMatrix = Eigen::MatrixXcd;
using HolomorphicFn = std::function<Complex(Complex)>;

class DiscDomain {
public:
    static constexpr double kDefaultRadius = 1.5;
    static double golden() { return 0.5 * (1.0 + std::sqrt(5.0)); }

    explicit DiscDomain(double radius = kDefaultRadius);
    double radius() const { return r_; }
    Complex center() const { return 1.0; }
    bool contains(Complex z) const { return std::abs(z - 1.0) < r_; }

private:
    double r_;
};

enum class Basis { MonomialAtOne, HurwitzBasis };
const char* basis_name(Basis b);

class OperatorMatrix {
public:
    OperatorMatrix(Complex s, Basis basis, DiscDomain disc, CMatrix entries)
        : s_(s), basis_(basis), disc_(disc), a_(std::move(entries)) {}

    Complex s() const { return s_; }
    int order() const { return int(a_.rows()); }
    Basis basis() const { return basis_; }
    const DiscDomain& disc() const { return disc_; }
    const CMatrix& entries() const { return a_; }
    Complex operator()(int m, int k) const { return a_(m, k); }

private:
    Complex s_;
    Basis basis_;
    DiscDomain disc_;
    CMatrix a_;
};

struct MatrixOptions {
    DiscDomain disc{};
    int split_bases = 32;  // bases q < Q handled by Cauchy DFT
    // test hook: flips the sign of one entry after assembly
    std::optional<std::pair<int, int>> sign_fault;
};

// Re(s) may sit on the line 1/2 itself (analytic continuation through ζ).
constexpr double kCriticalSlack = 1e-6;
void require_half_plane(Complex s, const char* where, bool allow_critical_line);

OperatorMatrix matrix_monomial(Complex s, int order, const MatrixOptions& opt = {});
// Literal binomial-sum formula; loses accuracy to cancellation as M grows.
OperatorMatrix matrix_monomial_binomial(Complex s, int order, const MatrixOptions& opt = {});
OperatorMatrix matrix_hurwitz(Complex s, int order, const MatrixOptions& opt = {});

struct ApplyResult {
    Complex value;
    Complex partial;      // Σ_{n ≤ n_cap}
    double tail_bound;    // ‖f‖ Σ_{n>n_cap} (n-r+1)^{-2σ}
    double residual;      // estimate of what the tail correction leaves out
    bool corrected;
};

struct ApplyOptions {
    DiscDomain disc{};
    bool tail_correction = true;
};

ApplyResult apply_direct(Complex s, const HolomorphicFn& f, Complex z, int n_cap, const ApplyOptions& opt = {});

struct HolomorphicSample {
    std::vector<Complex> points;
    std::vector<Complex> values;
};
std::vector<Complex> sample_grid(const DiscDomain& disc);
HolomorphicSample sample(const HolomorphicFn& f, const DiscDomain& disc);

struct ImageDisc {
    double center;
    double radius;
};
ImageDisc image_disc(int n, const DiscDomain& disc);
// Same formula for an arbitrary radius r < n+1 (no DiscDomain validation).
ImageDisc image_disc_raw(int n, double r);
bool image_contained(int n, double r);

}  // namespace mayer
