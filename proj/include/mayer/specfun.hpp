#pragma once

#include <functional>
#include <vector>

#include "mayer/types.hpp"

namespace mayer {

// Principal log-gamma (continuous branch, real on the positive axis).
Complex log_gamma(Complex z);
Complex gamma(Complex z);

// Euler–Maclaurin. Valid for every s != 1; accuracy is stated for Re(s) > 1.
Complex riemann_zeta(Complex s);

// ζ(w; q) = Σ_{n≥0} (q+n)^{-w}, Re(q) > 0.
Complex hurwitz_zeta(Complex w, Complex q);

// out[j] = ζ(w0 + j*step; q) for j < count, sharing the logarithms of q+n.
// min_cutoff > 0 overrides the tuning's direct-summation floor.
void hurwitz_zeta_batch(Complex w0, double step, Complex q, std::size_t count, Complex* out, int min_cutoff = 0);

// J_nu(u) from the power series, accumulated in binary128.
Complex bessel_j(Complex nu, Complex u);

// Tuning knobs for the Euler–Maclaurin evaluators.
struct ZetaTuning {
    int min_cutoff = 50;
    int bernoulli_terms = 10;
};
ZetaTuning& zeta_tuning();

// Taylor coefficients c_0..c_{count-1} of f about `center`, from a P-point
// Cauchy DFT on the circle of radius rho.
std::vector<Complex> taylor_coefficients(const std::function<Complex(Complex)>& f, Complex center,
                                         double rho, std::size_t count, std::size_t points = 0);

// Bernoulli numbers B_2, B_4, ... (index k gives B_{2k+2}).
const std::vector<double>& bernoulli_even();

// Real Hurwitz zeta for bounds (x > 1, a > 0).
double hurwitz_zeta_real(double x, double a);

}  // namespace mayer
