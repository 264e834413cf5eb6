#include <random>

#include "doctest.h"
#include "mayer/specfun.hpp"

using namespace mayer;
using namespace std::complex_literals;

namespace {
double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("log_gamma at simple points") {
    CHECK(std::abs(log_gamma(1.0)) < 1e-15);
    CHECK(std::abs(log_gamma(0.5) - 0.5 * std::log(M_PI)) < 1e-14);
    CHECK(std::abs(log_gamma(0.5).real() - 0.5723649429247001) < 1e-14);
    CHECK(std::abs(log_gamma(4.0) - std::log(6.0)) < 1e-14);
}

TEST_CASE("log_gamma and gamma off the real axis (mpmath values)") {
    CHECK(rel(log_gamma(0.3 - 7.0i), Complex(-10.465674446702918896, -6.3103096470407681554)) < 1e-13);
    CHECK(rel(gamma(1.0 + 2.0i), Complex(0.15190400267003613745, 0.019804880161854981972)) < 1e-13);
}

TEST_CASE("log_gamma poles") {
    for (double z : {0.0, -1.0, -2.0, -7.0}) CHECK_THROWS_AS(log_gamma(z), PoleError);
    CHECK_THROWS_AS(gamma(Complex(-3.0)), PoleError);
}

TEST_CASE("gamma recurrence holds to 1e-13 for |z| <= 50") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(0.5, 35.0), im(-35.0, 35.0);
    for (int i = 0; i < 200; ++i) {
        const Complex z(re(rng), im(rng));
        if (std::abs(z) > 49.0) continue;
        // compare logs: Γ itself under/overflows near |z| = 50
        const Complex lhs = log_gamma(z + 1.0), rhs = log_gamma(z) + std::log(z);
        const double d = std::abs(std::exp(lhs - rhs) - 1.0);
        CHECK(d < 1e-13);
    }
}

TEST_CASE("riemann_zeta closed forms and mpmath values") {
    CHECK(std::abs(riemann_zeta(2.0) - M_PI * M_PI / 6.0) < 1e-15);
    CHECK(std::abs(riemann_zeta(4.0) - std::pow(M_PI, 4) / 90.0) < 1e-15);
    CHECK(std::abs(riemann_zeta(2.0 + 3.0i) - Complex(0.79802198514627572062, -0.11374430805293850022)) < 1e-13);
    CHECK(std::abs(riemann_zeta(1.1 + 50.0i) - Complex(0.50024047942685265472, 0.2643546090503305316)) < 1e-13);
    CHECK_THROWS_AS(riemann_zeta(1.0), PoleError);
}

TEST_CASE("riemann_zeta against a brute-force partial sum with integral tail") {
    // Σ_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2, error O(N^{-σ-1})
    const Complex s = 2.0 + 3.0i;
    const int N = 1000000;
    Complex sum = 0.0;
    for (int n = N - 1; n >= 1; --n) sum += std::exp(-s * std::log(double(n)));
    sum += std::exp((1.0 - s) * std::log(double(N))) / (s - 1.0) + 0.5 * std::exp(-s * std::log(double(N)));
    CHECK(std::abs(riemann_zeta(s) - sum) < 1e-12);
}

TEST_CASE("hurwitz_zeta values") {
    CHECK(std::abs(hurwitz_zeta(2.0, 1.0) - M_PI * M_PI / 6.0) < 1e-15);
    CHECK(std::abs(hurwitz_zeta(2.0, 2.0) - (M_PI * M_PI / 6.0 - 1.0)) < 1e-15);
    CHECK(std::abs(hurwitz_zeta(3.0 + 1.0i, 1.5) - Complex(0.31059051564849493576, -0.21623112082107081754)) < 1e-13);
    CHECK(std::abs(hurwitz_zeta(2.5 - 4.0i, 0.3 + 2.0i) - Complex(1.9224228054007509968e-5, 9.2284208067164782222e-5)) < 1e-13);
}

TEST_CASE("hurwitz_zeta errors") {
    CHECK_THROWS_AS(hurwitz_zeta(1.0, 2.0), PoleError);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, -1.5), DomainError);
}

TEST_CASE("hurwitz_zeta_batch matches single evaluations") {
    std::vector<Complex> out(6);
    hurwitz_zeta_batch(2.2 + 1.0i, 1.0, 3.5, out.size(), out.data());
    for (std::size_t j = 0; j < out.size(); ++j) CHECK(std::abs(out[j] - hurwitz_zeta(2.2 + 1.0i + double(j), 3.5)) < 1e-14);
}

TEST_CASE("bessel_j values") {
    CHECK(std::abs(bessel_j(0.0, 0.0) - 1.0) == 0.0);
    CHECK(std::abs(bessel_j(1.0, 0.0)) == 0.0);
    CHECK(rel(bessel_j(3.0, 2.0), 0.1289432494744020511) < 1e-13);
    CHECK(rel(bessel_j(2.5 + 1.0i, 1.5 + 0.5i), Complex(0.098963920669429512332, -0.069795923884391543969)) < 1e-12);
    CHECK(rel(bessel_j(1.0 + 2.0i, 20.0), Complex(0.52780881448096084153, -1.7845440456439863513)) < 1e-12);
}

TEST_CASE("bessel_j reports failure far outside its range") {
    CHECK_THROWS_AS(bessel_j(0.0, 1e4), Error);
}

TEST_CASE("taylor_coefficients of exp") {
    const auto c = taylor_coefficients([](Complex z) { return std::exp(z); }, 0.0, 1.0, 10, 64);
    double fact = 1.0;
    for (int k = 0; k < 10; ++k) {
        if (k) fact *= k;
        CHECK(std::abs(c[k] - 1.0 / fact) < 1e-15);
    }
}

TEST_CASE("oracle tuning agrees with the default") {
    const Complex a = hurwitz_zeta(3.0 + 10.0i, 0.7), b = riemann_zeta(1.5 - 20.0i);
    const ZetaTuning saved = zeta_tuning();
    zeta_tuning() = ZetaTuning{200, 12};
    const Complex a2 = hurwitz_zeta(3.0 + 10.0i, 0.7), b2 = riemann_zeta(1.5 - 20.0i);
    zeta_tuning() = saved;
    CHECK(std::abs(a - a2) < 1e-14);
    CHECK(std::abs(b - b2) < 1e-13);
}
