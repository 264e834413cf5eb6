#include "doctest.h"
#include "mayer/operator.hpp"
#include "mayer/specfun.hpp"

using namespace mayer;
using namespace std::complex_literals;

TEST_CASE("DiscDomain radius range") {
    CHECK(DiscDomain().radius() == 1.5);
    CHECK_NOTHROW(DiscDomain(1.0));
    CHECK_NOTHROW(DiscDomain(1.61));
    CHECK_THROWS_AS(DiscDomain(1.62), DomainError);
    CHECK_THROWS_AS(DiscDomain(0.9), DomainError);
}

TEST_CASE("sample grid") {
    const auto g = sample_grid(DiscDomain());
    REQUIRE(g.size() == 65);
    CHECK(g.back() == Complex(1.0, 0.0));
    for (int p = 0; p < 64; ++p) CHECK(std::abs(std::abs(g[p] - 1.0) - 0.75) < 1e-15);
}

TEST_CASE("apply_direct: telescoping at s=1") {
    auto h = [](Complex z) { return 1.0 / (1.0 + z); };
    const ApplyResult r = apply_direct(1.0, h, 1.0, 100);
    CHECK(r.corrected);
    CHECK(std::abs(r.value - 0.5) < 1e-14);
    // without the correction the bound must cover the partial-sum error
    ApplyOptions plain;
    plain.tail_correction = false;
    const ApplyResult p = apply_direct(1.0, h, 1.0, 100, plain);
    CHECK(std::abs(p.value - 0.5) <= p.tail_bound);
    CHECK(std::abs(p.value - 0.5) > 1e-4);
}

TEST_CASE("apply_direct: constant function at s=2") {
    const ApplyResult r = apply_direct(2.0, [](Complex) { return Complex(1.0); }, 1.0, 50);
    CHECK(std::abs(r.value - (std::pow(M_PI, 4) / 90.0 - 1.0)) < 1e-14);
}

TEST_CASE("apply_direct: f(z)=z at s=1.5 against a direct sum to 1e6") {
    double sum = 0.0;
    for (int n = 1000000; n >= 1; --n) sum += std::pow(1.0 + n, -4.0);
    sum += 1.0 / (3.0 * std::pow(1000001.5, 3));  // integral tail
    const ApplyResult r = apply_direct(1.5, [](Complex z) { return z; }, 1.0, 40);
    CHECK(std::abs(r.value - sum) < 1e-14);
    CHECK(std::abs(r.value - 0.082323233711138191516) < 1e-15);
}

TEST_CASE("apply_direct domain errors") {
    auto f = [](Complex z) { return z; };
    CHECK_THROWS_AS(apply_direct(0.5, f, 1.0, 10), DomainError);
    CHECK_THROWS_AS(apply_direct(1.0, f, 2.6, 10), DomainError);
}

TEST_CASE("matrix_monomial leading entries") {
    const OperatorMatrix A = matrix_monomial(1.0, 8);
    CHECK(A.basis() == Basis::MonomialAtOne);
    CHECK(A.order() == 8);
    CHECK(std::abs(A(0, 0) - (M_PI * M_PI / 6.0 - 1.0)) < 1e-14);
    // m=1, k=0: -(2s) (ζ(2s+1) - 1)
    CHECK(std::abs(A(1, 0) - (-0.4041138063191885708)) < 1e-14);
    const OperatorMatrix B = matrix_monomial(2.0 + 1.0i, 4);
    CHECK(std::abs(B(0, 0) - (riemann_zeta(4.0 + 2.0i) - 1.0)) < 1e-14);
}

TEST_CASE("matrix_monomial equals the literal binomial formula at small order") {
    for (Complex s : {Complex(1.0), Complex(1.5, 2.0), Complex(3.0)}) {
        const OperatorMatrix A = matrix_monomial(s, 10), B = matrix_monomial_binomial(s, 10);
        CHECK((A.entries() - B.entries()).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("matrix_monomial columns against finite-difference Taylor coefficients") {
    // m ≤ 2 by Richardson-extrapolated central differences at h = 1e-4 and 2e-4
    const Complex s = 1.5;
    const OperatorMatrix A = matrix_monomial(s, 32);
    for (int k = 0; k <= 3; ++k) {
        auto g = [&](Complex z) { return apply_direct(s, [k](Complex w) { return std::pow(w - 1.0, k); }, z, 60).value; };
        auto d1 = [&](double h) { return (g(1.0 + h) - g(1.0 - h)) / (2.0 * h); };
        auto d2 = [&](double h) { return (g(1.0 + h) - 2.0 * g(1.0) + g(1.0 - h)) / (h * h); };
        const double h = 1e-4;
        const Complex c0 = g(1.0);
        const Complex c1 = (4.0 * d1(h) - d1(2.0 * h)) / 3.0;
        const Complex c2 = 0.5 * (4.0 * d2(h) - d2(2.0 * h)) / 3.0;
        CHECK(std::abs(c0 - A(0, k)) < 1e-12);
        CHECK(std::abs(c1 - A(1, k)) < 1e-8);
        CHECK(std::abs(c2 - A(2, k)) < 1e-4);
    }
}

TEST_CASE("matrix_hurwitz entries") {
    const OperatorMatrix H = matrix_hurwitz(1.0, 6);
    CHECK(H.basis() == Basis::HurwitzBasis);
    CHECK(std::abs(H(0, 0) - M_PI * M_PI / 6.0) < 1e-14);
    for (int k = 0; k < 6; ++k) CHECK(std::abs(H(0, k) - riemann_zeta(2.0 + k)) < 1e-14);
}

TEST_CASE("matrix_hurwitz columns are Taylor coefficients at 0 of the image of w^k") {
    const Complex s = 1.2 + 0.5i;
    const int M = 48;
    const OperatorMatrix H = matrix_hurwitz(s, M);
    for (int k = 0; k < 4; ++k)
        for (Complex z : {Complex(0.3), Complex(-0.2, 0.25)}) {
            Complex series = 0.0, zm = 1.0;
            for (int m = 0; m < M; ++m, zm *= z) series += H(m, k) * zm;
            CHECK(std::abs(series - hurwitz_zeta(2.0 * s + double(k), z + 1.0)) < 1e-10);
        }
}

TEST_CASE("matrix_hurwitz eigenvalues match matrix_monomial at M=48" * doctest::may_fail()) {
    const auto& H = matrix_hurwitz(1.0, 48).entries();
    const auto& A = matrix_monomial(1.0, 48).entries();
    Eigen::ComplexEigenSolver<CMatrix> eh(H), ea(A);
    auto top = [](Eigen::VectorXcd v) {
        std::vector<Complex> x(v.data(), v.data() + v.size());
        std::sort(x.begin(), x.end(), [](Complex a, Complex b) { return std::abs(a) > std::abs(b); });
        x.resize(5);
        return x;
    };
    const auto a = top(ea.eigenvalues()), h = top(eh.eigenvalues());
    for (int i = 0; i < 5; ++i) CHECK(std::abs(a[i] - h[i]) < 1e-8);
}

TEST_CASE("matrix rows decay") {
    const OperatorMatrix A = matrix_monomial(1.0, 32);
    for (int k = 0; k < 32; ++k) CHECK(std::abs(A(31, k)) < std::abs(A(0, k)));
}

TEST_CASE("real s gives a real matrix; sign fault hook flips one entry") {
    const OperatorMatrix A = matrix_monomial(2.0, 8);
    CHECK(A.entries().imag().cwiseAbs().maxCoeff() == 0.0);
    MatrixOptions o;
    o.sign_fault = std::make_pair(1, 1);
    const OperatorMatrix B = matrix_monomial(2.0, 8, o);
    CHECK(B(1, 1) == -A(1, 1));
    CHECK(B(1, 2) == A(1, 2));
}

TEST_CASE("matrix domain") {
    CHECK_THROWS_AS(matrix_monomial(0.4, 8), DomainError);
    CHECK_NOTHROW(matrix_monomial(0.5 + 9.5i, 8));
}

TEST_CASE("image discs") {
    const ImageDisc d1 = image_disc(1, DiscDomain());
    CHECK(std::abs(d1.radius - 6.0 / 7.0) < 1e-15);
    CHECK(std::abs(d1.center - 8.0 / 7.0) < 1e-15);
    const ImageDisc d2 = image_disc(2, DiscDomain());
    CHECK(std::abs(d2.radius - 2.0 / 9.0) < 1e-15);
    CHECK(std::abs(d2.center - 4.0 / 9.0) < 1e-15);
    for (int n = 1; n <= 100; ++n) CHECK(image_contained(n, 1.5));
    CHECK_FALSE(image_contained(1, 1.62));
}
