#include <random>

#include "doctest.h"
#include "mayer/dynamics.hpp"
#include "mayer/specfun.hpp"
#include "mayer/verify.hpp"
#include "mayer/zeta.hpp"

using namespace mayer;

TEST_CASE("module invariants at their stated tolerances") {
    for (const CheckResult& r : run_invariants(VerifyOptions{})) {
        INFO(format_check(r));
        CHECK(r.passed);
    }
}

TEST_CASE("random words: rotation invariance, duality, exact fixed points") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> len(1, 4), digit(1, 60);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::int64_t> d(2 * len(rng));
        for (auto& x : d) x = digit(rng);
        const CFWord w(d);
        const double p = orbit_product(w);
        const HyperbolicClass h = reduced_matrix(w);
        CHECK(std::abs(p * p * h.norm - 1.0) < 1e-10);
        for (std::size_t k = 1; k < w.size(); ++k) {
            CHECK(std::abs(orbit_product(w.rotated(k)) / p - 1.0) < 1e-12);
            CHECK(word_matrix(w.rotated(k)).trace() == h.matrix_trace);
        }
        QuadraticSurd z = periodic_point(w);
        const QuadraticSurd z0 = z;
        for (std::size_t k = 0; k < w.size(); ++k) z = z.gauss_shift();
        CHECK(z == z0);
    }
}

TEST_CASE("random Hurwitz arguments: shift identity and Riemann consistency") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> re(1.1, 10.0), im(-40.0, 40.0), q(0.2, 8.0);
    for (int i = 0; i < 50; ++i) {
        const Complex w(re(rng), im(rng));
        const double qq = q(rng);
        const Complex rhs = std::exp(-w * std::log(qq));
        const Complex lhs = hurwitz_zeta(w, qq) - hurwitz_zeta(w, qq + 1.0);
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
        CHECK(std::abs(hurwitz_zeta(w, 1.0) - riemann_zeta(w)) < 1e-12);
    }
}

TEST_CASE("random s: conjugate symmetry and MinusSquare factorisation") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> re(0.55, 3.0), im(-12.0, 12.0);
    for (int i = 0; i < 8; ++i) {
        const Complex s(re(rng), im(rng));
        const OperatorMatrix A = matrix_monomial(s, 32), B = matrix_monomial(std::conj(s), 32);
        const Complex z = det_of(A, DetKind::MinusSquare);
        // entries lose digits to cancellation as |Im s| grows; ~1e-10 at |Im s| = 12
        const double tol = (std::abs(s.imag()) <= 6.0 ? 1e-12 : 1e-9) * std::max(1.0, std::abs(z));
        CHECK(std::abs(z - std::conj(det_of(B, DetKind::MinusSquare))) < tol);
        CHECK(std::abs(z - det_of(A, DetKind::Minus) * det_of(A, DetKind::Plus)) < tol);
    }
}

TEST_CASE("Z is real and in (0,1) on a fine real grid") {
    for (int i = 1; i <= 40; ++i) {
        const Complex z = selberg_det_identity(1.0 + 0.05 * i, 48).value;
        CHECK(z.imag() == 0.0);
        CHECK(z.real() > 0.0);
        CHECK(z.real() < 1.0);
    }
}
