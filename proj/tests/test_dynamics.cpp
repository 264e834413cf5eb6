#include <map>
#include <set>

#include "doctest.h"
#include "mayer/dynamics.hpp"

using namespace mayer;

namespace {
const double kGolden = 0.5 * (std::sqrt(5.0) - 1.0);
}

TEST_CASE("gauss_map") {
    CHECK(gauss_map(0.0) == 0.0);
    CHECK(gauss_map(0.5) == 0.0);
    CHECK(std::abs(gauss_map(kGolden) - kGolden) < 1e-15);
    CHECK(std::abs(gauss_map(0.3) - (1.0 / 0.3 - 3.0)) < 1e-15);
    CHECK_THROWS_AS(gauss_map(-0.1), DomainError);
    CHECK_THROWS_AS(gauss_map(1.5), DomainError);
}

TEST_CASE("periodic_point of short words") {
    const QuadraticSurd g = periodic_point(CFWord{1});
    CHECK(g == QuadraticSurd(-1, 1, 5, 2));
    CHECK(periodic_point(CFWord{2}) == QuadraticSurd(-1, 1, 2, 1));
    CHECK(std::abs(g.to_double() - kGolden) < 1e-16);
}

TEST_CASE("periodic_point((1,2)) is the limit of the composed map") {
    // fixed point of psi_2 o psi_1, iterated from 0.5
    double x = 0.5;
    for (int k = 0; k < 50; ++k) x = 1.0 / (1.0 / (x + 1.0) + 2.0);
    CHECK(std::abs(periodic_point(CFWord{1, 2}).to_double() - x) < 1e-15);
}

TEST_CASE("orbit_product values") {
    CHECK(std::abs(orbit_product(CFWord{1}) - kGolden) < 1e-15);
    CHECK(std::abs(orbit_product(CFWord{1, 1}) - kGolden * kGolden) < 1e-15);
    CHECK(std::abs(orbit_product(CFWord{1, 1}) - 0.3819660112501051) < 1e-15);
}

TEST_CASE("orbit_product((1,2)) from the derivative of the composed branch") {
    // |(psi_2 o psi_1)'(z)| = psi_1'(z) psi_2'(psi_1 z), evaluated by chain rule in floating point
    double x = 0.5;
    for (int k = 0; k < 60; ++k) x = 1.0 / (1.0 / (x + 1.0) + 2.0);
    const double y = 1.0 / (x + 1.0);
    const double deriv = 1.0 / ((x + 1.0) * (x + 1.0)) * 1.0 / ((y + 2.0) * (y + 2.0));
    CHECK(std::abs(orbit_product(CFWord{1, 2}) - std::sqrt(deriv)) < 1e-15);
}

TEST_CASE("enumerate_fix_words") {
    const auto a = enumerate_fix_words(1, 3);
    REQUIRE(a.size() == 3);
    CHECK(a[0] == CFWord{1});
    CHECK(a[2] == CFWord{3});
    const auto b = enumerate_fix_words(2, 2);
    REQUIRE(b.size() == 4);
    CHECK(b[0] == CFWord{1, 1});
    CHECK(b[1] == CFWord{1, 2});
    CHECK(b[2] == CFWord{2, 1});
    CHECK(b[3] == CFWord{2, 2});
    CHECK(enumerate_fix_words(3, 5).size() == 125);
    CHECK(std::is_sorted(b.begin(), b.end()));
    CHECK_THROWS_AS(enumerate_fix_words(6, 1000), ResourceError);
    CHECK_THROWS_AS(enumerate_fix_words(0, 3), DomainError);
}

TEST_CASE("canonical_rotation and primitive_period") {
    CHECK(canonical_rotation(CFWord{2, 1}) == CFWord{1, 2});
    CHECK(canonical_rotation(CFWord{1, 1}) == CFWord{1, 1});
    CHECK(canonical_rotation(CFWord{3, 1, 2}) == CFWord{1, 2, 3});
    CHECK(primitive_period(CFWord{1, 2, 1, 2}) == 2);
    CHECK(primitive_period(CFWord{1, 2, 3}) == 3);
    CHECK(primitive_period(CFWord{1, 1, 1}) == 1);
}

TEST_CASE("reduced_matrix") {
    const HyperbolicClass a = reduced_matrix(CFWord{1, 1});
    CHECK(a.matrix.a == 1);
    CHECK(a.matrix.b == 1);
    CHECK(a.matrix.c == 1);
    CHECK(a.matrix.d == 2);
    CHECK(a.matrix_trace == 3);
    CHECK(std::abs(a.norm - 6.854101966249685) < 1e-14);
    CHECK(std::abs(a.geodesic_length - std::log(a.norm)) < 1e-15);

    const HyperbolicClass b = reduced_matrix(CFWord{1, 2});
    CHECK(b.matrix.a == 1);
    CHECK(b.matrix.b == 2);
    CHECK(b.matrix.c == 1);
    CHECK(b.matrix.d == 3);
    CHECK(b.matrix_trace == 4);
    CHECK(std::abs(b.norm - 13.928203230275509) < 1e-13);

    const HyperbolicClass c = reduced_matrix(CFWord{1, 1, 1, 1});
    CHECK(c.matrix_trace == 7);
    CHECK(c.primitivity_k == 2);
    CHECK(c.length_l == 2);

    CHECK_THROWS_AS(reduced_matrix(CFWord{1, 2, 3}), ParityError);
}

TEST_CASE("reduced_matrix keeps exact traces of long words") {
    // (1,1)^30: trace is the Lucas number L_60
    std::vector<std::int64_t> w(60, 1);
    CHECK(reduced_matrix(CFWord(w)).matrix_trace == BigInt("3461452808002"));
    std::vector<std::int64_t> big(40, 1000000);
    CHECK(word_matrix(CFWord(big)).trace() > BigInt(1) << 790);
    CHECK_THROWS_AS(reduced_matrix(CFWord(big)), OverflowError);
}

TEST_CASE("enumerate_classes small caps") {
    const auto one = enumerate_classes(7.0, 4);
    REQUIRE(one.size() == 1);
    CHECK(one[0].word == CFWord{1, 1});
    CHECK(enumerate_classes(1.5, 4).empty());
}

TEST_CASE("enumerate_classes equals brute force (norm <= 200, l <= 3)") {
    // N <= 200 forces t <= 14, and every digit is at most the trace
    const long long t_cap = 14;
    std::map<CFWord, long long> brute;
    for (int len : {2, 4, 6}) {
        std::vector<std::int64_t> w(len, 1);
        while (true) {
            long long a = 1, b = 0, c = 0, d = 1;
            for (auto n : w) {
                const long long na = b, nb = a + b * n, nc = d, nd = c + d * n;
                a = na, b = nb, c = nc, d = nd;
            }
            if (a + d <= t_cap) brute[canonical_even_rotation(CFWord(w))] = a + d;
            int pos = len - 1;
            while (pos >= 0 && w[pos] == t_cap) w[pos--] = 1;
            if (pos < 0) break;
            ++w[pos];
        }
    }
    const auto classes = enumerate_classes(200.0, 3);
    REQUIRE(classes.size() == brute.size());
    for (const auto& h : classes) {
        REQUIRE(brute.count(h.word) == 1);
        CHECK(h.matrix_trace == brute[h.word]);
        CHECK(h.norm <= 200.0);
    }
    for (std::size_t i = 1; i < classes.size(); ++i) CHECK(classes[i - 1].norm <= classes[i].norm);
}

TEST_CASE("census csv") {
    const std::string csv = census_csv(enumerate_classes(50.0, 2));
    CHECK(csv.rfind("word,trace,norm,length_l,primitivity_k,geodesic_length\n1-1,3,6.8541019662496", 0) == 0);
    CHECK(csv.find("1-1-1-1,7,") != std::string::npos);
    CHECK(census_csv({}) == "word,trace,norm,length_l,primitivity_k,geodesic_length\n");
}

TEST_CASE("expanding_eigenvalue") {
    CHECK(std::abs(double(expanding_eigenvalue(3.0L, 1)) - 0.5 * (3.0 + std::sqrt(5.0))) < 1e-15);
    CHECK(std::abs(double(expanding_eigenvalue(1.0L, -1)) - 0.5 * (1.0 + std::sqrt(5.0))) < 1e-15);
}
