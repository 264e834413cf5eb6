#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "mayer/mayer.h"

namespace {
mayer_complex c(double re, double im = 0.0) { return {re, im}; }
}  // namespace

TEST_CASE("special functions and status reporting") {
    mayer_complex out{};
    REQUIRE(mayer_riemann_zeta(c(2.0), &out) == MAYER_OK);
    CHECK(std::abs(out.re - M_PI * M_PI / 6.0) < 1e-15);
    CHECK(mayer_riemann_zeta(c(1.0), &out) == MAYER_E_POLE);
    CHECK(std::string(mayer_status_name(MAYER_E_POLE)) == "PoleError");
    CHECK(std::strstr(mayer_last_error(), "pole") != nullptr);
    CHECK(mayer_hurwitz_zeta(c(2.0), c(-1.0), &out) == MAYER_E_DOMAIN);
    CHECK(mayer_gamma(c(5.0), &out) == MAYER_OK);
    CHECK(std::abs(out.re - 24.0) < 1e-12);
    CHECK(mayer_bessel_j(c(0.0), c(0.0), &out) == MAYER_OK);
    CHECK(out.re == 1.0);
    CHECK(mayer_gamma(c(1.0), nullptr) == MAYER_E_INVALID_ARGUMENT);
}

TEST_CASE("matrix handle") {
    mayer_matrix* A = nullptr;
    REQUIRE(mayer_matrix_create(c(1.0), 32, MAYER_BASIS_MONOMIAL, nullptr, &A) == MAYER_OK);
    CHECK(mayer_matrix_order(A) == 32);
    mayer_complex a00{}, tr{}, det{};
    CHECK(mayer_matrix_entry(A, 0, 0, &a00) == MAYER_OK);
    CHECK(std::abs(a00.re - (M_PI * M_PI / 6.0 - 1.0)) < 1e-14);
    CHECK(mayer_matrix_entry(A, 32, 0, &a00) == MAYER_E_INVALID_ARGUMENT);
    CHECK(mayer_matrix_trace_power(A, 1, &tr) == MAYER_OK);
    CHECK(std::abs(tr.re - 0.77112552365565890932) < 1e-10);
    CHECK(mayer_matrix_det(A, MAYER_DET_MINUS, &det) == MAYER_OK);
    CHECK(std::hypot(det.re, det.im) < 1e-10);
    std::vector<mayer_complex> ev(3);
    CHECK(mayer_matrix_eigenvalues(A, 3, ev.data()) == MAYER_OK);
    CHECK(std::abs(ev[0].re - 1.0) < 1e-10);
    char* json = nullptr;
    CHECK(mayer_matrix_json(A, &json) == MAYER_OK);
    CHECK(std::string(json).rfind("{\"s\":[1,0],\"order\":32,\"basis\":\"MonomialAtOne\"", 0) == 0);
    mayer_string_free(json);
    mayer_matrix_free(A);

    mayer_matrix_options o;
    mayer_matrix_options_init(&o);
    o.disc_radius = 1.7;
    CHECK(mayer_matrix_create(c(1.0), 8, MAYER_BASIS_MONOMIAL, &o, &A) == MAYER_E_DOMAIN);
    CHECK(mayer_matrix_create(c(0.3), 8, MAYER_BASIS_MONOMIAL, nullptr, &A) == MAYER_E_DOMAIN);
    CHECK(A == nullptr);
    CHECK(mayer_matrix_create(c(1.0), 8, 7, nullptr, &A) == MAYER_E_INVALID_ARGUMENT);
}

TEST_CASE("traces through the C API") {
    mayer_trace_params p;
    mayer_trace_params_init(&p);
    mayer_trace_result closed{}, kernel{}, matrix{};
    char* json = nullptr;
    REQUIRE(mayer_trace(c(2.0), MAYER_TRACE_CLOSED, &p, &closed, &json) == MAYER_OK);
    CHECK(std::string(json).find("\"method\":\"ClosedForm\"") != std::string::npos);
    mayer_string_free(json);
    REQUIRE(mayer_trace(c(2.0), MAYER_TRACE_KERNEL, &p, &kernel, nullptr) == MAYER_OK);
    REQUIRE(mayer_trace(c(2.0), MAYER_TRACE_MATRIX, &p, &matrix, nullptr) == MAYER_OK);
    CHECK(std::abs(closed.value.re - kernel.value.re) < 1e-9);
    CHECK(std::abs(closed.value.re - matrix.value.re) < 1e-9);
    p.n = 2;
    mayer_trace_result orbit{};
    REQUIRE(mayer_trace(c(1.0), MAYER_TRACE_ORBIT, &p, &orbit, nullptr) == MAYER_OK);
    CHECK(std::abs(orbit.value.re - 1.10383965361761325) < 1e-12);
    CHECK(mayer_trace(c(1.0), MAYER_TRACE_CLOSED, &p, &orbit, nullptr) == MAYER_E_INVALID_ARGUMENT);
    CHECK(mayer_trace(c(0.4), MAYER_TRACE_MATRIX, nullptr, &orbit, nullptr) == MAYER_E_DOMAIN);
}

TEST_CASE("determinants, zeros and zeta routes") {
    mayer_complex z{}, fin{};
    REQUIRE(mayer_det_finite(c(2.0), MAYER_DET_MINUS_SQUARE, 64, &z, nullptr) == MAYER_OK);
    CHECK(std::abs(z.re - 0.95379959778721) < 1e-12);
    REQUIRE(mayer_det_series(c(2.0), 1, 8, 0, 1, &z, nullptr) == MAYER_OK);
    REQUIRE(mayer_det_finite(c(2.0), MAYER_DET_MINUS, 64, &fin, nullptr) == MAYER_OK);
    CHECK(std::abs(z.re - fin.re) < 1e-9);

    mayer_zero_result r{};
    REQUIRE(mayer_find_zero(c(1.05), MAYER_DET_MINUS, 64, 0, 1e-13, 0, &r, nullptr) == MAYER_OK);
    CHECK(std::abs(r.root.re - 1.0) < 1e-8);
    CHECK(mayer_find_zero(c(0.5, 9.5), MAYER_DET_MINUS_SQUARE, 32, 0, 1e-12, 2, &r, nullptr) == MAYER_E_NONCONVERGENCE);

    mayer_zeta_params zp;
    mayer_zeta_params_init(&zp);
    mayer_zeta_result det{}, euler{}, reduced{}, xi{};
    REQUIRE(mayer_zeta(MAYER_ZETA_SELBERG_DET, c(2.0), &zp, &det, nullptr) == MAYER_OK);
    REQUIRE(mayer_zeta(MAYER_ZETA_SELBERG_EULER, c(2.0), &zp, &euler, nullptr) == MAYER_OK);
    REQUIRE(mayer_zeta(MAYER_ZETA_REDUCED_SUM, c(2.0), &zp, &reduced, nullptr) == MAYER_OK);
    CHECK(std::abs(det.value.re - euler.value.re) < 1e-4);
    CHECK(std::abs(det.value.re - reduced.value.re) < 1e-5);
    char* json = nullptr;
    REQUIRE(mayer_zeta(MAYER_ZETA_XI_DET, c(1.0), &zp, &xi, &json) == MAYER_OK);
    CHECK(xi.pole == 1);
    CHECK(std::string(json).find("\"pole\":true") != std::string::npos);
    mayer_string_free(json);
    CHECK(mayer_zeta(99, c(2.0), &zp, &xi, nullptr) == MAYER_E_INVALID_ARGUMENT);
}

TEST_CASE("census handle") {
    mayer_census* cen = nullptr;
    REQUIRE(mayer_census_create(100.0, 0, &cen) == MAYER_OK);
    REQUIRE(mayer_census_size(cen) > 0);
    mayer_class_row row{};
    CHECK(mayer_census_row(cen, 0, &row) == MAYER_OK);
    CHECK(std::abs(row.norm - 6.854101966249685) < 1e-13);
    CHECK(row.primitivity_k == 1);
    CHECK(mayer_census_row(cen, 100000, &row) == MAYER_E_INVALID_ARGUMENT);
    char* csv = nullptr;
    CHECK(mayer_census_csv(cen, &csv) == MAYER_OK);
    CHECK(std::string(csv).rfind("word,trace,norm,length_l,primitivity_k,geodesic_length\n1-1,3,", 0) == 0);
    mayer_string_free(csv);
    mayer_census_free(cen);
}

TEST_CASE("precision mode") {
    mayer_complex a{}, b{};
    REQUIRE(mayer_hurwitz_zeta(c(3.0, 7.0), c(0.4), &a) == MAYER_OK);
    REQUIRE(mayer_set_precision(MAYER_PRECISION_ORACLE) == MAYER_OK);
    REQUIRE(mayer_hurwitz_zeta(c(3.0, 7.0), c(0.4), &b) == MAYER_OK);
    REQUIRE(mayer_set_precision(MAYER_PRECISION_STANDARD) == MAYER_OK);
    CHECK(std::hypot(a.re - b.re, a.im - b.im) < 1e-13);
    CHECK(mayer_set_precision(5) == MAYER_E_INVALID_ARGUMENT);
}

namespace {
struct Tally {
    int seen = 0, passed = 0;
    std::vector<std::string> ids;
};
void count(const mayer_check* ch, void* user) {
    auto* t = static_cast<Tally*>(user);
    ++t->seen;
    t->passed += ch->passed;
    t->ids.emplace_back(ch->id);
}
}  // namespace

TEST_CASE("verify callback, acceptance subset, sign fault") {
    Tally t;
    int failed = -1;
    REQUIRE(mayer_verify(MAYER_VERIFY_FAST | MAYER_VERIFY_ACCEPTANCE_ONLY | MAYER_VERIFY_SIGN_FAULT, count, &t, &failed) ==
            MAYER_OK);
    CHECK(t.seen == 10);
    CHECK(t.ids.front() == "C1");
    CHECK(failed > 0);
    CHECK(failed == t.seen - t.passed);
}
