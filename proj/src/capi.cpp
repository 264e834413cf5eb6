#include "mayer/mayer.h"

#include <cstring>
#include <new>

#include "mayer/dynamics.hpp"
#include "mayer/json_io.hpp"
#include "mayer/specfun.hpp"
#include "mayer/verify.hpp"

struct mayer_matrix {
    mayer::OperatorMatrix A;
};

struct mayer_census {
    std::vector<mayer::HyperbolicClass> classes;
};

namespace {

thread_local std::string g_last_error;

mayer::Complex cx(mayer_complex z) { return {z.re, z.im}; }
mayer_complex cx(mayer::Complex z) { return {z.real(), z.imag()}; }

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void put_json(char** out, const mayer::Json& j) {
    if (out) *out = dup_string(mayer::dump17(j));
}

struct InvalidArgument : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
int guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return MAYER_OK;
    } catch (const mayer::Error& e) {
        g_last_error = e.what();
        return int(e.code());
    } catch (const InvalidArgument& e) {
        g_last_error = e.what();
        return MAYER_E_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return MAYER_E_RESOURCE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MAYER_E_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return MAYER_E_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p) throw InvalidArgument(std::string(what) + " is null");
}

mayer::DetKind det_kind(int k) {
    switch (k) {
        case MAYER_DET_MINUS: return mayer::DetKind::Minus;
        case MAYER_DET_PLUS: return mayer::DetKind::Plus;
        case MAYER_DET_MINUS_SQUARE: return mayer::DetKind::MinusSquare;
    }
    throw InvalidArgument("unknown determinant kind");
}

mayer::MatrixOptions matrix_options(const mayer_matrix_options* o) {
    mayer::MatrixOptions m;
    if (!o) return m;
    m.disc = mayer::DiscDomain(o->disc_radius);
    if (o->sign_fault_row >= 0 && o->sign_fault_col >= 0) m.sign_fault = std::make_pair(o->sign_fault_row, o->sign_fault_col);
    return m;
}

}  // namespace

extern "C" {

const char* mayer_version(void) { return "1.0.0"; }

const char* mayer_status_name(int status) {
    if (status < 0 || status > MAYER_E_INTERNAL) return "Unknown";
    if (status == MAYER_E_INVALID_ARGUMENT) return "InvalidArgument";
    return mayer::error_name(mayer::ErrorCode(status));
}

const char* mayer_last_error(void) { return g_last_error.c_str(); }

void mayer_string_free(char* s) { std::free(s); }

int mayer_set_precision(int mode) {
    return guarded([&] {
        auto& t = mayer::zeta_tuning();
        if (mode == MAYER_PRECISION_STANDARD) t = mayer::ZetaTuning{};
        else if (mode == MAYER_PRECISION_ORACLE) t = mayer::ZetaTuning{200, 12};
        else throw InvalidArgument("unknown precision mode");
    });
}

int mayer_gamma(mayer_complex z, mayer_complex* out) {
    return guarded([&] { need(out, "out"); *out = cx(mayer::gamma(cx(z))); });
}

int mayer_riemann_zeta(mayer_complex s, mayer_complex* out) {
    return guarded([&] { need(out, "out"); *out = cx(mayer::riemann_zeta(cx(s))); });
}

int mayer_hurwitz_zeta(mayer_complex w, mayer_complex q, mayer_complex* out) {
    return guarded([&] { need(out, "out"); *out = cx(mayer::hurwitz_zeta(cx(w), cx(q))); });
}

int mayer_bessel_j(mayer_complex nu, mayer_complex u, mayer_complex* out) {
    return guarded([&] { need(out, "out"); *out = cx(mayer::bessel_j(cx(nu), cx(u))); });
}

void mayer_matrix_options_init(mayer_matrix_options* opt) {
    if (!opt) return;
    opt->disc_radius = mayer::DiscDomain::kDefaultRadius;
    opt->sign_fault_row = -1;
    opt->sign_fault_col = -1;
}

int mayer_matrix_create(mayer_complex s, int order, int basis, const mayer_matrix_options* opt, mayer_matrix** out) {
    return guarded([&] {
        need(out, "out");
        *out = nullptr;
        const auto mo = matrix_options(opt);
        if (basis == MAYER_BASIS_MONOMIAL) *out = new mayer_matrix{mayer::matrix_monomial(cx(s), order, mo)};
        else if (basis == MAYER_BASIS_HURWITZ) *out = new mayer_matrix{mayer::matrix_hurwitz(cx(s), order, mo)};
        else throw InvalidArgument("unknown basis");
    });
}

void mayer_matrix_free(mayer_matrix* A) { delete A; }

int mayer_matrix_order(const mayer_matrix* A) { return A ? A->A.order() : 0; }

int mayer_matrix_entry(const mayer_matrix* A, int m, int k, mayer_complex* out) {
    return guarded([&] {
        need(A, "matrix");
        need(out, "out");
        if (m < 0 || k < 0 || m >= A->A.order() || k >= A->A.order()) throw InvalidArgument("index out of range");
        *out = cx(A->A(m, k));
    });
}

int mayer_matrix_trace_power(const mayer_matrix* A, int n, mayer_complex* out) {
    return guarded([&] {
        need(A, "matrix");
        need(out, "out");
        *out = cx(mayer::trace_matrix(A->A, n).value);
    });
}

int mayer_matrix_det(const mayer_matrix* A, int kind, mayer_complex* out) {
    return guarded([&] {
        need(A, "matrix");
        need(out, "out");
        *out = cx(mayer::det_of(A->A, det_kind(kind)));
    });
}

int mayer_matrix_eigenvalues(const mayer_matrix* A, int k, mayer_complex* out) {
    return guarded([&] {
        need(A, "matrix");
        need(out, "out");
        const auto ev = mayer::spectrum(A->A, k);
        for (std::size_t i = 0; i < ev.size(); ++i) out[i] = cx(ev[i]);
    });
}

int mayer_matrix_json(const mayer_matrix* A, char** json) {
    return guarded([&] {
        need(A, "matrix");
        need(json, "json");
        put_json(json, mayer::to_json(A->A));
    });
}

void mayer_trace_params_init(mayer_trace_params* p) {
    if (!p) return;
    p->n = 1;
    p->n_cap = 0;
    p->order = 64;
    p->max_digit = 200;
}

int mayer_trace(mayer_complex s, int method, const mayer_trace_params* p, mayer_trace_result* out, char** json) {
    return guarded([&] {
        mayer_trace_params d;
        mayer_trace_params_init(&d);
        if (p) d = *p;
        mayer::TraceReport r;
        switch (method) {
            case MAYER_TRACE_CLOSED:
                if (d.n != 1) throw InvalidArgument("closed-form trace is for n = 1");
                r = mayer::trace_closed_form(cx(s), d.n_cap > 0 ? d.n_cap : 1000);
                break;
            case MAYER_TRACE_KERNEL:
                if (d.n != 1) throw InvalidArgument("kernel trace is for n = 1");
                r = mayer::trace_kernel_integral(cx(s), d.n_cap > 0 ? d.n_cap : 20);
                break;
            case MAYER_TRACE_ORBIT: r = mayer::trace_orbit_sum(cx(s), d.n, std::int64_t(d.max_digit)); break;
            case MAYER_TRACE_MATRIX: r = mayer::trace_matrix(cx(s), d.n, d.order); break;
            default: throw InvalidArgument("unknown trace method");
        }
        if (out) *out = {cx(r.value), r.tail_bound};
        put_json(json, mayer::to_json(r));
    });
}

int mayer_det_finite(mayer_complex s, int kind, int order, mayer_complex* out, char** json) {
    return guarded([&] {
        const auto r = mayer::det_finite(cx(s), det_kind(kind), order);
        if (out) *out = cx(r.value);
        put_json(json, mayer::to_json(r));
    });
}

int mayer_det_series(mayer_complex s, int sign, int n_max, long long max_digit, int extrapolate, mayer_complex* out,
                     char** json) {
    return guarded([&] {
        mayer::DetSeriesOptions o;
        o.max_digit = max_digit;
        o.extrapolate = extrapolate != 0;
        const auto r = mayer::fredholm_det_series(cx(s), sign, n_max, o);
        if (out) *out = cx(r.value);
        put_json(json, mayer::to_json(r));
    });
}

int mayer_spectrum(mayer_complex s, int order, int k, mayer_complex* out) {
    return guarded([&] {
        need(out, "out");
        const auto ev = mayer::spectrum(cx(s), order, k);
        for (std::size_t i = 0; i < ev.size(); ++i) out[i] = cx(ev[i]);
    });
}

int mayer_find_zero(mayer_complex start, int kind, int order, int companion_order, double tol, int max_iterations,
                    mayer_zero_result* out, char** json) {
    return guarded([&] {
        mayer::ZeroOptions o;
        o.companion_order = companion_order;
        if (max_iterations > 0) o.max_iterations = max_iterations;
        const auto z = mayer::find_zero(cx(start), det_kind(kind), order, tol, o);
        if (out) *out = {cx(z.root), z.det_abs, cx(z.companion_root), z.displacement, z.iterations};
        put_json(json, mayer::to_json(z));
    });
}

void mayer_zeta_params_init(mayer_zeta_params* p) {
    if (!p) return;
    p->order = 64;
    p->norm_cap = 1e4;
    p->l_max = 4;
    p->max_digit = -1;
    p->n_max = 10;
    p->prune_eps = 1e-12;
}

int mayer_zeta(int route, mayer_complex s, const mayer_zeta_params* p, mayer_zeta_result* out, char** json) {
    return guarded([&] {
        mayer_zeta_params d;
        mayer_zeta_params_init(&d);
        if (p) d = *p;
        const mayer::Complex z = cx(s);
        mayer::OrbitRouteOptions orb;
        orb.max_digit = d.max_digit > 0 ? d.max_digit : 0;
        orb.restrict_digits = d.max_digit > 0;
        orb.prune_eps = d.prune_eps;
        const std::int64_t digits = d.max_digit > 0 ? d.max_digit : 40;
        mayer::ZetaValue v;
        switch (route) {
            case MAYER_ZETA_XI_DET: v = mayer::xi_det_ratio(z, d.order); break;
            case MAYER_ZETA_ETA_DET: v = mayer::eta_det_ratio(z, d.order); break;
            case MAYER_ZETA_SELBERG_DET: v = mayer::selberg_det_identity(z, d.order); break;
            case MAYER_ZETA_SELBERG_EULER: v = mayer::selberg_euler_product(z, d.norm_cap); break;
            case MAYER_ZETA_REDUCED_SUM: v = mayer::lewis_zagier_log_z(z, d.l_max, digits, d.prune_eps); break;
            case MAYER_ZETA_XI_ORBIT: v = mayer::xi_orbit_sum(z, d.n_max, orb); break;
            case MAYER_ZETA_ETA_ORBIT: v = mayer::eta_orbit_sum(z, d.n_max, orb); break;
            case MAYER_ZETA_ETA_EULER: v = mayer::eta_euler_product(z, d.n_max, digits); break;
            default: throw InvalidArgument("unknown zeta route");
        }
        if (out) *out = {cx(v.value), v.tail, v.pole ? 1 : 0};
        put_json(json, mayer::to_json(v));
    });
}

int mayer_census_create(double norm_cap, int length_cap, mayer_census** out) {
    return guarded([&] {
        need(out, "out");
        *out = nullptr;
        if (!(norm_cap > 0.0)) throw mayer::DomainError("census: norm_cap must be positive");
        if (length_cap <= 0) {
            // a word of length 2l has trace at least the Lucas number L_{2l} > φ^{2l}
            const double phi = 0.5 * (1.0 + std::sqrt(5.0));
            const double t_cap = std::sqrt(norm_cap) + 1.0 / std::sqrt(norm_cap);
            length_cap = int(std::ceil(std::log(t_cap + 1.0) / (2.0 * std::log(phi)))) + 1;
        }
        *out = new mayer_census{mayer::enumerate_classes(norm_cap, length_cap)};
    });
}

void mayer_census_free(mayer_census* c) { delete c; }

size_t mayer_census_size(const mayer_census* c) { return c ? c->classes.size() : 0; }

int mayer_census_row(const mayer_census* c, size_t i, mayer_class_row* out) {
    return guarded([&] {
        need(c, "census");
        need(out, "out");
        if (i >= c->classes.size()) throw InvalidArgument("row out of range");
        const auto& h = c->classes[i];
        *out = {h.norm, h.geodesic_length, h.length_l, h.primitivity_k};
    });
}

int mayer_census_csv(const mayer_census* c, char** csv) {
    return guarded([&] {
        need(c, "census");
        need(csv, "csv");
        *csv = dup_string(mayer::census_csv(c->classes));
    });
}

int mayer_verify(int flags, mayer_check_callback cb, void* user, int* failed) {
    return guarded([&] {
        mayer::VerifyOptions o;
        o.fast = flags & MAYER_VERIFY_FAST;
        o.sign_fault = flags & MAYER_VERIFY_SIGN_FAULT;
        int bad = 0;
        auto forward = [&](const mayer::CheckResult& r) {
            bad += !r.passed;
            if (!cb) return;
            const std::string line = mayer::format_check(r);
            const mayer_check c{r.id.c_str(), r.name.c_str(), r.passed ? 1 : 0, r.measured, r.tolerance,
                                r.seconds,    r.detail.c_str(), line.c_str()};
            cb(&c, user);
        };
        if (flags & MAYER_VERIFY_ACCEPTANCE_ONLY) mayer::run_acceptance(o, forward);
        else mayer::run_all(o, forward);
        if (failed) *failed = bad;
    });
}

}  // extern "C"
