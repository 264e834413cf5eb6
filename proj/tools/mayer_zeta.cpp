// mayer-zeta: batch front end over the C API.
#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "mayer/json_emit.hpp"
#include "mayer/mayer.h"

namespace {

using Json = mayer::Json;
using cd = std::complex<double>;

enum Exit { kOk = 0, kVerifyFailed = 1, kConfig = 2, kNumeric = 3 };

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// status from the library; domain and argument errors count as configuration errors
struct NumericError : std::runtime_error {
    int status;
    NumericError(int st, const std::string& what) : std::runtime_error(what), status(st) {}
};

void check(int status, const char* what) {
    if (status == MAYER_OK) return;
    throw NumericError(status, std::string(what) + ": " + mayer_status_name(status) + ": " + mayer_last_error());
}

int exit_for(int status) {
    return (status == MAYER_E_DOMAIN || status == MAYER_E_INVALID_ARGUMENT) ? kConfig : kNumeric;
}

// "2", "0.5+9.5i", "-3i", "1-2.5e-3i", "i"
cd parse_complex(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    static const std::string num = R"(([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?|[0-9]+\.))";
    static const std::regex real_only("^([+-]?)" + num + "$");
    static const std::regex imag_only("^([+-]?)" + num + "?[ij]$");
    static const std::regex both("^([+-]?)" + num + "([+-])" + num + "?[ij]$");
    std::smatch m;
    auto val = [](const std::string& sign, const std::string& digits) {
        const double v = digits.empty() ? 1.0 : std::stod(digits);
        return sign == "-" ? -v : v;
    };
    if (std::regex_match(t, m, real_only)) return {val(m[1], m[2]), 0.0};
    if (std::regex_match(t, m, imag_only)) return {0.0, val(m[1], m[2])};
    if (std::regex_match(t, m, both)) return {val(m[1], m[2]), val(m[3], m[4])};
    throw ConfigError("cannot parse complex number '" + text + "'");
}

mayer_complex mc(cd z) { return {z.real(), z.imag()}; }
cd cdv(mayer_complex z) { return {z.re, z.im}; }

std::string g17(double v) {
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json jc(cd z) { return Json::array({z.real(), z.imag()}); }

struct GridSpec {
    std::string s, from, to;
    int count = 1;

    std::vector<cd> points() const {
        if (!s.empty()) {
            if (!from.empty() || !to.empty()) throw ConfigError("--s excludes --from/--to");
            return {parse_complex(s)};
        }
        if (from.empty()) throw ConfigError("need --s or --from/--to");
        if (count < 1) throw ConfigError("grid count must be >= 1");
        const cd a = parse_complex(from), b = to.empty() ? a : parse_complex(to);
        std::vector<cd> out;
        for (int i = 0; i < count; ++i) out.push_back(count == 1 ? a : a + (b - a) * (double(i) / double(count - 1)));
        return out;
    }
};

void require_half_plane(const std::vector<cd>& pts, bool allow_line) {
    for (cd s : pts) {
        const bool ok = allow_line ? s.real() >= 0.5 - 1e-6 : s.real() > 0.5;
        if (!ok) throw ConfigError("precondition Re(s) > 1/2 violated at s = " + g17(s.real()) + (s.imag() < 0 ? "" : "+") +
                                   g17(s.imag()) + "i");
    }
}

unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("MAYER_ZETA_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) n = std::min<unsigned>(n, unsigned(v));
    }
    return n;
}

// runs job(i) for i < n across workers; results are stored by index so output order is fixed
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, F job) {
    std::vector<R> out(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) out[i] = job(i);
    };
    const unsigned k = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < k; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

struct Output {
    std::string path;
    std::string format = "csv";

    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text;
            std::cout.flush();
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ConfigError("cannot open output file " + path);
        f << text;
    }
};

// ---- trace ----------------------------------------------------------------------

struct TraceConfig {
    GridSpec grid;
    std::string methods = "closed,matrix,kernel";
    int n = 1, M = 64, n_cap = 0;
    long long max_digit = 200;
};

struct TraceRow {
    cd s;
    std::string method;
    cd value;
    double tail = 0.0;
    int status = MAYER_OK;
    std::string error;
};

int method_id(const std::string& m) {
    if (m == "closed") return MAYER_TRACE_CLOSED;
    if (m == "orbit") return MAYER_TRACE_ORBIT;
    if (m == "kernel") return MAYER_TRACE_KERNEL;
    if (m == "matrix") return MAYER_TRACE_MATRIX;
    throw ConfigError("unknown trace method '" + m + "' (closed, orbit, kernel, matrix)");
}

int cmd_trace(const TraceConfig& c, const Output& out) {
    std::vector<std::string> methods;
    std::stringstream ss(c.methods);
    for (std::string m; std::getline(ss, m, ',');)
        if (!m.empty()) methods.push_back(m);
    if (methods.empty()) throw ConfigError("no trace methods given");
    for (const auto& m : methods) method_id(m);
    if (c.n < 1) throw ConfigError("--n must be >= 1");
    if (c.M < 2) throw ConfigError("--M must be >= 2");
    if (c.max_digit < 1) throw ConfigError("--max-digit must be positive");
    const auto pts = c.grid.points();
    require_half_plane(pts, false);

    const std::size_t per = methods.size();
    auto rows = parallel_map<TraceRow>(pts.size() * per, [&](std::size_t i) {
        TraceRow r;
        r.s = pts[i / per];
        r.method = methods[i % per];
        mayer_trace_params p;
        mayer_trace_params_init(&p);
        p.n = c.n;
        p.order = c.M;
        p.n_cap = c.n_cap;
        p.max_digit = c.max_digit;
        mayer_trace_result res{};
        r.status = mayer_trace(mc(r.s), method_id(r.method), &p, &res, nullptr);
        if (r.status != MAYER_OK) r.error = mayer_last_error();
        r.value = cdv(res.value);
        r.tail = res.tail_bound;
        return r;
    });
    for (const auto& r : rows)
        if (r.status != MAYER_OK)
            throw NumericError(r.status, "trace " + r.method + ": " + mayer_status_name(r.status) + ": " + r.error);

    struct Delta {
        cd s;
        std::string a, b;
        double delta;
    };
    std::vector<Delta> deltas;
    for (std::size_t p = 0; p < pts.size(); ++p)
        for (std::size_t i = 0; i < per; ++i)
            for (std::size_t j = i + 1; j < per; ++j) {
                const auto& x = rows[p * per + i];
                const auto& y = rows[p * per + j];
                deltas.push_back({pts[p], x.method, y.method, std::abs(x.value - y.value)});
            }

    std::string text;
    if (out.format == "json") {
        Json j;
        j["command"] = "trace";
        j["n"] = c.n;
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back(Json{{"s", jc(r.s)}, {"n", c.n}, {"value", jc(r.value)}, {"method", r.method}, {"tail_bound", r.tail}});
        j["rows"] = arr;
        Json d = Json::array();
        for (const auto& x : deltas) d.push_back(Json{{"s", jc(x.s)}, {"a", x.a}, {"b", x.b}, {"delta", x.delta}});
        j["deltas"] = d;
        text = mayer::dump17(j, 2) + "\n";
    } else {
        text = "kind,s_re,s_im,n,method,value_re,value_im,tail_bound\n";
        for (const auto& r : rows)
            text += "trace," + g17(r.s.real()) + "," + g17(r.s.imag()) + "," + std::to_string(c.n) + "," + r.method + "," +
                    g17(r.value.real()) + "," + g17(r.value.imag()) + "," + g17(r.tail) + "\n";
        for (const auto& x : deltas)
            text += "delta," + g17(x.s.real()) + "," + g17(x.s.imag()) + "," + std::to_string(c.n) + "," + x.a + "-" + x.b + "," +
                    g17(x.delta) + ",0,0\n";
    }
    out.write(text);
    return kOk;
}

// ---- det-grid -------------------------------------------------------------------

struct DetConfig {
    GridSpec grid;
    int M = 64;
};

struct DetRow {
    cd s, z, minus, plus;
    double delta = 0.0;
    int status = MAYER_OK;
    std::string error;
};

int cmd_det_grid(const DetConfig& c, const Output& out) {
    if (c.M < 4) throw ConfigError("--M must be >= 4 (the comparison order is M/2)");
    const auto pts = c.grid.points();
    require_half_plane(pts, true);
    auto rows = parallel_map<DetRow>(pts.size(), [&](std::size_t i) {
        DetRow r;
        r.s = pts[i];
        mayer_complex z{}, mi{}, pl{}, half{};
        int st = mayer_det_finite(mc(r.s), MAYER_DET_MINUS_SQUARE, c.M, &z, nullptr);
        if (st == MAYER_OK) st = mayer_det_finite(mc(r.s), MAYER_DET_MINUS, c.M, &mi, nullptr);
        if (st == MAYER_OK) st = mayer_det_finite(mc(r.s), MAYER_DET_PLUS, c.M, &pl, nullptr);
        if (st == MAYER_OK) st = mayer_det_finite(mc(r.s), MAYER_DET_MINUS_SQUARE, c.M / 2, &half, nullptr);
        r.status = st;
        if (st != MAYER_OK) r.error = mayer_last_error();
        r.z = cdv(z);
        r.minus = cdv(mi);
        r.plus = cdv(pl);
        r.delta = std::abs(cdv(z) - cdv(half));
        return r;
    });
    for (const auto& r : rows)
        if (r.status != MAYER_OK) throw NumericError(r.status, std::string("det-grid: ") + mayer_status_name(r.status) + ": " + r.error);

    std::string text;
    if (out.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back(Json{{"s", jc(r.s)},
                               {"Z", jc(r.z)},
                               {"det_minus", jc(r.minus)},
                               {"det_plus", jc(r.plus)},
                               {"M", c.M},
                               {"delta_half", r.delta}});
        text = mayer::dump17(Json{{"command", "det-grid"}, {"rows", arr}}, 2) + "\n";
    } else {
        text = "s_re,s_im,Z_re,Z_im,det_minus_re,det_minus_im,det_plus_re,det_plus_im,M,delta_half\n";
        for (const auto& r : rows)
            text += g17(r.s.real()) + "," + g17(r.s.imag()) + "," + g17(r.z.real()) + "," + g17(r.z.imag()) + "," +
                    g17(r.minus.real()) + "," + g17(r.minus.imag()) + "," + g17(r.plus.real()) + "," + g17(r.plus.imag()) + "," +
                    std::to_string(c.M) + "," + g17(r.delta) + "\n";
    }
    out.write(text);
    return kOk;
}

// ---- find-zeros -----------------------------------------------------------------

struct ZeroConfig {
    std::vector<std::string> starts;
    GridSpec grid;
    int M = 64, companion = 0, max_iter = 100;
    double tol = 1e-12;
    std::string kind = "minus-square";
};

struct ZeroRow {
    cd start;
    mayer_zero_result z{};
    std::string status = "OK";
    std::string error;
};

int cmd_find_zeros(const ZeroConfig& c, const Output& out) {
    int kind = 0;
    if (c.kind == "minus") kind = MAYER_DET_MINUS;
    else if (c.kind == "plus") kind = MAYER_DET_PLUS;
    else if (c.kind == "minus-square") kind = MAYER_DET_MINUS_SQUARE;
    else throw ConfigError("unknown --kind '" + c.kind + "' (minus, plus, minus-square)");
    if (c.M < 4) throw ConfigError("--M must be >= 4");
    if (c.max_iter < 1) throw ConfigError("--max-iter must be >= 1");
    std::vector<cd> pts;
    for (const auto& s : c.starts) pts.push_back(parse_complex(s));
    if (!c.grid.from.empty() || !c.grid.s.empty()) {
        const auto g = c.grid.points();
        pts.insert(pts.end(), g.begin(), g.end());
    }
    if (pts.empty()) throw ConfigError("need at least one --start");
    require_half_plane(pts, true);

    auto rows = parallel_map<ZeroRow>(pts.size(), [&](std::size_t i) {
        ZeroRow r;
        r.start = pts[i];
        const int st = mayer_find_zero(mc(r.start), kind, c.M, c.companion, c.tol, c.max_iter, &r.z, nullptr);
        // starts were validated above, so any failure here belongs to the iteration itself
        if (st != MAYER_OK) {
            r.status = "NONCONV";
            r.error = std::string(mayer_status_name(st)) + ": " + mayer_last_error();
        }
        return r;
    });

    const double nan = std::nan("");
    std::string text;
    if (out.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) {
            const bool ok = r.status == "OK";
            arr.push_back(Json{{"start", jc(r.start)},
                               {"status", r.status},
                               {"root", ok ? jc(cdv(r.z.root)) : Json(nullptr)},
                               {"det_abs", ok ? r.z.det_abs : nan},
                               {"companion_root", ok ? jc(cdv(r.z.companion_root)) : Json(nullptr)},
                               {"displacement", ok ? r.z.displacement : nan},
                               {"iterations", r.z.iterations}});
        }
        text = mayer::dump17(Json{{"command", "find-zeros"}, {"kind", c.kind}, {"M", c.M}, {"rows", arr}}, 2) + "\n";
    } else {
        text = "start_re,start_im,root_re,root_im,det_abs,displacement,status\n";
        for (const auto& r : rows) {
            const bool ok = r.status == "OK";
            text += g17(r.start.real()) + "," + g17(r.start.imag()) + "," + (ok ? g17(r.z.root.re) : "nan") + "," +
                    (ok ? g17(r.z.root.im) : "nan") + "," + (ok ? g17(r.z.det_abs) : "nan") + "," +
                    (ok ? g17(r.z.displacement) : "nan") + "," + r.status + "\n";
        }
    }
    for (const auto& r : rows)
        if (r.status != "OK") std::cerr << "NONCONV start " << g17(r.start.real()) << "," << g17(r.start.imag()) << ": " << r.error << "\n";
    out.write(text);
    return kOk;
}

// ---- census ---------------------------------------------------------------------

struct CensusConfig {
    double norm_cap = 100.0;
    int length_cap = 0;
};

int cmd_census(const CensusConfig& c, const Output& out) {
    if (!(c.norm_cap > 0.0)) throw ConfigError("--norm-cap must be positive");
    mayer_census* cen = nullptr;
    check(mayer_census_create(c.norm_cap, c.length_cap, &cen), "census");
    char* csv = nullptr;
    const int st = mayer_census_csv(cen, &csv);
    mayer_census_free(cen);
    check(st, "census");
    std::string text(csv);
    mayer_string_free(csv);
    out.write(text);
    return kOk;
}

// ---- verify ---------------------------------------------------------------------

struct VerifyConfig {
    bool fast = false, sign_fault = false, acceptance_only = false;
};

void print_check(const mayer_check* c, void*) {
    std::cout << c->line << "\n";
    std::cout.flush();
}

int cmd_verify(const VerifyConfig& c) {
    int flags = 0;
    if (c.fast) flags |= MAYER_VERIFY_FAST;
    if (c.sign_fault) flags |= MAYER_VERIFY_SIGN_FAULT;
    if (c.acceptance_only) flags |= MAYER_VERIFY_ACCEPTANCE_ONLY;
    int failed = 0;
    check(mayer_verify(flags, print_check, nullptr, &failed), "verify");
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << failed << " failing\n";
    return failed ? kVerifyFailed : kOk;
}

void add_grid(CLI::App* cmd, GridSpec& g) {
    cmd->add_option("--s", g.s, "single point, e.g. 2 or 0.5+9.5i");
    cmd->add_option("--from", g.from, "grid start");
    cmd->add_option("--to", g.to, "grid end");
    cmd->add_option("--count", g.count, "grid points along the segment");
}

void add_output(CLI::App* cmd, Output& o) {
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("-o,--output", o.path, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transfer operator, Fredholm determinants and the Selberg zeta function of the modular group"};
    app.require_subcommand(1);
    std::string precision = "standard";
    app.add_option("--precision", precision, "standard or oracle")->check(CLI::IsMember({"standard", "oracle"}));

    TraceConfig tc;
    Output to;
    auto* trace = app.add_subcommand("trace", "traces of L_s by several methods, with pairwise deltas");
    add_grid(trace, tc.grid);
    trace->add_option("--methods,--method", tc.methods, "comma list of closed, matrix, kernel, orbit");
    trace->add_option("--n", tc.n, "power n of tr L_s^n");
    trace->add_option("--M", tc.M, "matrix order");
    trace->add_option("--n-cap", tc.n_cap, "closed/kernel summation cap (0: default)");
    trace->add_option("--max-digit", tc.max_digit, "orbit digit box");
    add_output(trace, to);

    DetConfig dc;
    Output dout;
    auto* det = app.add_subcommand("det-grid", "Z(s) = det(1 - L_s^2) and its factors along a segment");
    add_grid(det, dc.grid);
    det->add_option("--M", dc.M, "matrix order");
    add_output(det, dout);

    ZeroConfig zc;
    Output zout;
    auto* zeros = app.add_subcommand("find-zeros", "secant search for determinant zeros");
    zeros->add_option("--start", zc.starts, "start point (repeatable)");
    add_grid(zeros, zc.grid);
    zeros->add_option("--M", zc.M, "matrix order");
    zeros->add_option("--companion", zc.companion, "comparison order (0: M/2)");
    zeros->add_option("--tol", zc.tol, "step tolerance");
    zeros->add_option("--max-iter", zc.max_iter, "iteration cap");
    zeros->add_option("--kind", zc.kind, "minus, plus or minus-square");
    add_output(zeros, zout);

    CensusConfig cc;
    Output cout_;
    auto* census = app.add_subcommand("census", "hyperbolic conjugacy classes up to a norm cap, as CSV");
    census->add_option("--norm-cap", cc.norm_cap, "largest norm N");
    census->add_option("--length-cap", cc.length_cap, "largest half word length l (0: from the norm cap)");
    census->add_option("-o,--output", cout_.path, "output file (default stdout)");

    VerifyConfig vc;
    auto* verify = app.add_subcommand("verify", "run the acceptance and invariant suite");
    verify->add_flag("--fast", vc.fast, "halved caps, tolerances relaxed tenfold");
    verify->add_flag("--inject-sign-fault", vc.sign_fault, "flip the sign of a_11 in every matrix");
    verify->add_flag("--acceptance-only", vc.acceptance_only, "skip the module invariants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfig;
    }

    try {
        check(mayer_set_precision(precision == "oracle" ? MAYER_PRECISION_ORACLE : MAYER_PRECISION_STANDARD), "precision");
        if (*trace) return cmd_trace(tc, to);
        if (*det) return cmd_det_grid(dc, dout);
        if (*zeros) return cmd_find_zeros(zc, zout);
        if (*census) return cmd_census(cc, cout_);
        if (*verify) return cmd_verify(vc);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfig;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_for(e.status);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumeric;
    }
    return kConfig;
}
