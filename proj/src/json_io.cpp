#include "mayer/json_io.hpp"

namespace mayer {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const OperatorMatrix& A) {
    Json entries = Json::array();
    for (int m = 0; m < A.order(); ++m)
        for (int k = 0; k < A.order(); ++k) entries.push_back(complex_json(A(m, k)));
    Json j;
    j["s"] = complex_json(A.s());
    j["order"] = A.order();
    j["basis"] = basis_name(A.basis());
    j["disc_radius"] = A.disc().radius();
    j["entries"] = std::move(entries);
    return j;
}

Json to_json(const TraceReport& r) {
    Json j;
    j["s"] = complex_json(r.s);
    j["n"] = r.n;
    j["value"] = complex_json(r.value);
    j["method"] = trace_method_name(r.method);
    j["tail_bound"] = r.tail_bound;
    return j;
}

Json to_json(const DetReport& r) {
    Json j;
    j["s"] = complex_json(r.s);
    j["value"] = complex_json(r.value);
    j["method"] = det_method_name(r.method);
    j["kind"] = det_kind_name(r.kind);
    j["truncation"] = {{"M", r.order}, {"n_max", r.n_max}};
    if (r.method == DetMethod::TraceSeries) {
        j["last_term"] = r.last_term;
        j["tail_bound"] = r.tail_bound;
        j["extrapolated"] = complex_json(r.extrapolated);
    }
    return j;
}

Json to_json(const ZetaValue& z) {
    Json caps = Json::object();
    for (const auto& [k, v] : z.caps) caps[k] = v;
    Json j;
    j["s"] = complex_json(z.s);
    j["value"] = complex_json(z.value);
    j["route"] = zeta_route_name(z.route);
    j["caps"] = std::move(caps);
    j["tail"] = z.tail;
    if (z.route == ZetaRoute::DetRatio) {
        j["pole"] = z.pole;
        j["numerator"] = complex_json(z.numerator);
        j["denominator"] = complex_json(z.denominator);
    }
    return j;
}

Json to_json(const ZeroReport& z) {
    Json j;
    j["start"] = complex_json(z.start);
    j["root"] = complex_json(z.root);
    j["det_abs"] = z.det_abs;
    j["companion_root"] = complex_json(z.companion_root);
    j["displacement"] = z.displacement;
    j["M"] = z.order;
    j["companion_M"] = z.companion_order;
    j["iterations"] = z.iterations;
    return j;
}

}  // namespace mayer
