#include "doctest.h"
#include "mayer/json_io.hpp"

using namespace mayer;

TEST_CASE("floats are written with 17 significant digits, non-finite as null") {
    CHECK(dump17(Json(0.1)) == "0.10000000000000001");
    CHECK(dump17(Json::array({1.0 / 3.0, 2})) == "[0.33333333333333331,2]");
    CHECK(dump17(Json(std::numeric_limits<double>::infinity())) == "null");
    CHECK(dump17(Json{{"a", 1.5}}) == "{\"a\":1.5}");
    CHECK(dump17(Json{{"a", Json::array({1})}}, 2) == "{\n  \"a\": [\n    1\n  ]\n}");
}

TEST_CASE("output round-trips to the same doubles") {
    const double v = 0.95379959778721102;
    CHECK(Json::parse(dump17(Json(v))).get<double>() == v);
}

TEST_CASE("OperatorMatrix schema") {
    const Json j = Json::parse(dump17(to_json(matrix_monomial(Complex(1.0, 0.5), 3))));
    CHECK(j["s"] == Json::array({1.0, 0.5}));
    CHECK(j["order"] == 3);
    CHECK(j["basis"] == "MonomialAtOne");
    REQUIRE(j["entries"].size() == 9);
    CHECK(j["entries"][0].size() == 2);
}

TEST_CASE("TraceReport and DetReport schemas") {
    const Json t = to_json(trace_closed_form(2.0, 100));
    for (const char* key : {"s", "n", "value", "method", "tail_bound"}) CHECK(t.contains(key));
    CHECK(t["method"] == "ClosedForm");
    const Json d = to_json(det_finite(2.0, DetKind::MinusSquare, 8));
    CHECK(d["truncation"]["M"] == 8);
    CHECK(d["kind"] == "MinusSquare");
    CHECK(d["method"] == "FiniteDet");
}

TEST_CASE("ZetaValue schema and pole output") {
    const Json z = to_json(selberg_euler_product(2.0, 100.0));
    for (const char* key : {"s", "value", "route", "caps", "tail"}) CHECK(z.contains(key));
    CHECK(z["route"] == "EulerProduct");
    CHECK(z["caps"]["norm_cap"] == 100.0);
    const Json p = Json::parse(dump17(to_json(xi_det_ratio(1.0, 64))));
    CHECK(p["pole"] == true);
    CHECK(p["value"][0].is_null());
}
