#include "doctest.h"
#include "test_support.hpp"

using namespace qhtest;

namespace {

ErrorCode parse_error(const std::string& text) {
    try {
        parse_curve_file(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("curve files") {
    const CurveFile cusp = parse_curve_file(R"({"variables":["x","y"],"branches":[{"x":{"2":"1"},"y":{"3":"1"}}]})");
    CHECK(cusp.spec.branches() == 1);
    CHECK(cusp.spec.coordinates() == 2);
    CHECK(cusp.spec.param[0][1] == RationalFunction::monomial(3));

    const CurveSpec app = load("appendix");
    const CurveSpec builtin = appendix_curve();
    CHECK(app.param == builtin.param);
    CHECK(app.equations == builtin.equations);

    const CurveSpec node = load("node");
    CHECK(node.branches() == 2);
    CHECK(node.param[0][1].is_zero());
    CHECK(node.param[1][0].is_zero());

    const CurveFile opts = parse_curve_file(
        R"({"variables":["x"],"branches":[{"x":{"1":"1"}}],"options":{"order":24,"max_order":96}})");
    CHECK(opts.options.initial_order == 24);
    CHECK(opts.options.max_order == 96);
}

TEST_CASE("schema errors") {
    CHECK(parse_error("{") == ErrorCode::SchemaError);
    CHECK(parse_error(R"({"branches":[]})") == ErrorCode::SchemaError);
    CHECK(parse_error(R"({"variables":["x"],"branches":[{"x":{"1":1.5}}]})") == ErrorCode::SchemaError);
    CHECK(parse_error(R"({"variables":["x"],"branches":[{"x":{"a":"1"}}]})") == ErrorCode::SchemaError);
    CHECK(parse_error(R"({"variables":["x"],"branches":[{"y":{"1":"1"}}]})") == ErrorCode::SchemaError);
    CHECK(parse_error(R"({"variables":["x"],"branches":[{"x":{"1":"1"}}],"extra":1})") == ErrorCode::SchemaError);
    CHECK(parse_error(R"({"variables":["x","y"],"branches":[{"x":{"1":"1"},"y":{"2":"1"}}],"equations":["x^"]})") ==
          ErrorCode::SchemaError);
    CHECK(parse_error(R"({"variables":["x"],"branches":[{"x":{"num":["0","1"],"den":["0","1"]}}]})") ==
          ErrorCode::NonUnitDenominator);
    try {
        parse_curve_file(R"({"variables":["x"],"branches":[{"x":{"1":"1/0"}}]})");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("branches") != std::string::npos);
    }
}

TEST_CASE("JSON encodings") {
    CHECK(int_vectors_to_json({}).dump() == "[]");
    const auto cusp = semigroup_of_curve(build_algebra(load("cusp")));
    CHECK(int_vectors_to_json(cusp.members()).dump() == "[[0],[2]]");
    const auto node = semigroup_of_curve(build_algebra(load("node")));
    CHECK(int_vectors_to_json(node.members()).dump() == "[[0,0],[1,1]]");

    const MultiSeries x({TruncatedSeries::exact(-1, {Rational(1, 2), 0, 3}), TruncatedSeries::exact_zero()});
    CHECK(series_from_json(series_to_json(x)) == x);
}

TEST_CASE("report round trips") {
    for (const auto& name : {"cusp", "node", "appendix", "space345"}) {
        const InvariantReport rep = qh_report(build_algebra(load(name)));
        const Json j = to_json(rep);
        CHECK(to_json(invariant_report_from_json(j)) == j);
        const ReportDocument doc = run_command("analyze", load(name), {});
        CHECK(report_from_json(to_json(doc)) == doc);
        CHECK(report_from_json(Json::parse(emit_report(doc, Format::Json))) == doc);
    }
}

TEST_CASE("commands") {
    const ReportDocument a = run_command("analyze", load("cusp"), {});
    const Json& rep = a.data.at("report");
    CHECK(rep.at("delta") == Json::array({2}));
    CHECK(rep.at("gorenstein") == true);
    CHECK(rep.at("quasihomogeneous") == true);
    CHECK(rep.at("rho") == 1);
    CHECK(rep.at("rho_prime") == 1);

    const ReportDocument s = run_command("semigroup", load("space345"), {});
    CHECK(s.data.at("box").dump() == "[[0],[3]]");
    CHECK(s.data.at("symmetric") == false);

    const ReportDocument v = run_command("verify-appendix", CurveSpec{}, {});
    CHECK(v.data.at("all_pass") == true);
    CHECK(v.curve == "appendix");

    CHECK(is_known_command("normalize-step"));
    CHECK_FALSE(is_known_command("frobnicate"));
}

TEST_CASE("output is deterministic") {
    const RunOptions opts;
    for (const auto& cmd : {"analyze", "ideals", "normalize-step"}) {
        const std::string first = emit_report(run_command(cmd, load("tacnode"), opts), Format::Json);
        const std::string second = emit_report(run_command(cmd, load("tacnode"), opts), Format::Json);
        CHECK(first == second);
        CHECK(first.back() == '\n');
    }
    const std::string text = emit_report(run_command("semigroup", load("cusp"), opts), Format::Text);
    CHECK(text.find("symmetric") != std::string::npos);
}

TEST_CASE("certification repeats the computation at doubled order") {
    RunOptions opts;
    opts.certify = true;
    const ReportDocument doc = run_command("semigroup", load("e34"), opts);
    CHECK(doc.data.at("certified_at_doubled_order") == true);
}
