#include "qhcurve/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace qhcurve {

namespace {

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
    throw Error(ErrorCode::SchemaError, field + ": " + what);
}

Rational parse_rational(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) schema_error(field, "expected a rational as a string like \"3/4\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        schema_error(field, e.what());
    }
}

int parse_exponent(const std::string& key, const std::string& field) {
    if (key.empty() || key.size() > 6 || key.find_first_not_of("0123456789") != std::string::npos)
        schema_error(field, "exponent '" + key + "' is not a small nonnegative integer");
    return std::stoi(key);
}

std::vector<Rational> parse_coefficient_list(const Json& j, const std::string& field) {
    if (!j.is_array()) schema_error(field, "expected an array of rationals");
    std::vector<Rational> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(parse_rational(j[k], field + "[" + std::to_string(k) + "]"));
    return out;
}

RationalFunction parse_series(const Json& j, const std::string& field) {
    if (!j.is_object()) schema_error(field, "expected an object");
    if (j.contains("num") || j.contains("den")) {
        for (const auto& [k, v] : j.items())
            if (k != "num" && k != "den") schema_error(field, "unexpected key '" + k + "' next to num/den");
        if (!j.contains("num")) schema_error(field, "missing 'num'");
        RationalFunction f;
        f.num = parse_coefficient_list(j["num"], field + ".num");
        if (j.contains("den")) f.den = parse_coefficient_list(j["den"], field + ".den");
        if (f.den.empty() || f.den.front().is_zero())
            throw Error(ErrorCode::NonUnitDenominator, field + ": denominator vanishes at t = 0");
        return f;
    }
    std::vector<Rational> num;
    for (const auto& [k, v] : j.items()) {
        const int e = parse_exponent(k, field);
        if (static_cast<int>(num.size()) <= e) num.resize(static_cast<std::size_t>(e) + 1, Rational(0));
        num[static_cast<std::size_t>(e)] = parse_rational(v, field + "." + k);
    }
    return RationalFunction::polynomial(std::move(num));
}

int parse_int_option(const Json& j, const std::string& field, int lo, int hi) {
    if (!j.is_number_integer()) schema_error(field, "expected an integer");
    const long long v = j.get<long long>();
    if (v < lo || v > hi) schema_error(field, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

}  // namespace

CurveFile parse_curve_file(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::SchemaError, std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) schema_error("(root)", "expected an object");
    static const std::set<std::string> allowed{"name", "variables", "branches", "equations", "options"};
    for (const auto& [k, v] : root.items())
        if (!allowed.count(k)) schema_error(k, "unknown key");

    CurveFile out;
    CurveSpec& spec = out.spec;
    spec.name = "curve";
    if (root.contains("name")) {
        if (!root["name"].is_string()) schema_error("name", "expected a string");
        spec.name = root["name"].get<std::string>();
    }

    if (!root.contains("variables") || !root["variables"].is_array() || root["variables"].empty())
        schema_error("variables", "expected a nonempty array of names");
    for (std::size_t k = 0; k < root["variables"].size(); ++k) {
        const Json& v = root["variables"][k];
        const std::string field = "variables[" + std::to_string(k) + "]";
        if (!v.is_string()) schema_error(field, "expected a string");
        const std::string name = v.get<std::string>();
        if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
            schema_error(field, "'" + name + "' is not an identifier");
        if (std::find(spec.variables.begin(), spec.variables.end(), name) != spec.variables.end())
            schema_error(field, "duplicate variable '" + name + "'");
        spec.variables.push_back(name);
    }

    if (!root.contains("branches") || !root["branches"].is_array() || root["branches"].empty())
        schema_error("branches", "expected a nonempty array");
    for (std::size_t b = 0; b < root["branches"].size(); ++b) {
        const Json& br = root["branches"][b];
        const std::string field = "branches[" + std::to_string(b) + "]";
        if (!br.is_object()) schema_error(field, "expected an object");
        for (const auto& [k, v] : br.items())
            if (std::find(spec.variables.begin(), spec.variables.end(), k) == spec.variables.end())
                schema_error(field, "unknown coordinate '" + k + "'");
        std::vector<RationalFunction> coords;
        for (const std::string& var : spec.variables) {
            if (!br.contains(var)) schema_error(field, "missing coordinate '" + var + "' (use {} for zero)");
            coords.push_back(parse_series(br[var], field + "." + var));
        }
        spec.param.push_back(std::move(coords));
    }

    if (root.contains("equations")) {
        const Json& eqs = root["equations"];
        if (!eqs.is_array()) schema_error("equations", "expected an array of strings");
        std::vector<Polynomial> polys;
        for (std::size_t k = 0; k < eqs.size(); ++k) {
            const std::string field = "equations[" + std::to_string(k) + "]";
            if (!eqs[k].is_string()) schema_error(field, "expected a string");
            try {
                polys.push_back(parse_polynomial(eqs[k].get<std::string>(), spec.variables));
            } catch (const Error& e) {
                schema_error(field, e.what());
            }
        }
        spec.equations = std::move(polys);
    }

    if (root.contains("options")) {
        const Json& opt = root["options"];
        if (!opt.is_object()) schema_error("options", "expected an object");
        for (const auto& [k, v] : opt.items()) {
            if (k == "order")
                out.options.initial_order = parse_int_option(v, "options.order", 2, 1 << 16);
            else if (k == "max_order")
                out.options.max_order = parse_int_option(v, "options.max_order", 2, 1 << 16);
            else
                schema_error("options." + k, "unknown option");
        }
    }
    validate_spec(spec);
    return out;
}

CurveFile load_curve_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_curve_file(ss.str());
}

CurveSpec appendix_curve() {
    CurveSpec spec;
    spec.name = "appendix";
    spec.variables = {"x", "y"};
    RationalFunction x{{Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)},
                       {Rational(1), Rational(-1)}};
    spec.param = {{x, RationalFunction::monomial(4)}};
    spec.equations = std::vector<Polynomial>{parse_polynomial("x^4 - y*(x+y)^4", spec.variables)};
    return spec;
}

// ---------------------------------------------------------------- JSON encoding

Json int_vectors_to_json(const std::vector<IntVector>& v) {
    Json out = Json::array();
    for (const IntVector& a : v) out.push_back(a);
    return out;
}

Json series_to_json(const MultiSeries& x) {
    Json out = Json::array();
    for (const TruncatedSeries& s : x.branches) {
        if (!s.is_exact()) throw Error(ErrorCode::InvalidArgument, "only exact series are serialized");
        Json terms = Json::object();
        for (int e = s.low(); e < s.stored_end(); ++e) {
            const Rational c = s.coeff(e);
            if (!c.is_zero()) terms[std::to_string(e)] = c.str();
        }
        out.push_back(std::move(terms));
    }
    return out;
}

MultiSeries series_from_json(const Json& j) {
    std::vector<TruncatedSeries> b;
    for (const Json& terms : j) {
        TruncatedSeries s;
        for (const auto& [k, v] : terms.items())
            s = s + TruncatedSeries::monomial(std::stoi(k), Rational::parse(v.get<std::string>()));
        b.push_back(std::move(s));
    }
    return MultiSeries(std::move(b));
}

namespace {

Json rationals_to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const Rational& x : v) out.push_back(x.str());
    return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
    std::vector<Rational> out;
    for (const Json& x : j) out.push_back(Rational::parse(x.get<std::string>()));
    return out;
}

}  // namespace

Json to_json(const InvariantReport& rep) {
    Json j;
    j["delta"] = rep.delta;
    j["tau"] = rep.tau;
    j["smooth"] = rep.smooth;
    j["gorenstein"] = rep.gorenstein;
    j["complete_intersection"] = rep.complete_intersection;
    j["quasihomogeneous"] = rep.quasihomogeneous();
    j["qh_by_unit_multiple"] = rep.qh_by_unit_multiple;
    j["qh_by_tdt_m"] = rep.qh_by_tdt_m;
    j["qh_by_rho_prime"] = rep.qh_by_rho_prime;
    j["m_iso_M"] = rep.m_iso_M;
    j["m_iso_M_unit"] = rep.m_iso_M_unit;
    j["unit_witness"] = rep.unit_witness ? series_to_json(*rep.unit_witness) : Json(nullptr);
    j["rho"] = rep.rho ? Json(*rep.rho) : Json(nullptr);
    j["rho_prime"] = rep.rho_prime;
    j["syntactic_weights"] = rep.syntactic_weights ? rationals_to_json(*rep.syntactic_weights) : Json(nullptr);
    j["lengths"] = {{"normalization_over_A", rep.length_normalization},
                    {"m_dual_over_A", rep.length_m_dual},
                    {"end_M_over_A", rep.length_end_M}};
    return j;
}

InvariantReport invariant_report_from_json(const Json& j) {
    InvariantReport rep;
    rep.delta = j.at("delta").get<IntVector>();
    rep.tau = j.at("tau").get<IntVector>();
    rep.smooth = j.at("smooth").get<bool>();
    rep.gorenstein = j.at("gorenstein").get<bool>();
    rep.complete_intersection = j.at("complete_intersection").get<bool>();
    rep.qh_by_unit_multiple = j.at("qh_by_unit_multiple").get<bool>();
    rep.qh_by_tdt_m = j.at("qh_by_tdt_m").get<bool>();
    rep.qh_by_rho_prime = j.at("qh_by_rho_prime").get<bool>();
    rep.m_iso_M = j.at("m_iso_M").get<bool>();
    rep.m_iso_M_unit = j.at("m_iso_M_unit").get<bool>();
    if (!j.at("unit_witness").is_null()) rep.unit_witness = series_from_json(j["unit_witness"]);
    if (!j.at("rho").is_null()) rep.rho = j["rho"].get<long>();
    rep.rho_prime = j.at("rho_prime").get<long>();
    if (!j.at("syntactic_weights").is_null()) rep.syntactic_weights = rationals_from_json(j["syntactic_weights"]);
    rep.length_normalization = j.at("lengths").at("normalization_over_A").get<long>();
    rep.length_m_dual = j.at("lengths").at("m_dual_over_A").get<long>();
    rep.length_end_M = j.at("lengths").at("end_M_over_A").get<long>();
    return rep;
}

Json to_json(const ReportDocument& doc) { return {{"command", doc.command}, {"curve", doc.curve}, {"data", doc.data}}; }

ReportDocument report_from_json(const Json& j) {
    return {j.at("command").get<std::string>(), j.at("curve").get<std::string>(), j.at("data")};
}

namespace {

bool is_flat(const Json& j) {
    if (!j.is_array()) return !j.is_object();
    for (const Json& x : j)
        if (x.is_object()) return false;
    return true;
}

void emit_text(const Json& j, int indent, std::ostringstream& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [k, v] : j.items()) {
        if (is_flat(v)) {
            out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        } else if (v.is_object()) {
            out << pad << k << ":\n";
            emit_text(v, indent + 2, out);
        } else {
            out << pad << k << ":\n";
            for (std::size_t n = 0; n < v.size(); ++n) {
                out << pad << "  - [" << n << "]\n";
                emit_text(v[n], indent + 4, out);
            }
        }
    }
}

}  // namespace

std::string emit_report(const ReportDocument& doc, Format format) {
    if (format == Format::Json) return to_json(doc).dump() + "\n";
    std::ostringstream out;
    out << "command: " << doc.command << "\ncurve: " << doc.curve << "\n";
    emit_text(doc.data, 0, out);
    return out.str();
}

// ---------------------------------------------------------------- commands

namespace {

struct Context {
    const AlgebraModel& model;
    const FracIdeal a;
    const FracIdeal m;
    explicit Context(const AlgebraModel& mdl) : model(mdl), a(unit_ideal(mdl)), m(maximal_ideal_of(mdl)) {}
};

Json semigroup_json(const AlgebraModel& model) {
    const SemigroupTable table = semigroup_of_curve(model);
    return {{"delta", table.delta()},
            {"tau", table.tau()},
            {"box", int_vectors_to_json(table.members())},
            {"symmetric", is_symmetric(table)},
            {"delta_invariant", model.delta_invariant()}};
}

Json subspace_json(const SubspaceBasis& s, const SubspaceBasis& ring) {
    Json j{{"low", s.low()}, {"tail", s.tail()}, {"gamma", int_vectors_to_json(gamma_box(s, s.low(), s.tail()))}};
    j["length_over_A"] = is_subset(ring, s) ? Json(length_quotient(s, ring)) : Json(nullptr);
    j["colength_in_A"] = is_subset(s, ring) ? Json(length_quotient(ring, s)) : Json(nullptr);
    return j;
}

Json cmd_analyze(const AlgebraModel& model) {
    return {{"semigroup", semigroup_json(model)},
            {"report", to_json(qh_report(model))},
            {"stability_certified", model.stability_certified()}};
}

Json cmd_gorenstein(const AlgebraModel& model) {
    const Context c(model);
    const bool symmetric = is_symmetric(semigroup_of_curve(model));
    const long ell = length_quotient(dual_ideal(c.m), c.a);
    return {{"symmetric", symmetric}, {"m_dual_over_A", ell}, {"gorenstein", symmetric && ell == 1}};
}

Json cmd_qh(const AlgebraModel& model) {
    const Json r = to_json(qh_report(model));
    Json j;
    for (const char* k : {"quasihomogeneous", "qh_by_unit_multiple", "qh_by_tdt_m", "qh_by_rho_prime", "gorenstein", "smooth",
                          "rho_prime", "unit_witness", "syntactic_weights", "m_iso_M", "m_iso_M_unit"})
        j[k] = r.at(k);
    return j;
}

Json cmd_rho(const AlgebraModel& model) {
    const bool gorenstein = is_symmetric(semigroup_of_curve(model));
    const RhoPrime rp = rho_prime_invariant(model, gorenstein);
    return {{"rho", rho_invariant(model)}, {"rho_prime", rp.rho_prime}, {"end_M_over_A", rp.end_M_length}};
}

Json cmd_ideals(const AlgebraModel& model) {
    const Context c(model);
    const SubspaceBasis& ring = model.ring();
    const FracIdeal big_m = module_MA(model);
    Json j;
    j["A"] = subspace_json(ring, ring);
    j["m"] = subspace_json(c.m.subspace(), ring);
    j["m_dual"] = subspace_json(dual_ideal(c.m).subspace(), ring);
    j["End_m"] = subspace_json(endo_ring(c.m).subspace(), ring);
    j["tdt_m"] = subspace_json(subspace_tdt_m(model), ring);
    j["M"] = subspace_json(big_m.subspace(), ring);
    j["M_dual"] = subspace_json(dual_ideal(big_m).subspace(), ring);
    j["End_M"] = subspace_json(endo_ring(big_m).subspace(), ring);
    if (model.spec().is_complete_intersection()) {
        const FracIdeal jac = jacobian_ideal(model);
        j["J"] = subspace_json(jac.subspace(), ring);
        j["J_dual"] = subspace_json(dual_ideal(jac).subspace(), ring);
        j["End_J_dual"] = subspace_json(endo_ring(dual_ideal(jac)).subspace(), ring);
    }
    return j;
}

Json cmd_normalize_step(const AlgebraModel& model) {
    const NormalizationStep step = vasconcelos_step(model);
    return {{"already_smooth", step.already_smooth},
            {"colength", step.colength},
            {"result", semigroup_json(step.model)}};
}

Json check(const std::string& name, bool pass, Json detail) {
    return {{"name", name}, {"pass", pass}, {"detail", std::move(detail)}};
}

std::string jet_string(const TruncatedSeries& s, int below) {
    std::string out;
    for (int e = s.low(); e < std::min(below, s.stored_end()); ++e) {
        const Rational c = s.coeff(e);
        if (c.is_zero()) continue;
        out += (out.empty() ? "" : " + ") + c.str() + "*t^" + std::to_string(e);
    }
    return out.empty() ? "0" : out;
}

Json cmd_verify_appendix(const RunOptions& options) {
    const CurveSpec spec = appendix_curve();
    const AlgebraModel model = build_algebra(spec, options.build);
    Json checks = Json::array();

    checks.push_back(check("equations vanish on the parametrization", verify_equations(spec, 64), "mod t^64"));

    const TruncatedSeries x = spec.param[0][0].expand(64);
    const TruncatedSeries tx = tdt(x);
    const TruncatedSeries jet = TruncatedSeries::exact(5, {Rational(5), Rational(6), Rational(7)});
    checks.push_back(check("t d/dt x = 5t^5 + 6t^6 + 7t^7 mod t^8", (tx - jet).truncate(8).all_zero(),
                           jet_string(tx, 8)));

    const TruncatedSeries eta = RationalFunction{{Rational(5), Rational(-4)}, {Rational(1), Rational(-1)}}.expand(64);
    const TruncatedSeries eta_jet = TruncatedSeries::exact(0, {Rational(5), Rational(1), Rational(1)});
    checks.push_back(check("t d/dt x = eta * x with eta = (5-4t)/(1-t)", (tx - eta * x).all_zero(), "mod t^64"));
    checks.push_back(check("eta = 5 + t + t^2 mod t^3", (eta - eta_jet).truncate(3).all_zero(), jet_string(eta, 3)));

    const SemigroupTable table = semigroup_of_curve(model);
    bool gens45 = true;
    for (int a = 0; a <= table.delta()[0]; ++a) {
        bool in = false;
        for (int p = 0; 4 * p <= a && !in; ++p) in = (a - 4 * p) % 5 == 0;
        gens45 = gens45 && capped_membership(table, {a}) == in;
    }
    checks.push_back(check("value semigroup is <4,5> with conductor 12", gens45 && table.delta()[0] == 12,
                           {{"delta", table.delta()}, {"box", int_vectors_to_json(table.members())}}));

    const Context c(model);
    const IsoResult iso = module_isomorphic(module_MA(model), c.m);
    checks.push_back(check("A t d/dt(A) is not isomorphic to m", !iso.isomorphic,
                           {{"candidates_tested", iso.candidates_tested}}));

    const InvariantReport rep = qh_report(model);
    checks.push_back(check("every quasihomogeneity criterion fails",
                           !rep.qh_by_unit_multiple && !rep.qh_by_tdt_m && !rep.qh_by_rho_prime && rep.rho && *rep.rho != 1,
                           to_json(rep)));
    checks.push_back(check("rho = rho' >= 2", rep.rho && *rep.rho == rep.rho_prime && rep.rho_prime >= 2,
                           {{"rho", rep.rho ? Json(*rep.rho) : Json(nullptr)}, {"rho_prime", rep.rho_prime}}));

    const std::vector<std::string> xy{"x", "y"};
    checks.push_back(check("x^4 + x*y^4 + y^5 admits no positive weights",
                           !detect_weights({parse_polynomial("x^4 + x*y^4 + y^5", xy)}, 2), nullptr));

    bool all = true;
    for (const Json& ch : checks) all = all && ch["pass"].get<bool>();
    return {{"checks", checks}, {"all_pass", all}};
}

Json dispatch(const std::string& command, const CurveSpec& spec, const RunOptions& options) {
    if (command == "verify-appendix") return cmd_verify_appendix(options);
    const AlgebraModel model = build_algebra(spec, options.build);
    if (command == "analyze") return cmd_analyze(model);
    if (command == "semigroup") return semigroup_json(model);
    if (command == "gorenstein") return cmd_gorenstein(model);
    if (command == "qh") return cmd_qh(model);
    if (command == "rho") return cmd_rho(model);
    if (command == "ideals") return cmd_ideals(model);
    if (command == "normalize-step") return cmd_normalize_step(model);
    throw Error(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
}

}  // namespace

bool is_known_command(const std::string& command) {
    static const std::set<std::string> known{"analyze", "semigroup", "gorenstein", "qh",
                                             "rho",     "ideals",    "normalize-step", "verify-appendix"};
    return known.count(command) != 0;
}

ReportDocument run_command(const std::string& command, const CurveSpec& spec, const RunOptions& options) {
    ReportDocument doc{command, command == "verify-appendix" ? "appendix" : spec.name, dispatch(command, spec, options)};
    if (options.certify) {
        RunOptions doubled = options;
        doubled.certify = false;
        doubled.build.initial_order *= 2;
        doubled.build.max_order *= 2;
        if (dispatch(command, spec, doubled) != doc.data)
            throw Error(ErrorCode::NoStabilization, "results changed when recomputed at doubled order");
        doc.data["certified_at_doubled_order"] = true;
    }
    return doc;
}

}  // namespace qhcurve
