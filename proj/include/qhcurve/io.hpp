#ifndef QHCURVE_IO_HPP
#define QHCURVE_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"
#include "qhcurve/criteria.hpp"

namespace qhcurve {

using Json = nlohmann::json;  // std::map objects: keys are emitted sorted

struct CurveFile {
    CurveSpec spec;
    BuildOptions options;
};

// Parses the JSON curve description. Throws SchemaError naming the
// offending field, NonUnitDenominator for series with den(0) = 0.
CurveFile parse_curve_file(std::string_view text);
CurveFile load_curve_file(const std::string& path);

// The curve from the quasihomogeneity counterexample: x = t^5/(1-t), y = t^4.
CurveSpec appendix_curve();

struct RunOptions {
    BuildOptions build;
    bool certify = false;
};

struct ReportDocument {
    std::string command;
    std::string curve;
    Json data;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

Json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const Json& j);

Json to_json(const InvariantReport& rep);
InvariantReport invariant_report_from_json(const Json& j);

Json series_to_json(const MultiSeries& x);
MultiSeries series_from_json(const Json& j);
Json int_vectors_to_json(const std::vector<IntVector>& v);

enum class Format { Json, Text };
std::string emit_report(const ReportDocument& doc, Format format);

// Commands: analyze, semigroup, gorenstein, qh, rho, ideals, normalize-step,
// verify-appendix (which ignores spec). With certify, the computation is
// repeated with doubled orders and must reproduce the same data.
ReportDocument run_command(const std::string& command, const CurveSpec& spec, const RunOptions& options);

bool is_known_command(const std::string& command);

}  // namespace qhcurve

#endif  // QHCURVE_IO_HPP
