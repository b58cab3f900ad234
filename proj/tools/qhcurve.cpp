#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qhcurve/io.hpp"

namespace {

constexpr int kComputationError = 1;
constexpr int kInputError = 2;

int fail(qhcurve::ErrorCode code, const std::string& message) {
    const qhcurve::Json err{{"error", {{"code", std::string(qhcurve::to_string(code))}, {"message", message}}}};
    std::cout << err.dump() << "\n";
    return qhcurve::is_input_error(code) ? kInputError : kComputationError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of reduced algebroid curves: semigroups, conductors, Gorenstein and "
                 "quasihomogeneity criteria."};
    std::string command, path, format = "json";
    std::optional<int> order, max_order;
    bool certify = false;
    app.add_option("command", command,
                   "analyze | semigroup | gorenstein | qh | rho | ideals | normalize-step | verify-appendix")
        ->required();
    app.add_option("curve", path, "curve description (JSON); not used by verify-appendix");
    app.add_option("--order", order, "initial truncation order (default 16)")->check(CLI::Range(2, 1 << 16));
    app.add_option("--max-order", max_order, "cap for order doubling (default 512)")->check(CLI::Range(2, 1 << 16));
    app.add_flag("--certify", certify, "recompute at doubled order and require identical results");
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }
    if (!qhcurve::is_known_command(command))
        return fail(qhcurve::ErrorCode::InvalidArgument,
                    qhcurve::Error(qhcurve::ErrorCode::InvalidArgument, "unknown command '" + command + "'").what());

    try {
        qhcurve::RunOptions options;
        qhcurve::CurveSpec spec;
        if (command != "verify-appendix") {
            if (path.empty()) throw qhcurve::Error(qhcurve::ErrorCode::InvalidArgument, "missing curve file");
            qhcurve::CurveFile file = qhcurve::load_curve_file(path);
            spec = std::move(file.spec);
            options.build = file.options;
        }
        if (order) options.build.initial_order = *order;
        if (max_order) options.build.max_order = *max_order;
        options.certify = certify;

        const qhcurve::ReportDocument doc = qhcurve::run_command(command, spec, options);
        std::cout << qhcurve::emit_report(doc, format == "text" ? qhcurve::Format::Text : qhcurve::Format::Json);
        if (command == "verify-appendix" && !doc.data.at("all_pass").get<bool>()) return kComputationError;
        return 0;
    } catch (const qhcurve::Error& e) {
        return fail(e.code(), e.what());
    } catch (const std::exception& e) {
        return fail(qhcurve::ErrorCode::InvalidArgument, e.what());
    }
}
