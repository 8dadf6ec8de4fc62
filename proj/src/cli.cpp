#include "ddbar/cli.hpp"

#include "ddbar/blowup.hpp"
#include "ddbar/cohomology.hpp"
#include "ddbar/diagnostics.hpp"
#include "ddbar/double_complex.hpp"
#include "ddbar/errors.hpp"
#include "ddbar/render.hpp"
#include "ddbar/structure_spec.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace ddbar {

namespace {

std::string csv_quote(const std::string& s) {
    std::string quoted = s;
    size_t pos = 0;
    while ((pos = quoted.find('"', pos)) != std::string::npos) {
        quoted.insert(pos, 1, '"');
        pos += 2;
    }
    return '"' + quoted + '"';
}

DoubleComplex validated_complex(const StructureSpec& spec) {
    DoubleComplex dc = build_bicomplex(spec);
    JacobiReport report = dc.validate_jacobi();
    if (!report.ok) throw InvalidComplexError(report.summary());
    return dc;
}

void emit_analysis(const RunConfig& config, const DoubleComplex& dc, std::ostream& out) {
    HodgeTable t = hodge_table(dc);
    DiagnosticsReport report = diagnose(dc, t);
    switch (config.format) {
    case OutputFormat::json: {
        nlohmann::ordered_json doc;
        doc["hodge_table"] = t.to_json();
        doc["diagnostics"] = report.to_json();
        if (config.show_cells) doc["cells"] = cells_json(dc);
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv:
        out << render_table_csv(t, &report);
        if (config.show_cells) out << '\n' << render_cells_csv(dc);
        break;
    case OutputFormat::table:
        out << render_table_text(t) << '\n' << render_diagnostics_text(report, true);
        if (config.show_cells) out << '\n' << render_cells_text(dc);
        break;
    }
}

// Blow-up output: the JSON form is the bare table document so it can be fed
// straight back into another blow-up invocation.
void emit_hodge_table(const RunConfig& config, const HodgeTable& t, std::ostream& out) {
    switch (config.format) {
    case OutputFormat::json:
        out << t.to_json().dump(2) << '\n';
        break;
    case OutputFormat::csv: {
        DiagnosticsReport report = diagnose_table(t);
        out << render_table_csv(t, &report);
        break;
    }
    case OutputFormat::table: {
        DiagnosticsReport report = diagnose_table(t);
        out << render_table_text(t) << '\n' << render_diagnostics_text(report, false);
        break;
    }
    }
}

void emit_builtin_list(const RunConfig& config, std::ostream& out) {
    std::vector<std::string> names = builtin_names();
    switch (config.format) {
    case OutputFormat::json: {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const std::string& name : names)
            doc.push_back(nlohmann::ordered_json{{"name", name},
                                                 {"description", builtin_describe(name)}});
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv:
        out << "name,description\n";
        for (const std::string& name : names)
            out << name << ',' << csv_quote(builtin_describe(name)) << '\n';
        break;
    case OutputFormat::table: {
        size_t width = 0;
        for (const std::string& name : names) width = std::max(width, name.size());
        for (const std::string& name : names)
            out << name << std::string(width - name.size(), ' ') << "  "
                << builtin_describe(name) << '\n';
        break;
    }
    }
}

void emit_sweep(const RunConfig& config, const SweepReport& report, std::ostream& out) {
    switch (config.format) {
    case OutputFormat::json:
        out << report.to_json().dump(2) << '\n';
        break;
    case OutputFormat::csv:
        out << render_sweep_csv(report);
        break;
    case OutputFormat::table:
        out << render_sweep_text(report);
        break;
    }
}

int run_command(const RunConfig& config, std::ostream& out) {
    switch (config.command) {
    case Command::analyze:
        emit_analysis(config, validated_complex(parse_spec_file(config.spec_path)), out);
        return 0;
    case Command::builtin:
        emit_analysis(config,
                      validated_complex(builtin_spec(config.builtin_name, config.builtin_n)),
                      out);
        return 0;
    case Command::blowup_point:
        emit_hodge_table(config, blow_up_point(HodgeTable::from_file(config.table_path)), out);
        return 0;
    case Command::blowup_curve:
        emit_hodge_table(
            config, blow_up_curve(HodgeTable::from_file(config.table_path), config.genus), out);
        return 0;
    case Command::blowup_general:
        emit_hodge_table(config,
                         blow_up_general(HodgeTable::from_file(config.table_path),
                                         HodgeTable::from_file(config.center_path),
                                         config.codim, config.allow_conjectural),
                         out);
        return 0;
    case Command::invariance:
        emit_sweep(config, invariance_sweep(config.seed, config.iterations), out);
        return 0;
    case Command::list:
        emit_builtin_list(config, out);
        return 0;
    }
    return 1;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        return run_command(config, out);
    } catch (const ConjecturalError& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const InvalidComplexError& e) {
        err << "error: invalid complex: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << '\n';
        return 5;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    std::string format = "table";
    int builtin_n = 0;

    CLI::App app{"exact cohomology of bounded double complexes: Bott-Chern, Dolbeault, "
                 "del, Aeppli and de Rham dimensions, ddbar-lemma diagnostics, and "
                 "blow-up calculus on Hodge tables",
                 "ddbar"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format (default table)")
            ->check(CLI::IsMember({"table", "json", "csv"}));
    };

    CLI::App* analyze =
        app.add_subcommand("analyze", "compute the Hodge table and diagnostics of a "
                                      "structure-equation spec");
    analyze->add_option("spec", config.spec_path, "structure spec JSON file")->required();
    add_format(analyze);
    analyze->add_flag("--show-cells", config.show_cells,
                      "also emit per-cell dimensions and differential ranks");

    CLI::App* builtin =
        app.add_subcommand("builtin", "analyze a shipped structure spec by name");
    builtin->add_option("name", config.builtin_name, "builtin name (see `ddbar list`)")
        ->required();
    builtin->add_option("n", builtin_n, "complex dimension (torus only)");
    add_format(builtin);
    builtin->add_flag("--show-cells", config.show_cells,
                      "also emit per-cell dimensions and differential ranks");

    CLI::App* blowup = app.add_subcommand("blowup", "blow-up calculus on Hodge tables");
    blowup->require_subcommand(1);
    CLI::App* point = blowup->add_subcommand("point", "blow up at a point");
    point->add_option("--table", config.table_path, "Hodge table JSON file")->required();
    add_format(point);
    CLI::App* curve = blowup->add_subcommand("curve", "blow up along a curve (n = 3)");
    curve->add_option("--table", config.table_path, "Hodge table JSON file")->required();
    curve->add_option("--genus", config.genus, "genus of the center curve")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_format(curve);
    CLI::App* general =
        blowup->add_subcommand("general", "blow up along a center of given codimension");
    general->add_option("--table", config.table_path, "Hodge table JSON file")->required();
    general->add_option("--center", config.center_path, "center Hodge table JSON file")
        ->required();
    general->add_option("--codim", config.codim, "codimension of the center")->required();
    general->add_flag("--allow-conjectural", config.allow_conjectural,
                      "apply the formula outside its proven range");
    add_format(general);

    CLI::App* invariance = app.add_subcommand(
        "invariance", "sweep random threefold tables through random blow-up sequences "
                      "and check delta / N invariance");
    invariance->add_option("--seed", config.seed, "master seed")->required();
    invariance->add_option("--iterations", config.iterations, "number of trials")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_format(invariance);

    CLI::App* list = app.add_subcommand("list", "list the shipped structure specs");
    add_format(list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 5;
    }

    if (app.got_subcommand(analyze)) {
        config.command = Command::analyze;
    } else if (app.got_subcommand(builtin)) {
        config.command = Command::builtin;
        if (builtin->count("n") > 0) config.builtin_n = builtin_n;
    } else if (app.got_subcommand(blowup)) {
        if (blowup->got_subcommand(point)) config.command = Command::blowup_point;
        else if (blowup->got_subcommand(curve)) config.command = Command::blowup_curve;
        else config.command = Command::blowup_general;
    } else if (app.got_subcommand(invariance)) {
        config.command = Command::invariance;
    } else {
        config.command = Command::list;
    }
    config.format = format == "json"  ? OutputFormat::json
                    : format == "csv" ? OutputFormat::csv
                                      : OutputFormat::table;
    return run(config, out, err);
}

} // namespace ddbar
