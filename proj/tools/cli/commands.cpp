#include "cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "splinequad/errors.hpp"
#include "splinequad/golden.hpp"
#include "splinequad/splinecheck.hpp"

namespace splinequad::cli {

ResolvedSelection resolve_selection(const RuleSelection& selection)
{
    const std::string& cls = selection.continuity;
    if (cls != "c0" && cls != "c1") throw UsageError("--class must be c0 or c1");
    if (selection.degree < 1) throw UsageError("--degree must be positive");
    const bool odd = selection.degree % 2 != 0;

    ResolvedSelection resolved;
    if (cls == "c0") {
        if (!selection.variant.empty()) throw UsageError("--variant is only meaningful for c1 with odd degree");
        resolved.family = odd ? FamilyId::c0_odd() : FamilyId::c0_even();
    } else if (odd) {
        if (selection.variant.empty() || selection.variant == "endpoint")
            resolved.family = FamilyId::c1_endpoint();
        else if (selection.variant == "interior")
            resolved.family = FamilyId::c1_interior();
        else
            throw UsageError("--variant must be endpoint or interior");
    } else {
        if (!selection.variant.empty())
            throw UsageError("--variant is only meaningful for c1 with odd degree (interior variant exists "
                             "only for odd degree)");
        resolved.family = FamilyId::c1_even();
    }

    if (!selection.delta_sign.empty()) {
        if (resolved.family != FamilyId::c0_even())
            throw UsageError("--delta-sign is only meaningful for c0 with even degree");
        if (selection.delta_sign == "+")
            resolved.sign = DeltaSign::Plus;
        else if (selection.delta_sign == "-")
            resolved.sign = DeltaSign::Minus;
        else
            throw UsageError("--delta-sign must be + or -");
    }

    try {
        resolved.n = index_for_degree(resolved.family, selection.degree);
    } catch (const InvalidFamily& e) {
        throw UsageError(e.what());
    }
    return resolved;
}

RuleDocument make_document(const ResolvedSelection& resolved, Precision precision)
{
    RuleDocument doc;
    doc.name = rule_name(resolved.family, degree_for(resolved.family, resolved.n));
    if (precision == Precision::Extended) {
        const auto spec = build_family<Extended>(resolved.family, resolved.n, resolved.sign);
        doc.delta = spec.delta;
        doc.rule = scale_to_unit_intervals(assemble(spec));
        return doc;
    }
    const auto spec = build_family<double>(resolved.family, resolved.n, resolved.sign);
    const auto rule = scale_to_unit_intervals(assemble(spec));
    doc.delta = Extended(spec.delta);
    doc.rule = ScaledRule<Extended>{rule.family, rule.n, rule.degree, {}};
    for (const auto& interval : rule.intervals) {
        RuleInterval<Extended> widened;
        for (double x : interval.nodes) widened.nodes.emplace_back(x);
        for (double w : interval.weights) widened.weights.emplace_back(w);
        doc.rule.intervals.push_back(std::move(widened));
    }
    return doc;
}

int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err)
{
    RuleDocument doc;
    try {
        doc = make_document(resolve_selection(options.selection), options.precision);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (options.out.empty()) {
        write_rule(out, doc, options.format);
        return kExitOk;
    }
    std::ofstream file(options.out);
    if (!file) {
        err << "error: cannot write " << options.out << '\n';
        return kExitFailure;
    }
    write_rule(file, doc, options.format);
    return file ? kExitOk : kExitFailure;
}

namespace {

struct GoldenRow {
    std::string id;
    std::string family;
    int n = 0;
    double deviation = 0.0;
    std::string problem;
};

std::string format_error(double value)
{
    std::ostringstream s;
    s << std::scientific << std::setprecision(3) << value;
    return s.str();
}

bool verify_golden(const VerifyOptions& options, std::ostream& out)
{
    const auto tables = options.golden_file.empty() ? builtin_golden() : load_golden_file(options.golden_file);
    out << "golden tables (tol " << format_error(options.golden_tol) << ")\n";
    out << std::left << std::setw(10) << "id" << std::setw(18) << "family" << std::setw(5) << "n" << std::setw(12)
        << "max_dev" << "status\n";

    bool ok = true;
    const GoldenRow* worst = nullptr;
    std::vector<GoldenRow> rows;
    rows.reserve(tables.size());
    for (const auto& golden : tables) {
        GoldenRow row{golden.id};
        try {
            const FamilyId id = family_of(golden);
            row.family = id.name();
            row.n = index_for_degree(id, golden.degree);
            row.deviation = compare_golden(make_scaled_rule<double>(id, row.n), golden).max_deviation;
        } catch (const std::exception& e) {
            row.problem = e.what();
        }
        rows.push_back(std::move(row));
    }
    for (const auto& row : rows) {
        const bool pass = row.problem.empty() && row.deviation <= options.golden_tol;
        ok = ok && pass;
        out << std::setw(10) << row.id << std::setw(18) << row.family << std::setw(5) << row.n << std::setw(12)
            << (row.problem.empty() ? format_error(row.deviation) : "-") << (pass ? "PASS" : "FAIL");
        if (!row.problem.empty()) out << " (" << row.problem << ')';
        out << '\n';
        if (!pass && (worst == nullptr || !row.problem.empty() || row.deviation > worst->deviation)) worst = &row;
    }
    if (worst != nullptr)
        out << "worst offender: " << worst->id << " max deviation " << format_error(worst->deviation) << '\n';
    return ok;
}

bool verify_exactness(const VerifyOptions& options, std::ostream& out)
{
    out << "spline exactness (tol " << format_error(options.exactness_tol) << ", " << options.copies
        << " periods)\n";
    out << std::left << std::setw(18) << "family" << std::setw(5) << "n" << std::setw(5) << "D" << std::setw(12)
        << "max_err" << std::setw(8) << "bases" << "status\n";

    std::vector<std::future<std::vector<ExactnessReport>>> jobs;
    for (const auto& id : kAllFamilies) {
        jobs.push_back(std::async(std::launch::async, [id, &options] {
            std::vector<ExactnessReport> reports;
            for (int n = min_index(id); n <= options.max_n; ++n)
                reports.push_back(check_exactness(make_scaled_rule<double>(id, n), options.copies));
            return reports;
        }));
    }

    bool ok = true;
    std::optional<ExactnessReport> worst;
    for (auto& job : jobs) {
        for (const auto& r : job.get()) {
            const bool pass = r.max_abs_error <= options.exactness_tol && r.tested_basis_count > 0;
            ok = ok && pass;
            out << std::setw(18) << r.family.name() << std::setw(5) << r.n << std::setw(5) << r.degree
                << std::setw(12) << format_error(r.max_abs_error) << std::setw(8) << r.tested_basis_count
                << (pass ? "PASS" : "FAIL") << '\n';
            if (!worst || r.max_abs_error > worst->max_abs_error) worst = r;
        }
    }
    if (!ok && worst)
        out << "worst offender: " << worst->family.name() << " n=" << worst->n << " basis "
            << worst->worst_basis_index << " error " << format_error(worst->max_abs_error) << '\n';
    return ok;
}

} // namespace

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err)
{
    if (options.max_n < 1) {
        err << "error: --max-n must be >= 1\n";
        return kExitUsage;
    }
    if (options.copies < 3) {
        err << "error: --copies must be >= 3\n";
        return kExitUsage;
    }
    bool ok = true;
    try {
        if (options.scope == VerifyScope::Golden || options.scope == VerifyScope::All)
            ok = verify_golden(options, out) && ok;
        if (options.scope == VerifyScope::Exactness || options.scope == VerifyScope::All)
            ok = verify_exactness(options, out) && ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    out << (ok ? "all checks passed\n" : "verification FAILED\n");
    return ok ? kExitOk : kExitFailure;
}

namespace {

struct PlotSeries {
    std::string label;
    std::string color;
    ScaledRule<double> rule;
};

void write_svg(std::ostream& svg, const std::string& title, const std::vector<PlotSeries>& series)
{
    constexpr double width = 900, height = 420;
    constexpr double left = 70, right = 30, top = 40, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    int period = 1;
    double max_weight = 0.0;
    for (const auto& s : series) {
        period = std::max(period, s.rule.period_intervals());
        for (const auto& interval : s.rule.intervals)
            for (double w : interval.weights) max_weight = std::max(max_weight, w);
    }
    const double y_max = max_weight > 0 ? max_weight * 1.1 : 1.0;
    auto px = [&](double x) { return left + plot_w * x / period; };
    auto py = [&](double w) { return top + plot_h * (1.0 - w / y_max); };

    svg << std::fixed << std::setprecision(2);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"16\">" << title << "</text>\n";

    // axes and interval boundaries
    svg << "<line x1=\"" << left << "\" y1=\"" << py(0) << "\" x2=\"" << left + plot_w << "\" y2=\"" << py(0)
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << py(0)
        << "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= period; ++k) {
        svg << "<line x1=\"" << px(k) << "\" y1=\"" << top << "\" x2=\"" << px(k) << "\" y2=\"" << py(0)
            << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
        svg << "<text x=\"" << px(k) << "\" y=\"" << py(0) + 20 << "\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"12\">" << k << "</text>\n";
    }
    for (int t = 0; t <= 4; ++t) {
        const double w = y_max * t / 4;
        svg << "<text x=\"" << left - 8 << "\" y=\"" << py(w) + 4 << "\" text-anchor=\"end\" "
            << "font-family=\"sans-serif\" font-size=\"11\">" << std::setprecision(4) << w << std::setprecision(2)
            << "</text>\n";
    }

    for (std::size_t s = 0; s < series.size(); ++s) {
        const auto& entry = series[s];
        svg << "<g stroke=\"" << entry.color << "\" fill=\"" << entry.color << "\">\n";
        for (const auto& p : flatten(entry.rule)) {
            svg << "<line x1=\"" << px(p.node) << "\" y1=\"" << py(0) << "\" x2=\"" << px(p.node) << "\" y2=\""
                << py(p.weight) << "\"/>";
            svg << "<circle cx=\"" << px(p.node) << "\" cy=\"" << py(p.weight) << "\" r=\"2.5\"/>\n";
        }
        svg << "</g>\n";
        svg << "<text x=\"" << left + 10 << "\" y=\"" << top + 16 + 16 * s << "\" fill=\"" << entry.color
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << entry.label << "</text>\n";
    }
    svg << "</svg>\n";
}

} // namespace

int cmd_plot(const PlotOptions& options, std::ostream& out, std::ostream& err)
{
    std::vector<PlotSeries> series;
    std::string title;
    try {
        std::vector<RuleSelection> selections;
        if (options.selection.variant == "both") {
            if (options.selection.continuity != "c1" || options.selection.degree % 2 == 0)
                throw UsageError("--variant both is only meaningful for c1 with odd degree");
            RuleSelection endpoint = options.selection;
            endpoint.variant = "endpoint";
            RuleSelection interior = options.selection;
            interior.variant = "interior";
            selections = {endpoint, interior};
        } else {
            selections = {options.selection};
        }
        const char* colors[] = {"black", "red"};
        for (std::size_t i = 0; i < selections.size(); ++i) {
            const auto resolved = resolve_selection(selections[i]);
            const int degree = degree_for(resolved.family, resolved.n);
            series.push_back({rule_name(resolved.family, degree) + " (" + resolved.family.name() +
                                  ", n = " + std::to_string(resolved.n) + ")",
                              colors[i], make_scaled_rule<double>(resolved.family, resolved.n, resolved.sign)});
            title += (title.empty() ? "" : " vs ") + rule_name(resolved.family, degree);
        }
        title += " weights";
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (options.out.empty()) {
        err << "error: --out is required\n";
        return kExitUsage;
    }

    const std::filesystem::path svg_path(options.out);
    std::filesystem::path csv_path = svg_path;
    csv_path.replace_extension(".csv");

    std::ofstream svg(svg_path);
    std::ofstream csv(csv_path);
    if (!svg || !csv) {
        err << "error: cannot write " << (!svg ? svg_path : csv_path).string() << '\n';
        return kExitFailure;
    }
    write_svg(svg, title, series);
    csv << "series,interval,index,node,weight\n";
    csv << std::setprecision(17);
    for (std::size_t s = 0; s < series.size(); ++s) {
        const auto& rule = series[s].rule;
        for (std::size_t k = 0; k < rule.intervals.size(); ++k)
            for (std::size_t i = 0; i < rule.intervals[k].nodes.size(); ++i)
                csv << rule.family.name() << ',' << k << ',' << i << ',' << rule.intervals[k].nodes[i] << ','
                    << rule.intervals[k].weights[i] << '\n';
    }
    if (!svg || !csv) {
        err << "error: write failed\n";
        return kExitFailure;
    }
    out << "wrote " << svg_path.string() << " and " << csv_path.string() << '\n';
    return kExitOk;
}

namespace {

void add_selection_options(CLI::App& cmd, RuleSelection& selection, bool allow_both)
{
    cmd.add_option("--class", selection.continuity, "Continuity class")
        ->required()
        ->check(CLI::IsMember({"c0", "c1"}));
    cmd.add_option("--degree,-d", selection.degree, "Polynomial degree D of the spline space")->required();
    if (allow_both)
        cmd.add_option("--variant", selection.variant, "C1 odd-degree variant: endpoint, interior or both");
    else
        cmd.add_option("--variant", selection.variant, "C1 odd-degree variant: endpoint (default) or interior");
    cmd.add_option("--delta-sign", selection.delta_sign, "Sign of delta for c0 even degree: + (default) or -");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Gaussian quadrature rules for C0 and C1 splines on uniform knots"};
    app.name(args.empty() ? "splinequad" : args.front());
    app.require_subcommand(1);

    GenerateOptions generate;
    std::string precision = "extended";
    std::string format = "json";
    auto* gen = app.add_subcommand("generate", "Generate a rule scaled to unit intervals");
    add_selection_options(*gen, generate.selection, false);
    gen->add_option("--precision", precision, "double or extended (25 correct digits)")
        ->check(CLI::IsMember({"double", "extended"}));
    gen->add_option("--format,-f", format, "json, csv or maple")->check(CLI::IsMember({"json", "csv", "maple"}));
    gen->add_option("--out,-o", generate.out, "Output file (default: stdout)");

    VerifyOptions verify;
    std::string scope = "all";
    auto* ver = app.add_subcommand("verify", "Run golden-table and spline-exactness checks");
    ver->add_option("--scope", scope, "golden, exactness or all")->check(CLI::IsMember({"golden", "exactness", "all"}));
    ver->add_option("--max-n", verify.max_n, "Largest family index for the exactness sweep");
    ver->add_option("--tol", verify.golden_tol, "Golden-table tolerance on nodes and weights");
    ver->add_option("--exactness-tol", verify.exactness_tol, "Spline exactness tolerance");
    ver->add_option("--copies", verify.copies, "Periods replicated for the exactness test");
    ver->add_option("--golden-file", verify.golden_file, "Golden JSON file (default: built-in tables)");

    PlotOptions plot;
    auto* plt = app.add_subcommand("plot", "Write an SVG stem chart of the weights plus a CSV of the values");
    add_selection_options(*plt, plot.selection, true);
    plt->add_option("--out,-o", plot.out, "SVG output path")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        app.exit(e, out, err);
        return kExitUsage;
    }

    if (gen->parsed()) {
        generate.precision = precision == "double" ? Precision::Double : Precision::Extended;
        generate.format = format == "csv" ? OutputFormat::Csv : format == "maple" ? OutputFormat::Maple
                                                                                  : OutputFormat::Json;
        return cmd_generate(generate, out, err);
    }
    if (ver->parsed()) {
        verify.scope = scope == "golden" ? VerifyScope::Golden
                       : scope == "exactness" ? VerifyScope::Exactness
                                              : VerifyScope::All;
        return cmd_verify(verify, out, err);
    }
    return cmd_plot(plot, out, err);
}

} // namespace splinequad::cli
