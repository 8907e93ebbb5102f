#include "folcoh/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "folcoh/report.hpp"

namespace folcoh {

namespace {

struct CommonArgs {
    std::string model_path;
    std::string format_name = "text";
    std::string at_text;
    std::string grid_text;
    std::string reference_text;
    std::string theory_name = "all";
    int trials = 64;
    uint64_t seed = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_grid = false) {
    cmd->add_option("model", args.model_path, "model file (.fol)")->required();
    cmd->add_option("--format", args.format_name, "output format: text|json|csv");
    cmd->add_option("--at", args.at_text, "parameter value, e.g. 1/2 or s=1/2");
    if (with_grid) {
        cmd->add_option("--grid", args.grid_text, "comma-separated rational grid");
        cmd->add_option("--reference", args.reference_text,
                        "grid value used for semicontinuity comparison");
    }
    cmd->add_option("--trials", args.trials, "search trials for the kaehler witness");
    cmd->add_option("--seed", args.seed, "seed for randomized screens");
    cmd->add_option("--theory", args.theory_name, "dr|dolbeault|bc|aeppli|all");
}

Rational parse_at(const std::string& text) {
    auto eq = text.find('=');
    return parse_rational(eq == std::string::npos ? text : text.substr(eq + 1));
}

std::vector<Rational> parse_grid(const std::string& text) {
    std::vector<Rational> grid;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string piece =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        if (!piece.empty()) grid.push_back(parse_rational(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return grid;
}

std::optional<Rational> optional_at(const CommonArgs& args) {
    if (args.at_text.empty()) return std::nullopt;
    return parse_at(args.at_text);
}

std::string param_name_of(const Model& m) { return m.has_param() ? m.param_name : "s"; }

Report base_report(const Model& m, const std::optional<Rational>& at) {
    Report r;
    r.model = m.name;
    if (at.has_value()) r.parameter_value = format_rational(*at);
    return r;
}

int run_validate(const CommonArgs& args, Format format, std::ostream& out) {
    Model m = parse_model_file(args.model_path);
    ValidationReport report = validate_model(m);
    Report r = base_report(m, std::nullopt);
    r.checks = lower_validation(report);
    out << serialize_report(r, format);
    return report.ok() ? 0 : 1;
}

int run_cohomology(const CommonArgs& args, Format format, std::ostream& out) {
    Model m = parse_model_file(args.model_path);
    require_valid(m);
    std::optional<Rational> at = optional_at(args);
    Report r = base_report(m, at);
    const std::string& which = args.theory_name;
    bool all = which == "all";
    bool need_bigraded = all || which == "dolbeault" || which == "bc" || which == "aeppli";

    if (all || which == "dr") {
        GradedComplex complex = invariant_complex(m, at);
        r.theories.push_back(lower_table(de_rham(complex), param_name_of(m)));
    }
    if (need_bigraded) {
        if (!m.fully_typed() && !all) {
            throw Error(ErrorCode::NotBigraded,
                        "theory '" + which + "' requires a fully typed model");
        }
        if (m.fully_typed()) {
            Bicomplex b = bigrade_split(m);
            if (all || which == "dolbeault") {
                r.theories.push_back(lower_table(dolbeault(b, false), param_name_of(m)));
                if (all) {
                    r.theories.push_back(lower_table(dolbeault(b, true), param_name_of(m)));
                }
            }
            if (all || which == "bc") {
                r.theories.push_back(lower_table(bott_chern(b), param_name_of(m)));
            }
            if (all || which == "aeppli") {
                r.theories.push_back(lower_table(aeppli(b), param_name_of(m)));
            }
        }
    }
    if (!all && which != "dr" && which != "dolbeault" && which != "bc" && which != "aeppli") {
        throw Error(ErrorCode::Usage, "unknown theory '" + which + "'");
    }
    out << serialize_report(r, format);
    return 0;
}

int run_ddbar(const CommonArgs& args, Format format, std::ostream& out) {
    Model m = parse_model_file(args.model_path);
    require_valid(m);
    Bicomplex b = bigrade_split(m);
    DdbarVerdict verdict = ddbar_check(b);
    Report r = base_report(m, std::nullopt);
    CheckEntryOut entry;
    entry.name = "ddbar-lemma";
    entry.verdict = verdict.holds ? "holds" : "fails";
    if (!verdict.holds) {
        entry.witness = format_form(*verdict.witness, param_name_of(m)) + " at (" +
                        std::to_string(verdict.p) + "," + std::to_string(verdict.q) + "): " +
                        verdict.failed_clause;
    }
    r.checks.push_back(std::move(entry));
    out << serialize_report(r, format);
    return verdict.holds ? 0 : 1;
}

int run_froelicher(const CommonArgs& args, Format format, std::ostream& out) {
    Model m = parse_model_file(args.model_path);
    require_valid(m);
    Bicomplex b = bigrade_split(m);
    GradedComplex total = full_complex(m);
    FroelicherReport report = froelicher_inequality_report(b, total);
    SpectralPages pages = froelicher_pages(b);
    Report r = base_report(m, std::nullopt);
    r.froelicher = lower_froelicher(report);
    r.pages = lower_pages(pages);
    out << serialize_report(r, format);
    return report.inequality_holds ? 0 : 1;
}

int run_hodge(const CommonArgs& args, Format format, std::ostream& out) {
    Model m = parse_model_file(args.model_path);
    require_valid(m);
    Report r = base_report(m, optional_at(args));
    bool ok = true;
    if (m.fully_typed()) {
        Bicomplex b = bigrade_split(m);
        HodgeReport report = decomposition_check(b);
        auto rows = lower_hodge(report);
        r.checks.insert(r.checks.end(), rows.begin(), rows.end());
        ok = ok && report.ok();
    }
    if (m.has_iota) {
        std::optional<Rational> at = optional_at(args);
        if (!at.has_value()) {
            throw Error(ErrorCode::Usage, "lie skewness on a family requires --at");
        }
        HodgeReport report = lie_skewness_check(m, *at);
        auto rows = lower_hodge(report);
        r.checks.insert(r.checks.end(), rows.begin(), rows.end());
        ok = ok && report.ok();
    }
    if (r.checks.empty()) {
        throw Error(ErrorCode::Usage,
                    "model is neither bigraded nor a foliation family; nothing to check");
    }
    out << serialize_report(r, format);
    return ok ? 0 : 1;
}

int run_duality(const CommonArgs& args, Format format, std::ostream& out) {
    Model m = parse_model_file(args.model_path);
    require_valid(m);
    Bicomplex b = bigrade_split(m);
    MetricContext ctx = metric_context(m);
    GradedComplex total = full_complex(m);
    HodgeReport report = duality_check(b, ctx, total);
    Report r = base_report(m, std::nullopt);
    r.checks = lower_hodge(report);
    out << serialize_report(r, format);
    return report.ok() ? 0 : 1;
}

int run_kaehler(const CommonArgs& args, Format format, std::ostream& out) {
    Model m = parse_model_file(args.model_path);
    require_valid(m);
    Bicomplex b = bigrade_split(m);
    KaehlerVerdict verdict = kaehler_witness(b, args.trials, args.seed);
    Report r = base_report(m, std::nullopt);
    CheckEntryOut entry;
    entry.name = "kaehler-witness";
    switch (verdict.kind) {
        case KaehlerVerdict::Kind::Witness: {
            entry.verdict = "witness";
            MetricContext ctx = metric_context(m);
            bool verified = verify_kaehler_witness(b, ctx, *verdict.witness);
            entry.witness = format_form(*verdict.witness, param_name_of(m)) +
                            (verified ? "" : " (FAILED re-verification)");
            if (!verified) entry.verdict = "fail";
            break;
        }
        case KaehlerVerdict::Kind::ImpossibleNondegenerate:
            entry.verdict = "impossible-nondegenerate";
            break;
        case KaehlerVerdict::Kind::Inconclusive:
            entry.verdict = "inconclusive";
            entry.witness = "after " + std::to_string(verdict.trials_used) + " trials";
            break;
    }
    bool success = verdict.kind == KaehlerVerdict::Kind::Witness && entry.verdict == "witness";
    r.checks.push_back(std::move(entry));
    out << serialize_report(r, format);
    return success ? 0 : 1;
}

int run_sweep(const CommonArgs& args, Format format, std::ostream& out) {
    Model m = parse_model_file(args.model_path);
    require_valid(m);
    if (args.grid_text.empty()) {
        throw Error(ErrorCode::Usage, "sweep requires --grid");
    }
    std::vector<Rational> grid = parse_grid(args.grid_text);
    std::optional<Rational> reference;
    if (!args.reference_text.empty()) reference = parse_at(args.reference_text);
    SweepReport report = parameter_sweep(m, grid, reference);
    Report r = base_report(m, std::nullopt);
    r.sweep = lower_sweep(report, param_name_of(m));
    out << serialize_report(r, format);
    return 0;
}

int run_orient(const CommonArgs& args, Format format, std::ostream& out) {
    Model m = parse_model_file(args.model_path);
    require_valid(m);
    std::optional<Rational> at = optional_at(args);
    GradedComplex complex = invariant_complex(m, at);
    bool orientable = homological_orientability_check(complex);
    Report r = base_report(m, at);
    CheckEntryOut entry;
    entry.name = "homological-orientability";
    entry.verdict = orientable ? "pass" : "fail";
    int top = complex.top_nonzero_degree();
    if (orientable && top >= 0) {
        CohomologyTable dr = de_rham(complex);
        for (const auto& e : dr.entries) {
            if (e.p == top && !e.representatives.empty()) {
                entry.witness = format_form(e.representatives.front(), param_name_of(m));
            }
        }
    }
    r.checks.push_back(std::move(entry));
    out << serialize_report(r, format);
    return orientable ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact cohomology diagnostics for foliated differential-algebra models"};
    app.name("folcoh");
    app.require_subcommand(1);

    struct Command {
        const char* name;
        const char* help;
        bool with_grid;
        int (*run)(const CommonArgs&, Format, std::ostream&);
    };
    static const Command commands[] = {
        {"validate", "parse a model and run its consistency checks", false, run_validate},
        {"cohomology", "de Rham / Dolbeault / Bott-Chern / Aeppli tables", false, run_cohomology},
        {"ddbar", "decide the del-delbar lemma", false, run_ddbar},
        {"froelicher", "inequality table and spectral-sequence pages", false, run_froelicher},
        {"hodge", "laplacian kernels and decompositions", false, run_hodge},
        {"duality", "Bott-Chern/Aeppli star duality", false, run_duality},
        {"kaehler", "search for a transverse Kaehler witness", false, run_kaehler},
        {"sweep", "evaluate a deformation family on a grid", true, run_sweep},
        {"orient", "homological orientability", false, run_orient},
    };

    std::vector<CommonArgs> parsed(std::size(commands));
    std::vector<CLI::App*> subs;
    for (size_t k = 0; k < std::size(commands); ++k) {
        CLI::App* sub = app.add_subcommand(commands[k].name, commands[k].help);
        add_common(sub, parsed[k], commands[k].with_grid);
        subs.push_back(sub);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    }

    for (size_t k = 0; k < std::size(commands); ++k) {
        if (!subs[k]->parsed()) continue;
        try {
            std::optional<Format> format = parse_format(parsed[k].format_name);
            if (!format.has_value()) {
                throw Error(ErrorCode::Usage, "unknown format '" + parsed[k].format_name + "'");
            }
            return commands[k].run(parsed[k], *format, out);
        } catch (const Error& e) {
            err << e.what() << "\n";
            return e.code() == ErrorCode::InvalidModel ? 1 : 2;
        }
    }
    err << "usage: a subcommand is required\n";
    return 2;
}

}  // namespace folcoh
