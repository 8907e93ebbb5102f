#include "folcoh/report.hpp"

#include <json.hpp>

#include <sstream>

namespace folcoh {

using Json = nlohmann::ordered_json;

std::optional<Format> parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    return std::nullopt;
}

TheoryTableOut lower_table(const CohomologyTable& table, const std::string& param_name) {
    TheoryTableOut out;
    out.name = theory_name(table.theory);
    for (const auto& entry : table.entries) {
        TheoryEntryOut row;
        row.p = entry.p;
        row.q = entry.q;
        row.dim = entry.dim;
        for (const auto& rep : entry.representatives) {
            row.representatives.push_back(format_form(rep, param_name));
        }
        out.table.push_back(std::move(row));
    }
    return out;
}

std::vector<CheckEntryOut> lower_validation(const ValidationReport& report) {
    std::vector<CheckEntryOut> out;
    for (const auto& check : report.checks) {
        CheckEntryOut row;
        row.name = check.name;
        row.verdict = check.passed ? "pass" : (check.warning_only ? "warn" : "fail");
        row.witness = check.witness;
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<CheckEntryOut> lower_hodge(const HodgeReport& report) {
    std::vector<CheckEntryOut> out;
    for (const auto& check : report.checks) {
        out.push_back({check.name, check.passed ? "pass" : "fail", check.detail});
    }
    return out;
}

FroelicherOut lower_froelicher(const FroelicherReport& report) {
    FroelicherOut out;
    out.inequality_holds = report.inequality_holds;
    out.equality_everywhere = report.equality_everywhere;
    for (const auto& row : report.rows) {
        out.rows.push_back({row.degree, row.lhs, row.rhs, row.slack()});
    }
    return out;
}

PagesOut lower_pages(const SpectralPages& pages) {
    PagesOut out;
    out.degeneration_page = pages.degeneration_page;
    for (size_t r = 0; r < pages.pages.size(); ++r) {
        for (const auto& [pq, dim] : pages.pages[r]) {
            out.entries.push_back({static_cast<int>(r) + 1, pq.first, pq.second, dim});
        }
    }
    return out;
}

SweepOut lower_sweep(const SweepReport& report, const std::string& param_name) {
    SweepOut out;
    for (const auto& point : report.points) {
        SweepPointOut row;
        row.value = format_rational(point.value);
        row.dims = point.dims;
        row.subcomplex_dims = point.subcomplex_dims;
        row.orientable = point.orientable;
        if (point.top_representative.has_value()) {
            row.top_representative = format_form(*point.top_representative, param_name);
        }
        out.points.push_back(std::move(row));
    }
    out.jumps = report.jumps;
    out.reference_index = report.reference_index;
    out.dominated_by_reference = report.dominated_by_reference;
    return out;
}

namespace {

Json to_json(const Report& r) {
    Json j = Json::object();
    if (!r.model.empty()) j["model"] = r.model;
    if (r.parameter_value.has_value()) j["parameter_value"] = *r.parameter_value;
    j["theories"] = Json::array();
    for (const auto& theory : r.theories) {
        Json t = Json::object();
        t["name"] = theory.name;
        t["table"] = Json::array();
        for (const auto& row : theory.table) {
            Json e = Json::object();
            e["p"] = row.p;
            e["q"] = row.q;
            e["dim"] = row.dim;
            e["representatives"] = row.representatives;
            t["table"].push_back(std::move(e));
        }
        j["theories"].push_back(std::move(t));
    }
    if (!r.checks.empty()) {
        j["checks"] = Json::array();
        for (const auto& check : r.checks) {
            Json c = Json::object();
            c["name"] = check.name;
            c["verdict"] = check.verdict;
            if (!check.witness.empty()) c["witness"] = check.witness;
            j["checks"].push_back(std::move(c));
        }
    }
    if (r.froelicher.has_value()) {
        Json f = Json::object();
        f["rows"] = Json::array();
        for (const auto& row : r.froelicher->rows) {
            Json e = Json::object();
            e["k"] = row.degree;
            e["lhs"] = row.lhs;
            e["rhs"] = row.rhs;
            e["slack"] = row.slack;
            f["rows"].push_back(std::move(e));
        }
        f["inequality_holds"] = r.froelicher->inequality_holds;
        f["equality_everywhere"] = r.froelicher->equality_everywhere;
        j["froelicher"] = std::move(f);
    }
    if (r.pages.has_value()) {
        Json p = Json::object();
        p["entries"] = Json::array();
        for (const auto& e : r.pages->entries) {
            Json row = Json::object();
            row["r"] = e.r;
            row["p"] = e.p;
            row["q"] = e.q;
            row["dim"] = e.dim;
            p["entries"].push_back(std::move(row));
        }
        p["degeneration_page"] = r.pages->degeneration_page;
        j["pages"] = std::move(p);
    }
    if (r.sweep.has_value()) {
        Json s = Json::object();
        s["points"] = Json::array();
        for (const auto& point : r.sweep->points) {
            Json e = Json::object();
            e["s"] = point.value;
            e["dims"] = point.dims;
            e["subcomplex_dims"] = point.subcomplex_dims;
            e["orientable"] = point.orientable;
            if (!point.top_representative.empty()) {
                e["top_representative"] = point.top_representative;
            }
            s["points"].push_back(std::move(e));
        }
        s["jumps"] = Json::array();
        for (const auto& [a, b] : r.sweep->jumps) {
            s["jumps"].push_back(Json::array({a, b}));
        }
        if (r.sweep->reference_index.has_value()) {
            s["reference_index"] = *r.sweep->reference_index;
            s["dominated_by_reference"] = r.sweep->dominated_by_reference;
        }
        j["sweep"] = std::move(s);
    }
    return j;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string to_csv(const Report& r) {
    std::ostringstream out;
    if (!r.theories.empty()) {
        out << "theory,p,q,dim\n";
        for (const auto& theory : r.theories) {
            for (const auto& row : theory.table) {
                out << theory.name << "," << row.p << "," << row.q << "," << row.dim << "\n";
            }
        }
    }
    for (const auto& check : r.checks) {
        out << "check," << csv_escape(check.name) << "," << check.verdict << ","
            << csv_escape(check.witness) << "\n";
    }
    if (r.froelicher.has_value()) {
        for (const auto& row : r.froelicher->rows) {
            out << "froelicher," << row.degree << "," << row.lhs << "," << row.rhs << ","
                << row.slack << "\n";
        }
    }
    if (r.pages.has_value()) {
        for (const auto& e : r.pages->entries) {
            out << "page," << e.r << "," << e.p << "," << e.q << "," << e.dim << "\n";
        }
        out << "degeneration," << r.pages->degeneration_page << "\n";
    }
    if (r.sweep.has_value()) {
        for (const auto& point : r.sweep->points) {
            for (size_t k = 0; k < point.dims.size(); ++k) {
                out << "sweep," << point.value << "," << k << "," << point.dims[k] << "\n";
            }
            out << "orientable," << point.value << "," << (point.orientable ? 1 : 0) << "\n";
        }
        for (const auto& [a, b] : r.sweep->jumps) out << "jump," << a << "," << b << "\n";
    }
    return out.str();
}

std::string to_text(const Report& r) {
    std::ostringstream out;
    if (!r.model.empty()) out << "model: " << r.model << "\n";
    if (r.parameter_value.has_value()) out << "parameter: " << *r.parameter_value << "\n";
    for (const auto& theory : r.theories) {
        out << "theory " << theory.name << "\n";
        for (const auto& row : theory.table) {
            if (row.q < 0) {
                out << "  k=" << row.p;
            } else {
                out << "  (p,q)=(" << row.p << "," << row.q << ")";
            }
            out << "  dim " << row.dim;
            if (!row.representatives.empty()) {
                out << "  [";
                for (size_t k = 0; k < row.representatives.size(); ++k) {
                    if (k > 0) out << "; ";
                    out << row.representatives[k];
                }
                out << "]";
            }
            out << "\n";
        }
    }
    if (!r.checks.empty()) {
        out << "checks:\n";
        for (const auto& check : r.checks) {
            out << "  [" << check.verdict << "] " << check.name;
            if (!check.witness.empty()) out << "  " << check.witness;
            out << "\n";
        }
    }
    if (r.froelicher.has_value()) {
        out << "froelicher inequality (lhs = sum h_BC + h_A, rhs = 2 h_dR):\n";
        for (const auto& row : r.froelicher->rows) {
            out << "  k=" << row.degree << "  lhs " << row.lhs << "  rhs " << row.rhs
                << "  slack " << row.slack << "\n";
        }
        out << "  inequality " << (r.froelicher->inequality_holds ? "holds" : "VIOLATED")
            << ", equality " << (r.froelicher->equality_everywhere ? "everywhere" : "fails")
            << "\n";
    }
    if (r.pages.has_value()) {
        int current = 0;
        for (const auto& e : r.pages->entries) {
            if (e.r != current) {
                out << "page E_" << e.r << ":\n";
                current = e.r;
            }
            out << "  (" << e.p << "," << e.q << ") dim " << e.dim << "\n";
        }
        out << "degenerates at E_" << r.pages->degeneration_page << "\n";
    }
    if (r.sweep.has_value()) {
        out << "sweep:\n";
        for (size_t i = 0; i < r.sweep->points.size(); ++i) {
            const auto& point = r.sweep->points[i];
            out << "  s=" << point.value << "  dims (";
            for (size_t k = 0; k < point.dims.size(); ++k) {
                if (k > 0) out << ",";
                out << point.dims[k];
            }
            out << ")  orientable " << (point.orientable ? "yes" : "no");
            if (!point.top_representative.empty()) {
                out << "  top [" << point.top_representative << "]";
            }
            if (r.sweep->reference_index.has_value() &&
                i < r.sweep->dominated_by_reference.size()) {
                out << "  <=ref " << (r.sweep->dominated_by_reference[i] ? "yes" : "no");
            }
            out << "\n";
        }
        if (r.sweep->jumps.empty()) {
            out << "  no jumps\n";
        } else {
            for (const auto& [a, b] : r.sweep->jumps) {
                out << "  jump between s=" << r.sweep->points[a].value
                    << " and s=" << r.sweep->points[b].value << "\n";
            }
        }
    }
    return out.str();
}

}  // namespace

std::string serialize_report(const Report& r, Format format) {
    switch (format) {
        case Format::Json: return to_json(r).dump() + "\n";
        case Format::Csv: return to_csv(r);
        case Format::Text: return to_text(r);
    }
    return "";
}

}  // namespace folcoh
