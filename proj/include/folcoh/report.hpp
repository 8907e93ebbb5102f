#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folcoh/analysis.hpp"

namespace folcoh {

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(const std::string& name);

struct TheoryEntryOut {
    int p = 0;
    int q = -1;
    Index dim = 0;
    std::vector<std::string> representatives;
};

struct TheoryTableOut {
    std::string name;
    std::vector<TheoryEntryOut> table;
};

struct CheckEntryOut {
    std::string name;
    std::string verdict;  // "pass" | "fail" | "warn" | free-form verdicts
    std::string witness;  // empty when absent
};

struct FroelicherRowOut {
    int degree;
    Index lhs;
    Index rhs;
    Index slack;
};

struct FroelicherOut {
    std::vector<FroelicherRowOut> rows;
    bool inequality_holds = true;
    bool equality_everywhere = true;
};

struct PageEntryOut {
    int r;
    int p;
    int q;
    Index dim;
};

struct PagesOut {
    std::vector<PageEntryOut> entries;
    int degeneration_page = 1;
};

struct SweepPointOut {
    std::string value;
    std::vector<Index> dims;
    std::vector<Index> subcomplex_dims;
    bool orientable = false;
    std::string top_representative;  // empty when absent
};

struct SweepOut {
    std::vector<SweepPointOut> points;
    std::vector<std::pair<size_t, size_t>> jumps;
    std::optional<size_t> reference_index;
    std::vector<bool> dominated_by_reference;
};

/// One serializable result. JSON field order is fixed: model,
/// parameter_value, theories, checks, froelicher, pages, sweep; empty
/// sections are omitted, `theories` always appears.
struct Report {
    std::string model;
    std::optional<std::string> parameter_value;
    std::vector<TheoryTableOut> theories;
    std::vector<CheckEntryOut> checks;
    std::optional<FroelicherOut> froelicher;
    std::optional<PagesOut> pages;
    std::optional<SweepOut> sweep;
};

std::string serialize_report(const Report& r, Format format);

// Lowerings from engine results to report rows.
TheoryTableOut lower_table(const CohomologyTable& table, const std::string& param_name);
std::vector<CheckEntryOut> lower_validation(const ValidationReport& report);
std::vector<CheckEntryOut> lower_hodge(const HodgeReport& report);
FroelicherOut lower_froelicher(const FroelicherReport& report);
PagesOut lower_pages(const SpectralPages& pages);
SweepOut lower_sweep(const SweepReport& report, const std::string& param_name);

}  // namespace folcoh
