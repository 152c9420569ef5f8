#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wklab/conjecture.hpp"
#include "wklab/graph.hpp"
#include "wklab/lexproduct.hpp"
#include "wklab/wk.hpp"

namespace wklab {

inline constexpr const char* kReportSchema = "wk-lab/1";

struct ReportOptions {
    // Timings vary run to run; leaving them out keeps reports byte-stable.
    bool include_timings = false;
    // Input-file vertex names, included when they differ from internal ids.
    std::optional<std::vector<std::string>> vertex_names;
};

std::string check_report_json(const Graph& g, int k, const WkReport& r, const ReportOptions& opt);

std::string reduce_report_json(const Graph& base, int k, const Graph& product,
                               const ReductionCheck& check, const ReportOptions& opt);

std::string refutation_report_json(const RefutationReport& r, const ReportOptions& opt);

std::string condition_report_json(const Graph& g, const ConditionResult& r,
                                  const ReportOptions& opt);

struct TreewidthReport {
    int width = -1;
    int alpha = 0;
    int beta = 0;
    bool well_covered = false;
    std::optional<bool> brute_force_agrees; // set when n is small enough to check
};

std::string treewidth_report_json(const Graph& g, const TreewidthReport& r,
                                  const ReportOptions& opt);

// One census line: verdict columns for a single graph.
struct CensusRow {
    std::string id;
    int n = 0;
    int m = 0;
    int alpha = 0;
    int beta = 0;
    std::vector<bool> wk; // per requested k, in order
    bool one_well_covered = false;
    bool condition_closed = false;
    bool condition_open = false;
};

CensusRow census_row(const Graph& g, std::string id, const std::vector<int>& ks);

// Header, one row per graph, then a '#'-prefixed summary block whose counts
// equal the column sums.
std::string census_csv(const std::vector<CensusRow>& rows, const std::vector<int>& ks);

} // namespace wklab
