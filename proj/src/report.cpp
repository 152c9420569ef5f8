#include "wklab/report.hpp"

#include <json.hpp>

#include "wklab/graph_io.hpp"
#include "wklab/independent.hpp"

namespace wklab {

namespace {

using json = nlohmann::ordered_json;

json set_to_json(const VertexSet& s) {
    json a = json::array();
    for (int v : s) a.push_back(v);
    return a;
}

json family_to_json(const IndependentFamily& f) {
    json a = json::array();
    for (const auto& s : f.sets()) a.push_back(set_to_json(s));
    return a;
}

json graph_summary(const Graph& g) {
    return json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"graph6", emit_graph6(g)}};
}

void finish(json& j, const ReportOptions& opt, double elapsed_ms) {
    if (opt.vertex_names) j["vertex_names"] = *opt.vertex_names;
    if (opt.include_timings) j["elapsed_ms"] = elapsed_ms;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string check_report_json(const Graph& g, int k, const WkReport& r, const ReportOptions& opt) {
    json j{{"schema", kReportSchema},
           {"command", "check"},
           {"k", k},
           {"graph", graph_summary(g)},
           {"property", r.property},
           {"verdict", r.verdict},
           {"alpha", r.alpha},
           {"beta", r.beta}};
    j["witness"] = r.witness ? family_to_json(*r.witness) : json(nullptr);
    finish(j, opt, r.elapsed.count());
    return dump(j);
}

std::string reduce_report_json(const Graph& base, int k, const Graph& product,
                               const ReductionCheck& check, const ReportOptions& opt) {
    json j{{"schema", kReportSchema},
           {"command", "reduce"},
           {"k", k},
           {"base", graph_summary(base)},
           {"product", graph_summary(product)},
           {"base_well_covered", check.base_well_covered},
           {"product_wk", check.product_wk},
           {"reduction_consistent", check.consistent()}};
    finish(j, opt, 0);
    return dump(j);
}

std::string refutation_report_json(const RefutationReport& r, const ReportOptions& opt) {
    json j{{"schema", kReportSchema},
           {"command", "conjecture"},
           {"s", r.s},
           {"t", r.t},
           {"condition_variant", r.variant == ConditionVariant::closed ? "closed" : "open"},
           {"condition_holds", r.condition_holds},
           {"well_covered", r.well_covered},
           {"w2", r.w2},
           {"refutation_confirmed", r.confirmed()}};
    json ws = json::array();
    for (const auto& w : r.witnesses)
        ws.push_back(json{{"size", w.count()}, {"vertices", set_to_json(w)}});
    j["witnesses"] = ws;
    finish(j, opt, 0);
    return dump(j);
}

std::string condition_report_json(const Graph& g, const ConditionResult& r,
                                  const ReportOptions& opt) {
    json j{{"schema", kReportSchema},
           {"command", "conjecture"},
           {"graph", graph_summary(g)},
           {"condition_variant", r.variant == ConditionVariant::closed ? "closed" : "open"},
           {"condition_holds", r.holds}};
    json trace = json::array();
    const ConditionTraceEntry* first_violation = nullptr;
    for (const auto& e : r.trace) {
        trace.push_back(json{{"v", e.v},
                             {"s", set_to_json(e.s)},
                             {"residual", set_to_json(e.residual)},
                             {"max_independent_size", e.max_independent_size},
                             {"ok", e.ok}});
        if (!e.ok && !first_violation) first_violation = &e;
    }
    j["first_violation"] = first_violation
                               ? json{{"v", first_violation->v},
                                      {"s", set_to_json(first_violation->s)},
                                      {"residual", set_to_json(first_violation->residual)},
                                      {"max_independent_size",
                                       first_violation->max_independent_size}}
                               : json(nullptr);
    j["trace"] = trace;
    finish(j, opt, 0);
    return dump(j);
}

std::string treewidth_report_json(const Graph& g, const TreewidthReport& r,
                                  const ReportOptions& opt) {
    json j{{"schema", kReportSchema},
           {"command", "treewidth"},
           {"graph", graph_summary(g)},
           {"width", r.width},
           {"dp_alpha", r.alpha},
           {"dp_beta", r.beta},
           {"well_covered", r.well_covered}};
    j["brute_force_agrees"] = r.brute_force_agrees ? json(*r.brute_force_agrees) : json(nullptr);
    finish(j, opt, 0);
    return dump(j);
}

CensusRow census_row(const Graph& g, std::string id, const std::vector<int>& ks) {
    CensusRow row;
    row.id = std::move(id);
    row.n = g.vertex_count();
    row.m = g.edge_count();
    WkReport wc = is_well_covered(g);
    row.alpha = wc.alpha;
    row.beta = wc.beta;
    row.wk.reserve(ks.size());
    for (int k : ks) row.wk.push_back(k == 1 ? wc.verdict : is_wk(g, k).verdict);
    row.one_well_covered = is_one_well_covered(g);
    row.condition_closed = check_levit_tankus_condition(g, ConditionVariant::closed).holds;
    row.condition_open = check_levit_tankus_condition(g, ConditionVariant::open).holds;
    return row;
}

std::string census_csv(const std::vector<CensusRow>& rows, const std::vector<int>& ks) {
    std::string out = "id,n,m,alpha,beta";
    for (int k : ks) out += ",W" + std::to_string(k);
    out += ",one_well_covered,condition_closed,condition_open\n";

    std::vector<long long> wk_counts(ks.size(), 0);
    long long owc = 0, cc = 0, co = 0;
    for (const auto& r : rows) {
        out += r.id + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
               std::to_string(r.alpha) + "," + std::to_string(r.beta);
        for (size_t i = 0; i < ks.size(); ++i) {
            out += r.wk[i] ? ",1" : ",0";
            if (r.wk[i]) ++wk_counts[i];
        }
        out += r.one_well_covered ? ",1" : ",0";
        out += r.condition_closed ? ",1" : ",0";
        out += r.condition_open ? ",1" : ",0";
        out += "\n";
        owc += r.one_well_covered;
        cc += r.condition_closed;
        co += r.condition_open;
    }
    out += "# summary\n";
    out += "# rows " + std::to_string(rows.size()) + "\n";
    for (size_t i = 0; i < ks.size(); ++i)
        out += "# W" + std::to_string(ks[i]) + " " + std::to_string(wk_counts[i]) + "\n";
    out += "# one_well_covered " + std::to_string(owc) + "\n";
    out += "# condition_closed " + std::to_string(cc) + "\n";
    out += "# condition_open " + std::to_string(co) + "\n";
    return out;
}

} // namespace wklab
