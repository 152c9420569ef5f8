#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "wklab/enumerate.hpp"
#include "wklab/independent.hpp"
#include "wklab/report.hpp"
#include "wklab/wk.hpp"

using namespace wklab;
using nlohmann::json;

namespace {

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

} // namespace

TEST_CASE("check report carries schema, verdicts and a re-validating witness") {
    Graph c4 = Graph::cycle(4);
    WkReport r = is_wk(c4, 2);
    std::string text = check_report_json(c4, 2, r, {});
    json j = json::parse(text);
    CHECK(j["schema"] == "wk-lab/1");
    CHECK(j["command"] == "check");
    CHECK(j["property"] == "W2");
    CHECK(j["verdict"] == false);
    CHECK(j["alpha"] == 2);
    CHECK(j["beta"] == 2);
    CHECK(j["graph"]["n"] == 4);

    // witness from the report re-validates through the library
    std::vector<VertexSet> sets;
    for (const auto& arr : j["witness"]) {
        VertexSet s(4);
        for (int v : arr) s.add(v);
        sets.push_back(s);
    }
    IndependentFamily fam(sets);
    CHECK(!fam.validate(c4).has_value());
    CHECK_FALSE(find_disjoint_maximum_extensions(c4, fam).has_value());
}

TEST_CASE("reports are byte-stable unless timings are requested") {
    Graph c5 = Graph::cycle(5);
    WkReport r1 = is_wk(c5, 2);
    WkReport r2 = is_wk(c5, 2);
    CHECK(check_report_json(c5, 2, r1, {}) == check_report_json(c5, 2, r2, {}));

    ReportOptions timed;
    timed.include_timings = true;
    CHECK(check_report_json(c5, 2, r1, timed).find("elapsed_ms") != std::string::npos);
    CHECK(check_report_json(c5, 2, r1, {}).find("elapsed_ms") == std::string::npos);
}

TEST_CASE("refutation report fields") {
    auto r = refute_conjecture(2, 3);
    json j = json::parse(refutation_report_json(r, {}));
    CHECK(j["s"] == 2);
    CHECK(j["t"] == 3);
    CHECK(j["condition_variant"] == "closed");
    CHECK(j["condition_holds"] == true);
    CHECK(j["well_covered"] == false);
    CHECK(j["w2"] == false);
    CHECK(j["refutation_confirmed"] == true);
    REQUIRE(j["witnesses"].size() == 2);
    CHECK(j["witnesses"][0]["size"] == 2);
    CHECK(j["witnesses"][1]["size"] == 3);
}

TEST_CASE("condition report points at the first violation") {
    Graph c4 = Graph::cycle(4);
    auto r = check_levit_tankus_condition(c4, ConditionVariant::closed);
    json j = json::parse(condition_report_json(c4, r, {}));
    CHECK(j["condition_holds"] == false);
    CHECK(j["first_violation"]["v"] == 0);
    CHECK(j["first_violation"]["s"] == json::array({2}));
    CHECK(j["trace"].size() == r.trace.size());
}

TEST_CASE("census rows satisfy the row-level implications on small sweeps") {
    std::vector<int> ks = {1, 2};
    for (int n = 1; n <= 4; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g, uint64_t mask) {
            CensusRow row = census_row(g, "n" + std::to_string(n) + "m" + std::to_string(mask), ks);
            if (row.wk[1]) CHECK(row.wk[0]);                       // W2 implies W1
            if (row.wk[1]) CHECK_FALSE(has_isolated_vertex(g));    // W2 implies no isolated
            CHECK(row.wk[1] == (row.one_well_covered && !has_isolated_vertex(g)));
            CHECK(row.alpha >= row.beta);
            CHECK(row.wk[0] == (row.alpha == row.beta));
        });
    }
}

TEST_CASE("census summary counts equal the column sums") {
    std::vector<int> ks = {1, 2};
    std::vector<CensusRow> rows;
    long long w1 = 0, w2 = 0, owc = 0, cc = 0, co = 0;
    for_each_labeled_graph(4, [&](const Graph& g, uint64_t mask) {
        rows.push_back(census_row(g, "m" + std::to_string(mask), ks));
        const auto& r = rows.back();
        w1 += r.wk[0];
        w2 += r.wk[1];
        owc += r.one_well_covered;
        cc += r.condition_closed;
        co += r.condition_open;
    });
    std::string csv = census_csv(rows, ks);
    CHECK(csv.find("# rows 64\n") != std::string::npos);
    CHECK(csv.find("# W1 " + std::to_string(w1) + "\n") != std::string::npos);
    CHECK(csv.find("# W2 " + std::to_string(w2) + "\n") != std::string::npos);
    CHECK(csv.find("# one_well_covered " + std::to_string(owc) + "\n") != std::string::npos);
    CHECK(csv.find("# condition_closed " + std::to_string(cc) + "\n") != std::string::npos);
    CHECK(csv.find("# condition_open " + std::to_string(co) + "\n") != std::string::npos);
    // header + 64 rows + 6 summary lines
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 64 + 7);
}

TEST_CASE("treewidth report serialization") {
    TreewidthReport r;
    r.width = 2;
    r.alpha = 2;
    r.beta = 2;
    r.well_covered = true;
    r.brute_force_agrees = true;
    json j = json::parse(treewidth_report_json(Graph::cycle(4), r, {}));
    CHECK(j["width"] == 2);
    CHECK(j["dp_alpha"] == 2);
    CHECK(j["dp_beta"] == 2);
    CHECK(j["well_covered"] == true);
    CHECK(j["brute_force_agrees"] == true);
}

TEST_CASE("vertex names appear when the input had its own naming") {
    Graph p3 = Graph::path(3);
    ReportOptions opt;
    opt.vertex_names = std::vector<std::string>{"1", "2", "3"};
    json j = json::parse(check_report_json(p3, 1, is_wk(p3, 1), opt));
    CHECK(j["vertex_names"] == json::array({"1", "2", "3"}));
}
