// wklab: batch front end for the W_k recognizers, the clique-product
// reduction, the matching-join conjecture lab, census sweeps and the
// tree-decomposition route to well-coveredness.
//
// Exit codes: 0 property holds / success, 1 property fails, 2 usage or
// input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wklab/conjecture.hpp"
#include "wklab/enumerate.hpp"
#include "wklab/graph_io.hpp"
#include "wklab/independent.hpp"
#include "wklab/lexproduct.hpp"
#include "wklab/parallel.hpp"
#include "wklab/report.hpp"
#include "wklab/treewidth.hpp"
#include "wklab/wk.hpp"

namespace {

using namespace wklab;

struct InputOptions {
    std::string path = "-";
    std::string format;
};

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GraphFormat pick_format(const InputOptions& in, const std::string& text) {
    if (!in.format.empty()) {
        auto f = format_from_name(in.format);
        if (!f) throw std::runtime_error("unknown format '" + in.format + "'");
        return *f;
    }
    auto dot = in.path.rfind('.');
    if (dot != std::string::npos) {
        auto f = format_from_name(in.path.substr(dot + 1));
        if (f) return *f;
    }
    return sniff_format(text);
}

ParsedGraph load_graph(const InputOptions& in) {
    std::string text = read_all(in.path);
    return parse_graph(text, pick_format(in, text));
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--input,-i", in.path, "graph file, or - for stdin")->capture_default_str();
    cmd->add_option("--format,-f", in.format, "graph6 | dimacs | edgelist (default: sniff)");
}

ReportOptions report_options(bool timings, const ParsedGraph* pg) {
    ReportOptions opt;
    opt.include_timings = timings;
    if (pg) {
        bool identity = true;
        for (size_t v = 0; v < pg->vertex_names.size() && identity; ++v)
            identity = pg->vertex_names[v] == std::to_string(v);
        if (!identity) opt.vertex_names = pg->vertex_names;
    }
    return opt;
}

int run(int argc, char** argv) {
    CLI::App app{"wk-lab: recognizers and experiments around W_k graphs"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "decide whether a graph is W_k");
    InputOptions check_in;
    int check_k = 1;
    bool check_timings = false;
    std::string check_out;
    add_input_options(check, check_in);
    check->add_option("--k,-k", check_k, "which W_k to test (k >= 1)")->required();
    check->add_flag("--timings", check_timings, "include elapsed_ms in the report");
    check->add_option("--output,-o", check_out, "report path (default stdout)");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "emit the clique product G*K_k");
    InputOptions reduce_in;
    int reduce_k = 2;
    bool reduce_verify = false, reduce_timings = false;
    std::string reduce_out, reduce_emit = "graph6";
    add_input_options(reduce, reduce_in);
    reduce->add_option("--k,-k", reduce_k, "clique size (k >= 1)")->required();
    reduce->add_flag("--verify", reduce_verify,
                     "also test both sides: base well-covered vs product W_k");
    reduce->add_option("--emit-format", reduce_emit, "graph6 | dimacs | edgelist")
        ->capture_default_str();
    reduce->add_flag("--timings", reduce_timings, "include elapsed_ms in the report");
    reduce->add_option("--output,-o", reduce_out, "output path (default stdout)");

    // conjecture
    auto* conj = app.add_subcommand(
        "conjecture", "matching-join refutation, or the condition trace of a graph");
    InputOptions conj_in;
    int conj_s = 0, conj_t = 0;
    std::string conj_variant = "closed", conj_out;
    bool conj_timings = false;
    auto* opt_s = conj->add_option("--s,-s", conj_s, "size of the A-side matching");
    auto* opt_t = conj->add_option("--t,-t", conj_t, "size of the B-side matching");
    opt_s->needs(opt_t);
    opt_t->needs(opt_s);
    add_input_options(conj, conj_in);
    conj->add_option("--variant", conj_variant, "closed: N(v)\\N(S); open: N(v)\\S")
        ->capture_default_str();
    conj->add_flag("--timings", conj_timings, "include elapsed_ms in the report");
    conj->add_option("--output,-o", conj_out, "report path (default stdout)");

    // census
    auto* census = app.add_subcommand("census", "verdict table over many graphs (CSV)");
    InputOptions census_in;
    int census_nmin = -1, census_nmax = -1, census_threads = default_thread_count();
    std::string census_klist = "1,2", census_out;
    census->add_option("--n-min", census_nmin, "enumerate all labeled graphs from this order");
    census->add_option("--n-max", census_nmax, "... up to this order (at most 7)");
    add_input_options(census, census_in);
    census->add_option("--k-list", census_klist, "comma-separated k values")
        ->capture_default_str();
    census->add_option("--threads", census_threads,
                       "worker threads (default: WKLAB_THREADS or 1)");
    census->add_option("--output,-o", census_out, "CSV path (default stdout)");

    // treewidth
    auto* tw = app.add_subcommand("treewidth",
                                  "alpha/beta dynamic programs over a tree decomposition");
    InputOptions tw_in;
    std::string tw_decomp, tw_out;
    bool tw_timings = false;
    add_input_options(tw, tw_in);
    tw->add_option("--decomposition", tw_decomp,
                   "decomposition file (default: min-fill heuristic)");
    tw->add_flag("--timings", tw_timings, "include elapsed_ms in the report");
    tw->add_option("--output,-o", tw_out, "report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (check->parsed()) {
        if (check_k < 1) throw std::invalid_argument("k must be positive");
        ParsedGraph pg = load_graph(check_in);
        WkReport r = is_wk(pg.graph, check_k, /*witness_on_true=*/true);
        write_output(check_out,
                     check_report_json(pg.graph, check_k, r, report_options(check_timings, &pg)));
        return r.verdict ? 0 : 1;
    }

    if (reduce->parsed()) {
        if (reduce_k < 1) throw std::invalid_argument("k must be positive");
        ParsedGraph pg = load_graph(reduce_in);
        ProductGraph p = lex_product_with_clique(pg.graph, reduce_k);
        if (!reduce_verify) {
            auto fmt = format_from_name(reduce_emit);
            if (!fmt) throw std::runtime_error("unknown format '" + reduce_emit + "'");
            write_output(reduce_out, emit_graph(p.product, *fmt));
            return 0;
        }
        ReductionCheck tc;
        tc.base_well_covered = is_well_covered(pg.graph).verdict;
        tc.product_wk = is_wk(p.product, reduce_k).verdict;
        write_output(reduce_out, reduce_report_json(pg.graph, reduce_k, p.product, tc,
                                                    report_options(reduce_timings, &pg)));
        return tc.consistent() ? 0 : 1;
    }

    if (conj->parsed()) {
        ConditionVariant variant;
        if (conj_variant == "closed")
            variant = ConditionVariant::closed;
        else if (conj_variant == "open")
            variant = ConditionVariant::open;
        else
            throw std::invalid_argument("variant must be 'closed' or 'open'");
        if (opt_s->count()) {
            RefutationReport r = refute_conjecture(conj_s, conj_t);
            write_output(conj_out, refutation_report_json(r, report_options(conj_timings, nullptr)));
            return r.confirmed() ? 0 : 1;
        }
        ParsedGraph pg = load_graph(conj_in);
        ConditionResult r = check_levit_tankus_condition(pg.graph, variant);
        write_output(conj_out,
                     condition_report_json(pg.graph, r, report_options(conj_timings, &pg)));
        return r.holds ? 0 : 1;
    }

    if (census->parsed()) {
        std::vector<int> ks;
        std::stringstream ss(census_klist);
        for (std::string tok; std::getline(ss, tok, ',');) {
            int k = std::stoi(tok);
            if (k < 1) throw std::invalid_argument("k values must be positive");
            ks.push_back(k);
        }
        if (ks.empty()) throw std::invalid_argument("empty k list");

        struct Job {
            std::string id;
            int n;
            uint64_t mask;   // internal enumeration
            Graph parsed;    // stream mode
            bool from_mask;
        };
        std::vector<Job> jobs;
        const bool internal = census_nmin >= 0 || census_nmax >= 0;
        if (internal) {
            if (census_nmin < 0 || census_nmax < census_nmin)
                throw std::invalid_argument("need --n-min <= --n-max");
            if (census_nmax > 7)
                throw std::invalid_argument(
                    "internal enumeration is limited to n <= 7; pipe a graph6 stream instead");
            for (int n = census_nmin; n <= census_nmax; ++n) {
                const uint64_t total = uint64_t{1} << pair_count(n);
                for (uint64_t mask = 0; mask < total; ++mask)
                    jobs.push_back({"n" + std::to_string(n) + "m" + std::to_string(mask), n, mask,
                                    Graph(), true});
            }
        } else {
            std::string text = read_all(census_in.path);
            std::stringstream lines(text);
            for (std::string line; std::getline(lines, line);) {
                while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                    line.pop_back();
                if (line.empty()) continue;
                jobs.push_back({line, 0, 0, parse_graph6_line(line), false});
            }
        }

        std::vector<CensusRow> rows(jobs.size());
        parallel_for(jobs.size(), census_threads, [&](size_t i) {
            const Job& job = jobs[i];
            Graph g = job.from_mask ? graph_from_mask(job.n, job.mask) : job.parsed;
            rows[i] = census_row(g, job.id, ks);
        });
        write_output(census_out, census_csv(rows, ks));
        return 0;
    }

    if (tw->parsed()) {
        ParsedGraph pg = load_graph(tw_in);
        TreeDecomposition td;
        if (!tw_decomp.empty()) {
            td = parse_tree_decomposition(read_all(tw_decomp));
            auto check_result = validate_decomposition(pg.graph, td);
            if (!check_result.valid) {
                std::cerr << "invalid tree decomposition:\n";
                for (const auto& v : check_result.violations) std::cerr << "  - " << v << "\n";
                return 2;
            }
        } else {
            td = min_fill_decomposition(pg.graph);
        }
        NiceTreeDecomposition ntd = to_nice(pg.graph, td);
        TreewidthReport r;
        r.width = td.width();
        r.alpha = dp_alpha(pg.graph, ntd);
        r.beta = dp_beta(pg.graph, ntd);
        r.well_covered = (r.alpha == r.beta);
        if (pg.graph.vertex_count() <= 12)
            r.brute_force_agrees =
                (r.alpha == alpha(pg.graph)) && (r.beta == beta(pg.graph));
        write_output(tw_out, treewidth_report_json(pg.graph, r, report_options(tw_timings, &pg)));
        return r.well_covered ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
