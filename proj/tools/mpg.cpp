// command-line front end: corpus building, per-graph queries, identity
// checks, reference-table audits, report emission
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mpg/chrompoly.hpp"
#include "mpg/coloring.hpp"
#include "mpg/corpus.hpp"
#include "mpg/fwf.hpp"
#include "mpg/graph6.hpp"
#include "mpg/verify.hpp"
#include "mpg/wheelops.hpp"

using namespace mpg;

namespace {

int default_workers() {
    if (const char* env = std::getenv("MPG_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

// argument is either a path to a graph6 file or an inline graph6 string
Triangulation load_graph(const std::string& arg) {
    std::ifstream in(arg);
    if (in) {
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty()) return decode_graph6(line);
        }
        fail(Err::BadFormat, "no graph6 line in " + arg);
    }
    return decode_graph6(arg);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        out << text << "\n";
        std::cerr << "wrote " << out_path << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal planar graph coloring toolkit"};
    app.require_subcommand(1);

    int workers = default_workers();
    int cap = 13;
    std::string checkpoint_dir;
    app.add_option("--workers", workers, "parallel workers (env MPG_WORKERS)");
    app.add_option("--cap", cap, "largest order the corpus may grow to")->capture_default_str();
    app.add_option("--checkpoint", checkpoint_dir, "directory for per-order graph6 checkpoints");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "all maximal planar graphs of an order");
    int enum_order = 6, enum_mindeg = 3;
    std::string enum_out;
    cmd_enum->add_option("--order", enum_order, "graph order")->required();
    cmd_enum->add_option("--min-degree", enum_mindeg, "minimum degree filter (3, 4 or 5)");
    cmd_enum->add_option("--out", enum_out, "output file (graph6 lines; default stdout)");

    // poly
    auto* cmd_poly = app.add_subcommand("poly", "chromatic polynomial of a graph");
    std::string poly_graph;
    long poly_at = LONG_MIN;
    cmd_poly->add_option("graph", poly_graph, "graph6 file or inline string")->required();
    cmd_poly->add_option("--at", poly_at, "evaluate at an integer instead of printing coefficients");

    // partitions
    auto* cmd_part = app.add_subcommand("partitions", "color-class partitions of a graph");
    std::string part_graph;
    int part_k = 4;
    cmd_part->add_option("graph", part_graph)->required();
    cmd_part->add_option("--k", part_k, "color budget")->capture_default_str();

    // unique
    auto* cmd_uni = app.add_subcommand("unique", "unique-colorability report for a graph");
    std::string uni_graph;
    cmd_uni->add_option("graph", uni_graph)->required();

    // fwf
    auto* cmd_fwf = app.add_subcommand("fwf", "recursive maximal planar graph operations");
    auto* fwf_check = cmd_fwf->add_subcommand("check", "test degree-3 peeling down to K4");
    std::string fwf_check_graph;
    fwf_check->add_option("graph", fwf_check_graph)->required();
    auto* fwf_seq = cmd_fwf->add_subcommand("from-seq", "build the graph of a color sequence");
    std::string fwf_seq_str, fwf_seq_export;
    fwf_seq->add_option("sequence", fwf_seq_str, "string over y g b r")->required();
    fwf_seq->add_option("--export", fwf_seq_export, "dot | graph6");
    auto* fwf_cat = cmd_fwf->add_subcommand("enumerate22", "catalog of two-degree-3-vertex graphs");
    int fwf_cat_n = 8;
    fwf_cat->add_option("--order", fwf_cat_n)->required();

    // wheel
    auto* cmd_wheel = app.add_subcommand("wheel", "wheel contraction and extension operations");
    auto* wheel_con = cmd_wheel->add_subcommand("contract", "contract the k-wheel at a vertex");
    std::string wc_graph;
    int wc_vertex = 0, wc_k = 3, wc_pair = -1;
    wheel_con->add_option("graph", wc_graph)->required();
    wheel_con->add_option("--vertex", wc_vertex)->required();
    wheel_con->add_option("--k", wc_k)->required();
    wheel_con->add_option("--pair", wc_pair, "override the link-pair choice (index)");
    auto* wheel_ext = cmd_wheel->add_subcommand("extend", "extend a k-wheel at a site");
    std::string we_graph;
    int we_k = 3;
    std::vector<int> we_site;
    wheel_ext->add_option("graph", we_graph)->required();
    wheel_ext->add_option("--k", we_k)->required();
    wheel_ext->add_option("--site", we_site,
                          "site vertices: k=3 face a,b,c; k=4 path x,u,y; k=5 funnel top,stem,b1,b2")
        ->required();
    auto* wheel_red = cmd_wheel->add_subcommand("reduce", "contract repeatedly down to K3");
    std::string wr_graph, wr_out;
    wheel_red->add_option("graph", wr_graph)->required();
    wheel_red->add_option("--out", wr_out, "write the replayable trace json here");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "audit the reference tables and theorems");
    std::string verify_what, golden_dir = "golden", verify_fmt = "text", verify_out;
    bool no_timestamp = false;
    int sweep_cap = 11;
    cmd_verify->add_option("what", verify_what, "table5.1 | appendix1 | appendix2 | theorems | all")->required();
    cmd_verify->add_option("--golden", golden_dir, "directory with the reference files")->capture_default_str();
    cmd_verify->add_option("--format", verify_fmt, "json | text")->capture_default_str();
    cmd_verify->add_option("--out", verify_out, "output file (default stdout)");
    cmd_verify->add_option("--sweep-cap", sweep_cap, "largest order for the theorem sweep")->capture_default_str();
    cmd_verify->add_flag("--no-timestamp", no_timestamp, "suppress the timestamp field in json reports");

    // export
    auto* cmd_export = app.add_subcommand("export", "re-emit a graph in another format");
    std::string export_fmt, export_graph;
    cmd_export->add_option("format", export_fmt, "dot | graph6 | json")->required();
    cmd_export->add_option("graph", export_graph)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_enum) {
            if (enum_order > cap) fail(Err::CapExceeded, "order exceeds --cap");
            Corpus corpus(CorpusOptions{cap, workers, checkpoint_dir});
            for (int n = 5; n <= enum_order; ++n) {
                corpus.build(n);
                std::cerr << "order " << n << ": " << corpus.at(n).size() << " graphs\n";
            }
            std::ostringstream os;
            auto sl = corpus.slice(enum_order, enum_mindeg);
            for (const auto& g : sl) os << encode_graph6(g.canonical_form()) << "\n";
            std::cerr << sl.size() << " graphs of order " << enum_order << " with min degree >= " << enum_mindeg
                      << "\n";
            std::string text = os.str();
            if (!text.empty()) text.pop_back();
            emit(text, enum_out);
        } else if (*cmd_poly) {
            auto g = load_graph(poly_graph);
            ChromEngine eng;
            auto p = eng.chromatic_polynomial(g);
            if (poly_at != LONG_MIN) {
                std::cout << p.evaluate(mpz_class(poly_at)).get_str() << "\n";
            } else {
                std::cout << p.pretty() << "\n" << p.to_json() << "\n";
            }
        } else if (*cmd_part) {
            auto g = load_graph(part_graph);
            auto ps = enumerate_partitions(g, part_k);
            std::cout << to_json(ps) << "\n";
        } else if (*cmd_uni) {
            auto g = load_graph(uni_graph);
            auto ps = enumerate_partitions(g, 4);
            nlohmann::json j;
            j["chromatic_number"] = chromatic_number(g);
            j["partition_count"] = ps.count();
            j["uniquely_4_colorable"] = ps.count() == 1;
            auto w = uniquely_near_4_witness(g.simple_graph());
            if (w) {
                j["near_witness"] = {{"anchors", w->anchors},
                                     {"invariant_vertices", w->invariant_vertices},
                                     {"invariant_subgraph_unique", w->subgraph_unique}};
            }
            std::cout << j.dump(2) << "\n";
        } else if (*fwf_check) {
            auto g = load_graph(fwf_check_graph);
            auto peel = is_fwf(g);
            nlohmann::json j;
            j["recursive"] = peel.has_value();
            if (peel) j["peeling"] = *peel;
            std::cout << j.dump() << "\n";
        } else if (*fwf_seq) {
            auto r = fwf22_from_color_sequence(fwf_seq_str);
            if (fwf_seq_export == "dot") {
                std::cout << to_dot(r.graph);
            } else if (fwf_seq_export == "graph6" || fwf_seq_export.empty()) {
                std::cout << encode_graph6(r.graph) << "\n";
            } else {
                fail(Err::BadFormat, "unknown export format");
            }
            std::cerr << "order " << r.graph.order() << ", partition count " << r.partition_count << "\n";
        } else if (*fwf_cat) {
            std::cout << enumerate_fwf22(fwf_cat_n).to_json() << "\n";
        } else if (*wheel_con) {
            auto g = load_graph(wc_graph);
            auto [h, st] = contract_wheel(g, wc_vertex, wc_k, wc_pair);
            std::cout << encode_graph6(h.simplified()) << "\n";
        } else if (*wheel_ext) {
            auto g = load_graph(we_graph);
            Triangulation h = g;
            if (we_k == 3) {
                if (we_site.size() != 3) fail(Err::BadSite, "k=3 needs 3 site vertices");
                h = extend_wheel_face(g, {we_site[0], we_site[1], we_site[2]}).first;
            } else if (we_k == 4) {
                if (we_site.size() != 3) fail(Err::BadSite, "k=4 needs path x,u,y");
                h = extend_wheel_path(g, we_site[0], we_site[1], we_site[2]).first;
            } else if (we_k == 5) {
                if (we_site.size() != 4) fail(Err::BadSite, "k=5 needs funnel top,stem,b1,b2");
                h = extend_wheel_funnel(g, we_site[0], we_site[1], we_site[2], we_site[3]).first;
            } else {
                fail(Err::WrongDegree, "k must be 3, 4 or 5");
            }
            std::cout << encode_graph6(h) << "\n";
        } else if (*wheel_red) {
            auto g = load_graph(wr_graph);
            auto tr = reduce_to_k3(g);
            std::cerr << tr.steps.size() << " steps\n";
            emit(tr.to_json(), wr_out);
        } else if (*cmd_verify) {
            Corpus corpus(CorpusOptions{cap, workers, checkpoint_dir});
            std::vector<VerificationReport> reports;
            auto run_counts = [&] {
                auto r = verify_counts(corpus, golden_dir);
                reports.insert(reports.end(), r.begin(), r.end());
            };
            auto run_appendix = [&] {
                auto r = verify_partition_tables(corpus, golden_dir);
                reports.insert(reports.end(), r.begin(), r.end());
            };
            auto run_theorems = [&] {
                auto r = theorem_sweep(corpus, sweep_cap);
                reports.insert(reports.end(), r.begin(), r.end());
            };
            std::vector<std::string> keep_prefixes;
            if (verify_what == "table5.1") {
                run_counts();
                keep_prefixes = {"table5.1", "fwf22-count"};
            } else if (verify_what == "appendix1") {
                run_appendix();
                keep_prefixes = {"appendix1"};
            } else if (verify_what == "appendix2") {
                run_counts();
                run_appendix();
                keep_prefixes = {"appendix2"};
            } else if (verify_what == "theorems") {
                run_theorems();
            } else if (verify_what == "all") {
                run_counts();
                run_appendix();
                run_theorems();
            } else {
                std::cerr << "unknown verify target: " << verify_what << "\n";
                return 1;
            }
            if (!keep_prefixes.empty()) {
                std::vector<VerificationReport> filtered;
                for (auto& r : reports)
                    for (const auto& p : keep_prefixes)
                        if (r.claim_id.rfind(p, 0) == 0) {
                            filtered.push_back(r);
                            break;
                        }
                reports = filtered;
            }
            std::string text = verify_fmt == "json" ? reports_to_json(reports, !no_timestamp)
                                                    : reports_to_text(reports);
            emit(text, verify_out);
            std::cerr << mismatch_count(reports) << " non-matching report(s)\n";
        } else if (*cmd_export) {
            auto g = load_graph(export_graph);
            if (export_fmt == "dot") std::cout << to_dot(g);
            else if (export_fmt == "graph6") std::cout << encode_graph6(g.canonical_form()) << "\n";
            else if (export_fmt == "json") std::cout << to_json_adjacency(g) << "\n";
            else fail(Err::BadFormat, "unknown export format");
        }
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
