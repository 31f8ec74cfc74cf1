// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one pass/fail line per criterion. Mismatches against the reference
// tables are expected outcomes where noted; a FAIL here means the artifact
// itself broke a pinned requirement.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "mpg/chrompoly.hpp"
#include "mpg/coloring.hpp"
#include "mpg/corpus.hpp"
#include "mpg/fwf.hpp"
#include "mpg/graph6.hpp"
#include "mpg/verify.hpp"
#include "mpg/wheelops.hpp"

using namespace mpg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void line(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << detail << "\n"
              << std::flush;
    failures += !pass;
}

double secs_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string golden_dir() {
    if (const char* env = std::getenv("MPG_GOLDEN_DIR")) return env;
    return std::string(MPG_SOURCE_DIR) + "/golden";
}

const VerificationReport* find_report(const std::vector<VerificationReport>& rs, const std::string& id) {
    for (const auto& r : rs)
        if (r.claim_id == id) return &r;
    return nullptr;
}

} // namespace

int main() {
    auto t_start = Clock::now();
    int workers = (int)std::min(8u, std::max(2u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("MPG_WORKERS")) workers = std::max(1, atoi(env));
    Corpus corpus(CorpusOptions{.cap = 13, .workers = workers});
    ChromEngine eng;

    // 1. oracle equivalence: polynomial evaluation == backtracking count,
    //    every triangulation of order <= 10, k = 0..6
    {
        auto t0 = Clock::now();
        long graphs = 0, bad = 0;
        for (int n = 4; n <= 10; ++n)
            for (const auto& g : corpus.at(n)) {
                auto p = eng.chromatic_polynomial(g);
                for (int k = 0; k <= 6; ++k)
                    if (p.evaluate(k) != (long)count_proper_colorings(g, k)) ++bad;
                ++graphs;
            }
        double el = secs_since(t0);
        std::ostringstream os;
        os << "oracle equivalence on " << graphs << " graphs x 7 evaluation points, " << bad
           << " disagreements, " << (int)el << "s (budget 600s)";
        line(1, bad == 0 && el < 600, os.str());
    }

    // 2. four-contract identity at every degree-4 vertex, orders 6..11
    {
        long inst = 0, bad = 0;
        bool oct_ok = false;
        for (int n = 6; n <= 11; ++n)
            for (const auto& g : corpus.slice(n, 4))
                for (int v = 0; v < g.order(); ++v) {
                    if (g.degree(v) != 4) continue;
                    auto r = four_contract_decomposition(eng, g, v);
                    ++inst;
                    if (!r.holds) ++bad;
                    if (n == 6 && r.fg == 96 && r.f1 == 48 && r.f2 == 48) oct_ok = true;
                }
        std::ostringstream os;
        os << "four-contract sum identity at " << inst << " degree-4 vertices, " << bad
           << " violations; octahedron instance 96 = 48 + 48 " << (oct_ok ? "confirmed" : "missing");
        line(2, bad == 0 && oct_ok, os.str());
    }

    // 3. five-contract bracket identity at every degree-5 vertex, orders <= 12
    {
        long inst = 0, bad = 0, nonneg_bad = 0, via_g3 = 0, via_g1_only = 0;
        for (int n = 6; n <= 12; ++n)
            for (const auto& g : corpus.slice(n, 4))
                for (int v = 0; v < g.order(); ++v) {
                    if (g.degree(v) != 5) continue;
                    auto r = five_contract_decomposition(eng, g, v);
                    ++inst;
                    if (!r.holds_with_g3 && !r.holds_with_g1) ++bad;
                    if (!r.nonneg) ++nonneg_bad;
                    if (r.holds_with_g3) ++via_g3;
                    else if (r.holds_with_g1) ++via_g1_only;
                }
        std::ostringstream os;
        os << "five-contract bracket identity at " << inst << " degree-5 vertices (icosahedron included), "
           << bad << " violations, " << nonneg_bad << " negative brackets; third-bracket variant: " << via_g3
           << " via the contracted graph itself, " << via_g1_only << " only via the printed variant";
        line(3, bad == 0 && nonneg_bad == 0, os.str());
    }

    // 4. golden identity and positivity, orders <= 10, 128-bit precision
    {
        long graphs = 0, bad_rel = 0, bad_pos = 0, bad_bound = 0;
        for (int n = 4; n <= 10; ++n)
            for (const auto& g : corpus.at(n)) {
                auto rep = tutte_identity_checks(eng, g, 128);
                ++graphs;
                if (rep.golden_identity_rel >= 1e-6) ++bad_rel;
                if (!rep.positive_at_tau_sqrt5) ++bad_pos;
                if (!rep.bound_at_tau2) ++bad_bound;
            }
        // K3 closed form: sqrt5 * tau^4
        auto k3 = corpus.at(4)[0].delete_vertex(0);
        auto gc = GoldenConstants::make(128);
        auto lhs = eng.chromatic_polynomial(k3).evaluate(gc.tau_sqrt5);
        auto closed = gc.sqrt5 * gc.tau.pow_si(4);
        double k3rel = ((lhs - closed).abs() / closed).to_double();
        std::ostringstream os;
        os << "golden identity rel < 1e-6 and positivity on " << graphs << " triangulations (" << bad_rel
           << "/" << bad_pos << "/" << bad_bound << " rel/positivity/bound violations); K3 value "
           << lhs.str(6) << " vs closed form, rel " << k3rel;
        line(4, bad_rel == 0 && bad_pos == 0 && bad_bound == 0 && k3rel < 1e-9, os.str());
    }

    // 5. twist residuals on sampled eligible quads
    {
        auto gc = GoldenConstants::make(128);
        int sampled = 0, bad_poly = 0, bad_tau = 0;
        for (int n = 7; n <= 9 && sampled < 24; ++n)
            for (const auto& g : corpus.at(n)) {
                if (sampled >= 24) break;
                for (auto [x, z] : g.edge_list()) {
                    if (sampled >= 24) break;
                    try {
                        auto r = quad_twist_ops(eng, g, x, z);
                        ++sampled;
                        if (!r.residual.is_zero()) ++bad_poly;
                        auto fG = eng.chromatic_polynomial(g).evaluate(gc.tau2);
                        auto fT = eng.chromatic_polynomial(r.theta).evaluate(gc.tau2);
                        auto fP = eng.chromatic_polynomial(r.phi).evaluate(gc.tau2);
                        auto fS = eng.chromatic_polynomial(r.psi).evaluate(gc.tau2);
                        auto lhs = fG + fT;
                        auto rhs = gc.tau.pow_si(-3) * (fS + fP);
                        double rel = ((lhs - rhs).abs() / lhs.abs()).to_double();
                        if (rel >= 1e-9) ++bad_tau;
                    } catch (const GraphError&) {
                        // ineligible quad; keep scanning
                    }
                }
            }
        std::ostringstream os;
        os << "twist identities on " << sampled << " sampled quads: " << bad_poly
           << " nonzero polynomial residuals, " << bad_tau << " tau^2 residuals above 1e-9";
        line(5, sampled >= 20 && bad_poly == 0 && bad_tau == 0, os.str());
    }

    // 6. census counts and dual-strategy agreement
    {
        long c6 = corpus.count(6, 4), c7 = corpus.count(7, 4), c8 = corpus.count(8, 4), c9 = corpus.count(9, 4);
        auto dc = corpus.dual_check(11);
        long c10 = corpus.count(10, 4), c11 = corpus.count(11, 4);
        std::ostringstream os;
        os << "census 6..9 = " << c6 << "," << c7 << "," << c8 << "," << c9
           << " (reference row 1,1,2,5); strategies " << (dc.agree ? "agree" : "DISAGREE")
           << " through order 11; orders 10,11 computed " << c10 << "," << c11
           << " vs reference 13,36 -> reported as mismatch rows";
        line(6, c6 == 1 && c7 == 1 && c8 == 2 && c9 == 5 && dc.agree, os.str());
    }

    // reference audits used by criteria 7, 8, 12
    auto count_reports = verify_counts(corpus, golden_dir());
    auto table_reports = verify_partition_tables(corpus, golden_dir());

    // 7. first appendix: content-exact matches and flagged conflicts
    {
        bool ok = true;
        std::ostringstream os;
        const auto* oct = find_report(table_reports, "appendix1/item1");
        const auto* o7 = find_report(table_reports, "appendix1/item2");
        ok &= oct && oct->computed.find("count 4, matched 3/4") != std::string::npos &&
              oct->status == "internal-conflict";
        ok &= o7 && o7->computed.find("count 5, matched 5/5") != std::string::npos && o7->status == "match";
        // every listed line either reproduced or flagged with a conflict diff
        int flagged_items = 0, clean_items = 0, broken = 0;
        long identity_bad = 0;
        for (const auto& r : table_reports) {
            if (r.claim_id.rfind("appendix1/item", 0) != 0) continue;
            std::string comp = r.computed;
            size_t mpos = comp.find("matched ");
            long matched = -1, listed = -1;
            if (mpos != std::string::npos) sscanf(comp.c_str() + mpos, "matched %ld/%ld", &matched, &listed);
            bool all_reproduced = matched == listed;
            if (all_reproduced) ++clean_items;
            else if (r.status == "internal-conflict") ++flagged_items;
            else ++broken;
            if (r.evidence.contains("colorings_from_partitions") &&
                r.evidence["colorings_from_partitions"] != r.evidence["colorings_direct"])
                ++identity_bad;
        }
        ok &= broken == 0 && identity_bad == 0;
        os << "order-6 listing: 3/4 lines content-exact, 1 transposition typo flagged as internal conflict; "
           << "order-7 listing content-exact 5/5; " << clean_items << " items fully reproduced, "
           << flagged_items << " with flagged conflict lines, " << broken
           << " unexplained; partition-sum coloring identity violations: " << identity_bad;
        line(7, ok, os.str());
    }

    // 8. second appendix: the order-13 graph
    {
        const auto* uniq = find_report(count_reports, "appendix2/order13-unique");
        const auto* n11 = find_report(count_reports, "appendix2/no-order11");
        const auto* n12 = find_report(count_reports, "appendix2/no-order12");
        const auto* parts = find_report(table_reports, "appendix2/partitions");
        bool ok = uniq && uniq->status == "match" && n11 && n11->status == "match" && n12 &&
                  n12->status == "match" && parts &&
                  parts->computed.find("count 14, matched 14/14") != std::string::npos;
        std::ostringstream os;
        os << "one order-13 graph with degree sequence 4 5^10 6 6, none at 11-12; its 14 partitions all "
           << "reproduced (the 15-line listing carries 1 malformed line); elapsed " << (int)secs_since(t_start)
           << "s of the 1800s budget";
        line(8, ok && secs_since(t_start) < 1800, os.str());
    }

    auto sweep = theorem_sweep(corpus, 11);

    // 9. uniquely 4-colorable <=> recursive, exhaustive to order 11
    {
        const auto* r = find_report(sweep, "thm6.15/desk-scale");
        line(9, r && r->status == "match", r ? r->computed : "sweep row missing");
    }

    // 10. colored contraction partition counts
    {
        const auto* r = find_report(sweep, "thm5.3-5.4/colored-contractions");
        line(10, r && r->status == "match", r ? r->computed : "sweep row missing");
    }

    // 11. alternative colorings for every (2,2)-catalog base of order <= 10
    {
        long bases = 0, bad = 0;
        for (int n = 5; n <= 10; ++n)
            for (const auto& g : enumerate_fwf22(n).graphs) {
                ++bases;
                try {
                    auto ext = star_extension_natural_coloring(g);
                    auto alt = alternative_coloring(ext);
                    bool good = alt.coloring.proper_on(ext.graph.simple_graph()) &&
                                partition_of(alt.coloring) != partition_of(ext.natural);
                    if (!good) ++bad;
                } catch (const GraphError&) {
                    ++bad;
                }
            }
        std::ostringstream os;
        os << "alternative coloring found for " << bases - bad << "/" << bases
           << " star extensions of catalog bases, orders 5..10";
        line(11, bad == 0, os.str());
    }

    // 12. catalog counts
    {
        long g6 = (long)enumerate_fwf22(6).graphs.size();
        long g7 = (long)enumerate_fwf22(7).graphs.size();
        long g8 = (long)enumerate_fwf22(8).graphs.size();
        const auto* row8 = find_report(count_reports, "fwf22-count/order8");
        bool conflict_reported = row8 && row8->status == "internal-conflict";
        std::ostringstream os;
        os << "catalog counts 1," << g7 << " at orders 6,7 (exact); order 8 computed " << g8
           << ", formula-vs-prose conflict " << (conflict_reported ? "reported" : "NOT reported");
        line(12, g6 == 1 && g7 == 2 && conflict_reported, os.str());
    }

    // 13. property suites
    {
        // Kempe interchange: involution + properness, 10^4 seeded cases
        std::mt19937 rng(424242);
        long kempe_bad = 0;
        std::vector<Triangulation> pool;
        for (int n = 6; n <= 9; ++n)
            for (const auto& g : corpus.at(n)) pool.push_back(g);
        std::vector<std::vector<ColorPartition>> pool_parts;
        for (const auto& g : pool) pool_parts.push_back(enumerate_partitions(g, 4).partitions);
        long done = 0;
        while (done < 10000) {
            size_t gi = rng() % pool.size();
            const auto& g = pool[gi];
            const auto& parts = pool_parts[gi];
            if (parts.empty()) continue;
            Coloring f = coloring_from_partition(parts[rng() % parts.size()], g.order(), 4);
            int i = 1 + (int)(rng() % 4), j = 1 + (int)(rng() % 4);
            if (i == j) continue;
            int v = (int)(rng() % g.order());
            if (f.assignment[v] != i && f.assignment[v] != j) continue;
            auto sg = g.simple_graph();
            auto f2 = kempe_interchange(sg, f, i, j, v);
            auto f3 = kempe_interchange(sg, f2, i, j, v);
            if (!f2.proper_on(sg) || f3.assignment != f.assignment) ++kempe_bad;
            ++done;
        }

        // extend/contract certificate round trips, k = 3,4,5, orders <= 9
        long rt = 0, rt_bad = 0;
        for (int n = 4; n <= 9; ++n)
            for (const auto& g : corpus.at(n)) {
                for (const auto& fverts : g.faces()) {
                    auto [h, st] = extend_wheel_face(g, fverts);
                    auto [back, st2] = contract_wheel(h, h.order() - 1, 3);
                    ++rt;
                    rt_bad += !(back.certificate() == g.certificate());
                }
                for (int u = 0; u < g.order(); ++u) {
                    auto link = g.link(u);
                    for (size_t i = 0; i < link.size(); ++i)
                        for (size_t j = i + 1; j < link.size(); ++j) {
                            auto [h, st] = extend_wheel_path(g, link[i], u, link[j]);
                            ++rt;
                            bool ok = false;
                            for (int pc = 0; pc < 2 && !ok; ++pc) {
                                try {
                                    auto [back, st2] = contract_wheel(h, h.order() - 1, 4, pc);
                                    ok = back.certificate() == g.certificate();
                                } catch (const GraphError&) {
                                }
                            }
                            rt_bad += !ok;
                        }
                }
                for (int fi = 0; fi < (int)g.faces().size(); ++fi) {
                    auto walk = g.face_darts(fi);
                    for (int ci = 0; ci < 3; ++ci) {
                        VertexId s = walk[ci].first;
                        int d = g.degree(s);
                        int p_out = walk[ci].second, p_in = ((p_out - 1) % d + d) % d;
                        for (int pt = 0; pt < d; ++pt) {
                            if (pt == p_out || pt == p_in) continue;
                            Triangulation h = g;
                            try {
                                h = surgery::extend5(g, s, fi, pt);
                            } catch (const GraphError&) {
                                continue;
                            }
                            ++rt;
                            bool ok = false;
                            for (int pc = 0; pc < 5 && !ok; ++pc) {
                                try {
                                    auto [back, st2] = contract_wheel(h, h.order() - 1, 5, pc);
                                    ok = back.certificate() == g.certificate();
                                } catch (const GraphError&) {
                                }
                            }
                            rt_bad += !ok;
                        }
                    }
                }
            }

        // certificates classify exactly as brute-force isomorphism, n <= 8
        auto brute_iso = [](const SGraph& a, const SGraph& b) {
            if (a.n != b.n || a.degree_sequence() != b.degree_sequence()) return false;
            std::vector<int> perm(a.n);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                bool ok = true;
                for (int u = 0; u < a.n && ok; ++u)
                    for (int v = u + 1; v < a.n && ok; ++v)
                        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
                if (ok) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        };
        long iso_bad = 0, relabel_bad = 0;
        for (int n = 4; n <= 8; ++n) {
            const auto& level = corpus.at(n);
            for (size_t i = 0; i < level.size(); ++i) {
                for (size_t j = i + 1; j < level.size(); ++j) {
                    bool certs_eq = level[i].certificate() == level[j].certificate();
                    bool iso = brute_iso(level[i].simple_graph(), level[j].simple_graph());
                    if (certs_eq != iso) ++iso_bad;
                }
                // random relabelings keep the certificate
                std::vector<int> perm(n);
                std::iota(perm.begin(), perm.end(), 0);
                std::shuffle(perm.begin(), perm.end(), rng);
                std::vector<std::pair<int, int>> edges;
                for (auto [a, b] : level[i].edge_list()) edges.push_back({perm[a], perm[b]});
                auto re = Triangulation::from_edge_list(n, edges);
                if (!(re.certificate() == level[i].certificate())) ++relabel_bad;
            }
        }

        std::ostringstream os;
        os << "kempe involution 10^4 cases (" << kempe_bad << " bad); " << rt
           << " extend/contract round trips (" << rt_bad << " bad); certificate vs brute isomorphism on all "
           << "pairs through order 8 (" << iso_bad << " disagreements, " << relabel_bad << " relabel failures)";
        line(13, kempe_bad == 0 && rt_bad == 0 && iso_bad == 0 && relabel_bad == 0, os.str());
    }

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criterion(s) failed")
              << " in " << (int)secs_since(t_start) << "s\n";
    return failures == 0 ? 0 : 1;
}
