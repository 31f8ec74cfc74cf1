#include "mpg/fwf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

#include "json.hpp"
#include "mpg/graph6.hpp"

namespace mpg {

namespace {

std::optional<std::vector<VertexId>> peel_search(const Triangulation& g,
                                                 std::unordered_map<std::string, bool>& dead) {
    if (g.order() == 4) {
        if (g.is_maximal()) return std::vector<VertexId>{};
        return std::nullopt;
    }
    auto cert = g.certificate().bytes;
    if (dead.count(cert)) return std::nullopt;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 3) continue;
        std::vector<VertexId> map;
        Triangulation h = g.delete_vertex(v, map);
        auto sub = peel_search(h, dead);
        if (sub) {
            // translate child ids back to g's ids
            std::vector<VertexId> inv(h.order());
            for (int u = 0; u < g.order(); ++u)
                if (u != v) inv[map[u]] = u;
            std::vector<VertexId> out = {v};
            for (VertexId w : *sub) out.push_back(inv[w]);
            return out;
        }
    }
    dead[cert] = true;
    return std::nullopt;
}

} // namespace

std::optional<std::vector<VertexId>> is_fwf(const Triangulation& g) {
    if (!g.is_maximal()) fail(Err::NotMaximal, "is_fwf: graph must be maximal planar");
    if (g.order() < 4) fail(Err::OrderTooSmall, "is_fwf: order below 4");
    std::unordered_map<std::string, bool> dead;
    return peel_search(g, dead);
}

bool is_fwf_greedy(const Triangulation& g) {
    Triangulation cur = g;
    while (cur.order() > 4) {
        int pick = -1;
        for (int v = 0; v < cur.order(); ++v)
            if (cur.degree(v) == 3) {
                pick = v;
                break;
            }
        if (pick < 0) return false;
        cur = cur.delete_vertex(pick);
    }
    return cur.is_maximal();
}

int color_of_symbol(char c) {
    switch (c) {
        case 'y': return 1;
        case 'g': return 2;
        case 'b': return 3;
        case 'r': return 4;
    }
    fail(Err::BadPrefix, "unknown color symbol");
}

char symbol_of_color(int c) {
    static const char s[] = {'?', 'y', 'g', 'b', 'r'};
    if (c < 1 || c > 4) return '?';
    return s[c];
}

Fwf22 fwf22_from_color_sequence(const std::string& seq) {
    const int n = (int)seq.size();
    if (n < 5) fail(Err::BadPrefix, "sequence shorter than 5");
    for (char c : seq) color_of_symbol(c);
    const std::string want = "ygbryb";
    for (int i = 0; i < std::min(n, 6); ++i)
        if (seq[i] != want[i]) fail(Err::BadPrefix, "the first six symbols must be y g b r y b");
    if (n >= 7 && seq[6] != 'y' && seq[6] != 'g') fail(Err::BadPrefix, "7th symbol must be y or g");
    for (int i = 6; i < n; ++i)
        if (seq[i] == seq[i - 1]) fail(Err::NoLegalFace, "consecutive vertices cannot share a color");

    std::vector<int> col(n);
    for (int i = 0; i < n; ++i) col[i] = color_of_symbol(seq[i]);

    // K4: outside triangle 0,1,2 and central vertex 3
    Triangulation t = Triangulation::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    // 5th vertex in region II, the face (1,2,3)
    if (n >= 5) t = t.insert_vertex_in_face({1, 2, 3});
    for (int i = 5; i < n; ++i) {
        // faces around the previous vertex carry three distinct missing colors
        VertexId prev = i - 1;
        auto nbrs = t.link(prev);
        int target = -1;
        std::vector<VertexId> chosen;
        for (size_t a = 0; a < nbrs.size(); ++a)
            for (size_t b = a + 1; b < nbrs.size(); ++b) {
                std::vector<VertexId> f = {nbrs[a], nbrs[b], prev};
                if (!t.find_face(f)) continue;
                bool used[5] = {false, false, false, false, false};
                used[col[nbrs[a]]] = used[col[nbrs[b]]] = used[col[prev]] = true;
                int missing = 0;
                for (int c = 1; c <= 4; ++c)
                    if (!used[c]) missing = c;
                if (missing == col[i]) {
                    target = 1;
                    chosen = f;
                }
            }
        if (target < 0) fail(Err::NoLegalFace, "no face around the previous vertex admits this color");
        t = t.insert_vertex_in_face(chosen);
    }

    Fwf22 out{t, {}, {}, 0};
    out.coloring.k = 4;
    out.coloring.assignment = col;
    if (!out.coloring.proper_on(t.simple_graph())) fail(Err::NoLegalFace, "sequence coloring is not proper");
    auto ps = enumerate_partitions(t, 4);
    out.partition_count = ps.count();
    out.partition = partition_of(out.coloring);
    return out;
}

namespace {

// cached closure of K4 under degree-3 insertions (recursive graphs per order)
const std::map<std::string, Triangulation>& fwf_level(int n) {
    static std::mutex mu;
    static std::map<int, std::map<std::string, Triangulation>> cache;
    std::lock_guard<std::mutex> lk(mu);
    if (cache.empty()) {
        Triangulation k4 = Triangulation::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        cache[4].emplace(k4.certificate().bytes, k4);
    }
    while (cache.rbegin()->first < n) {
        int order = cache.rbegin()->first;
        std::map<std::string, Triangulation> next;
        for (auto& [cert, g] : cache[order])
            for (const auto& f : g.faces()) {
                Triangulation h = g.insert_vertex_in_face(f);
                next.emplace(h.certificate().bytes, h);
            }
        cache[order + 1] = std::move(next);
    }
    return cache[n];
}

} // namespace

FwfCatalogEntry enumerate_fwf22(int n) {
    if (n < 5) fail(Err::OrderTooSmall, "enumerate_fwf22: n must be at least 5");
    FwfCatalogEntry entry;
    entry.n = n;
    entry.formula_count = n <= 6 ? 1 : (1L << (n - 7)) + 1;

    for (auto& [cert, g] : fwf_level(n)) {
        std::vector<VertexId> deg3;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) == 3) deg3.push_back(v);
        if (deg3.size() != 2) continue;
        if (g.adjacent(deg3[0], deg3[1])) continue;
        bool dist2 = (g.simple_graph().adj[deg3[0]] & g.simple_graph().adj[deg3[1]]) != 0;
        if (!dist2) continue;
        entry.graphs.push_back(g);
        entry.certs.push_back(IsoCertificate{cert});
    }
    return entry;
}

std::string FwfCatalogEntry::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["count"] = graphs.size();
    j["formula_count"] = formula_count;
    auto arr = nlohmann::json::array();
    for (const auto& g : graphs) arr.push_back(encode_graph6(g));
    j["graphs"] = arr;
    return j.dump();
}

StarExtension star_extension_natural_coloring(const Triangulation& g22) {
    std::vector<VertexId> deg3;
    for (int v = 0; v < g22.order(); ++v)
        if (g22.degree(v) == 3) deg3.push_back(v);
    if (deg3.size() != 2 || g22.adjacent(deg3[0], deg3[1]))
        fail(Err::NotTwoTwoFwf, "graph does not have exactly two non-adjacent degree-3 vertices");
    int central = -1;
    for (int v = 0; v < g22.order(); ++v)
        if (g22.degree(v) == g22.order() - 1) central = v;
    if (central < 0) fail(Err::NotTwoTwoFwf, "no central vertex of full degree");
    if (!is_fwf(g22)) fail(Err::NotTwoTwoFwf, "graph does not peel to K4");

    auto ps = enumerate_partitions(g22, 4);
    if (ps.count() != 1) fail(Err::NotTwoTwoFwf, "graph is not uniquely 4-colorable");

    Coloring f = coloring_from_partition(ps.partitions[0], g22.order(), 4);
    auto [gx, st] = extend_wheel_path(g22, deg3[0], central, deg3[1]);

    StarExtension ext{g22, gx, {}, deg3[0], central, deg3[1], -1, -1};
    ext.usplit = gx.order() - 2;
    ext.center = gx.order() - 1;
    ext.natural.k = 4;
    ext.natural.assignment.assign(gx.order(), 0);
    for (int v = 0; v < g22.order(); ++v) ext.natural.assignment[v] = f.assignment[v];
    ext.natural.assignment[ext.usplit] = f.assignment[ext.u];
    for (int c = 1; c <= 4; ++c) {
        if (c == f.assignment[ext.x] || c == f.assignment[ext.u] || c == f.assignment[ext.y]) continue;
        ext.natural.assignment[ext.center] = c;
        break;
    }
    if (!ext.natural.proper_on(gx.simple_graph())) fail(Err::NotProper, "natural coloring is not proper");
    return ext;
}

namespace {

bool proper_and_new(const SGraph& g, const Coloring& f, const ColorPartition& natural) {
    return f.proper_on(g) && partition_of(f) != natural;
}

} // namespace

AlternativeColoring alternative_coloring(const StarExtension& gx) {
    const SGraph g = gx.graph.simple_graph();
    const Coloring& nat = gx.natural;
    ColorPartition natp = partition_of(nat);

    // ends sharing a color: the center has a second legal color
    if (nat.assignment[gx.x] == nat.assignment[gx.y]) {
        for (int c = 1; c <= 4; ++c) {
            if (c == nat.assignment[gx.center]) continue;
            Coloring f = nat;
            f.assignment[gx.center] = c;
            if (proper_and_new(g, f, natp)) return {f, "same-color-ends"};
        }
    }

    // direct recoloring of the five special vertices
    {
        Coloring f = nat;
        int cu = nat.assignment[gx.u], cx = nat.assignment[gx.x], cy = nat.assignment[gx.y],
            cv = nat.assignment[gx.center];
        f.assignment[gx.u] = cv;
        f.assignment[gx.usplit] = cx;
        f.assignment[gx.x] = cu;
        f.assignment[gx.y] = cu;
        f.assignment[gx.center] = cy;
        if (proper_and_new(g, f, natp)) return {f, "adjacent-recipe"};
    }

    // four-step cascade
    {
        Coloring f = nat;
        int cx = f.assignment[gx.x];
        // step 1: recolor x to the color of its unique same-colored-candidate
        // neighbor set of size one
        for (int c1 = 1; c1 <= 4 && true; ++c1) {
            if (c1 == cx) continue;
            std::vector<int> nbr1;
            for (int w = 0; w < g.n; ++w)
                if (g.has_edge(gx.x, w) && f.assignment[w] == c1) nbr1.push_back(w);
            if (nbr1.size() != 1) continue;
            int w1 = nbr1[0];
            // step 2: recolor w1 with the color of u' if u' is its only
            // conflict
            int c2 = f.assignment[gx.usplit];
            if (c2 == c1) continue;
            std::vector<int> nbr2;
            for (int w = 0; w < g.n; ++w)
                if (g.has_edge(w1, w) && f.assignment[w] == c2 && w != gx.x) nbr2.push_back(w);
            if (nbr2.size() != 1 || nbr2[0] != gx.usplit) continue;
            // step 3: u' takes x's old color; step 4: u's old-colored
            // neighbors of u' flip to c2
            Coloring h = f;
            h.assignment[gx.x] = c1;
            h.assignment[w1] = c2;
            h.assignment[gx.usplit] = cx;
            std::vector<int> flip;
            for (int w = 0; w < g.n; ++w)
                if (g.has_edge(gx.usplit, w) && h.assignment[w] == cx && w != gx.usplit) flip.push_back(w);
            for (int w : flip) h.assignment[w] = c2;
            if (proper_and_new(g, h, natp)) return {h, "cascade"};
        }
    }

    // exhaustive fallback
    auto ps = enumerate_partitions(g, 4);
    for (const auto& p : ps.partitions) {
        if (p == natp) continue;
        return {coloring_from_partition(p, g.n, 4), "exhaustive"};
    }
    fail(Err::NoAlternative, "every 4-coloring induces the natural partition");
}

} // namespace mpg
