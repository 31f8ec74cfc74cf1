#include "mpg/graph.hpp"

#include <algorithm>
#include <array>

namespace mpg {

std::vector<std::pair<int, int>> SGraph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has_edge(u, v)) es.push_back({u, v});
    return es;
}

bool SGraph::is_complete() const {
    for (int u = 0; u < n; ++u)
        if (degree(u) != n - 1) return false;
    return true;
}

bool SGraph::connected() const {
    if (n == 0) return true;
    uint32_t seen = 1u, frontier = 1u;
    while (frontier) {
        uint32_t next = 0;
        for (int u = 0; u < n; ++u)
            if ((frontier >> u) & 1u) next |= adj[u];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 32 ? ~0u : ((1u << n) - 1));
}

SGraph SGraph::without_vertex(int v) const {
    SGraph h(n - 1);
    auto newid = [v](int x) { return x < v ? x : x - 1; };
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        for (int w = u + 1; w < n; ++w) {
            if (w == v) continue;
            if (has_edge(u, w)) h.add_edge(newid(u), newid(w));
        }
    }
    return h;
}

SGraph SGraph::contracted(int u, int v) const {
    if (u > v) std::swap(u, v);
    SGraph h(n - 1);
    auto newid = [v](int x) { return x < v ? x : x - 1; };
    for (int a = 0; a < n; ++a) {
        uint32_t row = adj[a];
        int src = (a == v) ? u : a;
        for (int b = 0; b < n; ++b) {
            if (!((row >> b) & 1u)) continue;
            int dst = (b == v) ? u : b;
            if (src == dst) continue; // u-v edge would become a loop; caller checks non-adjacency
            int x = newid(a == v ? u : a);
            int y = newid(b == v ? u : b);
            if (x != y) h.add_edge(x, y);
        }
    }
    return h;
}

SGraph SGraph::induced(uint32_t subset) const {
    std::vector<int> verts;
    for (int u = 0; u < n; ++u)
        if ((subset >> u) & 1u) verts.push_back(u);
    SGraph h((int)verts.size());
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) h.add_edge((int)i, (int)j);
    return h;
}

std::vector<int> SGraph::degree_sequence() const {
    std::vector<int> d(n);
    for (int u = 0; u < n; ++u) d[u] = degree(u);
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

// Ordered-partition refinement: split cells by neighbor counts into other cells
// until stable. Cells are kept as contiguous runs of `order`.
struct Refiner {
    const SGraph& g;
    std::vector<int> order;      // vertex ids
    std::vector<int> cell_start; // cell_start[i] = start index of the cell containing position i

    explicit Refiner(const SGraph& gg) : g(gg), order(gg.n), cell_start(gg.n, 0) {
        for (int i = 0; i < g.n; ++i) order[i] = i;
    }

    std::vector<std::pair<int, int>> cells() const {
        std::vector<std::pair<int, int>> cs;
        int i = 0;
        while (i < g.n) {
            int s = cell_start[i];
            int e = s;
            while (e < g.n && cell_start[e] == s) ++e;
            cs.push_back({s, e});
            i = e;
        }
        return cs;
    }

    void refine() {
        bool changed = true;
        while (changed) {
            changed = false;
            auto cs = cells();
            for (auto [ts, te] : cs) {
                // split every cell by adjacency count into target cell [ts,te)
                uint32_t target = 0;
                for (int i = ts; i < te; ++i) target |= 1u << order[i];
                for (auto [s, e] : cells()) {
                    if (e - s <= 1) continue;
                    std::stable_sort(order.begin() + s, order.begin() + e, [&](int a, int b) {
                        return __builtin_popcount(g.adj[a] & target) < __builtin_popcount(g.adj[b] & target);
                    });
                    int run = s;
                    for (int i = s; i < e; ++i) {
                        if (i > s && __builtin_popcount(g.adj[order[i]] & target) !=
                                         __builtin_popcount(g.adj[order[i - 1]] & target))
                            run = i;
                        if (cell_start[i] != run) {
                            cell_start[i] = run;
                            changed = true;
                        }
                    }
                }
                if (changed) break; // cell list invalidated; restart refinement pass
            }
        }
    }

    bool discrete() const {
        for (int i = 0; i < g.n; ++i)
            if (cell_start[i] != i) return false;
        return true;
    }
};

std::string key_for_order(const SGraph& g, const std::vector<int>& order) {
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    std::string key;
    key.push_back((char)g.n);
    for (int i = 0; i < g.n; ++i) {
        uint32_t row = 0;
        for (int j = 0; j < g.n; ++j)
            if (g.has_edge(order[i], order[j])) row |= 1u << j;
        for (int b = 0; b < 4; ++b) key.push_back((char)((row >> (8 * b)) & 0xff));
    }
    return key;
}

void canon_search(const SGraph& g, Refiner r, std::string& best, bool& have) {
    r.refine();
    if (r.discrete()) {
        std::string k = key_for_order(g, r.order);
        if (!have || k < best) {
            best = k;
            have = true;
        }
        return;
    }
    auto cs = r.cells();
    for (auto [s, e] : cs) {
        if (e - s <= 1) continue;
        // Individualize one representative per "twin class" of the first
        // non-singleton cell: swapping a,b with adj[a]\{b} == adj[b]\{a} is an
        // automorphism, so branching on both would only duplicate leaves (and
        // blows up factorially on cliques).
        std::vector<int> all(r.order.begin() + s, r.order.begin() + e);
        std::vector<int> cand;
        for (int v : all) {
            bool twin = false;
            for (int u : cand) {
                uint32_t ru = g.adj[u] & ~(1u << v);
                uint32_t rv = g.adj[v] & ~(1u << u);
                if (ru == rv) {
                    twin = true;
                    break;
                }
            }
            if (!twin) cand.push_back(v);
        }
        for (int v : cand) {
            Refiner r2 = r;
            auto it = std::find(r2.order.begin() + s, r2.order.begin() + e, v);
            std::rotate(r2.order.begin() + s, it, it + 1);
            for (int i = s + 1; i < e; ++i) r2.cell_start[i] = s + 1;
            canon_search(g, std::move(r2), best, have);
        }
        return;
    }
}

} // namespace

std::string SGraph::canonical_key() const {
    if (n == 0) return std::string(1, '\0');
    Refiner r(*this);
    // seed: sort by degree
    std::stable_sort(r.order.begin(), r.order.end(), [&](int a, int b) { return degree(a) < degree(b); });
    int run = 0;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && degree(r.order[i]) != degree(r.order[i - 1])) run = i;
        r.cell_start[i] = run;
    }
    std::string best;
    bool have = false;
    canon_search(*this, std::move(r), best, have);
    return best;
}

const char* err_name(Err e) {
    switch (e) {
        case Err::InconsistentRotation: return "InconsistentRotation";
        case Err::NotTriangulation: return "NotTriangulation";
        case Err::Disconnected: return "Disconnected";
        case Err::NotPlanar: return "NotPlanar";
        case Err::NotMaximal: return "NotMaximal";
        case Err::UnknownVertex: return "UnknownVertex";
        case Err::OrderTooSmall: return "OrderTooSmall";
        case Err::AdjacentPair: return "AdjacentPair";
        case Err::NoCommonFace: return "NoCommonFace";
        case Err::UnknownFace: return "UnknownFace";
        case Err::NonTriangularFace: return "NonTriangularFace";
        case Err::BadFormat: return "BadFormat";
        case Err::BudgetBelowChromatic: return "BudgetBelowChromatic";
        case Err::StartNotBichromatic: return "StartNotBichromatic";
        case Err::AnchorsNotCoordinated: return "AnchorsNotCoordinated";
        case Err::NotFourColorable: return "NotFourColorable";
        case Err::OrderTooLarge: return "OrderTooLarge";
        case Err::WrongDegree: return "WrongDegree";
        case Err::NoValidPair: return "NoValidPair";
        case Err::BadSite: return "BadSite";
        case Err::NotEmptyQuad: return "NotEmptyQuad";
        case Err::NoDiagonal: return "NoDiagonal";
        case Err::NotProper: return "NotProper";
        case Err::CannotReachMaximal: return "CannotReachMaximal";
        case Err::TraceMismatch: return "TraceMismatch";
        case Err::NotTwoTwoFwf: return "NotTwoTwoFwf";
        case Err::NoAlternative: return "NoAlternative";
        case Err::BadPrefix: return "BadPrefix";
        case Err::NoLegalFace: return "NoLegalFace";
        case Err::CapExceeded: return "CapExceeded";
        case Err::CorpusIncomplete: return "CorpusIncomplete";
    }
    return "UnknownError";
}

} // namespace mpg
