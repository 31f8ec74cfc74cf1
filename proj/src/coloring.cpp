#include "mpg/coloring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "json.hpp"

namespace mpg {

bool Coloring::proper_on(const SGraph& g) const {
    for (int u = 0; u < g.n; ++u) {
        if (assignment[u] < 1 || assignment[u] > k) return false;
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v) && assignment[u] == assignment[v]) return false;
    }
    return true;
}

bool PartitionSet::contains(const ColorPartition& p) const {
    return std::binary_search(partitions.begin(), partitions.end(), p);
}

ColorPartition partition_of(const Coloring& f) {
    ColorPartition out;
    std::vector<int> class_of_color(f.k + 1, -1);
    for (int v = 0; v < (int)f.assignment.size(); ++v) {
        int c = f.assignment[v];
        if (class_of_color[c] < 0) {
            class_of_color[c] = (int)out.size();
            out.push_back({});
        }
        out[class_of_color[c]].push_back(v);
    }
    std::sort(out.begin(), out.end(),
              [](const ColorClass& a, const ColorClass& b) { return a.front() < b.front(); });
    return out;
}

Coloring coloring_from_partition(const ColorPartition& p, int n, int k) {
    Coloring f;
    f.k = k;
    f.assignment.assign(n, 0);
    for (int c = 0; c < (int)p.size(); ++c)
        for (int v : p[c]) f.assignment[v] = c + 1;
    return f;
}

std::string to_json(const PartitionSet& ps) {
    nlohmann::json j;
    j["k"] = ps.k;
    j["count"] = ps.partitions.size();
    auto arr = nlohmann::json::array();
    for (const auto& p : ps.partitions) arr.push_back(p);
    j["partitions"] = arr;
    return j.dump();
}

PartitionSet enumerate_partitions(const SGraph& g, int k) {
    PartitionSet out;
    out.k = k;
    if (k < 1 || g.n == 0) return out;
    std::vector<uint32_t> class_mask; // members bitmask per class
    std::vector<std::vector<int>> classes;
    std::function<void(int)> rec = [&](int v) {
        if (v == g.n) {
            out.partitions.push_back(classes);
            return;
        }
        for (size_t c = 0; c < classes.size(); ++c) {
            if (g.adj[v] & class_mask[c]) continue;
            classes[c].push_back(v);
            class_mask[c] |= 1u << v;
            rec(v + 1);
            class_mask[c] &= ~(1u << v);
            classes[c].pop_back();
        }
        if ((int)classes.size() < k) {
            classes.push_back({v});
            class_mask.push_back(1u << v);
            rec(v + 1);
            class_mask.pop_back();
            classes.pop_back();
        }
    };
    rec(0);
    std::sort(out.partitions.begin(), out.partitions.end());
    return out;
}

namespace {

// vertex order maximizing already-placed neighbors, per step
std::vector<int> constraint_order(const SGraph& g) {
    std::vector<int> order;
    uint32_t placed = 0;
    for (int step = 0; step < g.n; ++step) {
        int best = -1, bestcnt = -1;
        for (int v = 0; v < g.n; ++v) {
            if ((placed >> v) & 1u) continue;
            int c = __builtin_popcount(g.adj[v] & placed);
            if (c > bestcnt) {
                bestcnt = c;
                best = v;
            }
        }
        order.push_back(best);
        placed |= 1u << best;
    }
    return order;
}

} // namespace

long long count_proper_colorings(const SGraph& g, int k) {
    if (k < 0) return 0;
    if (g.n == 0) return 1;
    if (k == 0) return 0;
    auto order = constraint_order(g);
    std::vector<uint32_t> earlier(g.n); // neighbors among earlier-ordered vertices
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    for (int i = 0; i < g.n; ++i) {
        uint32_t m = 0;
        for (int j = 0; j < i; ++j)
            if (g.has_edge(order[i], order[j])) m |= 1u << j;
        earlier[i] = m;
    }
    std::vector<int> color(g.n, 0);
    long long total = 0;
    std::function<void(int)> rec = [&](int i) {
        if (i == g.n) {
            ++total;
            return;
        }
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            uint32_t m = earlier[i];
            while (m && ok) {
                int j = __builtin_ctz(m);
                m &= m - 1;
                ok = color[j] != c;
            }
            if (!ok) continue;
            color[i] = c;
            rec(i + 1);
        }
        color[i] = 0;
    };
    rec(0);
    return total;
}

int chromatic_number(const SGraph& g) {
    if (g.n == 0) fail(Err::UnknownVertex, "chromatic_number: empty graph");
    for (int k = 1; k <= g.n; ++k)
        if (count_proper_colorings(g, k) > 0) return k;
    return g.n;
}

bool is_uniquely_colorable(const SGraph& g, int k) {
    int chi = chromatic_number(g);
    if (k < chi) fail(Err::BudgetBelowChromatic, "color budget below chromatic number");
    return enumerate_partitions(g, k).count() == 1;
}

long long colorings_from_partitions(const PartitionSet& ps) {
    long long total = 0;
    for (const auto& p : ps.partitions) {
        long long term = 1;
        for (int i = 0; i < (int)p.size(); ++i) term *= ps.k - i;
        total += term;
    }
    return total;
}

std::vector<VertexId> kempe_component(const SGraph& g, const Coloring& f, int ci, int cj, VertexId start) {
    if (start < 0 || start >= g.n) fail(Err::UnknownVertex, "kempe: no such vertex");
    if (f.assignment[start] != ci && f.assignment[start] != cj)
        fail(Err::StartNotBichromatic, "kempe: start vertex not colored i or j");
    std::vector<VertexId> comp;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack = {start};
    seen[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int w = 0; w < g.n; ++w) {
            if (!g.has_edge(v, w) || seen[w]) continue;
            if (f.assignment[w] == ci || f.assignment[w] == cj) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

Coloring kempe_interchange(const SGraph& g, const Coloring& f, int ci, int cj, VertexId start) {
    auto comp = kempe_component(g, f, ci, cj, start);
    Coloring out = f;
    for (int v : comp) {
        if (out.assignment[v] == ci)
            out.assignment[v] = cj;
        else
            out.assignment[v] = ci;
    }
    return out;
}

ColorFrame color_frame(const SGraph& g, const std::vector<VertexId>& anchors) {
    const int k = (int)anchors.size();
    for (int v : anchors)
        if (v < 0 || v >= g.n) fail(Err::UnknownVertex, "color_frame: bad anchor");
    PartitionSet ps = enumerate_partitions(g, k);
    if (ps.partitions.empty()) fail(Err::AnchorsNotCoordinated, "graph has no k-partition at all");

    ColorFrame fr;
    fr.anchors = anchors;
    fr.invariant_groups.assign(k, {});
    std::vector<uint32_t> groups(k, ~0u);
    for (const auto& p : ps.partitions) {
        std::vector<int> cls(g.n, -1);
        for (int c = 0; c < (int)p.size(); ++c)
            for (int v : p[c]) cls[v] = c;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (cls[anchors[i]] == cls[anchors[j]])
                    fail(Err::AnchorsNotCoordinated, "a partition merges two anchors");
        for (int i = 0; i < k; ++i) {
            uint32_t mask = 0;
            for (int v : p[cls[anchors[i]]]) mask |= 1u << v;
            groups[i] &= mask;
        }
    }
    uint32_t vprime = 0;
    for (int i = 0; i < k; ++i) {
        for (int v = 0; v < g.n; ++v)
            if ((groups[i] >> v) & 1u) fr.invariant_groups[i].push_back(v);
        vprime |= groups[i];
    }
    for (int v = 0; v < g.n; ++v)
        if ((vprime >> v) & 1u) fr.invariant_set.push_back(v);
    uint32_t vc = ~vprime & (g.n == 32 ? ~0u : ((1u << g.n) - 1));
    for (int v = 0; v < g.n; ++v)
        if ((vc >> v) & 1u) fr.variant_set.push_back(v);
    uint32_t boundary = 0;
    for (int u = 0; u < g.n; ++u) {
        if (!((vc >> u) & 1u)) continue;
        uint32_t hit = g.adj[u] & vprime;
        boundary |= hit;
        for (int v = 0; v < g.n; ++v)
            if ((hit >> v) & 1u) fr.edge_cut.push_back({u, v});
    }
    for (int v = 0; v < g.n; ++v)
        if ((boundary >> v) & 1u) fr.boundary.push_back(v);
    std::sort(fr.edge_cut.begin(), fr.edge_cut.end());
    return fr;
}

StandardForm standard_form(const SGraph& g, const std::vector<VertexId>& anchors) {
    StandardForm sf;
    sf.graph = g;
    sf.anchors = anchors;
    sf.merged_from.resize(g.n);
    for (int v = 0; v < g.n; ++v) sf.merged_from[v] = {v};

    for (;;) {
        ColorFrame fr = color_frame(sf.graph, sf.anchors); // throws if anchors stop being coordinated
        uint32_t vc = 0;
        for (int v : fr.variant_set) vc |= 1u << v;
        PartitionSet ps = enumerate_partitions(sf.graph, (int)sf.anchors.size());
        int mu = -1, mv = -1;
        for (const auto& p : ps.partitions) {
            for (const auto& cls : p) {
                for (size_t i = 0; i < cls.size() && mu < 0; ++i)
                    for (size_t j = i + 1; j < cls.size() && mu < 0; ++j)
                        if (((vc >> cls[i]) & 1u) && ((vc >> cls[j]) & 1u)) {
                            mu = cls[i];
                            mv = cls[j];
                        }
                if (mu >= 0) break;
            }
            if (mu >= 0) break;
        }
        if (mu < 0) {
            sf.frame = fr;
            return sf;
        }
        // contract mv into mu, compacting ids above mv
        if (mu > mv) std::swap(mu, mv);
        SGraph h = sf.graph.contracted(mu, mv);
        std::vector<std::vector<VertexId>> merged(h.n);
        for (int v = 0; v < sf.graph.n; ++v) {
            int id = v == mv ? mu : v;
            if (id > mv) --id;
            for (int orig : sf.merged_from[v]) merged[id].push_back(orig);
        }
        for (auto& m : merged) std::sort(m.begin(), m.end());
        for (auto& a : sf.anchors) {
            if (a == mv) a = mu;
            if (a > mv) --a;
        }
        sf.graph = h;
        sf.merged_from = merged;
    }
}

std::optional<NearWitness> uniquely_near_4_witness(const SGraph& g) {
    if (chromatic_number(g) > 4) fail(Err::NotFourColorable, "graph is not 4-colorable");
    PartitionSet ps = enumerate_partitions(g, 4);
    std::vector<std::vector<int>> cls;
    for (const auto& p : ps.partitions) {
        std::vector<int> c(g.n, -1);
        for (int i = 0; i < (int)p.size(); ++i)
            for (int v : p[i]) c[v] = i;
        cls.push_back(c);
    }
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                for (int d = c + 1; d < g.n; ++d) {
                    bool ok = true;
                    for (const auto& cl : cls) {
                        int x[4] = {cl[a], cl[b], cl[c], cl[d]};
                        for (int i = 0; i < 4 && ok; ++i)
                            for (int j = i + 1; j < 4; ++j)
                                if (x[i] == x[j]) {
                                    ok = false;
                                    break;
                                }
                        if (!ok) break;
                    }
                    if (!ok) continue;
                    NearWitness w;
                    w.anchors = {a, b, c, d};
                    ColorFrame fr = color_frame(g, w.anchors);
                    w.invariant_vertices = fr.invariant_set;
                    uint32_t mask = 0;
                    for (int v : fr.invariant_set) mask |= 1u << v;
                    w.invariant_subgraph = g.induced(mask);
                    w.subgraph_unique = is_uniquely_colorable(w.invariant_subgraph, 4);
                    return w;
                }
    return std::nullopt;
}

} // namespace mpg
