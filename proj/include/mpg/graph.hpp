#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpg/errors.hpp"

namespace mpg {

using VertexId = int;

// Simple undirected graph on at most 32 vertices, adjacency kept as bitmasks.
// This is the workhorse for coloring enumeration and deletion-contraction,
// where embeddings are irrelevant and raw speed matters.
struct SGraph {
    int n = 0;
    std::vector<uint32_t> adj;

    SGraph() = default;
    explicit SGraph(int order) : n(order), adj(order, 0) {
        if (order < 0 || order > 32) fail(Err::OrderTooLarge, "SGraph supports up to 32 vertices");
    }

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    void add_edge(int u, int v) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    void remove_edge(int u, int v) {
        adj[u] &= ~(1u << v);
        adj[v] &= ~(1u << u);
    }
    int degree(int u) const { return __builtin_popcount(adj[u]); }
    long edge_count() const {
        long s = 0;
        for (int u = 0; u < n; ++u) s += degree(u);
        return s / 2;
    }
    std::vector<std::pair<int, int>> edges() const;

    bool is_complete() const;
    bool connected() const;

    // Removes vertex v, compacting ids above it downward.
    SGraph without_vertex(int v) const;
    // Identifies non-adjacent u,v (id of the merged vertex = min(u,v) after compaction).
    SGraph contracted(int u, int v) const;
    SGraph induced(uint32_t subset) const;

    std::vector<int> degree_sequence() const; // ascending

    // Canonical adjacency key: bytes identical iff the graphs are isomorphic.
    // Refinement plus backtracking over cells; intended for small graphs.
    std::string canonical_key() const;
};

} // namespace mpg
