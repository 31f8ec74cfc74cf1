#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpg/graph.hpp"
#include "mpg/triangulation.hpp"

namespace mpg {

struct Coloring {
    std::vector<int> assignment; // vertex -> color in 1..k
    int k = 4;

    int operator[](VertexId v) const { return assignment[v]; }
    bool proper_on(const SGraph& g) const;
};

using ColorClass = std::vector<VertexId>;
// Normalized: classes ordered by least element, members ascending.
using ColorPartition = std::vector<ColorClass>;

struct PartitionSet {
    int k = 4;
    std::vector<ColorPartition> partitions; // lexicographically sorted, no duplicates
    size_t count() const { return partitions.size(); }
    bool contains(const ColorPartition& p) const;
};

ColorPartition partition_of(const Coloring& f);
Coloring coloring_from_partition(const ColorPartition& p, int n, int k);
std::string to_json(const PartitionSet& ps);

// All partitions of V into at most k nonempty independent classes
// (class-assignment backtracking, first vertex pinned to class 1).
PartitionSet enumerate_partitions(const SGraph& g, int k);
inline PartitionSet enumerate_partitions(const Triangulation& t, int k) {
    return enumerate_partitions(t.simple_graph(), k);
}

// Exact count by backtracking; the independent oracle against polynomial
// evaluation.
long long count_proper_colorings(const SGraph& g, int k);
inline long long count_proper_colorings(const Triangulation& t, int k) {
    return count_proper_colorings(t.simple_graph(), k);
}

int chromatic_number(const SGraph& g);
inline int chromatic_number(const Triangulation& t) { return chromatic_number(t.simple_graph()); }

bool is_uniquely_colorable(const SGraph& g, int k);
inline bool is_uniquely_colorable(const Triangulation& t, int k) {
    return is_uniquely_colorable(t.simple_graph(), k);
}

// Sum over partitions of k!/(k-|P|)!; equals the labeled coloring count.
long long colorings_from_partitions(const PartitionSet& ps);

std::vector<VertexId> kempe_component(const SGraph& g, const Coloring& f, int ci, int cj, VertexId start);
Coloring kempe_interchange(const SGraph& g, const Coloring& f, int ci, int cj, VertexId start);

struct ColorFrame {
    std::vector<VertexId> anchors;                        // color axes v_1..v_k
    std::vector<std::vector<VertexId>> invariant_groups;  // V_i'
    std::vector<VertexId> invariant_set;                  // V'
    std::vector<VertexId> variant_set;                    // V^c
    std::vector<VertexId> boundary;                       // V''
    std::vector<std::pair<VertexId, VertexId>> edge_cut;  // E(V^c, V'), cut side first
};

ColorFrame color_frame(const SGraph& g, const std::vector<VertexId>& anchors);
inline ColorFrame color_frame(const Triangulation& t, const std::vector<VertexId>& anchors) {
    return color_frame(t.simple_graph(), anchors);
}

// Quotient reached by identifying variant-set vertices that share a class in
// some partition, until G[V^c] is complete. Works on the abstract graph; the
// quotient of an embedded graph need not stay embeddable.
struct StandardForm {
    SGraph graph;
    std::vector<std::vector<VertexId>> merged_from; // quotient id -> original ids
    std::vector<VertexId> anchors;                  // anchor ids in the quotient
    ColorFrame frame;                               // frame of the quotient
};
StandardForm standard_form(const SGraph& g, const std::vector<VertexId>& anchors);

struct NearWitness {
    std::vector<VertexId> anchors;            // 4 vertices, distinct classes in every partition
    std::vector<VertexId> invariant_vertices; // V', ascending; labels i in subgraph = invariant_vertices[i]
    SGraph invariant_subgraph;                // G[V']
    bool subgraph_unique = false;             // direct uniqueness check of G[V']
};
std::optional<NearWitness> uniquely_near_4_witness(const SGraph& g);
inline std::optional<NearWitness> uniquely_near_4_witness(const Triangulation& t) {
    return uniquely_near_4_witness(t.simple_graph());
}

} // namespace mpg
