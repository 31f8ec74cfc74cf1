#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpg/errors.hpp"
#include "mpg/graph.hpp"

namespace mpg {

// Canonical byte string for an embedded planar (multi)graph, minimized over
// all starting darts and both orientations. Equal certificates <=> isomorphic
// embeddings (reflections collapsed). For 3-connected simple planar graphs
// this coincides with abstract graph isomorphism (Whitney).
struct IsoCertificate {
    std::string bytes;
    auto operator<=>(const IsoCertificate&) const = default;
};

// Embedded planar multigraph given by a rotation system.
//
// Representation: edges are numbered; rot_[v] lists incident edge ids in
// cyclic order. A dart is (vertex, position in rot_[v]); its twin is the
// other end of the same edge id, so parallel edges are unambiguous. Loops are
// never allowed. Values are immutable after construction; every operation
// returns a new value. Vertex ids are compacted order-preservingly after
// surgery.
class Triangulation {
public:
    // Builders (validating).
    static Triangulation from_rotation(int n, const std::vector<std::vector<VertexId>>& neighbor_rot);
    static Triangulation from_edge_list(int n, std::vector<std::pair<int, int>> edges);
    struct Raw {
        int n = 0;
        std::vector<std::pair<int, int>> edges;
        std::vector<std::vector<int>> rot; // edge ids per vertex, cyclic
    };
    static Triangulation from_raw(Raw raw); // internal-grade builder, still validates

    int order() const { return n_; }
    int size() const { return (int)edges_.size(); }
    int degree(VertexId v) const { return (int)rot_[v].size(); }
    int min_degree() const;
    std::vector<int> degree_sequence() const; // ascending
    bool is_simple() const { return simple_; }
    bool is_triangular() const { return triangular_; } // every traced face a 3-gon
    bool is_maximal() const { return simple_ && triangular_ && n_ >= 3; }

    const std::vector<std::pair<int, int>>& edge_list() const { return edges_; }
    std::pair<int, int> edge_ends(int e) const { return edges_[e]; }
    int edge_other(int e, VertexId v) const { return edges_[e].first == v ? edges_[e].second : edges_[e].first; }
    bool adjacent(VertexId u, VertexId v) const;
    int multiplicity(VertexId u, VertexId v) const;
    const std::vector<int>& rotation_edges(VertexId v) const { return rot_[v]; }

    // Neighbors of v in rotation order (the link cycle for simple
    // triangulations).
    std::vector<VertexId> link(VertexId v) const;

    const std::vector<std::vector<VertexId>>& faces() const { return faces_; }
    // Face lookup by vertex set; returns the traced face index or nullopt.
    std::optional<int> find_face(const std::vector<VertexId>& verts) const;
    // Dart walk of a traced face: (tail vertex, position in its rotation).
    std::vector<std::pair<VertexId, int>> face_darts(int face_index) const;

    // Local surgery; all return new values.
    Triangulation delete_edge(VertexId u, VertexId w) const; // one copy
    Triangulation delete_vertex(VertexId v) const;
    Triangulation delete_vertex(VertexId v, std::vector<VertexId>& old_to_new) const;
    Triangulation identify_vertices(VertexId u, VertexId w) const;
    Triangulation identify_vertices(VertexId u, VertexId w, std::vector<VertexId>& old_to_new) const;
    Triangulation insert_vertex_in_face(const std::vector<VertexId>& face_verts) const;

    IsoCertificate certificate() const;
    // Deterministic relabeling to the certificate-minimizing vertex order.
    Triangulation canonical_form() const;
    // v -> its label in the canonical form
    std::vector<int> canonical_labels() const;
    Triangulation mirrored() const;
    // Collapse parallel edge classes to single edges (digon faces first).
    Triangulation simplified() const;

    SGraph simple_graph() const; // abstract adjacency (parallels collapsed)

    bool operator==(const Triangulation& o) const { return certificate() == o.certificate(); }

    // Dart navigation (used by the wheel-operation layer).
    int edge_pos(int e, VertexId v) const; // position of edge e in rot_[v]
    std::pair<VertexId, int> face_step(VertexId v, int pos) const; // next dart along the face left of (v,pos)

private:
    Triangulation() = default;
    void validate_and_index();

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> rot_;
    std::vector<std::vector<VertexId>> faces_;
    std::vector<std::pair<VertexId, int>> face_start_; // first dart of each traced face
    std::vector<std::array<int, 2>> epos_; // per edge: position in rot_[first], rot_[second]
    bool simple_ = false;
    bool triangular_ = false;
    mutable std::string cert_cache_;
};

} // namespace mpg
