#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpg/coloring.hpp"
#include "mpg/triangulation.hpp"

namespace mpg {

// Dart-level building blocks shared by the wheel operations and the corpus
// generator. All take and return whole values.
namespace surgery {

// Insert a new vertex joined to every corner of a traced face (any length;
// a digon face gives the 2-wheel hub). Returns the new graph; the new vertex
// is the highest id.
Triangulation insert_center(const Triangulation& g, int face_index);

// Insert a new edge between two corners of a traced face, splitting it.
// Adjacent corners create a digon. Returns the new graph and the new edge id.
std::pair<Triangulation, int> insert_edge(const Triangulation& g, int face_index, int corner_i, int corner_j);

// Extend-2-wheel: double the edge between two adjacent corners of a face and
// put the wheel hub inside the digon.
Triangulation extend2(const Triangulation& g, int face_index, int corner_i, int corner_j);

// Extend-4-wheel on the path x-u-y, splitting u along the darts at positions
// px, py of its rotation. The new split vertex and the new degree-4 center are
// the two highest ids (center last).
Triangulation extend4(const Triangulation& g, VertexId u, int px, int py);

// Extend-5-wheel on a funnel: stem s, the stem's corner of the face
// (s,b1,b2), and the dart position of the top t in rot(s). The new split
// vertex and the degree-5 center are the two highest ids (center last).
Triangulation extend5(const Triangulation& g, VertexId s, int face_index, int pt);

// Vertex split (inverse of contracting an edge with exactly two common
// neighbors); both halves keep the corner darts at positions px, py and get
// joined by a new edge. Used by the independent enumeration strategy.
Triangulation split_vertex(const Triangulation& g, VertexId u, int px, int py);

} // namespace surgery

struct ContractionStep {
    int kind = 0;      // wheel size
    VertexId center = -1;
    std::vector<std::vector<VertexId>> merged; // identified groups, pre-step ids
    std::optional<Coloring> coloring_before;
    std::optional<Coloring> coloring_after;
    std::optional<Triangulation> before; // pre-step snapshot (makes the step invertible)
    IsoCertificate before_cert, after_cert;
    std::optional<char> six_type; // 'L' line, 'S' star, 'T' up-and-down triangles
};

struct ContractionTrace {
    std::vector<ContractionStep> steps;
    IsoCertificate initial, final_cert;
    std::string to_json() const;
};

// Contracting k-wheel at v, k in {2,3,4,5}. For k=4,5 `pair_choice` overrides
// the default pair (smaller merged id first); -1 picks the default.
std::pair<Triangulation, ContractionStep> contract_wheel(const Triangulation& g, VertexId v, int k,
                                                         int pair_choice = -1);

// Plain extensions; each returns the new graph and the inverting step record.
std::pair<Triangulation, ContractionStep> extend_wheel_face(const Triangulation& g,
                                                            const std::vector<VertexId>& face);
std::pair<Triangulation, ContractionStep> extend_wheel_path(const Triangulation& g, VertexId x, VertexId u,
                                                            VertexId y);
std::pair<Triangulation, ContractionStep> extend_wheel_funnel(const Triangulation& g, VertexId top, VertexId stem,
                                                              VertexId bottom1, VertexId bottom2);

// Contract repeatedly (lowest degree first, ties by canonical order) down to
// K3, recording every step.
ContractionTrace reduce_to_k3(const Triangulation& g);

// Coloring-based contraction: delete v, then identify same-colored link
// vertices until the result is maximal planar (canonical merge order with
// backtracking). Classifies 6-wheel merges as line/star/triangles.
struct ColoredContract {
    Triangulation result;
    Coloring coloring;
    ContractionStep step;
};
ColoredContract colored_contract(const Triangulation& g, const Coloring& f, VertexId v);

// Exact inverse of a contraction step recorded on a graph whose contraction
// equals gprime (certificate match required).
std::pair<Triangulation, Coloring> recover_extend(const Triangulation& gprime, const ContractionStep& step);

} // namespace mpg
