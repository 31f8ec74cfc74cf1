#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpg/coloring.hpp"
#include "mpg/triangulation.hpp"
#include "mpg/wheelops.hpp"

namespace mpg {

// Recursive maximal planar graph test: some sequence of degree-3 deletions
// reaching K4. Explores all removal choices with memoization on certificates;
// returns the peeled vertices (ids of g) or nullopt.
std::optional<std::vector<VertexId>> is_fwf(const Triangulation& g);

// Greedy variant (peel any one degree-3 vertex per step); used to probe
// whether peeling is order-independent.
bool is_fwf_greedy(const Triangulation& g);

// color symbols: y g b r <-> colors 1 2 3 4
int color_of_symbol(char c);
char symbol_of_color(int c);

struct Fwf22 {
    Triangulation graph;   // vertex i carries sequence position i
    Coloring coloring;     // per the sequence
    ColorPartition partition;
    size_t partition_count = 0; // 1 when the graph is uniquely 4-colorable
};

// Build the (2,2)-FWF graph determined by a color sequence (prefix ygbryb,
// 7th symbol y or g, later symbols differ from their predecessor).
Fwf22 fwf22_from_color_sequence(const std::string& seq);

struct FwfCatalogEntry {
    int n = 0;
    long formula_count = 0; // 2^{n-7}+1 (n>=7), 1 for n=5,6
    std::vector<Triangulation> graphs; // pairwise non-isomorphic, sorted by certificate
    std::vector<IsoCertificate> certs;
    std::string to_json() const;
};

// All pairwise non-isomorphic (2,2)-FWF graphs of order n by exhaustive
// insertion search with certificate dedup.
FwfCatalogEntry enumerate_fwf22(int n);

struct StarExtension {
    Triangulation base;  // the (2,2)-FWF graph
    Triangulation graph; // G*xuy
    Coloring natural;
    VertexId x = -1, u = -1, y = -1, usplit = -1, center = -1;
};
StarExtension star_extension_natural_coloring(const Triangulation& g22);

struct AlternativeColoring {
    Coloring coloring;
    std::string route; // "same-color-ends", "adjacent-recipe", "cascade", "exhaustive"
};
// A proper 4-coloring of G*xuy whose partition differs from the natural one.
AlternativeColoring alternative_coloring(const StarExtension& gx);

} // namespace mpg
