#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "mpg/fwf.hpp"
#include "mpg/corpus.hpp"

using namespace mpg;

TEST_CASE("recursive-graph recognition") {
    CHECK(is_fwf(fixtures::k4()).has_value());
    CHECK(is_fwf(fixtures::k4())->empty());
    CHECK_FALSE(is_fwf(fixtures::octahedron()).has_value()); // no degree-3 vertex
    CHECK_FALSE(is_fwf(fixtures::icosahedron()).has_value());

    auto t5 = fixtures::mpg5();
    auto peel = is_fwf(t5);
    REQUIRE(peel.has_value());
    CHECK(peel->size() == 1);
}

TEST_CASE("peeling replay reaches K4") {
    auto f9 = fwf22_from_color_sequence("ygbrybgyg");
    auto peel = is_fwf(f9.graph);
    REQUIRE(peel.has_value());
    CHECK(peel->size() == 5);
    Triangulation cur = f9.graph;
    std::vector<VertexId> ids(cur.order());
    for (int i = 0; i < cur.order(); ++i) ids[i] = i;
    for (VertexId orig : *peel) {
        // translate original id to the current graph
        int cur_id = -1;
        for (int i = 0; i < (int)ids.size(); ++i)
            if (ids[i] == orig) cur_id = i;
        REQUIRE(cur_id >= 0);
        CHECK(cur.degree(cur_id) == 3);
        std::vector<VertexId> map;
        cur = cur.delete_vertex(cur_id, map);
        std::vector<VertexId> nids(cur.order());
        for (int i = 0; i < (int)ids.size(); ++i)
            if (i != cur_id) nids[map[i]] = ids[i];
        ids = nids;
    }
    CHECK(cur.order() == 4);
    CHECK(cur.is_maximal());
}

TEST_CASE("color sequences build the expected graphs") {
    auto f6 = fwf22_from_color_sequence("ygbryb");
    CHECK(f6.graph.order() == 6);
    CHECK(f6.partition_count == 1);
    CHECK(f6.coloring.proper_on(f6.graph.simple_graph()));
    // central vertex: label 3 (the 4th) has full degree
    CHECK(f6.graph.degree(3) == 5);

    auto f9 = fwf22_from_color_sequence("ygbrybgyg");
    CHECK(f9.graph.order() == 9);
    CHECK(f9.partition_count == 1);
    int d3 = 0;
    std::vector<VertexId> deg3;
    for (int v = 0; v < 9; ++v)
        if (f9.graph.degree(v) == 3) {
            ++d3;
            deg3.push_back(v);
        }
    CHECK(d3 == 2);
    REQUIRE(deg3.size() == 2);
    CHECK_FALSE(f9.graph.adjacent(deg3[0], deg3[1]));
    // distance exactly 2
    auto sg = f9.graph.simple_graph();
    CHECK((sg.adj[deg3[0]] & sg.adj[deg3[1]]) != 0);
    // one full-degree central vertex
    int central = 0;
    for (int v = 0; v < 9; ++v) central += f9.graph.degree(v) == 8;
    CHECK(central == 1);
}

TEST_CASE("bad sequences are rejected") {
    CHECK_THROWS_AS(fwf22_from_color_sequence("gybryb"), GraphError);  // c1 must be y
    CHECK_THROWS_AS(fwf22_from_color_sequence("ygbrybr"), GraphError); // 7th must be y or g
    CHECK_THROWS_AS(fwf22_from_color_sequence("ygbrybgg"), GraphError); // repeat
    CHECK_THROWS_AS(fwf22_from_color_sequence("ygbrybgyq"), GraphError); // alphabet
    bool threw = false;
    try {
        fwf22_from_color_sequence("gybryb");
    } catch (const GraphError& e) {
        threw = true;
        CHECK(e.code() == Err::BadPrefix);
    }
    CHECK(threw);
}

TEST_CASE("catalog counts: formula right at 8, undercounts from 9") {
    CHECK(enumerate_fwf22(5).graphs.size() == 1);
    CHECK(enumerate_fwf22(6).graphs.size() == 1);
    CHECK(enumerate_fwf22(7).graphs.size() == 2);
    auto e8 = enumerate_fwf22(8);
    CHECK(e8.graphs.size() == 3); // the formula's value; the prose claims 4
    CHECK(e8.formula_count == 3);
    CHECK(enumerate_fwf22(9).graphs.size() == 6);  // formula says 5
    CHECK(enumerate_fwf22(10).graphs.size() == 10); // formula says 9
}

TEST_CASE("catalog members are uniquely colorable recursive graphs") {
    for (int n = 5; n <= 8; ++n) {
        auto cat = enumerate_fwf22(n);
        for (const auto& g : cat.graphs) {
            CHECK(is_uniquely_colorable(g, 4));
            CHECK(is_fwf(g).has_value());
        }
    }
}

TEST_CASE("sequence graphs appear in the catalog") {
    auto f9 = fwf22_from_color_sequence("ygbrybgyg");
    auto cat = enumerate_fwf22(9);
    bool found = false;
    for (const auto& c : cat.certs) found |= c == f9.graph.certificate();
    CHECK(found);
}

TEST_CASE("star extension carries a proper natural coloring") {
    for (const std::string& seq : {"ygbryb", "ygbryby", "ygbrybg", "ygbrybgyg"}) {
        auto base = fwf22_from_color_sequence(seq);
        auto ext = star_extension_natural_coloring(base.graph);
        CHECK(ext.graph.order() == base.graph.order() + 2);
        CHECK(ext.graph.is_maximal());
        CHECK(ext.natural.proper_on(ext.graph.simple_graph()));
        CHECK(ext.graph.degree(ext.center) == 4);
        CHECK(ext.natural.assignment[ext.usplit] == ext.natural.assignment[ext.u]);
        int cv = ext.natural.assignment[ext.center];
        CHECK(cv != ext.natural.assignment[ext.x]);
        CHECK(cv != ext.natural.assignment[ext.u]);
        CHECK(cv != ext.natural.assignment[ext.y]);
    }
    CHECK_THROWS_AS(star_extension_natural_coloring(fixtures::octahedron()), GraphError);
}

TEST_CASE("alternative colorings exist and differ from the natural partition") {
    for (const std::string& seq : {"ygbryb", "ygbryby", "ygbrybg", "ygbrybgyg", "ygbrybygy"}) {
        auto base = fwf22_from_color_sequence(seq);
        auto ext = star_extension_natural_coloring(base.graph);
        auto alt = alternative_coloring(ext);
        CHECK(alt.coloring.proper_on(ext.graph.simple_graph()));
        CHECK(partition_of(alt.coloring) != partition_of(ext.natural));
    }
}

TEST_CASE("adjacent-type alternative recolors both ends alike") {
    // order-7 adjacent type: the direct recipe turns x and y into one class
    auto base = fwf22_from_color_sequence("ygbryby");
    auto ext = star_extension_natural_coloring(base.graph);
    auto alt = alternative_coloring(ext);
    CHECK(alt.coloring.proper_on(ext.graph.simple_graph()));
    if (alt.route == "adjacent-recipe") {
        CHECK(alt.coloring.assignment[ext.x] == alt.coloring.assignment[ext.y]);
    }
    CHECK(partition_of(alt.coloring) != partition_of(ext.natural));
}

TEST_CASE("five-wheel colored contraction of the order-6 graph has two partitions") {
    auto f6 = fwf22_from_color_sequence("ygbryb");
    auto ps = enumerate_partitions(f6.graph, 4);
    REQUIRE(ps.count() == 1);
    Coloring f = coloring_from_partition(ps.partitions[0], 6, 4);
    for (int v = 0; v < 6; ++v) {
        if (f6.graph.degree(v) != 5) continue;
        auto r = colored_contract(f6.graph, f, v);
        CHECK(r.result.order() == 4);
        CHECK(enumerate_partitions(r.result, 4).count() == 2);
    }
}

TEST_CASE("degree-3 vertex structure across the census") {
    // recursive graphs of order >= 5 have >= 2 pairwise non-adjacent
    // degree-3 vertices; no triangulation has exactly two adjacent ones or
    // three mutually adjacent ones
    Corpus corpus(CorpusOptions{.cap = 9});
    for (int n = 5; n <= 9; ++n) {
        for (const auto& g : corpus.at(n)) {
            std::vector<VertexId> d3;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == 3) d3.push_back(v);
            if (is_fwf(g)) {
                CHECK(d3.size() >= 2);
                for (size_t i = 0; i < d3.size(); ++i)
                    for (size_t j = i + 1; j < d3.size(); ++j) CHECK_FALSE(g.adjacent(d3[i], d3[j]));
            }
            if (d3.size() == 2) CHECK_FALSE(g.adjacent(d3[0], d3[1]));
            if (d3.size() == 3) {
                bool all_adj = g.adjacent(d3[0], d3[1]) && g.adjacent(d3[0], d3[2]) && g.adjacent(d3[1], d3[2]);
                CHECK_FALSE(all_adj);
            }
        }
    }
}

TEST_CASE("a lone degree-3 vertex peels down to minimum degree 4") {
    Corpus corpus(CorpusOptions{.cap = 9});
    long exercised = 0;
    for (int n = 7; n <= 9; ++n) {
        for (const auto& g : corpus.at(n)) {
            std::vector<VertexId> d3;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == 3) d3.push_back(v);
            if (d3.size() != 1) continue;
            ++exercised;
            Triangulation cur = g;
            for (;;) {
                int pick = -1;
                for (int v = 0; v < cur.order(); ++v)
                    if (cur.degree(v) == 3) pick = v;
                if (pick < 0) break;
                cur = cur.delete_vertex(pick);
            }
            CHECK(cur.min_degree() >= 4);
        }
    }
    CHECK(exercised > 0);
}

TEST_CASE("the central vertex sits alone in its class") {
    for (int n = 5; n <= 9; ++n) {
        for (const auto& g : enumerate_fwf22(n).graphs) {
            auto ps = enumerate_partitions(g, 4);
            REQUIRE(ps.count() == 1);
            for (int v = 0; v < g.order(); ++v) {
                if (g.degree(v) != g.order() - 1) continue;
                for (const auto& cls : ps.partitions[0])
                    for (int w : cls)
                        if (w == v) CHECK(cls.size() == 1);
            }
        }
    }
}
