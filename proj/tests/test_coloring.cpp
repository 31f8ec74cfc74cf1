#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "mpg/coloring.hpp"
#include "mpg/corpus.hpp"
#include "mpg/fwf.hpp"

using namespace mpg;

TEST_CASE("octahedron has exactly 4 partitions at k=4, one of them 3-class") {
    auto ps = enumerate_partitions(fixtures::octahedron(), 4);
    CHECK(ps.count() == 4);
    int three_class = 0;
    for (const auto& p : ps.partitions) {
        CHECK(p.size() >= 3);
        CHECK(p.size() <= 4);
        if (p.size() == 3) ++three_class;
    }
    CHECK(three_class == 1);
    // classes of the 3-class partition are the antipodal pairs
    for (const auto& p : ps.partitions)
        if (p.size() == 3)
            for (const auto& cls : p) CHECK(cls.size() == 2);
}

TEST_CASE("complete graph counts") {
    auto k4 = fixtures::k4();
    CHECK(enumerate_partitions(k4, 4).count() == 1);
    CHECK(count_proper_colorings(k4, 4) == 24);
    CHECK(count_proper_colorings(k4, 3) == 0);
    CHECK(count_proper_colorings(k4, 0) == 0);
}

TEST_CASE("octahedron coloring count via backtracking and via partitions") {
    auto oct = fixtures::octahedron();
    CHECK(count_proper_colorings(oct, 4) == 96);
    auto ps = enumerate_partitions(oct, 4);
    CHECK(colorings_from_partitions(ps) == 96); // 24 + 3*24
}

TEST_CASE("order-7 min-degree-4 graph has 5 partitions") {
    auto ps = enumerate_partitions(fixtures::bipyramid7(), 4);
    CHECK(ps.count() == 5);
}

TEST_CASE("chromatic numbers") {
    CHECK(chromatic_number(fixtures::k4()) == 4);
    CHECK(chromatic_number(fixtures::octahedron()) == 3);
    CHECK(chromatic_number(fixtures::icosahedron()) == 4);
}

TEST_CASE("counting identity on small fixtures for k in 0..6") {
    for (const auto& t : {fixtures::k4(), fixtures::mpg5(), fixtures::octahedron(), fixtures::bipyramid7()}) {
        for (int k = 1; k <= 6; ++k) {
            auto ps = enumerate_partitions(t, k);
            CHECK(colorings_from_partitions(ps) == count_proper_colorings(t, k));
        }
    }
}

TEST_CASE("unique colorability") {
    CHECK(is_uniquely_colorable(fixtures::k4(), 4));
    CHECK_FALSE(is_uniquely_colorable(fixtures::octahedron(), 4));
    CHECK_THROWS_AS(is_uniquely_colorable(fixtures::k4(), 3), GraphError);
    // the order-5 recursive graph (K4 + one inserted vertex) is uniquely 4-colorable
    auto k4 = fixtures::k4();
    auto t5 = k4.insert_vertex_in_face(k4.faces()[0]);
    CHECK(is_uniquely_colorable(t5, 4));
}

TEST_CASE("kempe components and interchanges") {
    auto oct = fixtures::octahedron();
    auto g = oct.simple_graph();
    auto ps = enumerate_partitions(g, 4);
    // take the 3-class partition, color classes 1,2,3
    ColorPartition p3;
    for (const auto& p : ps.partitions)
        if (p.size() == 3) p3 = p;
    REQUIRE(p3.size() == 3);
    Coloring f = coloring_from_partition(p3, 6, 4);
    REQUIRE(f.proper_on(g));

    // component under colors {1,2} from any vertex colored 1 or 2 is the
    // 4-cycle on classes 1 and 2
    std::vector<VertexId> expect;
    for (int v : p3[0]) expect.push_back(v);
    for (int v : p3[1]) expect.push_back(v);
    std::sort(expect.begin(), expect.end());
    auto comp = kempe_component(g, f, 1, 2, p3[0][0]);
    CHECK(comp == expect);
    // identical component from every start inside it
    for (int v : expect) CHECK(kempe_component(g, f, 1, 2, v) == comp);

    // vertex with no {i,j}-colored neighbor: singleton
    // color 4 unused, so component of a class-3 vertex under {3,4} is itself
    auto single = kempe_component(g, f, 3, 4, p3[2][0]);
    CHECK(single == std::vector<VertexId>{p3[2][0]});

    CHECK_THROWS_AS(kempe_component(g, f, 1, 2, p3[2][0]), GraphError);

    // interchange: proper, involutive
    auto f2 = kempe_interchange(g, f, 1, 2, p3[0][0]);
    CHECK(f2.proper_on(g));
    auto f3 = kempe_interchange(g, f2, 1, 2, p3[0][0]);
    CHECK(f3.assignment == f.assignment);
}

TEST_CASE("some octahedron interchange reaches a different partition") {
    auto g = fixtures::octahedron().simple_graph();
    auto ps = enumerate_partitions(g, 4);
    bool moved = false;
    for (const auto& p : ps.partitions) {
        Coloring f = coloring_from_partition(p, 6, 4);
        for (int i = 1; i <= 4 && !moved; ++i)
            for (int j = i + 1; j <= 4 && !moved; ++j)
                for (int v = 0; v < 6 && !moved; ++v) {
                    if (f.assignment[v] != i && f.assignment[v] != j) continue;
                    auto f2 = kempe_interchange(g, f, i, j, v);
                    if (partition_of(f2) != partition_of(f)) moved = true;
                }
    }
    CHECK(moved);
}

TEST_CASE("kempe interchange is a properness-preserving involution (randomized)") {
    std::mt19937 rng(20240817);
    auto ico = fixtures::icosahedron().simple_graph();
    auto ps = enumerate_partitions(ico, 4);
    REQUIRE(ps.count() > 0);
    std::uniform_int_distribution<int> dp(0, (int)ps.count() - 1);
    std::uniform_int_distribution<int> dc(1, 4);
    std::uniform_int_distribution<int> dv(0, ico.n - 1);
    for (int it = 0; it < 2000; ++it) {
        Coloring f = coloring_from_partition(ps.partitions[dp(rng)], ico.n, 4);
        int i = dc(rng), j = dc(rng);
        if (i == j) continue;
        int v = dv(rng);
        if (f.assignment[v] != i && f.assignment[v] != j) continue;
        auto f2 = kempe_interchange(ico, f, i, j, v);
        CHECK(f2.proper_on(ico));
        auto f3 = kempe_interchange(ico, f2, i, j, v);
        CHECK(f3.assignment == f.assignment);
    }
}

TEST_CASE("color frames") {
    // uniquely 4-colorable: anchors one per class give V' = V, V^c empty
    auto k4 = fixtures::k4();
    auto t5 = k4.insert_vertex_in_face(k4.faces()[0]);
    auto g5 = t5.simple_graph();
    auto ps = enumerate_partitions(g5, 4);
    REQUIRE(ps.count() == 1);
    std::vector<VertexId> anchors;
    for (const auto& cls : ps.partitions[0]) anchors.push_back(cls.front());
    auto fr = color_frame(g5, anchors);
    CHECK(fr.invariant_set.size() == (size_t)g5.n);
    CHECK(fr.variant_set.empty());
    for (int i = 0; i < 4; ++i) {
        bool found = false;
        for (int v : fr.invariant_groups[i]) found |= v == anchors[i];
        CHECK(found);
    }

    // octahedron: its 3-class partition defeats any quadruple
    auto oct = fixtures::octahedron().simple_graph();
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
                for (int d = c + 1; d < 6; ++d)
                    CHECK_THROWS_AS(color_frame(oct, {a, b, c, d}), GraphError);
}

TEST_CASE("standard form: empty variant set leaves graph unchanged; idempotent") {
    auto k4 = fixtures::k4();
    auto t5 = k4.insert_vertex_in_face(k4.faces()[0]);
    auto g5 = t5.simple_graph();
    auto ps = enumerate_partitions(g5, 4);
    std::vector<VertexId> anchors;
    for (const auto& cls : ps.partitions[0]) anchors.push_back(cls.front());
    auto sf = standard_form(g5, anchors);
    CHECK(sf.graph.n == g5.n);
    CHECK(sf.frame.variant_set.empty());
    auto sf2 = standard_form(sf.graph, sf.anchors);
    CHECK(sf2.graph.n == sf.graph.n);
    CHECK(sf2.graph.adj == sf.graph.adj);
}

TEST_CASE("uniquely near 4-colorable witnesses") {
    // uniquely 4-colorable graph: witness with V' = V
    auto k4 = fixtures::k4();
    auto t5 = k4.insert_vertex_in_face(k4.faces()[0]);
    auto w = uniquely_near_4_witness(t5.simple_graph());
    REQUIRE(w.has_value());
    CHECK(w->invariant_vertices.size() == 5);
    CHECK(w->subgraph_unique);

    // octahedron: no quadruple survives the 3-class partition
    CHECK_FALSE(uniquely_near_4_witness(fixtures::octahedron().simple_graph()).has_value());
}

TEST_CASE("coordinated-graph lemmas over all small anchor quadruples") {
    // sweep: every coordinated quadruple of every small triangulation
    Corpus corpus(CorpusOptions{.cap = 8});
    long coordinated = 0, nonempty_variant = 0;
    for (int n = 4; n <= 8; ++n) {
        for (const auto& t : corpus.at(n)) {
            auto g = t.simple_graph();
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = b + 1; c < n; ++c)
                        for (int d = c + 1; d < n; ++d) {
                            ColorFrame fr;
                            try {
                                fr = color_frame(g, {a, b, c, d});
                            } catch (const GraphError&) {
                                continue;
                            }
                            ++coordinated;
                            nonempty_variant += !fr.variant_set.empty();
                            // every variant vertex touches at most k-2 invariant groups,
                            // and adding an edge to an untouched group stays colorable
                            for (int u : fr.variant_set) {
                                int touched = 0;
                                std::vector<int> untouched;
                                for (int gi = 0; gi < 4; ++gi) {
                                    bool adj = false;
                                    for (int w : fr.invariant_groups[gi]) adj |= g.has_edge(u, w);
                                    touched += adj;
                                    if (!adj) untouched.push_back(gi);
                                }
                                CHECK(touched <= 2);
                                for (int gi : untouched) {
                                    SGraph h = g;
                                    h.add_edge(u, fr.anchors[gi]);
                                    CHECK(count_proper_colorings(h, 4) > 0);
                                }
                            }
                        }
        }
    }
    CHECK(coordinated > 0);
    CHECK(nonempty_variant > 0); // the sweep exercised nontrivial frames
}

TEST_CASE("deleting a universal singleton class preserves unique colorability one level down") {
    // K4 and the catalog graphs all carry a universal vertex in a singleton class
    auto k4 = fixtures::k4().simple_graph();
    REQUIRE(is_uniquely_colorable(k4, 4));
    CHECK(is_uniquely_colorable(k4.without_vertex(0), 3));

    for (const std::string& seq : {"ygbryb", "ygbryby", "ygbrybg", "ygbrybgyg"}) {
        auto f = fwf22_from_color_sequence(seq);
        int central = -1;
        for (int v = 0; v < f.graph.order(); ++v)
            if (f.graph.degree(v) == f.graph.order() - 1) central = v;
        REQUIRE(central >= 0);
        auto g = f.graph.simple_graph();
        REQUIRE(is_uniquely_colorable(g, 4));
        CHECK(is_uniquely_colorable(g.without_vertex(central), 3));
    }
}

TEST_CASE("labeled-coloring count is k! per partition when all partitions use k classes") {
    auto ico = fixtures::icosahedron();
    auto ps = enumerate_partitions(ico, 4);
    for (const auto& p : ps.partitions) REQUIRE(p.size() == 4);
    CHECK(count_proper_colorings(ico, 4) == 24 * (long long)ps.count());
}
