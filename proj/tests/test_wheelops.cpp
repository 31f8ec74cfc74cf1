#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "mpg/fwf.hpp"
#include "mpg/wheelops.hpp"

using namespace mpg;

TEST_CASE("contract 3-wheel: order-5 graph -> K4") {
    auto t5 = fixtures::mpg5();
    int v3 = -1;
    for (int v = 0; v < 5; ++v)
        if (t5.degree(v) == 3) v3 = v;
    REQUIRE(v3 >= 0);
    auto [k4, st] = contract_wheel(t5, v3, 3);
    CHECK(k4.order() == 4);
    CHECK(k4.is_maximal());
    CHECK(st.kind == 3);

    // recover the original
    auto [back, f] = recover_extend(k4, st);
    CHECK(back.certificate() == t5.certificate());
}

TEST_CASE("contract 4-wheel on the octahedron: degenerate order-4 result") {
    auto oct = fixtures::octahedron();
    auto [r, st] = contract_wheel(oct, 0, 4);
    CHECK(r.order() == 4);
    CHECK(r.is_simple());
    CHECK_FALSE(r.is_maximal()); // K4 minus an edge
    CHECK(st.merged.size() == 1);
    CHECK_THROWS_AS(contract_wheel(oct, 0, 5), GraphError); // wrong degree
}

TEST_CASE("extend 3-wheel adds a degree-3 vertex") {
    auto oct = fixtures::octahedron();
    auto [t7, st] = extend_wheel_face(oct, oct.faces()[0]);
    CHECK(t7.order() == 7);
    CHECK(t7.degree(6) == 3);
    CHECK(t7.is_maximal());
    auto [back, f] = contract_wheel(t7, 6, 3);
    CHECK(back.certificate() == oct.certificate());
}

TEST_CASE("extend 4-wheel: n+2, center degree 4, contract inverts") {
    auto oct = fixtures::octahedron();
    // path 1-0-3 through vertex 0
    auto [t8, st] = extend_wheel_path(oct, 1, 0, 3);
    CHECK(t8.order() == 8);
    CHECK(t8.is_maximal());
    VertexId c = 7;
    CHECK(t8.degree(c) == 4);
    // the split vertex has the center in its link
    auto link = t8.link(c);
    CHECK(link.size() == 4);
    // contracting the new center undoes the extension
    auto [back, st2] = contract_wheel(t8, c, 4);
    CHECK(back.order() == 6);
    CHECK(back.certificate() == oct.certificate());
}

TEST_CASE("extend 5-wheel on a funnel: n+2, center degree 5") {
    auto oct = fixtures::octahedron();
    // funnel: face (1,2,0) with stem 1 and top 5 (adjacent to 1, not on the face)
    auto f = oct.find_face({0, 1, 2});
    REQUIRE(f.has_value());
    auto [t8, st] = extend_wheel_funnel(oct, 5, 1, 0, 2);
    CHECK(t8.order() == 8);
    CHECK(t8.is_maximal());
    CHECK(t8.degree(7) == 5);
    auto [back, st2] = contract_wheel(t8, 7, 5);
    CHECK(back.order() == 6);
}

TEST_CASE("extend/contract certificate round trips across octahedron sites") {
    auto oct = fixtures::octahedron();
    // 3-wheel on every face
    for (const auto& f : oct.faces()) {
        auto [t, st] = extend_wheel_face(oct, f);
        auto [back, st2] = contract_wheel(t, t.order() - 1, 3);
        CHECK(back.certificate() == oct.certificate());
    }
    // 4-wheel on every path x-u-y
    int quads = 0;
    for (int u = 0; u < 6; ++u) {
        auto link = oct.link(u);
        for (size_t i = 0; i < link.size(); ++i)
            for (size_t j = i + 1; j < link.size(); ++j) {
                auto [t, st] = extend_wheel_path(oct, link[i], u, link[j]);
                CHECK(t.is_maximal());
                auto [back, st2] = contract_wheel(t, t.order() - 1, 4);
                // one of the two link pairs of the new center recovers the base
                bool ok = back.certificate() == oct.certificate();
                if (!ok) {
                    auto [back2, st3] = contract_wheel(t, t.order() - 1, 4, 1);
                    ok = back2.certificate() == oct.certificate();
                }
                CHECK(ok);
                ++quads;
            }
    }
    CHECK(quads == 6 * 6);
}

TEST_CASE("2-wheel extension through the surgery layer round-trips") {
    auto oct = fixtures::octahedron();
    // double an edge of face 0 and hang the hub inside
    auto t = surgery::extend2(oct, 0, 0, 1);
    CHECK(t.order() == 7);
    CHECK_FALSE(t.is_simple());
    CHECK(t.is_triangular());
    int hub = 6;
    CHECK(t.degree(hub) == 2);
    auto [back, st] = contract_wheel(t, hub, 2);
    CHECK(back.certificate() == oct.certificate());
}

TEST_CASE("reduce_to_k3") {
    auto [k4trace_g, k4step] = std::pair(fixtures::k4(), 0);
    auto tr = reduce_to_k3(fixtures::k4());
    CHECK(tr.steps.size() == 1);
    CHECK(tr.steps[0].kind == 3);

    auto tro = reduce_to_k3(fixtures::octahedron());
    CHECK(tro.steps.size() >= 2);

    auto tri = reduce_to_k3(fixtures::icosahedron());
    CHECK(tri.steps[0].kind == 5); // min degree 5 forces it
    // every trace ends at K3
    CHECK(tri.final_cert == reduce_to_k3(fixtures::k4()).final_cert);
    CHECK(tro.final_cert == tri.final_cert);

    // replay backwards from the end
    Triangulation cur = fixtures::k4().delete_vertex(0); // K3
    for (auto it = tri.steps.rbegin(); it != tri.steps.rend(); ++it) {
        auto [prev, f] = recover_extend(cur, *it);
        cur = prev;
    }
    CHECK(cur.certificate() == fixtures::icosahedron().certificate());

    // recovery against the wrong base fails
    CHECK_THROWS_AS(recover_extend(fixtures::octahedron(), tri.steps[0]), GraphError);
}

TEST_CASE("colored contraction of a degree-3 vertex is plain deletion") {
    auto k4 = fixtures::k4();
    auto t5 = k4.insert_vertex_in_face(k4.faces()[0]);
    auto ps = enumerate_partitions(t5, 4);
    REQUIRE(ps.count() == 1);
    Coloring f = coloring_from_partition(ps.partitions[0], 5, 4);
    auto r = colored_contract(t5, f, 4);
    CHECK(r.result.order() == 4);
    CHECK(r.step.merged.empty());
    CHECK(r.coloring.proper_on(r.result.simple_graph()));
}

TEST_CASE("colored contraction folds one same-colored pair of a degree-4 link") {
    // octahedron with its 3-chromatic coloring: contract any vertex
    auto oct = fixtures::octahedron();
    auto ps = enumerate_partitions(oct, 4);
    ColorPartition p3;
    for (const auto& p : ps.partitions)
        if (p.size() == 3) p3 = p;
    Coloring f = coloring_from_partition(p3, 6, 4);
    auto r = colored_contract(oct, f, 0);
    CHECK(r.result.order() == 4); // one pair folded
    CHECK(r.step.merged.size() == 1);
    CHECK(r.result.is_simple());
    CHECK(r.coloring.proper_on(r.result.simple_graph()));
}

TEST_CASE("contraction trace serializes to json") {
    auto tr = reduce_to_k3(fixtures::octahedron());
    auto s = tr.to_json();
    CHECK(s.find("steps") != std::string::npos);
    CHECK(s.find("kind") != std::string::npos);
}
