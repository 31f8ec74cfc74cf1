#include "mpg/wheelops.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "mpg/graph6.hpp"

namespace mpg {

namespace surgery {

namespace {
int mod(int a, int m) { return ((a % m) + m) % m; }
} // namespace

Triangulation insert_center(const Triangulation& g, int face_index) {
    auto walk = g.face_darts(face_index);
    Triangulation::Raw raw;
    raw.n = g.order() + 1;
    raw.edges = g.edge_list();
    raw.rot.assign(raw.n, {});
    for (int v = 0; v < g.order(); ++v) raw.rot[v] = g.rotation_edges(v);
    int x = g.order();
    int k = (int)walk.size();
    std::vector<int> eid(k);
    for (int c = 0; c < k; ++c) {
        eid[c] = (int)raw.edges.size();
        raw.edges.push_back({walk[c].first, x});
    }
    // insert per corner at the leaving position; same-vertex corners must be
    // patched in descending position order so indices stay valid
    std::vector<std::pair<std::pair<int, int>, int>> ins; // ((vertex, pos), edge)
    for (int c = 0; c < k; ++c) ins.push_back({{walk[c].first, walk[c].second}, eid[c]});
    std::sort(ins.begin(), ins.end(), [](auto& a, auto& b) {
        if (a.first.first != b.first.first) return a.first.first < b.first.first;
        return a.first.second > b.first.second;
    });
    for (auto& [vp, e] : ins) raw.rot[vp.first].insert(raw.rot[vp.first].begin() + vp.second, e);
    // center rotation: walk[0], then the rest reversed
    raw.rot[x].push_back(eid[0]);
    for (int c = k - 1; c >= 1; --c) raw.rot[x].push_back(eid[c]);
    return Triangulation::from_raw(std::move(raw));
}

std::pair<Triangulation, int> insert_edge(const Triangulation& g, int face_index, int corner_i, int corner_j) {
    auto walk = g.face_darts(face_index);
    int k = (int)walk.size();
    if (corner_i == corner_j || corner_i < 0 || corner_j < 0 || corner_i >= k || corner_j >= k)
        fail(Err::BadSite, "insert_edge: bad corners");
    auto [a, pa] = walk[corner_i];
    auto [b, pb] = walk[corner_j];
    if (a == b) fail(Err::BadSite, "insert_edge: corners share a vertex (loop)");
    Triangulation::Raw raw;
    raw.n = g.order();
    raw.edges = g.edge_list();
    raw.rot.assign(raw.n, {});
    for (int v = 0; v < g.order(); ++v) raw.rot[v] = g.rotation_edges(v);
    int e = (int)raw.edges.size();
    raw.edges.push_back({a, b});
    raw.rot[a].insert(raw.rot[a].begin() + pa, e);
    raw.rot[b].insert(raw.rot[b].begin() + pb, e);
    return {Triangulation::from_raw(std::move(raw)), e};
}

Triangulation extend2(const Triangulation& g, int face_index, int corner_i, int corner_j) {
    auto walk = g.face_darts(face_index);
    int k = (int)walk.size();
    if (mod(corner_j - corner_i, k) != 1 && mod(corner_i - corner_j, k) != 1)
        fail(Err::BadSite, "extend2: corners must be adjacent on the face");
    auto [t, eid] = insert_edge(g, face_index, corner_i, corner_j);
    // the digon bounded by the new edge and the old copy
    for (int fi = 0; fi < (int)t.faces().size(); ++fi) {
        auto w = t.face_darts(fi);
        if (w.size() != 2) continue;
        bool uses = false;
        for (auto& [v, p] : w) uses |= t.rotation_edges(v)[p] == eid;
        if (uses) return insert_center(t, fi);
    }
    fail(Err::BadSite, "extend2: digon face not found");
}

Triangulation extend4(const Triangulation& g, VertexId u, int px, int py) {
    const auto& rot = g.rotation_edges(u);
    int d = (int)rot.size();
    if (px == py || px < 0 || py < 0 || px >= d || py >= d) fail(Err::BadSite, "extend4: bad dart positions");
    int ex = rot[px], ey = rot[py];
    int x = g.edge_other(ex, u), y = g.edge_other(ey, u);
    if (x == y) fail(Err::BadSite, "extend4: path ends coincide");

    Triangulation::Raw raw;
    raw.n = g.order() + 2;
    raw.edges = g.edge_list();
    raw.rot.assign(raw.n, {});
    for (int v = 0; v < g.order(); ++v) raw.rot[v] = g.rotation_edges(v);
    int u2 = g.order(), c = g.order() + 1;

    // arc B (strictly between py and px) moves to u2
    std::vector<int> arcA, arcB;
    for (int s = mod(px + 1, d); s != py; s = mod(s + 1, d)) arcA.push_back(rot[s]);
    for (int s = mod(py + 1, d); s != px; s = mod(s + 1, d)) arcB.push_back(rot[s]);
    for (int e : arcB) {
        auto& [ea, eb] = raw.edges[e];
        if (ea == u) ea = u2;
        if (eb == u) eb = u2;
    }
    int e_u2y = (int)raw.edges.size();
    raw.edges.push_back({u2, y});
    int e_u2x = (int)raw.edges.size();
    raw.edges.push_back({u2, x});
    int e_cx = (int)raw.edges.size();
    raw.edges.push_back({c, x});
    int e_cu = (int)raw.edges.size();
    raw.edges.push_back({c, u});
    int e_cy = (int)raw.edges.size();
    raw.edges.push_back({c, y});
    int e_cu2 = (int)raw.edges.size();
    raw.edges.push_back({c, u2});

    raw.rot[u].clear();
    raw.rot[u].push_back(ex);
    for (int e : arcA) raw.rot[u].push_back(e);
    raw.rot[u].push_back(ey);
    raw.rot[u].push_back(e_cu);

    raw.rot[u2].push_back(e_u2y);
    for (int e : arcB) raw.rot[u2].push_back(e);
    raw.rot[u2].push_back(e_u2x);
    raw.rot[u2].push_back(e_cu2);

    // x: replace the u-dart by [u, c, u2]; y: by [u2, c, u]
    {
        int p = g.edge_pos(ex, x);
        raw.rot[x].erase(raw.rot[x].begin() + p);
        raw.rot[x].insert(raw.rot[x].begin() + p, {ex, e_cx, e_u2x});
    }
    {
        int p = g.edge_pos(ey, y);
        raw.rot[y].erase(raw.rot[y].begin() + p);
        raw.rot[y].insert(raw.rot[y].begin() + p, {e_u2y, e_cy, ey});
    }
    raw.rot[c] = {e_cx, e_cu, e_cy, e_cu2};
    return Triangulation::from_raw(std::move(raw));
}

Triangulation extend5(const Triangulation& g, VertexId s, int face_index, int pt) {
    auto walk = g.face_darts(face_index);
    if (walk.size() != 3) fail(Err::BadSite, "extend5: stem face must be a triangle");
    int ci = -1;
    for (int i = 0; i < 3; ++i)
        if (walk[i].first == s) ci = i;
    if (ci < 0) fail(Err::BadSite, "extend5: stem not on the face");
    // face walk from s: s -> b2 -> b1 -> s
    VertexId b2 = walk[(ci + 1) % 3].first, b1 = walk[(ci + 2) % 3].first;
    if (b1 == b2 || b1 == s || b2 == s) fail(Err::BadSite, "extend5: degenerate funnel face");
    const auto& rot = g.rotation_edges(s);
    int d = (int)rot.size();
    int p_out = walk[ci].second;          // dart s->b2
    int p_in = mod(p_out - 1, d);         // dart s->b1 (corner)
    if (pt < 0 || pt >= d || pt == p_out || pt == p_in) fail(Err::BadSite, "extend5: bad top dart");
    int e_st = rot[pt];
    VertexId t = g.edge_other(e_st, s);
    if (t == b1 || t == b2) fail(Err::BadSite, "extend5: top coincides with a bottom");
    int e_sb1 = rot[p_in], e_sb2 = rot[p_out];

    Triangulation::Raw raw;
    raw.n = g.order() + 2;
    raw.edges = g.edge_list();
    raw.rot.assign(raw.n, {});
    for (int v = 0; v < g.order(); ++v) raw.rot[v] = g.rotation_edges(v);
    int s2 = g.order(), c = g.order() + 1;

    // arcs: A strictly between pt and p_in stays with s; B strictly between
    // p_out and pt moves to s2
    std::vector<int> arcA, arcB;
    for (int q = mod(pt + 1, d); q != p_in; q = mod(q + 1, d)) arcA.push_back(rot[q]);
    for (int q = mod(p_out + 1, d); q != pt; q = mod(q + 1, d)) arcB.push_back(rot[q]);
    for (int e : arcB) {
        auto& [ea, eb] = raw.edges[e];
        if (ea == s) ea = s2;
        if (eb == s) eb = s2;
    }
    {
        auto& [ea, eb] = raw.edges[e_sb2];
        if (ea == s) ea = s2;
        if (eb == s) eb = s2;
    }
    int e_ts2 = (int)raw.edges.size();
    raw.edges.push_back({t, s2});
    int e_ct = (int)raw.edges.size();
    raw.edges.push_back({c, t});
    int e_cs = (int)raw.edges.size();
    raw.edges.push_back({c, s});
    int e_cb1 = (int)raw.edges.size();
    raw.edges.push_back({c, b1});
    int e_cb2 = (int)raw.edges.size();
    raw.edges.push_back({c, b2});
    int e_cs2 = (int)raw.edges.size();
    raw.edges.push_back({c, s2});

    raw.rot[s].clear();
    raw.rot[s].push_back(e_st);
    for (int e : arcA) raw.rot[s].push_back(e);
    raw.rot[s].push_back(e_sb1);
    raw.rot[s].push_back(e_cs);

    raw.rot[s2].push_back(e_sb2);
    for (int e : arcB) raw.rot[s2].push_back(e);
    raw.rot[s2].push_back(e_ts2);
    raw.rot[s2].push_back(e_cs2);

    // t: replace s-dart by [s, c, s2]
    {
        int p = g.edge_pos(e_st, t);
        raw.rot[t].erase(raw.rot[t].begin() + p);
        raw.rot[t].insert(raw.rot[t].begin() + p, {e_st, e_ct, e_ts2});
    }
    // b1: insert c-dart at the leaving position of its face corner (dart b1->s)
    {
        int p = g.edge_pos(e_sb1, b1);
        raw.rot[b1].insert(raw.rot[b1].begin() + p, e_cb1);
    }
    // b2: insert c-dart at the leaving position of its corner (dart b2->b1)
    {
        int e_b2b1 = -1;
        // the face edge between b1 and b2 is the walk edge at corner of b2
        auto wb = walk[(ci + 1) % 3]; // (b2, pos of dart b2->b1)
        e_b2b1 = g.rotation_edges(b2)[wb.second];
        (void)e_b2b1;
        raw.rot[b2].insert(raw.rot[b2].begin() + wb.second, e_cb2);
    }
    raw.rot[c] = {e_ct, e_cs, e_cb1, e_cb2, e_cs2};
    return Triangulation::from_raw(std::move(raw));
}

Triangulation split_vertex(const Triangulation& g, VertexId u, int px, int py) {
    // quad slit u -> u,u2 plus the joining edge; equivalent to extend4
    // followed by replacing the center with a diagonal, done directly
    const auto& rot = g.rotation_edges(u);
    int d = (int)rot.size();
    if (px == py || px < 0 || py < 0 || px >= d || py >= d) fail(Err::BadSite, "split: bad dart positions");
    int ex = rot[px], ey = rot[py];
    int x = g.edge_other(ex, u), y = g.edge_other(ey, u);
    if (x == y) fail(Err::BadSite, "split: corners coincide");

    Triangulation::Raw raw;
    raw.n = g.order() + 1;
    raw.edges = g.edge_list();
    raw.rot.assign(raw.n, {});
    for (int v = 0; v < g.order(); ++v) raw.rot[v] = g.rotation_edges(v);
    int u2 = g.order();
    std::vector<int> arcA, arcB;
    for (int s = mod(px + 1, d); s != py; s = mod(s + 1, d)) arcA.push_back(rot[s]);
    for (int s = mod(py + 1, d); s != px; s = mod(s + 1, d)) arcB.push_back(rot[s]);
    for (int e : arcB) {
        auto& [ea, eb] = raw.edges[e];
        if (ea == u) ea = u2;
        if (eb == u) eb = u2;
    }
    int e_u2y = (int)raw.edges.size();
    raw.edges.push_back({u2, y});
    int e_u2x = (int)raw.edges.size();
    raw.edges.push_back({u2, x});
    int e_uu2 = (int)raw.edges.size();
    raw.edges.push_back({u, u2});

    raw.rot[u].clear();
    raw.rot[u].push_back(ex);
    for (int e : arcA) raw.rot[u].push_back(e);
    raw.rot[u].push_back(ey);
    raw.rot[u].push_back(e_uu2);

    raw.rot[u2].push_back(e_u2y);
    for (int e : arcB) raw.rot[u2].push_back(e);
    raw.rot[u2].push_back(e_u2x);
    raw.rot[u2].push_back(e_uu2);

    {
        int p = g.edge_pos(ex, x);
        raw.rot[x].erase(raw.rot[x].begin() + p);
        raw.rot[x].insert(raw.rot[x].begin() + p, {ex, e_u2x});
    }
    {
        int p = g.edge_pos(ey, y);
        raw.rot[y].erase(raw.rot[y].begin() + p);
        raw.rot[y].insert(raw.rot[y].begin() + p, {e_u2y, ey});
    }
    return Triangulation::from_raw(std::move(raw));
}

} // namespace surgery

namespace {

ContractionStep make_step(int kind, VertexId center, const Triangulation& before, const Triangulation& after) {
    ContractionStep st;
    st.kind = kind;
    st.center = center;
    st.before = before;
    st.before_cert = before.certificate();
    st.after_cert = after.certificate();
    return st;
}

} // namespace

std::pair<Triangulation, ContractionStep> contract_wheel(const Triangulation& g, VertexId v, int k,
                                                         int pair_choice) {
    if (v < 0 || v >= g.order()) fail(Err::UnknownVertex, "contract_wheel: no such vertex");
    if (g.degree(v) != k) fail(Err::WrongDegree, "contract_wheel: center degree does not match k");
    if (k < 2 || k > 5) fail(Err::WrongDegree, "contract_wheel: k must be in 2..5");
    if (g.order() < 4) fail(Err::OrderTooSmall, "contract_wheel: order too small");

    if (k == 2 || k == 3) {
        Triangulation h = g.delete_vertex(v).simplified();
        auto st = make_step(k, v, g, h);
        return {h, st};
    }

    auto link = g.link(v);
    std::vector<std::pair<int, int>> cands;
    if (k == 4) {
        cands = {{0, 2}, {1, 3}};
    } else {
        for (int i = 0; i < 5; ++i) cands.push_back({i, (i + 2) % 5});
    }
    std::vector<std::pair<int, int>> valid;
    for (auto [i, j] : cands) {
        if (link[i] == link[j]) continue;
        if (!g.adjacent(link[i], link[j])) valid.push_back({i, j});
    }
    if (valid.empty()) fail(Err::NoValidPair, "contract_wheel: no non-adjacent link pair");
    std::pair<int, int> pick;
    if (pair_choice >= 0) {
        if (pair_choice >= (int)valid.size()) fail(Err::NoValidPair, "contract_wheel: pair override out of range");
        pick = valid[pair_choice];
    } else {
        pick = *std::min_element(valid.begin(), valid.end(), [&](auto a, auto b) {
            int ma = std::min(link[a.first], link[a.second]), mb = std::min(link[b.first], link[b.second]);
            return ma < mb;
        });
    }
    VertexId a = link[pick.first], b = link[pick.second];
    std::vector<VertexId> m1, m2;
    Triangulation h = g.delete_vertex(v, m1);
    Triangulation r = h.identify_vertices(m1[a], m1[b], m2).simplified();
    auto st = make_step(k, v, g, r);
    st.merged = {{a, b}};
    return {r, st};
}

std::pair<Triangulation, ContractionStep> extend_wheel_face(const Triangulation& g,
                                                            const std::vector<VertexId>& face) {
    Triangulation h = g.insert_vertex_in_face(face);
    auto st = make_step(3, h.order() - 1, g, h);
    return {h, st};
}

std::pair<Triangulation, ContractionStep> extend_wheel_path(const Triangulation& g, VertexId x, VertexId u,
                                                            VertexId y) {
    if (x < 0 || x >= g.order() || y < 0 || y >= g.order() || u < 0 || u >= g.order())
        fail(Err::UnknownVertex, "extend_wheel_path: no such vertex");
    if (x == y || x == u || y == u) fail(Err::BadSite, "extend_wheel_path: path vertices must be distinct");
    if (!g.adjacent(u, x) || !g.adjacent(u, y)) fail(Err::BadSite, "extend_wheel_path: x-u-y is not a path");
    int px = -1, py = -1;
    const auto& rot = g.rotation_edges(u);
    for (int i = 0; i < (int)rot.size(); ++i) {
        VertexId w = g.edge_other(rot[i], u);
        if (w == x && px < 0) px = i;
        if (w == y && py < 0) py = i;
    }
    Triangulation h = surgery::extend4(g, u, px, py);
    auto st = make_step(4, h.order() - 1, g, h);
    return {h, st};
}

std::pair<Triangulation, ContractionStep> extend_wheel_funnel(const Triangulation& g, VertexId top, VertexId stem,
                                                              VertexId bottom1, VertexId bottom2) {
    auto fi = g.find_face({stem, bottom1, bottom2});
    if (!fi) fail(Err::BadSite, "extend_wheel_funnel: stem/bottom triangle is not a face");
    if (!g.adjacent(stem, top)) fail(Err::BadSite, "extend_wheel_funnel: top is not adjacent to stem");
    // first top dart outside the face corner
    auto walk = g.face_darts(*fi);
    int ci = -1;
    for (int i = 0; i < 3; ++i)
        if (walk[i].first == stem) ci = i;
    if (ci < 0) fail(Err::BadSite, "extend_wheel_funnel: stem not on face");
    const auto& rot = g.rotation_edges(stem);
    int p_out = walk[ci].second, p_in = ((p_out - 1) % (int)rot.size() + (int)rot.size()) % (int)rot.size();
    int pt = -1;
    for (int i = 0; i < (int)rot.size(); ++i) {
        if (i == p_out || i == p_in) continue;
        if (g.edge_other(rot[i], stem) == top) {
            pt = i;
            break;
        }
    }
    if (pt < 0) fail(Err::BadSite, "extend_wheel_funnel: no top dart available");
    Triangulation h = surgery::extend5(g, stem, *fi, pt);
    auto st = make_step(5, h.order() - 1, g, h);
    return {h, st};
}

ContractionTrace reduce_to_k3(const Triangulation& g) {
    if (g.order() < 3) fail(Err::OrderTooSmall, "reduce_to_k3: order below 3");
    ContractionTrace tr;
    tr.initial = g.certificate();
    Triangulation cur = g;
    while (cur.order() > 3) {
        auto labels = cur.canonical_labels();
        int best = -1;
        for (int v = 0; v < cur.order(); ++v) {
            if (best < 0 || cur.degree(v) < cur.degree(best) ||
                (cur.degree(v) == cur.degree(best) && labels[v] < labels[best]))
                best = v;
        }
        int k = cur.degree(best);
        auto [next, st] = contract_wheel(cur, best, k);
        tr.steps.push_back(st);
        cur = next;
    }
    tr.final_cert = cur.certificate();
    return tr;
}

ColoredContract colored_contract(const Triangulation& g, const Coloring& f, VertexId v) {
    if (v < 0 || v >= g.order()) fail(Err::UnknownVertex, "colored_contract: no such vertex");
    if (g.degree(v) < 3) fail(Err::WrongDegree, "colored_contract: degree below 3");
    if (f.k > 4) fail(Err::NotProper, "colored_contract: more than 4 colors");
    if (!f.proper_on(g.simple_graph())) fail(Err::NotProper, "colored_contract: improper coloring");

    const int d = g.degree(v);
    auto link = g.link(v); // rotation order
    std::vector<int> col(d);
    for (int i = 0; i < d; ++i) col[i] = f.assignment[link[i]];

    std::vector<VertexId> dmap;
    Triangulation start = g.delete_vertex(v, dmap);

    struct State {
        Triangulation t;
        std::vector<int> ids; // original id -> current id
    };
    State cur{start, {}};
    cur.ids.assign(g.order(), -1);
    for (int u = 0; u < g.order(); ++u)
        if (u != v) cur.ids[u] = dmap[u];

    auto merge_positions = [&](State& s, int i, int j) {
        int a = s.ids[link[i]], b = s.ids[link[j]];
        if (a == b) return;
        if (a > b) std::swap(a, b);
        std::vector<int> m;
        Triangulation nt = s.t.identify_vertices(a, b, m);
        for (auto& id : s.ids)
            if (id >= 0) id = m[id == b ? a : id];
        s.t = std::move(nt);
    };

    std::optional<char> six_type;
    bool prescribed = false;
    if (d == 3) {
        prescribed = true; // plain deletion
    } else if (d == 4) {
        // the link quad carries a same-colored opposite pair; fold the first
        for (int i = 0; i < 2 && !prescribed; ++i)
            if (col[i] == col[i + 2]) {
                merge_positions(cur, i, i + 2);
                prescribed = true;
            }
    } else if (d == 5) {
        // pattern 2+2+1: fold one same-colored pair (canonical first)
        for (int i = 0; i < 5 && !prescribed; ++i) {
            int j = (i + 2) % 5;
            if (col[i] == col[j]) {
                merge_positions(cur, i, j);
                prescribed = true;
            }
        }
    } else if (d == 6) {
        std::map<int, std::vector<int>> by_color;
        for (int i = 0; i < 6; ++i) by_color[col[i]].push_back(i);
        if (by_color.size() == 3) {
            std::vector<std::vector<int>> groups;
            for (auto& [c, pos] : by_color) groups.push_back(pos);
            std::vector<size_t> sz;
            for (auto& grp : groups) sz.push_back(grp.size());
            std::sort(sz.begin(), sz.end());
            if (sz == std::vector<size_t>{2, 2, 2}) {
                bool all_antipodal = true;
                for (auto& grp : groups) all_antipodal &= grp[1] - grp[0] == 3;
                if (all_antipodal) {
                    // one antipodal pair folds the hexagon into two triangles
                    merge_positions(cur, groups[0][0], groups[0][1]);
                    six_type = 'T';
                } else {
                    // fold the two distance-2 pairs, the hexagon becomes a path
                    for (auto& grp : groups)
                        if (grp[1] - grp[0] != 3) merge_positions(cur, grp[0], grp[1]);
                    six_type = 'L';
                }
                prescribed = true;
            } else if (sz == std::vector<size_t>{1, 2, 3}) {
                // fold the alternating triple onto one vertex
                for (auto& grp : groups)
                    if (grp.size() == 3) {
                        merge_positions(cur, grp[0], grp[1]);
                        merge_positions(cur, grp[0], grp[2]);
                    }
                six_type = 'S';
                prescribed = true;
            }
        }
    }

    if (!prescribed) {
        // generic path (2-colored hexagons, degree >= 7): fewest same-colored
        // link merges that reach a maximal graph, canonical order first
        std::optional<State> found;
        std::function<void(State&, int)> dfs = [&](State& s, int budget) {
            if (found) return;
            if (s.t.is_maximal()) {
                found = s;
                return;
            }
            if (budget == 0) return;
            std::vector<std::pair<int, int>> cands;
            for (size_t i = 0; i < link.size(); ++i)
                for (size_t j = i + 1; j < link.size(); ++j) {
                    int a = s.ids[link[i]], b = s.ids[link[j]];
                    if (a == b || a < 0 || b < 0) continue;
                    if (f.assignment[link[i]] != f.assignment[link[j]]) continue;
                    if (s.t.adjacent(a, b)) continue;
                    cands.push_back({std::min(a, b), std::max(a, b)});
                }
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            for (auto [a, b] : cands) {
                std::vector<int> m;
                Triangulation nt = s.t;
                try {
                    nt = s.t.identify_vertices(a, b, m);
                } catch (const GraphError&) {
                    continue;
                }
                State ns{std::move(nt), s.ids};
                for (auto& id : ns.ids)
                    if (id >= 0) id = m[id == b ? a : id];
                dfs(ns, budget - 1);
                if (found) return;
            }
        };
        for (int depth = 0; depth <= d && !found; ++depth) dfs(cur, depth);
        if (!found) fail(Err::CannotReachMaximal, "colored_contract: no merge order reaches a maximal graph");
        cur = *found;
    }

    ColoredContract out{cur.t, {}, {}};
    out.coloring.k = f.k;
    out.coloring.assignment.assign(cur.t.order(), 0);
    for (int u = 0; u < g.order(); ++u) {
        if (u == v) continue;
        int id = cur.ids[u];
        if (id >= 0) out.coloring.assignment[id] = f.assignment[u];
    }
    if (!out.coloring.proper_on(cur.t.simple_graph()))
        fail(Err::NotProper, "colored_contract: induced coloring became improper");

    out.step = make_step(d, v, g, cur.t);
    out.step.coloring_before = f;
    out.step.coloring_after = out.coloring;
    out.step.six_type = six_type;
    std::map<int, std::vector<int>> groups;
    for (int u = 0; u < g.order(); ++u)
        if (u != v && cur.ids[u] >= 0) groups[cur.ids[u]].push_back(u);
    for (auto& [id, mem] : groups)
        if (mem.size() > 1) out.step.merged.push_back(mem);
    return out;
}

std::pair<Triangulation, Coloring> recover_extend(const Triangulation& gprime, const ContractionStep& step) {
    if (!step.before) fail(Err::TraceMismatch, "recover_extend: step carries no pre-image");
    if (!(gprime.certificate() == step.after_cert))
        fail(Err::TraceMismatch, "recover_extend: base graph does not match the step");
    Coloring f;
    if (step.coloring_before) f = *step.coloring_before;
    else {
        f.k = 4;
        f.assignment.assign(step.before->order(), 0);
    }
    return {*step.before, f};
}

// ---- trace serialization ----

namespace {

std::string hex(const std::string& s) {
    static const char* d = "0123456789abcdef";
    std::string out;
    for (unsigned char c : s) {
        out.push_back(d[c >> 4]);
        out.push_back(d[c & 15]);
    }
    return out;
}

nlohmann::json step_json(const ContractionStep& st) {
    nlohmann::json j;
    j["kind"] = st.kind;
    j["center"] = st.center;
    j["merged"] = st.merged;
    if (st.coloring_before) j["coloring_before"] = st.coloring_before->assignment;
    if (st.coloring_after) j["coloring_after"] = st.coloring_after->assignment;
    if (st.six_type) j["six_type"] = std::string(1, *st.six_type);
    if (st.before) {
        nlohmann::json rot = nlohmann::json::array();
        for (int v = 0; v < st.before->order(); ++v) {
            std::vector<int> nb;
            for (int e : st.before->rotation_edges(v)) nb.push_back(st.before->edge_other(e, v));
            rot.push_back(nb);
        }
        j["before"] = {{"n", st.before->order()}, {"rot", rot}};
    }
    j["before_cert"] = hex(st.before_cert.bytes);
    j["after_cert"] = hex(st.after_cert.bytes);
    return j;
}

} // namespace

std::string ContractionTrace::to_json() const {
    nlohmann::json j;
    j["initial"] = hex(initial.bytes);
    j["final"] = hex(final_cert.bytes);
    auto arr = nlohmann::json::array();
    for (const auto& st : steps) arr.push_back(step_json(st));
    j["steps"] = arr;
    return j.dump(2);
}

} // namespace mpg
