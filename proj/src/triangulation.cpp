#include "mpg/triangulation.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <numeric>
#include <queue>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace mpg {

namespace {
int mod(int a, int m) { return ((a % m) + m) % m; }
} // namespace

void Triangulation::validate_and_index() {
    const int m = (int)edges_.size();
    if (n_ <= 0) fail(Err::InconsistentRotation, "empty graph");
    if ((int)rot_.size() != n_) fail(Err::InconsistentRotation, "rotation list count != order");
    for (auto [a, b] : edges_) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_) fail(Err::UnknownVertex, "edge endpoint out of range");
        if (a == b) fail(Err::InconsistentRotation, "loops are not representable");
    }
    epos_.assign(m, {-1, -1});
    int seen_darts = 0;
    for (int v = 0; v < n_; ++v) {
        for (int i = 0; i < (int)rot_[v].size(); ++i) {
            int e = rot_[v][i];
            if (e < 0 || e >= m) fail(Err::InconsistentRotation, "rotation references unknown edge");
            auto [a, b] = edges_[e];
            if (v == a) {
                if (epos_[e][0] != -1) fail(Err::InconsistentRotation, "edge listed twice at one endpoint");
                epos_[e][0] = i;
            } else if (v == b) {
                if (epos_[e][1] != -1) fail(Err::InconsistentRotation, "edge listed twice at one endpoint");
                epos_[e][1] = i;
            } else {
                fail(Err::InconsistentRotation, "edge listed at a non-endpoint");
            }
            ++seen_darts;
        }
    }
    if (seen_darts != 2 * m) fail(Err::InconsistentRotation, "each edge must appear at both endpoints");

    // connectivity
    std::vector<char> vis(n_, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : rot_[v]) {
            int w = edge_other(e, v);
            if (!vis[w]) {
                vis[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    if (reached != n_) fail(Err::Disconnected, "graph is not connected");

    // face tracing: orbit of (v,pos) -> next dart along the face
    faces_.clear();
    face_start_.clear();
    std::vector<std::vector<char>> used(n_);
    for (int v = 0; v < n_; ++v) used[v].assign(rot_[v].size(), 0);
    triangular_ = true;
    for (int v = 0; v < n_; ++v) {
        for (int i = 0; i < (int)rot_[v].size(); ++i) {
            if (used[v][i]) continue;
            std::vector<VertexId> walk;
            int cv = v, cp = i;
            do {
                used[cv][cp] = 1;
                walk.push_back(cv);
                auto [nv, np] = face_step(cv, cp);
                cv = nv;
                cp = np;
            } while (!(cv == v && cp == i));
            if (walk.size() != 3) triangular_ = false;
            faces_.push_back(std::move(walk));
            face_start_.push_back({v, i});
        }
    }
    long f = (long)faces_.size();
    if (n_ - m + f != 2) fail(Err::NotPlanar, "rotation system does not embed in the sphere");

    simple_ = true;
    std::set<std::pair<int, int>> pairs;
    for (auto [a, b] : edges_) {
        auto p = std::minmax(a, b);
        if (!pairs.insert({p.first, p.second}).second) simple_ = false;
    }
    cert_cache_.clear();
}

std::pair<VertexId, int> Triangulation::face_step(VertexId v, int pos) const {
    int e = rot_[v][pos];
    int w = edge_other(e, v);
    int j = edge_pos(e, w);
    return {w, (j + 1) % (int)rot_[w].size()};
}

int Triangulation::edge_pos(int e, VertexId v) const {
    return edges_[e].first == v ? epos_[e][0] : epos_[e][1];
}

Triangulation Triangulation::from_raw(Raw raw) {
    Triangulation t;
    t.n_ = raw.n;
    t.edges_ = std::move(raw.edges);
    t.rot_ = std::move(raw.rot);
    t.validate_and_index();
    return t;
}

Triangulation Triangulation::from_rotation(int n, const std::vector<std::vector<VertexId>>& nbr) {
    if (n <= 0 || (int)nbr.size() != n) fail(Err::InconsistentRotation, "order/rotation mismatch");
    for (int v = 0; v < n; ++v)
        for (int w : nbr[v]) {
            if (w < 0 || w >= n) fail(Err::UnknownVertex, "neighbor out of range");
            if (w == v) fail(Err::InconsistentRotation, "self-neighbor");
        }
    // multiplicity consistency
    std::map<std::pair<int, int>, int> mult;
    for (int v = 0; v < n; ++v)
        for (int w : nbr[v]) mult[{v, w}]++;
    for (auto& [key, k] : mult) {
        auto rev = std::make_pair(key.second, key.first);
        auto it = mult.find(rev);
        if (it == mult.end() || it->second != k)
            fail(Err::InconsistentRotation, "neighbor lists are not mutually consistent");
    }

    // Assign edge ids. Parallel classes admit several dart pairings; try the
    // plausible ones until one embeds in the sphere.
    struct Cls {
        int u, v;                 // u < v
        std::vector<int> pu, pv;  // occurrence positions in rot[u], rot[v]
    };
    std::vector<Cls> classes;
    for (auto& [key, k] : mult) {
        auto [u, v] = key;
        if (u > v) continue;
        Cls c;
        c.u = u;
        c.v = v;
        for (int i = 0; i < (int)nbr[u].size(); ++i)
            if (nbr[u][i] == v) c.pu.push_back(i);
        for (int i = 0; i < (int)nbr[v].size(); ++i)
            if (nbr[v][i] == u) c.pv.push_back(i);
        classes.push_back(std::move(c));
    }

    auto attempt = [&](const std::vector<std::vector<int>>& perms) -> std::optional<Triangulation> {
        Raw raw;
        raw.n = n;
        std::vector<std::vector<int>> rot(n);
        for (int v = 0; v < n; ++v) rot[v].assign(nbr[v].size(), -1);
        for (size_t ci = 0; ci < classes.size(); ++ci) {
            const Cls& c = classes[ci];
            for (size_t i = 0; i < c.pu.size(); ++i) {
                int e = (int)raw.edges.size();
                raw.edges.push_back({c.u, c.v});
                rot[c.u][c.pu[i]] = e;
                rot[c.v][c.pv[perms[ci][i]]] = e;
            }
        }
        raw.rot = std::move(rot);
        try {
            return from_raw(std::move(raw));
        } catch (const GraphError&) {
            return std::nullopt;
        }
    };

    // enumerate per-class permutations (identity first, then reversed, then the rest)
    std::vector<std::vector<std::vector<int>>> options(classes.size());
    long total = 1;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        int k = (int)classes[ci].pu.size();
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        options[ci].push_back(idx);
        if (k > 1) {
            auto rev = idx;
            std::reverse(rev.begin(), rev.end());
            options[ci].push_back(rev);
            if (k > 2) {
                auto perm = idx;
                while (std::next_permutation(perm.begin(), perm.end())) {
                    if (perm != rev) options[ci].push_back(perm);
                }
            }
        }
        total *= (long)options[ci].size();
        if (total > 4096) fail(Err::InconsistentRotation, "too many parallel classes to disambiguate");
    }
    std::vector<std::vector<int>> pick(classes.size());
    std::optional<Triangulation> found;
    std::function<void(size_t)> rec = [&](size_t ci) {
        if (found) return;
        if (ci == classes.size()) {
            found = attempt(pick);
            return;
        }
        for (auto& p : options[ci]) {
            pick[ci] = p;
            rec(ci + 1);
            if (found) return;
        }
    };
    rec(0);
    if (!found) fail(Err::NotPlanar, "no dart pairing embeds this rotation system in the sphere");
    return *found;
}

Triangulation Triangulation::from_edge_list(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 3) fail(Err::OrderTooSmall, "need at least 3 vertices");
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) fail(Err::UnknownVertex, "edge endpoint out of range");
        if (a == b) fail(Err::BadFormat, "loop in edge list");
        auto p = std::minmax(a, b);
        if (!seen.insert({p.first, p.second}).second) fail(Err::BadFormat, "duplicate edge in edge list");
    }
    if ((long)edges.size() != 3L * n - 6) fail(Err::NotMaximal, "edge count != 3n-6");

    using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                     boost::property<boost::edge_index_t, int>>;
    BG g(n);
    int ei = 0;
    for (auto [a, b] : edges) boost::add_edge(a, b, ei++, g);
    using Edge = boost::graph_traits<BG>::edge_descriptor;
    std::vector<std::vector<Edge>> emb(n);
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = g, boost::boyer_myrvold_params::embedding = emb.data());
    if (!planar) fail(Err::NotPlanar, "edge list is not planar");

    std::vector<std::vector<VertexId>> nbr(n);
    for (int v = 0; v < n; ++v)
        for (const Edge& e : emb[v]) {
            int a = (int)boost::source(e, g), b = (int)boost::target(e, g);
            nbr[v].push_back(a == v ? b : a);
        }
    Triangulation t = from_rotation(n, nbr);
    if (!t.is_maximal()) fail(Err::NotMaximal, "embedding has a non-triangular face");
    return t;
}

int Triangulation::min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<int> Triangulation::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

bool Triangulation::adjacent(VertexId u, VertexId v) const {
    for (int e : rot_[u])
        if (edge_other(e, u) == v) return true;
    return false;
}

int Triangulation::multiplicity(VertexId u, VertexId v) const {
    int k = 0;
    for (int e : rot_[u])
        if (edge_other(e, u) == v) ++k;
    return k;
}

std::vector<VertexId> Triangulation::link(VertexId v) const {
    if (v < 0 || v >= n_) fail(Err::UnknownVertex, "link: no such vertex");
    std::vector<VertexId> out;
    for (int e : rot_[v]) out.push_back(edge_other(e, v));
    return out;
}

std::optional<int> Triangulation::find_face(const std::vector<VertexId>& verts) const {
    std::vector<VertexId> want(verts);
    std::sort(want.begin(), want.end());
    for (int i = 0; i < (int)faces_.size(); ++i) {
        std::vector<VertexId> have(faces_[i]);
        std::sort(have.begin(), have.end());
        if (have == want) return i;
    }
    return std::nullopt;
}

std::vector<std::pair<VertexId, int>> Triangulation::face_darts(int face_index) const {
    if (face_index < 0 || face_index >= (int)faces_.size()) fail(Err::UnknownFace, "face index out of range");
    std::vector<std::pair<VertexId, int>> walk;
    auto [v, i] = face_start_[face_index];
    int cv = v, cp = i;
    do {
        walk.push_back({cv, cp});
        auto [nv, np] = face_step(cv, cp);
        cv = nv;
        cp = np;
    } while (!(cv == v && cp == i));
    return walk;
}

Triangulation Triangulation::delete_vertex(VertexId v) const {
    std::vector<VertexId> unused;
    return delete_vertex(v, unused);
}

Triangulation Triangulation::delete_vertex(VertexId v, std::vector<VertexId>& old_to_new) const {
    if (v < 0 || v >= n_) fail(Err::UnknownVertex, "delete_vertex: no such vertex");
    if (n_ < 4) fail(Err::OrderTooSmall, "delete_vertex: order must be at least 4");
    std::vector<char> edel(edges_.size(), 0);
    for (int e : rot_[v]) edel[e] = 1;
    std::vector<int> emap(edges_.size(), -1);
    Raw raw;
    raw.n = n_ - 1;
    old_to_new.assign(n_, -1);
    for (int u = 0, id = 0; u < n_; ++u)
        if (u != v) old_to_new[u] = id++;
    for (int e = 0; e < (int)edges_.size(); ++e) {
        if (edel[e]) continue;
        emap[e] = (int)raw.edges.size();
        raw.edges.push_back({old_to_new[edges_[e].first], old_to_new[edges_[e].second]});
    }
    raw.rot.resize(raw.n);
    for (int u = 0; u < n_; ++u) {
        if (u == v) continue;
        for (int e : rot_[u])
            if (!edel[e]) raw.rot[old_to_new[u]].push_back(emap[e]);
    }
    return from_raw(std::move(raw));
}

namespace {

// Remove one edge from a raw description (positions rebuilt by validation).
Triangulation::Raw remove_edge_raw(const Triangulation& t, int edge_id) {
    Triangulation::Raw raw;
    raw.n = t.order();
    std::vector<int> emap(t.edge_list().size(), -1);
    for (int e = 0; e < (int)t.edge_list().size(); ++e) {
        if (e == edge_id) continue;
        emap[e] = (int)raw.edges.size();
        raw.edges.push_back(t.edge_list()[e]);
    }
    raw.rot.resize(raw.n);
    for (int v = 0; v < raw.n; ++v)
        for (int e : t.rotation_edges(v))
            if (e != edge_id) raw.rot[v].push_back(emap[e]);
    return raw;
}

// Collapse parallel classes one edge at a time until simple. Prefers edges
// bounding a digon face; otherwise drops the later copy, merging its faces.
Triangulation simplify_parallels(Triangulation t) {
    for (;;) {
        if (t.is_simple()) return t;
        int victim = -1;
        // digon faces first
        for (const auto& f : t.faces()) {
            if (f.size() != 2) continue;
            // the face's two darts use two parallel edges; drop the larger id
            int a = f[0], b = f[1];
            int best = -1;
            for (int e = 0; e < (int)t.edge_list().size(); ++e) {
                auto [x, y] = t.edge_list()[e];
                if ((x == a && y == b) || (x == b && y == a)) best = std::max(best, e);
            }
            victim = best;
            break;
        }
        if (victim < 0) {
            // no digon face; remove the highest-id member of any parallel class
            std::map<std::pair<int, int>, std::vector<int>> cls;
            for (int e = 0; e < (int)t.edge_list().size(); ++e) {
                auto [x, y] = t.edge_list()[e];
                auto p = std::minmax(x, y);
                cls[{p.first, p.second}].push_back(e);
            }
            for (auto& [k, v] : cls)
                if (v.size() > 1) victim = std::max(victim, v.back());
        }
        t = Triangulation::from_raw(remove_edge_raw(t, victim));
    }
}

} // namespace

Triangulation Triangulation::delete_edge(VertexId u, VertexId w) const {
    if (u < 0 || u >= n_ || w < 0 || w >= n_) fail(Err::UnknownVertex, "delete_edge: no such vertex");
    for (int e = 0; e < (int)edges_.size(); ++e) {
        auto [a, b] = edges_[e];
        if ((a == u && b == w) || (a == w && b == u)) return from_raw(remove_edge_raw(*this, e));
    }
    fail(Err::NoDiagonal, "delete_edge: no such edge");
}

Triangulation Triangulation::identify_vertices(VertexId u, VertexId w) const {
    std::vector<VertexId> unused;
    return identify_vertices(u, w, unused);
}

Triangulation Triangulation::identify_vertices(VertexId u, VertexId w, std::vector<VertexId>& old_to_new) const {
    if (u < 0 || u >= n_ || w < 0 || w >= n_ || u == w) fail(Err::UnknownVertex, "identify: bad vertex pair");
    if (adjacent(u, w)) fail(Err::AdjacentPair, "identify: vertices are adjacent");

    // locate a common face and the leaving positions of u and w on its walk
    int fu = -1, fw = -1; // leaving dart positions
    for (int fi = 0; fi < (int)faces_.size() && fu < 0; ++fi) {
        const auto& f = faces_[fi];
        bool hasu = false, hasw = false;
        for (int x : f) {
            hasu |= (x == u);
            hasw |= (x == w);
        }
        if (!hasu || !hasw) continue;
        for (auto& [x, p] : face_darts(fi)) {
            if (x == u && fu < 0) fu = p;
            if (x == w && fw < 0) fw = p;
        }
    }
    if (fu < 0 || fw < 0) fail(Err::NoCommonFace, "identify: no common face");

    // splice rotations: keep id of u, drop w
    int keep = u;
    Raw raw;
    raw.n = n_ - 1;
    old_to_new.assign(n_, -1);
    for (int x = 0, id = 0; x < n_; ++x)
        if (x != w) old_to_new[x] = id++;
    auto nv = [&](int x) { return old_to_new[x == w ? keep : x]; };
    raw.edges.reserve(edges_.size());
    for (auto [a, b] : edges_) raw.edges.push_back({nv(a), nv(b)});
    raw.rot.resize(raw.n);
    for (int x = 0; x < n_; ++x) {
        if (x == u || x == w) continue;
        raw.rot[old_to_new[x]] = rot_[x];
    }
    std::vector<int>& merged = raw.rot[old_to_new[keep]];
    int du = (int)rot_[u].size(), dw = (int)rot_[w].size();
    for (int i = 0; i < du; ++i) merged.push_back(rot_[u][(fu + i) % du]);
    for (int i = 0; i < dw; ++i) merged.push_back(rot_[w][(fw + i) % dw]);

    Triangulation t = from_raw(std::move(raw));
    return simplify_parallels(std::move(t));
}

Triangulation Triangulation::insert_vertex_in_face(const std::vector<VertexId>& face_verts) const {
    for (int x : face_verts)
        if (x < 0 || x >= n_) fail(Err::UnknownVertex, "insert: no such vertex");
    auto fi = find_face(face_verts);
    if (!fi) fail(Err::UnknownFace, "insert: not a traced face");
    const auto& f = faces_[*fi];
    if (f.size() != 3) fail(Err::NonTriangularFace, "insert: face is not a triangle");

    auto walk = face_darts(*fi);

    Raw raw;
    raw.n = n_ + 1;
    raw.edges = edges_;
    raw.rot = rot_;
    raw.rot.push_back({});
    int x = n_;
    // new edges x->corner; insert each at the corner's leaving position.
    // Insert in descending position order per vertex so earlier inserts don't
    // shift later ones (corners are on distinct vertices for a triangle).
    std::vector<int> eid(3);
    for (int c = 0; c < 3; ++c) {
        eid[c] = (int)raw.edges.size();
        raw.edges.push_back({walk[c].first, x});
    }
    for (int c = 0; c < 3; ++c) {
        auto [v, p] = walk[c];
        raw.rot[v].insert(raw.rot[v].begin() + p, eid[c]);
    }
    // rotation at x: [to f0, to f2, to f1] (reverse walk order after the first)
    raw.rot[x] = {eid[0], eid[2], eid[1]};
    return from_raw(std::move(raw));
}

// --- certificate ------------------------------------------------------------

namespace {

// Canonical code of the rooted oriented map: BFS over vertices from the root
// dart; per vertex emit degree then (head label, twin offset) for each dart in
// rotation order from the entry dart. Encodes sigma and the twin involution
// completely, so equal codes mean equal rooted maps.
std::string walk_code(const Triangulation& t, int sv, int sp, int dir) {
    const int n = t.order();
    std::vector<int> label(n, -1), entry(n, -1);
    std::vector<int> order;
    order.reserve(n);
    label[sv] = 0;
    entry[sv] = sp;
    order.push_back(sv);
    std::string out;
    out.reserve(4 * t.size() + 2 * n + 4);
    out.push_back((char)n);
    out.push_back((char)t.size());
    int next = 1;
    for (int i = 0; i < (int)order.size(); ++i) {
        int u = order[i];
        int d = t.degree(u);
        out.push_back((char)d);
        for (int s = 0; s < d; ++s) {
            int pos = mod(entry[u] + dir * s, d);
            int e = t.rotation_edges(u)[pos];
            int w = t.edge_other(e, u);
            int pw = t.edge_pos(e, w);
            if (label[w] < 0) {
                label[w] = next++;
                entry[w] = pw;
                order.push_back(w);
            }
            int off = mod((pw - entry[w]) * dir, t.degree(w));
            out.push_back((char)label[w]);
            out.push_back((char)off);
        }
    }
    return out;
}

} // namespace

IsoCertificate Triangulation::certificate() const {
    if (!cert_cache_.empty()) return IsoCertificate{cert_cache_};
    // the code's first vertex byte is the start vertex's degree, so minimal
    // codes can only start at minimum-degree vertices
    int dmin = n_;
    for (int v = 0; v < n_; ++v) dmin = std::min(dmin, (int)rot_[v].size());
    std::string best;
    for (int v = 0; v < n_; ++v) {
        if ((int)rot_[v].size() != dmin) continue;
        for (int p = 0; p < (int)rot_[v].size(); ++p)
            for (int dir : {1, -1}) {
                std::string c = walk_code(*this, v, p, dir);
                if (best.empty() || c < best) best = std::move(c);
            }
    }
    if (best.empty()) best = walk_code(*this, 0, 0, 1); // edgeless K1
    cert_cache_ = best;
    return IsoCertificate{best};
}

namespace {
// minimizing start over min-degree vertices (see certificate())
std::tuple<int, int, int> best_walk_start(const Triangulation& t) {
    int n = t.order();
    int dmin = n;
    for (int v = 0; v < n; ++v) dmin = std::min(dmin, t.degree(v));
    std::string best;
    int bv = 0, bp = 0, bdir = 1;
    for (int v = 0; v < n; ++v) {
        if (t.degree(v) != dmin) continue;
        for (int p = 0; p < t.degree(v); ++p)
            for (int dir : {1, -1}) {
                std::string c = walk_code(t, v, p, dir);
                if (best.empty() || c < best) {
                    best = std::move(c);
                    bv = v;
                    bp = p;
                    bdir = dir;
                }
            }
    }
    return {bv, bp, bdir};
}
} // namespace

std::vector<int> Triangulation::canonical_labels() const {
    auto [bv, bp, bdir] = best_walk_start(*this);
    std::vector<int> label(n_, -1), entry(n_, -1);
    std::vector<int> order;
    label[bv] = 0;
    entry[bv] = bp;
    order.push_back(bv);
    for (int i = 0; i < (int)order.size(); ++i) {
        int u = order[i];
        int d = degree(u);
        for (int s = 0; s < d; ++s) {
            int pos = mod(entry[u] + bdir * s, d);
            int e = rot_[u][pos];
            int w = edge_other(e, u);
            if (label[w] < 0) {
                label[w] = (int)order.size();
                entry[w] = edge_pos(e, w);
                order.push_back(w);
            }
        }
    }
    return label;
}

Triangulation Triangulation::simplified() const { return simplify_parallels(*this); }

Triangulation Triangulation::canonical_form() const {
    auto [bv, bp, bdir] = best_walk_start(*this);
    // replay the walk to get the relabeling and entry anchors
    std::vector<int> label(n_, -1), entry(n_, -1);
    std::vector<int> order;
    label[bv] = 0;
    entry[bv] = bp;
    order.push_back(bv);
    for (int i = 0; i < (int)order.size(); ++i) {
        int u = order[i];
        int d = degree(u);
        for (int s = 0; s < d; ++s) {
            int pos = mod(entry[u] + bdir * s, d);
            int e = rot_[u][pos];
            int w = edge_other(e, u);
            if (label[w] < 0) {
                label[w] = (int)order.size();
                entry[w] = edge_pos(e, w);
                order.push_back(w);
            }
        }
    }
    Raw raw;
    raw.n = n_;
    raw.edges.reserve(edges_.size());
    std::vector<int> emap(edges_.size(), -1);
    for (int e = 0; e < (int)edges_.size(); ++e) {
        emap[e] = e;
        raw.edges.push_back({label[edges_[e].first], label[edges_[e].second]});
    }
    raw.rot.resize(n_);
    for (int u = 0; u < n_; ++u) {
        int d = degree(u);
        for (int s = 0; s < d; ++s) raw.rot[label[u]].push_back(rot_[u][mod(entry[u] + bdir * s, d)]);
    }
    return from_raw(std::move(raw));
}

Triangulation Triangulation::mirrored() const {
    Raw raw;
    raw.n = n_;
    raw.edges = edges_;
    raw.rot = rot_;
    for (auto& r : raw.rot) std::reverse(r.begin(), r.end());
    return from_raw(std::move(raw));
}

SGraph Triangulation::simple_graph() const {
    SGraph g(n_);
    for (auto [a, b] : edges_)
        if (a != b) g.add_edge(a, b);
    return g;
}

} // namespace mpg
