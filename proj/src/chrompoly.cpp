#include "mpg/chrompoly.hpp"

#include <algorithm>

namespace mpg {

namespace {

// components as vertex masks
std::vector<uint32_t> components(const SGraph& g, uint32_t exclude = 0) {
    std::vector<uint32_t> comps;
    uint32_t all = (g.n == 32 ? ~0u : ((1u << g.n) - 1)) & ~exclude;
    uint32_t left = all;
    while (left) {
        int s = __builtin_ctz(left);
        uint32_t comp = 1u << s, frontier = comp;
        while (frontier) {
            uint32_t next = 0;
            for (int u = 0; u < g.n; ++u)
                if ((frontier >> u) & 1u) next |= g.adj[u] & all;
            frontier = next & ~comp;
            comp |= frontier;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

// Search for a separating clique of size 1..3; returns (clique mask, comps).
std::optional<std::pair<uint32_t, std::vector<uint32_t>>> find_clique_separator(const SGraph& g) {
    if (g.n < 4) return std::nullopt;
    // size 1 (articulation)
    for (int v = 0; v < g.n; ++v) {
        auto comps = components(g, 1u << v);
        if (comps.size() > 1) return {{1u << v, comps}};
    }
    // size 2: factorization needs the separator to induce a complete graph
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (!g.has_edge(u, v)) continue;
            auto comps = components(g, (1u << u) | (1u << v));
            if (comps.size() > 1) return {{(1u << u) | (1u << v), comps}};
        }
    // size 3 (triangle)
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (!g.has_edge(u, v)) continue;
            uint32_t common = g.adj[u] & g.adj[v];
            for (int w = v + 1; w < g.n; ++w) {
                if (!((common >> w) & 1u)) continue;
                uint32_t mask = (1u << u) | (1u << v) | (1u << w);
                auto comps = components(g, mask);
                if (comps.size() > 1) return {{mask, comps}};
            }
        }
    return std::nullopt;
}

} // namespace

Polynomial ChromEngine::chromatic_polynomial(const SGraph& g) {
    if (g.n > opts_.order_cap) fail(Err::OrderTooLarge, "graph order exceeds the configured cap");
    return compute(g, 0);
}

Polynomial ChromEngine::compute(const SGraph& g, int depth) {
    const int n = g.n;
    if (n == 0) return Polynomial::constant(1);
    long m = g.edge_count();
    if (m == 0) {
        // t^n
        std::vector<mpz_class> c(n + 1, 0_mpz);
        c[n] = 1;
        return Polynomial(std::move(c));
    }
    if (m == (long)n * (n - 1) / 2) return Polynomial::falling_factorial(n);

    // disconnected: product over components
    auto comps = components(g);
    if (comps.size() > 1) {
        Polynomial p = Polynomial::constant(1);
        for (uint32_t cm : comps) p = p * compute(g.induced(cm), depth + 1);
        return p;
    }
    if (m == n - 1) {
        // tree: t (t-1)^{n-1}
        Polynomial p = Polynomial::t();
        Polynomial lin({-1_mpz, 1_mpz});
        for (int i = 1; i < n; ++i) p = p * lin;
        return p;
    }

    std::string key;
    if (opts_.use_memo) {
        key = g.canonical_key();
        std::lock_guard<std::mutex> lk(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }

    Polynomial result;
    std::optional<std::pair<uint32_t, std::vector<uint32_t>>> sep;
    if (opts_.use_separators && n >= 5) sep = find_clique_separator(g);
    if (sep) {
        auto [mask, comps2] = *sep;
        int s = __builtin_popcount(mask);
        result = Polynomial::constant(1);
        for (uint32_t cm : comps2) result = result * compute(g.induced(cm | mask), depth + 1);
        Polynomial ks = Polynomial::falling_factorial(s);
        for (size_t i = 1; i < comps2.size(); ++i) result = result.divide_exact(ks);
    } else {
        // deletion-contraction on an edge in the most triangles
        int bu = -1, bv = -1, best = -1;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (!g.has_edge(u, v)) continue;
                int tri = __builtin_popcount(g.adj[u] & g.adj[v]);
                if (tri > best) {
                    best = tri;
                    bu = u;
                    bv = v;
                }
            }
        SGraph del = g;
        del.remove_edge(bu, bv);
        SGraph con = g.contracted(bu, bv);
        result = compute(del, depth + 1) - compute(con, depth + 1);
    }

    if (opts_.use_memo) {
        std::lock_guard<std::mutex> lk(mu_);
        memo_[key] = result;
    }
    return result;
}

// ---- contraction identities ----

namespace {

// embedded contraction of a non-adjacent link pair after deleting the hub
std::optional<Triangulation> contract_link_pair(const Triangulation& g, VertexId v, VertexId a, VertexId b) {
    if (g.adjacent(a, b)) return std::nullopt;
    std::vector<VertexId> map;
    Triangulation h = g.delete_vertex(v, map);
    return h.identify_vertices(map[a], map[b]);
}

mpz_class count4(ChromEngine& eng, const std::optional<Triangulation>& t) {
    if (!t) return 0;
    return eng.at4(*t);
}

SGraph with_edges(const SGraph& g, const std::vector<std::pair<int, int>>& es) {
    SGraph h = g;
    for (auto [a, b] : es)
        if (a != b) h.add_edge(a, b);
    return h;
}

} // namespace

FourContract four_contract_decomposition(ChromEngine& eng, const Triangulation& g, VertexId v) {
    if (v < 0 || v >= g.order()) fail(Err::UnknownVertex, "four_contract: no such vertex");
    if (g.degree(v) != 4) fail(Err::WrongDegree, "four_contract: vertex degree is not 4");
    if (!g.is_maximal()) fail(Err::NotMaximal, "four_contract: graph must be maximal planar");
    FourContract out;
    out.link = g.link(v);
    out.g1 = contract_link_pair(g, v, out.link[0], out.link[2]);
    out.g2 = contract_link_pair(g, v, out.link[1], out.link[3]);
    out.f1 = count4(eng, out.g1);
    out.f2 = count4(eng, out.g2);
    out.fg = eng.at4(g);
    out.holds = out.fg == out.f1 + out.f2;
    return out;
}

FiveContract five_contract_decomposition(ChromEngine& eng, const Triangulation& g, VertexId v) {
    if (v < 0 || v >= g.order()) fail(Err::UnknownVertex, "five_contract: no such vertex");
    if (g.degree(v) != 5) fail(Err::WrongDegree, "five_contract: vertex degree is not 5");
    if (!g.is_maximal()) fail(Err::NotMaximal, "five_contract: graph must be maximal planar");
    FiveContract out;
    out.link = g.link(v); // v1..v5 in rotation order
    const auto& L = out.link;

    // contracted graphs on the abstract layer (the +edge variants may leave
    // planarity); counts still follow from the coloring identities
    std::vector<VertexId> map;
    Triangulation gdel = g.delete_vertex(v, map);
    SGraph base = gdel.simple_graph();
    auto nid = [&](VertexId x) { return map[x]; };

    // contraction compacts the id above the kept one; track both endpoints
    auto contract_ids = [&](VertexId a, VertexId b, std::vector<int>& idmap) -> std::optional<SGraph> {
        if (g.adjacent(a, b)) return std::nullopt;
        int x = std::min(nid(a), nid(b)), y = std::max(nid(a), nid(b));
        idmap.assign(base.n, -1);
        for (int i = 0; i < base.n; ++i) {
            int t = (i == y) ? x : i;
            idmap[i] = t > y ? t - 1 : t;
        }
        return base.contracted(x, y);
    };

    std::vector<int> m1, m2, m3;
    auto s1 = contract_ids(L[1], L[4], m1); // (G-v) o {v2,v5}
    auto s2 = contract_ids(L[1], L[3], m2); // (G-v) o {v2,v4}
    auto s3 = contract_ids(L[2], L[4], m3); // (G-v) o {v3,v5}

    out.g1 = contract_link_pair(g, v, L[1], L[4]);
    out.g2 = contract_link_pair(g, v, L[1], L[3]);
    out.g3 = contract_link_pair(g, v, L[2], L[4]);

    mpz_class f1 = s1 ? eng.chromatic_polynomial(*s1).evaluate(4) : 0;
    mpz_class f2 = s2 ? eng.chromatic_polynomial(*s2).evaluate(4) : 0;
    mpz_class f3 = s3 ? eng.chromatic_polynomial(*s3).evaluate(4) : 0;

    mpz_class f1e = 0, f2e = 0, f3e_g3 = 0, f3e_g1 = 0;
    if (s1)
        f1e = eng.chromatic_polynomial(with_edges(*s1, {{m1[nid(L[0])], m1[nid(L[3])]}, {m1[nid(L[0])], m1[nid(L[2])]}}))
                  .evaluate(4);
    if (s2)
        f2e = eng.chromatic_polynomial(with_edges(*s2, {{m2[nid(L[2])], m2[nid(L[0])]}, {m2[nid(L[2])], m2[nid(L[4])]}}))
                  .evaluate(4);
    if (s3)
        f3e_g3 = eng.chromatic_polynomial(with_edges(*s3, {{m3[nid(L[3])], m3[nid(L[0])]}})).evaluate(4);
    if (s1)
        f3e_g1 = eng.chromatic_polynomial(with_edges(*s1, {{m1[nid(L[3])], m1[nid(L[0])]}})).evaluate(4);

    out.b1 = f1 - f1e;
    out.b2 = f2 - f2e;
    out.b3_g3 = f3 - f3e_g3;
    out.b3_g1 = f3 - f3e_g1;
    out.fg = eng.at4(g);
    out.holds_with_g3 = out.fg == out.b1 + out.b2 + out.b3_g3;
    out.holds_with_g1 = out.fg == out.b1 + out.b2 + out.b3_g1;
    mpz_class b3 = out.holds_with_g3 ? out.b3_g3 : out.b3_g1;
    out.nonneg = out.b1 >= 0 && out.b2 >= 0 && b3 >= 0;
    return out;
}

QuadTwist quad_twist_ops(ChromEngine& eng, const Triangulation& g, VertexId x, VertexId z) {
    if (x < 0 || x >= g.order() || z < 0 || z >= g.order()) fail(Err::UnknownVertex, "twist: no such vertex");
    if (!g.adjacent(x, z)) fail(Err::NoDiagonal, "twist: xz is not an edge");
    // the two faces of xz give y and l
    std::vector<VertexId> apex;
    for (const auto& f : g.faces()) {
        if (f.size() != 3) continue;
        bool hx = false, hz = false;
        VertexId other = -1;
        for (VertexId w : f) {
            if (w == x) hx = true;
            else if (w == z) hz = true;
            else other = w;
        }
        if (hx && hz) apex.push_back(other);
    }
    if (apex.size() != 2) fail(Err::NotEmptyQuad, "twist: edge does not bound two triangles");
    VertexId y = apex[0], l = apex[1];
    if (y == l || g.adjacent(y, l)) fail(Err::NotEmptyQuad, "twist: quad is degenerate or carries a second diagonal");

    QuadTwist out{x, y, z, l, g, g, g, {}};
    Triangulation cut = g.delete_edge(x, z); // quad face x-y-z-l opens up
    // theta: add the other diagonal inside the quad
    {
        auto fi = cut.find_face({x, y, z, l});
        if (!fi) fail(Err::NotEmptyQuad, "twist: quad face not recovered");
        // splice new edge y-l: positions at the quad corners of y and l
        Triangulation::Raw raw;
        raw.n = cut.order();
        raw.edges = cut.edge_list();
        raw.rot.assign(raw.n, {});
        for (int u = 0; u < raw.n; ++u) raw.rot[u] = cut.rotation_edges(u);
        int py = -1, pl = -1;
        for (auto& [a, p] : cut.face_darts(*fi)) {
            if (a == y) py = p;
            if (a == l) pl = p;
        }
        if (py < 0 || pl < 0) fail(Err::NotEmptyQuad, "twist: quad corners not recovered");
        int e = (int)raw.edges.size();
        raw.edges.push_back({y, l});
        // insert at leaving positions; per-vertex independence holds since y != l
        raw.rot[y].insert(raw.rot[y].begin() + py, e);
        raw.rot[l].insert(raw.rot[l].begin() + pl, e);
        out.theta = Triangulation::from_raw(std::move(raw));
    }
    out.phi = cut.identify_vertices(x, z);
    out.psi = cut.identify_vertices(y, l);

    Polynomial fG = eng.chromatic_polynomial(g);
    Polynomial fT = eng.chromatic_polynomial(out.theta);
    Polynomial fP = eng.chromatic_polynomial(out.phi);
    Polynomial fS = eng.chromatic_polynomial(out.psi);
    out.residual = fG - fT - fS + fP;
    return out;
}

QuadTwist quad_twist_ops(ChromEngine& eng, const Triangulation& g, const std::vector<VertexId>& quad) {
    if (quad.size() != 4) fail(Err::BadFormat, "twist: quad must have 4 vertices");
    VertexId x = quad[0], y = quad[1], z = quad[2], l = quad[3];
    if (!g.adjacent(x, z)) fail(Err::NoDiagonal, "twist: xz is not an edge of the quad");
    auto r = quad_twist_ops(eng, g, x, z);
    if (!((r.y == y && r.l == l) || (r.y == l && r.l == y)))
        fail(Err::NotEmptyQuad, "twist: quad interior does not match the stated circuit");
    return r;
}

GoldenReport tutte_identity_checks(ChromEngine& eng, const Triangulation& g, long prec_bits) {
    if (!g.is_triangular()) fail(Err::NotTriangulation, "identity checks need a triangulation");
    GoldenReport rep;
    rep.prec_bits = prec_bits;
    auto gc = GoldenConstants::make(prec_bits);
    Polynomial f = eng.chromatic_polynomial(g);

    BigFloat f_ts5 = f.evaluate(gc.tau_sqrt5);
    BigFloat f_t2 = f.evaluate(gc.tau2);
    BigFloat rhs = gc.sqrt5 * gc.tau.pow_si(3L * (g.order() - 3)) * f_t2 * f_t2;
    BigFloat diff = (f_ts5 - rhs).abs();
    BigFloat scale = f_ts5.abs();
    if (rhs.abs().to_double() > scale.to_double()) scale = rhs.abs();
    rep.lhs_golden = f_ts5.to_double();
    rep.rhs_golden = rhs.to_double();
    rep.golden_identity_rel = scale.to_double() == 0 ? diff.to_double() : (diff / scale).to_double();
    rep.positive_at_tau_sqrt5 = f_ts5.sign() > 0;
    rep.bound_at_tau2 = f_t2.abs() <= gc.tau.pow_si(5 - g.order());

    double worst = 0;
    if (g.order() >= 4) {
        for (int v = 0; v < g.order(); ++v) {
            Triangulation h = g.delete_vertex(v);
            Polynomial fh = eng.chromatic_polynomial(h);
            int d = g.degree(v);
            BigFloat lhs = f.evaluate(gc.tau2);
            BigFloat r = gc.tau.pow_si(1 - d) * fh.evaluate(gc.tau2);
            if (d % 2 == 1) r = BigFloat::of(0, prec_bits) - r;
            BigFloat dd = (lhs - r).abs();
            BigFloat sc = lhs.abs();
            double rel = sc.to_double() == 0 ? dd.to_double() : (dd / sc).to_double();
            worst = std::max(worst, rel);
        }
    }
    rep.vertex_elim_rel_max = worst;
    return rep;
}

} // namespace mpg
