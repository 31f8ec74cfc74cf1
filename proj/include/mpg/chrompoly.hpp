#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "mpg/coloring.hpp"
#include "mpg/polynomial.hpp"
#include "mpg/triangulation.hpp"

namespace mpg {

struct ChromOptions {
    int order_cap = 16; // exact desk-scale guard
    bool use_memo = true;
    bool use_separators = true;
};

// Exact chromatic polynomials by deletion-contraction with clique-cut
// factorization. The memo is keyed on canonical forms of intermediate graphs
// and may be shared across a corpus sweep (guarded for concurrent use,
// last write wins on identical keys).
class ChromEngine {
public:
    explicit ChromEngine(ChromOptions opts = {}) : opts_(opts) {}

    Polynomial chromatic_polynomial(const SGraph& g);
    Polynomial chromatic_polynomial(const Triangulation& t) { return chromatic_polynomial(t.simple_graph()); }
    mpz_class at4(const SGraph& g) { return chromatic_polynomial(g).evaluate(4); }
    mpz_class at4(const Triangulation& t) { return at4(t.simple_graph()); }

    size_t memo_size() const { return memo_.size(); }

private:
    Polynomial compute(const SGraph& g, int depth);

    ChromOptions opts_;
    std::unordered_map<std::string, Polynomial> memo_;
    std::mutex mu_;
};

// ---- identity checks over the local contraction formulas ----

// f(G,4) = f(G1,4) + f(G2,4) at a degree-4 vertex with link cycle v1v2v3v4,
// G1 = (G-v)o{v1,v3}, G2 = (G-v)o{v2,v4}. A contraction whose pair is
// adjacent contributes 0 and carries no graph.
struct FourContract {
    std::vector<VertexId> link;
    std::optional<Triangulation> g1, g2;
    mpz_class f1, f2, fg;
    bool holds = false;
};
FourContract four_contract_decomposition(ChromEngine& eng, const Triangulation& g, VertexId v);

// Bracket decomposition at a degree-5 vertex with link cycle v1..v5.
// B1 = f(G1,4) - f(G1+{v1v4,v1v3},4), G1 = (G-v)o{v2,v5}
// B2 = f(G2,4) - f(G2+{v3v1,v3v5},4), G2 = (G-v)o{v2,v4}
// B3 = f(G3,4) - f(G3+{v4v1},4),      G3 = (G-v)o{v3,v5}
// The printed source also admits a variant third bracket using G1+{v4v1};
// both are computed and the one satisfying the sum is recorded.
struct FiveContract {
    std::vector<VertexId> link;
    std::optional<Triangulation> g1, g2, g3;
    mpz_class b1, b2, b3_g3, b3_g1, fg;
    bool holds_with_g3 = false; // sum with b3_g3 equals f(G,4)
    bool holds_with_g1 = false;
    bool nonneg = false;        // b1,b2 and the holding b3 all >= 0
};
FiveContract five_contract_decomposition(ChromEngine& eng, const Triangulation& g, VertexId v);

// Twisting operations on an empty quad x-y-z-l with sole diagonal e = xz.
struct QuadTwist {
    VertexId x, y, z, l;
    Triangulation theta; // diagonal flipped to yl
    Triangulation phi;   // xz contracted
    Triangulation psi;   // y,l identified in G - xz
    Polynomial residual; // f(G) - f(theta) - f(psi) + f(phi); must be zero
};
QuadTwist quad_twist_ops(ChromEngine& eng, const Triangulation& g, VertexId x, VertexId z);
QuadTwist quad_twist_ops(ChromEngine& eng, const Triangulation& g, const std::vector<VertexId>& quad);

// Numeric residual report for the golden-ratio identities.
struct GoldenReport {
    long prec_bits = 128;
    double golden_identity_rel = 0;   // |f(tau sqrt5) - sqrt5 tau^{3(n-3)} f(tau^2)^2| relative
    bool positive_at_tau_sqrt5 = false;
    bool bound_at_tau2 = false;       // |f(tau^2)| <= tau^{5-n}
    double vertex_elim_rel_max = 0;   // Eq of f(G,tau^2) vs (-1)^d tau^{1-d} f(G-v,tau^2), max over v
    double lhs_golden = 0, rhs_golden = 0;
};
GoldenReport tutte_identity_checks(ChromEngine& eng, const Triangulation& g, long prec_bits = 128);

} // namespace mpg
