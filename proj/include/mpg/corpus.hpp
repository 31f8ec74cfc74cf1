#pragma once

#include <map>
#include <string>
#include <vector>

#include "mpg/triangulation.hpp"

namespace mpg {

struct CorpusOptions {
    int cap = 13;               // largest order ever built
    int workers = 1;            // parallel frontier expansion
    std::string checkpoint_dir; // per-order graph6 checkpoints when non-empty
};

// Complete isomorph-free store of planar triangulations by order.
//
// The production engine generates level n+1 from level n by vertex splitting
// (inverse edge contraction); every triangulation of the sphere above K4
// arises this way, so each level is provably complete. The wheel-operation
// operator closure (extend 2/3/4/5-wheel from K3, multigraph intermediates
// allowed) is available separately and is dual-checked against it.
class Corpus {
public:
    explicit Corpus(CorpusOptions opts = {});

    void build(int n); // ensure all orders 3..n are present
    int built_to() const { return built_to_; }
    const CorpusOptions& options() const { return opts_; }

    const std::vector<Triangulation>& at(int n); // all triangulations of order n
    std::vector<Triangulation> slice(int n, int min_degree);
    long count(int n, int min_degree);

    // Independent generation by the wheel-operation system: breadth-first
    // closure from K3 under extend-2/3/4/5-wheel over all sites, deduplicated
    // by certificate; returns the simple maximal planar graphs per order.
    static std::map<int, std::vector<Triangulation>> operator_closure(int cap, int workers = 1);

    // certificate-set equality between the two strategies for orders <= cap
    struct DualCheck {
        bool agree = true;
        std::vector<std::string> diffs; // human-readable discrepancies
    };
    DualCheck dual_check(int cap);

private:
    void expand_level(int from_order);
    bool load_checkpoint(int n);
    void save_checkpoint(int n);

    CorpusOptions opts_;
    int built_to_ = 0;
    std::map<int, std::vector<Triangulation>> levels_;
};

} // namespace mpg
