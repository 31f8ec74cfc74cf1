#include "mpg/corpus.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include "mpg/graph6.hpp"
#include "mpg/wheelops.hpp"

namespace mpg {

namespace {

Triangulation k3() {
    std::vector<std::vector<int>> rot = {{1, 2}, {2, 0}, {0, 1}};
    return Triangulation::from_rotation(3, rot);
}

Triangulation k4() {
    return Triangulation::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

void sort_by_cert(std::vector<Triangulation>& v) {
    std::sort(v.begin(), v.end(),
              [](const Triangulation& a, const Triangulation& b) { return a.certificate() < b.certificate(); });
}

// chunked parallel map-insert with a shared dedup set
template <typename Item, typename Fn>
void parallel_over(const std::vector<Item>& items, int workers, Fn fn) {
    if (workers <= 1 || items.size() < 16) {
        for (const auto& it : items) fn(it);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= items.size()) return;
                fn(items[i]);
            }
        });
    for (auto& t : pool) t.join();
}

} // namespace

Corpus::Corpus(CorpusOptions opts) : opts_(opts) {
    levels_[3] = {k3()};
    levels_[4] = {k4()};
    built_to_ = 4;
}

void Corpus::build(int n) {
    if (n > opts_.cap) fail(Err::CapExceeded, "corpus: requested order exceeds the configured cap");
    while (built_to_ < n) {
        int next = built_to_ + 1;
        if (!load_checkpoint(next)) {
            expand_level(built_to_);
            save_checkpoint(next);
        }
        built_to_ = next;
    }
}

void Corpus::expand_level(int from_order) {
    const auto& parents = levels_[from_order];
    constexpr int kShards = 64;
    std::array<std::map<std::string, Triangulation>, kShards> shards;
    std::array<std::mutex, kShards> locks;
    parallel_over(parents, opts_.workers, [&](const Triangulation& g) {
        for (int w = 0; w < g.order(); ++w) {
            int d = g.degree(w);
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) {
                    Triangulation h = surgery::split_vertex(g, w, i, j);
                    std::string c = h.certificate().bytes;
                    size_t s = std::hash<std::string>{}(c) % kShards;
                    std::lock_guard<std::mutex> lk(locks[s]);
                    shards[s].emplace(std::move(c), std::move(h));
                }
        }
    });
    std::vector<Triangulation> out;
    for (auto& shard : shards)
        for (auto& [c, t] : shard) out.push_back(t.canonical_form()); // canonical labels keep reports
                                                                      // byte-identical across runs
    sort_by_cert(out);
    levels_[from_order + 1] = std::move(out);
}

const std::vector<Triangulation>& Corpus::at(int n) {
    build(n);
    return levels_[n];
}

std::vector<Triangulation> Corpus::slice(int n, int min_degree) {
    std::vector<Triangulation> out;
    for (const auto& g : at(n))
        if (g.min_degree() >= min_degree) out.push_back(g);
    return out;
}

long Corpus::count(int n, int min_degree) {
    long c = 0;
    for (const auto& g : at(n))
        if (g.min_degree() >= min_degree) ++c;
    return c;
}

bool Corpus::load_checkpoint(int n) {
    if (opts_.checkpoint_dir.empty()) return false;
    std::filesystem::path p = std::filesystem::path(opts_.checkpoint_dir) / ("order" + std::to_string(n) + ".g6");
    std::ifstream in(p);
    if (!in) return false;
    std::vector<Triangulation> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(decode_graph6(line));
    }
    if (out.empty()) return false;
    sort_by_cert(out);
    levels_[n] = std::move(out);
    return true;
}

void Corpus::save_checkpoint(int n) {
    if (opts_.checkpoint_dir.empty()) return;
    std::filesystem::create_directories(opts_.checkpoint_dir);
    std::filesystem::path p = std::filesystem::path(opts_.checkpoint_dir) / ("order" + std::to_string(n) + ".g6");
    std::ofstream out(p);
    for (const auto& g : levels_[n]) out << encode_graph6(g.canonical_form()) << "\n";
}

// ---- operator closure (the wheel-operation generating system) ----

namespace {

// lower bound on extra vertices needed to clear parallel edges: every split
// fixes only parallels at its own vertex, so disjoint parallel classes need
// separate splits (2 vertices each)
int excess_cost(const Triangulation& g) {
    std::map<std::pair<int, int>, int> mult;
    for (auto [a, b] : g.edge_list()) {
        auto p = std::minmax(a, b);
        mult[{p.first, p.second}]++;
    }
    std::set<int> used;
    int disjoint = 0;
    for (auto& [pr, k] : mult) {
        if (k < 2) continue;
        if (used.count(pr.first) || used.count(pr.second)) continue;
        used.insert(pr.first);
        used.insert(pr.second);
        ++disjoint;
    }
    bool any = false;
    for (auto& [pr, k] : mult) any |= k >= 2;
    if (!any) return 0;
    return 2 * std::max(1, disjoint);
}

} // namespace

std::map<int, std::vector<Triangulation>> Corpus::operator_closure(int cap, int workers) {
    std::map<int, std::map<std::string, Triangulation>> states; // all (multi)graph states
    Triangulation start = k3();
    states[3].emplace(start.certificate().bytes, start);

    for (int order = 3; order < cap; ++order) {
        auto it = states.find(order);
        if (it == states.end()) continue;
        std::vector<Triangulation> frontier;
        frontier.reserve(it->second.size());
        for (auto& [c, t] : it->second) frontier.push_back(t);

        std::mutex mu;
        auto emit = [&](Triangulation&& h) {
            if (h.order() + excess_cost(h) > cap) return;
            std::string c = h.certificate().bytes;
            std::lock_guard<std::mutex> lk(mu);
            states[h.order()].emplace(std::move(c), std::move(h));
        };

        parallel_over(frontier, workers, [&](const Triangulation& g) {
            int n = g.order();
            // extend-3-wheel in every face; extend-2-wheel over every face edge
            for (int fi = 0; fi < (int)g.faces().size(); ++fi) {
                if (n + 1 + 0 <= cap) {
                    emit(surgery::insert_center(g, fi));
                    int len = (int)g.faces()[fi].size();
                    for (int c = 0; c < len; ++c) {
                        try {
                            emit(surgery::extend2(g, fi, c, (c + 1) % len));
                        } catch (const GraphError&) {
                        }
                    }
                }
            }
            if (n + 2 > cap) return;
            // extend-4-wheel on every dart pair of every vertex
            for (int u = 0; u < n; ++u) {
                int d = g.degree(u);
                for (int i = 0; i < d; ++i)
                    for (int j = i + 1; j < d; ++j) {
                        try {
                            emit(surgery::extend4(g, u, i, j));
                        } catch (const GraphError&) {
                        }
                    }
            }
            // extend-5-wheel on every funnel site
            for (int fi = 0; fi < (int)g.faces().size(); ++fi) {
                if (g.faces()[fi].size() != 3) continue;
                auto walk = g.face_darts(fi);
                for (int ci = 0; ci < 3; ++ci) {
                    VertexId s = walk[ci].first;
                    int d = g.degree(s);
                    int p_out = walk[ci].second;
                    int p_in = ((p_out - 1) % d + d) % d;
                    for (int pt = 0; pt < d; ++pt) {
                        if (pt == p_out || pt == p_in) continue;
                        try {
                            emit(surgery::extend5(g, s, fi, pt));
                        } catch (const GraphError&) {
                        }
                    }
                }
            }
        });
    }

    std::map<int, std::vector<Triangulation>> out;
    for (auto& [n, m] : states) {
        for (auto& [c, t] : m)
            if (t.is_maximal()) out[n].push_back(t);
        sort_by_cert(out[n]);
    }
    return out;
}

Corpus::DualCheck Corpus::dual_check(int cap) {
    DualCheck dc;
    build(cap);
    auto closure = operator_closure(cap, opts_.workers);
    for (int n = 4; n <= cap; ++n) {
        std::set<std::string> a, b;
        for (const auto& g : at(n)) a.insert(g.certificate().bytes);
        for (const auto& g : closure[n]) b.insert(g.certificate().bytes);
        if (a != b) {
            dc.agree = false;
            dc.diffs.push_back("order " + std::to_string(n) + ": split-enumeration " + std::to_string(a.size()) +
                               " vs operator-closure " + std::to_string(b.size()));
        }
    }
    return dc;
}

} // namespace mpg
