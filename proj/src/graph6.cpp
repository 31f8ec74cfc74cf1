#include "mpg/graph6.hpp"

#include <sstream>

#include "json.hpp"

namespace mpg {

namespace {

void append_bits(std::string& out, const std::vector<int>& bits) {
    for (size_t i = 0; i < bits.size(); i += 6) {
        int b = 0;
        for (size_t j = 0; j < 6; ++j) {
            b <<= 1;
            if (i + j < bits.size()) b |= bits[i + j];
        }
        out.push_back((char)(b + 63));
    }
}

std::string encode_adj(int n, const std::vector<uint32_t>& adj) {
    if (n < 0 || n > 258047) fail(Err::BadFormat, "graph6: order out of range");
    std::string out;
    if (n <= 62) {
        out.push_back((char)(n + 63));
    } else {
        out.push_back(126);
        out.push_back((char)(((n >> 12) & 63) + 63));
        out.push_back((char)(((n >> 6) & 63) + 63));
        out.push_back((char)((n & 63) + 63));
    }
    std::vector<int> bits;
    bits.reserve((size_t)n * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back((adj[i] >> j) & 1u);
    append_bits(out, bits);
    return out;
}

std::pair<int, std::vector<std::pair<int, int>>> decode_to_edges(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) fail(Err::BadFormat, "graph6: empty input");
    size_t pos = 0;
    long n;
    if ((unsigned char)s[0] == 126) {
        if (s.size() < 4) fail(Err::BadFormat, "graph6: truncated order");
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            int c = (unsigned char)s[i] - 63;
            if (c < 0 || c > 63) fail(Err::BadFormat, "graph6: bad order byte");
            n = (n << 6) | c;
        }
        pos = 4;
    } else {
        n = (unsigned char)s[0] - 63;
        if (n < 0 || n > 62) fail(Err::BadFormat, "graph6: bad order byte");
        pos = 1;
    }
    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if ((long)s.size() - (long)pos != nbytes) fail(Err::BadFormat, "graph6: wrong payload length");
    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int c = (unsigned char)s[pos + bit / 6] - 63;
            if (c < 0 || c > 63) fail(Err::BadFormat, "graph6: bad payload byte");
            if ((c >> (5 - bit % 6)) & 1) edges.push_back({i, j});
        }
    return {(int)n, edges};
}

} // namespace

std::string encode_graph6(const SGraph& g) { return encode_adj(g.n, g.adj); }

std::string encode_graph6(const Triangulation& t) {
    if (!t.is_simple()) fail(Err::BadFormat, "graph6: graph must be simple");
    return encode_graph6(t.simple_graph());
}

Triangulation decode_graph6(const std::string& text) {
    auto [n, edges] = decode_to_edges(text);
    return Triangulation::from_edge_list(n, edges);
}

SGraph decode_graph6_sgraph(const std::string& text) {
    auto [n, edges] = decode_to_edges(text);
    SGraph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

std::string to_dot(const Triangulation& t) {
    std::ostringstream os;
    os << "graph {\n  layout=neato\n  node [shape=circle]\n";
    for (auto [a, b] : t.edge_list()) os << "  " << a << " -- " << b << "\n";
    os << "  // faces:";
    for (const auto& f : t.faces()) {
        os << " (";
        for (size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
        os << ")";
    }
    os << "\n}\n";
    return os.str();
}

std::string to_json_adjacency(const Triangulation& t) {
    nlohmann::json j;
    j["n"] = t.order();
    auto edges = nlohmann::json::array();
    for (auto [a, b] : t.edge_list()) edges.push_back({std::min(a, b), std::max(a, b)});
    j["edges"] = edges;
    return j.dump();
}

} // namespace mpg
