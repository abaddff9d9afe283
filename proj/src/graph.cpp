#include "csbm/graph.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace csbm {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be positive");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("Graph::add_edge: self-loop rejected");
    bits_[static_cast<std::size_t>(i) * words_ + (static_cast<unsigned>(j) >> 6)] |= 1ull << (j & 63);
    bits_[static_cast<std::size_t>(j) * words_ + (static_cast<unsigned>(i) >> 6)] |= 1ull << (i & 63);
}

int Graph::degree(int i) const {
    const std::uint64_t* r = bits_.data() + static_cast<std::size_t>(i) * words_;
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::int64_t Graph::edge_count() const {
    std::int64_t total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total / 2;  // each edge sets two bits
}

std::vector<int> Graph::isolated_vertices() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (degree(i) == 0) out.push_back(i);
    return out;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

void Graph::require_same_shape(const Graph& other, const char* op) const {
    if (n_ != other.n_)
        throw std::invalid_argument(std::string(op) + ": vertex counts differ");
}

Graph intersection_graph(const Graph& a, const Graph& b) {
    a.require_same_shape(b, "intersection_graph");
    Graph out = a;
    for (std::size_t w = 0; w < out.bits_.size(); ++w) out.bits_[w] &= b.bits_[w];
    return out;
}

Graph union_graph(const Graph& a, const Graph& b) {
    a.require_same_shape(b, "union_graph");
    Graph out = a;
    for (std::size_t w = 0; w < out.bits_.size(); ++w) out.bits_[w] |= b.bits_[w];
    return out;
}

ConnectivityReport connectivity_check(const Graph& g) {
    const int n = g.n();
    ConnectivityReport rep;
    if (n == 0) return rep;
    std::vector<std::uint64_t> visited(static_cast<std::size_t>(g.words_per_row()), 0);
    std::vector<int> queue;
    queue.reserve(n);
    int seen = 0;
    for (int start = 0; start < n; ++start) {
        if ((visited[static_cast<unsigned>(start) >> 6] >> (start & 63)) & 1u) continue;
        ++rep.components;
        visited[static_cast<unsigned>(start) >> 6] |= 1ull << (start & 63);
        queue.clear();
        queue.push_back(start);
        ++seen;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto row = g.row(queue[head]);
            for (int w = 0; w < g.words_per_row(); ++w) {
                std::uint64_t fresh = row[w] & ~visited[w];
                visited[w] |= fresh;
                while (fresh) {
                    int b = __builtin_ctzll(fresh);
                    queue.push_back((w << 6) | b);
                    ++seen;
                    fresh &= fresh - 1;
                }
            }
        }
        if (seen == n && rep.components == 1) break;  // early out: all reached from 0
    }
    rep.connected = (rep.components == 1);
    return rep;
}

Graph read_edge_list(std::istream& in) {
    std::int64_t n = 0, m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("edge list: missing 'n m' header");
    if (n < 1) throw std::runtime_error("edge list: bad vertex count");
    Graph g(static_cast<int>(n));
    for (std::int64_t e = 0; e < m; ++e) {
        std::int64_t i = 0, j = 0;
        if (!(in >> i >> j)) throw std::runtime_error("edge list: truncated edge section");
        if (i < 0 || j < 0 || i >= n || j >= n || i >= j)
            throw std::runtime_error("edge list: edge must satisfy 0 <= i < j < n");
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    g.for_each_edge([&](int i, int j) { out << i << ' ' << j << '\n'; });
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for write: " + path);
    write_edge_list(g, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace csbm
