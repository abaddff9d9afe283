#pragma once

#include <cstdint>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace csbm {

// Undirected simple graph on vertices 0..n-1 with a dense bit-packed
// adjacency matrix (one row of 64-bit words per vertex). Dense rows make
// edgewise AND/OR and neighborhood scans word-parallel, which is what the
// overlay/intersection pipelines and the spectral recovery lean on.
//
// Invariants kept by construction: no self-loops, symmetric adjacency, all
// bits at column index >= n are zero (so whole-buffer popcounts are exact).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int words_per_row() const { return words_; }

    bool has_edge(int i, int j) const {
        return (bits_[static_cast<std::size_t>(i) * words_ + (static_cast<unsigned>(j) >> 6)] >>
                (j & 63)) & 1u;
    }

    // Sets the (i, j) and (j, i) bits. Pre: i != j, both in range.
    void add_edge(int i, int j);

    std::span<const std::uint64_t> row(int i) const {
        return {bits_.data() + static_cast<std::size_t>(i) * words_, static_cast<std::size_t>(words_)};
    }

    int degree(int i) const;
    std::int64_t edge_count() const;
    std::vector<int> isolated_vertices() const;

    // Calls fn(i, j) for every edge with i < j, in lexicographic order.
    template <typename Fn>
    void for_each_edge(Fn&& fn) const {
        for (int i = 0; i < n_; ++i) {
            const std::uint64_t* r = bits_.data() + static_cast<std::size_t>(i) * words_;
            int w0 = (i + 1) >> 6;
            for (int w = w0; w < words_; ++w) {
                std::uint64_t word = r[w];
                if (w == w0 && ((i + 1) & 63)) word &= ~0ull << ((i + 1) & 63);
                while (word) {
                    int b = __builtin_ctzll(word);
                    fn(i, (w << 6) | b);
                    word &= word - 1;
                }
            }
        }
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

    friend Graph intersection_graph(const Graph& a, const Graph& b);
    friend Graph union_graph(const Graph& a, const Graph& b);

    static Graph complete(int n);

private:
    void require_same_shape(const Graph& other, const char* op) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Edgewise AND / OR. Throws std::invalid_argument on vertex-count mismatch.
Graph intersection_graph(const Graph& a, const Graph& b);
Graph union_graph(const Graph& a, const Graph& b);

// Breadth-first connectivity over the bit rows.
struct ConnectivityReport {
    bool connected = false;
    int components = 0;
};
ConnectivityReport connectivity_check(const Graph& g);

// Plain-text edge list: first line "n m", then m lines "i j" with 0-based
// i < j. write_edge_list emits edges in lexicographic order.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace csbm
