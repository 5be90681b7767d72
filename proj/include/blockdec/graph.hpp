#ifndef BLOCKDEC_GRAPH_HPP
#define BLOCKDEC_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "blockdec/error.hpp"

namespace blockdec {

// Vertex subset as a bitmask over the graph's vertex indices. Indices follow
// the lexicographic order of the labels, so ascending-bit iteration yields
// label-sorted output everywhere.
using VertexSet = std::uint64_t;

inline int vset_size(VertexSet s) { return std::popcount(s); }

inline bool vset_contains(VertexSet s, int v) { return (s >> v) & 1u; }

inline int vset_lowest(VertexSet s) { return std::countr_zero(s); }

std::vector<int> vset_members(VertexSet s);

// Finite undirected simple graph with opaque string labels. Immutable after
// construction; at most 64 vertices (everything downstream runs on bitmasks).
class Graph {
public:
    static Graph from_edge_list(const std::vector<std::string>& isolated,
                                const std::vector<std::pair<std::string, std::string>>& edges);

    // Vertices named "0".."n-1"; convenience for tests and generators (n <= 10
    // keeps the label order and the numeric order aligned).
    static Graph from_index_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }
    int index_of(const std::string& label) const;  // throws input error if absent

    bool adjacent(int u, int v) const { return vset_contains(adj_[u], v); }
    VertexSet adj(int v) const { return adj_[v]; }
    VertexSet all() const { return all_; }
    int degree(int v) const { return vset_size(adj_[v]); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    Graph() = default;

    std::vector<std::string> labels_;          // sorted
    std::vector<VertexSet> adj_;
    std::vector<std::pair<int, int>> edges_;   // u < v, sorted
    VertexSet all_ = 0;
};

std::vector<std::string> vset_labels(const Graph& g, VertexSet s);
VertexSet vset_from_labels(const Graph& g, const std::vector<std::string>& labels);
std::string vset_to_string(const Graph& g, VertexSet s);  // "{a,b,c}" diagnostic form

// Connected components of G - removed, sorted by smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet removed);

// Vertices outside s with a neighbour in s.
VertexSet neighbourhood(const Graph& g, VertexSet s);

bool is_connected(const Graph& g);

// All adjacency-preserving vertex permutations (perm[v] = image of v), found
// by backtracking with degree pruning. Sorted lexicographically; the identity
// comes first. Throws bound_exceeded when n() > cap.
std::vector<std::vector<int>> automorphisms(const Graph& g, int cap = 10);

VertexSet permute_vset(const std::vector<int>& perm, VertexSet s);

} // namespace blockdec

#endif // BLOCKDEC_GRAPH_HPP
