#ifndef BLOCKDEC_BLOCKS_HPP
#define BLOCKDEC_BLOCKS_HPP

#include <optional>
#include <vector>

#include "blockdec/graph.hpp"

namespace blockdec {

// A k-block: at least k vertices, pairwise k-inseparable, inclusion-maximal.
struct Block {
    VertexSet vertices = 0;
    int k = 0;

    int size() const { return vset_size(vertices); }

    friend bool operator==(const Block&, const Block&) = default;
    friend auto operator<=>(const Block&, const Block&) = default;
};

enum class CutStrategy {
    automatic,    // subset enumeration up to 12 vertices, max-flow beyond
    brute_force,  // exhaustive subset enumeration (the oracle)
    max_flow,     // vertex-split Dinic
};

// Minimum size of a vertex set S, disjoint from {u,v}, whose removal
// separates u from v; nullopt (= infinity) when u,v are adjacent.
std::optional<int> min_separator_size(const Graph& g, int u, int v,
                                      CutStrategy strategy = CutStrategy::automatic);

// All k-blocks, sorted by vertex set. Maximal cliques of the k-inseparability
// relation, filtered to size >= k.
std::vector<Block> find_k_blocks(const Graph& g, int k,
                                 CutStrategy strategy = CutStrategy::automatic);

// Every component of G - b has fewer than b.k neighbours.
bool is_separable_block(const Graph& g, const Block& b);

} // namespace blockdec

#endif // BLOCKDEC_BLOCKS_HPP
