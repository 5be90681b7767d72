#ifndef BLOCKDEC_IO_HPP
#define BLOCKDEC_IO_HPP

#include <string>
#include <vector>

#include "blockdec/blocks.hpp"
#include "blockdec/graph.hpp"
#include "blockdec/profile.hpp"
#include "blockdec/treedec.hpp"

namespace blockdec {

enum class OutputFormat { json, dot, text };

// Edge-list text: two whitespace-separated labels per line form an edge, a
// single label declares an isolated vertex, '#' starts a comment line.
// Duplicate edges collapse; self-loops are parse errors.
Graph parse_graph(const std::string& text);

struct DecompositionFile {
    TreeDecomposition td;
    int k = 0;
    std::vector<VertexSet> block_bags;
};

// JSON schema shared by decompose/refine/verify:
// {"k":int, "nodes":[{"id":int,"bag":[labels]}],
//  "edges":[{"u":int,"v":int,"separator":[labels]}],
//  "blocks":[{"node_id":int,"vertices":[labels]}]}
DecompositionFile parse_decomposition(const Graph& g, const std::string& json_text);

std::string emit_decomposition(const Graph& g, const TreeDecomposition& td, int k,
                               const std::vector<Block>& blocks, OutputFormat format);

std::string emit_blocks(const Graph& g, int k,
                        const std::vector<std::pair<Block, bool>>& blocks_with_separability,
                        OutputFormat format);

std::string emit_profiles(const Graph& g, int k, const std::vector<Profile>& profiles,
                          OutputFormat format);

} // namespace blockdec

#endif // BLOCKDEC_IO_HPP
