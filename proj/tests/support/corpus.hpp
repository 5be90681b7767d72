#ifndef BLOCKDEC_TESTS_CORPUS_HPP
#define BLOCKDEC_TESTS_CORPUS_HPP

#include <string>
#include <vector>

#include "blockdec/graph.hpp"

namespace blockdec::testsupport {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}: centre "0", leaves "1".."leaves"

// Two K4s {0,1,2,3} and {2,3,4,5} glued on {2,3}.
Graph glued_k4s();
// The same plus a pendant vertex 6 adjacent to 0.
Graph glued_k4s_pendant();
// K4 {0,1,2,3} plus pendant 4 adjacent to 0.
Graph k4_pendant();
// K4 {0,1,2,3} plus tail 4-5 with 4 adjacent to 2 and 3.
Graph k4_tail2();
// K_{2,3} with parts {0,1} and {2,3,4}.
Graph complete_bipartite_2_3();
// Triangular prism: triangles 012, 345 and the matching 03, 14, 25.
Graph prism();
// C4 {0,1,2,3} plus two paths u-w-v (4-5-6 and 7-8-9) with u adjacent to 0,1
// and v adjacent to 2,3. Its unique 4-block {0,1,2,3} is not separable: both
// outside components have a neighbourhood of size 4.
Graph nonseparable_witness();

// space-separated labels -> vertex set
VertexSet vs(const Graph& g, const std::string& labels);

// All connected graphs on exactly n vertices (labels "0".."n-1"), one per
// isomorphism class, in a deterministic order. Supports n <= 7.
const std::vector<Graph>& connected_graphs(int n);

std::string to_edge_list(const Graph& g);

} // namespace blockdec::testsupport

#endif // BLOCKDEC_TESTS_CORPUS_HPP
