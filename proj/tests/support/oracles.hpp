#ifndef BLOCKDEC_TESTS_ORACLES_HPP
#define BLOCKDEC_TESTS_ORACLES_HPP

#include <vector>

#include "blockdec/blocks.hpp"
#include "blockdec/graph.hpp"
#include "blockdec/profile.hpp"

namespace blockdec::testsupport {

// Union-find components, independent of the BFS in the library.
std::vector<VertexSet> oracle_components(const Graph& g, VertexSet removed);

// k-blocks by enumerating all 2^n vertex subsets and keeping the maximal
// pairwise k-inseparable ones of size >= k; inseparability via the
// subset-enumeration minimum-separator strategy.
std::vector<Block> oracle_k_blocks(const Graph& g, int k);

// Exhaustive orientation search over the whole system, with plain pairwise
// consistency checks while descending and a full profile-property check at
// the leaves. No propagation; intended as the independent reference for
// enumerate_profiles on small systems.
std::vector<Profile> oracle_profiles(const SystemPtr& sys, bool regular_only);

} // namespace blockdec::testsupport

#endif // BLOCKDEC_TESTS_ORACLES_HPP
