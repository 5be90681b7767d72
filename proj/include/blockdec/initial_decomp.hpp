#ifndef BLOCKDEC_INITIAL_DECOMP_HPP
#define BLOCKDEC_INITIAL_DECOMP_HPP

#include <vector>

#include "blockdec/profile.hpp"
#include "blockdec/treedec.hpp"

namespace blockdec {

// Pairwise nested, proper separations of order < k.
struct NestedSystem {
    std::vector<Separation> separations;  // sorted, unique
    int k = 0;
};

// Brute-force stand-in for the published canonical constructions: walks the
// orders 0..k-1, collects the efficient distinguishers of the profile pairs
// whose minimum distinguisher order is the current one, and keeps exactly the
// candidates nested with the whole candidate level and with the system so
// far. Verifies at the end that every pair ended up efficiently distinguished
// and throws incomplete_system otherwise.
NestedSystem distinguishing_system(const Graph& g, const SystemPtr& sys,
                                   const std::vector<Profile>& regular_profiles);
NestedSystem distinguishing_system(const Graph& g, int k, long proper_cap = -1);

// Nodes = consistent orientations of the system, bag = intersection of the
// big sides, edges between orientations differing on exactly one separation.
// The result is validated and its induced separation set checked against the
// input.
TreeDecomposition tree_from_nested(const Graph& g, const NestedSystem& ns);

// distinguishing_system + tree_from_nested, with the postconditions checked:
// valid, tight, adhesion < k, every pair of regular k-profiles efficiently
// distinguished, at most one k-block per bag.
TreeDecomposition initial_decomposition(const Graph& g, int k, long proper_cap = -1);

} // namespace blockdec

#endif // BLOCKDEC_INITIAL_DECOMP_HPP
