#ifndef BLOCKDEC_REFINE_HPP
#define BLOCKDEC_REFINE_HPP

#include <vector>

#include "blockdec/blocks.hpp"
#include "blockdec/separation.hpp"
#include "blockdec/treedec.hpp"

namespace blockdec {

// Star rho with interior exactly b, lying above sigma. rho is the union of
// one separation (X_C, Y_C) per eligible component C of G - b and of the
// sigma elements whose separator sits inside b.
struct BlockStarResult {
    Star rho;
    std::vector<std::pair<VertexSet, OrientedSeparation>> per_component;  // sorted by component
    std::vector<OrientedSeparation> retained;                             // separator inside b
};

// Components of G - b meeting the big side of every sigma element; all of
// them when sigma is empty. Checks that sigma is a star of tight separations
// with b inside its interior.
std::vector<VertexSet> eligible_components(const Graph& g, const Block& b, const Star& sigma);

// (X_C, Y_C) for an eligible component: X_C = V(C) cup N(C) cup the strict
// small sides of the sigma elements meeting C; Y_C = the complement of
// everything but N(C). Verifies separator = N(C) and order < k.
OrientedSeparation component_separation(const Graph& g, const Block& b, const Star& sigma,
                                        VertexSet c);

// The star construction; all result invariants are verified before returning
// (star property, sigma <= rho, interior(rho) = b, orders < k).
BlockStarResult block_star(const Graph& g, const Block& b, const Star& sigma);

// Star-shaped decomposition of the part G[bag(node)]: centre bag b, one leaf
// per rho element (A,B) with bag A cap bag(node). leaf_sep[i] is the rho
// element of leaf node i+1; the centre is node 0.
struct StarFragment {
    TreeDecomposition frag;
    std::vector<OrientedSeparation> leaf_sep;
};

StarFragment star_decomposition(const Graph& g, const TreeDecomposition& td, int node,
                                const Block& b);

struct RefineOptions {
    // Contract edges whose induced separation duplicates an incident edge's,
    // merging a bag into a superset neighbour bag.
    bool simplify = false;
};

// Refines td so that every listed block is exactly one bag: decomposes each
// part holding a block by its star fragment and re-glues along the original
// tree edges. Postconditions (valid, refines, one bag per block, original
// edge separations unchanged) are verified.
TreeDecomposition refine_td(const Graph& g, const TreeDecomposition& td,
                            const std::vector<Block>& blocks, const RefineOptions& opt = {});

} // namespace blockdec

#endif // BLOCKDEC_REFINE_HPP
