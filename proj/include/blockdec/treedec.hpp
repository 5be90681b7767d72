#ifndef BLOCKDEC_TREEDEC_HPP
#define BLOCKDEC_TREEDEC_HPP

#include <functional>
#include <string>
#include <vector>

#include "blockdec/profile.hpp"
#include "blockdec/separation.hpp"

namespace blockdec {

// Tree plus bag per node. Node ids are the indices into bags; edges are
// stored as (u,v) with u < v.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> edges;

    int node_count() const { return static_cast<int>(bags.size()); }

    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

struct Violation {
    std::string code;    // e.g. "edge-uncovered", "trace-disconnected"
    std::string detail;  // witness
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Total check of the tree-decomposition conditions plus separation validity
// of every induced separation. Never throws; failures land in the report.
ValidationReport validate(const Graph& g, const TreeDecomposition& td);

// Node set of the component of T - {a,b} containing `a`.
std::vector<int> tree_side(const TreeDecomposition& td, int a, int b);

// (U_from, U_to): bag unions over the two sides of the tree edge.
OrientedSeparation induced_separation(const Graph& g, const TreeDecomposition& td, int from,
                                      int to);

// Separations induced by the edges oriented towards t. Throws
// degenerate_separation if some element is (V,V).
Star node_star(const Graph& g, const TreeDecomposition& td, int t);

// Max separator size over tree edges; 0 for an edgeless tree.
int adhesion(const Graph& g, const TreeDecomposition& td);

// Every induced separation tight (vacuously true without edges).
bool is_tight_td(const Graph& g, const TreeDecomposition& td);

// Some induced separation (efficiently) distinguishes the two profiles.
bool td_distinguishes(const Graph& g, const TreeDecomposition& td, const Profile& p1,
                      const Profile& p2, bool efficiently);

// Induced separation set of `fine` contains that of `coarse`.
bool refines(const Graph& g, const TreeDecomposition& fine, const TreeDecomposition& coarse);

std::vector<Separation> induced_separation_set(const Graph& g, const TreeDecomposition& td);

TreeDecomposition permute_bags(const std::vector<int>& perm, const TreeDecomposition& td);

// Tree isomorphism matching bags elementwise, by bag-guided backtracking.
bool tree_isomorphic_with_bags(const TreeDecomposition& a, const TreeDecomposition& b);

// The construction commutes with every automorphism of g, up to tree
// isomorphism matching bags. Propagates the automorphism cap error.
bool check_canonical(const Graph& g,
                     const std::function<TreeDecomposition(const Graph&)>& construct,
                     int aut_cap = 10);

} // namespace blockdec

#endif // BLOCKDEC_TREEDEC_HPP
