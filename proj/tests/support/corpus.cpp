#include "support/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace blockdec::testsupport {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return Graph::from_index_edges(n, edges);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return Graph::from_index_edges(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return Graph::from_index_edges(n, edges);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.push_back({0, i});
    return Graph::from_index_edges(leaves + 1, edges);
}

namespace {

std::vector<std::pair<int, int>> clique_on(std::initializer_list<int> vs) {
    std::vector<int> v(vs);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            edges.push_back({v[i], v[j]});
    return edges;
}

} // namespace

Graph glued_k4s() {
    auto edges = clique_on({0, 1, 2, 3});
    for (auto e : clique_on({2, 3, 4, 5}))
        edges.push_back(e);
    return Graph::from_index_edges(6, edges);
}

Graph glued_k4s_pendant() {
    auto edges = clique_on({0, 1, 2, 3});
    for (auto e : clique_on({2, 3, 4, 5}))
        edges.push_back(e);
    edges.push_back({0, 6});
    return Graph::from_index_edges(7, edges);
}

Graph k4_pendant() {
    auto edges = clique_on({0, 1, 2, 3});
    edges.push_back({0, 4});
    return Graph::from_index_edges(5, edges);
}

Graph k4_tail2() {
    auto edges = clique_on({0, 1, 2, 3});
    edges.push_back({2, 4});
    edges.push_back({3, 4});
    edges.push_back({4, 5});
    return Graph::from_index_edges(6, edges);
}

Graph complete_bipartite_2_3() {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 2; ++a)
        for (int b = 2; b < 5; ++b)
            edges.push_back({a, b});
    return Graph::from_index_edges(5, edges);
}

Graph prism() {
    return Graph::from_index_edges(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph nonseparable_witness() {
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    // path 4-5-6, attached at 0,1 and 2,3
    edges.push_back({4, 0});
    edges.push_back({4, 1});
    edges.push_back({4, 5});
    edges.push_back({5, 6});
    edges.push_back({6, 2});
    edges.push_back({6, 3});
    // path 7-8-9, same attachment pattern
    edges.push_back({7, 0});
    edges.push_back({7, 1});
    edges.push_back({7, 8});
    edges.push_back({8, 9});
    edges.push_back({9, 2});
    edges.push_back({9, 3});
    return Graph::from_index_edges(10, edges);
}

VertexSet vs(const Graph& g, const std::string& labels) {
    std::istringstream in(labels);
    VertexSet s = 0;
    std::string tok;
    while (in >> tok)
        s |= VertexSet{1} << g.index_of(tok);
    return s;
}

namespace {

// Graphs on n <= 7 vertices as edge masks over the pairs (i,j), i < j, in
// lexicographic pair order.
int pair_index(int n, int i, int j) {
    int idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (a == i && b == j)
                return idx;
            ++idx;
        }
    return -1;
}

bool mask_connected(int n, std::uint32_t mask) {
    std::vector<std::uint32_t> adj(n, 0);
    int idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++idx)
            if ((mask >> idx) & 1u) {
                adj[a] |= 1u << b;
                adj[b] |= 1u << a;
            }
    std::uint32_t reach = 1, prev = 0;
    while (reach != prev) {
        prev = reach;
        for (int v = 0; v < n; ++v)
            if ((reach >> v) & 1u)
                reach |= adj[v];
    }
    return reach == (n == 32 ? ~0u : (1u << n) - 1);
}

std::uint32_t canonical_mask(int n, std::uint32_t mask) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            pairs.push_back({a, b});
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = ~0u;
    do {
        std::uint32_t m = 0;
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if ((mask >> p) & 1u) {
                int i = perm[pairs[p].first], j = perm[pairs[p].second];
                m |= 1u << pair_index(n, std::min(i, j), std::max(i, j));
            }
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph mask_to_graph(int n, std::uint32_t mask) {
    std::vector<std::pair<int, int>> edges;
    int idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++idx)
            if ((mask >> idx) & 1u)
                edges.push_back({a, b});
    return Graph::from_index_edges(n, edges);
}

// Grow each connected (n-1)-vertex graph by one vertex joined to every
// nonempty neighbourhood choice; every connected n-vertex graph has a
// non-cut vertex, so each isomorphism class is reached.
std::vector<std::uint32_t> connected_masks(int n) {
    if (n == 1)
        return {0};
    std::vector<std::uint32_t> parents = connected_masks(n - 1);
    std::set<std::uint32_t> out;
    int new_vertex = n - 1;
    for (std::uint32_t parent : parents) {
        // re-embed the parent's pair indices into the n-vertex indexing
        std::uint32_t base = 0;
        int idx = 0;
        for (int a = 0; a < n - 1; ++a)
            for (int b = a + 1; b < n - 1; ++b, ++idx)
                if ((parent >> idx) & 1u)
                    base |= 1u << pair_index(n, a, b);
        for (std::uint32_t nb = 1; nb < (1u << (n - 1)); ++nb) {
            std::uint32_t mask = base;
            for (int v = 0; v < n - 1; ++v)
                if ((nb >> v) & 1u)
                    mask |= 1u << pair_index(n, v, new_vertex);
            out.insert(canonical_mask(n, mask));
        }
    }
    return {out.begin(), out.end()};
}

} // namespace

const std::vector<Graph>& connected_graphs(int n) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<Graph> graphs;
    for (std::uint32_t mask : connected_masks(n)) {
        if (!mask_connected(n, mask))
            throw std::logic_error("generator produced a disconnected graph");
        graphs.push_back(mask_to_graph(n, mask));
    }
    return cache.emplace(n, std::move(graphs)).first->second;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    for (const auto& lab : g.labels())
        os << lab << "\n";
    for (auto [u, v] : g.edges())
        os << g.label(u) << " " << g.label(v) << "\n";
    return os.str();
}

} // namespace blockdec::testsupport
