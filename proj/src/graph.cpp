#include "blockdec/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace blockdec {

std::vector<int> vset_members(VertexSet s) {
    std::vector<int> out;
    for (VertexSet m = s; m; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

Graph Graph::from_edge_list(const std::vector<std::string>& isolated,
                            const std::vector<std::pair<std::string, std::string>>& edges) {
    std::set<std::string> labels(isolated.begin(), isolated.end());
    for (const auto& [a, b] : edges) {
        if (a == b)
            fail(ErrorKind::input, "self-loop at vertex '" + a + "'");
        labels.insert(a);
        labels.insert(b);
    }
    if (labels.empty())
        fail(ErrorKind::input, "graph must have at least one vertex");
    if (labels.size() > 64)
        fail(ErrorKind::bound_exceeded,
             "graph has " + std::to_string(labels.size()) + " vertices; at most 64 supported");

    Graph g;
    g.labels_.assign(labels.begin(), labels.end());
    std::map<std::string, int> idx;
    for (int i = 0; i < g.n(); ++i)
        idx[g.labels_[i]] = i;

    g.adj_.assign(g.n(), 0);
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        int u = idx[a], v = idx[b];
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            continue;  // duplicate edges collapse
        g.adj_[u] |= VertexSet{1} << v;
        g.adj_[v] |= VertexSet{1} << u;
    }
    g.edges_.assign(seen.begin(), seen.end());
    g.all_ = g.n() == 64 ? ~VertexSet{0} : (VertexSet{1} << g.n()) - 1;
    return g;
}

Graph Graph::from_index_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> isolated;
    isolated.reserve(n);
    for (int i = 0; i < n; ++i)
        isolated.push_back(std::to_string(i));
    std::vector<std::pair<std::string, std::string>> named;
    named.reserve(edges.size());
    for (auto [u, v] : edges)
        named.emplace_back(std::to_string(u), std::to_string(v));
    return from_edge_list(isolated, named);
}

int Graph::index_of(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        fail(ErrorKind::input, "unknown vertex label '" + label + "'");
    return static_cast<int>(it - labels_.begin());
}

std::vector<std::string> vset_labels(const Graph& g, VertexSet s) {
    std::vector<std::string> out;
    for (VertexSet m = s; m; m &= m - 1)
        out.push_back(g.label(std::countr_zero(m)));
    return out;
}

VertexSet vset_from_labels(const Graph& g, const std::vector<std::string>& labels) {
    VertexSet s = 0;
    for (const auto& l : labels)
        s |= VertexSet{1} << g.index_of(l);
    return s;
}

std::string vset_to_string(const Graph& g, VertexSet s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (VertexSet m = s; m; m &= m - 1) {
        if (!first) os << ',';
        os << g.label(std::countr_zero(m));
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<VertexSet> components(const Graph& g, VertexSet removed) {
    std::vector<VertexSet> out;
    VertexSet left = g.all() & ~removed;
    while (left) {
        VertexSet comp = VertexSet{1} << std::countr_zero(left);
        for (;;) {
            VertexSet grown = comp;
            for (VertexSet m = comp; m; m &= m - 1)
                grown |= g.adj(std::countr_zero(m));
            grown &= ~removed;
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;  // ascending lowest member by construction
}

VertexSet neighbourhood(const Graph& g, VertexSet s) {
    VertexSet nb = 0;
    for (VertexSet m = s; m; m &= m - 1)
        nb |= g.adj(std::countr_zero(m));
    return nb & ~s;
}

bool is_connected(const Graph& g) {
    return components(g, 0).size() <= 1;
}

namespace {

void search_automorphisms(const Graph& g, std::vector<int>& perm, VertexSet used, int next,
                          std::vector<std::vector<int>>& out) {
    int n = g.n();
    if (next == n) {
        out.push_back(perm);
        return;
    }
    for (int cand = 0; cand < n; ++cand) {
        if (vset_contains(used, cand) || g.degree(cand) != g.degree(next))
            continue;
        bool ok = true;
        for (int u = 0; u < next && ok; ++u)
            ok = g.adjacent(u, next) == g.adjacent(perm[u], cand);
        if (!ok)
            continue;
        perm[next] = cand;
        search_automorphisms(g, perm, used | (VertexSet{1} << cand), next + 1, out);
    }
}

} // namespace

std::vector<std::vector<int>> automorphisms(const Graph& g, int cap) {
    if (g.n() > cap)
        fail(ErrorKind::bound_exceeded,
             "automorphism search capped at " + std::to_string(cap) + " vertices, graph has " +
                 std::to_string(g.n()));
    std::vector<std::vector<int>> out;
    std::vector<int> perm(g.n(), -1);
    search_automorphisms(g, perm, 0, 0, out);
    return out;  // lexicographic by image vector; identity first
}

VertexSet permute_vset(const std::vector<int>& perm, VertexSet s) {
    VertexSet out = 0;
    for (VertexSet m = s; m; m &= m - 1)
        out |= VertexSet{1} << perm[std::countr_zero(m)];
    return out;
}

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::parse: return "parse";
        case ErrorKind::input: return "input";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::not_an_edge: return "not-an-edge";
        case ErrorKind::degenerate_separation: return "degenerate-separation";
        case ErrorKind::block_collision: return "block-collision";
        case ErrorKind::no_gluing_leaf: return "no-gluing-leaf";
        case ErrorKind::bound_exceeded: return "bound-exceeded";
        case ErrorKind::incomplete_system: return "incomplete-system";
        case ErrorKind::internal: return "internal";
    }
    return "internal";
}

} // namespace blockdec
