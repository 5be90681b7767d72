#include "blockdec/treedec.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace blockdec {

std::string ValidationReport::to_string() const {
    if (violations.empty())
        return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i].code << ' ' << violations[i].detail;
    }
    return os.str();
}

namespace {

std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& td) {
    std::vector<std::vector<int>> adj(td.node_count());
    for (auto [u, v] : td.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

bool tree_structure_ok(const TreeDecomposition& td, ValidationReport& report) {
    int m = td.node_count();
    if (m == 0) {
        report.violations.push_back({"tree-empty", ""});
        return false;
    }
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : td.edges) {
        if (u < 0 || v < 0 || u >= m || v >= m) {
            report.violations.push_back(
                {"edge-bad-node", std::to_string(u) + "-" + std::to_string(v)});
            return false;
        }
        if (u == v) {
            report.violations.push_back({"edge-self", std::to_string(u)});
            return false;
        }
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
            report.violations.push_back(
                {"edge-duplicate", std::to_string(u) + "-" + std::to_string(v)});
            return false;
        }
    }
    auto adj = tree_adjacency(td);
    std::vector<char> vis(m, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!vis[w]) {
                vis[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    if (cnt != m) {
        report.violations.push_back({"tree-disconnected", std::to_string(m - cnt) + " nodes"});
        return false;
    }
    if (static_cast<int>(td.edges.size()) != m - 1) {
        report.violations.push_back({"tree-cyclic", std::to_string(td.edges.size()) + " edges"});
        return false;
    }
    return true;
}

} // namespace

ValidationReport validate(const Graph& g, const TreeDecomposition& td) {
    ValidationReport report;
    if (!tree_structure_ok(td, report))
        return report;

    VertexSet covered = 0;
    for (VertexSet bag : td.bags)
        covered |= bag;
    for (VertexSet missing = g.all() & ~covered; missing; missing &= missing - 1)
        report.violations.push_back({"vertex-uncovered", g.label(std::countr_zero(missing))});

    for (auto [u, v] : g.edges()) {
        VertexSet pair = (VertexSet{1} << u) | (VertexSet{1} << v);
        bool found = false;
        for (VertexSet bag : td.bags)
            if ((pair & ~bag) == 0) { found = true; break; }
        if (!found)
            report.violations.push_back({"edge-uncovered", vset_to_string(g, pair)});
    }

    auto adj = tree_adjacency(td);
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> holding;
        for (int t = 0; t < td.node_count(); ++t)
            if (vset_contains(td.bags[t], v))
                holding.push_back(t);
        if (holding.empty())
            continue;  // already reported as uncovered
        std::set<int> want(holding.begin(), holding.end());
        std::vector<int> stack{holding[0]};
        std::set<int> seen{holding[0]};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int w : adj[t])
                if (want.count(w) && !seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
        if (seen.size() != want.size())
            report.violations.push_back({"trace-disconnected", g.label(v)});
    }

    for (auto [u, v] : td.edges) {
        OrientedSeparation s = induced_separation(g, td, u, v);
        if (!is_separation(g, s.small, s.big))
            report.violations.push_back(
                {"separation-invalid", std::to_string(u) + "-" + std::to_string(v)});
    }
    return report;
}

std::vector<int> tree_side(const TreeDecomposition& td, int a, int b) {
    auto adj = tree_adjacency(td);
    std::vector<char> vis(td.node_count(), 0);
    std::vector<int> stack{a}, side;
    vis[a] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        side.push_back(v);
        for (int w : adj[v]) {
            if (v == a && w == b)
                continue;
            if (!vis[w]) {
                vis[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(side.begin(), side.end());
    return side;
}

OrientedSeparation induced_separation(const Graph& g, const TreeDecomposition& td, int from,
                                      int to) {
    (void)g;
    bool found = false;
    for (auto [u, v] : td.edges)
        if ((u == from && v == to) || (u == to && v == from)) { found = true; break; }
    if (!found)
        fail(ErrorKind::not_an_edge,
             "no tree edge " + std::to_string(from) + "-" + std::to_string(to));
    VertexSet u_from = 0, u_to = 0;
    for (int t : tree_side(td, from, to))
        u_from |= td.bags[t];
    for (int t : tree_side(td, to, from))
        u_to |= td.bags[t];
    return {u_from, u_to};
}

Star node_star(const Graph& g, const TreeDecomposition& td, int t) {
    if (t < 0 || t >= td.node_count())
        fail(ErrorKind::precondition, "no tree node " + std::to_string(t));
    std::vector<OrientedSeparation> elems;
    for (auto [u, v] : td.edges) {
        if (u != t && v != t)
            continue;
        int other = u == t ? v : u;
        OrientedSeparation s = induced_separation(g, td, other, t);
        if (s.small == g.all() && s.big == g.all())
            fail(ErrorKind::degenerate_separation,
                 "edge " + std::to_string(other) + "-" + std::to_string(t) +
                     " induces (V,V); decomposition unusable for refinement");
        elems.push_back(s);
    }
    Star st = make_star(g, std::move(elems));
    if (interior(g, st) != td.bags[t])
        fail(ErrorKind::internal, "node star interior differs from bag at node " +
                                      std::to_string(t));
    return st;
}

int adhesion(const Graph& g, const TreeDecomposition& td) {
    int best = 0;
    for (auto [u, v] : td.edges)
        best = std::max(best, vset_size(td.bags[u] & td.bags[v]));
    (void)g;
    return best;
}

bool is_tight_td(const Graph& g, const TreeDecomposition& td) {
    for (auto [u, v] : td.edges)
        if (!is_tight(g, induced_separation(g, td, u, v)))
            return false;
    return true;
}

bool td_distinguishes(const Graph& g, const TreeDecomposition& td, const Profile& p1,
                      const Profile& p2, bool efficiently) {
    for (auto [u, v] : td.edges) {
        Separation s = unoriented(induced_separation(g, td, u, v));
        if (efficiently ? efficiently_distinguishes(s, p1, p2) : distinguishes(s, p1, p2))
            return true;
    }
    return false;
}

std::vector<Separation> induced_separation_set(const Graph& g, const TreeDecomposition& td) {
    std::vector<Separation> out;
    for (auto [u, v] : td.edges)
        out.push_back(unoriented(induced_separation(g, td, u, v)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool refines(const Graph& g, const TreeDecomposition& fine, const TreeDecomposition& coarse) {
    std::vector<Separation> fs = induced_separation_set(g, fine);
    for (const Separation& s : induced_separation_set(g, coarse))
        if (!std::binary_search(fs.begin(), fs.end(), s))
            return false;
    return true;
}

TreeDecomposition permute_bags(const std::vector<int>& perm, const TreeDecomposition& td) {
    TreeDecomposition out = td;
    for (VertexSet& bag : out.bags)
        bag = permute_vset(perm, bag);
    return out;
}

namespace {

bool extend_iso(const TreeDecomposition& a, const TreeDecomposition& b,
                const std::vector<std::vector<int>>& adj_a,
                const std::vector<std::vector<int>>& adj_b, std::vector<int>& map_ab,
                std::vector<char>& used_b, int next) {
    int m = a.node_count();
    if (next == m)
        return true;
    for (int cand = 0; cand < m; ++cand) {
        if (used_b[cand] || a.bags[next] != b.bags[cand])
            continue;
        bool ok = true;
        for (int nb : adj_a[next]) {
            if (nb >= next)
                continue;
            bool edge_in_b = false;
            for (int x : adj_b[cand])
                if (x == map_ab[nb]) { edge_in_b = true; break; }
            if (!edge_in_b) { ok = false; break; }
        }
        if (!ok)
            continue;
        map_ab[next] = cand;
        used_b[cand] = 1;
        if (extend_iso(a, b, adj_a, adj_b, map_ab, used_b, next + 1))
            return true;
        used_b[cand] = 0;
        map_ab[next] = -1;
    }
    return false;
}

} // namespace

bool tree_isomorphic_with_bags(const TreeDecomposition& a, const TreeDecomposition& b) {
    if (a.node_count() != b.node_count() || a.edges.size() != b.edges.size())
        return false;
    auto bags_a = a.bags, bags_b = b.bags;
    std::sort(bags_a.begin(), bags_a.end());
    std::sort(bags_b.begin(), bags_b.end());
    if (bags_a != bags_b)
        return false;
    // Each edge {u,v} of `a` is checked once max(u,v) is placed, so a
    // completed injective map preserves all edges; with equal edge counts
    // that is a tree isomorphism.
    auto adj_a = tree_adjacency(a), adj_b = tree_adjacency(b);
    std::vector<int> map_ab(a.node_count(), -1);
    std::vector<char> used_b(b.node_count(), 0);
    return extend_iso(a, b, adj_a, adj_b, map_ab, used_b, 0);
}

bool check_canonical(const Graph& g,
                     const std::function<TreeDecomposition(const Graph&)>& construct,
                     int aut_cap) {
    TreeDecomposition td = construct(g);
    for (const auto& perm : automorphisms(g, aut_cap))
        if (!tree_isomorphic_with_bags(permute_bags(perm, td), td))
            return false;
    return true;
}

} // namespace blockdec
