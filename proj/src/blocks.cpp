#include "blockdec/blocks.hpp"

#include <algorithm>
#include <queue>

namespace blockdec {

namespace {

bool separated(const Graph& g, int u, int v, VertexSet removed) {
    VertexSet reach = VertexSet{1} << u;
    for (;;) {
        VertexSet grown = reach;
        for (VertexSet m = reach; m; m &= m - 1)
            grown |= g.adj(std::countr_zero(m));
        grown &= ~removed;
        if (grown == reach) break;
        reach = grown;
    }
    return !vset_contains(reach, v);
}

std::optional<int> min_separator_brute(const Graph& g, int u, int v) {
    VertexSet pool = g.all() & ~(VertexSet{1} << u) & ~(VertexSet{1} << v);
    std::vector<int> verts = vset_members(pool);
    int m = static_cast<int>(verts.size());
    for (int size = 0; size <= m; ++size) {
        // subsets of `pool` of the given size via position vectors
        std::vector<int> pos(size);
        for (int i = 0; i < size; ++i) pos[i] = i;
        for (;;) {
            VertexSet s = 0;
            for (int p : pos) s |= VertexSet{1} << verts[p];
            if (separated(g, u, v, s))
                return size;
            int i = size - 1;
            while (i >= 0 && pos[i] == m - size + i) --i;
            if (i < 0)
                break;
            ++pos[i];
            for (int j = i + 1; j < size; ++j) pos[j] = pos[j - 1] + 1;
        }
    }
    return std::nullopt;  // unreachable for non-adjacent u,v: removing all others separates
}

// Dinic on the standard vertex-split network: w_in -> w_out with capacity 1
// for w outside {u,v}; arcs of capacity n for edges. Max flow = min vertex cut
// (Menger).
struct Dinic {
    struct Arc { int to, cap, rev; };
    std::vector<std::vector<Arc>> adj;
    std::vector<int> level, iter;

    explicit Dinic(int n) : adj(n) {}

    void add_arc(int from, int to, int cap) {
        adj[from].push_back({to, cap, static_cast<int>(adj[to].size())});
        adj[to].push_back({from, 0, static_cast<int>(adj[from].size()) - 1});
    }

    bool bfs(int s, int t) {
        level.assign(adj.size(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front(); q.pop();
            for (const Arc& a : adj[v])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    q.push(a.to);
                }
        }
        return level[t] >= 0;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(adj[v].size()); ++i) {
            Arc& a = adj[v][i];
            if (a.cap > 0 && level[v] < level[a.to]) {
                int d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    adj[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    int max_flow(int s, int t) {
        int flow = 0;
        while (bfs(s, t)) {
            iter.assign(adj.size(), 0);
            int f;
            while ((f = dfs(s, t, 1 << 28)) > 0)
                flow += f;
        }
        return flow;
    }
};

std::optional<int> min_separator_flow(const Graph& g, int u, int v) {
    int n = g.n();
    // node 2w = w_in, 2w+1 = w_out
    Dinic net(2 * n);
    for (int w = 0; w < n; ++w)
        net.add_arc(2 * w, 2 * w + 1, (w == u || w == v) ? n : 1);
    for (auto [a, b] : g.edges()) {
        net.add_arc(2 * a + 1, 2 * b, n);
        net.add_arc(2 * b + 1, 2 * a, n);
    }
    int flow = net.max_flow(2 * u + 1, 2 * v);
    return flow;
}

} // namespace

std::optional<int> min_separator_size(const Graph& g, int u, int v, CutStrategy strategy) {
    if (u == v)
        fail(ErrorKind::precondition, "min_separator_size needs two distinct vertices");
    if (g.adjacent(u, v))
        return std::nullopt;
    switch (strategy) {
        case CutStrategy::brute_force: return min_separator_brute(g, u, v);
        case CutStrategy::max_flow: return min_separator_flow(g, u, v);
        case CutStrategy::automatic:
            return g.n() <= 12 ? min_separator_brute(g, u, v) : min_separator_flow(g, u, v);
    }
    return std::nullopt;
}

namespace {

// Bron-Kerbosch with pivoting over the inseparability relation.
void bron_kerbosch(const std::vector<VertexSet>& rel, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    VertexSet px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    for (VertexSet m = px; m; m &= m - 1) {
        int cand = std::countr_zero(m);
        int cnt = vset_size(p & rel[cand]);
        if (cnt > best) { best = cnt; pivot = cand; }
    }
    for (VertexSet m = p & ~rel[pivot]; m; m &= m - 1) {
        int v = std::countr_zero(m);
        VertexSet vb = VertexSet{1} << v;
        bron_kerbosch(rel, r | vb, p & rel[v], x & rel[v], out);
        p &= ~vb;
        x |= vb;
    }
}

} // namespace

std::vector<Block> find_k_blocks(const Graph& g, int k, CutStrategy strategy) {
    if (k < 1)
        fail(ErrorKind::precondition, "k must be at least 1");
    int n = g.n();
    std::vector<VertexSet> rel(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            auto cut = min_separator_size(g, u, v, strategy);
            if (!cut || *cut >= k) {
                rel[u] |= VertexSet{1} << v;
                rel[v] |= VertexSet{1} << u;
            }
        }
    std::vector<VertexSet> cliques;
    bron_kerbosch(rel, 0, g.all(), 0, cliques);
    std::vector<Block> blocks;
    for (VertexSet c : cliques)
        if (vset_size(c) >= k)
            blocks.push_back(Block{c, k});
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

bool is_separable_block(const Graph& g, const Block& b) {
    for (VertexSet c : components(g, b.vertices))
        if (vset_size(neighbourhood(g, c)) >= b.k)
            return false;
    return true;
}

} // namespace blockdec
