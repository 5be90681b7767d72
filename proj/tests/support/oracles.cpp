#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace blockdec::testsupport {

std::vector<VertexSet> oracle_components(const Graph& g, VertexSet removed) {
    int n = g.n();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (auto [u, v] : g.edges())
        if (!vset_contains(removed, u) && !vset_contains(removed, v))
            parent[find(u)] = find(v);
    std::vector<VertexSet> by_root(n, 0);
    for (int v = 0; v < n; ++v)
        if (!vset_contains(removed, v))
            by_root[find(v)] |= VertexSet{1} << v;
    std::vector<VertexSet> out;
    for (VertexSet s : by_root)
        if (s)
            out.push_back(s);
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        return vset_lowest(a) < vset_lowest(b);
    });
    return out;
}

std::vector<Block> oracle_k_blocks(const Graph& g, int k) {
    int n = g.n();
    std::vector<std::vector<char>> insep(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            auto cut = min_separator_size(g, u, v, CutStrategy::brute_force);
            insep[u][v] = insep[v][u] = (!cut || *cut >= k) ? 1 : 0;
        }
    std::vector<VertexSet> qualifying;
    for (VertexSet s = 1; s <= g.all(); ++s) {
        if (vset_size(s) < k)
            continue;
        bool ok = true;
        auto members = vset_members(s);
        for (std::size_t i = 0; i < members.size() && ok; ++i)
            for (std::size_t j = i + 1; j < members.size() && ok; ++j)
                ok = insep[members[i]][members[j]];
        if (ok)
            qualifying.push_back(s);
    }
    std::vector<Block> out;
    for (VertexSet s : qualifying) {
        bool maximal = true;
        for (VertexSet t : qualifying)
            if (t != s && (s & ~t) == 0) { maximal = false; break; }
        if (maximal)
            out.push_back(Block{s, k});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool oracle_consistent_pair(const OrientedSeparation& u, const OrientedSeparation& v) {
    if (Separation{canonical_orientation(u)} == Separation{canonical_orientation(v)})
        return true;
    return !le(u.reverse(), v) && !le(v.reverse(), u);
}

void oracle_search(const SeparationSystem& sys, bool regular_only, std::size_t next,
                   std::vector<OrientedSeparation>& chosen, std::vector<std::uint64_t>& bits,
                   std::vector<std::vector<std::uint64_t>>& out) {
    int m = sys.size();
    if (next == static_cast<std::size_t>(m)) {
        // full profile-property check: for every ordered pair, the paper's
        // corner (B cap D, A cup C) must not be chosen
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                OrientedSeparation forbidden = corner(chosen[i], chosen[j]).reverse();
                for (int l = 0; l < m; ++l)
                    if (chosen[l] == forbidden)
                        return;
            }
        out.push_back(bits);
        return;
    }
    for (int orient = 0; orient < 2; ++orient) {
        OrientedSeparation cand = orient ? sys.rep(next).reverse() : sys.rep(next);
        if (orient == 1 && cand == sys.rep(next))
            continue;  // (V,V) has a single orientation
        if (regular_only && cand.small == sys.all())
            continue;
        bool ok = true;
        for (std::size_t j = 0; j < next && ok; ++j)
            ok = oracle_consistent_pair(chosen[j], cand);
        if (!ok)
            continue;
        chosen[next] = cand;
        if (orient)
            bits[next >> 6] |= 1ull << (next & 63);
        oracle_search(sys, regular_only, next + 1, chosen, bits, out);
        if (orient)
            bits[next >> 6] &= ~(1ull << (next & 63));
    }
}

} // namespace

std::vector<Profile> oracle_profiles(const SystemPtr& sys, bool regular_only) {
    std::vector<OrientedSeparation> chosen(sys->size());
    std::vector<std::uint64_t> bits((sys->size() + 64) / 64, 0);
    std::vector<std::vector<std::uint64_t>> raw;
    oracle_search(*sys, regular_only, 0, chosen, bits, raw);
    std::sort(raw.begin(), raw.end());
    std::vector<Profile> out;
    for (auto& b : raw) {
        b.resize((sys->size() + 63) / 64 ? (sys->size() + 63) / 64 : 1);
        out.emplace_back(sys, b);
    }
    return out;
}

} // namespace blockdec::testsupport
