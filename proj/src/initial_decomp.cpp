#include "blockdec/initial_decomp.hpp"

#include <algorithm>
#include <set>

namespace blockdec {

NestedSystem distinguishing_system(const Graph& g, const SystemPtr& sys,
                                   const std::vector<Profile>& profiles) {
    (void)g;  // signature kept symmetric with the convenience overload
    int k = sys->k();
    int np = static_cast<int>(profiles.size());
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> pair_min_order;
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) {
            pairs.push_back({i, j});
            int mo = min_distinguisher_order(profiles[i], profiles[j]);
            if (mo < 0)
                fail(ErrorKind::precondition, "duplicate profile in distinguishing_system");
            pair_min_order.push_back(mo);
        }

    std::set<int> chosen;  // indices into sys
    auto distinguished_by_chosen = [&](int p) {
        for (int s : chosen) {
            const auto& a = profiles[pairs[p].first].bits();
            const auto& b = profiles[pairs[p].second].bits();
            if (((a[s >> 6] ^ b[s >> 6]) >> (s & 63)) & 1u)
                return true;
        }
        return false;
    };

    for (int level = 0; level < k; ++level) {
        std::set<int> cand;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (pair_min_order[p] != level || distinguished_by_chosen(static_cast<int>(p)))
                continue;
            for (int s : efficient_distinguishers(profiles[pairs[p].first],
                                                  profiles[pairs[p].second]))
                cand.insert(s);
        }
        if (cand.empty())
            continue;
        std::vector<int> keep;
        for (int c : cand) {
            bool ok = true;
            for (int c2 : cand)
                if (!is_nested(sys->sep(c), sys->sep(c2))) { ok = false; break; }
            for (int s : chosen)
                if (ok && !is_nested(sys->sep(c), sys->sep(s))) { ok = false; break; }
            if (ok)
                keep.push_back(c);
        }
        chosen.insert(keep.begin(), keep.end());
    }

    // Exit verification: every pair efficiently distinguished by the system.
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        bool ok = false;
        for (int s : chosen)
            if (efficiently_distinguishes(sys->sep(s), profiles[pairs[p].first],
                                          profiles[pairs[p].second])) {
                ok = true;
                break;
            }
        if (!ok)
            fail(ErrorKind::incomplete_system,
                 "profiles " + std::to_string(pairs[p].first) + " and " +
                     std::to_string(pairs[p].second) + " (min distinguisher order " +
                     std::to_string(pair_min_order[p]) +
                     ") not efficiently distinguished by the nested candidates");
    }

    NestedSystem ns;
    ns.k = k;
    for (int s : chosen)
        ns.separations.push_back(sys->sep(s));
    std::sort(ns.separations.begin(), ns.separations.end());
    return ns;
}

NestedSystem distinguishing_system(const Graph& g, int k, long proper_cap) {
    SystemPtr sys = make_separation_system(g, k, proper_cap);
    return distinguishing_system(g, sys, enumerate_profiles(sys, true));
}

namespace {

// Consistent orientations of a small separation list, as choice bit vectors
// (bit i set = reversed representative), in increasing DFS order.
void consistent_orientations(const std::vector<Separation>& seps, std::size_t next,
                             std::vector<int>& choice, std::vector<std::uint64_t>& bits,
                             std::vector<std::vector<std::uint64_t>>& out) {
    if (next == seps.size()) {
        out.push_back(bits);
        return;
    }
    for (int orient = 0; orient < 2; ++orient) {
        OrientedSeparation cur =
            orient ? seps[next].rep.reverse() : seps[next].rep;
        bool ok = true;
        for (std::size_t j = 0; j < next && ok; ++j) {
            OrientedSeparation prev = choice[j] ? seps[j].rep.reverse() : seps[j].rep;
            if (le(prev.reverse(), cur) || le(cur.reverse(), prev))
                ok = false;
        }
        if (!ok)
            continue;
        choice[next] = orient;
        if (orient)
            bits[next >> 6] |= 1ull << (next & 63);
        consistent_orientations(seps, next + 1, choice, bits, out);
        if (orient)
            bits[next >> 6] &= ~(1ull << (next & 63));
    }
}

} // namespace

TreeDecomposition tree_from_nested(const Graph& g, const NestedSystem& ns) {
    const auto& seps = ns.separations;
    for (std::size_t i = 0; i < seps.size(); ++i) {
        if (!is_proper(g, seps[i]) || seps[i].order() >= ns.k)
            fail(ErrorKind::precondition, "nested system element improper or of order >= k");
        for (std::size_t j = i + 1; j < seps.size(); ++j)
            if (!is_nested(seps[i], seps[j]))
                fail(ErrorKind::precondition, "system elements cross: " +
                                                  vset_to_string(g, seps[i].separator()) +
                                                  " vs " +
                                                  vset_to_string(g, seps[j].separator()));
    }

    std::vector<std::vector<std::uint64_t>> orientations;
    std::vector<int> choice(seps.size(), 0);
    std::vector<std::uint64_t> bits((seps.size() + 64) / 64, 0);
    consistent_orientations(seps, 0, choice, bits, orientations);

    TreeDecomposition td;
    for (const auto& o : orientations) {
        VertexSet bag = g.all();
        for (std::size_t i = 0; i < seps.size(); ++i) {
            bool rev = (o[i >> 6] >> (i & 63)) & 1u;
            bag &= rev ? seps[i].rep.small : seps[i].rep.big;
        }
        td.bags.push_back(bag);
    }
    for (std::size_t a = 0; a < orientations.size(); ++a)
        for (std::size_t b = a + 1; b < orientations.size(); ++b) {
            int diff = 0;
            for (std::size_t w = 0; w < orientations[a].size(); ++w)
                diff += std::popcount(orientations[a][w] ^ orientations[b][w]);
            if (diff == 1)
                td.edges.push_back({static_cast<int>(a), static_cast<int>(b)});
        }

    ValidationReport report = validate(g, td);
    if (!report.ok())
        fail(ErrorKind::internal, "tree_from_nested built an invalid decomposition: " +
                                      report.to_string());
    std::vector<Separation> want = seps;
    std::sort(want.begin(), want.end());
    if (induced_separation_set(g, td) != want)
        fail(ErrorKind::internal,
             "tree_from_nested induced separations differ from the nested system");
    return td;
}

TreeDecomposition initial_decomposition(const Graph& g, int k, long proper_cap) {
    SystemPtr sys = make_separation_system(g, k, proper_cap);
    std::vector<Profile> profiles = enumerate_profiles(sys, true);
    NestedSystem ns = distinguishing_system(g, sys, profiles);
    TreeDecomposition td = tree_from_nested(g, ns);

    if (!is_tight_td(g, td))
        fail(ErrorKind::internal, "initial decomposition not tight");
    if (adhesion(g, td) >= k)
        fail(ErrorKind::internal, "initial decomposition adhesion not below k");
    for (std::size_t i = 0; i < profiles.size(); ++i)
        for (std::size_t j = i + 1; j < profiles.size(); ++j)
            if (!td_distinguishes(g, td, profiles[i], profiles[j], true))
                fail(ErrorKind::internal, "initial decomposition misses a profile pair");
    std::vector<Block> blocks = find_k_blocks(g, k);
    for (VertexSet bag : td.bags) {
        int inside = 0;
        for (const Block& b : blocks)
            if ((b.vertices & ~bag) == 0)
                ++inside;
        if (inside > 1)
            fail(ErrorKind::internal, "initial decomposition bag holds two k-blocks");
    }
    return td;
}

} // namespace blockdec
