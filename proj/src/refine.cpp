#include "blockdec/refine.hpp"

#include <algorithm>
#include <optional>

namespace blockdec {

namespace {

void check_sigma(const Graph& g, const Block& b, const Star& sigma) {
    if (b.vertices == 0)
        fail(ErrorKind::precondition, "empty block");
    if ((b.vertices & ~interior(g, sigma)) != 0)
        fail(ErrorKind::precondition,
             "block " + vset_to_string(g, b.vertices) + " not inside interior " +
                 vset_to_string(g, interior(g, sigma)));
    for (const auto& e : sigma.elements)
        if (!is_tight(g, e))
            fail(ErrorKind::precondition,
                 "sigma element not tight: " + vset_to_string(g, e.small) + " / " +
                     vset_to_string(g, e.big));
}

} // namespace

std::vector<VertexSet> eligible_components(const Graph& g, const Block& b, const Star& sigma) {
    check_sigma(g, b, sigma);
    std::vector<VertexSet> out;
    for (VertexSet c : components(g, b.vertices)) {
        bool ok = true;
        for (const auto& e : sigma.elements)
            if ((c & e.big) == 0) { ok = false; break; }
        if (ok)
            out.push_back(c);
    }
    return out;
}

OrientedSeparation component_separation(const Graph& g, const Block& b, const Star& sigma,
                                        VertexSet c) {
    std::vector<VertexSet> eligible = eligible_components(g, b, sigma);
    if (std::find(eligible.begin(), eligible.end(), c) == eligible.end())
        fail(ErrorKind::precondition,
             "component " + vset_to_string(g, c) + " not eligible for block " +
                 vset_to_string(g, b.vertices));

    VertexSet small_sides = 0;  // strict small sides of the sigma elements meeting C
    for (const auto& e : sigma.elements)
        if (e.small & c)
            small_sides |= e.small & ~e.big;
    VertexSet nc = neighbourhood(g, c);
    OrientedSeparation xy{c | nc | small_sides, g.all() & ~(c | small_sides)};

    if (xy.separator() != nc)
        fail(ErrorKind::precondition,
             "component separation separator " + vset_to_string(g, xy.separator()) +
                 " differs from N(C) = " + vset_to_string(g, nc) +
                 " (sigma not tight or b not a block)");
    if (!is_separation(g, xy.small, xy.big))
        fail(ErrorKind::precondition,
             "component separation invalid for C = " + vset_to_string(g, c));
    if (xy.order() >= b.k)
        fail(ErrorKind::precondition,
             "component " + vset_to_string(g, c) + " has neighbourhood of size " +
                 std::to_string(xy.order()) + " >= k = " + std::to_string(b.k) +
                 " (block not separable)");
    return xy;
}

BlockStarResult block_star(const Graph& g, const Block& b, const Star& sigma) {
    make_star(g, sigma.elements);  // re-validate the star conditions
    check_sigma(g, b, sigma);
    if (b.size() < b.k)
        fail(ErrorKind::precondition, "block has fewer than k vertices");
    if (!is_separable_block(g, b))
        fail(ErrorKind::precondition,
             "block " + vset_to_string(g, b.vertices) + " is not separable");

    BlockStarResult res;
    std::vector<OrientedSeparation> elems;
    for (VertexSet c : eligible_components(g, b, sigma)) {
        OrientedSeparation xy = component_separation(g, b, sigma, c);
        res.per_component.push_back({c, xy});
        elems.push_back(xy);
    }
    for (const auto& e : sigma.elements)
        if ((e.separator() & ~b.vertices) == 0) {
            res.retained.push_back(e);
            elems.push_back(e);
        }
    res.rho = make_star(g, std::move(elems));

    if (!star_le(sigma, res.rho))
        fail(ErrorKind::precondition, "sigma does not lie below rho");
    if (interior(g, res.rho) != b.vertices)
        fail(ErrorKind::precondition,
             "interior of rho is " + vset_to_string(g, interior(g, res.rho)) +
                 ", expected the block " + vset_to_string(g, b.vertices));
    for (const auto& e : res.rho.elements)
        if (e.order() >= b.k)
            fail(ErrorKind::precondition, "rho element of order >= k");
    return res;
}

namespace {

// Tree-decomposition conditions for a star fragment against the part G[part].
void check_fragment(const Graph& g, VertexSet part, const StarFragment& sf) {
    VertexSet covered = 0;
    for (VertexSet bag : sf.frag.bags)
        covered |= bag;
    if (covered != part)
        fail(ErrorKind::internal, "fragment bags cover " + vset_to_string(g, covered) +
                                      " instead of the part " + vset_to_string(g, part));
    for (auto [u, v] : g.edges()) {
        VertexSet pair = (VertexSet{1} << u) | (VertexSet{1} << v);
        if ((pair & ~part) != 0)
            continue;
        bool found = false;
        for (VertexSet bag : sf.frag.bags)
            if ((pair & ~bag) == 0) { found = true; break; }
        if (!found)
            fail(ErrorKind::internal,
                 "fragment misses the part edge " + vset_to_string(g, pair));
    }
    for (int v = 0; v < g.n(); ++v) {
        if (!vset_contains(part, v))
            continue;
        int leaves = 0;
        for (std::size_t i = 1; i < sf.frag.bags.size(); ++i)
            if (vset_contains(sf.frag.bags[i], v))
                ++leaves;
        if (leaves > 1 && !vset_contains(sf.frag.bags[0], v))
            fail(ErrorKind::internal, "fragment trace of " + g.label(v) + " disconnected");
    }
}

} // namespace

StarFragment star_decomposition(const Graph& g, const TreeDecomposition& td, int node,
                                const Block& b) {
    if (node < 0 || node >= td.node_count())
        fail(ErrorKind::precondition, "no tree node " + std::to_string(node));
    VertexSet bag = td.bags[node];
    if ((b.vertices & ~bag) != 0)
        fail(ErrorKind::precondition, "block " + vset_to_string(g, b.vertices) +
                                          " not inside bag " + vset_to_string(g, bag));
    Star sigma = node_star(g, td, node);
    BlockStarResult r = block_star(g, b, sigma);

    StarFragment sf;
    sf.frag.bags.push_back(b.vertices);
    for (const auto& e : r.rho.elements) {
        sf.frag.bags.push_back(e.small & bag);
        sf.leaf_sep.push_back(e);
        sf.frag.edges.push_back({0, static_cast<int>(sf.frag.bags.size()) - 1});
    }
    check_fragment(g, bag, sf);
    return sf;
}

namespace {

TreeDecomposition simplify_pass(const Graph& g, TreeDecomposition td,
                                const std::vector<Block>& blocks);

} // namespace

TreeDecomposition refine_td(const Graph& g, const TreeDecomposition& td,
                            const std::vector<Block>& blocks_in, const RefineOptions& opt) {
    ValidationReport report = validate(g, td);
    if (!report.ok())
        fail(ErrorKind::precondition, "input decomposition invalid: " + report.to_string());
    if (!is_tight_td(g, td))
        fail(ErrorKind::precondition, "input decomposition is not tight");

    std::vector<Block> blocks = blocks_in;
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());

    int m = td.node_count();
    std::vector<std::optional<Block>> block_at(m);
    for (const Block& b : blocks) {
        if (!is_separable_block(g, b))
            fail(ErrorKind::precondition,
                 "block " + vset_to_string(g, b.vertices) + " is not separable");
        std::vector<int> hosts;
        for (int t = 0; t < m; ++t)
            if ((b.vertices & ~td.bags[t]) == 0)
                hosts.push_back(t);
        if (hosts.empty())
            fail(ErrorKind::precondition,
                 "block " + vset_to_string(g, b.vertices) + " contained in no bag");
        if (hosts.size() > 1)
            fail(ErrorKind::precondition, "block " + vset_to_string(g, b.vertices) +
                                              " contained in " +
                                              std::to_string(hosts.size()) + " bags");
        if (block_at[hosts[0]])
            fail(ErrorKind::block_collision,
                 "blocks " + vset_to_string(g, block_at[hosts[0]]->vertices) + " and " +
                     vset_to_string(g, b.vertices) + " share the bag " +
                     vset_to_string(g, td.bags[hosts[0]]));
        block_at[hosts[0]] = b;
    }

    TreeDecomposition out;
    std::vector<int> offset(m);
    std::vector<std::optional<StarFragment>> fragment(m);
    for (int t = 0; t < m; ++t) {
        offset[t] = out.node_count();
        if (block_at[t]) {
            StarFragment sf = star_decomposition(g, td, t, *block_at[t]);
            for (VertexSet bag : sf.frag.bags)
                out.bags.push_back(bag);
            for (auto [u, v] : sf.frag.edges)
                out.edges.push_back({offset[t] + u, offset[t] + v});
            fragment[t] = std::move(sf);
        } else {
            out.bags.push_back(td.bags[t]);
        }
    }

    // Glue: each original edge attaches at the part node itself, or at the
    // unique fragment leaf whose rho element lies above the inward separation.
    std::vector<std::pair<int, int>> glue_map;  // original edge index -> out edge index
    for (std::size_t e = 0; e < td.edges.size(); ++e) {
        auto [t1, t2] = td.edges[e];
        int ends[2];
        int ts[2] = {t1, t2};
        for (int side = 0; side < 2; ++side) {
            int ti = ts[side], tother = ts[1 - side];
            if (!fragment[ti]) {
                ends[side] = offset[ti];
                continue;
            }
            OrientedSeparation inward = induced_separation(g, td, tother, ti);
            const auto& leaf_sep = fragment[ti]->leaf_sep;
            int found = -1;
            for (std::size_t i = 0; i < leaf_sep.size(); ++i) {
                if (!le(inward, leaf_sep[i]))
                    continue;
                if (found >= 0)
                    fail(ErrorKind::no_gluing_leaf,
                         "two rho elements above the separation induced by edge " +
                             std::to_string(t1) + "-" + std::to_string(t2));
                found = static_cast<int>(i);
            }
            if (found < 0)
                fail(ErrorKind::no_gluing_leaf,
                     "no rho element above the separation induced by edge " +
                         std::to_string(t1) + "-" + std::to_string(t2));
            ends[side] = offset[ti] + 1 + found;
        }
        glue_map.push_back({ends[0], ends[1]});
        out.edges.push_back({std::min(ends[0], ends[1]), std::max(ends[0], ends[1])});
    }

    // Verified postconditions.
    ValidationReport out_report = validate(g, out);
    if (!out_report.ok())
        fail(ErrorKind::internal, "refined decomposition invalid: " + out_report.to_string());
    if (!refines(g, out, td))
        fail(ErrorKind::internal, "refined decomposition does not refine its input");
    for (const Block& b : blocks) {
        int count = 0;
        for (VertexSet bag : out.bags)
            if (bag == b.vertices)
                ++count;
        if (count != 1)
            fail(ErrorKind::internal, "block " + vset_to_string(g, b.vertices) + " equals " +
                                          std::to_string(count) + " bags, expected 1");
    }
    for (std::size_t e = 0; e < td.edges.size(); ++e) {
        OrientedSeparation orig = induced_separation(g, td, td.edges[e].first, td.edges[e].second);
        OrientedSeparation re =
            induced_separation(g, out, glue_map[e].first, glue_map[e].second);
        if (orig != re)
            fail(ErrorKind::internal, "original edge separation changed by refinement");
    }

    if (opt.simplify) {
        out = simplify_pass(g, std::move(out), blocks);
        if (!refines(g, out, td))
            fail(ErrorKind::internal, "simplify dropped an input separation");
    }
    return out;
}

namespace {

TreeDecomposition simplify_pass(const Graph& g, TreeDecomposition td,
                                const std::vector<Block>& blocks) {
    auto is_block_bag = [&](VertexSet bag) {
        for (const Block& b : blocks)
            if (b.vertices == bag)
                return true;
        return false;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t e = 0; e < td.edges.size() && !changed; ++e) {
            auto [x, y] = td.edges[e];
            Separation se = unoriented(induced_separation(g, td, x, y));
            bool duplicate = false;
            for (std::size_t f = 0; f < td.edges.size() && !duplicate; ++f) {
                if (f == e)
                    continue;
                auto [u, v] = td.edges[f];
                if (u != x && u != y && v != x && v != y)
                    continue;
                duplicate = unoriented(induced_separation(g, td, u, v)) == se;
            }
            if (!duplicate)
                continue;
            int gone, keep;
            if ((td.bags[x] & ~td.bags[y]) == 0 && !is_block_bag(td.bags[x])) {
                gone = x; keep = y;
            } else if ((td.bags[y] & ~td.bags[x]) == 0 && !is_block_bag(td.bags[y])) {
                gone = y; keep = x;
            } else {
                continue;
            }
            // contract `gone` into `keep`
            std::vector<std::pair<int, int>> edges;
            for (std::size_t f = 0; f < td.edges.size(); ++f) {
                if (f == e)
                    continue;
                auto [u, v] = td.edges[f];
                if (u == gone) u = keep;
                if (v == gone) v = keep;
                edges.push_back({std::min(u, v), std::max(u, v)});
            }
            TreeDecomposition next;
            std::vector<int> remap(td.node_count(), -1);
            for (int t = 0; t < td.node_count(); ++t) {
                if (t == gone)
                    continue;
                remap[t] = next.node_count();
                next.bags.push_back(td.bags[t]);
            }
            for (auto [u, v] : edges)
                next.edges.push_back({std::min(remap[u], remap[v]),
                                      std::max(remap[u], remap[v])});
            std::sort(next.edges.begin(), next.edges.end());
            td = std::move(next);
            changed = true;
        }
    }
    ValidationReport report = validate(g, td);
    if (!report.ok())
        fail(ErrorKind::internal, "simplify broke the decomposition: " + report.to_string());
    for (const Block& b : blocks) {
        int count = 0;
        for (VertexSet bag : td.bags)
            if (bag == b.vertices)
                ++count;
        if (count != 1)
            fail(ErrorKind::internal, "simplify lost a block bag");
    }
    return td;
}

} // namespace

} // namespace blockdec
