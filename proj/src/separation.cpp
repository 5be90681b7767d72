#include "blockdec/separation.hpp"

#include <algorithm>

namespace blockdec {

bool is_separation(const Graph& g, VertexSet a, VertexSet b) {
    if ((a | b) != g.all())
        return false;
    VertexSet sa = a & ~b, sb = b & ~a;
    for (VertexSet m = sa; m; m &= m - 1)
        if (g.adj(std::countr_zero(m)) & sb)
            return false;
    return true;
}

OrientedSeparation make_separation(const Graph& g, VertexSet small, VertexSet big) {
    if (!is_separation(g, small, big))
        fail(ErrorKind::input, "not a separation: sides " + vset_to_string(g, small) + " / " +
                                   vset_to_string(g, big));
    return {small, big};
}

OrientedSeparation canonical_orientation(const OrientedSeparation& s) {
    VertexSet outside = (s.small | s.big) & ~s.separator();
    if (outside == 0)
        return s;  // only (V,V); both orientations coincide
    int v = std::countr_zero(outside);
    return vset_contains(s.small, v) ? s : s.reverse();
}

bool is_tight(const Graph& g, const Separation& s) {
    VertexSet sep = s.separator();
    VertexSet side_a = s.rep.small & ~sep, side_b = s.rep.big & ~sep;
    bool a_ok = false, b_ok = false;
    for (VertexSet c : components(g, sep)) {
        if (neighbourhood(g, c) != sep)
            continue;
        if ((c & side_a) == c) a_ok = true;
        if ((c & side_b) == c) b_ok = true;
    }
    return a_ok && b_ok;
}

bool is_nested(const Separation& s, const Separation& t) {
    const OrientedSeparation &a = s.rep, &b = t.rep;
    return le(a, b) || le(a, b.reverse()) || le(a.reverse(), b) || le(a.reverse(), b.reverse());
}

Star make_star(const Graph& g, std::vector<OrientedSeparation> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (const auto& e : elements) {
        if (e.small == g.all() && e.big == g.all())
            fail(ErrorKind::degenerate_separation, "star may not contain (V,V)");
        if (!is_separation(g, e.small, e.big))
            fail(ErrorKind::precondition,
                 "star element is not a separation: " + vset_to_string(g, e.small) + " / " +
                     vset_to_string(g, e.big));
    }
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j < elements.size(); ++j)
            if (i != j && !le(elements[i], elements[j].reverse()))
                fail(ErrorKind::precondition,
                     "not a star: " + vset_to_string(g, elements[i].small) + "|" +
                         vset_to_string(g, elements[i].big) + " vs " +
                         vset_to_string(g, elements[j].small) + "|" +
                         vset_to_string(g, elements[j].big));
    return Star{std::move(elements)};
}

VertexSet interior(const Graph& g, const Star& st) {
    VertexSet res = g.all();
    for (const auto& e : st.elements)
        res &= e.big;
    return res;
}

bool star_le(const Star& st1, const Star& st2) {
    for (const auto& e1 : st1.elements) {
        bool found = false;
        for (const auto& e2 : st2.elements)
            if (le(e1, e2)) { found = true; break; }
        if (!found)
            return false;
    }
    return true;
}

Star permute_star(const Graph& g, const std::vector<int>& perm, const Star& st) {
    std::vector<OrientedSeparation> elems;
    elems.reserve(st.elements.size());
    for (const auto& e : st.elements)
        elems.push_back({permute_vset(perm, e.small), permute_vset(perm, e.big)});
    return make_star(g, std::move(elems));
}

namespace {

// Calls fn(subset) for every subset of [0,n) of the given size.
template <typename Fn>
void for_each_subset_of_size(int n, int size, Fn&& fn) {
    if (size == 0) {
        fn(VertexSet{0});
        return;
    }
    if (size > n)
        return;
    std::vector<int> pos(size);
    for (int i = 0; i < size; ++i)
        pos[i] = i;
    for (;;) {
        VertexSet s = 0;
        for (int p : pos)
            s |= VertexSet{1} << p;
        fn(s);
        int i = size - 1;
        while (i >= 0 && pos[i] == n - size + i)
            --i;
        if (i < 0)
            break;
        ++pos[i];
        for (int j = i + 1; j < size; ++j)
            pos[j] = pos[j - 1] + 1;
    }
}

} // namespace

std::vector<Separation> enumerate_separations(const Graph& g, int k, long proper_cap) {
    std::vector<Separation> out;
    long proper_count = 0;
    int max_size = std::min(k - 1, g.n());
    for (int size = 0; size <= max_size; ++size) {
        for_each_subset_of_size(g.n(), size, [&](VertexSet sep) {
            std::vector<VertexSet> comps = components(g, sep);
            int c = static_cast<int>(comps.size());
            if (c == 0) {
                if (sep == g.all())
                    out.push_back(Separation{{g.all(), g.all()}});
                return;
            }
            // Component 0 stays on the B side: each unordered pair once, and
            // the separator of (A,B) is exactly `sep`.
            VertexSet rest_union = 0;
            for (int i = 1; i < c; ++i)
                rest_union |= comps[i];
            for (VertexSet assign = 0;; ++assign) {
                VertexSet a_comps = 0;
                for (int i = 1; i < c; ++i)
                    if (vset_contains(assign, i - 1))
                        a_comps |= comps[i];
                OrientedSeparation s{sep | a_comps, sep | comps[0] | (rest_union & ~a_comps)};
                if (s.small != g.all() && s.big != g.all()) {
                    ++proper_count;
                    if (proper_cap >= 0 && proper_count > proper_cap)
                        fail(ErrorKind::bound_exceeded,
                             "more than " + std::to_string(proper_cap) +
                                 " proper separations of order < " + std::to_string(k));
                }
                out.push_back(Separation{canonical_orientation(s)});
                if (c == 1 || assign == (VertexSet{1} << (c - 1)) - 1)
                    break;
            }
        });
    }
    std::sort(out.begin(), out.end(), [](const Separation& a, const Separation& b) {
        if (a.order() != b.order())
            return a.order() < b.order();
        return a.rep < b.rep;
    });
    return out;
}

} // namespace blockdec
