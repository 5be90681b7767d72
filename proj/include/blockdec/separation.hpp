#ifndef BLOCKDEC_SEPARATION_HPP
#define BLOCKDEC_SEPARATION_HPP

#include <compare>
#include <vector>

#include "blockdec/graph.hpp"

namespace blockdec {

// One orientation (A,B) of a separation: small side A, big side B. Valid when
// the sides cover V(G) and no edge runs between A\B and B\A.
struct OrientedSeparation {
    VertexSet small = 0;
    VertexSet big = 0;

    VertexSet separator() const { return small & big; }
    int order() const { return vset_size(small & big); }
    OrientedSeparation reverse() const { return {big, small}; }

    friend bool operator==(const OrientedSeparation&, const OrientedSeparation&) = default;
    friend auto operator<=>(const OrientedSeparation&, const OrientedSeparation&) = default;
};

bool is_separation(const Graph& g, VertexSet a, VertexSet b);

// Validating constructor; throws input error on a non-separation.
OrientedSeparation make_separation(const Graph& g, VertexSet small, VertexSet big);

// (A,B) <= (C,D) iff A subset of C and B superset of D.
inline bool le(const OrientedSeparation& s, const OrientedSeparation& t) {
    return (s.small & ~t.small) == 0 && (t.big & ~s.big) == 0;
}

inline bool is_proper(const Graph& g, const OrientedSeparation& s) {
    return s.small != g.all() && s.big != g.all();
}

// The orientation whose small side holds the least label outside the
// separator; ties (no such label) keep the given sides. Improper separations
// therefore canonicalize to (V(G), S).
OrientedSeparation canonical_orientation(const OrientedSeparation& s);

// Unordered separation, stored as its canonical orientation.
struct Separation {
    OrientedSeparation rep;

    int order() const { return rep.order(); }
    VertexSet separator() const { return rep.separator(); }

    friend bool operator==(const Separation&, const Separation&) = default;
    friend auto operator<=>(const Separation&, const Separation&) = default;
};

inline Separation unoriented(const OrientedSeparation& s) {
    return Separation{canonical_orientation(s)};
}

// Both strict sides contain a component of G - (A cap B) whose whole
// neighbourhood is the separator.
bool is_tight(const Graph& g, const Separation& s);
inline bool is_tight(const Graph& g, const OrientedSeparation& s) {
    return is_tight(g, Separation{s});
}

inline bool is_proper(const Graph& g, const Separation& s) { return is_proper(g, s.rep); }

// Some orientations of s and t are comparable.
bool is_nested(const Separation& s, const Separation& t);

// (s.small cup t.small, s.big cap t.big). Callers pre-orient the inputs to
// reach all four corners of the underlying separations.
inline OrientedSeparation corner(const OrientedSeparation& s, const OrientedSeparation& t) {
    return {s.small | t.small, s.big & t.big};
}

// Star: oriented separations pairwise pointing away from each other,
// (A,B) <= (D,C) for distinct elements; (V,V) excluded. Elements are kept
// sorted and unique.
struct Star {
    std::vector<OrientedSeparation> elements;

    bool empty() const { return elements.empty(); }
    std::size_t size() const { return elements.size(); }

    friend bool operator==(const Star&, const Star&) = default;
};

// Validates the star conditions; throws degenerate_separation / precondition.
Star make_star(const Graph& g, std::vector<OrientedSeparation> elements);

// Intersection of the big sides; V(G) for the empty star.
VertexSet interior(const Graph& g, const Star& st);

// Every element of st1 lies below some element of st2.
bool star_le(const Star& st1, const Star& st2);

Star permute_star(const Graph& g, const std::vector<int>& perm, const Star& st);

// All separations of order < k, each once, sorted by (order, rep). When
// proper_cap >= 0 the enumeration aborts with bound_exceeded as soon as more
// than proper_cap proper separations appear.
std::vector<Separation> enumerate_separations(const Graph& g, int k, long proper_cap = -1);

} // namespace blockdec

#endif // BLOCKDEC_SEPARATION_HPP
