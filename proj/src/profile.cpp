#include "blockdec/profile.hpp"

#include <algorithm>

namespace blockdec {

namespace {

bool system_less(const Separation& a, const Separation& b) {
    if (a.order() != b.order())
        return a.order() < b.order();
    return a.rep < b.rep;
}

} // namespace

SeparationSystem::SeparationSystem(const Graph& g, int k, long proper_cap)
    : k_(k), all_(g.all()) {
    seps_ = enumerate_separations(g, k, proper_cap);
    proper_.resize(seps_.size());
    for (std::size_t i = 0; i < seps_.size(); ++i) {
        proper_[i] = is_proper(g, seps_[i]) ? 1 : 0;
        if (proper_[i])
            ++proper_count_;
    }
}

std::optional<int> SeparationSystem::index_of(const Separation& s) const {
    auto it = std::lower_bound(seps_.begin(), seps_.end(), s, system_less);
    if (it == seps_.end() || !(*it == s))
        return std::nullopt;
    return static_cast<int>(it - seps_.begin());
}

std::optional<int> SeparationSystem::oriented_index_of(const OrientedSeparation& s) const {
    OrientedSeparation canon = canonical_orientation(s);
    auto idx = index_of(Separation{canon});
    if (!idx)
        return std::nullopt;
    return 2 * *idx + (s == canon ? 0 : 1);
}

SystemPtr make_separation_system(const Graph& g, int k, long proper_cap) {
    return std::make_shared<SeparationSystem>(g, k, proper_cap);
}

Profile::Profile(SystemPtr sys, std::vector<std::uint64_t> choice_bits)
    : sys_(std::move(sys)), bits_(std::move(choice_bits)) {}

bool Profile::contains(const OrientedSeparation& s) const {
    auto oid = sys_->oriented_index_of(s);
    if (!oid)
        return false;
    return (*oid & 1) == (reversed_at(*oid >> 1) ? 1 : 0);
}

bool Profile::is_regular() const {
    for (int i = 0; i < sys_->size(); ++i)
        if (orientation_at(i).small == sys_->all())
            return false;
    return true;
}

namespace {

// Exhaustive profile search. Orientation choices are propagated through two
// closure rules before branching:
//   - consistency: choosing (C,D) forces every (A,B) <= (C,D);
//   - profile property: (A,B),(C,D) chosen forces (A cup C, B cap D), because
//     its reverse (B cap D, A cup C) must stay out.
// Every branch that survives to a full assignment is a profile, and no
// profile is pruned, so the search is exact.
class ProfileEnumerator {
public:
    ProfileEnumerator(const SeparationSystem& sys, bool regular_only)
        : sys_(sys), m_(sys.size()), words_(m_ > 0 ? (2 * m_ + 63) / 64 : 1),
          regular_only_(regular_only) {
        if (2 * m_ > 8192)
            fail(ErrorKind::bound_exceeded,
                 "separation system too large for profile enumeration (" +
                     std::to_string(m_) + " separations)");
        forced_.assign(2 * m_ * words_, 0);
        conflict_.assign(2 * m_ * words_, 0);
        for (int x = 0; x < 2 * m_; ++x) {
            OrientedSeparation ox = sys_.oriented(x);
            OrientedSeparation rx = ox.reverse();
            for (int y = 0; y < 2 * m_; ++y) {
                if ((x >> 1) == (y >> 1))
                    continue;
                OrientedSeparation oy = sys_.oriented(y);
                if (le(oy, ox))
                    forced_[x * words_ + (y >> 6)] |= 1ull << (y & 63);
                if (le(rx, oy) || le(oy.reverse(), ox))
                    conflict_[x * words_ + (y >> 6)] |= 1ull << (y & 63);
            }
        }
        corner_.assign(static_cast<std::size_t>(2 * m_) * (2 * m_), -2);
        choice_.assign(m_, -1);
        assigned_.assign(words_, 0);
    }

    std::vector<std::vector<std::uint64_t>> run() {
        // (V,V) cannot appear in any profile: it is its own forbidden corner.
        for (int i = 0; i < m_; ++i)
            if (sys_.degenerate_at(i))
                return {};
        if (regular_only_) {
            // improper separations are forced away from the (V,A) orientation
            for (int i = 0; i < m_; ++i) {
                if (sys_.proper_at(i))
                    continue;
                int oid = 2 * i + (sys_.rep(i).small == sys_.all() ? 1 : 0);
                if (!propagate(oid))
                    return {};
            }
        }
        search();
        std::sort(results_.begin(), results_.end());
        return std::move(results_);
    }

private:
    bool assigned_bit(int oid) const { return (assigned_[oid >> 6] >> (oid & 63)) & 1u; }

    int corner_target(int x, int y) {
        int& slot = corner_[static_cast<std::size_t>(x) * (2 * m_) + y];
        if (slot == -2) {
            OrientedSeparation c = corner(sys_.oriented(x), sys_.oriented(y));
            auto oid = sys_.oriented_index_of(c);
            slot = oid ? *oid : -1;
            corner_[static_cast<std::size_t>(y) * (2 * m_) + x] = slot;
        }
        return slot;
    }

    // Commits oid plus everything it implies; false on contradiction.
    bool propagate(int start) {
        queue_.clear();
        queue_.push_back(start);
        std::size_t head = 0;
        while (head < queue_.size()) {
            int oid = queue_[head++];
            int i = oid >> 1;
            if (choice_[i] != -1) {
                if (choice_[i] != (oid & 1))
                    return false;
                continue;
            }
            const std::uint64_t* conf = &conflict_[oid * words_];
            for (int w = 0; w < words_; ++w)
                if (conf[w] & assigned_[w])
                    return false;
            choice_[i] = oid & 1;
            assigned_[oid >> 6] |= 1ull << (oid & 63);
            trail_.push_back(oid);
            const std::uint64_t* forc = &forced_[oid * words_];
            for (int w = 0; w < words_; ++w) {
                std::uint64_t pending = forc[w] & ~assigned_[w];
                while (pending) {
                    int y = w * 64 + std::countr_zero(pending);
                    pending &= pending - 1;
                    if (choice_[y >> 1] == -1)
                        queue_.push_back(y);
                    // an opposite prior choice is caught by its conflict mask
                }
            }
            for (std::size_t t = 0; t + 1 < trail_.size(); ++t) {
                int c = corner_target(oid, trail_[t]);
                if (c < 0)
                    continue;
                if (choice_[c >> 1] == -1)
                    queue_.push_back(c);
                else if (choice_[c >> 1] != (c & 1))
                    return false;
            }
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            int oid = trail_.back();
            trail_.pop_back();
            choice_[oid >> 1] = -1;
            assigned_[oid >> 6] &= ~(1ull << (oid & 63));
        }
    }

    void search() {
        int free_idx = -1;
        for (int i = 0; i < m_; ++i)
            if (choice_[i] == -1) { free_idx = i; break; }
        if (free_idx == -1) {
            std::vector<std::uint64_t> bits((m_ + 63) / 64, 0);
            for (int i = 0; i < m_; ++i)
                if (choice_[i] == 1)
                    bits[i >> 6] |= 1ull << (i & 63);
            results_.push_back(std::move(bits));
            return;
        }
        for (int orient = 0; orient < 2; ++orient) {
            if (regular_only_ && sys_.oriented(2 * free_idx + orient).small == sys_.all())
                continue;
            std::size_t mark = trail_.size();
            if (propagate(2 * free_idx + orient))
                search();
            undo_to(mark);
        }
    }

    const SeparationSystem& sys_;
    int m_;
    int words_;
    bool regular_only_;
    std::vector<std::uint64_t> forced_, conflict_, assigned_;
    std::vector<int> corner_;
    std::vector<signed char> choice_;
    std::vector<int> queue_, trail_;
    std::vector<std::vector<std::uint64_t>> results_;
};

} // namespace

std::vector<Profile> enumerate_profiles(const SystemPtr& sys, bool regular_only) {
    ProfileEnumerator en(*sys, regular_only);
    std::vector<Profile> out;
    for (auto& bits : en.run())
        out.emplace_back(sys, std::move(bits));
    return out;
}

std::vector<Profile> enumerate_profiles(const Graph& g, int k, bool regular_only,
                                        long proper_cap) {
    return enumerate_profiles(make_separation_system(g, k, proper_cap), regular_only);
}

Profile induced_profile(const SystemPtr& sys, const Block& b) {
    if (b.size() < b.k)
        fail(ErrorKind::precondition, "block smaller than its k");
    std::vector<std::uint64_t> bits((sys->size() + 63) / 64, 0);
    for (int i = 0; i < sys->size(); ++i) {
        const OrientedSeparation& rep = sys->rep(i);
        bool in_big = (b.vertices & ~rep.big) == 0;
        bool in_small = (b.vertices & ~rep.small) == 0;
        if (in_big == in_small)
            fail(ErrorKind::internal, "block fits in " + std::string(in_big ? "both" : "no") +
                                          " sides of a separation of order < k");
        if (in_small)
            bits[i >> 6] |= 1ull << (i & 63);
    }
    return Profile(sys, std::move(bits));
}

bool distinguishes(const Separation& s, const Profile& p1, const Profile& p2) {
    auto i1 = p1.system().index_of(s);
    auto i2 = p2.system().index_of(s);
    if (!i1 || !i2)
        return false;
    return p1.orientation_at(*i1) != p2.orientation_at(*i2);
}

int min_distinguisher_order(const Profile& p1, const Profile& p2) {
    const SeparationSystem& sys = p1.system();
    if (p2.system().k() != sys.k() || p2.system().size() != sys.size())
        fail(ErrorKind::precondition, "profiles over different systems");
    const auto& a = p1.bits();
    const auto& b = p2.bits();
    for (std::size_t w = 0; w < a.size(); ++w) {
        std::uint64_t diff = a[w] ^ b[w];
        if (diff)
            return sys.order_of(static_cast<int>(w * 64 + std::countr_zero(diff)));
    }
    return -1;
}

std::vector<int> efficient_distinguishers(const Profile& p1, const Profile& p2) {
    int min_ord = min_distinguisher_order(p1, p2);
    std::vector<int> out;
    if (min_ord < 0)
        return out;
    const SeparationSystem& sys = p1.system();
    const auto& a = p1.bits();
    const auto& b = p2.bits();
    for (int i = 0; i < sys.size() && sys.order_of(i) <= min_ord; ++i)
        if (((a[i >> 6] ^ b[i >> 6]) >> (i & 63)) & 1u)
            out.push_back(i);
    return out;
}

bool efficiently_distinguishes(const Separation& s, const Profile& p1, const Profile& p2) {
    if (!distinguishes(s, p1, p2))
        return false;
    const Profile& small = p1.k() <= p2.k() ? p1 : p2;
    const SeparationSystem& sys = small.system();
    for (int j = 0; j < sys.size() && sys.order_of(j) < s.order(); ++j)
        if (distinguishes(sys.sep(j), p1, p2))
            return false;
    return true;
}

bool is_robust(const Graph& g, const Profile& p, int n, bool include_improper) {
    std::vector<Separation> cands = enumerate_separations(g, n);
    for (int i = 0; i < p.system().size(); ++i) {
        OrientedSeparation ab = p.orientation_at(i);
        int ab_order = ab.order();
        for (const Separation& cd : cands) {
            if (!include_improper && !is_proper(g, cd))
                continue;
            OrientedSeparation c1 = corner(ab, cd.rep);
            OrientedSeparation c2 = corner(ab, cd.rep.reverse());
            if (c1.order() < ab_order && c2.order() < ab_order &&
                !p.contains(c1) && !p.contains(c2))
                return false;
        }
    }
    return true;
}

} // namespace blockdec
