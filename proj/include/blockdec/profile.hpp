#ifndef BLOCKDEC_PROFILE_HPP
#define BLOCKDEC_PROFILE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "blockdec/blocks.hpp"
#include "blockdec/separation.hpp"

namespace blockdec {

// S_k(G): the separations of order < k, indexed in (order, rep) order so the
// first differing index between two orientations is always a minimum-order
// distinguisher.
class SeparationSystem {
public:
    SeparationSystem(const Graph& g, int k, long proper_cap = -1);

    int k() const { return k_; }
    int size() const { return static_cast<int>(seps_.size()); }
    long proper_count() const { return proper_count_; }
    VertexSet all() const { return all_; }

    const Separation& sep(int i) const { return seps_[i]; }
    const OrientedSeparation& rep(int i) const { return seps_[i].rep; }
    int order_of(int i) const { return seps_[i].order(); }
    bool proper_at(int i) const { return proper_[i] != 0; }
    bool degenerate_at(int i) const { return seps_[i].rep.small == seps_[i].rep.big; }

    // oriented id 2*i for the stored representative, 2*i+1 for its reverse
    OrientedSeparation oriented(int oid) const {
        return (oid & 1) ? seps_[oid >> 1].rep.reverse() : seps_[oid >> 1].rep;
    }

    std::optional<int> index_of(const Separation& s) const;
    std::optional<int> oriented_index_of(const OrientedSeparation& s) const;

private:
    int k_;
    VertexSet all_;
    long proper_count_ = 0;
    std::vector<Separation> seps_;
    std::vector<char> proper_;
};

using SystemPtr = std::shared_ptr<const SeparationSystem>;

SystemPtr make_separation_system(const Graph& g, int k, long proper_cap = -1);

// An orientation of S_k satisfying consistency and the profile property.
// Stored as one bit per separation: 0 = representative, 1 = its reverse.
class Profile {
public:
    Profile(SystemPtr sys, std::vector<std::uint64_t> choice_bits);

    const SeparationSystem& system() const { return *sys_; }
    const SystemPtr& system_ptr() const { return sys_; }
    int k() const { return sys_->k(); }

    bool reversed_at(int i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }
    OrientedSeparation orientation_at(int i) const {
        return reversed_at(i) ? sys_->rep(i).reverse() : sys_->rep(i);
    }
    bool contains(const OrientedSeparation& s) const;
    bool is_regular() const;

    const std::vector<std::uint64_t>& bits() const { return bits_; }

    friend bool operator==(const Profile& a, const Profile& b) {
        return a.bits_ == b.bits_ && a.sys_->k() == b.sys_->k();
    }

private:
    SystemPtr sys_;
    std::vector<std::uint64_t> bits_;
};

// All k-profiles of the system, in increasing choice-bit order (the
// representative orientation counts as 0). With regular_only the orientations
// with small side V(G) are excluded up front.
std::vector<Profile> enumerate_profiles(const SystemPtr& sys, bool regular_only);
std::vector<Profile> enumerate_profiles(const Graph& g, int k, bool regular_only,
                                        long proper_cap = 20);

// Orientation of every separation towards the side containing the block.
Profile induced_profile(const SystemPtr& sys, const Block& b);

// Separation indices of the system on which two profiles disagree.
bool distinguishes(const Separation& s, const Profile& p1, const Profile& p2);
int min_distinguisher_order(const Profile& p1, const Profile& p2);  // -1 if none
std::vector<int> efficient_distinguishers(const Profile& p1, const Profile& p2);
bool efficiently_distinguishes(const Separation& s, const Profile& p1, const Profile& p2);

// n-robustness: for (A,B) in P and {C,D} of order < n, whenever both corners
// (A cup C, B cap D) and (A cup D, B cap C) have order < |A cap B|, one of
// them lies in P. include_improper controls whether improper {C,D} take part.
bool is_robust(const Graph& g, const Profile& p, int n, bool include_improper = true);

} // namespace blockdec

#endif // BLOCKDEC_PROFILE_HPP
