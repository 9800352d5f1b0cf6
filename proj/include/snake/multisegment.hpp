#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "snake/segment.hpp"

namespace snake {

/// Ordered tuple of segments.  Order matters: ladders are intrinsically
/// ordered, and the permutation-invariance of the indexing only appears at
/// the l-weight layer.  The empty multisegment is allowed.
class Multisegment {
    std::vector<Segment> entries_;

public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> entries) : entries_(std::move(entries)) {}
    Multisegment(std::initializer_list<Segment> entries) : entries_(entries) {}

    std::size_t length() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const Segment& operator[](std::size_t k) const { return entries_[k]; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    const std::vector<Segment>& entries() const { return entries_; }

    /// s(k,m) = (s_{k+1}, ..., s_m).  Empty when k == m.
    Multisegment slice(std::size_t k, std::size_t m) const {
        if (k > m || m > entries_.size()) throw std::out_of_range("multisegment slice out of range");
        return Multisegment(std::vector<Segment>(entries_.begin() + k, entries_.begin() + m));
    }

    Multisegment shifted(int t) const {
        std::vector<Segment> out;
        out.reserve(entries_.size());
        for (const auto& s : entries_) out.push_back(s.shifted(t));
        return Multisegment(std::move(out));
    }

    Multisegment right_dual(Rank rk) const {
        std::vector<Segment> out;
        out.reserve(entries_.size());
        for (const auto& s : entries_) out.push_back(s.right_dual(rk));
        return Multisegment(std::move(out));
    }

    Multisegment left_dual(Rank rk) const {
        std::vector<Segment> out;
        out.reserve(entries_.size());
        for (const auto& s : entries_) out.push_back(s.left_dual(rk));
        return Multisegment(std::move(out));
    }

    /// Strictly increasing left and right endpoints, all gaps integral.
    bool is_ladder() const {
        for (std::size_t k = 0; k + 1 < entries_.size(); ++k) {
            if (!aligned_lt(entries_[k].ti(), entries_[k + 1].ti())) return false;
            if (!(entries_[k].tj() < entries_[k + 1].tj())) return false;
        }
        return true;
    }

    /// Ladder whose consecutive entries form covering pairs.
    bool is_connected_ladder(Rank rk) const {
        if (!is_ladder()) return false;
        for (std::size_t k = 0; k + 1 < entries_.size(); ++k)
            if (!covers(entries_[k + 1], entries_[k], rk)) return false;
        return true;
    }

    friend bool operator==(const Multisegment& a, const Multisegment& b) {
        return a.entries_ == b.entries_;
    }
    friend auto operator<=>(const Multisegment& a, const Multisegment& b) {
        return a.entries_ <=> b.entries_;
    }
};

inline Multisegment concat(const Multisegment& a, const Multisegment& b) {
    std::vector<Segment> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return Multisegment(std::move(out));
}

inline Multisegment concat(Segment a, const Multisegment& b) {
    return concat(Multisegment{a}, b);
}

inline Multisegment concat(const Multisegment& a, Segment b) {
    return concat(a, Multisegment{b});
}

/// Entrywise covering of equal-length multisegments.
inline bool mcovers(const Multisegment& s, const Multisegment& sp, Rank rk) {
    if (s.length() != sp.length()) throw std::invalid_argument("mcovers: length mismatch");
    for (std::size_t k = 0; k < s.length(); ++k)
        if (!covers(s[k], sp[k], rk)) return false;
    return true;
}

/// p-cover: s(0,l-k) covers sp(k,l) for all 0 <= k <= p.
inline bool p_cover(const Multisegment& s, const Multisegment& sp, int p, Rank rk) {
    if (s.length() != sp.length()) throw std::invalid_argument("p_cover: length mismatch");
    const auto l = s.length();
    if (p < 0 || static_cast<std::size_t>(p) >= l) throw std::invalid_argument("p_cover: p out of range");
    for (int k = 0; k <= p; ++k)
        if (!mcovers(s.slice(0, l - k), sp.slice(k, l), rk)) return false;
    return true;
}

struct DiamondParts {
    Multisegment cap;
    Multisegment cup;
    Multisegment joined() const { return concat(cap, cup); }
};

/// Entrywise intersections and unions of s(0,l-k) with sp(k,l); their
/// concatenation is the level-k diamond.
inline DiamondParts diamond_k(const Multisegment& s, const Multisegment& sp, int k, Rank rk) {
    if (!p_cover(s, sp, k, rk)) throw std::invalid_argument("diamond_k: k-cover fails");
    const auto l = s.length();
    std::vector<Segment> cap, cup;
    cap.reserve(l - k);
    cup.reserve(l - k);
    for (std::size_t m = 0; m < l - static_cast<std::size_t>(k); ++m) {
        auto mj = meet_join(s[m], sp[m + k]);
        cap.push_back(*mj.cap);
        cup.push_back(*mj.cup);
    }
    return DiamondParts{Multisegment(std::move(cap)), Multisegment(std::move(cup))};
}

inline DiamondParts diamond(const Multisegment& s, const Multisegment& sp, Rank rk) {
    return diamond_k(s, sp, 0, rk);
}

struct MCorners {
    Multisegment right;
    Multisegment left;
};

/// Entrywise corner subintervals of a covering pair of multisegments.
inline MCorners mcorners(const Multisegment& s, const Multisegment& sp, Rank rk) {
    if (!mcovers(s, sp, rk)) throw std::invalid_argument("mcorners: covering fails");
    std::vector<Segment> right, left;
    right.reserve(s.length());
    left.reserve(s.length());
    for (std::size_t k = 0; k < s.length(); ++k) {
        auto c = corner_subintervals(sp[k], s[k], rk);
        right.push_back(c.right);
        left.push_back(c.left);
    }
    return MCorners{Multisegment(std::move(right)), Multisegment(std::move(left))};
}

} // namespace snake
