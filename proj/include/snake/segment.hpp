#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "snake/rank.hpp"

namespace snake {

// Order on half-integers used throughout: a <= b means b - a is a
// nonnegative *integer*.  Values are stored doubled, so "integer
// difference" is "even doubled difference".
inline bool aligned_le(int da, int db) { return db >= da && ((db - da) & 1) == 0; }
inline bool aligned_lt(int da, int db) { return db > da && ((db - da) & 1) == 0; }

/// Interval [i,j] with i,j in (1/2)Z and j - i a nonnegative integer.
/// Endpoints are stored doubled (ti = 2i, tj = 2j) so that all arithmetic
/// stays in exact integers.  Validity relative to a rank (supp <= h,
/// properness) is a predicate, not a construction constraint: the same
/// segment is reused across ranks by the window maps.
class Segment {
    int ti_;
    int tj_;

public:
    Segment() : ti_(0), tj_(0) {}

    Segment(int ti, int tj) : ti_(ti), tj_(tj) {
        if (ti > tj) throw std::invalid_argument("segment endpoints out of order");
        if (((tj - ti) & 1) != 0) throw std::invalid_argument("segment endpoints misaligned (j-i not integral)");
    }

    /// Integer-endpoint convenience: of(i, j) = [i, j].
    static Segment of(int i, int j) { return Segment(2 * i, 2 * j); }

    int ti() const { return ti_; }
    int tj() const { return tj_; }

    /// Dynkin support j - i.
    int supp() const { return (tj_ - ti_) / 2; }
    /// Spectral parameter i + j (always an integer).
    int spar() const { return (ti_ + tj_) / 2; }
    /// Doubled spectral parameter ti + tj.
    int dspar() const { return ti_ + tj_; }
    /// True when endpoints are genuine half-integers.
    bool half_aligned() const { return (ti_ & 1) != 0; }

    bool is_segment(Rank rk) const { return supp() <= rk.h(); }
    bool is_proper(Rank rk) const { return supp() > 0 && supp() < rk.h(); }

    Segment shifted(int t) const { return Segment(ti_ + 2 * t, tj_ + 2 * t); }

    /// s* = [j - h, i].
    Segment right_dual(Rank rk) const {
        require_segment(rk);
        return Segment(tj_ - 2 * rk.h(), ti_);
    }

    /// *s = [j, i + h].
    Segment left_dual(Rank rk) const {
        require_segment(rk);
        return Segment(tj_, ti_ + 2 * rk.h());
    }

    void require_segment(Rank rk) const {
        if (!is_segment(rk)) throw std::invalid_argument("not an N-segment at this rank");
    }
    void require_proper(Rank rk) const {
        if (!is_proper(rk)) throw std::invalid_argument("segment not proper at this rank");
    }

    // Canonical order: by (spar, supp).  This is a bijective coordinate
    // system on segments and the serialization order.
    friend auto operator<=>(const Segment& a, const Segment& b) {
        if (auto c = (a.ti_ + a.tj_) <=> (b.ti_ + b.tj_); c != 0) return c;
        return (a.tj_ - a.ti_) <=> (b.tj_ - b.ti_);
    }
    friend bool operator==(const Segment& a, const Segment& b) {
        return a.ti_ == b.ti_ && a.tj_ == b.tj_;
    }
};

/// Segments are alignment-compatible when endpoint differences are integers.
inline bool aligned(Segment a, Segment b) { return ((a.ti() - b.ti()) & 1) == 0; }

struct SuppSpar {
    int supp;
    int dspar;
};

inline SuppSpar supp_spar(Segment s) { return SuppSpar{s.supp(), s.dspar()}; }

struct MeetJoin {
    bool overlapping = false;
    std::optional<Segment> cap; // set intersection, when it is an interval
    std::optional<Segment> cup; // set union, when it is an interval
};

/// Overlap test and interval meet/join.  cap/cup are returned whenever the
/// point-set intersection/union is an interval, independent of the overlap
/// flag (equal or nested segments are not "overlapping" but still have both).
inline MeetJoin meet_join(Segment s1, Segment s2) {
    MeetJoin r;
    if (!aligned(s1, s2)) return r;
    const int lo_ti = std::max(s1.ti(), s2.ti());
    const int hi_tj = std::min(s1.tj(), s2.tj());
    if (lo_ti <= hi_tj) r.cap = Segment(lo_ti, hi_tj);
    // As point sets with integer spacing, the union is an interval also when
    // the segments are adjacent with gap exactly one.
    if (lo_ti <= hi_tj + 2) r.cup = Segment(std::min(s1.ti(), s2.ti()), std::max(s1.tj(), s2.tj()));
    const bool strict_cross =
        (s1.ti() < s2.ti() && s2.ti() <= s1.tj() && s1.tj() < s2.tj()) ||
        (s2.ti() < s1.ti() && s1.ti() <= s2.tj() && s2.tj() < s1.tj());
    r.overlapping = strict_cross;
    return r;
}

/// s2 covers s1:  i1 < i2 <= j1 < j2 <= h + i1, endpoints aligned.
inline bool covers(Segment s2, Segment s1, Rank rk) {
    if (!aligned(s1, s2)) return false;
    return s1.ti() < s2.ti() && s2.ti() <= s1.tj() && s1.tj() < s2.tj() &&
           s2.tj() <= 2 * rk.h() + s1.ti();
}

/// h-connected: one of the two segments covers the other.
inline bool connected(Segment s1, Segment s2, Rank rk) {
    return covers(s1, s2, rk) || covers(s2, s1, rk);
}

struct CornerPair {
    Segment right; // [j1, j2]
    Segment left;  // [i1, i2]
};

/// Right and left corner subintervals of a covering pair s2 > s1.
inline CornerPair corner_subintervals(Segment s1, Segment s2, Rank rk) {
    if (!covers(s2, s1, rk)) throw std::invalid_argument("corner subintervals need a covering pair");
    return CornerPair{Segment(s1.tj(), s2.tj()), Segment(s1.ti(), s2.ti())};
}

struct SegmentHash {
    std::size_t operator()(const Segment& s) const {
        std::uint64_t x = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.ti())) << 32) |
                          static_cast<std::uint32_t>(s.tj());
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

} // namespace snake
