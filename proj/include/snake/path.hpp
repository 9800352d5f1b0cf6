#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "snake/lweight.hpp"
#include "snake/rank.hpp"
#include "snake/segment.hpp"

namespace snake {

/// Lattice path p : [0,h] -> Z with unit steps.  Values are plain integers:
/// for p in the path set of s = [i,j], p(0) = 2j and p(h) = h + 2i, both
/// integral by segment alignment.
struct Path {
    std::vector<int> values; // length h+1

    int h() const { return static_cast<int>(values.size()) - 1; }
    int operator()(int k) const { return values[static_cast<std::size_t>(k)]; }

    friend bool operator==(const Path& a, const Path& b) { return a.values == b.values; }
    friend auto operator<=>(const Path& a, const Path& b) { return a.values <=> b.values; }
};

inline bool unit_steps(const Path& p) {
    for (int k = 0; k < p.h(); ++k)
        if (std::abs(p(k + 1) - p(k)) != 1) return false;
    return true;
}

/// Membership in the path set of s: endpoint conditions plus unit steps.
inline bool in_path_set(const Path& p, Segment s, Rank rk) {
    if (p.h() != rk.h()) return false;
    if (p(0) != s.tj() || p(rk.h()) != rk.h() + s.ti()) return false;
    return unit_steps(p);
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

/// |P_s| = binomial(h, supp): the descent count is forced to j - i.
inline long long path_count(Segment s, Rank rk) {
    s.require_segment(rk);
    return binomial(rk.h(), s.supp());
}

/// Highest path p_s(k) = spar + |k - supp|.
inline Path highest_path(Segment s, Rank rk) {
    s.require_segment(rk);
    Path p;
    p.values.resize(rk.h() + 1);
    for (int k = 0; k <= rk.h(); ++k) p.values[k] = s.spar() + std::abs(k - s.supp());
    return p;
}

/// Lowest path p*_s(k) = spar + h - |k - (h - supp)|.
inline Path lowest_path(Segment s, Rank rk) {
    s.require_segment(rk);
    Path p;
    p.values.resize(rk.h() + 1);
    for (int k = 0; k <= rk.h(); ++k) p.values[k] = s.spar() + rk.h() - std::abs(k - (rk.h() - s.supp()));
    return p;
}

/// Streaming enumeration of P_s in lexicographic order on the step word
/// with the down step sorting first; the highest path comes first and the
/// lowest path last.
class PathStream {
    std::vector<int> steps_; // -1 = down, +1 = up
    int start_;
    bool done_ = false;
    bool first_ = true;

public:
    PathStream(Segment s, Rank rk) : start_(s.tj()) {
        s.require_segment(rk);
        steps_.assign(static_cast<std::size_t>(rk.h()), 1);
        for (int k = 0; k < s.supp(); ++k) steps_[static_cast<std::size_t>(k)] = -1;
    }

    std::optional<Path> next() {
        if (done_) return std::nullopt;
        if (!first_ && !std::next_permutation(steps_.begin(), steps_.end())) {
            done_ = true;
            return std::nullopt;
        }
        first_ = false;
        Path p;
        p.values.reserve(steps_.size() + 1);
        int v = start_;
        p.values.push_back(v);
        for (int st : steps_) p.values.push_back(v += st);
        return p;
    }
};

inline std::vector<Path> enumerate_paths(Segment s, Rank rk) {
    std::vector<Path> out;
    PathStream st(s, rk);
    while (auto p = st.next()) out.push_back(std::move(*p));
    return out;
}

/// Interior extrema of a path and their corner segments.  Sign convention
/// p(k +- 1) = p(k) +- 1: the minus class consists of the local maxima
/// (they contribute inverse generators to the path weight) and the plus
/// class of the local minima.
struct Corners {
    std::vector<int> eplus;
    std::vector<int> eminus;
    std::vector<Segment> cplus;
    std::vector<Segment> cminus;
};

inline Segment corner_segment(const Path& p, int k) {
    return Segment(p(k) - k, p(k) + k);
}

inline Corners corners(const Path& p) {
    Corners c;
    for (int k = 1; k < p.h(); ++k) {
        if (p(k - 1) == p(k) + 1 && p(k + 1) == p(k) + 1) {
            c.eplus.push_back(k);
            c.cplus.push_back(corner_segment(p, k));
        } else if (p(k - 1) == p(k) - 1 && p(k + 1) == p(k) - 1) {
            c.eminus.push_back(k);
            c.cminus.push_back(corner_segment(p, k));
        }
    }
    return c;
}

/// Flip at an interior extremum: minima move up by 2, maxima down by 2.
inline Path tau_flip(const Path& p, int k) {
    if (k < 1 || k >= p.h()) throw std::invalid_argument("tau_flip: index not interior");
    Path q = p;
    if (p(k - 1) == p(k) + 1 && p(k + 1) == p(k) + 1) {
        q.values[static_cast<std::size_t>(k)] += 2;
    } else if (p(k - 1) == p(k) - 1 && p(k + 1) == p(k) - 1) {
        q.values[static_cast<std::size_t>(k)] -= 2;
    } else {
        throw std::invalid_argument("tau_flip: index is not a local extremum");
    }
    return q;
}

/// The unique path in P_s whose minus corner set is exactly {s1}, for a
/// covering segment s1 of s.  Piecewise linear with breakpoints at the
/// supports of s^s1 (intersection), s1, and s v s1 (union).
inline Path peak_path(Segment s, Segment s1, Rank rk) {
    if (!covers(s1, s, rk)) throw std::invalid_argument("peak_path: s1 must cover s");
    auto mj = meet_join(s, s1);
    const Segment cap = *mj.cap;
    const Segment cup = *mj.cup;
    const int a = cap.supp();
    const int m = s1.supp();
    const int b = cup.supp();
    Path p;
    p.values.resize(static_cast<std::size_t>(rk.h()) + 1);
    for (int k = 0; k <= rk.h(); ++k) {
        int v;
        if (k <= a) v = s.tj() - k;
        else if (k <= m) v = cap.spar() + (k - a);
        else if (k <= b) v = s1.spar() - (k - m);
        else v = s.ti() + k;
        p.values[static_cast<std::size_t>(k)] = v;
    }
    return p;
}

/// Membership of s2 = [m,n] in the union of plus corner sets over P_s1,
/// i.e. i1 <= m < j1 <= n < h + i1 with integral gaps.
inline bool in_upper_corner_set(Segment s2, Segment s1, Rank rk) {
    if (!aligned(s1, s2)) return false;
    return s1.ti() <= s2.ti() && s2.ti() < s1.tj() && s1.tj() <= s2.tj() &&
           s2.tj() < 2 * rk.h() + s1.ti();
}

/// Membership of s2 in the union of minus corner sets over P_s1; by the
/// corner characterization this is exactly "s2 covers s1".
inline bool in_lower_corner_set(Segment s2, Segment s1, Rank rk) {
    return covers(s2, s1, rk);
}

/// The unique path in P_s1 whose plus corner set is exactly {s2}.
inline Path valley_path(Segment s1, Segment s2, Rank rk) {
    if (!in_upper_corner_set(s2, s1, rk))
        throw std::invalid_argument("valley_path: s2 not an upper corner of s1");
    const int h = rk.h();
    const int tj1 = s1.tj(), ti1 = s1.ti(), tj2 = s2.tj(), ti2 = s2.ti();
    const int b1 = (tj2 - tj1) / 2;
    const int b2 = s2.supp();
    const int b3 = h + (ti1 - ti2) / 2;
    Path p;
    p.values.resize(static_cast<std::size_t>(h) + 1);
    for (int k = 0; k <= h; ++k) {
        int v;
        if (k <= b1) v = tj1 + k;
        else if (k <= b2) v = tj2 - k;
        else if (k <= b3) v = ti2 + k;
        else v = 2 * h + ti1 - k;
        p.values[static_cast<std::size_t>(k)] = v;
    }
    return p;
}

/// Path weight: product of plus corner generators over inverse minus ones.
inline LWeight path_weight(const Path& p, Rank rk) {
    Corners c = corners(p);
    LWeightBuilder b(rk);
    for (const auto& s : c.cplus) b.push(s, 1);
    for (const auto& s : c.cminus) b.push(s, -1);
    return b.build();
}

} // namespace snake
