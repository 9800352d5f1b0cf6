#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "snake/multisegment.hpp"
#include "snake/rank.hpp"
#include "snake/segment.hpp"

namespace snake {

/// Element of the free abelian group on fundamental generators indexed by
/// proper segments.  Stored as a sorted sparse exponent vector; generators
/// with supp in {0, h} are the identity and are dropped on construction,
/// so the group operations themselves never need a rank.
class LWeight {
public:
    using Entry = std::pair<Segment, long long>;

private:
    std::vector<Entry> terms_; // sorted by segment, exponents nonzero

    static void normalize(std::vector<Entry>& v) {
        std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
        std::size_t out = 0;
        for (std::size_t k = 0; k < v.size();) {
            Segment seg = v[k].first;
            long long e = 0;
            while (k < v.size() && v[k].first == seg) e += v[k++].second;
            if (e != 0) v[out++] = {seg, e};
        }
        v.resize(out);
    }

public:
    LWeight() = default;

    static LWeight one() { return LWeight(); }

    /// Builds from arbitrary (segment, exponent) terms; merges duplicates.
    static LWeight from_terms(std::vector<Entry> terms) {
        LWeight w;
        w.terms_ = std::move(terms);
        normalize(w.terms_);
        return w;
    }

    const std::vector<Entry>& terms() const { return terms_; }
    bool trivial() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    long long exponent_of(Segment s) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                                   [](const Entry& e, const Segment& key) { return e.first < key; });
        if (it != terms_.end() && it->first == s) return it->second;
        return 0;
    }

    /// In P+ : all exponents positive (or the identity).
    bool dominant() const {
        for (const auto& [s, e] : terms_)
            if (e < 0) return false;
        return true;
    }

    bool antidominant() const {
        for (const auto& [s, e] : terms_)
            if (e > 0) return false;
        return true;
    }

    LWeight operator*(const LWeight& o) const {
        std::vector<Entry> out;
        out.reserve(terms_.size() + o.terms_.size());
        std::size_t a = 0, b = 0;
        while (a < terms_.size() && b < o.terms_.size()) {
            if (terms_[a].first < o.terms_[b].first) {
                out.push_back(terms_[a++]);
            } else if (o.terms_[b].first < terms_[a].first) {
                out.push_back(o.terms_[b++]);
            } else {
                long long e = terms_[a].second + o.terms_[b].second;
                if (e != 0) out.push_back({terms_[a].first, e});
                ++a;
                ++b;
            }
        }
        while (a < terms_.size()) out.push_back(terms_[a++]);
        while (b < o.terms_.size()) out.push_back(o.terms_[b++]);
        LWeight w;
        w.terms_ = std::move(out);
        return w;
    }

    LWeight inverse() const {
        LWeight w;
        w.terms_ = terms_;
        for (auto& [s, e] : w.terms_) e = -e;
        return w;
    }

    LWeight operator/(const LWeight& o) const { return *this * o.inverse(); }

    friend bool operator==(const LWeight& a, const LWeight& b) { return a.terms_ == b.terms_; }
    friend auto operator<=>(const LWeight& a, const LWeight& b) { return a.terms_ <=> b.terms_; }
};

struct LWeightHash {
    std::size_t operator()(const LWeight& w) const {
        std::uint64_t h = 1469598103934665603ULL;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ULL;
        };
        for (const auto& [s, e] : w.terms()) {
            mix(static_cast<std::uint32_t>(s.ti()));
            mix(static_cast<std::uint32_t>(s.tj()));
            mix(static_cast<std::uint64_t>(e));
        }
        return static_cast<std::size_t>(h);
    }
};

/// Incremental builder used by the path and census layers: collapses the
/// trivial generators (supp 0 or h) as terms arrive.
class LWeightBuilder {
    std::vector<LWeight::Entry> terms_;
    int h2_;

public:
    explicit LWeightBuilder(Rank rk) : h2_(2 * rk.h()) {}

    void push(Segment s, long long e) {
        const int d2 = s.tj() - s.ti();
        if (d2 == 0 || d2 == h2_) return;
        if (e != 0) terms_.push_back({s, e});
    }

    LWeight build() { return LWeight::from_terms(std::move(terms_)); }
};

/// Fundamental generator of a segment (identity when supp is 0 or h).
inline LWeight omega(Segment s, Rank rk) {
    s.require_segment(rk);
    LWeightBuilder b(rk);
    b.push(s, 1);
    return b.build();
}

/// Product of the fundamental generators of all entries.
inline LWeight omega(const Multisegment& ms, Rank rk) {
    LWeightBuilder b(rk);
    for (const auto& s : ms) {
        s.require_segment(rk);
        b.push(s, 1);
    }
    return b.build();
}

/// Simple l-root of a proper segment [i,j]:
///   a_{i,j} = w_{i,j} w_{i+1,j+1} (w_{i+1,j} w_{i,j+1})^{-1},
/// with trivial factors dropped.
inline LWeight simple_lroot(Segment s, Rank rk) {
    s.require_proper(rk);
    LWeightBuilder b(rk);
    b.push(s, 1);
    b.push(Segment(s.ti() + 2, s.tj() + 2), 1);
    b.push(Segment(s.ti() + 2, s.tj()), -1);
    b.push(Segment(s.ti(), s.tj() + 2), -1);
    return b.build();
}

enum class DualSide { left, right };

/// Generator-wise dual, extended multiplicatively.  left o right = id.
inline LWeight star_dual(const LWeight& w, DualSide side, Rank rk) {
    std::vector<LWeight::Entry> out;
    out.reserve(w.size());
    for (const auto& [s, e] : w.terms())
        out.push_back({side == DualSide::right ? s.right_dual(rk) : s.left_dual(rk), e});
    return LWeight::from_terms(std::move(out));
}

/// Exponent vector over the simple l-roots (coordinates on Q).
class LRootVector {
    std::vector<LWeight::Entry> coeffs_; // keyed by the root's segment

public:
    LRootVector() = default;
    static LRootVector from_terms(std::vector<LWeight::Entry> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        LRootVector v;
        for (std::size_t k = 0; k < terms.size();) {
            Segment seg = terms[k].first;
            long long e = 0;
            while (k < terms.size() && terms[k].first == seg) e += terms[k++].second;
            if (e != 0) v.coeffs_.push_back({seg, e});
        }
        return v;
    }

    const std::vector<LWeight::Entry>& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    long long coeff_of(Segment s) const {
        for (const auto& [r, e] : coeffs_)
            if (r == s) return e;
        return 0;
    }

    /// In Q+ : all coordinates nonnegative.
    bool nonnegative() const {
        for (const auto& [s, e] : coeffs_)
            if (e < 0) return false;
        return true;
    }

    friend bool operator==(const LRootVector& a, const LRootVector& b) { return a.coeffs_ == b.coeffs_; }
};

/// Expands a root vector back into the l-weight group.
inline LWeight expand_lroots(const LRootVector& n, Rank rk) {
    LWeightBuilder b(rk);
    for (const auto& [s, e] : n.coeffs()) {
        b.push(s, e);
        b.push(Segment(s.ti() + 2, s.tj() + 2), e);
        b.push(Segment(s.ti() + 2, s.tj()), -e);
        b.push(Segment(s.ti(), s.tj() + 2), -e);
    }
    return b.build();
}

/// Unique decomposition of g into simple l-roots, if g lies in Q.
///
/// The root stencil couples the exponent c(i,j) of w_{i,j} to the four root
/// coordinates n at (i,j), (i-1,j-1), (i,j-1), (i-1,j):
///   c(i,j) = n(i,j) + n(i-1,j-1) - n(i,j-1) - n(i-1,j),
/// valid at every proper (i,j) and with n zero outside the proper band.
/// Rows are eliminated in increasing left endpoint; the two alignment
/// classes never interact.  The candidate is then multiplied back out and
/// compared, which is the membership test.
inline std::optional<LRootVector> decompose_lroots(const LWeight& g, Rank rk) {
    if (g.trivial()) return LRootVector();
    const int h = rk.h();

    // Split generators by alignment class of the left endpoint.
    std::map<int, std::map<std::pair<int, int>, long long>> classes; // parity -> (ti,tj) -> exp
    for (const auto& [s, e] : g.terms()) classes[s.ti() & 1][{s.ti(), s.tj()}] = e;

    std::vector<LWeight::Entry> roots;
    for (auto& [parity, c] : classes) {
        int lo = c.begin()->first.first;
        int hi = lo;
        for (const auto& [key, e] : c) {
            lo = std::min(lo, key.first);
            hi = std::max(hi, key.first);
        }
        // Row-by-row elimination on doubled coordinates, rows lo .. hi-2.
        std::map<std::pair<int, int>, long long> n;
        auto nval = [&n](int ti, int tj) {
            auto it = n.find({ti, tj});
            return it == n.end() ? 0LL : it->second;
        };
        auto cval = [&c](int ti, int tj) {
            auto it = c.find({ti, tj});
            return it == c.end() ? 0LL : it->second;
        };
        for (int ti = lo; ti <= hi - 2; ti += 2) {
            for (int tj = ti + 2; tj <= ti + 2 * h - 2; tj += 2) {
                long long v = cval(ti, tj) + nval(ti, tj - 2) + nval(ti - 2, tj) - nval(ti - 2, tj - 2);
                if (v != 0) n[{ti, tj}] = v;
            }
        }
        for (const auto& [key, e] : n) roots.push_back({Segment(key.first, key.second), e});
    }

    LRootVector cand = LRootVector::from_terms(std::move(roots));
    if (expand_lroots(cand, rk) == g) return cand;
    return std::nullopt;
}

/// Partial order on the l-weight group: a <= b when b a^{-1} lies in Q+.
inline bool leq(const LWeight& a, const LWeight& b, Rank rk) {
    auto d = decompose_lroots(b / a, rk);
    return d.has_value() && d->nonnegative();
}

} // namespace snake
