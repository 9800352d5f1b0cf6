#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "snake/lweight.hpp"
#include "snake/multisegment.hpp"

namespace snake {

struct CoveredSets {
    std::vector<Segment> c;  // all segments covered by s
    std::vector<Segment> c1; // the sub-family with both endpoint gaps >= 2
};

/// C(s) = { s' : s covers s' } and its gap-2 subfamily C_1(s).  Both sets
/// are finite boxes: i <= j' < j and j - h <= i' < i.
inline CoveredSets covered_sets(Segment s, Rank rk) {
    s.require_proper(rk);
    CoveredSets out;
    for (int tip = s.tj() - 2 * rk.h(); tip < s.ti(); tip += 2) {
        for (int tjp = s.ti(); tjp < s.tj(); tjp += 2) {
            Segment sp(tip, tjp);
            out.c.push_back(sp);
            if (tjp < s.tj() - 2 && tip < s.ti() - 2) out.c1.push_back(sp);
        }
    }
    std::sort(out.c.begin(), out.c.end());
    std::sort(out.c1.begin(), out.c1.end());
    return out;
}

inline long long covered_count_formula(Segment s, Rank rk) {
    return static_cast<long long>(s.supp()) * (rk.h() - s.supp());
}

inline long long covered_count1_formula(Segment s, Rank rk) {
    return static_cast<long long>(s.supp() - 1) * (rk.h() - s.supp() - 1);
}

struct PairFlags {
    bool almostdual = false;
    bool kr = false;
    bool minmax = false;
};

/// Condition flags of an entrywise covering pair of multisegments of equal
/// length >= 2.
///   almostdual: j_1' < i_2 and j_2 - i_1' > h, computed both directly and
///     through the two interval-disjointness conditions, which must agree.
///   kr:         both tuples are runs of consecutive unit shifts.
///   minmax:     min supp of the intersections and max supp of the unions
///     are attained at the first entry.
inline PairFlags condition_flags(const Multisegment& s, const Multisegment& sp, Rank rk) {
    if (s.length() != sp.length() || s.length() < 2)
        throw std::invalid_argument("condition_flags: need equal lengths >= 2");
    if (!mcovers(s, sp, rk)) throw std::invalid_argument("condition_flags: covering fails");
    PairFlags out;

    const Segment s2 = s[1], s1p = sp[0];
    bool direct = s1p.tj() < s2.ti() && s2.tj() - s1p.ti() > 2 * rk.h();
    bool disjoint = !meet_join(s2, s1p).cap.has_value() &&
                    !meet_join(s2.left_dual(rk), s1p.left_dual(rk)).cap.has_value();
    if (direct != disjoint) throw std::logic_error("condition_flags: almostdual forms disagree");
    out.almostdual = direct;

    auto unit_run = [](const Multisegment& m) {
        for (std::size_t k = 0; k + 1 < m.length(); ++k)
            if (m[k + 1] != m[k].shifted(1)) return false;
        return true;
    };
    out.kr = unit_run(s) && unit_run(sp);

    auto dia = diamond(s, sp, rk);
    int min_cap = dia.cap[0].supp(), max_cup = dia.cup[0].supp();
    bool min_at_1 = true, max_at_1 = true;
    for (std::size_t k = 1; k < s.length(); ++k) {
        if (dia.cap[k].supp() < min_cap) min_at_1 = false;
        if (dia.cup[k].supp() > max_cup) max_at_1 = false;
    }
    out.minmax = min_at_1 && max_at_1;
    return out;
}

struct CensusRecord {
    Segment s1, s1p;
    std::vector<std::pair<Segment, Segment>> pairs; // (s2, s2p) completions
    std::vector<PairFlags> flags;                   // aligned with pairs
    long long count_enumerated = 0;
    long long count_formula = 0;
};

/// Closed count of the 1-cover completions of a covering seed (s1, s1p):
///   (1/4) (supp(r)-1)(supp(l)-1)
///         (supp(*s1)+supp(*s1 ^ *s1p)) (supp(s1)+supp(s1 ^ s1p))
/// with r, l the corner subintervals of the seed.
inline long long c1_count_formula(Segment s1, Segment s1p, Rank rk) {
    if (!covers(s1, s1p, rk)) throw std::invalid_argument("c1_count_formula: seed must cover");
    const long long li = (s1.ti() - s1p.ti()) / 2;  // i1 - i1'
    const long long lj = (s1.tj() - s1p.tj()) / 2;  // j1 - j1'
    const long long A = li - 1;
    const long long B = 2 * rk.h() + (s1.ti() + s1p.ti()) / 2 - s1.tj(); // 2h + i1 + i1' - 2 j1
    const long long C = lj - 1;
    const long long D = (s1.tj() + s1p.tj()) / 2 - s1.ti(); // j1 + j1' - 2 i1
    return (A * B / 2) * (C * D / 2);
}

/// All pairs of length-2 ladders extending the seed to a 1-cover, found two
/// independent ways (the constraint chains and a brute-force sweep of the
/// covering boxes) and cross-checked, with the closed count verified.
inline CensusRecord c1_pairs(Segment s1, Segment s1p, Rank rk) {
    if (!covers(s1, s1p, rk)) throw std::invalid_argument("c1_pairs: seed must cover");
    const int h2 = 2 * rk.h();
    CensusRecord out;
    out.s1 = s1;
    out.s1p = s1p;

    // Constraint-chain enumeration: s2p strictly inside the seed box, then
    // s2 in the box forced by s2 > s1 and s2 > s2p.
    for (int ti2p = s1p.ti() + 2; ti2p < s1.ti(); ti2p += 2) {
        for (int tj2p = s1p.tj() + 2; tj2p < s1.tj(); tj2p += 2) {
            Segment s2p(ti2p, tj2p);
            for (int ti2 = s1.ti() + 2; ti2 <= tj2p; ti2 += 2) {
                for (int tj2 = s1.tj() + 2; tj2 <= h2 + ti2p; tj2 += 2) {
                    out.pairs.emplace_back(Segment(ti2, tj2), s2p);
                }
            }
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    out.count_enumerated = static_cast<long long>(out.pairs.size());

    // Independent brute force over the raw predicates.
    std::vector<std::pair<Segment, Segment>> brute;
    for (int ti2 = s1.ti() + 2; ti2 <= s1.tj(); ti2 += 2) {
        for (int tj2 = s1.tj() + 2; tj2 <= h2 + s1.ti(); tj2 += 2) {
            Segment s2(ti2, tj2);
            if (!covers(s2, s1, rk)) continue;
            for (int ti2p = s1p.ti() + 2; ti2p <= s1p.tj(); ti2p += 2) {
                for (int tj2p = s1p.tj() + 2; tj2p <= h2 + s1p.ti(); tj2p += 2) {
                    Segment s2p(ti2p, tj2p);
                    if (!covers(s2p, s1p, rk)) continue;
                    Multisegment a{s1, s2}, b{s1p, s2p};
                    if (!a.is_ladder() || !b.is_ladder()) continue;
                    if (!p_cover(a, b, 1, rk)) continue;
                    brute.emplace_back(s2, s2p);
                }
            }
        }
    }
    std::sort(brute.begin(), brute.end());
    if (brute != out.pairs) throw std::logic_error("c1_pairs: enumeration mismatch");

    out.count_formula = c1_count_formula(s1, s1p, rk);
    if (out.count_formula != out.count_enumerated)
        throw std::logic_error("c1_pairs: closed count disagrees with enumeration");

    out.flags.reserve(out.pairs.size());
    for (const auto& [s2, s2p] : out.pairs)
        out.flags.push_back(condition_flags(Multisegment{s1, s2}, Multisegment{s1p, s2p}, rk));
    return out;
}

struct D2Record {
    Segment s1;
    std::vector<std::pair<Multisegment, Multisegment>> pairs; // ((s1,s2),(s1*,s2*))
    long long count_formula = 0;
};

/// The dual-pair subfamily: completions with sp = s* and equal supports,
/// parameterized by the shift s2 = t + s1.  Requires supp >= h/2; smaller
/// supports are handled by passing the right dual instead.
inline D2Record d2_census(Segment s1, Rank rk) {
    s1.require_proper(rk);
    if (2 * s1.supp() < rk.h())
        throw std::invalid_argument("d2_census: supp < h/2; apply to the right dual of the seed");
    D2Record out;
    out.s1 = s1;
    const int dual_supp = rk.h() - s1.supp();
    out.count_formula = dual_supp - 1;
    for (int t = 1; t < dual_supp; ++t) {
        Multisegment s{s1, s1.shifted(t)};
        Multisegment sp{s1.right_dual(rk), s1.right_dual(rk).shifted(t)};
        if (!p_cover(s, sp, 1, rk)) throw std::logic_error("d2_census: family member fails 1-cover");
        out.pairs.emplace_back(std::move(s), std::move(sp));
    }
    if (static_cast<long long>(out.pairs.size()) != out.count_formula)
        throw std::logic_error("d2_census: closed count disagrees with enumeration");
    return out;
}

/// Completions of a 1-covering seed pair of length >= 2 by one more entry.
/// The reduction lemma localizes the constraint to the last seed entries, so
/// the count equals the single-segment count of (s_{l-1}, s'_{l-1}).
inline long long c1_extend_count(const Multisegment& s, const Multisegment& sp, Rank rk,
                                 std::vector<std::pair<Segment, Segment>>* out_pairs = nullptr) {
    const auto l = s.length();
    if (l < 2) throw std::invalid_argument("c1_extend_count: seed length must be >= 2");
    if (!s.is_ladder() || !sp.is_ladder() || !p_cover(s, sp, 1, rk))
        throw std::invalid_argument("c1_extend_count: seed must be a 1-covering ladder pair");
    const Segment last = s[l - 1], lastp = sp[l - 1];
    const int h2 = 2 * rk.h();
    long long count = 0;
    for (int tin = last.ti() + 2; tin <= last.tj(); tin += 2) {
        for (int tjn = last.tj() + 2; tjn <= h2 + last.ti(); tjn += 2) {
            Segment sn(tin, tjn);
            if (!covers(sn, last, rk)) continue;
            for (int tinp = lastp.ti() + 2; tinp <= lastp.tj(); tinp += 2) {
                for (int tjnp = lastp.tj() + 2; tjnp <= h2 + lastp.ti(); tjnp += 2) {
                    Segment snp(tinp, tjnp);
                    if (!covers(snp, lastp, rk)) continue;
                    Multisegment a = concat(s, sn), b = concat(sp, snp);
                    if (!a.is_ladder() || !b.is_ladder()) continue;
                    if (!p_cover(a, b, 1, rk)) continue;
                    ++count;
                    if (out_pairs) out_pairs->emplace_back(sn, snp);
                }
            }
        }
    }
    return count;
}

/// Subdiagram window J = [a, b] inside [1, N]; the window context has
/// N_J = b - a + 1 and h_J = b - a + 2.
struct Window {
    int a;
    int b;

    Window(int a_, int b_) : a(a_), b(b_) {
        if (a < 1 || a > b) throw std::invalid_argument("window bounds out of order");
    }

    int nj() const { return b - a + 1; }
    Rank rank() const { return Rank(nj()); }
    int hj() const { return nj() + 1; }
};

inline Window full_window(Rank rk) { return Window(1, rk.n); }

/// Window attached to a covering pair: a = min supp of the intersections
/// plus one, b = max supp of the unions minus one.
inline Window derived_window(const Multisegment& s, const Multisegment& sp, Rank rk) {
    auto dia = diamond(s, sp, rk);
    int min_cap = dia.cap[0].supp(), max_cup = dia.cup[0].supp();
    for (std::size_t k = 1; k < s.length(); ++k) {
        min_cap = std::min(min_cap, dia.cap[k].supp());
        max_cup = std::max(max_cup, dia.cup[k].supp());
    }
    return Window(min_cap + 1, max_cup - 1);
}

/// Restriction of a segment to a window: [i + (a-1)/2, j - (a-1)/2] viewed
/// at rank N_J.  Only supports inside [a, b] restrict at the segment level.
inline Segment restrict_segment(Segment s, Window w, Rank rk) {
    s.require_segment(rk);
    if (w.b > rk.n) throw std::invalid_argument("restrict: window exceeds rank");
    if (s.supp() < w.a || s.supp() > w.b)
        throw std::invalid_argument("restrict: segment support outside window");
    return Segment(s.ti() + (w.a - 1), s.tj() - (w.a - 1));
}

inline Multisegment restrict_multisegment(const Multisegment& ms, Window w, Rank rk) {
    std::vector<Segment> out;
    out.reserve(ms.length());
    for (const auto& s : ms) out.push_back(restrict_segment(s, w, rk));
    return Multisegment(std::move(out));
}

/// Restriction at the l-weight level: generators with support outside the
/// window become trivial and are dropped.
inline LWeight restrict_lweight(const LWeight& g, Window w, Rank rk) {
    if (w.b > rk.n) throw std::invalid_argument("restrict: window exceeds rank");
    std::vector<LWeight::Entry> terms;
    for (const auto& [s, e] : g.terms()) {
        if (s.supp() < w.a || s.supp() > w.b) continue;
        terms.push_back({Segment(s.ti() + (w.a - 1), s.tj() - (w.a - 1)), e});
    }
    return LWeight::from_terms(std::move(terms));
}

struct LadderPair {
    Multisegment s;
    Multisegment sp;
};

/// Prepends a fresh covering layer (s, s') to a 1-covering pair so that the
/// extended pair satisfies the chain
///   s_1 > s > s_1' > s',  s > s',  j' < i_1,  j_1 - i' > h,
/// choosing the lexicographically smallest (i, j) then (i', j').  The
/// extension always exists for a 1-covering seed; failure is an internal
/// error, not an input error.
inline LadderPair construct_extend(const Multisegment& ms, const Multisegment& msp, Rank rk) {
    if (!ms.is_ladder() || !msp.is_ladder() || !p_cover(ms, msp, 1, rk))
        throw std::invalid_argument("construct_extend: need a 1-covering ladder pair");
    const Segment s1 = ms[0], s1p = msp[0];
    const int h2 = 2 * rk.h();
    for (int ti = s1p.ti() + 2; ti < s1.ti(); ti += 2) {
        for (int tj = s1p.tj() + 2; tj < s1.tj(); tj += 2) {
            Segment s(ti, tj);
            if (!covers(s1, s, rk) || !covers(s, s1p, rk)) continue;
            for (int tip = tj - h2; tip < s1.tj() - h2; tip += 2) {
                for (int tjp = std::max(ti, tip); tjp < s1.ti(); tjp += 2) {
                    Segment sp(tip, tjp);
                    if (!covers(s1p, sp, rk) || !covers(s, sp, rk)) continue;
                    LadderPair out{concat(s, ms), concat(sp, msp)};
                    if (!out.s.is_ladder() || !out.sp.is_ladder() ||
                        !p_cover(out.s, out.sp, 1, rk))
                        continue;
                    return out;
                }
            }
        }
    }
    throw std::logic_error("construct_extend: no admissible extension found");
}

/// Realizes pi_1 of a 1-covering pair as a diamond weight: the returned
/// pair of ladders has socle weight equal to pi_1.  The free parameters are
/// pinned to a = i_1 - 1 and b = j_l - 1, which the 1-cover gaps make valid.
inline LadderPair construct_socle_realize(const Multisegment& ms, const Multisegment& msp, Rank rk);

} // namespace snake

#include "snake/characters.hpp"

namespace snake {

inline LadderPair construct_socle_realize(const Multisegment& ms, const Multisegment& msp, Rank rk) {
    if (!ms.is_ladder() || !msp.is_ladder() || !p_cover(ms, msp, 1, rk))
        throw std::invalid_argument("construct_socle_realize: need a 1-covering ladder pair");
    const auto l = ms.length();
    const int ta = ms[0].ti() - 2;      // a = i_1 - 1
    const int tb = ms[l - 1].tj() - 2;  // b = j_l - 1
    LadderPair out;
    out.s = concat(concat(Segment(ta, msp[0].tj()), ms.slice(0, l - 1)), Segment(tb, ms[l - 1].tj()));
    out.sp = concat(concat(Segment(msp[0].ti(), ta), msp.slice(1, l)), Segment(ms[l - 1].ti(), tb));
    if (!out.s.is_ladder() || !out.sp.is_ladder() || !mcovers(out.s, out.sp, rk))
        throw std::logic_error("construct_socle_realize: output not a covering ladder pair");
    LWeight pi1 = pi_chain(ms, msp, 1, rk).pis[1];
    if (socle_weight(out.s, out.sp, rk) != pi1)
        throw std::logic_error("construct_socle_realize: socle weight mismatch");
    return out;
}

} // namespace snake
