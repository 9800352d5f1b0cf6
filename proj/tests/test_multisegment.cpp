#include <doctest.h>

#include <random>
#include <vector>

#include "snake/multisegment.hpp"

using namespace snake;

namespace {

std::vector<Segment> window(int dmin, int dmax, int spar_bound) {
    std::vector<Segment> out;
    for (int d = dmin; d <= dmax; ++d)
        for (int sp = -spar_bound; sp <= spar_bound; ++sp)
            out.push_back(Segment(sp - d, sp + d));
    return out;
}

const Multisegment kS{Segment::of(1, 4), Segment::of(2, 5)};
const Multisegment kSp{Segment::of(-1, 2), Segment::of(0, 3)};

} // namespace

TEST_CASE("slice and concat") {
    CHECK(kS.slice(0, 1) == Multisegment{Segment::of(1, 4)});
    CHECK(concat(Multisegment{}, kS) == kS);
    CHECK(kS.slice(0, kS.length()) == kS);
    CHECK(kS.slice(1, 1).empty());
    CHECK_THROWS_AS(kS.slice(1, 3), std::out_of_range);
    CHECK(concat(kS, kSp).length() == 4);
}

TEST_CASE("ladder predicates") {
    Rank rk6(6);
    CHECK(kS.is_ladder());
    CHECK(kS.is_connected_ladder(rk6));
    CHECK_FALSE(Multisegment{Segment::of(0, 2), Segment::of(0, 3)}.is_ladder());
    // misaligned strictly-increasing endpoints are not a ladder
    CHECK_FALSE(Multisegment{Segment::of(0, 2), Segment(1, 5)}.is_ladder());
    CHECK(Multisegment{}.is_ladder());
    CHECK(Multisegment{Segment::of(0, 2)}.is_connected_ladder(rk6));

    // ladder condition is equivalent to the pairwise spar/supp gap
    // inequality, exhaustively over aligned triples in a window
    auto segs = window(0, 4, 6);
    auto gap_ok = [](Segment a, Segment b) {
        return aligned(a, b) && b.spar() - a.spar() > std::abs(b.supp() - a.supp());
    };
    for (const auto& a : segs) {
        for (const auto& b : segs) {
            if (!aligned(a, b)) continue;
            for (const auto& c : segs) {
                if (!aligned(a, c)) continue;
                Multisegment m{a, b, c};
                bool expect = gap_ok(a, b) && gap_ok(b, c) && gap_ok(a, c);
                CHECK(m.is_ladder() == expect);
            }
        }
    }
}

TEST_CASE("sub-ladders of a ladder") {
    std::mt19937 rng(20240517);
    auto segs = window(1, 5, 12);
    std::uniform_int_distribution<std::size_t> pick(0, segs.size() - 1);
    int built = 0;
    while (built < 200) {
        std::vector<Segment> entries;
        for (int k = 0; k < 5; ++k) entries.push_back(segs[pick(rng)]);
        std::sort(entries.begin(), entries.end(),
                  [](Segment a, Segment b) { return a.ti() < b.ti(); });
        Multisegment m(entries);
        if (!m.is_ladder()) continue;
        ++built;
        // random subsequence
        std::vector<Segment> sub;
        for (const auto& s : m)
            if (rng() & 1) sub.push_back(s);
        CHECK(Multisegment(sub).is_ladder());
    }
}

TEST_CASE("mcovers") {
    Rank rk6(6);
    CHECK(mcovers(kS, kSp, rk6));
    CHECK_FALSE(mcovers(kS, kS, rk6)); // irreflexive
    CHECK_THROWS_AS(mcovers(kS, Multisegment{Segment::of(0, 1)}, rk6), std::invalid_argument);

    // covering ladder pairs have ladder meets and joins (sampled, h <= 6)
    std::mt19937 rng(7);
    for (int n = 3; n <= 5; ++n) {
        Rank rk(n);
        auto segs = window(1, rk.h() - 1, 2 * rk.h());
        std::uniform_int_distribution<std::size_t> pick(0, segs.size() - 1);
        int found = 0;
        while (found < 100) {
            Segment s1 = segs[pick(rng)], s2 = segs[pick(rng)];
            Segment t1 = segs[pick(rng)], t2 = segs[pick(rng)];
            Multisegment a{s1, s2}, b{t1, t2};
            if (!a.is_ladder() || !b.is_ladder()) continue;
            if (!mcovers(a, b, rk)) continue;
            ++found;
            auto d = diamond(a, b, rk);
            CHECK(d.cap.is_ladder());
            CHECK(d.cup.is_ladder());
        }
    }
}

TEST_CASE("p_cover") {
    Rank rk6(6);
    CHECK(p_cover(kS, kSp, 1, rk6));
    CHECK(p_cover(kS, kSp, 0, rk6));
    CHECK_THROWS_AS(p_cover(kS, kSp, 2, rk6), std::invalid_argument);

    // p = 0 coincides with plain covering on random pairs
    std::mt19937 rng(11);
    Rank rk(4);
    auto segs = window(1, rk.h() - 1, 2 * rk.h());
    std::uniform_int_distribution<std::size_t> pick(0, segs.size() - 1);
    for (int t = 0; t < 2000; ++t) {
        Multisegment a{segs[pick(rng)], segs[pick(rng)]};
        Multisegment b{segs[pick(rng)], segs[pick(rng)]};
        CHECK(p_cover(a, b, 0, rk) == mcovers(a, b, rk));
    }
}

TEST_CASE("p_cover window reduction") {
    // p-cover holds iff it holds on every length-(p+1) window, checked
    // over ladder pairs drawn exhaustively from a small box at h = 6.
    Rank rk(5);
    std::vector<Segment> box;
    for (int ti = 0; ti <= 8; ti += 2)
        for (int tj = ti + 2; tj <= std::min(ti + 2 * rk.h(), 12); tj += 2)
            box.push_back(Segment(ti, tj));

    std::vector<Multisegment> ladders;
    for (const auto& a : box)
        for (const auto& b : box)
            for (const auto& c : box) {
                Multisegment m{a, b, c};
                if (m.is_ladder()) ladders.push_back(m);
            }

    std::mt19937 rng(23);
    std::uniform_int_distribution<std::size_t> pick(0, ladders.size() - 1);
    for (int t = 0; t < 20000; ++t) {
        const auto& a = ladders[pick(rng)];
        const auto& b = ladders[pick(rng)];
        for (int p = 0; p <= 2; ++p) {
            bool whole = p_cover(a, b, p, rk);
            bool windows = true;
            for (std::size_t k = 0; k + p + 1 <= a.length(); ++k) {
                if (!p_cover(a.slice(k, k + p + 1), b.slice(k, k + p + 1), p, rk)) {
                    windows = false;
                    break;
                }
            }
            CHECK(whole == windows);
        }
    }
}

TEST_CASE("diamond_k") {
    Rank rk6(6);
    auto d0 = diamond_k(kS, kSp, 0, rk6);
    CHECK(d0.cap == Multisegment{Segment::of(1, 2), Segment::of(2, 3)});
    CHECK(d0.cup == Multisegment{Segment::of(-1, 4), Segment::of(0, 5)});

    auto d1 = diamond_k(kS, kSp, 1, rk6);
    CHECK(d1.cap == Multisegment{Segment::of(1, 3)});
    CHECK(d1.cup == Multisegment{Segment::of(0, 4)});

    // length-1 diamond is the plain meet/join
    Multisegment a{Segment::of(0, 2)}, b{Segment::of(-1, 1)};
    auto d = diamond_k(a, b, 0, rk6);
    CHECK(d.cap == Multisegment{Segment::of(0, 1)});
    CHECK(d.cup == Multisegment{Segment::of(-1, 2)});

    CHECK_THROWS_AS(diamond_k(kSp, kS, 0, rk6), std::invalid_argument);
}

TEST_CASE("mcorners") {
    Rank rk6(6);
    auto c = mcorners(kS, kSp, rk6);
    CHECK(c.right == Multisegment{Segment::of(2, 4), Segment::of(3, 5)});
    CHECK(c.left == Multisegment{Segment::of(-1, 1), Segment::of(0, 2)});
    CHECK_THROWS_AS(mcorners(kSp, kS, rk6), std::invalid_argument);

    // corner outputs of covering ladder pairs are ladders (sampled)
    std::mt19937 rng(13);
    Rank rk(4);
    auto segs = window(1, rk.h() - 1, 2 * rk.h());
    std::uniform_int_distribution<std::size_t> pick(0, segs.size() - 1);
    int found = 0;
    while (found < 200) {
        Multisegment a{segs[pick(rng)], segs[pick(rng)]};
        Multisegment b{segs[pick(rng)], segs[pick(rng)]};
        if (!a.is_ladder() || !b.is_ladder() || !mcovers(a, b, rk)) continue;
        ++found;
        auto mc = mcorners(a, b, rk);
        CHECK(mc.right.is_ladder());
        CHECK(mc.left.is_ladder());
    }

    // single-entry case reduces to the segment-level corners
    auto one = mcorners(Multisegment{Segment::of(1, 4)}, Multisegment{Segment::of(0, 3)}, rk6);
    auto seg = corner_subintervals(Segment::of(0, 3), Segment::of(1, 4), rk6);
    CHECK(one.right[0] == seg.right);
    CHECK(one.left[0] == seg.left);
}

TEST_CASE("complete ladders: top covering forces the chain") {
    // For a ladder with s_l covering s_1, every consecutive pair covers.
    for (int n = 2; n <= 5; ++n) {
        Rank rk(n);
        auto segs = window(1, rk.h() - 1, 2 * rk.h());
        for (const auto& s1 : segs) {
            for (const auto& sl : segs) {
                if (!covers(sl, s1, rk)) continue;
                // middle entries live strictly inside the endpoints box
                std::vector<Segment> mids;
                for (int ti = s1.ti() + 2; ti < sl.ti(); ti += 2)
                    for (int tj = s1.tj() + 2; tj < sl.tj(); tj += 2)
                        if (ti <= tj) mids.push_back(Segment(ti, tj));
                // length 3
                for (const auto& m : mids) {
                    Multisegment lad{s1, m, sl};
                    if (!lad.is_ladder()) continue;
                    CHECK(lad.is_connected_ladder(rk));
                }
                // length 4
                for (const auto& m1 : mids) {
                    for (const auto& m2 : mids) {
                        Multisegment lad{s1, m1, m2, sl};
                        if (!lad.is_ladder()) continue;
                        CHECK(lad.is_connected_ladder(rk));
                    }
                }
            }
        }
    }
}

TEST_CASE("covering both entries of a ladder keeps meets and joins proper") {
    for (int n = 2; n <= 5; ++n) {
        Rank rk(n);
        auto segs = window(1, rk.h() - 1, 2 * rk.h());
        for (const auto& s1 : segs) {
            for (const auto& s2 : segs) {
                if (!Multisegment{s1, s2}.is_ladder()) continue;
                for (const auto& s : segs) {
                    if (!covers(s, s1, rk) || !covers(s, s2, rk)) continue;
                    auto mj = meet_join(s, s2);
                    CHECK(mj.cap->is_proper(rk));
                    CHECK(mj.cup->is_proper(rk));
                }
            }
        }
    }
}
