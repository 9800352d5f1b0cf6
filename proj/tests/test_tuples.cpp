#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "snake/path_tuple.hpp"

using namespace snake;

namespace {

std::vector<Segment> proper_window(Rank rk, int spar_bound) {
    std::vector<Segment> out;
    for (int d = 1; d < rk.h(); ++d)
        for (int sp = -spar_bound; sp <= spar_bound; ++sp)
            out.push_back(Segment(sp - d, sp + d));
    return out;
}

std::vector<Multisegment> length2_ladders(Rank rk, int spar_bound) {
    std::vector<Multisegment> out;
    auto segs = proper_window(rk, spar_bound);
    for (const auto& a : segs)
        for (const auto& b : segs) {
            Multisegment m{a, b};
            if (m.is_ladder()) out.push_back(m);
        }
    return out;
}

} // namespace

TEST_CASE("tuple stream basics") {
    Rank rk4(4);
    Multisegment one{Segment::of(0, 2)};
    CHECK(tuple_count(one, rk4) == path_count(Segment::of(0, 2), rk4));

    // empty multisegment has exactly the empty tuple
    TupleStream st(Multisegment{}, rk4);
    auto t = st.next();
    REQUIRE(t.has_value());
    CHECK(t->empty());
    CHECK_FALSE(st.next().has_value());

    // every streamed tuple is a member, and members are exactly the
    // pointwise-admissible elements of the product
    Multisegment lad{Segment::of(0, 2), Segment::of(1, 3)};
    auto tuples = enumerate_tuples(lad, rk4);
    std::set<PathTuple> seen(tuples.begin(), tuples.end());
    CHECK(seen.size() == tuples.size());
    long long direct = 0;
    for (const auto& p0 : enumerate_paths(lad[0], rk4)) {
        for (const auto& p1 : enumerate_paths(lad[1], rk4)) {
            PathTuple t2{p0, p1};
            bool member = tuple_member_pointwise(t2, lad, rk4);
            if (member) ++direct;
            CHECK(member == (seen.count(t2) == 1));
        }
    }
    CHECK(direct == static_cast<long long>(tuples.size()));
}

TEST_CASE("pointwise and corner criteria agree on length-2 ladders at h=5") {
    Rank rk(4);
    for (const auto& lad : length2_ladders(rk, 6)) {
        for (const auto& p0 : enumerate_paths(lad[0], rk)) {
            for (const auto& p1 : enumerate_paths(lad[1], rk)) {
                PathTuple t{p0, p1};
                CHECK(tuple_member_pointwise(t, lad, rk) == tuple_member_corners(t, lad, rk));
            }
        }
    }
}

TEST_CASE("peak-path tuples of covering pairs are members") {
    std::mt19937 rng(31);
    for (int n = 2; n <= 5; ++n) {
        Rank rk(n);
        auto segs = proper_window(rk, 2 * rk.h());
        std::uniform_int_distribution<std::size_t> pick(0, segs.size() - 1);
        int found = 0;
        while (found < 150) {
            Multisegment s{segs[pick(rng)], segs[pick(rng)]};
            Multisegment sp{segs[pick(rng)], segs[pick(rng)]};
            if (!s.is_ladder() || !sp.is_ladder()) continue;
            if (!mcovers(s, sp, rk)) continue;
            ++found;
            PathTuple peaks;
            for (std::size_t k = 0; k < s.length(); ++k)
                peaks.push_back(peak_path(sp[k], s[k], rk));
            CHECK(tuple_member_pointwise(peaks, sp, rk));
        }
    }
}

TEST_CASE("negative membership patterns") {
    // (a) a peak path followed by the highest path of the next entry, when
    // the peak's corner sits too close in spar to the next entry
    // (b) two peak paths whose corner segments form a ladder in reverse
    Rank rk(5); // h = 6
    auto segs = proper_window(rk, 8);
    int hits_a = 0, hits_b = 0;
    for (const auto& s1 : segs) {
        for (const auto& s2 : segs) {
            if (!Multisegment{s1, s2}.is_ladder()) continue;
            for (const auto& s : segs) {
                if (covers(s, s1, rk) &&
                    s.spar() - s2.spar() >= std::abs(s.supp() - s2.supp())) {
                    PathTuple t{peak_path(s1, s, rk), highest_path(s2, rk)};
                    CHECK_FALSE(tuple_member_pointwise(t, Multisegment{s1, s2}, rk));
                    ++hits_a;
                }
                for (const auto& sp : segs) {
                    if (!Multisegment{s, sp}.is_ladder()) continue;
                    if (covers(sp, s1, rk) && covers(s, s2, rk)) {
                        PathTuple t{peak_path(s1, sp, rk), peak_path(s2, s, rk)};
                        CHECK_FALSE(tuple_member_pointwise(t, Multisegment{s1, s2}, rk));
                        ++hits_b;
                    }
                }
            }
        }
    }
    CHECK(hits_a > 0);
    CHECK(hits_b > 0);
}

TEST_CASE("slices and padding of members") {
    Rank rk(4);
    std::mt19937 rng(77);
    auto segs = proper_window(rk, 6);
    std::uniform_int_distribution<std::size_t> pick(0, segs.size() - 1);
    int found = 0;
    while (found < 40) {
        Multisegment lad{segs[pick(rng)], segs[pick(rng)], segs[pick(rng)]};
        if (!lad.is_ladder()) continue;
        auto tuples = enumerate_tuples(lad, rk);
        if (tuples.empty()) continue;
        ++found;
        for (std::size_t t = 0; t < std::min<std::size_t>(tuples.size(), 10); ++t) {
            const auto& tup = tuples[t];
            // every contiguous slice is a member over the sliced ladder
            for (std::size_t m = 0; m < 3; ++m) {
                for (std::size_t n2 = m + 1; n2 <= 3; ++n2) {
                    PathTuple sub(tup.begin() + m, tup.begin() + n2);
                    CHECK(tuple_member_pointwise(sub, lad.slice(m, n2), rk));
                }
            }
        }
        // padding the middle slice with highest paths below and lowest above
        PathTuple mid{tuples[0][1]};
        CHECK(tuple_member_pointwise(mid, lad.slice(1, 2), rk));
        PathTuple padded{highest_path(lad[0], rk), tuples[0][1], lowest_path(lad[2], rk)};
        CHECK(tuple_member_pointwise(padded, lad, rk));
    }
}

TEST_CASE("tuple weights multiply over entries") {
    Rank rk(4);
    Multisegment lad{Segment::of(0, 2), Segment::of(1, 3)};
    auto tuples = enumerate_tuples(lad, rk);
    for (const auto& t : tuples)
        CHECK(tuple_weight(t, rk) == path_weight(t[0], rk) * path_weight(t[1], rk));

    // tuple of highest paths carries the full generator product
    PathTuple highs{highest_path(lad[0], rk), highest_path(lad[1], rk)};
    REQUIRE(tuple_member_pointwise(highs, lad, rk));
    CHECK(tuple_weight(highs, rk) == omega(lad, rk));
}

TEST_CASE("reduced-word discipline: exponents stay within one") {
    Rank rk(4);
    for (const auto& lad : length2_ladders(rk, 5)) {
        TupleStream st(lad, rk);
        while (auto t = st.next()) {
            LWeight w = tuple_weight(*t, rk);
            for (const auto& [s, e] : w.terms()) CHECK((e == 1 || e == -1));
        }
    }
}
