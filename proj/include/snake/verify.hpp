#pragma once

// Bundled verification suites: every closed formula and corner lemma the
// library relies on, re-checked against brute-force enumeration over a
// guarded window.  Used by both the CLI `verify` verb and the acceptance
// runner.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "snake/census.hpp"
#include "snake/characters.hpp"
#include "snake/io.hpp"

namespace snake {

struct Check {
    std::string claim;
    std::string status; // pass | fail | inconclusive
    nlohmann::json detail;
};

struct Suite {
    std::vector<Check> checks;

    void result(const std::string& claim, bool ok, nlohmann::json counterexample) {
        checks.push_back(
            {claim, ok ? "pass" : "fail", ok ? nlohmann::json() : std::move(counterexample)});
    }
    void inconclusive(const std::string& claim, nlohmann::json why) {
        checks.push_back({claim, "inconclusive", std::move(why)});
    }
    bool any_fail() const {
        for (const auto& c : checks)
            if (c.status == "fail") return true;
        return false;
    }
    bool any_inconclusive() const {
        for (const auto& c : checks)
            if (c.status == "inconclusive") return true;
        return false;
    }
};

inline int env_thread_count() {
    if (const char* env = std::getenv("SNAKE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1 && v <= 256) return v;
    }
    return 1;
}

/// Ordered parallel sweep: applies fn to every index and merges per-index
/// outputs back in index order, so results do not depend on the thread
/// count.
template <typename Fn>
std::vector<nlohmann::json> parallel_sweep(std::size_t count, Fn&& fn) {
    using nlohmann::json;
    const int threads = static_cast<int>(std::min<std::size_t>(
        static_cast<std::size_t>(env_thread_count()), std::max<std::size_t>(count, 1)));
    std::vector<std::vector<json>> parts(static_cast<std::size_t>(threads));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            auto r = fn(i);
            if (r) parts[0].push_back(std::move(*r));
        }
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t]() {
                for (std::size_t i = static_cast<std::size_t>(t); i < count;
                     i += static_cast<std::size_t>(threads)) {
                    auto r = fn(i);
                    if (r) parts[static_cast<std::size_t>(t)].push_back(std::move(*r));
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    std::vector<json> out;
    for (auto& p : parts)
        for (auto& j : p) out.push_back(std::move(j));
    std::sort(out.begin(), out.end(), [](const json& a, const json& b) {
        return a.value("index", 0) < b.value("index", 0);
    });
    return out;
}

namespace verify_detail {

inline std::vector<Segment> proper_window(Rank rk, int spar_bound) {
    std::vector<Segment> out;
    for (int d = 1; d < rk.h(); ++d)
        for (int sp = -spar_bound; sp <= spar_bound; ++sp)
            out.push_back(Segment(sp - d, sp + d));
    return out;
}

} // namespace verify_detail

/// Corner lemma checks: exhaustive over a spar window of width 4h.
inline void suite_lemmas(Suite& out, Rank rk) {
    using nlohmann::json;
    if (rk.n > 6) {
        out.inconclusive("corner-lemmas", json{{"reason", "rank above the exhaustion guard"}});
        return;
    }
    const int h = rk.h();
    const int bound = 2 * h;
    auto props = verify_detail::proper_window(rk, bound);
    std::vector<Segment> alls;
    for (int d = 0; d <= h; ++d)
        for (int sp = -bound; sp <= bound; ++sp) alls.push_back(Segment(sp - d, sp + d));

    {
        bool ok = true;
        json cx;
        for (const auto& s2 : props) {
            std::set<Segment> lower;
            PathStream st(s2, rk);
            while (auto p = st.next()) {
                auto c = corners(*p);
                lower.insert(c.cminus.begin(), c.cminus.end());
            }
            for (const auto& s1 : alls) {
                if ((lower.count(s1) == 1) != covers(s1, s2, rk)) {
                    ok = false;
                    cx = json{{"s1", s1}, {"s2", s2}};
                }
            }
        }
        out.result("lower-corner-set-is-covering-set", ok, cx);
    }

    {
        bool ok = true;
        json cx;
        for (const auto& s : props) {
            std::set<Segment> upper;
            PathStream st(s, rk);
            while (auto p = st.next()) {
                auto c = corners(*p);
                upper.insert(c.cplus.begin(), c.cplus.end());
            }
            for (const auto& cand : alls) {
                if ((upper.count(cand) == 1) != in_upper_corner_set(cand, s, rk)) {
                    ok = false;
                    cx = json{{"s", s}, {"candidate", cand}};
                }
            }
        }
        out.result("upper-corner-set-is-corner-box", ok, cx);
    }

    {
        bool ok = true;
        json cx;
        for (const auto& s : props) {
            for (const auto& s1 : props) {
                if (!covers(s1, s, rk)) continue;
                Path expect = peak_path(s, s1, rk);
                int hits = 0;
                bool match = true;
                PathStream st(s, rk);
                while (auto q = st.next())
                    if (corners(*q).cminus == std::vector<Segment>{s1}) {
                        ++hits;
                        match = match && *q == expect;
                    }
                if (hits != 1 || !match) {
                    ok = false;
                    cx = json{{"s", s}, {"s1", s1}};
                }
            }
        }
        out.result("peak-path-uniqueness", ok, cx);
    }

    {
        bool ok = true;
        json cx;
        for (const auto& s1 : props) {
            for (const auto& s2 : alls) {
                if (!in_upper_corner_set(s2, s1, rk)) continue;
                Path expect = valley_path(s1, s2, rk);
                int hits = 0;
                bool match = true;
                PathStream st(s1, rk);
                while (auto q = st.next())
                    if (corners(*q).cplus == std::vector<Segment>{s2}) {
                        ++hits;
                        match = match && *q == expect;
                    }
                Segment star = s1.left_dual(rk);
                auto mj = meet_join(s2, star);
                std::vector<Segment> want;
                if (mj.cap && mj.cap->is_proper(rk)) want.push_back(*mj.cap);
                if (mj.cup && mj.cup->is_proper(rk)) want.push_back(*mj.cup);
                std::sort(want.begin(), want.end());
                auto got = corners(expect).cminus;
                std::sort(got.begin(), got.end());
                if (hits != 1 || !match || got != want) {
                    ok = false;
                    cx = json{{"s1", s1}, {"s2", s2}};
                }
            }
        }
        out.result("valley-path-uniqueness-and-corners", ok, cx);
    }

    {
        bool ok = true;
        json cx;
        for (const auto& s : props) {
            PathStream st(s, rk);
            while (auto p = st.next()) {
                auto c = corners(*p);
                for (const auto& sp : c.cminus) {
                    if (sp == s.left_dual(rk)) continue;
                    bool found = false;
                    for (const auto& su : c.cplus)
                        if (sp.spar() - su.spar() == std::abs(su.supp() - sp.supp()))
                            found = true;
                    if (!found) {
                        ok = false;
                        cx = json{{"s", s}, {"path", *p}, {"corner", sp}};
                    }
                }
            }
        }
        out.result("descent-reaches-upper-corner", ok, cx);
    }

    {
        bool ok = true;
        json cx;
        for (const auto& s0 : props) {
            PathStream st(s0, rk);
            while (auto p = st.next()) {
                auto c = corners(*p);
                for (const auto& s : alls) {
                    if (!aligned(s, s0)) continue;
                    bool is_corner = std::count(c.cplus.begin(), c.cplus.end(), s) ||
                                     std::count(c.cminus.begin(), c.cminus.end(), s);
                    if (is_corner) continue;
                    const int d = s.supp();
                    if ((*p)(d) > s.spar()) continue;
                    if (!((*p)(d) - d < (*p)(0))) continue;
                    if (!((*p)(d) - (h - d) < (*p)(h))) continue;
                    bool found = false;
                    for (const auto& su : c.cplus)
                        if (su.spar() < s.spar()) found = true;
                    if (!found) {
                        ok = false;
                        cx = json{{"s0", s0}, {"path", *p}, {"s", s}};
                    }
                }
            }
        }
        out.result("smaller-spar-upper-corner-exists", ok, cx);
    }

    {
        bool ok = true;
        json cx;
        for (const auto& s : props) {
            for (const auto& sp : props) {
                if (!covers(s, sp, rk)) continue;
                Segment dsp = sp.left_dual(rk), ds = s.left_dual(rk);
                if (!(lowest_path(s, rk)(dsp.supp()) >= dsp.spar() + 2) ||
                    !(lowest_path(sp, rk)(ds.supp()) <= ds.spar() - 2)) {
                    ok = false;
                    cx = json{{"s", s}, {"sp", sp}};
                }
            }
        }
        out.result("lowest-path-separation-at-duals", ok, cx);
    }

    {
        bool ok_anti = true, ok_conn = true;
        json cx_anti, cx_conn;
        for (const auto& s : props) {
            PathStream st(s, rk);
            while (auto p = st.next()) {
                auto c = corners(*p);
                auto scan = [&](const std::vector<Segment>& cls) {
                    for (std::size_t a = 0; a < cls.size(); ++a)
                        for (std::size_t b = a + 1; b < cls.size(); ++b)
                            if (std::abs(cls[a].spar() - cls[b].spar()) >
                                std::abs(cls[a].supp() - cls[b].supp())) {
                                ok_anti = false;
                                cx_anti = json{{"s", s}, {"path", *p}};
                            }
                };
                scan(c.cplus);
                scan(c.cminus);
                std::vector<Segment> all(c.cplus);
                all.insert(all.end(), c.cminus.begin(), c.cminus.end());
                for (std::size_t a = 0; a < all.size(); ++a)
                    for (std::size_t b = a + 1; b < all.size(); ++b)
                        if (connected(all[a], all[b], rk)) {
                            ok_conn = false;
                            cx_conn = json{{"s", s}, {"path", *p}};
                        }
            }
        }
        out.result("corner-classes-are-ladder-antichains", ok_anti, cx_anti);
        out.result("corners-of-one-path-never-connected", ok_conn, cx_conn);
    }
}

/// Census formula checks: exhaustive over all seeds up to shift.
inline void suite_formulas(Suite& out, Rank rk) {
    using nlohmann::json;
    if (rk.n > 7) {
        out.inconclusive("census-formulas", json{{"reason", "rank above the exhaustion guard"}});
        return;
    }

    {
        bool ok = true, ok1 = true;
        json cx, cx1;
        for (int d = 1; d < rk.h(); ++d) {
            for (int tpar : {0, 1}) {
                Segment s(tpar, tpar + 2 * d);
                auto sets = covered_sets(s, rk);
                if (static_cast<long long>(sets.c.size()) != covered_count_formula(s, rk)) {
                    ok = false;
                    cx = json{{"s", s}};
                }
                if (static_cast<long long>(sets.c1.size()) != covered_count1_formula(s, rk)) {
                    ok1 = false;
                    cx1 = json{{"s", s}};
                }
            }
        }
        out.result("covered-count-is-supp-product", ok, cx);
        out.result("gap2-count-is-shifted-supp-product", ok1, cx1);
    }

    {
        std::vector<std::pair<Segment, Segment>> seeds;
        for (int d = 1; d < rk.h(); ++d) {
            for (int tpar : {0, 1}) {
                Segment s1(tpar, tpar + 2 * d);
                for (const auto& s1p : covered_sets(s1, rk).c) seeds.emplace_back(s1, s1p);
            }
        }
        auto failures = parallel_sweep(seeds.size(), [&](std::size_t i) -> std::optional<json> {
            const auto& [s1, s1p] = seeds[i];
            try {
                c1_pairs(s1, s1p, rk); // throws on formula/enumeration mismatch
                return std::nullopt;
            } catch (const std::exception& e) {
                return json{{"index", static_cast<int>(i)},
                            {"s1", s1},
                            {"s1p", s1p},
                            {"error", e.what()}};
            }
        });
        out.result("c1-completion-count-closed-form", failures.empty(),
                   failures.empty() ? json() : failures.front());
    }

    {
        bool ok = true;
        json cx;
        for (int d = (rk.h() + 1) / 2; d < rk.h(); ++d) {
            for (int tpar : {0, 1}) {
                Segment s1(tpar, tpar + 2 * d);
                if (2 * s1.supp() < rk.h()) continue;
                try {
                    d2_census(s1, rk);
                } catch (const std::exception& e) {
                    ok = false;
                    cx = json{{"s1", s1}, {"error", e.what()}};
                }
            }
        }
        out.result("dual-family-count", ok, cx);
    }
}

/// The three pinned instances.
inline void suite_examples(Suite& out) {
    using nlohmann::json;

    // pinned instance 1: the rank-6 covering pair
    {
        Rank rk(6);
        Multisegment s{Segment::of(1, 4), Segment::of(2, 5)};
        Multisegment sp{Segment::of(-1, 2), Segment::of(0, 3)};
        LWeight pi0 = omega(Multisegment{Segment::of(-1, 4), Segment::of(1, 2),
                                         Segment::of(0, 5), Segment::of(2, 3)},
                            rk);
        LWeight pi1 = omega(Multisegment{Segment::of(-1, 2), Segment::of(1, 3),
                                         Segment::of(0, 4), Segment::of(2, 5)},
                            rk);
        auto chain = pi_chain(s, sp, 1, rk);
        bool ok = chain.pis[0] == pi0 && chain.pis[1] == pi1;
        auto census = hlw_census(s, sp, 1, rk);
        std::vector<LWeight> expect{pi0, pi1};
        std::sort(expect.begin(), expect.end());
        ok = ok && census.weights == expect && !census.capped;
        ok = ok && tensor_multiplicity({s, sp}, pi0, rk).count == 1;
        ok = ok && tensor_multiplicity({s, sp, s, sp}, pi0 * pi0, rk).count == 1;
        ok = ok && !condition_flags(s, sp, rk).almostdual;

        LWeight target = star_dual(pi1, DualSide::left, rk).inverse() * pi1;
        Multisegment factors{Segment::of(-1, 4), Segment::of(1, 2), Segment::of(0, 5),
                             Segment::of(2, 3),  Segment::of(-1, 2), Segment::of(1, 3),
                             Segment::of(0, 4),  Segment::of(2, 5)};
        auto w = [](std::initializer_list<std::pair<Segment, long long>> terms) {
            std::vector<LWeight::Entry> v(terms.begin(), terms.end());
            return LWeight::from_terms(std::move(v));
        };
        std::vector<LWeight> witness{
            w({{Segment::of(0, 4), 1}, {Segment::of(0, 6), -1}}),
            w({{Segment::of(2, 3), -1}, {Segment::of(1, 3), 1}}),
            w({{Segment::of(2, 6), -1}, {Segment::of(2, 5), 1}, {Segment::of(0, 6), 1}}),
            w({{Segment::of(2, 3), 1}}),
            w({{Segment::of(-1, 2), 1}}),
            w({{Segment::of(3, 8), -1}}),
            w({{Segment::of(4, 7), -1}}),
            w({{Segment::of(5, 9), -1}}),
        };
        ok = ok &&
             weyl_membership(target, factors, rk, &witness).outcome == SearchOutcome::member;
        out.result("rank6-chain-census-multiplicity-witness", ok,
                   ok ? json() : json{{"s", s}, {"sp", sp}});
    }

    // pinned instance 2: exactly five rank-4 completions of the long seed
    {
        Rank rk(4);
        Segment s1 = Segment::of(0, 3);
        long long total = 0;
        for (const auto& s1p : covered_sets(s1, rk).c1)
            total += c1_pairs(s1, s1p, rk).count_enumerated;
        out.result("rank4-five-completions", total == 5, json{{"total", total}});
    }

    // pinned instance 3: the h = 4 forced dual configuration
    {
        Rank rk(3);
        bool ok = true;
        json cx;
        for (int d = 1; d < rk.h(); ++d) {
            Segment s1 = Segment::of(0, d);
            for (const auto& s1p : covered_sets(s1, rk).c) {
                auto rec = c1_pairs(s1, s1p, rk);
                if (rec.count_enumerated == 0) continue;
                bool forced = s1.supp() == 2 && s1p == s1.right_dual(rk) &&
                              rec.count_enumerated == 1 &&
                              rec.pairs[0].first == s1.shifted(1) &&
                              rec.pairs[0].second == s1p.shifted(1) && rec.flags[0].kr;
                if (!forced) {
                    ok = false;
                    cx = json{{"s1", s1}, {"s1p", s1p}};
                }
            }
        }
        out.result("h4-forced-dual-configuration", ok, cx);
    }
}

} // namespace snake
