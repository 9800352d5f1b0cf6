#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "snake/lweight.hpp"
#include "snake/multisegment.hpp"
#include "snake/path_tuple.hpp"

namespace snake {

struct SnakeSupport {
    std::vector<LWeight> weights; // sorted, one entry per tuple (all distinct)
    long long dimension = 0;
    bool capped = false;
};

/// Full l-weight support of the snake module of a ladder, with the
/// thinness guarantee checked: the tuple-to-weight map must be injective,
/// otherwise the hypotheses are violated and we fail loudly.
inline SnakeSupport snake_support(const Multisegment& ms, Rank rk, long long cap = -1) {
    if (!ms.is_ladder()) throw std::invalid_argument("snake_support: not a ladder");
    SnakeSupport out;
    TupleStream st(ms, rk);
    while (auto t = st.next()) {
        if (cap >= 0 && out.dimension >= cap) {
            out.capped = true;
            break;
        }
        out.weights.push_back(tuple_weight(*t, rk));
        ++out.dimension;
    }
    std::sort(out.weights.begin(), out.weights.end());
    if (std::adjacent_find(out.weights.begin(), out.weights.end()) != out.weights.end())
        throw std::logic_error("snake_support: weight map not injective");
    return out;
}

/// Socle weight of a covering pair of ladders: the diamond weight.
inline LWeight socle_weight(const Multisegment& s, const Multisegment& sp, Rank rk) {
    if (!s.is_ladder() || !sp.is_ladder()) throw std::invalid_argument("socle_weight: ladders required");
    if (!mcovers(s, sp, rk)) throw std::invalid_argument("socle_weight: covering fails");
    return omega(diamond(s, sp, rk).joined(), rk);
}

struct PiChain {
    Multisegment s, sp;
    int p = 0;
    std::vector<LWeight> pis;    // pi_0 .. pi_p
    std::vector<LWeight> varpis; // varpi_0 .. varpi_p
    std::vector<bool> leq_top;   // pi_k <= pi_p in the l-root order
};

/// The chain pi_k = w_{sp(0,k)} varpi_k w_{s(l-k,l)} with
/// varpi_k the level-k diamond weight.
inline PiChain pi_chain(const Multisegment& s, const Multisegment& sp, int p, Rank rk) {
    if (!p_cover(s, sp, p, rk)) throw std::invalid_argument("pi_chain: p-cover fails");
    PiChain out;
    out.s = s;
    out.sp = sp;
    out.p = p;
    const auto l = s.length();
    for (int k = 0; k <= p; ++k) {
        LWeight varpi = omega(diamond_k(s, sp, k, rk).joined(), rk);
        LWeight pi = omega(sp.slice(0, k), rk) * varpi * omega(s.slice(l - k, l), rk);
        out.varpis.push_back(varpi);
        out.pis.push_back(std::move(pi));
    }
    for (int k = 0; k <= p; ++k) out.leq_top.push_back(leq(out.pis[k], out.pis[p], rk));
    return out;
}

struct HlwCensus {
    std::vector<LWeight> weights; // sorted distinct dominant weights <= pi_p
    long long enumerated = 0;     // tuples visited on the primary side
    bool capped = false;
};

/// Census of the dominant highest-weight candidates below pi_p.  A weight
/// qualifies when both character-level conditions of the Hom criterion
/// hold: it is w_s * w(f) for a path tuple f over sp, and the cofactor
/// w_sp * w^{-1} is the right-dualized weight of a path tuple over s.  The
/// one-sided form is strictly weaker: already on the rank-6 pinned pair it
/// admits a dominant weight below pi_1 that the dual side rejects.  The
/// census is exhaustive unless the enumeration cap is hit, which is
/// reported rather than silently truncated.
inline HlwCensus hlw_census(const Multisegment& s, const Multisegment& sp, int p, Rank rk,
                            long long cap = -1) {
    PiChain chain = pi_chain(s, sp, p, rk);
    const LWeight top = chain.pis[static_cast<std::size_t>(p)];
    const LWeight ws = omega(s, rk);
    const LWeight wsp = omega(sp, rk);
    HlwCensus out;

    std::unordered_set<LWeight, LWeightHash> dual_side;
    {
        long long seen = 0;
        TupleStream st(s, rk);
        while (auto g = st.next()) {
            if (cap >= 0 && seen >= cap) {
                out.capped = true;
                break;
            }
            ++seen;
            dual_side.insert(star_dual(tuple_weight(*g, rk), DualSide::right, rk));
        }
    }

    TupleStream st(sp, rk);
    while (auto f = st.next()) {
        if (cap >= 0 && out.enumerated >= cap) {
            out.capped = true;
            break;
        }
        ++out.enumerated;
        LWeight w = ws * tuple_weight(*f, rk);
        if (!w.dominant()) continue;
        if (!leq(w, top, rk)) continue;
        if (dual_side.find(wsp / w) == dual_side.end()) continue;
        out.weights.push_back(std::move(w));
    }
    std::sort(out.weights.begin(), out.weights.end());
    out.weights.erase(std::unique(out.weights.begin(), out.weights.end()), out.weights.end());
    return out;
}

struct SesData {
    bool reducible = false;
    std::optional<LWeight> kernel_weight;
};

/// Reducibility of V(w_{s_l}) (x) V(w_{s(0,l-1)}) and the kernel weight of
/// the resulting short exact sequence.
inline SesData snake_ses_data(const Multisegment& ms, Rank rk) {
    if (!ms.is_ladder()) throw std::invalid_argument("snake_ses_data: not a ladder");
    const auto l = ms.length();
    if (l < 2) throw std::invalid_argument("snake_ses_data: length must be >= 2");
    SesData out;
    if (!covers(ms[l - 1], ms[l - 2], rk)) return out;
    out.reducible = true;
    auto dia = diamond(Multisegment{ms[l - 1]}, Multisegment{ms[l - 2]}, rk);
    out.kernel_weight = omega(concat(ms.slice(0, l - 2), dia.joined()), rk);
    return out;
}

struct MultiplicityReport {
    LWeight target;
    long long count = 0;
    bool capped = false;
    // Per-factor weight factorizations, one row per counted occurrence;
    // filled only for two-factor queries when requested.
    std::optional<std::vector<std::vector<LWeight>>> witnesses;
};

namespace detail {

using WeightCounts = std::unordered_map<LWeight, long long, LWeightHash>;

inline WeightCounts support_counts(const Multisegment& ms, Rank rk) {
    WeightCounts out;
    TupleStream st(ms, rk);
    while (auto t = st.next()) ++out[tuple_weight(*t, rk)];
    return out;
}

// Weight multiset of a tensor product of snake modules, by pairwise merging.
inline WeightCounts product_counts(const std::vector<Multisegment>& factors, std::size_t lo,
                                   std::size_t hi, Rank rk) {
    if (hi - lo == 1) return support_counts(factors[lo], rk);
    const std::size_t mid = lo + (hi - lo) / 2;
    WeightCounts a = product_counts(factors, lo, mid, rk);
    WeightCounts b = product_counts(factors, mid, hi, rk);
    if (a.size() > b.size()) std::swap(a, b);
    WeightCounts out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) out[wa * wb] += ca * cb;
    return out;
}

} // namespace detail

/// Multiplicity of a target l-weight in a tensor product of snake modules.
/// Snake modules are thin, so the multiplicity equals the number of weight
/// factorizations; thinness is asserted per factor, not assumed.
inline MultiplicityReport tensor_multiplicity(const std::vector<Multisegment>& factors,
                                              const LWeight& target, Rank rk,
                                              bool want_witnesses = false) {
    if (factors.empty()) throw std::invalid_argument("tensor_multiplicity: no factors");
    for (const auto& f : factors) snake_support(f, rk); // asserts ladder + thinness
    MultiplicityReport out;
    out.target = target;
    if (factors.size() == 1) {
        auto counts = detail::support_counts(factors[0], rk);
        auto it = counts.find(target);
        out.count = it == counts.end() ? 0 : it->second;
        if (want_witnesses) {
            out.witnesses.emplace();
            if (out.count > 0) out.witnesses->push_back({target});
        }
        return out;
    }
    const std::size_t mid = factors.size() / 2;
    auto a = detail::product_counts(factors, 0, mid, rk);
    auto b = detail::product_counts(factors, mid, factors.size(), rk);
    if (a.size() > b.size()) std::swap(a, b);
    for (const auto& [wa, ca] : a) {
        auto it = b.find(target / wa);
        if (it != b.end()) out.count += ca * it->second;
    }
    if (want_witnesses && factors.size() == 2) {
        out.witnesses.emplace();
        auto lhs = detail::support_counts(factors[0], rk);
        auto rhs = detail::support_counts(factors[1], rk);
        for (const auto& [wa, ca] : lhs) {
            LWeight wb = target / wa;
            auto it = rhs.find(wb);
            if (it != rhs.end())
                for (long long c = 0; c < ca * it->second; ++c)
                    out.witnesses->push_back({wa, wb});
        }
    }
    return out;
}

enum class SearchOutcome { member, non_member, inconclusive };

struct WeylReport {
    SearchOutcome outcome = SearchOutcome::non_member;
    std::vector<LWeight> factor_weights; // aligned with the sorted factor order
    std::vector<Segment> factor_order;
    long long nodes_visited = 0;
};

namespace detail {

// (supp, spar) envelope of the generators that can occur in a path weight
// over P_s: spar in [spar(s), spar(s)+h], within distance d of p(0) and
// h-d of p(h).
inline bool in_factor_envelope(Segment gen, Segment factor, Rank rk) {
    if (!aligned(gen, factor)) return false;
    const int d = gen.supp();
    const int sp = gen.spar();
    const int base = factor.spar();
    const int h = rk.h();
    if (sp < base || sp > base + h) return false;
    if (std::abs(sp - (base + factor.supp())) > d) return false;
    if (std::abs(sp - (base + h - factor.supp())) > h - d) return false;
    return true;
}

} // namespace detail

/// Decides membership of a target in the l-weight support of a product of
/// fundamental modules (one per factor segment).
///
/// Witness mode verifies a claimed per-factor weight list exactly.  Search
/// mode runs a depth-first search over per-factor path weights, factors in
/// non-increasing spar order, pruning any branch whose residual contains a
/// generator outside every remaining factor envelope; it is budgeted and
/// reports an explicit inconclusive outcome when the budget runs out.
inline WeylReport weyl_membership(const LWeight& target, const Multisegment& factors, Rank rk,
                                  const std::vector<LWeight>* witness = nullptr,
                                  long long node_budget = 2'000'000) {
    WeylReport out;
    if (witness != nullptr) {
        if (witness->size() != factors.length())
            throw std::invalid_argument("weyl_membership: factor/witness length mismatch");
        LWeight prod = LWeight::one();
        for (std::size_t k = 0; k < factors.length(); ++k) {
            bool found = false;
            PathStream st(factors[k], rk);
            while (auto p = st.next()) {
                if (path_weight(*p, rk) == (*witness)[k]) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                out.outcome = SearchOutcome::non_member;
                return out;
            }
            prod = prod * (*witness)[k];
        }
        out.outcome = prod == target ? SearchOutcome::member : SearchOutcome::non_member;
        if (out.outcome == SearchOutcome::member) {
            out.factor_weights = *witness;
            out.factor_order = factors.entries();
        }
        return out;
    }

    std::vector<Segment> order = factors.entries();
    std::stable_sort(order.begin(), order.end(),
                     [](Segment a, Segment b) { return a.spar() > b.spar(); });
    out.factor_order = order;

    // Per-factor candidate weights, most dominant first.
    std::vector<std::vector<LWeight>> options;
    for (const auto& s : order) {
        std::vector<LWeight> ws;
        PathStream st(s, rk);
        while (auto p = st.next()) ws.push_back(path_weight(*p, rk));
        options.push_back(std::move(ws));
    }

    auto prunable = [&](const LWeight& residual, std::size_t from) {
        for (const auto& [gen, e] : residual.terms()) {
            bool covered = false;
            for (std::size_t k = from; k < order.size() && !covered; ++k)
                covered = detail::in_factor_envelope(gen, order[k], rk);
            if (!covered) return true;
        }
        return false;
    };

    std::vector<LWeight> chosen(order.size());
    bool budget_hit = false;
    std::function<bool(std::size_t, const LWeight&)> dfs = [&](std::size_t k,
                                                               const LWeight& residual) -> bool {
        if (++out.nodes_visited > node_budget) {
            budget_hit = true;
            return false;
        }
        if (k == order.size()) return residual.trivial();
        if (prunable(residual, k)) return false;
        for (const auto& w : options[k]) {
            chosen[k] = w;
            if (dfs(k + 1, residual / w)) return true;
            if (budget_hit) return false;
        }
        return false;
    };

    if (dfs(0, target)) {
        out.outcome = SearchOutcome::member;
        out.factor_weights = chosen;
    } else {
        out.outcome = budget_hit ? SearchOutcome::inconclusive : SearchOutcome::non_member;
    }
    return out;
}

} // namespace snake
