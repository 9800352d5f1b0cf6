#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "snake/multisegment.hpp"
#include "snake/path.hpp"

namespace snake {

using PathTuple = std::vector<Path>;

inline bool pointwise_below(const Path& a, const Path& b) {
    for (int k = 0; k <= a.h(); ++k)
        if (a(k) >= b(k)) return false;
    return true;
}

/// Non-crossing condition: p_m(k) < p_n(k) for all k and m < n.  Strict
/// pointwise order is transitive, so consecutive comparisons suffice.
inline bool tuple_member_pointwise(const PathTuple& ps, const Multisegment& ms, Rank rk) {
    if (ps.size() != ms.length()) throw std::invalid_argument("tuple shape mismatch");
    for (std::size_t k = 0; k < ps.size(); ++k)
        if (!in_path_set(ps[k], ms[k], rk)) return false;
    for (std::size_t k = 0; k + 1 < ps.size(); ++k)
        if (!pointwise_below(ps[k], ps[k + 1])) return false;
    return true;
}

/// The corner criterion for consecutive paths: the next path must clear the
/// current one at every local maximum.  For ladders this is equivalent to
/// the pointwise condition.
inline bool clears_lower_corners(const Path& a, const Path& b) {
    for (int k = 1; k < a.h(); ++k)
        if (a(k - 1) == a(k) - 1 && a(k + 1) == a(k) - 1 && b(k) <= a(k)) return false;
    return true;
}

inline bool tuple_member_corners(const PathTuple& ps, const Multisegment& ms, Rank rk) {
    if (ps.size() != ms.length()) throw std::invalid_argument("tuple shape mismatch");
    for (std::size_t k = 0; k < ps.size(); ++k)
        if (!in_path_set(ps[k], ms[k], rk)) return false;
    for (std::size_t k = 0; k + 1 < ps.size(); ++k)
        if (!clears_lower_corners(ps[k], ps[k + 1])) return false;
    return true;
}

/// Backtracking enumeration of the non-crossing tuples over a multisegment.
/// Branches are pruned on the consecutive condition as soon as a path is
/// appended, so memory stays at one path stream per level.  For ladders the
/// cheap corner criterion is used; otherwise the full pointwise check.
class TupleStream {
    const Multisegment ms_;
    Rank rk_;
    bool use_corners_;
    std::vector<PathStream> streams_;
    PathTuple current_;
    bool done_ = false;

    bool admissible(std::size_t level) const {
        if (level == 0) return true;
        return use_corners_ ? clears_lower_corners(current_[level - 1], current_[level])
                            : pointwise_below(current_[level - 1], current_[level]);
    }

    // Advances the deepest level; on exhaustion pops up.  Returns false when
    // the whole space is exhausted.
    bool advance(std::size_t level) {
        while (true) {
            auto p = streams_[level].next();
            if (!p) {
                if (level == 0) return false;
                if (!advance(level - 1)) return false;
                streams_[level] = PathStream(ms_[level], rk_);
                continue;
            }
            current_[level] = std::move(*p);
            if (admissible(level)) return true;
        }
    }

public:
    TupleStream(const Multisegment& ms, Rank rk)
        : ms_(ms), rk_(rk), use_corners_(ms.is_ladder()) {
        current_.resize(ms.length());
        for (std::size_t k = 0; k < ms.length(); ++k) streams_.emplace_back(ms[k], rk);
    }

    std::optional<PathTuple> next() {
        if (done_) return std::nullopt;
        if (ms_.empty()) { // single empty tuple
            done_ = true;
            return PathTuple{};
        }
        std::size_t level = current_[0].values.empty() ? 0 : ms_.length() - 1;
        if (level == 0) {
            // first call: fill all levels from the left
            for (std::size_t k = 0; k < ms_.length(); ++k) {
                if (!advance(k)) {
                    done_ = true;
                    return std::nullopt;
                }
            }
            return current_;
        }
        if (!advance(level)) {
            done_ = true;
            return std::nullopt;
        }
        return current_;
    }
};

inline std::vector<PathTuple> enumerate_tuples(const Multisegment& ms, Rank rk) {
    std::vector<PathTuple> out;
    TupleStream st(ms, rk);
    while (auto t = st.next()) out.push_back(std::move(*t));
    return out;
}

inline long long tuple_count(const Multisegment& ms, Rank rk) {
    long long c = 0;
    TupleStream st(ms, rk);
    while (st.next()) ++c;
    return c;
}

/// Weight of a tuple: product of the member path weights.
inline LWeight tuple_weight(const PathTuple& ps, Rank rk) {
    LWeight w = LWeight::one();
    for (const auto& p : ps) w = w * path_weight(p, rk);
    return w;
}

} // namespace snake
