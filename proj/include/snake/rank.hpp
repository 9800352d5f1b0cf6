#pragma once

#include <stdexcept>

namespace snake {

/// Rank context for type A_N.  The Coxeter number h = N + 1 drives every
/// bound in the segment calculus, so it is the only derived quantity kept
/// here.
struct Rank {
    int n;

    explicit Rank(int n_) : n(n_) {
        if (n < 1) throw std::invalid_argument("rank must be >= 1");
    }

    int h() const { return n + 1; }

    friend bool operator==(Rank a, Rank b) { return a.n == b.n; }
    friend bool operator!=(Rank a, Rank b) { return a.n != b.n; }
};

} // namespace snake
