#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace pm {

// Particle positions inside a state tuple. Order is semantically
// significant everywhere: a neighborhood's tuple is folded in the order it
// was returned.
using IndexTuple = std::vector<std::size_t>;

// Left fold of a binary function h : A x B -> A over a tuple of B.
//
//   compose(h, a, ())            == a
//   compose(h, a, (b1, .., bn))  == compose(h, h(a, b1), (b2, .., bn))
template <class A, class BRange, class H>
A compose(H&& h, A a, const BRange& bs) {
    for (const auto& b : bs) {
        a = h(std::move(a), b);
    }
    return a;
}

// (a1, .., an) concatenated with (b1, .., bm).
template <class T>
std::vector<T> concat(std::vector<T> a, const std::vector<T>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Elements of `a` whose position satisfies pred(a, j), in ascending
// position order. pred sees the whole tuple, so conditions may relate an
// element to its context.
template <class T, class Pred>
std::vector<T> subtuple(const std::vector<T>& a, Pred&& pred) {
    std::vector<T> out;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (pred(a, j)) {
            out.push_back(a[j]);
        }
    }
    return out;
}

// Strictly ascending positions in [0, n) where pred holds.
template <class Pred>
IndexTuple index_tuple(std::size_t n, Pred&& pred) {
    IndexTuple out;
    for (std::size_t j = 0; j < n; ++j) {
        if (pred(j)) {
            out.push_back(j);
        }
    }
    return out;
}

} // namespace pm
