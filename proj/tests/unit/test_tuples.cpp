#include <doctest.h>

#include <vector>

#include "pm/tuples.hpp"

#include "helpers.hpp"

using pm::compose;
using pm::concat;
using pm::index_tuple;
using pm::subtuple;

TEST_SUITE("tuples") {

TEST_CASE("compose folds left over the tuple") {
    const auto sub = [](int a, int b) { return a - b; };
    CHECK(compose(sub, 9, std::vector<int>{}) == 9);
    CHECK(compose(sub, 13, std::vector<int>{3, 4, 1}) == 5);

    const auto add = [](double a, double b) { return a + b; };
    for (double x : {-3.5, 0.0, 17.25}) {
        CHECK(compose(add, 0.0, std::vector<double>{x}) == x);
    }
}

TEST_CASE("compose split-fold equivalence") {
    const auto sub = [](long a, long b) { return a - b; };
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long> b(static_cast<std::size_t>(pmtest::uniform_int(0, 8)));
        std::vector<long> c(static_cast<std::size_t>(pmtest::uniform_int(0, 8)));
        for (auto& v : b) v = pmtest::uniform_int(-100, 100);
        for (auto& v : c) v = pmtest::uniform_int(-100, 100);
        const long a = pmtest::uniform_int(-1000, 1000);
        CHECK(compose(sub, a, concat(b, c)) == compose(sub, compose(sub, a, b), c));
    }
}

TEST_CASE("concat") {
    CHECK(concat<int>({1, 2}, {3}) == std::vector<int>({1, 2, 3}));
    const std::vector<int> b{4, 5, 6};
    CHECK(concat<int>({}, b) == b);
    CHECK(concat<int>(b, {}) == b);
    CHECK(concat<int>({1, 2}, {3, 4}).size() == 4);
}

TEST_CASE("subtuple keeps matching elements in order") {
    const std::vector<int> a{4, 1, 1, 5, 66, 3, 4, 30};
    const auto below5 =
        subtuple(a, [](const std::vector<int>& t, std::size_t j) { return t[j] < 5; });
    CHECK(below5 == std::vector<int>({4, 1, 1, 3, 4}));

    CHECK(subtuple(a, [](const std::vector<int>&, std::size_t) { return false; }).empty());
    CHECK(subtuple(a, [](const std::vector<int>&, std::size_t) { return true; }) == a);
}

TEST_CASE("index_tuple yields ascending matching positions") {
    CHECK(index_tuple(3, [](std::size_t j) { return j == 1; }) == pm::IndexTuple{1});
    CHECK(index_tuple(0, [](std::size_t) { return true; }).empty());
    CHECK(index_tuple(5, [](std::size_t j) { return j % 2 == 0; }) == pm::IndexTuple{0, 2, 4});

    for (int trial = 0; trial < 50; ++trial) {
        const auto n = static_cast<std::size_t>(pmtest::uniform_int(0, 40));
        const auto mask = static_cast<std::uint64_t>(pmtest::uniform_int(0, (1LL << 40) - 1));
        const auto out = index_tuple(n, [&](std::size_t j) { return ((mask >> j) & 1U) != 0; });
        for (std::size_t i = 1; i < out.size(); ++i) {
            CHECK(out[i - 1] < out[i]);
        }
        for (std::size_t j : out) {
            CHECK(((mask >> j) & 1U) == 1U);
        }
    }
}

} // TEST_SUITE
