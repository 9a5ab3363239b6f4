#include <doctest.h>

#include <random>

#include "liegraph/linalg.hpp"

using namespace liegraph;

namespace {

Vec vec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Scalar(x));
    return v;
}

}  // namespace

TEST_CASE("scalar arithmetic in a quadratic field") {
    Scalar phi(Rat(1, 2), Rat(1, 2), 5);   // (1+sqrt5)/2
    Scalar theta(Rat(1, 2), Rat(-1, 2), 5);
    CHECK(phi * theta == Scalar(-1));      // product of the two roots of X^2-X-1
    CHECK(phi + theta == Scalar(1));
    CHECK(phi * phi == phi + Scalar(1));
    CHECK((phi / phi) == Scalar(1));
    CHECK(phi.inverse() * phi == Scalar(1));
    CHECK_THROWS_AS(Scalar(Rat(1), Rat(1), 5) + Scalar(Rat(1), Rat(1), 2), field_mismatch);
    // rational scalars combine with any context
    CHECK(Scalar(2) * Scalar(Rat(0), Rat(1), 2) == Scalar(Rat(0), Rat(2), 2));
}

TEST_CASE("scalar arithmetic round-trips on random values") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    for (int i = 0; i < 200; ++i) {
        Scalar a(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), 3);
        Scalar b(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), 3);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("field square roots") {
    CHECK(*rational_sqrt(Rat(49, 4)) == Rat(7, 2));
    CHECK_FALSE(rational_sqrt(Rat(2)));
    CHECK(*field_sqrt(Scalar(2), 2) == Scalar(Rat(0), Rat(1), 2));
    // sqrt(3 + 2*sqrt(2)) = 1 + sqrt(2)
    auto s = field_sqrt(Scalar(Rat(3), Rat(2), 2), 2);
    REQUIRE(s);
    CHECK(*s * *s == Scalar(Rat(3), Rat(2), 2));
    CHECK_FALSE(field_sqrt(Scalar(3), 2));
}

TEST_CASE("rref identity and dependent rows") {
    auto [r1, rank1] = rref(Mat::identity(3));
    CHECK(rank1 == 3);
    CHECK(r1 == Mat::identity(3));

    Mat m(std::vector<Vec>{vec({1, 2}), vec({2, 4})});
    auto [r2, rank2] = rref(m);
    CHECK(rank2 == 1);
    CHECK(r2.at(0, 0) == Scalar(1));
    CHECK(r2.at(0, 1) == Scalar(2));
    CHECK(r2.at(1, 0).is_zero());
    CHECK(r2.at(1, 1).is_zero());
}

TEST_CASE("rref is idempotent") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> entry(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        Mat m(4, 5);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 5; ++c) m.at(r, c) = Scalar(entry(rng));
        auto [r1, k1] = rref(m);
        auto [r2, k2] = rref(r1);
        CHECK(r1 == r2);
        CHECK(k1 == k2);
    }
}

TEST_CASE("kernel vectors satisfy m*v = 0") {
    Mat zero(2, 2);
    CHECK(kernel(zero).size() == 2);
    CHECK(kernel(Mat::identity(3)).empty());

    std::mt19937 rng(3);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        Mat m(3, 5);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 5; ++c) m.at(r, c) = Scalar(entry(rng));
        for (const auto& v : kernel(m)) CHECK(is_zero(m.apply(v)));
    }
}

TEST_CASE("proportionality convention") {
    CHECK(*proportional(vec({2, 4}), vec({1, 2})) == Scalar(2));
    CHECK_FALSE(proportional(vec({0, 0}), vec({1, 2})));
    CHECK(*proportional(vec({0, 0}), vec({0, 0})) == Scalar(1));
    // symmetric up to inversion
    auto k = proportional(vec({3, 6}), vec({2, 4}));
    auto kinv = proportional(vec({2, 4}), vec({3, 6}));
    REQUIRE(k);
    REQUIRE(kinv);
    CHECK(*k * *kinv == Scalar(1));
    // golden ratio vs conjugate: not proportional
    Vec u{Scalar(1), Scalar(Rat(1, 2), Rat(1, 2), 5)};
    Vec w{Scalar(1), Scalar(Rat(1, 2), Rat(-1, 2), 5)};
    CHECK_FALSE(proportional(u, w));
}

TEST_CASE("subspace lattice operations") {
    Vec e1 = vec({1, 0, 0}), e2 = vec({0, 1, 0}), e3 = vec({0, 0, 1});
    Subspace s12 = Subspace::span(3, {e1, e2});
    Subspace s23 = Subspace::span(3, {e2, e3});
    CHECK(s12.contains(vec({1, 1, 0})));
    CHECK_FALSE(s12.contains(e3));
    CHECK(intersection(s12, s23) == Subspace::span(3, {e2}));
    CHECK(sum(Subspace::span(3, {e1}), Subspace::span(3, {e2})).dim() == 2);
    CHECK(Subspace::span(3, {e1, vec({1, 1, 0}), e2}).dim() == 2);
    CHECK(in_span(vec({1, 1, 0}), {e1, e2}));
    CHECK_FALSE(in_span(vec({1, 1, 1}), {e1, e2}));
}
