#include <doctest.h>

#include <random>

#include "tamelat/exact_linalg.hpp"

using namespace tamelat;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = dist(rng);
        }
    }
    return m;
}

// Product of random elementary column operations.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<long> factor(-3, 3);
    for (int step = 0; step < 12; ++step) {
        const std::size_t i = pick(rng), j = pick(rng);
        if (i == j) {
            continue;
        }
        const long f = factor(rng);
        for (std::size_t row = 0; row < n; ++row) {
            u(row, j) += f * u(row, i);
        }
    }
    return u;
}

}  // namespace

TEST_CASE("matrix construction rejects empty and ragged shapes") {
    CHECK_THROWS_AS(IntMatrix(0, 3), DimensionError);
    CHECK_THROWS_AS((IntMatrix{{1, 2}, {3}}), DimensionError);
    CHECK_THROWS_AS(IntMatrix::from_columns({{1, 2}, {3}}), DimensionError);
}

TEST_CASE("determinant examples") {
    CHECK(det_exact(IntMatrix::identity(4)) == 1);
    const IntMatrix tame_phi{{2, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 2, 1}, {1, 1, 1, 2}};
    CHECK(det_exact(tame_phi) == 5);
    CHECK(det_exact(Integer(2) * IntMatrix::identity(4)) == 16);
    CHECK(det_exact(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(det_exact(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const IntMatrix m = random_matrix(rng, n, n, 9);
        const IntMatrix u = random_matrix(rng, n, n, 9);
        CHECK(det_exact(m * u) == det_exact(m) * det_exact(u));
    }
}

TEST_CASE("hnf examples and convention") {
    CHECK(hnf(IntMatrix::identity(3)) == IntMatrix::identity(3));
    const IntMatrix d2 = IntMatrix::from_columns({{0, 2}, {1, 1}});
    CHECK(hnf(d2) == (IntMatrix{{1, 0}, {1, 2}}));
    CHECK(hnf(IntMatrix{{2, 0}, {0, 2}}) == (IntMatrix{{2, 0}, {0, 2}}));
    CHECK_THROWS_AS(hnf(IntMatrix{{1, 2}, {2, 4}}), RankError);
}

TEST_CASE("hnf is canonical, idempotent and preserves the lattice") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 6;
        IntMatrix m = random_matrix(rng, n, n, 7);
        if (det_exact(m) == 0) {
            continue;
        }
        const IntMatrix h = hnf(m);
        CHECK(hnf(h) == h);
        CHECK(abs(det_exact(h)) == abs(det_exact(m)));
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(h(i, i) > 0);
            for (std::size_t j = i + 1; j < n; ++j) {
                CHECK(h(i, j) == 0);
            }
            for (std::size_t j = 0; j < i; ++j) {
                CHECK(h(i, j) >= 0);
                CHECK(h(i, j) < h(i, i));
            }
        }
        const IntMatrix u = random_unimodular(rng, n);
        CHECK(abs(det_exact(u)) == 1);
        CHECK(same_lattice(m, m * u));
        CHECK_FALSE(same_lattice(m, Integer(2) * m));
    }
}

TEST_CASE("same_lattice examples") {
    CHECK_FALSE(same_lattice(IntMatrix::identity(2), Integer(2) * IntMatrix::identity(2)));
    CHECK_THROWS_AS(same_lattice(IntMatrix::identity(2), IntMatrix::identity(3)), DimensionError);
    // Checkerboard D4 against the images (0,1,1,0), (1,0,1,0), (1,1,0,0), (1,1,1,-1).
    const IntMatrix images =
        IntMatrix::from_columns({{0, 1, 1, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 1, 1, -1}});
    const IntMatrix d4 = IntMatrix::from_columns({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 1, -1}});
    CHECK(same_lattice(images, d4));
}

TEST_CASE("rank and integer kernel") {
    const IntMatrix row{{1, 1, 1}};
    CHECK(rank(row) == 1);
    const auto kernel = integer_kernel(row);
    REQUIRE(kernel.size() == 2);
    for (const auto& v : kernel) {
        CHECK(v[0] + v[1] + v[2] == 0);
    }
    // The kernel basis is primitive: it spans all of ker, index 1 against e_i - e_{i+1}.
    CHECK(same_lattice(IntMatrix::from_columns(kernel), IntMatrix::from_columns({{1, -1, 0}, {0, 1, -1}})));
    CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
    CHECK(integer_kernel(IntMatrix::identity(3)).empty());
}

TEST_CASE("primitive systems") {
    CHECK(is_primitive_system({{1, 0, 0}, {0, 1, 0}}));
    CHECK(is_primitive_system({{1, 1, 0}, {0, 1, 1}}));
    CHECK_FALSE(is_primitive_system({{2, 0, 0}}));
    CHECK_FALSE(is_primitive_system({{1, 1, 0}, {1, -1, 0}}));  // spans index 2 in its saturation
    CHECK_FALSE(is_primitive_system({{1, 2}, {2, 4}}));
}

TEST_CASE("ldlt examples") {
    const auto diag = ldlt(IntMatrix{{4, 0}, {0, 4}});
    CHECK(diag.lower == RatMatrix::identity(2));
    CHECK(diag.diagonal == std::vector<Rational>{4, 4});
    const auto a2 = ldlt(IntMatrix{{2, -1}, {-1, 2}});
    CHECK(a2.diagonal == std::vector<Rational>{2, Rational(3, 2)});
    CHECK_THROWS_AS(ldlt(IntMatrix{{0, 1}, {1, 2}}), NotPositiveDefiniteError);
    CHECK_THROWS_AS(ldlt(IntMatrix{{1, 2}, {3, 4}}), PreconditionError);
    CHECK_THROWS_AS(ldlt(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("ldlt reassembles exactly and its pivots multiply to the determinant") {
    std::mt19937_64 rng(13);
    int tested = 0;
    while (tested < 40) {
        const std::size_t n = 1 + tested % 5;
        const IntMatrix b = random_matrix(rng, n, n, 5);
        if (det_exact(b) == 0) {
            continue;
        }
        const IntMatrix g = b.transpose() * b;
        const auto f = ldlt(g);
        RatMatrix d(n, n);
        Rational product = 1;
        for (std::size_t i = 0; i < n; ++i) {
            d(i, i) = f.diagonal[i];
            product *= f.diagonal[i];
            CHECK(f.lower(i, i) == 1);
            CHECK(f.diagonal[i] > 0);
        }
        RatMatrix gq(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                gq(i, j) = g(i, j);
            }
        }
        CHECK(f.lower * d * f.lower.transpose() == gq);
        CHECK(product == Rational(det_exact(g)));
        ++tested;
    }
}
