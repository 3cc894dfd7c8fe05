#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zk/ring_linalg.hpp"

using zk::ZkMatrix;

namespace {

ZkMatrix random_matrix(std::mt19937_64& rng, std::int64_t k, std::size_t rows, std::size_t cols) {
    std::vector<zk::IntVector> r;
    for (std::size_t i = 0; i < rows; ++i) r.push_back(oracle::random_vector(rng, k, cols));
    return ZkMatrix::from_rows(k, cols, r);
}

oracle::ElementSet span_of(const ZkMatrix& m) { return oracle::span(m.modulus(), m.cols(), m.row_vectors()); }

void check_howell_shape(const ZkMatrix& h) {
    const auto pivots = zk::pivot_columns(h);
    for (std::size_t r = 0; r < h.rows(); ++r) {
        const std::int64_t p = h(r, pivots[r]);
        CHECK(p > 0);
        CHECK(h.modulus() % p == 0);
        for (std::size_t c = 0; c < pivots[r]; ++c) CHECK(h(r, c) == 0);
        if (r > 0) CHECK(pivots[r - 1] < pivots[r]);
        for (std::size_t above = 0; above < r; ++above) {
            CHECK(h(above, pivots[r]) >= 0);
            CHECK(h(above, pivots[r]) < p);
        }
    }
}

}  // namespace

TEST_CASE("howell form of small fixed matrices") {
    CHECK(zk::howell_form(ZkMatrix::identity(4, 2)) == ZkMatrix::identity(4, 2));
    const auto two = ZkMatrix::from_rows(4, 2, {{2, 0}, {0, 2}});
    CHECK(zk::howell_form(two) == two);

    const auto m = ZkMatrix::from_rows(4, 2, {{1, 3}, {2, 2}});
    const auto h = zk::howell_form(m);
    CHECK(span_of(h) == span_of(m));
    check_howell_shape(h);
    // Same span from a different generating set.
    CHECK(zk::howell_form(ZkMatrix::from_rows(4, 2, {{3, 1}, {0, 0}, {2, 2}, {1, 3}})) == h);
}

TEST_CASE("howell form agrees with the element-set span") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 8);
        const std::size_t n = 1 + rng() % 4;
        const std::size_t rows = rng() % 5;
        const auto m = random_matrix(rng, k, rows, n);
        const auto h = zk::howell_form(m);
        const auto s = span_of(m);
        CAPTURE(k);
        CAPTURE(n);
        CHECK(span_of(h) == s);
        CHECK(zk::howell_form(h) == h);
        CHECK(zk::row_span_cardinality(h) == s.size());
        check_howell_shape(h);

        // Canonicity: a generating set drawn from the span in another order.
        std::vector<zk::IntVector> elements(s.begin(), s.end());
        std::shuffle(elements.begin(), elements.end(), rng);
        if (elements.size() > 60) elements.resize(60);
        for (std::size_t r = 0; r < m.rows(); ++r) elements.push_back(zk::IntVector(m.row(r).begin(), m.row(r).end()));
        std::shuffle(elements.begin(), elements.end(), rng);
        CHECK(zk::howell_form(ZkMatrix::from_rows(k, n, elements)) == h);
    }
}

TEST_CASE("different spans give different howell forms") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 7);
        const std::size_t n = 1 + rng() % 3;
        const auto a = random_matrix(rng, k, 1 + rng() % 3, n);
        const auto b = random_matrix(rng, k, 1 + rng() % 3, n);
        CHECK((zk::howell_form(a) == zk::howell_form(b)) == (span_of(a) == span_of(b)));
    }
}

TEST_CASE("kernel of small fixed matrices") {
    CHECK(zk::kernel_mod_k(ZkMatrix(4, 1, 2)) == ZkMatrix::identity(4, 2));
    const auto two = ZkMatrix::from_rows(4, 2, {{2, 0}, {0, 2}});
    CHECK(zk::kernel_mod_k(two) == two);
    CHECK(span_of(zk::kernel_mod_k(two)) == oracle::kernel(4, 2, two.row_vectors()));
    const auto ones = ZkMatrix::from_rows(2, 2, {{1, 1}});
    CHECK(zk::kernel_mod_k(ones) == ones);
}

TEST_CASE("kernel agrees with exhaustive search") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 8);
        const std::size_t n = 1 + rng() % 4;
        const auto m = random_matrix(rng, k, rng() % 4, n);
        const auto ker = zk::kernel_mod_k(m);
        CAPTURE(k);
        CHECK(ker.cols() == n);
        CHECK(span_of(ker) == oracle::kernel(k, n, m.row_vectors()));
        CHECK(zk::howell_form(ker) == ker);
    }
}

TEST_CASE("row span cardinality") {
    CHECK(zk::row_span_cardinality(ZkMatrix::identity(5, 3)) == 125);
    CHECK(zk::row_span_cardinality(ZkMatrix::from_rows(4, 2, {{2, 0}, {0, 2}})) == 4);
    CHECK(zk::row_span_cardinality(ZkMatrix::from_rows(4, 1, {{2}})) == 2);
    CHECK(zk::row_span_cardinality(ZkMatrix(7, 0, 3)) == 1);
    CHECK(zk::to_string(zk::row_span_cardinality(ZkMatrix::identity(1000, 12))) == "1" + std::string(36, '0'));
}

TEST_CASE("matrix product modulo k") {
    std::mt19937_64 rng(14);
    const auto a = random_matrix(rng, 9, 3, 4);
    CHECK(zk::mat_mul_mod_k(a, ZkMatrix::identity(9, 4)) == a);
    CHECK(zk::mat_mul_mod_k(ZkMatrix::from_rows(4, 1, {{2}}), ZkMatrix::from_rows(4, 1, {{2}})) ==
          ZkMatrix::from_rows(4, 1, {{0}}));
    CHECK(zk::mat_mul_mod_k(ZkMatrix::from_rows(4, 2, {{1, 1}}), ZkMatrix::from_rows(4, 1, {{1}, {3}})) ==
          ZkMatrix::from_rows(4, 1, {{0}}));
    CHECK_THROWS_AS(zk::mat_mul_mod_k(a, a), std::invalid_argument);
    CHECK_THROWS_AS(zk::mat_mul_mod_k(a, ZkMatrix::identity(5, 4)), std::invalid_argument);
}

TEST_CASE("modulus range") {
    CHECK_THROWS_AS(ZkMatrix(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(ZkMatrix(1001, 1, 1), std::invalid_argument);
    CHECK_NOTHROW(ZkMatrix(1000, 1, 1));
    CHECK_THROWS_AS(ZkMatrix::from_rows(5, 2, {{1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("gcd helpers") {
    for (std::int64_t a = -30; a <= 30; ++a)
        for (std::int64_t b = -30; b <= 30; ++b) {
            const auto e = zk::extended_gcd(a, b);
            CHECK(e.g == std::gcd(a, b));
            CHECK(e.s * a + e.t * b == e.g);
        }
    for (std::int64_t k = 2; k <= 40; ++k)
        for (std::int64_t a = 1; a < k; ++a) {
            const std::int64_t u = zk::unit_normalizer(a, k);
            CHECK(std::gcd(u, k) == 1);
            CHECK(zk::mod(u * a, k) == std::gcd(a, k));
        }
}
