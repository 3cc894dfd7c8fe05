#include <doctest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "zk/code.hpp"
#include "zk/lattice.hpp"

using zk::LatticeClass;
using zk::ScaledLattice;
using zk::ZkCode;

namespace {

std::size_t count_norm(const ScaledLattice& l, std::int64_t norm) { return zk::short_vectors(l, norm).size(); }

// Short vectors of A_k(C) by a coordinate box search with membership
// decided on the element set of C.
std::vector<oracle::Vec> box_short_vectors(const ZkCode& c, std::int64_t norm) {
    const std::int64_t k = c.modulus();
    const auto words = oracle::span(k, c.length(), c.generators().row_vectors());
    const std::int64_t raw = norm * k;
    return oracle::box_search(c.length(), oracle::isqrt(raw), [&](const oracle::Vec& x) {
        if (oracle::norm2(x) != raw) return false;
        oracle::Vec r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) r[i] = oracle::reduce(x[i], k);
        return words.count(r) > 0;
    });
}

}  // namespace

TEST_CASE("construction A of small codes") {
    const auto l = zk::construction_a(ZkCode(4, 1, {{2}}));
    CHECK(l.dimension() == 1);
    CHECK(l.scale() == 4);
    CHECK(std::llabs(static_cast<long long>(zk::determinant(l.basis()))) == 2);
    CHECK(zk::is_unimodular(l));
    CHECK(zk::identify_class(l) == LatticeClass::zn(1));

    const auto l2 = zk::construction_a(ZkCode(2, 2, {{1, 1}}));
    CHECK(std::llabs(static_cast<long long>(zk::determinant(l2.basis()))) == 2);
    CHECK(zk::is_unimodular(l2));
    CHECK(count_norm(l2, 1) == 4);
    CHECK(zk::identify_class(l2) == LatticeClass::zn(2));

    const ZkCode hamming(2, 8,
                         {{1, 1, 1, 1, 0, 0, 0, 0},
                          {0, 0, 1, 1, 1, 1, 0, 0},
                          {0, 0, 0, 0, 1, 1, 1, 1},
                          {0, 1, 0, 1, 0, 1, 0, 1}});
    const auto e8 = zk::construction_a(hamming);
    CHECK(zk::is_unimodular(e8));
    CHECK(zk::is_even(e8));
    CHECK(count_norm(e8, 1) == 0);
    CHECK(count_norm(e8, 2) == 240);
    CHECK(zk::identify_class(e8) == LatticeClass::e8());

    CHECK_THROWS_AS(zk::construction_a(ZkCode(2, 2, {{1, 0}})), std::invalid_argument);
}

TEST_CASE("unimodularity and parity") {
    CHECK(zk::is_unimodular(zk::standard_lattice(LatticeClass::zn(5))));
    CHECK(zk::is_unimodular(ScaledLattice(4, {{2}})));
    CHECK_FALSE(zk::is_unimodular(ScaledLattice(2, {{2}})));
    CHECK(zk::is_even(zk::standard_lattice(LatticeClass::e8())));
    CHECK_FALSE(zk::is_even(zk::standard_lattice(LatticeClass::zn(8))));
    CHECK_FALSE(zk::is_even(zk::standard_lattice(LatticeClass::e8_plus_z())));
}

TEST_CASE("standard lattices") {
    const auto z4 = zk::standard_lattice(LatticeClass::zn(4));
    CHECK(z4.scale() == 1);
    CHECK(count_norm(z4, 1) == 8);

    const auto e8 = zk::standard_lattice(LatticeClass::e8());
    CHECK(zk::is_unimodular(e8));
    CHECK(zk::is_even(e8));
    CHECK(count_norm(e8, 1) == 0);
    CHECK(count_norm(e8, 2) == 240);

    const auto e8z = zk::standard_lattice(LatticeClass::e8_plus_z());
    CHECK(zk::is_unimodular(e8z));
    CHECK(count_norm(e8z, 1) == 2);
    CHECK(count_norm(e8z, 2) == 240);
    CHECK(count_norm(zk::standard_lattice(LatticeClass::zn(9)), 1) == 18);

    for (const auto cls : {LatticeClass::zn(3), LatticeClass::zn(8), LatticeClass::e8(), LatticeClass::zn(9),
                           LatticeClass::e8_plus_z()})
        CHECK(zk::identify_class(zk::standard_lattice(cls)) == cls);
    CHECK_THROWS_AS(zk::standard_lattice(LatticeClass{zk::LatticeKind::E8, 9}), std::invalid_argument);
}

TEST_CASE("E8 model against an independent membership rule") {
    const auto e8 = zk::standard_lattice(LatticeClass::e8());
    REQUIRE(e8.scale() == 4);
    // Norm 2 means raw norm 8, so every coordinate is at most 2 in absolute value.
    const auto roots = oracle::box_search(8, 2, [](const oracle::Vec& x) {
        return oracle::norm2(x) == 8 && oracle::in_doubled_e8(x);
    });
    CHECK(roots.size() == 240);
    CHECK(zk::short_vectors(e8, 2) == roots);
    const auto norm4 = oracle::box_search(8, 4, [](const oracle::Vec& x) {
        return oracle::norm2(x) == 16 && oracle::in_doubled_e8(x);
    });
    CHECK(norm4.size() == 2160);
    CHECK(zk::short_vectors(e8, 4) == norm4);
    for (const auto& v : roots) CHECK(e8.contains(v));
    CHECK_FALSE(e8.contains(zk::IntVector{2, 0, 0, 0, 0, 0, 0, 0}));
    CHECK_FALSE(e8.contains(zk::IntVector{1, 1, 1, 1, 1, 1, 1, -1}));
}

TEST_CASE("short vectors of Z^4") {
    const auto z4 = zk::standard_lattice(LatticeClass::zn(4));
    const auto four = zk::short_vectors(z4, 4);
    CHECK(four.size() == 24);
    std::size_t twos = 0, ones = 0;
    for (const auto& v : four) {
        std::size_t nonzero = 0;
        for (auto x : v) nonzero += x != 0;
        twos += nonzero == 1;
        ones += nonzero == 4;
    }
    CHECK(twos == 8);
    CHECK(ones == 16);
    CHECK(zk::short_vectors(z4, 9).size() == 104);
}

TEST_CASE("short vectors against a box search") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto zn = zk::standard_lattice(LatticeClass::zn(n));
        for (std::int64_t m = 1; m <= 25; ++m) {
            const auto box = oracle::box_search(n, oracle::isqrt(m), [&](const oracle::Vec& x) {
                return oracle::norm2(x) == m;
            });
            const auto got = zk::short_vectors(zn, m);
            CAPTURE(n);
            CAPTURE(m);
            CHECK(got == box);
        }
    }
    // Construction A lattices have non-orthogonal bases.
    for (std::int64_t k = 2; k <= 5; ++k)
        for (std::size_t n = 1; n <= 4; ++n)
            for (const auto& c : zk::brute_force_classify(k, n)) {
                const auto l = zk::construction_a(c);
                for (std::int64_t m = 1; m <= 6; ++m) {
                    const auto got = zk::short_vectors(l, m);
                    CHECK(got == box_short_vectors(c, m));
                    for (const auto& v : got) {
                        zk::IntVector neg(v);
                        for (auto& x : neg) x = -x;
                        CHECK(std::binary_search(got.begin(), got.end(), neg));
                    }
                }
            }
}

TEST_CASE("construction A round trip on self-dual codes") {
    for (std::int64_t k = 2; k <= 5; ++k)
        for (std::size_t n = 1; n <= 4; ++n)
            for (const auto& c : zk::brute_force_classify(k, n)) {
                const auto l = zk::construction_a(c);
                CHECK(zk::is_unimodular(l));
                CHECK((zk::code_type(c) == zk::CodeType::TypeII) == zk::is_even(l));
                // |det| of the integer basis is k^(n/2), i.e. its square is k^n.
                const auto det = zk::determinant(l.basis());
                zk::WideInt kn = 1;
                for (std::size_t i = 0; i < n; ++i) kn *= k;
                CHECK(det * det == kn);
                CHECK(zk::identify_class(l) == LatticeClass::zn(n));
            }
}

TEST_CASE("lattice names and tags") {
    CHECK(zk::lattice_name(LatticeClass::zn(4)) == "Z^4");
    CHECK(zk::lattice_name(LatticeClass::e8()) == "E8");
    CHECK(zk::lattice_name(LatticeClass::e8_plus_z()) == "E8+Z");
    for (auto kind : {zk::LatticeKind::Zn, zk::LatticeKind::E8, zk::LatticeKind::E8plusZ})
        CHECK(zk::parse_lattice_tag(zk::lattice_tag(kind)) == kind);
    CHECK_FALSE(zk::parse_lattice_tag("d4").has_value());
    CHECK(zk::lattice_classes(7).size() == 1);
    CHECK(zk::lattice_classes(8) == std::vector<LatticeClass>{LatticeClass::zn(8), LatticeClass::e8()});
    CHECK(zk::lattice_classes(9) == std::vector<LatticeClass>{LatticeClass::zn(9), LatticeClass::e8_plus_z()});
}

TEST_CASE("lattice input validation") {
    CHECK_THROWS_AS(ScaledLattice(1, {{1, 0}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(ScaledLattice(1, {{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(ScaledLattice(0, {{1}}), std::invalid_argument);
    const ScaledLattice half(2, {{1, 0}, {0, 1}});
    CHECK_THROWS_AS(half.inner(zk::IntVector{1, 0}, zk::IntVector{1, 0}), std::domain_error);
}
