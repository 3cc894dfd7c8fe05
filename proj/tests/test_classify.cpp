#include <doctest.h>

#include "zk/classify.hpp"
#include "zk/errors.hpp"

using zk::LatticeClass;

namespace {

zk::ClassifyOptions extended() {
    zk::ClassifyOptions o;
    o.tier = zk::Tier::Extended;
    return o;
}

}  // namespace

TEST_CASE("single classifications") {
    const auto r = zk::classify(9, 4, LatticeClass::zn(4));
    CHECK(r.count() == 3);
    CHECK(r.type_i == 3);
    CHECK(std::is_sorted(r.representatives.begin(), r.representatives.end()));

    const auto e8 = zk::classify(12, 8, LatticeClass::e8(), extended());
    CHECK(e8.count() == 22);
    CHECK(e8.type_ii == 22);

    const auto filtered = zk::classify(3, 5, LatticeClass::zn(5));
    CHECK(filtered.count() == 0);
    CHECK(filtered.frames == 0);
}

TEST_CASE("classification over all lattices of a length") {
    const auto two = zk::classify_length(2, 8, extended());
    REQUIRE(two.size() == 2);
    CHECK(two[0].lattice == LatticeClass::zn(8));
    CHECK(two[0].count() == 1);
    CHECK(two[1].count() == 1);
    CHECK(two[1].type_ii == 1);

    const auto z7 = zk::classify_length(16, 7);
    REQUIRE(z7.size() == 1);
    CHECK(z7[0].count() == 23);

    const auto nine = zk::classify_length(4, 9, extended());
    REQUIRE(nine.size() == 2);
    CHECK(nine[0].count() == 7);
    CHECK(nine[1].lattice == LatticeClass::e8_plus_z());
    CHECK(nine[1].count() == 4);
}

TEST_CASE("length 4 table") {
    const auto t = zk::table_n4(25, 40);
    CHECK(t.at(25) == 5);
    CHECK(t.at(32) == 1);
    CHECK(zk::table_n4(128, 128).at(128) == 1);
    CHECK(zk::table_n4(200, 200).at(200) == 10);
    CHECK_THROWS_AS(zk::table_n4(10, 5), std::invalid_argument);
}

TEST_CASE("type II codes only at lengths divisible by 8 with k even") {
    zk::ClassifyOptions o = extended();
    for (std::int64_t k = 2; k <= 10; ++k)
        for (std::size_t n = 1; n <= 8; ++n)
            for (const auto& r : zk::classify_length(k, n, o)) {
                if (r.type_ii > 0) {
                    CHECK(n % 8 == 0);
                    CHECK(k % 2 == 0);
                }
                const bool even = r.lattice.kind == zk::LatticeKind::E8;
                CHECK(r.type_ii == (even ? r.count() : 0));
            }
}

TEST_CASE("results do not depend on the number of threads") {
    for (auto [k, cls] : std::vector<std::pair<std::int64_t, LatticeClass>>{
             {16, LatticeClass::zn(6)}, {9, LatticeClass::zn(7)}, {20, LatticeClass::zn(6)}, {6, LatticeClass::e8()}}) {
        zk::ClassifyOptions a = extended(), b = extended();
        b.jobs = 4;
        const auto ra = zk::classify(k, cls.n, cls, a);
        const auto rb = zk::classify(k, cls.n, cls, b);
        CHECK(ra.same_classes(rb));
        CHECK(ra.frames == rb.frames);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(zk::classify(4, 8, LatticeClass::zn(8)), std::invalid_argument);
    CHECK_THROWS_AS(zk::classify(4, 10, LatticeClass::zn(10), extended()), std::invalid_argument);
    CHECK_THROWS_AS(zk::classify(4, 4, LatticeClass::zn(5)), std::invalid_argument);
    CHECK_THROWS_AS(zk::classify(1, 4, LatticeClass::zn(4)), std::invalid_argument);
    CHECK_THROWS_AS(zk::classify(1001, 4, LatticeClass::zn(4)), std::invalid_argument);
    CHECK(zk::parse_tier("extended") == zk::Tier::Extended);
    CHECK_FALSE(zk::parse_tier("huge").has_value());
}

TEST_CASE("heavy cells are accepted but respect the budget") {
    zk::ClassifyOptions o = extended();
    o.budget_seconds = 0.5;
    CHECK_THROWS_AS(zk::classify(24, 8, LatticeClass::zn(8), o), zk::BudgetExceeded);
    CHECK_THROWS_AS(zk::classify(16, 9, LatticeClass::zn(9), o), zk::BudgetExceeded);
}

TEST_CASE("reference counts") {
    CHECK(zk::reference_count(24, LatticeClass::zn(8)) == 3690);
    CHECK(zk::reference_count(24, LatticeClass::e8()) == 456);
    CHECK(zk::reference_count(16, LatticeClass::zn(9)) == 697);
    CHECK(zk::reference_count(16, LatticeClass::e8_plus_z()) == 141);
    CHECK(zk::reference_count(4, LatticeClass::zn(1)) == 1);
    CHECK(zk::reference_count(198, LatticeClass::zn(4)) == 33);
    CHECK_FALSE(zk::reference_count(30, LatticeClass::zn(5)).has_value());
    CHECK_FALSE(zk::reference_count(201, LatticeClass::zn(4)).has_value());
}

TEST_CASE("type balance at length 8") {
    std::vector<zk::ClassificationResult> results;
    for (std::int64_t k : {2, 3, 4}) {
        auto r = zk::classify_length(k, 8, extended());
        results.insert(results.end(), r.begin(), r.end());
    }
    const auto balance = zk::length8_type_balance(results);
    REQUIRE(balance.size() == 2);
    CHECK(balance[0].k == 2);
    CHECK(balance[0].type_i == 1);
    CHECK(balance[0].type_ii == 1);
    CHECK(balance[0].as_expected);
    CHECK(balance[1].k == 4);
    CHECK(balance[1].type_i == 7);
    CHECK(balance[1].type_ii == 4);
    CHECK(balance[1].as_expected);
}
