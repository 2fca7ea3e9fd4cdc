#include "doctest.h"
#include "egr/galois.hpp"

#include <cmath>
#include <random>
#include <set>

using egr::Field;
using egr::FieldElement;

namespace {

void check_axioms(const Field& f, FieldElement a, FieldElement b, FieldElement c) {
    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    CHECK(f.add(a, b) == f.add(b, a));
    CHECK(f.mul(a, b) == f.mul(b, a));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    CHECK(f.add(a, f.neg(a)) == f.zero());
    CHECK(f.sub(f.add(a, b), b) == a);
    if (a != f.zero()) CHECK(f.mul(a, f.inv(a)) == f.one());
    CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
    CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
}

void check_field(const Field& f) {
    const auto q = f.order();
    if (q <= 16) {
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                for (std::uint32_t c = 0; c < q; ++c) check_axioms(f, {a}, {b}, {c});
    } else {
        std::mt19937 rng(1234 + q);
        std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
        for (int t = 0; t < 1000; ++t) check_axioms(f, {pick(rng)}, {pick(rng)}, {pick(rng)});
    }
}

// Order by repeated multiplication, independent of the log tables.
std::uint64_t brute_order(const Field& f, FieldElement a) {
    FieldElement x = a;
    std::uint64_t k = 1;
    while (x != f.one()) {
        x = f.mul(x, a);
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("field_make picks the smallest irreducible modulus") {
    auto gf4 = Field::make(2, 2);
    auto m = gf4.modulus();
    REQUIRE(m.size() == 3);
    CHECK(m[0].index == 1);
    CHECK(m[1].index == 1);
    CHECK(m[2].index == 1);

    // x^3 + x + 1 precedes x^3 + x^2 + 1 in base-p digit order
    auto gf8 = Field::make(2, 3);
    auto m8 = gf8.modulus();
    CHECK(m8[0].index == 1);
    CHECK(m8[1].index == 1);
    CHECK(m8[2].index == 0);

    auto gf5 = Field::make(5, 1);
    CHECK(gf5.order() == 5);
    CHECK(gf5.coefficient_field() == nullptr);
    CHECK(gf5.mul({3}, {4}).index == 2);
}

TEST_CASE("field_make rejects bad input") {
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 21), std::invalid_argument);
    CHECK_NOTHROW(Field::make(2, 20));
}

TEST_CASE("basic arithmetic examples") {
    auto gf3 = Field::make(3, 1);
    CHECK(gf3.add({1}, {2}) == gf3.zero());

    auto gf4 = Field::make(2, 2);
    // index 2 is the class of x
    CHECK(gf4.mul({2}, {2}).index == 3);

    auto gf5 = Field::make(5, 1);
    CHECK(gf5.inv({2}).index == 3);
    CHECK_THROWS_AS(gf5.inv(gf5.zero()), std::domain_error);
}

TEST_CASE("field axioms") {
    for (auto [p, e] : std::vector<std::pair<int, int>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {11, 2}, {2, 10}}) {
        CAPTURE(p);
        CAPTURE(e);
        auto f = Field::make(p, e);
        CHECK(f.order() == static_cast<std::uint32_t>(std::pow(p, e)));
        check_field(f);
        CHECK(brute_order(f, f.generator()) == f.order() - 1);
    }
}

TEST_CASE("extension fields") {
    auto gf2 = Field::make(2, 1);
    auto gf16 = Field::extension(gf2, 4);
    CHECK(gf16.order() == 16);
    CHECK(gf16.embed({0}).index == 0);
    CHECK(gf16.embed({1}).index == 1);
    check_field(gf16);

    auto gf3 = Field::make(3, 1);
    auto gf81 = Field::extension(gf3, 4);
    CHECK(gf81.order() == 81);
    auto one = gf81.embed(gf3.one());
    CHECK(gf81.add(gf81.add(one, one), one) == gf81.zero());
    check_field(gf81);

    auto gf4 = Field::make(2, 2);
    auto gf256 = Field::extension(gf4, 4);
    CHECK(gf256.order() == 256);
    CHECK(gf256.absolute_degree() == 8);
    CHECK(gf256.relative_degree() == 4);
    CHECK(gf256.multiplicative_order(gf256.generator()) == 255);
    CHECK(brute_order(gf256, gf256.generator()) == 255);
    std::set<std::uint32_t> powers;
    FieldElement x = gf256.one();
    for (int i = 0; i < 255; ++i) {
        powers.insert(x.index);
        x = gf256.mul(x, gf256.generator());
    }
    CHECK(powers.size() == 255);
    check_field(gf256);

    auto gf625 = Field::extension(Field::make(5, 1), 4);
    check_field(gf625);

    CHECK_THROWS_AS(Field::extension(gf2, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::extension(Field::make(2, 7), 4), std::invalid_argument);
}

TEST_CASE("embedding is a ring homomorphism") {
    for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        auto base = Field::make(p, e);
        auto ext = Field::extension(base, 4);
        const auto q = base.order();
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(ext.add(ext.embed({a}), ext.embed({b})) == ext.embed(base.add({a}, {b})));
                CHECK(ext.mul(ext.embed({a}), ext.embed({b})) == ext.embed(base.mul({a}, {b})));
            }
        }
        // a^q = a on the embedded subfield, and only there
        std::uint32_t fixed = 0;
        for (std::uint32_t a = 0; a < ext.order(); ++a) {
            if (ext.pow({a}, q) == FieldElement{a}) ++fixed;
        }
        CHECK(fixed == q);
    }
}

TEST_CASE("coordinates round trip") {
    auto gf4 = Field::make(2, 2);
    auto ext = Field::extension(gf4, 4);
    for (std::uint32_t a = 0; a < ext.order(); ++a) {
        auto c = ext.coordinates({a});
        REQUIRE(c.size() == 4);
        CHECK(ext.from_coordinates(c).index == a);
    }
}
