#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "udg/field.hpp"
#include "test_util.hpp"

#include <cmath>
#include <random>

using namespace udg;
using testutil::fe;
using testutil::fq;

namespace {

FieldElem random_elem(std::mt19937& rng, long span = 8) {
    std::uniform_int_distribution<long> num(-span, span), den(1, 6);
    auto r = [&] { return Rat(num(rng), den(rng)); };
    return {r(), r(), r(), r()};
}

}  // namespace

TEST_CASE("addition and negation") {
    CHECK(fq(1, 2, 0, 1, 0, 1, -1, 6) + fq(0, 1, 0, 1, 0, 1, 1, 6) == fq(1, 2));
    FieldElem x = fq(3, 7, -2, 5, 1, 3, 4, 9);
    CHECK(x + (-x) == FieldElem::zero());
    CHECK(fq(0, 1, 1, 3) + fq(0, 1, 1, 3) == fq(0, 1, 2, 3));
}

TEST_CASE("multiplication basis relations") {
    const FieldElem s3 = fe(0, 1), s11 = fe(0, 0, 1), s33 = fe(0, 0, 0, 1);
    CHECK(s3 * s3 == fe(3));
    CHECK(s11 * s11 == fe(11));
    CHECK(s33 * s33 == fe(33));
    CHECK(s3 * s11 == s33);
    CHECK(s3 * s33 == fe(0, 0, 3));
    CHECK(s11 * s33 == fe(0, 11));
    CHECK(fq(0, 1, 0, 1, 0, 1, 1, 6) * fq(0, 1, 0, 1, 0, 1, 1, 6) == fq(11, 12));
}

TEST_CASE("inverse") {
    CHECK(inverse(fe(2)) == fq(1, 2));
    CHECK(inverse(fe(0, 1)) == fq(0, 1, 1, 3));
    // 1/(1 + sqrt3) = (sqrt3 - 1)/2
    CHECK(inverse(fe(1, 1)) == fq(-1, 2, 1, 2));
    CHECK(fe(1, 1) * fq(-1, 2, 1, 2) == FieldElem::one());
    CHECK_THROWS_AS(inverse(FieldElem::zero()), std::domain_error);
}

TEST_CASE("sign") {
    CHECK(sign(FieldElem::zero()) == 0);
    CHECK(sign(fe(-2, 1)) == -1);        // sqrt3 < 2
    CHECK(sign(fe(-10, 0, 0, 1)) == -1); // sqrt33 < 10 since 33 < 100
    CHECK(sign(fe(-5, 0, 0, 1)) == 1);   // sqrt33 > 5
    CHECK(sign(fe(0, 2, -1)) == 1);      // 2 sqrt3 > sqrt11 since 12 > 11
    CHECK(sign(fe(0, -2, 1)) == -1);
    CHECK(sign(fe(1, 1, -1, 0)) == -1);  // 1 + sqrt3 = 2.73... < sqrt11 = 3.316...
}

TEST_CASE("sign is multiplicative on random pairs") {
    std::mt19937 rng(7);
    for (int t = 0; t < 300; ++t) {
        FieldElem x = random_elem(rng), y = random_elem(rng);
        CHECK(sign(x * y) == sign(x) * sign(y));
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        FieldElem x = random_elem(rng), y = random_elem(rng), z = random_elem(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * inverse(x) == FieldElem::one());
    }
}

TEST_CASE("sqrt examples") {
    CHECK(sqrt(FieldElem::zero()) == FieldElem::zero());
    CHECK(sqrt(fq(11, 36)) == fq(0, 1, 0, 1, 1, 6));  // sin θ for cos θ = 5/6
    CHECK(sqrt(fe(2)) == std::nullopt);               // sqrt2 not in the field
    CHECK(sqrt(fq(7, 16)) == std::nullopt);           // sin² θ for d² = 2
    CHECK(sqrt(fe(3)) == fe(0, 1));
    CHECK(sqrt(fe(12)) == fe(0, 2));
    CHECK(sqrt(fe(0, 0, 0, 0)) == FieldElem::zero());
    // (1 + sqrt3)^2 = 4 + 2 sqrt3
    CHECK(sqrt(fe(4, 2)) == fe(1, 1));
    // (sqrt3 + sqrt11)^2 = 14 + 2 sqrt33
    CHECK(sqrt(fe(14, 0, 0, 2)) == fe(0, 1, 1, 0));
    CHECK_THROWS_AS(sqrt(fe(-1)), std::domain_error);
}

TEST_CASE("sqrt round-trips on random squares") {
    std::mt19937 rng(13);
    for (int t = 0; t < 200; ++t) {
        FieldElem x = random_elem(rng, 4);
        FieldElem sq = x * x;
        auto root = sqrt(sq);
        REQUIRE(root.has_value());
        CHECK(*root * *root == sq);
        CHECK(sign(*root) >= 0);
    }
}

TEST_CASE("float embedding agrees to 1e-9 (sanity only)") {
    std::mt19937 rng(17);
    for (int t = 0; t < 200; ++t) {
        FieldElem x = random_elem(rng), y = random_elem(rng);
        CHECK(std::abs(to_double(x + y) - (to_double(x) + to_double(y))) < 1e-9);
        CHECK(std::abs(to_double(x * y) - to_double(x) * to_double(y)) < 1e-9);
        if (sign(x) > 0) CHECK(to_double(x) > -1e-9);
    }
}

TEST_CASE("text form round-trip and paper notation") {
    CHECK(parse_field_elem("(1/2, 0, 0, -1/6)") == fq(1, 2, 0, 1, 0, 1, -1, 6));
    CHECK(parse_field_elem("(0, 7/12, -1/4, 0)") == fq(0, 1, 7, 12, -1, 4));
    CHECK(to_string(fq(1, 2, 0, 1, 0, 1, -1, 6)) == "(1/2, 0, 0, -1/6)");
    std::mt19937 rng(23);
    for (int t = 0; t < 50; ++t) {
        FieldElem x = random_elem(rng);
        CHECK(parse_field_elem(to_string(x)) == x);
    }
    CHECK_THROWS_AS(parse_field_elem("(1, 2, 3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field_elem("(1, 2, 3, x)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
}
