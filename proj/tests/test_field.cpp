#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quotforge/field.hpp"

using namespace quotforge;

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(7));
    CHECK(is_prime(2147483647));  // 2^31 - 1
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(FieldSpec::prime_field(6), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime_field(1), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact and canonical") {
    const FieldSpec q = FieldSpec::rationals();
    const Scalar a = Scalar::of_fraction(2, 4);
    CHECK(a.str() == "1/2");
    const Scalar b = Scalar::of_fraction(-3, -6);
    CHECK(b == a);

    const Scalar c = Scalar::of_fraction(1, 3) + Scalar::of_fraction(1, 6);
    CHECK(c == a);
    CHECK((a * Scalar::of_int(q, 2)).is_one());
    CHECK((a - a).is_zero());
    CHECK(Scalar::of_fraction(-1, 2).str() == "-1/2");
    CHECK(Scalar::of_int(q, 7).str() == "7");
}

TEST_CASE("rational round trips: (a/b)*(b/a) = 1") {
    for (long n = -9; n <= 9; ++n) {
        for (long d = 1; d <= 9; ++d) {
            if (n == 0) continue;
            const Scalar x = Scalar::of_fraction(n, d);
            CHECK((x * x.inverse()).is_one());
        }
    }
}

TEST_CASE("prime arithmetic and Fermat inverse") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 31u}) {
        const FieldSpec f = FieldSpec::prime_field(p);
        for (std::uint32_t x = 1; x < p; ++x) {
            const Scalar s = Scalar::residue(f, x);
            const Scalar fermat = Scalar::residue(f, pow_mod(x, p - 2, p));
            CHECK((s * fermat).is_one());
            CHECK(s.inverse() == fermat);
        }
        CHECK(Scalar::of_int(f, -1) == Scalar::residue(f, p - 1));
        CHECK_THROWS_AS(Scalar::zero(f).inverse(), std::domain_error);
    }
}

TEST_CASE("mixing fields is an error; equality across fields is false") {
    const Scalar a = Scalar::of_int(FieldSpec::rationals(), 1);
    const Scalar b = Scalar::of_int(FieldSpec::prime_field(3), 1);
    const Scalar c = Scalar::of_int(FieldSpec::prime_field(5), 1);
    CHECK_THROWS_AS(a + b, FieldMismatchError);
    CHECK_THROWS_AS(b * c, FieldMismatchError);
    CHECK_FALSE(a == b);
    CHECK_FALSE(b == c);
}

TEST_CASE("parse and serialize") {
    const FieldSpec q = FieldSpec::rationals();
    CHECK(Scalar::parse(q, "3/4") == Scalar::of_fraction(3, 4));
    CHECK(Scalar::parse(q, "-5") == Scalar::of_int(q, -5));
    CHECK(Scalar::parse(q, "6/4") == Scalar::of_fraction(3, 2));
    CHECK_THROWS_AS(Scalar::parse(q, "1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse(q, "x"), std::invalid_argument);

    const FieldSpec f5 = FieldSpec::prime_field(5);
    CHECK(Scalar::parse(f5, "12") == Scalar::residue(f5, 2));
    CHECK(Scalar::parse(f5, "-1") == Scalar::residue(f5, 4));
    CHECK(Scalar::residue(f5, 3).str() == "3");
}
