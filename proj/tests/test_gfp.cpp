#include "modcohom/gfp.hpp"

#include <doctest.h>

using namespace modcohom;

TEST_CASE("prime field construction validates the modulus") {
    CHECK(make_prime_field(5).p == 5);
    CHECK(make_prime_field(7).p == 7);
    CHECK(make_prime_field(101).p == 101);
    CHECK_THROWS_WITH_AS(make_prime_field(4), doctest::Contains("not prime"), Error);
    CHECK_THROWS_WITH_AS(make_prime_field(9), doctest::Contains("not prime"), Error);
    CHECK_THROWS_WITH_AS(make_prime_field(1), doctest::Contains("not prime"), Error);
    CHECK_THROWS_AS(make_prime_field(3), Error);
    CHECK_THROWS_AS(make_prime_field(2), Error);
    try {
        make_prime_field(3);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CharTooSmall);
    }
    try {
        make_prime_field(6);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPrime);
    }
}

TEST_CASE("residue arithmetic") {
    PrimeField f = make_prime_field(7);
    CHECK(f.reduce(-1) == 6);
    CHECK(f.reduce(-13) == 1);
    CHECK(f.reduce(21) == 0);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.neg(0) == 0);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.pow(3, 6) == 1);
    CHECK(f.pow(0, 0) == 1);
}

TEST_CASE("inverses via extended Euclid") {
    for (std::uint64_t p : {5ull, 7ull, 101ull, 32749ull}) {
        PrimeField f = make_prime_field(p);
        for (std::uint32_t a = 1; a < f.p && a < 2000; ++a) {
            CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }
}
