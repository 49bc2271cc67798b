#include <doctest.h>

#include "weilpoly/ball.hpp"
#include "weilpoly/quadreal.hpp"

#include <random>

using namespace weilpoly;

TEST_CASE("quad_sign decides by rational comparisons") {
    CHECK(quad_sign(QuadReal(Rat(3), Rat(-2), 2)) == Sign::Positive);  // 9 > 8
    CHECK(quad_sign(QuadReal(Rat(0), Rat(0), 5)) == Sign::Zero);
    // 5 sqrt(2) > 7 since 50 > 49
    CHECK(quad_sign(QuadReal(Rat(-7), Rat(5), 2)) == Sign::Positive);
    CHECK(quad_sign(QuadReal(Rat(7), Rat(-5), 2)) == Sign::Negative);
    CHECK(quad_sign(QuadReal(Rat(-2), Rat(1), 4)) == Sign::Zero);  // folds to 0
}

TEST_CASE("sign of -7 + 5 sqrt 2 cross-checked by a 256-bit enclosure") {
    QuadReal x(Rat(-7), Rat(5), 2);
    Enclosure e = Enclosure::from_quad(x, 256);
    REQUIRE(e.sgn().has_value());
    CHECK(*e.sgn() == Sign::Positive);
    CHECK(*e.sgn() == quad_sign(x));
}

TEST_CASE("perfect-square radicands fold into the rational part") {
    QuadReal x(Rat(1), Rat(3), 9);  // 1 + 3*3
    CHECK(x.is_rational());
    CHECK(x.rational_part() == Rat(10));
    CHECK(x == QuadReal(Rat(10)));
}

TEST_CASE("field arithmetic round-trips") {
    QuadReal x(Rat(3, 2), Rat(-5, 7), 3);
    QuadReal y(Rat(-1), Rat(2), 3);
    CHECK((x / y) * y == x);
    CHECK(x + (-x) == QuadReal(0));
    // x = 3/2 - (5/7) sqrt 3 > 0 and y = 2 sqrt 3 - 1 > 0
    CHECK((x * y).sgn() == Sign::Positive);
    CHECK(x.conj() * x == QuadReal(x.rational_part() * x.rational_part() -
                                   x.radical_part() * x.radical_part() * 3));
}

TEST_CASE("floor and ceil are exact") {
    QuadReal x(Rat(-7), Rat(5), 2);  // ~0.0710
    CHECK(x.floor() == 0);
    CHECK(x.ceil() == 1);
    QuadReal y(Rat(0), Rat(2), 2);  // 2 sqrt 2 ~ 2.828
    CHECK(y.floor() == 2);
    CHECK(y.ceil() == 3);
    CHECK((-y).floor() == -3);
    CHECK((-y).ceil() == -2);
    QuadReal z(Rat(4));
    CHECK(z.floor() == 4);
    CHECK(z.ceil() == 4);
    // 4 sqrt(2) - 18: ceil is -12 because (4 sqrt 2)^2 = 32 < 36
    QuadReal w(Rat(-18), Rat(4), 2);
    CHECK(w.ceil() == -12);
}

TEST_CASE("quad_sign agrees with enclosure signs on random values") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    std::uniform_int_distribution<int> qs(0, 3);
    const unsigned long qvals[4] = {2, 3, 5, 7};
    for (int i = 0; i < 10000; ++i) {
        QuadReal x(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), qvals[qs(rng)]);
        Sign s = quad_sign(x);
        for (long p = 64; p <= 512; p *= 2) {
            auto es = Enclosure::from_quad(x, p).sgn();
            if (es) {
                CHECK(*es == s);
                break;
            }
            // undecided enclosure is only acceptable for the exact zero
            if (p == 512) CHECK(s == Sign::Zero);
        }
    }
}

TEST_CASE("mixed radicands throw unless one side is rational") {
    QuadReal a(Rat(1), Rat(1), 2), b(Rat(1), Rat(1), 3);
    CHECK_THROWS_AS(a + b, DomainError);
    CHECK((QuadReal(Rat(2)) + a).radicand() == 2);
}
