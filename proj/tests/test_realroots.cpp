#include <doctest.h>

#include "weilpoly/diamond.hpp"

#include <random>

using namespace weilpoly;

namespace {
QuadReal rq(long a, long b, unsigned long q) { return QuadReal(Rat(a), Rat(b), q); }
}  // namespace

TEST_CASE("degree-2 predicate on the named examples") {
    CHECK(deg2_real_nonneg(QuadReal(1), QuadReal(-3), QuadReal(2), false));   // roots 1, 2
    CHECK(!deg2_real_nonneg(QuadReal(1), QuadReal(2), QuadReal(1), false));   // roots -1, -1
    // x^2 - 4 sqrt2 x + 8 = (x - 2 sqrt2)^2: discriminant 32 - 32 = 0 exactly
    CHECK(deg2_real_nonneg(QuadReal(1), rq(0, -4, 2), QuadReal(8), false));
    CHECK(deg2_real_nonneg(QuadReal(1), rq(0, -4, 2), QuadReal(8), true));  // double root 2 sqrt2 > 0
    CHECK(!deg2_real_nonneg(QuadReal(1), QuadReal(-2), QuadReal(0), true));  // root 0
    CHECK(deg2_real_nonneg(QuadReal(1), QuadReal(-2), QuadReal(0), false));
}

TEST_CASE("degree-3 predicate on the named examples") {
    CHECK(deg3_real_nonneg(QuadReal(1), QuadReal(-6), QuadReal(11), QuadReal(-6), false));
    CHECK(!deg3_real_nonneg(QuadReal(1), QuadReal(0), QuadReal(0), QuadReal(1), false));
    // (x - sqrt2)^2 (x - 4 sqrt2) = x^3 - 6 sqrt2 x^2 + 18 x - 8 sqrt2
    // (expansion is the oracle for the coefficients)
    Poly<QuadReal> lin1{-QuadReal::sqrt_q(2), QuadReal(1)};
    Poly<QuadReal> lin2{QuadReal(Rat(0), Rat(-4), 2), QuadReal(1)};
    Poly<QuadReal> prod = lin1 * lin1 * lin2;
    CHECK(prod.coeff(2) == rq(0, -6, 2));
    CHECK(prod.coeff(1) == QuadReal(18));
    CHECK(prod.coeff(0) == rq(0, -8, 2));
    CHECK(deg3_real_nonneg(QuadReal(1), prod.coeff(2), prod.coeff(1), prod.coeff(0), false));
    // cross-check the squared (dagger) arithmetic against the Sturm oracle
    CHECK(hyperbolic_nonneg_exact(prod, RootMode::RealNonNeg, 2));
    CHECK(deg3_real_nonneg(QuadReal(1), prod.coeff(2), prod.coeff(1), prod.coeff(0), true));
}

TEST_CASE("degree-4 predicate on the named examples") {
    CHECK(deg4_real_nonneg(QuadReal(1), QuadReal(-10), QuadReal(35), QuadReal(-50), QuadReal(24),
                           false, 1));
    CHECK(!deg4_real_nonneg(QuadReal(1), QuadReal(0), QuadReal(0), QuadReal(0), QuadReal(1),
                            false, 1));
    // x^4 - 4x^2 + 4 = (x^2-2)^2: real but not non-negative roots
    CHECK(!deg4_real_nonneg(QuadReal(1), QuadReal(0), QuadReal(-4), QuadReal(0), QuadReal(4),
                            false, 1));
}

TEST_CASE("degree-4 predicate agrees with the oracle on the synthetic h+ input") {
    // candidate prefix (q=4, a=(-4,10,-16,16)); trace shift gives
    // h+ = x^4 - 20x^3 + 138x^2 - 368x + 256, and the Sturm oracle decides
    QuadReal b3(-20), b2(138), b1(-368), b0(256);
    Poly<QuadReal> hp{b0, b1, b2, b3, QuadReal(1)};
    bool oracle = hyperbolic_nonneg_exact(hp, RootMode::RealNonNeg, 4);
    bool pred = deg4_real_nonneg(QuadReal(1), b3, b2, b1, b0, false, 4);
    CHECK(pred == oracle);
    CHECK(!pred);  // only two real roots, so not real-rooted
}

TEST_CASE("degree-5 predicate on the named examples") {
    CHECK(deg5_monic_real_nonneg(QuadReal(-15), QuadReal(85), QuadReal(-225), QuadReal(274),
                                 QuadReal(-120), false, 1));
    CHECK(deg5_monic_real_nonneg(QuadReal(-15), QuadReal(85), QuadReal(-225), QuadReal(274),
                                 QuadReal(-120), true, 1));
    CHECK(!deg5_monic_real_nonneg(QuadReal(0), QuadReal(0), QuadReal(0), QuadReal(0), QuadReal(1),
                                  false, 1));
    // x^5: all roots zero, non-negative but not positive
    CHECK(deg5_monic_real_nonneg(QuadReal(0), QuadReal(0), QuadReal(0), QuadReal(0), QuadReal(0),
                                 false, 1));
    CHECK(!deg5_monic_real_nonneg(QuadReal(0), QuadReal(0), QuadReal(0), QuadReal(0), QuadReal(0),
                                  true, 1));
}

TEST_CASE("exhaustive small grids agree with the Sturm oracle (degrees 2, 3)") {
    for (long a2 = 1; a2 <= 3; ++a2)
        for (long a1 = -4; a1 <= 4; ++a1)
            for (long a0 = -4; a0 <= 4; ++a0) {
                Poly<QuadReal> f{QuadReal(a0), QuadReal(a1), QuadReal(a2)};
                CHECK(deg2_real_nonneg(QuadReal(a2), QuadReal(a1), QuadReal(a0), false) ==
                      hyperbolic_nonneg_exact(f, RootMode::RealNonNeg, 1));
                CHECK(deg2_real_nonneg(QuadReal(a2), QuadReal(a1), QuadReal(a0), true) ==
                      hyperbolic_nonneg_exact(f, RootMode::RealPos, 1));
            }
    for (long a3 = 1; a3 <= 2; ++a3)
        for (long a2 = -4; a2 <= 4; ++a2)
            for (long a1 = -4; a1 <= 4; ++a1)
                for (long a0 = -4; a0 <= 4; ++a0) {
                    Poly<QuadReal> f{QuadReal(a0), QuadReal(a1), QuadReal(a2), QuadReal(a3)};
                    CHECK(deg3_real_nonneg(QuadReal(a3), QuadReal(a2), QuadReal(a1), QuadReal(a0),
                                           false) ==
                          hyperbolic_nonneg_exact(f, RootMode::RealNonNeg, 1));
                    CHECK(deg3_real_nonneg(QuadReal(a3), QuadReal(a2), QuadReal(a1), QuadReal(a0),
                                           true) ==
                          hyperbolic_nonneg_exact(f, RootMode::RealPos, 1));
                }
}

TEST_CASE("random degree 4/5 inputs agree with the Sturm oracle") {
    std::mt19937_64 rng(1111);
    std::uniform_int_distribution<long> cd(-12, 12);
    std::uniform_int_distribution<long> rootd(-4, 4);
    std::uniform_int_distribution<int> mode(0, 2);
    for (int it = 0; it < 3000; ++it) {
        long a4, a3, a2, a1, a0;
        int m = mode(rng);
        if (m == 0) {
            a4 = 0;
            while (a4 == 0) a4 = std::abs(cd(rng));
            a3 = cd(rng); a2 = cd(rng); a1 = cd(rng); a0 = cd(rng);
        } else {
            // product of linear factors, optionally perturbed
            long r1 = rootd(rng), r2 = rootd(rng), r3 = rootd(rng), r4 = rootd(rng);
            Poly<Rat> f{Rat(1)};
            for (long r : {r1, r2, r3, r4}) f = f * Poly<Rat>{Rat(-r), Rat(1)};
            a4 = 1;
            a3 = f.coeff(3).get_num().get_si();
            a2 = f.coeff(2).get_num().get_si();
            a1 = f.coeff(1).get_num().get_si();
            a0 = f.coeff(0).get_num().get_si();
            if (m == 2) a0 += (it % 3) - 1;
        }
        Poly<QuadReal> f{QuadReal(a0), QuadReal(a1), QuadReal(a2), QuadReal(a3), QuadReal(a4)};
        CHECK(deg4_real_nonneg(QuadReal(a4), QuadReal(a3), QuadReal(a2), QuadReal(a1),
                               QuadReal(a0), false, 1) ==
              hyperbolic_nonneg_exact(f, RootMode::RealNonNeg, 1));
    }
    for (int it = 0; it < 1500; ++it) {
        long a4, a3, a2, a1, a0;
        int m = mode(rng);
        if (m == 0) {
            a4 = cd(rng); a3 = cd(rng); a2 = cd(rng); a1 = cd(rng); a0 = cd(rng);
        } else {
            long r1 = rootd(rng), r2 = rootd(rng), r3 = rootd(rng), r4 = rootd(rng),
                 r5 = rootd(rng);
            Poly<Rat> f{Rat(1)};
            for (long r : {r1, r2, r3, r4, r5}) f = f * Poly<Rat>{Rat(-r), Rat(1)};
            a4 = f.coeff(4).get_num().get_si();
            a3 = f.coeff(3).get_num().get_si();
            a2 = f.coeff(2).get_num().get_si();
            a1 = f.coeff(1).get_num().get_si();
            a0 = f.coeff(0).get_num().get_si();
            if (m == 2) a1 += (it % 3) - 1;
        }
        Poly<QuadReal> f{QuadReal(a0), QuadReal(a1), QuadReal(a2), QuadReal(a3), QuadReal(a4),
                         QuadReal(1)};
        CHECK(deg5_monic_real_nonneg(QuadReal(a4), QuadReal(a3), QuadReal(a2), QuadReal(a1),
                                     QuadReal(a0), false, 1) ==
              hyperbolic_nonneg_exact(f, RootMode::RealNonNeg, 1));
        CHECK(deg5_monic_real_nonneg(QuadReal(a4), QuadReal(a3), QuadReal(a2), QuadReal(a1),
                                     QuadReal(a0), true, 1) ==
              hyperbolic_nonneg_exact(f, RootMode::RealPos, 1));
    }
}

TEST_CASE("diamond criterion on the named examples") {
    // (x-1)^2 (x-3) = x^3 - 5x^2 + 7x - 3 with critical values at 1 and 7/3
    Poly<QuadReal> f{QuadReal(-3), QuadReal(7), QuadReal(-5), QuadReal(1)};
    DiamondInput in{f, {BetaValue(QuadReal(1)), BetaValue(QuadReal(Rat(7, 3)))}, 1};
    CHECK(diamond_all_real(in, RootMode::Real) == Decision::Yes);
    // x^3 - 3x + 5 has critical points -1, 1 and f(1) = 3 > 0
    Poly<QuadReal> g{QuadReal(5), QuadReal(-3), QuadReal(0), QuadReal(1)};
    DiamondInput in2{g, {BetaValue(QuadReal(-1)), BetaValue(QuadReal(1))}, 1};
    CHECK(diamond_all_real(in2, RootMode::Real) == Decision::No);
    // x^3 - 6x^2: betas (0, 4); roots {0, 0, 6}
    Poly<QuadReal> h{QuadReal(0), QuadReal(0), QuadReal(-6), QuadReal(1)};
    DiamondInput in3{h, {BetaValue(QuadReal(0)), BetaValue(QuadReal(4))}, 1};
    CHECK(diamond_all_real(in3, RootMode::Real) == Decision::Yes);
    CHECK(diamond_all_real(in3, RootMode::RealNonNeg) == Decision::Yes);
    CHECK(diamond_all_real(in3, RootMode::RealPos) == Decision::No);
}

TEST_CASE("diamond rejects a derivative with nonreal roots") {
    Poly<QuadReal> f{QuadReal(0), QuadReal(3), QuadReal(0), QuadReal(1)};  // f' = 3x^2+3
    DiamondInput in{f, {BetaValue(QuadReal(0)), BetaValue(QuadReal(0))}, 1};
    CHECK_THROWS_AS(diamond_all_real(in, RootMode::Real), PreconditionViolated);
}

TEST_CASE("diamond resolves enclosure betas where f vanishes") {
    // f = (x^2-2)^2 has critical points -sqrt2, 0, sqrt2 and f(+-sqrt2) = 0;
    // a ball evaluation at an inexact sqrt2 enclosure straddles zero forever,
    // so the sign must come from gcd(f, f') root containment.
    Poly<QuadReal> f{QuadReal(4), QuadReal(0), QuadReal(-4), QuadReal(0), QuadReal(1)};
    Enclosure near_rt2 = Enclosure::hull(Enclosure::from_rat(Rat(141, 100), 64),
                                         Enclosure::from_rat(Rat(142, 100), 64));
    Enclosure near_neg = -near_rt2;
    DiamondInput in{f, {BetaValue(near_neg), BetaValue(QuadReal(0)), BetaValue(near_rt2)}, 2};
    CHECK(diamond_all_real(in, RootMode::Real) == Decision::Yes);
    CHECK(diamond_all_real(in, RootMode::RealNonNeg) == Decision::No);  // root -sqrt2
}

TEST_CASE("SIGN/MULT checker on the named examples") {
    Poly<QuadReal> f{QuadReal(-3), QuadReal(7), QuadReal(-5), QuadReal(1)};
    CHECK(sign_mult_all_real(f, RootMode::Real, 1) == Decision::Yes);
    Poly<QuadReal> g{QuadReal(5), QuadReal(-3), QuadReal(0), QuadReal(1)};
    CHECK(sign_mult_all_real(g, RootMode::Real, 1) == Decision::No);
}

TEST_CASE("SIGN/MULT agrees with the diamond criterion on constructed cases") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> rootd(-5, 5);
    std::uniform_int_distribution<int> degd(2, 6);
    std::uniform_int_distribution<long> constd(-30, 30);
    for (int it = 0; it < 800; ++it) {
        // f' is a product of real linear factors; f is its antiderivative
        // plus a random constant, so the diamond precondition holds
        int dm1 = degd(rng);
        Poly<Rat> fp{Rat(dm1 + 1)};  // leading factor keeps f monic-ish
        for (int i = 0; i < dm1; ++i) fp = fp * Poly<Rat>{Rat(-rootd(rng)), Rat(1)};
        std::vector<Rat> coef(static_cast<std::size_t>(dm1 + 2), Rat(0));
        coef[0] = Rat(constd(rng));
        for (long i = 0; i <= dm1; ++i)
            coef[static_cast<std::size_t>(i + 1)] = fp.coeff(static_cast<std::size_t>(i)) / (i + 1);
        Poly<QuadReal> f = to_quad(Poly<Rat>(std::move(coef)), 1);
        // profile parity invariant: k and K have opposite parity
        CriticalPointProfile prof = critical_point_profile(f, 1);
        CHECK((prof.K - prof.k) % 2 == 1);
        for (RootMode m : {RootMode::Real, RootMode::RealNonNeg, RootMode::RealPos}) {
            Decision a = diamond_all_real(f, m, 1);
            Decision b = sign_mult_all_real(f, m, 1);
            CHECK(a == b);
            bool oracle = hyperbolic_nonneg_exact(f, m, 1);
            CHECK((a == Decision::Yes) == oracle);
        }
    }
}

TEST_CASE("literal sign conditions flip decisions") {
    PredicateOptions lit;
    lit.literal_signs = true;
    // roots 1, 2: corrected predicate accepts, literal one rejects (a1 < 0)
    CHECK(deg2_real_nonneg(QuadReal(1), QuadReal(-3), QuadReal(2), false));
    CHECK(!deg2_real_nonneg(QuadReal(1), QuadReal(-3), QuadReal(2), false, lit));
    // roots 1, 2, 3
    CHECK(!deg3_real_nonneg(QuadReal(1), QuadReal(-6), QuadReal(11), QuadReal(-6), false, lit));
    // roots 1..4: literal (vi) wants a0 <= 0 but a0 = 24
    CHECK(!deg4_real_nonneg(QuadReal(1), QuadReal(-10), QuadReal(35), QuadReal(-50), QuadReal(24),
                            false, 1, lit));
}
