// Predicates deciding whether a real polynomial of degree <= 5 over Q(sqrt(q))
// has all roots real and non-negative (or positive), via closed-form
// coefficient criteria, with an exact Sturm oracle as the last tier.
//
// Decisions are exact. Tier 1 is rational/QuadReal inequalities, with
// two-sided radical bounds decided by squaring both non-negative sides.
// Tier 2 is enclosure arithmetic with precision doubling. Tier 3 resolves the
// remaining comparisons exactly (theta-cubic Sturm counts, or the Sturm count
// on the full polynomial), so boundary (equality) inputs are never
// misclassified.
//
// The degree 2, 3 and 4 criteria as printed in their source carry sign typos:
// the a1, a2 and a0 side conditions contradict the Vieta signs forced by
// non-negative roots. The corrected senses are the default; the printed ones
// remain available behind PredicateOptions::literal_signs for diagnostics,
// and the corrected predicates are regression-locked against the Sturm
// oracle.

#ifndef WEILPOLY_REALROOTS_HPP
#define WEILPOLY_REALROOTS_HPP

#include "resolvent.hpp"

namespace weilpoly {

enum class RootMode { Real, RealNonNeg, RealPos };

struct PredicateOptions {
    bool literal_signs = false;  // use the printed (incorrect) sign conditions
    bool sort_thetas = true;     // false: construction-order thetas (fault injection)
    PrecisionConfig prec{};
};

inline QuadReal pow_quad(const QuadReal& x, unsigned e) {
    QuadReal r(1);
    for (unsigned i = 0; i < e; ++i) r = r * x;
    return r;
}

// ---------- exact Sturm oracle ----------

// Exact decision: all roots real (and >= 0 / > 0) counted with multiplicity.
inline bool hyperbolic_nonneg_exact(const Poly<QuadReal>& p, RootMode mode, unsigned long q) {
    if (p.is_zero()) throw DomainError("hyperbolic_nonneg_exact: zero polynomial");
    long deg = p.degree();
    if (deg == 0) return true;
    int all = count_real_roots_with_multiplicity(p, Bound(NegInf{}), Bound(PosInf{}), q);
    if (all != deg) return false;
    if (mode == RootMode::Real) return true;
    int upto0 = count_real_roots_with_multiplicity(p, Bound(NegInf{}), Bound(QuadReal(0)), q);
    if (mode == RootMode::RealPos) return upto0 == 0;
    return upto0 == static_cast<int>(p.trailing_zeros());
}

inline bool hyperbolic_nonneg_exact(const Poly<Rat>& p, RootMode mode) {
    return hyperbolic_nonneg_exact(to_quad(p, 1), mode, 1);
}

// ---------- degree 2 ----------

// a2 x^2 + a1 x + a0, a2 > 0. Corrected side condition a1 <= 0.
inline bool deg2_real_nonneg(const QuadReal& a2, const QuadReal& a1, const QuadReal& a0,
                             bool strict, const PredicateOptions& opts = {}) {
    if (a2.sgn() != Sign::Positive) throw PreconditionViolated("deg2: leading coefficient");
    QuadReal disc = a1 * a1 - QuadReal(4) * a2 * a0;
    if (disc.sgn() == Sign::Negative) return false;
    Sign s1 = a1.sgn();
    bool vertex_ok = opts.literal_signs ? (strict ? s1 == Sign::Positive : s1 != Sign::Negative)
                                        : (strict ? s1 == Sign::Negative : s1 != Sign::Positive);
    if (!vertex_ok) return false;
    Sign s0 = a0.sgn();
    return strict ? s0 == Sign::Positive : s0 != Sign::Negative;
}

// ---------- degree 3 ----------

// a3 x^3 + a2 x^2 + a1 x + a0, a3 > 0. Corrected side condition a2 <= 0.
// The two-sided bound (dagger) |27 a3^2 a0 + 2 a2^3 - 9 a1 a2 a3| <=
// 2 (a2^2 - 3 a1 a3)^{3/2} is decided exactly by squaring both sides.
inline bool deg3_real_nonneg(const QuadReal& a3, const QuadReal& a2, const QuadReal& a1,
                             const QuadReal& a0, bool strict, const PredicateOptions& opts = {}) {
    if (a3.sgn() != Sign::Positive) throw PreconditionViolated("deg3: leading coefficient");
    Sign s2 = a2.sgn();
    bool c2 = opts.literal_signs ? (strict ? s2 == Sign::Positive : s2 != Sign::Negative)
                                 : (strict ? s2 == Sign::Negative : s2 != Sign::Positive);
    if (!c2) return false;
    Sign s1 = a1.sgn();
    if (strict ? s1 != Sign::Positive : s1 == Sign::Negative) return false;
    QuadReal radicand = a2 * a2 - QuadReal(3) * a1 * a3;
    if (radicand.sgn() == Sign::Negative) return false;  // also enforces a1 <= a2^2/(3a3)
    Sign s0 = a0.sgn();
    if (strict ? s0 != Sign::Negative : s0 == Sign::Positive) return false;
    QuadReal lhs = QuadReal(27) * a3 * a3 * a0 + QuadReal(2) * a2 * a2 * a2 -
                   QuadReal(9) * a1 * a2 * a3;
    return (lhs * lhs - QuadReal(4) * radicand * radicand * radicand).sgn() != Sign::Positive;
}

// ---------- theta window ----------

// Exact truth of theta_1 <= c <= theta_2 for the sorted theta multiset of
// (u2, u3); enclosures first, then Sturm counts on the theta cubic.
inline bool theta_window_contains(const ResolventData& rd, const QuadReal& u2,
                                  const QuadReal& u3, const QuadReal& c, unsigned long q,
                                  long prec) {
    if (rd.exact) return (*rd.exact)[0] <= c && c <= (*rd.exact)[1];
    Enclosure ce = Enclosure::from_quad(c, prec);
    if (ce.provably_less(rd.theta[0]) || rd.theta[1].provably_less(ce)) return false;
    if (rd.theta[0].provably_less(ce) && ce.provably_less(rd.theta[1])) return true;
    auto pos = theta_position(u2, u3, c, q);
    bool lo_ok = pos.below >= 1 || pos.equal >= 1;  // theta_1 <= c
    bool hi_ok = pos.below <= 1;                    // c <= theta_2
    return lo_ok && hi_ok;
}

// ---------- degree 4 ----------

// a4 x^4 + ... + a0, a4 > 0. Corrected condition (vi): a0 >= 0.
inline bool deg4_real_nonneg(const QuadReal& a4, const QuadReal& a3, const QuadReal& a2,
                             const QuadReal& a1, const QuadReal& a0, bool strict,
                             unsigned long q, const PredicateOptions& opts = {}) {
    if (a4.sgn() != Sign::Positive) throw PreconditionViolated("deg4: leading coefficient");
    Sign s3 = a3.sgn();  // (i) a3 <= 0
    if (strict ? s3 != Sign::Negative : s3 == Sign::Positive) return false;
    Sign s2 = a2.sgn();  // (ii) 0 <= a2
    if (strict ? s2 != Sign::Positive : s2 == Sign::Negative) return false;
    // (iii) a2 <= 3 a3^2/(8 a4)
    if ((QuadReal(3) * a3 * a3 - QuadReal(8) * a4 * a2).sgn() == Sign::Negative) return false;
    Sign s1 = a1.sgn();  // (iv) a1 <= 0
    if (strict ? s1 != Sign::Negative : s1 == Sign::Positive) return false;
    // (v) |a1 - (a3 a2/(2 a4) - a3^3/(8 a4^2))| <= (1/a4^2)(a3^2/4 - 2 a2 a4/3)^{3/2}
    QuadReal e4 = a3 * a3 / QuadReal(4) - QuadReal(Rat(2, 3)) * a2 * a4;  // >= 0 by (iii)
    QuadReal center = a3 * a2 / (QuadReal(2) * a4) - a3 * a3 * a3 / (QuadReal(8) * a4 * a4);
    QuadReal dev = a1 - center;
    if ((dev * dev * pow_quad(a4, 4) - e4 * e4 * e4).sgn() == Sign::Positive) return false;
    // (vi) a0 >= 0 (printed source has a0 <= 0)
    Sign s0 = a0.sgn();
    bool c0 = opts.literal_signs ? (strict ? s0 == Sign::Negative : s0 != Sign::Positive)
                                 : (strict ? s0 == Sign::Positive : s0 != Sign::Negative);
    if (!c0) return false;
    // (i)-(v) say f' has real non-negative roots, so Delta <= 0 and S is real.
    QuadReal u2 = (QuadReal(8) * a2 * a4 - QuadReal(3) * a3 * a3) / (QuadReal(16) * a4 * a4);
    QuadReal u3 = (a3 * a3 * a3 - QuadReal(4) * a2 * a3 * a4 + QuadReal(8) * a1 * a4 * a4) /
                  (QuadReal(32) * a4 * a4 * a4);
    QuadReal G = QuadReal(3) * pow_quad(a3, 4) / (QuadReal(256) * a4 * a4 * a4) -
                 a3 * a3 * a2 / (QuadReal(16) * a4 * a4) + a3 * a1 / (QuadReal(4) * a4);
    QuadReal c = (a0 - G) / a4;  // (dagger dagger): theta_1 <= c <= theta_2
    try {
        ResolventData rd = theta_sorted(u2, u3, q, opts.prec);
        if (!opts.sort_thetas && !rd.exact) {
            // fault-injection mode: decide from construction-order enclosures
            Enclosure ce = Enclosure::from_quad(c, opts.prec.start);
            if (rd.theta_raw[0].provably_less(ce) && ce.provably_less(rd.theta_raw[1]))
                return true;
            if (ce.provably_less(rd.theta_raw[0]) || rd.theta_raw[1].provably_less(ce))
                return false;
            // ambiguous under the fault: fall through to the sorted decision
        }
        return theta_window_contains(rd, u2, u3, c, q, opts.prec.start);
    } catch (const DeltaPositive&) {
        return false;  // f' not real-rooted
    } catch (const PrecisionExhausted&) {
        Poly<QuadReal> f{a0, a1, a2, a3, a4};
        return hyperbolic_nonneg_exact(f, strict ? RootMode::RealPos : RootMode::RealNonNeg, q);
    }
}

// ---------- degree 5 (monic) ----------

// x^5 + a4 x^4 + a3 x^3 + a2 x^2 + a1 x + a0. The bound (ix) uses the
// critical values f(beta) - a0 at the sorted roots beta of f'; enclosure
// comparisons refine, and any remaining ambiguity goes to the Sturm oracle.
inline bool deg5_monic_real_nonneg(const QuadReal& a4, const QuadReal& a3, const QuadReal& a2,
                                   const QuadReal& a1, const QuadReal& a0, bool strict,
                                   unsigned long q, const PredicateOptions& opts = {}) {
    Poly<QuadReal> f{a0, a1, a2, a3, a4, QuadReal(1)};
    auto fallback = [&]() {
        return hyperbolic_nonneg_exact(f, strict ? RootMode::RealPos : RootMode::RealNonNeg, q);
    };
    Sign s4 = a4.sgn();  // (i) a4 <= 0
    if (strict ? s4 != Sign::Negative : s4 == Sign::Positive) return false;
    Sign s3 = a3.sgn();  // (ii) 0 <= a3
    if (strict ? s3 != Sign::Positive : s3 == Sign::Negative) return false;
    // (iii) a3 <= (2/5) a4^2
    QuadReal e5 = QuadReal(Rat(4, 25)) * a4 * a4 - QuadReal(Rat(2, 5)) * a3;
    if (e5.sgn() == Sign::Negative) return false;
    // (iv) |a2 - (3 a3 a4/5 - 4 a4^3/25)| <= (5/2) e5^{3/2}
    QuadReal center = QuadReal(Rat(3, 5)) * a3 * a4 - QuadReal(Rat(4, 25)) * a4 * a4 * a4;
    QuadReal dev = a2 - center;
    if ((dev * dev - QuadReal(Rat(25, 4)) * e5 * e5 * e5).sgn() == Sign::Positive) return false;
    Sign s2 = a2.sgn();  // (v) a2 <= 0
    if (strict ? s2 != Sign::Negative : s2 == Sign::Positive) return false;
    // (vi) E + 5 theta_1 <= a1 <= E + 5 theta_2
    QuadReal u2 = QuadReal(Rat(3, 10)) * a3 - QuadReal(Rat(3, 25)) * a4 * a4;
    QuadReal u3 = QuadReal(Rat(2, 125)) * a4 * a4 * a4 - QuadReal(Rat(3, 50)) * a3 * a4 +
                  QuadReal(Rat(1, 10)) * a2;
    QuadReal E = QuadReal(Rat(3, 125)) * pow_quad(a4, 4) - QuadReal(Rat(3, 25)) * a4 * a4 * a3 +
                 QuadReal(Rat(2, 5)) * a2 * a4;
    QuadReal c = (a1 - E) / QuadReal(5);
    try {
        ResolventData rd = theta_sorted(u2, u3, q, opts.prec);
        if (!theta_window_contains(rd, u2, u3, c, q, opts.prec.start)) return false;
    } catch (const DeltaPositive&) {
        return false;  // f'' not real-rooted
    } catch (const PrecisionExhausted&) {
        return fallback();
    }
    Sign s1 = a1.sgn();  // (vii) 0 <= a1
    if (strict ? s1 != Sign::Positive : s1 == Sign::Negative) return false;
    Sign s0 = a0.sgn();  // (viii) a0 <= 0
    if (strict ? s0 != Sign::Negative : s0 == Sign::Positive) return false;
    // (ix) -lambda_2 <= a0 <= -lambda_1
    QuadReal u4 = QuadReal(Rat(-3, 625)) * pow_quad(a4, 4) +
                  QuadReal(Rat(3, 125)) * a4 * a4 * a3 - QuadReal(Rat(2, 25)) * a4 * a2 +
                  QuadReal(Rat(1, 5)) * a1;
    const PrecisionConfig& pc = opts.prec;
    long p = pc.start;
    while (true) {
        FerrariData fd;
        try {
            fd = ferrari_roots(u2, u3, u4, q, PrecisionConfig{p, pc.cap});
        } catch (const PrecisionExhausted&) {
            return fallback();
        } catch (const DomainError&) {
            return fallback();  // degraded enclosures at tiny caps
        }
        if (!fd.all_real) return false;  // f' not real-rooted
        // beta_i = gamma_i - a4/5 ascending; critical values of f minus a0
        Poly<QuadReal> V{QuadReal(0), a1, a2, a3, a4, QuadReal(1)};
        Enclosure shift = Enclosure::from_quad(a4 / QuadReal(5), p);
        std::array<Enclosure, 4> vals{Enclosure(p), Enclosure(p), Enclosure(p), Enclosure(p)};
        for (std::size_t i = 0; i < 4; ++i) {
            Enclosure beta = fd.gamma[i] - shift;
            Enclosure acc = Enclosure::exact_int(0, p);
            for (std::size_t k = V.coeffs().size(); k-- > 0;)
                acc = acc * beta + Enclosure::from_quad(V.coeffs()[k], p);
            vals[i] = acc;
        }
        // descending betas: beta1 = gamma4, beta3 = gamma2 etc.
        Enclosure lam1 = Enclosure::interval_max(vals[3], vals[1]);
        Enclosure lam2 = Enclosure::interval_min(vals[2], vals[0]);
        Enclosure a0e = Enclosure::from_quad(a0, p);
        if (a0e.provably_less(-lam2) || (-lam1).provably_less(a0e)) return false;
        if ((-lam2).provably_less(a0e) && a0e.provably_less(-lam1)) return true;
        if (p >= pc.cap) return fallback();
        p = std::min(p * 2, pc.cap);
    }
}

}  // namespace weilpoly

#endif
