// Closed-form resolvent machinery: the sorted set S = {theta_1 <= theta_2 <=
// theta_3} attached to a depressed cubic y^3 + u2 y + u3, and Ferrari root
// enclosures for a depressed quartic x^4 + 2 u2 x^2 + 4 u3 x + u4.
//
// theta values are computed from the radical formula
//   theta_k = -zeta^k w (9u3/2 + 3 sqrt(D)/2) - zeta^-k conj(w) (...) + 2u2^2/3
// with w a cube root of (-u3 + sqrt(D))/2, evaluated in polar form on real
// enclosures. The same multiset is the root multiset of the exact cubic
//   T^3 - 2u2^2 T^2 + (u2^4 + 18 u2 u3^2) T - (2 u2^3 u3^2 + 27 u3^4),
// equivalently {-u2 y^2 - 3 u3 y : y root of y^3 + u2 y + u3}, which is used
// for exact tie detection and exact comparisons against QuadReal values.

#ifndef WEILPOLY_RESOLVENT_HPP
#define WEILPOLY_RESOLVENT_HPP

#include "sturm.hpp"
#include "ball.hpp"

#include <array>
#include <optional>

namespace weilpoly {

struct ResolventData {
    QuadReal u2, u3, Delta;
    std::array<Enclosure, 3> theta;      // sorted ascending
    std::array<Enclosure, 3> theta_raw;  // construction order k = 0, 1, 2
    bool eq12 = false, eq23 = false;     // exact ties among sorted thetas
    std::optional<std::array<QuadReal, 3>> exact;  // set when thetas are exact
};

// Monic cubic whose root multiset is S.
inline Poly<QuadReal> theta_cubic(const QuadReal& u2, const QuadReal& u3) {
    QuadReal e1 = QuadReal(2) * u2 * u2;
    QuadReal e2 = u2 * u2 * u2 * u2 + QuadReal(18) * u2 * u3 * u3;
    QuadReal e3 = QuadReal(2) * u2 * u2 * u2 * u3 * u3 + QuadReal(27) * u3 * u3 * u3 * u3;
    return Poly<QuadReal>{-e3, e2, -e1, QuadReal(1)};
}

// Construction-order thetas for a chosen cube-root branch (0, 1, 2) and a
// choice of primitive third root of unity (false: zeta, true: zeta^2). The
// returned multiset is branch-independent; the parameters exist so tests can
// assert exactly that.
inline std::array<Enclosure, 3> theta_enclosures(const QuadReal& u2, const QuadReal& u3,
                                                 const QuadReal& Delta, long prec,
                                                 int omega_branch = 0, bool zeta_conj = false) {
    // polar data of w^3 = (-u3 + sqrt(Delta))/2 = (-u3/2, s/2), s = sqrt(-Delta)
    Enclosure s = Enclosure::from_quad(-Delta, prec).sqrt();
    Enclosure two = Enclosure::exact_int(2, prec);
    Enclosure re = Enclosure::from_quad(-u3, prec) / two;
    Enclosure im = s / two;
    Enclosure r = Enclosure::hypot(re, im);
    Enclosure rho = r.cbrt();
    Enclosure A = Enclosure::from_quad(QuadReal(Rat(9, 2)) * u3, prec);
    Enclosure B = Enclosure::exact_int(3, prec) * s / two;
    Enclosure base = Enclosure::from_quad(QuadReal(Rat(2, 3)) * u2 * u2, prec);
    std::array<Enclosure, 3> out{Enclosure(prec), Enclosure(prec), Enclosure(prec)};
    if (u2.is_zero() && u3.is_zero()) {
        for (auto& o : out) o = Enclosure::exact_int(0, prec);
        return out;
    }
    if (r.contains_zero()) {
        // cannot form the polar angle; fall back to the rigorous bound
        // |theta_k - 2u2^2/3| <= 2 rho (|A| + B)
        Enclosure env = Enclosure::exact_int(2, prec) * rho * (A.abs() + B);
        Enclosure wide = Enclosure::hull(base - env, base + env);
        for (auto& o : out) o = wide;
        return out;
    }
    Enclosure t = Enclosure::atan2_upper(im, re);
    Enclosure pi = Enclosure::pi(prec);
    Enclosure three = Enclosure::exact_int(3, prec);
    for (int k = 0; k < 3; ++k) {
        long rot = zeta_conj ? ((3 - k) % 3) : k;
        long shift = (rot + omega_branch) % 3;
        Enclosure phi = (t + Enclosure::exact_int(2 * shift, prec) * pi) / three;
        // theta_k = -2 rho (A cos(phi) - B sin(phi)) + 2u2^2/3
        Enclosure val = base - two * rho * (A * phi.cos() - B * phi.sin());
        out[static_cast<std::size_t>(k)] = val;
    }
    return out;
}

// Exact position of c within the theta multiset: number of thetas strictly
// below c and the multiplicity of c as a theta value.
struct ThetaPosition {
    int below;
    int equal;
};

inline ThetaPosition theta_position(const QuadReal& u2, const QuadReal& u3, const QuadReal& c,
                                    unsigned long q) {
    Poly<QuadReal> cubic = theta_cubic(u2, u3);
    int eq = 0;
    Poly<QuadReal> d1 = cubic.derivative();
    if (cubic.eval(c).is_zero()) {
        eq = 1;
        if (d1.eval(c).is_zero()) {
            eq = 2;
            if (d1.derivative().eval(c).is_zero()) eq = 3;
        }
    }
    int le = count_real_roots_with_multiplicity(cubic, Bound(NegInf{}), Bound(c), q);
    return {le - eq, eq};
}

// Sorted theta data. Precondition Delta <= 0 (exact); throws DeltaPositive
// otherwise. Ties are resolved exactly: for u3 = 0 the multiset is
// {0, u2^2, u2^2}; for Delta = 0, u3 != 0 it is two exact rational-like
// values; for Delta < 0 all three are distinct and enclosures separate them.
inline ResolventData theta_sorted(const QuadReal& u2, const QuadReal& u3, unsigned long q,
                                  const PrecisionConfig& cfg = {}) {
    ResolventData out;
    out.u2 = u2;
    out.u3 = u3;
    out.Delta = u3 * u3 + QuadReal(Rat(4, 27)) * u2 * u2 * u2;
    Sign ds = out.Delta.sgn();
    if (ds == Sign::Positive) throw DeltaPositive("theta_sorted: Delta > 0");
    long p0 = cfg.start;
    out.theta_raw = theta_enclosures(u2, u3, out.Delta, p0);

    auto set_exact = [&](std::array<QuadReal, 3> vals) {
        std::sort(vals.begin(), vals.end(), [](const QuadReal& a, const QuadReal& b) { return a < b; });
        out.eq12 = vals[0] == vals[1];
        out.eq23 = vals[1] == vals[2];
        for (int i = 0; i < 3; ++i)
            out.theta[static_cast<std::size_t>(i)] =
                Enclosure::from_quad(vals[static_cast<std::size_t>(i)], p0);
        out.exact = vals;
    };

    if (u3.is_zero()) {
        // roots of y^3 + u2 y are {0, +-sqrt(-u2)}; theta(y) = -u2 y^2
        set_exact({QuadReal(0), u2 * u2, u2 * u2});
        return out;
    }
    if (ds == Sign::Zero) {
        // double root y_d = -3u3/(2u2), simple root y_s = 3u3/u2
        QuadReal td = QuadReal(Rat(9, 4)) * u3 * u3 / u2;
        QuadReal ts = QuadReal(-18) * u3 * u3 / u2;
        set_exact({td, td, ts});
        return out;
    }
    // Delta < 0: three distinct thetas; refine until the sort is unambiguous
    for (long p = p0;; p = std::min(p * 2, cfg.cap)) {
        auto th = theta_enclosures(u2, u3, out.Delta, p);
        std::sort(th.begin(), th.end(), [](const Enclosure& a, const Enclosure& b) {
            return mpfr_less_p(a.lo(), b.lo());
        });
        if (th[0].provably_less(th[1]) && th[1].provably_less(th[2])) {
            out.theta = th;
            return out;
        }
        if (p >= cfg.cap) {
            // unseparated at the cap: order-statistic enclosures are still
            // sound ([k-th smallest lower, k-th smallest upper] contains the
            // k-th smallest value), so callers keep sound windows
            const Enclosure &A = th[0], &B = th[1], &C = th[2];
            out.theta[0] = Enclosure::interval_min(Enclosure::interval_min(A, B), C);
            out.theta[2] = Enclosure::interval_max(Enclosure::interval_max(A, B), C);
            out.theta[1] = Enclosure::interval_max(
                Enclosure::interval_max(Enclosure::interval_min(A, B),
                                        Enclosure::interval_min(A, C)),
                Enclosure::interval_min(B, C));
            return out;
        }
    }
}

// ---------------- Ferrari ----------------

struct FerrariData {
    QuadReal u2, u3, u4;  // quartic x^4 + 2u2 x^2 + 4u3 x + u4
    QuadReal v2, v3;
    Enclosure C_re{128}, C_im{128};  // chosen cube root (complex in general)
    Enclosure y{128};                // real root of the resolvent cubic
    bool all_real = false;           // exactly four real roots (Sturm)
    std::array<Enclosure, 4> gamma{Enclosure(128), Enclosure(128), Enclosure(128),
                                   Enclosure(128)};  // sorted when all_real
};

namespace detail {

// Real root of t^3 + v2 t + v3 via Cardano with a chosen branch; for branch 0
// and D < 0 this is the largest root. Returns (y, C_re, C_im).
struct CardanoY {
    Enclosure y, c_re, c_im;
};

// Branches other than 0 are honored where they still give a real root of the
// resolvent (D <= 0); with D > 0 or v2 = 0, v3 != 0 the non-principal cube
// roots give complex resolvent roots, which never arise for real-rooted
// quartics, so the principal value is used there.
inline CardanoY cardano_real_root(const QuadReal& v2, const QuadReal& v3, const QuadReal& shift,
                                  long prec, int branch = 0) {
    QuadReal D = v3 * v3 + QuadReal(Rat(4, 27)) * v2 * v2 * v2;
    Enclosure sh = Enclosure::from_quad(shift, prec);
    if (v2.is_zero()) {
        Enclosure c = Enclosure::from_quad(-v3, prec).cbrt();
        return {c - sh, c, Enclosure(prec)};
    }
    Sign dsg = D.sgn();
    if (dsg == Sign::Positive) {
        // one real root; C real = cbrt((-v3 + sqrt(D))/2), nonzero since v2 != 0
        Enclosure sd = Enclosure::from_quad(D, prec).sqrt();
        Enclosure c3 = (Enclosure::from_quad(-v3, prec) + sd) / Enclosure::exact_int(2, prec);
        Enclosure c = c3.cbrt();
        Enclosure v2e = Enclosure::from_quad(v2, prec);
        Enclosure y = c - v2e / (Enclosure::exact_int(3, prec) * c) - sh;
        return {y, c, Enclosure(prec)};
    }
    if (dsg == Sign::Zero) {
        // double root -C', simple root 2C' with C' = cbrt(-v3/2)
        Enclosure c = (Enclosure::from_quad(-v3, prec) / Enclosure::exact_int(2, prec)).cbrt();
        if (branch != 0) return {-c - sh, c, Enclosure(prec)};
        return {c + c - sh, c, Enclosure(prec)};
    }
    // D < 0: casus irreducibilis; y = 2 rho cos((t + 2 pi b)/3) - shift
    Enclosure s = Enclosure::from_quad(-D, prec).sqrt();
    Enclosure two = Enclosure::exact_int(2, prec);
    Enclosure re = Enclosure::from_quad(-v3, prec) / two;
    Enclosure im = s / two;
    Enclosure rho = Enclosure::hypot(re, im).cbrt();
    Enclosure t = Enclosure::atan2_upper(im, re);
    Enclosure phi = (t + Enclosure::exact_int(2 * branch, prec) * Enclosure::pi(prec)) /
                    Enclosure::exact_int(3, prec);
    Enclosure c_re = rho * phi.cos();
    Enclosure c_im = rho * phi.sin();
    Enclosure y = two * c_re - sh;
    return {y, c_re, c_im};
}

}  // namespace detail

// Ferrari enclosures of the roots of x^4 + 2u2 x^2 + 4u3 x + u4 following the
// displayed case split (u3 = 0 biquadratic, v2 = 0 cube root, general). When
// the quartic has four real roots (decided exactly by Sturm) the sorted
// enclosures are returned; otherwise all_real is false and gamma is unset.
// `branch` selects the cube root used for C; the root multiset does not
// depend on it, which the tests assert.
inline FerrariData ferrari_roots(const QuadReal& u2, const QuadReal& u3, const QuadReal& u4,
                                 unsigned long q, const PrecisionConfig& cfg = {},
                                 int branch = 0) {
    FerrariData out;
    out.u2 = u2;
    out.u3 = u3;
    out.u4 = u4;
    out.v2 = -u2 * u2 / QuadReal(3) - u4;
    out.v3 = QuadReal(Rat(2, 3)) * u2 * u4 - QuadReal(Rat(2, 27)) * u2 * u2 * u2 -
             QuadReal(2) * u3 * u3;
    Poly<QuadReal> quartic{u4, QuadReal(4) * u3, QuadReal(2) * u2, QuadReal(0), QuadReal(1)};
    out.all_real =
        count_real_roots_with_multiplicity(quartic, Bound(NegInf{}), Bound(PosInf{}), q) == 4;

    long p = cfg.start;
    if (u3.is_zero()) {
        // biquadratic: roots i1 sqrt(-u2 + i2 sqrt(u2^2 - u4))
        QuadReal disc = u2 * u2 - u4;
        if (!out.all_real) return out;
        Enclosure sd = Enclosure::from_quad(disc, p).sqrt();
        Enclosure mu2 = Enclosure::from_quad(-u2, p);
        Enclosure wplus = (mu2 + sd).sqrt();
        Enclosure wminus = (mu2 - sd).sqrt();
        out.gamma = {-wplus, -wminus, wminus, wplus};
        out.y = Enclosure(p);
        out.C_re = Enclosure(p);
        out.C_im = Enclosure(p);
        return out;
    }

    // u3 != 0: y is a nonzero real root of the resolvent; determine its sign
    // exactly by refinement (r(0) = -2u3^2 != 0), with a Sturm fallback on
    // the resolvent when the enclosure stays undecided at the cap.
    QuadReal shift = QuadReal(Rat(2, 3)) * u2;
    detail::CardanoY cy = detail::cardano_real_root(out.v2, out.v3, shift, p, branch);
    while (cy.y.contains_zero()) {
        if (p >= cfg.cap) {
            // branch 0 with D <= 0 picks the largest real root and D > 0 has
            // a unique one, so its sign is the sign question "does r have a
            // positive root"; r(x) = x^3 + 2u2 x^2 + (u2^2-u4) x - 2u3^2
            Poly<QuadReal> r{QuadReal(-2) * u3 * u3, u2 * u2 - u4, QuadReal(2) * u2,
                             QuadReal(1)};
            int pos = count_real_roots_with_multiplicity(r, Bound(QuadReal(0)), Bound(PosInf{}),
                                                         q);
            QuadReal D5 = out.v3 * out.v3 + QuadReal(Rat(4, 27)) * out.v2 * out.v2 * out.v2;
            bool y_positive;
            if (branch == 0 || D5.sgn() == Sign::Positive) {
                y_positive = pos > 0;  // largest (or unique) real root
            } else if (D5.sgn() == Sign::Zero) {
                y_positive = (-out.v3).sgn() == Sign::Negative;  // y = -C'
            } else {
                // non-principal branch with three real roots: undecидable
                // cheaply; widen to the hull and let callers fall back
                break;
            }
            Enclosure lo = Enclosure::from_rat(Rat(0), p);
            out.y = y_positive ? Enclosure::interval_max(cy.y, lo)
                               : Enclosure::interval_min(cy.y, lo);
            // re-enter the flow with the sign-clamped enclosure
            cy.y = out.y;
            break;
        }
        p = std::min(p * 2, cfg.cap);
        cy = detail::cardano_real_root(out.v2, out.v3, shift, p, branch);
    }
    out.y = cy.y;
    out.C_re = cy.c_re;
    out.C_im = cy.c_im;
    if (!out.all_real) return out;

    // with four real roots every real resolvent root is non-negative, so y > 0
    Enclosure two = Enclosure::exact_int(2, p);
    Enclosure four = Enclosure::exact_int(4, p);
    Enclosure eight = Enclosure::exact_int(8, p);
    Enclosure sq2y = (two * out.y).sqrt();
    Enclosure u2e = Enclosure::from_quad(u2, p);
    Enclosure u3e = Enclosure::from_quad(u3, p);
    Enclosure common = -four * u2e - two * out.y;
    Enclosure tail = eight * u3e / sq2y;
    Enclosure inner_pos = common - tail;  // i1 = +1
    Enclosure inner_neg = common + tail;  // i1 = -1
    Enclosure rp = inner_pos.sqrt();
    Enclosure rn = inner_neg.sqrt();
    std::array<Enclosure, 4> g = {(sq2y + rp) / two, (sq2y - rp) / two, (-sq2y + rn) / two,
                                  (-sq2y - rn) / two};
    std::sort(g.begin(), g.end(),
              [](const Enclosure& a, const Enclosure& b) { return mpfr_less_p(a.lo(), b.lo()); });
    bool separated = g[0].provably_less(g[1]) && g[1].provably_less(g[2]) &&
                     g[2].provably_less(g[3]);
    if (separated) {
        out.gamma = g;
        return out;
    }
    // ties or overlaps: take the exact isolation order and intersectable
    // enclosures from the isolating intervals
    auto roots = isolate_real_roots(quartic, q);
    std::size_t idx = 0;
    for (auto& r : roots) {
        r.refine_below(Rat(1, 1 << 20));
        Enclosure e = Enclosure::from_rat(r.lo, p);
        Enclosure ehi = Enclosure::from_rat(r.hi, p);
        Enclosure hull = Enclosure::hull(e, ehi);
        for (std::size_t m = 0; m < r.multiplicity && idx < 4; ++m) out.gamma[idx++] = hull;
    }
    return out;
}

}  // namespace weilpoly

#endif
