// Theorem-driven enumeration of W_q(g) for g = 1..5.
//
// The nested loops walk integer coefficient prefixes inside sound integer
// windows extracted from the coefficient inequalities. Windows whose bounds
// are rational or QuadReal-linear are exact; two-sided radical bounds of the
// r +- c E^{3/2} form are made exact by squaring; windows bounded by theta or
// Lambda values use enclosures and keep an inner "sure" zone, with the
// boundary integers resolved through the exact membership test. Radical
// bounds attain equality exactly at the real-root members, so windows always
// round outward and the exact filter owns the boundary.
//
// Theorem mode accepts sure-zone candidates on the strength of the
// inequalities alone; safe mode re-filters everything through is_weil. The
// two modes producing identical streams is the point of the exercise.

#ifndef WEILPOLY_ENUMERATE_HPP
#define WEILPOLY_ENUMERATE_HPP

#include "expr.hpp"
#include "weil.hpp"

#include <thread>

namespace weilpoly {

// Sound integer window: every integer satisfying the exact inequalities lies
// in [lo, hi]; integers in [sure_lo, sure_hi] provably satisfy them.
struct IntRange {
    Int lo, hi;
    Int sure_lo, sure_hi;

    bool empty() const { return lo > hi; }
    bool lo_boundary() const { return sure_lo > lo; }
    bool hi_boundary() const { return sure_hi < hi; }

    static IntRange exact(Int lo, Int hi) { return IntRange{lo, hi, lo, hi}; }
    static IntRange everything_unsure(Int lo, Int hi) { return IntRange{lo, hi, Int(1), Int(0)}; }

    IntRange intersect(const IntRange& o) const {
        IntRange r;
        r.lo = std::max(lo, o.lo);
        r.hi = std::min(hi, o.hi);
        r.sure_lo = std::max(sure_lo, o.sure_lo);
        r.sure_hi = std::min(sure_hi, o.sure_hi);
        return r;
    }
    bool sure(const Int& n) const { return sure_lo <= n && n <= sure_hi; }
};

// Window of integers n with lo_e <= n <= hi_e for enclosure bounds.
inline IntRange range_from_enclosures(const Enclosure& lo_e, const Enclosure& hi_e) {
    IntRange r;
    r.lo = lo_e.ceil_lower();
    r.sure_lo = lo_e.ceil_upper();
    r.hi = hi_e.floor_upper();
    r.sure_hi = hi_e.floor_lower();
    return r;
}

// Exact window for R - c E^{3/2} <= n <= R + c E^{3/2} with rational R, c > 0
// and E >= 0; decided by squaring, seeded from a 128-bit enclosure.
inline IntRange radical_window(const Rat& R, const Rat& c, const Rat& E, long prec = 128) {
    // n <= R + c E^{3/2}  <=>  n <= R  or  (n - R)^2 <= c^2 E^3
    Rat c2e3 = c * c * E * E * E;
    auto below_upper = [&](const Int& n) {
        Rat d = Rat(n) - R;
        if (sign(d) <= 0) return true;
        return d * d <= c2e3;
    };
    auto above_lower = [&](const Int& n) {
        Rat d = R - Rat(n);
        if (sign(d) <= 0) return true;
        return d * d <= c2e3;
    };
    Enclosure Re = Enclosure::from_rat(R, prec);
    Enclosure rad = (Enclosure::from_rat(E, prec) * Enclosure::from_rat(E, prec) *
                     Enclosure::from_rat(E, prec))
                        .sqrt() *
                    Enclosure::from_rat(c, prec);
    Int hi = (Re + rad).floor_upper();
    while (!below_upper(hi)) hi -= 1;
    while (below_upper(hi + 1)) hi += 1;
    Int lo = (Re - rad).ceil_lower();
    while (!above_lower(lo)) lo += 1;
    while (above_lower(lo - 1)) lo -= 1;
    return IntRange::exact(lo, hi);
}

// Window of integers between two QuadReal bounds (exact).
inline IntRange quad_window(const QuadReal& lo, const QuadReal& hi) {
    return IntRange::exact(lo.ceil(), hi.floor());
}

// General form over radical expression trees: sound integer
// interval with boundary flags, refined until at most the endpoint integers
// stay undecided (or the precision cap is reached, keeping soundness).
inline IntRange integer_range(const Expr& lo_expr, const Expr& hi_expr,
                              const PrecisionConfig& cfg = {}) {
    long p = cfg.start;
    while (true) {
        try {
            Enclosure lo_e = lo_expr.eval(p).re;
            Enclosure hi_e = hi_expr.eval(p).re;
            IntRange r = range_from_enclosures(lo_e, hi_e);
            if ((r.sure_lo - r.lo <= 1 && r.hi - r.sure_hi <= 1) || p >= cfg.cap) return r;
        } catch (const detail::NeedsRefine&) {
            if (p >= cfg.cap) throw PrecisionExhausted("integer_range: bounds undecidable");
        }
        p = std::min(p * 2, cfg.cap);
    }
}

// ---------- configuration and records ----------

struct EnumConfig {
    enum class Mode { Theorem, Safe } mode = Mode::Theorem;
    enum class Filter { All, RealRootsOnly, NoRealRoots } filter = Filter::All;
    PrecisionConfig prec{};
    int jobs = 1;
    bool classify = true;           // attach the structural classification
    bool check_reflection = false;  // validate the gamma reflection identity per prefix
};

struct EnumRecord {
    WeilCandidate c;
    bool real_root = false;  // equality attained in a designated inequality
    RealRootClass cls;
};

// Data of the quintic criterion, kept for tests and diagnostics.
struct QuinticCriterionData {
    Rat u2, u3, u4, Delta;
    Rat v2, v3;
    Rat A;
    ResolventData resolvent;
    FerrariData ferrari;
    std::array<Enclosure, 4> Hvals{Enclosure(128), Enclosure(128), Enclosure(128),
                                   Enclosure(128)};
    Enclosure Lambda1{128}, Lambda2{128};
};

namespace detail_enum {

inline QuadReal sqrtq(unsigned long q, long k) { return QuadReal(Rat(0), Rat(k), q); }

inline Rat rat(const Int& v) { return Rat(v); }

// finalize one candidate: decide membership per mode, attach flags
template <class Emit>
inline void finish(const WeilCandidate& c, bool sure_member, bool flag, const EnumConfig& cfg,
                   Emit&& emit) {
    if (!sure_member || cfg.mode == EnumConfig::Mode::Safe) {
        if (!is_weil(c)) return;
    }
    EnumRecord rec;
    rec.c = c;
    rec.real_root = flag;
    if (cfg.classify) rec.cls = classify_real_roots(c, /*assume_weil=*/true);
    bool keep = cfg.filter == EnumConfig::Filter::All ||
                (cfg.filter == EnumConfig::Filter::RealRootsOnly && rec.real_root) ||
                (cfg.filter == EnumConfig::Filter::NoRealRoots && !rec.real_root);
    if (keep) emit(std::move(rec));
}

}  // namespace detail_enum

// ---------- per-genus enumerators ----------
// Each walks the lexicographic (a_1, ..., a_g) grid for a_1 in [a1_lo, a1_hi]
// and emits records in order.

template <class Emit>
void enum_g1_range(unsigned long q, const Int& a1_lo, const Int& a1_hi, const EnumConfig& cfg,
                   Emit&& emit) {
    Int fourq = 4 * Int(static_cast<long>(q));
    for (Int a = a1_lo; a <= a1_hi; ++a) {
        if (a * a > fourq) continue;
        WeilCandidate c(q, 1, {a});
        bool flag = (a * a == fourq);
        detail_enum::finish(c, /*sure_member=*/true, flag, cfg, emit);
    }
}

template <class Emit>
void enum_g2_range(unsigned long q, const Int& a1_lo, const Int& a1_hi, const EnumConfig& cfg,
                   Emit&& emit) {
    using detail_enum::sqrtq;
    Int qz(static_cast<long>(q));
    for (Int a = a1_lo; a <= a1_hi; ++a) {
        if (a * a > 16 * qz) continue;
        // -2q + 2 sqrt(q)|a| <= b <= 2q + a^2/4
        QuadReal blo = QuadReal(Rat(-2 * qz)) + sqrtq(q, 2) * QuadReal(Rat(abs(a)));
        Rat bhi = Rat(2 * qz) + Rat(a * a) / 4;
        IntRange r = IntRange::exact(blo.ceil(), rat_floor(bhi));
        for (Int b = r.lo; b <= r.hi; ++b) {
            WeilCandidate c(q, 2, {a, b});
            bool flag = (a * a == 16 * qz) || (QuadReal(Rat(b)) == blo);
            detail_enum::finish(c, true, flag, cfg, emit);
        }
    }
}

template <class Emit>
void enum_g3_range(unsigned long q, const Int& a1_lo, const Int& a1_hi, const EnumConfig& cfg,
                   Emit&& emit) {
    using detail_enum::sqrtq;
    Int qz(static_cast<long>(q));
    for (Int a1 = a1_lo; a1 <= a1_hi; ++a1) {
        if (a1 * a1 > 36 * qz) continue;  // (a)
        QuadReal lo2 = sqrtq(q, 4) * QuadReal(Rat(abs(a1))) - QuadReal(Rat(9 * qz));  // (b*)
        Rat hi2 = Rat(a1 * a1) / 3 + Rat(3 * qz);                                     // (b)
        for (Int a2 = lo2.ceil(), a2hi = rat_floor(hi2); a2 <= a2hi; ++a2) {
            // (c): R +- (2/27) E^{3/2}
            Rat R = Rat(-2 * a1 * a1 * a1) / 27 + Rat(a1 * a2) / 3 + Rat(qz * a1);
            Rat E = Rat(a1 * a1 - 3 * a2 + 9 * qz);
            IntRange rc = radical_window(R, Rat(2, 27), E, cfg.prec.start);
            // (d)
            QuadReal dlo = QuadReal(Rat(-2 * qz * a1)) - sqrtq(q, 2) * QuadReal(Rat(a2)) -
                           QuadReal(Rat(0), Rat(2 * qz), q);
            QuadReal dhi = QuadReal(Rat(-2 * qz * a1)) + sqrtq(q, 2) * QuadReal(Rat(a2)) +
                           QuadReal(Rat(0), Rat(2 * qz), q);
            IntRange r = rc.intersect(quad_window(dlo, dhi));
            for (Int a3 = r.lo; a3 <= r.hi; ++a3) {
                WeilCandidate c(q, 3, {a1, a2, a3});
                bool flag = (a1 * a1 == 36 * qz) || (QuadReal(Rat(a2)) == lo2) ||
                            (QuadReal(Rat(a3)) == dlo) || (QuadReal(Rat(a3)) == dhi);
                detail_enum::finish(c, true, flag, cfg, emit);
            }
        }
    }
}

template <class Emit>
void enum_g4_range(unsigned long q, const Int& a1_lo, const Int& a1_hi, const EnumConfig& cfg,
                   Emit&& emit) {
    using detail_enum::sqrtq;
    Int qz(static_cast<long>(q));
    for (Int a1 = a1_lo; a1 <= a1_hi; ++a1) {
        if (a1 * a1 > 64 * qz) continue;  // (a)
        QuadReal lo2 = sqrtq(q, 6) * QuadReal(Rat(abs(a1))) - QuadReal(Rat(20 * qz));  // (b*)
        Rat hi2 = Rat(3 * a1 * a1) / 8 + Rat(4 * qz);                                  // (b)
        for (Int a2 = lo2.ceil(), a2hi = rat_floor(hi2); a2 <= a2hi; ++a2) {
            // (c) linear window
            QuadReal c_mid = QuadReal(Rat(-9 * qz * a1));
            QuadReal c_off = sqrtq(q, 4) * QuadReal(Rat(a2)) + QuadReal(Rat(0), Rat(16 * qz), q);
            IntRange r3 = quad_window(c_mid - c_off, c_mid + c_off);
            // (d) radical window
            Rat R = Rat(a1 * a2) / 2 - Rat(a1 * a1 * a1) / 8 + Rat(qz * a1);
            Rat E = Rat(9 * a1 * a1 - 24 * a2 + 96 * qz);
            r3 = r3.intersect(radical_window(R, Rat(1, 216), E, cfg.prec.start));
            for (Int a3 = r3.lo; a3 <= r3.hi; ++a3) {
                // resolvent data of the theorem
                Rat u2 = Rat(-3 * a1 * a1) / 16 + Rat(a2) / 2 - Rat(2 * qz);
                Rat u3 = Rat(-a1 * a1 * a1) / 32 + Rat(a1 * a2) / 8 + Rat(a1 * qz) / 4 -
                         Rat(a3) / 4;
                ResolventData rd;
                try {
                    rd = theta_sorted(QuadReal(u2), QuadReal(u3), q, cfg.prec);
                } catch (const DeltaPositive&) {
                    continue;  // cannot happen under (a)-(d); no a4 completes
                }
                Rat Ef = Rat(3 * a1 * a1 * a1 * a1) / 256 - Rat(a1 * a1 * a2) / 16 -
                         Rat(qz * a1 * a1) / 2 + Rat(a1 * a3) / 4 + Rat(2 * qz * a2) -
                         Rat(2 * qz * qz);
                IntRange r4;
                if (rd.exact) {
                    QuadReal w_lo = QuadReal(Ef) + (*rd.exact)[0];
                    QuadReal w_hi = QuadReal(Ef) + (*rd.exact)[1];
                    r4 = quad_window(w_lo, w_hi);
                } else {
                    Enclosure efe = Enclosure::from_rat(Ef, cfg.prec.start);
                    r4 = range_from_enclosures(efe + rd.theta[0], efe + rd.theta[1]);
                }
                // (e) lower bound
                QuadReal elo = sqrtq(q, 2) * QuadReal(Rat(abs(qz * a1 + a3))) -
                               QuadReal(Rat(2 * qz * a2)) - QuadReal(Rat(2 * qz * qz));
                r4 = r4.intersect(IntRange::exact(elo.ceil(), r4.hi));
                for (Int a4 = r4.lo; a4 <= r4.hi; ++a4) {
                    WeilCandidate c(q, 4, {a1, a2, a3, a4});
                    bool flag = (a1 * a1 == 64 * qz) || (QuadReal(Rat(a2)) == lo2) ||
                                (QuadReal(Rat(a3)) == c_mid - c_off) ||
                                (QuadReal(Rat(a3)) == c_mid + c_off) ||
                                (QuadReal(Rat(a4)) == elo);
                    detail_enum::finish(c, r4.sure(a4), flag, cfg, emit);
                }
            }
        }
    }
}

// Quintic (h)-window data for a fixed prefix (a1..a4).
inline QuinticCriterionData quintic_data(unsigned long q, const Int& a1, const Int& a2,
                                         const Int& a3, const Int& a4,
                                         const PrecisionConfig& prec) {
    long qz = static_cast<long>(q);
    QuinticCriterionData d;
    d.u2 = Rat(-3 * a1 * a1) / 25 + Rat(3 * a2) / 10 - Rat(3 * qz) / 2;
    d.u3 = Rat(2 * a1 * a1 * a1) / 125 - Rat(3 * a1 * a2) / 50 - Rat(qz * a1) / 10 + Rat(a3) / 10;
    d.u4 = Rat(-3 * a1 * a1 * a1 * a1) / 625 + Rat(3 * a1 * a1 * a2) / 125 +
           Rat(qz * a1 * a1) / 5 - Rat(2 * a1 * a3) / 25 - Rat(3 * qz * a2) / 5 + Rat(a4) / 5 +
           Rat(qz * qz);
    d.Delta = d.u3 * d.u3 + Rat(4, 27) * d.u2 * d.u2 * d.u2;
    d.A = Rat(-4 * a1 * a1 * a1 * a1 * a1) / 3125 + Rat(a1 * a1 * a1) * (Rat(a2) + 15 * qz) / 125 -
          Rat(a1 * a1 * a3) / 25 - Rat(a1) * (Rat(3 * a2 * qz) - Rat(a4) + Rat(5 * qz * qz)) / 5 +
          Rat(2 * qz * a3);
    d.resolvent = theta_sorted(QuadReal(d.u2), QuadReal(d.u3), q, prec);
    d.ferrari = ferrari_roots(QuadReal(d.u2), QuadReal(d.u3), QuadReal(d.u4), q, prec);
    d.v2 = Rat(-1) * d.u2 * d.u2 / 3 - d.u4;
    d.v3 = Rat(2) * d.u2 * d.u4 / 3 - Rat(2) * d.u2 * d.u2 * d.u2 / 27 - 2 * d.u3 * d.u3;
    if (!d.ferrari.all_real) return d;
    long p = prec.start;
    // H(x) = -x^5 - (10/3) u2 x^3 - 10 u3 x^2 - 5 u4 x
    Enclosure c3 = Enclosure::from_rat(Rat(-10) * d.u2 / 3, p);
    Enclosure c2 = Enclosure::from_rat(Rat(-10) * d.u3, p);
    Enclosure c1 = Enclosure::from_rat(Rat(-5) * d.u4, p);
    for (std::size_t i = 0; i < 4; ++i) {
        const Enclosure& x = d.ferrari.gamma[i];
        Enclosure x2 = x * x;
        Enclosure x3 = x2 * x;
        d.Hvals[i] = -(x3 * x2) + c3 * x3 + c2 * x2 + c1 * x;
    }
    d.Lambda1 = Enclosure::interval_max(d.Hvals[0], d.Hvals[2]);
    d.Lambda2 = Enclosure::interval_min(d.Hvals[1], d.Hvals[3]);
    return d;
}

template <class Emit>
void enum_g5_range(unsigned long q, const Int& a1_lo, const Int& a1_hi, const EnumConfig& cfg,
                   Emit&& emit) {
    using detail_enum::sqrtq;
    Int qz(static_cast<long>(q));
    for (Int a1 = a1_lo; a1 <= a1_hi; ++a1) {
        if (a1 * a1 > 100 * qz) continue;  // (a)
        QuadReal lo2 = sqrtq(q, 8) * QuadReal(Rat(abs(a1))) - QuadReal(Rat(35 * qz));  // (b*)
        Rat hi2 = Rat(2 * a1 * a1) / 5 + Rat(5 * qz);                                  // (b)
        for (Int a2 = lo2.ceil(), a2hi = rat_floor(hi2); a2 <= a2hi; ++a2) {
            // (c) radical, (d) linear
            Rat R = Rat(-4 * a1 * a1 * a1) / 25 + Rat(3 * a1 * a2) / 5 + Rat(qz * a1);
            Rat E = Rat(4 * a1 * a1 + 50 * qz - 10 * a2);
            IntRange r3 = radical_window(R, Rat(1, 50), E, cfg.prec.start);
            QuadReal dlo = QuadReal(Rat(0), Rat(-6 * a2), q) - QuadReal(Rat(20 * qz * a1)) -
                           QuadReal(Rat(0), Rat(50 * qz), q);
            QuadReal dhi = QuadReal(Rat(0), Rat(6 * a2), q) - QuadReal(Rat(20 * qz * a1)) +
                           QuadReal(Rat(0), Rat(50 * qz), q);
            r3 = r3.intersect(quad_window(dlo, dhi));
            for (Int a3 = r3.lo; a3 <= r3.hi; ++a3) {
                Rat u2 = Rat(-3 * a1 * a1) / 25 + Rat(3 * a2) / 10 - Rat(3 * qz) / 2;
                Rat u3 = Rat(2 * a1 * a1 * a1) / 125 - Rat(3 * a1 * a2) / 50 -
                         Rat(qz * a1) / 10 + Rat(a3) / 10;
                ResolventData rd;
                try {
                    rd = theta_sorted(QuadReal(u2), QuadReal(u3), q, cfg.prec);
                } catch (const DeltaPositive&) {
                    continue;
                }
                Rat Ee = Rat(3 * a1 * a1 * a1 * a1) / 125 - Rat(3 * a1 * a1 * a2) / 25 -
                         Rat(qz * a1 * a1) + Rat(2 * a1 * a3) / 5 + Rat(3 * qz * a2) -
                         Rat(5 * qz * qz);
                IntRange r4;
                if (rd.exact) {
                    r4 = quad_window(QuadReal(Ee) + QuadReal(5) * (*rd.exact)[0],
                                     QuadReal(Ee) + QuadReal(5) * (*rd.exact)[1]);
                } else {
                    Enclosure eee = Enclosure::from_rat(Ee, cfg.prec.start);
                    Enclosure five = Enclosure::exact_int(5, cfg.prec.start);
                    r4 = range_from_enclosures(eee + five * rd.theta[0],
                                               eee + five * rd.theta[1]);
                }
                QuadReal flo = sqrtq(q, 4) * QuadReal(Rat(abs(4 * qz * a1 + a3))) -
                               QuadReal(Rat(9 * qz * a2)) - QuadReal(Rat(25 * qz * qz));  // (f)
                r4 = r4.intersect(IntRange::exact(flo.ceil(), r4.hi));
                for (Int a4 = r4.lo; a4 <= r4.hi; ++a4) {
                    bool prefix_sure = r4.sure(a4);
                    // (g) exact window for a5
                    QuadReal glo = sqrtq(q, -2) * QuadReal(Rat(a4)) - QuadReal(Rat(2 * qz * a3)) -
                                   QuadReal(Rat(0), Rat(2 * qz * a2), q) -
                                   QuadReal(Rat(2 * qz * qz * a1)) -
                                   QuadReal(Rat(0), Rat(2 * qz * qz), q);
                    QuadReal ghi = sqrtq(q, 2) * QuadReal(Rat(a4)) - QuadReal(Rat(2 * qz * a3)) +
                                   QuadReal(Rat(0), Rat(2 * qz * a2), q) -
                                   QuadReal(Rat(2 * qz * qz * a1)) +
                                   QuadReal(Rat(0), Rat(2 * qz * qz), q);
                    IntRange r5 = quad_window(glo, ghi);
                    if (r5.empty()) continue;  // dead-end prefix
                    if (prefix_sure) {
                        QuinticCriterionData qd;
                        try {
                            qd = quintic_data(q, a1, a2, a3, a4, cfg.prec);
                        } catch (const PrecisionExhausted&) {
                            prefix_sure = false;
                        } catch (const DomainError&) {
                            prefix_sure = false;  // degraded enclosures at tiny caps
                        }
                        if (prefix_sure && !qd.ferrari.all_real)
                            continue;  // cannot happen under (a)-(f)
                        if (!prefix_sure) {
                            for (Int a5 = r5.lo; a5 <= r5.hi; ++a5) {
                                WeilCandidate c(q, 5, {a1, a2, a3, a4, a5});
                                bool flag = (a1 * a1 == 100 * qz) || (QuadReal(Rat(a2)) == lo2) ||
                                            (QuadReal(Rat(a3)) == dlo) ||
                                            (QuadReal(Rat(a3)) == dhi) ||
                                            (QuadReal(Rat(a4)) == flo) ||
                                            (QuadReal(Rat(a5)) == glo) ||
                                            (QuadReal(Rat(a5)) == ghi);
                                detail_enum::finish(c, false, flag, cfg, emit);
                            }
                            continue;
                        }
                        if (cfg.check_reflection) {
                            // gamma_i = -gamma^+_{5-i} with gamma^+ from -u3
                            FerrariData plus = ferrari_roots(QuadReal(qd.u2), QuadReal(-qd.u3),
                                                             QuadReal(qd.u4), q, cfg.prec);
                            for (int i = 0; i < 4 && plus.all_real; ++i)
                                if (!qd.ferrari.gamma[static_cast<std::size_t>(i)].intersects(
                                        -plus.gamma[static_cast<std::size_t>(3 - i)]))
                                    throw Error("enum_g5: reflection identity violated");
                        }
                        Enclosure Ae = Enclosure::from_rat(qd.A, cfg.prec.start);
                        IntRange rh = range_from_enclosures(qd.Lambda1 + Ae, qd.Lambda2 + Ae);
                        r5 = r5.intersect(rh);
                        for (Int a5 = r5.lo; a5 <= r5.hi; ++a5) {
                            WeilCandidate c(q, 5, {a1, a2, a3, a4, a5});
                            bool flag = (a1 * a1 == 100 * qz) || (QuadReal(Rat(a2)) == lo2) ||
                                        (QuadReal(Rat(a3)) == dlo) || (QuadReal(Rat(a3)) == dhi) ||
                                        (QuadReal(Rat(a4)) == flo) || (QuadReal(Rat(a5)) == glo) ||
                                        (QuadReal(Rat(a5)) == ghi);
                            detail_enum::finish(c, r5.sure(a5), flag, cfg, emit);
                        }
                    } else {
                        for (Int a5 = r5.lo; a5 <= r5.hi; ++a5) {
                            WeilCandidate c(q, 5, {a1, a2, a3, a4, a5});
                            bool flag = (a1 * a1 == 100 * qz) || (QuadReal(Rat(a2)) == lo2) ||
                                        (QuadReal(Rat(a3)) == dlo) || (QuadReal(Rat(a3)) == dhi) ||
                                        (QuadReal(Rat(a4)) == flo) || (QuadReal(Rat(a5)) == glo) ||
                                        (QuadReal(Rat(a5)) == ghi);
                            detail_enum::finish(c, false, flag, cfg, emit);
                        }
                    }
                }
            }
        }
    }
}

// ---------- driver ----------

inline Int a1_bound(unsigned long q, unsigned g) {
    // |a1| <= 2g sqrt(q)
    return isqrt(Int(4 * g * g) * Int(static_cast<long>(q)));
}

template <class Emit>
void enumerate_range(unsigned long q, unsigned g, const Int& lo, const Int& hi,
                     const EnumConfig& cfg, Emit&& emit) {
    switch (g) {
        case 1: enum_g1_range(q, lo, hi, cfg, emit); break;
        case 2: enum_g2_range(q, lo, hi, cfg, emit); break;
        case 3: enum_g3_range(q, lo, hi, cfg, emit); break;
        case 4: enum_g4_range(q, lo, hi, cfg, emit); break;
        case 5: enum_g5_range(q, lo, hi, cfg, emit); break;
        default: throw DomainError("enumerate: g must be 1..5");
    }
}

// Full enumeration of W_q(g), lexicographically sorted in (a_1, ..., a_g).
// Workers own contiguous a_1 sub-ranges; outputs are concatenated in order,
// so the stream does not depend on the job count.
inline std::vector<EnumRecord> enumerate_weil(unsigned long q, unsigned g,
                                              const EnumConfig& cfg = {}) {
    if (!is_prime_power(Int(static_cast<long>(q))))
        throw NotPrimePower("enumerate: q must be a prime power");
    Int B = a1_bound(q, g);
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        std::vector<EnumRecord> out;
        enumerate_range(q, g, -B, B, cfg, [&](EnumRecord&& r) { out.push_back(std::move(r)); });
        return out;
    }
    long width = mpz_get_si(Int(2 * B + 1).get_mpz_t());
    long chunk = (width + jobs - 1) / jobs;
    std::vector<std::vector<EnumRecord>> parts(static_cast<std::size_t>(jobs));
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) {
        Int lo = -B + Int(static_cast<long>(t) * chunk);
        Int hi = std::min(Int(lo + chunk - 1), B);
        if (lo > B) break;
        threads.emplace_back([&, t, lo, hi]() {
            enumerate_range(q, g, lo, hi, cfg, [&](EnumRecord&& r) {
                parts[static_cast<std::size_t>(t)].push_back(std::move(r));
            });
        });
    }
    for (auto& th : threads) th.join();
    std::vector<EnumRecord> out;
    for (auto& p : parts)
        for (auto& r : p) out.push_back(std::move(r));
    return out;
}

}  // namespace weilpoly

#endif
