// Sturm sequences and exact real-root counting over Q(sqrt(q)).
//
// Chain elements are kept as primitive polynomials over Z[sqrt(q)], i.e. a
// pair of integer polynomials (U, V) standing for U(x) + sqrt(q)*V(x). The
// remainder steps are pseudo-divisions with positive multipliers and integer
// content stripping, so signs match the classical Sturm sequence while the
// coefficients stay small. Sign-variation differences count distinct real
// roots in half-open intervals (lo, hi].

#ifndef WEILPOLY_STURM_HPP
#define WEILPOLY_STURM_HPP

#include "poly.hpp"

#include <cassert>
#include <limits>
#include <variant>
#include <vector>

namespace weilpoly {

// Interval bound: finite exact QuadReal or +-infinity.
struct NegInf {};
struct PosInf {};
using Bound = std::variant<NegInf, QuadReal, PosInf>;

namespace zq {

// U(x) + sqrt(q) V(x) with integer U, V (v all zero when q is square).
struct ZqPoly {
    std::vector<Int> u, v;  // same length; lowest degree first
    unsigned long q = 1;

    long degree() const { return static_cast<long>(u.size()) - 1; }
    bool is_zero() const { return u.empty(); }

    void trim() {
        while (!u.empty() && sign(u.back()) == 0 && sign(v.back()) == 0) {
            u.pop_back();
            v.pop_back();
        }
    }

    // strip integer content (keeps signs)
    void make_primitive() {
        Int g = 0;
        for (const auto& x : u) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1) {
            for (auto& x : u) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }
    }

    ZqPoly derivative() const {
        ZqPoly d;
        d.q = q;
        if (u.size() <= 1) return d;
        d.u.resize(u.size() - 1);
        d.v.resize(v.size() - 1);
        for (std::size_t i = 1; i < u.size(); ++i) {
            d.u[i - 1] = u[i] * static_cast<long>(i);
            d.v[i - 1] = v[i] * static_cast<long>(i);
        }
        d.trim();
        return d;
    }

    // sign of coefficient i
    int coeff_sign(std::size_t i) const {
        int su = sign(u[i]), sv = sign(v[i]);
        if (sv == 0) return su;
        if (su == 0) return sv;
        if (su == sv) return su;
        Int lhs = u[i] * u[i];
        Int rhs = v[i] * v[i] * static_cast<long>(q);
        int c = cmp(lhs, rhs);
        if (c == 0) return 0;
        return c > 0 ? su : sv;
    }

    QuadReal coeff_value(std::size_t i) const {
        return QuadReal(Rat(u[i]), Rat(v[i]), q);
    }

    // exact sign at a finite QuadReal point
    int sign_at(const QuadReal& x) const {
        QuadReal acc(Rat(0), Rat(0), q);
        for (std::size_t i = u.size(); i-- > 0;) acc = acc * x + coeff_value(i);
        return static_cast<int>(acc.sgn());
    }

    int sign_at(const Bound& b) const {
        if (is_zero()) return 0;
        std::size_t d = u.size() - 1;
        if (std::holds_alternative<PosInf>(b)) return coeff_sign(d);
        if (std::holds_alternative<NegInf>(b)) {
            int s = coeff_sign(d);
            return (d % 2 == 0) ? s : -s;
        }
        return sign_at(std::get<QuadReal>(b));
    }
};

inline ZqPoly from_poly(const Poly<QuadReal>& p, unsigned long q) {
    ZqPoly r;
    r.q = q;
    const auto& c = p.coeffs();
    r.u.resize(c.size());
    r.v.resize(c.size());
    // common denominator
    Int den = 1;
    for (const auto& x : c) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational_part().get_den().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.radical_part().get_den().get_mpz_t());
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rat a = c[i].rational_part() * Rat(den);
        Rat b = c[i].radical_part() * Rat(den);
        assert(a.get_den() == 1 && b.get_den() == 1);
        r.u[i] = a.get_num();
        r.v[i] = b.get_num();
    }
    r.trim();
    r.make_primitive();
    return r;
}

inline ZqPoly from_int_poly(const Poly<Int>& p, unsigned long q) {
    ZqPoly r;
    r.q = q;
    r.u = p.coeffs();
    r.v.assign(r.u.size(), Int(0));
    return r;
}

// Pseudo-remainder of a by b in Z[sqrt(q)] with a positive rational-integer
// multiplier, so the remainder has the exact sign of the field remainder.
inline ZqPoly prem(ZqPoly a, const ZqPoly& b) {
    long db = b.degree();
    std::size_t dbu = static_cast<std::size_t>(db);
    const Int& bu = b.u[dbu];
    const Int& bv = b.v[dbu];
    Int norm = bu * bu - bv * bv * static_cast<long>(b.q);  // lc * conj(lc)
    assert(sign(norm) != 0);
    int nsign = sign(norm);
    Int norm_abs = nsign > 0 ? norm : Int(-norm);
    while (!a.is_zero() && a.degree() >= db) {
        std::size_t da = static_cast<std::size_t>(a.degree());
        Int au = a.u[da], av = a.v[da];
        // factor = lc(a) * conj(lc(b)), then a <- |N| a - sgn(N) factor x^delta b
        Int fu = au * bu - av * bv * static_cast<long>(b.q);
        Int fv = av * bu - au * bv;
        if (nsign < 0) {
            fu = -fu;
            fv = -fv;
        }
        std::size_t delta = da - dbu;
        for (std::size_t i = 0; i < a.u.size(); ++i) {
            a.u[i] *= norm_abs;
            a.v[i] *= norm_abs;
        }
        for (std::size_t j = 0; j <= dbu; ++j) {
            // (fu + s fv)(bu_j + s bv_j) with s^2 = q
            a.u[delta + j] -= fu * b.u[j] + fv * b.v[j] * static_cast<long>(b.q);
            a.v[delta + j] -= fu * b.v[j] + fv * b.u[j];
        }
        a.u[da] = 0;
        a.v[da] = 0;
        a.trim();
        a.make_primitive();
    }
    return a;
}

// Sturm chain: p, p', then negated remainders, each primitive.
inline std::vector<ZqPoly> chain(const ZqPoly& p) {
    std::vector<ZqPoly> s;
    s.push_back(p);
    s.back().make_primitive();
    ZqPoly d = p.derivative();
    d.make_primitive();
    if (d.is_zero()) return s;
    s.push_back(std::move(d));
    while (true) {
        ZqPoly r = prem(s[s.size() - 2], s.back());
        if (r.is_zero()) break;
        for (auto& x : r.u) x = -x;
        for (auto& x : r.v) x = -x;
        s.push_back(std::move(r));
        if (s.back().degree() == 0) break;
    }
    return s;
}

inline int variations(const std::vector<ZqPoly>& s, const Bound& at) {
    int var = 0, prev = 0;
    for (const auto& p : s) {
        int sg = p.sign_at(at);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++var;
        prev = sg;
    }
    return var;
}

}  // namespace zq

// The Sturm chain of a squarefree input, exposed as Q(sqrt(q)) polynomials.
struct SturmChain {
    std::vector<zq::ZqPoly> elems;
    unsigned long q;

    int count(const Bound& lo, const Bound& hi) const {
        return zq::variations(elems, lo) - zq::variations(elems, hi);
    }
};

inline SturmChain sturm_chain(const Poly<QuadReal>& p, unsigned long q) {
    return SturmChain{zq::chain(zq::from_poly(p, q)), q};
}

// Distinct real roots of squarefree p in (lo, hi]. Throws NotSquarefree when
// gcd(p, p') is nonconstant.
inline int sturm_count(const Poly<QuadReal>& p, const Bound& lo, const Bound& hi,
                       unsigned long q) {
    if (p.is_zero()) throw DomainError("sturm_count: zero polynomial");
    if (p.degree() == 0) return 0;
    auto s = zq::chain(zq::from_poly(p, q));
    if (s.back().degree() > 0) throw NotSquarefree("sturm_count: input has a repeated root");
    return zq::variations(s, lo) - zq::variations(s, hi);
}

// Real roots of p in (lo, hi] counted with multiplicity; p need not be
// squarefree.
inline int count_real_roots_with_multiplicity(const Poly<QuadReal>& p, const Bound& lo,
                                              const Bound& hi, unsigned long q) {
    if (p.is_zero()) throw DomainError("count_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    auto s = zq::chain(zq::from_poly(p, q));
    if (s.back().degree() == 0 || s.size() == 1) {
        // squarefree: chain doubles as the Sturm chain
        return zq::variations(s, lo) - zq::variations(s, hi);
    }
    int total = 0;
    for (const auto& [f, m] : squarefree_decompose(p)) {
        auto fs = zq::chain(zq::from_poly(f, q));
        total += static_cast<int>(m) * (zq::variations(fs, lo) - zq::variations(fs, hi));
    }
    return total;
}

// ---------- exact root isolation ----------

// One distinct real root of `factor` (squarefree) in the open-ish rational
// interval (lo, hi]; refine() narrows it while keeping the root inside.
struct IsolatedRoot {
    Poly<QuadReal> factor;  // squarefree polynomial vanishing at the root
    std::size_t multiplicity;
    Rat lo, hi;  // the root is the unique root of factor in (lo, hi]
    unsigned long q;

    bool is_exact() const { return exact; }
    bool exact = false;  // root equals hi exactly (rational root)

    void refine() {
        if (exact) {
            lo = (lo + hi) / 2;  // root is exactly hi; narrow from below
            return;
        }
        Rat mid = (lo + hi) / 2;
        QuadReal m(mid, Rat(0), q);
        Sign s = factor.eval(m).sgn();
        Sign shi = factor.eval(QuadReal(hi, Rat(0), q)).sgn();
        if (s == Sign::Zero) {
            hi = mid;
            exact = true;
            return;
        }
        // root in (lo, mid] iff sign change over (lo, mid]... use sign at ends
        if (shi == Sign::Zero || s != shi)
            lo = mid;  // root in (mid, hi]
        else
            hi = mid;  // root in (lo, mid]
    }

    void refine_below(const Rat& width) {
        while (!exact && hi - lo > width) refine();
    }
};

// Sorted isolation of all distinct real roots of p (not nec. squarefree).
inline std::vector<IsolatedRoot> isolate_real_roots(const Poly<QuadReal>& p, unsigned long q) {
    std::vector<IsolatedRoot> roots;
    if (p.is_zero() || p.degree() == 0) return roots;
    auto factors = squarefree_decompose(p);
    for (const auto& [f, m] : factors) {
        auto ch = zq::chain(zq::from_poly(f, q));
        int total = zq::variations(ch, Bound(NegInf{})) - zq::variations(ch, Bound(PosInf{}));
        if (total == 0) continue;
        // Cauchy-style bound: |root| <= 1 + max|c_i|/|lc| -- via integer bound on
        // the scaled representation. Start from a power of two and grow.
        Rat bound = 2;
        auto count_in = [&](const Rat& a, const Rat& b) {
            return zq::variations(ch, Bound(QuadReal(a, Rat(0), q))) -
                   zq::variations(ch, Bound(QuadReal(b, Rat(0), q)));
        };
        while (count_in(-bound, bound) < total) bound *= 2;
        // bisect (lo, hi] segments, each ending with exactly one root
        struct Seg {
            Rat lo, hi;
            int n;
        };
        std::vector<Seg> work{{-bound, bound, total}};
        std::vector<IsolatedRoot> mine;
        while (!work.empty()) {
            Seg s = work.back();
            work.pop_back();
            if (s.n == 0) continue;
            if (s.n == 1) {
                IsolatedRoot r;
                r.factor = f;
                r.multiplicity = m;
                r.lo = s.lo;
                r.hi = s.hi;
                r.q = q;
                if (f.eval(QuadReal(s.hi, Rat(0), q)).sgn() == Sign::Zero) r.exact = true;
                mine.push_back(std::move(r));
                continue;
            }
            Rat mid = (s.lo + s.hi) / 2;
            int left = count_in(s.lo, mid);
            work.push_back({mid, s.hi, s.n - left});
            work.push_back({s.lo, mid, left});
        }
        for (auto& r : mine) roots.push_back(std::move(r));
    }
    // disjointify intervals of roots from different factors by refinement
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(roots.begin(), roots.end(),
                  [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
            if (roots[i].hi > roots[i + 1].lo) {
                roots[i].refine();
                roots[i + 1].refine();
                changed = true;
            }
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
    return roots;
}

// Exact sign of f at an isolated root of r.factor. Zero is decided by gcd
// containment; otherwise the isolating interval is refined until an exact
// interval evaluation of f has definite sign.
inline Sign sign_at_root(const Poly<QuadReal>& f, IsolatedRoot r) {
    unsigned long q = r.q;
    if (f.is_zero()) return Sign::Zero;
    if (r.exact) return f.eval(QuadReal(r.hi, Rat(0), q)).sgn();
    Poly<QuadReal> g = gcd(f, r.factor);
    if (g.degree() > 0) {
        int n = sturm_count(g, Bound(QuadReal(r.lo, Rat(0), q)), Bound(QuadReal(r.hi, Rat(0), q)), q);
        if (n > 0) return Sign::Zero;
    }
    // f(root) != 0: refine until interval Horner has definite sign
    while (true) {
        // interval evaluation with QuadReal endpoint arithmetic
        QuadReal lo_acc(Rat(0), Rat(0), q), hi_acc(Rat(0), Rat(0), q);
        QuadReal xl(r.lo, Rat(0), q), xh(r.hi, Rat(0), q);
        bool first = true;
        const auto& c = f.coeffs();
        for (std::size_t i = c.size(); i-- > 0;) {
            if (first) {
                lo_acc = c[i];
                hi_acc = c[i];
                first = false;
                continue;
            }
            QuadReal cands[4] = {lo_acc * xl, lo_acc * xh, hi_acc * xl, hi_acc * xh};
            QuadReal mn = cands[0], mx = cands[0];
            for (int k = 1; k < 4; ++k) {
                if (cands[k] < mn) mn = cands[k];
                if (mx < cands[k]) mx = cands[k];
            }
            lo_acc = mn + c[i];
            hi_acc = mx + c[i];
        }
        if (lo_acc.sgn() == Sign::Positive) return Sign::Positive;
        if (hi_acc.sgn() == Sign::Negative) return Sign::Negative;
        r.refine();
        if (r.exact) return f.eval(QuadReal(r.hi, Rat(0), q)).sgn();
    }
}

}  // namespace weilpoly

#endif
