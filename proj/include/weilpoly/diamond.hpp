// The derivative-recursion criterion for real-rootedness: condition (diamond)
// asks that f alternate in sign along the sorted critical values of f', with
// multiplicity folded in by letting repeated roots of f' force f = 0 there.
// A second characterization (SIGN/MULT) runs over the non-inflection critical
// points only. Both are exact; signs of f at algebraic critical points are
// resolved by gcd containment and isolating-interval refinement.

#ifndef WEILPOLY_DIAMOND_HPP
#define WEILPOLY_DIAMOND_HPP

#include "realroots.hpp"

#include <variant>
#include <vector>

namespace weilpoly {

using BetaValue = std::variant<QuadReal, Enclosure>;

struct DiamondInput {
    Poly<QuadReal> f;             // degree K > 1, positive leading coefficient
    std::vector<BetaValue> betas;  // ascending: beta_{K-1} <= ... <= beta_1
    unsigned long q = 1;
};

enum class Decision { No, Yes };

namespace detail {

// Exact sign of f at a critical point given as an enclosure: try the ball
// evaluation, then match the enclosure against the isolated roots of f'.
inline Sign sign_of_f_at(const Poly<QuadReal>& f, const BetaValue& beta, unsigned long q,
                         std::vector<IsolatedRoot>& crits, bool& crits_ready, long prec) {
    if (std::holds_alternative<QuadReal>(beta)) return f.eval(std::get<QuadReal>(beta)).sgn();
    const Enclosure& be = std::get<Enclosure>(beta);
    Enclosure acc = Enclosure::exact_int(0, prec);
    for (std::size_t k = f.coeffs().size(); k-- > 0;)
        acc = acc * be + Enclosure::from_quad(f.coeffs()[k], prec);
    if (auto s = acc.sgn()) return *s;
    if (!crits_ready) {
        crits = isolate_real_roots(f.derivative(), q);
        crits_ready = true;
    }
    for (int round = 0; round < 128; ++round) {
        const IsolatedRoot* hit = nullptr;
        int hits = 0;
        for (auto& r : crits) {
            Enclosure ivl = Enclosure::hull(Enclosure::from_rat(r.lo, prec),
                                            Enclosure::from_rat(r.hi, prec));
            if (ivl.intersects(be)) {
                ++hits;
                hit = &r;
            }
        }
        if (hits == 1) return sign_at_root(f, *hit);
        for (auto& r : crits) r.refine();
    }
    throw PrecisionExhausted("diamond: enclosure spans several critical points");
}

}  // namespace detail

// Condition (diamond) plus the root-sign side conditions of the proposition.
inline Decision diamond_all_real(const DiamondInput& in, RootMode mode,
                                 const PrecisionConfig& cfg = {}) {
    const Poly<QuadReal>& f = in.f;
    long K = f.degree();
    if (K <= 1) throw PreconditionViolated("diamond: degree must exceed 1");
    if (f.lead().sgn() != Sign::Positive)
        throw PreconditionViolated("diamond: leading coefficient must be positive");
    Poly<QuadReal> fp = f.derivative();
    if (count_real_roots_with_multiplicity(fp, Bound(NegInf{}), Bound(PosInf{}), in.q) != K - 1)
        throw PreconditionViolated("diamond: derivative has nonreal roots");
    if (static_cast<long>(in.betas.size()) != K - 1)
        throw PreconditionViolated("diamond: need K-1 critical values");

    std::vector<IsolatedRoot> crits;
    bool crits_ready = false;
    // betas ascending; the descending-index convention has beta_i = betas[K-1-i]
    for (long i = 1; i <= K - 1; ++i) {
        Sign s = detail::sign_of_f_at(f, in.betas[static_cast<std::size_t>(K - 1 - i)], in.q,
                                      crits, crits_ready, cfg.start);
        if (i % 2 == 1 && s == Sign::Positive) return Decision::No;
        if (i % 2 == 0 && s == Sign::Negative) return Decision::No;
    }
    if (mode == RootMode::Real) return Decision::Yes;

    // root-sign side conditions, decided by Sturm counts on f'
    std::size_t m0 = fp.trailing_zeros();
    int upto0 = count_real_roots_with_multiplicity(fp, Bound(NegInf{}), Bound(QuadReal(0)), in.q);
    Sign f0 = f.eval(QuadReal(0)).sgn();
    int sK = (K % 2 == 0) ? 1 : -1;
    int signed_f0 = sK * static_cast<int>(f0);
    if (mode == RootMode::RealNonNeg)
        return (upto0 == static_cast<int>(m0) && signed_f0 >= 0) ? Decision::Yes : Decision::No;
    return (upto0 == 0 && signed_f0 > 0) ? Decision::Yes : Decision::No;
}

// Convenience: isolate the critical values internally.
inline Decision diamond_all_real(const Poly<QuadReal>& f, RootMode mode, unsigned long q,
                                 const PrecisionConfig& cfg = {}) {
    DiamondInput in{f, {}, q};
    auto roots = isolate_real_roots(f.derivative(), q);
    for (auto& r : roots) {
        r.refine_below(Rat(1, 1024));
        for (std::size_t m = 0; m < r.multiplicity; ++m) {
            if (r.is_exact())
                in.betas.emplace_back(QuadReal(r.hi, Rat(0), q));
            else
                in.betas.emplace_back(Enclosure::hull(Enclosure::from_rat(r.lo, cfg.start),
                                                      Enclosure::from_rat(r.hi, cfg.start)));
        }
    }
    return diamond_all_real(in, mode, cfg);
}

// ---------- Appendix alternative: SIGN / MULT ----------

struct CriticalPointProfile {
    // non-inflection critical points, ascending, with ord in f' and sign of f
    struct Alpha {
        IsolatedRoot root;
        std::size_t ord;
        Sign f_sign;
    };
    std::vector<Alpha> alphas;
    long K = 0;
    long k = 0;  // count of non-inflection critical points
};

inline CriticalPointProfile critical_point_profile(const Poly<QuadReal>& f, unsigned long q) {
    CriticalPointProfile prof;
    prof.K = f.degree();
    Poly<QuadReal> fp = f.derivative();
    auto roots = isolate_real_roots(fp, q);
    for (auto& r : roots) {
        if (r.multiplicity % 2 == 0) continue;  // inflection point
        CriticalPointProfile::Alpha a{r, r.multiplicity, sign_at_root(f, r)};
        prof.alphas.push_back(std::move(a));
    }
    prof.k = static_cast<long>(prof.alphas.size());
    return prof;
}

// Appendix characterization: real-rooted iff SIGN and MULT hold; parts (b)
// and (c) add the root-sign conditions.
inline Decision sign_mult_all_real(const Poly<QuadReal>& f, RootMode mode, unsigned long q) {
    long K = f.degree();
    if (K <= 1) throw PreconditionViolated("sign_mult: degree must exceed 1");
    if (f.lead().sgn() != Sign::Positive)
        throw PreconditionViolated("sign_mult: leading coefficient must be positive");
    Poly<QuadReal> fp = f.derivative();
    if (count_real_roots_with_multiplicity(fp, Bound(NegInf{}), Bound(PosInf{}), q) != K - 1)
        throw PreconditionViolated("sign_mult: derivative has nonreal roots");

    // MULT: multiple roots of f' must be roots of f
    auto roots = isolate_real_roots(fp, q);
    for (auto& r : roots)
        if (r.multiplicity >= 2 && sign_at_root(f, r) != Sign::Zero) return Decision::No;

    // SIGN over sentinels and non-inflection critical points, descending
    CriticalPointProfile prof = critical_point_profile(f, q);
    int prev = 1;  // f(alpha_0) = +1
    for (auto it = prof.alphas.rbegin(); it != prof.alphas.rend(); ++it) {
        int cur = static_cast<int>(it->f_sign);
        if (prev * cur > 0) return Decision::No;
        if (cur != 0) prev = cur;
        else prev = 0;
    }
    int last = (K % 2 == 0) ? 1 : -1;  // f(alpha_{k+1}) = (-1)^K
    if (prev * last > 0) return Decision::No;
    if (mode == RootMode::Real) return Decision::Yes;

    std::size_t m0 = fp.trailing_zeros();
    int upto0 = count_real_roots_with_multiplicity(fp, Bound(NegInf{}), Bound(QuadReal(0)), q);
    Sign f0 = f.eval(QuadReal(0)).sgn();
    int sK = (K % 2 == 0) ? 1 : -1;
    int signed_f0 = sK * static_cast<int>(f0);
    if (mode == RootMode::RealNonNeg)
        return (upto0 == static_cast<int>(m0) && signed_f0 >= 0) ? Decision::Yes : Decision::No;
    return (upto0 == 0 && signed_f0 > 0) ? Decision::Yes : Decision::No;
}

}  // namespace weilpoly

#endif
