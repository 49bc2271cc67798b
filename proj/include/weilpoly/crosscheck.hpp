// Independent brute-force enumeration and comparison harness.
//
// The oracle never touches the closed-form criteria: membership of a box
// tuple is decided by is_weil (Sturm counts), and the trace-space walk prunes
// only with elementary necessary conditions on power sums of roots confined
// to [-2 sqrt q, 2 sqrt q] before the final Sturm decision. Comparison
// against the theorem-driven enumerators is the validation of the theorems.

#ifndef WEILPOLY_CROSSCHECK_HPP
#define WEILPOLY_CROSSCHECK_HPP

#include "enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

namespace weilpoly {

// Per-index bounds B_i = C(2g, i) ceil(q^{i/2}); every Weil candidate lies in
// the box |a_i| <= B_i since all 2g roots have modulus sqrt(q).
struct CoeffBox {
    std::vector<Int> B;

    Int size() const {
        Int n = 1;
        for (const auto& b : B) n *= 2 * b + 1;
        return n;
    }
};

inline CoeffBox coeff_box(unsigned long q, unsigned g) {
    CoeffBox box;
    Int qi(static_cast<long>(q));
    for (unsigned i = 1; i <= g; ++i) {
        // ceil(q^{i/2}) = isqrt(q^i) rounded up
        Int qpow = pow_int(qi, i);
        Int r = isqrt(qpow);
        if (r * r != qpow) r += 1;
        box.B.push_back(binomial(2 * g, i) * r);
    }
    return box;
}

struct CompareReport {
    unsigned long q = 2;
    unsigned g = 1;
    std::size_t count_theorem = 0;
    std::size_t count_oracle = 0;
    std::vector<WeilCandidate> missing;   // oracle-only
    std::vector<WeilCandidate> spurious;  // theorem-only
    std::size_t realroot_count = 0;
    std::size_t samples = 0;  // nonzero for sampled comparisons
    double elapsed_seconds = 0;

    bool ok() const { return missing.empty() && spurious.empty(); }
};

namespace detail_cc {

// walk the sub-box with a_1 fixed to the given range
template <class Test>
void box_walk(const CoeffBox& box, const Int& a1_lo, const Int& a1_hi, Test&& test) {
    unsigned g = static_cast<unsigned>(box.B.size());
    std::vector<Int> a(g);
    std::function<void(unsigned)> rec = [&](unsigned level) {
        if (level == g) {
            test(a);
            return;
        }
        for (Int v = -box.B[level]; v <= box.B[level]; ++v) {
            a[level] = v;
            rec(level + 1);
        }
    };
    for (Int v = a1_lo; v <= a1_hi; ++v) {
        a[0] = v;
        rec(1);
    }
}

}  // namespace detail_cc

// Exhaustive CoeffBox oracle. Throws BudgetExceeded when the box exceeds the
// candidate budget.
inline std::vector<WeilCandidate> brute_force_enum(unsigned long q, unsigned g,
                                                   const Int& budget = Int(50000000),
                                                   int jobs = 1) {
    CoeffBox box = coeff_box(q, g);
    if (box.size() > budget) throw BudgetExceeded("brute_force_enum: box exceeds budget");
    int nj = std::max(1, jobs);
    Int B1 = box.B[0];
    long width = mpz_get_si(Int(2 * B1 + 1).get_mpz_t());
    long chunk = (width + nj - 1) / nj;
    std::vector<std::vector<WeilCandidate>> parts(static_cast<std::size_t>(nj));
    std::vector<std::thread> threads;
    for (int t = 0; t < nj; ++t) {
        Int lo = -B1 + Int(static_cast<long>(t) * chunk);
        Int hi = std::min(Int(lo + chunk - 1), B1);
        if (lo > B1) break;
        threads.emplace_back([&, t, lo, hi]() {
            detail_cc::box_walk(box, lo, hi, [&](const std::vector<Int>& a) {
                WeilCandidate c(q, g, a);
                if (is_weil(c)) parts[static_cast<std::size_t>(t)].push_back(c);
            });
        });
    }
    for (auto& th : threads) th.join();
    std::vector<WeilCandidate> out;
    for (auto& p : parts)
        for (auto& c : p) out.push_back(std::move(c));
    return out;
}

// ---------- trace-space walk ----------
//
// Enumerate monic integer P of degree g whose roots all lie in
// [-2 sqrt q, 2 sqrt q], by walking coefficients top-down with power-sum
// pruning, and map back through h(x) = x^g P(x + q/x). For roots r_i in
// [-M, M] (M = 2 sqrt q, M^2 = 4q):
//   s_2 in [s_1^2/g, g M^2]          (Cauchy-Schwarz, range)
//   |s_k| <= M^{k-2} s_2   (k >= 3)  (|r|^k <= M^{k-2} r^2)
//   s_{2m} >= s_m^2 / g              (Cauchy-Schwarz)
// All bounds are rational (even powers of M), so the windows are exact.

// h(x) = x^g P(x + q/x) expanded over Z.
inline Poly<Int> expand_from_trace(const Poly<Int>& P, unsigned long q) {
    unsigned g = static_cast<unsigned>(P.degree());
    std::vector<Int> h(2 * g + 1, Int(0));
    for (unsigned k = 0; k <= g; ++k) {
        const Int& pk = P.coeff(k);
        if (sign(pk) == 0) continue;
        // p_k x^{g-k} (x^2+q)^k
        for (unsigned j = 0; j <= k; ++j)
            h[g - k + 2 * j] += pk * binomial(k, j) * pow_int(Int(static_cast<long>(q)), k - j);
    }
    return Poly<Int>(std::move(h));
}

// All g roots of P (with multiplicity) in the closed interval
// [-2 sqrt q, 2 sqrt q]?
inline bool trace_in_interval(const Poly<Int>& P, unsigned long q) {
    unsigned g = static_cast<unsigned>(P.degree());
    Poly<QuadReal> Pq = to_quad(P, q);
    QuadReal hi(Rat(0), Rat(2), q);
    QuadReal lo = -hi;
    int inside = count_real_roots_with_multiplicity(Pq, Bound(lo), Bound(hi), q);
    if (Pq.eval(lo).is_zero()) {
        Poly<QuadReal> d = Pq;
        while (true) {
            d = d.derivative();
            ++inside;
            if (d.is_zero() || !d.eval(lo).is_zero()) break;
        }
    }
    return inside == static_cast<int>(g);
}

inline std::vector<WeilCandidate> brute_force_trace(unsigned long q, unsigned g, int jobs = 1);

namespace detail_cc {

// Recursive coefficient walk over P = y^g + c_1 y^{g-1} + ... + c_g.
template <class Found>
void trace_walk_level(unsigned long q, unsigned g, std::vector<Rat>& s, std::vector<Int>& c,
                      unsigned k, Found&& found) {
    if (k > g) {
        std::vector<Int> pc(g + 1);
        pc[g] = 1;
        for (unsigned i = 1; i <= g; ++i) pc[g - i] = c[i];
        Poly<Int> P(std::move(pc));
        if (trace_in_interval(P, q)) found(P);
        return;
    }
    Rat M2(4 * static_cast<long>(q));  // M^2
    Rat gs(static_cast<long>(g));
    Rat s_lo, s_hi;
    if (k == 1) {
        // handled by caller (outer split); not reached
        throw Error("trace_walk_level: k == 1");
    } else if (k == 2) {
        s_lo = s[1] * s[1] / gs;
        s_hi = gs * M2;
    } else {
        Rat mk = pow_rat(M2, (k - 2) / 2);  // M^{k-2} for even k-2
        if ((k - 2) % 2 == 1) {
            // odd power of M: use M^{k-2} s_2 <= M^{k-1} s_2 / M... keep it
            // rational with the weaker |s_k| <= M^{k-1} s_2 / M_floor; simpler:
            // square-free bound |s_k|^2 <= M^{2(k-2)} s_2^2
            mk = pow_rat(M2, k - 2);  // M^{2(k-2)}
            Rat cap2 = mk * s[2] * s[2];
            // |s_k| <= sqrt(cap2): use exact integer sqrt on ceil
            Int num = cap2.get_num(), den = cap2.get_den();
            Int r = isqrt(num * den);  // floor(sqrt(num den))
            Rat cap(r + 1, den);
            cap.canonicalize();
            s_hi = cap;
            s_lo = -cap;
        } else {
            s_hi = mk * s[2];
            s_lo = -s_hi;
        }
        if (k % 2 == 0) {
            Rat lower = s[k / 2] * s[k / 2] / gs;
            if (lower > s_lo) s_lo = lower;
        }
    }
    // Newton: s_k + c_1 s_{k-1} + ... + c_{k-1} s_1 + k c_k = 0
    Rat T(0);
    for (unsigned j = 1; j < k; ++j) T += Rat(c[j]) * s[k - j];
    // c_k = -(s_k + T)/k decreasing in s_k
    Rat kk(static_cast<long>(k));
    Int c_lo = rat_ceil((-s_hi - T) / kk);
    Int c_hi = rat_floor((-s_lo - T) / kk);
    for (Int v = c_lo; v <= c_hi; ++v) {
        c[k] = v;
        s[k] = -Rat(static_cast<long>(k)) * Rat(v) - T;
        trace_walk_level(q, g, s, c, k + 1, found);
    }
}

}  // namespace detail_cc

// Trace-space oracle: exhaustive P walk with moment pruning, mapped back to
// candidates; output lexicographically sorted in (a_1, ..., a_g).
inline std::vector<WeilCandidate> brute_force_trace(unsigned long q, unsigned g, int jobs) {
    if (g < 2) return brute_force_enum(q, g);
    Int B1 = a1_bound(q, g);
    int nj = std::max(1, jobs);
    long width = mpz_get_si(Int(2 * B1 + 1).get_mpz_t());
    long chunk = (width + nj - 1) / nj;
    std::vector<std::vector<WeilCandidate>> parts(static_cast<std::size_t>(nj));
    std::vector<std::thread> threads;
    for (int t = 0; t < nj; ++t) {
        Int lo = -B1 + Int(static_cast<long>(t) * chunk);
        Int hi = std::min(Int(lo + chunk - 1), B1);
        if (lo > B1) break;
        threads.emplace_back([&, t, lo, hi]() {
            std::vector<Rat> s(g + 1);
            std::vector<Int> c(g + 1);
            for (Int c1 = lo; c1 <= hi; ++c1) {
                c[1] = c1;
                s[1] = Rat(-c1);
                detail_cc::trace_walk_level(q, g, s, c, 2, [&](const Poly<Int>& P) {
                    auto cand = candidate_from_poly(expand_from_trace(P, q), q);
                    if (!cand) throw Error("trace walk: expansion not palindromic");
                    parts[static_cast<std::size_t>(t)].push_back(std::move(*cand));
                });
            }
        });
    }
    for (auto& th : threads) th.join();
    std::vector<WeilCandidate> out;
    for (auto& p : parts)
        for (auto& c : p) out.push_back(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------- closed-form membership (diagnostics) ----------

// Membership decided by the degree-g closed-form predicates on h+ and h-,
// with optional literal (printed) sign conditions and unsorted thetas. Used
// by the diagnostic modes; the oracle never calls this.
inline bool is_weil_closed_form(const WeilCandidate& c, const PredicateOptions& opts = {}) {
    HPlusMinus h = h_plus_minus(c);
    auto decide = [&](const Poly<QuadReal>& p) {
        switch (c.g) {
            case 1:
                return p.coeff(0).sgn() != Sign::Positive;  // root -b0 >= 0
            case 2:
                return deg2_real_nonneg(QuadReal(1), p.coeff(1), p.coeff(0), false, opts);
            case 3:
                return deg3_real_nonneg(QuadReal(1), p.coeff(2), p.coeff(1), p.coeff(0), false,
                                        opts);
            case 4:
                return deg4_real_nonneg(QuadReal(1), p.coeff(3), p.coeff(2), p.coeff(1),
                                        p.coeff(0), false, c.q, opts);
            case 5:
                return deg5_monic_real_nonneg(p.coeff(4), p.coeff(3), p.coeff(2), p.coeff(1),
                                              p.coeff(0), false, c.q, opts);
            default:
                throw DomainError("is_weil_closed_form: g must be 1..5");
        }
    };
    return decide(h.hplus) && decide(h.hminus);
}

// ---------- comparisons ----------

enum class OracleKind { Auto, Box, Trace };

inline CompareReport compare(unsigned long q, unsigned g, const Int& budget = Int(50000000),
                             int jobs = 1, OracleKind oracle = OracleKind::Auto,
                             const PredicateOptions& diag = {}) {
    auto t0 = std::chrono::steady_clock::now();
    CompareReport rep;
    rep.q = q;
    rep.g = g;

    EnumConfig cfg;
    cfg.jobs = jobs;
    cfg.classify = false;
    std::vector<WeilCandidate> theorem_set;
    if (diag.literal_signs || !diag.sort_thetas) {
        // diagnostic: closed-form membership over the oracle box
        CoeffBox box = coeff_box(q, g);
        if (box.size() > budget) throw BudgetExceeded("compare: box exceeds budget");
        detail_cc::box_walk(box, -box.B[0], box.B[0], [&](const std::vector<Int>& a) {
            WeilCandidate c(q, g, a);
            try {
                if (is_weil_closed_form(c, diag)) theorem_set.push_back(c);
            } catch (const PreconditionViolated&) {
            }
        });
    } else {
        for (auto& r : enumerate_weil(q, g, cfg)) {
            rep.realroot_count += r.real_root;
            theorem_set.push_back(r.c);
        }
    }
    rep.count_theorem = theorem_set.size();

    std::vector<WeilCandidate> oracle_set;
    if (oracle == OracleKind::Trace || (oracle == OracleKind::Auto && g >= 4))
        oracle_set = brute_force_trace(q, g, jobs);
    else
        oracle_set = brute_force_enum(q, g, budget, jobs);
    rep.count_oracle = oracle_set.size();

    std::set_difference(oracle_set.begin(), oracle_set.end(), theorem_set.begin(),
                        theorem_set.end(), std::back_inserter(rep.missing));
    std::set_difference(theorem_set.begin(), theorem_set.end(), oracle_set.begin(),
                        oracle_set.end(), std::back_inserter(rep.spurious));
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// Sampled comparison for boxes beyond exhaustive reach: membership by is_weil
// must match membership in the enumerated stream on every sample.
inline CompareReport compare_sampled(unsigned long q, unsigned g, std::size_t nsamples,
                                     std::uint64_t seed = 20240901, int jobs = 1) {
    auto t0 = std::chrono::steady_clock::now();
    CompareReport rep;
    rep.q = q;
    rep.g = g;
    rep.samples = nsamples;
    EnumConfig cfg;
    cfg.jobs = jobs;
    cfg.classify = false;
    std::vector<WeilCandidate> members;
    for (auto& r : enumerate_weil(q, g, cfg)) {
        rep.realroot_count += r.real_root;
        members.push_back(r.c);
    }
    rep.count_theorem = members.size();
    CoeffBox box = coeff_box(q, g);
    std::mt19937_64 rng(seed);
    auto pick = [&](const Int& B) {
        unsigned long width = mpz_get_ui(Int(2 * B + 1).get_mpz_t());
        std::uniform_int_distribution<unsigned long> d(0, width - 1);
        return Int(static_cast<long>(d(rng))) - B;
    };
    std::vector<Int> a(g);
    for (std::size_t i = 0; i < nsamples; ++i) {
        for (unsigned j = 0; j < g; ++j) a[j] = pick(box.B[j]);
        WeilCandidate c(q, g, a);
        bool in_enum = std::binary_search(members.begin(), members.end(), c);
        bool member = is_weil(c);
        if (member) ++rep.count_oracle;
        if (member && !in_enum) rep.missing.push_back(c);
        if (!member && in_enum) rep.spurious.push_back(c);
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---------- unsorted-theta counterexample search ----------

struct ThetaFaultInstance {
    unsigned long q;
    WeilCandidate candidate;  // g = 4, faulty-accepted but not a Weil polynomial
};

// Search genus-4 prefixes for an integer a4 that the construction-order
// (unsorted) theta window certainly admits but that fails is_weil. Exhibits
// that sorting the set S matters.
inline std::optional<ThetaFaultInstance> find_unsorted_theta_instance(
    const std::vector<unsigned long>& qs, const PrecisionConfig& prec = {}) {
    for (unsigned long q : qs) {
        long qz = static_cast<long>(q);
        std::optional<ThetaFaultInstance> hit;
        Int B1 = a1_bound(q, 4);
        for (Int a1 = -B1; a1 <= B1 && !hit; ++a1) {
            if (a1 * a1 > 64 * qz) continue;
            QuadReal lo2 = QuadReal(Rat(0), Rat(6), q) * QuadReal(Rat(abs(a1))) -
                           QuadReal(Rat(20 * qz));
            Rat hi2 = Rat(3 * a1 * a1) / 8 + Rat(4 * qz);
            for (Int a2 = lo2.ceil(), a2hi = rat_floor(hi2); a2 <= a2hi && !hit; ++a2) {
                QuadReal c_mid = QuadReal(Rat(-9 * qz * a1));
                QuadReal c_off = QuadReal(Rat(0), Rat(4), q) * QuadReal(Rat(a2)) +
                                 QuadReal(Rat(0), Rat(16 * qz), q);
                IntRange r3 = quad_window(c_mid - c_off, c_mid + c_off);
                Rat R = Rat(a1 * a2) / 2 - Rat(a1 * a1 * a1) / 8 + Rat(qz * a1);
                Rat E = Rat(9 * a1 * a1 - 24 * a2 + 96 * qz);
                r3 = r3.intersect(radical_window(R, Rat(1, 216), E, prec.start));
                for (Int a3 = r3.lo; a3 <= r3.hi && !hit; ++a3) {
                    Rat u2 = Rat(-3 * a1 * a1) / 16 + Rat(a2) / 2 - Rat(2 * qz);
                    Rat u3 = Rat(-a1 * a1 * a1) / 32 + Rat(a1 * a2) / 8 + Rat(a1 * qz) / 4 -
                             Rat(a3) / 4;
                    ResolventData rd;
                    try {
                        rd = theta_sorted(QuadReal(u2), QuadReal(u3), q, prec);
                    } catch (const DeltaPositive&) {
                        continue;
                    }
                    Rat Ef = Rat(3 * a1 * a1 * a1 * a1) / 256 - Rat(a1 * a1 * a2) / 16 -
                             Rat(qz * a1 * a1) / 2 + Rat(a1 * a3) / 4 + Rat(2 * qz * a2) -
                             Rat(2 * qz * qz);
                    Enclosure efe = Enclosure::from_rat(Ef, prec.start);
                    IntRange faulty =
                        range_from_enclosures(efe + rd.theta_raw[0], efe + rd.theta_raw[1]);
                    QuadReal elo = QuadReal(Rat(0), Rat(2), q) * QuadReal(Rat(abs(qz * a1 + a3))) -
                                   QuadReal(Rat(2 * qz * a2)) - QuadReal(Rat(2 * qz * qz));
                    Int lo = std::max(faulty.sure_lo, elo.ceil());
                    for (Int a4 = lo; a4 <= faulty.sure_hi && !hit; ++a4) {
                        WeilCandidate c(q, 4, {a1, a2, a3, a4});
                        if (is_weil(c)) continue;
                        // the sorted window must be the rejecting condition
                        QuadReal cc = QuadReal(Rat(a4) - Ef);
                        if (!theta_window_contains(rd, QuadReal(u2), QuadReal(u3), cc, q,
                                                   prec.start))
                            hit = ThetaFaultInstance{q, c};
                    }
                }
            }
        }
        if (hit) return hit;
    }
    return std::nullopt;
}

}  // namespace weilpoly

#endif
