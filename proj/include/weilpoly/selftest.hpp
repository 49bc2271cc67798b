// Embedded invariant suites behind the `selftest` command: branch invariance
// of the radical constructions, the defining-cubic and residual identities,
// root interlacing, and the trace-polynomial identities. Each property is
// named so a failure can be reported precisely; the unsorted-theta fault
// injection must trip exactly the theta-sorting property.

#ifndef WEILPOLY_SELFTEST_HPP
#define WEILPOLY_SELFTEST_HPP

#include "crosscheck.hpp"

#include <ostream>
#include <random>

namespace weilpoly {

struct SelftestOptions {
    PrecisionConfig prec{};
    bool inject_unsorted_theta = false;
    unsigned scale = 1;  // sample-count multiplier
};

struct SelftestResult {
    bool passed = true;
    bool precision_exhausted = false;
    std::string failed_property;
};

namespace detail_st {

inline Rat small_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 4);
    return Rat(num(rng), den(rng));
}

inline Enclosure eval_poly(const Poly<QuadReal>& p, const Enclosure& x, long prec) {
    Enclosure acc = Enclosure::exact_int(0, prec);
    for (std::size_t k = p.coeffs().size(); k-- > 0;)
        acc = acc * x + Enclosure::from_quad(p.coeffs()[k], prec);
    return acc;
}

}  // namespace detail_st

inline SelftestResult run_selftest(const SelftestOptions& opt, std::ostream& log) {
    SelftestResult res;
    std::mt19937_64 rng(0x5eed5eedULL);
    long p0 = opt.prec.start;
    auto fail = [&](const std::string& prop) {
        res.passed = false;
        res.failed_property = prop;
        log << "[FAIL] " << prop << "\n";
    };

    try {
        // --- theta properties over resolvents with guaranteed real S ---
        unsigned n_theta = 150 * opt.scale;
        for (unsigned i = 0; i < n_theta; ++i) {
            Rat y1 = detail_st::small_rat(rng), y2 = detail_st::small_rat(rng);
            Rat y3 = -y1 - y2;  // depressed cubic with real roots y1, y2, y3
            QuadReal u2{y1 * y2 + y1 * y3 + y2 * y3};
            QuadReal u3{-(y1 * y2 * y3)};
            ResolventData rd = theta_sorted(u2, u3, 2, opt.prec);
            const auto& used = opt.inject_unsorted_theta ? rd.theta_raw : rd.theta;
            for (int k = 0; k < 2; ++k)
                if (used[static_cast<std::size_t>(k + 1)].provably_less(
                        used[static_cast<std::size_t>(k)])) {
                    fail("theta-sorting");
                    return res;
                }
            // defining cubic: every theta is a root
            Poly<QuadReal> cubic = theta_cubic(u2, u3);
            for (const auto& th : rd.theta)
                if (!detail_st::eval_poly(cubic, th, p0).contains_zero()) {
                    fail("theta-defining-cubic");
                    return res;
                }
            // branch invariance: any omega branch and either primitive root
            if (!rd.exact) {
                for (int br = 0; br < 3; ++br)
                    for (int zc = 0; zc < 2; ++zc) {
                        auto alt = theta_enclosures(u2, u3, rd.Delta, p0, br, zc != 0);
                        std::sort(alt.begin(), alt.end(),
                                  [](const Enclosure& a, const Enclosure& b) {
                                      return mpfr_less_p(a.lo(), b.lo());
                                  });
                        for (int k = 0; k < 3; ++k)
                            if (!alt[static_cast<std::size_t>(k)].intersects(
                                    rd.theta[static_cast<std::size_t>(k)])) {
                                fail("theta-branch-invariance");
                                return res;
                            }
                    }
            }
            // invariance under u3 -> -u3
            ResolventData neg = theta_sorted(u2, -u3, 2, opt.prec);
            for (int k = 0; k < 3; ++k) {
                if (rd.exact && neg.exact) {
                    if ((*rd.exact)[static_cast<std::size_t>(k)] !=
                        (*neg.exact)[static_cast<std::size_t>(k)]) {
                        fail("theta-u3-negation");
                        return res;
                    }
                } else if (!rd.theta[static_cast<std::size_t>(k)].intersects(
                               neg.theta[static_cast<std::size_t>(k)])) {
                    fail("theta-u3-negation");
                    return res;
                }
            }
        }
        log << "[ok] theta-sorting, theta-defining-cubic, theta-branch-invariance, "
               "theta-u3-negation\n";

        // --- Ferrari properties over quartics with four real roots ---
        unsigned n_ferrari = 120 * opt.scale;
        for (unsigned i = 0; i < n_ferrari; ++i) {
            Rat r1 = detail_st::small_rat(rng), r2 = detail_st::small_rat(rng),
                r3 = detail_st::small_rat(rng);
            Rat r4 = -r1 - r2 - r3;  // depressed quartic
            Rat e2 = r1 * r2 + r1 * r3 + r1 * r4 + r2 * r3 + r2 * r4 + r3 * r4;
            Rat e3 = r1 * r2 * r3 + r1 * r2 * r4 + r1 * r3 * r4 + r2 * r3 * r4;
            Rat e4 = r1 * r2 * r3 * r4;
            QuadReal u2{e2 / 2}, u3{-e3 / 4}, u4{e4};
            FerrariData fd = ferrari_roots(u2, u3, u4, 2, opt.prec);
            if (!fd.all_real) {
                fail("ferrari-real-detection");
                return res;
            }
            Poly<QuadReal> quartic{u4, QuadReal(4) * u3, QuadReal(2) * u2, QuadReal(0),
                                   QuadReal(1)};
            for (const auto& gamma : fd.gamma)
                if (!detail_st::eval_poly(quartic, gamma, p0).contains_zero()) {
                    fail("ferrari-residual");
                    return res;
                }
            // elementary symmetric functions match (0, 2u2, -4u3, u4)
            const auto& g = fd.gamma;
            Enclosure s1 = g[0] + g[1] + g[2] + g[3];
            Enclosure s2 = g[0] * g[1] + g[0] * g[2] + g[0] * g[3] + g[1] * g[2] + g[1] * g[3] +
                           g[2] * g[3];
            Enclosure s3 =
                g[0] * g[1] * g[2] + g[0] * g[1] * g[3] + g[0] * g[2] * g[3] + g[1] * g[2] * g[3];
            Enclosure s4 = g[0] * g[1] * g[2] * g[3];
            if (!s1.contains_zero() || !s2.contains_rat((QuadReal(2) * u2).rational_part()) ||
                !s3.contains_rat((QuadReal(-4) * u3).rational_part()) ||
                !s4.contains_rat(u4.rational_part())) {
                fail("ferrari-symmetric-functions");
                return res;
            }
            // branch invariance of the sorted roots
            for (int br = 1; br < 3; ++br) {
                FerrariData alt = ferrari_roots(u2, u3, u4, 2, opt.prec, br);
                for (int k = 0; k < 4; ++k)
                    if (!alt.gamma[static_cast<std::size_t>(k)].intersects(
                            fd.gamma[static_cast<std::size_t>(k)])) {
                        fail("ferrari-branch-invariance");
                        return res;
                    }
            }
            // reflection: gamma_i(u3) = -gamma_{5-i}(-u3)
            FerrariData refl = ferrari_roots(u2, -u3, u4, 2, opt.prec);
            for (int k = 0; k < 4; ++k)
                if (!fd.gamma[static_cast<std::size_t>(k)].intersects(
                        -refl.gamma[static_cast<std::size_t>(3 - k)])) {
                    fail("gamma-reflection");
                    return res;
                }
        }
        log << "[ok] ferrari-residual, ferrari-symmetric-functions, "
               "ferrari-branch-invariance, gamma-reflection\n";

        // --- interlacing of f and f' for real-rooted quintics ---
        unsigned n_inter = 1000 * opt.scale;
        std::uniform_int_distribution<long> root_dist(-6, 6);
        for (unsigned i = 0; i < n_inter; ++i) {
            std::vector<long> roots(5);
            for (auto& r : roots) r = root_dist(rng);
            std::sort(roots.begin(), roots.end());
            Poly<QuadReal> f{QuadReal(1)};
            for (long r : roots) f = f * Poly<QuadReal>{QuadReal(-r), QuadReal(1)};
            Poly<QuadReal> fp = f.derivative();
            // interlacing <=> at every root t of f:
            //   #{beta <= t} >= #{gamma <= t} - 1 and #{beta < t} <= #{gamma < t}
            for (long t : roots) {
                QuadReal tq(t);
                int nf = count_real_roots_with_multiplicity(f, Bound(NegInf{}), Bound(tq), 1);
                int nfp = count_real_roots_with_multiplicity(fp, Bound(NegInf{}), Bound(tq), 1);
                int mf = 0, mfp = 0;  // multiplicities at t
                for (Poly<QuadReal> d = f; !d.is_zero() && d.eval(tq).is_zero();
                     d = d.derivative())
                    ++mf;
                for (Poly<QuadReal> d = fp; !d.is_zero() && d.eval(tq).is_zero();
                     d = d.derivative())
                    ++mfp;
                if (!(nfp >= nf - 1 && (nfp - mfp) <= (nf - mf))) {
                    fail("interlacing");
                    return res;
                }
            }
        }
        log << "[ok] interlacing\n";

        // --- trace-polynomial identities ---
        unsigned n_trace = 60 * opt.scale;
        std::uniform_int_distribution<long> coef(-5, 5);
        const unsigned long qs[4] = {2, 3, 4, 5};
        for (unsigned i = 0; i < n_trace; ++i) {
            unsigned long q = qs[i % 4];
            unsigned g = 1 + (i % 5);
            std::vector<Int> a;
            for (unsigned j = 0; j < g; ++j) a.emplace_back(coef(rng));
            WeilCandidate c(q, g, a);
            Poly<QuadReal> P = to_quad(trace_poly(c), q);
            QuadReal two_rq(Rat(0), Rat(2), q);
            Poly<QuadReal> hp_id = P.shift(-two_rq);
            Poly<QuadReal> hm_id = P.reflect().shift(-two_rq);
            if (g % 2 == 1) hm_id = -hm_id;
            HPlusMinus hpm = h_plus_minus(c);
            if (!(hpm.hplus == hp_id) || !(hpm.hminus == hm_id)) {
                fail("trace-identity");
                return res;
            }
            // x^g P(x + q/x) = expand(c)
            if (!(expand_from_trace(trace_poly(c), q) == expand(c))) {
                fail("trace-expansion");
                return res;
            }
        }
        log << "[ok] trace-identity, trace-expansion\n";
    } catch (const PrecisionExhausted& e) {
        res.precision_exhausted = true;
        res.passed = false;
        res.failed_property = "precision-exhausted";
        log << "[precision-exhausted] " << e.what() << "\n";
    }
    return res;
}

}  // namespace weilpoly

#endif
