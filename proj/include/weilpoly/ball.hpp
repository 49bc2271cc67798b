// Rigorous real enclosures backed by MPFR.
//
// An Enclosure is stored as a pair of directed-rounded endpoints [lo, hi] at a
// given working precision; the represented exact real always lies inside.
// midpoint() and radius() are derived views. Every operation rounds outward,
// so composite expressions stay rigorous at any precision.

#ifndef WEILPOLY_BALL_HPP
#define WEILPOLY_BALL_HPP

#include "quadreal.hpp"

#include <mpfr.h>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

namespace weilpoly {

struct PrecisionConfig {
    long start = 128;
    long cap = 4096;
};

namespace detail {

// Minimal RAII wrapper around mpfr_t.
class Mpfr {
  public:
    explicit Mpfr(long prec) { mpfr_init2(x_, prec); }
    Mpfr(const Mpfr& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    Mpfr(Mpfr&& o) noexcept {
        mpfr_init2(x_, 2);
        mpfr_swap(x_, o.x_);
    }
    Mpfr& operator=(const Mpfr& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    Mpfr& operator=(Mpfr&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~Mpfr() { mpfr_clear(x_); }
    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }

  private:
    mpfr_t x_;
};

}  // namespace detail

class Enclosure {
  public:
    explicit Enclosure(long prec = 128) : lo_(prec), hi_(prec), prec_(prec) {
        mpfr_set_zero(lo_.get(), 1);
        mpfr_set_zero(hi_.get(), 1);
    }

    long precision() const { return prec_; }

    static Enclosure exact_int(long v, long prec) {
        Enclosure e(prec);
        mpfr_set_si(e.lo_.get(), v, MPFR_RNDD);
        mpfr_set_si(e.hi_.get(), v, MPFR_RNDU);
        return e;
    }

    static Enclosure from_rat(const Rat& v, long prec) {
        Enclosure e(prec);
        mpfr_set_q(e.lo_.get(), v.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(e.hi_.get(), v.get_mpq_t(), MPFR_RNDU);
        return e;
    }

    // a + b*sqrt(q), outward rounded.
    static Enclosure from_quad(const QuadReal& v, long prec) {
        Enclosure a = from_rat(v.rational_part(), prec);
        if (sign(v.radical_part()) == 0) return a;
        Enclosure rq(prec);
        mpfr_sqrt_ui(rq.lo_.get(), v.radicand(), MPFR_RNDD);
        mpfr_sqrt_ui(rq.hi_.get(), v.radicand(), MPFR_RNDU);
        return a + from_rat(v.radical_part(), prec) * rq;
    }

    static Enclosure pi(long prec) {
        Enclosure e(prec);
        mpfr_const_pi(e.lo_.get(), MPFR_RNDD);
        mpfr_const_pi(e.hi_.get(), MPFR_RNDU);
        return e;
    }

    // [min(lo), max(hi)] hull of two enclosures.
    static Enclosure hull(const Enclosure& x, const Enclosure& y) {
        Enclosure e(std::max(x.prec_, y.prec_));
        mpfr_min(e.lo_.get(), x.lo_.get(), y.lo_.get(), MPFR_RNDD);
        mpfr_max(e.hi_.get(), x.hi_.get(), y.hi_.get(), MPFR_RNDU);
        return e;
    }

    friend Enclosure operator+(const Enclosure& x, const Enclosure& y) {
        Enclosure e(std::max(x.prec_, y.prec_));
        mpfr_add(e.lo_.get(), x.lo_.get(), y.lo_.get(), MPFR_RNDD);
        mpfr_add(e.hi_.get(), x.hi_.get(), y.hi_.get(), MPFR_RNDU);
        return e;
    }

    friend Enclosure operator-(const Enclosure& x) {
        Enclosure e(x.prec_);
        mpfr_neg(e.lo_.get(), x.hi_.get(), MPFR_RNDD);
        mpfr_neg(e.hi_.get(), x.lo_.get(), MPFR_RNDU);
        return e;
    }

    friend Enclosure operator-(const Enclosure& x, const Enclosure& y) { return x + (-y); }

    friend Enclosure operator*(const Enclosure& x, const Enclosure& y) {
        long prec = std::max(x.prec_, y.prec_);
        Enclosure e(prec);
        detail::Mpfr t(prec), best(prec);
        mpfr_srcptr xs[2] = {x.lo_.get(), x.hi_.get()};
        mpfr_srcptr ys[2] = {y.lo_.get(), y.hi_.get()};
        bool first = true;
        for (auto xv : xs)
            for (auto yv : ys) {
                mpfr_mul(t.get(), xv, yv, MPFR_RNDD);
                if (first || mpfr_less_p(t.get(), best.get())) mpfr_set(best.get(), t.get(), MPFR_RNDD);
                first = false;
            }
        mpfr_set(e.lo_.get(), best.get(), MPFR_RNDD);
        first = true;
        for (auto xv : xs)
            for (auto yv : ys) {
                mpfr_mul(t.get(), xv, yv, MPFR_RNDU);
                if (first || mpfr_greater_p(t.get(), best.get())) mpfr_set(best.get(), t.get(), MPFR_RNDU);
                first = false;
            }
        mpfr_set(e.hi_.get(), best.get(), MPFR_RNDU);
        return e;
    }

    // Reciprocal; the enclosure must exclude zero.
    Enclosure recip() const {
        if (contains_zero()) throw DomainError("Enclosure: reciprocal of interval containing zero");
        Enclosure e(prec_);
        mpfr_ui_div(e.lo_.get(), 1, hi_.get(), MPFR_RNDD);
        mpfr_ui_div(e.hi_.get(), 1, lo_.get(), MPFR_RNDU);
        return e;
    }

    friend Enclosure operator/(const Enclosure& x, const Enclosure& y) { return x * y.recip(); }

    // Square root. Throws DomainError when the value is provably negative.
    // A straddling lower end is clamped to zero; callers use this only when
    // the exact value is known to be non-negative.
    Enclosure sqrt() const {
        if (mpfr_sgn(hi_.get()) < 0) throw DomainError("Enclosure: sqrt of negative value");
        Enclosure e(prec_);
        if (mpfr_sgn(lo_.get()) <= 0)
            mpfr_set_zero(e.lo_.get(), 1);
        else
            mpfr_sqrt(e.lo_.get(), lo_.get(), MPFR_RNDD);
        mpfr_sqrt(e.hi_.get(), hi_.get(), MPFR_RNDU);
        return e;
    }

    Enclosure cbrt() const {
        Enclosure e(prec_);
        mpfr_cbrt(e.lo_.get(), lo_.get(), MPFR_RNDD);
        mpfr_cbrt(e.hi_.get(), hi_.get(), MPFR_RNDU);
        return e;
    }

    Enclosure abs() const {
        Enclosure e(prec_);
        if (mpfr_sgn(lo_.get()) >= 0) return *this;
        if (mpfr_sgn(hi_.get()) <= 0) return -*this;
        mpfr_set_zero(e.lo_.get(), 1);
        mpfr_max(e.hi_.get(), hi_.get(), lo_.get(), MPFR_RNDU);
        mpfr_abs(e.hi_.get(), e.hi_.get(), MPFR_RNDU);
        detail::Mpfr t(prec_);
        mpfr_neg(t.get(), lo_.get(), MPFR_RNDU);
        mpfr_max(e.hi_.get(), hi_.get(), t.get(), MPFR_RNDU);
        return e;
    }

    // sqrt(x^2+y^2); monotone in |x|, |y|.
    static Enclosure hypot(const Enclosure& x, const Enclosure& y) {
        Enclosure ax = x.abs(), ay = y.abs();
        Enclosure e(std::max(x.prec_, y.prec_));
        mpfr_hypot(e.lo_.get(), ax.lo_.get(), ay.lo_.get(), MPFR_RNDD);
        mpfr_hypot(e.hi_.get(), ax.hi_.get(), ay.hi_.get(), MPFR_RNDU);
        return e;
    }

    // atan2 over a box contained in the closed upper half plane (y >= 0),
    // which avoids the branch cut; the angle is then min/maxed at box corners.
    static Enclosure atan2_upper(const Enclosure& y, const Enclosure& x) {
        if (mpfr_sgn(y.lo_.get()) < 0)
            throw DomainError("Enclosure: atan2_upper requires y >= 0");
        if (mpfr_sgn(y.lo_.get()) == 0 && mpfr_sgn(y.hi_.get()) == 0 && mpfr_sgn(x.lo_.get()) <= 0 &&
            mpfr_sgn(x.hi_.get()) >= 0)
            throw DomainError("Enclosure: atan2 of box containing origin");
        long prec = std::max(x.prec_, y.prec_);
        Enclosure e(prec);
        detail::Mpfr t(prec);
        bool first = true;
        mpfr_srcptr xs[2] = {x.lo_.get(), x.hi_.get()};
        mpfr_srcptr ys[2] = {y.lo_.get(), y.hi_.get()};
        for (auto yv : ys)
            for (auto xv : xs) {
                if (mpfr_zero_p(yv) && mpfr_zero_p(xv)) continue;
                mpfr_atan2(t.get(), yv, xv, MPFR_RNDD);
                if (first || mpfr_less_p(t.get(), e.lo_.get())) mpfr_set(e.lo_.get(), t.get(), MPFR_RNDD);
                mpfr_atan2(t.get(), yv, xv, MPFR_RNDU);
                if (first || mpfr_greater_p(t.get(), e.hi_.get())) mpfr_set(e.hi_.get(), t.get(), MPFR_RNDU);
                first = false;
            }
        return e;
    }

    // cos over the interval; widens to +-1 where an extremum may lie inside.
    Enclosure cos() const {
        Enclosure e(prec_);
        // n_lo = ceil(lo/pi), extremum at n*pi inside [lo, hi] iff n_lo*pi <= hi
        Enclosure p = pi(prec_);
        detail::Mpfr t(prec_);
        mpfr_div(t.get(), lo_.get(), p.lo_.get(), MPFR_RNDD);
        long width_periods = 3;
        if (mpfr_fits_slong_p(t.get(), MPFR_RNDD)) {
            detail::Mpfr u(prec_);
            mpfr_div(u.get(), hi_.get(), p.lo_.get(), MPFR_RNDU);
            if (mpfr_fits_slong_p(u.get(), MPFR_RNDU)) {
                long nlo = mpfr_get_si(t.get(), MPFR_RNDD);
                long nhi = mpfr_get_si(u.get(), MPFR_RNDU);
                width_periods = nhi - nlo;  // conservative count of pi-multiples inside
            }
        }
        if (width_periods >= 2) {
            mpfr_set_si(e.lo_.get(), -1, MPFR_RNDD);
            mpfr_set_si(e.hi_.get(), 1, MPFR_RNDU);
            return e;
        }
        mpfr_cos(e.lo_.get(), lo_.get(), MPFR_RNDD);
        detail::Mpfr c2(prec_);
        mpfr_cos(c2.get(), hi_.get(), MPFR_RNDD);
        mpfr_min(e.lo_.get(), e.lo_.get(), c2.get(), MPFR_RNDD);
        detail::Mpfr c3(prec_), c4(prec_);
        mpfr_cos(c3.get(), lo_.get(), MPFR_RNDU);
        mpfr_cos(c4.get(), hi_.get(), MPFR_RNDU);
        mpfr_max(e.hi_.get(), c3.get(), c4.get(), MPFR_RNDU);
        // any multiple of pi inside forces an endpoint to +-1
        detail::Mpfr n(prec_);
        mpfr_div(n.get(), lo_.get(), p.hi_.get(), MPFR_RNDD);
        mpfr_ceil(n.get(), n.get());
        detail::Mpfr npi(prec_);
        mpfr_mul(npi.get(), n.get(), p.lo_.get(), MPFR_RNDD);
        if (mpfr_lessequal_p(npi.get(), hi_.get())) {
            // extremum inside: sign depends on parity of n
            long np = mpfr_get_si(n.get(), MPFR_RNDN);
            if (np % 2 == 0)
                mpfr_set_si(e.hi_.get(), 1, MPFR_RNDU);
            else
                mpfr_set_si(e.lo_.get(), -1, MPFR_RNDD);
        }
        return e;
    }

    Enclosure sin() const {
        Enclosure half_pi = pi(prec_);
        mpfr_div_ui(half_pi.lo_.get(), half_pi.lo_.get(), 2, MPFR_RNDD);
        mpfr_div_ui(half_pi.hi_.get(), half_pi.hi_.get(), 2, MPFR_RNDU);
        return (half_pi - *this).cos();  // sin(x) = cos(pi/2 - x)
    }

    bool contains_zero() const {
        return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
    }

    bool contains_rat(const Rat& v) const {
        return mpfr_cmp_q(lo_.get(), v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), v.get_mpq_t()) >= 0;
    }

    bool intersects(const Enclosure& o) const {
        return !(mpfr_less_p(hi_.get(), o.lo_.get()) || mpfr_less_p(o.hi_.get(), lo_.get()));
    }

    // Definite sign if the interval excludes zero.
    std::optional<Sign> sgn() const {
        if (mpfr_sgn(lo_.get()) > 0) return Sign::Positive;
        if (mpfr_sgn(hi_.get()) < 0) return Sign::Negative;
        if (mpfr_zero_p(lo_.get()) && mpfr_zero_p(hi_.get())) return Sign::Zero;
        return std::nullopt;
    }

    // Provable strict comparison.
    bool provably_less(const Enclosure& o) const { return mpfr_less_p(hi_.get(), o.lo_.get()); }

    double midpoint_d() const {
        detail::Mpfr m(prec_);
        mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
        mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
        return mpfr_get_d(m.get(), MPFR_RNDN);
    }

    double radius_d() const {
        detail::Mpfr r(prec_);
        mpfr_sub(r.get(), hi_.get(), lo_.get(), MPFR_RNDU);
        mpfr_div_2ui(r.get(), r.get(), 1, MPFR_RNDU);
        double d = mpfr_get_d(r.get(), MPFR_RNDU);
        return d;
    }

    // radius <= 2^e ?
    bool radius_below_pow2(long e) const {
        detail::Mpfr r(prec_);
        mpfr_sub(r.get(), hi_.get(), lo_.get(), MPFR_RNDU);
        mpfr_div_2ui(r.get(), r.get(), 1, MPFR_RNDU);
        if (mpfr_zero_p(r.get())) return true;
        return mpfr_get_exp(r.get()) <= e;
    }

    // Largest integer <= hi and smallest integer >= lo; exact directed.
    Int floor_upper() const {
        detail::Mpfr t(prec_);
        mpfr_floor(t.get(), hi_.get());
        Int r;
        mpfr_get_z(r.get_mpz_t(), t.get(), MPFR_RNDN);
        return r;
    }
    Int ceil_lower() const {
        detail::Mpfr t(prec_);
        mpfr_ceil(t.get(), lo_.get());
        Int r;
        mpfr_get_z(r.get_mpz_t(), t.get(), MPFR_RNDN);
        return r;
    }
    Int ceil_upper() const {
        detail::Mpfr t(prec_);
        mpfr_ceil(t.get(), hi_.get());
        Int r;
        mpfr_get_z(r.get_mpz_t(), t.get(), MPFR_RNDN);
        return r;
    }
    Int floor_lower() const {
        detail::Mpfr t(prec_);
        mpfr_floor(t.get(), lo_.get());
        Int r;
        mpfr_get_z(r.get_mpz_t(), t.get(), MPFR_RNDN);
        return r;
    }

    // interval width < 2^-1 etc. handled by radius_below_pow2.
    std::string str() const {
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, 20, lo_.get(), MPFR_RNDN);
        std::string r = std::string("[~") + (s ? s : "?") + "e" + std::to_string(e) + "]";
        mpfr_free_str(s);
        return r;
    }

    mpfr_srcptr lo() const { return lo_.get(); }
    mpfr_srcptr hi() const { return hi_.get(); }

    static Enclosure interval_max(const Enclosure& x, const Enclosure& y) {
        Enclosure e(std::max(x.prec_, y.prec_));
        mpfr_max(e.lo_.get(), x.lo_.get(), y.lo_.get(), MPFR_RNDD);
        mpfr_max(e.hi_.get(), x.hi_.get(), y.hi_.get(), MPFR_RNDU);
        return e;
    }

    static Enclosure interval_min(const Enclosure& x, const Enclosure& y) {
        Enclosure e(std::max(x.prec_, y.prec_));
        mpfr_min(e.lo_.get(), x.lo_.get(), y.lo_.get(), MPFR_RNDD);
        mpfr_min(e.hi_.get(), x.hi_.get(), y.hi_.get(), MPFR_RNDU);
        return e;
    }

    // Intersection; enclosures of the same value always intersect.
    static Enclosure intersect(const Enclosure& x, const Enclosure& y) {
        Enclosure e(std::max(x.prec_, y.prec_));
        mpfr_max(e.lo_.get(), x.lo_.get(), y.lo_.get(), MPFR_RNDD);
        mpfr_min(e.hi_.get(), x.hi_.get(), y.hi_.get(), MPFR_RNDU);
        if (mpfr_less_p(e.hi_.get(), e.lo_.get()))
            throw DomainError("Enclosure: empty intersection");
        return e;
    }

  private:
    detail::Mpfr lo_, hi_;
    long prec_;
};

}  // namespace weilpoly

#endif
