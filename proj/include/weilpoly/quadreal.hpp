// Exact arithmetic in the real quadratic field Q(sqrt(q)).
//
// A value is a + b*sqrt(q) with rational a, b and a fixed positive integer
// radicand q. When q is a perfect square the sqrt(q) part is folded into the
// rational part at construction, so b == 0 and the field degenerates to Q.
// Values are canonical: equal values have equal (a, b) components.

#ifndef WEILPOLY_QUADREAL_HPP
#define WEILPOLY_QUADREAL_HPP

#include "numeric.hpp"

#include <compare>
#include <ostream>
#include <string>

namespace weilpoly {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

class QuadReal {
  public:
    QuadReal() : a_(0), b_(0), q_(1) {}
    QuadReal(Rat a) : a_(std::move(a)), b_(0), q_(1) {}
    QuadReal(Int a) : a_(Rat(std::move(a))), b_(0), q_(1) {}
    QuadReal(long a) : a_(a), b_(0), q_(1) {}
    QuadReal(int a) : a_(a), b_(0), q_(1) {}

    QuadReal(Rat a, Rat b, unsigned long q) : a_(std::move(a)), b_(std::move(b)), q_(q) {
        if (q == 0) throw DomainError("QuadReal: radicand must be positive");
        fold();
    }

    static QuadReal sqrt_q(unsigned long q) { return QuadReal(0, 1, q); }

    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    unsigned long radicand() const { return q_; }
    bool is_rational() const { return sign(b_) == 0; }

    // Exact sign of a + b*sqrt(q), decided by rational comparisons only.
    Sign sgn() const {
        int sa = sign(a_), sb = sign(b_);
        if (sb == 0) return static_cast<Sign>(sa);
        if (sa == 0) return static_cast<Sign>(sb);
        if (sa == sb) return static_cast<Sign>(sa);
        // Opposite signs: compare a^2 with b^2*q.
        Rat lhs = a_ * a_;
        Rat rhs = b_ * b_ * Rat(static_cast<unsigned long>(q_));
        int c = cmp(lhs, rhs);
        if (c == 0) return Sign::Zero;
        return static_cast<Sign>(c > 0 ? sa : sb);
    }

    bool is_zero() const { return sgn() == Sign::Zero; }

    QuadReal operator-() const {
        QuadReal r(*this);
        r.a_ = -r.a_;
        r.b_ = -r.b_;
        return r;
    }

    QuadReal& operator+=(const QuadReal& o) {
        adopt(o);
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadReal& operator-=(const QuadReal& o) {
        adopt(o);
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadReal& operator*=(const QuadReal& o) {
        adopt(o);
        Rat a = a_ * o.a_ + b_ * o.b_ * Rat(static_cast<unsigned long>(q_));
        Rat b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QuadReal& operator/=(const QuadReal& o) {
        adopt(o);
        // (a+b*s)/(c+d*s) = (a+b*s)(c-d*s)/(c^2-d^2 q)
        Rat n = o.a_ * o.a_ - o.b_ * o.b_ * Rat(static_cast<unsigned long>(q_));
        if (sign(n) == 0) throw DomainError("QuadReal: division by zero");
        Rat a = (a_ * o.a_ - b_ * o.b_ * Rat(static_cast<unsigned long>(q_))) / n;
        Rat b = (b_ * o.a_ - a_ * o.b_) / n;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }

    friend QuadReal operator+(QuadReal x, const QuadReal& y) { return x += y; }
    friend QuadReal operator-(QuadReal x, const QuadReal& y) { return x -= y; }
    friend QuadReal operator*(QuadReal x, const QuadReal& y) { return x *= y; }
    friend QuadReal operator/(QuadReal x, const QuadReal& y) { return x /= y; }

    QuadReal conj() const {
        QuadReal r(*this);
        r.b_ = -r.b_;
        return r;
    }

    friend bool operator==(const QuadReal& x, const QuadReal& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        return sign(x.b_) == 0 || x.q_ == y.q_;
    }
    friend bool operator!=(const QuadReal& x, const QuadReal& y) { return !(x == y); }
    friend bool operator<(const QuadReal& x, const QuadReal& y) {
        return (x - y).sgn() == Sign::Negative;
    }
    friend bool operator<=(const QuadReal& x, const QuadReal& y) {
        return (x - y).sgn() != Sign::Positive;
    }
    friend bool operator>(const QuadReal& x, const QuadReal& y) { return y < x; }
    friend bool operator>=(const QuadReal& x, const QuadReal& y) { return y <= x; }

    // Exact floor: the unique integer n with n <= a + b*sqrt(q) < n+1.
    Int floor() const {
        if (is_rational()) return rat_floor(a_);
        // floor(b*sqrt(q)) computed from floor of sqrt(b^2 q) with sign care,
        // then corrected by exact comparisons (at most a couple of steps).
        Rat bq = b_ * b_ * Rat(static_cast<unsigned long>(q_));
        // floor(sqrt(num/den)) = floor(sqrt(num*den))/den using integer sqrt
        Int num = bq.get_num(), den = bq.get_den();
        Int root = isqrt(num * den);  // floor(sqrt(num*den))
        Rat mag(root, den);
        mag.canonicalize();
        Rat approx;
        if (sign(b_) > 0)
            approx = a_ + mag;
        else
            approx = a_ - mag - 1;
        Int n = rat_floor(approx);
        while (!(QuadReal(Rat(n), 0, q_) <= *this)) n -= 1;
        while (QuadReal(Rat(n + 1), 0, q_) <= *this) n += 1;
        return n;
    }

    Int ceil() const { return -(-*this).floor(); }

    std::string str() const {
        if (is_rational()) return a_.get_str();
        std::string s;
        if (sign(a_) != 0) s += a_.get_str();
        if (sign(b_) > 0 && !s.empty()) s += "+";
        if (b_ == -1)
            s += "-";
        else if (b_ != 1)
            s += b_.get_str() + "*";
        s += "sqrt(" + std::to_string(q_) + ")";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadReal& x) { return os << x.str(); }

  private:
    void fold() {
        Int r;
        if (sign(b_) != 0 && is_perfect_square(Int(static_cast<unsigned long>(q_)), &r)) {
            a_ += b_ * Rat(r);
            b_ = 0;
        }
    }
    // Values with b == 0 are plain rationals and combine with any radicand.
    void adopt(const QuadReal& o) {
        if (q_ == o.q_) return;
        if (sign(b_) == 0) {
            q_ = o.q_;
            return;
        }
        if (sign(o.b_) == 0) return;
        throw DomainError("QuadReal: mixed radicands");
    }

    Rat a_, b_;
    unsigned long q_;
};

inline Sign quad_sign(const QuadReal& x) { return x.sgn(); }

inline QuadReal abs(const QuadReal& x) { return x.sgn() == Sign::Negative ? -x : x; }

}  // namespace weilpoly

#endif
