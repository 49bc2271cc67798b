// Dense univariate polynomials, lowest-degree coefficient first.
//
// The coefficient type is Int, Rat or QuadReal. Division, gcd and Yun's
// squarefree decomposition assume a field (Rat or QuadReal).

#ifndef WEILPOLY_POLY_HPP
#define WEILPOLY_POLY_HPP

#include "quadreal.hpp"

#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

namespace weilpoly {

namespace coeff {
inline bool is_zero(const Int& x) { return sign(x) == 0; }
inline bool is_zero(const Rat& x) { return sign(x) == 0; }
inline bool is_zero(const QuadReal& x) { return x.is_zero(); }
}  // namespace coeff

template <class T>
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<T> lowest_first) : c_(lowest_first) { trim(); }
    explicit Poly(std::vector<T> lowest_first) : c_(std::move(lowest_first)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
    // x^k with coefficient c
    static Poly monomial(T c, std::size_t k) {
        std::vector<T> v(k + 1, T(0));
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    const T& operator[](std::size_t i) const { return c_[i]; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& lead() const { return c_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<T> r = a.c_;
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const T& s) {
        std::vector<T> r = a.c_;
        for (auto& x : r) x = x * s;
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1, T(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(r));
    }

    template <class V>
    V eval(const V& x) const {
        V r = V(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + V(c_[i]);
        return r;
    }

    // p(x + s) by repeated synthetic division (Taylor shift).
    Poly shift(const T& s) const {
        std::vector<T> r = c_;
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = r.size() - 1; j > i; --j) r[j - 1] += r[j] * s;
        return Poly(std::move(r));
    }

    // p(-x)
    Poly reflect() const {
        std::vector<T> r = c_;
        for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return Poly(std::move(r));
    }

    // multiplicity of the root x = 0
    std::size_t trailing_zeros() const {
        std::size_t k = 0;
        while (k < c_.size() && coeff::is_zero(c_[k])) ++k;
        return c_.empty() ? 0 : k;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        if (p.is_zero()) return os << "0";
        for (std::size_t i = p.c_.size(); i-- > 0;) {
            os << p.c_[i];
            if (i > 0) os << "*x^" << i << " + ";
        }
        return os;
    }

  private:
    void trim() {
        while (!c_.empty() && coeff::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

// Field division with remainder: a = q*b + r, deg r < deg b.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw DomainError("Poly: division by zero polynomial");
    std::vector<T> rem(a.coeffs());
    long db = b.degree();
    long da = a.degree();
    if (da < db) return {Poly<T>(), a};
    std::vector<T> quot(static_cast<std::size_t>(da - db + 1), T(0));
    for (long k = da; k >= db; --k) {
        std::size_t ku = static_cast<std::size_t>(k);
        if (coeff::is_zero(rem[ku])) continue;
        T f = rem[ku] / b.lead();
        quot[static_cast<std::size_t>(k - db)] = f;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
        rem[ku] = T(0);
    }
    return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

// Monic gcd over a field.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // normalize monic
    T inv = T(1) / a.lead();
    return a * inv;
}

// Yun's squarefree decomposition: p = lc * prod f_i^{m_i} with the f_i monic,
// squarefree, pairwise coprime. Returns (f_i, m_i) with m_i increasing.
template <class T>
std::vector<std::pair<Poly<T>, std::size_t>> squarefree_decompose(const Poly<T>& p) {
    if (p.is_zero()) throw DomainError("squarefree_decompose: zero polynomial");
    std::vector<std::pair<Poly<T>, std::size_t>> out;
    if (p.degree() == 0) return out;
    T lc_inv = T(1) / p.lead();
    Poly<T> f = p * lc_inv;
    Poly<T> fp = f.derivative();
    Poly<T> a = gcd(f, fp);
    Poly<T> b = divmod(f, a).first;
    Poly<T> c = divmod(fp, a).first;
    Poly<T> d = c - b.derivative();
    std::size_t i = 1;
    while (b.degree() > 0) {
        Poly<T> g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// ---- conversions ----

inline Poly<Rat> to_rat(const Poly<Int>& p) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return Poly<Rat>(std::move(c));
}

inline Poly<QuadReal> to_quad(const Poly<Int>& p, unsigned long q) {
    std::vector<QuadReal> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(Rat(x), Rat(0), q);
    return Poly<QuadReal>(std::move(c));
}

inline Poly<QuadReal> to_quad(const Poly<Rat>& p, unsigned long q) {
    std::vector<QuadReal> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x, Rat(0), q);
    return Poly<QuadReal>(std::move(c));
}

// Exact division over Z; nullopt when not divisible.
inline std::optional<Poly<Int>> divide_exact(const Poly<Int>& a, const Poly<Int>& b) {
    auto [q, r] = divmod(to_rat(a), to_rat(b));
    if (!r.is_zero()) return std::nullopt;
    std::vector<Int> c;
    c.reserve(q.coeffs().size());
    for (const auto& x : q.coeffs()) {
        if (x.get_den() != 1) return std::nullopt;
        c.push_back(x.get_num());
    }
    return Poly<Int>(std::move(c));
}

}  // namespace weilpoly

#endif
