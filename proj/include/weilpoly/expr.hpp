// Radical expression trees over QuadReal constants, evaluated to rigorous
// enclosures. Arithmetic subtrees built purely from +,-,*,/ over exact
// constants keep their exact value, so signs under radicals are decided
// exactly where possible. Complex intermediate values (needed for cube roots
// of negative discriminants) are carried as rectangular enclosure pairs.

#ifndef WEILPOLY_EXPR_HPP
#define WEILPOLY_EXPR_HPP

#include "ball.hpp"

#include <memory>
#include <optional>

namespace weilpoly {

namespace detail {
struct NeedsRefine {};  // internal: precision too low to decide a branch
}  // namespace detail

class Expr {
  public:
    enum class Op { Const, Add, Sub, Mul, Div, Sqrt, Cbrt, Complex, Re, Im };

    static Expr constant(QuadReal v) {
        Expr e;
        e.n_ = std::make_shared<Node>(Node{Op::Const, std::move(v), nullptr, nullptr});
        return e;
    }
    static Expr constant(const Rat& v) { return constant(QuadReal(v)); }
    static Expr constant(long v) { return constant(QuadReal(v)); }

    friend Expr operator+(const Expr& a, const Expr& b) { return make(Op::Add, a.n_, b.n_); }
    friend Expr operator-(const Expr& a, const Expr& b) { return make(Op::Sub, a.n_, b.n_); }
    friend Expr operator*(const Expr& a, const Expr& b) { return make(Op::Mul, a.n_, b.n_); }
    friend Expr operator/(const Expr& a, const Expr& b) { return make(Op::Div, a.n_, b.n_); }

    Expr sqrt() const { return make(Op::Sqrt, n_, nullptr); }
    Expr cbrt() const { return make(Op::Cbrt, n_, nullptr); }
    // x^(3/2) for x >= 0
    Expr pow32() const { return *this * this->sqrt(); }
    static Expr complex(const Expr& re, const Expr& im) { return make(Op::Complex, re.n_, im.n_); }
    Expr real_part() const { return make(Op::Re, n_, nullptr); }
    Expr imag_part() const { return make(Op::Im, n_, nullptr); }

    std::optional<QuadReal> exact_value() const { return exact_of(n_.get()); }

    struct CValue {
        Enclosure re, im;
        bool real = true;  // im is exactly zero
    };

    CValue eval(long prec) const { return eval_node(n_.get(), prec); }

  private:
    struct Node {
        Op op;
        QuadReal value;  // Const only
        std::shared_ptr<const Node> lhs, rhs;
    };

    Expr() = default;

    static Expr make(Op op, std::shared_ptr<const Node> a, std::shared_ptr<const Node> b) {
        Expr e;
        e.n_ = std::make_shared<Node>(Node{op, QuadReal(), std::move(a), std::move(b)});
        return e;
    }

    static std::optional<QuadReal> exact_of(const Node* n) {
        switch (n->op) {
            case Op::Const:
                return n->value;
            case Op::Add:
            case Op::Sub:
            case Op::Mul:
            case Op::Div: {
                auto l = exact_of(n->lhs.get());
                if (!l) return std::nullopt;
                auto r = exact_of(n->rhs.get());
                if (!r) return std::nullopt;
                switch (n->op) {
                    case Op::Add: return *l + *r;
                    case Op::Sub: return *l - *r;
                    case Op::Mul: return *l * *r;
                    default:
                        if (r->is_zero()) throw DomainError("Expr: division by exact zero");
                        return *l / *r;
                }
            }
            case Op::Sqrt:
            case Op::Cbrt: {
                auto v = exact_of(n->lhs.get());
                if (v && v->is_zero()) return QuadReal(0);
                return std::nullopt;
            }
            case Op::Re: {
                return exact_of(n->lhs.get());
            }
            default:
                return std::nullopt;
        }
    }

    static CValue eval_node(const Node* n, long prec) {
        switch (n->op) {
            case Op::Const:
                return {Enclosure::from_quad(n->value, prec), Enclosure(prec), true};
            case Op::Add: {
                auto a = eval_node(n->lhs.get(), prec), b = eval_node(n->rhs.get(), prec);
                return {a.re + b.re, a.im + b.im, a.real && b.real};
            }
            case Op::Sub: {
                auto a = eval_node(n->lhs.get(), prec), b = eval_node(n->rhs.get(), prec);
                return {a.re - b.re, a.im - b.im, a.real && b.real};
            }
            case Op::Mul: {
                auto a = eval_node(n->lhs.get(), prec), b = eval_node(n->rhs.get(), prec);
                if (a.real && b.real) return {a.re * b.re, Enclosure(prec), true};
                return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, false};
            }
            case Op::Div: {
                auto a = eval_node(n->lhs.get(), prec), b = eval_node(n->rhs.get(), prec);
                if (a.real && b.real) {
                    if (b.re.contains_zero()) {
                        auto ex = exact_of(n->rhs.get());
                        if (ex && ex->is_zero()) throw DomainError("Expr: division by zero");
                        throw detail::NeedsRefine{};
                    }
                    return {a.re / b.re, Enclosure(prec), true};
                }
                Enclosure den = b.re * b.re + b.im * b.im;
                if (den.contains_zero()) throw detail::NeedsRefine{};
                return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den,
                        false};
            }
            case Op::Sqrt: {
                auto a = eval_node(n->lhs.get(), prec);
                if (a.real) {
                    auto s = a.re.sgn();
                    if (!s) {
                        auto ex = exact_of(n->lhs.get());
                        if (!ex) throw detail::NeedsRefine{};
                        Sign es = ex->sgn();
                        if (es == Sign::Negative) throw DomainError("Expr: sqrt of negative value");
                        if (es == Sign::Zero) return {Enclosure(prec), Enclosure(prec), true};
                        return {a.re.sqrt(), Enclosure(prec), true};
                    }
                    if (*s == Sign::Negative) throw DomainError("Expr: sqrt of negative value");
                    return {a.re.sqrt(), Enclosure(prec), true};
                }
                Enclosure r = Enclosure::hypot(a.re, a.im);
                auto si = a.im.sgn();
                if (!si) throw detail::NeedsRefine{};
                Enclosure two = Enclosure::exact_int(2, prec);
                Enclosure wre = ((r + a.re) / two).sqrt();
                Enclosure wim = ((r - a.re) / two).sqrt();
                if (*si == Sign::Negative) wim = -wim;
                return {wre, wim, false};
            }
            case Op::Cbrt: {
                auto a = eval_node(n->lhs.get(), prec);
                if (a.real) return {a.re.cbrt(), Enclosure(prec), true};
                bool conj = false;
                Enclosure im = a.im;
                auto si = im.sgn();
                if (!si) throw detail::NeedsRefine{};
                if (*si == Sign::Negative) {
                    conj = true;
                    im = -im;
                }
                Enclosure r = Enclosure::hypot(a.re, im);
                if (r.contains_zero()) throw detail::NeedsRefine{};
                Enclosure t = Enclosure::atan2_upper(im, a.re);
                Enclosure rho = r.cbrt();
                Enclosure t3 = t / Enclosure::exact_int(3, prec);
                Enclosure wre = rho * t3.cos();
                Enclosure wim = rho * t3.sin();
                if (conj) wim = -wim;
                return {wre, wim, false};
            }
            case Op::Complex: {
                auto a = eval_node(n->lhs.get(), prec), b = eval_node(n->rhs.get(), prec);
                bool pure_real = b.real && b.re.sgn() == Sign::Zero;
                return {a.re, b.re, pure_real};
            }
            case Op::Re: {
                auto a = eval_node(n->lhs.get(), prec);
                return {a.re, Enclosure(prec), true};
            }
            case Op::Im: {
                auto a = eval_node(n->lhs.get(), prec);
                return {a.im, Enclosure(prec), true};
            }
        }
        throw Error("Expr: unreachable");
    }

    std::shared_ptr<const Node> n_;
};

// Evaluate to an enclosure of the exact real value, doubling the working
// precision from cfg.start until the radius is at most 2^radius_exp.
// Successive results are intersected, so the radius is monotone in precision.
inline Enclosure enclose(const Expr& e, long radius_exp, const PrecisionConfig& cfg = {}) {
    std::optional<Enclosure> acc;
    long p = cfg.start;
    while (true) {
        try {
            auto v = e.eval(p);
            Enclosure cur = v.re;
            acc = acc ? Enclosure::intersect(*acc, cur) : cur;
            if (acc->radius_below_pow2(radius_exp)) return *acc;
        } catch (const detail::NeedsRefine&) {
            // retry at doubled precision
        }
        if (p >= cfg.cap) break;
        p = std::min(p * 2, cfg.cap);
    }
    throw PrecisionExhausted("enclose: radius target not reached at precision cap");
}

// Single evaluation at a fixed precision (no target radius).
inline Enclosure enclose_at(const Expr& e, long prec) { return e.eval(prec).re; }

}  // namespace weilpoly

#endif
