#include <doctest.h>

#include "weilpoly/enumerate.hpp"

using namespace weilpoly;

namespace {
std::vector<Int> avec(std::initializer_list<long> a) {
    std::vector<Int> v;
    for (long x : a) v.emplace_back(x);
    return v;
}
bool contains(const std::vector<EnumRecord>& rs, const std::vector<Int>& a) {
    for (auto& r : rs)
        if (r.c.a == a) return true;
    return false;
}
const EnumRecord& find(const std::vector<EnumRecord>& rs, const std::vector<Int>& a) {
    for (auto& r : rs)
        if (r.c.a == a) return r;
    throw std::runtime_error("not found");
}
}  // namespace

TEST_CASE("genus 1 counts and real-root flags") {
    CHECK(enumerate_weil(2, 1, {}).size() == 5);   // floor(2 sqrt 2) = 2
    CHECK(enumerate_weil(3, 1, {}).size() == 7);   // floor(2 sqrt 3) = 3
    auto w4 = enumerate_weil(4, 1, {});
    CHECK(w4.size() == 9);
    int rr = 0;
    for (auto& r : w4) {
        if (r.real_root) {
            ++rr;
            CHECK(r.c.a[0] * r.c.a[0] == 16);  // exactly a = +-4 = +-2 sqrt q
        }
    }
    CHECK(rr == 2);
}

TEST_CASE("genus 2 stream") {
    auto w2 = enumerate_weil(2, 2, {});
    CHECK(w2.size() == 35);
    // only x^4 - 2q x^2 + q^2 carries a real root when q is not a square
    int rr = 0;
    for (auto& r : w2) rr += r.real_root;
    CHECK(rr == 1);
    CHECK(find(w2, avec({0, -4})).real_root);
    CHECK(find(w2, avec({0, -4})).cls.kind == RealRootClass::Kind::XSqMinusQ);
    // the classic non-characteristic instance appears at q = 4
    auto w42 = enumerate_weil(4, 2, {});
    CHECK(contains(w42, avec({-4, 10})));
    CHECK(!find(w42, avec({-4, 10})).real_root);
}

TEST_CASE("genus 3 stream") {
    auto w = enumerate_weil(2, 3, {});
    CHECK(contains(w, avec({0, 0, 0})));
    const EnumRecord& r = find(w, avec({0, -2, 0}));
    CHECK(r.real_root);
    CHECK(r.cls.kind == RealRootClass::Kind::XSqMinusQ);
    REQUIRE(r.cls.cofactor.has_value());
    CHECK(r.cls.cofactor->a == avec({0}));
    auto w9 = enumerate_weil(9, 3, {});
    const EnumRecord& s = find(w9, avec({-18, 135, -540}));  // (x-3)^6
    CHECK(s.real_root);
    CHECK(s.cls.kind == RealRootClass::Kind::SqrtFactors);
    CHECK(s.cls.k == 0);
    CHECK(s.cls.l == 3);
}

TEST_CASE("genus 4 stream") {
    auto w = enumerate_weil(2, 4, {});
    const EnumRecord& r = find(w, avec({0, -4, 0, 8}));  // (x^2-2)^2 (x^4+4)
    CHECK(r.real_root);
    CHECK(r.cls.kind == RealRootClass::Kind::XSqMinusQ);
    CHECK(contains(w, avec({0, 0, 0, 0})));  // x^8 + 16, all roots nonreal
    CHECK(!find(w, avec({0, 0, 0, 0})).real_root);
}

TEST_CASE("genus 5 stream") {
    EnumConfig cfg;
    cfg.jobs = 2;
    auto w = enumerate_weil(2, 5, cfg);
    const EnumRecord& r = find(w, avec({0, -4, 0, 4, 0}));
    CHECK(r.real_root);
    CHECK(r.cls.kind == RealRootClass::Kind::XSqMinusQ);
    // expansion check: x^10 - 4x^8 + 4x^6 + 8x^4 - 32x^2 + 32
    Poly<Int> h = expand(r.c);
    std::vector<long> want{32, 0, -32, 0, 8, 0, 4, 0, -4, 0, 1};
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(h.coeff(i) == Int(want[i]));
    CHECK(contains(w, avec({0, 0, 0, 0, 0})));  // x^10 + 32
    CHECK(!find(w, avec({0, 0, 0, 0, 0})).real_root);
}

TEST_CASE("genus 5 at square q contains (x - sqrt q)^2 cofactor candidates") {
    // (x-2)^2 (x^8 + 256) at q = 4: build the candidate from the cofactor
    Poly<Int> sq{Int(4), Int(-4), Int(1)};
    std::vector<Int> c8(9, Int(0));
    c8[0] = 256;
    c8[8] = 1;
    Poly<Int> prod = sq * Poly<Int>(std::move(c8));
    auto cnd = candidate_from_poly(prod, 4);
    REQUIRE(cnd.has_value());
    CHECK(cnd->a == avec({-4, 4, 0, 0, 0}));
    // emitted by the enumerator: walk just the a1 = -4 slice
    std::vector<EnumRecord> w;
    EnumConfig cfg;
    enumerate_range(4ul, 5u, Int(-4), Int(-4), cfg,
                    [&](EnumRecord&& r) { w.push_back(std::move(r)); });
    REQUIRE(contains(w, cnd->a));
    const EnumRecord& r = find(w, cnd->a);
    CHECK(r.real_root);
    CHECK(r.cls.kind == RealRootClass::Kind::SqrtFactors);
    CHECK(r.cls.k == 0);
    CHECK(r.cls.l == 1);
    REQUIRE(r.cls.cofactor.has_value());
    CHECK(r.cls.cofactor->a == avec({0, 0, 0, 0}));
}

TEST_CASE("theorem and safe modes produce identical streams") {
    for (unsigned long q : {2ul, 3ul, 4ul}) {
        for (unsigned g = 1; g <= 3; ++g) {
            EnumConfig t, s;
            s.mode = EnumConfig::Mode::Safe;
            auto wt = enumerate_weil(q, g, t);
            auto ws = enumerate_weil(q, g, s);
            REQUIRE(wt.size() == ws.size());
            for (std::size_t i = 0; i < wt.size(); ++i) {
                CHECK(wt[i].c == ws[i].c);
                CHECK(wt[i].real_root == ws[i].real_root);
            }
        }
    }
}

TEST_CASE("filters and job counts leave content and order intact") {
    EnumConfig all, rr, nr, j2;
    rr.filter = EnumConfig::Filter::RealRootsOnly;
    nr.filter = EnumConfig::Filter::NoRealRoots;
    j2.jobs = 2;
    auto wa = enumerate_weil(4, 2, all);
    auto wr = enumerate_weil(4, 2, rr);
    auto wn = enumerate_weil(4, 2, nr);
    auto wj = enumerate_weil(4, 2, j2);
    CHECK(wr.size() + wn.size() == wa.size());
    CHECK(wr.size() == 17);  // the real-root subset of W_4(2)
    REQUIRE(wj.size() == wa.size());
    for (std::size_t i = 0; i < wa.size(); ++i) CHECK(wj[i].c == wa[i].c);
    for (auto& r : wr) CHECK(r.real_root);
    for (auto& r : wn) CHECK(!r.real_root);
    // lexicographic order
    for (std::size_t i = 0; i + 1 < wa.size(); ++i) CHECK(wa[i].c < wa[i + 1].c);
}

TEST_CASE("integer_range extracts sound windows from radical bounds") {
    // [-2 sqrt 2, 2 sqrt 2]: certain endpoints at 128 bits
    Expr lo = Expr::constant(0) - Expr::constant(8).sqrt();
    Expr hi = Expr::constant(8).sqrt();
    IntRange r = integer_range(lo, hi);
    CHECK(r.lo == -2);
    CHECK(r.hi == 2);
    CHECK(!r.lo_boundary());
    CHECK(!r.hi_boundary());
    // ceil(4 sqrt 2 - 18) = -12 because 32 < 36
    Expr lo2 = Expr::constant(32).sqrt() - Expr::constant(18);
    IntRange r2 = integer_range(lo2, Expr::constant(0));
    CHECK(r2.lo == -12);
    // an upper endpoint that is exactly an integer stays flagged:
    // sqrt(2)*sqrt(2) = 2 but its enclosure always straddles 2
    Expr hi3 = Expr::constant(2).sqrt() * Expr::constant(2).sqrt();
    IntRange r3 = integer_range(Expr::constant(0), hi3);
    CHECK(r3.hi >= 2);        // sound over-approximation keeps 2
    CHECK(r3.hi_boundary());  // but cannot certify it from enclosures alone
}

TEST_CASE("parallel chunking with more jobs than width") {
    EnumConfig cfg;
    cfg.jobs = 64;
    auto w = enumerate_weil(2, 1, cfg);
    CHECK(w.size() == 5);
}
