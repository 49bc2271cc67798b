// Machine-readable output records: JSONL (primary, streaming) and CSV.
// Emission is hand-rolled so byte-identical output is easy to guarantee;
// parsing (used by the round-trip tests) goes through nlohmann/json.

#ifndef WEILPOLY_RECORDS_HPP
#define WEILPOLY_RECORDS_HPP

#include "enumerate.hpp"

#include <sstream>
#include <string>

namespace weilpoly {

struct OutputRecord {
    unsigned long q = 2;
    unsigned g = 1;
    std::vector<Int> a;
    std::vector<Int> coeffs;  // full 2g+1 coefficients, descending
    bool real_root = false;
    RealRootClass cls;
};

inline OutputRecord make_record(const EnumRecord& r) {
    OutputRecord rec;
    rec.q = r.c.q;
    rec.g = r.c.g;
    rec.a = r.c.a;
    Poly<Int> h = expand(r.c);
    for (std::size_t i = h.coeffs().size(); i-- > 0;) rec.coeffs.push_back(h.coeffs()[i]);
    rec.real_root = r.real_root;
    rec.cls = r.cls;
    return rec;
}

inline std::string class_kind_string(const RealRootClass& cls) {
    switch (cls.kind) {
        case RealRootClass::Kind::None: return "none";
        case RealRootClass::Kind::SqrtFactors: return "sqrt-factors";
        case RealRootClass::Kind::XSqMinusQ: return "x2-q-factor";
    }
    return "none";
}

namespace detail_rec {
inline void append_int_list(std::string& s, const std::vector<Int>& v) {
    s += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += v[i].get_str();
    }
    s += ']';
}
}  // namespace detail_rec

inline std::string to_jsonl(const OutputRecord& r) {
    std::string s = "{\"q\":" + std::to_string(r.q) + ",\"g\":" + std::to_string(r.g) + ",\"a\":";
    detail_rec::append_int_list(s, r.a);
    s += ",\"coeffs\":";
    detail_rec::append_int_list(s, r.coeffs);
    s += ",\"real_root\":";
    s += r.real_root ? "true" : "false";
    s += ",\"class\":{\"kind\":\"" + class_kind_string(r.cls) + "\"";
    if (r.cls.kind == RealRootClass::Kind::SqrtFactors)
        s += ",\"k\":" + std::to_string(r.cls.k) + ",\"l\":" + std::to_string(r.cls.l);
    if (r.cls.kind != RealRootClass::Kind::None) {
        s += ",\"cofactor\":";
        detail_rec::append_int_list(s, r.cls.cofactor ? r.cls.cofactor->a : std::vector<Int>{});
    }
    s += "}}";
    return s;
}

// class rendered without commas so the CSV stays simple
inline std::string class_compact_string(const RealRootClass& cls) {
    std::string s = class_kind_string(cls);
    if (cls.kind == RealRootClass::Kind::None) return s;
    s += '[';
    if (cls.kind == RealRootClass::Kind::SqrtFactors)
        s += "k=" + std::to_string(cls.k) + " l=" + std::to_string(cls.l) + " ";
    s += "cofactor=";
    if (cls.cofactor)
        for (std::size_t i = 0; i < cls.cofactor->a.size(); ++i) {
            if (i) s += ' ';
            s += cls.cofactor->a[i].get_str();
        }
    s += ']';
    return s;
}

inline std::string csv_header() { return "q,g,a1,a2,a3,a4,a5,real_root,class"; }

inline std::string to_csv_row(const OutputRecord& r) {
    std::string s = std::to_string(r.q) + "," + std::to_string(r.g);
    for (unsigned i = 0; i < 5; ++i) {
        s += ',';
        if (i < r.a.size()) s += r.a[i].get_str();
    }
    s += ',';
    s += r.real_root ? "true" : "false";
    s += ',';
    s += class_compact_string(r.cls);
    return s;
}

}  // namespace weilpoly

#endif
