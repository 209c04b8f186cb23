#include "grlab/formulas.hpp"

#include "grlab/colored_graph.hpp"

namespace grlab {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Error("formula value overflows 64 bits");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw Error("formula value overflows 64 bits");
    return out;
}

// a*5^((k-2)/2)+1 for even k, b*5^((k-1)/2)+1 for odd k
std::int64_t five_tower(int k, std::int64_t even_coeff, std::int64_t odd_coeff) {
    if (k % 2 == 0) return checked_add(checked_mul(even_coeff, pow5((k - 2) / 2)), 1);
    return checked_add(checked_mul(odd_coeff, pow5((k - 1) / 2)), 1);
}

GrValue f2n_value(int n, int k) {
    std::string fam = "f2n:" + std::to_string(n);
    if (k == 1)
        return GrValue::exact_value(n + 2, k, fam, "single color: pattern order forces it");
    std::int64_t r2 = r2_value(CatalogId::f2n(n));
    if (k == 2) return GrValue::exact_value(r2, k, fam, "two colorings are always Gallai");
    if (n <= 4) return GrValue::exact_value(checked_add(r2, k - 2), k, fam);
    if (n == 5) return GrValue::exact_value(k + 9, k, fam);
    std::int64_t lo = (n % 2 == 0) ? 5 * std::int64_t{n} / 2 + k - 6
                                   : (5 * std::int64_t{n} - 1) / 2 + k - 4;
    std::int64_t hi = checked_add(checked_mul(k, n - 1), 2);
    return GrValue::range(lo, hi, k, fam, "exact value open for n >= 6");
}

}  // namespace

std::int64_t pow5(int e) {
    if (e < 0) throw Error("negative exponent");
    std::int64_t v = 1;
    for (int i = 0; i < e; ++i) v = checked_mul(v, 5);
    return v;
}

GrValue gr_value(const CatalogId& family, int k) {
    if (k < 1) throw Error("gr_value needs k >= 1");
    if (family.kind == CatalogId::Kind::F2n) return f2n_value(family.m, k);
    if (family.kind == CatalogId::Kind::Complete && family.m == 3)
        return GrValue::exact_value(five_tower(k, 5, 2), k, "k3");
    if (family.kind == CatalogId::Kind::Named) {
        const std::string& f = family.label;
        if (f == "f9" || f == "f10")
            return GrValue::exact_value(five_tower(k, 8, 4), k, f);
        if (f == "f12" || f == "f13")
            return GrValue::exact_value(five_tower(k, 9, 4), k, f);
        if (f == "f11" || f == "banner") return GrValue::exact_value(k + 4, k, "f11");
        if (f == "k3") return GrValue::exact_value(five_tower(k, 5, 2), k, "k3");
    }
    throw Error("no closed form for family '" + family.to_string() + "'");
}

std::int64_t r2_value(const CatalogId& family) {
    if (family.kind == CatalogId::Kind::F2n || family.kind == CatalogId::Kind::Star) {
        int n = family.m;
        if (family.kind == CatalogId::Kind::F2n && n < 3) throw Error("f2n needs n >= 3");
        if (family.kind == CatalogId::Kind::Star && n < 3)
            throw Error("star value known for n >= 3 only");
        return (n % 2 == 0) ? 2 * std::int64_t{n} - 1 : 2 * std::int64_t{n};
    }
    if (family.kind == CatalogId::Kind::Named) {
        const std::string& f = family.label;
        if (f == "f9" || f == "f10") return 9;
        if (f == "f12" || f == "f13") return 10;
        if (f == "f11" || f == "banner") return 6;
    }
    throw Error("no cited two-color value for family '" + family.to_string() + "'");
}

}  // namespace grlab
