#include "gawb/intersection.hpp"

#include "gawb/binary_forms.hpp"
#include "gawb/error.hpp"
#include "gawb/parse.hpp"

namespace gawb {

RuledSurface RuledSurface::hirzebruch(int k) {
    if (k < 0) throw DomainError("Hirzebruch index must be nonnegative");
    RuledSurface s;
    s.kind = Kind::hirzebruch;
    s.k = k;
    return s;
}

RuledSurface RuledSurface::scroll(int m, int n) {
    if (n < 1 || m < n) throw DomainError("scroll F(m,n) needs m >= n >= 1");
    RuledSurface s;
    s.kind = Kind::scroll;
    s.m = m;
    s.n = n;
    return s;
}

std::string RuledSurface::name() const {
    if (kind == Kind::hirzebruch) return "F" + std::to_string(k);
    return "F(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::array<std::string, 2> RuledSurface::basis_names() const {
    if (kind == Kind::hirzebruch) return {"C", "F"};
    return {"C_u", "L"};
}

int RuledSurface::form(int i, int j) const {
    if (i != j) return 1;
    if (i == 1) return 0;
    return kind == Kind::hirzebruch ? -k : m - n;
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    if (!(surface == o.surface)) throw DomainError("classes on different surfaces");
    return {surface, {c[0] + o.c[0], c[1] + o.c[1]}};
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + o * -1; }

DivisorClass DivisorClass::operator*(long long s) const { return {surface, {c[0] * s, c[1] * s}}; }

std::string DivisorClass::str() const {
    auto names = surface.basis_names();
    std::string out;
    for (int i = 0; i < 2; ++i) {
        long long v = c[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        if (!out.empty()) out += v < 0 ? " - " : " + ";
        else if (v < 0) out += "-";
        long long a = v < 0 ? -v : v;
        if (a != 1) out += std::to_string(a) + "*";
        out += names[static_cast<std::size_t>(i)];
    }
    return out.empty() ? "0" : out;
}

long long intersect(const DivisorClass& a, const DivisorClass& b) {
    if (!(a.surface == b.surface)) throw DomainError("classes on different surfaces");
    long long s = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)] * a.surface.form(i, j);
    return s;
}

DivisorClass basis_class(const RuledSurface& s, int index) {
    DivisorClass d{s, {0, 0}};
    d.c[static_cast<std::size_t>(index)] = 1;
    return d;
}

DivisorClass section_v_class(const RuledSurface& s) {
    if (s.kind != RuledSurface::Kind::scroll) throw DomainError("C_v is defined on a scroll");
    return basis_class(s, 0) + basis_class(s, 1) * (s.n - s.m);
}

DivisorClass delta_class(const RuledSurface& s) { return basis_class(s, 1) * s.m + section_v_class(s); }

SdmBoundary sdm_boundary_class(int m, int n) {
    if (n < 1 || m < n) throw DomainError("need m >= n >= 1");
    const int d = m + n;
    SdmBoundary b;
    b.surface = RuledSurface::hirzebruch(2 * m - d);
    b.cls = basis_class(b.surface, 0) + basis_class(b.surface, 1) * m;
    b.self_intersection = intersect(b.cls, b.cls);
    return b;
}

std::string to_string(Verdict v) { return v == Verdict::IsomorphicByTheorem ? "IsomorphicByTheorem" : "Inconclusive"; }

XmnClassification classify_xmn(int m, int n, int p, int q) {
    if (m < 1 || n < 1 || p < 1 || q < 1) throw DomainError("all of m, n, p, q must be positive");
    XmnClassification c;
    c.d1 = m + n;
    c.d2 = p + q;
    if (c.d1 == c.d2) {
        c.verdict = Verdict::IsomorphicByTheorem;
        c.citation = "theorem: X_{m,n} = X_{p,q} when m+n = p+q";
    } else {
        c.verdict = Verdict::Inconclusive;
        c.citation = "none: m+n != p+q and no converse is known";
    }
    return c;
}

XfgClassification classify_xfg(const Poly& f, const Poly& g) {
    const VarId x = var("x"), y = var("y");
    auto df = homogeneous_degree(f, {x, y});
    auto dg = homogeneous_degree(g, {x, y});
    if (!df || *df < 1) throw DomainError("f = " + to_string(f) + " is not a binary form of positive degree");
    if (!dg || *dg < 1) throw DomainError("g = " + to_string(g) + " is not a binary form of positive degree");
    XfgClassification c;
    c.m = *df;
    c.n = *dg;
    c.resultant = binary_resultant(f, g, x, y);
    if (c.resultant.is_zero())
        throw DomainError("f and g have a common zero on P^1 (resultant 0): V(f,g) is not supported at the origin");
    c.conclusion = "X_{f,g} = X_{" + std::to_string(c.m) + "," + std::to_string(c.n) + "}";
    auto s = RuledSurface::scroll(std::max(c.m, c.n), std::min(c.m, c.n));
    auto delta = delta_class(s);
    c.scroll = s.name();
    c.delta_self_intersection = intersect(delta, delta);
    c.citation = "proposition: X_{f,g} = X_{m,n} for coprime binary forms of degrees m, n";
    return c;
}

SelfTestReport intersection_self_test(int max_m) {
    SelfTestReport r;
    r.ok = true;
    auto add = [&](std::string name, long long got, long long want) {
        bool pass = got == want;
        r.checks.push_back({std::move(name), pass, pass ? "" : "got " + std::to_string(got) + ", want " + std::to_string(want)});
        r.ok = r.ok && pass;
    };
    for (int m = 1; m <= max_m; ++m)
        for (int n = 1; n <= m; ++n) {
            std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
            auto s = RuledSurface::scroll(m, n);
            auto Cu = basis_class(s, 0), L = basis_class(s, 1), Cv = section_v_class(s);
            add("C_v.C_u = 0 " + tag, intersect(Cv, Cu), 0);
            auto diff = (L * m + Cv) - (L * n + Cu);
            add("mL + C_v ~ nL + C_u " + tag, std::abs(diff.c[0]) + std::abs(diff.c[1]), 0);
            auto D = delta_class(s);
            add("Delta^2 = m+n " + tag, intersect(D, D), m + n);
            add("(C+mF)^2 = m+n " + tag, sdm_boundary_class(m, n).self_intersection, m + n);
            auto split = birkhoff_split(extension_matrix(m + n, m));
            add("splitting index = 2m-d " + tag, split.type.hirzebruch(), 2 * m - (m + n));
        }
    return r;
}

}  // namespace gawb
