#pragma once

#include <array>
#include <string>
#include <vector>

#include "gawb/p1.hpp"
#include "gawb/poly.hpp"

namespace gawb {

/// F_k with basis {C, F}: C^2 = -k, C.F = 1, F^2 = 0, or the scroll
/// F(m,n), m >= n >= 1, with basis {C_u, L}: C_u^2 = m - n, C_u.L = 1, L^2 = 0.
struct RuledSurface {
    enum class Kind { hirzebruch, scroll };
    Kind kind = Kind::hirzebruch;
    int k = 0;
    int m = 0, n = 0;

    static RuledSurface hirzebruch(int k);
    static RuledSurface scroll(int m, int n);
    /// "F2" or "F(3,1)".
    std::string name() const;
    std::array<std::string, 2> basis_names() const;
    int form(int i, int j) const;
    friend bool operator==(const RuledSurface&, const RuledSurface&) = default;
};

struct DivisorClass {
    RuledSurface surface;
    std::array<long long, 2> c{0, 0};

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(long long s) const;
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    std::string str() const;
};

/// Throws DomainError for classes on different surfaces.
long long intersect(const DivisorClass& a, const DivisorClass& b);

DivisorClass basis_class(const RuledSurface& s, int index);
/// C_v = C_u + (n - m) L on a scroll.
DivisorClass section_v_class(const RuledSurface& s);
/// Delta = m L + C_v on a scroll.
DivisorClass delta_class(const RuledSurface& s);

struct SdmBoundary {
    RuledSurface surface;  // F_{2m-d}
    DivisorClass cls;      // C + m F
    long long self_intersection = 0;
};
/// Requires m >= n >= 1.
SdmBoundary sdm_boundary_class(int m, int n);

enum class Verdict { IsomorphicByTheorem, Inconclusive };
std::string to_string(Verdict v);

struct XmnClassification {
    Verdict verdict = Verdict::Inconclusive;
    int d1 = 0, d2 = 0;
    std::string citation;
};
/// Throws DomainError unless all arguments are positive.
XmnClassification classify_xmn(int m, int n, int p, int q);

struct XfgClassification {
    int m = 0, n = 0;
    Rational resultant;
    std::string conclusion;  // "X_{f,g} = X_{m,n}"
    long long delta_self_intersection = 0;
    std::string scroll;
    std::string citation;
};
/// Throws DomainError for non-homogeneous input or a common zero.
XfgClassification classify_xfg(const Poly& f, const Poly& g);

struct SelfTestReport {
    std::vector<NamedCheck> checks;
    bool ok = false;
};
/// Scroll relations, boundary self-intersections and agreement with the
/// splitting index of [[u^(m+n), u^m],[0,1]], for 1 <= n <= m <= max_m.
SelfTestReport intersection_self_test(int max_m = 6);

}  // namespace gawb
