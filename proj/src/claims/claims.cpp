#include "gawb/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "gawb/cech.hpp"
#include "gawb/error.hpp"
#include "gawb/intersection.hpp"
#include "gawb/lnd.hpp"
#include "gawb/p1.hpp"
#include "gawb/parse.hpp"
#include "gawb/quotient.hpp"

namespace gawb {

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::discrepancy: return "discrepancy-documented";
    }
    return "fail";
}

int Report::count(ClaimStatus s) const {
    return static_cast<int>(std::count_if(records.begin(), records.end(), [&](const auto& r) { return r.status == s; }));
}

namespace {

const VarId X = var("x"), Y = var("y"), U = var("u"), V = var("v");

std::string I(long long k) { return std::to_string(k); }
std::string tag(int m, int n) { return "(" + I(m) + "," + I(n) + ")"; }
Poly P(const std::string& s) { return parse_poly(s); }
Poly mono(VarId v, int e) { return Poly::term(Rational(1), Monomial::of(v, e)); }
std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Distinct sampled points, optionally filtered.
std::vector<RationalPoint> sample_points(const Presentation& pres, std::uint64_t seed, int count,
                                         const std::function<bool(const RationalPoint&)>& keep = {}) {
    std::vector<RationalPoint> out;
    const auto want = static_cast<std::size_t>(count);
    for (std::uint64_t i = 0; out.size() < want && i < want * 50; ++i) {
        auto pt = sample_point(pres, seed * 1000003ULL + i);
        if (keep && !keep(pt)) continue;
        if (std::find(out.begin(), out.end(), pt) != out.end()) continue;
        out.push_back(std::move(pt));
    }
    if (out.size() < want) throw BudgetExceeded("could not sample " + I(count) + " distinct points");
    return out;
}

struct Xmn {
    PresentationPtr pres;
    Derivation delta;
};

Xmn xmn(int m, int n, const ClaimContext& ctx) {
    auto pres = xmnp_presentation(m, n, Poly(1))->with_options(ctx.groebner);
    return {pres, Derivation::parse(pres, "u -> x^" + I(m) + "; v -> y^" + I(n))};
}

// d applied to a polynomial without reducing: the free-ring derivative.
Poly raw_derivative(const Derivation& d, const Poly& p) {
    Poly s;
    for (VarId v : d.presentation()->vars()) s += p.derivative(v) * d.image(v).rep();
    return s;
}

// Rewrites c in two coordinates and compares both sides at sampled points.
struct CoordinateCheck {
    std::optional<Poly> laurent;
    std::optional<CocycleClass> cls;
    bool oracle = true;
    int points = 0;
};

CoordinateCheck coordinate_check(const RingElement& c, const std::pair<std::string, Poly>& first,
                                 const std::pair<std::string, Poly>& second, std::uint64_t seed, int count) {
    CoordinateCheck out;
    out.laurent = express_in_coordinates(c, {first, second});
    if (!out.laurent) {
        out.oracle = false;
        return out;
    }
    out.cls = class_of(*out.laurent, var(first.first), var(second.first));
    const auto& pres = *c.presentation();
    for (const auto& pt : sample_points(pres, seed, count)) {
        RationalPoint coords{{var(first.first), first.second.evaluate(pt)}, {var(second.first), second.second.evaluate(pt)}};
        if (coords.begin()->second.is_zero() || std::next(coords.begin())->second.is_zero()) continue;
        ++out.points;
        if (evaluate(c, pt) != out.laurent->evaluate(coords)) out.oracle = false;
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

// ---------------------------------------------------------------------------
// The threefolds X_{m,n}

ClaimOutcome xmn_descent(const ClaimContext& ctx) {
    ClaimOutcome o;
    o.check = "d(x^m*v - y^n*u - 1) vanishes on X_{m,n}";
    bool sym = true, orc = true;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto X_ = xmn(m, n, ctx);
            bool ok = X_.delta.descends();
            if (!ok) o.residuals.push_back(tag(m, n) + " d(rel) = " + X_.delta.relation_residuals()[0].str());
            sym = sym && ok;
            Poly raw = raw_derivative(X_.delta, X_.pres->relations()[0]);
            for (const auto& pt : sample_points(*X_.pres, ctx.seed + static_cast<std::uint64_t>(10 * m + n), ctx.points)) {
                ++o.points;
                if (!raw.evaluate(pt).is_zero()) orc = false;
            }
        }
    o.symbolic = sym;
    o.oracle = orc;
    o.agrees = sym;
    o.actual = sym ? "descends for all 1 <= m,n <= 3" : "fails to descend on " + I(static_cast<long long>(o.residuals.size())) + " cases";
    return o;
}

ClaimOutcome xmn_nilpotency(const ClaimContext& ctx) {
    ClaimOutcome o;
    o.check = "nilpotency indices u:2 v:2 x:1 y:1";
    bool ok = true;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto c = nilpotency_certificate(xmn(m, n, ctx).delta, ctx.nilpotency_bound);
            bool here = c.ring == "quotient" && c.index[U] == 2 && c.index[V] == 2 && c.index[X] == 1 && c.index[Y] == 1;
            if (!here)
                o.residuals.push_back(tag(m, n) + " indices u:" + I(c.index[U]) + " v:" + I(c.index[V]) + " x:" +
                                      I(c.index[X]) + " y:" + I(c.index[Y]));
            ok = ok && here;
        }
    o.symbolic = ok;
    o.agrees = ok;
    o.actual = ok ? "u:2 v:2 x:1 y:1 on all 9 presentations" : "unexpected indices";
    return o;
}

ClaimOutcome xmn_exponential(const ClaimContext& ctx) {
    ClaimOutcome o;
    o.check = "exp(t d) = (x, y, u + t*x^m, v + t*y^n) and the G_a action axioms";
    bool sym = true, orc = true;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto X_ = xmn(m, n, ctx);
            auto a = exponential(X_.delta, "t", ctx.nilpotency_bound);
            const auto& e = a.ext;
            std::map<VarId, Poly> want{{X, P("x")}, {Y, P("y")}, {U, P("u + t*x^" + I(m))}, {V, P("v + t*y^" + I(n))}};
            const auto& order = X_.pres->vars();
            for (std::size_t i = 0; i < order.size(); ++i)
                if (!(a.images[i] == e->element(want.at(order[i])))) {
                    sym = false;
                    o.residuals.push_back(tag(m, n) + " image of " + var_name(order[i]) + " = " + a.images[i].str());
                }
            std::uint64_t s = ctx.seed + static_cast<std::uint64_t>(10 * m + n);
            for (const auto& pt : sample_points(*e, s, 4))
                for (std::size_t i = 0; i < order.size(); ++i)
                    if (evaluate(a.images[i], pt) != want.at(order[i]).evaluate(pt)) orc = false;
            auto r = verify_action(a, GroupLaw::additive(), s, ctx.points);
            sym = sym && r.symbolic_pass;
            orc = orc && r.oracle_pass;
            o.points += r.points + 4;
        }
    o.symbolic = sym;
    o.oracle = orc;
    o.agrees = sym;
    o.actual = sym ? "images match and identity/composition/relations hold for all 1 <= m,n <= 3" : "mismatch";
    return o;
}

ClaimOutcome xmn_kernel(const ClaimContext& ctx) {
    ClaimOutcome o;
    o.check = "x, y in ker d and u, v not in ker d";
    bool ok = true;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto X_ = xmn(m, n, ctx);
            const auto& p = X_.pres;
            bool here = kernel_member(X_.delta, p->element("x")) && kernel_member(X_.delta, p->element("y")) &&
                        !kernel_member(X_.delta, p->element("u")) && !kernel_member(X_.delta, p->element("v"));
            if (!here) o.residuals.push_back(tag(m, n) + " kernel membership differs");
            ok = ok && here;
        }
    o.symbolic = ok;
    o.agrees = ok;
    o.actual = ok ? "C[x,y] in ker d, u and v outside, for all 1 <= m,n <= 3" : "unexpected kernel";
    return o;
}

ClaimOutcome xmn_cocycles(const ClaimContext& ctx) {
    ClaimOutcome o;
    o.check = "u/x^m - v/y^n equals its Laurent rewrite in (x, y)";
    bool sym = true, orc = true, agrees = true;
    std::vector<std::string> seen;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto X_ = xmn(m, n, ctx);
            auto ac = action_cocycle(X_.delta, {X_.pres->element("u"), X_.pres->element("v")});
            auto cc = coordinate_check(std::get<2>(ac.family.at(0)), {"X", P("x")}, {"Y", P("y")},
                                       ctx.seed + static_cast<std::uint64_t>(10 * m + n), ctx.points);
            sym = sym && cc.laurent.has_value();
            orc = orc && cc.oracle;
            o.points += cc.points;
            bool match = cc.cls && cc.cls->coeffs.size() == 1 && cc.cls->coeffs.begin()->first == std::pair{m, n} &&
                         (cc.cls->coeffs.begin()->second == Rational(1) || cc.cls->coeffs.begin()->second == Rational(-1));
            agrees = agrees && match;
            if (m == 2 && n == 3) seen.push_back("(2,3): " + (cc.cls ? cc.cls->str() : std::string("no rewrite")));
            if (!match) o.residuals.push_back(tag(m, n) + " class " + (cc.cls ? cc.cls->str() : std::string("none")));
        }
    o.symbolic = sym;
    o.oracle = orc;
    o.agrees = agrees;
    o.actual = agrees ? "class spanned by x^-m y^-n for all 1 <= m,n <= 3 (sign -1 with charts ordered u, v); " + join(seen, "")
                      : "class differs";
    return o;
}

ClaimOutcome xmn_smooth(const ClaimContext& ctx) {
    ClaimOutcome o;
    o.check = "the Jacobian ideal plus the relation is the unit ideal";
    bool sym = true, orc = true;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto X_ = xmn(m, n, ctx);
            auto s = smoothness_check(*X_.pres, {}, ctx.power_bound);
            bool ok = s.verdict == Smoothness::SmoothEverywhere;
            if (!ok) o.residuals.push_back(tag(m, n) + " verdict " + to_string(s.verdict));
            sym = sym && ok;
            const Poly& rel = X_.pres->relations()[0];
            for (const auto& pt : sample_points(*X_.pres, ctx.seed + static_cast<std::uint64_t>(10 * m + n), ctx.points)) {
                ++o.points;
                bool nonzero = false;
                for (VarId v : X_.pres->vars()) nonzero = nonzero || !rel.derivative(v).evaluate(pt).is_zero();
                if (!nonzero) orc = false;
            }
        }
    o.symbolic = sym;
    o.oracle = orc;
    o.agrees = sym;
    o.actual = sym ? "SmoothEverywhere for all 1 <= m,n <= 3" : "singular case found";
    return o;
}

// ---------------------------------------------------------------------------
// Bundles X(m,n,p) over the punctured plane

ClaimOutcome index_swap(const ClaimContext& ctx) {
    ClaimOutcome o;
    o.check = "cocycle of the displayed ring equals its Laurent rewrite in (x, y)";
    bool sym = true, orc = true, agrees = true;
    std::vector<std::string> found;
    for (auto [m, n] : {std::pair{3, 1}, std::pair{2, 1}, std::pair{2, 2}}) {
        // The ring as displayed: x^n v - y^m u - p, here with p = 1.
        auto pres = Presentation::parse("vars: x,y,u,v; relations: x^" + I(n) + "*v - y^" + I(m) +
                                            "*u - 1; order: degrevlex(v,u,x,y)",
                                        ctx.groebner);
        auto d = Derivation::parse(pres, "u -> x^" + I(n) + "; v -> y^" + I(m));
        auto ac = action_cocycle(d, {pres->element("u"), pres->element("v")});
        auto cc = coordinate_check(std::get<2>(ac.family.at(0)), {"X", P("x")}, {"Y", P("y")},
                                   ctx.seed + static_cast<std::uint64_t>(10 * m + n), ctx.points);
        sym = sym && cc.laurent.has_value();
        orc = orc && cc.oracle;
        o.points += cc.points;
        bool match = cc.cls && cc.cls->coeffs.size() == 1 && cc.cls->coeffs.begin()->first == std::pair{m, n};
        agrees = agrees && match;
        std::string got = cc.cls ? cc.cls->str() : std::string("none");
        found.push_back(tag(m, n) + " -> " + got);
        if (!match)
            o.residuals.push_back("g = x^-" + I(m) + "*y^-" + I(n) + " but x^" + I(n) + "*v - y^" + I(m) +
                                  "*u - 1 carries class " + got);
    }
    o.symbolic = sym;
    o.oracle = orc;
    o.agrees = agrees;
    o.actual = "classes " + join(found, ", ") + "; the ring with cocycle x^-m y^-n is x^m*v - y^n*u - p";
    return o;
}

std::vector<Poly> p_grid(int m, int n) {
    std::vector<Monomial> monos;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (i || j) monos.push_back(Monomial::of(X, i) * Monomial::of(Y, j));
    std::vector<Poly> out;
    std::size_t total = 1;
    for (std::size_t k = 0; k < monos.size(); ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<Poly::Term> terms;
        std::size_t c = code;
        for (const auto& mo : monos) {
            int digit = static_cast<int>(c % 3) - 1;
            c /= 3;
            if (digit) terms.push_back({mo, Rational(digit)});
        }
        if (!terms.empty()) out.push_back(Poly::from_terms(std::move(terms)));
    }
    return out;
}

ClaimOutcome affineness_grid(const ClaimContext&) {
    ClaimOutcome o;
    o.check = "each witness times (x,y)^k lies in the ring, terminal q0(0) != 0, steps <= deg_y p + 1";
    bool ok = true;
    long long cases = 0;
    std::size_t max_steps = 0;
    AffinenessOptions opt;
    opt.check_printed_witness = false;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (const Poly& p : p_grid(m, n)) {
                auto c = affineness_certificate(NormalFormMNP::make(m, n, p), opt);
                ++cases;
                max_steps = std::max(max_steps, c.trace.size());
                bool here = c.outcome == AffinenessCertificate::Outcome::UnitCertificate &&
                            static_cast<int>(c.trace.size()) <= p.max_degree(Y) + 1 && !c.q0.constant_term().is_zero() &&
                            c.all_witnesses_valid();
                if (!here && o.residuals.size() < 10) o.residuals.push_back(tag(m, n) + " p = " + to_string(p));
                ok = ok && here;
            }
    o.symbolic = ok;
    o.agrees = ok;
    o.actual = I(cases) + " cases with coefficients in {-1,0,1}: " +
               (ok ? "all certified" : "some failed") + ", longest trace " + I(static_cast<long long>(max_steps));
    return o;
}

ClaimOutcome printed_witness(const ClaimContext& ctx) {
    ClaimOutcome o;
    o.check = "x^a*(x^(m-a) - q0) = y*(y^(n-1)*u + P1) on X(m,n,p)";
    bool sym = true, orc = true;
    int checked = 0;
    struct Case {
        int m, n;
        const char* p;
    };
    // Inputs whose first step is Case 1 with a >= 1, so the step acts on the presented ring itself.
    for (auto c : {Case{2, 2, "x"}, Case{2, 2, "x + x*y"}, Case{3, 2, "x^2 - y"}, Case{3, 3, "x*y^2 + x^2"},
                   Case{2, 3, "x - x*y^2"}}) {
        Poly p = P(c.p);
        auto cert = affineness_certificate(NormalFormMNP::make(c.m, c.n, p));
        const auto& st = cert.trace.front();
        if (st.kind != AffinenessStep::Kind::case1 || st.a == 0) continue;
        auto pres = xmnp_presentation(c.m, c.n, p)->with_options(ctx.groebner);
        ++checked;
        Poly P1y;  // (p - x^a q0) / y
        const Poly P1 = p - p.coefficient_of(Y, 0);
        for (const auto& t : P1.terms())
            P1y += Poly::term(t.coeff, t.mono * Monomial::of(Y, -1));
        Poly rhs = mono(Y, 1) * (mono(Y, c.n - 1) * Poly::variable(U) + P1y);
        Poly diff = mono(X, st.a) * (mono(X, c.m - st.a) - st.q0) - rhs;
        auto r = pres->element(diff);
        sym = sym && r.is_zero();
        for (const auto& pt : sample_points(*pres, ctx.seed + static_cast<std::uint64_t>(checked), ctx.points)) {
            ++o.points;
            if (!diff.evaluate(pt).is_zero()) orc = false;
        }
        Poly corrected = mono(X, st.a) * (mono(X, c.m - st.a) * Poly::variable(V) - st.q0) - rhs;
        bool corrected_ok = pres->element(corrected).is_zero();
        o.residuals.push_back("m=" + I(c.m) + " n=" + I(c.n) + " p=" + to_string(p) + " a=" + I(st.a) + ": residual " +
                              r.str() + "; printed witness " + st.printed_witness + " in T_I(A): " +
                              yes_no(st.printed_valid) + "; with the fiber factor v the identity holds: " +
                              yes_no(corrected_ok) + ", corrected witness valid: " + yes_no(st.witness.valid()));
    }
    o.symbolic = sym;
    o.oracle = orc;
    o.agrees = sym;
    o.actual = sym ? "printed identity holds on " + I(checked) + " cases"
                   : "printed identity fails; the identity that holds multiplies x^(m-a) by the fiber coordinate v";
    return o;
}

// ---------------------------------------------------------------------------
// Actions, trivializations and the quotient P^1

ActionMap gm_action(const PresentationPtr& p, int m, int n) {
    return scaling_action(p, {{X, 1}, {Y, 1}, {U, -n}, {V, -m}}, "lam");
}

ClaimOutcome gm_grid(const ClaimContext& ctx) {
    ClaimOutcome o;
    o.check = "G_m action axioms (identity, composition, relation preserved)";
    bool sym = true, orc = true;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto X_ = xmn(m, n, ctx);
            auto r = verify_action(gm_action(X_.pres, m, n), GroupLaw::multiplicative(),
                                   ctx.seed + static_cast<std::uint64_t>(10 * m + n), ctx.points);
            sym = sym && r.symbolic_pass;
            orc = orc && r.oracle_pass;
            o.points += r.points;
            for (const auto& c : r.checks)
                if (!c.pass) o.residuals.push_back(tag(m, n) + " " + c.name);
        }
    o.symbolic = sym;
    o.oracle = orc;
    o.agrees = sym;
    o.actual = sym ? "axioms hold for all 1 <= m,n <= 3" : "axiom failure";
    return o;
}

ClaimOutcome semidirect_twist(const ClaimContext& ctx) {
    ClaimOutcome o;
    o.check = "theta = lam.(t.p) satisfies the G_d law and lam.(t.p) = (lam^-d t).(lam.p)";
    bool sym = true, orc = true;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto X_ = xmn(m, n, ctx);
            auto gm = gm_action(X_.pres, m, n);
            auto ga = exponential(X_.delta, "t", ctx.nilpotency_bound);
            auto theta = compose(gm, ga);
            auto r = verify_action(theta, GroupLaw::semidirect(m + n), ctx.seed + static_cast<std::uint64_t>(10 * m + n),
                                   ctx.points);
            sym = sym && r.symbolic_pass;
            orc = orc && r.oracle_pass;
            o.points += r.points;
            for (const auto& c : r.checks)
                if (!c.pass) o.residuals.push_back(tag(m, n) + " " + c.name);
            auto other = compose(ga, gm);
            const auto& e = theta.ext;
            auto twisted =
                other.specialize({{var("t"), e->element("lam^-" + I(m + n) + "*t")}, {var("lam"), e->element("lam")}}, e);
            for (std::size_t i = 0; i < twisted.size(); ++i)
                if (!(twisted[i] == theta.images[i])) {
                    sym = false;
                    o.residuals.push_back(tag(m, n) + " twist identity fails in coordinate " + I(static_cast<long long>(i)));
                }
        }
    o.symbolic = sym;
    o.oracle = orc;
    o.agrees = sym;
    o.actual = sym ? "semidirect law with d = m+n and twist identity hold for all 1 <= m,n <= 3" : "failure";
    return o;
}

ClaimOutcome gd_group(const ClaimContext& ctx) {
    ClaimOutcome o;
    o.check = "associativity, identity and inverses of (l,t)(l',t') = (l l', t + l^d t')";
    std::mt19937_64 rng(ctx.seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    auto rnd = [&](bool nonzero) {
        int a = num(rng);
        if (nonzero && a == 0) a = 1;
        return Rational(a, den(rng));
    };
    bool ok = true;
    int cases = 0;
    for (int d = 1; d <= 6; ++d)
        for (int k = 0; k < 40; ++k) {
            GdElement a{rnd(true), rnd(false), d}, b{rnd(true), rnd(false), d}, c{rnd(true), rnd(false), d};
            GdElement e{Rational(1), Rational(0), d};
            bool here = gd_multiply(gd_multiply(a, b), c) == gd_multiply(a, gd_multiply(b, c)) &&
                        gd_multiply(e, a) == a && gd_multiply(a, e) == a && gd_multiply(a, gd_inverse(a)) == e &&
                        gd_multiply(gd_inverse(a), a) == e;
            ++cases;
            if (!here) o.residuals.push_back("d=" + I(d) + " a=" + a.str());
            ok = ok && here;
        }
    o.symbolic = ok;
    o.agrees = ok;
    o.actual = ok ? "group axioms hold on " + I(cases) + " random triples, d = 1..6" : "group axiom failure";
    return o;
}

ClaimOutcome trivialization(const ClaimContext& ctx) {
    ClaimOutcome o;
    o.check = "u1*u2 = 1, L2 = u1*L1, T2 = u1^m + u1^d*T1 and chart invariance";
    bool sym = true, orc = true;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto r = verify_trivialization(m, n, ctx.seed + static_cast<std::uint64_t>(10 * m + n), ctx.points);
            sym = sym && r.symbolic_pass;
            orc = orc && r.oracle_pass;
            o.points += r.points;
            for (const auto& c : r.checks)
                if (!c.pass) o.residuals.push_back(tag(m, n) + " " + c.name + ": " + c.residual);
        }
    o.symbolic = sym;
    o.oracle = orc;
    o.agrees = sym;
    o.actual = sym ? "identities hold for all 1 <= m,n <= 3" : "identity failure";
    return o;
}

ClaimOutcome gd_transition(const ClaimContext&) {
    ClaimOutcome o;
    o.check = "transition (L,T) -> (uL, u^d T + u^m) and its class in H^1(P^1, O(-d))";
    bool ok = true;
    std::vector<std::string> classes;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto s = sdm_from_mn(m, n);
            auto c = torsor_class(s.torsor);
            bool here = s.d == m + n && s.torsor.phi == mono(U, m) &&
                        s.gd_transition == "(L,T) -> (u*L, u^" + I(m + n) + "*T + u^" + I(m) + ")" && !c.trivial() &&
                        c.coeffs.at(static_cast<std::size_t>(m - 1)) == Rational(1);
            if (!here) o.residuals.push_back(tag(m, n) + " " + s.gd_transition + " class " + c.str());
            if (m == 2 && n == 2) classes.push_back("(2,2): " + s.gd_transition + ", class " + c.str());
            ok = ok && here;
        }
    o.symbolic = ok;
    o.agrees = ok;
    o.actual = ok ? "nontrivial torsor with class u^m for all 1 <= m,n <= 3; " + join(classes, "") : "mismatch";
    return o;
}

ClaimOutcome involution(const ClaimContext&) {
    ClaimOutcome o;
    o.check = "L~ = 1/L turns (L,T) -> (L/u, u^d T + u^m) into (L~,T) -> (u L~, u^d T + u^m)";
    bool ok = true;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            bool here = generator_involution_check(m, n);
            if (!here) o.residuals.push_back(tag(m, n));
            ok = ok && here;
        }
    o.symbolic = ok;
    o.agrees = ok;
    o.actual = ok ? "holds for all 1 <= m,n <= 3" : "fails";
    return o;
}

// ---------------------------------------------------------------------------
// Splitting on P^1

int h0_of_type(SplittingType t, int j) { return std::max(0, t.a1 + j + 1) + std::max(0, t.a2 + j + 1); }

ClaimOutcome splitting_grid(const ClaimContext&) {
    ClaimOutcome o;
    o.check = "splitting type of [[u^(m+n), u^m],[0,1]] is (-n,-m) with index 2m-d";
    bool sym = true, orc = true;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= m; ++n) {
            int d = m + n;
            auto M = extension_matrix(d, m);
            auto s = birkhoff_split(M);
            SplittingType want{-n, -m};
            bool b = birkhoff_valid(M, s) && s.type == want && s.type.hirzebruch() == 2 * m - d;
            auto h = splitting_from_h0(M);
            bool hh = h == want && h.hirzebruch() == 2 * m - d;
            if (!b) o.residuals.push_back(tag(m, n) + " Birkhoff type " + s.type.str());
            if (!hh) o.residuals.push_back(tag(m, n) + " h0 type " + h.str());
            sym = sym && b;
            orc = orc && hh;
        }
    o.symbolic = sym;
    o.oracle = orc;
    o.agrees = sym && orc;
    o.actual = o.agrees ? "type (-n,-m) by Birkhoff and by h0, index m-n = 2m-d, for 1 <= n <= m <= 5" : "mismatch";
    return o;
}

ClaimOutcome h0_normalization(const ClaimContext&) {
    ClaimOutcome o;
    o.check = "h0(E(m)) != 0 and h0(E(m-1)) = 0";
    bool sym = true, orc = true;
    std::vector<std::string> values;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= m; ++n) {
            auto M = extension_matrix(m + n, m);
            int at_m = h0_twist(M, m).dimension, below = h0_twist(M, m - 1).dimension;
            auto t = birkhoff_split(M).type;
            int at_m_b = h0_of_type(t, m), below_b = h0_of_type(t, m - 1);
            sym = sym && at_m != 0 && below == 0;
            orc = orc && at_m_b != 0 && below_b == 0;
            if (below != 0 || at_m == 0)
                o.residuals.push_back(tag(m, n) + " h0(E(m-1)) = " + I(below) + " (m-n = " + I(m - n) + "), h0(E(m)) = " + I(at_m));
            if (below != below_b || at_m != at_m_b)
                o.residuals.push_back(tag(m, n) + " h0 scan and splitting type disagree");
            values.push_back(I(below));
        }
    o.symbolic = sym;
    o.oracle = orc;
    o.agrees = sym;
    o.actual = sym ? "h0(E(m-1)) = 0 on the grid"
                   : "h0(E(m-1)) = m-n, nonzero whenever m > n (values in grid order: " + join(values, ",") +
                         "); F_{2m-d} still follows from the splitting type";
    return o;
}

ClaimOutcome section_at_m(const ClaimContext&) {
    ClaimOutcome o;
    o.check = "M_m * (0,1) = (1, u^-m), regular in 1/u";
    bool sym = true, orc = true;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= m; ++n) {
            auto M = extension_matrix(m + n, m);
            Poly s = mono(U, -m);
            Poly h1 = s * M[0][1], h2 = s * M[1][1];
            bool here = h1 == Poly(1) && h2 == mono(U, -m);
            sym = sym && here;
            if (!here) o.residuals.push_back(tag(m, n) + " h = (" + to_string(h1) + ", " + to_string(h2) + ")");
            // The computed H^0 must contain a section with g1 = 0 and g2 constant.
            auto h = h0_twist(M, m);
            bool found = false;
            for (const auto& [g1, g2] : h.basis) found = found || (g1.is_zero() && g2.is_constant() && !g2.is_zero());
            orc = orc && found;
        }
    o.symbolic = sym;
    o.oracle = orc;
    o.agrees = sym;
    o.actual = sym ? "g = (0,1), h = (1, u^-m) is a section of E(m) for 1 <= n <= m <= 5" : "not a section";
    return o;
}

// ---------------------------------------------------------------------------
// Intersection numbers and classification

ClaimOutcome self_intersection(const ClaimContext&) {
    ClaimOutcome o;
    o.check = "(C+mF)^2 = d on F_{2m-d}";
    bool sym = true, orc = true;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= m; ++n) {
            int d = m + n;
            auto b = sdm_boundary_class(m, n);
            bool here = b.self_intersection == d;
            // Independent route: F-index from the splitting type, then -k + 2m.
            int k = birkhoff_split(extension_matrix(d, m)).type.hirzebruch();
            bool alt = -k + 2 * m == d;
            sym = sym && here;
            orc = orc && alt;
            if (!here) o.residuals.push_back(tag(m, n) + " (C+mF)^2 = " + I(b.self_intersection));
        }
    o.symbolic = sym;
    o.oracle = orc;
    o.agrees = sym;
    o.actual = sym ? "(C+mF)^2 = m+n for 1 <= n <= m <= 5" : "mismatch";
    return o;
}

ClaimOutcome scroll_delta(const ClaimContext&) {
    ClaimOutcome o;
    o.check = "Delta^2 = (mL + C_v).(nL + C_u) = m+n on F(m,n)";
    bool sym = true, orc = true;
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= m; ++n) {
            auto s = RuledSurface::scroll(m, n);
            auto D = delta_class(s);
            auto other = basis_class(s, 1) * n + basis_class(s, 0);
            sym = sym && intersect(D, D) == m + n;
            orc = orc && intersect(D, other) == m + n;
            if (intersect(D, D) != m + n) o.residuals.push_back(tag(m, n) + " Delta^2 = " + I(intersect(D, D)));
        }
    o.symbolic = sym;
    o.oracle = orc;
    o.agrees = sym;
    o.actual = sym ? "Delta^2 = m+n for 1 <= n <= m <= 6" : "mismatch";
    return o;
}

ClaimOutcome scroll_relations(const ClaimContext&) {
    ClaimOutcome o;
    o.check = "C_v.C_u = 0, mL + C_v ~ nL + C_u, and agreement with the splitting index";
    auto r = intersection_self_test(6);
    for (const auto& c : r.checks)
        if (!c.pass) o.residuals.push_back(c.name + ": " + c.residual);
    o.symbolic = r.ok;
    o.agrees = r.ok;
    o.actual = I(static_cast<long long>(r.checks.size())) + " checks for 1 <= n <= m <= 6: " + (r.ok ? "all pass" : "failures");
    return o;
}

ClaimOutcome classify_theorem(const ClaimContext&) {
    ClaimOutcome o;
    o.check = "classify_xmn(2,2,3,1) and symmetry under (m,n) -> (n,m)";
    auto c = classify_xmn(2, 2, 3, 1);
    bool ok = c.verdict == Verdict::IsomorphicByTheorem && c.d1 == 4 && c.d2 == 4;
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) ok = ok && classify_xmn(m, n, n, m).verdict == Verdict::IsomorphicByTheorem;
    o.symbolic = ok;
    o.agrees = ok;
    o.actual = to_string(c.verdict) + ", d = " + I(c.d1);
    return o;
}

ClaimOutcome classify_fg(const ClaimContext&) {
    ClaimOutcome o;
    o.check = "classify_xfg(x^2+y^2, y^3) = (2,3) and classify_xfg(x*y, x^2) rejected";
    auto c = classify_xfg(P("x^2 + y^2"), P("y^3"));
    bool ok = c.m == 2 && c.n == 3 && !c.resultant.is_zero();
    std::string err;
    try {
        classify_xfg(P("x*y"), P("x^2"));
        ok = false;
    } catch (const DomainError& e) {
        err = e.what();
        ok = ok && err.find("common zero") != std::string::npos;
    }
    o.symbolic = ok;
    o.agrees = ok;
    o.actual = c.conclusion + ", resultant " + c.resultant.str() + ", Delta^2 = " + I(c.delta_self_intersection) +
               "; (x*y, x^2): " + err;
    return o;
}

ClaimOutcome fg_specializes(const ClaimContext&) {
    ClaimOutcome o;
    o.check = "classify_xfg(x^m, y^n) = (m,n)";
    bool ok = true;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto c = classify_xfg(mono(X, m), mono(Y, n));
            ok = ok && c.m == m && c.n == n;
        }
    o.symbolic = ok;
    o.agrees = ok;
    o.actual = ok ? "recovers X_{m,n} for 1 <= m,n <= 3" : "mismatch";
    return o;
}

ClaimOutcome fg_weights(const ClaimContext& ctx) {
    ClaimOutcome o;
    o.check = "lam.(x,y,u,v) = (lam x, lam y, lam^-m u, lam^-n v) preserves f*v - g*u - 1";
    auto pres = Presentation::parse("vars: x,y,u,v; relations: (x^2 + y^2)*v - y^3*u - 1", ctx.groebner);
    const int m = 2, n = 3;
    auto printed = verify_action(scaling_action(pres, {{X, 1}, {Y, 1}, {U, -m}, {V, -n}}, "lam"),
                                 GroupLaw::multiplicative(), ctx.seed, ctx.points);
    auto swapped = verify_action(scaling_action(pres, {{X, 1}, {Y, 1}, {U, -n}, {V, -m}}, "lam"),
                                 GroupLaw::multiplicative(), ctx.seed, ctx.points);
    for (const auto& c : printed.checks)
        for (const auto& [gen, res] : c.residuals)
            if (!res.empty()) o.residuals.push_back(c.name + " " + gen + ": " + res);
    o.symbolic = printed.symbolic_pass;
    o.oracle = printed.oracle_pass;
    o.points = printed.points;
    o.agrees = printed.symbolic_pass;
    o.actual = std::string("f = x^2+y^2, g = y^3: printed weights ") + (printed.symbolic_pass ? "preserve" : "do not preserve") +
               " the relation (f*v scales by lam^(m-n)); weights (lam^-n u, lam^-m v) " +
               (swapped.symbolic_pass && swapped.oracle_pass ? "do" : "do not");
    return o;
}

// ---------------------------------------------------------------------------
// The explicit structure on X_{2,2}

struct X22 {
    PresentationPtr free, ring;
    Derivation d;
    Poly a, b, w;
};

X22 x22(const ClaimContext& ctx) {
    X22 e;
    e.free = Presentation::parse("vars: x,y,u,v", ctx.groebner);
    e.ring = Presentation::parse("vars: x,y,u,v; relations: x^2*v - y^2*u - 1; order: degrevlex(v,u,x,y)", ctx.groebner);
    e.a = P("x - 1/2*y");
    e.b = P("3/4*x*v - 1/8*y*v - 3/2*y*u + x*u");
    e.w = P("5/16*v^2*x + 5/2*v*x*u - 1/32*v^2*y - 5/4*v*y*u + u^2*x - 5/2*u^2*y");
    Poly a3 = e.a.pow(3);
    const auto& f = e.free;
    e.d = Derivation(f, {{X, f->element(a3.scaled(Rational(1, 3)))},
                         {Y, f->element(a3)},
                         {U, f->element(Poly::variable(X) * e.b - Poly(Rational(1, 4)))},
                         {V, f->element(Poly(2) * Poly::variable(Y) * e.b - Poly(1))}});
    return e;
}

// delta applied to the printed polynomial in Q[x,y,u,v], compared on X_{2,2}.
ClaimOutcome x22_identity(const ClaimContext& ctx, const Poly& expr, const Poly& claimed, const std::string& lhs,
                          const std::string& rhs) {
    auto e = x22(ctx);
    ClaimOutcome o;
    o.check = lhs + " = " + rhs + " in A_{2,2}";
    Poly r = e.d.apply_to_lift(expr).rep() - claimed;
    auto red = e.ring->element(r);
    o.symbolic = red.is_zero();
    bool orc = true;
    for (const auto& pt : sample_points(*e.ring, ctx.seed, ctx.points)) {
        ++o.points;
        if (!r.evaluate(pt).is_zero()) orc = false;
    }
    o.oracle = orc;
    o.agrees = *o.symbolic;
    if (!o.agrees) {
        std::string res = lhs + " - " + rhs + " = " + red.str();
        if (auto ab = express_in_coordinates(red, {{"A", e.a}, {"B", e.b}}))
            res += " = " + to_string(*ab) + " with A = a, B = b";
        o.residuals.push_back(res);
    }
    o.actual = o.agrees ? lhs + " = " + rhs : "nonzero residual";
    return o;
}

ClaimOutcome x22_descends(const ClaimContext& ctx) {
    auto e = x22(ctx);
    ClaimOutcome o;
    o.check = "delta(x^2*v - y^2*u - 1) vanishes on X_{2,2}";
    std::map<VarId, RingElement> images;
    for (VarId v : e.free->vars()) images.emplace(v, e.ring->element(e.d.image(v).rep()));
    Derivation on_ring(e.ring, images);
    o.symbolic = on_ring.descends();
    Poly raw = raw_derivative(e.d, e.ring->relations()[0]);
    bool orc = true;
    for (const auto& pt : sample_points(*e.ring, ctx.seed, ctx.points)) {
        ++o.points;
        if (!raw.evaluate(pt).is_zero()) orc = false;
    }
    o.oracle = orc;
    o.agrees = *o.symbolic;
    if (!o.agrees) o.residuals.push_back("delta(rel) mod rel = " + on_ring.relation_residuals()[0].str());
    o.actual = o.agrees ? "descends" : "does not descend to A_{2,2}";
    return o;
}

ClaimOutcome x22_nilpotent(const ClaimContext& ctx) {
    auto e = x22(ctx);
    ClaimOutcome o;
    o.check = "iterates of delta on Q[x,y,u,v] reach 0 within the nilpotency bound";
    try {
        auto c = nilpotency_certificate(e.d, ctx.nilpotency_bound);
        o.symbolic = true;
        o.agrees = true;
        o.actual = "nilpotent";
    } catch (const NotNilpotent& err) {
        o.symbolic = false;
        o.agrees = false;
        o.actual = err.what();
        Poly da = e.d.apply_to_lift(e.a).rep();
        o.residuals.push_back("delta(a) = " + to_string(da) + " = -1/6*a^3, so delta^k(a) is a nonzero multiple of a^(2k+1)");
    }
    return o;
}

ClaimOutcome x22_unit(const ClaimContext& ctx) {
    auto e = x22(ctx);
    ClaimOutcome o;
    o.check = "1 = c1*a^3 + c2*b on X_{2,2}";
    Poly a3 = e.a.pow(3);
    auto u = unit_ideal_test(*e.ring, {a3, e.b});
    o.symbolic = u.unit && u.expand({a3, e.b}, e.ring->relations()) == Poly(1);
    bool orc = u.unit;
    if (u.unit)
        for (const auto& pt : sample_points(*e.ring, ctx.seed, ctx.points)) {
            ++o.points;
            Rational s = u.element_coeffs[0].evaluate(pt) * a3.evaluate(pt) + u.element_coeffs[1].evaluate(pt) * e.b.evaluate(pt);
            if (s != Rational(1)) orc = false;
        }
    o.oracle = orc;
    o.agrees = *o.symbolic;
    o.actual = u.unit ? "unit ideal; certificate of " + I(static_cast<long long>(u.element_coeffs[0].size() + u.element_coeffs[1].size())) +
                            " terms verified"
                      : "not the unit ideal";
    return o;
}

ClaimOutcome x22_cocycle_identity(const ClaimContext& ctx) {
    auto e = x22(ctx);
    ClaimOutcome o;
    o.check = "b*(y+a+ab) - a^3*w = 1 in A_{2,2}";
    Poly s = Poly::variable(Y) + e.a + e.a * e.b;
    Poly N = e.b * s - e.a.pow(3) * e.w - Poly(1);
    auto red = e.ring->element(N);
    o.symbolic = red.is_zero();
    bool orc = true;
    for (const auto& pt : sample_points(*e.ring, ctx.seed, ctx.points)) {
        ++o.points;
        if (!N.evaluate(pt).is_zero()) orc = false;
    }
    o.oracle = orc;
    o.agrees = *o.symbolic;
    if (!o.agrees) {
        std::string res = "b*(y+a+ab) - a^3*w - 1 = " + red.str();
        if (auto ab = express_in_coordinates(red, {{"A", e.a}, {"B", e.b}})) res += " = " + to_string(*ab) + " with A = a, B = b";
        o.residuals.push_back(res);
    }
    o.actual = o.agrees ? "identity holds" : "identity fails; the difference of the local slices is not 1/(a^3 b)";
    return o;
}

// The cocycle built from the two local slices, as a Laurent polynomial in a, b.
struct X22Class {
    std::optional<Poly> laurent;
    std::optional<CocycleClass> cls;
    bool oracle = false;
    int points = 0;
};

X22Class x22_class(const ClaimContext& ctx) {
    auto e = x22(ctx);
    auto loc = e.ring->extend({}, {e.a, e.b});
    Poly s = Poly::variable(Y) + e.a + e.a * e.b;
    RingElement c = loc->element(s) * loc->element(e.a).inverse().pow(3) - loc->element(e.w) * loc->element(e.b).inverse();
    auto cc = coordinate_check(c, {"A", e.a}, {"B", e.b}, ctx.seed, ctx.points);
    return {cc.laurent, cc.cls, cc.oracle, cc.points};
}

ClaimOutcome x22_class_display(const ClaimContext& ctx) {
    auto k = x22_class(ctx);
    ClaimOutcome o;
    o.check = "(y+a+ab)/a^3 - w/b equals its Laurent rewrite in (a, b)";
    o.symbolic = k.laurent.has_value();
    o.oracle = k.oracle;
    o.points = k.points;
    CocycleClass want;
    want.coeffs[{3, 1}] = Rational(1);
    o.agrees = k.cls && *k.cls == want;
    o.actual = k.laurent ? "cocycle = " + to_string(*k.laurent) + " (A = a, B = b), class " + k.cls->str() +
                               (o.agrees ? ": the class of 1/(a^3 b)" : "")
                         : "no Laurent rewrite in (a, b)";
    return o;
}

ClaimOutcome x22_class_sentence(const ClaimContext& ctx) {
    auto k = x22_class(ctx);
    ClaimOutcome o;
    o.check = "(y+a+ab)/a^3 - w/b equals its Laurent rewrite in (a, b)";
    o.symbolic = k.laurent.has_value();
    o.oracle = k.oracle;
    o.points = k.points;
    auto sentence = class_of(P("A^-3*B"), var("A"), var("B"));
    o.agrees = k.cls && sentence == *k.cls;
    o.actual = std::string("computed class ") + (k.cls ? k.cls->str() : std::string("none")) +
               " = a^-3 b^-1; a^-3 b is a coboundary (class " + (sentence.trivial() ? "0" : sentence.str()) + ")";
    o.residuals.push_back("class(a^-3 b) = 0, class(cocycle) = " + (k.cls ? k.cls->str() : std::string("none")));
    return o;
}

ClaimOutcome x22_x3y(const ClaimContext& ctx) {
    ClaimOutcome o;
    o.check = "x^-3*y = plus - minus with plus regular on {x != 0}, minus regular on {y != 0}";
    Poly g = P("x^-3*y");
    auto r = is_coboundary(g);
    bool split = r.plus.min_degree(Y) >= 0 && r.minus.min_degree(X) >= 0 && r.class_part.is_zero();
    o.symbolic = r.coboundary && split;
    std::mt19937_64 rng(ctx.seed);
    std::uniform_int_distribution<int> num(1, 9), den(1, 5);
    bool orc = true;
    for (int i = 0; i < ctx.points; ++i) {
        RationalPoint pt{{X, Rational(num(rng), den(rng))}, {Y, Rational(-num(rng), den(rng))}};
        ++o.points;
        if (g.evaluate(pt) != r.plus.evaluate(pt) - r.minus.evaluate(pt)) orc = false;
    }
    o.oracle = orc;
    o.agrees = !r.coboundary;
    o.actual = r.coboundary ? "x^-3*y is a coboundary (plus = " + to_string(r.plus) +
                                  "): it defines the trivial bundle, not X_{2,2}"
                            : "nontrivial class " + class_of(g).str();
    return o;
}

std::vector<Claim> build_registry() {
    std::vector<Claim> c;
    auto add = [&](std::string id, std::string loc, std::string quote, std::string inv, std::string exp,
                   std::function<ClaimOutcome(const ClaimContext&)> fn) {
        c.push_back({std::move(id), {std::move(loc), std::move(quote)}, std::move(inv), std::move(exp), std::move(fn)});
    };

    add("example-xmn-descent-grid", "Example: the threefolds X_{m,n}", "v\\mapsto y^{n}\\mapsto 0",
        "Derivation(u -> x^m, v -> y^n).descends() on X_{m,n}, 1 <= m,n <= 3", "the derivation descends to X_{m,n}",
        xmn_descent);
    add("example-xmn-nilpotency-grid", "Example: the threefolds X_{m,n}", "locally nilpotent derivation $\\delta :u\\mapsto x^{m}\\mapsto",
        "nilpotency_certificate on X_{m,n}, 1 <= m,n <= 3", "indices u:2, v:2, x:1, y:1", xmn_nilpotency);
    add("example-xmn-exponential-grid", "Actions of G_m and G_a on X_{m,n}", "(x,y,u+tx^{m},v+ty^{n})",
        "exponential(delta) and verify_action(additive), 1 <= m,n <= 3", "exp(t delta) = (x, y, u + t x^m, v + t y^n)",
        xmn_exponential);
    add("example-xmn-kernel", "Example: the threefolds X_{m,n}", "C_{0}=\\mathbb{C}[x,y]",
        "kernel_member(delta, x|y|u|v), 1 <= m,n <= 3", "ker delta contains C[x,y]", xmn_kernel);
    add("example-xmn-cocycle-grid", "Example: the threefolds X_{m,n}", "\\v{C}ech 1-cocycles $x^{-m}y^{-n}$",
        "action_cocycle(delta, [u, v]) then class_in_coordinates, 1 <= m,n <= 3", "class spanned by x^-m y^-n",
        xmn_cocycles);
    add("example-xmn-smooth-grid", "Example: the threefolds X_{m,n}", "smooth factorial threefolds",
        "smoothness_check(X_{m,n}), 1 <= m,n <= 3", "X_{m,n} is smooth", xmn_smooth);
    add("index-convention-mn-swap", "Bundles over the punctured plane: definition of A",
        "A=\\mathbb{C}[x,y,u,v]/(x^{n}v-y^{m}u-p(x,y))",
        "action_cocycle on x^n*v - y^m*u - 1 for (m,n) in {(3,1),(2,1),(2,2)}",
        "the displayed ring is the bundle of g = p x^-m y^-n", index_swap);
    add("cases-affineness-grid", "Bundles over the punctured plane: Cases 1 and 2", "IT_{I}(A)=T_{I}(A)",
        "affineness_certificate over all p with coefficients in {-1,0,1}, m,n <= 3",
        "X(m,n,p) is affine: the recursion ends in q0 with q0(0) != 0", affineness_grid);
    add("cases-printed-witness", "Bundles over the punctured plane: Case 1", "\\frac{x^{m-a}-q_{0}}{y}",
        "first Case-1 step of affineness_certificate on sample inputs",
        "(x^(m-a) - q0)/y = (y^(n-1) u + P1)/x^a in T_I(A)", printed_witness);
    add("gm-action-grid", "Actions of G_m and G_a on X_{m,n}", "(\\lambda x,\\lambda y,\\lambda ^{-n}u,\\lambda ^{-m}v)",
        "verify_action(scaling (1,1,-n,-m), multiplicative), 1 <= m,n <= 3", "a G_m action on X_{m,n}", gm_grid);
    add("semidirect-twist-grid", "Actions of G_m and G_a on X_{m,n}", "(\\lambda \\lambda ^{\\prime },t+\\lambda ^{d}t^{\\prime })",
        "verify_action(compose(G_m, G_a), semidirect(m+n)) and the twist identity, 1 <= m,n <= 3",
        "a G_d action with d = m+n", semidirect_twist);
    add("gd-group-law", "Actions of G_m and G_a on X_{m,n}", "G_{d}=\\mathbb{G}_{m}\\ltimes _{d}\\mathbb{G}_{a}",
        "gd_multiply / gd_inverse on random elements, d = 1..6", "G_d is a group", gd_group);
    add("trivialization-grid", "Quotient by G_d: transition isomorphisms", "u_{1}^{m}+u_{1}^{d}T_{1}",
        "verify_trivialization(m, n), 1 <= m,n <= 3", "L2 = u1 L1 and T2 = u1^m + u1^d T1", trivialization);
    add("proposition-gd-transition", "Proposition: X_{m,n} as a principal G_d-bundle over P^1",
        "(L,T)\\longmapsto (uL,u^{m+n}T+u^{m})", "sdm_from_mn and torsor_class, 1 <= m,n <= 3",
        "transition (L,T) -> (uL, u^(m+n) T + u^m)", gd_transition);
    add("corollary-generator-involution", "Corollary: the O(-d)-torsor S_{d,m}", "(L,T)\\longmapsto (u^{-1}L,u^{d}T+u^{m})",
        "generator_involution_check(m, n), 1 <= m,n <= 3", "the other generator gives an isomorphic torsor", involution);
    add("lemma-splitting-grid", "Lemma: P(E) is a Hirzebruch surface", "is isomorphic to the Nagata-Hirzebruch",
        "birkhoff_split and splitting_from_h0 on [[u^(m+n), u^m],[0,1]], 1 <= n <= m <= 5", "P(E) = F_{2m-d}",
        splitting_grid);
    add("lemma-h0-normalization", "Lemma: proof", "(m)$ is normalized",
        "h0_twist(M, m) and h0_twist(M, m-1), 1 <= n <= m <= 5", "h0(E(m)) != 0 and h0(E(m-1)) = 0", h0_normalization);
    add("lemma-j-equals-m-section", "Lemma: proof", "For $j=m$ we have, for example,",
        "u^-m * M * (0,1) and h0_twist(M, m), 1 <= n <= m <= 5", "g = (0,1), h = (1, u^-m) is a section",
        section_at_m);
    add("theorem-self-intersection-grid", "Theorem: proof", "(C+mF)^{2}=C^{2}+2mC.F=-(2m-d)+2m=d",
        "sdm_boundary_class(m, n), 1 <= n <= m <= 5", "(C+mF)^2 = d", self_intersection);
    add("theorem-classify-x22-x31", "Theorem", "Then $X_{m,n}\\cong X_{p,q}$ as abstract varieties",
        "classify_xmn(2, 2, 3, 1)", "X_{2,2} = X_{3,1}", classify_theorem);
    add("scroll-delta-self-intersection", "General class X_{f,g}: the scroll F(m,n)",
        "=\\left( mL+C_{v}\\right) \\cdot \\left( nL+C_{u}\\right) =m+n", "delta_class on F(m,n), 1 <= n <= m <= 6",
        "Delta^2 = m+n", scroll_delta);
    add("scroll-section-relations", "General class X_{f,g}: the scroll F(m,n)", "C_{v}\\cdot C_{u}=0",
        "intersection_self_test(6)", "C_v.C_u = 0 and mL + C_v ~ nL + C_u", scroll_relations);
    add("proposition-xfg-classify", "Proposition: X_{f,g}", "$X_{f,g}$ is isomorphic to $X_{m,n}$",
        "classify_xfg(x^2+y^2, y^3), classify_xfg(x*y, x^2)", "X_{f,g} = X_{deg f, deg g} when V(f,g) = {0}",
        classify_fg);
    add("xfg-specializes-to-xmn", "General class X_{f,g}", "fv-gu-1=0", "classify_xfg(x^m, y^n), 1 <= m,n <= 3",
        "f = x^m, g = y^n gives X_{m,n}", fg_specializes);
    add("xfg-gm-weights", "General class X_{f,g}: lifted G_m action", "^{-m}u,\\lambda ^{-n}v\\right)",
        "verify_action(scaling (1,1,-2,-3)) on (x^2+y^2)*v - y^3*u - 1",
        "a G_m action on X_{f,g} with deg f = m, deg g = n", fg_weights);
    add("example-x22-descends", "Example: X_{2,2} over A^2_*", "extends to a locally nilpotent",
        "Derivation(x -> a^3/3, y -> a^3, u -> x*b - 1/4, v -> 2*y*b - 1).descends() on A_{2,2}",
        "delta is a derivation of A_{2,2}", x22_descends);
    add("example-x22-nilpotent", "Example: X_{2,2} over A^2_*", "extends to a locally nilpotent",
        "nilpotency_certificate(delta) on Q[x,y,u,v]", "delta is locally nilpotent", x22_nilpotent);
    add("example-x22-kernel-a", "Example: X_{2,2} over A^2_*", "with $a,b\\in \\ker (\\delta )$", "delta(a)",
        "delta(a) = 0", [](const ClaimContext& ctx) { auto e = x22(ctx); return x22_identity(ctx, e.a, Poly(), "delta(a)", "0"); });
    add("example-x22-kernel-b", "Example: X_{2,2} over A^2_*", "with $a,b\\in \\ker (\\delta )$", "delta(b)",
        "delta(b) = 0", [](const ClaimContext& ctx) { auto e = x22(ctx); return x22_identity(ctx, e.b, Poly(), "delta(b)", "0"); });
    add("example-x22-delta-slice-a", "Example: X_{2,2} over A^2_*", "\\delta (y+a+ab)=a^{3}", "delta(y + a + a*b) - a^3",
        "delta(y+a+ab) = a^3", [](const ClaimContext& ctx) {
            auto e = x22(ctx);
            return x22_identity(ctx, Poly::variable(Y) + e.a + e.a * e.b, e.a.pow(3), "delta(y+a+ab)", "a^3");
        });
    add("example-x22-delta-w", "Example: X_{2,2} over A^2_*", "\\delta (w)=b", "delta(w) - b", "delta(w) = b",
        [](const ClaimContext& ctx) { auto e = x22(ctx); return x22_identity(ctx, e.w, e.b, "delta(w)", "b"); });
    add("example-x22-unit-ideal", "Example: X_{2,2} over A^2_*", "(a^{3},b)A_{2,2}=A_{2,2}", "unit_ideal_test(A_{2,2}, [a^3, b])",
        "(a^3, b) is the unit ideal", x22_unit);
    add("example-x22-cocycle-identity", "Example: X_{2,2} over A^2_*",
        "\\frac{y+a+ab}{a^{3}}-\\frac{w}{b}=\\frac{1}{a^{3}b}", "normal form of b*(y+a+ab) - a^3*w - 1 in A_{2,2}",
        "(y+a+ab)/a^3 - w/b = 1/(a^3 b)", x22_cocycle_identity);
    add("example-x22-class-display", "Example: X_{2,2} over A^2_*", "=\\frac{1}{a^{3}b}",
        "class_in_coordinates((y+a+ab)/a^3 - w/b, a, b)", "class of a^-3 b^-1", x22_class_display);
    add("example-x22-class-sentence", "Example: X_{2,2} over A^2_*", "corresponding to the \\v{C}ech cocycle $a^{-3}b$",
        "class_in_coordinates((y+a+ab)/a^3 - w/b, a, b) against class_of(a^-3 b)", "class of a^-3 b",
        x22_class_sentence);
    add("example-x22-cocycle-x3y", "Before the Example on X_{2,2}", "x^{-3}y$", "is_coboundary(x^-3*y)",
        "X_{2,2} is the bundle of x^-3 y", x22_x3y);
    return c;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
    static const std::vector<Claim> registry = build_registry();
    return registry;
}

std::uint64_t claim_seed(std::uint64_t seed, const std::string& id) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : id) h = (h ^ ch) * 1099511628211ULL;
    return (seed ^ h) % 1000000007ULL;
}

ClaimRecord run_claim(const Claim& claim, const ClaimContext& ctx) {
    ClaimRecord r;
    r.id = claim.id;
    r.anchor = claim.anchor;
    r.invocation = claim.invocation;
    r.expected = claim.expected;
    r.seed = claim_seed(ctx.seed, claim.id);
    ClaimContext local = ctx;
    local.seed = r.seed;
    auto start = std::chrono::steady_clock::now();
    try {
        auto o = claim.run(local);
        r.actual = o.actual;
        r.check = o.check;
        r.residuals = o.residuals;
        r.symbolic = o.symbolic;
        r.oracle = o.oracle;
        r.points = o.points;
        if (o.symbolic && o.oracle && *o.symbolic != *o.oracle) {
            r.status = ClaimStatus::fail;
            r.actual = "engine error: symbolic and point verdicts disagree; " + r.actual;
        } else {
            r.status = o.agrees ? ClaimStatus::pass : ClaimStatus::discrepancy;
        }
    } catch (const std::exception& e) {
        r.status = ClaimStatus::fail;
        r.actual = std::string("engine error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

Report verify_paper(const ClaimContext& ctx, const std::vector<std::string>& only, unsigned jobs) {
    const auto& reg = claim_registry();
    std::vector<const Claim*> selected;
    std::set<std::string> wanted(only.begin(), only.end());
    for (const auto& id : wanted)
        if (std::none_of(reg.begin(), reg.end(), [&](const Claim& c) { return c.id == id; }))
            throw DomainError("unknown claim id '" + id + "'");
    for (const auto& c : reg)
        if (wanted.empty() || wanted.count(c.id)) selected.push_back(&c);

    Report rep;
    rep.seed = ctx.seed;
    rep.records.resize(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < selected.size();) rep.records[i] = run_claim(*selected[i], ctx);
    };
    unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(selected.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rep;
}

std::string report_table(const Report& r, bool timings) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-32s %-23s %-4s %-6s %s", "CLAIM", "STATUS", "SYM", "ORACLE", "ACTUAL");
    out << line << (timings ? "  [s]" : "") << "\n";
    auto verdict = [](const std::optional<bool>& v) { return v ? (*v ? "ok" : "no") : "-"; };
    for (const auto& c : r.records) {
        std::snprintf(line, sizeof line, "%-32s %-23s %-4s %-6s ", c.id.c_str(), to_string(c.status).c_str(),
                      verdict(c.symbolic), verdict(c.oracle));
        out << line << c.actual;
        if (timings) {
            std::snprintf(line, sizeof line, "  [%.3f]", c.seconds);
            out << line;
        }
        out << "\n";
        for (const auto& res : c.residuals) out << std::string(33, ' ') << "residual: " << res << "\n";
    }
    out << r.records.size() << " claims: " << r.count(ClaimStatus::pass) << " pass, "
        << r.count(ClaimStatus::discrepancy) << " discrepancy-documented, " << r.count(ClaimStatus::fail)
        << " fail (seed " << r.seed << ")\n";
    return out.str();
}

}  // namespace gawb
