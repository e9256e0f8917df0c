// Randomized property suite. Each property runs on at least --cases inputs
// drawn from a fixed seed; the process exits nonzero if any case fails.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <random>

#include "gawb/cech.hpp"
#include "gawb/groebner.hpp"
#include "gawb/lnd.hpp"
#include "gawb/p1.hpp"
#include "gawb/parse.hpp"
#include "gawb/quotient.hpp"

using namespace gawb;

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational coeff(Rng& rng) {
    int a = uniform(rng, -5, 5);
    if (a == 0) a = 1;
    return Rational(a, uniform(rng, 1, 3));
}

// Random polynomial in `vars` with exponents in [lo, hi].
Poly random_poly(Rng& rng, const std::vector<VarId>& vars, int terms, int lo = 0, int hi = 2) {
    Poly p;
    int count = uniform(rng, 0, terms);
    for (int k = 0; k < count; ++k) {
        Monomial m;
        for (VarId v : vars) m = m * Monomial::of(v, uniform(rng, lo, hi));
        p += Poly::term(coeff(rng), m);
    }
    return p;
}

struct Property {
    std::string name;
    std::function<bool(Rng&, std::string&)> run;
};

const VarId X = var("x"), Y = var("y"), Z = var("z"), U = var("u"), V = var("v");

bool ring_axioms(Rng& rng, std::string& why) {
    std::vector<VarId> vs{X, Y, Z};
    Poly a = random_poly(rng, vs, 4), b = random_poly(rng, vs, 4), c = random_poly(rng, vs, 4);
    if (!(a + b == b + a && a * b == b * a)) return why = "commutativity", false;
    if (!((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c))) return why = "associativity", false;
    if (!(a * (b + c) == a * b + a * c)) return why = "distributivity", false;
    if (!(a - a == Poly() && a * Poly(1) == a && a + Poly() == a)) return why = "identities", false;
    // The same laws hold for canonical representatives in a quotient ring.
    static const auto pres = Presentation::parse("vars: x,y,u,v; relations: x^2*v - y*u - 1; order: degrevlex(v,u,x,y)");
    std::vector<VarId> qv{X, Y, U, V};
    auto e = [&] { return pres->element(random_poly(rng, qv, 3)); };
    RingElement p = e(), q = e(), r = e();
    if (!(p * q == q * p && (p * q) * r == p * (q * r) && p * (q + r) == p * q + p * r)) return why = "quotient laws", false;
    if (!(normal_form(p) == p)) return why = "canonical form", false;
    return true;
}

bool groebner_idempotence(Rng& rng, std::string& why) {
    std::vector<VarId> vs{X, Y, Z};
    std::vector<Poly> gens;
    for (int k = 0; k < 2; ++k) {
        Poly g = random_poly(rng, vs, 3);
        if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) gens.push_back(Poly::variable(X));
    auto order = uniform(rng, 0, 1) ? TermOrder::degrevlex({"x", "y", "z"}) : TermOrder::lex({"x", "y", "z"});
    GroebnerOptions opt;
    opt.spair_budget = 5000;
    GroebnerBasis G = GroebnerBasis::compute(gens, order, opt);
    GroebnerBasis H = GroebnerBasis::compute(G.elements(), order, opt);
    if (G.elements() != H.elements()) return why = "basis of a reduced basis changed", false;
    for (const auto& g : gens)
        if (!G.contains(g)) return why = "generator not in its ideal", false;
    Poly p = random_poly(rng, vs, 5, 0, 3);
    Poly r = G.normal_form(p);
    if (!(G.normal_form(r) == r)) return why = "normal form not idempotent", false;
    if (!G.contains(p - r)) return why = "p - NF(p) outside the ideal", false;
    return true;
}

bool class_linearity(Rng& rng, std::string& why) {
    std::vector<VarId> vs{X, Y};
    Poly g = random_poly(rng, vs, 5, -3, 2), h = random_poly(rng, vs, 5, -3, 2);
    Rational a = coeff(rng), b = coeff(rng);
    CocycleClass lhs = class_of(g.scaled(a) + h.scaled(b));
    CocycleClass rhs;
    for (const auto& [k, c] : class_of(g).coeffs) rhs.coeffs[k] += a * c;
    for (const auto& [k, c] : class_of(h).coeffs) rhs.coeffs[k] += b * c;
    std::erase_if(rhs.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
    if (!(lhs == rhs)) return why = "class(a g + b h) != a class(g) + b class(h)", false;
    return true;
}

bool coboundary_soundness(Rng& rng, std::string& why) {
    std::vector<VarId> vs{X, Y};
    Poly g = random_poly(rng, vs, 6, -3, 2);
    auto r = is_coboundary(g);
    if (!(r.plus - r.minus + r.class_part == g)) return why = "g != plus - minus + class part", false;
    if (!r.plus.is_zero() && r.plus.min_degree(Y) < 0) return why = "plus has a pole along y = 0", false;
    if (!r.minus.is_zero() && r.minus.min_degree(X) < 0) return why = "minus has a pole along x = 0", false;
    if (r.coboundary != r.class_part.is_zero() || r.coboundary != class_of(g).trivial())
        return why = "coboundary flag inconsistent", false;
    // Adding a coboundary never changes the class.
    Poly cob = random_poly(rng, vs, 3, 0, 2).times_monomial(Monomial::of(X, -uniform(rng, 0, 3))) -
               random_poly(rng, vs, 3, 0, 2).times_monomial(Monomial::of(Y, -uniform(rng, 0, 3)));
    if (!(class_of(g + cob) == class_of(g))) return why = "class not invariant under coboundaries", false;
    return true;
}

PresentationPtr xmn(int m, int n) { return xmnp_presentation(m, n, Poly(1)); }

// f * delta_{m,n} with f in C[x,y]: again locally nilpotent on X_{m,n}.
Derivation random_lnd(Rng& rng, const PresentationPtr& p, int m, int n) {
    Poly f = random_poly(rng, {X, Y}, 2);
    if (f.is_zero()) f = Poly(1);
    return Derivation(p, {{U, p->element(f * Poly::term(Rational(1), Monomial::of(X, m)))},
                          {V, p->element(f * Poly::term(Rational(1), Monomial::of(Y, n)))}});
}

bool leibniz(Rng& rng, std::string& why) {
    int m = uniform(rng, 1, 3), n = uniform(rng, 1, 3);
    auto p = xmn(m, n);
    auto d = random_lnd(rng, p, m, n);
    if (!d.descends()) return why = "kernel multiple does not descend", false;
    std::vector<VarId> vs{X, Y, U, V};
    auto a = p->element(random_poly(rng, vs, 3)), b = p->element(random_poly(rng, vs, 3));
    if (!(d.apply(a * b) == a * d.apply(b) + b * d.apply(a))) return why = "d(ab) != a d(b) + b d(a)", false;
    if (!(d.apply(a + b) == d.apply(a) + d.apply(b))) return why = "d not additive", false;
    // A derivation of the free ring.
    auto free = Presentation::parse("vars: x,y,z");
    Derivation e(free, {{X, free->element(random_poly(rng, {X, Y, Z}, 2))},
                        {Y, free->element(random_poly(rng, {X, Y, Z}, 2))},
                        {Z, free->element(random_poly(rng, {X, Y, Z}, 2))}});
    auto s = free->element(random_poly(rng, {X, Y, Z}, 3)), t = free->element(random_poly(rng, {X, Y, Z}, 3));
    if (!(e.apply(s * t) == s * e.apply(t) + t * e.apply(s))) return why = "free-ring Leibniz rule", false;
    return true;
}

bool exp_composition(Rng& rng, std::string& why) {
    int m = uniform(rng, 1, 3), n = uniform(rng, 1, 3);
    auto p = xmn(m, n);
    auto d = random_lnd(rng, p, m, n);
    auto a = exponential(d, "t");
    auto r = verify_action(a, GroupLaw::additive(), static_cast<std::uint64_t>(uniform(rng, 1, 1 << 30)), 3);
    if (!r.symbolic_pass) return why = "exp(s d) exp(t d) != exp((s+t) d)", false;
    if (!r.oracle_pass) return why = "oracle disagrees", false;
    return true;
}

// Random element of GL2(Q[w]) built from elementary factors, w = u or 1/u.
Matrix2 random_gl2(Rng& rng, int sign) {
    auto entry = [&] {
        Poly q;
        for (int k = 0; k <= uniform(rng, 0, 2); ++k)
            q += Poly::term(coeff(rng), Monomial::of(U, sign * uniform(rng, 0, 3)));
        return q;
    };
    Matrix2 I{{{Poly(1), Poly()}, {Poly(), Poly(1)}}};
    Matrix2 M = I;
    for (int k = 0; k < 3; ++k) {
        Matrix2 E = I;
        if (uniform(rng, 0, 1))
            E[0][1] = entry();
        else
            E[1][0] = entry();
        M = mat_mul(M, E);
    }
    Matrix2 S{{{Poly(coeff(rng)), Poly()}, {Poly(), Poly(coeff(rng))}}};
    return mat_mul(M, S);
}

bool birkhoff_validity(Rng& rng, std::string& why) {
    int e1 = uniform(rng, -4, 4), e2 = uniform(rng, -4, 4);
    Matrix2 D{{{Poly::term(Rational(1), Monomial::of(U, e1)), Poly()}, {Poly(), Poly::term(Rational(1), Monomial::of(U, e2))}}};
    Matrix2 M = mat_mul(mat_mul(random_gl2(rng, -1), D), random_gl2(rng, 1));
    auto s = birkhoff_split(M);
    if (!birkhoff_valid(M, s)) return why = "Q*D*P != M or a factor is not invertible", false;
    if (!mat_det(s.P).is_constant() || !mat_det(s.Q).is_constant()) return why = "non-constant determinant", false;
    SplittingType want{std::max(-e1, -e2), std::min(-e1, -e2)};
    if (!(s.type == want)) return why = "type " + s.type.str() + " != " + want.str(), false;
    if (!(splitting_from_h0(M) == s.type)) return why = "h0 scan disagrees", false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"randomized property suite"};
    std::uint64_t seed = 20240601;
    int cases = 200;
    app.add_option("--seed", seed, "base seed");
    app.add_option("--cases", cases, "cases per property")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    std::vector<Property> props{{"ring axioms", ring_axioms},
                                {"groebner idempotence", groebner_idempotence},
                                {"cocycle class linearity", class_linearity},
                                {"coboundary witness soundness", coboundary_soundness},
                                {"leibniz rule", leibniz},
                                {"exp composition", exp_composition},
                                {"birkhoff validity", birkhoff_validity}};
    bool all = true;
    for (std::size_t i = 0; i < props.size(); ++i) {
        Rng rng(seed + i);
        int passed = 0;
        std::string first_failure;
        for (int k = 0; k < cases; ++k) {
            std::string why;
            bool ok = false;
            try {
                ok = props[i].run(rng, why);
            } catch (const std::exception& e) {
                why = std::string("exception: ") + e.what();
            }
            if (ok)
                ++passed;
            else if (first_failure.empty())
                first_failure = "case " + std::to_string(k) + ": " + why;
        }
        bool ok = passed == cases;
        all = all && ok;
        std::cout << (ok ? "PASS " : "FAIL ") << props[i].name << ": " << passed << "/" << cases;
        if (!ok) std::cout << " (" << first_failure << ")";
        std::cout << "\n";
    }
    return all ? 0 : 1;
}
