#include "gawb/cech.hpp"

#include <sstream>

#include "gawb/error.hpp"
#include "gawb/parse.hpp"

namespace gawb {
namespace {

Poly mono(VarId v, int e) { return Poly::term(Rational(1), Monomial::of(v, e)); }

void require_plane(const Poly& g, VarId x, VarId y) {
    for (VarId v : g.variables())
        if (v != x && v != y)
            throw DomainError("cocycle involves '" + var_name(v) + "', expected only " + var_name(x) + ", " +
                              var_name(y));
}

// Smallest k such that x^i y^j * f lies in `ideal` for every i + j = k.
int witness_power(const Poly& f, const GroebnerBasis& ideal, VarId x, VarId y, int bound) {
    for (int k = 0; k <= bound; ++k) {
        bool all = true;
        for (int i = 0; i <= k && all; ++i) all = ideal.contains(f * mono(x, i) * mono(y, k - i));
        if (all) return k;
    }
    return -1;
}

struct WitnessRing {
    Poly relation;
    TermOrder order;
};

Witness make_witness(const WitnessRing& ring, Poly num, Poly den, Poly alt_num, Poly alt_den, int bound) {
    const VarId x = var("x"), y = var("y");
    Witness w{std::move(num), std::move(den), std::move(alt_num), std::move(alt_den), -1, false};
    auto rel = GroebnerBasis::compute({ring.relation}, ring.order);
    w.cross_ok = rel.contains(w.numerator * w.alt_denominator - w.alt_numerator * w.denominator);
    auto ideal = GroebnerBasis::compute({ring.relation, w.denominator}, ring.order);
    w.k = witness_power(w.numerator, ideal, x, y, bound);
    return w;
}

std::string render(const Poly& p) { return to_string(p); }

}  // namespace

Poly CocycleClass::representative(VarId x, VarId y) const {
    Poly out;
    for (const auto& [ij, c] : coeffs) out += Poly::term(c, Monomial::of(x, -ij.first) * Monomial::of(y, -ij.second));
    return out;
}

std::string CocycleClass::str() const {
    if (coeffs.empty()) return "0";
    std::string s = "{";
    bool first = true;
    for (const auto& [ij, c] : coeffs) {
        if (!first) s += ", ";
        first = false;
        s += "(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "): " + c.str();
    }
    return s + "}";
}

CocycleClass class_of(const Poly& g, VarId x, VarId y) {
    require_plane(g, x, y);
    CocycleClass c;
    for (const auto& t : g.terms()) {
        int i = t.mono.exponent(x), j = t.mono.exponent(y);
        if (i < 0 && j < 0) c.coeffs[{-i, -j}] = t.coeff;
    }
    return c;
}

CoboundaryResult is_coboundary(const Poly& g, VarId x, VarId y) {
    require_plane(g, x, y);
    CoboundaryResult r;
    std::vector<Poly::Term> plus, minus, cls;
    for (const auto& t : g.terms()) {
        int i = t.mono.exponent(x), j = t.mono.exponent(y);
        if (j >= 0)
            plus.push_back(t);
        else if (i >= 0)
            minus.push_back({t.mono, -t.coeff});
        else
            cls.push_back(t);
    }
    r.plus = Poly::from_terms(std::move(plus));
    r.minus = Poly::from_terms(std::move(minus));
    r.class_part = Poly::from_terms(std::move(cls));
    r.coboundary = r.class_part.is_zero();
    return r;
}

NormalFormMNP NormalFormMNP::make(int m, int n, const Poly& p) {
    const VarId x = var("x"), y = var("y");
    if (m < 1 || n < 1) throw DomainError("m and n must be positive");
    if (p.is_zero()) throw DomainError("p must be nonzero");
    if (!p.is_regular()) throw DomainError("p must be a polynomial");
    require_plane(p, x, y);
    if (p.max_degree(x) >= m) throw DomainError("deg_x p must be < m");
    if (p.max_degree(y) >= n) throw DomainError("deg_y p must be < n");
    return NormalFormMNP{m, n, p};
}

std::string NormalFormMNP::str() const {
    return "(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ", p=" + render(p) + ")";
}

NormalFormMNP normal_form_mnp(const CocycleClass& c) {
    if (c.trivial()) throw DomainError("trivial class has no (m,n,p) normal form");
    int m = 0, n = 0;
    for (const auto& [ij, coeff] : c.coeffs) {
        m = std::max(m, ij.first);
        n = std::max(n, ij.second);
    }
    const VarId x = var("x"), y = var("y");
    Poly p;
    for (const auto& [ij, coeff] : c.coeffs)
        p += Poly::term(coeff, Monomial::of(x, m - ij.first) * Monomial::of(y, n - ij.second));
    return NormalFormMNP::make(m, n, p);
}

PresentationPtr xmnp_presentation(int m, int n, const Poly& p, const std::string& fiber_var) {
    const VarId x = var("x"), y = var("y"), u = var("u"), f = var(fiber_var);
    Poly rel = mono(x, m) * Poly::variable(f) - mono(y, n) * Poly::variable(u) - p;
    return Presentation::make({"x", "y", "u", fiber_var}, {rel}, {},
                              TermOrder::degrevlex({fiber_var, "u", "x", "y"}));
}

BundlePresentation bundle_from_cocycle(const NormalFormMNP& nf) {
    auto pres = xmnp_presentation(nf.m, nf.n, nf.p);
    std::map<VarId, RingElement> images{{var("u"), pres->element(mono(var("x"), nf.m))},
                                        {var("v"), pres->element(mono(var("y"), nf.n))}};
    return {pres, Derivation(pres, images)};
}

std::string Witness::str() const {
    return "(" + render(numerator) + ")/(" + render(denominator) + ") = (" + render(alt_numerator) + ")/(" +
           render(alt_denominator) + ")";
}

bool AffinenessCertificate::all_witnesses_valid() const {
    for (const auto& s : trace)
        if (!s.witness.valid()) return false;
    return true;
}

std::string to_string(AffinenessCertificate::Outcome o) {
    return o == AffinenessCertificate::Outcome::HypersurfaceInA4 ? "HypersurfaceInA4" : "UnitCertificate";
}

std::string AffinenessCertificate::str() const {
    std::ostringstream os;
    os << to_string(outcome);
    if (outcome == Outcome::UnitCertificate) os << " q0=" << render(q0);
    for (const auto& s : trace) {
        os << "\n  ";
        if (s.kind == AffinenessStep::Kind::case2)
            os << "case 2: b=" << s.b << ", " << s.substitution;
        else
            os << "case 1: a=" << s.a << ", q0=" << render(s.q0);
        os << "; witness " << s.witness.str() << ", k=" << s.witness.k;
    }
    return os.str();
}

AffinenessCertificate affineness_certificate(const NormalFormMNP& in, const AffinenessOptions& opt) {
    const auto nf = NormalFormMNP::make(in.m, in.n, in.p);
    const VarId x = var("x"), y = var("y"), u = var("u");
    AffinenessCertificate cert;
    if (!nf.p.constant_term().is_zero()) {
        cert.outcome = AffinenessCertificate::Outcome::HypersurfaceInA4;
        return cert;
    }
    int m = nf.m, n = nf.n;
    Poly p = nf.p;
    std::string fiber = "v";
    auto ring_for = [&](const std::string& f) {
        Poly rel = mono(x, m) * Poly::variable(f) - mono(y, n) * Poly::variable(u) - p;
        // lex with the fiber first makes x^m*fiber the leading term, coprime to powers of y
        return WitnessRing{rel, TermOrder::lex({f, "u", "x", "y"})};
    };
    const int bound = opt.k_bound > 0 ? opt.k_bound : nf.m + nf.n + 2;

    if (p.coefficient_of(y, 0).is_zero()) {
        AffinenessStep s;
        s.kind = AffinenessStep::Kind::case2;
        s.m = m, s.n = n, s.p = p;
        auto ring = ring_for(fiber);
        s.relation = render(ring.relation);
        s.b = p.min_degree(y);
        Poly q = p.times_monomial(Monomial::of(y, -s.b));
        s.substitution = "v = y^" + std::to_string(s.b) + "*w";
        s.witness = make_witness(ring, Poly::variable(var(fiber)), mono(y, s.b),
                                 mono(y, n - s.b) * Poly::variable(u) + q, mono(x, m), bound);
        cert.trace.push_back(std::move(s));
        n -= cert.trace.back().b;
        p = std::move(q);
        fiber = "w";
    }

    AffinenessStep s;
    s.kind = AffinenessStep::Kind::case1;
    s.m = m, s.n = n, s.p = p;
    auto ring = ring_for(fiber);
    s.relation = render(ring.relation);
    Poly p0 = p.coefficient_of(y, 0);
    s.a = p0.min_degree(x);
    s.q0 = p0.times_monomial(Monomial::of(x, -s.a));
    Poly p1 = (p - p0).times_monomial(Monomial::of(y, -1));
    s.witness = make_witness(ring, mono(x, m - s.a) * Poly::variable(var(fiber)) - s.q0, Poly::variable(y),
                             mono(y, n - 1) * Poly::variable(u) + p1, mono(x, s.a), bound);
    Poly printed = mono(x, m - s.a) - s.q0;
    s.printed_witness = "(" + render(printed) + ")/(y)";
    if (opt.check_printed_witness) {
        auto ideal = GroebnerBasis::compute({ring.relation, Poly::variable(y)}, ring.order);
        s.printed_valid = witness_power(printed, ideal, x, y, bound) >= 0;
    }
    cert.q0 = s.q0;
    cert.trace.push_back(std::move(s));
    cert.outcome = AffinenessCertificate::Outcome::UnitCertificate;
    return cert;
}

ActionCocycle action_cocycle(const Derivation& d, const std::vector<RingElement>& a_list) {
    const auto& pres = d.presentation();
    if (!d.descends()) throw DomainError("derivation does not descend to the quotient");
    if (a_list.empty()) throw DomainError("need at least one local slice numerator");
    ActionCocycle out;
    std::vector<Poly> reps;
    for (std::size_t i = 0; i < a_list.size(); ++i) {
        RingElement da = d.apply(pres->embed(a_list[i]));
        if (da.is_zero()) throw DomainError("d(a_" + std::to_string(i + 1) + ") is zero");
        if (!d.apply(da).is_zero()) throw DomainError("d(a_" + std::to_string(i + 1) + ") is not in the kernel");
        if (!da.is_regular()) throw DomainError("d(a_" + std::to_string(i + 1) + ") has denominators");
        reps.push_back(da.rep());
        out.deltas.push_back(da);
    }
    if (pres->inverted().empty()) {
        out.unit = unit_ideal_test(*pres, reps);
    } else {
        // Spell out the localization so the test runs in a plain quotient.
        std::vector<std::string> names = pres->var_names();
        std::vector<Poly> rels = pres->relations();
        for (std::size_t i = 0; i < pres->inverted().size(); ++i) {
            std::string s = "inv" + std::to_string(i);
            while (pres->has_var(var(s))) s += "_";
            names.push_back(s);
            rels.push_back(Poly::variable(var(s)) * pres->inverted()[i] - Poly(1));
        }
        auto flat = Presentation::make(names, rels, {}, std::nullopt, pres->groebner_options());
        out.unit = unit_ideal_test(*flat, reps);
    }
    if (!out.unit.unit) throw DomainError("the d(a_i) do not generate the unit ideal");
    out.local = pres->extend({}, reps);
    std::map<VarId, RingElement> images;
    for (VarId v : pres->vars()) images.emplace(v, out.local->embed(d.image(v)));
    Derivation dl(out.local, images);
    std::vector<RingElement> slices;
    for (std::size_t i = 0; i < a_list.size(); ++i)
        slices.push_back(out.local->embed(a_list[i]) * out.local->embed(out.deltas[i]).inverse());
    for (std::size_t i = 0; i < slices.size(); ++i)
        for (std::size_t j = i + 1; j < slices.size(); ++j) {
            RingElement c = slices[i] - slices[j];
            out.invariant.push_back(dl.apply(c).is_zero());
            out.family.emplace_back(i, j, std::move(c));
        }
    return out;
}

std::optional<CocycleClass> class_in_coordinates(const RingElement& c, const std::pair<std::string, Poly>& first,
                                                 const std::pair<std::string, Poly>& second) {
    auto e = express_in_coordinates(c, {first, second});
    if (!e) return std::nullopt;
    return class_of(*e, var(first.first), var(second.first));
}

}  // namespace gawb
