#include "gawb/lnd.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "gawb/error.hpp"
#include "gawb/parse.hpp"

namespace gawb {
namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::size_t var_index(const Presentation& p, VarId v) {
    auto it = std::find(p.vars().begin(), p.vars().end(), v);
    if (it == p.vars().end()) throw DomainError("'" + var_name(v) + "' is not a variable of the presentation");
    return static_cast<std::size_t>(it - p.vars().begin());
}

// Ring map on a polynomial lift: each variable of `from` goes to images[i].
RingElement map_lift(const Poly& lift, const Presentation& from, const std::vector<RingElement>& images,
                     const PresentationPtr& target) {
    std::map<VarId, Poly> m;
    for (std::size_t i = 0; i < from.vars().size(); ++i) m.emplace(from.vars()[i], images[i].rep());
    for (std::size_t i = 0; i < from.inverse_vars().size(); ++i) {
        if (!lift.involves(from.inverse_vars()[i])) continue;
        RingElement h = RingElement::from_rep(target, from.inverted()[i].substitute(m));
        m.emplace(from.inverse_vars()[i], h.inverse().rep());
    }
    return RingElement::from_rep(target, lift.substitute(m));
}

// Moves an element to another presentation that has all of its variables,
// matching variables by name.
RingElement transport(const RingElement& e, const PresentationPtr& target) {
    const auto& src = *e.presentation();
    std::vector<RingElement> ids;
    for (VarId v : src.vars()) ids.push_back(target->element(Poly::variable(v)));
    return map_lift(e.rep(), src, ids, target);
}

std::vector<Poly> extra_inverted(const ActionMap& a) {
    const auto& all = a.ext->inverted();
    return {all.begin() + static_cast<std::ptrdiff_t>(a.base->inverted().size()), all.end()};
}

bool is_inverted_var(const Presentation& p, VarId v) {
    auto idx = p.inverted_index(Poly::variable(v));
    return idx.has_value();
}

std::string fresh_name(const std::string& stem, const std::vector<std::string>& taken) {
    std::string n = stem + "p";
    while (std::find(taken.begin(), taken.end(), n) != taken.end()) n += "p";
    return n;
}

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<int> num(-10, 10), den(1, 5);
    int a = num(rng);
    while (nonzero && a == 0) a = num(rng);
    return Rational(a, den(rng));
}

}  // namespace

// ---------------------------------------------------------------------------
// Derivation

Derivation::Derivation(PresentationPtr pres, const std::map<VarId, RingElement>& images) : pres_(std::move(pres)) {
    for (VarId v : pres_->vars()) {
        auto it = images.find(v);
        images_.push_back(it == images.end() ? pres_->element(Poly()) : pres_->embed(it->second));
    }
    for (const auto& [v, img] : images) (void)var_index(*pres_, v);
    for (std::size_t i = 0; i < pres_->inverted().size(); ++i) {
        Poly s = Poly::variable(pres_->inverse_vars()[i]);
        inverse_images_.push_back(-(s * s) * lift_derivative(pres_->inverted()[i]));
    }
    for (const auto& r : pres_->relations()) {
        residuals_.push_back(RingElement::from_rep(pres_, lift_derivative(r)));
        if (!residuals_.back().is_zero()) descends_ = false;
    }
}

Derivation Derivation::parse(PresentationPtr pres, std::string_view text) {
    std::string body = trim(text);
    if (body.rfind("der:", 0) == 0) body = body.substr(4);
    std::map<VarId, RingElement> images;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t end = body.find(';', start);
        if (end == std::string::npos) end = body.size();
        std::string item = trim(std::string_view(body).substr(start, end - start));
        start = end + 1;
        if (item.empty()) continue;
        auto arrow = item.find("->");
        if (arrow == std::string::npos) throw ParseError("expected 'var -> image' in '" + item + "'", 0);
        std::string name = trim(std::string_view(item).substr(0, arrow));
        VarId v = var(name);
        if (!pres->has_var(v)) throw ParseError("unknown variable '" + name + "'", 0);
        if (images.count(v)) throw ParseError("image of '" + name + "' given twice", 0);
        images.emplace(v, pres->element(trim(std::string_view(item).substr(arrow + 2))));
    }
    return Derivation(std::move(pres), images);
}

std::string Derivation::str() const {
    std::string s = "der: ";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += "; ";
        s += var_name(pres_->vars()[i]) + " -> " + images_[i].str();
    }
    return s;
}

const RingElement& Derivation::image(VarId v) const { return images_[var_index(*pres_, v)]; }

Poly Derivation::lift_derivative(const Poly& p) const {
    Poly out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        VarId v = pres_->vars()[i];
        if (images_[i].is_zero() || !p.involves(v)) continue;
        out += p.derivative(v) * images_[i].rep();
    }
    for (std::size_t i = 0; i < inverse_images_.size(); ++i) {
        VarId s = pres_->inverse_vars()[i];
        if (!p.involves(s) || inverse_images_[i].is_zero()) continue;
        out += p.derivative(s) * inverse_images_[i];
    }
    return out;
}

RingElement Derivation::apply_to_lift(const Poly& lift) const {
    return RingElement::from_rep(pres_, lift_derivative(lift));
}

RingElement Derivation::apply(const RingElement& e) const {
    if (!descends_) throw DomainError("derivation does not descend to the quotient");
    return apply_to_lift(pres_->embed(e).rep());
}

bool descends_to_quotient(const Derivation& d) { return d.descends(); }

NilpotencyCertificate nilpotency_certificate(const Derivation& d, int bound) {
    const auto& pres = d.presentation();
    NilpotencyCertificate cert;
    if (d.descends()) {
        cert.ring = "quotient";
        for (VarId v : pres->vars()) {
            RingElement e = pres->element(Poly::variable(v));
            int k = 0;
            while (!e.is_zero()) {
                if (k == bound) throw NotNilpotent(var_name(v), bound);
                e = d.apply(e);
                ++k;
            }
            cert.index[v] = k;
        }
        return cert;
    }
    if (!pres->inverted().empty())
        throw DomainError("derivation does not descend and the presentation is localized");
    // Iterate on the free polynomial ring.
    cert.ring = "free";
    auto free = Presentation::make(pres->var_names(), {}, {}, pres->order(), pres->groebner_options());
    std::map<VarId, Poly> images;
    for (VarId v : pres->vars()) images[v] = d.image(v).rep();
    for (VarId v : pres->vars()) {
        Poly e = Poly::variable(v);
        int k = 0;
        while (!e.is_zero()) {
            if (k == bound) throw NotNilpotent(var_name(v), bound);
            Poly next;
            for (const auto& [w, img] : images)
                if (!img.is_zero() && e.involves(w)) next += e.derivative(w) * img;
            e = std::move(next);
            ++k;
        }
        cert.index[v] = k;
    }
    return cert;
}

bool is_slice(const Derivation& d, const RingElement& s) {
    return d.apply(s) == d.presentation()->element(Poly(1));
}

bool kernel_member(const Derivation& d, const RingElement& e) { return d.apply(e).is_zero(); }

// ---------------------------------------------------------------------------
// Actions

RingElement ActionMap::apply(const RingElement& e) const {
    return map_lift(base->embed(e).rep(), *base, images, ext);
}

std::vector<RingElement> ActionMap::specialize(const std::map<VarId, RingElement>& values,
                                               const PresentationPtr& target) const {
    std::vector<RingElement> sub;
    for (VarId v : ext->vars()) {
        auto it = values.find(v);
        if (it != values.end())
            sub.push_back(target->embed(it->second));
        else
            sub.push_back(target->element(Poly::variable(v)));
    }
    std::vector<RingElement> out;
    for (const auto& img : images) out.push_back(map_lift(img.rep(), *ext, sub, target));
    return out;
}

std::string ActionMap::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < images.size(); ++i) s += (i ? ", " : "") + images[i].str();
    return s + ")";
}

ActionMap exponential(const Derivation& d, std::string_view param, int bound) {
    if (!d.descends()) throw DomainError("exponential needs a derivation that descends");
    auto cert = nilpotency_certificate(d, bound);
    const auto& base = d.presentation();
    std::string name(param);
    if (base->has_var(var(name))) throw DomainError("parameter '" + name + "' clashes with a variable");
    ActionMap a;
    a.base = base;
    a.ext = base->extend({name});
    a.params = {var(name)};
    RingElement t = a.ext->element(Poly::variable(var(name)));
    for (VarId v : base->vars()) {
        RingElement term = base->element(Poly::variable(v));
        RingElement tk = a.ext->element(Poly(1));
        Rational fact(1);
        RingElement sum = a.ext->element(Poly());
        for (int k = 0; k < cert.index[v]; ++k) {
            if (k > 0) {
                term = d.apply(term);
                tk = tk * t;
                fact *= Rational(k);
            }
            sum += (tk * a.ext->embed(term)).scaled(fact.reciprocal());
        }
        a.images.push_back(sum);
    }
    return a;
}

ActionMap scaling_action(const PresentationPtr& base, const std::map<VarId, int>& weights, std::string_view param) {
    std::string name(param);
    if (base->has_var(var(name))) throw DomainError("parameter '" + name + "' clashes with a variable");
    ActionMap a;
    a.base = base;
    VarId lam = var(name);
    a.ext = base->extend({name}, {Poly::variable(lam)});
    a.params = {lam};
    for (VarId v : base->vars()) {
        auto it = weights.find(v);
        int w = it == weights.end() ? 0 : it->second;
        a.images.push_back(a.ext->element(Poly::variable(v) * Poly::term(Rational(1), Monomial::of(lam, w))));
    }
    return a;
}

ActionMap compose(const ActionMap& outer, const ActionMap& inner) {
    if (outer.base->str() != inner.base->str()) throw DomainError("actions live on different presentations");
    std::vector<std::string> names;
    for (VarId p : outer.params) names.push_back(var_name(p));
    for (VarId p : inner.params) {
        if (std::find(outer.params.begin(), outer.params.end(), p) != outer.params.end())
            throw DomainError("parameter '" + var_name(p) + "' used by both actions");
        names.push_back(var_name(p));
    }
    auto inv = extra_inverted(outer);
    auto inv2 = extra_inverted(inner);
    inv.insert(inv.end(), inv2.begin(), inv2.end());
    ActionMap c;
    c.base = outer.base;
    c.ext = outer.base->extend(names, inv);
    c.params = outer.params;
    c.params.insert(c.params.end(), inner.params.begin(), inner.params.end());
    std::vector<RingElement> sub;
    for (VarId v : outer.ext->vars()) {
        if (c.base->has_var(v))
            sub.push_back(transport(inner.images[var_index(*c.base, v)], c.ext));
        else
            sub.push_back(c.ext->element(Poly::variable(v)));
    }
    for (const auto& img : outer.images) c.images.push_back(map_lift(img.rep(), *outer.ext, sub, c.ext));
    return c;
}

bool same_action(const ActionMap& a, const ActionMap& b) {
    if (a.base->str() != b.base->str() || a.images.size() != b.images.size()) return false;
    for (VarId p : b.params)
        if (!a.ext->has_var(p)) return false;
    for (std::size_t i = 0; i < a.images.size(); ++i)
        if (!(transport(b.images[i], a.ext) == a.images[i])) return false;
    return true;
}

std::string GroupLaw::str() const {
    switch (kind) {
        case Kind::additive: return "additive";
        case Kind::multiplicative: return "multiplicative";
        case Kind::semidirect: return "semidirect(d=" + std::to_string(d) + ")";
    }
    return "?";
}

ActionReport verify_action(const ActionMap& a, const GroupLaw& law, std::uint64_t seed, int points) {
    using K = GroupLaw::Kind;
    const std::size_t want = law.kind == K::semidirect ? 2 : 1;
    if (a.params.size() != want) throw DomainError("law " + law.str() + " needs " + std::to_string(want) + " parameters");
    const bool has_lambda = law.kind != K::additive;
    if (has_lambda && !is_inverted_var(*a.ext, a.params[0]))
        throw DomainError("multiplicative parameter '" + var_name(a.params[0]) + "' must be inverted");

    const auto& base = a.base;
    ActionReport rep;
    auto residual_check = [&](const std::string& name, const std::vector<RingElement>& lhs,
                              const std::vector<RingElement>& rhs) {
        ActionCheck c{name, true, {}};
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            RingElement r = lhs[i] - rhs[i];
            if (!r.is_zero()) c.pass = false;
            c.residuals.emplace_back(var_name(base->vars()[i]), r.is_zero() ? "" : r.str());
        }
        rep.checks.push_back(std::move(c));
    };

    // Identity.
    std::map<VarId, RingElement> unit;
    if (law.kind == K::additive) unit[a.params[0]] = base->element(Poly());
    if (has_lambda) unit[a.params[0]] = base->element(Poly(1));
    if (law.kind == K::semidirect) unit[a.params[1]] = base->element(Poly());
    std::vector<RingElement> id;
    for (VarId v : base->vars()) id.push_back(base->element(Poly::variable(v)));
    residual_check("identity", a.specialize(unit, base), id);

    // Composition in a ring with two copies of the parameters.
    std::vector<std::string> taken = a.ext->var_names();
    std::vector<std::string> names, primed;
    for (VarId p : a.params) names.push_back(var_name(p));
    for (VarId p : a.params) {
        primed.push_back(fresh_name(var_name(p), taken));
        taken.push_back(primed.back());
    }
    std::vector<std::string> all = names;
    all.insert(all.end(), primed.begin(), primed.end());
    std::vector<Poly> inv;
    if (has_lambda) inv = {Poly::variable(a.params[0]), Poly::variable(var(primed[0]))};
    auto e2 = base->extend(all, inv);
    auto P = [&](const std::string& n) { return e2->element(Poly::variable(var(n))); };

    std::vector<RingElement> fg;
    for (const auto& img : a.images) fg.push_back(transport(img, e2));
    std::map<VarId, RingElement> to_primed;
    for (std::size_t k = 0; k < a.params.size(); ++k) to_primed[a.params[k]] = P(primed[k]);
    std::vector<RingElement> fgp = a.specialize(to_primed, e2);

    std::vector<RingElement> sub;
    for (VarId v : e2->vars())
        sub.push_back(base->has_var(v) ? fg[var_index(*base, v)] : e2->element(Poly::variable(v)));
    std::vector<RingElement> lhs;
    for (const auto& f : fgp) lhs.push_back(map_lift(f.rep(), *e2, sub, e2));

    std::map<VarId, RingElement> prod;
    switch (law.kind) {
        case K::additive: prod[a.params[0]] = P(names[0]) + P(primed[0]); break;
        case K::multiplicative: prod[a.params[0]] = P(names[0]) * P(primed[0]); break;
        case K::semidirect:
            prod[a.params[0]] = P(names[0]) * P(primed[0]);
            prod[a.params[1]] = P(names[1]) + P(names[0]).pow(law.d) * P(primed[1]);
            break;
    }
    residual_check("composition", lhs, a.specialize(prod, e2));

    // Relations map into the ideal of the extended ring.
    {
        ActionCheck c{"relations", true, {}};
        for (std::size_t k = 0; k < base->relations().size(); ++k) {
            RingElement r = map_lift(base->relations()[k], *base, a.images, a.ext);
            if (!r.is_zero()) c.pass = false;
            c.residuals.emplace_back("relation " + std::to_string(k + 1), r.is_zero() ? "" : r.str());
        }
        rep.checks.push_back(std::move(c));
    }
    rep.symbolic_pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const ActionCheck& c) { return c.pass; });

    // Evaluation oracle: compose the point maps numerically.
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    rep.oracle_pass = true;
    auto eval_map = [&](const RationalPoint& p, const std::vector<Rational>& g) {
        RationalPoint full = p;
        for (std::size_t k = 0; k < a.params.size(); ++k) full[a.params[k]] = g[k];
        RationalPoint q;
        for (std::size_t i = 0; i < a.images.size(); ++i) q[base->vars()[i]] = evaluate(a.images[i], full);
        return q;
    };
    for (int k = 0; k < points; ++k) {
        RationalPoint p = sample_point(*base, seed + static_cast<std::uint64_t>(k));
        std::vector<Rational> g, gp;
        for (std::size_t j = 0; j < a.params.size(); ++j) {
            bool nz = has_lambda && j == 0;
            g.push_back(random_rational(rng, nz));
            gp.push_back(random_rational(rng, nz));
        }
        std::vector<Rational> e(a.params.size(), Rational(0));
        if (has_lambda) e[0] = Rational(1);
        std::vector<Rational> gg(a.params.size());
        switch (law.kind) {
            case K::additive: gg[0] = g[0] + gp[0]; break;
            case K::multiplicative: gg[0] = g[0] * gp[0]; break;
            case K::semidirect:
                gg[0] = g[0] * gp[0];
                gg[1] = g[1] + g[0].pow(law.d) * gp[1];
                break;
        }
        RationalPoint q = eval_map(p, g);
        bool ok = eval_map(p, e) == p;
        for (const auto& r : base->relations()) ok = ok && r.evaluate(q).is_zero();
        ok = ok && eval_map(q, gp) == eval_map(p, gg);
        if (!ok) rep.oracle_pass = false;
        ++rep.points;
    }
    return rep;
}

}  // namespace gawb
