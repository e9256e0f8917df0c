#include "gawb/quotient.hpp"

#include <algorithm>
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

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == '(') ++depth;
        if (i < s.size() && s[i] == ')') --depth;
        if (i == s.size() || (s[i] == sep && depth == 0)) {
            std::string piece = trim(s.substr(start, i - start));
            if (!piece.empty()) out.push_back(piece);
            start = i + 1;
        }
    }
    return out;
}

TermOrder parse_order(const std::string& text) {
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("order must look like degrevlex(v,u,x,y)", 0);
    std::string kind = trim(text.substr(0, open));
    auto names = split(std::string_view(text).substr(open + 1, close - open - 1), ',');
    if (kind == "degrevlex") return TermOrder::from_names(TermOrder::Kind::degrevlex, names);
    if (kind == "lex") return TermOrder::from_names(TermOrder::Kind::lex, names);
    throw ParseError("unknown term order '" + kind + "'", 0);
}

}  // namespace

// ---------------------------------------------------------------------------
// Presentation

PresentationPtr Presentation::make(std::vector<std::string> vars, std::vector<Poly> relations,
                                   std::vector<Poly> inverted, std::optional<TermOrder> order,
                                   GroebnerOptions options) {
    std::shared_ptr<Presentation> p(new Presentation());
    for (const auto& n : vars) {
        if (!is_identifier(n)) throw ParseError("invalid variable name '" + n + "'", 0);
        VarId id = var(n);
        if (std::find(p->vars_.begin(), p->vars_.end(), id) != p->vars_.end())
            throw DomainError("variable '" + n + "' declared twice");
        p->vars_.push_back(id);
    }
    auto check = [&](const Poly& q, const char* what) {
        for (VarId v : q.variables())
            if (!p->has_var(v)) throw DomainError(std::string(what) + " uses undeclared variable '" + var_name(v) + "'");
        if (!q.is_regular()) throw DomainError(std::string(what) + " must not have negative exponents");
    };
    for (auto& r : relations) {
        check(r, "relation");
        if (r.is_zero()) continue;
        p->relations_.push_back(std::move(r));
    }
    for (auto& h : inverted) {
        check(h, "inverted element");
        if (h.is_zero()) throw DomainError("cannot invert 0");
        p->inverted_.push_back(std::move(h));
    }
    for (std::size_t i = 0; i < p->inverted_.size(); ++i) p->inverse_vars_.push_back(var("_inv" + std::to_string(i)));
    p->order_ = order ? *order : TermOrder(TermOrder::Kind::degrevlex, p->vars_);
    // Full priority list: listed variables, the remaining declared ones, then inverses.
    std::vector<VarId> pri = p->order_.arrange(p->vars_);
    p->order_ = TermOrder(p->order_.kind(), pri);
    pri.insert(pri.end(), p->inverse_vars_.begin(), p->inverse_vars_.end());
    p->local_order_ = TermOrder(p->order_.kind(), pri);
    p->options_ = options;
    return p;
}

PresentationPtr Presentation::parse(std::string_view text, GroebnerOptions options) {
    std::vector<std::string> vars;
    std::vector<std::string> inv_text, rel_text;
    std::optional<TermOrder> order;
    bool have_vars = false;
    for (const auto& clause : split(text, ';')) {
        auto colon = clause.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'key: value' in '" + clause + "'", 0);
        std::string key = trim(std::string_view(clause).substr(0, colon));
        std::string_view val = std::string_view(clause).substr(colon + 1);
        if (key == "vars") {
            vars = split(val, ',');
            have_vars = true;
        } else if (key == "invert") {
            for (auto& s : split(val, ',')) inv_text.push_back(s);
        } else if (key == "relations" || key == "relation") {
            for (auto& s : split(val, ',')) rel_text.push_back(s);
        } else if (key == "order") {
            order = parse_order(trim(val));
        } else {
            throw ParseError("unknown clause '" + key + "'", 0);
        }
    }
    if (!have_vars) throw ParseError("presentation needs a 'vars:' clause", 0);
    std::vector<Poly> rels, invs;
    for (const auto& s : rel_text) rels.push_back(parse_poly(s, vars));
    for (const auto& s : inv_text) invs.push_back(parse_poly(s, vars));
    return make(vars, std::move(rels), std::move(invs), order, options);
}

std::string Presentation::str() const {
    std::ostringstream os;
    os << "vars: ";
    for (std::size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << var_name(vars_[i]);
    if (!inverted_.empty()) {
        os << "; invert: ";
        for (std::size_t i = 0; i < inverted_.size(); ++i) os << (i ? ", " : "") << to_string(inverted_[i], order_);
    }
    if (!relations_.empty()) {
        os << "; relations: ";
        for (std::size_t i = 0; i < relations_.size(); ++i)
            os << (i ? ", " : "") << to_string(relations_[i], order_);
    }
    os << "; order: " << order_.describe();
    return os.str();
}

std::vector<std::string> Presentation::var_names() const {
    std::vector<std::string> out;
    for (VarId v : vars_) out.push_back(var_name(v));
    return out;
}

bool Presentation::has_var(VarId v) const { return std::find(vars_.begin(), vars_.end(), v) != vars_.end(); }

const GroebnerBasis& Presentation::relation_basis() const {
    std::call_once(base_once_, [&] { base_ = GroebnerBasis::compute(relations_, order_, options_); });
    return *base_;
}

const GroebnerBasis& Presentation::local_basis() const {
    std::call_once(local_once_, [&] {
        if (inverted_.empty()) {
            local_ = relation_basis();
            return;
        }
        std::vector<Poly> gens = relations_;
        for (std::size_t i = 0; i < inverted_.size(); ++i)
            gens.push_back(Poly::variable(inverse_vars_[i]) * inverted_[i] - Poly(1));
        local_ = GroebnerBasis::compute(gens, local_order_, options_);
    });
    if (local_->is_unit() && !relation_basis().is_unit())
        throw DomainError("an inverted element is nilpotent modulo the relations");
    return *local_;
}

PresentationPtr Presentation::extend(const std::vector<std::string>& new_vars, const std::vector<Poly>& new_inverted,
                                     const std::vector<Poly>& new_relations) const {
    std::vector<std::string> vars = var_names();
    vars.insert(vars.end(), new_vars.begin(), new_vars.end());
    std::vector<Poly> rels = relations_;
    rels.insert(rels.end(), new_relations.begin(), new_relations.end());
    std::vector<Poly> invs = inverted_;
    invs.insert(invs.end(), new_inverted.begin(), new_inverted.end());
    std::vector<VarId> pri = order_.priority();
    for (const auto& n : new_vars) pri.push_back(var(n));
    return make(vars, std::move(rels), std::move(invs), TermOrder(order_.kind(), pri), options_);
}

PresentationPtr Presentation::with_options(GroebnerOptions options) const {
    return make(var_names(), relations_, inverted_, order_, options);
}

RingElement Presentation::element(const Poly& p) const { return RingElement(shared_from_this(), p); }

RingElement Presentation::element(std::string_view text) const { return element(parse_poly(text, var_names())); }

RingElement Presentation::embed(const RingElement& e) const {
    const auto& src = *e.presentation();
    for (VarId v : src.vars())
        if (!has_var(v)) throw DomainError("cannot embed: variable '" + var_name(v) + "' is missing");
    for (std::size_t i = 0; i < src.inverted().size(); ++i)
        if (i >= inverted_.size() || !(inverted_[i] == src.inverted()[i]))
            throw DomainError("cannot embed: inverted elements differ");
    return RingElement::from_rep(shared_from_this(), e.rep());
}

std::optional<std::size_t> Presentation::inverted_index(const Poly& h) const {
    if (h.is_zero()) return std::nullopt;
    for (std::size_t i = 0; i < inverted_.size(); ++i) {
        const Poly& g = inverted_[i];
        if (g.size() != h.size()) continue;
        Rational c = h.terms()[0].coeff / g.terms()[0].coeff;
        if (g.scaled(c) == h) return i;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(PresentationPtr pres, const Poly& p) : pres_(std::move(pres)) {
    if (!pres_) throw DomainError("element without presentation");
    std::vector<Poly::Term> terms;
    for (const auto& t : p.terms()) {
        std::vector<Monomial::Entry> entries;
        for (const auto& [v, e] : t.mono.entries()) {
            if (!pres_->has_var(v)) throw DomainError("variable '" + var_name(v) + "' is not in the presentation");
            if (e > 0) {
                entries.emplace_back(v, e);
                continue;
            }
            auto idx = pres_->inverted_index(Poly::variable(v));
            if (!idx || !pres_->inverted()[*idx].terms()[0].coeff.is_one())
                throw DomainError("'" + var_name(v) + "' has a negative exponent but is not inverted");
            entries.emplace_back(pres_->inverse_vars()[*idx], -e);
        }
        terms.push_back({Monomial::from_entries(entries), t.coeff});
    }
    rep_ = pres_->local_basis().normal_form(Poly::from_terms(std::move(terms)));
}

RingElement RingElement::from_rep(PresentationPtr pres, const Poly& rep) {
    RingElement e;
    e.pres_ = std::move(pres);
    e.rep_ = e.pres_->local_basis().normal_form(rep);
    return e;
}

bool RingElement::is_regular() const {
    for (VarId s : pres_->inverse_vars())
        if (rep_.involves(s)) return false;
    return true;
}

RingElement::Fraction RingElement::as_fraction() const {
    const auto& svars = pres_->inverse_vars();
    Fraction f;
    f.powers.assign(svars.size(), 0);
    for (const auto& t : rep_.terms())
        for (std::size_t i = 0; i < svars.size(); ++i) f.powers[i] = std::max(f.powers[i], t.mono.exponent(svars[i]));
    std::vector<std::vector<Poly>> hpow(svars.size());
    for (std::size_t i = 0; i < svars.size(); ++i) {
        hpow[i].push_back(Poly(1));
        for (int k = 1; k <= f.powers[i]; ++k) hpow[i].push_back(hpow[i].back() * pres_->inverted()[i]);
    }
    for (const auto& t : rep_.terms()) {
        Monomial m = t.mono;
        Poly term = Poly(t.coeff);
        for (std::size_t i = 0; i < svars.size(); ++i) {
            int k = m.exponent(svars[i]);
            m = m.without(svars[i]);
            term *= hpow[i][static_cast<std::size_t>(f.powers[i] - k)];
        }
        f.numerator += term.times_monomial(m);
    }
    if (!pres_->relations().empty()) f.numerator = pres_->relation_basis().normal_form(f.numerator);
    return f;
}

std::optional<Poly> RingElement::as_laurent() const {
    const auto& svars = pres_->inverse_vars();
    std::map<VarId, Poly> images;
    for (std::size_t i = 0; i < svars.size(); ++i) {
        if (!rep_.involves(svars[i])) continue;
        const Poly& h = pres_->inverted()[i];
        if (!h.is_monomial()) return std::nullopt;
        images.emplace(svars[i], h.monomial_inverse());
    }
    return images.empty() ? rep_ : rep_.substitute(images);
}

std::string RingElement::str() const {
    if (auto l = as_laurent()) return to_string(*l, pres_->order());
    Fraction f = as_fraction();
    std::string den;
    for (std::size_t i = 0; i < f.powers.size(); ++i) {
        if (f.powers[i] == 0) continue;
        if (!den.empty()) den += "*";
        den += "(" + to_string(pres_->inverted()[i], pres_->order()) + ")";
        if (f.powers[i] != 1) den += "^" + std::to_string(f.powers[i]);
    }
    return "(" + to_string(f.numerator, pres_->order()) + ")/" + den;
}

namespace {
void same_ring(const RingElement& a, const RingElement& b) {
    if (!a.presentation() || !b.presentation()) throw DomainError("uninitialized ring element");
    if (a.presentation() != b.presentation() && a.presentation()->str() != b.presentation()->str())
        throw DomainError("elements belong to different presentations");
}
}  // namespace

RingElement RingElement::operator-() const {
    RingElement r = *this;
    r.rep_ = -rep_;
    return r;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    same_ring(a, b);
    return RingElement::from_rep(a.pres_, a.rep_ + b.rep_);
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    same_ring(a, b);
    return RingElement::from_rep(a.pres_, a.rep_ - b.rep_);
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    same_ring(a, b);
    return RingElement::from_rep(a.pres_, a.rep_ * b.rep_);
}

RingElement RingElement::scaled(const Rational& c) const {
    RingElement r = *this;
    r.rep_ = c.is_zero() ? Poly() : rep_.scaled(c);
    return r;
}

RingElement RingElement::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RingElement result = RingElement::from_rep(pres_, Poly(1));
    RingElement base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

std::optional<RingElement> RingElement::try_inverse() const {
    if (rep_.is_zero()) return std::nullopt;
    const auto& svars = pres_->inverse_vars();
    // Single term built from inverted variables and inverse symbols.
    if (rep_.is_monomial()) {
        Poly inv(rep_.terms()[0].coeff.reciprocal());
        bool ok = true;
        for (const auto& [v, e] : rep_.terms()[0].mono.entries()) {
            auto s = std::find(svars.begin(), svars.end(), v);
            if (s != svars.end()) {
                inv *= pres_->inverted()[static_cast<std::size_t>(s - svars.begin())].pow(e);
                continue;
            }
            auto idx = pres_->inverted_index(Poly::variable(v));
            if (!idx || !pres_->inverted()[*idx].terms()[0].coeff.is_one()) {
                ok = false;
                break;
            }
            inv *= Poly::variable(svars[*idx]).pow(e);
        }
        if (ok) return RingElement::from_rep(pres_, inv);
    }
    // A listed inverted element up to a constant.
    if (auto idx = pres_->inverted_index(rep_))
        return RingElement::from_rep(pres_, Poly::variable(svars[*idx]).scaled(
                                                pres_->inverted()[*idx].terms()[0].coeff /
                                                rep_.terms()[0].coeff));
    // General case: a unit-ideal certificate for (rep) + local ideal.
    std::vector<Poly> gens{rep_};
    for (const auto& g : pres_->local_basis().elements()) gens.push_back(g);
    GroebnerOptions opt = pres_->groebner_options();
    opt.track_cofactors = true;
    std::vector<VarId> pri = pres_->order().priority();
    pri.insert(pri.end(), svars.begin(), svars.end());
    auto gb = GroebnerBasis::compute(gens, TermOrder(pres_->order().kind(), pri), opt);
    if (!gb.is_unit()) return std::nullopt;
    Poly c = gb.cofactors()[0][0].scaled(gb.elements()[0].constant_term().reciprocal());
    return RingElement::from_rep(pres_, c);
}

RingElement RingElement::inverse() const {
    auto inv = try_inverse();
    if (!inv) throw DomainError("element " + str() + " is not a unit");
    return *inv;
}

bool operator==(const RingElement& a, const RingElement& b) {
    same_ring(a, b);
    return a.rep_ == b.rep_;
}

RingElement normal_form(const RingElement& e) { return RingElement::from_rep(e.presentation(), e.rep()); }

bool equals_mod(const RingElement& a, const RingElement& b) { return a == b; }

// ---------------------------------------------------------------------------
// Unit ideal

Poly UnitIdealResult::expand(const std::vector<Poly>& elements, const std::vector<Poly>& relations) const {
    Poly s;
    for (std::size_t i = 0; i < element_coeffs.size() && i < elements.size(); ++i) s += element_coeffs[i] * elements[i];
    for (std::size_t k = 0; k < relation_coeffs.size() && k < relations.size(); ++k)
        s += relation_coeffs[k] * relations[k];
    return s;
}

UnitIdealResult unit_ideal_test(const Presentation& pres, const std::vector<Poly>& elements) {
    std::vector<Poly> gens = elements;
    gens.insert(gens.end(), pres.relations().begin(), pres.relations().end());
    GroebnerOptions opt = pres.groebner_options();
    opt.track_cofactors = true;
    auto gb = GroebnerBasis::compute(gens, pres.order(), opt);
    UnitIdealResult r;
    r.unit = gb.is_unit();
    if (r.unit) {
        Rational scale = gb.elements()[0].constant_term().reciprocal();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Poly c = gb.cofactors()[0][i].scaled(scale);
            (i < elements.size() ? r.element_coeffs : r.relation_coeffs).push_back(std::move(c));
        }
    }
    return r;
}

UnitIdealResult unit_ideal_test(const std::vector<RingElement>& elements) {
    if (elements.empty()) throw DomainError("unit ideal test needs at least one element");
    std::vector<Poly> polys;
    for (const auto& e : elements) {
        if (!e.is_regular()) throw DomainError("unit ideal test needs elements without denominators");
        polys.push_back(e.rep());
    }
    return unit_ideal_test(*elements.front().presentation(), polys);
}

// ---------------------------------------------------------------------------
// Smoothness

std::string to_string(Smoothness s) {
    switch (s) {
        case Smoothness::SmoothEverywhere: return "SmoothEverywhere";
        case Smoothness::SmoothOffPuncture: return "SmoothOffPuncture";
        case Smoothness::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

Poly determinant(std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly(1);
    if (n == 1) return m[0][0];
    Poly det;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][c] * determinant(std::move(minor));
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        combinations(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

SmoothnessResult smoothness_check(const Presentation& pres, const std::vector<VarId>& puncture, int power_bound) {
    const auto& rels = pres.relations();
    const auto& vars = pres.vars();
    SmoothnessResult out;
    std::vector<Poly> ideal = rels;
    if (!rels.empty()) {
        std::vector<std::vector<Poly>> jac(rels.size(), std::vector<Poly>(vars.size()));
        for (std::size_t i = 0; i < rels.size(); ++i)
            for (std::size_t j = 0; j < vars.size(); ++j) jac[i][j] = rels[i].derivative(vars[j]);
        std::vector<std::vector<std::size_t>> cols;
        std::vector<std::size_t> cur;
        combinations(vars.size(), rels.size(), 0, cur, cols);
        for (const auto& cs : cols) {
            std::vector<std::vector<Poly>> sub(rels.size());
            for (std::size_t i = 0; i < rels.size(); ++i)
                for (std::size_t c : cs) sub[i].push_back(jac[i][c]);
            Poly d = determinant(std::move(sub));
            if (!d.is_zero()) {
                ideal.push_back(d);
                out.jacobian_ideal.push_back(d);
            }
        }
    }
    auto gb = GroebnerBasis::compute(ideal, pres.order(), pres.groebner_options());
    if (gb.is_unit()) {
        out.verdict = Smoothness::SmoothEverywhere;
        return out;
    }
    if (puncture.empty()) return out;
    for (VarId z : puncture) {
        Poly zk(1);
        bool found = false;
        for (int k = 1; k <= power_bound; ++k) {
            zk *= Poly::variable(z);
            if (gb.contains(zk)) {
                out.powers[z] = k;
                found = true;
                break;
            }
        }
        if (!found) {
            out.powers.clear();
            return out;
        }
    }
    out.verdict = Smoothness::SmoothOffPuncture;
    return out;
}

// ---------------------------------------------------------------------------
// Points

RationalPoint sample_point(const Presentation& pres, std::uint64_t seed, int budget) {
    const auto& rels = pres.relations();
    if (rels.size() > 1) throw DomainError("point sampling supports at most one relation");
    std::optional<VarId> solve;
    Poly coeff, rest;
    if (!rels.empty()) {
        const Poly& r = rels[0];
        for (auto it = pres.vars().rbegin(); it != pres.vars().rend() && !solve; ++it) {
            VarId v = *it;
            if (r.max_degree(v) != 1 || r.min_degree(v) < 0) continue;
            Poly c = r.coefficient_of(v, 1);
            Poly c0 = r.coefficient_of(v, 0);
            if (!c.is_monomial() || c.involves(v) || c0.involves(v)) continue;
            solve = v;
            coeff = c;
            rest = c0;
        }
        if (!solve) throw DomainError("no variable occurs linearly with a monomial coefficient");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-10, 9), den(1, 5);
    for (int attempt = 0; attempt < budget; ++attempt) {
        RationalPoint pt;
        for (VarId v : pres.vars()) {
            if (solve && v == *solve) continue;
            int a = num(rng);
            if (a >= 0) ++a;  // skip 0
            pt[v] = Rational(a, den(rng));
        }
        if (solve) {
            Rational c = coeff.evaluate(pt);
            if (c.is_zero()) continue;
            pt[*solve] = -rest.evaluate(pt) / c;
        }
        bool ok = true;
        for (const auto& h : pres.inverted())
            if (h.evaluate(pt).is_zero()) ok = false;
        if (ok) return pt;
    }
    throw BudgetExceeded("no admissible point after " + std::to_string(budget) + " attempts");
}

Rational evaluate(const RingElement& e, const RationalPoint& pt) {
    const auto& pres = *e.presentation();
    RationalPoint full = pt;
    for (std::size_t i = 0; i < pres.inverted().size(); ++i) {
        Rational h = pres.inverted()[i].evaluate(pt);
        if (h.is_zero()) throw DomainError("inverted element vanishes at the point");
        full[pres.inverse_vars()[i]] = h.reciprocal();
    }
    return e.rep().evaluate(full);
}

// ---------------------------------------------------------------------------
// Substitution and coordinates

RingElement substitute(const RingElement& e, const std::vector<RingElement>& images, const PresentationPtr& target) {
    const auto& src = *e.presentation();
    if (images.size() != src.vars().size()) throw DomainError("substitution needs one image per variable");
    std::map<VarId, Poly> map;
    for (std::size_t i = 0; i < images.size(); ++i) map.emplace(src.vars()[i], target->embed(images[i]).rep());
    for (std::size_t i = 0; i < src.inverse_vars().size(); ++i) {
        if (!e.rep().involves(src.inverse_vars()[i])) continue;
        RingElement h = RingElement::from_rep(target, src.inverted()[i].substitute(map));
        map.emplace(src.inverse_vars()[i], h.inverse().rep());
    }
    return RingElement::from_rep(target, e.rep().substitute(map));
}

std::optional<Poly> express_in_coordinates(const RingElement& e,
                                           const std::vector<std::pair<std::string, Poly>>& coords) {
    const auto& pres = *e.presentation();
    std::vector<Poly> gens = pres.relations();
    std::vector<VarId> pri = pres.order().priority();
    std::vector<VarId> cvars;
    for (const auto& [name, def] : coords) {
        VarId c = var(name);
        if (pres.has_var(c)) throw DomainError("coordinate name '" + name + "' clashes with a variable");
        cvars.push_back(c);
        pri.push_back(c);
        gens.push_back(Poly::variable(c) - def);
    }
    GroebnerOptions opt = pres.groebner_options();
    auto gb = GroebnerBasis::compute(gens, TermOrder(TermOrder::Kind::lex, pri), opt);
    auto only_coords = [&](const Poly& p) {
        for (VarId v : p.variables())
            if (std::find(cvars.begin(), cvars.end(), v) == cvars.end()) return false;
        return true;
    };
    auto f = e.as_fraction();
    Poly num = gb.normal_form(f.numerator);
    if (!only_coords(num)) return std::nullopt;
    for (std::size_t i = 0; i < f.powers.size(); ++i) {
        if (f.powers[i] == 0) continue;
        Poly h = gb.normal_form(pres.inverted()[i]);
        if (!h.is_monomial() || !only_coords(h)) return std::nullopt;
        num *= h.monomial_inverse().pow(f.powers[i]);
    }
    return num;
}

}  // namespace gawb
