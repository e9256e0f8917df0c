#include "gawb/poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "gawb/error.hpp"

namespace gawb {
namespace {

struct SymbolTable {
    std::shared_mutex mutex;
    std::unordered_map<std::string, VarId> ids;
    std::deque<std::string> names;
};

SymbolTable& symbols() {
    static SymbolTable table;
    return table;
}

}  // namespace

VarId var(std::string_view name) {
    auto& t = symbols();
    std::string key(name);
    {
        std::shared_lock lock(t.mutex);
        if (auto it = t.ids.find(key); it != t.ids.end()) return it->second;
    }
    std::unique_lock lock(t.mutex);
    if (auto it = t.ids.find(key); it != t.ids.end()) return it->second;
    auto id = static_cast<VarId>(t.names.size());
    t.names.push_back(key);
    t.ids.emplace(std::move(key), id);
    return id;
}

const std::string& var_name(VarId id) {
    auto& t = symbols();
    std::shared_lock lock(t.mutex);
    if (id >= t.names.size()) throw DomainError("unknown variable id " + std::to_string(id));
    return t.names[id];
}

bool is_identifier(std::string_view name) {
    if (name.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(name.front())) return false;
    return std::all_of(name.begin(), name.end(), [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(VarId v, int exponent) {
    Monomial m;
    if (exponent != 0) m.e_.emplace_back(v, exponent);
    return m;
}

Monomial Monomial::from_entries(std::span<const Entry> entries) {
    Monomial m;
    m.e_.assign(entries.begin(), entries.end());
    std::sort(m.e_.begin(), m.e_.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < m.e_.size();) {
        VarId v = m.e_[i].first;
        int e = 0;
        while (i < m.e_.size() && m.e_[i].first == v) e += m.e_[i++].second;
        if (e != 0) m.e_[out++] = {v, e};
    }
    m.e_.resize(out);
    return m;
}

int Monomial::exponent(VarId v) const {
    for (const auto& [x, e] : e_)
        if (x == v) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& entry : e_) d += entry.second;
    return d;
}

bool Monomial::is_regular() const {
    return std::all_of(e_.begin(), e_.end(), [](const Entry& x) { return x.second > 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (const auto& [v, e] : e_)
        if (other.exponent(v) < e) return false;
    for (const auto& [v, e] : other.e_)
        if (e < 0 && exponent(v) > e) return false;
    return true;
}

Monomial Monomial::without(VarId v) const {
    Monomial m;
    for (const auto& entry : e_)
        if (entry.first != v) m.e_.push_back(entry);
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
        if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
            m.e_.push_back(*a++);
        } else if (a == e_.end() || b->first < a->first) {
            m.e_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) m.e_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return m;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int k) const {
    Monomial m;
    if (k == 0) return m;
    m.e_ = e_;
    for (auto& entry : m.e_) entry.second *= k;
    return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) terms_.push_back({Monomial{}, c});
}

Poly Poly::variable(VarId v) { return term(Rational(1), Monomial::of(v)); }

Poly Poly::term(const Rational& c, Monomial m) {
    Poly p;
    if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    Poly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool Poly::is_regular() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.is_regular(); });
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.mono < key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Rational();
}

std::vector<VarId> Poly::variables() const {
    std::vector<VarId> vs;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.mono.entries()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool Poly::involves(VarId v) const {
    return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono.exponent(v) != 0; });
}

int Poly::max_degree(VarId v) const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
        int e = t.mono.exponent(v);
        d = first ? e : std::max(d, e);
        first = false;
    }
    return d;
}

int Poly::min_degree(VarId v) const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
        int e = t.mono.exponent(v);
        d = first ? e : std::min(d, e);
        first = false;
    }
    return d;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Poly Poly::merge(const Poly& a, const Poly& b, bool subtract) {
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.terms().begin(), j = b.terms().begin();
    while (i != a.terms().end() || j != b.terms().end()) {
        if (j == b.terms().end() || (i != a.terms().end() && i->mono < j->mono)) {
            out.push_back(*i++);
        } else if (i == a.terms().end() || j->mono < i->mono) {
            out.push_back({j->mono, subtract ? -j->coeff : j->coeff});
            ++j;
        } else {
            Rational c = subtract ? i->coeff - j->coeff : i->coeff + j->coeff;
            if (!c.is_zero()) out.push_back({i->mono, c});
            ++i;
            ++j;
        }
    }
    Poly p;
    p.terms_ = std::move(out);
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return Poly::merge(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b) {
    if (b.is_zero()) return a;
    return Poly::merge(a, b, true);
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (b.size() == 1) return a.times_monomial(b.terms_[0].mono).scaled(b.terms_[0].coeff);
    if (a.size() == 1) return b.times_monomial(a.terms_[0].mono).scaled(a.terms_[0].coeff);
    std::vector<Poly::Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return Poly::from_terms(std::move(out));
}

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero()) return Poly();
    if (c.is_one()) return *this;
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

Poly Poly::times_monomial(const Monomial& m) const {
    if (m.is_one()) return *this;
    // Multiplying by a monomial is injective, but may reorder terms.
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono * m, t.coeff});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    Poly p;
    p.terms_ = std::move(out);
    return p;
}

Poly Poly::pow(int k) const {
    if (k < 0) return monomial_inverse().pow(-k);
    Poly result(1), base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Poly Poly::monomial_inverse() const {
    if (terms_.size() != 1) throw DomainError("only a single nonzero term can be inverted");
    return term(terms_[0].coeff.reciprocal(), terms_[0].mono.inverse());
}

Poly Poly::substitute(const std::map<VarId, Poly>& images) const {
    // Cache powers per (variable, exponent).
    std::map<std::pair<VarId, int>, Poly> cache;
    auto power = [&](VarId v, const Poly& img, int e) -> const Poly& {
        auto key = std::make_pair(v, e);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
        if (e < 0 && img.size() != 1)
            throw DomainError("Laurent substitution: '" + var_name(v) +
                              "' occurs with a negative exponent but its image is not a single term");
        return cache.emplace(key, img.pow(e)).first->second;
    };
    Poly result;
    for (const auto& t : terms_) {
        Poly acc = term(t.coeff, Monomial{});
        std::vector<Monomial::Entry> keep_entries;
        for (const auto& [v, e] : t.mono.entries()) {
            auto it = images.find(v);
            if (it == images.end()) {
                keep_entries.emplace_back(v, e);
            } else {
                acc = acc * power(v, it->second, e);
            }
        }
        acc = acc.times_monomial(Monomial::from_entries(keep_entries));
        result += acc;
    }
    return result;
}

Poly Poly::derivative(VarId v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int e = t.mono.exponent(v);
        if (e == 0) continue;
        out.push_back({t.mono * Monomial::of(v, -1), t.coeff * Rational(e)});
    }
    return from_terms(std::move(out));
}

Rational Poly::evaluate(const std::map<VarId, Rational>& point) const {
    Rational sum;
    for (const auto& t : terms_) {
        Rational prod = t.coeff;
        for (const auto& [v, e] : t.mono.entries()) {
            auto it = point.find(v);
            if (it == point.end()) throw DomainError("no value for variable '" + var_name(v) + "'");
            prod *= it->second.pow(e);
        }
        sum += prod;
    }
    return sum;
}

Poly Poly::coefficient_of(VarId v, int k) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.mono.exponent(v) == k) out.push_back({t.mono.without(v), t.coeff});
    return from_terms(std::move(out));
}

}  // namespace gawb
