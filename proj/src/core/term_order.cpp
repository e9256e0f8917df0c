#include "gawb/term_order.hpp"

#include <algorithm>

#include "gawb/error.hpp"

namespace gawb {

TermOrder TermOrder::degrevlex(std::initializer_list<std::string_view> names) {
    std::vector<VarId> ids;
    for (auto n : names) ids.push_back(var(n));
    return TermOrder(Kind::degrevlex, std::move(ids));
}

TermOrder TermOrder::lex(std::initializer_list<std::string_view> names) {
    std::vector<VarId> ids;
    for (auto n : names) ids.push_back(var(n));
    return TermOrder(Kind::lex, std::move(ids));
}

TermOrder TermOrder::from_names(Kind kind, const std::vector<std::string>& names) {
    std::vector<VarId> ids;
    for (const auto& n : names) ids.push_back(var(n));
    return TermOrder(kind, std::move(ids));
}

std::vector<VarId> TermOrder::arrange(std::vector<VarId> vars) const {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::vector<VarId> out;
    for (VarId v : priority_)
        if (std::binary_search(vars.begin(), vars.end(), v)) out.push_back(v);
    std::vector<VarId> rest;
    for (VarId v : vars)
        if (std::find(priority_.begin(), priority_.end(), v) == priority_.end()) rest.push_back(v);
    std::sort(rest.begin(), rest.end(), [](VarId a, VarId b) { return var_name(a) < var_name(b); });
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
    std::vector<VarId> vs;
    for (const auto& e : a.entries()) vs.push_back(e.first);
    for (const auto& e : b.entries()) vs.push_back(e.first);
    vs = arrange(std::move(vs));
    std::vector<int> ea(vs.size()), eb(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        ea[i] = a.exponent(vs[i]);
        eb[i] = b.exponent(vs[i]);
    }
    return compare_dense(ea.begin(), eb.begin(), vs.size(), a.total_degree(), b.total_degree());
}

std::string TermOrder::describe() const {
    std::string s = kind_ == Kind::degrevlex ? "degrevlex(" : "lex(";
    for (std::size_t i = 0; i < priority_.size(); ++i) {
        if (i) s += ",";
        s += var_name(priority_[i]);
    }
    return s + ")";
}

Monomial leading_monomial(const Poly& p, const TermOrder& order) {
    if (p.is_zero()) throw DomainError("leading monomial of zero");
    const Monomial* best = &p.terms().front().mono;
    for (const auto& t : p.terms())
        if (order.compare(t.mono, *best) > 0) best = &t.mono;
    return *best;
}

}  // namespace gawb
