#include "gawb/groebner.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "gawb/error.hpp"

namespace gawb {
namespace {

constexpr std::size_t kMaxVars = 16;
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct DMono {
    std::array<std::int32_t, kMaxVars> e{};
    int deg = 0;
    bool operator==(const DMono&) const = default;
};

struct DTerm {
    DMono m;
    Rational c;
};

// Terms in strictly decreasing order.
using DPoly = std::vector<DTerm>;

struct Layout {
    std::vector<VarId> vars;
    const TermOrder* order = nullptr;

    std::strong_ordering cmp(const DMono& a, const DMono& b) const {
        return order->compare_dense(a.e.data(), b.e.data(), vars.size(), a.deg, b.deg);
    }
};

DMono mul(const DMono& a, const DMono& b) {
    DMono r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] + b.e[i];
    r.deg = a.deg + b.deg;
    return r;
}

bool divides(const DMono& a, const DMono& b) {
    if (a.deg > b.deg) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

DMono quotient(const DMono& b, const DMono& a) {
    DMono r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = b.e[i] - a.e[i];
    r.deg = b.deg - a.deg;
    return r;
}

DMono lcm(const DMono& a, const DMono& b) {
    DMono r;
    r.deg = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

bool coprime(const DMono& a, const DMono& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

Layout make_layout(std::vector<VarId> vars, const TermOrder& order) {
    if (vars.size() > kMaxVars)
        throw DomainError("Groebner computations support at most " + std::to_string(kMaxVars) + " variables");
    return Layout{std::move(vars), &order};
}

DPoly to_dense(const Poly& p, const Layout& L) {
    DPoly out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        DTerm d{{}, t.coeff};
        for (const auto& [v, e] : t.mono.entries()) {
            if (e < 0) throw DomainError("Groebner computations need polynomials without negative exponents");
            auto it = std::find(L.vars.begin(), L.vars.end(), v);
            if (it == L.vars.end()) throw Error("internal: variable missing from layout");
            d.m.e[static_cast<std::size_t>(it - L.vars.begin())] = e;
            d.m.deg += e;
        }
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end(), [&](const DTerm& a, const DTerm& b) { return L.cmp(a.m, b.m) > 0; });
    return out;
}

Poly from_dense(const DPoly& p, const Layout& L) {
    std::vector<Poly::Term> terms;
    terms.reserve(p.size());
    std::vector<Monomial::Entry> entries;
    for (const auto& t : p) {
        entries.clear();
        for (std::size_t i = 0; i < L.vars.size(); ++i)
            if (t.m.e[i]) entries.emplace_back(L.vars[i], t.m.e[i]);
        terms.push_back({Monomial::from_entries(entries), t.c});
    }
    return Poly::from_terms(std::move(terms));
}

// p[ps..] - c * m * g[gs..]
DPoly sub_scaled(const DPoly& p, std::size_t ps, const Rational& c, const DMono& m, const DPoly& g, std::size_t gs,
                 const Layout& L) {
    DPoly out;
    out.reserve(p.size() - ps + g.size() - gs);
    std::size_t i = ps, j = gs;
    while (i < p.size() || j < g.size()) {
        if (j == g.size()) {
            out.push_back(p[i++]);
            continue;
        }
        DMono gm = mul(m, g[j].m);
        if (i == p.size()) {
            out.push_back({gm, -(c * g[j].c)});
            ++j;
            continue;
        }
        auto o = L.cmp(p[i].m, gm);
        if (o > 0) {
            out.push_back(p[i++]);
        } else if (o < 0) {
            out.push_back({gm, -(c * g[j].c)});
            ++j;
        } else {
            Rational v = p[i].c - c * g[j].c;
            if (!v.is_zero()) out.push_back({gm, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

void scale_in_place(DPoly& p, const Rational& c) {
    for (auto& t : p) t.c *= c;
}

std::size_t find_divisor(const DMono& m, const std::vector<DPoly>& G) {
    for (std::size_t k = 0; k < G.size(); ++k)
        if (!G[k].empty() && divides(G[k][0].m, m)) return k;
    return npos;
}

// Full reduction; `on_step(k, c, m)` is told about every subtraction of c*m*G[k].
template <class OnStep>
DPoly reduce(DPoly p, const std::vector<DPoly>& G, const Layout& L, OnStep&& on_step) {
    DPoly r;
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t k = find_divisor(p[i].m, G);
        if (k == npos) {
            r.push_back(p[i]);
            ++i;
            continue;
        }
        Rational c = p[i].c / G[k][0].c;
        DMono m = quotient(p[i].m, G[k][0].m);
        on_step(k, c, m);
        p = sub_scaled(p, i + 1, c, m, G[k], 1, L);
        i = 0;
    }
    return r;
}

std::vector<VarId> collect_vars(const std::vector<Poly>& gens, const TermOrder& order) {
    std::vector<VarId> vs(order.priority().begin(), order.priority().end());
    for (const auto& g : gens)
        for (VarId v : g.variables()) vs.push_back(v);
    return order.arrange(std::move(vs));
}

// Extends the basis layout with variables of `p` that the basis never sees.
// The remainder does not depend on where they are placed, because leading
// monomials of the basis do not involve them.
Layout extended_layout(const Layout& base, const Poly& p) {
    std::vector<VarId> vars = base.vars;
    std::vector<VarId> extra;
    for (VarId v : p.variables())
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) extra.push_back(v);
    std::sort(extra.begin(), extra.end(), [](VarId a, VarId b) { return var_name(a) < var_name(b); });
    vars.insert(vars.end(), extra.begin(), extra.end());
    return make_layout(std::move(vars), *base.order);
}

}  // namespace

struct GroebnerBasis::Impl {
    TermOrder order;
    Layout layout;
    std::vector<DPoly> dense;
    std::vector<Poly> elements;
    std::vector<std::vector<Poly>> cofactors;
    std::vector<Poly> generators;
    std::size_t spairs = 0;
};

GroebnerBasis GroebnerBasis::compute(const std::vector<Poly>& generators, const TermOrder& order,
                                     const GroebnerOptions& options) {
    auto impl = std::make_shared<Impl>();
    impl->order = order;
    impl->generators = generators;
    impl->layout = make_layout(collect_vars(generators, order), impl->order);
    const Layout& L = impl->layout;
    const bool track = options.track_cofactors;
    const std::size_t ngen = generators.size();

    std::vector<DPoly> G;
    std::vector<std::vector<DPoly>> cof;

    struct Pair {
        std::size_t i, j;
        DMono lcm;
    };
    std::vector<Pair> pairs;

    bool unit = false;
    auto add = [&](DPoly p, std::vector<DPoly> c) {
        Rational inv = p[0].c.reciprocal();
        scale_in_place(p, inv);
        if (track)
            for (auto& q : c) scale_in_place(q, inv);
        std::size_t n = G.size();
        for (std::size_t k = 0; k < n; ++k)
            if (!G[k].empty()) pairs.push_back({k, n, lcm(G[k][0].m, p[0].m)});
        if (p[0].m.deg == 0) unit = true;
        G.push_back(std::move(p));
        cof.push_back(std::move(c));
    };

    // Reduces p against G, carrying its cofactor vector along.
    auto reduce_tracked = [&](DPoly p, std::vector<DPoly>& c) {
        return reduce(std::move(p), G, L, [&](std::size_t k, const Rational& a, const DMono& m) {
            if (!track) return;
            for (std::size_t g = 0; g < ngen; ++g)
                if (!cof[k][g].empty()) c[g] = sub_scaled(c[g], 0, a, m, cof[k][g], 0, L);
        });
    };

    for (std::size_t g = 0; g < ngen && !unit; ++g) {
        DPoly p = to_dense(generators[g], L);
        if (p.empty()) continue;
        std::vector<DPoly> c;
        if (track) {
            c.resize(ngen);
            c[g].push_back({DMono{}, Rational(1)});
        }
        DPoly r = reduce_tracked(std::move(p), c);
        if (!r.empty()) add(std::move(r), std::move(c));
    }

    while (!pairs.empty() && !unit) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k)
            if (L.cmp(pairs[k].lcm, pairs[best].lcm) < 0) best = k;
        Pair pr = pairs[best];
        pairs[best] = pairs.back();
        pairs.pop_back();
        const DPoly& f = G[pr.i];
        const DPoly& g = G[pr.j];
        if (coprime(f[0].m, g[0].m)) continue;
        if (++impl->spairs > options.spair_budget)
            throw BudgetExceeded("Groebner S-pair budget of " + std::to_string(options.spair_budget) + " exhausted");
        DMono mf = quotient(pr.lcm, f[0].m);
        DMono mg = quotient(pr.lcm, g[0].m);
        // Both are monic, so the leading terms cancel.
        DPoly s;
        for (std::size_t k = 1; k < f.size(); ++k) s.push_back({mul(mf, f[k].m), f[k].c});
        s = sub_scaled(s, 0, Rational(1), mg, g, 1, L);
        std::vector<DPoly> c;
        if (track) {
            c.resize(ngen);
            for (std::size_t q = 0; q < ngen; ++q) {
                for (const auto& t : cof[pr.i][q]) c[q].push_back({mul(mf, t.m), t.c});
                c[q] = sub_scaled(c[q], 0, Rational(1), mg, cof[pr.j][q], 0, L);
            }
        }
        DPoly r = reduce_tracked(std::move(s), c);
        if (!r.empty()) add(std::move(r), std::move(c));
    }

    // Minimalize, then interreduce.
    std::vector<std::size_t> keep;
    if (unit) {
        keep.push_back(G.size() - 1);
    } else {
        for (std::size_t k = 0; k < G.size(); ++k) {
            bool redundant = false;
            for (std::size_t l = 0; l < G.size() && !redundant; ++l) {
                if (l == k) continue;
                if (divides(G[l][0].m, G[k][0].m) && (!(G[l][0].m == G[k][0].m) || l < k)) redundant = true;
            }
            if (!redundant) keep.push_back(k);
        }
    }
    std::vector<DPoly> minimal;
    std::vector<std::vector<DPoly>> mcof;
    for (std::size_t k : keep) {
        minimal.push_back(G[k]);
        mcof.push_back(track ? cof[k] : std::vector<DPoly>{});
    }
    std::vector<DPoly> reduced(minimal.size());
    std::vector<std::vector<DPoly>> rcof(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<DPoly> others = minimal;
        others[k].clear();
        std::vector<DPoly> c = mcof[k];
        DPoly head{minimal[k][0]};
        DPoly tail(minimal[k].begin() + 1, minimal[k].end());
        DPoly r = reduce(std::move(tail), others, L, [&](std::size_t j, const Rational& a, const DMono& m) {
            if (!track) return;
            for (std::size_t g = 0; g < ngen; ++g)
                if (!mcof[j][g].empty()) c[g] = sub_scaled(c[g], 0, a, m, mcof[j][g], 0, L);
        });
        head.insert(head.end(), r.begin(), r.end());
        reduced[k] = std::move(head);
        rcof[k] = std::move(c);
    }
    std::vector<std::size_t> idx(reduced.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return L.cmp(reduced[a][0].m, reduced[b][0].m) < 0; });
    for (std::size_t k : idx) {
        impl->elements.push_back(from_dense(reduced[k], L));
        impl->dense.push_back(std::move(reduced[k]));
        if (track) {
            std::vector<Poly> row;
            for (const auto& q : rcof[k]) row.push_back(from_dense(q, L));
            impl->cofactors.push_back(std::move(row));
        }
    }
    return GroebnerBasis(std::move(impl));
}

const std::vector<Poly>& GroebnerBasis::elements() const { return impl_->elements; }
const TermOrder& GroebnerBasis::order() const { return impl_->order; }
const std::vector<std::vector<Poly>>& GroebnerBasis::cofactors() const { return impl_->cofactors; }
const std::vector<Poly>& GroebnerBasis::generators() const { return impl_->generators; }
std::size_t GroebnerBasis::spairs_reduced() const { return impl_->spairs; }

bool GroebnerBasis::is_unit() const {
    return impl_->elements.size() == 1 && impl_->elements[0].is_constant();
}

Poly GroebnerBasis::normal_form(const Poly& p) const {
    if (p.is_zero()) return p;
    Layout L = extended_layout(impl_->layout, p);
    DPoly r = reduce(to_dense(p, L), impl_->dense, L, [](std::size_t, const Rational&, const DMono&) {});
    return from_dense(r, L);
}

Division GroebnerBasis::divide(const Poly& p) const {
    Layout L = extended_layout(impl_->layout, p);
    std::vector<DPoly> q(impl_->dense.size());
    DPoly r = reduce(to_dense(p, L), impl_->dense, L, [&](std::size_t k, const Rational& c, const DMono& m) {
        DPoly one{{m, c}};
        q[k] = sub_scaled(q[k], 0, Rational(-1), DMono{}, one, 0, L);
    });
    Division out;
    for (const auto& d : q) out.quotients.push_back(from_dense(d, L));
    out.remainder = from_dense(r, L);
    return out;
}

MembershipResult ideal_member(const Poly& p, const GroebnerBasis& basis) {
    MembershipResult out;
    out.certificate = basis.divide(p);
    out.normal_form = out.certificate.remainder;
    out.member = out.normal_form.is_zero();
    return out;
}

}  // namespace gawb
