#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "gawb/poly.hpp"

namespace gawb {

/// Monomial order: degree reverse lexicographic or pure lexicographic with an
/// explicit variable priority (first = largest). Variables missing from the
/// priority list rank below all listed ones, ordered by name.
class TermOrder {
public:
    enum class Kind { degrevlex, lex };

    TermOrder() = default;
    TermOrder(Kind kind, std::vector<VarId> priority) : kind_(kind), priority_(std::move(priority)) {}
    static TermOrder degrevlex(std::initializer_list<std::string_view> names);
    static TermOrder lex(std::initializer_list<std::string_view> names);
    static TermOrder from_names(Kind kind, const std::vector<std::string>& names);

    Kind kind() const { return kind_; }
    const std::vector<VarId>& priority() const { return priority_; }

    /// `vars` rearranged into priority order (listed ones first, then by name).
    std::vector<VarId> arrange(std::vector<VarId> vars) const;

    /// Compares Laurent monomials; a total order that is multiplicative and,
    /// on regular monomials, a well-order.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

    /// Comparison on dense exponent vectors already laid out in priority order.
    template <class It>
    std::strong_ordering compare_dense(It a, It b, std::size_t n, int deg_a, int deg_b) const {
        if (kind_ == Kind::degrevlex) {
            if (deg_a != deg_b) return deg_a <=> deg_b;
            for (std::size_t i = n; i-- > 0;)
                if (a[i] != b[i]) return b[i] <=> a[i];
            return std::strong_ordering::equal;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }

    std::string describe() const;

private:
    Kind kind_ = Kind::degrevlex;
    std::vector<VarId> priority_;
};

/// Leading monomial of a nonzero polynomial under `order`.
Monomial leading_monomial(const Poly& p, const TermOrder& order);

}  // namespace gawb
