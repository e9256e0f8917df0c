#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "gawb/poly.hpp"
#include "gawb/term_order.hpp"

namespace gawb {

struct GroebnerOptions {
    /// Maximum number of S-polynomials reduced before BudgetExceeded.
    std::size_t spair_budget = 20000;
    /// Record, for each basis element, its expression in the input generators.
    bool track_cofactors = false;
};

/// Multivariate division of a polynomial by a basis: p = sum q_i g_i + r.
struct Division {
    std::vector<Poly> quotients;
    Poly remainder;
};

/// Reduced Groebner basis of an ideal of a polynomial ring over Q.
///
/// Generators must be regular (no negative exponents). Computed by
/// Buchberger's algorithm with the normal selection strategy and the
/// coprime-leading-monomial criterion. Elements are monic and sorted by
/// increasing leading monomial. Immutable; copies share state.
class GroebnerBasis {
public:
    static GroebnerBasis compute(const std::vector<Poly>& generators, const TermOrder& order,
                                 const GroebnerOptions& options = {});

    const std::vector<Poly>& elements() const;
    const TermOrder& order() const;
    std::size_t size() const { return elements().size(); }
    bool is_unit() const;

    /// Fully reduced remainder. Variables that do not occur in the basis are
    /// allowed and behave as free parameters.
    Poly normal_form(const Poly& p) const;
    Division divide(const Poly& p) const;
    bool contains(const Poly& p) const { return normal_form(p).is_zero(); }

    /// cofactors()[i][j] is the coefficient of generator j in element i.
    /// Empty unless tracking was requested.
    const std::vector<std::vector<Poly>>& cofactors() const;
    const std::vector<Poly>& generators() const;
    std::size_t spairs_reduced() const;

    struct Impl;

private:
    explicit GroebnerBasis(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Ideal membership with the normal form as witness.
struct MembershipResult {
    bool member = false;
    Poly normal_form;
    Division certificate;
};
MembershipResult ideal_member(const Poly& p, const GroebnerBasis& basis);

}  // namespace gawb
