#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "gawb/rational.hpp"

namespace gawb {

/// Interned variable name. Ids are process-wide and stable; the numeric order
/// of ids is only used as an internal canonical order, never for display.
using VarId = std::uint32_t;

VarId var(std::string_view name);
const std::string& var_name(VarId id);
bool is_identifier(std::string_view name);

/// Laurent monomial: a finite map variable -> nonzero exponent.
class Monomial {
public:
    using Entry = std::pair<VarId, int>;

    Monomial() = default;
    static Monomial of(VarId v, int exponent = 1);
    /// Sorts, merges repeated variables and drops zero exponents.
    static Monomial from_entries(std::span<const Entry> entries);

    std::span<const Entry> entries() const { return {e_.data(), e_.size()}; }
    int exponent(VarId v) const;
    int total_degree() const;
    bool is_one() const { return e_.empty(); }
    bool is_regular() const;
    /// Componentwise exponent comparison (meaningful for regular monomials).
    bool divides(const Monomial& other) const;
    /// The monomial with the factor in `v` removed.
    Monomial without(VarId v) const;

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(int k) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    boost::container::small_vector<Entry, 4> e_;
};

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms are kept sorted by the internal monomial order with no zero
/// coefficients, so structural equality is mathematical equality.
class Poly {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Poly() = default;
    Poly(const Rational& c);
    Poly(int c) : Poly(Rational(c)) {}

    static Poly variable(VarId v);
    static Poly variable(std::string_view name) { return variable(var(name)); }
    static Poly term(const Rational& c, Monomial m);
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_regular() const;
    Rational constant_term() const { return coefficient(Monomial{}); }
    Rational coefficient(const Monomial& m) const;

    /// Sorted list of variables that occur.
    std::vector<VarId> variables() const;
    bool involves(VarId v) const;
    /// Largest / smallest exponent of `v` over the terms (0 for absent terms).
    int max_degree(VarId v) const;
    int min_degree(VarId v) const;
    int total_degree() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rational& c) const;
    Poly times_monomial(const Monomial& m) const;

    /// Non-negative powers of anything; negative powers only of single terms.
    Poly pow(int k) const;
    /// Inverse of a single nonzero term; throws DomainError otherwise.
    Poly monomial_inverse() const;

    /// Ring homomorphism sending each listed variable to its image. A variable
    /// occurring with a negative exponent must be sent to a single term.
    Poly substitute(const std::map<VarId, Poly>& images) const;
    Poly derivative(VarId v) const;
    Rational evaluate(const std::map<VarId, Rational>& point) const;

    /// Coefficient of v^k, as a polynomial in the remaining variables.
    Poly coefficient_of(VarId v, int k) const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    static Poly merge(const Poly& a, const Poly& b, bool subtract);

    std::vector<Term> terms_;
};

}  // namespace gawb
