#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gawb/groebner.hpp"
#include "gawb/poly.hpp"
#include "gawb/term_order.hpp"

namespace gawb {

class Presentation;
class RingElement;
using PresentationPtr = std::shared_ptr<const Presentation>;
using RationalPoint = std::map<VarId, Rational>;

/// Q[vars]/(relations) localized at the listed `inverted` elements.
///
/// The localization is realized by one auxiliary variable s_i per inverted
/// element h_i together with the relation s_i*h_i - 1; the Groebner basis of
/// that enlarged ideal gives canonical representatives. Both bases are built
/// lazily and cached.
class Presentation : public std::enable_shared_from_this<Presentation> {
public:
    static PresentationPtr make(std::vector<std::string> vars, std::vector<Poly> relations,
                                std::vector<Poly> inverted = {}, std::optional<TermOrder> order = {},
                                GroebnerOptions options = {});

    /// Text form: `vars: x,y,u,v; invert: x; relations: x^2*v - y^2*u - 1`.
    /// Optional clause `order: degrevlex(v,u,x,y)` or `order: lex(...)`.
    static PresentationPtr parse(std::string_view text, GroebnerOptions options = {});
    std::string str() const;

    const std::vector<VarId>& vars() const { return vars_; }
    std::vector<std::string> var_names() const;
    bool has_var(VarId v) const;
    const std::vector<Poly>& relations() const { return relations_; }
    const std::vector<Poly>& inverted() const { return inverted_; }
    /// Auxiliary inverse symbols s_i, one per inverted element.
    const std::vector<VarId>& inverse_vars() const { return inverse_vars_; }
    const TermOrder& order() const { return order_; }
    const GroebnerOptions& groebner_options() const { return options_; }

    const GroebnerBasis& relation_basis() const;
    const GroebnerBasis& local_basis() const;

    /// Adjoins variables, inverted elements and relations; elements of this
    /// presentation embed into the result through embed().
    PresentationPtr extend(const std::vector<std::string>& new_vars, const std::vector<Poly>& new_inverted = {},
                           const std::vector<Poly>& new_relations = {}) const;
    PresentationPtr with_options(GroebnerOptions options) const;

    RingElement element(const Poly& p) const;
    RingElement element(std::string_view text) const;
    RingElement embed(const RingElement& e) const;

    /// Index of `h` among the inverted elements (up to a nonzero constant).
    std::optional<std::size_t> inverted_index(const Poly& h) const;

private:
    Presentation() = default;

    std::vector<VarId> vars_;
    std::vector<Poly> relations_;
    std::vector<Poly> inverted_;
    std::vector<VarId> inverse_vars_;
    TermOrder order_;
    TermOrder local_order_;
    GroebnerOptions options_;

    mutable std::once_flag base_once_, local_once_;
    mutable std::optional<GroebnerBasis> base_, local_;
};

/// An element of a presentation, held as its canonical representative in
/// Q[vars, s_1..s_r] modulo the localized ideal. Equality is structural.
class RingElement {
public:
    RingElement() = default;
    /// Laurent input is accepted when every negatively-exponented variable is
    /// itself an inverted element.
    RingElement(PresentationPtr pres, const Poly& p);

    static RingElement from_rep(PresentationPtr pres, const Poly& rep);

    const PresentationPtr& presentation() const { return pres_; }
    const Poly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_regular() const;

    /// rep = numerator / prod h_i^{powers_i} with numerator in Q[vars].
    struct Fraction {
        Poly numerator;
        std::vector<int> powers;
    };
    Fraction as_fraction() const;
    /// The element as a Laurent polynomial in the variables, if every
    /// denominator is a monomial.
    std::optional<Poly> as_laurent() const;
    std::string str() const;

    RingElement operator-() const;
    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
    RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
    RingElement scaled(const Rational& c) const;
    RingElement pow(int k) const;
    /// Throws DomainError if the element is not a unit.
    RingElement inverse() const;
    std::optional<RingElement> try_inverse() const;

    friend bool operator==(const RingElement& a, const RingElement& b);

private:
    PresentationPtr pres_;
    Poly rep_;
};

/// Canonical representative (elements are always kept canonical).
RingElement normal_form(const RingElement& e);
/// Throws DomainError for mismatched presentations.
bool equals_mod(const RingElement& a, const RingElement& b);

struct UnitIdealResult {
    bool unit = false;
    /// 1 = sum element_coeffs[i]*elements[i] + sum relation_coeffs[k]*relations[k].
    std::vector<Poly> element_coeffs;
    std::vector<Poly> relation_coeffs;
    /// Expands the certificate; equals 1 exactly when `unit`.
    Poly expand(const std::vector<Poly>& elements, const std::vector<Poly>& relations) const;
};

/// Decides 1 in (elements) + (relations) in the unlocalized ring.
UnitIdealResult unit_ideal_test(const Presentation& pres, const std::vector<Poly>& elements);
/// Elements must have no denominators.
UnitIdealResult unit_ideal_test(const std::vector<RingElement>& elements);

enum class Smoothness { SmoothEverywhere, SmoothOffPuncture, Inconclusive };
std::string to_string(Smoothness s);

struct SmoothnessResult {
    Smoothness verdict = Smoothness::Inconclusive;
    std::vector<Poly> jacobian_ideal;
    /// For SmoothOffPuncture: the power k found for each puncture variable.
    std::map<VarId, int> powers;
};

/// Jacobian criterion. Assumes the relations form a complete intersection.
SmoothnessResult smoothness_check(const Presentation& pres, const std::vector<VarId>& puncture, int power_bound = 12);

/// Deterministic rational point on a single-relation presentation.
RationalPoint sample_point(const Presentation& pres, std::uint64_t seed, int budget = 1000);
/// Exact value; throws DomainError if an inverted element vanishes at pt.
Rational evaluate(const RingElement& e, const RationalPoint& pt);

/// Ring map sending pres.vars()[i] to images[i] in `target`.
RingElement substitute(const RingElement& e, const std::vector<RingElement>& images, const PresentationPtr& target);

/// Rewrites `e` as a Laurent polynomial in new coordinates coords[k] =
/// (name, defining polynomial) by lex elimination. Returns nullopt if the
/// numerator is not a polynomial in the coordinates or a denominator is not
/// a monomial in them.
std::optional<Poly> express_in_coordinates(const RingElement& e,
                                           const std::vector<std::pair<std::string, Poly>>& coords);

}  // namespace gawb
