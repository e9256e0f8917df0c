#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gawb/lnd.hpp"
#include "gawb/quotient.hpp"

namespace gawb {

/// Class in H^1 of the punctured plane for the cover {x != 0}, {y != 0}:
/// coefficients of the basis monomials x^-i y^-j with i, j >= 1.
struct CocycleClass {
    std::map<std::pair<int, int>, Rational> coeffs;

    bool trivial() const { return coeffs.empty(); }
    /// Representative cocycle sum c * x^-i * y^-j.
    Poly representative(VarId x, VarId y) const;
    std::string str() const;
    friend bool operator==(const CocycleClass&, const CocycleClass&) = default;
};

/// Projection onto the doubly negative monomials. Throws DomainError if `g`
/// involves variables other than x and y.
CocycleClass class_of(const Poly& g, VarId x, VarId y);
inline CocycleClass class_of(const Poly& g) { return class_of(g, var("x"), var("y")); }

struct CoboundaryResult {
    bool coboundary = false;
    /// g = plus - minus + class part; plus has no negative y exponent
    /// (regular on {x != 0}), minus no negative x exponent (regular on {y != 0}).
    Poly plus;
    Poly minus;
    Poly class_part;
};
CoboundaryResult is_coboundary(const Poly& g, VarId x, VarId y);
inline CoboundaryResult is_coboundary(const Poly& g) { return is_coboundary(g, var("x"), var("y")); }

/// g = p * x^-m * y^-n with deg_x p < m, deg_y p < n, p != 0.
struct NormalFormMNP {
    int m = 0;
    int n = 0;
    Poly p;

    /// Validates the degree bounds; throws DomainError.
    static NormalFormMNP make(int m, int n, const Poly& p);
    std::string str() const;
};

/// Throws DomainError for the trivial class.
NormalFormMNP normal_form_mnp(const CocycleClass& c);

/// X(m,n,p): x^m v - y^n u - p with the derivation u -> x^m, v -> y^n.
struct BundlePresentation {
    PresentationPtr presentation;
    Derivation delta;
};
BundlePresentation bundle_from_cocycle(const NormalFormMNP& nf);
/// x^m*v - y^n*u - p over degrevlex(v,u,x,y).
PresentationPtr xmnp_presentation(int m, int n, const Poly& p, const std::string& fiber_var = "v");

/// f/den with f * (x,y)^k landing in the ring; alt_numerator/alt_denominator
/// is the second expression of the same element.
struct Witness {
    Poly numerator;
    Poly denominator;
    Poly alt_numerator;
    Poly alt_denominator;
    /// Smallest k with x^i y^j * numerator in (denominator, relation) for all
    /// i + j = k; -1 if none was found within the search bound.
    int k = -1;
    /// numerator * alt_denominator - alt_numerator * denominator is in the relation ideal.
    bool cross_ok = false;
    bool valid() const { return k >= 0 && cross_ok; }
    std::string str() const;
};

struct AffinenessStep {
    enum class Kind { case1, case2 };
    Kind kind = Kind::case1;
    int m = 0, n = 0;
    Poly p;  // data entering the step
    std::string relation;
    // case 1
    int a = 0;
    Poly q0;
    // case 2
    int b = 0;
    std::string substitution;  // e.g. "v = y^1*w"
    Witness witness;
    /// Case 1 only: the witness as printed in the source argument,
    /// (x^(m-a) - q0)/y, and whether it passes the same membership test.
    std::string printed_witness;
    bool printed_valid = false;
};

struct AffinenessCertificate {
    enum class Outcome { HypersurfaceInA4, UnitCertificate };
    Outcome outcome = Outcome::HypersurfaceInA4;
    std::vector<AffinenessStep> trace;
    Poly q0;  // terminal, for UnitCertificate
    bool all_witnesses_valid() const;
    std::string str() const;
};
std::string to_string(AffinenessCertificate::Outcome o);

struct AffinenessOptions {
    bool check_printed_witness = true;
    /// Largest k tried in the witness search; 0 means m + n + 2.
    int k_bound = 0;
};
AffinenessCertificate affineness_certificate(const NormalFormMNP& nf, const AffinenessOptions& opt = {});

/// Cocycle of a locally trivial action read off local slices a_i / d(a_i).
struct ActionCocycle {
    PresentationPtr local;            // localized at every d(a_i)
    std::vector<RingElement> deltas;  // d(a_i), in the base ring
    UnitIdealResult unit;
    /// (i, j, a_i/d(a_i) - a_j/d(a_j)) for i < j.
    std::vector<std::tuple<std::size_t, std::size_t, RingElement>> family;
    /// Whether each family member is killed by the derivation.
    std::vector<bool> invariant;
};
/// Throws DomainError if some d(a_i) is zero or not in the kernel, or if
/// the d(a_i) do not generate the unit ideal.
ActionCocycle action_cocycle(const Derivation& d, const std::vector<RingElement>& a_list);

/// Class of `c` after rewriting it as a Laurent polynomial in the two
/// coordinates; nullopt when that rewrite does not exist.
std::optional<CocycleClass> class_in_coordinates(const RingElement& c, const std::pair<std::string, Poly>& first,
                                                 const std::pair<std::string, Poly>& second);

}  // namespace gawb
