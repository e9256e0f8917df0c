#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gawb/quotient.hpp"

namespace gawb {

/// A derivation of a presented algebra, given by the images of its variables.
/// Extended to inverted elements by d(1/h) = -d(h)/h^2.
class Derivation {
public:
    Derivation() = default;
    /// Variables missing from `images` are sent to 0.
    Derivation(PresentationPtr pres, const std::map<VarId, RingElement>& images);
    /// Text form `der: u -> x^2; v -> y^2; x -> 0; y -> 0` (the `der:` prefix is optional).
    static Derivation parse(PresentationPtr pres, std::string_view text);
    std::string str() const;

    const PresentationPtr& presentation() const { return pres_; }
    const RingElement& image(VarId v) const;

    /// Leibniz extension to a polynomial in the variables and inverse symbols,
    /// without reducing it first. Well defined on the quotient only when the
    /// derivation descends.
    RingElement apply_to_lift(const Poly& lift) const;
    /// Throws DomainError if the derivation does not descend.
    RingElement apply(const RingElement& e) const;

    bool descends() const { return descends_; }
    /// d(r) reduced modulo the relations, one per relation.
    const std::vector<RingElement>& relation_residuals() const { return residuals_; }

private:
    Poly lift_derivative(const Poly& p) const;

    PresentationPtr pres_;
    std::vector<RingElement> images_;  // one per presentation variable
    std::vector<Poly> inverse_images_; // d(s_i) as a polynomial lift
    std::vector<RingElement> residuals_;
    bool descends_ = true;
};

bool descends_to_quotient(const Derivation& d);

/// d^index(v) = 0 and d^(index-1)(v) != 0 for every variable v.
struct NilpotencyCertificate {
    std::map<VarId, int> index;
    /// "quotient" when iterated in the presented algebra, "free" when the
    /// derivation does not descend and was iterated in the polynomial ring.
    std::string ring;
};

/// Throws NotNilpotent when some generator survives `bound` iterations.
NilpotencyCertificate nilpotency_certificate(const Derivation& d, int bound = 64);

/// Pullback description of a family of ring maps depending on parameters:
/// images[i] is the image of base->vars()[i], living in `ext`, which adjoins
/// the parameters (and inverses of multiplicative ones) to the base.
struct ActionMap {
    PresentationPtr base;
    PresentationPtr ext;
    std::vector<VarId> params;
    std::vector<RingElement> images;

    RingElement apply(const RingElement& e) const;
    /// Images with parameters replaced by `values` (elements of `target`).
    std::vector<RingElement> specialize(const std::map<VarId, RingElement>& values,
                                        const PresentationPtr& target) const;
    std::string str() const;
};

/// exp(t d): v -> sum_k t^k d^k(v) / k!.
ActionMap exponential(const Derivation& d, std::string_view param = "t", int bound = 64);
/// v -> lambda^w(v) * v.
ActionMap scaling_action(const PresentationPtr& base, const std::map<VarId, int>& weights,
                         std::string_view param = "lam");
/// Point map p -> outer(inner(p)); parameters of both maps are kept.
ActionMap compose(const ActionMap& outer, const ActionMap& inner);
/// True if both maps give identical images once embedded in a common ring.
bool same_action(const ActionMap& a, const ActionMap& b);

bool is_slice(const Derivation& d, const RingElement& s);
bool kernel_member(const Derivation& d, const RingElement& e);

struct GroupLaw {
    enum class Kind { additive, multiplicative, semidirect };
    Kind kind = Kind::additive;
    int d = 0;
    static GroupLaw additive() { return {Kind::additive, 0}; }
    static GroupLaw multiplicative() { return {Kind::multiplicative, 0}; }
    static GroupLaw semidirect(int d) { return {Kind::semidirect, d}; }
    std::string str() const;
};

struct ActionCheck {
    std::string name;  // identity, composition, relations
    bool pass = false;
    /// Per generator: lhs - rhs (empty string when zero).
    std::vector<std::pair<std::string, std::string>> residuals;
};

struct ActionReport {
    std::vector<ActionCheck> checks;
    bool symbolic_pass = false;
    /// Evaluation oracle: composition compared at sampled points with random
    /// parameter values.
    int points = 0;
    bool oracle_pass = false;
    bool agree() const { return symbolic_pass == oracle_pass; }
};

/// Identity, composition under `law`, and preservation of the relations.
/// Composition convention: F(g', X)[X := F(g, X)] = F(g*g', X), i.e.
/// applying g first then g' on points equals applying g*g'. Parameters are
/// taken in order: (t), (lambda), (lambda, t).
ActionReport verify_action(const ActionMap& a, const GroupLaw& law, std::uint64_t seed = 1, int points = 20);

}  // namespace gawb
