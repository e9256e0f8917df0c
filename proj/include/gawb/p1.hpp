#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gawb/poly.hpp"
#include "gawb/quotient.hpp"

namespace gawb {

/// (lambda, t) in G_m semidirect G_a with (l,t)(l',t') = (l l', t + l^d t').
struct GdElement {
    Rational lambda{1};
    Rational t{0};
    int d = 1;
    friend bool operator==(const GdElement&, const GdElement&) = default;
    std::string str() const;
};
/// Throws DomainError on mismatched d or lambda = 0.
GdElement gd_multiply(const GdElement& a, const GdElement& b);
GdElement gd_inverse(const GdElement& g);

/// T -> u^d T + phi(u) over the two charts of P^1.
struct TorsorTransition {
    int d = 1;
    Poly phi;  // Laurent in u
};

struct TorsorClass {
    int d = 1;
    /// Coefficients of u^1 .. u^(d-1).
    std::vector<Rational> coeffs;
    /// phi = class part + u^d*s0 - s1, s0 regular in u, s1 regular in 1/u.
    Poly s0, s1;
    bool trivial() const;
    std::string str() const;
};
/// Throws DomainError if phi involves a variable other than u.
TorsorClass torsor_class(const TorsorTransition& tt);

/// The transition of X_{m,n} viewed as a principal G_{m+n}-bundle over P^1.
struct SdmData {
    int m = 0, n = 0, d = 0;
    TorsorTransition torsor;
    std::string gd_transition;  // "(L,T) -> (u*L, u^d*T + u^m)"
};
SdmData sdm_from_mn(int m, int n);

struct NamedCheck {
    std::string name;
    bool pass = false;
    std::string residual;  // empty when pass
};

struct TrivializationReport {
    int m = 0, n = 0;
    std::vector<NamedCheck> checks;
    bool symbolic_pass = false;
    int points = 0;
    bool oracle_pass = false;
};
/// Transition identities and invariance of the chart coordinates in the
/// quotient ring of X_{m,n} localized at x and y, plus an evaluation oracle
/// at `points` sampled points.
TrivializationReport verify_trivialization(int m, int n, std::uint64_t seed = 1, int points = 20);

/// L~ = 1/L turns (L,T) -> (L/u, u^d T + u^m) into (L~,T) -> (u L~, u^d T + u^m).
bool generator_involution_check(int m, int n);

using Matrix2 = std::array<std::array<Poly, 2>, 2>;

Matrix2 mat_mul(const Matrix2& a, const Matrix2& b);
Poly mat_det(const Matrix2& a);
std::string mat_str(const Matrix2& a);
/// Entries are polynomials in `u` (negative exponents allowed).
Matrix2 parse_matrix(const std::string& text);

struct SplittingType {
    int a1 = 0, a2 = 0;  // a1 >= a2
    int hirzebruch() const { return a1 - a2; }
    friend bool operator==(const SplittingType&, const SplittingType&) = default;
    std::string str() const;
};

/// M = Q * D * P with Q invertible over C[1/u], P invertible over C[u] and
/// D = diag(u^e1, u^e2). The bundle with transition M splits as
/// O(-e1) + O(-e2).
struct BirkhoffSplit {
    Matrix2 Q, D, P;
    int e1 = 0, e2 = 0;
    SplittingType type;
    int steps = 0;
    static constexpr const char* product = "Q*D*P";
};
/// Throws DomainError if det M is not a nonzero monomial in u, and
/// BudgetExceeded if the column reduction does not finish.
BirkhoffSplit birkhoff_split(const Matrix2& M);

/// Checks Q*D*P = M, constant determinants of P and Q, and the one-sided
/// regularity of each factor.
bool birkhoff_valid(const Matrix2& M, const BirkhoffSplit& s);

struct H0Result {
    int j = 0;
    int dimension = 0;
    int degree_bound = 0;
    /// Each section is g = (g1, g2) in C[u]^2 with u^-j * M * g in C[1/u]^2.
    std::vector<std::pair<Poly, Poly>> basis;
};
/// Sections of E(j) where E has transition M and E(j) has u^-j * M.
H0Result h0_twist(const Matrix2& M, int j);

/// Splitting type read from the jumps of j -> h0(E(j)).
SplittingType splitting_from_h0(const Matrix2& M);

/// [[u^d, u^m],[0,1]].
Matrix2 extension_matrix(int d, int m);

}  // namespace gawb
