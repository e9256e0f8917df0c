#include "gawb/p1.hpp"

#include <algorithm>
#include <random>

#include "gawb/error.hpp"
#include "gawb/lnd.hpp"
#include "gawb/parse.hpp"

namespace gawb {
namespace {

const VarId U = var("u");

Poly upow(int e) { return Poly::term(Rational(1), Monomial::of(U, e)); }

void require_u_only(const Poly& p, const char* what) {
    for (VarId v : p.variables())
        if (v != U) throw DomainError(std::string(what) + " must be a Laurent polynomial in u, found '" + var_name(v) + "'");
}

int min_exp(const Poly& p) { return p.is_zero() ? 0 : p.min_degree(U); }
int max_exp(const Poly& p) { return p.is_zero() ? 0 : p.max_degree(U); }

// Exponent of a nonzero monomial determinant c*u^e.
int monomial_det_exponent(const Matrix2& M) {
    Poly det = mat_det(M);
    if (det.is_zero() || !det.is_monomial()) throw DomainError("determinant " + to_string(det) + " is not a nonzero monomial");
    return det.terms()[0].mono.exponent(U);
}

Matrix2 scalar(const Poly& s, const Matrix2& a) {
    Matrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = s * a[i][j];
    return r;
}

// Inverse of a matrix with monomial determinant, as Laurent entries.
Matrix2 laurent_inverse(const Matrix2& a) {
    Poly det = mat_det(a);
    if (det.is_zero() || !det.is_monomial()) throw DomainError("matrix is not invertible over Laurent polynomials");
    Poly inv = det.monomial_inverse();
    return Matrix2{{{a[1][1] * inv, -a[0][1] * inv}, {-a[1][0] * inv, a[0][0] * inv}}};
}

// Null space of a dense rational matrix, by reduced row echelon form.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> A, std::size_t cols) {
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < A.size(); ++c) {
        std::size_t p = row;
        while (p < A.size() && A[p][c].is_zero()) ++p;
        if (p == A.size()) continue;
        std::swap(A[p], A[row]);
        Rational inv = A[row][c].reciprocal();
        for (auto& x : A[row]) x *= inv;
        for (std::size_t r = 0; r < A.size(); ++r) {
            if (r == row || A[r][c].is_zero()) continue;
            Rational f = A[r][c];
            for (std::size_t k = c; k < cols; ++k) A[r][k] -= f * A[row][k];
        }
        pivot_of_col[c] = static_cast<int>(row);
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = Rational(1);
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -A[static_cast<std::size_t>(pivot_of_col[c])][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<int> num(-10, 10), den(1, 5);
    int a = num(rng);
    while (nonzero && a == 0) a = num(rng);
    return Rational(a, den(rng));
}

}  // namespace

// ---------------------------------------------------------------------------
// G_d and torsors

std::string GdElement::str() const { return "(" + lambda.str() + ", " + t.str() + ")"; }

GdElement gd_multiply(const GdElement& a, const GdElement& b) {
    if (a.d != b.d) throw DomainError("G_d elements with different d");
    if (a.lambda.is_zero() || b.lambda.is_zero()) throw DomainError("lambda must be nonzero");
    return {a.lambda * b.lambda, a.t + a.lambda.pow(a.d) * b.t, a.d};
}

GdElement gd_inverse(const GdElement& g) {
    if (g.lambda.is_zero()) throw DomainError("lambda must be nonzero");
    return {g.lambda.reciprocal(), -(g.lambda.pow(-g.d) * g.t), g.d};
}

bool TorsorClass::trivial() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.is_zero(); });
}

std::string TorsorClass::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i ? ", " : "") + coeffs[i].str();
    return s + ")";
}

TorsorClass torsor_class(const TorsorTransition& tt) {
    if (tt.d < 1) throw DomainError("d must be positive");
    require_u_only(tt.phi, "phi");
    TorsorClass c;
    c.d = tt.d;
    c.coeffs.assign(static_cast<std::size_t>(tt.d - 1), Rational(0));
    for (const auto& t : tt.phi.terms()) {
        int e = t.mono.exponent(U);
        if (e >= 1 && e < tt.d)
            c.coeffs[static_cast<std::size_t>(e - 1)] = t.coeff;
        else if (e >= tt.d)
            c.s0 += Poly::term(t.coeff, Monomial::of(U, e - tt.d));
        else
            c.s1 -= Poly::term(t.coeff, Monomial::of(U, e));
    }
    return c;
}

SdmData sdm_from_mn(int m, int n) {
    if (m < 1 || n < 1) throw DomainError("m and n must be positive");
    SdmData s{m, n, m + n, {m + n, upow(m)}, ""};
    s.gd_transition = "(L,T) -> (u*L, u^" + std::to_string(s.d) + "*T + u^" + std::to_string(m) + ")";
    return s;
}

TrivializationReport verify_trivialization(int m, int n, std::uint64_t seed, int points) {
    if (m < 1 || n < 1) throw DomainError("m and n must be positive");
    const int d = m + n;
    const VarId x = var("x"), y = var("y");
    Poly rel = parse_poly("x^" + std::to_string(m) + "*v - y^" + std::to_string(n) + "*u - 1");
    auto pres = Presentation::make({"x", "y", "u", "v"}, {rel}, {Poly::variable(x), Poly::variable(y)},
                                   TermOrder::degrevlex({"v", "u", "x", "y"}));
    auto E = [&](const std::string& s) { return pres->element(s); };
    RingElement u1 = E("y*x^-1"), T1 = E("x^" + std::to_string(n) + "*u"), L1 = E("x");
    RingElement u2 = E("x*y^-1"), T2 = E("y^" + std::to_string(m) + "*v"), L2 = E("y");

    Derivation delta(pres, {{var("u"), E("x^" + std::to_string(m))}, {var("v"), E("y^" + std::to_string(n))}});
    ActionMap ga = exponential(delta, "t");
    ActionMap gm = scaling_action(pres, {{x, 1}, {y, 1}, {var("u"), -n}, {var("v"), -m}}, "lam");
    RingElement t = ga.ext->element("t"), lam = gm.ext->element("lam");

    struct Item {
        std::string name;
        RingElement lhs, rhs;
    };
    std::vector<Item> items{
        {"u1*u2 = 1", u1 * u2, E("1")},
        {"L2 = u1*L1", L2, u1 * L1},
        {"T2 = u1^m + u1^d*T1", T2, u1.pow(m) + u1.pow(d) * T1},
    };
    const std::pair<const char*, std::array<RingElement, 3>> charts[] = {{"1", {u1, T1, L1}}, {"2", {u2, T2, L2}}};
    for (const auto& [c, coords] : charts) {
        const auto& [ui, Ti, Li] = coords;
        std::string k(c);
        items.push_back({"Ga fixes u" + k, ga.apply(ui), ga.ext->embed(ui)});
        items.push_back({"Gm fixes u" + k, gm.apply(ui), gm.ext->embed(ui)});
        items.push_back({"Ga translates T" + k + " by t*L" + k + "^d", ga.apply(Ti),
                         ga.ext->embed(Ti) + t * ga.ext->embed(Li).pow(d)});
        items.push_back({"Gm fixes T" + k, gm.apply(Ti), gm.ext->embed(Ti)});
        items.push_back({"Ga fixes L" + k, ga.apply(Li), ga.ext->embed(Li)});
        items.push_back({"Gm scales L" + k, gm.apply(Li), lam * gm.ext->embed(Li)});
    }

    TrivializationReport r;
    r.m = m, r.n = n;
    r.symbolic_pass = true;
    for (const auto& it : items) {
        RingElement diff = it.lhs - it.rhs;
        NamedCheck c{it.name, diff.is_zero(), diff.is_zero() ? "" : diff.str()};
        r.symbolic_pass = r.symbolic_pass && c.pass;
        r.checks.push_back(std::move(c));
    }

    std::mt19937_64 rng(seed ^ 0xa0761d6478bd642fULL);
    r.oracle_pass = true;
    for (int k = 0; k < points; ++k) {
        RationalPoint p = sample_point(*pres, seed + static_cast<std::uint64_t>(k));
        p[var("t")] = random_rational(rng, false);
        p[var("lam")] = random_rational(rng, true);
        for (const auto& it : items)
            if (evaluate(it.lhs, p) != evaluate(it.rhs, p)) r.oracle_pass = false;
        ++r.points;
    }
    return r;
}

bool generator_involution_check(int m, int n) {
    if (m < 1 || n < 1) throw DomainError("m and n must be positive");
    const int d = m + n;
    auto ring = Presentation::make({"u", "L", "T"}, {}, {Poly::variable(U), Poly::variable(var("L"))});
    auto E = [&](const std::string& s) { return ring->element(s); };
    // Other generator: chart-2 coordinates in terms of chart 1.
    RingElement L2 = E("u^-1*L");
    RingElement T2 = E("u^" + std::to_string(d) + "*T + u^" + std::to_string(m));
    RingElement Lt1 = E("L").inverse();
    RingElement Lt2 = L2.inverse();
    return Lt2 == E("u") * Lt1 && T2 == E("u").pow(d) * E("T") + E("u").pow(m);
}

// ---------------------------------------------------------------------------
// Rank-2 transition matrices

Matrix2 mat_mul(const Matrix2& a, const Matrix2& b) {
    Matrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

Poly mat_det(const Matrix2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

std::string mat_str(const Matrix2& a) {
    return "[[" + to_string(a[0][0]) + ", " + to_string(a[0][1]) + "], [" + to_string(a[1][0]) + ", " +
           to_string(a[1][1]) + "]]";
}

Matrix2 parse_matrix(const std::string& text) {
    std::string flat;
    for (char c : text)
        if (c != '[' && c != ']') flat += c;
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : flat) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4) throw ParseError("expected a 2x2 matrix [[a, b], [c, d]]", 0);
    Matrix2 M;
    for (int k = 0; k < 4; ++k) {
        M[k / 2][k % 2] = parse_poly(parts[static_cast<std::size_t>(k)], {"u"});
    }
    return M;
}

std::string SplittingType::str() const { return "(" + std::to_string(a1) + ", " + std::to_string(a2) + ")"; }

Matrix2 extension_matrix(int d, int m) { return Matrix2{{{upow(d), upow(m)}, {Poly(), Poly(1)}}}; }

BirkhoffSplit birkhoff_split(const Matrix2& M) {
    for (const auto& row : M)
        for (const auto& e : row) require_u_only(e, "matrix entry");
    monomial_det_exponent(M);
    int shift = 0;
    for (const auto& row : M)
        for (const auto& e : row) shift = std::max(shift, -min_exp(e));
    Matrix2 N = scalar(upow(shift), M);
    Matrix2 W{{{Poly(1), Poly()}, {Poly(), Poly(1)}}};  // N = u^shift * M * W

    auto col_deg = [&](int j) {
        return std::max(N[0][j].is_zero() ? -1 : max_exp(N[0][j]), N[1][j].is_zero() ? -1 : max_exp(N[1][j]));
    };
    int budget = 10 * (col_deg(0) + col_deg(1) + 1);
    BirkhoffSplit s;
    for (;;) {
        int k[2] = {col_deg(0), col_deg(1)};
        Rational G[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) G[i][j] = N[i][j].coefficient(Monomial::of(U, k[j]));
        if (!(G[0][0] * G[1][1] - G[0][1] * G[1][0]).is_zero()) break;
        if (s.steps++ >= budget) throw BudgetExceeded("column reduction did not finish");
        int r = (G[0][0].is_zero() && G[0][1].is_zero()) ? 1 : 0;
        Rational alpha[2] = {G[r][1], -G[r][0]};
        // Reduce the column of larger degree using the other one.
        int j = k[0] >= k[1] ? 0 : 1, i = 1 - j;
        Poly f = Poly::term(alpha[i] / alpha[j], Monomial::of(U, k[j] - k[i]));
        for (int row = 0; row < 2; ++row) {
            N[row][j] += f * N[row][i];
            W[row][j] += f * W[row][i];
        }
    }
    const int k0 = col_deg(0), k1 = col_deg(1);
    Matrix2 inv_diag{{{upow(-k0), Poly()}, {Poly(), upow(-k1)}}};
    s.Q = mat_mul(N, inv_diag);
    s.e1 = k0 - shift;
    s.e2 = k1 - shift;
    s.D = Matrix2{{{upow(s.e1), Poly()}, {Poly(), upow(s.e2)}}};
    s.P = laurent_inverse(W);
    s.type = SplittingType{std::max(-s.e1, -s.e2), std::min(-s.e1, -s.e2)};
    return s;
}

bool birkhoff_valid(const Matrix2& M, const BirkhoffSplit& s) {
    if (!(mat_mul(mat_mul(s.Q, s.D), s.P) == M)) return false;
    Poly dq = mat_det(s.Q), dp = mat_det(s.P);
    if (!dq.is_constant() || dq.is_zero() || !dp.is_constant() || dp.is_zero()) return false;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (!s.P[i][j].is_zero() && min_exp(s.P[i][j]) < 0) return false;
            if (!s.Q[i][j].is_zero() && max_exp(s.Q[i][j]) > 0) return false;
        }
    return true;
}

H0Result h0_twist(const Matrix2& M, int j) {
    for (const auto& row : M)
        for (const auto& e : row) require_u_only(e, "matrix entry");
    monomial_det_exponent(M);
    Matrix2 Mj = scalar(upow(-j), M);
    // g = Mj^-1 h with h in C[1/u]^2, so deg g is at most the top exponent of Mj^-1.
    Matrix2 inv = laurent_inverse(Mj);
    int B = 0;
    for (const auto& row : inv)
        for (const auto& e : row)
            if (!e.is_zero()) B = std::max(B, max_exp(e));
    H0Result res;
    res.j = j;
    res.degree_bound = B;
    const std::size_t n = 2 * static_cast<std::size_t>(B + 1);
    int top = 0;
    for (const auto& row : Mj)
        for (const auto& e : row)
            if (!e.is_zero()) top = std::max(top, max_exp(e));
    top += B;
    std::vector<std::vector<Rational>> A;
    for (int r = 0; r < 2; ++r)
        for (int e = 1; e <= top; ++e) {
            std::vector<Rational> eq(n, Rational(0));
            bool any = false;
            for (int c = 0; c < 2; ++c)
                for (int a = 0; a <= B; ++a) {
                    Rational coef = Mj[r][c].coefficient(Monomial::of(U, e - a));
                    if (coef.is_zero()) continue;
                    eq[static_cast<std::size_t>(c * (B + 1) + a)] = coef;
                    any = true;
                }
            if (any) A.push_back(std::move(eq));
        }
    for (const auto& v : nullspace(std::move(A), n)) {
        Poly g1, g2;
        for (int a = 0; a <= B; ++a) {
            g1 += Poly::term(v[static_cast<std::size_t>(a)], Monomial::of(U, a));
            g2 += Poly::term(v[static_cast<std::size_t>(B + 1 + a)], Monomial::of(U, a));
        }
        res.basis.emplace_back(std::move(g1), std::move(g2));
    }
    res.dimension = static_cast<int>(res.basis.size());
    return res;
}

SplittingType splitting_from_h0(const Matrix2& M) {
    int e = monomial_det_exponent(M);
    int lo = 0, hi = 0;
    for (const auto& row : M)
        for (const auto& x : row)
            if (!x.is_zero()) {
                lo = std::min(lo, min_exp(x));
                hi = std::max(hi, max_exp(x));
            }
    const int R = (hi - lo) + std::abs(e) + 2;
    if (h0_twist(M, -R).dimension != 0) throw DomainError("h0 scan start is not below the first jump");
    int prev = 0, first = 0;
    bool have_first = false;
    for (int j = -R + 1; j <= 3 * R; ++j) {
        int h = h0_twist(M, j).dimension;
        int delta = h - prev;
        if (!have_first && delta >= 1) {
            first = j;
            have_first = true;
        }
        if (delta >= 2) {
            return SplittingType{-first, -j};
        }
        prev = h;
    }
    throw DomainError("h0 scan did not find both jumps");
}

}  // namespace gawb
