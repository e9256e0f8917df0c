#include "gawb/binary_forms.hpp"

#include <algorithm>

#include "gawb/error.hpp"

namespace gawb {

std::optional<int> homogeneous_degree(const Poly& p, const std::vector<VarId>& vars) {
    if (p.is_zero()) return std::nullopt;
    std::optional<int> deg;
    for (const auto& t : p.terms()) {
        int d = 0;
        for (VarId v : vars) d += t.mono.exponent(v);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

Rational bareiss_determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    Rational sign(1), prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Rational(0);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = Rational(0);
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

// Coefficients of x^(d-i) y^i, i = 0..d.
std::vector<Rational> form_coefficients(const Poly& f, VarId y, int d) {
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (const auto& t : f.terms()) {
        int ey = t.mono.exponent(y);
        c[static_cast<std::size_t>(ey)] = t.coeff;
    }
    return c;
}

int check_form(const Poly& f, VarId x, VarId y, const char* name) {
    for (VarId v : f.variables())
        if (v != x && v != y)
            throw DomainError(std::string(name) + " involves '" + var_name(v) + "', expected a form in " +
                              var_name(x) + "," + var_name(y));
    if (!f.is_regular()) throw DomainError(std::string(name) + " has negative exponents");
    auto d = homogeneous_degree(f, {x, y});
    if (!d) throw DomainError(std::string(name) + " is not homogeneous in " + var_name(x) + "," + var_name(y));
    if (*d < 1) throw DomainError(std::string(name) + " must have positive degree");
    return *d;
}

}  // namespace

Rational binary_resultant(const Poly& f, const Poly& g, VarId x, VarId y) {
    const int m = check_form(f, x, y, "f");
    const int n = check_form(g, x, y, "g");
    auto a = form_coefficients(f, y, m);
    auto b = form_coefficients(g, y, n);
    const std::size_t N = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Rational>> s(N, std::vector<Rational>(N));
    for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r)
        for (std::size_t i = 0; i < a.size(); ++i) s[r][r + i] = a[i];
    for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r)
        for (std::size_t i = 0; i < b.size(); ++i) s[static_cast<std::size_t>(n) + r][r + i] = b[i];
    return bareiss_determinant(std::move(s));
}

Rational binary_resultant(const Poly& f, const Poly& g) { return binary_resultant(f, g, var("x"), var("y")); }

}  // namespace gawb
