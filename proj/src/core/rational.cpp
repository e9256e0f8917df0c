#include "gawb/rational.hpp"

#include <limits>
#include <ostream>

#include "gawb/error.hpp"

namespace gawb {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    std::uint64_t x = a < 0 ? static_cast<std::uint64_t>(-a) : static_cast<std::uint64_t>(a);
    std::uint64_t y = b < 0 ? static_cast<std::uint64_t>(-b) : static_cast<std::uint64_t>(b);
    while (y != 0) {
        std::uint64_t t = x % y;
        x = y;
        y = t;
    }
    return static_cast<std::int64_t>(x);
}

bool fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= static_cast<i128>(kMax); }

mpz_class mpz_from_i128(i128 v) {
    u128 mag = uabs(v);
    std::uint64_t words[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
    if (v < 0) z = -z;
    return z;
}

}  // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_i128(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    u128 g = gcd128(uabs(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    Rational r;
    if (fits(num) && fits(den)) {
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != std::numeric_limits<long>::min()) {
        r.num_ = q.get_num().get_si();
        r.den_ = q.get_den().get_si();
        return r;
    }
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw DomainError("invalid rational literal '" + s + "'");
    if (q.get_den() == 0) throw DomainError("rational with zero denominator");
    return from_mpq(std::move(q));
}

bool Rational::is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

Rational Rational::operator-() const {
    if (big_) return from_mpq(-*big_);
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DomainError("division by zero");
    if (big_) return from_mpq(1 / *big_);
    return from_i128(den_, num_);
}

Rational Rational::pow(int e) const {
    if (e < 0) return reciprocal().pow(-e);
    Rational result(1), base(*this);
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() + b.to_mpq());
    if (a.den_ == 1 && b.den_ == 1) {
        i128 s = static_cast<i128>(a.num_) + b.num_;
        if (fits(s)) {
            Rational r;
            r.num_ = static_cast<std::int64_t>(s);
            return r;
        }
        return Rational::from_i128(s, 1);
    }
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() * b.to_mpq());
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    std::int64_t g1 = gcd64(a.num_, b.den_);
    std::int64_t g2 = gcd64(b.num_, a.den_);
    i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    if (fits(n) && fits(d)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    return Rational::from_i128(n, d);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

bool operator==(const Rational& a, const Rational& b) {
    // Canonical form makes the representation unique.
    if (a.big_ || b.big_) {
        if (!a.big_ || !b.big_) return false;
        return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
}

std::string Rational::numerator_string() const {
    return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_string() const {
    return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

std::string Rational::str() const {
    if (is_integer()) return numerator_string();
    return numerator_string() + "/" + denominator_string();
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace gawb
