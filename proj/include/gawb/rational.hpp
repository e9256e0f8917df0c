#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gawb {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// stored inline and combined through 128-bit intermediates; anything larger
/// spills into a shared, immutable GMP rational. Copies are cheap either way.
class Rational {
public:
    Rational() noexcept = default;
    Rational(int v) noexcept : num_(v) {}
    Rational(long v) : Rational(static_cast<long long>(v)) {}
    Rational(long long v) : num_(v) {
        if (v == INT64_MIN) *this = Rational(v, 1);
    }
    /// Throws DomainError when `den == 0`.
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& q);

    /// Accepts "n", "-n", "n/d" with arbitrary-size integers.
    static Rational parse(std::string_view text);

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const noexcept;
    int sign() const noexcept;

    Rational operator-() const;
    Rational reciprocal() const;
    Rational pow(int e) const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Numerator and denominator as decimal strings.
    std::string numerator_string() const;
    std::string denominator_string() const;
    std::string str() const;
    mpq_class to_mpq() const;

    /// True if the value is held in the inline 64-bit representation.
    bool is_small() const noexcept { return !big_; }
    /// Inline numerator/denominator; only meaningful when is_small().
    std::int64_t small_num() const noexcept { return num_; }
    std::int64_t small_den() const noexcept { return den_; }

private:
    static Rational from_i128(__int128 num, __int128 den);
    static Rational from_mpq(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace gawb
