#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ellfm {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq so that every coefficient in the
/// library is arbitrary precision. The canonical text form is "p/q"
/// (always with a slash, q >= 1); parse() also accepts a bare integer.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}
    Rational(int v) : value_(static_cast<long>(v)) {}
    Rational(long num, long den);
    explicit Rational(const mpz_class& v) : value_(v) {}
    explicit Rational(mpq_class v);

    static Rational parse(std::string_view text);
    std::string str() const;

    const mpq_class& raw() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const noexcept { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);

/// Vector of rationals; used for divisor-lattice coordinates.
using RationalVec = std::vector<Rational>;

RationalVec add(const RationalVec& a, const RationalVec& b);
RationalVec scale(const Rational& k, const RationalVec& v);
bool is_zero(const RationalVec& v);

} // namespace ellfm
