#include "ellfm/rational.hpp"

#include <cctype>
#include <ostream>

#include "ellfm/errors.hpp"

namespace ellfm {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class to_mpz(std::string_view s)
{
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long num, long den)
{
    if (den == 0) throw InputError("rational with zero denominator");
    value_ = mpq_class(mpz_class(num), mpz_class(den));
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_part = text.substr(0, slash);
    if (!is_integer_literal(num_part))
        throw InputError("malformed rational '" + std::string(text) + "' (expected p/q)");
    if (slash == std::string_view::npos) return Rational(mpz_class(to_mpz(num_part)));

    const auto den_part = text.substr(slash + 1);
    if (!is_integer_literal(den_part) || den_part.front() == '-' || den_part.front() == '+')
        throw InputError("malformed rational '" + std::string(text) + "' (expected p/q)");
    mpz_class den = to_mpz(den_part);
    if (den == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
    mpq_class q(to_mpz(num_part), den);
    return Rational(std::move(q));
}

std::string Rational::str() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw InvariantBreach("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    if (q.is_integer()) return os << q.numerator().get_str();
    return os << q.str();
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

RationalVec add(const RationalVec& a, const RationalVec& b)
{
    if (a.size() != b.size()) throw ModelMismatch("vector length mismatch");
    RationalVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RationalVec scale(const Rational& k, const RationalVec& v)
{
    RationalVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
    return out;
}

bool is_zero(const RationalVec& v)
{
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace ellfm
