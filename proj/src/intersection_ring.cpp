#include "ellfm/intersection_ring.hpp"

#include <string>

#include "ellfm/errors.hpp"

namespace ellfm {

void SurfaceModel::validate() const
{
    if (picard_rank < 1) throw InputError("picard_rank must be positive");
    const auto rho = static_cast<std::size_t>(picard_rank);
    if (gram.size() != rho) throw InputError("gram must be picard_rank x picard_rank");
    for (const auto& row : gram)
        if (row.size() != rho) throw InputError("gram must be picard_rank x picard_rank");
    for (std::size_t i = 0; i < rho; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i]) throw InputError("gram must be symmetric");
    if (canonical.size() != rho) throw InputError("canonical must have length picard_rank");
    if (omega_class.size() != rho) throw InputError("omega_class must have length picard_rank");
    if (k_trivial && !is_zero(canonical))
        throw InputError("k_trivial model must have zero canonical class");
    if (x_k_trivial && omega_class != canonical)
        throw InputError("K-trivial threefold requires omega_class == canonical");
}

Rational SurfaceModel::pair(const RationalVec& a, const RationalVec& b) const
{
    const auto rho = static_cast<std::size_t>(picard_rank);
    if (a.size() != rho || b.size() != rho) throw ModelMismatch("divisor vector has wrong picard rank");
    Rational acc;
    for (std::size_t i = 0; i < rho; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < rho; ++j) {
            if (gram[i][j] == 0 || b[j].is_zero()) continue;
            acc += a[i] * Rational(static_cast<long>(gram[i][j])) * b[j];
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------

SurfaceClass SurfaceClass::zero(int rank) { return {0, RationalVec(static_cast<std::size_t>(rank)), 0}; }

SurfaceClass SurfaceClass::unit(int rank)
{
    auto x = zero(rank);
    x.r = 1;
    return x;
}

SurfaceClass SurfaceClass::divisor(RationalVec d) { return {0, std::move(d), 0}; }

SurfaceClass SurfaceClass::point(int rank, Rational coeff)
{
    auto x = zero(rank);
    x.s = std::move(coeff);
    return x;
}

SurfaceClass& SurfaceClass::operator+=(const SurfaceClass& o)
{
    r += o.r;
    d = add(d, o.d);
    s += o.s;
    return *this;
}

SurfaceClass SurfaceClass::operator-() const { return {-r, scale(-1, d), -s}; }

SurfaceClass operator*(const Rational& k, const SurfaceClass& x) { return {k * x.r, scale(k, x.d), k * x.s}; }

bool SurfaceClass::is_zero() const { return r.is_zero() && ellfm::is_zero(d) && s.is_zero(); }

ThreefoldClass ThreefoldClass::zero(int rank) { return {SurfaceClass::zero(rank), SurfaceClass::zero(rank)}; }

ThreefoldClass ThreefoldClass::unit(int rank) { return {SurfaceClass::zero(rank), SurfaceClass::unit(rank)}; }

ThreefoldClass ThreefoldClass::theta(int rank) { return {SurfaceClass::unit(rank), SurfaceClass::zero(rank)}; }

ThreefoldClass& ThreefoldClass::operator+=(const ThreefoldClass& o)
{
    alpha += o.alpha;
    beta += o.beta;
    return *this;
}

ThreefoldClass ThreefoldClass::operator-() const { return {-alpha, -beta}; }

ThreefoldClass operator*(const Rational& k, const ThreefoldClass& v) { return {k * v.alpha, k * v.beta}; }

bool ThreefoldClass::is_zero() const { return alpha.is_zero() && beta.is_zero(); }

DivisorClassX DivisorClassX::zero(int rank) { return {0, RationalVec(static_cast<std::size_t>(rank))}; }

DivisorClassX DivisorClassX::theta(int rank, Rational coeff)
{
    auto D = zero(rank);
    D.a = std::move(coeff);
    return D;
}

ThreefoldClass DivisorClassX::as_class() const
{
    const int rank = static_cast<int>(delta.size());
    ThreefoldClass v = ThreefoldClass::zero(rank);
    v.alpha.r = a;
    v.beta.d = delta;
    return v;
}

DivisorClassX& DivisorClassX::operator+=(const DivisorClassX& o)
{
    a += o.a;
    delta = add(delta, o.delta);
    return *this;
}

DivisorClassX DivisorClassX::operator-() const { return {-a, scale(-1, delta)}; }

DivisorClassX operator*(const Rational& k, const DivisorClassX& D) { return {k * D.a, scale(k, D.delta)}; }

// ---------------------------------------------------------------------------

IntersectionRing::IntersectionRing(SurfaceModel model) : model_(std::move(model)) { model_.validate(); }

void IntersectionRing::check(const RationalVec& v) const
{
    if (v.size() != static_cast<std::size_t>(rank()))
        throw ModelMismatch("class has picard rank " + std::to_string(v.size()) + ", model has "
                            + std::to_string(rank()));
}

void IntersectionRing::check(const SurfaceClass& x) const { check(x.d); }

void IntersectionRing::check(const ThreefoldClass& v) const
{
    check(v.alpha);
    check(v.beta);
}

void IntersectionRing::check(const DivisorClassX& D) const { check(D.delta); }

SurfaceClass IntersectionRing::surface_mul(const SurfaceClass& x, const SurfaceClass& y) const
{
    check(x);
    check(y);
    SurfaceClass out;
    out.r = x.r * y.r;
    out.d = add(scale(x.r, y.d), scale(y.r, x.d));
    out.s = x.r * y.s + y.r * x.s + model_.pair(x.d, y.d);
    return out;
}

SurfaceClass IntersectionRing::canonical() const { return SurfaceClass::divisor(model_.canonical); }

ThreefoldClass IntersectionRing::mul(const ThreefoldClass& u, const ThreefoldClass& v) const
{
    // (Theta a + b)(Theta a' + b') = Theta (K a a' + a b' + a' b) + b b'
    const auto aa = surface_mul(u.alpha, v.alpha);
    ThreefoldClass out;
    out.alpha = surface_mul(canonical(), aa) + surface_mul(u.alpha, v.beta) + surface_mul(v.alpha, u.beta);
    out.beta = surface_mul(u.beta, v.beta);
    return out;
}

Rational IntersectionRing::integrate(const ThreefoldClass& v) const
{
    check(v);
    return v.alpha.s;
}

ThreefoldClass IntersectionRing::pullback(const SurfaceClass& x) const
{
    check(x);
    return {SurfaceClass::zero(rank()), x};
}

SurfaceClass IntersectionRing::pushforward(const ThreefoldClass& v) const
{
    check(v);
    return v.alpha;
}

ThreefoldClass IntersectionRing::exp_divisor(const DivisorClassX& D) const
{
    check(D);
    const auto d1 = D.as_class();
    const auto d2 = mul(d1, d1);
    const auto d3 = mul(d2, d1);
    return ThreefoldClass::unit(rank()) + d1 + Rational(1, 2) * d2 + Rational(1, 6) * d3;
}

Rational IntersectionRing::fiber_degree(const DivisorClassX& D) const
{
    check(D);
    return D.a;
}

} // namespace ellfm
