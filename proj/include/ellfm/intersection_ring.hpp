#pragma once

#include <cstdint>
#include <vector>

#include "ellfm/rational.hpp"

namespace ellfm {

/// Numerical data of the base surface S.
///
/// The divisor lattice has a basis of `picard_rank` classes with integer
/// intersection form `gram`. `omega_class` is c1 of the sheaf R^1 p_* O_X
/// (not the polarization, which lives in Polarization).
struct SurfaceModel {
    int picard_rank = 1;
    std::vector<std::vector<std::int64_t>> gram;
    RationalVec canonical;
    bool k_trivial = false;   ///< K_S numerically trivial
    bool x_k_trivial = false; ///< total space X declared K-trivial
    RationalVec omega_class;

    /// Throws InputError when the invariants do not hold.
    void validate() const;

    Rational pair(const RationalVec& a, const RationalVec& b) const;

    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

/// Class r + d + s[pt] in H^0 + H^2 + H^4 of S.
struct SurfaceClass {
    Rational r;
    RationalVec d;
    Rational s;

    static SurfaceClass zero(int rank);
    static SurfaceClass unit(int rank);
    static SurfaceClass divisor(RationalVec d);
    static SurfaceClass point(int rank, Rational coeff = 1);

    SurfaceClass& operator+=(const SurfaceClass& o);
    friend SurfaceClass operator+(SurfaceClass a, const SurfaceClass& b) { return a += b; }
    SurfaceClass operator-() const;
    friend SurfaceClass operator-(const SurfaceClass& a, const SurfaceClass& b) { return a + (-b); }
    friend SurfaceClass operator*(const Rational& k, const SurfaceClass& x);

    bool is_zero() const;
    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

/// Class Theta . p^*alpha + p^*beta on X.
///
/// Degree decomposition: H^0 = beta.r, H^2 = alpha.r Theta + p^*beta.d,
/// H^4 = Theta p^*alpha.d + beta.s p^*[pt], H^6 = alpha.s Theta p^*[pt].
struct ThreefoldClass {
    SurfaceClass alpha;
    SurfaceClass beta;

    static ThreefoldClass zero(int rank);
    static ThreefoldClass unit(int rank);
    static ThreefoldClass theta(int rank);

    ThreefoldClass& operator+=(const ThreefoldClass& o);
    friend ThreefoldClass operator+(ThreefoldClass a, const ThreefoldClass& b) { return a += b; }
    ThreefoldClass operator-() const;
    friend ThreefoldClass operator-(const ThreefoldClass& a, const ThreefoldClass& b) { return a + (-b); }
    friend ThreefoldClass operator*(const Rational& k, const ThreefoldClass& v);

    bool is_zero() const;
    friend bool operator==(const ThreefoldClass&, const ThreefoldClass&) = default;
};

/// Divisor a Theta + p^*delta on X.
struct DivisorClassX {
    Rational a;
    RationalVec delta;

    static DivisorClassX zero(int rank);
    static DivisorClassX theta(int rank, Rational coeff = 1);

    ThreefoldClass as_class() const;

    DivisorClassX& operator+=(const DivisorClassX& o);
    friend DivisorClassX operator+(DivisorClassX a, const DivisorClassX& b) { return a += b; }
    DivisorClassX operator-() const;
    friend DivisorClassX operator-(const DivisorClassX& a, const DivisorClassX& b) { return a + (-b); }
    friend DivisorClassX operator*(const Rational& k, const DivisorClassX& D);

    friend bool operator==(const DivisorClassX&, const DivisorClassX&) = default;
};

/// Even numerical cohomology of S and of X = Weierstrass fibration over S,
/// with the splitting H^{2i}(X) = Theta p^*H^{2i-2}(S) + p^*H^{2i}(S) and
/// Theta^2 = Theta . p^*K_S. Products above the top degree vanish.
class IntersectionRing {
public:
    explicit IntersectionRing(SurfaceModel model);

    const SurfaceModel& model() const noexcept { return model_; }
    int rank() const noexcept { return model_.picard_rank; }

    SurfaceClass surface_mul(const SurfaceClass& x, const SurfaceClass& y) const;
    ThreefoldClass mul(const ThreefoldClass& u, const ThreefoldClass& v) const;
    Rational integrate(const ThreefoldClass& v) const;

    ThreefoldClass pullback(const SurfaceClass& x) const;
    SurfaceClass pushforward(const ThreefoldClass& v) const;

    /// ch(O_X(D)) = 1 + D + D^2/2 + D^3/6.
    ThreefoldClass exp_divisor(const DivisorClassX& D) const;

    /// D . f for the fiber class f.
    Rational fiber_degree(const DivisorClassX& D) const;

    SurfaceClass canonical() const;

    void check(const SurfaceClass& x) const;
    void check(const ThreefoldClass& v) const;
    void check(const DivisorClassX& D) const;
    void check(const RationalVec& v) const;

private:
    SurfaceModel model_;
};

} // namespace ellfm
