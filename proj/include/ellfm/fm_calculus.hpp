#pragma once

#include <string>
#include <string_view>

#include "ellfm/intersection_ring.hpp"

namespace ellfm {

/// O_X(m Theta) (x) p^*N with c1(N) = twist.
struct LineBundleX {
    long m = 0;
    RationalVec twist;

    LineBundleX dual() const;
    DivisorClassX c1() const;

    friend bool operator==(const LineBundleX&, const LineBundleX&) = default;
};

/// (ch0, ch1) of a sheaf or complex; ch2 and ch3 are not tracked.
struct TruncatedChar {
    Rational ch0;
    DivisorClassX ch1;

    TruncatedChar operator-() const { return {-ch0, -ch1}; }
    friend bool operator==(const TruncatedChar&, const TruncatedChar&) = default;
};

enum class WitType { Wit0, Wit1 };

std::string_view to_string(WitType w);
WitType parse_wit(std::string_view text);

/// Fourier-Mukai kernel. Paper: I_Delta (x) O(Theta) (x) O(Theta) (x) omega^{-1};
/// Alternate: the same without the omega^{-1} factor.
enum class KernelChoice { Paper, Alternate };

std::string_view to_string(KernelChoice k);
KernelChoice parse_kernel(std::string_view text);

/// Numerical class of the base line bundle L in Delta Phi = iota^* Phi Delta (x) p^*L [1]:
/// -c1(omega) for the paper kernel, -3 c1(omega) for the alternate one.
RationalVec l_class(const SurfaceModel& model, KernelChoice kernel);

/// omega = t Theta + s p^*h with t, s > 0 and h.h > 0.
struct Polarization {
    Rational t;
    Rational s;
    RationalVec h;

    void validate(const IntersectionRing& ring) const;
    ThreefoldClass as_class() const;

    friend bool operator==(const Polarization&, const Polarization&) = default;
};

struct TransformResult {
    TruncatedChar ch;
    WitType wit;
    bool locally_free; ///< asserted from the classification lemma, not computed
};

WitType wit_classify(const LineBundleX& lb);

/// Character of Phi(L). For m != 0: (m, -Theta + (m/2) p^*K_S + m p^*twist),
/// plus m p^*c1(omega) for the alternate kernel. For m = 0 the transform is
/// O_Theta (x) p^*(omega (x) N) with character (0, Theta).
TransformResult transform_char(const IntersectionRing& ring, const LineBundleX& lb,
                               KernelChoice kernel = KernelChoice::Paper);

/// Derived dual on characters: odd-degree parts change sign.
TruncatedChar dual_char(const TruncatedChar& v);

/// Integral of ch1 . omega^2 divided by ch0. Throws UndefinedSlope for ch0 = 0.
Rational slope(const IntersectionRing& ring, const TruncatedChar& v, const Polarization& pol);

/// (ch0, ch1) of v . p^*ch(N) for c1(N) = n.
TruncatedChar twist_char(const TruncatedChar& v, const RationalVec& n);

struct CommutativitySides {
    TruncatedChar left;  ///< Delta(Phi(L))
    TruncatedChar right; ///< iota^* Phi(Delta L) (x) p^*L [1]
    bool equal() const { return left == right; }
};

/// Both sides of the dual/transform commutation identity at character level.
/// iota^* acts as the identity on numerical classes.
CommutativitySides commutativity_sides(const IntersectionRing& ring, const LineBundleX& lb, KernelChoice kernel);

bool commutativity_check(const IntersectionRing& ring, const LineBundleX& lb, KernelChoice kernel);

} // namespace ellfm
