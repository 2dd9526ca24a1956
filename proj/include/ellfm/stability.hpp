#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ellfm/duality_ss.hpp"
#include "ellfm/fm_calculus.hpp"

namespace ellfm {

/// Symbolic subsheaf F of the rank-n transform of O_X(-n Theta), split as
/// 0 -> F'' -> F -> F' -> 0 with ch1(F'') = -(a Theta + p^*delta) and
/// ch1(F') = e Theta.
struct DestabilizerCandidate {
    long r = 1;
    Rational a;
    RationalVec delta;
    int e = 0;

    DivisorClassX ch1_sub() const;      ///< ch1(F'')
    DivisorClassX ch1_quotient() const; ///< ch1(F')
    DivisorClassX ch1() const;          ///< ch1(F)

    friend bool operator==(const DestabilizerCandidate&, const DestabilizerCandidate&) = default;
};

/// Decidable stand-in for effectivity of a Theta + p^*delta: a >= 0 and
/// delta . H_S >= 0, which is all the slope chain uses (D . Theta . p^*H_S >= 0).
struct EffectivityProxy {
    bool a_nonneg;
    Rational pairing;
    bool admissible() const { return a_nonneg && pairing.sign() >= 0; }
};

EffectivityProxy effectivity_proxy(const IntersectionRing& ring, const DestabilizerCandidate& cand,
                                   const Polarization& pol);

enum class Verdict { Certified, Violation, Inadmissible };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

struct TraceStep {
    std::string name;
    Rational value;
    std::string bound; ///< "<= 0" or "== 0"
    bool holds;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct StabilityReport {
    long n = 0;
    std::optional<DestabilizerCandidate> candidate;
    Rational target_slope;
    std::optional<Rational> candidate_slope;
    Verdict verdict = Verdict::Certified;
    std::vector<TraceStep> trace;
    std::string note;

    friend bool operator==(const StabilityReport&, const StabilityReport&) = default;
};

/// Slope s^2 H_S^2 / n of the rank-n transform of O_X(-n Theta), computed
/// through the ring. Requires K_S numerically trivial.
Rational target_slope(const IntersectionRing& ring, long n, const Polarization& pol);

/// Slope of F by ring integration; cross-checked against the closed form.
Rational candidate_slope(const IntersectionRing& ring, const DestabilizerCandidate& cand, const Polarization& pol);

/// [-2ts (delta.H_S) - a s^2 H_S^2 + e s^2 H_S^2] / r.
Rational candidate_slope_closed_form(const IntersectionRing& ring, const DestabilizerCandidate& cand,
                                     const Polarization& pol);

/// Checks admissibility and the slope chain mu(F) <= 0 < mu(transform).
/// An empty candidate is certified vacuously.
StabilityReport certify(const IntersectionRing& ring, long n, const Polarization& pol,
                        const std::optional<DestabilizerCandidate>& cand);

struct ScanBounds {
    Rational a_max = 6;
    Rational delta_max = 6;
    Rational step = Rational(1, 2);
    unsigned workers = 1;
};

struct ScanResult {
    long n = 0;
    Rational target_slope;
    std::vector<StabilityReport> reports;
    bool any_violation = false;
    std::size_t admissible = 0;
    std::optional<Rational> max_admissible_slope;
};

/// Exhaustive grid over r in [1, n-1], e in {0, 1}, a in [0, a_max],
/// delta in [-delta_max, delta_max]^rho. Order is independent of `workers`.
ScanResult enumerate_candidates(const IntersectionRing& ring, long n, const Polarization& pol,
                                const ScanBounds& bounds = {});

struct TheoremSummary {
    LineBundleX input;
    LineBundleX reduced; ///< twist stripped
    TransformResult transform;
    Rational transform_slope;
    std::optional<Conclusion> duality_step;
    ScanResult scan;
    bool stable = false;
    std::vector<std::string> trace;
};

/// The transform of a line bundle of nonzero fiber degree is mu-stable:
/// m < 0 by the candidate search, m > 0 by duality reduction to -m.
TheoremSummary transform_stability(const IntersectionRing& ring, const LineBundleX& lb, const Polarization& pol,
                                   const ScanBounds& bounds = {});

} // namespace ellfm
