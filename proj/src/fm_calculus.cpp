#include "ellfm/fm_calculus.hpp"

#include "ellfm/errors.hpp"

namespace ellfm {

LineBundleX LineBundleX::dual() const { return {-m, scale(-1, twist)}; }

DivisorClassX LineBundleX::c1() const { return {Rational(m), twist}; }

std::string_view to_string(WitType w) { return w == WitType::Wit0 ? "WIT0" : "WIT1"; }

WitType parse_wit(std::string_view text)
{
    if (text == "WIT0" || text == "0") return WitType::Wit0;
    if (text == "WIT1" || text == "1") return WitType::Wit1;
    throw InputError("unknown WIT type '" + std::string(text) + "'");
}

std::string_view to_string(KernelChoice k) { return k == KernelChoice::Paper ? "paper" : "alternate"; }

KernelChoice parse_kernel(std::string_view text)
{
    if (text == "paper") return KernelChoice::Paper;
    if (text == "alternate") return KernelChoice::Alternate;
    throw InputError("unknown kernel '" + std::string(text) + "' (expected paper|alternate)");
}

RationalVec l_class(const SurfaceModel& model, KernelChoice kernel)
{
    return scale(kernel == KernelChoice::Paper ? -1 : -3, model.omega_class);
}

void Polarization::validate(const IntersectionRing& ring) const
{
    ring.check(h);
    if (t.sign() <= 0 || s.sign() <= 0) throw HypothesisViolation("polarization needs t > 0 and s > 0");
    if (ring.model().pair(h, h).sign() <= 0) throw HypothesisViolation("H_S is not ample: H_S^2 <= 0");
}

ThreefoldClass Polarization::as_class() const
{
    const int rank = static_cast<int>(h.size());
    ThreefoldClass w = ThreefoldClass::zero(rank);
    w.alpha.r = t;
    w.beta.d = scale(s, h);
    return w;
}

WitType wit_classify(const LineBundleX& lb) { return lb.m > 0 ? WitType::Wit0 : WitType::Wit1; }

TransformResult transform_char(const IntersectionRing& ring, const LineBundleX& lb, KernelChoice kernel)
{
    ring.check(lb.twist);
    const int rank = ring.rank();
    const auto wit = wit_classify(lb);
    if (lb.m == 0) return {{0, DivisorClassX::theta(rank)}, wit, false};

    const Rational m(lb.m);
    // c = -p^*K_S, so -(m/2) c = (m/2) p^*K_S
    DivisorClassX ch1 = DivisorClassX::theta(rank, -1);
    ch1.delta = add(scale(m / 2, ring.model().canonical), scale(m, lb.twist));
    if (kernel == KernelChoice::Alternate) ch1.delta = add(ch1.delta, scale(m, ring.model().omega_class));
    return {{m, std::move(ch1)}, wit, true};
}

TruncatedChar dual_char(const TruncatedChar& v) { return {v.ch0, -v.ch1}; }

Rational slope(const IntersectionRing& ring, const TruncatedChar& v, const Polarization& pol)
{
    if (v.ch0.is_zero()) throw UndefinedSlope("slope of a rank-zero character is undefined");
    ring.check(v.ch1);
    pol.validate(ring);
    const auto w = pol.as_class();
    return ring.integrate(ring.mul(v.ch1.as_class(), ring.mul(w, w))) / v.ch0;
}

TruncatedChar twist_char(const TruncatedChar& v, const RationalVec& n)
{
    DivisorClassX ch1 = v.ch1;
    ch1.delta = add(ch1.delta, scale(v.ch0, n));
    return {v.ch0, std::move(ch1)};
}

CommutativitySides commutativity_sides(const IntersectionRing& ring, const LineBundleX& lb, KernelChoice kernel)
{
    if (lb.m == 0) throw HypothesisViolation("commutativity check needs nonzero fiber degree");
    const auto left = dual_char(transform_char(ring, lb, kernel).ch);
    const auto transformed_dual = transform_char(ring, lb.dual(), kernel).ch;
    const auto right = -twist_char(transformed_dual, l_class(ring.model(), kernel));
    return {left, right};
}

bool commutativity_check(const IntersectionRing& ring, const LineBundleX& lb, KernelChoice kernel)
{
    return commutativity_sides(ring, lb, kernel).equal();
}

} // namespace ellfm
