#include "ellfm/stability.hpp"

#include <algorithm>
#include <thread>

#include "ellfm/errors.hpp"

namespace ellfm {

DivisorClassX DestabilizerCandidate::ch1_sub() const { return -DivisorClassX{a, delta}; }

DivisorClassX DestabilizerCandidate::ch1_quotient() const
{
    return DivisorClassX::theta(static_cast<int>(delta.size()), e);
}

DivisorClassX DestabilizerCandidate::ch1() const { return ch1_sub() + ch1_quotient(); }

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::Violation: return "Violation";
    case Verdict::Inadmissible: return "Inadmissible";
    }
    return "?";
}

Verdict parse_verdict(std::string_view text)
{
    if (text == "Certified") return Verdict::Certified;
    if (text == "Violation") return Verdict::Violation;
    if (text == "Inadmissible") return Verdict::Inadmissible;
    throw InputError("unknown verdict '" + std::string(text) + "'");
}

EffectivityProxy effectivity_proxy(const IntersectionRing& ring, const DestabilizerCandidate& cand,
                                   const Polarization& pol)
{
    return {cand.a.sign() >= 0, ring.model().pair(cand.delta, pol.h)};
}

namespace {

void require_num_trivial(const IntersectionRing& ring)
{
    if (!ring.model().k_trivial)
        throw HypothesisViolation("stability statements need K_S numerically trivial");
}

Rational integrate_against(const IntersectionRing& ring, const DivisorClassX& D, const ThreefoldClass& w)
{
    return ring.integrate(ring.mul(D.as_class(), w));
}

} // namespace

Rational target_slope(const IntersectionRing& ring, long n, const Polarization& pol)
{
    require_num_trivial(ring);
    if (n < 1) throw HypothesisViolation("target slope needs n >= 1");
    // The sheaf is Phi^1 of O_X(-n Theta); its character is minus that of the complex.
    const auto sheaf = -transform_char(ring, {-n, RationalVec(static_cast<std::size_t>(ring.rank()))}).ch;
    auto mu = slope(ring, sheaf, pol);
    if (mu.sign() <= 0) throw InvariantBreach("target slope " + mu.str() + " is not positive");
    return mu;
}

Rational candidate_slope_closed_form(const IntersectionRing& ring, const DestabilizerCandidate& cand,
                                     const Polarization& pol)
{
    if (cand.r == 0) throw UndefinedSlope("candidate of rank zero has no slope");
    const auto& m = ring.model();
    const Rational hh = m.pair(pol.h, pol.h);
    const Rational dh = m.pair(cand.delta, pol.h);
    const Rational s2 = pol.s * pol.s;
    return (Rational(-2) * pol.t * pol.s * dh - cand.a * s2 * hh + Rational(cand.e) * s2 * hh) / Rational(cand.r);
}

Rational candidate_slope(const IntersectionRing& ring, const DestabilizerCandidate& cand, const Polarization& pol)
{
    if (cand.r == 0) throw UndefinedSlope("candidate of rank zero has no slope");
    ring.check(cand.delta);
    const TruncatedChar ch{Rational(cand.r), cand.ch1()};
    auto mu = slope(ring, ch, pol);
    const auto closed = candidate_slope_closed_form(ring, cand, pol);
    if (mu != closed)
        throw InvariantBreach("ring slope " + mu.str() + " disagrees with closed form " + closed.str());
    return mu;
}

StabilityReport certify(const IntersectionRing& ring, long n, const Polarization& pol,
                        const std::optional<DestabilizerCandidate>& cand)
{
    require_num_trivial(ring);
    pol.validate(ring);
    StabilityReport rep;
    rep.n = n;
    rep.target_slope = target_slope(ring, n, pol);
    rep.candidate = cand;
    if (!cand) {
        rep.verdict = Verdict::Certified;
        rep.note = "no candidate: nothing to destabilize";
        return rep;
    }
    ring.check(cand->delta);

    std::vector<std::string> problems;
    if (cand->r <= 0 || cand->r >= n)
        problems.push_back("rank " + std::to_string(cand->r) + " outside (0, " + std::to_string(n) + ")");
    if (cand->e != 0 && cand->e != 1) problems.push_back("ch1(F') must be 0 or Theta");
    const auto proxy = effectivity_proxy(ring, *cand, pol);
    if (!proxy.a_nonneg) problems.push_back("effectivity proxy: a < 0");
    if (proxy.pairing.sign() < 0) problems.push_back("effectivity proxy: delta.H_S = " + proxy.pairing.str() + " < 0");
    const Rational fiber = ring.fiber_degree(cand->ch1());
    if (!fiber.is_integer())
        problems.push_back("fiber degree " + fiber.str() + " is not an integer");
    else if (fiber.sign() > 0)
        problems.push_back("fiber degree " + fiber.str() + " > 0");

    if (cand->r > 0) {
        const int rho = ring.rank();
        const ThreefoldClass theta = ThreefoldClass::theta(rho);
        const ThreefoldClass pH = ring.pullback(SurfaceClass::divisor(pol.h));
        const ThreefoldClass pH2 = ring.mul(pH, pH);
        // omega^2 = t^2 Theta^2 + 2ts Theta p^*H + s^2 p^*H^2
        const ThreefoldClass theta_part = pol.t * pol.t * ring.mul(theta, theta)
            + Rational(2) * pol.t * pol.s * ring.mul(theta, pH);
        const ThreefoldClass base_part = pol.s * pol.s * pH2;

        const Rational fiber_step = integrate_against(ring, cand->ch1(), base_part);
        const Rational effective_step = integrate_against(ring, cand->ch1_sub(), theta_part);
        const Rational section_step = integrate_against(ring, cand->ch1_quotient(), theta_part);
        rep.trace = {
            {"fiber-degree step", fiber_step, "<= 0", fiber_step.sign() <= 0},
            {"effectivity step", effective_step, "<= 0", effective_step.sign() <= 0},
            {"F' step", section_step, "== 0", section_step.is_zero()},
        };
        rep.candidate_slope = candidate_slope(ring, *cand, pol);
        if (fiber_step + effective_step + section_step != Rational(cand->r) * *rep.candidate_slope)
            throw InvariantBreach("slope decomposition does not sum to r * mu(F)");
    }

    if (!problems.empty()) {
        rep.verdict = Verdict::Inadmissible;
        for (const auto& p : problems) rep.note += (rep.note.empty() ? "" : "; ") + p;
        return rep;
    }
    rep.verdict = *rep.candidate_slope >= rep.target_slope ? Verdict::Violation : Verdict::Certified;
    return rep;
}

namespace {

std::vector<Rational> grid(const Rational& lo, const Rational& hi, const Rational& step)
{
    std::vector<Rational> out;
    for (Rational x = lo; x <= hi; x += step) out.push_back(x);
    return out;
}

} // namespace

ScanResult enumerate_candidates(const IntersectionRing& ring, long n, const Polarization& pol,
                                const ScanBounds& bounds)
{
    require_num_trivial(ring);
    pol.validate(ring);
    if (n < 1) throw HypothesisViolation("scan needs n >= 1");
    if (bounds.step.sign() <= 0) throw InputError("grid step must be positive");
    if (bounds.a_max.sign() < 0 || bounds.delta_max.sign() < 0) throw InputError("grid bounds must be non-negative");

    ScanResult res;
    res.n = n;
    res.target_slope = target_slope(ring, n, pol);
    if (n == 1) return res;

    const auto a_grid = grid(0, bounds.a_max, bounds.step);
    const auto d_grid = grid(-bounds.delta_max, bounds.delta_max, bounds.step);
    const auto rho = static_cast<std::size_t>(ring.rank());
    std::size_t delta_count = 1;
    for (std::size_t i = 0; i < rho; ++i) delta_count *= d_grid.size();
    const std::size_t per_rank = 2 * a_grid.size() * delta_count;
    const std::size_t total = static_cast<std::size_t>(n - 1) * per_rank;

    // index -> (r, e, a, delta) in lexicographic order
    auto candidate_at = [&](std::size_t idx) {
        DestabilizerCandidate c;
        c.r = static_cast<long>(idx / per_rank) + 1;
        idx %= per_rank;
        c.e = static_cast<int>(idx / (a_grid.size() * delta_count));
        idx %= a_grid.size() * delta_count;
        c.a = a_grid[idx / delta_count];
        idx %= delta_count;
        c.delta.resize(rho);
        for (std::size_t i = rho; i-- > 0;) {
            c.delta[i] = d_grid[idx % d_grid.size()];
            idx /= d_grid.size();
        }
        return c;
    };

    res.reports.resize(total);
    const std::size_t workers = std::clamp<std::size_t>(bounds.workers, 1, std::max<std::size_t>(total, 1));
    const std::size_t chunk = (total + workers - 1) / workers;
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) res.reports[i] = certify(ring, n, pol, candidate_at(i));
    };
    if (workers == 1) {
        work(0, total);
    } else {
        std::vector<std::jthread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = std::min(total, w * chunk), hi = std::min(total, lo + chunk);
            pool.emplace_back([&, w, lo, hi] {
                try {
                    work(lo, hi);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        pool.clear();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    for (const auto& rep : res.reports) {
        if (rep.verdict == Verdict::Violation) res.any_violation = true;
        if (rep.verdict == Verdict::Inadmissible) continue;
        ++res.admissible;
        if (!res.max_admissible_slope || *rep.candidate_slope > *res.max_admissible_slope)
            res.max_admissible_slope = rep.candidate_slope;
    }
    return res;
}

TheoremSummary transform_stability(const IntersectionRing& ring, const LineBundleX& lb, const Polarization& pol,
                                   const ScanBounds& bounds)
{
    if (lb.m == 0) throw HypothesisViolation("line bundle must have nonzero fiber degree (m != 0)");
    require_num_trivial(ring);
    if (!ring.model().x_k_trivial) throw HypothesisViolation("the threefold must be declared K-trivial");
    ring.check(lb.twist);
    pol.validate(ring);

    TheoremSummary out;
    out.input = lb;
    out.reduced = {lb.m, RationalVec(static_cast<std::size_t>(ring.rank()))};
    out.transform = transform_char(ring, lb);
    out.transform_slope = slope(ring, out.transform.ch, pol);
    if (!is_zero(lb.twist))
        out.trace.push_back("projection formula: Φ(L ⊗ p*N) = Φ(L) ⊗ p*N, reduce to O_X(" + std::to_string(lb.m)
                            + "Θ)");

    const long n = lb.m < 0 ? -lb.m : lb.m;
    if (lb.m > 0) {
        // O_X(-m Theta) is WIT1 of full dimension with a transform of the same dimension.
        const SheafScenario sc{3, 0, WitType::Wit1, 0};
        out.duality_step = duality_decision(sc);
        out.trace.push_back("dual of O_X(" + std::to_string(lb.m) + "Θ) is O_X(" + std::to_string(-lb.m)
                            + "Θ), WIT1 with dim Φ^1 = dim");
        out.trace.push_back("duality rule (" + out.duality_step->rule + "): " + out.duality_step->statement);
        const bool chars_agree = commutativity_check(ring, out.reduced, KernelChoice::Paper);
        out.trace.push_back(std::string("character-level commutation check: ") + (chars_agree ? "holds" : "FAILS"));
        if (out.duality_step->kind != ConclusionKind::DualIdentification || !chars_agree)
            throw InvariantBreach("duality reduction for m > 0 did not produce an identification");
        out.trace.push_back("stability is preserved by dual, ι* and twisting; reduce to m = " + std::to_string(-n));
    }

    out.scan = enumerate_candidates(ring, n, pol, bounds);
    out.trace.push_back("candidate search for n = " + std::to_string(n) + ": "
                        + std::to_string(out.scan.reports.size()) + " candidates, "
                        + std::to_string(out.scan.admissible) + " admissible, "
                        + (out.scan.any_violation ? "violation found" : "no violation"));
    out.stable = !out.scan.any_violation;
    return out;
}

} // namespace ellfm
