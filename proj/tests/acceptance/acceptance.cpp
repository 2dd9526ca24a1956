// One line per criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ellfm/presets.hpp"
#include "ellfm/serialization.hpp"
#include "generators.hpp"
#include "oracle/basis_algebra.hpp"

using namespace ellfm;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(std::string why)
    {
        if (ok) detail = std::move(why);
        ok = false;
    }
};

const std::vector<std::string> num_trivial = {"k3_quartic", "enriques"};

std::vector<long> nonzero_range(long lo, long hi)
{
    std::vector<long> out;
    for (long m = lo; m <= hi; ++m)
        if (m != 0) out.push_back(m);
    return out;
}

Outcome character_formulas()
{
    Outcome o;
    for (const auto sv : preset_names()) {
        const std::string name(sv);
        const IntersectionRing ring(preset(name));
        const int rho = ring.rank();
        for (long m : nonzero_range(-20, 20)) {
            const auto t = transform_char(ring, {m, RationalVec(rho)});
            DivisorClassX expected = DivisorClassX::theta(rho, -1);
            // c = -p^*K_S, so -(m/2)c = (m/2) p^*K_S
            for (int i = 0; i < rho; ++i) expected.delta[i] = Rational(m, 2) * ring.model().canonical[i];
            if (name != "general_demo" && !is_zero(expected.delta)) o.fail(name + ": canonical class not zero");
            if (t.ch.ch0 != Rational(m) || t.ch.ch1 != expected)
                o.fail(name + " m=" + std::to_string(m) + ": got " + json(t.ch).dump());
            if (t.wit != (m > 0 ? WitType::Wit0 : WitType::Wit1)) o.fail(name + ": WIT type");
        }
    }
    return o;
}

Outcome slope_formula()
{
    Outcome o;
    const std::vector<Rational> params = {Rational(1, 2), 1, 2, 3};
    for (const auto& name : num_trivial) {
        const IntersectionRing ring(preset(name));
        const auto h = preset_ample(name);
        const Rational h2 = ring.model().pair(h, h);
        for (const auto& t : params)
            for (const auto& s : params)
                for (long m : nonzero_range(-10, 10)) {
                    const Polarization pol{t, s, h};
                    const Rational got = slope(ring, transform_char(ring, {m, RationalVec(1)}).ch, pol);
                    if (got != -s * s * h2 / Rational(m))
                        o.fail(name + " m=" + std::to_string(m) + ": slope " + got.str());
                }
    }
    return o;
}

Outcome duality_table()
{
    Outcome o;
    std::set<std::pair<WitType, int>> forbidden;
    int runs = 0;
    for (int n = 1; n <= 4; ++n)
        for (int c = 0; c <= n; ++c)
            for (auto w : {WitType::Wit0, WitType::Wit1})
                for (int ds : {-1, 0, 1}) {
                    const SheafScenario sc{n, c, w, ds};
                    if (sc.transform_codim() < 0 || sc.transform_codim() > n) continue;
                    const auto closed = duality_decision(sc);
                    const auto run = run_engine(sc);
                    ++runs;
                    const std::string tag = "n=" + std::to_string(n) + " c=" + std::to_string(c) + " "
                        + std::string(to_string(w)) + " ds=" + std::to_string(ds);
                    if (!(run.conclusion == closed))
                        o.fail(tag + ": engine " + run.conclusion.statement + " vs " + closed.statement);
                    if (run.right.degeneration_page != 2) o.fail(tag + ": right page does not degenerate at 2");
                    if (closed.kind == ConclusionKind::Forbidden) forbidden.insert({w, ds});
                }
    if (forbidden.size() != 2) o.fail("expected exactly two forbidden (WIT, dim_shift) cases");
    if (o.ok) o.detail = std::to_string(runs) + " scenarios";
    return o;
}

Outcome commutativity()
{
    Outcome o;
    for (const auto& name : num_trivial) {
        const IntersectionRing ring(preset(name));
        for (auto k : {KernelChoice::Paper, KernelChoice::Alternate})
            for (long m : nonzero_range(-10, 10))
                if (!commutativity_check(ring, {m, RationalVec(1)}, k))
                    o.fail(name + " " + std::string(to_string(k)) + " m=" + std::to_string(m));
    }
    return o;
}

Outcome stability_falsification()
{
    Outcome o;
    const std::vector<Rational> params = {Rational(1, 2), 1, 2};
    std::size_t total = 0;
    ScanBounds bounds;
    bounds.a_max = 6;
    bounds.delta_max = 6;
    bounds.workers = 4;
    for (const auto& name : num_trivial) {
        const IntersectionRing ring(preset(name));
        const auto h = preset_ample(name);
        const Rational h2 = ring.model().pair(h, h);
        for (long n : {2L, 3L, 4L})
            for (const auto& t : params)
                for (const auto& s : params) {
                    const Polarization pol{t, s, h};
                    const auto res = enumerate_candidates(ring, n, pol, bounds);
                    total += res.reports.size();
                    const std::string tag = name + " n=" + std::to_string(n);
                    if (res.any_violation) o.fail(tag + ": violation found");
                    if (res.target_slope != s * s * h2 / Rational(n) || res.target_slope.sign() <= 0)
                        o.fail(tag + ": target slope " + res.target_slope.str());
                    for (const auto& rep : res.reports) {
                        const auto& cand = *rep.candidate;
                        if (candidate_slope(ring, cand, pol) != candidate_slope_closed_form(ring, cand, pol))
                            o.fail(tag + ": ring and closed-form slopes differ");
                        if (rep.verdict != Verdict::Inadmissible && rep.candidate_slope->sign() > 0)
                            o.fail(tag + ": admissible candidate with positive slope");
                    }
                }
    }
    if (o.ok) o.detail = std::to_string(total) + " candidates";
    return o;
}

Outcome ring_properties()
{
    Outcome o;
    std::mt19937_64 rng(20261018);
    int checks = 0;
    while (checks < 10000) {
        SurfaceModel m = gen::model(rng);
        const IntersectionRing ring(m);
        const oracle::BasisAlgebra ref(m);
        const int rho = m.picard_rank;
        const auto theta = ThreefoldClass::theta(rho);
        const auto K = ring.canonical();
        if (ring.mul(theta, theta) != ThreefoldClass{K, SurfaceClass::zero(rho)}) o.fail("Theta^2");
        if (ring.mul(theta, ring.mul(theta, theta)) != ThreefoldClass{ring.surface_mul(K, K), SurfaceClass::zero(rho)})
            o.fail("Theta^3");
        for (int i = 0; i < 100; ++i, ++checks) {
            const auto u = gen::threefold_class(rng, rho);
            const auto v = gen::threefold_class(rng, rho);
            const auto w = gen::threefold_class(rng, rho);
            if (ring.mul(ring.mul(u, v), w) != ring.mul(u, ring.mul(v, w))) o.fail("associativity");
            if (ring.mul(u, v) != ring.mul(v, u)) o.fail("commutativity");
            if (ring.mul(u, v + w) != ring.mul(u, v) + ring.mul(u, w)) o.fail("distributivity");
            const bool with_oracle = i % 10 == 0;
            if (with_oracle && ref.from(ring.mul(u, v)) != ref.mul(ref.from(u), ref.from(v)))
                o.fail("product differs from oracle");

            const auto D1 = gen::divisor(rng, rho);
            const auto D2 = gen::divisor(rng, rho);
            if (ring.exp_divisor(D1 + D2) != ring.mul(ring.exp_divisor(D1), ring.exp_divisor(D2)))
                o.fail("exp additivity");
            if (with_oracle && ref.from(ring.exp_divisor(D1)) != ref.exp(ref.from(D1.as_class()))) o.fail("exp differs from oracle");

            const auto x = gen::surface_class(rng, rho);
            const auto y = gen::surface_class(rng, rho);
            if (ring.pushforward(ring.mul(u, ring.pullback(x))) != ring.surface_mul(ring.pushforward(u), x))
                o.fail("projection formula");
            if (!ring.pushforward(ring.pullback(x)).is_zero()) o.fail("p_* p^* vanishes");
            if (ring.pushforward(ring.mul(theta, ring.pullback(x))) != x) o.fail("p_*(Theta p^*x) = x");
            if (ring.mul(ring.pullback(x), ring.pullback(y)) != ring.pullback(ring.surface_mul(x, y)))
                o.fail("p^* is a ring map");
            if (with_oracle && ring.integrate(u) != ref.integrate(ref.from(u))) o.fail("integration differs from oracle");
        }
    }
    if (o.ok) o.detail = std::to_string(checks) + " random triples";
    return o;
}

template <class T>
bool round_trips(const T& x)
{
    const std::string text = json(x).dump();
    const T back = parse_json<T>(text);
    return back == x && json(back).dump() == text;
}

Outcome interchange()
{
    Outcome o;
    std::mt19937_64 rng(7);
    const IntersectionRing k3(preset("k3_quartic"));
    const Polarization pol{1, 1, {1}};
    std::uniform_int_distribution<int> small(0, 4), ds(-1, 1), coin(0, 1);
    auto check = [&](bool ok, const char* schema) {
        if (!ok) o.fail(schema);
    };
    for (int i = 0; i < 100; ++i) {
        const auto m = gen::model(rng);
        const int rho = m.picard_rank;
        check(round_trips(m), "surface model");
        check(round_trips(gen::surface_class(rng, rho)), "surface class");
        check(round_trips(gen::threefold_class(rng, rho)), "threefold class");
        check(round_trips(gen::divisor(rng, rho)), "divisor");
        check(round_trips(LineBundleX{static_cast<long>(rng() % 41) - 20, gen::vec(rng, rho)}), "line bundle");
        check(round_trips(TruncatedChar{gen::rational(rng), gen::divisor(rng, rho)}), "character");
        check(round_trips(Polarization{gen::rational(rng), gen::rational(rng), gen::vec(rng, rho)}), "polarization");

        SheafScenario sc{1 + small(rng) % 4, 0, coin(rng) ? WitType::Wit0 : WitType::Wit1, ds(rng)};
        sc.c = small(rng) % (sc.n + 1);
        check(round_trips(sc), "scenario");
        if (sc.transform_codim() >= 0 && sc.transform_codim() <= sc.n) {
            const auto run = run_engine(sc);
            check(round_trips(run.conclusion), "conclusion");
            for (const auto& r : run.comparison.relations) check(round_trips(r), "relation");
        }

        const DestabilizerCandidate cand{1 + small(rng) % 3, gen::rational(rng), gen::vec(rng, 1), coin(rng)};
        check(round_trips(cand), "candidate");
        check(round_trips(certify(k3, 4, pol, cand)), "report");
    }
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
        double limit_s;
    };
    const std::vector<Criterion> criteria = {
        {"1 character formulas", character_formulas, 1},
        {"2 slope formula", slope_formula, 0},
        {"3 duality table", duality_table, 5},
        {"4 commutativity", commutativity, 0},
        {"5 stability falsification", stability_falsification, 60},
        {"6 ring property suite", ring_properties, 10},
        {"7 interchange round-trip", interchange, 0},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s > 0 && secs >= c.limit_s) o.fail("over time limit");
        std::printf("%s  %-28s %7.3fs  %s\n", o.ok ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
        failures += o.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
