#include "ellfm/serialization.hpp"

#include "ellfm/errors.hpp"

namespace ellfm {

void to_json(json& j, const Rational& q) { j = q.str(); }

void from_json(const json& j, Rational& q)
{
    if (!j.is_string()) throw InputError("rational must be a string \"p/q\"");
    q = Rational::parse(j.get<std::string>());
}

void to_json(json& j, const SurfaceModel& m)
{
    j = json{{"picard_rank", m.picard_rank}, {"gram", m.gram},           {"canonical", m.canonical},
             {"k_trivial", m.k_trivial},     {"x_k_trivial", m.x_k_trivial}, {"omega_class", m.omega_class}};
}

void from_json(const json& j, SurfaceModel& m)
{
    j.at("picard_rank").get_to(m.picard_rank);
    j.at("gram").get_to(m.gram);
    j.at("canonical").get_to(m.canonical);
    j.at("k_trivial").get_to(m.k_trivial);
    j.at("x_k_trivial").get_to(m.x_k_trivial);
    j.at("omega_class").get_to(m.omega_class);
    m.validate();
}

void to_json(json& j, const SurfaceClass& x) { j = json{{"r", x.r}, {"d", x.d}, {"s", x.s}}; }

void from_json(const json& j, SurfaceClass& x)
{
    j.at("r").get_to(x.r);
    j.at("d").get_to(x.d);
    j.at("s").get_to(x.s);
}

void to_json(json& j, const ThreefoldClass& v) { j = json{{"alpha", v.alpha}, {"beta", v.beta}}; }

void from_json(const json& j, ThreefoldClass& v)
{
    j.at("alpha").get_to(v.alpha);
    j.at("beta").get_to(v.beta);
    if (v.alpha.d.size() != v.beta.d.size()) throw ModelMismatch("alpha and beta have different picard ranks");
}

void to_json(json& j, const DivisorClassX& D) { j = json{{"a", D.a}, {"delta", D.delta}}; }

void from_json(const json& j, DivisorClassX& D)
{
    j.at("a").get_to(D.a);
    j.at("delta").get_to(D.delta);
}

void to_json(json& j, const LineBundleX& lb) { j = json{{"m", lb.m}, {"twist", lb.twist}}; }

void from_json(const json& j, LineBundleX& lb)
{
    j.at("m").get_to(lb.m);
    j.at("twist").get_to(lb.twist);
}

void to_json(json& j, const TruncatedChar& v) { j = json{{"ch0", v.ch0}, {"ch1", v.ch1}}; }

void from_json(const json& j, TruncatedChar& v)
{
    j.at("ch0").get_to(v.ch0);
    j.at("ch1").get_to(v.ch1);
}

void to_json(json& j, const Polarization& pol) { j = json{{"t", pol.t}, {"s", pol.s}, {"h", pol.h}}; }

void from_json(const json& j, Polarization& pol)
{
    j.at("t").get_to(pol.t);
    j.at("s").get_to(pol.s);
    j.at("h").get_to(pol.h);
}

void to_json(json& j, WitType w) { j = std::string(to_string(w)); }

void from_json(const json& j, WitType& w) { w = parse_wit(j.get<std::string>()); }

void to_json(json& j, KernelChoice k) { j = std::string(to_string(k)); }

void from_json(const json& j, KernelChoice& k) { k = parse_kernel(j.get<std::string>()); }

void to_json(json& j, const TransformResult& t)
{
    j = json{{"ch", t.ch}, {"wit", t.wit}, {"locally_free", t.locally_free}};
}

void to_json(json& j, const SheafScenario& sc)
{
    j = json{{"n", sc.n}, {"c", sc.c}, {"wit", sc.wit}, {"dim_shift", sc.dim_shift}};
}

void from_json(const json& j, SheafScenario& sc)
{
    j.at("n").get_to(sc.n);
    j.at("c").get_to(sc.c);
    j.at("wit").get_to(sc.wit);
    j.at("dim_shift").get_to(sc.dim_shift);
}

void to_json(json& j, const TermRef& t)
{
    j = json{{"side", to_string(t.side)}, {"p", t.pos.first}, {"q", t.pos.second}, {"label", t.label}};
}

void from_json(const json& j, TermRef& t)
{
    const auto side = j.at("side").get<std::string>();
    if (side != "left" && side != "right") throw InputError("term side must be left|right");
    t.side = side == "left" ? Side::Left : Side::Right;
    j.at("p").get_to(t.pos.first);
    j.at("q").get_to(t.pos.second);
    j.at("label").get_to(t.label);
}

namespace {

RelationKind parse_relation_kind(const std::string& s)
{
    for (auto k : {RelationKind::Identification, RelationKind::ForcedZero, RelationKind::ShortExact,
                   RelationKind::Forbidden})
        if (to_string(k) == s) return k;
    throw InputError("unknown relation kind '" + s + "'");
}

ConclusionKind parse_conclusion_kind(const std::string& s)
{
    for (auto k : {ConclusionKind::DualIdentification, ConclusionKind::DualIsWit1, ConclusionKind::Forbidden,
                   ConclusionKind::Undetermined})
        if (to_string(k) == s) return k;
    throw InputError("unknown conclusion kind '" + s + "'");
}

} // namespace

void to_json(json& j, const DerivedRelation& r)
{
    j = json{{"kind", to_string(r.kind)}, {"degree", r.degree}, {"terms", r.terms},
             {"reason", r.reason},        {"text", r.render()}};
}

void from_json(const json& j, DerivedRelation& r)
{
    r.kind = parse_relation_kind(j.at("kind").get<std::string>());
    j.at("degree").get_to(r.degree);
    j.at("terms").get_to(r.terms);
    j.at("reason").get_to(r.reason);
}

void to_json(json& j, const Conclusion& c)
{
    j = json{{"kind", to_string(c.kind)}, {"statement", c.statement}, {"rule", c.rule}};
}

void from_json(const json& j, Conclusion& c)
{
    c.kind = parse_conclusion_kind(j.at("kind").get<std::string>());
    j.at("statement").get_to(c.statement);
    j.at("rule").get_to(c.rule);
}

void to_json(json& j, const PageGrid& g)
{
    json terms = json::array();
    for (const auto& [pos, term] : g.terms())
        terms.push_back({{"p", pos.first}, {"q", pos.second}, {"status", to_string(term.status)}, {"label", term.label}});
    j = json{{"side", to_string(g.side())},
             {"region", {{"p", {g.p_min(), g.p_max()}}, {"q", {g.q_min(), g.q_max()}}}},
             {"terms", terms}};
}

void to_json(json& j, const EngineRun& run)
{
    j = json{{"scenario", run.scenario},
             {"left_page", run.comparison.left},
             {"right_page", run.comparison.right},
             {"left_degeneration_page", run.left.degeneration_page},
             {"right_degeneration_page", run.right.degeneration_page},
             {"relations", run.comparison.relations},
             {"contradiction", run.comparison.contradiction},
             {"conclusion", run.conclusion}};
}

void to_json(json& j, const DestabilizerCandidate& c)
{
    j = json{{"r", c.r}, {"a", c.a}, {"delta", c.delta}, {"e", c.e}};
}

void from_json(const json& j, DestabilizerCandidate& c)
{
    j.at("r").get_to(c.r);
    j.at("a").get_to(c.a);
    j.at("delta").get_to(c.delta);
    j.at("e").get_to(c.e);
}

void to_json(json& j, const TraceStep& s)
{
    j = json{{"name", s.name}, {"value", s.value}, {"bound", s.bound}, {"holds", s.holds}};
}

void from_json(const json& j, TraceStep& s)
{
    j.at("name").get_to(s.name);
    j.at("value").get_to(s.value);
    j.at("bound").get_to(s.bound);
    j.at("holds").get_to(s.holds);
}

void to_json(json& j, const StabilityReport& r)
{
    j = json{{"n", r.n},
             {"candidate", r.candidate ? json(*r.candidate) : json(nullptr)},
             {"target_slope", r.target_slope},
             {"candidate_slope", r.candidate_slope ? json(*r.candidate_slope) : json(nullptr)},
             {"verdict", to_string(r.verdict)},
             {"trace", r.trace},
             {"note", r.note}};
}

void from_json(const json& j, StabilityReport& r)
{
    j.at("n").get_to(r.n);
    const auto& cand = j.at("candidate");
    r.candidate = cand.is_null() ? std::nullopt : std::optional(cand.get<DestabilizerCandidate>());
    j.at("target_slope").get_to(r.target_slope);
    const auto& cs = j.at("candidate_slope");
    r.candidate_slope = cs.is_null() ? std::nullopt : std::optional(cs.get<Rational>());
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    j.at("trace").get_to(r.trace);
    j.at("note").get_to(r.note);
}

json scan_to_json(const ScanResult& res, bool with_reports)
{
    json j{{"n", res.n},
           {"target_slope", res.target_slope},
           {"any_violation", res.any_violation},
           {"candidate_count", res.reports.size()},
           {"admissible", res.admissible},
           {"max_admissible_slope", res.max_admissible_slope ? json(*res.max_admissible_slope) : json(nullptr)}};
    if (with_reports) j["reports"] = res.reports;
    return j;
}

json theorem_to_json(const TheoremSummary& t, bool with_reports)
{
    return json{{"input", t.input},
                {"reduced", t.reduced},
                {"transform", t.transform},
                {"transform_slope", t.transform_slope},
                {"duality_step", t.duality_step ? json(*t.duality_step) : json(nullptr)},
                {"scan", scan_to_json(t.scan, with_reports)},
                {"stable", t.stable},
                {"trace", t.trace}};
}

} // namespace ellfm
