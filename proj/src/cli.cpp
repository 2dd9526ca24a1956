#include "ellfm/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ellfm/errors.hpp"
#include "ellfm/presets.hpp"
#include "ellfm/serialization.hpp"

namespace ellfm {

namespace {

RationalVec parse_vec(const std::string& text)
{
    RationalVec out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    return out;
}

std::string format_vec(const RationalVec& v)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "]";
    return os.str();
}

std::string format_coeff(const Rational& k, const std::string& symbol, bool first)
{
    std::ostringstream os;
    const bool neg = k.sign() < 0;
    if (first)
        os << (neg ? "-" : "");
    else
        os << (neg ? " - " : " + ");
    const Rational mag = abs(k);
    if (mag != Rational(1)) os << mag;
    os << symbol;
    return os.str();
}

/// Key/value rows printed with aligned columns.
class Table {
public:
    void row(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
    void print(std::ostream& os) const
    {
        std::size_t w = 0;
        for (const auto& [k, v] : rows_) w = std::max(w, k.size());
        for (const auto& [k, v] : rows_) os << std::left << std::setw(static_cast<int>(w) + 2) << k << v << "\n";
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

template <class T>
std::string str(const T& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

struct ModelOptions {
    std::string preset = "k3_quartic";
    std::string model_file;
    std::string h;

    SurfaceModel load() const
    {
        if (model_file.empty()) return ellfm::preset(preset);
        std::ifstream in(model_file);
        if (!in) throw InputError("cannot read model file '" + model_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_json<SurfaceModel>(buf.str());
    }

    RationalVec ample(const SurfaceModel& m) const
    {
        if (!h.empty()) return parse_vec(h);
        if (model_file.empty()) return preset_ample(preset);
        RationalVec v(static_cast<std::size_t>(m.picard_rank));
        v[0] = 1;
        return v;
    }

    bool general_demo() const { return model_file.empty() && preset == "general_demo"; }
};

struct BundleOptions {
    long m = 0;
    std::string twist;

    LineBundleX bundle(const IntersectionRing& ring) const
    {
        LineBundleX lb{m, parse_vec(twist)};
        if (lb.twist.empty()) lb.twist.resize(static_cast<std::size_t>(ring.rank()));
        ring.check(lb.twist);
        return lb;
    }
};

struct PolOptions {
    std::string t = "1";
    std::string s = "1";
};

void add_model(CLI::App* cmd, ModelOptions& mo, bool with_h)
{
    cmd->add_option("--preset", mo.preset, "k3_quartic | enriques | general_demo")->capture_default_str();
    cmd->add_option("--model-file", mo.model_file, "surface model JSON file (overrides --preset)");
    if (with_h) cmd->add_option("--ample", mo.h, "ample class H_S as comma-separated rationals");
}

void add_pol(CLI::App* cmd, PolOptions& po)
{
    cmd->add_option("-t", po.t, "Theta coefficient of the polarization (p/q)")->capture_default_str();
    cmd->add_option("-s", po.s, "H_S coefficient of the polarization (p/q)")->capture_default_str();
}

Polarization make_pol(const IntersectionRing& ring, const ModelOptions& mo, const PolOptions& po)
{
    Polarization pol{Rational::parse(po.t), Rational::parse(po.s), mo.ample(ring.model())};
    pol.validate(ring);
    return pol;
}

void refuse_general_demo(const ModelOptions& mo)
{
    if (mo.general_demo()) throw HypothesisViolation("general_demo has K_S not numerically trivial; stability commands refused");
}

void print_report(std::ostream& out, const StabilityReport& rep)
{
    Table t;
    t.row("n", std::to_string(rep.n));
    if (rep.candidate) {
        const auto& c = *rep.candidate;
        t.row("candidate", "r=" + std::to_string(c.r) + " a=" + str(c.a) + " delta=" + format_vec(c.delta)
                               + " e=" + std::to_string(c.e));
        t.row("ch1(F)", format_divisor(c.ch1()));
    }
    t.row("target slope", str(rep.target_slope));
    t.row("candidate slope", rep.candidate_slope ? str(*rep.candidate_slope) : "-");
    for (const auto& s : rep.trace)
        t.row(s.name, str(s.value) + "  (" + s.bound + ": " + (s.holds ? "holds" : "fails") + ")");
    t.row("verdict", std::string(to_string(rep.verdict)));
    if (!rep.note.empty()) t.row("note", rep.note);
    t.print(out);
}

void print_scan(std::ostream& out, const ScanResult& res)
{
    Table t;
    t.row("n", std::to_string(res.n));
    t.row("target slope", str(res.target_slope));
    t.row("candidates", std::to_string(res.reports.size()));
    t.row("admissible", std::to_string(res.admissible));
    t.row("max admissible slope", res.max_admissible_slope ? str(*res.max_admissible_slope) : "-");
    t.row("any_violation", res.any_violation ? "true" : "false");
    t.print(out);
}

} // namespace

std::string format_divisor(const DivisorClassX& D)
{
    std::string s;
    if (!D.a.is_zero()) s += format_coeff(D.a, "Θ", true);
    if (!is_zero(D.delta)) {
        if (D.delta.size() == 1)
            s += format_coeff(D.delta[0], "p*H", s.empty());
        else
            s += (s.empty() ? "" : " + ") + std::string("p*") + format_vec(D.delta);
    }
    return s.empty() ? "0" : s;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Chern-character calculus for Fourier-Mukai transforms on Weierstrass threefolds", "ellfm"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of tables");

    ModelOptions mo;
    BundleOptions bo;
    PolOptions po;
    std::string kernel = "paper";

    // transform
    auto* transform = app.add_subcommand("transform", "character, WIT type and local freeness of Phi(L)");
    add_model(transform, mo, false);
    transform->add_option("-m", bo.m, "fiber degree of L")->required();
    transform->add_option("--twist", bo.twist, "c1 of the pullback twist N");
    transform->add_option("--kernel", kernel, "paper | alternate")->capture_default_str();

    // slope
    auto* slope_cmd = app.add_subcommand("slope", "mu_omega of Phi(L)");
    add_model(slope_cmd, mo, true);
    slope_cmd->add_option("-m", bo.m, "fiber degree of L")->required();
    slope_cmd->add_option("--twist", bo.twist, "c1 of the pullback twist N");
    slope_cmd->add_option("--kernel", kernel, "paper | alternate")->capture_default_str();
    add_pol(slope_cmd, po);

    // dual
    std::string char_json;
    auto* dual = app.add_subcommand("dual", "derived dual of a truncated character");
    add_model(dual, mo, false);
    dual->add_option("-m", bo.m, "dualize the character of Phi(O_X(m Theta))");
    dual->add_option("--twist", bo.twist, "c1 of the pullback twist N");
    dual->add_option("--kernel", kernel, "paper | alternate")->capture_default_str();
    dual->add_option("--char", char_json, "truncated character as JSON");

    // commute
    std::string commute_kernel = "both";
    auto* commute = app.add_subcommand("commute", "character-level check of Delta Phi = iota^* Phi Delta (x) p^*L [1]");
    add_model(commute, mo, false);
    commute->add_option("-m", bo.m, "fiber degree of L")->required();
    commute->add_option("--twist", bo.twist, "c1 of the pullback twist N");
    commute->add_option("--kernel", commute_kernel, "paper | alternate | both")->capture_default_str();

    // ss-duality
    SheafScenario sc{3, 0, WitType::Wit0, 0};
    std::string wit = "0", dim_shift = "0";
    auto* ss = app.add_subcommand("ss-duality", "duality decision and spectral-sequence engine for a scenario");
    ss->add_option("-n", sc.n, "dimension of X")->capture_default_str();
    ss->add_option("-c", sc.c, "codimension of E")->required();
    ss->add_option("--wit", wit, "0 | 1 | WIT0 | WIT1")->required();
    ss->add_option("--dim-shift", dim_shift, "dim of the surviving transform minus dim E: -1, 0, +1")->required();

    // certify
    long n_opt = 0;
    DestabilizerCandidate cand;
    std::string cand_a = "0", cand_delta;
    auto* certify_cmd = app.add_subcommand("certify", "check one destabilizer candidate against the slope chain");
    add_model(certify_cmd, mo, true);
    add_pol(certify_cmd, po);
    certify_cmd->add_option("-n", n_opt, "rank of the transform of O_X(-n Theta)");
    certify_cmd->add_option("-m", bo.m, "negative fiber degree (n = -m)");
    certify_cmd->add_option("--rank", cand.r, "rank of F")->required();
    certify_cmd->add_option("--a", cand_a, "Theta coefficient of -ch1(F'')")->capture_default_str();
    certify_cmd->add_option("--delta", cand_delta, "p^* part of -ch1(F'')");
    certify_cmd->add_option("--e", cand.e, "ch1(F') = e Theta, e in {0, 1}")->capture_default_str();

    // scan
    ScanBounds bounds;
    std::string a_max = "6", delta_max = "6", step = "1/2";
    bool with_reports = false;
    auto add_bounds = [&](CLI::App* cmd) {
        cmd->add_option("--a-max", a_max, "upper bound for a")->capture_default_str();
        cmd->add_option("--delta-max", delta_max, "bound for |delta_i|")->capture_default_str();
        cmd->add_option("--step", step, "grid step")->capture_default_str();
        cmd->add_option("--workers", bounds.workers, "parallel shards")->capture_default_str();
        cmd->add_flag("--reports", with_reports, "include every candidate report in JSON output");
    };
    auto* scan = app.add_subcommand("scan", "exhaustive destabilizer search");
    add_model(scan, mo, true);
    add_pol(scan, po);
    scan->add_option("-n", n_opt, "rank of the transform of O_X(-n Theta)");
    scan->add_option("-m", bo.m, "negative fiber degree (n = -m)");
    add_bounds(scan);

    // theorem
    auto* theorem = app.add_subcommand("theorem", "stability of the transform of a line bundle of nonzero fiber degree");
    add_model(theorem, mo, true);
    add_pol(theorem, po);
    theorem->add_option("-m", bo.m, "fiber degree of L")->required();
    theorem->add_option("--twist", bo.twist, "c1 of the pullback twist N");
    add_bounds(theorem);

    // ring
    std::string op, x_json, y_json;
    auto* ring_cmd = app.add_subcommand("ring", "intersection-ring operations on JSON classes");
    add_model(ring_cmd, mo, false);
    ring_cmd->add_option("--op", op, "mul | integrate | pullback | pushforward | exp | fiber-degree")
        ->required()
        ->check(CLI::IsMember({"mul", "integrate", "pullback", "pushforward", "exp", "fiber-degree"}));
    ring_cmd->add_option("--x", x_json, "first operand (JSON)")->required();
    ring_cmd->add_option("--y", y_json, "second operand for mul (JSON)");

    // model
    auto* model_cmd = app.add_subcommand("model", "print the surface model");
    add_model(model_cmd, mo, false);

    std::vector<std::string> argv;
    argv.reserve(args.size());
    for (auto it = args.rbegin(); it != args.rend(); ++it) argv.push_back(*it);

    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    auto need_n = [&]() -> long {
        if (n_opt != 0) return n_opt;
        if (bo.m < 0) return -bo.m;
        throw HypothesisViolation("give -n >= 1 or a negative -m");
    };
    auto read_bounds = [&] {
        bounds.a_max = Rational::parse(a_max);
        bounds.delta_max = Rational::parse(delta_max);
        bounds.step = Rational::parse(step);
    };

    try {
        if (*transform) {
            const IntersectionRing ring(mo.load());
            const auto res = transform_char(ring, bo.bundle(ring), parse_kernel(kernel));
            if (as_json) {
                out << json(res).dump(2) << "\n";
            } else {
                Table t;
                t.row("ch0", str(res.ch.ch0));
                t.row("ch1", format_divisor(res.ch.ch1));
                t.row("WIT", std::string(to_string(res.wit)));
                t.row("locally_free", res.locally_free ? "true" : "false");
                t.print(out);
            }
        } else if (*slope_cmd) {
            const IntersectionRing ring(mo.load());
            const auto pol = make_pol(ring, mo, po);
            const auto res = transform_char(ring, bo.bundle(ring), parse_kernel(kernel));
            const auto mu = slope(ring, res.ch, pol);
            if (as_json)
                out << json{{"char", res.ch}, {"polarization", pol}, {"slope", mu}}.dump(2) << "\n";
            else
                out << "slope  " << mu << "\n";
        } else if (*dual) {
            const IntersectionRing ring(mo.load());
            const TruncatedChar in = char_json.empty() ? transform_char(ring, bo.bundle(ring), parse_kernel(kernel)).ch
                                                       : parse_json<TruncatedChar>(char_json);
            ring.check(in.ch1);
            const auto d = dual_char(in);
            if (as_json) {
                out << json{{"input", in}, {"dual", d}}.dump(2) << "\n";
            } else {
                Table t;
                t.row("input", "(" + str(in.ch0) + ", " + format_divisor(in.ch1) + ")");
                t.row("dual", "(" + str(d.ch0) + ", " + format_divisor(d.ch1) + ")");
                t.print(out);
            }
        } else if (*commute) {
            const IntersectionRing ring(mo.load());
            const auto lb = bo.bundle(ring);
            std::vector<KernelChoice> kernels;
            if (commute_kernel == "both")
                kernels = {KernelChoice::Paper, KernelChoice::Alternate};
            else
                kernels = {parse_kernel(commute_kernel)};
            json j = json::array();
            Table t;
            for (auto k : kernels) {
                const auto sides = commutativity_sides(ring, lb, k);
                j.push_back({{"kernel", k}, {"left", sides.left}, {"right", sides.right}, {"equal", sides.equal()}});
                const std::string name(to_string(k));
                t.row(name + " left", "(" + str(sides.left.ch0) + ", " + format_divisor(sides.left.ch1) + ")");
                t.row(name + " right", "(" + str(sides.right.ch0) + ", " + format_divisor(sides.right.ch1) + ")");
                t.row(name + " equal", sides.equal() ? "true" : "false");
            }
            if (as_json)
                out << j.dump(2) << "\n";
            else
                t.print(out);
        } else if (*ss) {
            sc.wit = parse_wit(wit);
            try {
                std::size_t used = 0;
                sc.dim_shift = std::stoi(dim_shift, &used);
                if (used != dim_shift.size()) throw std::invalid_argument(dim_shift);
            } catch (const std::logic_error&) {
                throw InputError("malformed --dim-shift '" + dim_shift + "'");
            }
            const auto decision = duality_decision(sc);
            const auto run = run_engine(sc);
            const bool agree = decision == run.conclusion;
            if (!agree) throw InvariantBreach("engine and decision table disagree");
            if (as_json) {
                out << json{{"decision", decision}, {"engine", run}, {"agree", agree}}.dump(2) << "\n";
            } else {
                out << to_string(decision.kind) << ": " << decision.statement << "  [" << decision.rule << "]\n";
                out << "degeneration: left E" << run.left.degeneration_page << ", right E"
                    << run.right.degeneration_page << "\n";
                out << "relations:\n";
                for (const auto& r : run.comparison.relations)
                    out << "  " << std::left << std::setw(15) << to_string(r.kind) << r.render() << "\n";
            }
        } else if (*certify_cmd) {
            refuse_general_demo(mo);
            const IntersectionRing ring(mo.load());
            const auto pol = make_pol(ring, mo, po);
            cand.a = Rational::parse(cand_a);
            cand.delta = parse_vec(cand_delta);
            if (cand.delta.empty()) cand.delta.resize(static_cast<std::size_t>(ring.rank()));
            const auto rep = certify(ring, need_n(), pol, cand);
            if (as_json)
                out << json(rep).dump(2) << "\n";
            else
                print_report(out, rep);
        } else if (*scan) {
            refuse_general_demo(mo);
            const IntersectionRing ring(mo.load());
            const auto pol = make_pol(ring, mo, po);
            read_bounds();
            const auto res = enumerate_candidates(ring, need_n(), pol, bounds);
            if (as_json)
                out << scan_to_json(res, with_reports).dump(2) << "\n";
            else
                print_scan(out, res);
        } else if (*theorem) {
            refuse_general_demo(mo);
            const IntersectionRing ring(mo.load());
            const auto pol = make_pol(ring, mo, po);
            read_bounds();
            const auto res = transform_stability(ring, bo.bundle(ring), pol, bounds);
            if (as_json) {
                out << theorem_to_json(res, with_reports).dump(2) << "\n";
            } else {
                Table t;
                t.row("transform ch", "(" + str(res.transform.ch.ch0) + ", " + format_divisor(res.transform.ch.ch1) + ")");
                t.row("WIT", std::string(to_string(res.transform.wit)));
                t.row("locally_free", res.transform.locally_free ? "true" : "false");
                t.row("slope", str(res.transform_slope));
                t.row("stable", res.stable ? "true" : "false");
                t.print(out);
                out << "trace:\n";
                for (const auto& line : res.trace) out << "  " << line << "\n";
            }
        } else if (*ring_cmd) {
            const IntersectionRing ring(mo.load());
            json result;
            if (op == "mul") {
                if (y_json.empty()) throw InputError("--op mul needs --y");
                result = ring.mul(parse_json<ThreefoldClass>(x_json), parse_json<ThreefoldClass>(y_json));
            } else if (op == "integrate") {
                result = ring.integrate(parse_json<ThreefoldClass>(x_json));
            } else if (op == "pullback") {
                result = ring.pullback(parse_json<SurfaceClass>(x_json));
            } else if (op == "pushforward") {
                result = ring.pushforward(parse_json<ThreefoldClass>(x_json));
            } else if (op == "exp") {
                result = ring.exp_divisor(parse_json<DivisorClassX>(x_json));
            } else {
                result = ring.fiber_degree(parse_json<DivisorClassX>(x_json));
            }
            out << result.dump(as_json ? 2 : -1) << "\n";
        } else if (*model_cmd) {
            out << json(mo.load()).dump(2) << "\n";
        }
    } catch (const HypothesisViolation& e) {
        err << "hypothesis violation: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InvariantBreach& e) {
        err << "internal invariant breach: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

} // namespace ellfm
