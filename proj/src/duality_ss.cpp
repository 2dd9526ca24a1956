#include "ellfm/duality_ss.hpp"

#include <algorithm>
#include <set>

#include "ellfm/errors.hpp"

namespace ellfm {

void SheafScenario::validate() const
{
    if (n < 1) throw InfeasibleScenario("dimension n must be positive");
    if (c < 0 || c > n)
        throw InfeasibleScenario("codimension " + std::to_string(c) + " outside [0, " + std::to_string(n) + "]");
    if (dim_shift < -1 || dim_shift > 1) throw InfeasibleScenario("dimension shift must be -1, 0 or +1");
    const int cc = transform_codim();
    if (cc < 0 || cc > n)
        throw InfeasibleScenario("transform codimension " + std::to_string(cc) + " outside [0, "
                                 + std::to_string(n) + "]");
}

std::string_view to_string(Side s) { return s == Side::Left ? "left" : "right"; }

std::string_view to_string(TermStatus s)
{
    switch (s) {
    case TermStatus::Zero: return "zero";
    case TermStatus::NonZero: return "nonzero";
    case TermStatus::Unknown: return "unknown";
    }
    return "?";
}

std::string_view to_string(RelationKind k)
{
    switch (k) {
    case RelationKind::Identification: return "identification";
    case RelationKind::ForcedZero: return "forced_zero";
    case RelationKind::ShortExact: return "short_exact";
    case RelationKind::Forbidden: return "forbidden";
    }
    return "?";
}

std::string_view to_string(ConclusionKind k)
{
    switch (k) {
    case ConclusionKind::DualIdentification: return "DualIdentification";
    case ConclusionKind::DualIsWit1: return "DualIsWIT1";
    case ConclusionKind::Forbidden: return "Forbidden";
    case ConclusionKind::Undetermined: return "Undetermined";
    }
    return "?";
}

namespace {

std::string ext_label(int q, const std::string& arg)
{
    if (q == 0) return "Hom(" + arg + ", O_X)";
    return "Ext^" + std::to_string(q) + "(" + arg + ", O_X)";
}

std::string term_label(Side side, Position pos)
{
    const auto [p, q] = pos;
    if (side == Side::Left) return ext_label(q, "Φ^" + std::to_string(-p) + "E");
    return "ι*(Φ^" + std::to_string(q + 1) + ext_label(p, "E") + ")⊗p*L";
}

} // namespace

PageGrid::PageGrid(Side side, int n) : side_(side), n_(n)
{
    if (side == Side::Left) {
        p_min_ = -1, p_max_ = 0, q_min_ = 0, q_max_ = n;
    } else {
        p_min_ = 0, p_max_ = n, q_min_ = -1, q_max_ = 0;
    }
    for (int p = p_min_; p <= p_max_; ++p)
        for (int q = q_min_; q <= q_max_; ++q)
            terms_.emplace(Position{p, q}, Term{TermStatus::Unknown, term_label(side, {p, q})});
}

bool PageGrid::in_region(Position pos) const
{
    return pos.first >= p_min_ && pos.first <= p_max_ && pos.second >= q_min_ && pos.second <= q_max_;
}

TermStatus PageGrid::status(Position pos) const
{
    const auto it = terms_.find(pos);
    return it == terms_.end() ? TermStatus::Zero : it->second.status;
}

std::string PageGrid::label(Position pos) const
{
    const auto it = terms_.find(pos);
    return it == terms_.end() ? term_label(side_, pos) : it->second.label;
}

bool PageGrid::set_status(Position pos, TermStatus status)
{
    const auto it = terms_.find(pos);
    if (it == terms_.end()) return status == TermStatus::Zero;
    auto& cur = it->second.status;
    if (cur == status) return true;
    if (cur != TermStatus::Unknown || status == TermStatus::Unknown) return false;
    cur = status;
    return true;
}

void PageGrid::forget(Position pos)
{
    const auto it = terms_.find(pos);
    if (it != terms_.end()) it->second.status = TermStatus::Unknown;
}

std::vector<Position> PageGrid::diagonal(int k) const
{
    std::vector<Position> out;
    for (int p = p_min_; p <= p_max_; ++p) {
        const Position pos{p, k - p};
        if (in_region(pos)) out.push_back(pos);
    }
    return out;
}

std::string DerivedRelation::render() const
{
    const std::string deg = " [p+q=" + std::to_string(degree) + "]";
    switch (kind) {
    case RelationKind::Identification:
        return terms.at(0).label + " = " + terms.at(1).label + deg;
    case RelationKind::ForcedZero:
        return terms.at(0).label + " = 0" + deg;
    case RelationKind::ShortExact:
        return "0 → " + terms.at(0).label + " → " + terms.at(1).label + " → " + terms.at(2).label + " → 0" + deg;
    case RelationKind::Forbidden:
        return "contradiction: " + reason + deg;
    }
    return {};
}

// ---------------------------------------------------------------------------

std::pair<PageGrid, PageGrid> build_pages(const SheafScenario& sc)
{
    sc.validate();
    PageGrid left(Side::Left, sc.n);
    PageGrid right(Side::Right, sc.n);

    // Phi^i E = 0 for the non-surviving i; Ext^q(G, O) = 0 below codim G and
    // nonzero at codim G for the surviving transform G.
    const int live = sc.surviving_column();
    const int cc = sc.transform_codim();
    for (int q = 0; q <= sc.n; ++q) {
        left.set_status({-1 - live, q}, TermStatus::Zero);
        if (q < cc)
            left.set_status({live, q}, TermStatus::Zero);
        else if (q == cc)
            left.set_status({live, q}, TermStatus::NonZero);
    }

    // Ext^p(E, O) = 0 for p < c, and E^D = Ext^c(E, O) is nonzero.
    for (int p = 0; p < sc.c; ++p) {
        right.set_status({p, -1}, TermStatus::Zero);
        right.set_status({p, 0}, TermStatus::Zero);
    }
    right.require_nonvanishing({{sc.c, -1}, {sc.c, 0}});
    return {std::move(left), std::move(right)};
}

Degeneration degenerate(const PageGrid& page)
{
    Degeneration out{page, 2, {}};
    const int max_r = (page.p_max() - page.p_min()) + (page.q_max() - page.q_min()) + 2;
    for (int r = 2; r <= max_r; ++r) {
        std::vector<Arrow> arrows;
        for (const auto& [pos, term] : out.page.terms()) {
            const Position to{pos.first - r + 1, pos.second + r};
            if (!out.page.in_region(to)) continue;
            if (term.status == TermStatus::Zero || out.page.status(to) == TermStatus::Zero) continue;
            arrows.push_back({r, pos, to});
        }
        if (arrows.empty()) {
            out.degeneration_page = r;
            return out;
        }
        for (const auto& a : arrows) {
            out.page.forget(a.from);
            out.page.forget(a.to);
        }
        out.possible_arrows.insert(out.possible_arrows.end(), arrows.begin(), arrows.end());
    }
    throw InvariantBreach("spectral sequence failed to degenerate on a bounded grid");
}

namespace {

class Solver {
public:
    Solver(const PageGrid& left, const PageGrid& right) : cmp_{left, right, {}, false} {}

    Comparison run()
    {
        const int kmin = std::min(cmp_.left.min_degree(), cmp_.right.min_degree());
        const int kmax = std::max(cmp_.left.max_degree(), cmp_.right.max_degree());
        bool changed = true;
        while (changed) {
            changed = false;
            for (int k = kmin; k <= kmax; ++k) {
                changed |= propagate(k, cmp_.left, cmp_.right);
                changed |= propagate(k, cmp_.right, cmp_.left);
            }
            changed |= propagate_groups(cmp_.left);
            changed |= propagate_groups(cmp_.right);
        }
        for (int k = kmin; k <= kmax; ++k) emit_structure(k);
        return std::move(cmp_);
    }

private:
    static std::vector<Position> live(const PageGrid& g, int k)
    {
        std::vector<Position> out;
        for (const auto& pos : g.diagonal(k))
            if (g.status(pos) != TermStatus::Zero) out.push_back(pos);
        return out;
    }

    TermRef ref(const PageGrid& g, Position pos) const { return {g.side(), pos, g.label(pos)}; }

    void forbid(int k, std::string reason)
    {
        cmp_.contradiction = true;
        if (!reasons_.insert(reason).second) return;
        cmp_.relations.push_back({RelationKind::Forbidden, k, {}, std::move(reason)});
    }

    // Information flowing from `from` to `to` on the diagonal p + q = k.
    bool propagate(int k, const PageGrid& from, PageGrid& to)
    {
        bool changed = false;
        const auto src = live(from, k);
        const auto dst = live(to, k);
        if (src.empty()) {
            // common limit vanishes in degree k
            for (const auto& pos : dst) {
                if (to.set_status(pos, TermStatus::Zero)) {
                    cmp_.relations.push_back({RelationKind::ForcedZero, k, {ref(to, pos)}, {}});
                    changed = true;
                } else {
                    forbid(k, to.label(pos) + " is nonzero but every " + std::string(to_string(from.side()))
                                  + " term of total degree " + std::to_string(k) + " vanishes");
                }
            }
            return changed;
        }
        const bool src_nonzero = std::any_of(src.begin(), src.end(),
                                             [&](const Position& p) { return from.status(p) == TermStatus::NonZero; });
        if (src_nonzero && dst.size() == 1 && to.status(dst.front()) == TermStatus::Unknown) {
            to.set_status(dst.front(), TermStatus::NonZero);
            changed = true;
        }
        return changed;
    }

    bool propagate_groups(PageGrid& g)
    {
        bool changed = false;
        for (const auto& group : g.nonvanishing()) {
            std::vector<Position> alive;
            for (const auto& pos : group)
                if (g.status(pos) != TermStatus::Zero) alive.push_back(pos);
            if (alive.empty()) {
                std::string names;
                for (const auto& pos : group) names += (names.empty() ? "" : ", ") + g.label(pos);
                forbid(group.front().first + group.front().second,
                       "the dual sheaf is nonzero but all of {" + names + "} vanish");
            } else if (alive.size() == 1 && g.status(alive.front()) == TermStatus::Unknown) {
                g.set_status(alive.front(), TermStatus::NonZero);
                changed = true;
            }
        }
        return changed;
    }

    void emit_structure(int k)
    {
        const auto l = live(cmp_.left, k);
        const auto r = live(cmp_.right, k);
        if (l.size() == 1 && r.size() == 1) {
            cmp_.relations.push_back(
                {RelationKind::Identification, k, {ref(cmp_.left, l[0]), ref(cmp_.right, r[0])}, {}});
        } else if (l.size() == 1 && r.size() == 2) {
            cmp_.relations.push_back({RelationKind::ShortExact,
                                      k,
                                      {ref(cmp_.right, r[0]), ref(cmp_.left, l[0]), ref(cmp_.right, r[1])},
                                      {}});
        } else if (l.size() == 2 && r.size() == 1) {
            cmp_.relations.push_back({RelationKind::ShortExact,
                                      k,
                                      {ref(cmp_.left, l[0]), ref(cmp_.right, r[0]), ref(cmp_.left, l[1])},
                                      {}});
        }
    }

    Comparison cmp_;
    std::set<std::string> reasons_;
};

std::string surviving_name(const SheafScenario& sc) { return sc.wit == WitType::Wit0 ? "Φ^0E" : "Φ^1E"; }

Conclusion dual_identification(const SheafScenario& sc, std::string rule)
{
    return {ConclusionKind::DualIdentification, "ι*(Φ^0(E^D))⊗p*L = (" + surviving_name(sc) + ")^D",
            std::move(rule)};
}

Conclusion dual_is_wit1(std::string rule)
{
    return {ConclusionKind::DualIsWit1, "Φ^0(E^D) = 0, i.e. E^D is WIT1", std::move(rule)};
}

Conclusion forbidden(const SheafScenario& sc, std::string rule)
{
    const std::string shift = sc.dim_shift > 0 ? "+ 1" : "- 1";
    return {ConclusionKind::Forbidden, "dim " + surviving_name(sc) + " = dim E " + shift + " cannot happen",
            std::move(rule)};
}

} // namespace

Comparison compare_limits(const PageGrid& left, const PageGrid& right)
{
    if (left.side() != Side::Left || right.side() != Side::Right)
        throw InputError("compare_limits expects (left, right) pages");
    if (left.n() != right.n()) throw InputError("pages built for different dimensions");
    return Solver(left, right).run();
}

Conclusion duality_decision(const SheafScenario& sc)
{
    sc.validate();
    // Full-dimensional E with dim Phi^1 E < n: dual is WIT1 with no WIT input needed.
    const bool full_dim_rule = sc.c == 0
        && (sc.wit == WitType::Wit0 || sc.dim_shift < 0);

    if (sc.wit == WitType::Wit0) {
        switch (sc.dim_shift) {
        case 1: return dual_identification(sc, "wit0-dimension-up");
        case 0: return dual_is_wit1(full_dim_rule ? "full-dimension" : "wit0-same-dimension");
        default: return forbidden(sc, "wit0-dimension-down");
        }
    }
    switch (sc.dim_shift) {
    case 1: return forbidden(sc, "wit1-dimension-up");
    case 0: return dual_identification(sc, "wit1-same-dimension");
    default: return dual_is_wit1(full_dim_rule ? "full-dimension" : "wit1-dimension-down");
    }
}

Conclusion engine_conclusion(const SheafScenario& sc, const Comparison& cmp)
{
    if (cmp.contradiction) return forbidden(sc, "engine-contradiction");
    const Position dual_phi0{sc.c, -1};
    const auto st = cmp.right.status(dual_phi0);
    if (st == TermStatus::Zero) return dual_is_wit1("engine-forced-zero");
    if (st == TermStatus::NonZero) {
        const Position transform_dual{sc.surviving_column(), sc.transform_codim()};
        for (const auto& rel : cmp.relations) {
            if (rel.kind != RelationKind::Identification) continue;
            if (rel.terms[0].pos == transform_dual && rel.terms[1].pos == dual_phi0)
                return dual_identification(sc, "engine-identification");
        }
    }
    return {ConclusionKind::Undetermined, "relations do not decide Φ^0(E^D)", "engine"};
}

EngineRun run_engine(const SheafScenario& sc)
{
    auto [left, right] = build_pages(sc);
    auto dl = degenerate(left);
    auto dr = degenerate(right);
    auto cmp = compare_limits(dl.page, dr.page);
    auto concl = engine_conclusion(sc, cmp);
    return {sc, std::move(dl), std::move(dr), std::move(cmp), std::move(concl)};
}

} // namespace ellfm
