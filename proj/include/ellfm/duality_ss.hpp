#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellfm/fm_calculus.hpp"

namespace ellfm {

/// A coherent sheaf E on X of dimension n, described only by what the
/// duality decision rules need: codimension, WIT type, and how the
/// dimension of the surviving transform compares to dim E.
struct SheafScenario {
    int n = 3;
    int c = 0;
    WitType wit = WitType::Wit0;
    int dim_shift = 0;

    /// Throws InfeasibleScenario.
    void validate() const;
    /// Codimension of the surviving transform Phi^i E.
    int transform_codim() const { return c - dim_shift; }
    /// Column of the Left page hosting the surviving transform.
    int surviving_column() const { return wit == WitType::Wit0 ? 0 : -1; }

    friend bool operator==(const SheafScenario&, const SheafScenario&) = default;
};

enum class Side { Left, Right };
enum class TermStatus { Zero, NonZero, Unknown };

std::string_view to_string(Side s);
std::string_view to_string(TermStatus s);

using Position = std::pair<int, int>; // (p, q)

struct Term {
    TermStatus status = TermStatus::Unknown;
    std::string label;
};

/// E_2 page of one of the two duality spectral sequences.
///
/// Left:  E^{pq} = Ext^q(Phi^{-p} E, O_X),                  -1 <= p <= 0, 0 <= q <= n.
/// Right: E^{pq} = iota^*(Phi^{q+1} Ext^p(E, O_X)) (x) p^*L,  0 <= p <= n, -1 <= q <= 0.
/// Positions outside the region are Zero.
class PageGrid {
public:
    PageGrid(Side side, int n);

    Side side() const noexcept { return side_; }
    int n() const noexcept { return n_; }
    int p_min() const noexcept { return p_min_; }
    int p_max() const noexcept { return p_max_; }
    int q_min() const noexcept { return q_min_; }
    int q_max() const noexcept { return q_max_; }

    bool in_region(Position pos) const;
    TermStatus status(Position pos) const;
    std::string label(Position pos) const;
    const std::map<Position, Term>& terms() const noexcept { return terms_; }

    /// Unknown -> Zero/NonZero only; returns false when the request conflicts.
    bool set_status(Position pos, TermStatus status);
    /// Reset a term to Unknown (used when a differential may alter it).
    void forget(Position pos);

    /// In-region positions with p + q = k, ordered by p.
    std::vector<Position> diagonal(int k) const;
    int min_degree() const { return p_min_ + q_min_; }
    int max_degree() const { return p_max_ + q_max_; }

    /// Groups of positions of which at least one must be NonZero.
    const std::vector<std::vector<Position>>& nonvanishing() const noexcept { return nonvanishing_; }
    void require_nonvanishing(std::vector<Position> group) { nonvanishing_.push_back(std::move(group)); }

private:
    Side side_;
    int n_;
    int p_min_, p_max_, q_min_, q_max_;
    std::map<Position, Term> terms_;
    std::vector<std::vector<Position>> nonvanishing_;
};

struct TermRef {
    Side side;
    Position pos;
    std::string label;

    friend bool operator==(const TermRef&, const TermRef&) = default;
};

enum class RelationKind { Identification, ForcedZero, ShortExact, Forbidden };

std::string_view to_string(RelationKind k);

/// Consequence of comparing the two limits on one anti-diagonal p + q = degree.
/// Identification: terms = {left, right}. ForcedZero: terms = {t}.
/// ShortExact: terms = {sub, mid, quot}. Forbidden: terms empty, reason set.
struct DerivedRelation {
    RelationKind kind;
    int degree;
    std::vector<TermRef> terms;
    std::string reason;

    std::string render() const;
    friend bool operator==(const DerivedRelation&, const DerivedRelation&) = default;
};

/// E_2 pages for the scenario with all vanishing facts applied.
std::pair<PageGrid, PageGrid> build_pages(const SheafScenario& sc);

struct Arrow {
    int page;
    Position from;
    Position to;
};

struct Degeneration {
    PageGrid page;
    int degeneration_page;
    std::vector<Arrow> possible_arrows;
};

/// Runs d_r : (p, q) -> (p - r + 1, q + r) for r = 2, 3, ... An arrow is
/// possible when both ends are in-region and not Zero; its ends become
/// Unknown on the next page.
Degeneration degenerate(const PageGrid& page);

struct Comparison {
    PageGrid left;
    PageGrid right;
    std::vector<DerivedRelation> relations;
    bool contradiction = false;
};

/// Propagates Zero/NonZero across anti-diagonals until a fixpoint, then emits
/// identifications and short exact sequences from the surviving terms.
Comparison compare_limits(const PageGrid& left, const PageGrid& right);

enum class ConclusionKind { DualIdentification, DualIsWit1, Forbidden, Undetermined };

std::string_view to_string(ConclusionKind k);

struct Conclusion {
    ConclusionKind kind;
    std::string statement;
    std::string rule;

    friend bool operator==(const Conclusion& a, const Conclusion& b)
    {
        return a.kind == b.kind && a.statement == b.statement;
    }
};

/// Closed-form decision table for WIT0 / WIT1 sheaves.
Conclusion duality_decision(const SheafScenario& sc);

struct EngineRun {
    SheafScenario scenario;
    Degeneration left;
    Degeneration right;
    Comparison comparison;
    Conclusion conclusion;
};

/// build_pages -> degenerate -> compare_limits, then reads off the conclusion
/// the relations entail.
EngineRun run_engine(const SheafScenario& sc);

Conclusion engine_conclusion(const SheafScenario& sc, const Comparison& cmp);

} // namespace ellfm
