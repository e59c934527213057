// ============================================================================
// nzf/stateset.hpp — symbolic state sets: per-mode unions of zones
// ============================================================================

#ifndef NZF_STATESET_HPP
#define NZF_STATESET_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nzf/model.hpp"

namespace nzf {

// ── Analysis statistics ─────────────────────────────────────────────────────
// Shared counters for one check; threaded through the engine via Context.

struct EvalStats {
    std::int64_t fixpoint_iterations = 0;
    std::int64_t zones_enumerated = 0;
    std::int64_t dfs_nodes = 0;
    int level_used = 0;
    bool saturated = false;
    std::int64_t peak_zone_count = 0;

    void note_federation(std::int64_t zones) {
        if (zones > peak_zone_count) peak_zone_count = zones;
    }
};

// ── Context ─────────────────────────────────────────────────────────────────
// Everything the symbolic operators need besides their operands: the model,
// the extrapolation ceiling and the active matrix dimension (which grows
// when auxiliary clocks are in scope).

struct Context {
    const TimedAutomaton* ta = nullptr;
    int ceiling = 1;
    int dim = 0;
    EvalStats* stats = nullptr;

    Context with_dim(int d) const {
        Context c = *this;
        c.dim = d;
        return c;
    }
    /// Context with one extra auxiliary clock.
    Context lifted() const { return with_dim(dim + 1); }
};

Context make_context(const TimedAutomaton& a, int ceiling, EvalStats* stats = nullptr);

// ── StateSet ────────────────────────────────────────────────────────────────
// Finite union of canonical nonempty zones, keyed by mode.  Zones within a
// mode are kept pairwise non-included (reduced form).

class StateSet {
public:
    StateSet() = default;

    bool is_empty() const { return parts_.empty(); }
    const std::map<ModeId, std::vector<Dbm>>& parts() const { return parts_; }

    const std::vector<Dbm>* zones(ModeId q) const;
    /// Inserts a canonical zone, keeping the reduced form.  Empty zones are
    /// ignored.  Returns true when the zone was not already covered pairwise.
    bool add_zone(ModeId q, Dbm z);

    std::int64_t zone_count() const;

    bool operator==(const StateSet& o) const { return parts_ == o.parts_; }

    /// Deterministic dump: one "mode: constraints" line per zone, sorted by
    /// mode id and then lexicographically.
    std::string dump(const Context& ctx) const;

private:
    std::map<ModeId, std::vector<Dbm>> parts_;
};

// ── Constructors ────────────────────────────────────────────────────────────

/// Every mode mapped to the full zone of the context dimension.
StateSet universe_set(const Context& ctx);

/// Exact symbolic image of a state predicate.
StateSet from_predicate(const Context& ctx, const StatePredicate& p);

/// One mode mapped to one zone.
StateSet single_zone(ModeId q, Dbm z);

/// Every mode mapped to its invariant zone.
StateSet invariant_set(const Context& ctx);

// ── Boolean algebra (exact) ─────────────────────────────────────────────────

StateSet unite(const StateSet& a, const StateSet& b);
StateSet intersect(const StateSet& a, const StateSet& b);
StateSet negate(const Context& ctx, const StateSet& a);
/// a with every state of b removed; equals intersect(a, negate(b)).
StateSet difference(const Context& ctx, const StateSet& a, const StateSet& b);

bool is_empty(const StateSet& s);
/// Cover-based inclusion: every zone of b is covered by the union of a's
/// zones in the same mode.
bool subsumes(const StateSet& a, const StateSet& b);
bool set_equal(const StateSet& a, const StateSet& b);

/// Is the scaled valuation (mode, clocks) a member?
bool contains_scaled(const StateSet& s, ModeId q,
                     const std::vector<std::int64_t>& vals, std::int64_t scale);

// ── Normalization ───────────────────────────────────────────────────────────

/// Canonicalize, drop empty and pairwise-included zones.  With `extrapolate`
/// set, zones are widened to the context ceiling first (used at engine
/// operator boundaries; plain boolean algebra stays exact).
StateSet reduce(const Context& ctx, const StateSet& s, bool extrapolate_zones);

/// Lift a set by one unconstrained auxiliary clock.
StateSet lift(const StateSet& s);
/// Existentially drop the highest auxiliary clock.
StateSet unlift(const Context& lifted_ctx, const StateSet& s);

/// Is zone z covered by the union of the given zones?
bool covered_by(const Dbm& z, const std::vector<Dbm>& cover);

}  // namespace nzf

#endif  // NZF_STATESET_HPP
