// ============================================================================
// nzf/nzf_engine.hpp — non-Zeno fairness evaluation
// ============================================================================
//
// NZF(eta0, eta1, eta2) holds at the states that start a run which first
// stays in eta0, then in eta1 forever, and visits eta2 infinitely often —
// with time diverging.  Divergence is tracked with a fresh auxiliary clock:
// fair cycles must take at least one time unit per lap.
//
// The exact evaluation runs a greatest fixpoint whose body is a least
// fixpoint (backward reachability).  The successive under-approximation
// instead enumerates zones that provably lie on fair non-Zeno cycles and
// accumulates their backward closures, one zone per level.
//
// ============================================================================

#ifndef NZF_NZF_ENGINE_HPP
#define NZF_NZF_ENGINE_HPP

#include <optional>
#include <utility>

#include "nzf/backward.hpp"

namespace nzf {

// ── Query ───────────────────────────────────────────────────────────────────

struct NzfQuery {
    StateSet eta0;
    StateSet eta1;
    StateSet eta2;
};

/// Query with all three arguments set to s.
NzfQuery nzf_query(StateSet eta0, StateSet eta1, StateSet eta2);

// ── Core fixpoints ──────────────────────────────────────────────────────────

/// Greatest fixpoint of the cycle condition: the largest subset F of `seed`
/// such that every F-state can return to F, through eta1, with at least one
/// time unit elapsed.  The auxiliary clock is added and eliminated here.
StateSet nzf_core_gfp(const Context& ctx, const StateSet& eta1,
                      const StateSet& seed);

/// Exact NZF evaluation: backward closure (through eta0, then eta1) of the
/// greatest fixpoint of the fair-cycle condition on eta2.
StateSet nzf_exact(const Context& ctx, const NzfQuery& q);

// ── Fair-zone search ────────────────────────────────────────────────────────

/// Sub-federation of s whose zones have no upper bounds on any clock and can
/// delay in place without leaving their mode invariant.  Every state of such
/// a zone idles forever, so the zone is trivially on a fair non-Zeno cycle
/// when s under-approximates eta1 ∧ eta2.
StateSet get_zones_wo_upperbounds(const Context& ctx, const StateSet& s);

/// Depth-first search for one zone of eta1 ∧ eta2 that provably lies on an
/// (eta1, eta2) non-Zeno cycle: every state of the returned zone returns to
/// the zone through eta1 with at least one time unit elapsed.  Candidates
/// that fail are removed from a local copy of eta1 and the search continues;
/// returns nothing when no fair zone is left.
std::optional<std::pair<ModeId, Dbm>> get_a_zone_w_dfs(const Context& ctx,
                                                       const StateSet& eta1,
                                                       const StateSet& eta2);

// ── Successive under-approximation ──────────────────────────────────────────

struct UapproxResult {
    StateSet states;
    int levels_used = 0;
    bool saturated = false;  // the fair-zone search ran out before the level
};

/// Level 0 takes the unbounded fair zones; each further level adds the
/// backward closure of one searched fair zone and removes the zone from the
/// remaining search space.
UapproxResult nzf_successive_uapprox(const Context& ctx, const NzfQuery& q,
                                     int level);

/// Variant that removes whole backward closures from the search space, so
/// zones of an already-covered cycle are never searched again.
UapproxResult nzf_successive_uapprox_big_chunks(const Context& ctx,
                                                const NzfQuery& q, int level);

// ── Dispatch ────────────────────────────────────────────────────────────────

/// flag -1: under-approximate at cfg.level (big-chunks per cfg);
/// flag 0: exact; flag +1: exact (a sound over-approximation).
StateSet nzf(const Context& ctx, const NzfQuery& q, const EvalConfig& cfg);

// ── Auxiliary-clock zones ───────────────────────────────────────────────────

/// Zone (at `dim`) constraining the highest clock to be exactly 0.
Dbm aux_eq0_zone(int dim);
/// Zone (at `dim`) constraining the highest clock to be at least 1.
Dbm aux_ge1_zone(int dim);

}  // namespace nzf

#endif  // NZF_NZF_ENGINE_HPP
