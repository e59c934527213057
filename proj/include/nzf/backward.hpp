// ============================================================================
// nzf/backward.hpp — symbolic precondition operators and backward reachability
// ============================================================================

#ifndef NZF_BACKWARD_HPP
#define NZF_BACKWARD_HPP

#include <optional>

#include "nzf/stateset.hpp"

namespace nzf {

/// States that can reach s by pure time passage while their mode invariant
/// holds along the whole delay: per mode, down(z ∩ inv) ∩ inv.
StateSet time_bck(const Context& ctx, const StateSet& s);

/// Weakest precondition of one discrete transition into s: states of the
/// source mode satisfying its invariant and the guard from which firing e
/// (resetting its clocks) lands in s ∩ inv(target).
StateSet xtion_bck(const Context& ctx, const StateSet& s, const Transition& e);

/// Single-zone flavor of xtion_bck (the target zone sits in mode dst(e));
/// returns the precondition zone in mode src(e).
Dbm xtion_bck_zone(const Context& ctx, const Dbm& target, const Transition& e);

/// Delay predecessors of `target` confined to one convex piece: states of
/// `piece` that can delay into target with every intermediate state inside
/// `piece` (and the invariant `inv`).  `piece` must satisfy inv already.
Dbm delay_pred_within(const Dbm& piece, const Dbm& inv, const Dbm& target);

// ── Backward reachability ───────────────────────────────────────────────────

/// One recorded zone-step parent link: the new zone is contained in the
/// time/transition precondition of the parent zone.
struct RchStep {
    ModeId mode;           // mode of the new zone
    Dbm zone;              // the new zone
    ModeId parent_mode;
    Dbm parent_zone;
    int transition_id;     // -1 for a time step
    int round;             // fixpoint round that produced the zone
};

struct RchTrace {
    std::vector<RchStep> steps;
};

/// Least fixpoint of backward reachability: the states that can reach s2
/// along finite paths whose every state strictly before the hit satisfies
/// s1 (delays are confined to s1 piecewise, so non-convex s1 is exact).
/// s2 itself is always included.
StateSet rch_bck(const Context& ctx, const StateSet& s1, const StateSet& s2,
                 RchTrace* trace = nullptr);

}  // namespace nzf

#endif  // NZF_BACKWARD_HPP
