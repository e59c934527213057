// ============================================================================
// backward.cpp — time/transition preconditions and the reachability fixpoint
// ============================================================================

#include "nzf/backward.hpp"

#include <cassert>

namespace nzf {

StateSet time_bck(const Context& ctx, const StateSet& s) {
    StateSet r;
    for (const auto& [q, zs] : s.parts()) {
        const Dbm inv = ctx.ta->invariant_zone(q, ctx.dim);
        for (const Dbm& z : zs) {
            Dbm t = intersect(z, inv);
            if (is_empty(t)) continue;
            r.add_zone(q, intersect(down(t), inv));
        }
    }
    return reduce(ctx, r, true);
}

Dbm xtion_bck_zone(const Context& ctx, const Dbm& target, const Transition& e) {
    const Dbm inv_dst = ctx.ta->invariant_zone(e.dst, ctx.dim);
    Dbm landed = intersect(target, inv_dst);
    if (is_empty(landed)) return Dbm::empty_zone(ctx.dim);
    Dbm pre = reset_pre(landed, e.resets);
    pre = intersect(pre, ctx.ta->guard_zone(e, ctx.dim));
    pre = intersect(pre, ctx.ta->invariant_zone(e.src, ctx.dim));
    return pre;
}

StateSet xtion_bck(const Context& ctx, const StateSet& s, const Transition& e) {
    StateSet r;
    const auto* zs = s.zones(e.dst);
    if (!zs) return r;
    for (const Dbm& z : *zs) r.add_zone(e.src, xtion_bck_zone(ctx, z, e));
    return reduce(ctx, r, true);
}

Dbm delay_pred_within(const Dbm& piece, const Dbm& inv, const Dbm& target) {
    // End point: inside the target and the invariant, on the piece or its
    // delay-limit boundary; start point: inside the piece.  Differences are
    // constant along a delay, so intermediate states stay in the piece.
    Dbm end = intersect(intersect(target, up_closure(piece)), inv);
    if (is_empty(end)) return end;
    return intersect(down(end), piece);
}

// ── rch_bck ─────────────────────────────────────────────────────────────────

namespace {

// Convex confinement pieces per mode: zones of s1 intersected with the mode
// invariant.  Delays of a witness path stay within one piece at a time; the
// fixpoint absorbs multi-piece delays.
std::vector<std::vector<Dbm>> confinement_pieces(const Context& ctx,
                                                 const StateSet& s1) {
    std::vector<std::vector<Dbm>> pieces(ctx.ta->num_modes());
    for (const auto& [q, zs] : s1.parts()) {
        const Dbm inv = ctx.ta->invariant_zone(q, ctx.dim);
        for (const Dbm& z : zs) {
            Dbm p = intersect(z, inv);
            if (!is_empty(p)) pieces[q].push_back(std::move(p));
        }
    }
    return pieces;
}

}  // namespace

StateSet rch_bck(const Context& ctx, const StateSet& s1, const StateSet& s2,
                 RchTrace* trace) {
    StateSet f = reduce(ctx, s2, true);
    const auto pieces = confinement_pieces(ctx, s1);
    std::vector<Dbm> invs;
    invs.reserve(ctx.ta->num_modes());
    for (ModeId q = 0; q < ctx.ta->num_modes(); ++q)
        invs.push_back(ctx.ta->invariant_zone(q, ctx.dim));

    // Transitions indexed by target mode, so only relevant frontier zones
    // are expanded.
    std::vector<std::vector<const Transition*>> by_dst(ctx.ta->num_modes());
    for (const Transition& e : ctx.ta->transitions) by_dst[e.dst].push_back(&e);

    StateSet frontier = f;
    int round = 0;
    while (!frontier.is_empty()) {
        ++round;
        if (ctx.stats) ++ctx.stats->fixpoint_iterations;
        StateSet next;

        auto admit = [&](ModeId q, Dbm z, ModeId pq, const Dbm& pz, int eid) {
            z = extrapolate(canonicalize(std::move(z)), ctx.ceiling);
            if (is_empty(z)) return;
            const auto* existing = f.zones(q);
            if (existing) {
                for (const Dbm& e : *existing)
                    if (includes(e, z)) return;
            }
            if (trace)
                trace->steps.push_back(RchStep{q, z, pq, pz, eid, round});
            f.add_zone(q, z);
            next.add_zone(q, std::move(z));
        };

        // Discrete predecessors of the frontier, restricted to s1.
        for (const auto& [q, zs] : frontier.parts()) {
            for (const Transition* e : by_dst[q]) {
                const auto* confine = s1.zones(e->src);
                if (!confine) continue;
                for (const Dbm& z : zs) {
                    Dbm pre = xtion_bck_zone(ctx, z, *e);
                    if (is_empty(pre)) continue;
                    for (const Dbm& c : *confine)
                        admit(e->src, intersect(pre, c), q, z, e->id);
                }
            }
        }

        // Confined delay predecessors of the frontier.
        for (const auto& [q, zs] : frontier.parts()) {
            for (const Dbm& piece : pieces[q]) {
                for (const Dbm& z : zs) {
                    Dbm pre = delay_pred_within(piece, invs[q], z);
                    if (!is_empty(pre)) admit(q, std::move(pre), q, z, -1);
                }
            }
        }

        if (ctx.stats) ctx.stats->note_federation(f.zone_count());
        frontier = std::move(next);
    }
    return f;
}

}  // namespace nzf
