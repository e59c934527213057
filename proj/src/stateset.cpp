// ============================================================================
// stateset.cpp — federation operations
// ============================================================================

#include "nzf/stateset.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace nzf {

Context make_context(const TimedAutomaton& a, int ceiling, EvalStats* stats) {
    Context c;
    c.ta = &a;
    c.ceiling = ceiling;
    c.dim = a.base_dim();
    c.stats = stats;
    return c;
}

// ── StateSet basics ─────────────────────────────────────────────────────────

const std::vector<Dbm>* StateSet::zones(ModeId q) const {
    auto it = parts_.find(q);
    return it == parts_.end() ? nullptr : &it->second;
}

bool StateSet::add_zone(ModeId q, Dbm z) {
    if (is_empty(z)) return false;
    auto& zs = parts_[q];
    for (const Dbm& existing : zs) {
        if (includes(existing, z)) {
            if (zs.empty()) parts_.erase(q);
            return false;
        }
    }
    zs.erase(std::remove_if(zs.begin(), zs.end(),
                            [&](const Dbm& e) { return includes(z, e); }),
             zs.end());
    zs.push_back(std::move(z));
    return true;
}

std::int64_t StateSet::zone_count() const {
    std::int64_t n = 0;
    for (const auto& [q, zs] : parts_) n += static_cast<std::int64_t>(zs.size());
    return n;
}

std::string StateSet::dump(const Context& ctx) const {
    std::vector<std::string> names;
    if (ctx.ta) {
        names = ctx.ta->clock_names;
        for (int i = ctx.ta->base_dim(); i < ctx.dim; ++i)
            names.push_back("aux" + std::to_string(i - ctx.ta->base_dim() + 1));
    }
    std::ostringstream out;
    for (const auto& [q, zs] : parts_) {
        std::vector<std::string> lines;
        lines.reserve(zs.size());
        const std::string mode =
            ctx.ta ? ctx.ta->modes[q].name : std::to_string(q);
        for (const Dbm& z : zs) lines.push_back(mode + ": " + z.to_string(names));
        std::sort(lines.begin(), lines.end());
        for (const auto& l : lines) out << l << "\n";
    }
    return out.str();
}

// ── Constructors ────────────────────────────────────────────────────────────

StateSet universe_set(const Context& ctx) {
    StateSet s;
    for (ModeId q = 0; q < ctx.ta->num_modes(); ++q)
        s.add_zone(q, Dbm::universe(ctx.dim));
    return s;
}

StateSet single_zone(ModeId q, Dbm z) {
    StateSet s;
    s.add_zone(q, std::move(z));
    return s;
}

StateSet invariant_set(const Context& ctx) {
    StateSet s;
    for (ModeId q = 0; q < ctx.ta->num_modes(); ++q)
        s.add_zone(q, ctx.ta->invariant_zone(q, ctx.dim));
    return s;
}

namespace {

// Positive/negative translation of a predicate, with negation pushed down to
// the atoms (negated mode atoms use the exactly-one-mode reading).
StateSet pred_set(const Context& ctx, const StatePredicate& p, bool positive) {
    using K = StatePredicate::Kind;
    switch (p.kind) {
        case K::True:
            return positive ? universe_set(ctx) : StateSet{};
        case K::ModeAtom: {
            StateSet s;
            for (ModeId q = 0; q < ctx.ta->num_modes(); ++q) {
                if ((q == p.mode) == positive) s.add_zone(q, Dbm::universe(ctx.dim));
            }
            return s;
        }
        case K::ClockAtom: {
            ClockConstraint c = p.atom;
            if (!positive) {
                switch (c.op) {
                    case RelOp::Lt: c.op = RelOp::Ge; break;
                    case RelOp::Le: c.op = RelOp::Gt; break;
                    case RelOp::Ge: c.op = RelOp::Lt; break;
                    case RelOp::Gt: c.op = RelOp::Le; break;
                    case RelOp::Eq: {
                        // x != c splits into two zones
                        StateSet s;
                        for (ModeId q = 0; q < ctx.ta->num_modes(); ++q) {
                            Dbm lo = Dbm::universe(ctx.dim);
                            constrain_with(lo, {c.clock, RelOp::Lt, c.constant});
                            s.add_zone(q, canonicalize(std::move(lo)));
                            Dbm hi = Dbm::universe(ctx.dim);
                            constrain_with(hi, {c.clock, RelOp::Gt, c.constant});
                            s.add_zone(q, canonicalize(std::move(hi)));
                        }
                        return s;
                    }
                }
            }
            StateSet s;
            for (ModeId q = 0; q < ctx.ta->num_modes(); ++q) {
                Dbm z = Dbm::universe(ctx.dim);
                constrain_with(z, c);
                s.add_zone(q, canonicalize(std::move(z)));
            }
            return s;
        }
        case K::Or: {
            StateSet a = pred_set(ctx, *p.lhs, positive);
            StateSet b = pred_set(ctx, *p.rhs, positive);
            return positive ? unite(a, b) : intersect(a, b);
        }
        case K::And: {
            StateSet a = pred_set(ctx, *p.lhs, positive);
            StateSet b = pred_set(ctx, *p.rhs, positive);
            return positive ? intersect(a, b) : unite(a, b);
        }
        case K::Not:
            return pred_set(ctx, *p.lhs, !positive);
    }
    return {};
}

}  // namespace

StateSet from_predicate(const Context& ctx, const StatePredicate& p) {
    return pred_set(ctx, p, true);
}

// ── Boolean algebra ─────────────────────────────────────────────────────────

StateSet unite(const StateSet& a, const StateSet& b) {
    StateSet r = a;
    for (const auto& [q, zs] : b.parts())
        for (const Dbm& z : zs) r.add_zone(q, z);
    return r;
}

StateSet intersect(const StateSet& a, const StateSet& b) {
    StateSet r;
    for (const auto& [q, zs] : a.parts()) {
        const auto* other = b.zones(q);
        if (!other) continue;
        for (const Dbm& za : zs)
            for (const Dbm& zb : *other) r.add_zone(q, intersect(za, zb));
    }
    return r;
}

namespace {

// Exact per-mode complement of a list of zones: the intersection, over the
// zones, of their single-constraint complement pieces.
std::vector<Dbm> complement_zones(int dim, const std::vector<Dbm>& zs) {
    std::vector<Dbm> acc{Dbm::universe(dim)};
    for (const Dbm& z : zs) {
        std::vector<Dbm> pieces = complement(z);
        std::vector<Dbm> next;
        for (const Dbm& a : acc) {
            for (const Dbm& p : pieces) {
                Dbm piece = intersect(a, p);
                if (is_empty(piece)) continue;
                bool covered = false;
                for (const Dbm& n : next) {
                    if (includes(n, piece)) { covered = true; break; }
                }
                if (!covered) next.push_back(std::move(piece));
            }
        }
        acc = std::move(next);
        if (acc.empty()) break;
    }
    return acc;
}

}  // namespace

StateSet negate(const Context& ctx, const StateSet& a) {
    StateSet r;
    for (ModeId q = 0; q < ctx.ta->num_modes(); ++q) {
        const auto* zs = a.zones(q);
        if (!zs) {
            r.add_zone(q, Dbm::universe(ctx.dim));
            continue;
        }
        for (Dbm& piece : complement_zones(ctx.dim, *zs))
            r.add_zone(q, std::move(piece));
    }
    return r;
}

StateSet difference(const Context& ctx, const StateSet& a, const StateSet& b) {
    StateSet r;
    for (const auto& [q, zs] : a.parts()) {
        const auto* rem = b.zones(q);
        if (!rem) {
            for (const Dbm& z : zs) r.add_zone(q, z);
            continue;
        }
        std::vector<Dbm> pieces = complement_zones(ctx.dim, *rem);
        for (const Dbm& z : zs)
            for (const Dbm& p : pieces) r.add_zone(q, intersect(z, p));
    }
    return r;
}

bool is_empty(const StateSet& s) { return s.is_empty(); }

bool covered_by(const Dbm& z, const std::vector<Dbm>& cover) {
    std::vector<Dbm> rest{z};
    for (const Dbm& c : cover) {
        if (rest.empty()) return true;
        std::vector<Dbm> pieces = complement(c);
        std::vector<Dbm> next;
        for (const Dbm& r : rest) {
            if (includes(c, r)) continue;
            for (const Dbm& p : pieces) {
                Dbm piece = intersect(r, p);
                if (!is_empty(piece)) next.push_back(std::move(piece));
            }
        }
        rest = std::move(next);
    }
    return rest.empty();
}

bool subsumes(const StateSet& a, const StateSet& b) {
    static const std::vector<Dbm> kNone;
    for (const auto& [q, zs] : b.parts()) {
        const auto* cover = a.zones(q);
        const auto& cov = cover ? *cover : kNone;
        for (const Dbm& z : zs) {
            if (!covered_by(z, cov)) return false;
        }
    }
    return true;
}

bool set_equal(const StateSet& a, const StateSet& b) {
    return subsumes(a, b) && subsumes(b, a);
}

bool contains_scaled(const StateSet& s, ModeId q,
                     const std::vector<std::int64_t>& vals, std::int64_t scale) {
    const auto* zs = s.zones(q);
    if (!zs) return false;
    for (const Dbm& z : *zs) {
        if (contains_scaled(z, vals, scale)) return true;
    }
    return false;
}

// ── Normalization ───────────────────────────────────────────────────────────

StateSet reduce(const Context& ctx, const StateSet& s, bool extrapolate_zones) {
    StateSet r;
    for (const auto& [q, zs] : s.parts()) {
        for (const Dbm& z : zs) {
            Dbm c = canonicalize(z);
            if (is_empty(c)) continue;
            if (extrapolate_zones) c = extrapolate(c, ctx.ceiling);
            r.add_zone(q, std::move(c));
        }
    }
    if (ctx.stats) ctx.stats->note_federation(r.zone_count());
    return r;
}

StateSet lift(const StateSet& s) {
    StateSet r;
    for (const auto& [q, zs] : s.parts())
        for (const Dbm& z : zs) r.add_zone(q, add_clock(z));
    return r;
}

StateSet unlift(const Context& lifted_ctx, const StateSet& s) {
    (void)lifted_ctx;
    StateSet r;
    for (const auto& [q, zs] : s.parts())
        for (const Dbm& z : zs) r.add_zone(q, drop_clock(z));
    return r;
}

}  // namespace nzf
