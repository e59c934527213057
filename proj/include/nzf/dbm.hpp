// ============================================================================
// nzf/dbm.hpp — Difference Bound Matrices (zones) and per-zone operators
// ============================================================================
//
// A zone is a convex set of clock valuations described by constraints of the
// form  x - x' ~ d  with  ~ in {<, <=},  over the clocks and the constant
// reference clock 0.  Zones are stored as square matrices of bounds; index 0
// is the reference clock, indices 1..dim-1 are real clocks.
//
// All operators return canonical zones (tightest constraint systems, computed
// by all-pairs shortest-path closure).  Inconsistent systems canonicalize to
// a distinguished empty zone of the same dimension.
//
// ============================================================================

#ifndef NZF_DBM_HPP
#define NZF_DBM_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace nzf {

using ClockId = int;                 // 0 is the reference clock
using ClockSet = std::vector<ClockId>;

// ── Bound ───────────────────────────────────────────────────────────────────
// One matrix entry: the pair (~, d) of a constraint  x - x' ~ d.
// Infinity is encoded as (<, kInfinity) — an absent constraint.

struct Bound {
    static constexpr std::int32_t kInfinity =
        std::numeric_limits<std::int32_t>::max() / 4;

    std::int32_t value = kInfinity;
    bool strict = true;  // true encodes '<', false encodes '<='

    static Bound less(std::int32_t v) { return Bound{v, true}; }
    static Bound less_eq(std::int32_t v) { return Bound{v, false}; }
    static Bound infinity() { return Bound{kInfinity, true}; }

    bool is_infinite() const { return value >= kInfinity; }

    bool operator==(const Bound& o) const {
        if (is_infinite() && o.is_infinite()) return true;
        return value == o.value && strict == o.strict;
    }
    bool operator!=(const Bound& o) const { return !(*this == o); }

    // Tightness order: smaller means tighter.  (<, d) is tighter than
    // (<=, d); any finite bound is tighter than infinity.
    bool operator<(const Bound& o) const {
        if (is_infinite()) return false;
        if (o.is_infinite()) return true;
        if (value != o.value) return value < o.value;
        return strict && !o.strict;
    }
    bool operator<=(const Bound& o) const { return *this < o || *this == o; }

    // Bound addition: values add, strictness is the OR of the flags.
    Bound operator+(const Bound& o) const {
        if (is_infinite() || o.is_infinite()) return infinity();
        return Bound{value + o.value, strict || o.strict};
    }

    // Negation of the constraint x - y ~ d yields y - x ~' -d where the
    // strictness flips: ¬(x - y <= d) is y - x < -d.
    Bound negated() const { return Bound{-value, !strict}; }

    std::string to_string() const;
};

inline Bound min(const Bound& a, const Bound& b) { return a < b ? a : b; }

// ── Dbm ─────────────────────────────────────────────────────────────────────

class Dbm {
public:
    Dbm() = default;

    /// All nonnegative valuations of the given dimension (incl. reference).
    static Dbm universe(int dim);
    /// The empty zone of the given dimension.
    static Dbm empty_zone(int dim);

    int dim() const { return dim_; }
    bool marked_empty() const { return empty_; }

    const Bound& at(int i, int j) const { return cells_[i * dim_ + j]; }
    void set(int i, int j, Bound b) { cells_[i * dim_ + j] = b; }

    /// Tighten entry (i, j) to the minimum of the current bound and b.
    void constrain(int i, int j, Bound b);

    bool operator==(const Dbm& o) const;

    /// Deterministic conjunction dump, e.g. "x <= 3 && y - x < 2".
    /// Used for debugging, golden tests and deterministic zone ordering.
    std::string to_string(const std::vector<std::string>& clock_names) const;

private:
    friend Dbm canonicalize(Dbm d);
    friend Dbm down(const Dbm& d);
    friend Dbm up_closure(const Dbm& d);

    int dim_ = 0;
    bool empty_ = true;
    std::vector<Bound> cells_;
};

// ── Zone operators ──────────────────────────────────────────────────────────

/// Shortest-path closure.  Detects inconsistency (negative cycle) and
/// returns the empty zone in that case.  Idempotent.
Dbm canonicalize(Dbm d);

bool is_empty(const Dbm& d);

/// True iff every valuation of b satisfies a (entrywise on canonical zones).
bool includes(const Dbm& a, const Dbm& b);

/// Canonical conjunction of two zones of the same dimension.
Dbm intersect(const Dbm& a, const Dbm& b);

/// Past closure: { v | exists delay d >= 0 with v + d in z }.  Lower bounds
/// relax to x >= 0; upper bounds and differences are kept.
Dbm down(const Dbm& d);

/// Closure of a zone under the limits of delays that stay inside it:
/// finite strict upper bounds x < c are relaxed to x <= c.
Dbm up_closure(const Dbm& d);

/// Existential projection of the listed clocks (Fourier–Motzkin on the
/// canonical form): the clocks become unconstrained except x >= 0.
Dbm fm_eliminate(const Dbm& d, const ClockSet& xs);

/// Weakest precondition of resetting the listed clocks to zero:
/// { v | v[xs := 0] in d }.
Dbm reset_pre(const Dbm& d, const ClockSet& xs);

/// Zones whose union is the exact complement of d within the nonnegative
/// orthant (one zone per negated constraint; not disjoint).
std::vector<Dbm> complement(const Dbm& d);

/// Max-constant abstraction: finite bounds above the ceiling become
/// infinite, bounds below -ceiling become (<, -ceiling); re-canonicalized.
/// Never shrinks the zone.
Dbm extrapolate(const Dbm& d, int ceiling);

/// True iff no clock has a finite upper bound (row entries against 0).
bool has_no_upper_bounds(const Dbm& d);

/// Extend with one fresh unconstrained clock at the highest index.
Dbm add_clock(const Dbm& d);

/// Project out the highest-index clock and shrink the matrix.
Dbm drop_clock(const Dbm& d);

/// Membership of a rational valuation given in fixed-point units
/// (values scaled by `scale`; vals[0] must be 0).
bool contains_scaled(const Dbm& d, const std::vector<std::int64_t>& vals,
                     std::int64_t scale);

}  // namespace nzf

#endif  // NZF_DBM_HPP
