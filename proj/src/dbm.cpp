// ============================================================================
// dbm.cpp — zone operator implementations
// ============================================================================

#include "nzf/dbm.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace nzf {

// ── Bound ───────────────────────────────────────────────────────────────────

std::string Bound::to_string() const {
    if (is_infinite()) return "< inf";
    return std::string(strict ? "< " : "<= ") + std::to_string(value);
}

// ── Dbm basics ──────────────────────────────────────────────────────────────

Dbm Dbm::universe(int dim) {
    assert(dim >= 1);
    Dbm z;
    z.dim_ = dim;
    z.empty_ = false;
    z.cells_.assign(static_cast<size_t>(dim) * dim, Bound::infinity());
    for (int i = 0; i < dim; ++i) z.set(i, i, Bound::less_eq(0));
    for (int j = 1; j < dim; ++j) z.set(0, j, Bound::less_eq(0));  // x >= 0
    return z;
}

Dbm Dbm::empty_zone(int dim) {
    Dbm z;
    z.dim_ = dim;
    z.empty_ = true;
    return z;
}

void Dbm::constrain(int i, int j, Bound b) {
    if (b < at(i, j)) set(i, j, b);
}

bool Dbm::operator==(const Dbm& o) const {
    if (dim_ != o.dim_) return false;
    if (empty_ || o.empty_) return empty_ == o.empty_;
    return cells_ == o.cells_;
}

std::string Dbm::to_string(const std::vector<std::string>& clock_names) const {
    if (empty_) return "false";
    auto name = [&](int i) -> std::string {
        if (i == 0) return "0";
        if (i - 1 < static_cast<int>(clock_names.size())) return clock_names[i - 1];
        return "c" + std::to_string(i);
    };
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            if (i == j) continue;
            const Bound& b = at(i, j);
            if (b.is_infinite()) continue;
            // Skip the implicit nonnegativity constraints 0 - x <= 0.
            if (i == 0 && b == Bound::less_eq(0)) continue;
            if (!first) out << " && ";
            first = false;
            if (j == 0)
                out << name(i);
            else if (i == 0)
                out << "-" << name(j);
            else
                out << name(i) << " - " << name(j);
            out << (b.strict ? " < " : " <= ") << b.value;
        }
    }
    if (first) out << "true";
    return out.str();
}

// ── canonicalize ────────────────────────────────────────────────────────────

Dbm canonicalize(Dbm d) {
    if (d.marked_empty()) return d;
    const int n = d.dim();
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            const Bound ik = d.at(i, k);
            if (ik.is_infinite()) continue;
            for (int j = 0; j < n; ++j) {
                const Bound via = ik + d.at(k, j);
                if (via < d.at(i, j)) d.set(i, j, via);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (d.at(i, i) < Bound::less_eq(0)) return Dbm::empty_zone(n);
    }
    return d;
}

bool is_empty(const Dbm& d) { return d.marked_empty(); }

// ── inclusion / intersection ────────────────────────────────────────────────

bool includes(const Dbm& a, const Dbm& b) {
    if (b.marked_empty()) return true;
    if (a.marked_empty()) return false;
    if (a.dim() != b.dim())
        throw std::invalid_argument("includes: dimension mismatch");
    const int n = a.dim();
    for (int i = 0; i < n * n; ++i) {
        if (a.at(i / n, i % n) < b.at(i / n, i % n)) return false;
    }
    return true;
}

Dbm intersect(const Dbm& a, const Dbm& b) {
    if (a.marked_empty() || b.marked_empty())
        return Dbm::empty_zone(a.dim() ? a.dim() : b.dim());
    if (a.dim() != b.dim())
        throw std::invalid_argument("intersect: dimension mismatch");
    Dbm r = a;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.constrain(i, j, b.at(i, j));
    return canonicalize(std::move(r));
}

// ── time operators ──────────────────────────────────────────────────────────

Dbm down(const Dbm& d) {
    if (d.marked_empty()) return d;
    Dbm r = d;
    const int n = d.dim();
    for (int i = 1; i < n; ++i) {
        Bound lo = Bound::less_eq(0);
        for (int j = 1; j < n; ++j) {
            if (j != i && d.at(j, i) < lo) lo = d.at(j, i);
        }
        r.set(0, i, lo);
    }
    return canonicalize(std::move(r));
}

Dbm up_closure(const Dbm& d) {
    if (d.marked_empty()) return d;
    Dbm r = d;
    for (int i = 1; i < d.dim(); ++i) {
        Bound b = r.at(i, 0);
        if (!b.is_infinite() && b.strict) r.set(i, 0, Bound::less_eq(b.value));
    }
    return canonicalize(std::move(r));
}

// ── projection / reset ──────────────────────────────────────────────────────

Dbm fm_eliminate(const Dbm& d, const ClockSet& xs) {
    if (d.marked_empty()) return d;
    Dbm r = canonicalize(d);  // propagate consequences through the clocks first
    if (r.marked_empty()) return r;
    const int n = r.dim();
    for (ClockId x : xs) {
        if (x <= 0 || x >= n)
            throw std::invalid_argument("fm_eliminate: unknown clock");
        for (int j = 0; j < n; ++j) {
            if (j == x) continue;
            r.set(x, j, Bound::infinity());
            r.set(j, x, Bound::infinity());
        }
        r.set(0, x, Bound::less_eq(0));
    }
    return canonicalize(std::move(r));
}

Dbm reset_pre(const Dbm& d, const ClockSet& xs) {
    if (d.marked_empty() || xs.empty()) return d;
    Dbm t = d;
    for (ClockId x : xs) {
        t.constrain(x, 0, Bound::less_eq(0));
        t.constrain(0, x, Bound::less_eq(0));
    }
    t = canonicalize(std::move(t));
    if (t.marked_empty()) return t;
    return fm_eliminate(t, xs);
}

// ── complement ──────────────────────────────────────────────────────────────

std::vector<Dbm> complement(const Dbm& d) {
    const int n = d.dim();
    if (d.marked_empty()) return {Dbm::universe(n)};
    std::vector<Dbm> pieces;
    const Dbm uni = Dbm::universe(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Bound& b = d.at(i, j);
            if (b.is_infinite()) continue;
            if (!(b < uni.at(i, j))) continue;  // implied by the orthant
            Dbm piece = uni;
            piece.constrain(j, i, b.negated());
            piece = canonicalize(std::move(piece));
            if (!piece.marked_empty()) pieces.push_back(std::move(piece));
        }
    }
    return pieces;
}

// ── extrapolation ───────────────────────────────────────────────────────────

Dbm extrapolate(const Dbm& d, int ceiling) {
    if (d.marked_empty()) return d;
    assert(ceiling >= 1);
    Dbm r = d;
    const int n = d.dim();
    bool changed = false;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Bound& b = r.at(i, j);
            if (b.is_infinite()) continue;
            if (b.value > ceiling) {
                r.set(i, j, Bound::infinity());
                changed = true;
            } else if (b.value < -ceiling) {
                r.set(i, j, Bound::less(-ceiling));
                changed = true;
            }
        }
    }
    return changed ? canonicalize(std::move(r)) : r;
}

bool has_no_upper_bounds(const Dbm& d) {
    if (d.marked_empty()) return false;
    for (int i = 1; i < d.dim(); ++i) {
        if (!d.at(i, 0).is_infinite()) return false;
    }
    return true;
}

// ── dimension changes ───────────────────────────────────────────────────────

Dbm add_clock(const Dbm& d) {
    const int n = d.dim();
    if (d.marked_empty()) return Dbm::empty_zone(n + 1);
    Dbm r = Dbm::universe(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.set(i, j, d.at(i, j));
    return canonicalize(std::move(r));
}

Dbm drop_clock(const Dbm& d) {
    const int n = d.dim();
    assert(n >= 2);
    if (d.marked_empty()) return Dbm::empty_zone(n - 1);
    Dbm t = fm_eliminate(d, {n - 1});
    Dbm r = Dbm::universe(n - 1);
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j) r.set(i, j, t.at(i, j));
    return canonicalize(std::move(r));
}

// ── point membership ────────────────────────────────────────────────────────

bool contains_scaled(const Dbm& d, const std::vector<std::int64_t>& vals,
                     std::int64_t scale) {
    if (d.marked_empty()) return false;
    assert(static_cast<int>(vals.size()) == d.dim());
    assert(vals[0] == 0);
    for (int i = 0; i < d.dim(); ++i) {
        for (int j = 0; j < d.dim(); ++j) {
            const Bound& b = d.at(i, j);
            if (b.is_infinite()) continue;
            const std::int64_t diff = vals[i] - vals[j];
            const std::int64_t lim = b.value * scale;
            if (b.strict ? diff >= lim : diff > lim) return false;
        }
    }
    return true;
}

}  // namespace nzf
