// ============================================================================
// nzf/model.hpp — timed automata, state predicates and temporal formulas
// ============================================================================

#ifndef NZF_MODEL_HPP
#define NZF_MODEL_HPP

#include <memory>
#include <string>
#include <vector>

#include "nzf/dbm.hpp"

namespace nzf {

using ModeId = int;

// ── Clock constraints ───────────────────────────────────────────────────────

enum class RelOp { Lt, Le, Eq, Ge, Gt };

std::string to_string(RelOp op);

/// Atomic clock comparison  x ~ c  (clock index 1-based; constant >= 0).
struct ClockConstraint {
    ClockId clock = 0;
    RelOp op = RelOp::Le;
    int constant = 0;
};

/// Conjunction of clock atoms, as used by invariants and guards.
using ConjunctiveConstraint = std::vector<ClockConstraint>;

/// Tighten a zone by one clock atom.  `dim` entries beyond the automaton
/// clocks (auxiliary clocks) are left unconstrained.
void constrain_with(Dbm& z, const ClockConstraint& c);

/// The zone of a conjunctive constraint at the given dimension.
Dbm constraint_zone(const ConjunctiveConstraint& cc, int dim);

// ── State predicates ────────────────────────────────────────────────────────

struct StatePredicate;
using PredPtr = std::shared_ptr<const StatePredicate>;

/// Boolean combination of mode atoms and clock atoms.
struct StatePredicate {
    enum class Kind { True, ModeAtom, ClockAtom, Or, And, Not };

    Kind kind = Kind::True;
    ModeId mode = -1;            // ModeAtom
    ClockConstraint atom;        // ClockAtom
    PredPtr lhs, rhs;

    static PredPtr make_true();
    static PredPtr make_mode(ModeId m);
    static PredPtr make_clock(ClockConstraint c);
    static PredPtr make_or(PredPtr a, PredPtr b);
    static PredPtr make_and(PredPtr a, PredPtr b);
    static PredPtr make_not(PredPtr a);
};

// ── Timed automaton ─────────────────────────────────────────────────────────

struct Transition {
    int id = -1;
    ModeId src = -1;
    ModeId dst = -1;
    ConjunctiveConstraint guard;   // empty means true
    ClockSet resets;               // sorted clock indices
};

struct Mode {
    std::string name;
    ConjunctiveConstraint invariant;   // empty means true
};

struct TimedAutomaton {
    std::vector<std::string> clock_names;  // index i names clock i+1
    std::vector<Mode> modes;
    PredPtr initial;
    std::vector<Transition> transitions;

    int num_clocks() const { return static_cast<int>(clock_names.size()); }
    int num_modes() const { return static_cast<int>(modes.size()); }
    /// Matrix dimension of base zones: clocks plus the reference clock.
    int base_dim() const { return num_clocks() + 1; }

    /// 1-based clock index, or 0 if the name is unknown.
    ClockId clock_index(const std::string& name) const;
    /// Mode index, or -1 if the name is unknown.
    ModeId mode_index(const std::string& name) const;

    /// Invariant zone of a mode at the given dimension.
    Dbm invariant_zone(ModeId q, int dim) const;
    /// Guard zone of a transition at the given dimension.
    Dbm guard_zone(const Transition& e, int dim) const;
};

// ── TCTL formulas ───────────────────────────────────────────────────────────

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Core temporal syntax tree.  Derived connectives (universal modalities,
/// conjunction, implication) are expanded by the parser and never appear
/// here.  Clock atoms may reference either an automaton clock (resolved
/// index) or a frozen clock bound by an enclosing Freeze node (by name).
struct Formula {
    enum class Kind {
        True,
        False,
        ModeAtom,
        ClockAtom,
        Or,
        Not,
        Freeze,        // x. f — binds clock `ident`, read 0 at the current state
        ExistsUntil,   // E [ lhs U rhs ]
        EG,            // some run satisfies f forever
        EGF,           // some run satisfies f infinitely often
        EFG            // some run eventually satisfies f forever
    };

    Kind kind = Kind::True;
    ModeId mode = -1;               // ModeAtom
    std::string ident;              // ClockAtom clock name / Freeze variable
    ClockId clock = 0;              // ClockAtom: automaton index, 0 if frozen
    RelOp op = RelOp::Le;
    int constant = 0;
    FormulaPtr lhs, rhs;

    static FormulaPtr make(Kind k);
    static FormulaPtr make_mode(ModeId m);
    static FormulaPtr make_clock(std::string name, ClockId idx, RelOp op, int c);
    static FormulaPtr make_or(FormulaPtr a, FormulaPtr b);
    static FormulaPtr make_not(FormulaPtr a);
    static FormulaPtr make_freeze(std::string var, FormulaPtr body);
    static FormulaPtr make_until(FormulaPtr a, FormulaPtr b);
    static FormulaPtr make_unary(Kind k, FormulaPtr a);
};

/// True iff the tree uses only core constructors (always holds for parser
/// output; used by tests).
bool is_core_formula(const Formula& f);

/// True iff the formula contains no temporal operator or freeze binder.
bool is_state_formula(const Formula& f);

// ── Evaluation configuration ────────────────────────────────────────────────

struct EvalConfig {
    int flag = 0;            // -1 under-approximate, 0 exact, +1 over-approximate
    int level = 0;           // under-approximation level
    bool big_chunks = false; // prune the search space by backward closures
    bool non_zeno = false;   // conjoin the divergence requirement at atoms/EU
};

// ── Static analysis ─────────────────────────────────────────────────────────

struct Diagnostic {
    std::string message;
};

/// Referential and shape checks on a parsed automaton.
std::vector<Diagnostic> validate(const TimedAutomaton& a);

/// Largest integer constant in the model and formula; at least 1.
int max_constant(const TimedAutomaton& a, const Formula& f);
int max_constant(const TimedAutomaton& a);

/// Canonical concrete syntax of the automaton (reparses to itself).
std::string pretty_print(const TimedAutomaton& a);
std::string pretty_print(const StatePredicate& p, const TimedAutomaton& a);
std::string pretty_print(const Formula& f, const TimedAutomaton& a);

}  // namespace nzf

#endif  // NZF_MODEL_HPP
