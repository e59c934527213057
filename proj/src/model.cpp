// ============================================================================
// model.cpp — model types, static validation, pretty-printing
// ============================================================================

#include "nzf/model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nzf {

std::string to_string(RelOp op) {
    switch (op) {
        case RelOp::Lt: return "<";
        case RelOp::Le: return "<=";
        case RelOp::Eq: return "==";
        case RelOp::Ge: return ">=";
        case RelOp::Gt: return ">";
    }
    return "?";
}

// ── Clock constraints ───────────────────────────────────────────────────────

void constrain_with(Dbm& z, const ClockConstraint& c) {
    const int x = c.clock;
    const int d = c.constant;
    switch (c.op) {
        case RelOp::Lt: z.constrain(x, 0, Bound::less(d)); break;
        case RelOp::Le: z.constrain(x, 0, Bound::less_eq(d)); break;
        case RelOp::Eq:
            z.constrain(x, 0, Bound::less_eq(d));
            z.constrain(0, x, Bound::less_eq(-d));
            break;
        case RelOp::Ge: z.constrain(0, x, Bound::less_eq(-d)); break;
        case RelOp::Gt: z.constrain(0, x, Bound::less(-d)); break;
    }
}

Dbm constraint_zone(const ConjunctiveConstraint& cc, int dim) {
    Dbm z = Dbm::universe(dim);
    for (const auto& c : cc) constrain_with(z, c);
    return canonicalize(std::move(z));
}

// ── StatePredicate constructors ─────────────────────────────────────────────

PredPtr StatePredicate::make_true() {
    auto p = std::make_shared<StatePredicate>();
    p->kind = Kind::True;
    return p;
}
PredPtr StatePredicate::make_mode(ModeId m) {
    auto p = std::make_shared<StatePredicate>();
    p->kind = Kind::ModeAtom;
    p->mode = m;
    return p;
}
PredPtr StatePredicate::make_clock(ClockConstraint c) {
    auto p = std::make_shared<StatePredicate>();
    p->kind = Kind::ClockAtom;
    p->atom = c;
    return p;
}
PredPtr StatePredicate::make_or(PredPtr a, PredPtr b) {
    auto p = std::make_shared<StatePredicate>();
    p->kind = Kind::Or;
    p->lhs = std::move(a);
    p->rhs = std::move(b);
    return p;
}
PredPtr StatePredicate::make_and(PredPtr a, PredPtr b) {
    auto p = std::make_shared<StatePredicate>();
    p->kind = Kind::And;
    p->lhs = std::move(a);
    p->rhs = std::move(b);
    return p;
}
PredPtr StatePredicate::make_not(PredPtr a) {
    auto p = std::make_shared<StatePredicate>();
    p->kind = Kind::Not;
    p->lhs = std::move(a);
    return p;
}

// ── TimedAutomaton helpers ──────────────────────────────────────────────────

ClockId TimedAutomaton::clock_index(const std::string& name) const {
    for (size_t i = 0; i < clock_names.size(); ++i) {
        if (clock_names[i] == name) return static_cast<ClockId>(i + 1);
    }
    return 0;
}

ModeId TimedAutomaton::mode_index(const std::string& name) const {
    for (size_t i = 0; i < modes.size(); ++i) {
        if (modes[i].name == name) return static_cast<ModeId>(i);
    }
    return -1;
}

Dbm TimedAutomaton::invariant_zone(ModeId q, int dim) const {
    return constraint_zone(modes[q].invariant, dim);
}

Dbm TimedAutomaton::guard_zone(const Transition& e, int dim) const {
    return constraint_zone(e.guard, dim);
}

// ── Formula constructors ────────────────────────────────────────────────────

FormulaPtr Formula::make(Kind k) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    return f;
}
FormulaPtr Formula::make_mode(ModeId m) {
    auto f = make(Kind::ModeAtom);
    const_cast<Formula&>(*f).mode = m;
    return f;
}
FormulaPtr Formula::make_clock(std::string name, ClockId idx, RelOp op, int c) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::ClockAtom;
    f->ident = std::move(name);
    f->clock = idx;
    f->op = op;
    f->constant = c;
    return f;
}
FormulaPtr Formula::make_or(FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Or;
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    return f;
}
FormulaPtr Formula::make_not(FormulaPtr a) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Not;
    f->lhs = std::move(a);
    return f;
}
FormulaPtr Formula::make_freeze(std::string var, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Freeze;
    f->ident = std::move(var);
    f->lhs = std::move(body);
    return f;
}
FormulaPtr Formula::make_until(FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::ExistsUntil;
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    return f;
}
FormulaPtr Formula::make_unary(Kind k, FormulaPtr a) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->lhs = std::move(a);
    return f;
}

bool is_core_formula(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::True:
        case Formula::Kind::False:
        case Formula::Kind::ModeAtom:
        case Formula::Kind::ClockAtom:
            return true;
        case Formula::Kind::Or:
        case Formula::Kind::ExistsUntil:
            return is_core_formula(*f.lhs) && is_core_formula(*f.rhs);
        case Formula::Kind::Not:
        case Formula::Kind::Freeze:
        case Formula::Kind::EG:
        case Formula::Kind::EGF:
        case Formula::Kind::EFG:
            return is_core_formula(*f.lhs);
    }
    return false;
}

bool is_state_formula(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::True:
        case Formula::Kind::False:
        case Formula::Kind::ModeAtom:
        case Formula::Kind::ClockAtom:
            return true;
        case Formula::Kind::Or:
            return is_state_formula(*f.lhs) && is_state_formula(*f.rhs);
        case Formula::Kind::Not:
            return is_state_formula(*f.lhs);
        default:
            return false;
    }
}

// ── validate ────────────────────────────────────────────────────────────────

namespace {

void check_constraint(const TimedAutomaton& a, const ClockConstraint& c,
                      const std::string& where, std::vector<Diagnostic>& out) {
    if (c.clock < 1 || c.clock > a.num_clocks())
        out.push_back({where + ": reference to undeclared clock"});
    if (c.constant < 0)
        out.push_back({where + ": negative constant " + std::to_string(c.constant)});
}

void check_predicate(const TimedAutomaton& a, const StatePredicate& p,
                     std::vector<Diagnostic>& out) {
    switch (p.kind) {
        case StatePredicate::Kind::True:
            break;
        case StatePredicate::Kind::ModeAtom:
            if (p.mode < 0 || p.mode >= a.num_modes())
                out.push_back({"initial condition: unknown mode"});
            break;
        case StatePredicate::Kind::ClockAtom:
            check_constraint(a, p.atom, "initial condition", out);
            break;
        case StatePredicate::Kind::Or:
        case StatePredicate::Kind::And:
            check_predicate(a, *p.lhs, out);
            check_predicate(a, *p.rhs, out);
            break;
        case StatePredicate::Kind::Not:
            check_predicate(a, *p.lhs, out);
            break;
    }
}

}  // namespace

std::vector<Diagnostic> validate(const TimedAutomaton& a) {
    std::vector<Diagnostic> out;
    if (a.modes.empty()) out.push_back({"automaton declares no modes"});
    for (size_t i = 0; i < a.modes.size(); ++i) {
        for (const auto& c : a.modes[i].invariant)
            check_constraint(a, c, "invariant of mode " + a.modes[i].name, out);
        for (size_t j = i + 1; j < a.modes.size(); ++j) {
            if (a.modes[i].name == a.modes[j].name)
                out.push_back({"duplicate mode name " + a.modes[i].name});
        }
    }
    for (const auto& e : a.transitions) {
        const std::string where = "transition #" + std::to_string(e.id);
        if (e.src < 0 || e.src >= a.num_modes())
            out.push_back({where + ": unknown source mode"});
        if (e.dst < 0 || e.dst >= a.num_modes())
            out.push_back({where + ": unknown target mode"});
        for (const auto& c : e.guard) check_constraint(a, c, where + " guard", out);
        for (ClockId x : e.resets) {
            if (x < 1 || x > a.num_clocks())
                out.push_back({where + ": reset of undeclared clock"});
        }
    }
    if (a.initial) check_predicate(a, *a.initial, out);
    else out.push_back({"missing initial condition"});
    return out;
}

// ── max_constant ────────────────────────────────────────────────────────────

namespace {

void scan_predicate(const StatePredicate& p, int& acc) {
    switch (p.kind) {
        case StatePredicate::Kind::ClockAtom:
            acc = std::max(acc, p.atom.constant);
            break;
        case StatePredicate::Kind::Or:
        case StatePredicate::Kind::And:
            scan_predicate(*p.lhs, acc);
            scan_predicate(*p.rhs, acc);
            break;
        case StatePredicate::Kind::Not:
            scan_predicate(*p.lhs, acc);
            break;
        default:
            break;
    }
}

void scan_formula(const Formula& f, int& acc) {
    if (f.kind == Formula::Kind::ClockAtom) acc = std::max(acc, f.constant);
    if (f.lhs) scan_formula(*f.lhs, acc);
    if (f.rhs) scan_formula(*f.rhs, acc);
}

}  // namespace

int max_constant(const TimedAutomaton& a) {
    int acc = 1;
    for (const auto& m : a.modes)
        for (const auto& c : m.invariant) acc = std::max(acc, c.constant);
    for (const auto& e : a.transitions)
        for (const auto& c : e.guard) acc = std::max(acc, c.constant);
    if (a.initial) scan_predicate(*a.initial, acc);
    return acc;
}

int max_constant(const TimedAutomaton& a, const Formula& f) {
    int acc = max_constant(a);
    scan_formula(f, acc);
    return acc;
}

// ── pretty printing ─────────────────────────────────────────────────────────

namespace {

std::string clock_name(const TimedAutomaton& a, ClockId x) {
    if (x >= 1 && x <= a.num_clocks()) return a.clock_names[x - 1];
    return "c" + std::to_string(x);
}

std::string print_conj(const TimedAutomaton& a, const ConjunctiveConstraint& cc) {
    if (cc.empty()) return "true";
    std::ostringstream out;
    for (size_t i = 0; i < cc.size(); ++i) {
        if (i) out << " && ";
        out << clock_name(a, cc[i].clock) << " " << to_string(cc[i].op) << " "
            << cc[i].constant;
    }
    return out.str();
}

// Predicate printing with minimal parentheses: Or < And < Not/atom.
std::string print_pred(const TimedAutomaton& a, const StatePredicate& p, int parent) {
    switch (p.kind) {
        case StatePredicate::Kind::True: return "true";
        case StatePredicate::Kind::ModeAtom: return a.modes[p.mode].name;
        case StatePredicate::Kind::ClockAtom:
            return clock_name(a, p.atom.clock) + " " + to_string(p.atom.op) + " " +
                   std::to_string(p.atom.constant);
        case StatePredicate::Kind::Or: {
            std::string s = print_pred(a, *p.lhs, 1) + " || " + print_pred(a, *p.rhs, 1);
            return parent > 1 ? "(" + s + ")" : s;
        }
        case StatePredicate::Kind::And: {
            std::string s = print_pred(a, *p.lhs, 2) + " && " + print_pred(a, *p.rhs, 2);
            return parent > 2 ? "(" + s + ")" : s;
        }
        case StatePredicate::Kind::Not:
            return "!" + print_pred(a, *p.lhs, 3);
    }
    return "?";
}

std::string print_formula(const TimedAutomaton& a, const Formula& f, int parent) {
    switch (f.kind) {
        case Formula::Kind::True: return "true";
        case Formula::Kind::False: return "false";
        case Formula::Kind::ModeAtom: return a.modes[f.mode].name;
        case Formula::Kind::ClockAtom:
            return f.ident + " " + to_string(f.op) + " " + std::to_string(f.constant);
        case Formula::Kind::Or: {
            std::string s =
                print_formula(a, *f.lhs, 1) + " || " + print_formula(a, *f.rhs, 1);
            return parent > 1 ? "(" + s + ")" : s;
        }
        case Formula::Kind::Not:
            return "!" + print_formula(a, *f.lhs, 3);
        case Formula::Kind::Freeze:
            return "(" + f.ident + ". " + print_formula(a, *f.lhs, 0) + ")";
        case Formula::Kind::ExistsUntil:
            return "E [" + print_formula(a, *f.lhs, 0) + " U " +
                   print_formula(a, *f.rhs, 0) + "]";
        case Formula::Kind::EG: return "EG " + print_formula(a, *f.lhs, 3);
        case Formula::Kind::EGF: return "EGF " + print_formula(a, *f.lhs, 3);
        case Formula::Kind::EFG: return "EFG " + print_formula(a, *f.lhs, 3);
    }
    return "?";
}

}  // namespace

std::string pretty_print(const StatePredicate& p, const TimedAutomaton& a) {
    return print_pred(a, p, 0);
}

std::string pretty_print(const Formula& f, const TimedAutomaton& a) {
    return print_formula(a, f, 0);
}

std::string pretty_print(const TimedAutomaton& a) {
    std::ostringstream out;
    if (a.num_clocks() > 0) {
        out << "clocks ";
        for (int i = 0; i < a.num_clocks(); ++i) {
            if (i) out << ", ";
            out << a.clock_names[i];
        }
        out << ";\n";
    }
    for (const auto& m : a.modes) {
        out << "mode " << m.name << " { inv " << print_conj(a, m.invariant)
            << "; }\n";
    }
    out << "init " << print_pred(a, *a.initial, 0) << ";\n";
    for (const auto& e : a.transitions) {
        out << "trans " << a.modes[e.src].name << " -> " << a.modes[e.dst].name
            << " {";
        out << " guard " << print_conj(a, e.guard) << ";";
        if (!e.resets.empty()) {
            out << " reset ";
            for (size_t i = 0; i < e.resets.size(); ++i) {
                if (i) out << ", ";
                out << clock_name(a, e.resets[i]);
            }
            out << ";";
        }
        out << " }\n";
    }
    return out.str();
}

}  // namespace nzf
