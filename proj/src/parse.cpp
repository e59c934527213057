// ============================================================================
// parse.cpp — recursive-descent parsers for models and formulas
// ============================================================================

#include "nzf/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace nzf {

namespace {

// ── Lexer ───────────────────────────────────────────────────────────────────

enum class Tok {
    End,
    Ident,
    Int,
    Semi, Comma, Dot,
    LBrace, RBrace, LParen, RParen, LBracket, RBracket,
    AndAnd, OrOr, Not, Arrow,
    Lt, Le, Gt, Ge, EqEq
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    long value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(tok_.line, tok_.col, msg);
    }

private:
    void advance() {
        skip_space();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_.kind = Tok::End;
            return;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_'))
                bump();
            tok_.kind = Tok::Ident;
            tok_.text = text_.substr(start, pos_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = 0;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                if (v > 1000000000L)
                    throw ParseError(line_, col_, "integer constant too large");
                bump();
            }
            tok_.kind = Tok::Int;
            tok_.value = v;
            return;
        }
        auto two = [&](char a, char b) {
            return c == a && pos_ + 1 < text_.size() && text_[pos_ + 1] == b;
        };
        if (two('&', '&')) { bump(); bump(); tok_.kind = Tok::AndAnd; return; }
        if (two('|', '|')) { bump(); bump(); tok_.kind = Tok::OrOr; return; }
        if (two('-', '>')) { bump(); bump(); tok_.kind = Tok::Arrow; return; }
        if (two('<', '=')) { bump(); bump(); tok_.kind = Tok::Le; return; }
        if (two('>', '=')) { bump(); bump(); tok_.kind = Tok::Ge; return; }
        if (two('=', '=')) { bump(); bump(); tok_.kind = Tok::EqEq; return; }
        bump();
        switch (c) {
            case ';': tok_.kind = Tok::Semi; return;
            case ',': tok_.kind = Tok::Comma; return;
            case '.': tok_.kind = Tok::Dot; return;
            case '{': tok_.kind = Tok::LBrace; return;
            case '}': tok_.kind = Tok::RBrace; return;
            case '(': tok_.kind = Tok::LParen; return;
            case ')': tok_.kind = Tok::RParen; return;
            case '[': tok_.kind = Tok::LBracket; return;
            case ']': tok_.kind = Tok::RBracket; return;
            case '!': tok_.kind = Tok::Not; return;
            case '<': tok_.kind = Tok::Lt; return;
            case '>': tok_.kind = Tok::Gt; return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

std::optional<RelOp> rel_of(Tok t) {
    switch (t) {
        case Tok::Lt: return RelOp::Lt;
        case Tok::Le: return RelOp::Le;
        case Tok::EqEq: return RelOp::Eq;
        case Tok::Ge: return RelOp::Ge;
        case Tok::Gt: return RelOp::Gt;
        default: return std::nullopt;
    }
}

// ── Model parser ────────────────────────────────────────────────────────────

class ModelParser {
public:
    explicit ModelParser(const std::string& text) : lex_(text) {}

    TimedAutomaton run() {
        bool saw_any = false;
        while (lex_.peek().kind != Tok::End) {
            saw_any = true;
            const Token kw = expect_ident("section keyword");
            if (kw.text == "clocks") parse_clocks();
            else if (kw.text == "mode") parse_mode();
            else if (kw.text == "init") parse_init();
            else if (kw.text == "trans") parse_trans();
            else throw ParseError(kw.line, kw.col, "unknown keyword '" + kw.text + "'");
        }
        if (!saw_any) throw ParseError(1, 1, "empty input");
        if (!ta_.initial) throw ParseError(1, 1, "missing init section");
        return std::move(ta_);
    }

private:
    void parse_clocks() {
        do {
            const Token t = expect_ident("clock name");
            if (ta_.clock_index(t.text) != 0)
                throw ParseError(t.line, t.col, "duplicate clock '" + t.text + "'");
            ta_.clock_names.push_back(t.text);
        } while (accept(Tok::Comma));
        expect(Tok::Semi, "';'");
    }

    void parse_mode() {
        const Token name = expect_ident("mode name");
        if (ta_.mode_index(name.text) >= 0)
            throw ParseError(name.line, name.col, "duplicate mode '" + name.text + "'");
        expect(Tok::LBrace, "'{'");
        Mode m;
        m.name = name.text;
        const Token kw = expect_ident("'inv'");
        if (kw.text != "inv") throw ParseError(kw.line, kw.col, "expected 'inv'");
        m.invariant = parse_conj("invariant");
        expect(Tok::Semi, "';'");
        expect(Tok::RBrace, "'}'");
        ta_.modes.push_back(std::move(m));
    }

    void parse_init() {
        ta_.initial = parse_pred_or();
        expect(Tok::Semi, "';'");
    }

    void parse_trans() {
        Transition e;
        e.id = static_cast<int>(ta_.transitions.size());
        e.src = lookup_mode(expect_ident("source mode"));
        expect(Tok::Arrow, "'->'");
        e.dst = lookup_mode(expect_ident("target mode"));
        expect(Tok::LBrace, "'{'");
        while (lex_.peek().kind != Tok::RBrace) {
            const Token kw = expect_ident("'guard' or 'reset'");
            if (kw.text == "guard") {
                e.guard = parse_conj("guard");
            } else if (kw.text == "reset") {
                do {
                    e.resets.push_back(lookup_clock(expect_ident("clock name")));
                } while (accept(Tok::Comma));
                std::sort(e.resets.begin(), e.resets.end());
                e.resets.erase(std::unique(e.resets.begin(), e.resets.end()),
                               e.resets.end());
            } else {
                throw ParseError(kw.line, kw.col, "expected 'guard' or 'reset'");
            }
            expect(Tok::Semi, "';'");
        }
        expect(Tok::RBrace, "'}'");
        ta_.transitions.push_back(std::move(e));
    }

    // Conjunction of clock atoms, or the keyword `true`.
    ConjunctiveConstraint parse_conj(const std::string& what) {
        ConjunctiveConstraint cc;
        if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "true") {
            lex_.take();
            if (lex_.peek().kind == Tok::AndAnd)
                lex_.fail(what + " must be 'true' or a conjunction of clock atoms");
            return cc;
        }
        do {
            cc.push_back(parse_clock_atom(what));
        } while (accept(Tok::AndAnd));
        if (lex_.peek().kind == Tok::OrOr || lex_.peek().kind == Tok::Not)
            lex_.fail(what + " must be a conjunction of clock atoms");
        return cc;
    }

    ClockConstraint parse_clock_atom(const std::string& what) {
        const Token name = expect_ident("clock name");
        ClockConstraint c;
        c.clock = lookup_clock(name);
        const auto rel = rel_of(lex_.peek().kind);
        if (!rel) lex_.fail(what + ": expected comparison operator");
        lex_.take();
        c.op = *rel;
        const Token v = expect(Tok::Int, "integer constant");
        c.constant = static_cast<int>(v.value);
        return c;
    }

    // init predicates: full boolean structure over mode and clock atoms.
    PredPtr parse_pred_or() {
        PredPtr p = parse_pred_and();
        while (accept(Tok::OrOr)) p = StatePredicate::make_or(p, parse_pred_and());
        return p;
    }
    PredPtr parse_pred_and() {
        PredPtr p = parse_pred_unary();
        while (accept(Tok::AndAnd)) p = StatePredicate::make_and(p, parse_pred_unary());
        return p;
    }
    PredPtr parse_pred_unary() {
        if (accept(Tok::Not)) return StatePredicate::make_not(parse_pred_unary());
        if (accept(Tok::LParen)) {
            PredPtr p = parse_pred_or();
            expect(Tok::RParen, "')'");
            return p;
        }
        const Token t = expect_ident("mode name or clock atom");
        if (t.text == "true") return StatePredicate::make_true();
        if (t.text == "false")
            return StatePredicate::make_not(StatePredicate::make_true());
        if (const auto rel = rel_of(lex_.peek().kind)) {
            lex_.take();
            ClockConstraint c;
            c.clock = lookup_clock(t);
            c.op = *rel;
            c.constant = static_cast<int>(expect(Tok::Int, "integer constant").value);
            return StatePredicate::make_clock(c);
        }
        const ModeId m = ta_.mode_index(t.text);
        if (m < 0)
            throw ParseError(t.line, t.col, "unknown mode or clock '" + t.text + "'");
        return StatePredicate::make_mode(m);
    }

    ModeId lookup_mode(const Token& t) {
        const ModeId m = ta_.mode_index(t.text);
        if (m < 0) throw ParseError(t.line, t.col, "unknown mode '" + t.text + "'");
        return m;
    }

    ClockId lookup_clock(const Token& t) {
        const ClockId x = ta_.clock_index(t.text);
        if (x == 0) throw ParseError(t.line, t.col, "unknown clock '" + t.text + "'");
        return x;
    }

    Token expect(Tok kind, const std::string& what) {
        if (lex_.peek().kind != kind) lex_.fail("expected " + what);
        return lex_.take();
    }
    Token expect_ident(const std::string& what) { return expect(Tok::Ident, what); }
    bool accept(Tok kind) {
        if (lex_.peek().kind != kind) return false;
        lex_.take();
        return true;
    }

    Lexer lex_;
    TimedAutomaton ta_;
};

// ── Formula parser ──────────────────────────────────────────────────────────

// Constant-folding constructors keep expansions tidy (e.g. the negation of
// `true || f` collapses to `false` inside the AF rewrite).
FormulaPtr f_not(FormulaPtr a) {
    if (a->kind == Formula::Kind::True) return Formula::make(Formula::Kind::False);
    if (a->kind == Formula::Kind::False) return Formula::make(Formula::Kind::True);
    return Formula::make_not(std::move(a));
}

FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
    if (a->kind == Formula::Kind::True || b->kind == Formula::Kind::True)
        return Formula::make(Formula::Kind::True);
    if (a->kind == Formula::Kind::False) return b;
    if (b->kind == Formula::Kind::False) return a;
    return Formula::make_or(std::move(a), std::move(b));
}

class FormulaParser {
public:
    FormulaParser(const std::string& text, const TimedAutomaton& a)
        : lex_(text), ta_(a) {}

    FormulaPtr run() {
        FormulaPtr f = parse_implies();
        if (lex_.peek().kind != Tok::End) lex_.fail("trailing input after formula");
        return f;
    }

private:
    FormulaPtr parse_implies() {
        FormulaPtr a = parse_or();
        if (accept(Tok::Arrow)) {
            FormulaPtr b = parse_implies();
            return f_or(f_not(a), b);
        }
        return a;
    }

    FormulaPtr parse_or() {
        FormulaPtr a = parse_and();
        while (accept(Tok::OrOr)) a = f_or(a, parse_and());
        return a;
    }

    FormulaPtr parse_and() {
        FormulaPtr a = parse_unary();
        while (accept(Tok::AndAnd)) {
            FormulaPtr b = parse_unary();
            a = f_not(f_or(f_not(a), f_not(b)));
        }
        return a;
    }

    FormulaPtr parse_unary() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::Not) {
            lex_.take();
            return f_not(parse_unary());
        }
        if (t.kind == Tok::LParen) {
            lex_.take();
            FormulaPtr f = parse_implies();
            expect(Tok::RParen, "')'");
            return f;
        }
        if (t.kind != Tok::Ident) lex_.fail("expected formula");

        // Modalities and quantifiers (keywords win over atoms).
        const std::string& w = t.text;
        if (w == "E" || w == "A") return parse_until();
        if (w == "EF") { lex_.take(); return until(truef(), parse_unary()); }
        if (w == "EG") { lex_.take(); return Formula::make_unary(Formula::Kind::EG, parse_unary()); }
        if (w == "EGF") { lex_.take(); return Formula::make_unary(Formula::Kind::EGF, parse_unary()); }
        if (w == "EFG") { lex_.take(); return Formula::make_unary(Formula::Kind::EFG, parse_unary()); }
        if (w == "AF") { lex_.take(); return forall_until(truef(), parse_unary()); }
        if (w == "AG") {
            lex_.take();
            return f_not(until(truef(), f_not(parse_unary())));
        }
        if (w == "AGF") {  // on all runs, infinitely often == not EFG not
            lex_.take();
            return f_not(Formula::make_unary(Formula::Kind::EFG, f_not(parse_unary())));
        }
        if (w == "AFG") {  // on all runs, eventually forever == not EGF not
            lex_.take();
            return f_not(Formula::make_unary(Formula::Kind::EGF, f_not(parse_unary())));
        }
        return parse_atom_or_freeze();
    }

    FormulaPtr parse_until() {
        const Token q = lex_.take();  // E or A
        expect(Tok::LBracket, "'['");
        FormulaPtr a = parse_implies();
        const Token u = expect(Tok::Ident, "'U'");
        if (u.text != "U") throw ParseError(u.line, u.col, "expected 'U'");
        FormulaPtr b = parse_implies();
        expect(Tok::RBracket, "']'");
        if (q.text == "E") return until(a, b);
        return forall_until(a, b);
    }

    FormulaPtr parse_atom_or_freeze() {
        const Token t = lex_.take();
        if (t.text == "true") return truef();
        if (t.text == "false") return Formula::make(Formula::Kind::False);

        if (lex_.peek().kind == Tok::Dot) {  // freeze quantifier "x. f"
            lex_.take();
            if (ta_.clock_index(t.text) != 0)
                throw ParseError(t.line, t.col,
                                 "freeze variable '" + t.text +
                                     "' shadows an automaton clock");
            for (const auto& v : freeze_scope_)
                if (v == t.text)
                    throw ParseError(t.line, t.col,
                                     "freeze variable '" + t.text +
                                         "' shadows an enclosing binder");
            freeze_scope_.push_back(t.text);
            FormulaPtr body = parse_unary();
            freeze_scope_.pop_back();
            return Formula::make_freeze(t.text, body);
        }

        if (const auto rel = rel_of(lex_.peek().kind)) {
            lex_.take();
            const int c = static_cast<int>(expect(Tok::Int, "integer constant").value);
            const ClockId idx = ta_.clock_index(t.text);
            if (idx == 0) {
                const bool frozen =
                    std::find(freeze_scope_.begin(), freeze_scope_.end(), t.text) !=
                    freeze_scope_.end();
                if (!frozen)
                    throw ParseError(t.line, t.col, "unknown clock '" + t.text + "'");
            }
            return Formula::make_clock(t.text, idx, *rel, c);
        }

        const ModeId m = ta_.mode_index(t.text);
        if (m < 0)
            throw ParseError(t.line, t.col, "unknown mode or clock '" + t.text + "'");
        return Formula::make_mode(m);
    }

    FormulaPtr truef() { return Formula::make(Formula::Kind::True); }

    FormulaPtr until(FormulaPtr a, FormulaPtr b) {
        return Formula::make_until(std::move(a), std::move(b));
    }

    // A [f U g]  ==  !( E [!g U !(f || g)]  ||  EG !g )
    FormulaPtr forall_until(FormulaPtr f, FormulaPtr g) {
        FormulaPtr left = until(f_not(g), f_not(f_or(f, g)));
        FormulaPtr right = Formula::make_unary(Formula::Kind::EG, f_not(g));
        return f_not(f_or(left, right));
    }

    Token expect(Tok kind, const std::string& what) {
        if (lex_.peek().kind != kind) lex_.fail("expected " + what);
        return lex_.take();
    }
    bool accept(Tok kind) {
        if (lex_.peek().kind != kind) return false;
        lex_.take();
        return true;
    }

    Lexer lex_;
    const TimedAutomaton& ta_;
    std::vector<std::string> freeze_scope_;
};

}  // namespace

TimedAutomaton parse_model(const std::string& text) {
    return ModelParser(text).run();
}

FormulaPtr parse_formula(const std::string& text, const TimedAutomaton& a) {
    return FormulaParser(text, a).run();
}

}  // namespace nzf
