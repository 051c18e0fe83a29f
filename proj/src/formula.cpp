#include "nclogic/formula.hpp"

#include <cassert>

namespace nclogic {

bool reserved_word(const std::string& s) {
    return s == "forall" || s == "exists" || s == "in" || s == "bot" ||
           s == "not" || s == "o";
}

static bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!(isalpha((unsigned char)s[0]) || s[0] == '_')) return false;
    for (char c : s)
        if (!(isalnum((unsigned char)c) || c == '_' || c == '\'')) return false;
    return !reserved_word(s);
}

std::string Signature::check() const {
    for (auto& [name, arity] : relations) {
        // "in" is a keyword but may be declared as the binary membership relation
        bool membership = name == "in" && arity == 2;
        if (!membership && !valid_name(name)) return "bad relation name \"" + name + "\"";
        if (arity < 0) return "relation \"" + name + "\" has negative arity";
        if (constants.count(name)) return "\"" + name + "\" is both a relation and a constant";
    }
    for (auto& c : constants)
        if (!valid_name(c)) return "bad constant name \"" + c + "\"";
    return "";
}

static FormulaPtr mk(FKind k, std::string name, std::vector<Term> args,
                     FormulaPtr l, FormulaPtr r) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->name = std::move(name);
    f->args = std::move(args);
    f->lhs = std::move(l);
    f->rhs = std::move(r);
    return f;
}

FormulaPtr Formula::atom(std::string rel, std::vector<Term> args) {
    return mk(FKind::Atom, std::move(rel), std::move(args), nullptr, nullptr);
}
FormulaPtr Formula::eq(Term a, Term b) {
    return mk(FKind::Eq, "", {std::move(a), std::move(b)}, nullptr, nullptr);
}
FormulaPtr Formula::bot() { return mk(FKind::Bot, "", {}, nullptr, nullptr); }
FormulaPtr Formula::neg(FormulaPtr a) { return mk(FKind::Neg, "", {}, std::move(a), nullptr); }
FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) { return mk(FKind::And, "", {}, std::move(a), std::move(b)); }
FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) { return mk(FKind::Or, "", {}, std::move(a), std::move(b)); }
FormulaPtr Formula::imp(FormulaPtr a, FormulaPtr b) { return mk(FKind::Imp, "", {}, std::move(a), std::move(b)); }
FormulaPtr Formula::iff(FormulaPtr a, FormulaPtr b) { return mk(FKind::Iff, "", {}, std::move(a), std::move(b)); }
FormulaPtr Formula::forall(std::string v, FormulaPtr body) {
    return mk(FKind::Forall, std::move(v), {}, std::move(body), nullptr);
}
FormulaPtr Formula::exists(std::string v, FormulaPtr body) {
    return mk(FKind::Exists, std::move(v), {}, std::move(body), nullptr);
}
FormulaPtr Formula::strong_imp(FormulaPtr a, FormulaPtr b) { return mk(FKind::StrongImp, "", {}, std::move(a), std::move(b)); }
FormulaPtr Formula::strong_iff(FormulaPtr a, FormulaPtr b) { return mk(FKind::StrongIff, "", {}, std::move(a), std::move(b)); }
FormulaPtr Formula::class_neg(FormulaPtr a) { return mk(FKind::ClassNeg, "", {}, std::move(a), nullptr); }
FormulaPtr Formula::bang(FormulaPtr a) { return mk(FKind::Bang, "", {}, std::move(a), nullptr); }
FormulaPtr Formula::quest(FormulaPtr a) { return mk(FKind::Quest, "", {}, std::move(a), nullptr); }
FormulaPtr Formula::circ(FormulaPtr a) { return mk(FKind::Circ, "", {}, std::move(a), nullptr); }

bool is_quantifier(FKind k) { return k == FKind::Forall || k == FKind::Exists; }
bool is_unary(FKind k) {
    return k == FKind::Neg || k == FKind::ClassNeg || k == FKind::Bang ||
           k == FKind::Quest || k == FKind::Circ;
}
bool is_binary(FKind k) {
    return k == FKind::And || k == FKind::Or || k == FKind::Imp || k == FKind::Iff ||
           k == FKind::StrongImp || k == FKind::StrongIff;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->name != b->name || a->args != b->args) return false;
    return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

// bound variables are matched through a renaming stack
static bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b,
                     std::vector<std::pair<std::string, std::string>>& bound) {
    if (!a || !b) return a.get() == b.get();
    if (a->kind != b->kind) return false;
    auto term_eq = [&](const Term& s, const Term& t) {
        if (s.kind != t.kind) return false;
        if (s.kind == TermKind::Constant) return s.name == t.name;
        for (auto it = bound.rbegin(); it != bound.rend(); ++it) {
            if (it->first == s.name || it->second == t.name)
                return it->first == s.name && it->second == t.name;
        }
        return s.name == t.name;
    };
    switch (a->kind) {
    case FKind::Atom:
        if (a->name != b->name || a->args.size() != b->args.size()) return false;
        [[fallthrough]];
    case FKind::Eq:
        if (a->args.size() != b->args.size()) return false;
        for (size_t i = 0; i < a->args.size(); i++)
            if (!term_eq(a->args[i], b->args[i])) return false;
        return true;
    case FKind::Bot:
        return true;
    case FKind::Forall:
    case FKind::Exists: {
        bound.emplace_back(a->name, b->name);
        bool r = alpha_eq(a->lhs, b->lhs, bound);
        bound.pop_back();
        return r;
    }
    default:
        return alpha_eq(a->lhs, b->lhs, bound) && alpha_eq(a->rhs, b->rhs, bound);
    }
}

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
    std::vector<std::pair<std::string, std::string>> bound;
    return alpha_eq(a, b, bound);
}

static void collect_free(const FormulaPtr& f, std::vector<std::string>& scope,
                         std::set<std::string>& out) {
    if (!f) return;
    switch (f->kind) {
    case FKind::Atom:
    case FKind::Eq:
        for (auto& t : f->args) {
            if (t.kind != TermKind::Variable) continue;
            bool shadowed = false;
            for (auto& v : scope)
                if (v == t.name) { shadowed = true; break; }
            if (!shadowed) out.insert(t.name);
        }
        return;
    case FKind::Forall:
    case FKind::Exists:
        scope.push_back(f->name);
        collect_free(f->lhs, scope, out);
        scope.pop_back();
        return;
    default:
        collect_free(f->lhs, scope, out);
        collect_free(f->rhs, scope, out);
    }
}

std::set<std::string> free_vars(const FormulaPtr& f) {
    std::set<std::string> out;
    std::vector<std::string> scope;
    collect_free(f, scope, out);
    return out;
}

bool is_closed(const FormulaPtr& f) { return free_vars(f).empty(); }

static std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
    std::string n = base;
    do { n += '\''; } while (avoid.count(n));
    return n;
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& x, const Term& t) {
    if (!f) return f;
    switch (f->kind) {
    case FKind::Atom:
    case FKind::Eq: {
        bool hit = false;
        for (auto& a : f->args)
            if (a.kind == TermKind::Variable && a.name == x) { hit = true; break; }
        if (!hit) return f;
        std::vector<Term> args = f->args;
        for (auto& a : args)
            if (a.kind == TermKind::Variable && a.name == x) a = t;
        return mk(f->kind, f->name, std::move(args), nullptr, nullptr);
    }
    case FKind::Bot:
        return f;
    case FKind::Forall:
    case FKind::Exists: {
        if (f->name == x) return f;  // x is not free below
        auto body_fv = free_vars(f->lhs);
        if (!body_fv.count(x)) return f;
        if (t.kind == TermKind::Variable && t.name == f->name) {
            // t would be captured: rename the binder first
            std::set<std::string> avoid = body_fv;
            avoid.insert(x);
            avoid.insert(t.name);
            std::string v2 = fresh_name(f->name, avoid);
            auto body = substitute(f->lhs, f->name, var(v2));
            return mk(f->kind, v2, {}, substitute(body, x, t), nullptr);
        }
        auto body = substitute(f->lhs, x, t);
        return body == f->lhs ? f : mk(f->kind, f->name, {}, std::move(body), nullptr);
    }
    default: {
        auto l = substitute(f->lhs, x, t);
        auto r = substitute(f->rhs, x, t);
        if (l == f->lhs && r == f->rhs) return f;
        return mk(f->kind, f->name, {}, std::move(l), std::move(r));
    }
    }
}

FormulaPtr desugar(const FormulaPtr& f) {
    if (!f) return f;
    switch (f->kind) {
    case FKind::Atom:
    case FKind::Eq:
    case FKind::Bot:
        return f;
    case FKind::StrongImp: {
        auto a = desugar(f->lhs), b = desugar(f->rhs);
        return Formula::conj(Formula::imp(a, b),
                             Formula::imp(Formula::neg(b), Formula::neg(a)));
    }
    case FKind::StrongIff: {
        auto a = desugar(f->lhs), b = desugar(f->rhs);
        return Formula::conj(Formula::iff(a, b),
                             Formula::iff(Formula::neg(a), Formula::neg(b)));
    }
    case FKind::ClassNeg:
        return Formula::imp(desugar(f->lhs), Formula::bot());
    case FKind::Bang:
        return Formula::neg(Formula::imp(desugar(f->lhs), Formula::bot()));
    case FKind::Quest:
        return Formula::imp(Formula::neg(desugar(f->lhs)), Formula::bot());
    case FKind::Circ: {
        auto a = desugar(f->lhs);
        return Formula::iff(Formula::neg(Formula::imp(a, Formula::bot())),
                            Formula::imp(Formula::neg(a), Formula::bot()));
    }
    default: {
        auto l = desugar(f->lhs);
        auto r = desugar(f->rhs);
        if (l == f->lhs && r == f->rhs) return f;
        return mk(f->kind, f->name, {}, std::move(l), std::move(r));
    }
    }
}

bool sugar_free(const FormulaPtr& f) {
    if (!f) return true;
    switch (f->kind) {
    case FKind::StrongImp:
    case FKind::StrongIff:
    case FKind::ClassNeg:
    case FKind::Bang:
    case FKind::Quest:
    case FKind::Circ:
        return false;
    default:
        return sugar_free(f->lhs) && sugar_free(f->rhs);
    }
}

std::string render(const Term& t) { return t.name; }

// binding strength, loosest to tightest; quantifier bodies extend maximally
// to the right so quantifiers themselves sit below every infix level
static int prec(FKind k) {
    switch (k) {
    case FKind::Forall:
    case FKind::Exists: return 0;
    case FKind::StrongIff: return 1;
    case FKind::StrongImp: return 2;
    case FKind::Iff: return 3;
    case FKind::Imp: return 4;
    case FKind::Or: return 5;
    case FKind::And: return 6;
    case FKind::Neg:
    case FKind::ClassNeg:
    case FKind::Bang:
    case FKind::Quest:
    case FKind::Circ: return 7;
    default: return 8;  // atoms
    }
}

static bool right_assoc(FKind k) {
    return k == FKind::Imp || k == FKind::Iff || k == FKind::StrongImp ||
           k == FKind::StrongIff;
}

static const char* infix_op(FKind k) {
    switch (k) {
    case FKind::And: return " & ";
    case FKind::Or: return " | ";
    case FKind::Imp: return " -> ";
    case FKind::Iff: return " <-> ";
    case FKind::StrongImp: return " => ";
    case FKind::StrongIff: return " <=> ";
    default: return "";
    }
}

static void render_at(const FormulaPtr& f, int min_prec, std::string& out) {
    int p = prec(f->kind);
    if (p < min_prec) {
        out += '(';
        render_at(f, 0, out);
        out += ')';
        return;
    }
    switch (f->kind) {
    case FKind::Atom:
        if (f->name == "in" && f->args.size() == 2) {
            out += f->args[0].name + " in " + f->args[1].name;
            return;
        }
        out += f->name;
        out += '(';
        for (size_t i = 0; i < f->args.size(); i++) {
            if (i) out += ", ";
            out += f->args[i].name;
        }
        out += ')';
        return;
    case FKind::Eq:
        out += f->args[0].name + " = " + f->args[1].name;
        return;
    case FKind::Bot:
        out += "bot";
        return;
    case FKind::Neg: out += '~'; render_at(f->lhs, p, out); return;
    case FKind::ClassNeg: out += "not "; render_at(f->lhs, p, out); return;
    case FKind::Bang: out += '!'; render_at(f->lhs, p, out); return;
    case FKind::Quest: out += '?'; render_at(f->lhs, p, out); return;
    case FKind::Circ: out += "o "; render_at(f->lhs, p, out); return;
    case FKind::Forall:
    case FKind::Exists:
        out += f->kind == FKind::Forall ? "forall " : "exists ";
        out += f->name;
        out += ". ";
        render_at(f->lhs, 0, out);
        return;
    default:
        if (right_assoc(f->kind)) {
            render_at(f->lhs, p + 1, out);
            out += infix_op(f->kind);
            render_at(f->rhs, p, out);
        } else {
            render_at(f->lhs, p, out);
            out += infix_op(f->kind);
            render_at(f->rhs, p + 1, out);
        }
    }
}

std::string render(const FormulaPtr& f) {
    std::string out;
    render_at(f, 0, out);
    return out;
}

}  // namespace nclogic
