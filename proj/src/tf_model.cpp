#include "nclogic/tf_model.hpp"

#include <algorithm>
#include <cmath>

#include "nclogic/error.hpp"

namespace nclogic {

int TFModel::index_of(const std::string& elem) const {
    for (size_t i = 0; i < domain.size(); i++)
        if (domain[i] == elem) return (int)i;
    return -1;
}

static size_t pow_size(size_t base, int exp) {
    size_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

TFModel TFModel::blank(const Signature& sig, std::vector<std::string> domain) {
    TFModel m;
    m.domain = std::move(domain);
    size_t n = m.domain.size();
    for (auto& [name, arity] : sig.relations) {
        TFRel r;
        r.arity = arity;
        r.pos.assign(pow_size(n, arity), false);
        r.neg.assign(pow_size(n, arity), false);
        m.relations[name] = std::move(r);
    }
    for (auto& c : sig.constants) m.constants[c] = m.domain.at(0);
    m.eq_neg.assign(n * n, false);
    return m;
}

std::string validate(const TFModel& m, const Signature& sig) {
    size_t n = m.domain.size();
    if (n == 0) return "domain is empty";
    for (size_t i = 0; i < n; i++)
        for (size_t j = i + 1; j < n; j++)
            if (m.domain[i] == m.domain[j])
                return "duplicate domain element \"" + m.domain[i] + "\"";
    if (m.eq_neg.size() != n * n)
        return "eq_neg has wrong size";
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++)
            if (m.eq_neg[i * n + j] != m.eq_neg[j * n + i])
                return "eq_neg is not symmetric: (" + m.domain[i] + ", " + m.domain[j] +
                       ") without its mirror";
    for (auto& [name, arity] : sig.relations) {
        auto it = m.relations.find(name);
        if (it == m.relations.end())
            return "relation \"" + name + "\" has no interpretation";
        if (it->second.arity != arity)
            return "relation \"" + name + "\" has arity " + std::to_string(arity) +
                   " in the signature but " + std::to_string(it->second.arity) +
                   " in the model";
        size_t want = pow_size(n, arity);
        if (it->second.pos.size() != want || it->second.neg.size() != want)
            return "relation \"" + name + "\" has wrong extension size";
    }
    for (auto& [name, rel] : m.relations)
        if (!sig.relations.count(name))
            return "relation \"" + name + "\" not in signature";
    for (auto& c : sig.constants) {
        auto it = m.constants.find(c);
        if (it == m.constants.end())
            return "constant \"" + c + "\" has no interpretation";
        if (m.index_of(it->second) < 0)
            return "constant \"" + c + "\" names unknown element \"" + it->second + "\"";
    }
    for (auto& [c, e] : m.constants)
        if (!sig.constants.count(c))
            return "constant \"" + c + "\" not in signature";
    return "";
}

namespace {

struct Ev {
    const TFModel& m;
    VarEnv& env;
    size_t n;

    int term_index(const Term& t) const {
        if (t.kind == TermKind::Variable) {
            for (auto it = env.rbegin(); it != env.rend(); ++it)
                if (it->first == t.name) return it->second;
            throw ValidationError("unbound variable \"" + t.name + "\"");
        }
        auto it = m.constants.find(t.name);
        if (it == m.constants.end())
            throw ValidationError("uninterpreted constant \"" + t.name + "\"");
        int idx = m.index_of(it->second);
        if (idx < 0) throw ValidationError("constant \"" + t.name + "\" names unknown element");
        return idx;
    }

    TruthValue run(const Formula* f) {
        switch (f->kind) {
        case FKind::Atom: {
            auto it = m.relations.find(f->name);
            if (it == m.relations.end())
                throw ValidationError("uninterpreted relation \"" + f->name + "\"");
            const TFRel& r = it->second;
            if ((int)f->args.size() != r.arity)
                throw ValidationError("arity mismatch for relation \"" + f->name + "\"");
            size_t idx = 0;
            for (auto& t : f->args) idx = idx * n + (size_t)term_index(t);
            return {r.pos[idx], r.neg[idx]};
        }
        case FKind::Eq: {
            int a = term_index(f->args[0]), b = term_index(f->args[1]);
            return {a == b, m.eq_neg[(size_t)a * n + (size_t)b]};
        }
        case FKind::Bot: return tv_bot();
        case FKind::Neg: return tv_neg(run(f->lhs.get()));
        case FKind::And: return tv_and(run(f->lhs.get()), run(f->rhs.get()));
        case FKind::Or: return tv_or(run(f->lhs.get()), run(f->rhs.get()));
        case FKind::Imp: return tv_imp(run(f->lhs.get()), run(f->rhs.get()));
        case FKind::Iff: return tv_iff(run(f->lhs.get()), run(f->rhs.get()));
        case FKind::StrongImp: return tv_strong_imp(run(f->lhs.get()), run(f->rhs.get()));
        case FKind::StrongIff: return tv_strong_iff(run(f->lhs.get()), run(f->rhs.get()));
        case FKind::ClassNeg: return tv_class_neg(run(f->lhs.get()));
        case FKind::Bang: return tv_bang(run(f->lhs.get()));
        case FKind::Quest: return tv_quest(run(f->lhs.get()));
        case FKind::Circ: return tv_circ(run(f->lhs.get()));
        case FKind::Forall: {
            // true when every instance is, false when some instance is
            bool t = true, fa = false;
            env.emplace_back(f->name, 0);
            for (size_t d = 0; d < n; d++) {
                env.back().second = (int)d;
                TruthValue v = run(f->lhs.get());
                t = t && v.truth;
                fa = fa || v.falsity;
                if (!t && fa) break;
            }
            env.pop_back();
            return {t, fa};
        }
        case FKind::Exists: {
            bool t = false, fa = true;
            env.emplace_back(f->name, 0);
            for (size_t d = 0; d < n; d++) {
                env.back().second = (int)d;
                TruthValue v = run(f->lhs.get());
                t = t || v.truth;
                fa = fa && v.falsity;
                if (t && !fa) break;
            }
            env.pop_back();
            return {t, fa};
        }
        }
        throw ValidationError("unreachable formula kind");
    }
};

}  // namespace

TruthValue eval(const TFModel& m, const FormulaPtr& f, VarEnv& env) {
    Ev ev{m, env, m.domain.size()};
    return ev.run(f.get());
}

TruthValue eval(const TFModel& m, const FormulaPtr& f,
                const std::map<std::string, std::string>& assignment) {
    VarEnv env;
    for (auto& [v, e] : assignment) {
        int idx = m.index_of(e);
        if (idx < 0) throw ValidationError("assignment maps \"" + v + "\" to unknown element \"" + e + "\"");
        env.emplace_back(v, idx);
    }
    for (auto& v : free_vars(f)) {
        bool found = false;
        for (auto& [name, _] : env)
            if (name == v) { found = true; break; }
        if (!found) throw ValidationError("assignment misses free variable \"" + v + "\"");
    }
    return eval(m, f, env);
}

bool designated_everywhere(const TFModel& m, const FormulaPtr& f) {
    std::vector<std::string> vars;
    for (auto& v : free_vars(f)) vars.push_back(v);
    size_t n = m.domain.size();
    VarEnv env;
    for (auto& v : vars) env.emplace_back(v, 0);
    size_t combos = 1;
    for (size_t i = 0; i < vars.size(); i++) combos *= n;
    for (size_t c = 0; c < combos; c++) {
        size_t x = c;
        for (size_t i = 0; i < vars.size(); i++) {
            env[i].second = (int)(x % n);
            x /= n;
        }
        if (!eval(m, f, env).designated()) return false;
    }
    return true;
}

static const std::map<std::string, std::pair<bool, FormulaPtr (*)(FormulaPtr, FormulaPtr)>>&
conn_table() {
    static const std::map<std::string, std::pair<bool, FormulaPtr (*)(FormulaPtr, FormulaPtr)>> t{
        {"and", {true, &Formula::conj}},
        {"or", {true, &Formula::disj}},
        {"imp", {true, &Formula::imp}},
        {"iff", {true, &Formula::iff}},
        {"simp", {true, &Formula::strong_imp}},
        {"siff", {true, &Formula::strong_iff}},
        {"neg", {false, nullptr}},
        {"cneg", {false, nullptr}},
        {"not", {false, nullptr}},
        {"bang", {false, nullptr}},
        {"quest", {false, nullptr}},
        {"circ", {false, nullptr}},
    };
    return t;
}

bool known_connective(const std::string& c) { return conn_table().count(c) > 0; }
bool connective_is_binary(const std::string& c) {
    auto it = conn_table().find(c);
    if (it == conn_table().end()) throw ValidationError("unknown connective \"" + c + "\"");
    return it->second.first;
}

static FormulaPtr unary_conn(const std::string& c, FormulaPtr a) {
    if (c == "neg") return Formula::neg(a);
    if (c == "cneg" || c == "not") return Formula::class_neg(a);
    if (c == "bang") return Formula::bang(a);
    if (c == "quest") return Formula::quest(a);
    if (c == "circ") return Formula::circ(a);
    throw ValidationError("unknown connective \"" + c + "\"");
}

// force a nullary atom to a given value via its twin extension bits
static void force(TFModel& m, const std::string& rel, TruthValue v) {
    m.relations[rel].pos[0] = v.truth;
    m.relations[rel].neg[0] = v.falsity;
}

std::vector<TruthValue> truth_table(const std::string& connective) {
    bool binary = connective_is_binary(connective);
    Signature sig;
    sig.relations["p"] = 0;
    sig.relations["q"] = 0;
    TFModel m = TFModel::blank(sig, {"d"});
    auto p = Formula::atom("p", {});
    auto q = Formula::atom("q", {});
    FormulaPtr f = binary ? conn_table().at(connective).second(p, q)
                          : unary_conn(connective, p);
    std::vector<TruthValue> out;
    for (TruthValue a : tv_all) {
        force(m, "p", a);
        if (!binary) {
            out.push_back(eval(m, f));
            continue;
        }
        for (TruthValue b : tv_all) {
            force(m, "q", b);
            out.push_back(eval(m, f));
        }
    }
    return out;
}

}  // namespace nclogic
