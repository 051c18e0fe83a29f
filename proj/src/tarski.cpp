#include "nclogic/tarski.hpp"

#include <set>

#include "nclogic/error.hpp"
#include "nclogic/parser.hpp"
#include "nclogic/randgen.hpp"
#include "nclogic/search.hpp"

namespace nclogic {

int FVTarskiModel::index_of(const std::string& elem) const {
    for (size_t i = 0; i < domain.size(); i++)
        if (domain[i] == elem) return (int)i;
    return -1;
}

static size_t pow_size(size_t base, int exp) {
    size_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

FVTarskiModel FVTarskiModel::blank(const Signature& sig, std::vector<std::string> domain) {
    FVTarskiModel m;
    m.domain = std::move(domain);
    size_t n = m.domain.size();
    for (auto& [name, arity] : sig.relations) {
        FVRel r;
        r.arity = arity;
        r.values.assign(pow_size(n, arity), tv_n);
        m.relations[name] = std::move(r);
    }
    for (auto& c : sig.constants) m.constants[c] = m.domain.at(0);
    m.diseq.assign(n * n, false);
    return m;
}

std::string validate(const FVTarskiModel& m, const Signature& sig) {
    size_t n = m.domain.size();
    if (n == 0) return "domain is empty";
    for (size_t i = 0; i < n; i++)
        for (size_t j = i + 1; j < n; j++)
            if (m.domain[i] == m.domain[j])
                return "duplicate domain element \"" + m.domain[i] + "\"";
    if (m.diseq.size() != n * n)
        return "diseq has wrong size";
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++)
            if (m.diseq[i * n + j] != m.diseq[j * n + i])
                return "diseq is not symmetric: (" + m.domain[i] + ", " + m.domain[j] +
                       ") without its mirror";
    for (auto& [name, arity] : sig.relations) {
        auto it = m.relations.find(name);
        if (it == m.relations.end())
            return "relation \"" + name + "\" has no interpretation";
        if (it->second.arity != arity)
            return "relation \"" + name + "\" has arity " + std::to_string(arity) +
                   " in the signature but " + std::to_string(it->second.arity) +
                   " in the model";
        if (it->second.values.size() != pow_size(n, arity))
            return "relation \"" + name + "\" has wrong value table size";
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

struct FVEv {
    const FVTarskiModel& m;
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
            const FVRel& r = it->second;
            if ((int)f->args.size() != r.arity)
                throw ValidationError("arity mismatch for relation \"" + f->name + "\"");
            size_t idx = 0;
            for (auto& t : f->args) idx = idx * n + (size_t)term_index(t);
            return r.values[idx];
        }
        case FKind::Eq: {
            int a = term_index(f->args[0]), b = term_index(f->args[1]);
            return {a == b, m.diseq[(size_t)a * n + (size_t)b]};
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
            TruthValue acc = tv_one;  // conjunction over the instances
            env.emplace_back(f->name, 0);
            for (size_t d = 0; d < n; d++) {
                env.back().second = (int)d;
                acc = tv_and(acc, run(f->lhs.get()));
                if (acc == tv_zero) break;  // absorbing
            }
            env.pop_back();
            return acc;
        }
        case FKind::Exists: {
            TruthValue acc = tv_zero;  // disjunction over the instances
            env.emplace_back(f->name, 0);
            for (size_t d = 0; d < n; d++) {
                env.back().second = (int)d;
                acc = tv_or(acc, run(f->lhs.get()));
                if (acc == tv_one) break;  // absorbing
            }
            env.pop_back();
            return acc;
        }
        }
        throw ValidationError("unreachable formula kind");
    }
};

}  // namespace

TruthValue tarski_value(const FVTarskiModel& m, const FormulaPtr& f, VarEnv& env) {
    FVEv ev{m, env, m.domain.size()};
    return ev.run(f.get());
}

TruthValue tarski_value(const FVTarskiModel& m, const FormulaPtr& f,
                        const std::map<std::string, std::string>& assignment) {
    VarEnv env;
    for (auto& [v, e] : assignment) {
        int idx = m.index_of(e);
        if (idx < 0)
            throw ValidationError("assignment maps \"" + v + "\" to unknown element \"" + e + "\"");
        env.emplace_back(v, idx);
    }
    for (auto& v : free_vars(f)) {
        bool found = false;
        for (auto& [name, _] : env)
            if (name == v) { found = true; break; }
        if (!found) throw ValidationError("assignment misses free variable \"" + v + "\"");
    }
    return tarski_value(m, f, env);
}

TFModel to_tf(const FVTarskiModel& m) {
    TFModel n;
    n.domain = m.domain;
    n.constants = m.constants;
    for (auto& [name, r] : m.relations) {
        TFRel rel;
        rel.arity = r.arity;
        rel.pos.reserve(r.values.size());
        rel.neg.reserve(r.values.size());
        for (auto& v : r.values) {
            rel.pos.push_back(v.truth);
            rel.neg.push_back(v.falsity);
        }
        n.relations[name] = std::move(rel);
    }
    n.eq_neg = m.diseq;
    return n;
}

FVTarskiModel from_tf(const TFModel& n) {
    FVTarskiModel m;
    m.domain = n.domain;
    m.constants = n.constants;
    for (auto& [name, rel] : n.relations) {
        FVRel r;
        r.arity = rel.arity;
        r.values.reserve(rel.pos.size());
        for (size_t t = 0; t < rel.pos.size(); t++)
            r.values.push_back({rel.pos[t], rel.neg[t]});
        m.relations[name] = std::move(r);
    }
    m.diseq = n.eq_neg;
    return m;
}

const char* model_class_name(ModelClass cls) {
    switch (cls) {
    case ModelClass::Full: return "full";
    case ModelClass::ConsistentOnly: return "consistent-only";
    case ModelClass::CompleteOnly: return "complete-only";
    case ModelClass::Classical: return "classical";
    }
    throw ValidationError("unreachable model class");
}

bool model_class_from_name(const std::string& s, ModelClass& out) {
    for (ModelClass c : model_classes)
        if (s == model_class_name(c)) {
            out = c;
            return true;
        }
    return false;
}

bool in_class(const FVTarskiModel& m, ModelClass cls) {
    bool ban_glut = cls == ModelClass::ConsistentOnly || cls == ModelClass::Classical;
    bool ban_gap = cls == ModelClass::CompleteOnly || cls == ModelClass::Classical;
    for (auto& [name, r] : m.relations)
        for (auto& v : r.values) {
            if (ban_glut && v == tv_b) return false;
            if (ban_gap && v == tv_n) return false;
        }
    size_t n = m.domain.size();
    for (size_t i = 0; i < n; i++) {
        if (ban_glut && m.diseq[i * n + i]) return false;
        if (ban_gap)
            for (size_t j = 0; j < n; j++)
                if (i != j && !m.diseq[i * n + j]) return false;
    }
    return true;
}

namespace {

// which verdicts a relation tuple may take, and which diseq slots are free
struct ClassRule {
    std::vector<TruthValue> alphabet;  // canonical order, filtered
    bool reflexive_free = false;       // else pinned to false
    bool offdiag_free = false;         // else pinned to true
};

ClassRule class_rule(ModelClass cls) {
    switch (cls) {
    case ModelClass::Full: return {{tv_one, tv_b, tv_n, tv_zero}, true, true};
    case ModelClass::ConsistentOnly: return {{tv_one, tv_n, tv_zero}, false, true};
    case ModelClass::CompleteOnly: return {{tv_one, tv_b, tv_zero}, true, false};
    case ModelClass::Classical: return {{tv_one, tv_zero}, false, false};
    }
    throw ValidationError("unreachable model class");
}

uint64_t sat_mul(uint64_t a, uint64_t b, uint64_t cap) {
    if (a == 0 || b == 0) return 0;
    if (a > cap / b) return cap + 1;  // saturate just above the cap
    return a * b;
}

uint64_t sat_pow(uint64_t base, uint64_t exp, uint64_t cap) {
    uint64_t r = 1;
    while (exp-- > 0) {
        r = sat_mul(r, base, cap);
        if (r > cap) return r;
    }
    return r;
}

// odometer over all models of the class, mirroring the twin-extension search
struct FVIter {
    FVTarskiModel model;
    ClassRule rule;

    struct Cell {
        enum Kind { RelTuple, EqPair, Constant } kind;
        FVRel* rel = nullptr;
        size_t index = 0;  // tuple index, or i*n+j for eq pairs
        size_t mirror = 0;
        std::string* constant_slot = nullptr;
        uint64_t radix = 0;
    };
    std::vector<Cell> cells;
    std::vector<uint64_t> digits;

    FVIter(const Signature& sig, int size, ModelClass cls) : rule(class_rule(cls)) {
        std::vector<std::string> dom;
        for (int i = 0; i < size; i++) dom.push_back(std::string(1, (char)('a' + i)));
        model = FVTarskiModel::blank(sig, std::move(dom));
        size_t n = model.size();
        if (!rule.offdiag_free)
            for (size_t i = 0; i < n; i++)
                for (size_t j = 0; j < n; j++)
                    if (i != j) model.diseq[i * n + j] = true;
        for (auto& [name, rel] : model.relations) {
            size_t tuples = rel.values.size();
            for (size_t t = 0; t < tuples; t++)
                cells.push_back({Cell::RelTuple, &rel, t, 0, nullptr, rule.alphabet.size()});
        }
        for (size_t i = 0; i < n; i++)
            for (size_t j = i; j < n; j++) {
                if (i == j ? !rule.reflexive_free : !rule.offdiag_free) continue;
                cells.push_back({Cell::EqPair, nullptr, i * n + j, j * n + i, nullptr, 2});
            }
        for (auto& [c, e] : model.constants)
            cells.push_back({Cell::Constant, nullptr, 0, 0, &e, n});
        digits.assign(cells.size(), 0);
        for (auto& c : cells) apply(c, 0);
    }

    void apply(const Cell& c, uint64_t v) {
        switch (c.kind) {
        case Cell::RelTuple:
            c.rel->values[c.index] = rule.alphabet[v];
            break;
        case Cell::EqPair:
            model.diseq[c.index] = v;
            model.diseq[c.mirror] = v;
            break;
        case Cell::Constant:
            *c.constant_slot = model.domain[v];
            break;
        }
    }

    bool next() {
        for (size_t i = 0; i < cells.size(); i++) {
            if (++digits[i] < cells[i].radix) {
                apply(cells[i], digits[i]);
                return true;
            }
            digits[i] = 0;
            apply(cells[i], 0);
        }
        return false;  // wrapped around
    }
};

}  // namespace

uint64_t tarski_case_count(const Signature& sig, int size, ModelClass cls, uint64_t cap) {
    ClassRule rule = class_rule(cls);
    uint64_t n = (uint64_t)size;
    uint64_t total = 1;
    for (auto& [name, arity] : sig.relations) {
        uint64_t tuples = sat_pow(n, (uint64_t)arity, cap);
        if (tuples > cap) return tuples;
        total = sat_mul(total, sat_pow(rule.alphabet.size(), tuples, cap), cap);
        if (total > cap) return total;
    }
    uint64_t free_slots = (rule.reflexive_free ? n : 0) + (rule.offdiag_free ? n * (n - 1) / 2 : 0);
    total = sat_mul(total, sat_pow(2, free_slots, cap), cap);
    total = sat_mul(total, sat_pow(n, sig.constants.size(), cap), cap);
    return total;
}

TarskiSearchResult classify_validity(const Signature& sig, const FormulaPtr& f,
                                     ModelClass cls, int max_size, uint64_t budget) {
    if (max_size < 1) throw ValidationError("max_size must be at least 1");
    if (!is_closed(f))
        throw ValidationError("classification needs a sentence; free variables: " +
                              [&] {
                                  std::string s;
                                  for (auto& v : free_vars(f)) s += (s.empty() ? "" : ", ") + v;
                                  return s;
                              }());

    uint64_t total = 0;
    for (int size = 1; size <= max_size; size++) {
        uint64_t c = tarski_case_count(sig, size, cls, budget);
        if (c > budget || total + c > budget)
            throw BudgetError("bounded search needs more than " + std::to_string(budget) +
                              " models at domain size " + std::to_string(size) +
                              "; raise --budget / NCLOGIC_BUDGET to allow it");
        total += c;
    }

    TarskiSearchResult res;
    VarEnv env;
    for (int size = 1; size <= max_size; size++) {
        FVIter it(sig, size, cls);
        while (true) {
            res.models_checked++;
            if (!tarski_value(it.model, f, env).designated()) {
                res.valid = false;
                res.countermodel = it.model;
                return res;
            }
            if (!it.next()) break;
        }
    }
    return res;
}

Signature tarski_battery_signature() {
    Signature sig;
    sig.relations = {{"R", 1}, {"S", 2}};
    return sig;
}

namespace {

using Unary = FormulaPtr (*)(FormulaPtr);
using Binary = FormulaPtr (*)(FormulaPtr, FormulaPtr);

constexpr Unary unary_kinds[] = {Formula::neg, Formula::class_neg, Formula::bang,
                                 Formula::quest, Formula::circ};
constexpr Binary binary_kinds[] = {Formula::conj, Formula::disj, Formula::imp,
                                   Formula::iff, Formula::strong_imp, Formula::strong_iff};
const char* quant_vars[] = {"x", "x", "y", "y"};

FormulaPtr quantify(size_t kind, FormulaPtr body) {
    std::string v = quant_vars[kind];
    return kind % 2 == 0 ? Formula::forall(v, std::move(body))
                         : Formula::exists(v, std::move(body));
}

void push_unique(std::vector<FormulaPtr>& layer, std::set<std::string>& seen, FormulaPtr f) {
    if (seen.insert(render(f)).second) layer.push_back(std::move(f));
}

}  // namespace

std::vector<FormulaPtr> tarski_battery(int depth) {
    if (depth < 0) throw ValidationError("depth must be nonnegative");
    std::vector<FormulaPtr> atoms = {
        Formula::bot(),
        Formula::atom("R", {var("x")}),
        Formula::atom("R", {var("y")}),
        Formula::atom("S", {var("x"), var("x")}),
        Formula::atom("S", {var("x"), var("y")}),
        Formula::atom("S", {var("y"), var("x")}),
        Formula::eq(var("x"), var("x")),
        Formula::eq(var("x"), var("y")),
    };
    std::vector<FormulaPtr> all = atoms;
    std::set<std::string> seen;
    for (auto& f : all) seen.insert(render(f));

    std::vector<FormulaPtr> prev = atoms;
    for (int d = 1; d <= depth; d++) {
        std::vector<FormulaPtr> layer;
        size_t p = prev.size();
        if (d == 1) {
            // full closure over the atoms, with one operand pairing per
            // binary kind so every kind still sees varied combinations
            for (auto u : unary_kinds)
                for (auto& a : prev) push_unique(layer, seen, u(a));
            for (size_t k = 0; k < 6; k++)
                for (size_t i = 0; i < p; i++)
                    push_unique(layer, seen, binary_kinds[k](prev[i], prev[(i + k + 1) % p]));
            for (size_t q = 0; q < 4; q++)
                for (auto& a : prev) push_unique(layer, seen, quantify(q, a));
        } else {
            // strided samples of the previous layer keep deeper layers at a
            // fixed width while every kind keeps appearing
            for (size_t ku = 0; ku < 5; ku++)
                for (size_t i = 0; i < 4; i++)
                    push_unique(layer, seen, unary_kinds[ku](prev[(13 * i + 7 * ku) % p]));
            for (size_t kb = 0; kb < 6; kb++)
                for (size_t i = 0; i < 4; i++)
                    push_unique(layer, seen,
                                binary_kinds[kb](prev[(11 * i + 3 * kb) % p],
                                                 prev[(17 * i + 5 * kb + 1) % p]));
            for (size_t kq = 0; kq < 4; kq++)
                for (size_t i = 0; i < 4; i++)
                    push_unique(layer, seen, quantify(kq, prev[(19 * i + kq) % p]));
        }
        all.insert(all.end(), layer.begin(), layer.end());
        prev = std::move(layer);
    }
    return all;
}

namespace {

FormulaPtr close_universally(FormulaPtr f) {
    auto fv = free_vars(f);
    for (auto it = fv.rbegin(); it != fv.rend(); ++it) f = Formula::forall(*it, f);
    return f;
}

std::string describe_model(const FVTarskiModel& m) {
    std::string s = "{";
    for (auto& [name, r] : m.relations) {
        s += name + "=";
        for (auto& v : r.values) s += v.name();
        s += " ";
    }
    s += "diseq=";
    for (bool bit : m.diseq) s += bit ? '1' : '0';
    return s + "}";
}

}  // namespace

BatteryReport roundtrip_report(int max_size, int depth, int samples, uint64_t seed) {
    BatteryReport rep{"tarski-correspondence"};
    rep.params = {{"max_size", std::to_string(max_size)},
                  {"depth", std::to_string(depth)},
                  {"samples", std::to_string(samples)},
                  {"seed", std::to_string(seed)}};
    Signature sig = tarski_battery_signature();

    std::vector<FormulaPtr> battery = tarski_battery(depth);
    {
        std::set<std::string> seen;
        for (auto& f : battery) seen.insert(render(f));
        Rng rng(seed);
        FormulaGenOptions opt;
        opt.max_depth = depth;
        opt.var_pool = {"x", "y"};
        int added = 0, attempts = 0;
        while (added < samples && attempts < samples * 50 + 50) {
            attempts++;
            auto f = random_formula(rng, sig, opt);
            if (seen.insert(render(f)).second) {
                battery.push_back(std::move(f));
                added++;
            }
        }
    }

    struct Item {
        FormulaPtr f;
        std::vector<std::string> fv;
    };
    std::vector<Item> items;
    items.reserve(battery.size());
    for (auto& f : battery) {
        auto fv = free_vars(f);
        items.push_back({f, {fv.begin(), fv.end()}});
    }

    // verdict agreement between the two recursions, over every model and
    // every assignment, with both conversions round-tripping on the way
    for (int size = 1; size <= max_size; size++) {
        FVIter it(sig, size, ModelClass::Full);
        size_t n = (size_t)size;
        while (true) {
            const FVTarskiModel& m = it.model;
            TFModel tf = to_tf(m);
            rep.cases++;
            if (from_tf(tf) != m)
                rep.fail("conversion round trip lost data on " + describe_model(m));
            else if (to_tf(from_tf(tf)) != tf)
                rep.fail("reverse round trip lost data on " + describe_model(m));
            for (auto& item : items) {
                rep.cases++;
                size_t combos = pow_size(n, (int)item.fv.size());
                VarEnv env;
                for (auto& v : item.fv) env.emplace_back(v, 0);
                for (size_t combo = 0; combo < combos; combo++) {
                    size_t x = combo;
                    for (size_t i = 0; i < item.fv.size(); i++) {
                        env[i].second = (int)(x % n);
                        x /= n;
                    }
                    TruthValue a = tarski_value(m, item.f, env);
                    TruthValue b = eval(tf, item.f, env);
                    if (a != b) {
                        std::string binding;
                        for (auto& [v, d] : env)
                            binding += " " + v + "=" + m.domain[(size_t)d];
                        rep.fail("verdicts split on " + render(item.f) + " in " +
                                 describe_model(m) + ":" + binding + " satisfaction " +
                                 a.name() + " vs twin " + b.name());
                        break;
                    }
                }
            }
            if (!it.next()) break;
        }
    }

    // bounded validity must agree between the two routes; sized for the
    // advertised sweep (max_size 2 stays well under this many models)
    uint64_t inner_budget = 50'000'000;
    auto agree = [&](const Signature& s, const FormulaPtr& f, int expect /* -1 free */) {
        rep.cases++;
        FormulaPtr closed = close_universally(f);
        SearchResult tf = validity_bounded(s, closed, max_size, inner_budget);
        TarskiSearchResult tv =
            classify_validity(s, closed, ModelClass::Full, max_size, inner_budget);
        if (tf.valid != tv.valid)
            rep.fail("validity verdicts split on " + render(closed) + ": twin " +
                     (tf.valid ? "valid" : "refuted") + ", satisfaction " +
                     (tv.valid ? "valid" : "refuted"));
        else if (expect >= 0 && tf.valid != (expect == 1))
            rep.fail("expected " + std::string(expect == 1 ? "valid" : "refuted") +
                     " on both routes, got " + (tf.valid ? "valid" : "refuted") + ": " +
                     render(closed));
    };
    for (auto& item : items) agree(sig, item.f, -1);

    // fixed always-designated statements, plus one sentence both routes
    // must refute
    Signature prop;
    prop.relations = {{"p", 0}, {"q", 0}};
    for (const char* text : {
             "p() <-> !p()",
             "~p() <-> ~?p()",
             "o p() -> ((p() <=> !p()) & (p() <=> ?p()))",
             "o p() -> (~p() <=> not p())",
             "(o p() & o q()) -> ((p() -> q()) <=> (p() => q()))",
         })
        agree(prop, parse_formula(text, prop), 1);
    Signature un;
    un.relations = {{"R", 1}};
    agree(un, parse_formula("(x = y) -> (R(x) <=> R(y))", un), 1);
    agree(prop, parse_formula("p() | ~p()", prop), 0);

    return rep;
}

BatteryReport verify_class_separation(int max_size, uint64_t budget) {
    BatteryReport rep{"class-separation"};
    rep.params = {{"max_size", std::to_string(max_size)}};
    Signature sig;
    sig.relations = {{"p", 0}};

    struct Row {
        const char* text;
        std::array<bool, 4> valid;  // class order as in model_classes
        const char* witness;        // expected p verdict in the first countermodel
    };
    const Row rows[] = {
        {"(p() & ~p()) -> bot", {false, true, false, true}, "b"},
        {"p() | ~p()", {false, false, true, true}, "n"},
        {"p() | not p()", {true, true, true, true}, ""},
    };

    for (auto& row : rows) {
        FormulaPtr f = parse_formula(row.text, sig);
        for (size_t ci = 0; ci < model_classes.size(); ci++) {
            rep.cases++;
            ModelClass cls = model_classes[ci];
            auto res = classify_validity(sig, f, cls, max_size, budget);
            if (res.valid != row.valid[ci]) {
                rep.fail(std::string(row.text) + " on " + model_class_name(cls) +
                         ": expected " + (row.valid[ci] ? "valid" : "refuted") + ", got " +
                         (res.valid ? "valid" : "refuted"));
                continue;
            }
            if (!res.valid) {
                const char* got = res.countermodel->relations.at("p").values[0].name();
                if (std::string(got) != row.witness)
                    rep.fail(std::string(row.text) + " on " + model_class_name(cls) +
                             ": first countermodel has p=" + got + ", expected p=" +
                             row.witness);
            }
        }
    }

    // subclasses only drop models, so Full-class validity must carry over
    Signature prop;
    prop.relations = {{"p", 0}, {"q", 0}};
    for (const char* text : {
             "p() <-> !p()",
             "~p() <-> ~?p()",
             "o p() -> ((p() <=> !p()) & (p() <=> ?p()))",
             "o p() -> (~p() <=> not p())",
             "(o p() & o q()) -> ((p() -> q()) <=> (p() => q()))",
         }) {
        FormulaPtr f = parse_formula(text, prop);
        auto full = classify_validity(prop, f, ModelClass::Full, max_size, budget);
        for (ModelClass cls : model_classes) {
            rep.cases++;
            auto res = classify_validity(prop, f, cls, max_size, budget);
            if (full.valid && !res.valid)
                rep.fail(std::string(text) + ": valid on full but refuted on " +
                         model_class_name(cls));
        }
    }
    return rep;
}

}  // namespace nclogic
