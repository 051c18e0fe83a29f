#include "nclogic/search.hpp"

#include <cstdlib>

#include "nclogic/error.hpp"

namespace nclogic {

uint64_t budget_from_env() {
    const char* s = std::getenv("NCLOGIC_BUDGET");
    if (!s || !*s) return default_budget;
    char* end = nullptr;
    unsigned long long v = strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return (uint64_t)v;
    throw ValidationError("NCLOGIC_BUDGET must be a positive integer");
}

static uint64_t sat_mul(uint64_t a, uint64_t b, uint64_t cap) {
    if (a == 0 || b == 0) return 0;
    if (a > cap / b) return cap + 1;  // saturate just above the cap
    return a * b;
}

static uint64_t sat_pow(uint64_t base, uint64_t exp, uint64_t cap) {
    uint64_t r = 1;
    while (exp-- > 0) {
        r = sat_mul(r, base, cap);
        if (r > cap) return r;
    }
    return r;
}

uint64_t tf_case_count(const Signature& sig, int size, size_t free_var_count,
                       uint64_t cap) {
    uint64_t n = (uint64_t)size;
    uint64_t total = 1;
    for (auto& [name, arity] : sig.relations) {
        uint64_t tuples = sat_pow(n, (uint64_t)arity, cap);
        if (tuples > cap) return tuples;
        total = sat_mul(total, sat_pow(4, tuples, cap), cap);  // pos/neg bits per tuple
        if (total > cap) return total;
    }
    total = sat_mul(total, sat_pow(2, n * (n + 1) / 2, cap), cap);  // symmetric eq_neg
    total = sat_mul(total, sat_pow(n, sig.constants.size(), cap), cap);
    total = sat_mul(total, sat_pow(n, free_var_count, cap), cap);
    return total;
}

namespace {

// one mutable slot of the model enumeration, in a fixed order
struct Cell {
    enum Kind { RelTuple, EqPair, Constant } kind;
    TFRel* rel = nullptr;
    size_t index = 0;      // tuple index, or i*n+j for eq pairs
    size_t mirror = 0;     // j*n+i
    std::string* constant_slot = nullptr;
    uint64_t radix = 0;
};

struct ModelIter {
    TFModel model;
    std::vector<Cell> cells;
    std::vector<uint64_t> digits;
    bool done = false;

    explicit ModelIter(const Signature& sig, int size) {
        std::vector<std::string> dom;
        for (int i = 0; i < size; i++) dom.push_back(std::string(1, (char)('a' + i)));
        model = TFModel::blank(sig, std::move(dom));
        size_t n = model.size();
        for (auto& [name, rel] : model.relations) {
            size_t tuples = rel.pos.size();
            for (size_t t = 0; t < tuples; t++)
                cells.push_back({Cell::RelTuple, &rel, t, 0, nullptr, 4});
        }
        for (size_t i = 0; i < n; i++)
            for (size_t j = i; j < n; j++)
                cells.push_back({Cell::EqPair, nullptr, i * n + j, j * n + i, nullptr, 2});
        for (auto& [c, e] : model.constants)
            cells.push_back({Cell::Constant, nullptr, 0, 0, &e, n});
        digits.assign(cells.size(), 0);
        for (auto& c : cells) apply(c, 0);
    }

    void apply(const Cell& c, uint64_t v) {
        switch (c.kind) {
        case Cell::RelTuple:
            c.rel->pos[c.index] = v & 1;
            c.rel->neg[c.index] = v & 2;
            break;
        case Cell::EqPair:
            model.eq_neg[c.index] = v;
            model.eq_neg[c.mirror] = v;
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

SearchResult consequence_bounded(const Signature& sig,
                                 const std::vector<FormulaPtr>& premises,
                                 const FormulaPtr& conclusion, int max_size,
                                 uint64_t budget) {
    if (max_size < 1) throw ValidationError("max_size must be at least 1");
    std::set<std::string> fv = free_vars(conclusion);
    for (auto& p : premises)
        for (auto& v : free_vars(p)) fv.insert(v);
    std::vector<std::string> vars(fv.begin(), fv.end());

    uint64_t total = 0;
    for (int size = 1; size <= max_size; size++) {
        uint64_t c = tf_case_count(sig, size, vars.size(), budget);
        if (c > budget || total + c > budget)
            throw BudgetError("bounded search needs more than " + std::to_string(budget) +
                              " cases at domain size " + std::to_string(size) +
                              "; raise --budget / NCLOGIC_BUDGET to allow it");
        total += c;
    }

    SearchResult res;
    for (int size = 1; size <= max_size; size++) {
        ModelIter it(sig, size);
        size_t n = it.model.size();
        uint64_t var_combos = 1;
        for (size_t i = 0; i < vars.size(); i++) var_combos *= n;
        while (true) {
            res.models_checked++;
            VarEnv env;
            for (auto& v : vars) env.emplace_back(v, 0);
            for (uint64_t combo = 0; combo < var_combos; combo++) {
                uint64_t x = combo;
                for (size_t i = 0; i < vars.size(); i++) {
                    env[i].second = (int)(x % n);
                    x /= n;
                }
                res.cases_checked++;
                bool premises_hold = true;
                for (auto& p : premises) {
                    if (!eval(it.model, p, env).designated()) {
                        premises_hold = false;
                        break;
                    }
                }
                if (!premises_hold) continue;
                if (!eval(it.model, conclusion, env).designated()) {
                    res.valid = false;
                    res.countermodel = it.model;
                    for (size_t i = 0; i < vars.size(); i++)
                        res.counterassignment[vars[i]] = it.model.domain[env[i].second];
                    return res;
                }
            }
            if (!it.next()) break;
        }
    }
    return res;
}

SearchResult validity_bounded(const Signature& sig, const FormulaPtr& f, int max_size,
                              uint64_t budget) {
    return consequence_bounded(sig, {}, f, max_size, budget);
}

}  // namespace nclogic
