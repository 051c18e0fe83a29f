#include "nclogic/randgen.hpp"

namespace nclogic {

uint64_t mix_seed(uint64_t base, uint64_t a, uint64_t b) {
    // splitmix64 finalizer over the packed inputs
    uint64_t z = base + 0x9e3779b97f4a7c15ull * (a + 1) + 0xbf58476d1ce4e5b9ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace {

Term random_term(Rng& rng, const Signature& sig, const FormulaGenOptions& opt) {
    size_t nvars = opt.var_pool.size();
    size_t nconst = sig.constants.size();
    size_t pick = rng.next(nvars + nconst);
    if (pick < nvars) return var(opt.var_pool[pick]);
    auto it = sig.constants.begin();
    std::advance(it, pick - nvars);
    return cons(*it);
}

FormulaPtr random_atom(Rng& rng, const Signature& sig, const FormulaGenOptions& opt) {
    size_t nrel = sig.relations.size();
    size_t pick = rng.next(nrel + 2);
    if (pick < nrel) {
        auto it = sig.relations.begin();
        std::advance(it, pick);
        std::vector<Term> args;
        for (int i = 0; i < it->second; i++) args.push_back(random_term(rng, sig, opt));
        return Formula::atom(it->first, std::move(args));
    }
    if (pick == nrel) return Formula::eq(random_term(rng, sig, opt), random_term(rng, sig, opt));
    return Formula::bot();
}

FormulaPtr gen(Rng& rng, const Signature& sig, const FormulaGenOptions& opt, int depth) {
    if (depth <= 0 || rng.next(4) == 0) return random_atom(rng, sig, opt);
    int kinds = 6 + (opt.allow_quantifiers ? 2 : 0) + (opt.allow_sugar ? 6 : 0);
    switch (rng.next((uint64_t)kinds)) {
    case 0: return Formula::neg(gen(rng, sig, opt, depth - 1));
    case 1: return Formula::conj(gen(rng, sig, opt, depth - 1), gen(rng, sig, opt, depth - 1));
    case 2: return Formula::disj(gen(rng, sig, opt, depth - 1), gen(rng, sig, opt, depth - 1));
    case 3: return Formula::imp(gen(rng, sig, opt, depth - 1), gen(rng, sig, opt, depth - 1));
    case 4: return Formula::iff(gen(rng, sig, opt, depth - 1), gen(rng, sig, opt, depth - 1));
    case 5: return random_atom(rng, sig, opt);
    case 6: {
        if (!opt.allow_quantifiers) break;
        auto v = opt.var_pool[rng.next(opt.var_pool.size())];
        return Formula::forall(v, gen(rng, sig, opt, depth - 1));
    }
    case 7: {
        if (!opt.allow_quantifiers) break;
        auto v = opt.var_pool[rng.next(opt.var_pool.size())];
        return Formula::exists(v, gen(rng, sig, opt, depth - 1));
    }
    case 8: return Formula::strong_imp(gen(rng, sig, opt, depth - 1), gen(rng, sig, opt, depth - 1));
    case 9: return Formula::strong_iff(gen(rng, sig, opt, depth - 1), gen(rng, sig, opt, depth - 1));
    case 10: return Formula::class_neg(gen(rng, sig, opt, depth - 1));
    case 11: return Formula::bang(gen(rng, sig, opt, depth - 1));
    case 12: return Formula::quest(gen(rng, sig, opt, depth - 1));
    case 13: return Formula::circ(gen(rng, sig, opt, depth - 1));
    }
    return random_atom(rng, sig, opt);
}

}  // namespace

FormulaPtr random_formula(Rng& rng, const Signature& sig, const FormulaGenOptions& opt) {
    return gen(rng, sig, opt, opt.max_depth);
}

TFModel random_model(Rng& rng, const Signature& sig, int size) {
    std::vector<std::string> dom;
    for (int i = 0; i < size; i++) dom.push_back(std::string(1, (char)('a' + i)));
    TFModel m = TFModel::blank(sig, std::move(dom));
    size_t n = m.size();
    for (auto& [name, rel] : m.relations) {
        for (size_t t = 0; t < rel.pos.size(); t++) {
            rel.pos[t] = rng.coin();
            rel.neg[t] = rng.coin();
        }
    }
    for (size_t i = 0; i < n; i++)
        for (size_t j = i; j < n; j++) {
            bool bit = rng.coin();
            m.eq_neg[i * n + j] = bit;
            m.eq_neg[j * n + i] = bit;
        }
    for (auto& [c, e] : m.constants) e = m.domain[rng.next(n)];
    return m;
}

std::map<std::string, std::string> random_assignment(Rng& rng, const TFModel& m,
                                                     const std::set<std::string>& vars) {
    std::map<std::string, std::string> out;
    for (auto& v : vars) out[v] = m.domain[rng.next(m.domain.size())];
    return out;
}

}  // namespace nclogic
