#include "nclogic/json_io.hpp"

#include <fstream>

#include "nclogic/error.hpp"
#include "nclogic/parser.hpp"

namespace nclogic {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("bad JSON in \"" + path + "\": " + e.what());
    }
    return j;
}

static void expect_object(const json& j, const char* what) {
    if (!j.is_object()) throw ValidationError(std::string(what) + " must be a JSON object");
}

Signature signature_from_json(const json& j) {
    expect_object(j, "signature");
    Signature sig;
    if (j.contains("relations")) {
        expect_object(j.at("relations"), "\"relations\"");
        for (auto& [name, arity] : j.at("relations").items()) {
            if (!arity.is_number_integer() || arity.get<int>() < 0)
                throw ValidationError("relation \"" + name + "\" needs a nonnegative arity");
            sig.relations[name] = arity.get<int>();
        }
    }
    if (j.contains("constants")) {
        if (!j.at("constants").is_array())
            throw ValidationError("\"constants\" must be an array");
        for (auto& c : j.at("constants")) {
            if (!c.is_string()) throw ValidationError("constants must be strings");
            sig.constants.insert(c.get<std::string>());
        }
    }
    std::string problem = sig.check();
    if (!problem.empty()) throw ValidationError(problem);
    return sig;
}

json signature_to_json(const Signature& sig) {
    json rels = json::object();
    for (auto& [name, arity] : sig.relations) rels[name] = arity;
    json consts = json::array();
    for (auto& c : sig.constants) consts.push_back(c);
    return json{{"relations", rels}, {"constants", consts}};
}

static std::vector<int> tuple_indices(const json& tuple, const TFModel& m,
                                      const std::string& rel, int arity) {
    if (!tuple.is_array() || (int)tuple.size() != arity)
        throw ValidationError("relation \"" + rel + "\": tuple arity mismatch");
    std::vector<int> out;
    for (auto& e : tuple) {
        if (!e.is_string())
            throw ValidationError("relation \"" + rel + "\": tuple entries must be element ids");
        int idx = m.index_of(e.get<std::string>());
        if (idx < 0)
            throw ValidationError("relation \"" + rel + "\": unknown element \"" +
                                  e.get<std::string>() + "\"");
        out.push_back(idx);
    }
    return out;
}

TFModel tf_model_from_json(const json& j) {
    expect_object(j, "model");
    TFModel m;
    if (!j.contains("domain") || !j.at("domain").is_array() || j.at("domain").empty())
        throw ValidationError("model needs a nonempty \"domain\" array");
    for (auto& e : j.at("domain")) {
        if (!e.is_string()) throw ValidationError("domain elements must be strings");
        m.domain.push_back(e.get<std::string>());
    }
    size_t n = m.domain.size();
    for (size_t i = 0; i < n; i++)
        for (size_t k = i + 1; k < n; k++)
            if (m.domain[i] == m.domain[k])
                throw ValidationError("duplicate domain element \"" + m.domain[i] + "\"");
    if (j.contains("constants")) {
        expect_object(j.at("constants"), "\"constants\"");
        for (auto& [c, e] : j.at("constants").items()) {
            if (!e.is_string() || m.index_of(e.get<std::string>()) < 0)
                throw ValidationError("constant \"" + c + "\" must name a domain element");
            m.constants[c] = e.get<std::string>();
        }
    }
    if (j.contains("relations")) {
        expect_object(j.at("relations"), "\"relations\"");
        for (auto& [name, rj] : j.at("relations").items()) {
            expect_object(rj, ("relation \"" + name + "\"").c_str());
            if (!rj.contains("arity") || !rj.at("arity").is_number_integer() ||
                rj.at("arity").get<int>() < 0)
                throw ValidationError("relation \"" + name + "\" needs a nonnegative \"arity\"");
            TFRel rel;
            rel.arity = rj.at("arity").get<int>();
            size_t tuples = 1;
            for (int i = 0; i < rel.arity; i++) tuples *= n;
            rel.pos.assign(tuples, false);
            rel.neg.assign(tuples, false);
            for (const char* side : {"pos", "neg"}) {
                if (!rj.contains(side)) continue;
                if (!rj.at(side).is_array())
                    throw ValidationError("relation \"" + name + "\": \"" + side +
                                          "\" must be an array of tuples");
                for (auto& tuple : rj.at(side)) {
                    auto idxs = tuple_indices(tuple, m, name, rel.arity);
                    size_t flat = 0;
                    for (int i : idxs) flat = flat * n + (size_t)i;
                    (side[0] == 'p' ? rel.pos : rel.neg)[flat] = true;
                }
            }
            m.relations[name] = std::move(rel);
        }
    }
    m.eq_neg.assign(n * n, false);
    if (j.contains("eq_neg")) {
        if (!j.at("eq_neg").is_array())
            throw ValidationError("\"eq_neg\" must be an array of pairs");
        for (auto& pair : j.at("eq_neg")) {
            auto idxs = tuple_indices(pair, m, "eq_neg", 2);
            m.eq_neg[(size_t)idxs[0] * n + (size_t)idxs[1]] = true;
        }
        for (size_t i = 0; i < n; i++)
            for (size_t k = 0; k < n; k++)
                if (m.eq_neg[i * n + k] != m.eq_neg[k * n + i])
                    throw ValidationError("eq_neg is not symmetric: (" + m.domain[i] + ", " +
                                          m.domain[k] + ") without its mirror");
    }
    return m;
}

json tf_model_to_json(const TFModel& m) {
    size_t n = m.domain.size();
    json j;
    j["domain"] = m.domain;
    json consts = json::object();
    for (auto& [c, e] : m.constants) consts[c] = e;
    j["constants"] = consts;
    json rels = json::object();
    for (auto& [name, rel] : m.relations) {
        json pos = json::array(), neg = json::array();
        for (size_t t = 0; t < rel.pos.size(); t++) {
            json tuple = json::array();
            size_t x = t;
            std::vector<size_t> idxs(rel.arity);
            for (int i = rel.arity - 1; i >= 0; i--) {
                idxs[i] = x % n;
                x /= n;
            }
            for (size_t i : idxs) tuple.push_back(m.domain[i]);
            if (rel.pos[t]) pos.push_back(tuple);
            if (rel.neg[t]) neg.push_back(tuple);
        }
        rels[name] = json{{"arity", rel.arity}, {"pos", pos}, {"neg", neg}};
    }
    j["relations"] = rels;
    json eq = json::array();
    for (size_t i = 0; i < n; i++)
        for (size_t k = 0; k < n; k++)
            if (m.eq_neg[i * n + k]) eq.push_back(json::array({m.domain[i], m.domain[k]}));
    j["eq_neg"] = eq;
    return j;
}

Signature implied_signature(const TFModel& m) {
    Signature sig;
    for (auto& [name, rel] : m.relations) sig.relations[name] = rel.arity;
    for (auto& [c, e] : m.constants) sig.constants.insert(c);
    return sig;
}

static std::vector<int> key_indices(const std::string& key, const FVTarskiModel& m,
                                    const std::string& rel, int arity) {
    auto bad = [&] {
        throw ValidationError("relation \"" + rel + "\": tuple key \"" + key +
                              "\" must look like (elem,...,elem) with " +
                              std::to_string(arity) + " elements");
    };
    if (key.size() < 2 || key.front() != '(' || key.back() != ')') bad();
    std::string body = key.substr(1, key.size() - 2);
    std::vector<std::string> parts;
    if (!body.empty()) {
        size_t start = 0;
        while (true) {
            size_t comma = body.find(',', start);
            parts.push_back(body.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    for (auto& p : parts) {
        size_t a = p.find_first_not_of(' ');
        if (a == std::string::npos) bad();
        p = p.substr(a, p.find_last_not_of(' ') - a + 1);
    }
    if ((int)parts.size() != arity) bad();
    std::vector<int> idxs;
    for (auto& p : parts) {
        int i = m.index_of(p);
        if (i < 0)
            throw ValidationError("relation \"" + rel + "\": \"" + p +
                                  "\" is not a domain element");
        idxs.push_back(i);
    }
    return idxs;
}

FVTarskiModel fv_model_from_json(const json& j) {
    expect_object(j, "model");
    FVTarskiModel m;
    if (!j.contains("domain") || !j.at("domain").is_array() || j.at("domain").empty())
        throw ValidationError("model needs a nonempty \"domain\" array");
    for (auto& e : j.at("domain")) {
        if (!e.is_string()) throw ValidationError("domain elements must be strings");
        m.domain.push_back(e.get<std::string>());
    }
    size_t n = m.domain.size();
    for (size_t i = 0; i < n; i++)
        for (size_t k = i + 1; k < n; k++)
            if (m.domain[i] == m.domain[k])
                throw ValidationError("duplicate domain element \"" + m.domain[i] + "\"");
    if (j.contains("constants")) {
        expect_object(j.at("constants"), "\"constants\"");
        for (auto& [c, e] : j.at("constants").items()) {
            if (!e.is_string() || m.index_of(e.get<std::string>()) < 0)
                throw ValidationError("constant \"" + c + "\" must name a domain element");
            m.constants[c] = e.get<std::string>();
        }
    }
    if (j.contains("relations")) {
        expect_object(j.at("relations"), "\"relations\"");
        for (auto& [name, rj] : j.at("relations").items()) {
            expect_object(rj, ("relation \"" + name + "\"").c_str());
            if (!rj.contains("arity") || !rj.at("arity").is_number_integer() ||
                rj.at("arity").get<int>() < 0)
                throw ValidationError("relation \"" + name + "\" needs a nonnegative \"arity\"");
            FVRel rel;
            rel.arity = rj.at("arity").get<int>();
            size_t tuples = 1;
            for (int i = 0; i < rel.arity; i++) tuples *= n;
            rel.values.assign(tuples, tv_n);
            if (rj.contains("values")) {
                expect_object(rj.at("values"), ("relation \"" + name + "\" \"values\"").c_str());
                for (auto& [key, vj] : rj.at("values").items()) {
                    auto idxs = key_indices(key, m, name, rel.arity);
                    size_t flat = 0;
                    for (int i : idxs) flat = flat * n + (size_t)i;
                    TruthValue v;
                    if (!vj.is_string() || !tv_from_name(vj.get<std::string>(), v))
                        throw ValidationError("relation \"" + name + "\": value for " + key +
                                              " must be one of \"1\" \"b\" \"n\" \"0\"");
                    rel.values[flat] = v;
                }
            }
            m.relations[name] = std::move(rel);
        }
    }
    m.diseq.assign(n * n, false);
    if (j.contains("diseq")) {
        if (!j.at("diseq").is_array())
            throw ValidationError("\"diseq\" must be an array of pairs");
        for (auto& pair : j.at("diseq")) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
                !pair[1].is_string())
                throw ValidationError("diseq entries must be [elem, elem] pairs");
            int a = m.index_of(pair[0].get<std::string>());
            int b = m.index_of(pair[1].get<std::string>());
            if (a < 0 || b < 0)
                throw ValidationError("diseq pair names an unknown element");
            m.diseq[(size_t)a * n + (size_t)b] = true;
            m.diseq[(size_t)b * n + (size_t)a] = true;
        }
    }
    return m;
}

json fv_model_to_json(const FVTarskiModel& m) {
    size_t n = m.domain.size();
    json j;
    j["domain"] = m.domain;
    json consts = json::object();
    for (auto& [c, e] : m.constants) consts[c] = e;
    j["constants"] = consts;
    json rels = json::object();
    for (auto& [name, rel] : m.relations) {
        json vals = json::object();
        for (size_t t = 0; t < rel.values.size(); t++) {
            if (rel.values[t] == tv_n) continue;  // the blank default
            size_t x = t;
            std::vector<size_t> idxs(rel.arity);
            for (int i = rel.arity - 1; i >= 0; i--) {
                idxs[i] = x % n;
                x /= n;
            }
            std::string key = "(";
            for (size_t i = 0; i < idxs.size(); i++) {
                if (i) key += ",";
                key += m.domain[idxs[i]];
            }
            key += ")";
            vals[key] = rel.values[t].name();
        }
        rels[name] = json{{"arity", rel.arity}, {"values", vals}};
    }
    j["relations"] = rels;
    json dis = json::array();
    for (size_t i = 0; i < n; i++)
        for (size_t k = 0; k < n; k++)
            if (m.diseq[i * n + k]) dis.push_back(json::array({m.domain[i], m.domain[k]}));
    j["diseq"] = dis;
    return j;
}

Signature implied_signature(const FVTarskiModel& m) {
    Signature sig;
    for (auto& [name, rel] : m.relations) sig.relations[name] = rel.arity;
    for (auto& [c, e] : m.constants) sig.constants.insert(c);
    return sig;
}

static std::string step_formula(const json& s, int n) {
    if (!s.is_object() || !s.contains("formula") || !s.at("formula").is_string())
        throw ValidationError("step " + std::to_string(n) + " needs a \"formula\" string");
    return s.at("formula").get<std::string>();
}

static int step_int(const json& s, const char* key, int n) {
    if (!s.at(key).is_number_integer())
        throw ValidationError("step " + std::to_string(n) + ": \"" + key +
                              "\" must be an integer");
    return s.at(key).get<int>();
}

Proof proof_from_json(const json& j) {
    expect_object(j, "proof");
    Proof p;
    bool infer = !j.contains("signature");
    if (!infer) p.sig = signature_from_json(j.at("signature"));

    // texts of every formula in the file, for arity inference
    auto grab = [&](const std::string& text) {
        if (infer) parse_formula_infer(text, p.sig);
    };
    std::vector<std::string> hyp_texts;
    if (j.contains("hypotheses")) {
        if (!j.at("hypotheses").is_array())
            throw ValidationError("\"hypotheses\" must be an array of formulas");
        for (auto& h : j.at("hypotheses")) {
            if (!h.is_string()) throw ValidationError("hypotheses must be formula strings");
            hyp_texts.push_back(h.get<std::string>());
            grab(hyp_texts.back());
        }
    }
    if (!j.contains("steps") || !j.at("steps").is_array())
        throw ValidationError("proof needs a \"steps\" array");
    const json& steps = j.at("steps");
    for (size_t i = 0; i < steps.size(); i++) {
        const json& s = steps[i];
        grab(step_formula(s, (int)i + 1));
        if (s.contains("inst") && s.at("inst").is_object() && infer)
            for (auto& [key, val] : s.at("inst").items())
                if (val.is_string() && (key == "phi" || key == "psi" || key == "chi"))
                    parse_formula_infer(val.get<std::string>(), p.sig);
    }

    for (auto& h : hyp_texts) p.hypotheses.push_back(parse_formula(h, p.sig));
    for (size_t i = 0; i < steps.size(); i++) {
        const json& s = steps[i];
        int n = (int)i + 1;
        ProofLine line;
        line.claim = parse_formula(step_formula(s, n), p.sig);
        int kinds = s.contains("axiom") + s.contains("hyp") + s.contains("mp") +
                    s.contains("gen_imp") + s.contains("gen_exists");
        if (kinds != 1)
            throw ValidationError("step " + std::to_string(n) +
                                  " needs exactly one of \"axiom\", \"hyp\", \"mp\", "
                                  "\"gen_imp\", \"gen_exists\"");
        if (s.contains("axiom")) {
            AxiomJ ax;
            ax.schema = step_int(s, "axiom", n);
            if (s.contains("inst")) {
                const json& in = s.at("inst");
                expect_object(in, ("step " + std::to_string(n) + " \"inst\"").c_str());
                for (auto& [key, val] : in.items()) {
                    if (!val.is_string())
                        throw ValidationError("step " + std::to_string(n) + ": inst \"" + key +
                                              "\" must be a string");
                    const std::string text = val.get<std::string>();
                    if (key == "phi") ax.inst.phi = parse_formula(text, p.sig);
                    else if (key == "psi") ax.inst.psi = parse_formula(text, p.sig);
                    else if (key == "chi") ax.inst.chi = parse_formula(text, p.sig);
                    else if (key == "x") ax.inst.x = text;
                    else if (key == "y") ax.inst.y = text;
                    else if (key == "t") ax.inst.t = parse_term_text(text, p.sig);
                    else
                        throw ValidationError("step " + std::to_string(n) +
                                              ": unknown inst key \"" + key + "\"");
                }
            }
            line.just = ax;
        } else if (s.contains("hyp")) {
            line.just = HypJ{step_int(s, "hyp", n)};
        } else if (s.contains("mp")) {
            const json& mp = s.at("mp");
            if (!mp.is_array() || mp.size() != 2 || !mp[0].is_number_integer() ||
                !mp[1].is_number_integer())
                throw ValidationError("step " + std::to_string(n) +
                                      ": \"mp\" must be [antecedent line, implication line]");
            line.just = MPJ{mp[0].get<int>(), mp[1].get<int>()};
        } else if (s.contains("gen_imp")) {
            line.just = GenImpJ{step_int(s, "gen_imp", n)};
        } else {
            line.just = GenExistsJ{step_int(s, "gen_exists", n)};
        }
        p.lines.push_back(std::move(line));
    }
    return p;
}

}  // namespace nclogic
