#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nclogic/error.hpp"
#include "nclogic/hilbert.hpp"
#include "nclogic/interpret.hpp"
#include "nclogic/json_io.hpp"
#include "nclogic/parser.hpp"
#include "nclogic/search.hpp"
#include "nclogic/tarski.hpp"
#include "nclogic/universe.hpp"
#include "nclogic/verify.hpp"

using namespace nclogic;
using json = nlohmann::json;

namespace {

// "R:1,S:2,c" declares relations by name:arity and constants by bare name
Signature sig_from_compact(const std::string& text) {
    Signature sig;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(',', start);
        std::string tok = text.substr(
            start, end == std::string::npos ? std::string::npos : end - start);
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (!tok.empty()) {
            size_t colon = tok.find(':');
            if (colon == std::string::npos) {
                sig.constants.insert(tok);
            } else {
                std::string arity = tok.substr(colon + 1);
                if (arity.empty() ||
                    arity.find_first_not_of("0123456789") != std::string::npos)
                    throw ValidationError("signature entry \"" + tok +
                                          "\" needs a numeric arity after the colon");
                sig.relations[tok.substr(0, colon)] = std::stoi(arity);
            }
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    std::string problem = sig.check();
    if (!problem.empty()) throw ValidationError("signature: " + problem);
    return sig;
}

// parses a formula against --sig when given, else infers arities from use
FormulaPtr parse_with_sig(const std::string& text, const std::string& sig_text,
                          Signature& sig) {
    if (!sig_text.empty()) {
        sig = sig_from_compact(sig_text);
        return parse_formula(text, sig);
    }
    return parse_formula_infer(text, sig);
}

std::map<std::string, std::string> assignment_from(const std::vector<std::string>& pairs) {
    std::map<std::string, std::string> asg;
    for (auto& p : pairs) {
        size_t eq = p.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == p.size())
            throw ValidationError("assignment \"" + p + "\" must look like var=element");
        asg[p.substr(0, eq)] = p.substr(eq + 1);
    }
    return asg;
}

void print_report(const BatteryReport& r) {
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.check << " (" << r.cases
              << " cases";
    if (!r.ok()) std::cout << ", " << r.failure_count << " failures";
    std::cout << ")\n";
    for (auto& f : r.failures) std::cout << "  " << f << "\n";
}

// exit code for a battery outcome, JSON or text output
int finish_report(const BatteryReport& r, bool as_json) {
    if (as_json)
        std::cout << report_to_json(r).dump(2) << "\n";
    else
        print_report(r);
    return r.ok() ? 0 : 1;
}

int cmd_table(const std::string& conn, bool as_json) {
    auto entries = truth_table(conn);
    if (as_json) {
        json names = json::array();
        for (auto v : entries) names.push_back(v.name());
        std::cout << json{{"connective", conn},
                          {"arity", connective_is_binary(conn) ? 2 : 1},
                          {"order", {"1", "b", "n", "0"}},
                          {"entries", names}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    const char* order[] = {"1", "b", "n", "0"};
    int w = (int)conn.size();
    auto label = [&](const std::string& s) {
        return std::string(w > (int)s.size() ? w - s.size() : 0, ' ') + s;
    };
    if (entries.size() == 4) {
        std::cout << conn << " |\n" << std::string(w, '-') << "-+--\n";
        for (int i = 0; i < 4; i++)
            std::cout << label(order[i]) << " | " << entries[i].name() << "\n";
        return 0;
    }
    std::cout << conn << " | 1  b  n  0\n"
              << std::string(w, '-') << "-+-----------\n";
    for (int i = 0; i < 4; i++) {
        std::cout << label(order[i]) << " |";
        for (int j = 0; j < 4; j++) {
            std::cout << ' ' << entries[i * 4 + j].name();
            if (j < 3) std::cout << ' ';
        }
        std::cout << "\n";
    }
    return 0;
}

int show_search_outcome(const SearchResult& res, bool as_json) {
    if (as_json) {
        json j{{"valid", res.valid},
               {"models_checked", res.models_checked},
               {"cases_checked", res.cases_checked}};
        if (res.countermodel) {
            j["countermodel"] = tf_model_to_json(*res.countermodel);
            j["assignment"] = res.counterassignment;
        }
        std::cout << j.dump(2) << "\n";
    } else if (res.valid) {
        std::cout << "valid over " << res.models_checked << " models ("
                  << res.cases_checked << " cases)\n";
    } else {
        std::cout << "refuted after " << res.models_checked << " models\n"
                  << "countermodel: " << tf_model_to_json(*res.countermodel).dump()
                  << "\n";
        for (auto& [v, e] : res.counterassignment)
            std::cout << "  " << v << " = " << e << "\n";
    }
    return res.valid ? 0 : 1;
}

json inspect_json(Universe& u, SetId x) {
    auto members = [&](const IdSet& ids) {
        json arr = json::array();
        for (SetId m : ids) arr.push_back(u.literal(m));
        return arr;
    };
    return json{{"literal", u.literal(x)},
                {"rank", u.rank(x)},
                {"classical", u.is_classical(x)},
                {"consistent", u.is_consistent(x)},
                {"complete", u.is_complete(x)},
                {"pos", members(u.get(x).pos)},
                {"quest", members(u.get(x).quest)},
                {"bang_ext", u.literal(u.bang_ext(x))},
                {"quest_ext", u.literal(u.quest_ext(x))},
                {"realm", u.literal(u.realm(x))}};
}

void print_inspect(Universe& u, SetId x) {
    auto yesno = [](bool b) { return b ? "yes" : "no"; };
    auto members = [&](const IdSet& ids) {
        if (ids.empty()) return std::string("(none)");
        std::string out;
        for (SetId m : ids) {
            if (!out.empty()) out += ", ";
            out += u.literal(m);
        }
        return out;
    };
    const NCSet& s = u.get(x);
    std::cout << "literal: " << u.literal(x) << "\n"
              << "rank: " << u.rank(x) << "\n"
              << "classical: " << yesno(s.classical)
              << "  consistent: " << yesno(s.consistent)
              << "  complete: " << yesno(s.complete) << "\n"
              << "pos members: " << members(s.pos) << "\n"
              << "quest members: " << members(s.quest) << "\n"
              << "bang extension: " << u.literal(u.bang_ext(x)) << "\n"
              << "quest extension: " << u.literal(u.quest_ext(x)) << "\n"
              << "realm: " << u.literal(u.realm(x)) << "\n";
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"four-valued logic and set theory verification kernel"};
    app.require_subcommand(1);
    int rc = 0;

    std::string formula_text, sig_text, model_path, conn, literal, cls_name = "full";
    std::string conclusion_text, proof_path;
    std::vector<std::string> assign_pairs, premise_texts, only;
    bool as_json = false, want_desugar = false, want_count = false;
    int max_size = 3, trials = 1000, level = 3, depth = 3, samples = 64, jobs = 1;
    uint64_t seed = 0, budget = budget_from_env();

    auto* parse_cmd = app.add_subcommand("parse", "parse a formula and print it back");
    parse_cmd->add_option("formula", formula_text)->required();
    parse_cmd->add_option("--sig", sig_text, "signature, e.g. R:1,S:2,c");
    parse_cmd->add_flag("--desugar", want_desugar, "expand derived connectives");
    parse_cmd->add_flag("--json", as_json);
    parse_cmd->callback([&] {
        Signature sig;
        FormulaPtr f = parse_with_sig(formula_text, sig_text, sig);
        if (as_json) {
            json fv = json::array();
            for (auto& v : free_vars(f)) fv.push_back(v);
            std::cout << json{{"rendered", render(f)},
                              {"desugared", render(desugar(f))},
                              {"free_vars", fv},
                              {"signature", signature_to_json(sig)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << render(want_desugar ? desugar(f) : f) << "\n";
        }
    });

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula in a model file");
    eval_cmd->add_option("--model", model_path, "twin-extension model JSON")->required();
    eval_cmd->add_option("formula", formula_text)->required();
    eval_cmd->add_option("--assign", assign_pairs, "variable binding var=element");
    eval_cmd->add_flag("--json", as_json);
    eval_cmd->callback([&] {
        TFModel m = tf_model_from_json(load_json_file(model_path));
        Signature sig = implied_signature(m);
        FormulaPtr f = parse_formula(formula_text, sig);
        TruthValue v = eval(m, f, assignment_from(assign_pairs));
        if (as_json)
            std::cout << json{{"formula", render(f)}, {"value", v.name()}}.dump(2) << "\n";
        else
            std::cout << v.name() << "\n";
    });

    auto* table_cmd = app.add_subcommand("table", "print a connective's value table");
    table_cmd->add_option("connective", conn)->required();
    table_cmd->add_flag("--json", as_json);
    table_cmd->callback([&] { rc = cmd_table(conn, as_json); });

    auto* cons_cmd = app.add_subcommand(
        "consequence", "search bounded models for a consequence counterexample");
    cons_cmd->add_option("conclusion", conclusion_text)->required();
    cons_cmd->add_option("--premise", premise_texts, "premise formula (repeatable)");
    cons_cmd->add_option("--sig", sig_text, "signature, e.g. R:1,S:2,c");
    cons_cmd->add_option("--max-size", max_size, "largest domain size tried");
    cons_cmd->add_option("--budget", budget, "model/assignment case limit");
    cons_cmd->add_flag("--json", as_json);
    cons_cmd->callback([&] {
        Signature sig;
        std::vector<FormulaPtr> premises;
        FormulaPtr conclusion;
        if (!sig_text.empty()) {
            sig = sig_from_compact(sig_text);
            for (auto& t : premise_texts) premises.push_back(parse_formula(t, sig));
            conclusion = parse_formula(conclusion_text, sig);
        } else {
            for (auto& t : premise_texts) premises.push_back(parse_formula_infer(t, sig));
            conclusion = parse_formula_infer(conclusion_text, sig);
        }
        rc = show_search_outcome(
            consequence_bounded(sig, premises, conclusion, max_size, budget), as_json);
    });

    auto* proof_cmd = app.add_subcommand("check-proof", "verify a proof file line by line");
    proof_cmd->add_option("proof", proof_path, "proof JSON")->required();
    proof_cmd->add_flag("--json", as_json);
    proof_cmd->callback([&] {
        Proof p = proof_from_json(load_json_file(proof_path));
        ProofVerdict v = check_proof(p);
        if (as_json) {
            std::cout << json{{"ok", v.ok},
                              {"lines", p.lines.size()},
                              {"bad_line", v.bad_line},
                              {"message", v.message}}
                             .dump(2)
                      << "\n";
        } else if (v.ok) {
            std::cout << "proof ok (" << p.lines.size() << " lines)\n";
        } else {
            std::cout << "proof rejected at line " << v.bad_line << ": " << v.message
                      << "\n";
        }
        rc = v.ok ? 0 : 1;
    });

    auto* sound_cmd = app.add_subcommand(
        "soundness", "random axiom instances and rule applications must stay designated");
    sound_cmd->add_option("--trials", trials, "instances per schema and per rule");
    sound_cmd->add_option("--max-size", max_size, "largest random model");
    sound_cmd->add_option("--seed", seed);
    sound_cmd->add_flag("--json", as_json);
    sound_cmd->callback([&] {
        rc = finish_report(verify_soundness(trials, max_size, seed), as_json);
    });

    auto* uni_cmd = app.add_subcommand("universe", "twin-extension set store");
    uni_cmd->require_subcommand(1);

    auto* level_cmd = uni_cmd->add_subcommand("level", "list one level of the store");
    level_cmd->add_option("n", level, "level index (0 to 3)")->required();
    level_cmd->add_flag("--count", want_count, "print only the size");
    level_cmd->add_flag("--json", as_json);
    level_cmd->callback([&] {
        Universe u;
        const IdSet& ids = u.level(level);
        if (as_json) {
            json arr = json::array();
            if (!want_count)
                for (SetId x : ids) arr.push_back(u.literal(x));
            json j{{"level", level}, {"count", ids.size()}};
            if (!want_count) j["members"] = arr;
            std::cout << j.dump(2) << "\n";
        } else if (want_count) {
            std::cout << ids.size() << "\n";
        } else {
            for (SetId x : ids) std::cout << u.literal(x) << "\n";
        }
    });

    auto* inspect_cmd = uni_cmd->add_subcommand("inspect", "facts about one set literal");
    inspect_cmd->add_option("literal", literal, "set literal like <[],[]>")->required();
    inspect_cmd->add_flag("--json", as_json);
    inspect_cmd->callback([&] {
        Universe u;
        SetId x = u.parse_literal(literal);
        if (as_json)
            std::cout << inspect_json(u, x).dump(2) << "\n";
        else
            print_inspect(u, x);
    });

    auto* axiom_cmd = uni_cmd->add_subcommand("axiom", "run one axiom battery");
    std::string known_axioms;
    for (auto& n : axiom_names()) known_axioms += (known_axioms.empty() ? "" : " | ") + n;
    axiom_cmd->add_option("name", literal, known_axioms)->required();
    axiom_cmd->add_option("--level", level, "level the battery sweeps");
    axiom_cmd->add_option("--seed", seed);
    axiom_cmd->add_flag("--json", as_json);
    axiom_cmd->callback([&] {
        Universe u;
        rc = finish_report(verify_axiom(u, literal, level, seed), as_json);
    });

    auto* acla_cmd = uni_cmd->add_subcommand(
        "acla", "rebuild a set from two classical extension donors");
    acla_cmd->add_option("u", literal, "classical donor for the bang extension")
        ->required();
    std::string literal2;
    acla_cmd->add_option("v", literal2, "classical donor for the quest extension")
        ->required();
    acla_cmd->add_flag("--json", as_json);
    acla_cmd->callback([&] {
        Universe u;
        SetId a = u.parse_literal(literal);
        SetId b = u.parse_literal(literal2);
        SetId e = u.empty();
        SetId glut = u.intern({e}, {});
        SetId gap = u.intern({}, {e});
        SetId x = acla_construct(u, a, b, e, glut, e, gap);
        if (as_json)
            std::cout << json{{"literal", u.literal(x)},
                              {"bang_ext", u.literal(u.bang_ext(x))},
                              {"quest_ext", u.literal(u.quest_ext(x))}}
                             .dump(2)
                      << "\n";
        else
            std::cout << u.literal(x) << "\n";
    });

    auto* omega_cmd = uni_cmd->add_subcommand("omega", "the four truth-value sets");
    omega_cmd->add_flag("--json", as_json);
    omega_cmd->callback([&] {
        Universe u;
        json arr = json::array();
        for (TruthValue v : tv_all) {
            SetId x = omega_member(u, v);
            if (as_json)
                arr.push_back(json{{"name", v.name()}, {"literal", u.literal(x)}});
            else
                std::cout << v.name() << ": " << u.literal(x) << "\n";
        }
        if (as_json) std::cout << arr.dump(2) << "\n";
    });

    auto* embed_cmd = app.add_subcommand("embed", "maps between the set stores");
    embed_cmd->require_subcommand(1);

    auto* check_cmd = embed_cmd->add_subcommand(
        "check", "double a hereditarily finite set into the twin-extension store");
    check_cmd->add_option("literal", literal, "brace literal like {{},{{}}}")->required();
    check_cmd->add_flag("--json", as_json);
    check_cmd->callback([&] {
        HfUniverse hf;
        Universe u;
        SetId x = check_embed(hf, hf.parse_literal(literal), u);
        if (as_json)
            std::cout << json{{"input", literal}, {"image", u.literal(x)}}.dump(2) << "\n";
        else
            std::cout << u.literal(x) << "\n";
    });

    auto* hat_cmd = embed_cmd->add_subcommand(
        "hat", "code a set as the classical pair of its extension images");
    hat_cmd->add_option("literal", literal, "set literal like <[],[]>")->required();
    hat_cmd->add_flag("--json", as_json);
    hat_cmd->callback([&] {
        Universe u;
        SetId x = hat_embed(u, u.parse_literal(literal));
        if (as_json)
            std::cout << json{{"input", literal}, {"image", u.literal(x)}}.dump(2) << "\n";
        else
            std::cout << u.literal(x) << "\n";
    });

    auto* hcl_cmd = embed_cmd->add_subcommand(
        "hcl", "list the hereditarily classical members of a level");
    hcl_cmd->add_option("n", level, "level index (0 to 3)")->required();
    hcl_cmd->add_flag("--count", want_count, "print only the size");
    hcl_cmd->add_flag("--json", as_json);
    hcl_cmd->callback([&] {
        Universe u;
        IdSet ids = hcl_filter(u, u.level(level));
        if (as_json) {
            json arr = json::array();
            if (!want_count)
                for (SetId x : ids) arr.push_back(u.literal(x));
            json j{{"level", level}, {"count", ids.size()}};
            if (!want_count) j["members"] = arr;
            std::cout << j.dump(2) << "\n";
        } else if (want_count) {
            std::cout << ids.size() << "\n";
        } else {
            for (SetId x : ids) std::cout << u.literal(x) << "\n";
        }
    });

    auto* tarski_cmd = app.add_subcommand("tarski", "single-verdict model semantics");
    tarski_cmd->require_subcommand(1);

    auto* tval_cmd = tarski_cmd->add_subcommand("value", "evaluate in a four-valued model");
    tval_cmd->add_option("--model", model_path, "four-valued model JSON")->required();
    tval_cmd->add_option("formula", formula_text)->required();
    tval_cmd->add_option("--assign", assign_pairs, "variable binding var=element");
    tval_cmd->add_flag("--json", as_json);
    tval_cmd->callback([&] {
        FVTarskiModel m = fv_model_from_json(load_json_file(model_path));
        Signature sig = implied_signature(m);
        FormulaPtr f = parse_formula(formula_text, sig);
        TruthValue v = tarski_value(m, f, assignment_from(assign_pairs));
        if (as_json)
            std::cout << json{{"formula", render(f)}, {"value", v.name()}}.dump(2) << "\n";
        else
            std::cout << v.name() << "\n";
    });

    auto* totf_cmd = tarski_cmd->add_subcommand(
        "to-tf", "split a four-valued model into twin extensions");
    totf_cmd->add_option("model", model_path, "four-valued model JSON")->required();
    totf_cmd->callback([&] {
        std::cout << tf_model_to_json(to_tf(fv_model_from_json(load_json_file(model_path))))
                         .dump(2)
                  << "\n";
    });

    auto* fromtf_cmd = tarski_cmd->add_subcommand(
        "from-tf", "pack a twin-extension model into four-valued verdicts");
    fromtf_cmd->add_option("model", model_path, "twin-extension model JSON")->required();
    fromtf_cmd->callback([&] {
        std::cout << fv_model_to_json(from_tf(tf_model_from_json(load_json_file(model_path))))
                         .dump(2)
                  << "\n";
    });

    auto* classify_cmd = tarski_cmd->add_subcommand(
        "classify", "bounded validity over one model class");
    classify_cmd->add_option("formula", formula_text)->required();
    classify_cmd
        ->add_option("--class", cls_name, "full | consistent-only | complete-only | classical")
        ->capture_default_str();
    classify_cmd->add_option("--sig", sig_text, "signature, e.g. R:1,S:2,c");
    classify_cmd->add_option("--max-size", max_size, "largest domain size tried");
    classify_cmd->add_option("--budget", budget, "model/assignment case limit");
    classify_cmd->add_flag("--json", as_json);
    classify_cmd->callback([&] {
        ModelClass cls;
        if (!model_class_from_name(cls_name, cls))
            throw ValidationError("no model class named \"" + cls_name + "\"");
        Signature sig;
        FormulaPtr f = parse_with_sig(formula_text, sig_text, sig);
        TarskiSearchResult res = classify_validity(sig, f, cls, max_size, budget);
        if (as_json) {
            json j{{"class", model_class_name(cls)},
                   {"valid", res.valid},
                   {"models_checked", res.models_checked}};
            if (res.countermodel) j["countermodel"] = fv_model_to_json(*res.countermodel);
            std::cout << j.dump(2) << "\n";
        } else if (res.valid) {
            std::cout << "valid on " << model_class_name(cls) << " over "
                      << res.models_checked << " models\n";
        } else {
            std::cout << "refuted on " << model_class_name(cls) << " after "
                      << res.models_checked << " models\n"
                      << "countermodel: " << fv_model_to_json(*res.countermodel).dump()
                      << "\n";
        }
        rc = res.valid ? 0 : 1;
    });

    auto* round_cmd = tarski_cmd->add_subcommand(
        "roundtrip", "conversions invert and verdicts agree across both readings");
    int rt_max_size = 2;
    round_cmd->add_option("--max-size", rt_max_size, "largest domain swept")
        ->capture_default_str();
    round_cmd->add_option("--depth", depth, "formula battery depth");
    round_cmd->add_option("--samples", samples, "extra random formulas");
    round_cmd->add_option("--seed", seed);
    round_cmd->add_flag("--json", as_json);
    round_cmd->callback([&] {
        rc = finish_report(roundtrip_report(rt_max_size, depth, samples, seed), as_json);
    });

    auto* verify_cmd = app.add_subcommand("verify-all", "run every battery in the suite");
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--budget", budget, "model/assignment case limit");
    verify_cmd->add_option("--jobs", jobs, "parallel workers");
    verify_cmd->add_option("--only", only, "narrow to one battery (repeatable); see --list");
    bool want_list = false;
    verify_cmd->add_flag("--list", want_list, "print battery names and exit");
    verify_cmd->add_flag("--json", as_json);
    verify_cmd->callback([&] {
        if (want_list) {
            for (auto& name : battery_names()) std::cout << name << "\n";
            return;
        }
        AggregateResult agg = run_all_batteries(seed, budget, jobs, only);
        if (as_json) {
            std::cout << aggregate_to_json(agg, seed).dump(2) << "\n";
        } else {
            uint64_t cases = 0;
            size_t failed = 0;
            for (auto& r : agg.reports) {
                print_report(r);
                cases += r.cases;
                failed += r.ok() ? 0 : 1;
            }
            if (failed == 0)
                std::cout << "all " << agg.reports.size() << " batteries passed ("
                          << cases << " cases)\n";
            else
                std::cout << failed << " of " << agg.reports.size()
                          << " batteries failed\n";
        }
        rc = agg.ok() ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return rc;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
}
