#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nclogic/error.hpp"
#include "nclogic/hilbert.hpp"
#include "nclogic/interpret.hpp"
#include "nclogic/json_io.hpp"
#include "nclogic/parser.hpp"
#include "nclogic/search.hpp"
#include "nclogic/tarski.hpp"
#include "nclogic/tf_model.hpp"
#include "nclogic/universe.hpp"
#include "nclogic/verify.hpp"

namespace py = pybind11;
using namespace nclogic;

namespace {

Signature sig_from_str(const std::string& sig_json) {
    return signature_from_json(json::parse(sig_json));
}

py::dict dict_from_report(const BatteryReport& r) {
    py::dict d;
    d["check"] = r.check;
    d["ok"] = r.ok();
    d["cases"] = r.cases;
    d["failure_count"] = r.failure_count;
    d["failures"] = r.failures;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "four-valued logic kernel";

    m.def("parse", [](const std::string& text, const std::string& sig_json) {
        return render(parse_formula(text, sig_from_str(sig_json)));
    }, py::arg("text"), py::arg("signature"), "parse a formula, return its canonical rendering");

    m.def("desugar", [](const std::string& text, const std::string& sig_json) {
        return render(desugar(parse_formula(text, sig_from_str(sig_json))));
    }, py::arg("text"), py::arg("signature"));

    m.def("free_vars", [](const std::string& text, const std::string& sig_json) {
        auto fv = free_vars(parse_formula(text, sig_from_str(sig_json)));
        return std::vector<std::string>(fv.begin(), fv.end());
    }, py::arg("text"), py::arg("signature"));

    m.def("truth_table", [](const std::string& connective) {
        std::vector<std::string> out;
        for (auto v : truth_table(connective)) out.emplace_back(v.name());
        return out;
    }, py::arg("connective"), "table entries in row-major 1,b,n,0 order");

    m.def("eval", [](const std::string& model_json, const std::string& text,
                     const std::map<std::string, std::string>& assignment) {
        TFModel model = tf_model_from_json(json::parse(model_json));
        Signature sig = implied_signature(model);
        auto f = parse_formula(text, sig);
        return std::string(eval(model, f, assignment).name());
    }, py::arg("model"), py::arg("text"), py::arg("assignment") = std::map<std::string, std::string>{});

    m.def("validity_bounded", [](const std::string& sig_json, const std::string& text,
                                 int max_size, uint64_t budget) {
        Signature sig = sig_from_str(sig_json);
        auto f = parse_formula(text, sig);
        auto r = validity_bounded(sig, f, max_size, budget);
        py::dict d;
        d["valid"] = r.valid;
        d["models_checked"] = r.models_checked;
        if (r.countermodel) d["countermodel"] = tf_model_to_json(*r.countermodel).dump();
        return d;
    }, py::arg("signature"), py::arg("text"), py::arg("max_size") = 3,
       py::arg("budget") = default_budget);

    m.def("check_proof", [](const std::string& proof_json) {
        ProofVerdict v = check_proof(proof_from_json(json::parse(proof_json)));
        py::dict d;
        d["ok"] = v.ok;
        d["bad_line"] = v.bad_line;
        d["message"] = v.message;
        return d;
    }, py::arg("proof"), "verify a proof given as a JSON string");

    m.def("level_count", [](int n) {
        Universe u;
        return u.level(n).size();
    }, py::arg("n"), "how many sets the store level holds");

    m.def("level_literals", [](int n) {
        Universe u;
        std::vector<std::string> out;
        for (SetId x : u.level(n)) out.push_back(u.literal(x));
        return out;
    }, py::arg("n"));

    m.def("omega_names", [] {
        Universe u;
        std::vector<std::pair<std::string, std::string>> out;
        for (TruthValue v : tv_all)
            out.emplace_back(v.name(), u.literal(omega_member(u, v)));
        return out;
    }, "the four truth-value sets as (name, literal) pairs");

    m.def("verify_axiom", [](const std::string& name, int level, uint64_t seed) {
        Universe u;
        return dict_from_report(verify_axiom(u, name, level, seed));
    }, py::arg("name"), py::arg("level") = 3, py::arg("seed") = 0);

    m.def("axiom_names", [] { return axiom_names(); });

    m.def("tarski_value", [](const std::string& model_json, const std::string& text,
                             const std::map<std::string, std::string>& assignment) {
        FVTarskiModel m2 = fv_model_from_json(json::parse(model_json));
        Signature sig = implied_signature(m2);
        auto f = parse_formula(text, sig);
        return std::string(tarski_value(m2, f, assignment).name());
    }, py::arg("model"), py::arg("text"),
       py::arg("assignment") = std::map<std::string, std::string>{});

    m.def("to_tf", [](const std::string& model_json) {
        return tf_model_to_json(to_tf(fv_model_from_json(json::parse(model_json)))).dump();
    }, py::arg("model"), "split a four-valued model into twin extensions");

    m.def("from_tf", [](const std::string& model_json) {
        return fv_model_to_json(from_tf(tf_model_from_json(json::parse(model_json)))).dump();
    }, py::arg("model"), "pack twin extensions into four-valued verdicts");

    m.def("classify_validity", [](const std::string& sig_json, const std::string& text,
                                  const std::string& cls_name, int max_size,
                                  uint64_t budget) {
        ModelClass cls;
        if (!model_class_from_name(cls_name, cls))
            throw ValidationError("no model class named \"" + cls_name + "\"");
        Signature sig = sig_from_str(sig_json);
        auto f = parse_formula(text, sig);
        auto r = classify_validity(sig, f, cls, max_size, budget);
        py::dict d;
        d["valid"] = r.valid;
        d["models_checked"] = r.models_checked;
        if (r.countermodel) d["countermodel"] = fv_model_to_json(*r.countermodel).dump();
        return d;
    }, py::arg("signature"), py::arg("text"), py::arg("model_class") = "full",
       py::arg("max_size") = 3, py::arg("budget") = default_budget);

    m.def("battery_names", [] { return battery_names(); });

    m.def("run_all_batteries", [](uint64_t seed, uint64_t budget, int jobs,
                                  const std::vector<std::string>& only) {
        AggregateResult agg;
        {
            py::gil_scoped_release release;
            agg = run_all_batteries(seed, budget, jobs, only);
        }
        return aggregate_to_json(agg, seed).dump();
    }, py::arg("seed") = 0, py::arg("budget") = default_budget, py::arg("jobs") = 1,
       py::arg("only") = std::vector<std::string>{},
       "the full battery sweep as a JSON report string");

    py::register_exception<ParseError>(m, "FormulaParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
}
