// tempra: command-line front end for the branching-time chance models.
//
// Exit codes across all subcommands:
//   0  the answer is yes (true / clean / holds / found / all checks pass)
//   1  the answer is no  (false / violations / counterexample / exhausted)
//   2  the request itself is bad (usage, parse errors, unknown names)

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tempra/causality.hpp"
#include "tempra/constraints.hpp"
#include "tempra/fixtures.hpp"
#include "tempra/model_io.hpp"
#include "tempra/modelgen.hpp"
#include "tempra/parser.hpp"
#include "tempra/principles.hpp"
#include "tempra/semantics.hpp"

using json = nlohmann::ordered_json;
using namespace tempra;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Decimal rendering of an exact rational: full expansion when it terminates
// within 12 fractional digits, truncated with a marker otherwise.
std::string decimal(const Rational& r) {
    std::int64_t num = r.num() < 0 ? -r.num() : r.num();
    std::int64_t den = r.den();
    std::string out = r.num() < 0 ? "-" : "";
    out += std::to_string(num / den);
    std::int64_t rem = num % den;
    if (rem == 0) return out;
    out += '.';
    for (int i = 0; i < 12 && rem != 0; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + rem / den);
        rem %= den;
    }
    if (rem != 0) out += "...";
    return out;
}

std::string exact_and_decimal(const Rational& r) {
    if (r.is_integer()) return r.str();
    return r.str() + " = " + decimal(r);
}

// A time argument is a symbol of the model or a rational literal.
Rational resolve_time(const Model& m, const std::string& text) {
    if (m.time_syms.count(text)) return m.denote(text);
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError("\"" + text +
                         "\" is neither a time symbol of the model nor a "
                         "rational literal");
    }
}

Model load_model(const std::string& path) {
    return parse_model(read_file(path));
}

json violation_json(const Violation& v) {
    json witness = json::object();
    for (const auto& [key, value] : v.witness) witness[key] = value;
    return {{"constraint", "C" + std::to_string(v.constraint)},
            {"message", v.message},
            {"witness", witness}};
}

json report_json(const ViolationReport& rep) {
    json entries = json::array();
    for (const Violation& v : rep.entries) entries.push_back(violation_json(v));
    return {{"clean", rep.clean()}, {"violations", entries}};
}

// "name@t1,t2" with each endpoint a time symbol or rational literal.
EventOccurrence parse_occurrence(const Model& m, const std::string& text) {
    auto at = text.find('@');
    auto comma = text.find(',', at == std::string::npos ? 0 : at);
    if (at == std::string::npos || comma == std::string::npos) {
        throw UsageError("expected \"event@t1,t2\", got \"" + text + "\"");
    }
    return {text.substr(0, at),
            resolve_time(m, text.substr(at + 1, comma - at - 1)),
            resolve_time(m, text.substr(comma + 1))};
}

int run_check(const std::string& path, bool strict, bool as_json) {
    ViolationReport rep;
    try {
        Model m = load_model(path);
        rep = check_constraints(m, strict ? SubintervalRule::AllSubintervals
                                          : SubintervalRule::Literal);
    } catch (const BuildError& e) {
        if (e.report.clean()) throw;  // reference error, not a violation
        rep = e.report;
    }
    if (as_json) {
        std::cout << report_json(rep).dump(2) << "\n";
    } else if (rep.clean()) {
        std::cout << "ok: all six constraints hold\n";
    } else {
        std::cout << rep.to_text();
    }
    return rep.clean() ? 0 : 1;
}

int run_eval(const std::string& path, const std::string& world,
             const std::string& formula, bool as_json) {
    Model m = load_model(path);
    Formula f = parse_formula(formula);
    bool value = eval_formula(m, world, f);
    if (as_json) {
        std::cout << json{{"world", world},
                          {"formula", print_formula(f)},
                          {"value", value}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << (value ? "true" : "false") << "\n";
    }
    return value ? 0 : 1;
}

int run_prob(const std::string& path, const std::string& time,
             const std::string& world, const std::string& formula,
             bool as_json) {
    Model m = load_model(path);
    Formula f = parse_formula(formula);
    Rational t = resolve_time(m, time);
    Rational p = probability(m, t, world, f);
    if (as_json) {
        std::cout << json{{"time", t.str()},
                          {"world", world},
                          {"formula", print_formula(f)},
                          {"probability", p.str()},
                          {"decimal", p.to_double()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "P[" << t.str() << "](" << print_formula(f) << ") at "
                  << world << " = " << exact_and_decimal(p) << "\n";
    }
    return 0;
}

int run_expect(const std::string& path, const std::string& time,
               const std::string& future, const std::string& world,
               const std::string& formula, bool as_json) {
    Model m = load_model(path);
    Formula f = parse_formula(formula);
    Rational t = resolve_time(m, time);
    Rational t2 = resolve_time(m, future);
    Rational e = expected_future_probability(m, t, t2, world, f);
    if (as_json) {
        std::cout << json{{"time", t.str()},
                          {"future", t2.str()},
                          {"world", world},
                          {"formula", print_formula(f)},
                          {"expectation", e.str()},
                          {"decimal", e.to_double()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "E at " << t.str() << " of P[" << t2.str() << "]("
                  << print_formula(f) << ") at " << world << " = "
                  << exact_and_decimal(e) << "\n";
    }
    return 0;
}

struct SchemaArgs {
    std::string name;
    std::string model_path;
    bool random = false;
    int trials = 100;
    std::uint64_t seed = 0;
    // Optional pinned instance; when phi is given the sweep is skipped.
    std::string phi, psi, t1, t2;
    std::string alpha = "0";
};

SchemaInstance pin_instance(Schema s, const SchemaArgs& a) {
    Formula phi = parse_formula(a.phi);
    switch (s) {
        case Schema::PastDetermined:
            if (a.t2.empty()) throw UsageError("past-determined needs --t2");
            return SchemaInstance::past_determined(phi, a.t2);
        case Schema::InevitableCertain:
            if (a.t1.empty()) throw UsageError("inevitable-certain needs --t1");
            return SchemaInstance::inevitable_certain(a.t1, phi);
        case Schema::InevitabilityPersists:
            if (a.t1.empty() || a.t2.empty()) {
                throw UsageError("inevitability-persists needs --t1 and --t2");
            }
            return SchemaInstance::inevitability_persists(a.t1, a.t2, phi);
        case Schema::Detachment:
            if (a.t1.empty() || a.psi.empty()) {
                throw UsageError("detachment needs --t1 and --psi");
            }
            return SchemaInstance::detachment(a.t1, phi, parse_formula(a.psi));
        case Schema::Miller:
            if (a.t1.empty() || a.t2.empty()) {
                throw UsageError("miller needs --t1 and --t2");
            }
            return SchemaInstance::miller(a.t1, a.t2, phi,
                                          Rational::parse(a.alpha));
    }
    throw std::logic_error("unreachable schema kind");
}

int run_schema(const SchemaArgs& a, bool as_json) {
    Schema s = schema_from_name(a.name);
    if (a.model_path.empty() == !a.random) {
        throw UsageError("pick one of --model FILE or --random");
    }

    long long instances = 0;
    int models = 0;
    std::optional<json> counterexample;

    auto sweep = [&](const Model& m, const std::string& source) {
        ++models;
        std::vector<SchemaInstance> insts;
        if (!a.phi.empty()) {
            insts.push_back(pin_instance(s, a));
        } else {
            insts = sample_instances(m, s, a.seed);
        }
        for (const SchemaInstance& inst : insts) {
            ++instances;
            if (auto world = check_schema(m, inst)) {
                counterexample = json{{"source", source},
                                      {"world", *world},
                                      {"sentence",
                                       print_formula(inst.instantiate())}};
                return false;
            }
        }
        return true;
    };

    if (!a.model_path.empty()) {
        sweep(load_model(a.model_path), a.model_path);
    } else {
        for (int k = 0; k < a.trials; ++k) {
            GenParams gp;
            gp.seed = a.seed + static_cast<std::uint64_t>(k);
            if (!sweep(generate_model(gp), "seed " + std::to_string(gp.seed))) {
                break;
            }
        }
    }

    if (as_json) {
        json out{{"schema", a.name},
                 {"models", models},
                 {"instances", instances},
                 {"counterexample",
                  counterexample ? *counterexample : json(nullptr)}};
        std::cout << out.dump(2) << "\n";
    } else if (counterexample) {
        std::cout << "counterexample (" << (*counterexample)["source"]
                         .get<std::string>()
                  << ", world " << (*counterexample)["world"].get<std::string>()
                  << "):\n  " << (*counterexample)["sentence"].get<std::string>()
                  << "\n";
    } else {
        std::cout << a.name << " holds on " << instances << " instances over "
                  << models << (models == 1 ? " model\n" : " models\n");
    }
    return counterexample ? 1 : 0;
}

int run_cause(const std::string& path, const std::string& world,
              const std::string& cause_text, const std::string& effect_text,
              bool as_json) {
    Model m = load_model(path);
    EventOccurrence cause = parse_occurrence(m, cause_text);
    EventOccurrence effect = parse_occurrence(m, effect_text);
    CausalReport r = analyze_cause(m, world, cause, effect);
    if (as_json) {
        std::cout << json{{"cond1_not_later", r.cond1},
                          {"cond2_positive_cause", r.cond2},
                          {"cond3_raises_probability", r.cond3},
                          {"prima_facie", r.prima_facie},
                          {"actual", r.actual},
                          {"p_cause", r.p_cause.str()},
                          {"p_effect", r.p_effect.str()},
                          {"p_joint", r.p_joint.str()}}
                         .dump(2)
                  << "\n";
    } else {
        auto mark = [](bool b) { return b ? "yes" : "no "; };
        std::cout
            << "judged at the start of the cause interval, from " << world
            << ":\n"
            << "  1. cause not after effect's end    " << mark(r.cond1) << "\n"
            << "  2. cause has positive chance       " << mark(r.cond2)
            << "   P(cause) = " << exact_and_decimal(r.p_cause) << "\n"
            << "  3. cause raises effect's chance    " << mark(r.cond3)
            << "   P(joint) = " << exact_and_decimal(r.p_joint)
            << " vs P(effect)*P(cause) = "
            << exact_and_decimal(r.p_effect * r.p_cause) << "\n"
            << "  prima facie cause: " << (r.prima_facie ? "yes" : "no")
            << ";  actual cause: " << (r.actual ? "yes" : "no") << "\n";
    }
    return r.prima_facie ? 0 : 1;
}

struct SatArgs {
    std::string formula;
    std::string out_path;
    SatParams params;
};

int run_sat(const SatArgs& a, bool as_json) {
    Formula f = parse_formula(a.formula);
    SatResult r = bounded_sat(f, a.params);
    if (as_json) {
        json out{{"found", r.found}, {"tried", r.tried}};
        if (r.found) {
            out["world"] = r.world;
            out["model"] = json::parse(model_to_json(*r.model));
        }
        std::cout << out.dump(2) << "\n";
    } else if (r.found) {
        std::string text = model_to_json(*r.model);
        std::cout << "found a model satisfying the formula at world " << r.world
                  << " (" << r.tried << " candidates)\n";
        if (a.out_path.empty()) {
            std::cout << text << "\n";
        } else {
            std::ofstream(a.out_path) << text << "\n";
            std::cout << "model written to " << a.out_path << "\n";
        }
    } else {
        std::cout << "no model found within " << r.tried << " candidates\n";
    }
    if (r.found && as_json && !a.out_path.empty()) {
        std::ofstream(a.out_path) << model_to_json(*r.model) << "\n";
    }
    return r.found ? 0 : 1;
}

const char* check_kind(FixtureCheck::Kind k) {
    switch (k) {
        case FixtureCheck::Kind::Probability: return "probability";
        case FixtureCheck::Kind::CondProbability: return "conditional";
        case FixtureCheck::Kind::Truth: return "truth";
        case FixtureCheck::Kind::Valid: return "valid";
        case FixtureCheck::Kind::Expected: return "expectation";
    }
    return "?";
}

int run_example(const std::string& name, bool dump_model, bool as_json) {
    const Fixture* fx = nullptr;
    try {
        fx = &fixture(name);
    } catch (const std::out_of_range&) {
        std::string names;
        for (const Fixture& f : fixtures()) names += " " + f.name;
        throw UsageError("unknown example \"" + name + "\"; have:" + names);
    }
    Model m = parse_model(fx->model_json);
    auto results = run_fixture_checks(*fx, m);
    bool all_ok = true;
    for (const auto& r : results) all_ok = all_ok && r.ok;

    if (as_json) {
        json checks = json::array();
        for (const auto& r : results) {
            checks.push_back({{"label", r.check->label},
                              {"kind", check_kind(r.check->kind)},
                              {"computed", r.computed},
                              {"ok", r.ok}});
        }
        json out{{"name", fx->name},       {"title", fx->title},
                 {"story", fx->story},     {"premises", fx->premises},
                 {"checks", checks},       {"all_ok", all_ok}};
        if (dump_model) out["model"] = json::parse(model_to_json(m));
        std::cout << out.dump(2) << "\n";
        return all_ok ? 0 : 1;
    }

    if (dump_model) {
        // Bare model JSON so the output pipes straight into the other
        // subcommands.
        std::cout << model_to_json(m) << "\n";
        return all_ok ? 0 : 1;
    }

    std::cout << fx->name << ": " << fx->title << "\n\n"
              << fx->story << "\n\npremises:\n";
    for (const std::string& p : fx->premises) std::cout << "  " << p << "\n";
    std::cout << "\nverified conclusions (recomputed from the model):\n";
    for (const auto& r : results) {
        std::cout << "  " << (r.ok ? "ok  " : "FAIL") << " " << r.check->label
                  << "  [" << r.computed << "]\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"branching-time chance models: audit, evaluate, explore"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output on every subcommand");

    std::function<int()> action;

    {
        auto* c = app.add_subcommand("check", "audit a model file against the "
                                              "six constraints");
        auto path = std::make_shared<std::string>();
        auto strict = std::make_shared<bool>(false);
        c->add_option("model", *path, "model file (JSON)")->required();
        c->add_flag("--strict-c3", *strict,
                    "demand every grid subinterval of a fact, point "
                    "intervals included");
        c->callback([&, path, strict] {
            action = [&, path, strict] {
                return run_check(*path, *strict, as_json);
            };
        });
    }
    {
        auto* c = app.add_subcommand("eval", "truth of a formula at a world");
        auto path = std::make_shared<std::string>();
        auto world = std::make_shared<std::string>();
        auto formula = std::make_shared<std::string>();
        c->add_option("model", *path, "model file (JSON)")->required();
        c->add_option("--world,-w", *world, "world name")->required();
        c->add_option("--formula,-f", *formula, "formula text")->required();
        c->callback([&, path, world, formula] {
            action = [&, path, world, formula] {
                return run_eval(*path, *world, *formula, as_json);
            };
        });
    }
    {
        auto* c = app.add_subcommand("prob", "exact chance of a formula from "
                                             "a world at a time");
        auto path = std::make_shared<std::string>();
        auto time = std::make_shared<std::string>();
        auto world = std::make_shared<std::string>();
        auto formula = std::make_shared<std::string>();
        c->add_option("model", *path, "model file (JSON)")->required();
        c->add_option("--time,-t", *time, "time symbol or rational")->required();
        c->add_option("--world,-w", *world, "world name")->required();
        c->add_option("--formula,-f", *formula, "formula text")->required();
        c->callback([&, path, time, world, formula] {
            action = [&, path, time, world, formula] {
                return run_prob(*path, *time, *world, *formula, as_json);
            };
        });
    }
    {
        auto* c = app.add_subcommand(
            "expect", "expectation at one time of a later chance");
        auto path = std::make_shared<std::string>();
        auto time = std::make_shared<std::string>();
        auto future = std::make_shared<std::string>();
        auto world = std::make_shared<std::string>();
        auto formula = std::make_shared<std::string>();
        c->add_option("model", *path, "model file (JSON)")->required();
        c->add_option("--time,-t", *time, "standpoint time")->required();
        c->add_option("--future", *future, "later time")->required();
        c->add_option("--world,-w", *world, "world name")->required();
        c->add_option("--formula,-f", *formula, "formula text")->required();
        c->callback([&, path, time, future, world, formula] {
            action = [&, path, time, future, world, formula] {
                return run_expect(*path, *time, *future, *world, *formula,
                                  as_json);
            };
        });
    }
    {
        auto* c = app.add_subcommand(
            "schema", "check a named sentence family for counterexamples");
        auto a = std::make_shared<SchemaArgs>();
        c->add_option("name", a->name,
                      "past-determined | inevitable-certain | "
                      "inevitability-persists | detachment | miller")
            ->required();
        c->add_option("--model", a->model_path, "check on this model file");
        c->add_flag("--random", a->random, "check on generated models");
        c->add_option("--trials", a->trials, "how many generated models");
        c->add_option("--seed", a->seed, "first generator seed");
        c->add_option("--phi", a->phi, "pin the instance formula");
        c->add_option("--psi", a->psi, "entailed side (detachment)");
        c->add_option("--t1", a->t1, "first time symbol");
        c->add_option("--t2", a->t2, "second time symbol");
        c->add_option("--alpha", a->alpha, "threshold in [0,1] (miller)");
        c->callback([&, a] {
            action = [&, a] { return run_schema(*a, as_json); };
        });
    }
    {
        auto* c = app.add_subcommand(
            "cause", "prima facie cause analysis between two event tokens");
        auto path = std::make_shared<std::string>();
        auto world = std::make_shared<std::string>();
        auto cause = std::make_shared<std::string>();
        auto effect = std::make_shared<std::string>();
        c->add_option("model", *path, "model file (JSON)")->required();
        c->add_option("--world,-w", *world, "world name")->required();
        c->add_option("--cause", *cause, "event@t1,t2")->required();
        c->add_option("--effect", *effect, "event@t1,t2")->required();
        c->callback([&, path, world, cause, effect] {
            action = [&, path, world, cause, effect] {
                return run_cause(*path, *world, *cause, *effect, as_json);
            };
        });
    }
    {
        auto* c = app.add_subcommand(
            "sat", "search for a small model satisfying a formula");
        auto a = std::make_shared<SatArgs>();
        c->add_option("--formula,-f", a->formula, "formula text")->required();
        c->add_option("--seed", a->params.gen.seed, "search seed");
        c->add_option("--budget", a->params.budget,
                      "candidate models to examine");
        c->add_option("--max-worlds", a->params.gen.max_worlds, "world cap");
        c->add_option("--max-times", a->params.gen.max_times, "grid size cap");
        c->add_option("--max-facts", a->params.gen.max_facts, "fact symbols");
        c->add_option("--max-events", a->params.gen.max_events,
                      "event symbols");
        c->add_option("--granularity", a->params.gen.mass_granularity,
                      "mass denominator floor");
        c->add_option("--out,-o", a->out_path, "write the found model here");
        c->callback([&, a] {
            action = [&, a] { return run_sat(*a, as_json); };
        });
    }
    {
        auto* c = app.add_subcommand(
            "example", "one of the built-in worked examples");
        auto name = std::make_shared<std::string>();
        auto dump = std::make_shared<bool>(false);
        c->add_option("name", *name, "coin | car | carry")->required();
        c->add_flag("--dump-model", *dump, "print the model file instead of "
                                           "the narrative");
        c->callback([&, name, dump] {
            action = [&, name, dump] {
                return run_example(*name, *dump, as_json);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";  // carries "parse error at line:col"
        return 2;
    } catch (const BuildError& e) {
        std::cerr << "model error: " << e.what() << "\n";
        if (!e.report.clean()) std::cerr << e.report.to_text();
        return 2;
    } catch (const EvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
