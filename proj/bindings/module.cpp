#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tempra/causality.hpp"
#include "tempra/constraints.hpp"
#include "tempra/fixtures.hpp"
#include "tempra/model_io.hpp"
#include "tempra/modelgen.hpp"
#include "tempra/parser.hpp"
#include "tempra/principles.hpp"
#include "tempra/semantics.hpp"

namespace py = pybind11;
using namespace tempra;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Branching-time chance logic: exact models, formulas, audits "
              "and bounded search";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<EvalError>(m, "EvalError", PyExc_ValueError);
    // BuildError carries an audit report worth showing, so its translation
    // folds the report text into the message.
    static auto exc_build =
        py::register_exception<BuildError>(m, "BuildError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const BuildError& e) {
            std::string msg = e.what();
            if (!e.report.clean()) msg += "\n" + e.report.to_text();
#if PYBIND11_VERSION_HEX >= 0x020C0000
            py::set_error(exc_build, msg.c_str());
#else
            exc_build(msg.c_str());
#endif
        }
    });

    py::class_<Rational>(m, "Rational")
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"),
             py::arg("den") = 1)
        .def(py::init([](const std::string& text) {
                 return Rational::parse(text);
             }),
             py::arg("text"))
        .def_property_readonly("num", &Rational::num)
        .def_property_readonly("den", &Rational::den)
        .def("is_zero", &Rational::is_zero)
        .def("is_integer", &Rational::is_integer)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__hash__",
             [](const Rational& r) {
                 return py::hash(py::make_tuple(r.num(), r.den()));
             })
        .def("__float__", &Rational::to_double)
        .def("__str__", &Rational::str)
        .def("__repr__",
             [](const Rational& r) { return "Rational(\"" + r.str() + "\")"; });
    py::implicitly_convertible<py::int_, Rational>();

    py::enum_<Cmp>(m, "Cmp")
        .value("GE", Cmp::Ge)
        .value("LE", Cmp::Le)
        .value("EQ", Cmp::Eq)
        .value("GT", Cmp::Gt)
        .value("LT", Cmp::Lt);

    py::enum_<FormulaKind>(m, "FormulaKind")
        .value("TIME_EQ", FormulaKind::TimeEq)
        .value("TIME_LE", FormulaKind::TimeLe)
        .value("TIME_LT", FormulaKind::TimeLt)
        .value("HOLDS", FormulaKind::Holds)
        .value("OCC", FormulaKind::Occ)
        .value("NOT", FormulaKind::Not)
        .value("AND", FormulaKind::And)
        .value("OR", FormulaKind::Or)
        .value("INEV", FormulaKind::Inev)
        .value("PROB_CMP", FormulaKind::ProbCmp)
        .value("IMPLIES", FormulaKind::Implies)
        .value("POSS", FormulaKind::Poss)
        .value("COND_PROB_CMP", FormulaKind::CondProbCmp);

    py::class_<Monomial>(m, "Monomial")
        .def(py::init([](Rational coef, std::vector<Formula> factors) {
                 return Monomial{std::move(coef), std::move(factors)};
             }),
             py::arg("coef"), py::arg("factors") = std::vector<Formula>{})
        .def_readwrite("coef", &Monomial::coef)
        .def_readwrite("factors", &Monomial::factors)
        .def(py::self == py::self);

    py::class_<Formula>(m, "Formula")
        .def_property_readonly("kind", &Formula::kind)
        .def_property_readonly("time1", &Formula::time1)
        .def_property_readonly("time2", &Formula::time2)
        .def_property_readonly("symbol", &Formula::symbol)
        .def_property_readonly("arity", &Formula::arity)
        .def("child", &Formula::child, py::arg("i"))
        .def_property_readonly("poly", &Formula::poly)
        .def_property_readonly("cmp", &Formula::cmp)
        .def_property_readonly("bound", &Formula::bound)
        .def(py::self == py::self)
        .def("__str__", &print_formula)
        .def("__repr__",
             [](const Formula& f) {
                 return "parse_formula(\"" + print_formula(f) + "\")";
             })
        .def_static("time_eq", &Formula::time_eq)
        .def_static("time_le", &Formula::time_le)
        .def_static("time_lt", &Formula::time_lt)
        .def_static("holds", &Formula::holds)
        .def_static("occ", &Formula::occ)
        .def_static("negate", &Formula::negate)
        .def_static("conj", &Formula::conj)
        .def_static("disj", &Formula::disj)
        .def_static("implies", &Formula::implies)
        .def_static("inev", &Formula::inev)
        .def_static("poss", &Formula::poss)
        .def_static("prob_cmp", &Formula::prob_cmp)
        .def_static("cond_prob_cmp", &Formula::cond_prob_cmp);

    m.def("parse_formula",
          [](const std::string& text) { return parse_formula(text); },
          py::arg("text"));
    m.def("print_formula", &print_formula);
    m.def("desugar", &desugar);
    m.def("is_core", &is_core);
    m.def("time_symbols", &time_symbols);
    m.def("time_symbols_ordered", &time_symbols_ordered);
    m.def("atom_symbols", [](const Formula& f) {
        std::set<std::string> facts, events;
        atom_symbols(f, facts, events);
        return py::make_tuple(facts, events);
    });

    py::class_<Extent>(m, "Extent")
        .def_readonly("lo", &Extent::lo)
        .def_readonly("hi", &Extent::hi)
        .def_readonly("world", &Extent::world)
        .def("__repr__", [](const Extent& e) {
            return "Extent(" + e.lo.str() + ", " + e.hi.str() + ", world=" +
                   std::to_string(e.world) + ")";
        });

    py::class_<Violation>(m, "Violation")
        .def_readonly("constraint", &Violation::constraint)
        .def_readonly("message", &Violation::message)
        .def_readonly("witness", &Violation::witness)
        .def("__repr__", [](const Violation& v) {
            return "Violation(C" + std::to_string(v.constraint) + ": " +
                   v.message + ")";
        });

    py::class_<ViolationReport>(m, "ViolationReport")
        .def_readonly("entries", &ViolationReport::entries)
        .def("clean", &ViolationReport::clean)
        .def("__len__",
             [](const ViolationReport& r) { return r.entries.size(); })
        .def("__str__", &ViolationReport::to_text);

    py::class_<Model>(m, "Model")
        .def_readonly("worlds", &Model::worlds)
        .def_readonly("grid", &Model::grid)
        .def_readonly("time_syms", &Model::time_syms)
        .def_property_readonly("facts",
                               [](const Model& mm) {
                                   std::map<std::string, std::vector<Extent>> out;
                                   for (const auto& [k, v] : mm.facts) {
                                       out.emplace(k, std::vector<Extent>(
                                                          v.begin(), v.end()));
                                   }
                                   return out;
                               })
        .def_property_readonly("events",
                               [](const Model& mm) {
                                   std::map<std::string, std::vector<Extent>> out;
                                   for (const auto& [k, v] : mm.events) {
                                       out.emplace(k, std::vector<Extent>(
                                                          v.begin(), v.end()));
                                   }
                                   return out;
                               })
        .def("world_index", &Model::world_index)
        .def("has_time", &Model::has_time)
        .def("denote", &Model::denote)
        .def("__repr__", [](const Model& mm) {
            return "<Model: " + std::to_string(mm.worlds.size()) + " worlds, " +
                   std::to_string(mm.grid.size()) + " times>";
        });

    m.def("parse_model", &parse_model, py::arg("text"));
    m.def("model_to_json", &model_to_json, py::arg("model"),
          py::arg("indent") = 2);
    m.def("accessible", &accessible, py::arg("model"), py::arg("time"),
          py::arg("world"));
    m.def("check_constraints",
          [](const Model& mm, bool strict) {
              return check_constraints(mm, strict
                                               ? SubintervalRule::AllSubintervals
                                               : SubintervalRule::Literal);
          },
          py::arg("model"), py::arg("strict") = false);

    m.def("eval_formula",
          py::overload_cast<const Model&, const std::string&, const Formula&>(
              &eval_formula),
          py::arg("model"), py::arg("world"), py::arg("formula"));
    m.def("probability",
          py::overload_cast<const Model&, const Rational&, const std::string&,
                            const Formula&>(&probability),
          py::arg("model"), py::arg("time"), py::arg("world"),
          py::arg("formula"));
    m.def("valid_in_model", &valid_in_model, py::arg("model"),
          py::arg("formula"));
    m.def("entails_in_model", &entails_in_model, py::arg("model"),
          py::arg("premise"), py::arg("conclusion"));

    py::enum_<Schema>(m, "Schema")
        .value("PAST_DETERMINED", Schema::PastDetermined)
        .value("INEVITABLE_CERTAIN", Schema::InevitableCertain)
        .value("INEVITABILITY_PERSISTS", Schema::InevitabilityPersists)
        .value("DETACHMENT", Schema::Detachment)
        .value("MILLER", Schema::Miller);

    py::class_<SchemaInstance>(m, "SchemaInstance")
        .def_readonly("schema", &SchemaInstance::schema)
        .def_readonly("t1", &SchemaInstance::t1)
        .def_readonly("t2", &SchemaInstance::t2)
        .def_readonly("phi", &SchemaInstance::phi)
        .def_readonly("psi", &SchemaInstance::psi)
        .def_readonly("alpha", &SchemaInstance::alpha)
        .def_static("past_determined", &SchemaInstance::past_determined,
                    py::arg("atom"), py::arg("t2"))
        .def_static("inevitable_certain", &SchemaInstance::inevitable_certain,
                    py::arg("t"), py::arg("phi"))
        .def_static("inevitability_persists",
                    &SchemaInstance::inevitability_persists, py::arg("t1"),
                    py::arg("t2"), py::arg("phi"))
        .def_static("detachment", &SchemaInstance::detachment, py::arg("t"),
                    py::arg("phi"), py::arg("psi"))
        .def_static("miller", &SchemaInstance::miller, py::arg("t1"),
                    py::arg("t2"), py::arg("phi"), py::arg("alpha"))
        .def("instantiate", &SchemaInstance::instantiate);

    m.def("schema_name", &schema_name);
    m.def("schema_from_name", &schema_from_name);
    m.def("all_schemas", &all_schemas);
    m.def("check_schema", &check_schema, py::arg("model"), py::arg("instance"));
    m.def("sample_instances", &sample_instances, py::arg("model"),
          py::arg("schema"), py::arg("seed"), py::arg("formulas") = 3);
    m.def("expected_future_probability",
          py::overload_cast<const Model&, const Rational&, const Rational&,
                            const std::string&, const Formula&>(
              &expected_future_probability),
          py::arg("model"), py::arg("time"), py::arg("future"),
          py::arg("world"), py::arg("formula"));
    m.def("alpha_grid", &alpha_grid);

    py::class_<EventOccurrence>(m, "EventOccurrence")
        .def(py::init([](std::string event, Rational lo, Rational hi) {
                 return EventOccurrence{std::move(event), std::move(lo),
                                        std::move(hi)};
             }),
             py::arg("event"), py::arg("lo"), py::arg("hi"))
        .def_readwrite("event", &EventOccurrence::event)
        .def_readwrite("lo", &EventOccurrence::lo)
        .def_readwrite("hi", &EventOccurrence::hi);

    py::class_<CausalReport>(m, "CausalReport")
        .def_readonly("cond1", &CausalReport::cond1)
        .def_readonly("cond2", &CausalReport::cond2)
        .def_readonly("cond3", &CausalReport::cond3)
        .def_readonly("prima_facie", &CausalReport::prima_facie)
        .def_readonly("actual", &CausalReport::actual)
        .def_readonly("p_cause", &CausalReport::p_cause)
        .def_readonly("p_effect", &CausalReport::p_effect)
        .def_readonly("p_joint", &CausalReport::p_joint);

    m.def("analyze_cause",
          py::overload_cast<const Model&, const std::string&,
                            const EventOccurrence&, const EventOccurrence&>(
              &analyze_cause),
          py::arg("model"), py::arg("world"), py::arg("cause"),
          py::arg("effect"));

    py::class_<GenParams>(m, "GenParams")
        .def(py::init<>())
        .def_readwrite("max_worlds", &GenParams::max_worlds)
        .def_readwrite("max_times", &GenParams::max_times)
        .def_readwrite("max_facts", &GenParams::max_facts)
        .def_readwrite("max_events", &GenParams::max_events)
        .def_readwrite("seed", &GenParams::seed)
        .def_readwrite("mass_granularity", &GenParams::mass_granularity)
        .def_readwrite("fact_names", &GenParams::fact_names)
        .def_readwrite("event_names", &GenParams::event_names)
        .def_readwrite("time_names", &GenParams::time_names);

    py::class_<SatParams>(m, "SatParams")
        .def(py::init<>())
        .def_readwrite("gen", &SatParams::gen)
        .def_readwrite("budget", &SatParams::budget);

    py::class_<SatResult>(m, "SatResult")
        .def_readonly("found", &SatResult::found)
        .def_readonly("model", &SatResult::model)
        .def_readonly("world", &SatResult::world)
        .def_readonly("tried", &SatResult::tried);

    m.def("generate_model", &generate_model, py::arg("params"));
    m.def("sample_formula", &sample_formula, py::arg("model"), py::arg("seed"),
          py::arg("depth"));
    m.def("bounded_sat", &bounded_sat, py::arg("formula"),
          py::arg("params") = SatParams{});

    py::class_<Fixture>(m, "Fixture")
        .def_readonly("name", &Fixture::name)
        .def_readonly("title", &Fixture::title)
        .def_readonly("story", &Fixture::story)
        .def_readonly("premises", &Fixture::premises)
        .def_readonly("model_json", &Fixture::model_json);

    m.def("fixtures", &fixtures);
    m.def("fixture", &fixture, py::arg("name"));
    m.def("run_fixture_checks", [](const Fixture& fx, const Model& mm) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const FixtureCheckResult& r : tempra::run_fixture_checks(fx, mm)) {
            out.emplace_back(r.check->label, r.ok, r.computed);
        }
        return out;
    });
}
