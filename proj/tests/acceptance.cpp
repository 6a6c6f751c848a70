// End-to-end acceptance checklist. Usage: acceptance <path-to-cli>
//
// Prints one PASS/FAIL line per criterion and exits with the number of
// failures. All arithmetic is exact; every comparison below is rational
// equality, never a tolerance.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "support/mutations.hpp"
#include "support/naive_eval.hpp"
#include "tempra/causality.hpp"
#include "tempra/constraints.hpp"
#include "tempra/fixtures.hpp"
#include "tempra/model_io.hpp"
#include "tempra/modelgen.hpp"
#include "tempra/parser.hpp"
#include "tempra/principles.hpp"
#include "tempra/semantics.hpp"

using namespace tempra;

namespace {

std::string g_cli;
int g_failures = 0;

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int st = pclose(pipe);
    if (WIFEXITED(st)) r.status = WEXITSTATUS(st);
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

void report(int n, bool ok, const std::string& what) {
    if (!ok) ++g_failures;
    std::printf("criterion %2d: %s  %s\n", n, ok ? "PASS" : "FAIL",
                what.c_str());
    std::fflush(stdout);
}

// The shared corpus for criteria 4..7: 1000 generated models, seeds 0..999,
// at most 6 worlds and 4 grid times.
const std::vector<Model>& corpus() {
    static const std::vector<Model> models = [] {
        std::vector<Model> out;
        out.reserve(1000);
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            GenParams p;
            p.seed = seed;
            out.push_back(generate_model(p));
        }
        return out;
    }();
    return models;
}

void criterion_coin() {
    Model m = parse_model(fixture("coin").model_json);
    Formula heads = Formula::occ("t1", "t2", "toss-heads");
    bool ok = probability(m, Rational(0), m.world_index("fair-heads"), heads) ==
              Rational(3, 5);
    ok = ok && expected_future_probability(m, Rational(0), Rational(1),
                                           "fair-heads", heads) ==
                   Rational(3, 5);
    RunResult r = run_cli("example coin");
    ok = ok && r.status == 0;
    ok = ok && contains(r.out, "chance of heads before the pick  [3/5]");
    ok = ok &&
         contains(r.out, "expectation over tomorrow's chance of heads  [3/5]");
    report(1, ok, "coin: P[t0](heads) = 3/5 and the t1 expectation matches");
}

void criterion_car() {
    Model m = parse_model(fixture("car").model_json);
    int w = m.world_index("frz-key-start");
    Formula start = Formula::occ("ts", "tsp", "start");
    Formula key_start = Formula::conj(start, Formula::occ("ts", "tsp", "turn-key"));
    bool ok = probability(m, Rational(0), w, key_start) == Rational(6, 25);
    ok = ok && probability(m, Rational(0), w, start) == Rational(11, 25);

    // the subinterval detachment step: freezing over the morning entails
    // freezing over the key-turn window inside it, so the 4/5 bound carries
    SchemaInstance det = SchemaInstance::detachment(
        "t0", Formula::holds("tM", "tMp", "below-freezing"),
        Formula::holds("ts", "tsp", "below-freezing"));
    ok = ok && entails_in_model(m, det.phi, det.psi);
    ok = ok && !check_schema(m, det).has_value();
    ok = ok && probability(m, Rational(0), w,
                           Formula::holds("ts", "tsp", "below-freezing")) ==
                   Rational(4, 5);
    ok = ok && valid_in_model(
                   m, parse_formula(
                          "P[t0](HOLDS(ts,tsp,below-freezing)) >= 4/5"));

    RunResult r = run_cli("example car");
    ok = ok && r.status == 0;
    ok = ok && contains(r.out, "chance the car starts with the key turned  [6/25]");
    ok = ok && contains(r.out, "chance the car starts  [11/25]");
    ok = ok && contains(r.out, "freezing persists into the key-turn window  [holds at every world]");
    report(2, ok, "car: 6/25 with the key, 11/25 overall, freezing bound 4/5 detaches");
}

void criterion_carry() {
    const Fixture& fx = fixture("carry");
    Model m = parse_model(fx.model_json);
    int w = m.world_index("w1");
    Formula co = Formula::conj(Formula::occ("t1", "t2", "carry-b1"),
                               Formula::occ("t1", "t2", "carry-b2"));
    Formula dead = Formula::negate(Formula::poss("t1", co));
    Rational p_dead = probability(m, Rational(0), w, dead);
    Rational p_co = probability(m, Rational(0), w, co);
    bool ok = p_dead == Rational(13, 20) && p_dead >= Rational(2, 5);
    ok = ok && p_co == Rational(1, 4) && p_co <= Rational(3, 5);

    RunResult r = run_cli("example carry");
    ok = ok && r.status == 0;
    ok = ok && contains(r.out, "at least a 40% chance the plan is dead  [holds at every world]");
    ok = ok && contains(r.out, "at most a 60% chance both bags go on  [holds at every world]");

    // the three premises are jointly satisfiable, found within ten seconds
    std::string premises;
    for (const std::string& p : fx.premises) {
        if (!premises.empty()) premises += " & ";
        premises += p;
    }
    auto t0 = std::chrono::steady_clock::now();
    RunResult sat = run_cli("sat -f '" + premises + "'");
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && sat.status == 0 && contains(sat.out, "found a model");
    ok = ok && secs < 10.0;
    report(3, ok, "carry: plan-dead 13/20 >= 2/5, co-carry 1/4 <= 3/5, premises satisfiable");
}

void criterion_miller() {
    long long instances = 0, bad = 0;
    for (std::size_t i = 0; i < corpus().size(); ++i) {
        const Model& m = corpus()[i];
        for (const SchemaInstance& inst : sample_instances(m, Schema::Miller, i)) {
            ++instances;
            if (check_schema(m, inst)) ++bad;
        }
    }
    report(4, bad == 0 && instances > 0,
           "future-chance bound: " + std::to_string(bad) +
               " counterexamples in " + std::to_string(instances) +
               " instances over 1000 models");
}

void criterion_expectation() {
    long long checked = 0, bad = 0;
    for (std::size_t i = 0; i < corpus().size(); ++i) {
        const Model& m = corpus()[i];
        for (int k = 0; k < 3; ++k) {
            Formula f = sample_formula(m, i * 3 + k, 2);
            for (std::size_t a = 0; a < m.grid.size(); ++a) {
                for (std::size_t b = a; b < m.grid.size(); ++b) {
                    for (int w = 0; w < static_cast<int>(m.worlds.size()); ++w) {
                        ++checked;
                        if (expected_future_probability(m, m.grid[a], m.grid[b],
                                                        w, f) !=
                            probability(m, m.grid[a], w, f)) {
                            ++bad;
                        }
                    }
                }
            }
        }
    }
    report(5, bad == 0 && checked > 0,
           "expectation identity: " + std::to_string(bad) + " mismatches in " +
               std::to_string(checked) + " evaluations");
}

void criterion_families() {
    const Schema families[] = {Schema::PastDetermined, Schema::InevitableCertain,
                               Schema::InevitabilityPersists, Schema::Detachment};
    long long instances = 0, bad = 0;
    for (std::size_t i = 0; i < corpus().size(); ++i) {
        const Model& m = corpus()[i];
        for (Schema s : families) {
            for (const SchemaInstance& inst : sample_instances(m, s, i)) {
                ++instances;
                if (check_schema(m, inst)) ++bad;
            }
        }
    }
    report(6, bad == 0 && instances > 0,
           "four valid families: " + std::to_string(bad) +
               " counterexamples in " + std::to_string(instances) +
               " instances");
}

void criterion_cause_conditions() {
    long long checked = 0, bad = 0;
    for (const Model& m : corpus()) {
        // every (event, interval) token the model mentions
        std::vector<EventOccurrence> occs;
        for (const auto& [name, extents] : m.events) {
            std::set<std::pair<Rational, Rational>> ivals;
            for (const Extent& e : extents) ivals.emplace(e.lo, e.hi);
            for (const auto& [lo, hi] : ivals) occs.push_back({name, lo, hi});
        }
        const int n = static_cast<int>(m.worlds.size());
        for (const EventOccurrence& cause : occs) {
            int ti = m.time_index(cause.lo);
            for (const EventOccurrence& effect : occs) {
                // one world per R-class at the cause's start time: the
                // report is constant on the class
                std::vector<bool> seen(n, false);
                for (int w = 0; w < n; ++w) {
                    if (seen[w]) continue;
                    for (int v = 0; v < n; ++v) {
                        if (m.rel[ti][w][v]) seen[v] = true;
                    }
                    CausalReport r = analyze_cause(m, w, cause, effect);
                    ++checked;
                    if (r.cond3 && !(r.cond1 && r.cond2)) ++bad;
                }
            }
        }
    }
    report(7, bad == 0 && checked > 0,
           "positive influence implies the other two conditions: " +
               std::to_string(bad) + " breaches in " + std::to_string(checked) +
               " reports");
}

void criterion_auditor() {
    bool ok = true;
    for (const Fixture& fx : fixtures()) {
        ok = ok && check_constraints(parse_model(fx.model_json)).clean();
    }
    for (const support::Mutation& mut : support::constraint_mutations()) {
        ViolationReport rep = check_constraints(mut.model);
        ok = ok && !rep.clean() && support::flags_constraint(rep, mut.constraint);
    }
    report(8, ok, "auditor: fixtures clean, each single-edit break labeled C1..C6");
}

void criterion_parser() {
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
        const Model& m = corpus()[(i * 2) % corpus().size()];
        Formula f = sample_formula(m, 7777 + i, 3);
        if (!(parse_formula(print_formula(f)) == f)) ++bad;
    }

    Formula arm = parse_formula("~POSS[t0](OCC(t1,t2,raise) & OCC(t1,t2,lower))");
    bool showcase =
        arm == Formula::negate(Formula::poss(
                   "t0", Formula::conj(Formula::occ("t1", "t2", "raise"),
                                       Formula::occ("t1", "t2", "lower"))));

    Formula souffle = parse_formula(
        "P[t0](HOLDS(t2,t2,souffle-done-right) | OCC(t1,t2,bake-souffle)"
        " & HOLDS(t1,t2,oven-temp-const)) >= 0.9");
    showcase = showcase &&
               souffle == Formula::cond_prob_cmp(
                              "t0", Formula::holds("t2", "t2", "souffle-done-right"),
                              Formula::conj(
                                  Formula::occ("t1", "t2", "bake-souffle"),
                                  Formula::holds("t1", "t2", "oven-temp-const")),
                              Cmp::Ge, Rational(9, 10));

    Formula train = parse_formula(
        "t1 = noon & P[t0](INEV[t1](OCC(t2,t3,crash))) = 0.5");
    showcase = showcase &&
               train == Formula::conj(
                            Formula::time_eq("t1", "noon"),
                            Formula::prob_cmp(
                                "t0",
                                {{Rational(1),
                                  {Formula::inev("t1",
                                                 Formula::occ("t2", "t3", "crash"))}},
                                 {Rational(-1, 2), {}}},
                                Cmp::Eq));

    Formula lottery = parse_formula(
        "P[t0](OCC(t1,t2,win-lottery)) = 0.0001 & OCC(t1,t2,win-lottery)");
    Formula win = Formula::occ("t1", "t2", "win-lottery");
    showcase = showcase &&
               lottery == Formula::conj(
                              Formula::prob_cmp(
                                  "t0",
                                  {{Rational(1), {win}},
                                   {Rational(-1, 10000), {}}},
                                  Cmp::Eq),
                              win);

    report(9, bad == 0 && showcase,
           "parser: " + std::to_string(500 - bad) +
               "/500 round-trips, showcase sentences keep their shapes");
}

void criterion_oracle() {
    long long checked = 0, bad = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GenParams p;
        p.seed = 5000 + seed;
        p.max_worlds = 4;
        Model m = generate_model(p);
        for (int k = 0; k < 4; ++k) {
            Formula f = sample_formula(m, 31 * seed + k, 3);
            for (const Rational& t : m.grid) {
                for (int w = 0; w < static_cast<int>(m.worlds.size()); ++w) {
                    ++checked;
                    if (probability(m, t, w, f) != naive::prob(m, t, w, f)) {
                        ++bad;
                    }
                }
            }
        }
    }
    report(10, bad == 0 && checked > 0,
           "oracle: " + std::to_string(bad) + " mismatches against the naive "
               "enumerator in " + std::to_string(checked) + " probabilities");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 64;
    }
    g_cli = argv[1];

    criterion_coin();
    criterion_car();
    criterion_carry();
    criterion_miller();
    criterion_expectation();
    criterion_families();
    criterion_cause_conditions();
    criterion_auditor();
    criterion_parser();
    criterion_oracle();

    if (g_failures == 0) {
        std::printf("all 10 criteria pass\n");
    } else {
        std::printf("%d criteria FAILED\n", g_failures);
    }
    return g_failures;
}
