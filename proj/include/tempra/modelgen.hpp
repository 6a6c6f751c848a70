#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tempra/formula.hpp"
#include "tempra/model.hpp"

namespace tempra {

// Knobs for the random model builder.  Generated models satisfy C1..C6 by
// construction: the accessibility partitions refine over time, one global
// mass is drawn per world, and every distribution is that mass conditioned
// on the world's class, so chances at later times are exactly the earlier
// chances conditioned on how the branching went.
struct GenParams {
    int max_worlds = 6;
    int max_times = 4;
    int max_facts = 2;
    int max_events = 2;
    std::uint64_t seed = 0;
    // Masses are integer ball counts over a common denominator of at least
    // this value; larger values give finer probabilities.
    int mass_granularity = 20;
    // Optional symbol pools.  Missing names are made up (f1.., e1.., t1..);
    // extra time names force at least that many grid points.
    std::vector<std::string> fact_names, event_names, time_names;
};

Model generate_model(const GenParams& p);

// A random formula over the model's own symbols, honoring the model's fact,
// event and time vocabulary.  depth bounds connective nesting.  Deterministic
// in (m, seed, depth).
Formula sample_formula(const Model& m, std::uint64_t seed, int depth);

struct SatParams {
    GenParams gen;
    // Total candidate models examined across restarts and mutations.
    int budget = 50000;
};

struct SatResult {
    bool found = false;
    std::optional<Model> model;
    std::string world;    // witness world where the formula holds
    long long tried = 0;  // candidates examined before success or exhaustion
};

// Searches for a constraint-satisfying model and world making f true:
// random restarts over generated models plus score-guided local mutations
// (single-ball mass moves, extent block toggles, time rebinding).  A result
// with found=true has been re-verified against both the constraint auditor
// and the evaluator; found=false only means the budget ran out.
SatResult bounded_sat(const Formula& f, const SatParams& p);

}  // namespace tempra
