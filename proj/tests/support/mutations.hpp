#pragma once

// Six single-edit mutations, one per constraint.  Each takes a clean fixture
// model and makes the smallest change that breaks its constraint; the audit
// may flag knock-on effects too, but the named constraint must be among them.

#include <string>
#include <vector>

#include "tempra/fixtures.hpp"
#include "tempra/model.hpp"
#include "tempra/model_io.hpp"

namespace support {

struct Mutation {
    int constraint;       // 1..6
    std::string fixture;  // which fixture the edit applies to
    std::string note;
    tempra::Model model;  // the mutated copy
};

inline tempra::Model fixture_model(const std::string& name) {
    return tempra::parse_model(tempra::fixture(name).model_json);
}

inline std::vector<Mutation> constraint_mutations() {
    using tempra::Rational;
    std::vector<Mutation> out;

    {
        // C1: relate everything at the last time; those pairs were split at
        // earlier times, so accessibility no longer refines.
        tempra::Model m = fixture_model("coin");
        for (auto& row : m.rel.back()) row.assign(row.size(), true);
        out.push_back({1, "coin", "last relation coarsened to one class",
                       std::move(m)});
    }
    {
        // C2: one asymmetric edge at the pick time.
        tempra::Model m = fixture_model("coin");
        m.rel[1][m.world_index("fair-heads")][m.world_index("bias-heads")] =
            true;
        out.push_back({2, "coin", "one-way edge added at time 1",
                       std::move(m)});
    }
    {
        // C3: drop an interior subinterval of the freezing spell.
        tempra::Model m = fixture_model("car");
        m.facts["below-freezing"].erase(
            {Rational(2), Rational(2), m.world_index("frz-key-stall")});
        out.push_back({3, "car", "a point piece of a longer fact removed",
                       std::move(m)});
    }
    {
        // C4: give one of two related worlds an extra settled event.
        tempra::Model m = fixture_model("coin");
        m.events["choose-biased"].insert(
            {Rational(0), Rational(1), m.world_index("fair-heads")});
        out.push_back({4, "coin", "extra settled event in one class member",
                       std::move(m)});
    }
    {
        // C5: half the mass leaks out of the fair class.
        tempra::Model m = fixture_model("coin");
        tempra::Distribution d;
        d.mass[m.world_index("fair-heads")] = Rational(1, 2);
        d.mass[m.world_index("bias-heads")] = Rational(1, 2);
        m.pr[1][m.world_index("fair-heads")] = std::move(d);
        out.push_back({5, "coin", "mass moved onto an inaccessible world",
                       std::move(m)});
    }
    {
        // C6: two members of the fair class disagree on the distribution.
        tempra::Model m = fixture_model("coin");
        tempra::Distribution d;
        d.mass[m.world_index("fair-heads")] = Rational(1, 3);
        d.mass[m.world_index("fair-tails")] = Rational(2, 3);
        m.pr[1][m.world_index("fair-tails")] = std::move(d);
        out.push_back({6, "coin", "class members with different distributions",
                       std::move(m)});
    }

    return out;
}

inline bool flags_constraint(const tempra::ViolationReport& rep, int c) {
    for (const tempra::Violation& v : rep.entries) {
        if (v.constraint == c) return true;
    }
    return false;
}

}  // namespace support
