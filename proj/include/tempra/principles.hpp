#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tempra/formula.hpp"
#include "tempra/model.hpp"

namespace tempra {

// The valid-sentence families shipped with the checker, by stable CLI name:
//   past-determined        (t1 <= t2) -> P[t2](atom ending at t1) in {0,1}
//   inevitable-certain     INEV[t](f) -> P[t](f) = 1
//   inevitability-persists (t1 <= t2) -> (INEV[t1](f) -> INEV[t2](f))
//   detachment             if f entails g in the model, P[t](g) >= P[t](f)
//   miller                 (t1 <= t2) ->
//                            P[t1](f & P[t2](f) >= a) >= a * P[t1](P[t2](f) >= a)
enum class Schema {
    PastDetermined,
    InevitableCertain,
    InevitabilityPersists,
    Detachment,
    Miller,
};

Schema schema_from_name(const std::string& name);  // throws invalid_argument
std::string schema_name(Schema s);
const std::vector<Schema>& all_schemas();

struct SchemaInstance {
    Schema schema;
    std::string t1, t2;
    Formula phi;
    Formula psi;      // detachment only: the entailed side
    Rational alpha;   // miller only, in [0,1]

    // phi must be a HOLDS or OCC atom; its second time plays the t1 role.
    static SchemaInstance past_determined(Formula atom, std::string t2);
    static SchemaInstance inevitable_certain(std::string t, Formula phi);
    static SchemaInstance inevitability_persists(std::string t1, std::string t2,
                                                 Formula phi);
    static SchemaInstance detachment(std::string t, Formula phi, Formula psi);
    static SchemaInstance miller(std::string t1, std::string t2, Formula phi,
                                 Rational alpha);

    // The bound sentence, except for detachment whose entailment guard is not
    // expressible as a formula; its instantiation is just the inequality.
    Formula instantiate() const;
};

// Checks the instance at every world; returns the first counterexample world
// name, or nullopt when the instance holds.  Detachment is guarded: when phi
// does not entail psi in the model the instance holds vacuously.
std::optional<std::string> check_schema(const Model& m,
                                        const SchemaInstance& inst);

// A deterministic spread of instances over the model's own vocabulary: every
// ordered pair of named times, `formulas` sampled formulas, the ninths grid
// for miller thresholds, extent atoms for past-determined, and subinterval
// atom pairs for detachment (so that family is not checked vacuously).  The
// randomized schema sweeps of the CLI and the test suite both draw from here,
// so they agree on what was checked.
std::vector<SchemaInstance> sample_instances(const Model& m, Schema s,
                                             std::uint64_t seed,
                                             int formulas = 3);

// The measure at (t, w) of each R_t2 class, times that class's probability of
// f at t2.  With the constraints satisfied this equals probability(m,t,w,f);
// the identity is the point of the function.  Requires t <= t2.
Rational expected_future_probability(const Model& m, const Rational& t,
                                     const Rational& t2, int world,
                                     const Formula& f);
Rational expected_future_probability(const Model& m, const Rational& t,
                                     const Rational& t2,
                                     const std::string& world, const Formula& f);

// 0, 1/9, ..., 1: the threshold grid used by the randomized miller suite.
std::vector<Rational> alpha_grid();

}  // namespace tempra
