#include "tempra/fixtures.hpp"

#include <stdexcept>

#include "tempra/parser.hpp"
#include "tempra/principles.hpp"
#include "tempra/semantics.hpp"

namespace tempra {

namespace {

using K = FixtureCheck::Kind;

Fixture make_coin() {
    Fixture fx;
    fx.name = "coin";
    fx.title = "a random pick between a fair and a biased coin";
    fx.story =
        "Two coins sit on the table: one fair, one weighted to land heads "
        "seven times out of ten. Between times t0 and t1 I pick one at "
        "random; between t1 and t2 I toss it. Before the pick, heads should "
        "be a 60% call: the average of the two coins' own chances.";
    fx.premises = {
        "P[t0](P[t1](OCC(t1,t2,toss-heads)) = 7/10) = 1/2",
        "P[t0](P[t1](OCC(t1,t2,toss-heads)) = 1/2) = 1/2",
        "t0 < t1 & t1 < t2",
    };
    fx.model_json = R"json({
  "worlds": ["fair-heads", "fair-tails", "bias-heads", "bias-tails"],
  "times": {"t0": 0, "t1": 1, "t2": 2},
  "facts": {
    "fair": [
      ["fair-heads", 1, 1], ["fair-heads", 1, 2], ["fair-heads", 2, 2],
      ["fair-tails", 1, 1], ["fair-tails", 1, 2], ["fair-tails", 2, 2]
    ],
    "biased": [
      ["bias-heads", 1, 1], ["bias-heads", 1, 2], ["bias-heads", 2, 2],
      ["bias-tails", 1, 1], ["bias-tails", 1, 2], ["bias-tails", 2, 2]
    ]
  },
  "events": {
    "choose-fair":   [["fair-heads", 0, 1], ["fair-tails", 0, 1]],
    "choose-biased": [["bias-heads", 0, 1], ["bias-tails", 0, 1]],
    "toss-heads":    [["fair-heads", 1, 2], ["bias-heads", 1, 2]],
    "toss-tails":    [["fair-tails", 1, 2], ["bias-tails", 1, 2]]
  },
  "R": {"mode": "derived"},
  "prob": {
    "t0": [
      {"class": ["fair-heads", "fair-tails", "bias-heads", "bias-tails"],
       "dist": {"fair-heads": "1/4", "fair-tails": "1/4",
                "bias-heads": "7/20", "bias-tails": "3/20"}}
    ],
    "t1": [
      {"class": ["fair-heads", "fair-tails"],
       "dist": {"fair-heads": "1/2", "fair-tails": "1/2"}},
      {"class": ["bias-heads", "bias-tails"],
       "dist": {"bias-heads": "7/10", "bias-tails": "3/10"}}
    ],
    "t2": [
      {"class": ["fair-heads"], "dist": {"fair-heads": 1}},
      {"class": ["fair-tails"], "dist": {"fair-tails": 1}},
      {"class": ["bias-heads"], "dist": {"bias-heads": 1}},
      {"class": ["bias-tails"], "dist": {"bias-tails": 1}}
    ]
  }
})json";

    const std::string heads = "OCC(t1,t2,toss-heads)";
    fx.checks = {
        {K::Valid, "premise: even chance the pick is the biased coin",
         "P[t0](P[t1](" + heads + ") = 7/10) = 1/2", "", "", "", "fair-heads",
         Cmp::Eq, Rational(0), true},
        {K::Valid, "premise: even chance the pick is the fair coin",
         "P[t0](P[t1](" + heads + ") = 1/2) = 1/2", "", "", "", "fair-heads",
         Cmp::Eq, Rational(0), true},
        {K::Probability, "chance of heads before the pick", heads, "", "t0",
         "", "fair-heads", Cmp::Eq, Rational(3, 5), true},
        {K::Expected, "expectation over tomorrow's chance of heads", heads, "",
         "t0", "t1", "fair-heads", Cmp::Eq, Rational(3, 5), true},
        {K::Valid, "conclusion: a 60% chance of heads",
         "P[t0](" + heads + ") = 3/5", "", "", "", "fair-heads", Cmp::Eq,
         Rational(0), true},
        {K::Valid, "future-chance bound at 7/10",
         "P[t0](" + heads + " & (P[t1](" + heads + ") >= 7/10)) >= "
         "7/10 * P[t0](P[t1](" + heads + ") >= 7/10)",
         "", "", "", "fair-heads", Cmp::Eq, Rational(0), true},
        {K::Truth, "the biased pick makes heads 70% likely",
         "P[t1](" + heads + ") >= 7/10", "", "", "", "bias-tails", Cmp::Eq,
         Rational(0), true},
        {K::Truth, "the fair pick does not",
         "P[t1](" + heads + ") >= 7/10", "", "", "", "fair-tails", Cmp::Eq,
         Rational(0), false},
    };
    return fx;
}

Fixture make_car() {
    Fixture fx;
    fx.name = "car";
    fx.title = "a cold-weather start";
    fx.story =
        "An unreliable car: below freezing it starts only three times in ten "
        "when the key is turned. The forecast gives an 80% chance of "
        "freezing weather lasting all of tomorrow morning (tM to tM'), and "
        "the key turn happens in a window (ts to ts') inside the morning. "
        "This model takes the most optimistic consistent reading: above "
        "freezing the car always starts, and in the cold it is no less "
        "likely to start on its own than with the key, so the overall "
        "chance of starting attains its upper bound of 11/25.";
    fx.premises = {
        "P[t0](OCC(ts,tsp,start) | OCC(ts,tsp,turn-key) & "
        "HOLDS(ts,tsp,below-freezing)) = 3/10",
        "P[t0](HOLDS(tM,tMp,below-freezing)) = 4/5",
        "t0 < tM & tM <= ts & ts < tsp & tsp <= tMp",
    };
    fx.model_json = R"json({
  "worlds": ["frz-key-start", "frz-key-stall", "frz-nokey-start",
             "frz-nokey-stall", "warm-key-start", "warm-nokey-start"],
  "times": {"t0": 0, "tM": 1, "ts": 2, "tsp": 3, "tMp": 4},
  "facts": {
    "below-freezing": [
      ["frz-key-start", 1, 1], ["frz-key-start", 1, 2], ["frz-key-start", 1, 3],
      ["frz-key-start", 1, 4], ["frz-key-start", 2, 2], ["frz-key-start", 2, 3],
      ["frz-key-start", 2, 4], ["frz-key-start", 3, 3], ["frz-key-start", 3, 4],
      ["frz-key-start", 4, 4],
      ["frz-key-stall", 1, 1], ["frz-key-stall", 1, 2], ["frz-key-stall", 1, 3],
      ["frz-key-stall", 1, 4], ["frz-key-stall", 2, 2], ["frz-key-stall", 2, 3],
      ["frz-key-stall", 2, 4], ["frz-key-stall", 3, 3], ["frz-key-stall", 3, 4],
      ["frz-key-stall", 4, 4],
      ["frz-nokey-start", 1, 1], ["frz-nokey-start", 1, 2],
      ["frz-nokey-start", 1, 3], ["frz-nokey-start", 1, 4],
      ["frz-nokey-start", 2, 2], ["frz-nokey-start", 2, 3],
      ["frz-nokey-start", 2, 4], ["frz-nokey-start", 3, 3],
      ["frz-nokey-start", 3, 4], ["frz-nokey-start", 4, 4],
      ["frz-nokey-stall", 1, 1], ["frz-nokey-stall", 1, 2],
      ["frz-nokey-stall", 1, 3], ["frz-nokey-stall", 1, 4],
      ["frz-nokey-stall", 2, 2], ["frz-nokey-stall", 2, 3],
      ["frz-nokey-stall", 2, 4], ["frz-nokey-stall", 3, 3],
      ["frz-nokey-stall", 3, 4], ["frz-nokey-stall", 4, 4]
    ]
  },
  "events": {
    "turn-key": [["frz-key-start", 2, 3], ["frz-key-stall", 2, 3],
                 ["warm-key-start", 2, 3]],
    "start": [["frz-key-start", 2, 3], ["frz-nokey-start", 2, 3],
              ["warm-key-start", 2, 3], ["warm-nokey-start", 2, 3]],
    "stall": [["frz-key-stall", 2, 3], ["frz-nokey-stall", 2, 3]]
  },
  "R": {
    "mode": "explicit",
    "classes": {
      "t0": [["frz-key-start", "frz-key-stall", "frz-nokey-start",
              "frz-nokey-stall", "warm-key-start", "warm-nokey-start"]],
      "tM": [["frz-key-start", "frz-key-stall", "frz-nokey-start",
              "frz-nokey-stall"],
             ["warm-key-start", "warm-nokey-start"]],
      "ts": [["frz-key-start", "frz-key-stall", "frz-nokey-start",
              "frz-nokey-stall"],
             ["warm-key-start", "warm-nokey-start"]],
      "tsp": [["frz-key-start"], ["frz-key-stall"], ["frz-nokey-start"],
              ["frz-nokey-stall"], ["warm-key-start"], ["warm-nokey-start"]],
      "tMp": [["frz-key-start"], ["frz-key-stall"], ["frz-nokey-start"],
              ["frz-nokey-stall"], ["warm-key-start"], ["warm-nokey-start"]]
    }
  },
  "prob": {
    "t0": [
      {"class": ["frz-key-start", "frz-key-stall", "frz-nokey-start",
                  "frz-nokey-stall", "warm-key-start", "warm-nokey-start"],
       "dist": {"frz-key-start": "36/275", "frz-key-stall": "84/275",
                "frz-nokey-start": "30/275", "frz-nokey-stall": "70/275",
                "warm-key-start": "30/275", "warm-nokey-start": "25/275"}}
    ],
    "tM": [
      {"class": ["frz-key-start", "frz-key-stall", "frz-nokey-start",
                  "frz-nokey-stall"],
       "dist": {"frz-key-start": "9/55", "frz-key-stall": "21/55",
                "frz-nokey-start": "3/22", "frz-nokey-stall": "7/22"}},
      {"class": ["warm-key-start", "warm-nokey-start"],
       "dist": {"warm-key-start": "6/11", "warm-nokey-start": "5/11"}}
    ],
    "ts": [
      {"class": ["frz-key-start", "frz-key-stall", "frz-nokey-start",
                  "frz-nokey-stall"],
       "dist": {"frz-key-start": "9/55", "frz-key-stall": "21/55",
                "frz-nokey-start": "3/22", "frz-nokey-stall": "7/22"}},
      {"class": ["warm-key-start", "warm-nokey-start"],
       "dist": {"warm-key-start": "6/11", "warm-nokey-start": "5/11"}}
    ],
    "tsp": [
      {"class": ["frz-key-start"], "dist": {"frz-key-start": 1}},
      {"class": ["frz-key-stall"], "dist": {"frz-key-stall": 1}},
      {"class": ["frz-nokey-start"], "dist": {"frz-nokey-start": 1}},
      {"class": ["frz-nokey-stall"], "dist": {"frz-nokey-stall": 1}},
      {"class": ["warm-key-start"], "dist": {"warm-key-start": 1}},
      {"class": ["warm-nokey-start"], "dist": {"warm-nokey-start": 1}}
    ],
    "tMp": [
      {"class": ["frz-key-start"], "dist": {"frz-key-start": 1}},
      {"class": ["frz-key-stall"], "dist": {"frz-key-stall": 1}},
      {"class": ["frz-nokey-start"], "dist": {"frz-nokey-start": 1}},
      {"class": ["frz-nokey-stall"], "dist": {"frz-nokey-stall": 1}},
      {"class": ["warm-key-start"], "dist": {"warm-key-start": 1}},
      {"class": ["warm-nokey-start"], "dist": {"warm-nokey-start": 1}}
    ]
  }
})json";

    fx.checks = {
        {K::Valid, "premise: a 30% start rate under freezing key turns",
         "P[t0](OCC(ts,tsp,start) | OCC(ts,tsp,turn-key) & "
         "HOLDS(ts,tsp,below-freezing)) = 3/10",
         "", "", "", "frz-key-start", Cmp::Eq, Rational(0), true},
        {K::Valid, "premise: an 80% chance of a freezing morning",
         "P[t0](HOLDS(tM,tMp,below-freezing)) = 4/5", "", "", "",
         "frz-key-start", Cmp::Eq, Rational(0), true},
        {K::Truth, "premise: the times line up",
         "t0 < tM & tM <= ts & ts < tsp & tsp <= tMp", "", "", "",
         "frz-key-start", Cmp::Eq, Rational(0), true},
        {K::Probability, "chance the car starts with the key turned",
         "OCC(ts,tsp,start) & OCC(ts,tsp,turn-key)", "", "t0", "",
         "frz-key-start", Cmp::Eq, Rational(6, 25), true},
        {K::Probability, "chance the car starts", "OCC(ts,tsp,start)", "",
         "t0", "", "frz-key-start", Cmp::Eq, Rational(11, 25), true},
        {K::Valid, "freezing persists into the key-turn window",
         "P[t0](HOLDS(ts,tsp,below-freezing)) >= 4/5", "", "", "",
         "frz-key-start", Cmp::Eq, Rational(0), true},
        {K::Probability, "exact chance of freezing over the window",
         "HOLDS(ts,tsp,below-freezing)", "", "t0", "", "frz-key-start",
         Cmp::Eq, Rational(4, 5), true},
        {K::CondProbability, "start rate among freezing key-turn worlds",
         "OCC(ts,tsp,start)",
         "OCC(ts,tsp,turn-key) & HOLDS(ts,tsp,below-freezing)", "t0", "",
         "frz-key-start", Cmp::Eq, Rational(3, 10), true},
        {K::Valid, "the start bound is attained, not exceeded",
         "11/25 >= P[t0](OCC(ts,tsp,start))", "", "", "", "frz-key-start",
         Cmp::Eq, Rational(0), true},
    };
    return fx;
}

Fixture make_carry() {
    Fixture fx;
    fx.name = "carry";
    fx.title = "two carry-on bags";
    fx.story =
        "I fly tonight and would like to carry both of my small bags onto "
        "the plane (between t1 and t2). There is a 50% chance the plane is "
        "full, and with a full plane the chance that carrying both remains "
        "possible at boarding time t1 is only one in five. Worlds w1 to w4 "
        "have already lost the option by t1; w5 and w6 still share a branch "
        "where both bags go on, and in w6 they do.";
    fx.premises = {
        "P[now](~POSS[t1](OCC(t1,t2,carry-b1) & OCC(t1,t2,carry-b2)) | "
        "HOLDS(t1,t2,plane-full)) = 4/5",
        "P[now](HOLDS(t1,t2,plane-full)) = 1/2",
        "now < t1 & t1 < t2",
    };
    fx.model_json = R"json({
  "worlds": ["w1", "w2", "w3", "w4", "w5", "w6"],
  "times": {"now": 0, "t1": 1, "t2": 2},
  "facts": {
    "plane-full": [["w1", 1, 2], ["w2", 1, 2], ["w3", 1, 2], ["w5", 1, 2]]
  },
  "events": {
    "carry-b1": [["w1", 1, 2], ["w4", 1, 2], ["w5", 1, 2], ["w6", 1, 2]],
    "carry-b2": [["w2", 1, 2], ["w6", 1, 2]]
  },
  "R": {
    "mode": "explicit",
    "classes": {
      "now": [["w1", "w2", "w3", "w4", "w5", "w6"]],
      "t1": [["w1"], ["w2"], ["w3"], ["w4"], ["w5", "w6"]],
      "t2": [["w1"], ["w2"], ["w3"], ["w4"], ["w5"], ["w6"]]
    }
  },
  "prob": {
    "now": [
      {"class": ["w1", "w2", "w3", "w4", "w5", "w6"],
       "dist": {"w1": "2/15", "w2": "2/15", "w3": "2/15", "w4": "1/4",
                "w5": "1/10", "w6": "1/4"}}
    ],
    "t1": [
      {"class": ["w1"], "dist": {"w1": 1}},
      {"class": ["w2"], "dist": {"w2": 1}},
      {"class": ["w3"], "dist": {"w3": 1}},
      {"class": ["w4"], "dist": {"w4": 1}},
      {"class": ["w5", "w6"], "dist": {"w5": "2/7", "w6": "5/7"}}
    ],
    "t2": [
      {"class": ["w1"], "dist": {"w1": 1}},
      {"class": ["w2"], "dist": {"w2": 1}},
      {"class": ["w3"], "dist": {"w3": 1}},
      {"class": ["w4"], "dist": {"w4": 1}},
      {"class": ["w5"], "dist": {"w5": 1}},
      {"class": ["w6"], "dist": {"w6": 1}}
    ]
  }
})json";

    const std::string co = "OCC(t1,t2,carry-b1) & OCC(t1,t2,carry-b2)";
    fx.checks = {
        {K::Valid, "premise: co-carry is 80% ruled out on a full plane",
         "P[now](~POSS[t1](" + co + ") | HOLDS(t1,t2,plane-full)) = 4/5", "",
         "", "", "w1", Cmp::Eq, Rational(0), true},
        {K::Valid, "premise: even odds on a full plane",
         "P[now](HOLDS(t1,t2,plane-full)) = 1/2", "", "", "", "w1", Cmp::Eq,
         Rational(0), true},
        {K::Truth, "premise: the times line up", "now < t1 & t1 < t2", "", "",
         "", "w1", Cmp::Eq, Rational(0), true},
        {K::Truth, "both bags go on in w6", co, "", "", "", "w6", Cmp::Eq,
         Rational(0), true},
        {K::Truth, "co-carry already ruled out in w1",
         "POSS[t1](" + co + ")", "", "", "", "w1", Cmp::Eq, Rational(0),
         false},
        {K::Truth, "co-carry already ruled out in w4",
         "POSS[t1](" + co + ")", "", "", "", "w4", Cmp::Eq, Rational(0),
         false},
        {K::Truth, "co-carry still open in w5", "POSS[t1](" + co + ")", "",
         "", "", "w5", Cmp::Eq, Rational(0), true},
        {K::Valid, "conclusion: at least a 40% chance the plan is dead",
         "P[now](~POSS[t1](" + co + ")) >= 2/5", "", "", "", "w1", Cmp::Eq,
         Rational(0), true},
        {K::Valid, "conclusion: at most a 60% chance both bags go on",
         "P[now](" + co + ") <= 3/5", "", "", "", "w1", Cmp::Eq, Rational(0),
         true},
        {K::Probability, "exact infeasibility chance in this model",
         "~POSS[t1](" + co + ")", "", "now", "", "w1", Cmp::Eq,
         Rational(13, 20), true},
        {K::Probability, "exact co-carry chance in this model", co, "", "now",
         "", "w1", Cmp::Eq, Rational(1, 4), true},
        {K::CondProbability, "infeasibility given a full plane",
         "~POSS[t1](" + co + ")", "HOLDS(t1,t2,plane-full)", "now", "", "w1",
         Cmp::Eq, Rational(4, 5), true},
        {K::Expected, "expectation over t1 chances of co-carry", co, "",
         "now", "t1", "w1", Cmp::Eq, Rational(1, 4), true},
    };
    return fx;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all{make_coin(), make_car(),
                                          make_carry()};
    return all;
}

const Fixture& fixture(const std::string& name) {
    for (const Fixture& fx : fixtures()) {
        if (fx.name == name) return fx;
    }
    throw std::out_of_range("no fixture named \"" + name + "\"");
}

std::vector<FixtureCheckResult> run_fixture_checks(const Fixture& fx,
                                                   const Model& m) {
    std::vector<FixtureCheckResult> results;
    for (const FixtureCheck& c : fx.checks) {
        FixtureCheckResult r{&c, false, ""};
        Formula f = parse_formula(c.formula);
        switch (c.kind) {
            case K::Probability: {
                Rational p = probability(m, m.denote(c.time), c.world, f);
                r.ok = cmp_holds(c.cmp, p, c.expected);
                r.computed = p.str();
                break;
            }
            case K::CondProbability: {
                Formula g = parse_formula(c.given);
                Rational t = m.denote(c.time);
                Rational pg = probability(m, t, c.world, g);
                Rational pj =
                    probability(m, t, c.world, Formula::conj(f, g));
                if (pg == Rational(0)) {
                    r.ok = false;
                    r.computed = "condition has probability 0";
                } else {
                    Rational ratio = pj / pg;
                    r.ok = cmp_holds(c.cmp, ratio, c.expected);
                    r.computed = ratio.str();
                }
                break;
            }
            case K::Truth: {
                bool v = eval_formula(m, c.world, f);
                r.ok = (v == c.truth);
                r.computed = v ? "true" : "false";
                break;
            }
            case K::Valid: {
                r.ok = valid_in_model(m, f);
                r.computed = r.ok ? "holds at every world" : "fails somewhere";
                break;
            }
            case K::Expected: {
                Rational v = expected_future_probability(
                    m, m.denote(c.time), m.denote(c.later_time), c.world, f);
                r.ok = cmp_holds(c.cmp, v, c.expected);
                r.computed = v.str();
                break;
            }
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace tempra
