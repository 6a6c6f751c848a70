#include "tempra/modelgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <random>
#include <set>

#include "tempra/constraints.hpp"
#include "tempra/semantics.hpp"

namespace tempra {

namespace {

// mt19937_64 output is pinned by the standard, and all derived draws below
// use plain modulo so generated corpora are reproducible across platforms
// (library distributions like uniform_int_distribution are not portable).
using Rng = std::mt19937_64;

int pick(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// True with probability num/den.
bool chance(Rng& rng, int num, int den) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(den)) < num;
}

template <typename T>
void shuffle_vec(Rng& rng, std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(i) - 1))]);
    }
}

// One base block of structure: an extent handed to the anchor world's whole
// accessibility class at the block's end time.  Facts get every grid
// subinterval added to the matching (coarser) class, so C3-strict and C4
// hold by construction; events are left as-is.
struct Block {
    bool event;
    int sym;     // index into fact_syms or event_syms
    int lo, hi;  // grid indices, lo <= hi
    int anchor;  // world index
};

struct GenState {
    std::vector<std::string> worlds;
    std::vector<Rational> grid;
    std::vector<std::string> names;     // time symbol per grid index
    std::vector<std::vector<int>> cls;  // [time][world] -> class id, refining
    std::vector<long long> balls;       // global mass numerators, all >= 1
    long long q = 0;
    std::vector<std::string> fact_syms, event_syms;
    std::vector<Block> blocks;
};

// Splits 0..n-1 into buckets, each element either joining an existing bucket
// or opening a new one with the given odds.
std::vector<int> crp_partition(Rng& rng, int n, int split_num, int split_den) {
    std::vector<int> bucket(n, 0);
    int buckets = 0;
    for (int i = 0; i < n; ++i) {
        if (i == 0 || buckets == 0) {
            bucket[i] = buckets++;
        } else if (chance(rng, split_num, split_den)) {
            bucket[i] = buckets++;
        } else {
            bucket[i] = pick(rng, 0, buckets - 1);
        }
    }
    return bucket;
}

// A refining chain: each time's partition subdivides the previous one.
std::vector<std::vector<int>> partition_chain(Rng& rng, int n_worlds,
                                              int n_times) {
    std::vector<std::vector<int>> cls(n_times, std::vector<int>(n_worlds, 0));
    cls[0] = crp_partition(rng, n_worlds, 1, 4);
    for (int t = 1; t < n_times; ++t) {
        // Sub-partition each class of the previous time independently.
        std::map<int, std::vector<int>> groups;
        for (int w = 0; w < n_worlds; ++w) groups[cls[t - 1][w]].push_back(w);
        int next_id = 0;
        for (auto& [id, members] : groups) {
            (void)id;
            auto sub = crp_partition(rng, static_cast<int>(members.size()), 1, 2);
            int base = next_id;
            int used = 0;
            for (std::size_t i = 0; i < members.size(); ++i) {
                cls[t][members[i]] = base + sub[i];
                used = std::max(used, sub[i] + 1);
            }
            next_id = base + used;
        }
    }
    return cls;
}

Model realize(const GenState& st) {
    const int n = static_cast<int>(st.worlds.size());
    const int nt = static_cast<int>(st.grid.size());

    ModelDescription d;
    d.worlds = st.worlds;
    for (int i = 0; i < nt; ++i) d.times[st.names[i]] = st.grid[i];

    auto class_members = [&](int t, int anchor) {
        std::vector<int> out;
        for (int w = 0; w < n; ++w) {
            if (st.cls[t][w] == st.cls[t][anchor]) out.push_back(w);
        }
        return out;
    };

    std::map<std::string, std::set<std::tuple<int, int, int>>> fact_pieces,
        event_pieces;
    for (const Block& b : st.blocks) {
        if (b.event) {
            auto& dest = event_pieces[st.event_syms[b.sym]];
            for (int w : class_members(b.hi, b.anchor)) {
                dest.insert({w, b.lo, b.hi});
            }
        } else {
            // The block's class at each piece's end time is coarser than or
            // equal to the class at the block end, so every subinterval of a
            // held extent is held wherever it is settled.
            auto& dest = fact_pieces[st.fact_syms[b.sym]];
            for (int a = b.lo; a <= b.hi; ++a) {
                for (int bb = a; bb <= b.hi; ++bb) {
                    for (int w : class_members(bb, b.anchor)) {
                        dest.insert({w, a, bb});
                    }
                }
            }
        }
    }
    for (const std::string& sym : st.fact_syms) d.facts[sym];
    for (const std::string& sym : st.event_syms) d.events[sym];
    for (const auto& [sym, pieces] : fact_pieces) {
        for (const auto& [w, lo, hi] : pieces) {
            d.facts[sym].push_back({st.worlds[w], st.grid[lo], st.grid[hi]});
        }
    }
    for (const auto& [sym, pieces] : event_pieces) {
        for (const auto& [w, lo, hi] : pieces) {
            d.events[sym].push_back({st.worlds[w], st.grid[lo], st.grid[hi]});
        }
    }

    for (int t = 0; t < nt; ++t) {
        std::map<int, std::vector<int>> groups;
        for (int w = 0; w < n; ++w) groups[st.cls[t][w]].push_back(w);
        auto& parts = d.r_classes[st.grid[t]];
        auto& dists = d.prob[st.grid[t]];
        for (const auto& [id, members] : groups) {
            (void)id;
            long long total = 0;
            for (int w : members) total += st.balls[w];
            RawDist rd;
            for (int w : members) {
                rd.members.push_back(st.worlds[w]);
                rd.mass[st.worlds[w]] = Rational(st.balls[w], total);
            }
            parts.push_back(rd.members);
            dists.push_back(std::move(rd));
        }
    }

    return build_model(d);
}

std::string fresh_name(const std::string& prefix, int& counter,
                       const std::set<std::string>& taken) {
    std::string name;
    do {
        name = prefix + std::to_string(++counter);
    } while (taken.count(name));
    return name;
}

GenState random_state(Rng& rng, const GenParams& p) {
    GenState st;

    int n = pick(rng, 1, std::max(1, p.max_worlds));
    for (int i = 0; i < n; ++i) st.worlds.push_back("w" + std::to_string(i + 1));

    int nt = std::max({1, pick(rng, 1, std::max(1, p.max_times)),
                       static_cast<int>(p.time_names.size())});
    std::vector<Rational> candidates;
    for (int k = 0; k <= 2 * nt + 3; ++k) candidates.push_back(Rational(k, 2));
    shuffle_vec(rng, candidates);
    candidates.resize(nt);
    std::sort(candidates.begin(), candidates.end());
    st.grid = std::move(candidates);

    std::set<std::string> taken(p.time_names.begin(), p.time_names.end());
    int filler = 0;
    for (int i = 0; i < nt; ++i) {
        if (i < static_cast<int>(p.time_names.size())) {
            st.names.push_back(p.time_names[i]);
        } else {
            st.names.push_back(fresh_name("u", filler, taken));
        }
    }

    st.cls = partition_chain(rng, n, nt);

    st.q = std::max<long long>(p.mass_granularity, n);
    st.balls.assign(n, 1);
    for (long long b = n; b < st.q; ++b) st.balls[pick(rng, 0, n - 1)]++;

    st.fact_syms = p.fact_names;
    st.event_syms = p.event_names;
    std::set<std::string> fact_taken(st.fact_syms.begin(), st.fact_syms.end());
    std::set<std::string> event_taken(st.event_syms.begin(), st.event_syms.end());
    int fcount = 0, ecount = 0;
    while (static_cast<int>(st.fact_syms.size()) <
           std::min<int>(p.max_facts, static_cast<int>(st.fact_syms.size()) +
                                          pick(rng, 0, p.max_facts))) {
        st.fact_syms.push_back(fresh_name("f", fcount, fact_taken));
    }
    while (static_cast<int>(st.event_syms.size()) <
           std::min<int>(p.max_events, static_cast<int>(st.event_syms.size()) +
                                           pick(rng, 0, p.max_events))) {
        st.event_syms.push_back(fresh_name("e", ecount, event_taken));
    }

    auto add_blocks = [&](bool event, int sym) {
        int nb = pick(rng, 1, 2);
        for (int k = 0; k < nb; ++k) {
            int hi = pick(rng, 0, nt - 1);
            int lo = pick(rng, 0, hi);
            st.blocks.push_back({event, sym, lo, hi, pick(rng, 0, n - 1)});
        }
    };
    for (int s = 0; s < static_cast<int>(st.fact_syms.size()); ++s) {
        add_blocks(false, s);
    }
    for (int s = 0; s < static_cast<int>(st.event_syms.size()); ++s) {
        add_blocks(true, s);
    }

    return st;
}

}  // namespace

Model generate_model(const GenParams& p) {
    Rng rng(p.seed);
    return realize(random_state(rng, p));
}

namespace {

// ---- formula sampling ----------------------------------------------------

struct Sampler {
    Rng rng;
    const Model& m;
    std::vector<std::string> times;
    std::vector<std::string> facts, events;
    std::map<Rational, std::string> sym_of_time;

    explicit Sampler(const Model& model, std::uint64_t seed)
        : rng(seed), m(model) {
        for (const auto& [sym, t] : m.time_syms) {
            times.push_back(sym);
            sym_of_time.emplace(t, sym);
        }
        for (const auto& [sym, ex] : m.facts) {
            (void)ex;
            facts.push_back(sym);
        }
        for (const auto& [sym, ex] : m.events) {
            (void)ex;
            events.push_back(sym);
        }
        if (times.empty()) {
            throw EvalError("formula sampling needs named times in the model");
        }
    }

    const std::string& time() { return times[pick(rng, 0, static_cast<int>(times.size()) - 1)]; }

    Cmp cmp() {
        switch (pick(rng, 0, 4)) {
            case 0: return Cmp::Ge;
            case 1: return Cmp::Le;
            case 2: return Cmp::Eq;
            case 3: return Cmp::Gt;
            default: return Cmp::Lt;
        }
    }

    // A HOLDS/OCC atom, biased toward extents the model actually contains so
    // sampled formulas are not vacuously false.
    Formula extent_atom(bool event) {
        const auto& names = event ? events : facts;
        const auto& table = event ? m.events : m.facts;
        const std::string& sym = names[pick(rng, 0, static_cast<int>(names.size()) - 1)];
        const ExtentSet& set = table.at(sym);
        if (!set.empty() && chance(rng, 3, 5)) {
            int idx = pick(rng, 0, static_cast<int>(set.size()) - 1);
            auto it = set.begin();
            std::advance(it, idx);
            auto lo = sym_of_time.find(it->lo);
            auto hi = sym_of_time.find(it->hi);
            if (lo != sym_of_time.end() && hi != sym_of_time.end()) {
                return event ? Formula::occ(lo->second, hi->second, sym)
                             : Formula::holds(lo->second, hi->second, sym);
            }
        }
        const std::string& a = time();
        const std::string& b = time();
        return event ? Formula::occ(a, b, sym) : Formula::holds(a, b, sym);
    }

    Formula time_atom() {
        const std::string& a = time();
        const std::string& b = time();
        switch (pick(rng, 0, 2)) {
            case 0: return Formula::time_eq(a, b);
            case 1: return Formula::time_le(a, b);
            default: return Formula::time_lt(a, b);
        }
    }

    Formula flat_atom() {
        int options = 1 + (facts.empty() ? 0 : 1) + (events.empty() ? 0 : 1);
        int c = pick(rng, 0, options - 1);
        if (c == 1 && !facts.empty()) return extent_atom(false);
        if (c >= 1) {
            if (!events.empty()) return extent_atom(true);
            return extent_atom(false);
        }
        return time_atom();
    }

    Formula prob_atom() {
        std::string t = time();
        switch (pick(rng, 0, 3)) {
            case 0: {  // P[t](a) cmp c
                Polynomial poly{{Rational(1), {flat_atom()}}};
                Rational c(pick(rng, 0, 10), 10);
                if (c != Rational(0)) poly.push_back({-c, {}});
                return Formula::prob_cmp(t, std::move(poly), cmp());
            }
            case 1:  // P[t](a) cmp P[t](b)
                return Formula::prob_cmp(
                    t, {{Rational(1), {flat_atom()}}, {Rational(-1), {flat_atom()}}},
                    cmp());
            case 2:  // product form: P[t](a)*P[t](b) cmp P[t](c)
                return Formula::prob_cmp(
                    t,
                    {{Rational(1), {flat_atom(), flat_atom()}},
                     {Rational(-1), {flat_atom()}}},
                    cmp());
            default: {  // conditional sugar
                Rational c(pick(rng, 0, 9), 9);
                return Formula::cond_prob_cmp(t, flat_atom(), flat_atom(),
                                              cmp(), c);
            }
        }
    }

    Formula gen(int depth) {
        if (depth <= 0 || chance(rng, 1, 4)) {
            return chance(rng, 1, 4) ? prob_atom() : flat_atom();
        }
        switch (pick(rng, 0, 6)) {
            case 0: return Formula::negate(gen(depth - 1));
            case 1: return Formula::conj(gen(depth - 1), gen(depth - 1));
            case 2: return Formula::disj(gen(depth - 1), gen(depth - 1));
            case 3: return Formula::implies(gen(depth - 1), gen(depth - 1));
            case 4: return Formula::inev(time(), gen(depth - 1));
            case 5: return Formula::poss(time(), gen(depth - 1));
            default: {
                Polynomial poly{{Rational(1), {gen(depth - 1)}}};
                Rational c(pick(rng, 0, 10), 10);
                if (c != Rational(0)) poly.push_back({-c, {}});
                return Formula::prob_cmp(time(), std::move(poly), cmp());
            }
        }
    }
};

}  // namespace

Formula sample_formula(const Model& m, std::uint64_t seed, int depth) {
    Sampler s(m, seed);
    return s.gen(depth);
}

namespace {

// ---- bounded satisfiability search ---------------------------------------

void split_conjuncts(const Formula& f, std::vector<Formula>& out) {
    if (f.kind() == FormulaKind::And) {
        split_conjuncts(f.child(0), out);
        split_conjuncts(f.child(1), out);
    } else {
        out.push_back(f);
    }
}

// The time-symbol intervals each fact or event is mentioned with.  Blocks
// matching these intervals are what HOLDS/OCC atoms actually test, so the
// search proposes them often instead of waiting for uniform choice to land
// there.
using IntervalHints =
    std::map<std::string, std::vector<std::pair<std::string, std::string>>>;

void collect_hints(const Formula& f, IntervalHints& facts,
                   IntervalHints& events) {
    switch (f.kind()) {
        case FormulaKind::Holds:
            facts[f.symbol()].push_back({f.time1(), f.time2()});
            return;
        case FormulaKind::Occ:
            events[f.symbol()].push_back({f.time1(), f.time2()});
            return;
        case FormulaKind::ProbCmp:
            for (const Monomial& mo : f.poly()) {
                for (const Formula& factor : mo.factors) {
                    collect_hints(factor, facts, events);
                }
            }
            return;
        default:
            for (std::size_t i = 0; i < f.arity(); ++i) {
                collect_hints(f.child(i), facts, events);
            }
            return;
    }
}

// Points a block at one of the intervals the formula mentions for its
// symbol, when the bound time names are currently on the grid in order.
bool apply_hint(Rng& rng, const GenState& st, const IntervalHints& hints,
                Block& b) {
    const auto& syms = b.event ? st.event_syms : st.fact_syms;
    auto it = hints.find(syms[b.sym]);
    if (it == hints.end() || it->second.empty()) return false;
    const auto& [lo_name, hi_name] =
        it->second[static_cast<std::size_t>(
            pick(rng, 0, static_cast<int>(it->second.size()) - 1))];
    int lo = -1, hi = -1;
    for (int i = 0; i < static_cast<int>(st.names.size()); ++i) {
        if (st.names[i] == lo_name) lo = i;
        if (st.names[i] == hi_name) hi = i;
    }
    if (lo < 0 || hi < 0 || lo > hi) return false;
    b.lo = lo;
    b.hi = hi;
    return true;
}

double poly_value(const Model& m, int w, const Formula& core) {
    int ti = m.time_index(m.denote(core.time1()));
    double value = 0.0;
    for (const Monomial& mo : core.poly()) {
        double term = mo.coef.to_double();
        for (const Formula& factor : mo.factors) {
            Rational p;
            for (int v = 0; v < static_cast<int>(m.worlds.size()); ++v) {
                if (m.rel[ti][w][v] && eval_formula(m, v, factor)) {
                    p += m.pr[ti][w].at(v);
                }
            }
            term *= p.to_double();
        }
        value += term;
    }
    return value;
}

struct Score {
    int sat = -1;
    double penalty = 0.0;

    bool operator>=(const Score& o) const {
        if (sat != o.sat) return sat > o.sat;
        return penalty <= o.penalty;
    }
};

// Best (satisfied count, violation distance) over all worlds of the model.
std::pair<Score, int> score_model(const Model& m,
                                  const std::vector<Formula>& conjuncts) {
    Score best;
    int best_world = 0;
    for (int w = 0; w < static_cast<int>(m.worlds.size()); ++w) {
        Score s;
        s.sat = 0;
        for (const Formula& c : conjuncts) {
            if (eval_formula(m, w, c)) {
                ++s.sat;
                continue;
            }
            Formula core = desugar(c);
            s.penalty += core.kind() == FormulaKind::ProbCmp
                             ? std::abs(poly_value(m, w, core))
                             : 1.0;
        }
        if (s >= best) {
            best = s;
            best_world = w;
        }
    }
    return {best, best_world};
}

void mutate(Rng& rng, GenState& st, const IntervalHints& fact_hints,
            const IntervalHints& event_hints) {
    const int n = static_cast<int>(st.worlds.size());
    const int nt = static_cast<int>(st.grid.size());
    // Mass moves are the fine adjustment and get extra weight; the
    // structural moves reshape in bigger jumps.
    int roll = pick(rng, 0, 8);
    switch (roll < 4 ? roll / 3 : roll - 2) {
        case 0: {  // move one ball of mass between worlds
            if (n < 2) return;
            int from = pick(rng, 0, n - 1);
            if (st.balls[from] <= 1) return;
            int to = pick(rng, 0, n - 1);
            if (to == from) return;
            st.balls[from]--;
            st.balls[to]++;
            return;
        }
        case 1: {  // swap the masses of two worlds
            if (n < 2) return;
            int a = pick(rng, 0, n - 1);
            int b = pick(rng, 0, n - 1);
            std::swap(st.balls[a], st.balls[b]);
            return;
        }
        case 2: {  // toggle structure: drop or add a block
            if (!st.blocks.empty() && chance(rng, 1, 2)) {
                st.blocks.erase(st.blocks.begin() +
                                pick(rng, 0, static_cast<int>(st.blocks.size()) - 1));
                return;
            }
            bool has_fact = !st.fact_syms.empty();
            bool has_event = !st.event_syms.empty();
            if (!has_fact && !has_event) return;
            bool event = has_event && (!has_fact || chance(rng, 1, 2));
            const auto& syms = event ? st.event_syms : st.fact_syms;
            int hi = pick(rng, 0, nt - 1);
            Block b{event, pick(rng, 0, static_cast<int>(syms.size()) - 1),
                    pick(rng, 0, hi), hi, pick(rng, 0, n - 1)};
            if (chance(rng, 1, 2)) {
                apply_hint(rng, st, event ? event_hints : fact_hints, b);
            }
            st.blocks.push_back(b);
            return;
        }
        case 3: {  // nudge one block
            if (st.blocks.empty()) return;
            Block& b = st.blocks[pick(rng, 0, static_cast<int>(st.blocks.size()) - 1)];
            b.hi = pick(rng, 0, nt - 1);
            b.lo = pick(rng, 0, b.hi);
            b.anchor = pick(rng, 0, n - 1);
            if (chance(rng, 1, 2)) {
                apply_hint(rng, st, b.event ? event_hints : fact_hints, b);
            }
            return;
        }
        case 4: {  // swap which grid points two time symbols denote
            if (nt < 2) return;
            int a = pick(rng, 0, nt - 1);
            int b = pick(rng, 0, nt - 1);
            std::swap(st.names[a], st.names[b]);
            return;
        }
        case 5:  // merge the earliest partition into one class; probabilities
                 // there then condition on the whole space, which ball moves
                 // can steer to exact targets
            std::fill(st.cls[0].begin(), st.cls[0].end(), 0);
            return;
        default:  // re-branch the accessibility tree
            st.cls = partition_chain(rng, n, nt);
            return;
    }
}

}  // namespace

SatResult bounded_sat(const Formula& f, const SatParams& p) {
    std::vector<Formula> conjuncts;
    split_conjuncts(f, conjuncts);

    std::set<std::string> fact_set, event_set;
    atom_symbols(f, fact_set, event_set);

    GenParams base = p.gen;
    base.fact_names.assign(fact_set.begin(), fact_set.end());
    base.event_names.assign(event_set.begin(), event_set.end());
    base.max_facts = std::max<int>(base.max_facts, static_cast<int>(fact_set.size()));
    base.max_events = std::max<int>(base.max_events, static_cast<int>(event_set.size()));
    std::vector<std::string> formula_times = time_symbols_ordered(f);

    IntervalHints fact_hints, event_hints;
    collect_hints(f, fact_hints, event_hints);

    Rng master(p.gen.seed);
    SatResult result;

    auto accept = [&](const Model& m, int w) {
        if (!check_constraints(m).clean()) return false;
        if (!eval_formula(m, w, f)) return false;
        result.found = true;
        result.model = m;
        result.world = m.worlds[w];
        return true;
    };

    const int steps_per_restart = 120;
    while (result.tried < p.budget) {
        GenParams gp = base;
        gp.seed = master();
        Rng rng(gp.seed);

        // Half the restarts bind the formula's time symbols to grid points
        // in ascending first-appearance order (the common shape of
        // premises); the rest scatter them.
        gp.time_names = formula_times;
        if (!chance(rng, 1, 2)) shuffle_vec(rng, gp.time_names);

        GenState st = random_state(rng, gp);
        for (Block& b : st.blocks) {
            if (chance(rng, 1, 2)) {
                apply_hint(rng, st, b.event ? event_hints : fact_hints, b);
            }
        }
        if (chance(rng, 1, 2)) {
            std::fill(st.cls[0].begin(), st.cls[0].end(), 0);
        }
        Model m = realize(st);
        ++result.tried;
        auto [score, world] = score_model(m, conjuncts);
        if (score.sat == static_cast<int>(conjuncts.size()) && accept(m, world)) {
            return result;
        }

        for (int step = 0; step < steps_per_restart && result.tried < p.budget;
             ++step) {
            GenState trial = st;
            mutate(rng, trial, fact_hints, event_hints);
            Model m2 = realize(trial);
            ++result.tried;
            auto [s2, w2] = score_model(m2, conjuncts);
            if (s2.sat == static_cast<int>(conjuncts.size()) && accept(m2, w2)) {
                return result;
            }
            if (s2 >= score) {
                st = std::move(trial);
                score = s2;
            }
        }
    }
    return result;
}

}  // namespace tempra
