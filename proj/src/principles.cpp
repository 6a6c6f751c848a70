#include "tempra/principles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "tempra/modelgen.hpp"
#include "tempra/semantics.hpp"

namespace tempra {

namespace {

const char* kNames[] = {
    "past-determined",
    "inevitable-certain",
    "inevitability-persists",
    "detachment",
    "miller",
};

// P[t](f) cmp bound, as the polynomial P[t](f) - bound cmp 0.
Formula pterm_cmp(const std::string& t, const Formula& f, Cmp cmp,
                  const Rational& bound) {
    Polynomial poly{{Rational(1), {f}}};
    if (bound != Rational(0)) poly.push_back({-bound, {}});
    return Formula::prob_cmp(t, std::move(poly), cmp);
}

}  // namespace

Schema schema_from_name(const std::string& name) {
    for (std::size_t i = 0; i < std::size(kNames); ++i) {
        if (name == kNames[i]) return static_cast<Schema>(i);
    }
    throw std::invalid_argument("unknown schema \"" + name + "\"");
}

std::string schema_name(Schema s) { return kNames[static_cast<int>(s)]; }

const std::vector<Schema>& all_schemas() {
    static const std::vector<Schema> all{
        Schema::PastDetermined, Schema::InevitableCertain,
        Schema::InevitabilityPersists, Schema::Detachment, Schema::Miller};
    return all;
}

SchemaInstance SchemaInstance::past_determined(Formula atom, std::string t2) {
    if (atom.kind() != FormulaKind::Holds && atom.kind() != FormulaKind::Occ) {
        throw std::invalid_argument(
            "past-determined takes a HOLDS or OCC atom");
    }
    std::string t1 = atom.time2();
    return {Schema::PastDetermined, std::move(t1), std::move(t2),
            std::move(atom), Formula::time_eq("", ""), Rational(0)};
}

SchemaInstance SchemaInstance::inevitable_certain(std::string t, Formula phi) {
    return {Schema::InevitableCertain, std::move(t), "", std::move(phi),
            Formula::time_eq("", ""), Rational(0)};
}

SchemaInstance SchemaInstance::inevitability_persists(std::string t1,
                                                      std::string t2,
                                                      Formula phi) {
    return {Schema::InevitabilityPersists, std::move(t1), std::move(t2),
            std::move(phi), Formula::time_eq("", ""), Rational(0)};
}

SchemaInstance SchemaInstance::detachment(std::string t, Formula phi,
                                          Formula psi) {
    return {Schema::Detachment, std::move(t), "", std::move(phi),
            std::move(psi), Rational(0)};
}

SchemaInstance SchemaInstance::miller(std::string t1, std::string t2,
                                      Formula phi, Rational alpha) {
    if (alpha < Rational(0) || alpha > Rational(1)) {
        throw std::invalid_argument("miller threshold must lie in [0,1]");
    }
    return {Schema::Miller, std::move(t1), std::move(t2), std::move(phi),
            Formula::time_eq("", ""), std::move(alpha)};
}

Formula SchemaInstance::instantiate() const {
    switch (schema) {
        case Schema::PastDetermined:
            return Formula::implies(
                Formula::time_le(t1, t2),
                Formula::disj(pterm_cmp(t2, phi, Cmp::Eq, Rational(0)),
                              pterm_cmp(t2, phi, Cmp::Eq, Rational(1))));
        case Schema::InevitableCertain:
            return Formula::implies(Formula::inev(t1, phi),
                                    pterm_cmp(t1, phi, Cmp::Eq, Rational(1)));
        case Schema::InevitabilityPersists:
            return Formula::implies(
                Formula::time_le(t1, t2),
                Formula::implies(Formula::inev(t1, phi),
                                 Formula::inev(t2, phi)));
        case Schema::Detachment:
            // P[t](psi) - P[t](phi) >= 0; the entailment guard lives in
            // check_schema.
            return Formula::prob_cmp(
                t1, {{Rational(1), {psi}}, {Rational(-1), {phi}}}, Cmp::Ge);
        case Schema::Miller: {
            // P[t2](phi) >= alpha, the future-chance threshold.
            Formula threshold = pterm_cmp(t2, phi, Cmp::Ge, alpha);
            Polynomial poly{{Rational(1), {Formula::conj(phi, threshold)}}};
            if (alpha != Rational(0)) poly.push_back({-alpha, {threshold}});
            return Formula::implies(Formula::time_le(t1, t2),
                                    Formula::prob_cmp(t1, poly, Cmp::Ge));
        }
    }
    throw std::logic_error("unreachable schema kind");
}

std::optional<std::string> check_schema(const Model& m,
                                        const SchemaInstance& inst) {
    if (inst.schema == Schema::Detachment &&
        !entails_in_model(m, inst.phi, inst.psi)) {
        return std::nullopt;
    }
    Formula sentence = inst.instantiate();
    for (int w = 0; w < static_cast<int>(m.worlds.size()); ++w) {
        if (!eval_formula(m, w, sentence)) return m.worlds[w];
    }
    return std::nullopt;
}

Rational expected_future_probability(const Model& m, const Rational& t,
                                     const Rational& t2, int world,
                                     const Formula& f) {
    if (t > t2) throw EvalError("expectation time runs backwards");
    int ti = m.time_index(t);
    int t2i = m.time_index(t2);
    const int n = static_cast<int>(m.worlds.size());

    Rational sum;
    std::vector<bool> grouped(n, false);
    for (int v = 0; v < n; ++v) {
        if (!m.rel[ti][world][v] || grouped[v]) continue;
        // v's class at t2, weighed by the standpoint measure.
        Rational weight;
        for (int u = 0; u < n; ++u) {
            if (m.rel[ti][world][u] && m.rel[t2i][v][u]) {
                grouped[u] = true;
                weight += m.pr[ti][world].at(u);
            }
        }
        sum += weight * probability(m, t2, v, f);
    }
    return sum;
}

Rational expected_future_probability(const Model& m, const Rational& t,
                                     const Rational& t2,
                                     const std::string& world,
                                     const Formula& f) {
    return expected_future_probability(m, t, t2, m.world_index(world), f);
}

std::vector<Rational> alpha_grid() {
    std::vector<Rational> grid;
    for (int k = 0; k <= 9; ++k) grid.push_back(Rational(k, 9));
    return grid;
}

namespace {

// The model's named times in grid order, and the extent atoms whose interval
// endpoints carry names (the only ones expressible as formulas).
std::vector<std::string> named_times(const Model& m) {
    std::vector<std::pair<Rational, std::string>> by_value;
    for (const auto& [sym, val] : m.time_syms) by_value.emplace_back(val, sym);
    std::sort(by_value.begin(), by_value.end());
    std::vector<std::string> out;
    for (auto& [val, sym] : by_value) out.push_back(std::move(sym));
    return out;
}

std::vector<Formula> extent_atoms(const Model& m) {
    std::map<Rational, std::string> name_of;
    for (const auto& [sym, val] : m.time_syms) {
        name_of.emplace(val, sym);  // keeps the alphabetically first name
    }
    std::vector<Formula> atoms;
    auto add = [&](const std::map<std::string, ExtentSet>& table, bool event) {
        for (const auto& [sym, extents] : table) {
            for (const Extent& e : extents) {
                auto lo = name_of.find(e.lo);
                auto hi = name_of.find(e.hi);
                if (lo == name_of.end() || hi == name_of.end()) continue;
                Formula atom = event
                                   ? Formula::occ(lo->second, hi->second, sym)
                                   : Formula::holds(lo->second, hi->second, sym);
                if (std::find(atoms.begin(), atoms.end(), atom) == atoms.end()) {
                    atoms.push_back(std::move(atom));
                }
            }
        }
    };
    add(m.facts, false);
    add(m.events, true);
    return atoms;
}

}  // namespace

std::vector<SchemaInstance> sample_instances(const Model& m, Schema s,
                                             std::uint64_t seed, int formulas) {
    std::vector<std::string> times = named_times(m);
    std::vector<Formula> phis;
    for (int k = 0; k < formulas; ++k) {
        Formula f = sample_formula(m, seed + 0x9e3779b97f4a7c15ull * (k + 1), 2);
        if (std::find(phis.begin(), phis.end(), f) == phis.end()) {
            phis.push_back(std::move(f));
        }
    }

    std::vector<SchemaInstance> out;
    switch (s) {
        case Schema::PastDetermined:
            for (const Formula& atom : extent_atoms(m)) {
                for (const std::string& t2 : times) {
                    out.push_back(SchemaInstance::past_determined(atom, t2));
                }
            }
            break;
        case Schema::InevitableCertain:
            for (const Formula& phi : phis) {
                for (const std::string& t : times) {
                    out.push_back(SchemaInstance::inevitable_certain(t, phi));
                }
            }
            break;
        case Schema::InevitabilityPersists:
            for (const Formula& phi : phis) {
                for (std::size_t i = 0; i < times.size(); ++i) {
                    for (std::size_t j = i; j < times.size(); ++j) {
                        out.push_back(SchemaInstance::inevitability_persists(
                            times[i], times[j], phi));
                    }
                }
            }
            break;
        case Schema::Detachment: {
            std::vector<Formula> atoms = extent_atoms(m);
            for (const std::string& t : times) {
                for (const Formula& phi : phis) {
                    for (const Formula& psi : phis) {
                        out.push_back(SchemaInstance::detachment(t, phi, psi));
                    }
                }
                // Interval atoms against each other: the fact-subinterval
                // pairs among these make the family bite (the sampled pairs
                // alone rarely stand in an entailment).
                for (const Formula& phi : atoms) {
                    for (const Formula& psi : atoms) {
                        out.push_back(SchemaInstance::detachment(t, phi, psi));
                    }
                }
            }
            break;
        }
        case Schema::Miller:
            for (const Formula& phi : phis) {
                for (std::size_t i = 0; i < times.size(); ++i) {
                    for (std::size_t j = i; j < times.size(); ++j) {
                        for (const Rational& alpha : alpha_grid()) {
                            out.push_back(SchemaInstance::miller(
                                times[i], times[j], phi, alpha));
                        }
                    }
                }
            }
            break;
    }
    return out;
}

}  // namespace tempra
