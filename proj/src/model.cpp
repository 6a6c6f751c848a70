#include "tempra/model.hpp"

#include <algorithm>
#include <sstream>

#include "tempra/constraints.hpp"

namespace tempra {

Rational Distribution::total() const {
    Rational t;
    for (const auto& [w, m] : mass) t += m;
    return t;
}

Rational Distribution::at(int world) const {
    auto it = mass.find(world);
    return it == mass.end() ? Rational(0) : it->second;
}

void Distribution::normalize() {
    for (auto it = mass.begin(); it != mass.end();) {
        it = it->second.is_zero() ? mass.erase(it) : std::next(it);
    }
}

std::string ViolationReport::to_text() const {
    std::ostringstream os;
    for (const Violation& v : entries) {
        os << "C" << v.constraint << ": " << v.message;
        if (!v.witness.empty()) {
            os << " [";
            for (std::size_t i = 0; i < v.witness.size(); ++i) {
                if (i) os << ", ";
                os << v.witness[i].first << "=" << v.witness[i].second;
            }
            os << "]";
        }
        os << "\n";
    }
    return os.str();
}

int Model::world_index(std::string_view name) const {
    for (std::size_t i = 0; i < worlds.size(); ++i) {
        if (worlds[i] == name) return static_cast<int>(i);
    }
    throw EvalError("unknown world '" + std::string(name) + "'");
}

int Model::time_index(const Rational& t) const {
    auto it = std::lower_bound(grid.begin(), grid.end(), t);
    if (it == grid.end() || *it != t) {
        throw EvalError("time " + t.str() + " is not a grid point of the model");
    }
    return static_cast<int>(it - grid.begin());
}

bool Model::has_time(const Rational& t) const {
    return std::binary_search(grid.begin(), grid.end(), t);
}

Rational Model::denote(const std::string& time_symbol) const {
    auto it = time_syms.find(time_symbol);
    if (it == time_syms.end()) {
        throw EvalError("unbound time symbol '" + time_symbol + "'");
    }
    return it->second;
}

std::vector<int> Model::class_of(int ti, int w) const {
    std::vector<int> out;
    const auto& row = rel[ti][w];
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i]) out.push_back(static_cast<int>(i));
    }
    return out;
}

bool Model::fact_at(const std::string& sym, const Rational& lo, const Rational& hi,
                    int w) const {
    auto it = facts.find(sym);
    return it != facts.end() && it->second.count({lo, hi, w}) > 0;
}

bool Model::event_at(const std::string& sym, const Rational& lo, const Rational& hi,
                     int w) const {
    auto it = events.find(sym);
    return it != events.end() && it->second.count({lo, hi, w}) > 0;
}

std::vector<std::string> accessible(const Model& m, const Rational& t,
                                    const std::string& world) {
    int ti = m.time_index(t);
    int w = m.world_index(world);
    std::vector<std::string> out;
    for (int v : m.class_of(ti, w)) out.push_back(m.worlds[v]);
    return out;
}

std::vector<std::vector<int>> derive_canonical_r(const Model& m) {
    int n = static_cast<int>(m.worlds.size());
    std::vector<std::vector<int>> result;
    result.reserve(m.grid.size());
    for (const Rational& t : m.grid) {
        // Signature per world: every extent (of any symbol) ending at or
        // before t.  Worlds with equal signatures share a class.
        std::vector<std::vector<std::tuple<int, std::string, Rational, Rational>>> sig(n);
        int tag = 0;
        for (const auto* table : {&m.facts, &m.events}) {
            for (const auto& [sym, extents] : *table) {
                for (const Extent& e : extents) {
                    if (e.hi <= t) sig[e.world].emplace_back(tag, sym, e.lo, e.hi);
                }
            }
            ++tag;
        }
        for (auto& s : sig) std::sort(s.begin(), s.end());
        std::vector<int> cls(n, -1);
        int next = 0;
        for (int w = 0; w < n; ++w) {
            if (cls[w] >= 0) continue;
            cls[w] = next;
            for (int v = w + 1; v < n; ++v) {
                if (cls[v] < 0 && sig[v] == sig[w]) cls[v] = next;
            }
            ++next;
        }
        result.push_back(std::move(cls));
    }
    return result;
}

namespace {

std::vector<std::vector<std::vector<bool>>> rel_from_partitions(
    const std::vector<std::vector<int>>& parts, int n_worlds) {
    std::vector<std::vector<std::vector<bool>>> rel;
    rel.reserve(parts.size());
    for (const auto& cls : parts) {
        std::vector<std::vector<bool>> mat(n_worlds, std::vector<bool>(n_worlds, false));
        for (int a = 0; a < n_worlds; ++a) {
            for (int b = 0; b < n_worlds; ++b) {
                mat[a][b] = cls[a] == cls[b];
            }
        }
        rel.push_back(std::move(mat));
    }
    return rel;
}

[[noreturn]] void build_fail(const std::string& msg) { throw BuildError(msg); }

}  // namespace

Model build_model(const ModelDescription& d) {
    Model m;

    if (d.worlds.empty()) build_fail("a model needs at least one world");
    std::map<std::string, int> windex;
    for (const auto& w : d.worlds) {
        if (!windex.emplace(w, static_cast<int>(m.worlds.size())).second) {
            build_fail("duplicate world '" + w + "'");
        }
        m.worlds.push_back(w);
    }
    int n = static_cast<int>(m.worlds.size());

    m.time_syms = d.times;

    // The grid is everything any component mentions: named points, extent
    // end points, and the keys of the relation/probability tables.
    std::set<Rational> grid;
    for (const auto& [sym, t] : d.times) grid.insert(t);
    auto load_extents = [&](const std::map<std::string, std::vector<RawExtent>>& src,
                            std::map<std::string, ExtentSet>& dst, const char* what) {
        for (const auto& [sym, list] : src) {
            ExtentSet& set = dst[sym];
            for (const RawExtent& e : list) {
                auto wit = windex.find(e.world);
                if (wit == windex.end()) {
                    build_fail(std::string(what) + " '" + sym + "' names unknown world '" +
                               e.world + "'");
                }
                if (e.hi < e.lo) {
                    build_fail(std::string(what) + " '" + sym + "' has interval (" +
                               e.lo.str() + "," + e.hi.str() + ") with reversed endpoints");
                }
                grid.insert(e.lo);
                grid.insert(e.hi);
                set.insert({e.lo, e.hi, wit->second});
            }
        }
    };
    load_extents(d.facts, m.facts, "fact");
    load_extents(d.events, m.events, "event");
    for (const auto& [t, _] : d.r_classes) grid.insert(t);
    for (const auto& [t, _] : d.prob) grid.insert(t);
    m.grid.assign(grid.begin(), grid.end());
    if (m.grid.empty()) build_fail("a model needs at least one time point");

    if (d.derived_r) {
        if (!d.r_classes.empty()) {
            build_fail("derived accessibility cannot also list explicit classes");
        }
        m.rel = rel_from_partitions(derive_canonical_r(m), n);
    } else {
        std::vector<std::vector<int>> parts;
        for (const Rational& t : m.grid) {
            auto it = d.r_classes.find(t);
            if (it == d.r_classes.end()) {
                build_fail("no accessibility classes given for time " + t.str());
            }
            std::vector<int> cls(n, -1);
            int id = 0;
            for (const auto& group : it->second) {
                for (const auto& wname : group) {
                    auto wit = windex.find(wname);
                    if (wit == windex.end()) {
                        build_fail("accessibility class at time " + t.str() +
                                   " names unknown world '" + wname + "'");
                    }
                    if (cls[wit->second] >= 0) {
                        build_fail("world '" + wname + "' listed twice in classes at time " +
                                   t.str());
                    }
                    cls[wit->second] = id;
                }
                ++id;
            }
            for (int w = 0; w < n; ++w) {
                if (cls[w] < 0) {
                    build_fail("world '" + m.worlds[w] + "' missing from classes at time " +
                               t.str());
                }
            }
            parts.push_back(std::move(cls));
        }
        m.rel = rel_from_partitions(parts, n);
    }

    m.pr.assign(m.grid.size(), std::vector<Distribution>(n));
    std::vector<std::vector<bool>> covered(m.grid.size(), std::vector<bool>(n, false));
    for (const auto& [t, entries] : d.prob) {
        int ti = m.time_index(t);
        for (const RawDist& rd : entries) {
            std::set<int> members;
            for (const auto& wname : rd.members) {
                auto wit = windex.find(wname);
                if (wit == windex.end()) {
                    build_fail("distribution at time " + t.str() + " names unknown world '" +
                               wname + "'");
                }
                members.insert(wit->second);
            }
            if (members.empty()) {
                build_fail("empty distribution class at time " + t.str());
            }
            // The class must be exactly an accessibility class at t.
            int rep = *members.begin();
            std::set<int> rel_class;
            for (int v = 0; v < n; ++v) {
                if (m.rel[ti][rep][v]) rel_class.insert(v);
            }
            if (rel_class != members) {
                build_fail("distribution class at time " + t.str() +
                           " does not match an accessibility class");
            }
            // Mass totals and placement are C5's subject; they pass through
            // here so the final audit can flag them with a witness.
            Distribution dist;
            for (const auto& [wname, mass] : rd.mass) {
                auto wit = windex.find(wname);
                if (wit == windex.end()) {
                    build_fail("distribution at time " + t.str() + " gives mass to unknown world '" +
                               wname + "'");
                }
                if (mass < Rational(0)) {
                    build_fail("negative mass for world '" + wname + "' at time " + t.str());
                }
                dist.mass[wit->second] = mass;
            }
            dist.normalize();
            for (int w : members) {
                if (covered[ti][w]) {
                    build_fail("world '" + m.worlds[w] + "' covered by two distributions at time " +
                               t.str());
                }
                covered[ti][w] = true;
                m.pr[ti][w] = dist;
            }
        }
    }
    for (std::size_t ti = 0; ti < m.grid.size(); ++ti) {
        for (int w = 0; w < n; ++w) {
            if (!covered[ti][w]) {
                build_fail("no distribution for world '" + m.worlds[w] + "' at time " +
                           m.grid[ti].str());
            }
        }
    }

    ViolationReport report = check_constraints(m);
    if (!report.clean()) {
        throw BuildError("model violates constraints:\n" + report.to_text(), report);
    }
    return m;
}

}  // namespace tempra
