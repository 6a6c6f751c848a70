#include "tempra/constraints.hpp"

namespace tempra {

namespace {

using Witness = std::vector<std::pair<std::string, std::string>>;

void add(ViolationReport& rep, int c, std::string msg, Witness wit) {
    rep.entries.push_back({c, std::move(msg), std::move(wit)});
}

}  // namespace

ViolationReport check_constraints(const Model& m, SubintervalRule rule) {
    ViolationReport rep;
    const int n = static_cast<int>(m.worlds.size());
    const int nt = static_cast<int>(m.grid.size());
    auto wname = [&](int w) { return m.worlds[w]; };
    auto tname = [&](int ti) { return m.grid[ti].str(); };

    // C1: pairs related at a later time stay related at every earlier time.
    for (int t2 = 0; t2 < nt; ++t2) {
        for (int t1 = 0; t1 < t2; ++t1) {
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    if (m.rel[t2][a][b] && !m.rel[t1][a][b]) {
                        add(rep, 1,
                            "worlds related at the later time are unrelated at the earlier one",
                            {{"t1", tname(t1)},
                             {"t2", tname(t2)},
                             {"w1", wname(a)},
                             {"w2", wname(b)}});
                    }
                }
            }
        }
    }

    // C2: the relation at each time is a partition, i.e. an equivalence.
    for (int t = 0; t < nt; ++t) {
        for (int a = 0; a < n; ++a) {
            if (!m.rel[t][a][a]) {
                add(rep, 2, "world not related to itself",
                    {{"t", tname(t)}, {"w", wname(a)}});
            }
            for (int b = 0; b < n; ++b) {
                if (m.rel[t][a][b] && !m.rel[t][b][a]) {
                    add(rep, 2, "relation is not symmetric",
                        {{"t", tname(t)}, {"w1", wname(a)}, {"w2", wname(b)}});
                }
                if (!m.rel[t][a][b]) continue;
                for (int c = 0; c < n; ++c) {
                    if (m.rel[t][b][c] && !m.rel[t][a][c]) {
                        add(rep, 2, "relation is not transitive",
                            {{"t", tname(t)},
                             {"w1", wname(a)},
                             {"w2", wname(b)},
                             {"w3", wname(c)}});
                    }
                }
            }
        }
    }

    // C3: a fact token on (t1,t4) forces the grid subintervals (t2,t3).
    // Under the literal rule the side conditions t1 != t3 and t2 != t4
    // exempt exactly the two end-point point-intervals.
    for (const auto& [sym, extents] : m.facts) {
        for (const Extent& e : extents) {
            for (const Rational& a : m.grid) {
                if (a < e.lo || a > e.hi) continue;
                for (const Rational& b : m.grid) {
                    if (b < a || b > e.hi) continue;
                    if (rule == SubintervalRule::Literal &&
                        (b == e.lo || a == e.hi)) {
                        continue;
                    }
                    if (!m.fact_at(sym, a, b, e.world)) {
                        add(rep, 3, "fact misses a subinterval of a held interval",
                            {{"fact", sym},
                             {"t1", e.lo.str()},
                             {"t4", e.hi.str()},
                             {"t2", a.str()},
                             {"t3", b.str()},
                             {"w", wname(e.world)}});
                    }
                }
            }
        }
    }

    // C4: related worlds agree on every extent ending at or before the
    // relation's time.  Checking the extents present in either world covers
    // both directions of the iff.
    for (int t = 0; t < nt; ++t) {
        const Rational& cut = m.grid[t];
        for (const auto* table : {&m.facts, &m.events}) {
            for (const auto& [sym, extents] : *table) {
                for (const Extent& e : extents) {
                    if (e.hi > cut) continue;
                    for (int b = 0; b < n; ++b) {
                        if (!m.rel[t][e.world][b]) continue;
                        if (!table->at(sym).count({e.lo, e.hi, b})) {
                            add(rep, 4,
                                "related worlds disagree on a settled extent",
                                {{"t", tname(t)},
                                 {"w1", wname(e.world)},
                                 {"w2", wname(b)},
                                 {"symbol", sym},
                                 {"from", e.lo.str()},
                                 {"to", e.hi.str()}});
                        }
                    }
                }
            }
        }
    }

    // C5: each distribution concentrates on the world's own class.
    for (int t = 0; t < nt; ++t) {
        for (int w = 0; w < n; ++w) {
            Rational in_class;
            for (int v = 0; v < n; ++v) {
                if (m.rel[t][w][v]) {
                    in_class += m.pr[t][w].at(v);
                } else if (!m.pr[t][w].at(v).is_zero()) {
                    add(rep, 5, "mass escapes the accessibility class",
                        {{"t", tname(t)}, {"w", wname(w)}, {"onto", wname(v)}});
                }
            }
            if (in_class != Rational(1)) {
                add(rep, 5, "mass on the accessibility class is " + in_class.str() +
                            ", expected 1",
                    {{"t", tname(t)}, {"w", wname(w)}});
            }
        }
    }

    // C6: any two members of one class carry the same distribution.
    for (int t = 0; t < nt; ++t) {
        for (int w = 0; w < n; ++w) {
            for (int a = 0; a < n; ++a) {
                if (!m.rel[t][w][a]) continue;
                for (int b = a + 1; b < n; ++b) {
                    if (!m.rel[t][w][b]) continue;
                    if (!(m.pr[t][a] == m.pr[t][b])) {
                        add(rep, 6, "worlds in one class have different distributions",
                            {{"t", tname(t)}, {"w1", wname(a)}, {"w2", wname(b)}});
                    }
                }
            }
        }
    }

    return rep;
}

}  // namespace tempra
