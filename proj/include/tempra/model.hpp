#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tempra/rational.hpp"

namespace tempra {

// One dated token: symbol A holds/occurs over [lo, hi] in the given world.
struct Extent {
    Rational lo, hi;
    int world;
    auto operator<=>(const Extent&) const = default;
};
using ExtentSet = std::set<Extent>;

// World index -> mass.  Zero masses are dropped on normalization so equal
// distributions compare equal regardless of how they were written.
struct Distribution {
    std::map<int, Rational> mass;

    Rational total() const;
    Rational at(int world) const;
    void normalize();  // erase zero entries
    bool operator==(const Distribution&) const = default;
};

struct Violation {
    int constraint;  // 1..6
    std::string message;
    std::vector<std::pair<std::string, std::string>> witness;
};

struct ViolationReport {
    std::vector<Violation> entries;
    bool clean() const { return entries.empty(); }
    std::string to_text() const;
};

struct BuildError : std::runtime_error {
    ViolationReport report;  // nonempty when the description violates C1..C6
    explicit BuildError(const std::string& msg, ViolationReport rep = {})
        : std::runtime_error(msg), report(std::move(rep)) {}
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite branching-time chance model.  Fields are public: tests build
// mutants by direct surgery, and build_model() is the validating entry
// point for everything user-facing.
struct Model {
    std::vector<std::string> worlds;               // unique, order defines indices
    std::vector<Rational> grid;                    // time points, ascending, unique
    std::map<std::string, Rational> time_syms;     // denotation of time symbols
    std::map<std::string, ExtentSet> facts;
    std::map<std::string, ExtentSet> events;
    // rel[t][w1][w2]: w2 accessible from w1 at grid[t].  Built from
    // partitions, so an untouched model is an equivalence at each time.
    std::vector<std::vector<std::vector<bool>>> rel;
    std::vector<std::vector<Distribution>> pr;     // pr[t][w]

    int world_index(std::string_view name) const;    // throws EvalError
    int time_index(const Rational& t) const;         // throws EvalError
    bool has_time(const Rational& t) const;
    Rational denote(const std::string& time_symbol) const;  // throws EvalError

    std::vector<int> class_of(int ti, int w) const;  // rel row as index list
    bool fact_at(const std::string& sym, const Rational& lo, const Rational& hi,
                 int w) const;
    bool event_at(const std::string& sym, const Rational& lo, const Rational& hi,
                  int w) const;
};

// The R-class of w at time t (by the stored relation, whatever it is).
std::vector<std::string> accessible(const Model& m, const Rational& t,
                                    const std::string& world);

// Coarsest partition chain compatible with the agreement constraint: two
// worlds share a class at t exactly when their extents ending at or before t
// coincide.  Returns one class id per world for each grid time.
std::vector<std::vector<int>> derive_canonical_r(const Model& m);

struct RawExtent {
    std::string world;
    Rational lo, hi;
};

struct RawDist {
    std::vector<std::string> members;
    std::map<std::string, Rational> mass;
};

// Parsed model file, before cross-validation.
struct ModelDescription {
    std::vector<std::string> worlds;
    std::map<std::string, Rational> times;
    std::map<std::string, std::vector<RawExtent>> facts;
    std::map<std::string, std::vector<RawExtent>> events;
    bool derived_r = false;
    std::map<Rational, std::vector<std::vector<std::string>>> r_classes;
    std::map<Rational, std::vector<RawDist>> prob;
};

// Validates and assembles.  Reference errors (unknown world, bad interval,
// masses not summing to one, partition mismatches) throw BuildError with an
// empty report; a description that assembles but violates C1..C6 throws
// BuildError carrying the violation report.
Model build_model(const ModelDescription& d);

}  // namespace tempra
