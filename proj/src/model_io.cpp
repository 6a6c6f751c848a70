#include "tempra/model_io.hpp"

#include <utility>

#include "json.hpp"
#include "tempra/parser.hpp"

namespace tempra {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ParseError(1, 1, msg); }

// nlohmann reports syntax errors as a byte offset; recover line/column.
std::pair<int, int> position_of(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Rational read_rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number()) {
        fail(where + ": write non-integer numbers as strings (\"1/3\", \"0.25\") "
             "so they stay exact");
    }
    if (!j.is_string()) fail(where + ": expected a rational");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(where + ": " + e.what());
    }
}

const json& member(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where + ": missing \"" + key + "\"");
    return *it;
}

std::vector<std::string> read_name_list(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where + ": expected an array of world names");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) fail(where + ": expected an array of world names");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::map<std::string, std::vector<RawExtent>> read_extent_table(
    const json& j, const std::string& where) {
    std::map<std::string, std::vector<RawExtent>> out;
    if (j.is_null()) return out;
    if (!j.is_object()) fail(where + ": expected an object of symbol -> extents");
    for (const auto& [sym, list] : j.items()) {
        if (!list.is_array()) {
            fail(where + "." + sym + ": expected an array of [world, from, to]");
        }
        auto& dest = out[sym];
        for (const auto& e : list) {
            if (!e.is_array() || e.size() != 3 || !e[0].is_string()) {
                fail(where + "." + sym + ": each extent is [world, from, to]");
            }
            dest.push_back({e[0].get<std::string>(),
                            read_rational(e[1], where + "." + sym),
                            read_rational(e[2], where + "." + sym)});
        }
    }
    return out;
}

// Keys of "R" and "prob" are grid times: either a symbol declared under
// "times" or a rational literal.
Rational resolve_time_key(const std::string& key,
                          const std::map<std::string, Rational>& times,
                          const std::string& where) {
    auto it = times.find(key);
    if (it != times.end()) return it->second;
    try {
        return Rational::parse(key);
    } catch (const std::invalid_argument&) {
        fail(where + ": key \"" + key +
             "\" is neither a declared time symbol nor a rational");
    }
}

ModelDescription read_description(const json& root) {
    if (!root.is_object()) fail("model file: expected a JSON object");
    for (const auto& [key, value] : root.items()) {
        (void)value;
        if (key != "worlds" && key != "times" && key != "facts" &&
            key != "events" && key != "R" && key != "prob") {
            fail("model file: unknown key \"" + key + "\"");
        }
    }

    ModelDescription d;
    d.worlds = read_name_list(member(root, "worlds", "model file"), "worlds");

    if (auto it = root.find("times"); it != root.end() && !it->is_null()) {
        if (!it->is_object()) fail("times: expected an object of symbol -> time");
        for (const auto& [sym, val] : it->items()) {
            d.times[sym] = read_rational(val, "times." + sym);
        }
    }

    if (auto it = root.find("facts"); it != root.end()) {
        d.facts = read_extent_table(*it, "facts");
    }
    if (auto it = root.find("events"); it != root.end()) {
        d.events = read_extent_table(*it, "events");
    }

    const json& r = member(root, "R", "model file");
    if (!r.is_object()) fail("R: expected an object with \"mode\"");
    std::string mode = member(r, "mode", "R").is_string()
                           ? r["mode"].get<std::string>()
                           : std::string();
    if (mode == "derived") {
        d.derived_r = true;
        if (r.contains("classes")) {
            fail("R: derived mode does not take explicit classes");
        }
    } else if (mode == "explicit") {
        const json& classes = member(r, "classes", "R");
        if (!classes.is_object()) fail("R.classes: expected time -> partition");
        for (const auto& [key, part] : classes.items()) {
            Rational t = resolve_time_key(key, d.times, "R.classes");
            if (!part.is_array()) {
                fail("R.classes[" + key + "]: expected an array of classes");
            }
            auto& dest = d.r_classes[t];
            for (const auto& cls : part) {
                dest.push_back(read_name_list(cls, "R.classes[" + key + "]"));
            }
        }
    } else {
        fail("R.mode: expected \"explicit\" or \"derived\"");
    }

    const json& prob = member(root, "prob", "model file");
    if (!prob.is_object()) fail("prob: expected time -> distributions");
    for (const auto& [key, dists] : prob.items()) {
        Rational t = resolve_time_key(key, d.times, "prob");
        if (!dists.is_array()) {
            fail("prob[" + key + "]: expected an array of distributions");
        }
        auto& dest = d.prob[t];
        for (const auto& entry : dists) {
            if (!entry.is_object()) {
                fail("prob[" + key + "]: each entry is {class, dist}");
            }
            RawDist rd;
            rd.members = read_name_list(member(entry, "class", "prob[" + key + "]"),
                                        "prob[" + key + "].class");
            const json& mass = member(entry, "dist", "prob[" + key + "]");
            if (!mass.is_object()) {
                fail("prob[" + key + "].dist: expected world -> rational");
            }
            for (const auto& [w, v] : mass.items()) {
                rd.mass[w] = read_rational(v, "prob[" + key + "].dist." + w);
            }
            dest.push_back(std::move(rd));
        }
    }

    return d;
}

}  // namespace

ModelDescription parse_model_description(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(line, col, e.what());
    }
    return read_description(root);
}

Model parse_model(const std::string& text) {
    return build_model(parse_model_description(text));
}

std::string model_to_json(const Model& m, int indent) {
    json root;
    root["worlds"] = m.worlds;

    json times = json::object();
    for (const auto& [sym, t] : m.time_syms) times[sym] = t.str();
    root["times"] = times;

    auto extents = [&](const std::map<std::string, ExtentSet>& table) {
        json out = json::object();
        for (const auto& [sym, set] : table) {
            json list = json::array();
            for (const Extent& e : set) {
                list.push_back({m.worlds[e.world], e.lo.str(), e.hi.str()});
            }
            out[sym] = std::move(list);
        }
        return out;
    };
    root["facts"] = extents(m.facts);
    root["events"] = extents(m.events);

    const int n = static_cast<int>(m.worlds.size());
    json classes = json::object();
    json prob = json::object();
    for (std::size_t ti = 0; ti < m.grid.size(); ++ti) {
        std::string key = m.grid[ti].str();
        json parts = json::array();
        json dists = json::array();
        std::vector<bool> seen(n, false);
        for (int w = 0; w < n; ++w) {
            if (seen[w]) continue;
            json members = json::array();
            json mass = json::object();
            for (int v = 0; v < n; ++v) {
                if (!m.rel[ti][w][v]) continue;
                seen[v] = true;
                members.push_back(m.worlds[v]);
                mass[m.worlds[v]] = m.pr[ti][w].at(v).str();
            }
            parts.push_back(std::move(members));
            dists.push_back({{"class", parts.back()}, {"dist", std::move(mass)}});
        }
        classes[key] = std::move(parts);
        prob[key] = std::move(dists);
    }
    root["R"] = {{"mode", "explicit"}, {"classes", std::move(classes)}};
    root["prob"] = std::move(prob);

    return root.dump(indent);
}

}  // namespace tempra
