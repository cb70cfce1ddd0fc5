#pragma once

// Serialization: the classic polymake POINTS block for vertex sets, and a
// lossless JSON encoding for every exported value. Rationals travel as
// {"num","den"} strings so no precision is lost.

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "composihedra/complex.hpp"
#include "composihedra/hull.hpp"
#include "composihedra/realization.hpp"

namespace ck {

using json = nlohmann::json;

// "POINTS" followed by one homogenized row per vertex: a leading 1, then the
// coordinates, single-space separated, one row per line in the VRep's order.
inline std::string export_polymake(const VRep& v) {
    if (v.points.empty()) throw std::invalid_argument("export_polymake: empty vertex set");
    std::string out = "POINTS\n";
    for (const auto& p : v.points) {
        out += '1';
        for (const auto& c : p) {
            out += ' ';
            out += to_string(c);
        }
        out += '\n';
    }
    return out;
}

inline json rat_to_json(const Rat& r) {
    return json{{"num", to_string(Int(numerator(r)))}, {"den", to_string(Int(denominator(r)))}};
}

inline Rat rat_from_json(const json& j) {
    Int num(j.at("num").get<std::string>());
    Int den(j.at("den").get<std::string>());
    if (den == 0) throw std::invalid_argument("rational with zero denominator in JSON");
    return Rat(num, den);
}

inline json point_to_json(const Point& p) {
    json arr = json::array();
    for (const auto& c : p) arr.push_back(rat_to_json(c));
    return arr;
}

inline Point point_from_json(const json& j) {
    Point p;
    for (const auto& c : j) p.push_back(rat_from_json(c));
    return p;
}

inline std::string sense_to_string(Sense s) {
    switch (s) {
        case Sense::LE: return "<=";
        case Sense::GE: return ">=";
        case Sense::EQ: return "=";
    }
    throw std::logic_error("bad sense");
}

inline Sense sense_from_string(const std::string& s) {
    if (s == "<=") return Sense::LE;
    if (s == ">=") return Sense::GE;
    if (s == "=") return Sense::EQ;
    throw std::invalid_argument("bad sense: " + s);
}

inline json to_json(const VRep& v) {
    json j;
    j["kind"] = "vrep";
    j["dim"] = v.dim;
    json pts = json::array();
    for (const auto& p : v.points) pts.push_back(point_to_json(p));
    j["points"] = std::move(pts);
    json tags = json::array();
    for (const auto& t : v.tags) tags.push_back(to_string(t));
    j["tags"] = std::move(tags);
    return j;
}

inline VRep vrep_from_json(const json& j) {
    VRep v;
    v.dim = j.at("dim").get<int>();
    for (const auto& p : j.at("points")) v.points.push_back(point_from_json(p));
    for (const auto& t : j.at("tags")) v.tags.push_back(parse_painted_tree(t.get<std::string>()));
    return v;
}

inline json to_json(const HRep& h) {
    json j;
    j["kind"] = "hrep";
    j["dim"] = h.dim;
    json facets = json::array();
    for (const auto& f : h.facets) {
        json row;
        row["coeffs"] = point_to_json(f.plane.coeffs);
        row["rhs"] = rat_to_json(f.plane.rhs);
        row["sense"] = sense_to_string(f.plane.sense);
        row["tree"] = to_string(f.tree);
        facets.push_back(std::move(row));
    }
    j["facets"] = std::move(facets);
    return j;
}

inline HRep hrep_from_json(const json& j) {
    HRep h;
    h.dim = j.at("dim").get<int>();
    for (const auto& row : j.at("facets")) {
        Facet f;
        f.plane.coeffs = point_from_json(row.at("coeffs"));
        f.plane.rhs = rat_from_json(row.at("rhs"));
        f.plane.sense = sense_from_string(row.at("sense").get<std::string>());
        f.tree = parse_painted_tree(row.at("tree").get<std::string>());
        h.facets.push_back(std::move(f));
    }
    return h;
}

inline json to_json(const FacePoset& p) {
    json j;
    j["kind"] = "poset";
    j["labels"] = p.labels;
    j["ranks"] = p.ranks;
    json covers = json::array();
    auto up = upper_covers(p);
    for (int i = 0; i < p.size(); ++i)
        for (int k : up[static_cast<std::size_t>(i)]) covers.push_back(json::array({i, k}));
    j["covers"] = std::move(covers);
    j["top"] = p.top ? json(*p.top) : json(nullptr);
    j["bottom"] = p.bottom ? json(*p.bottom) : json(nullptr);
    return j;
}

inline FacePoset poset_from_json(const json& j) {
    FacePoset p;
    p.labels = j.at("labels").get<std::vector<std::string>>();
    p.ranks = j.at("ranks").get<std::vector<int>>();
    int n = p.size();
    p.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) p.leq[i][i] = true;
    for (const auto& c : j.at("covers")) p.leq[c.at(0).get<int>()][c.at(1).get<int>()] = true;
    // transitive closure of the covers
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (p.leq[i][k])
                for (int l = 0; l < n; ++l)
                    if (p.leq[k][l]) p.leq[i][l] = true;
    if (!j.at("top").is_null()) p.top = j.at("top").get<int>();
    if (!j.at("bottom").is_null()) p.bottom = j.at("bottom").get<int>();
    return p;
}

// Outcome of one CLI run: parameters, per-check verdicts, and counters.
// Field names are stable.
struct RunReport {
    std::string command;
    int n = 0;
    std::vector<Int> weights;
    std::optional<Rat> q;
    struct Check {
        std::string name;
        bool pass = false;
        std::string detail;
        friend bool operator==(const Check& a, const Check& b) {
            return a.name == b.name && a.pass == b.pass && a.detail == b.detail;
        }
    };
    std::vector<Check> checks;
    std::vector<std::pair<std::string, std::string>> counts;
    long long elapsed_ms = 0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    friend bool operator==(const RunReport& a, const RunReport& b) {
        return a.command == b.command && a.n == b.n && a.weights == b.weights && a.q == b.q &&
               a.checks == b.checks && a.counts == b.counts && a.elapsed_ms == b.elapsed_ms;
    }
};

inline json to_json(const RunReport& r) {
    json j;
    j["kind"] = "report";
    j["command"] = r.command;
    json params;
    params["n"] = r.n;
    json ws = json::array();
    for (const auto& w : r.weights) ws.push_back(to_string(w));
    params["weights"] = std::move(ws);
    params["q"] = r.q ? json(to_string(*r.q)) : json(nullptr);
    j["params"] = std::move(params);
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = std::move(checks);
    json counts = json::array();
    for (const auto& [k, v] : r.counts) counts.push_back(json{{"name", k}, {"value", v}});
    j["counts"] = std::move(counts);
    j["elapsed_ms"] = r.elapsed_ms;
    j["pass"] = r.all_pass();
    return j;
}

inline RunReport report_from_json(const json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.n = j.at("params").at("n").get<int>();
    for (const auto& w : j.at("params").at("weights"))
        r.weights.push_back(int_from_string(w.get<std::string>()));
    if (!j.at("params").at("q").is_null())
        r.q = rat_from_string(j.at("params").at("q").get<std::string>());
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                            c.at("detail").get<std::string>()});
    for (const auto& c : j.at("counts"))
        r.counts.emplace_back(c.at("name").get<std::string>(), c.at("value").get<std::string>());
    r.elapsed_ms = j.at("elapsed_ms").get<long long>();
    return r;
}

}  // namespace ck
