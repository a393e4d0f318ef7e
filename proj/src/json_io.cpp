#include "ada/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "ada/errors.hpp"

namespace ada {

using nlohmann::json;

json to_json(const Rat& r) { return json::array({r.num(), r.den()}); }

json to_json(const Eigenvalue& e) {
    return json{{"mod", to_json(e.modulus())}, {"phase", to_json(e.phase())}};
}

json to_json(const YoungDiagram& y) { return json(y.columns()); }

json to_json(const ConjugacyClass& c) {
    json parts = json::array();
    for (const auto& [eig, diagram] : c.parts())
        parts.push_back(json{{"eig", to_json(eig)}, {"cols", to_json(diagram)}});
    return parts;
}

json to_json(const ADAParameter& t) {
    return json{{"m", t.m},
                {"slope", {{"s", t.slope.s}, {"r", t.slope.r}}},
                {"c0", to_json(t.c0)},
                {"cinf", to_json(t.cinf)}};
}

json to_json(const Diagram& d) {
    json vertices = json::array();
    for (const auto& v : d.vertices)
        vertices.push_back(json{{"name", v.name}, {"dim", v.dim}});
    return json{{"vertices", vertices},
                {"B", d.b},
                {"cartan_pairing", cartan_pairing(d)},
                {"dimension", wcv_dimension(d)},
                {"nonnegative", is_nonnegative(d)}};
}

json to_json(const OrbitGraph& g) {
    json nodes = json::array();
    for (const auto& node : g.nodes) nodes.push_back(to_json(node));
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back(json{{"source", e.source}, {"target", e.target}, {"op", e.op.str()}});
    return json{{"nodes", nodes}, {"edges", edges}};
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_array() && j.size() == 2)
        return Rat(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
    throw ParseFailure("expected integer or [num, den], got " + j.dump());
}

Eigenvalue eigenvalue_from_json(const json& j) {
    if (j.is_string()) return Eigenvalue::parse(j.get<std::string>());
    if (j.is_number_integer()) return Eigenvalue(rat_from_json(j), Rat(0));
    if (j.is_object())
        return Eigenvalue(j.contains("mod") ? rat_from_json(j.at("mod")) : Rat(1),
                          j.contains("phase") ? rat_from_json(j.at("phase")) : Rat(0));
    throw ParseFailure("bad eigenvalue " + j.dump());
}

YoungDiagram young_from_json(const json& j) {
    if (j.is_string()) return YoungDiagram::parse(j.get<std::string>());
    if (j.is_array()) return YoungDiagram(j.get<std::vector<int>>());
    throw ParseFailure("expected diagram array or shorthand string, got " + j.dump());
}

ConjugacyClass class_from_json(const json& j) {
    if (!j.is_array()) throw ParseFailure("expected class part list, got " + j.dump());
    std::vector<ConjugacyClass::Part> parts;
    for (const auto& item : j)
        parts.emplace_back(eigenvalue_from_json(item.at("eig")),
                           young_from_json(item.at("cols")));
    return ConjugacyClass(std::move(parts));
}

ADAParameter parameter_from_json(const json& j) {
    ADAParameter t;
    t.m = j.at("m").get<int>();
    const auto& slope = j.at("slope");
    if (slope.is_string()) {
        const std::string text = slope.get<std::string>();
        const auto sep = text.find('/');
        t.slope = sep == std::string::npos
                      ? Slope(std::stoi(text), 1)
                      : Slope(std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 1)));
    } else {
        t.slope = Slope(slope.at("s").get<int>(), slope.at("r").get<int>());
    }
    t.c0 = class_from_json(j.at("c0"));
    if (j.contains("cinf")) t.cinf = class_from_json(j.at("cinf"));
    validate(t);
    return t;
}

ADAParameter load_parameter(const std::string& path) {
    json j;
    try {
        if (path == "-") {
            j = json::parse(std::cin);
        } else {
            std::ifstream in(path);
            if (!in) throw ParseFailure("cannot open '" + path + "'");
            j = json::parse(in);
        }
    } catch (const json::parse_error& e) {
        throw ParseFailure(std::string("invalid JSON: ") + e.what());
    }
    return parameter_from_json(j);
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

} // namespace

std::string to_dot(const Diagram& d) {
    std::ostringstream out;
    out << "graph diagram {\n";
    out << "  node [shape=circle];\n";
    for (const auto& v : d.vertices)
        out << "  " << quoted(v.name) << " [label=" << quoted(v.name + ":" + std::to_string(v.dim))
            << "];\n";
    const std::size_t n = d.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (d.b[i][i] != 0)
            out << "  " << quoted(d.vertices[i].name) << " -- " << quoted(d.vertices[i].name)
                << " [label=" << quoted("loops=" + std::to_string(d.b[i][i] / 2)) << "];\n";
        for (std::size_t j = i + 1; j < n; ++j)
            if (d.b[i][j] != 0)
                out << "  " << quoted(d.vertices[i].name) << " -- " << quoted(d.vertices[j].name)
                    << " [label=" << quoted("mult=" + std::to_string(d.b[i][j])) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const OrbitGraph& g) {
    std::ostringstream out;
    out << "digraph orbit {\n";
    out << "  node [shape=box];\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const ADAParameter& t = g.nodes[i];
        const std::string label = t.slope.str() + "  0:" + t.c0.str() + "  inf:" + t.cinf.str();
        out << "  n" << i << " [label=" << quoted(label) << "];\n";
    }
    for (const auto& e : g.edges)
        out << "  n" << e.source << " -> n" << e.target << " [label=" << quoted(e.op.str())
            << "];\n";
    out << "}\n";
    return out.str();
}

} // namespace ada
