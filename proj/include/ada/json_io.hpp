#pragma once

#include <string>

#include <json.hpp>

#include "ada/diagrams.hpp"
#include "ada/orbits.hpp"
#include "ada/params.hpp"

namespace ada {

// JSON schemas used by the CLI.
//
// Parameter: {"m": int, "slope": {"s": int, "r": int},
//             "c0": [part, ...], "cinf": [part, ...]}
// Part:      {"eig": {"mod": [num, den], "phase": [num, den]}, "cols": [int, ...]}
// Shorthands accepted on input: "eig" as "1", "-1", "e(a/b)", "p/q*e(a/b)";
// "cols" as a string like "2,1^5"; a diagram anywhere as that string.

nlohmann::json to_json(const Rat& r);
nlohmann::json to_json(const Eigenvalue& e);
nlohmann::json to_json(const YoungDiagram& y);
nlohmann::json to_json(const ConjugacyClass& c);
nlohmann::json to_json(const ADAParameter& t);
nlohmann::json to_json(const Diagram& d);
nlohmann::json to_json(const OrbitGraph& g);

Rat rat_from_json(const nlohmann::json& j);
Eigenvalue eigenvalue_from_json(const nlohmann::json& j);
YoungDiagram young_from_json(const nlohmann::json& j);
ConjugacyClass class_from_json(const nlohmann::json& j);
ADAParameter parameter_from_json(const nlohmann::json& j);

ADAParameter load_parameter(const std::string& path); // "-" reads stdin

// DOT renderings. Diagram vertices are "name:dim" labels, edges carry
// mult=<int>, loops carry loops=<B_ii/2>. Orbit nodes are labeled with the
// slope and the two classes, edges with the operation.
std::string to_dot(const Diagram& d);
std::string to_dot(const OrbitGraph& g);

} // namespace ada
