// Copyright 2026 The secnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "secnet/error.hpp"
#include "secnet/game.hpp"
#include "secnet/graph.hpp"
#include "secnet/rational.hpp"
#include "secnet/solve.hpp"

namespace secnet {

using Json = nlohmann::ordered_json;

struct Scenario {
  std::string name;
  int n1 = 0;
  int n2 = 0;
  CostProfile costs;
  SolveMode mode = SolveMode::Auto;
  SearchOptions search;
};

namespace detail {

inline Rational json_rational(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number()) return parse_rational(v.dump());
  throw InvalidArgument(std::string("'") + key + "' must be a rational string or a number");
}

inline int json_int(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw InvalidArgument(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace detail

inline Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("scenario must be a JSON object");
  static const std::set<std::string> known{"name", "description", "n1", "n2", "c1", "c2",
                                           "c12", "c21", "cA", "mode", "cap"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw InvalidArgument("unknown scenario key '" + key + "'");
  for (const char* key : {"n1", "n2", "c1", "c2", "c12", "c21", "cA"})
    if (!j.contains(key)) throw InvalidArgument(std::string("scenario is missing '") + key + "'");

  Scenario s;
  if (j.contains("name")) s.name = j.at("name").get<std::string>();
  s.n1 = detail::json_int(j, "n1");
  s.n2 = detail::json_int(j, "n2");
  if (s.n1 < 1 || s.n2 < 1) throw InvalidArgument("n1 and n2 must be at least 1");
  s.costs.c1 = detail::json_rational(j, "c1");
  s.costs.c2 = detail::json_rational(j, "c2");
  s.costs.c12 = detail::json_rational(j, "c12");
  s.costs.c21 = detail::json_rational(j, "c21");
  s.costs.cA = detail::json_rational(j, "cA");
  s.costs.validate();
  if (j.contains("mode")) s.mode = parse_solve_mode(j.at("mode").get<std::string>());
  if (j.contains("cap")) {
    const Json& cap = j.at("cap");
    if (!cap.is_number_integer() || cap.get<std::int64_t>() <= 0)
      throw InvalidArgument("'cap' must be a positive integer");
    s.search.cap = cap.get<std::uint64_t>();
  }
  return s;
}

inline Json scenario_to_json(const Scenario& s) {
  Json j;
  if (!s.name.empty()) j["name"] = s.name;
  j["n1"] = s.n1;
  j["n2"] = s.n2;
  j["c1"] = to_string(s.costs.c1);
  j["c2"] = to_string(s.costs.c2);
  j["c12"] = to_string(s.costs.c12);
  j["c21"] = to_string(s.costs.c21);
  j["cA"] = to_string(s.costs.cA);
  j["mode"] = to_string(s.mode);
  j["cap"] = s.search.cap;
  return j;
}

inline Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(what + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
  if (!out) throw InvalidArgument("failed writing '" + path + "'");
}

inline Scenario load_scenario(const std::string& path) {
  try {
    return scenario_from_json(parse_json_text(read_file(path), path));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

inline Json graph_to_json(const LayeredGraph& g) {
  Json j;
  j["n1"] = g.n1();
  j["n2"] = g.n2();
  Json edges = Json::array();
  for (const Edge& e : g.edges())
    edges.push_back({{"u", e.u}, {"v", e.v}, {"owner", e.owner == Owner::Operator1 ? 1 : 2}});
  j["edges"] = std::move(edges);
  return j;
}

inline LayeredGraph graph_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("edges") || !j.at("edges").is_array())
      throw InvalidArgument("graph must be an object with n1, n2 and an edges array");
    LayeredGraph g(detail::json_int(j, "n1"), detail::json_int(j, "n2"));
    for (const Json& e : j.at("edges")) {
      int owner = detail::json_int(e, "owner");
      if (owner != 1 && owner != 2) throw InvalidArgument("edge owner must be 1 or 2");
      g.add_edge(detail::json_int(e, "u"), detail::json_int(e, "v"),
                 owner == 1 ? Owner::Operator1 : Owner::Operator2);
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed graph: ") + e.what());
  }
}

inline LayeredGraph load_graph(const std::string& path) {
  return graph_from_json(parse_json_text(read_file(path), path));
}

// Operator-1 links bold, operator-2 links plain, attacked links dashed.
inline std::string to_dot(const LayeredGraph& g, const std::vector<Edge>& attacked = {}) {
  std::ostringstream out;
  out << "graph secnet {\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (int layer = 0; layer < 2; ++layer) {
    const int begin = layer == 0 ? 0 : g.n1();
    const int end = layer == 0 ? g.n1() : g.node_count();
    out << "  subgraph cluster_layer" << layer + 1 << " {\n";
    out << "    label=\"layer " << layer + 1 << "\";\n";
    for (NodeId v = begin; v < end; ++v) out << "    n" << v << " [label=\"" << v - begin + 1 << "\"];\n";
    out << "  }\n";
  }
  for (const Edge& e : g.edges()) {
    bool hit = false;
    for (const Edge& a : attacked) hit = hit || a.same_link(e);
    std::string style = e.owner == Owner::Operator1 ? "bold" : "solid";
    if (hit) style += ",dashed";
    out << "  n" << e.u << " -- n" << e.v << " [style=\"" << style << "\"";
    if (e.owner == Owner::Operator1) out << ", penwidth=2.5";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace secnet
