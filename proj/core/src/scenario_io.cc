// Copyright 2026 The vnfwdm Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vnfwdm/scenario_io.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <fmt/core.h>

#include "vnfwdm/error.h"

namespace vnfwdm {
namespace {

using nlohmann::json;

[[noreturn]] void FieldError(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::kParse, fmt::format("field '{}': {}", path, what));
}

const json& Require(const json& obj, const std::string& key,
                    const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) FieldError(path + "." + key, "missing");
  return *it;
}

void CheckKeys(const json& obj, const std::string& path,
               std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) FieldError(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) FieldError(path + "." + key, "unknown field");
  }
}

double Number(const json& j, const std::string& path) {
  if (!j.is_number()) FieldError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) FieldError(path, "expected a finite number");
  return v;
}

int Integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) FieldError(path, "expected an integer");
  return j.get<int>();
}

// Vertex ids may be written as strings or integers.
std::string Id(const json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  FieldError(path, "expected a string or integer id");
}

int Vertex(const SubstrateNetwork& g, const json& j, const std::string& path) {
  const std::string id = Id(j, path);
  auto v = g.FindVertex(id);
  if (!v) FieldError(path, fmt::format("unknown vertex '{}'", id));
  return *v;
}

int Node(const ForwardingGraph& fg, const json& j, const std::string& path) {
  if (!j.is_string()) FieldError(path, "expected a node name");
  auto n = fg.FindNode(j.get<std::string>());
  if (!n) FieldError(path, fmt::format("unknown node '{}'", j.get<std::string>()));
  return *n;
}

// Arc keys are "tail,head".
int ArcFromKey(const ForwardingGraph& fg, const std::string& key,
               const std::string& path) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) FieldError(path, "arc key must be 'tail,head'");
  auto t = fg.FindNode(key.substr(0, comma));
  auto h = fg.FindNode(key.substr(comma + 1));
  if (!t || !h) FieldError(path, fmt::format("unknown arc '{}'", key));
  auto a = fg.FindArc(*t, *h);
  if (!a) FieldError(path, fmt::format("unknown arc '{}'", key));
  return *a;
}

std::string ArcKey(const ForwardingGraph& fg, int a) {
  return fg.name(fg.arc(a).tail) + "," + fg.name(fg.arc(a).head);
}

SubstrateNetwork ParseSubstrate(const json& j) {
  const std::string path = "substrate";
  CheckKeys(j, path,
            {"vertices", "fibers", "edges", "capacities", "wavelengths", "line_rate"});
  const json& jv = Require(j, "vertices", path);
  if (!jv.is_array()) FieldError(path + ".vertices", "expected an array");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < jv.size(); ++i) {
    ids.push_back(Id(jv[i], fmt::format("{}.vertices[{}]", path, i)));
  }
  auto index_of = [&](const json& x, const std::string& p) {
    const std::string id = Id(x, p);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] == id) return static_cast<int>(i);
    }
    FieldError(p, fmt::format("unknown vertex '{}'", id));
  };
  auto parse_links = [&](const char* key) {
    std::vector<DirectedEdge> links;
    const json& jl = j.at(key);
    if (!jl.is_array()) FieldError(path + "." + key, "expected an array");
    for (std::size_t i = 0; i < jl.size(); ++i) {
      const std::string p = fmt::format("{}.{}[{}]", path, key, i);
      CheckKeys(jl[i], p, {"u", "v", "delay"});
      DirectedEdge e;
      e.tail = index_of(Require(jl[i], "u", p), p + ".u");
      e.head = index_of(Require(jl[i], "v", p), p + ".v");
      e.delay = Number(Require(jl[i], "delay", p), p + ".delay");
      links.push_back(e);
    }
    return links;
  };
  std::vector<DirectedEdge> edges;
  if (j.contains("fibers") && j.contains("edges")) {
    FieldError(path, "give either 'fibers' or 'edges', not both");
  }
  if (j.contains("fibers")) {
    edges = EdgesFromFibers(parse_links("fibers"));
  } else if (j.contains("edges")) {
    edges = parse_links("edges");
  } else {
    FieldError(path + ".fibers", "missing");
  }
  std::vector<double> capacities(ids.size(), 0.0);
  if (j.contains("capacities")) {
    const json& jc = j.at("capacities");
    if (!jc.is_object()) FieldError(path + ".capacities", "expected an object");
    for (const auto& [id, value] : jc.items()) {
      const std::string p = path + ".capacities." + id;
      capacities[index_of(json(id), p)] = Number(value, p);
    }
  }
  const int wavelengths =
      Integer(Require(j, "wavelengths", path), path + ".wavelengths");
  const double line_rate = Number(Require(j, "line_rate", path), path + ".line_rate");
  return SubstrateNetwork(std::move(ids), std::move(edges), std::move(capacities),
                          wavelengths, line_rate);
}

std::vector<PlacementShare> ParseShares(const json& j, const SubstrateNetwork& g,
                                        const ForwardingGraph& fg,
                                        const std::string& path) {
  if (!j.is_array()) FieldError(path, "expected an array");
  std::vector<PlacementShare> shares;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = fmt::format("{}[{}]", path, i);
    CheckKeys(j[i], p, {"node", "vertex", "proportion"});
    PlacementShare s;
    s.node = Node(fg, Require(j[i], "node", p), p + ".node");
    s.vertex = Vertex(g, Require(j[i], "vertex", p), p + ".vertex");
    s.proportion = Number(Require(j[i], "proportion", p), p + ".proportion");
    shares.push_back(s);
  }
  return shares;
}

Request ParseRequest(const json& j, const SubstrateNetwork& g, const std::string& path) {
  CheckKeys(j, path,
            {"nodes", "arcs", "alpha_node", "beta_node", "alpha_arc", "beta_arc",
             "d_max", "initial_rates", "source_restrictions", "dest_restrictions"});
  const json& jn = Require(j, "nodes", path);
  if (!jn.is_array()) FieldError(path + ".nodes", "expected an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < jn.size(); ++i) {
    if (!jn[i].is_string()) {
      FieldError(fmt::format("{}.nodes[{}]", path, i), "expected a string");
    }
    names.push_back(jn[i].get<std::string>());
  }
  const json& ja = Require(j, "arcs", path);
  if (!ja.is_array()) FieldError(path + ".arcs", "expected an array");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < ja.size(); ++i) {
    const std::string p = fmt::format("{}.arcs[{}]", path, i);
    if (!ja[i].is_array() || ja[i].size() != 2 || !ja[i][0].is_string() ||
        !ja[i][1].is_string()) {
      FieldError(p, "expected [tail, head]");
    }
    Arc arc;
    bool found_tail = false, found_head = false;
    for (std::size_t n = 0; n < names.size(); ++n) {
      if (names[n] == ja[i][0].get<std::string>()) arc.tail = static_cast<int>(n), found_tail = true;
      if (names[n] == ja[i][1].get<std::string>()) arc.head = static_cast<int>(n), found_head = true;
    }
    if (!found_tail || !found_head) FieldError(p, "unknown node");
    arcs.push_back(arc);
  }
  Request r;
  r.graph = ForwardingGraph(std::move(names), std::move(arcs));
  ForwardingGraph& fg = r.graph;

  auto node_map = [&](const char* key, auto&& apply) {
    if (!j.contains(key)) return;
    const json& m = j.at(key);
    if (!m.is_object()) FieldError(path + "." + key, "expected an object");
    for (const auto& [name, value] : m.items()) {
      const std::string p = path + "." + key + "." + name;
      auto n = fg.FindNode(name);
      if (!n) FieldError(p, fmt::format("unknown node '{}'", name));
      if (fg.role(*n) != NodeRole::kFunctional) {
        FieldError(p, "resource coefficients apply to functional nodes only");
      }
      apply(*n, Number(value, p));
    }
  };
  node_map("alpha_node", [&](int n, double v) {
    fg.set_node_coefficients(n, v, fg.node_beta(n));
  });
  node_map("beta_node", [&](int n, double v) {
    fg.set_node_coefficients(n, fg.node_alpha(n), v);
  });
  if (j.contains("alpha_arc")) {
    const json& m = j.at("alpha_arc");
    if (!m.is_object()) FieldError(path + ".alpha_arc", "expected an object");
    for (const auto& [out_key, row] : m.items()) {
      const std::string p = path + ".alpha_arc." + out_key;
      const int out = ArcFromKey(fg, out_key, p);
      if (!row.is_object()) FieldError(p, "expected an object");
      for (const auto& [in_key, value] : row.items()) {
        const std::string q = p + "." + in_key;
        const int in = ArcFromKey(fg, in_key, q);
        if (fg.arc(in).head != fg.arc(out).tail) FieldError(q, "arc does not feed the outgoing arc");
        fg.set_arc_alpha(out, in, Number(value, q));
      }
    }
  }
  if (j.contains("beta_arc")) {
    const json& m = j.at("beta_arc");
    if (!m.is_object()) FieldError(path + ".beta_arc", "expected an object");
    for (const auto& [key, value] : m.items()) {
      const std::string p = path + ".beta_arc." + key;
      fg.set_arc_beta(ArcFromKey(fg, key, p), Number(value, p));
    }
  }
  r.d_max = j.contains("d_max") ? Number(j.at("d_max"), path + ".d_max") : 0.0;
  const json& jr = Require(j, "initial_rates", path);
  if (!jr.is_object()) FieldError(path + ".initial_rates", "expected an object");
  for (const auto& [key, value] : jr.items()) {
    const std::string p = path + ".initial_rates." + key;
    r.initial_rates[ArcFromKey(fg, key, p)] = Number(value, p);
  }
  if (j.contains("source_restrictions")) {
    r.source_restrictions =
        ParseShares(j.at("source_restrictions"), g, fg, path + ".source_restrictions");
  }
  if (j.contains("dest_restrictions")) {
    r.dest_restrictions =
        ParseShares(j.at("dest_restrictions"), g, fg, path + ".dest_restrictions");
  }
  return r;
}

QueueBoundsConfig ParseBounds(const json& j, const std::string& path,
                              bool require_range) {
  CheckKeys(j, path, {"eps", "E", "base_points"});
  QueueBoundsConfig b;
  if (require_range || j.contains("eps") || j.contains("E")) {
    b.eps = Number(Require(j, "eps", path), path + ".eps");
    b.upper = Number(Require(j, "E", path), path + ".E");
  }
  b.base_points = j.contains("base_points")
                      ? Integer(j.at("base_points"), path + ".base_points")
                      : 2;
  return b;
}

ApproxConfig ParseApprox(const json& j, const SubstrateNetwork& g) {
  const std::string path = "approx";
  CheckKeys(j, path, {"forwarding", "processing", "vertices", "shift", "shift_mode"});
  ApproxConfig a;
  if (j.contains("forwarding")) {
    const json& f = j.at("forwarding");
    QueueBoundsConfig b = ParseBounds(f, path + ".forwarding", false);
    if (f.contains("eps")) {
      a.forwarding = b;
      a.forwarding_base_points = b.base_points;
    } else if (f.contains("base_points")) {
      a.forwarding_base_points = b.base_points;
    }
  }
  if (j.contains("processing")) {
    const json& p = j.at("processing");
    CheckKeys(p, path + ".processing", {"base_points"});
    if (p.contains("base_points")) {
      a.processing_base_points =
          Integer(p.at("base_points"), path + ".processing.base_points");
    }
  }
  if (j.contains("vertices")) {
    const json& m = j.at("vertices");
    if (!m.is_object()) FieldError(path + ".vertices", "expected an object");
    for (const auto& [id, value] : m.items()) {
      const std::string p = path + ".vertices." + id;
      a.vertices[Vertex(g, json(id), p)] = ParseBounds(value, p, true);
    }
  }
  if (j.contains("shift")) a.shift = Number(j.at("shift"), path + ".shift");
  if (j.contains("shift_mode")) {
    const json& m = j.at("shift_mode");
    if (m == "over") {
      a.shift_mode = ShiftMode::kOverApproximate;
    } else if (m == "balanced") {
      a.shift_mode = ShiftMode::kBalanced;
    } else {
      FieldError(path + ".shift_mode", "expected 'over' or 'balanced'");
    }
  }
  return a;
}

json BoundsToJson(const QueueBoundsConfig& b) {
  return json{{"eps", b.eps}, {"E", b.upper}, {"base_points", b.base_points}};
}

json SharesToJson(const std::vector<PlacementShare>& shares,
                  const SubstrateNetwork& g, const ForwardingGraph& fg) {
  json out = json::array();
  for (const PlacementShare& s : shares) {
    out.push_back({{"node", fg.name(s.node)},
                   {"vertex", g.vertex_id(s.vertex)},
                   {"proportion", s.proportion}});
  }
  return out;
}

int LineOfOffset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

}  // namespace

Scenario ScenarioFromJson(const json& j, std::vector<std::string>* warnings) {
  CheckKeys(j, "$", {"name", "substrate", "requests", "objective", "approx", "big_m"});
  Scenario s;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) FieldError("name", "expected a string");
    s.name = j.at("name").get<std::string>();
  }
  s.substrate = ParseSubstrate(Require(j, "substrate", "$"));
  const json& jr = Require(j, "requests", "$");
  if (!jr.is_array()) FieldError("requests", "expected an array");
  for (std::size_t i = 0; i < jr.size(); ++i) {
    s.requests.push_back(ParseRequest(jr[i], s.substrate, fmt::format("requests[{}]", i)));
  }
  if (j.contains("objective")) {
    const json& o = j.at("objective");
    CheckKeys(o, "objective", {"C", "c"});
    if (o.contains("C")) {
      const json& c = o.at("C");
      if (!c.is_array() || c.size() != 4) FieldError("objective.C", "expected 4 numbers");
      for (int i = 0; i < 4; ++i) s.objective.C[i] = Number(c[i], fmt::format("objective.C[{}]", i));
    }
    if (o.contains("c")) {
      const json& c = o.at("c");
      if (!c.is_array() || c.size() != 3) FieldError("objective.c", "expected 3 numbers");
      for (int i = 0; i < 3; ++i) s.objective.c[i] = Number(c[i], fmt::format("objective.c[{}]", i));
    }
  }
  if (j.contains("approx")) s.approx = ParseApprox(j.at("approx"), s.substrate);
  if (j.contains("big_m")) {
    const json& b = j.at("big_m");
    CheckKeys(b, "big_m", {"lambda_min", "lateness"});
    if (b.contains("lambda_min")) s.big_m.lambda_min = Number(b.at("lambda_min"), "big_m.lambda_min");
    if (b.contains("lateness")) s.big_m.lateness = Number(b.at("lateness"), "big_m.lateness");
  }
  ValidateScenario(s, warnings);
  return s;
}

Scenario ParseScenario(const std::string& text, std::vector<std::string>* warnings) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse,
                fmt::format("line {}: {}", LineOfOffset(text, e.byte), e.what()));
  }
  return ScenarioFromJson(j, warnings);
}

Scenario LoadScenario(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, fmt::format("cannot open '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseScenario(buffer.str(), warnings);
}

json ScenarioToJson(const Scenario& s) {
  const SubstrateNetwork& g = s.substrate;
  json substrate;
  substrate["vertices"] = g.vertex_ids();
  json fibers = json::array();
  for (const DirectedEdge& e : g.edges()) {
    if (e.tail < e.head) {
      fibers.push_back({{"u", g.vertex_id(e.tail)},
                        {"v", g.vertex_id(e.head)},
                        {"delay", e.delay}});
    }
  }
  substrate["fibers"] = fibers;
  json caps = json::object();
  for (int v = 0; v < g.num_vertices(); ++v) caps[g.vertex_id(v)] = g.capacity(v);
  substrate["capacities"] = caps;
  substrate["wavelengths"] = g.num_wavelengths();
  substrate["line_rate"] = g.line_rate();

  json requests = json::array();
  for (const Request& r : s.requests) {
    const ForwardingGraph& fg = r.graph;
    json jr;
    json nodes = json::array();
    for (int n = 0; n < fg.num_nodes(); ++n) nodes.push_back(fg.name(n));
    jr["nodes"] = nodes;
    json arcs = json::array();
    for (const Arc& a : fg.arcs()) arcs.push_back({fg.name(a.tail), fg.name(a.head)});
    jr["arcs"] = arcs;
    json alpha_node = json::object(), beta_node = json::object();
    for (int n : fg.functional()) {
      alpha_node[fg.name(n)] = fg.node_alpha(n);
      beta_node[fg.name(n)] = fg.node_beta(n);
    }
    jr["alpha_node"] = alpha_node;
    jr["beta_node"] = beta_node;
    json alpha_arc = json::object(), beta_arc = json::object();
    for (int a = 0; a < fg.num_arcs(); ++a) {
      const int tail = fg.arc(a).tail;
      if (fg.role(tail) == NodeRole::kSource) continue;
      json row = json::object();
      for (int in : fg.in_arcs(tail)) row[ArcKey(fg, in)] = fg.arc_alpha(a, in);
      alpha_arc[ArcKey(fg, a)] = row;
      beta_arc[ArcKey(fg, a)] = fg.arc_beta(a);
    }
    jr["alpha_arc"] = alpha_arc;
    jr["beta_arc"] = beta_arc;
    jr["d_max"] = r.d_max;
    json rates = json::object();
    for (const auto& [a, rate] : r.initial_rates) rates[ArcKey(fg, a)] = rate;
    jr["initial_rates"] = rates;
    jr["source_restrictions"] = SharesToJson(r.source_restrictions, g, fg);
    jr["dest_restrictions"] = SharesToJson(r.dest_restrictions, g, fg);
    requests.push_back(jr);
  }

  json approx;
  json forwarding;
  if (s.approx.forwarding) {
    forwarding = BoundsToJson(*s.approx.forwarding);
  } else {
    forwarding["base_points"] = s.approx.forwarding_base_points;
  }
  approx["forwarding"] = forwarding;
  approx["processing"] = {{"base_points", s.approx.processing_base_points}};
  json vertices = json::object();
  for (const auto& [v, b] : s.approx.vertices) vertices[g.vertex_id(v)] = BoundsToJson(b);
  approx["vertices"] = vertices;
  approx["shift"] = s.approx.shift;
  approx["shift_mode"] =
      s.approx.shift_mode == ShiftMode::kBalanced ? "balanced" : "over";

  json big_m = json::object();
  if (s.big_m.lambda_min) big_m["lambda_min"] = *s.big_m.lambda_min;
  if (s.big_m.lateness) big_m["lateness"] = *s.big_m.lateness;

  json out;
  out["name"] = s.name;
  out["substrate"] = substrate;
  out["requests"] = requests;
  out["objective"] = {{"C", s.objective.C}, {"c", s.objective.c}};
  out["approx"] = approx;
  out["big_m"] = big_m;
  return out;
}

void SaveScenario(const Scenario& scenario, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kIo, fmt::format("cannot write '{}'", path));
  out << ScenarioToJson(scenario).dump(2) << "\n";
}

}  // namespace vnfwdm
