#include "ust/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "ust/error.hpp"

namespace ust {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::parse_error, field + ": " + what);
}

std::size_t read_index(const json& node, const std::string& field) {
  if (!node.is_number_integer() || node.get<long long>() < 0) {
    field_error(field, "expected a non-negative integer");
  }
  return node.get<std::size_t>();
}

Rational read_weight(const json& node, const std::string& field) {
  Rational w;
  try {
    if (node.is_string()) {
      w = parse_rational(node.get<std::string>());
    } else if (node.is_number_integer()) {
      w = parse_rational(node.dump());
    } else if (node.is_number_float()) {
      // shortest round-trip text of the double, read digit-exactly
      w = parse_rational(node.dump());
    } else {
      field_error(field, "expected a number or a \"p/q\" string");
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::parse_error || std::string(e.what()).rfind(field, 0) == 0) throw;
    field_error(field, e.what());
  }
  if (sgn(w) <= 0) {
    throw Error(ErrorCode::invalid_argument, field + ": weight must be positive, got " + format_rational(w));
  }
  return w;
}

}  // namespace

Graph graph_from_json(const json& doc) {
  if (!doc.is_object()) field_error("<root>", "expected a JSON object");

  if (doc.contains("family")) {
    if (!doc["family"].is_string()) field_error("family", "expected a string");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) field_error("n", "expected an integer");
    return make_family(parse_family(doc["family"].get<std::string>()), doc["n"].get<int>());
  }

  if (!doc.contains("vertices")) field_error("vertices", "missing");
  const std::size_t n = read_index(doc["vertices"], "vertices");
  std::vector<EdgeSpec> edges;
  if (doc.contains("edges")) {
    const json& list = doc["edges"];
    if (!list.is_array()) field_error("edges", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const json& e = list[i];
      if (!e.is_object()) field_error(where, "expected an object");
      if (!e.contains("u")) field_error(where + ".u", "missing");
      if (!e.contains("v")) field_error(where + ".v", "missing");
      EdgeSpec spec;
      spec.u = read_index(e["u"], where + ".u");
      spec.v = read_index(e["v"], where + ".v");
      spec.weight = e.contains("w") ? read_weight(e["w"], where + ".w") : Rational(1);
      edges.push_back(spec);
    }
  }
  return Graph::build(n, edges);
}

Graph parse_graph_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return graph_from_json(doc);
}

Graph load_graph(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::invalid_argument, "cannot open graph file '" + path + "'");
    buffer << in.rdbuf();
  }
  return parse_graph_text(buffer.str());
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"w", format_rational(e.weight)}});
  }
  return {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

}  // namespace ust
