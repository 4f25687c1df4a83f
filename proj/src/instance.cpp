#include "mstp/instance.hpp"

#include <fstream>
#include <sstream>

namespace mstp {

using nlohmann::json;

namespace {

double number_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number()) {
    throw InvalidInput(std::string("missing or non-numeric field \"") + key + "\"");
  }
  return it->get<double>();
}

NodeId id_value(const json& v) {
  if (!v.is_number_integer()) {
    throw InvalidInput("node ids must be integers");
  }
  return v.get<NodeId>();
}

} // namespace

json instance_to_json(const Network& net) {
  json doc;
  doc["alpha"] = net.coefficients().alpha;
  doc["beta"] = net.coefficients().beta;
  json nodes = json::array();
  for (const Node& n : net.nodes()) {
    nodes.push_back({{"id", n.id}, {"x", n.x}, {"y", n.y}, {"z", n.z}, {"s", n.s}});
  }
  doc["nodes"] = std::move(nodes);
  if (net.is_complete()) {
    doc["edges"] = nullptr;
  } else {
    json edges = json::array();
    for (const Edge& e : net.edges()) {
      edges.push_back({e.id.a, e.id.b});
    }
    doc["edges"] = std::move(edges);
  }
  return doc;
}

Network instance_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw InvalidInput("instance must be a JSON object");
  }
  CostCoefficients coeffs;
  if (doc.contains("alpha")) {
    coeffs.alpha = number_field(doc, "alpha");
  }
  if (doc.contains("beta")) {
    coeffs.beta = number_field(doc, "beta");
  }
  const auto nodes_it = doc.find("nodes");
  if (nodes_it == doc.end() || !nodes_it->is_array()) {
    throw InvalidInput("instance needs a \"nodes\" array");
  }
  std::vector<Node> nodes;
  nodes.reserve(nodes_it->size());
  for (const json& jn : *nodes_it) {
    if (!jn.is_object() || !jn.contains("id")) {
      throw InvalidInput("each node needs an \"id\"");
    }
    Node n;
    n.id = id_value(jn.at("id"));
    n.x = number_field(jn, "x");
    n.y = number_field(jn, "y");
    n.z = number_field(jn, "z");
    n.s = number_field(jn, "s");
    n.kind = NodeKind::Terminal;
    nodes.push_back(n);
  }

  std::optional<std::vector<EdgeId>> edges;
  const auto edges_it = doc.find("edges");
  if (edges_it != doc.end() && !edges_it->is_null()) {
    if (!edges_it->is_array()) {
      throw InvalidInput("\"edges\" must be an array of [i, j] pairs or null");
    }
    edges.emplace();
    for (const json& je : *edges_it) {
      if (!je.is_array() || je.size() != 2) {
        throw InvalidInput("each edge must be a two-element array");
      }
      edges->push_back({id_value(je[0]), id_value(je[1])});
    }
  }
  return Network(std::move(nodes), std::move(edges), coeffs);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError(path, "cannot open for reading");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) {
    throw IoError(path, "read failed");
  }
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError(path, "cannot open for writing");
  }
  out << contents;
  out.flush();
  if (!out) {
    throw IoError(path, "write failed");
  }
}

Network load_instance(const std::string& path) {
  const std::string text = read_text_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  try {
    return instance_from_json(doc);
  } catch (const InvalidInput& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void save_instance(const Network& net, const std::string& path) {
  write_text_file(path, instance_to_json(net).dump(2) + "\n");
}

} // namespace mstp
