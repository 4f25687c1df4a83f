#include "mstp/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_map>

#include "mstp/instance.hpp"
#include "mstp/pareto.hpp"

namespace mstp {

using nlohmann::json;

namespace {

std::string sig6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    out.push_back(trim(field));
  }
  if (!line.empty() && line.back() == ',') {
    out.emplace_back();
  }
  return out;
}

double parse_number(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) {
      return v;
    }
  } catch (const std::exception&) {
  }
  throw InvalidInput("line " + std::to_string(line_no) + ": \"" + s + "\" is not a number");
}

const char* sense_name(Sense s) { return s == Sense::Minimize ? "min" : "max"; }

Sense parse_sense(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "min") {
    return Sense::Minimize;
  }
  if (s == "max") {
    return Sense::Maximize;
  }
  throw InvalidInput("unknown sense \"" + s + "\"");
}

json objectives_json(const ObjectiveVector& v) {
  return {{"L", v.length}, {"C", v.cost}, {"Q", v.qos}, {"Delta", v.altitude_gap}};
}

Approach parse_approach(const std::string& s) {
  for (const Approach a : {Approach::Mst, Approach::Mmst, Approach::Mstp}) {
    if (s == approach_name(a)) {
      return a;
    }
  }
  throw InvalidInput("unknown approach \"" + s + "\"");
}

} // namespace

bool objectives_close(const ObjectiveVector& a, const ObjectiveVector& b, double tol) {
  for (const Criterion c : kCriteria) {
    const double x = a[c];
    const double y = b[c];
    if (std::abs(x - y) > tol * std::max({1.0, std::abs(x), std::abs(y)})) {
      return false;
    }
  }
  return true;
}

std::string report_csv(const SchemeResult& result) {
  std::string out = kReportHeader;
  out += '\n';
  for (const SchemeEntry& e : result.entries) {
    std::string weights = "-";
    if (e.weights) {
      weights.clear();
      for (std::size_t k = 0; k < 4; ++k) {
        weights += (k ? ";" : "") + sig6(e.weights->values()[k]);
      }
    }
    const ObjectiveVector& v = e.objectives;
    out += e.label + ',' + weights + ',' + sig6(v.length) + ',' + sig6(v.cost) + ',' + sig6(v.altitude_gap) + ',' +
           sig6(v.qos) + ',' + std::to_string(e.pareto_layer) + '\n';
  }
  return out;
}

void write_report(const SchemeResult& result, const std::string& path) { write_text_file(path, report_csv(result)); }

std::vector<VectorRow> parse_vector_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::unordered_map<std::string, std::size_t> column;
  std::vector<VectorRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto fields = split_csv_line(line);
    if (column.empty()) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        column[fields[i]] = i;
      }
      for (const char* need : {"L", "C", "Delta", "Q"}) {
        if (!column.contains(need)) {
          throw InvalidInput(std::string("CSV header lacks column \"") + need + "\"");
        }
      }
      continue;
    }
    if (fields.size() != column.size()) {
      throw InvalidInput("line " + std::to_string(line_no) + ": expected " + std::to_string(column.size()) +
                         " fields, got " + std::to_string(fields.size()));
    }
    VectorRow row;
    row.objectives.length = parse_number(fields[column.at("L")], line_no);
    row.objectives.cost = parse_number(fields[column.at("C")], line_no);
    row.objectives.altitude_gap = parse_number(fields[column.at("Delta")], line_no);
    row.objectives.qos = parse_number(fields[column.at("Q")], line_no);
    if (const auto it = column.find("approach"); it != column.end()) {
      row.label = fields[it->second];
    } else {
      row.label = std::to_string(rows.size() + 1);
    }
    if (const auto it = column.find("pareto_layer"); it != column.end()) {
      row.pareto_layer = static_cast<int>(parse_number(fields[it->second], line_no));
    }
    rows.push_back(std::move(row));
  }
  if (column.empty()) {
    throw InvalidInput("CSV has no header line");
  }
  return rows;
}

std::vector<VectorRow> read_vector_csv(const std::string& path) {
  try {
    return parse_vector_csv(read_text_file(path));
  } catch (const InvalidInput& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

json result_to_json(const SchemeResult& result) {
  const SchemeConfig& cfg = result.config;
  json doc;
  json senses = json::array();
  for (const Criterion c : kCriteria) {
    senses.push_back(sense_name(cfg.senses[c]));
  }
  doc["config"] = {{"granularity", cfg.granularity},
                   {"max_cluster", cfg.max_cluster},
                   {"senses", senses},
                   {"alpha", cfg.coefficients.alpha},
                   {"beta", cfg.coefficients.beta},
                   {"seed", cfg.seed},
                   {"roots", cfg.roots}};
  doc["instance"] = instance_to_json(result.network);
  doc["partition"] = result.partition.clusters;

  json entries = json::array();
  for (const SchemeEntry& e : result.entries) {
    json je;
    je["label"] = e.label;
    je["approach"] = approach_name(e.approach);
    je["weights"] = e.weights ? json(e.weights->values()) : json(nullptr);
    json steiner = json::array();
    for (const Node& n : e.steiner_nodes) {
      steiner.push_back({{"id", n.id}, {"x", n.x}, {"y", n.y}, {"z", n.z}, {"s", n.s}});
    }
    je["steiner_nodes"] = std::move(steiner);
    json edges = json::array();
    for (const EdgeId& id : e.edges) {
      edges.push_back({id.a, id.b});
    }
    je["edges"] = std::move(edges);
    je["objectives"] = objectives_json(e.objectives);
    je["pareto_layer"] = e.pareto_layer;
    entries.push_back(std::move(je));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

SchemeResult result_from_json(const json& doc) {
  SchemeResult result;
  try {
    const json& jc = doc.at("config");
    SchemeConfig& cfg = result.config;
    cfg.granularity = jc.at("granularity").get<int>();
    cfg.max_cluster = jc.at("max_cluster").get<std::size_t>();
    const json& js = jc.at("senses");
    if (!js.is_array() || js.size() != 4) {
      throw InvalidInput("config.senses must list four senses");
    }
    for (std::size_t k = 0; k < 4; ++k) {
      cfg.senses.senses[k] = parse_sense(js[k]);
    }
    cfg.coefficients = {jc.at("alpha").get<double>(), jc.at("beta").get<double>()};
    cfg.seed = jc.at("seed").get<std::uint64_t>();
    cfg.roots = jc.at("roots").get<std::size_t>();

    result.network = instance_from_json(doc.at("instance"));
    result.partition.clusters = doc.at("partition").get<std::vector<std::vector<NodeId>>>();
    result.partition.max_size = cfg.max_cluster;

    for (const json& je : doc.at("entries")) {
      SchemeEntry e;
      e.label = je.at("label").get<std::string>();
      e.approach = parse_approach(je.at("approach").get<std::string>());
      if (!je.at("weights").is_null()) {
        e.weights = WeightVector(je.at("weights").get<std::array<double, 4>>());
      }
      for (const json& jn : je.at("steiner_nodes")) {
        Node n;
        n.id = jn.at("id").get<NodeId>();
        n.x = jn.at("x").get<double>();
        n.y = jn.at("y").get<double>();
        n.z = jn.at("z").get<double>();
        n.s = jn.at("s").get<double>();
        n.kind = NodeKind::Steiner;
        e.steiner_nodes.push_back(n);
      }
      for (const json& jedge : je.at("edges")) {
        e.edges.push_back(EdgeId::of(jedge.at(0).get<NodeId>(), jedge.at(1).get<NodeId>()));
      }
      const json& jo = je.at("objectives");
      e.objectives = {jo.at("L").get<double>(), jo.at("C").get<double>(), jo.at("Q").get<double>(),
                      jo.at("Delta").get<double>()};
      e.pareto_layer = je.at("pareto_layer").get<int>();
      result.entries.push_back(std::move(e));
    }
  } catch (const json::exception& ex) {
    throw InvalidInput(std::string("malformed result document: ") + ex.what());
  }

  if (result.entries.empty()) {
    throw InvalidInput("result has no entries");
  }
  std::vector<ObjectiveVector> vectors;
  for (const SchemeEntry& e : result.entries) {
    const ObjectiveVector recomputed = tree_objectives(result.entry_network(e), e.edges);
    if (!objectives_close(recomputed, e.objectives)) {
      throw InvalidInput("entry " + e.label + ": stored objectives do not match its edge set");
    }
    vectors.push_back(e.objectives);
  }
  const auto layers = pareto_layers(vectors, result.config.senses);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layers[i] != result.entries[i].pareto_layer) {
      throw InvalidInput("entry " + result.entries[i].label + ": stored Pareto layer is inconsistent");
    }
  }
  return result;
}

void save_result(const SchemeResult& result, const std::string& path) {
  write_text_file(path, result_to_json(result).dump(2) + "\n");
}

SchemeResult load_result(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  try {
    return result_from_json(doc);
  } catch (const InvalidInput& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

} // namespace mstp
