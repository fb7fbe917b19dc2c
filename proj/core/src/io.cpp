#include "middlecurves/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace middlecurves {

namespace {

using nlohmann::json;

json number_to_json(double x) {
  if (std::floor(x) == x && std::abs(x) <= 1e15) {
    return json(static_cast<std::int64_t>(x));
  }
  return json(x);
}

double number_from_json(const json& j, const char* what) {
  if (!j.is_number()) {
    throw std::invalid_argument(std::string(what) + " must be a number");
  }
  return j.get<double>();
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw std::invalid_argument("malformed JSON document");
  }
  return j;
}

}  // namespace

std::string write_curve_file(const CurveSet& curves) {
  json doc;
  doc["dimension"] = curves.dimension();
  doc["curves"] = json::array();
  for (const Curve& c : curves.curves()) {
    json entry;
    entry["id"] = c.id();
    json points = json::array();
    for (const Point& p : c.vertices()) {
      json coords = json::array();
      for (double x : p.coords()) coords.push_back(number_to_json(x));
      points.push_back(std::move(coords));
    }
    entry["points"] = std::move(points);
    doc["curves"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

CurveSet read_curve_file(const std::string& json_text) {
  const json doc = parse(json_text);
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("curves")) {
    throw std::invalid_argument("curve file needs 'dimension' and 'curves'");
  }
  const auto dimension = doc["dimension"].get<std::size_t>();
  if (dimension < 1) {
    throw std::invalid_argument("dimension must be at least 1");
  }
  std::vector<Curve> curves;
  for (const json& entry : doc["curves"]) {
    if (!entry.contains("id") || !entry.contains("points")) {
      throw std::invalid_argument("each curve needs 'id' and 'points'");
    }
    std::vector<Point> vertices;
    for (const json& point : entry["points"]) {
      if (!point.is_array() || point.size() != dimension) {
        throw std::invalid_argument("every point needs exactly 'dimension' coordinates");
      }
      std::vector<double> coords;
      coords.reserve(dimension);
      for (const json& x : point) coords.push_back(number_from_json(x, "coordinate"));
      vertices.emplace_back(std::move(coords));
    }
    curves.emplace_back(entry["id"].get<std::string>(), std::move(vertices));
  }
  return CurveSet(std::move(curves));
}

std::string write_middle_file(const MiddleFile& middle) {
  json doc;
  doc["refs"] = json::array();
  for (const VertexRef& r : middle.refs) {
    doc["refs"].push_back({{"curve", r.curve_id}, {"index", r.index}});
  }
  doc["delta"] = number_to_json(middle.delta);
  doc["variant"] = to_string(middle.variant);
  return doc.dump(2) + "\n";
}

MiddleFile read_middle_file(const std::string& json_text) {
  const json doc = parse(json_text);
  if (!doc.is_object() || !doc.contains("refs") || !doc.contains("delta") ||
      !doc.contains("variant")) {
    throw std::invalid_argument("middle file needs 'refs', 'delta', and 'variant'");
  }
  MiddleFile out;
  for (const json& r : doc["refs"]) {
    if (!r.contains("curve") || !r.contains("index")) {
      throw std::invalid_argument("each ref needs 'curve' and 'index'");
    }
    const auto index = r["index"].get<std::int64_t>();
    if (index < 1) {
      throw std::invalid_argument("ref indices are 1-based");
    }
    out.refs.push_back({r["curve"].get<std::string>(),
                        static_cast<std::size_t>(index)});
  }
  out.delta = number_from_json(doc["delta"], "delta");
  const auto variant = variant_from_string(doc["variant"].get<std::string>());
  if (!variant) {
    throw std::invalid_argument(
        "variant must be one of unordered, ordered, restricted");
  }
  out.variant = *variant;
  return out;
}

std::string write_scs_file(const ScsInstance& inst) {
  json doc;
  doc["sequences"] = inst.sequences;
  doc["t"] = inst.t;
  return doc.dump(2) + "\n";
}

ScsInstance read_scs_file(const std::string& json_text) {
  const json doc = parse(json_text);
  if (!doc.is_object() || !doc.contains("sequences") || !doc.contains("t")) {
    throw std::invalid_argument("SCS file needs 'sequences' and 't'");
  }
  ScsInstance inst;
  inst.sequences = doc["sequences"].get<std::vector<std::string>>();
  for (const std::string& s : inst.sequences) {
    for (char c : s) {
      if (c != 'A' && c != 'B') {
        throw std::invalid_argument("sequences must be over the alphabet {A, B}");
      }
    }
  }
  const auto t = doc["t"].get<std::int64_t>();
  if (t < 0) {
    throw std::invalid_argument("t must be non-negative");
  }
  inst.t = static_cast<std::size_t>(t);
  return inst;
}

CurveSet read_curve_csv(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::string line;
  std::vector<std::string> order;
  std::vector<std::pair<std::string, std::vector<Point>>> grouped;
  bool first_line = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() < 2) {
      throw std::invalid_argument("CSV rows need a curve id and coordinates");
    }
    std::vector<double> coords;
    bool numeric = true;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      try {
        std::size_t used = 0;
        coords.push_back(std::stod(fields[i], &used));
        numeric = numeric && used == fields[i].size();
      } catch (const std::exception&) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (first_line) {
        first_line = false;
        continue;  // header row
      }
      throw std::invalid_argument("non-numeric coordinate in CSV row: " + line);
    }
    first_line = false;
    auto it = std::find_if(grouped.begin(), grouped.end(),
                           [&](const auto& g) { return g.first == fields[0]; });
    if (it == grouped.end()) {
      grouped.emplace_back(fields[0], std::vector<Point>{});
      it = std::prev(grouped.end());
    }
    it->second.emplace_back(std::move(coords));
  }
  std::vector<Curve> curves;
  curves.reserve(grouped.size());
  for (auto& [id, points] : grouped) {
    curves.emplace_back(id, std::move(points));
  }
  return CurveSet(std::move(curves));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open '" + path + "' for reading");
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open '" + path + "' for writing");
  }
  out << content;
}

}  // namespace middlecurves
