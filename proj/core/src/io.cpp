#include "obnox/io.hpp"

#include <fstream>
#include <sstream>

namespace obnox {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

const json& field(const json& doc, const std::string& path,
                  const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) bad(path + "." + name, "missing field");
  return *it;
}

int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<int>();
}

double get_real(const json& j, const std::string& path) {
  if (!j.is_number()) bad(path, "expected a number");
  return j.get<double>();
}

std::vector<std::vector<double>> get_point_list(const json& j,
                                                const std::string& path,
                                                int dim) {
  if (!j.is_array()) bad(path, "expected an array of points");
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const json& pt = j[i];
    if (!pt.is_array() || static_cast<int>(pt.size()) != dim)
      bad(p, "expected a point with " + std::to_string(dim) + " coordinates");
    std::vector<double> coords;
    for (std::size_t d = 0; d < pt.size(); ++d)
      coords.push_back(get_real(pt[d], p + "[" + std::to_string(d) + "]"));
    out.push_back(std::move(coords));
  }
  return out;
}

std::vector<int> get_id_list(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of ids");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

Instance parse_instance(const json& doc, bool validate_triangle) {
  if (!doc.is_object()) bad("$", "expected a JSON object");
  if (get_int(field(doc, "$", "format_version"), "$.format_version") != 1)
    bad("$.format_version", "unsupported schema version (expected 1)");

  const json& space = field(doc, "$", "space");
  if (!space.is_object()) bad("$.space", "expected an object");
  const json& kind_j = field(space, "$.space", "kind");
  if (!kind_j.is_string()) bad("$.space.kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();

  InstanceSpec spec;
  if (kind == "euclidean") {
    const int dim = get_int(field(space, "$.space", "dim"), "$.space.dim");
    if (dim < 1) bad("$.space.dim", "dimension must be positive");
    auto voters =
        get_point_list(field(space, "$.space", "voters"), "$.space.voters", dim);
    auto cands = get_point_list(field(space, "$.space", "candidates"),
                                "$.space.candidates", dim);
    const int a = static_cast<int>(voters.size());
    const int b = static_cast<int>(cands.size());
    std::vector<std::vector<double>> coords = std::move(voters);
    coords.insert(coords.end(), cands.begin(), cands.end());
    spec.space = MetricSpace::euclidean(dim, std::move(coords));
    for (int i = 0; i < a; ++i) spec.voters.push_back(i);
    for (int i = 0; i < b; ++i) spec.candidates.push_back(a + i);
  } else if (kind == "graph") {
    const int n = get_int(field(space, "$.space", "num_vertices"),
                          "$.space.num_vertices");
    const json& edges_j = field(space, "$.space", "edges");
    if (!edges_j.is_array()) bad("$.space.edges", "expected an array");
    std::vector<std::tuple<int, int, double>> edges;
    for (std::size_t i = 0; i < edges_j.size(); ++i) {
      const std::string p = "$.space.edges[" + std::to_string(i) + "]";
      const json& e = edges_j[i];
      if (!e.is_array() || e.size() != 3)
        bad(p, "expected an edge [u, v, weight]");
      const int u = get_int(e[0], p + "[0]");
      const int v = get_int(e[1], p + "[1]");
      const double w = get_real(e[2], p + "[2]");
      if (u < 0 || u >= n || v < 0 || v >= n)
        bad(p, "endpoint out of range [0, " + std::to_string(n) + ")");
      if (!(w >= 0.0) || !std::isfinite(w))
        bad(p + "[2]", "edge weight must be a finite non-negative number");
      edges.emplace_back(u, v, w);
    }
    spec.space = MetricSpace::graph(n, std::move(edges));
    spec.voters = get_id_list(field(space, "$.space", "voters"),
                              "$.space.voters");
    spec.candidates = get_id_list(field(space, "$.space", "candidates"),
                                  "$.space.candidates");
  } else if (kind == "matrix") {
    const int a = get_int(field(space, "$.space", "num_voters"),
                          "$.space.num_voters");
    const int b = get_int(field(space, "$.space", "num_candidates"),
                          "$.space.num_candidates");
    if (a < 1 || b < 1)
      bad("$.space.num_voters", "voter and candidate counts must be positive");
    const json& dist_j = field(space, "$.space", "dist");
    const int n = a + b;
    if (!dist_j.is_array() || static_cast<int>(dist_j.size()) != n)
      bad("$.space.dist",
          "expected a full " + std::to_string(n) + "x" + std::to_string(n) +
              " table (voters first)");
    std::vector<std::vector<double>> table;
    for (int i = 0; i < n; ++i) {
      const std::string p = "$.space.dist[" + std::to_string(i) + "]";
      const json& row = dist_j[i];
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        bad(p, "expected a row of " + std::to_string(n) + " numbers");
      std::vector<double> r;
      for (int j = 0; j < n; ++j)
        r.push_back(get_real(row[j], p + "[" + std::to_string(j) + "]"));
      table.push_back(std::move(r));
    }
    try {
      spec.space = MetricSpace::matrix(std::move(table), validate_triangle);
    } catch (const ValidationError& e) {
      bad("$.space.dist", e.what());
    }
    for (int i = 0; i < a; ++i) spec.voters.push_back(i);
    for (int i = 0; i < b; ++i) spec.candidates.push_back(a + i);
  } else {
    bad("$.space.kind", "unknown kind \"" + kind +
                            "\" (expected euclidean, graph or matrix)");
  }

  spec.k = get_int(field(doc, "$", "k"), "$.k");
  spec.lambda = get_int(field(doc, "$", "lambda"), "$.lambda");
  if (auto it = doc.find("t"); it != doc.end() && !it->is_null())
    spec.t = get_real(*it, "$.t");
  try {
    return build_instance(std::move(spec));
  } catch (const ValidationError& e) {
    bad("$", e.what());
  }
}

json emit_instance(const Instance& inst) {
  json space;
  const MetricSpace& ms = inst.space();
  switch (ms.kind()) {
    case SpaceKind::Euclidean: {
      space["kind"] = "euclidean";
      space["dim"] = ms.dim();
      json voters = json::array();
      for (int v = 0; v < inst.num_voters(); ++v)
        voters.push_back(ms.coords()[inst.voter_point(v)]);
      json cands = json::array();
      for (int c = 0; c < inst.num_candidates(); ++c)
        cands.push_back(ms.coords()[inst.candidate_point(c)]);
      space["voters"] = std::move(voters);
      space["candidates"] = std::move(cands);
      break;
    }
    case SpaceKind::Graph: {
      space["kind"] = "graph";
      space["num_vertices"] = ms.num_points();
      json edges = json::array();
      for (const auto& [u, v, w] : ms.edges())
        edges.push_back(json::array({u, v, w}));
      space["edges"] = std::move(edges);
      json voters = json::array();
      for (int v = 0; v < inst.num_voters(); ++v)
        voters.push_back(inst.voter_point(v));
      json cands = json::array();
      for (int c = 0; c < inst.num_candidates(); ++c)
        cands.push_back(inst.candidate_point(c));
      space["voters"] = std::move(voters);
      space["candidates"] = std::move(cands);
      break;
    }
    case SpaceKind::Matrix: {
      space["kind"] = "matrix";
      const int a = inst.num_voters();
      const int b = inst.num_candidates();
      space["num_voters"] = a;
      space["num_candidates"] = b;
      auto point_of = [&](int i) {
        return i < a ? inst.voter_point(i) : inst.candidate_point(i - a);
      };
      json dist = json::array();
      for (int i = 0; i < a + b; ++i) {
        json row = json::array();
        for (int j = 0; j < a + b; ++j)
          row.push_back(inst.dist_points(point_of(i), point_of(j)));
        dist.push_back(std::move(row));
      }
      space["dist"] = std::move(dist);
      break;
    }
  }
  json doc;
  doc["format_version"] = 1;
  doc["space"] = std::move(space);
  doc["k"] = inst.k();
  doc["lambda"] = inst.lambda();
  if (inst.t()) doc["t"] = *inst.t();
  return doc;
}

json emit_result(const Instance& inst, const SolveResult& result) {
  json doc;
  doc["status"] = to_string(result.status);
  if (result.committee) {
    const double check = objective(inst, result.committee->members);
    if (check != result.value)
      throw Error("emit_result: recomputed objective " +
                  std::to_string(check) + " does not match result value " +
                  std::to_string(result.value));
    doc["committee"] = result.committee->members;
    doc["value"] = result.value;
  } else {
    doc["committee"] = json::array();
    doc["value"] = result.value;
  }
  if (result.guarantee)
    doc["guarantee"] = *result.guarantee;
  else
    doc["guarantee"] = nullptr;
  doc["algorithm"] = result.algorithm;
  doc["wall_time_ms"] = result.wall_time_ms;
  return doc;
}

json emit_ground_truth(const GroundTruth& gt) {
  json doc;
  doc["answer"] = gt.answer;
  if (gt.witness)
    doc["witness"] = *gt.witness;
  else
    doc["witness"] = nullptr;
  doc["threshold_t"] = gt.threshold_t;
  doc["note"] = gt.note;
  return doc;
}

GroundTruth parse_ground_truth(const json& doc) {
  if (!doc.is_object()) bad("$", "expected a JSON object");
  GroundTruth gt;
  const json& ans = field(doc, "$", "answer");
  if (!ans.is_boolean()) bad("$.answer", "expected a boolean");
  gt.answer = ans.get<bool>();
  if (auto it = doc.find("witness"); it != doc.end() && !it->is_null())
    gt.witness = get_id_list(*it, "$.witness");
  gt.threshold_t =
      get_real(field(doc, "$", "threshold_t"), "$.threshold_t");
  const json& note = field(doc, "$", "note");
  if (!note.is_string()) bad("$.note", "expected a string");
  gt.note = note.get<std::string>();
  return gt;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return doc;
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open output file: " + path);
  out << doc.dump(2) << "\n";
}

}  // namespace obnox
