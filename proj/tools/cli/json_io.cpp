#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace monoseq::cli {

namespace {

void expect_schema(const Json& j, const char* schema) {
  if (!j.is_object()) throw InputError(std::string("expected a JSON object with schema ") + schema);
  const auto it = j.find("schema");
  if (it == j.end() || !it->is_string() || it->get<std::string>() != schema) {
    throw InputError(std::string("missing or unsupported schema, expected \"") + schema + "\"");
  }
}

std::vector<int> ints(const Json& j) { return j.get<std::vector<int>>(); }

}  // namespace

Json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw InputError("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

Json path_to_json(const PathPerm& p) { return Json(std::vector<int>(p.order().begin(), p.order().end())); }

Json direction_to_json(const Direction& d) { return Json{{"dx", rat_to_json(d.dx())}, {"dy", rat_to_json(d.dy())}}; }

Direction direction_from_json(const Json& j) { return {rat_from_json(j.at("dx")), rat_from_json(j.at("dy"))}; }

Json point_to_json(const Point2& p) { return Json{{"x", rat_to_json(p.x)}, {"y", rat_to_json(p.y)}}; }

Point2 point_from_json(const Json& j) { return {rat_from_json(j.at("x")), rat_from_json(j.at("y"))}; }

Json instance_to_json(const Instance& inst) {
  Json j{{"schema", kInstanceSchema}, {"n", inst.n}};
  if (!inst.paths.empty()) {
    Json paths = Json::array();
    for (const auto& p : inst.paths) paths.push_back(path_to_json(p));
    j["paths"] = paths;
  }
  if (inst.directions) {
    Json dirs = Json::array();
    for (const auto& d : *inst.directions) dirs.push_back(direction_to_json(d));
    j["directions"] = dirs;
  }
  if (!inst.digraphs.empty()) {
    Json gs = Json::array();
    for (const auto& g : inst.digraphs) {
      Json e = Json::array();
      for (const auto& [u, v] : g.graph.edges()) e.push_back({u, v});
      Json entry{{"edges", e}};
      if (g.order) entry["order"] = g.order->order;
      gs.push_back(entry);
    }
    j["digraphs"] = gs;
  }
  return j;
}

Instance instance_from_json(const Json& j) {
  expect_schema(j, kInstanceSchema);
  Instance inst;
  inst.n = j.at("n").get<int>();
  if (j.contains("paths")) {
    for (const auto& p : j.at("paths")) {
      inst.paths.emplace_back(ints(p));
      if (inst.paths.back().size() != inst.n) throw InputError("path length differs from n");
    }
  }
  if (j.contains("directions")) {
    std::vector<Direction> dirs;
    for (const auto& d : j.at("directions")) dirs.push_back(direction_from_json(d));
    inst.directions = std::move(dirs);
  }
  if (j.contains("digraphs")) {
    for (const auto& g : j.at("digraphs")) {
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : g.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      DigraphSpec spec{Digraph(inst.n, std::move(edges)), std::nullopt};
      if (g.contains("order")) spec.order = TopOrder{ints(g.at("order"))};
      inst.digraphs.push_back(std::move(spec));
    }
  }
  if (inst.paths.empty() && inst.digraphs.empty()) throw InputError("instance has neither paths nor digraphs");
  if (!inst.paths.empty() && !inst.digraphs.empty()) throw InputError("instance mixes paths and digraphs");
  return inst;
}

Json points_to_json(const PointSet& pts, const std::vector<Direction>* dirs, const std::string* provenance) {
  Json points = Json::array();
  for (const auto& p : pts.points()) points.push_back(point_to_json(p));
  Json j{{"schema", kPointsSchema}, {"points", points}};
  if (dirs) {
    Json d = Json::array();
    for (const auto& v : *dirs) d.push_back(direction_to_json(v));
    j["directions"] = d;
  }
  if (provenance) j["provenance"] = *provenance;
  return j;
}

PointSet points_from_json(const Json& j) {
  expect_schema(j, kPointsSchema);
  std::vector<Point2> pts;
  for (const auto& p : j.at("points")) pts.push_back(point_from_json(p));
  return PointSet(std::move(pts));
}

std::optional<std::vector<Direction>> point_directions_from_json(const Json& j) {
  if (!j.contains("directions")) return std::nullopt;
  std::vector<Direction> dirs;
  for (const auto& d : j.at("directions")) dirs.push_back(direction_from_json(d));
  return dirs;
}

Json embedding_to_json(const Embedding& e) {
  const std::string prov = to_string(e.provenance);
  Json j = points_to_json(e.points, &e.directions, &prov);
  return j;
}

Json certificate_to_json(const FarkasCertificate& c, const LpProblem& p) {
  Json m = Json::array();
  for (const auto& x : c.multipliers) m.push_back(rat_to_json(x));
  return Json{{"multipliers", m}, {"combined_rhs", rat_to_json(c.combined_rhs(p))}, {"verified", c.verifies(p)}};
}

Json verdict_to_json(const EmbedResult& r) {
  Json j{{"schema", kVerdictSchema}};
  if (const auto* e = std::get_if<Embedding>(&r)) {
    j["feasible"] = true;
    j["reason"] = nullptr;
    j["witness"] = embedding_to_json(*e);
    return j;
  }
  const auto& no = std::get<NoEmbedding>(r);
  j["feasible"] = false;
  j["reason"] = to_string(no.reason);
  j["detail"] = no.detail;
  if (no.certificate && no.problem) j["certificate"] = certificate_to_json(*no.certificate, *no.problem);
  return j;
}

Json wiring_to_json(const WiringDiagram& w) {
  Json c = Json::array();
  for (const auto& [a, b] : w.crossings) c.push_back({a, b});
  Json j{{"schema", kWiringSchema}, {"n", w.n}, {"crossings", c}};
  if (!w.initial.empty()) j["initial"] = w.initial;
  return j;
}

WiringDiagram wiring_from_json(const Json& j) {
  expect_schema(j, kWiringSchema);
  WiringDiagram w;
  w.n = j.at("n").get<int>();
  for (const auto& c : j.at("crossings")) w.crossings.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  if (j.contains("initial")) w.initial = ints(j.at("initial"));
  return w;
}

Json gmse_to_json(const GmseInstance& g) { return Json{{"schema", kGmseSchema}, {"n", g.n}, {"paths", g.paths}}; }

GmseInstance gmse_from_json(const Json& j) {
  expect_schema(j, kGmseSchema);
  return GmseInstance{j.at("n").get<int>(), j.at("paths").get<std::vector<std::vector<int>>>()};
}

Json gap_sensitive_to_json(const GapSensitive& g) {
  Json paths = Json::array();
  for (const auto& p : g.paths.paths()) paths.push_back(path_to_json(p));
  const auto xs = [](const VerticalLineConfig& cfg) {
    Json a = Json::array();
    for (const auto& x : cfg.xs()) a.push_back(rat_to_json(x));
    return a;
  };
  return Json{{"schema", kGapSchema},
              {"n", g.paths.n()},
              {"paths", paths},
              {"feasible_xs", xs(g.feasible_cfg)},
              {"infeasible_xs", xs(g.infeasible_cfg)}};
}

GapSensitive gap_sensitive_from_json(const Json& j) {
  expect_schema(j, kGapSchema);
  std::vector<PathPerm> paths;
  for (const auto& p : j.at("paths")) paths.emplace_back(ints(p));
  const auto xs = [](const Json& a) {
    std::vector<Rat> out;
    for (const auto& x : a) out.push_back(rat_from_json(x));
    return VerticalLineConfig(std::move(out));
  };
  return GapSensitive{PathSet(std::move(paths)), xs(j.at("feasible_xs")), xs(j.at("infeasible_xs"))};
}

Json circular_sequence_to_json(const CircularSequence& cs) {
  Json snaps = Json::array();
  for (const auto& s : cs.snapshots) snaps.push_back(path_to_json(s));
  Json swaps = Json::array();
  for (const auto& s : cs.swaps) {
    swaps.push_back(Json{{"pair", {s.a, s.b}}, {"projection", direction_to_json(s.projection)}});
  }
  return Json{{"schema", kCircseqSchema}, {"initial", path_to_json(cs.initial)}, {"swaps", swaps}, {"snapshots", snaps}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace monoseq::cli
