#include "commands.hpp"

#include "json_io.hpp"
#include "svg.hpp"

#include "monoseq/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <future>
#include <ostream>
#include <sstream>

namespace monoseq::cli {

namespace {

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MONOSEQ_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("MONOSEQ_SEED is not an unsigned integer: ") + env);
    }
  }
  return fallback;
}

struct Decision {
  EmbedResult result;
  std::optional<std::string> caveat;
  PathSet paths;
};

std::vector<TopOrder> orders_for(const Instance& inst) {
  std::vector<TopOrder> ts;
  for (const auto& g : inst.digraphs) {
    if (g.order) {
      ts.push_back(*g.order);
      continue;
    }
    auto t = topological_order(g.graph);
    if (auto* cyc = std::get_if<Cyclic>(&t)) {
      std::ostringstream os;
      os << "digraph " << ts.size() + 1 << " has a cycle:";
      for (int v : cyc->cycle) os << ' ' << v;
      throw InputError(os.str());
    }
    ts.push_back(std::get<TopOrder>(t));
  }
  return ts;
}

std::string resolve_mode(const std::string& mode, const Instance& inst, int k) {
  if (mode != "auto") return mode;
  if (inst.directions) return "fixed";
  if (k == 2) return "two-path";
  if (k == 3) return "three-free";
  throw InputError("no directions given and k = " + std::to_string(k) + "; free directions are supported for k <= 3");
}

Decision decide_instance(const Instance& inst, const std::string& requested) {
  std::vector<PathPerm> paths = inst.paths;
  std::vector<TopOrder> ts;
  std::vector<Digraph> gs;
  if (!inst.digraphs.empty()) {
    ts = orders_for(inst);
    for (const auto& g : inst.digraphs) gs.push_back(g.graph);
    for (const auto& t : ts) {
      try {
        paths.push_back(implied_path(t));
      } catch (const std::invalid_argument& e) {
        throw InputError(std::string("bad topological order: ") + e.what());
      }
    }
  }
  PathSet ps(paths);
  const std::string mode = resolve_mode(requested, inst, ps.k());
  if (mode == "fixed") {
    if (!inst.directions) throw InputError("fixed mode needs \"directions\"");
    if (static_cast<int>(inst.directions->size()) != ps.k()) throw InputError("one direction per path expected");
  } else if (mode == "three-free" && ps.k() != 3) {
    throw InputError("three-free mode needs exactly 3 paths");
  } else if (mode == "two-path" && ps.k() != 2) {
    throw InputError("two-path mode needs exactly 2 paths");
  }

  if (!gs.empty() && mode != "two-path") {
    std::variant<std::vector<Direction>, FreeThree> dirs = FreeThree{};
    if (mode == "fixed") dirs = *inst.directions;
    auto r = solve_digraphs(gs, ts, dirs);
    if (auto* de = std::get_if<DigraphEmbedding>(&r)) return {std::move(de->embedding), de->caveat, std::move(ps)};
    return {std::move(std::get<NoEmbedding>(r)), std::nullopt, std::move(ps)};
  }
  if (mode == "fixed") return {solve_fixed(ps, *inst.directions), std::nullopt, ps};
  if (mode == "three-free") return {solve_three_free(ps), std::nullopt, ps};
  if (mode == "two-path") {
    return {embed_two_paths(ps[0], ps[1], VerticalLineConfig({Rat(0), Rat(1)})), std::nullopt, ps};
  }
  throw InputError("unknown mode " + mode);
}

struct Outcome {
  int code = kExitError;
  Json json;
  std::string error;
};

// Runs body, mapping input and geometry errors to exit status 2.
template <typename Body>
Outcome guarded(Body body) {
  try {
    return body();
  } catch (const DegeneratePosition& e) {
    Json triples = e.collinear_triples();
    std::ostringstream os;
    os << e.what();
    if (!e.collinear_triples().empty()) os << "; collinear triples: " << triples.dump();
    return {kExitError, {}, os.str()};
  } catch (const InputError& e) {
    return {kExitError, {}, e.what()};
  } catch (const Json::exception& e) {
    return {kExitError, {}, std::string("invalid instance: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    return {kExitError, {}, std::string("invalid input: ") + e.what()};
  } catch (const std::domain_error& e) {
    return {kExitError, {}, std::string("invalid input: ") + e.what()};
  } catch (const std::runtime_error& e) {
    return {kExitError, {}, e.what()};
  }
}

Outcome decide_file(const std::string& file, const std::string& mode, const std::optional<std::string>& lp_out,
                    int radial_trials, std::uint64_t seed) {
  return guarded([&]() -> Outcome {
    const Instance inst = instance_from_json(read_json_file(file));
    Decision d = decide_instance(inst, mode);
    Json j = verdict_to_json(d.result);
    if (d.caveat) j["caveat"] = *d.caveat;
    if (radial_trials > 0) {
      if (d.paths.k() != 3) throw InputError("--radial-trials needs exactly 3 paths");
      const auto rep = theorem3_consistency(d.paths, radial_trials, seed);
      Json cex = Json::array();
      for (const auto& dirs : rep.counterexamples) {
        Json t = Json::array();
        for (const auto& v : dirs) t.push_back(direction_to_json(v));
        cex.push_back(t);
      }
      j["radial_consistency"] = Json{{"trials", rep.trials},
                           {"agreements", rep.agreements},
                           {"seed", seed},
                           {"consistent", rep.consistent()},
                           {"counterexamples", cex}};
    }
    if (lp_out) {
      if (const auto* no = std::get_if<NoEmbedding>(&d.result); no && no->problem) {
        write_text_file(*lp_out, to_lp_format(*no->problem));
      }
    }
    return {is_embedding(d.result) ? kExitFeasible : kExitInfeasible, std::move(j), {}};
  });
}

int emit(const Outcome& o, std::ostream& out, std::ostream& err) {
  if (!o.error.empty()) err << "error: " << o.error << '\n';
  if (!o.json.is_null()) out << o.json.dump(2) << '\n';
  return o.code;
}

std::vector<Rat> parse_rats(const std::vector<std::string>& texts) {
  std::vector<Rat> out;
  for (const auto& t : texts) out.push_back(Rat::parse(t));
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monotone simultaneous embeddings of directed paths in exact arithmetic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "monoseq 0.1.0");

  // decide
  auto* decide = app.add_subcommand("decide", "Decide whether an instance admits an embedding");
  std::vector<std::string> decide_files;
  std::string mode = "auto";
  std::optional<std::string> lp_out;
  int jobs = 1;
  int radial_trials = 0;
  std::optional<std::uint64_t> seed_flag;
  decide->add_option("files", decide_files, "Instance files")->required();
  decide->add_option("--mode", mode, "auto, fixed, three-free or two-path")
      ->check(CLI::IsMember({"auto", "fixed", "three-free", "two-path"}));
  decide->add_option("--lp-out", lp_out, "Write the infeasible LP in LP text format");
  decide->add_option("--jobs,-j", jobs, "Instance files solved in parallel")->check(CLI::PositiveNumber);
  decide->add_option("--radial-trials", radial_trials, "Sample this many same-radial-order direction triples");
  decide->add_option("--seed", seed_flag, "RNG seed (default: MONOSEQ_SEED or 1)");

  // embed
  auto* embed = app.add_subcommand("embed", "Construct an embedding and write points and an SVG drawing");
  std::string embed_file;
  std::optional<std::string> svg_out;
  std::optional<std::string> points_out;
  bool dual_view = false;
  int precision = 12;
  embed->add_option("file", embed_file, "Instance file")->required();
  embed->add_option("--mode", mode, "auto, fixed, three-free or two-path")
      ->check(CLI::IsMember({"auto", "fixed", "three-free", "two-path"}));
  embed->add_option("--svg", svg_out, "SVG output path");
  embed->add_option("--points", points_out, "Exact points JSON output path");
  embed->add_flag("--dual", dual_view, "Draw the dual line arrangement instead of the primal drawing");
  embed->add_option("--precision", precision, "Significant digits in SVG coordinates")->check(CLI::Range(1, 17));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check a point set against an instance");
  std::string verify_points;
  std::string verify_instance;
  bool allow_reverse = false;
  verify_cmd->add_option("points", verify_points, "Points file")->required();
  verify_cmd->add_option("instance", verify_instance, "Instance file")->required();
  verify_cmd->add_flag("--allow-reverse", allow_reverse, "Accept a path or its reverse");

  // order
  auto* order_cmd = app.add_subcommand("order", "Adjust a path set and compute its allowable ordering");
  std::string order_file;
  std::vector<int> anchor{1, 2};
  order_cmd->add_option("file", order_file, "Instance file")->required();
  order_cmd->add_option("--anchor", anchor, "Anchor pair i j")->expected(2);

  // circseq
  auto* circ = app.add_subcommand("circseq", "Half-period of the circular sequence of a point set");
  std::string circ_file;
  bool perturb = false;
  std::optional<std::string> check_file;
  circ->add_option("points", circ_file, "Points file")->required();
  circ->add_flag("--perturb", perturb, "Resolve degeneracies by symbolic perturbation");
  circ->add_option("--check", check_file, "Instance whose paths must appear (or their reverses)");

  // dual
  auto* dual_cmd = app.add_subcommand("dual", "Dual lines of a point set and their orders on vertical lines");
  std::string dual_file;
  std::vector<std::string> at;
  dual_cmd->add_option("points", dual_file, "Points file")->required();
  dual_cmd->add_option("--at", at, "x-coordinates of vertical lines (p or p/q)");
  dual_cmd->add_option("--svg", svg_out, "SVG output path");
  dual_cmd->add_option("--precision", precision, "Significant digits in SVG coordinates")->check(CLI::Range(1, 17));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate instances");
  std::string kind;
  int m = 1;
  int n = 0;
  int budget = 0;
  bool search = false;
  std::optional<std::string> wiring_file;
  std::optional<std::string> out_file;
  gen->add_option("kind", kind, "expo, nonrealizable, gap-sensitive or gmse")
      ->required()
      ->check(CLI::IsMember({"expo", "nonrealizable", "gap-sensitive", "gmse"}));
  gen->add_option("--m", m, "Family parameter for expo")->check(CLI::PositiveNumber);
  gen->add_option("--n", n, "Vertex or line count for searches and random wirings");
  gen->add_option("--budget", budget, "Search budget");
  gen->add_option("--seed", seed_flag, "RNG seed; for gap-sensitive it implies --search");
  gen->add_flag("--search", search, "Re-run the seeded search instead of printing the frozen fixture");
  gen->add_option("--wiring", wiring_file, "Wiring diagram for gmse");
  gen->add_option("-o,--out", out_file, "Output file (default: stdout)");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Reduce a wiring diagram to a GMSE instance");
  std::string reduce_file;
  reduce->add_option("wiring", reduce_file, "Wiring diagram file")->required();
  reduce->add_option("-o,--out", out_file, "Output file (default: stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  const auto write_or_print = [&](const Json& j) -> Outcome {
    if (out_file) {
      write_text_file(*out_file, j.dump(2) + "\n");
      return {kExitFeasible, {}, {}};
    }
    return {kExitFeasible, j, {}};
  };

  if (decide->parsed()) {
    const std::uint64_t seed = resolve_seed(seed_flag, 1);
    if (decide_files.size() == 1) {
      return emit(decide_file(decide_files.front(), mode, lp_out, radial_trials, seed), out, err);
    }
    std::vector<Outcome> results(decide_files.size());
    for (std::size_t begin = 0; begin < decide_files.size(); begin += static_cast<std::size_t>(jobs)) {
      const std::size_t end = std::min(decide_files.size(), begin + static_cast<std::size_t>(jobs));
      std::vector<std::future<Outcome>> running;
      for (std::size_t f = begin; f < end; ++f) {
        running.push_back(std::async(std::launch::async, [&, f] {
          return decide_file(decide_files[f], mode, std::nullopt, radial_trials, seed);
        }));
      }
      for (std::size_t f = begin; f < end; ++f) results[f] = running[f - begin].get();
    }
    Json batch{{"schema", kBatchSchema}, {"results", Json::array()}};
    int worst = kExitFeasible;
    for (std::size_t f = 0; f < results.size(); ++f) {
      Json entry{{"file", decide_files[f]}, {"exit", results[f].code}};
      if (!results[f].json.is_null()) entry["verdict"] = results[f].json;
      if (!results[f].error.empty()) entry["error"] = results[f].error;
      batch["results"].push_back(entry);
      worst = std::max(worst, results[f].code);
    }
    out << batch.dump(2) << '\n';
    return worst;
  }

  if (embed->parsed()) {
    return emit(guarded([&]() -> Outcome {
                  const Instance inst = instance_from_json(read_json_file(embed_file));
                  Decision d = decide_instance(inst, mode);
                  Json j = verdict_to_json(d.result);
                  if (d.caveat) j["caveat"] = *d.caveat;
                  const auto* e = std::get_if<Embedding>(&d.result);
                  if (!e) return {kExitInfeasible, std::move(j), {}};
                  if (points_out) write_text_file(*points_out, embedding_to_json(*e).dump(2) + "\n");
                  if (svg_out) {
                    write_text_file(*svg_out, dual_view ? render_dual(e->points, e->directions, precision)
                                                        : render_primal(e->points, e->directions, d.paths, precision));
                  }
                  return {kExitFeasible, std::move(j), {}};
                }),
                out, err);
  }

  if (verify_cmd->parsed()) {
    return emit(guarded([&]() -> Outcome {
                  const Json pj = read_json_file(verify_points);
                  const PointSet pts = points_from_json(pj);
                  const Instance inst = instance_from_json(read_json_file(verify_instance));
                  if (inst.paths.empty()) throw InputError("verify needs an instance with paths");
                  auto dirs = inst.directions ? inst.directions : point_directions_from_json(pj);
                  if (!dirs) throw InputError("no directions in the instance or the points file");
                  const PathSet ps(inst.paths);
                  const VerifyResult v = verify(pts, *dirs, ps, allow_reverse);
                  Json j{{"schema", kVerifySchema}, {"ok", v.ok}};
                  if (!v.ok) j["diagnostic"] = v.diagnostic;
                  return {v.ok ? kExitFeasible : kExitInfeasible, std::move(j), {}};
                }),
                out, err);
  }

  if (order_cmd->parsed()) {
    return emit(guarded([&]() -> Outcome {
                  const Instance inst = instance_from_json(read_json_file(order_file));
                  if (inst.paths.empty()) throw InputError("order needs an instance with paths");
                  const PathSet ps(inst.paths);
                  const AdjustedPathSet aps = adjust(ps, anchor[0], anchor[1]);
                  Json j{{"schema", kOrderSchema}, {"anchor", {anchor[0], anchor[1]}}, {"flipped", aps.flipped}};
                  const auto seq = allowable_order(aps);
                  j["allowable"] = seq.has_value();
                  if (seq) {
                    Json order = Json::array();
                    Json paths = Json::array();
                    for (std::size_t t = 0; t < seq->paths.size(); ++t) {
                      order.push_back(seq->source[t] + 1);
                      paths.push_back(path_to_json(seq->paths[t]));
                    }
                    j["order"] = order;
                    j["paths"] = paths;
                  }
                  return {seq ? kExitFeasible : kExitInfeasible, std::move(j), {}};
                }),
                out, err);
  }

  if (circ->parsed()) {
    return emit(guarded([&]() -> Outcome {
                  const PointSet pts = points_from_json(read_json_file(circ_file));
                  const CircularSequence cs = circular_sequence(pts, perturb);
                  Json j = circular_sequence_to_json(cs);
                  int code = kExitFeasible;
                  if (check_file) {
                    const Instance inst = instance_from_json(read_json_file(*check_file));
                    Json contained = Json::array();
                    for (const auto& p : inst.paths) {
                      const bool c = contains_permutation(cs, p);
                      contained.push_back(c);
                      if (!c) code = kExitInfeasible;
                    }
                    j["contained"] = contained;
                  }
                  return {code, std::move(j), {}};
                }),
                out, err);
  }

  if (dual_cmd->parsed()) {
    return emit(guarded([&]() -> Outcome {
                  const PointSet pts = points_from_json(read_json_file(dual_file));
                  const auto lines = pts.duals();
                  Json j{{"schema", kDualSchema}, {"lines", Json::array()}, {"orders", Json::array()}};
                  for (const auto& l : lines) {
                    j["lines"].push_back(Json{{"slope", rat_to_json(l.slope)}, {"intercept", rat_to_json(l.intercept)}});
                  }
                  std::vector<Direction> dirs;
                  for (const auto& x : parse_rats(at)) {
                    try {
                      j["orders"].push_back(Json{{"x", rat_to_json(x)}, {"order", path_to_json(intersection_order(lines, x))}});
                    } catch (const OrdinateTie& tie) {
                      throw InputError("lines " + std::to_string(tie.pair().first) + " and " +
                                       std::to_string(tie.pair().second) + " meet x = " + x.str() + " at the same point");
                    }
                    dirs.push_back(vertical_to_direction(x));
                  }
                  if (svg_out) write_text_file(*svg_out, render_dual(pts, dirs, precision));
                  return {kExitFeasible, std::move(j), {}};
                }),
                out, err);
  }

  if (gen->parsed()) {
    return emit(guarded([&]() -> Outcome {
                  if (kind == "expo") {
                    const PathSet ps = gen_expo(m);
                    return write_or_print(instance_to_json(Instance{ps.n(), ps.paths(), std::nullopt, {}}));
                  }
                  if (kind == "nonrealizable") {
                    std::optional<PathSet> ps = gen_nonrealizable_triple();
                    if (search || seed_flag) {
                      ps = search_nonrealizable_triple(n > 0 ? n : 9, resolve_seed(seed_flag, 1),
                                                       budget > 0 ? budget : 200000);
                      if (!ps) return {kExitInfeasible, {}, "no non-realizable triple found within the budget"};
                    }
                    return write_or_print(instance_to_json(Instance{ps->n(), ps->paths(), std::nullopt, {}}));
                  }
                  if (kind == "gap-sensitive") {
                    std::optional<GapSensitive> g = gap_sensitive_fixture();
                    if (search || seed_flag) {
                      g = find_gap_sensitive(resolve_seed(seed_flag, 7), budget > 0 ? budget : 20000);
                      if (!g) return {kExitInfeasible, {}, "NOT_FOUND: no gap-sensitive instance within the budget"};
                    }
                    return write_or_print(gap_sensitive_to_json(*g));
                  }
                  WiringDiagram w;
                  if (wiring_file) {
                    w = wiring_from_json(read_json_file(*wiring_file));
                  } else {
                    if (n < 2) throw InputError("gen gmse needs --wiring FILE or --n N >= 2");
                    std::mt19937_64 rng(resolve_seed(seed_flag, 1));
                    w = random_wiring(n, rng);
                  }
                  return write_or_print(gmse_to_json(reduce_stretchability(w)));
                }),
                out, err);
  }

  if (reduce->parsed()) {
    return emit(guarded([&]() -> Outcome {
                  return write_or_print(gmse_to_json(reduce_stretchability(wiring_from_json(read_json_file(reduce_file)))));
                }),
                out, err);
  }
  return kExitError;
}

}  // namespace monoseq::cli
