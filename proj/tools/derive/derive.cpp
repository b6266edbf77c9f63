// Re-derives the frozen fixtures from their seeded searches, checks them with
// exact LP certificates and writes the JSON fixture files.
//
//   monoseq_derive <output-dir>

#include "json_io.hpp"

#include <iostream>

using namespace monoseq;
using namespace monoseq::cli;

namespace {

bool lp_infeasible(const PathSet& paths, const VerticalLineConfig& cfg) {
  const LpProblem lp = build_embedding_lp(paths.paths(), cfg);
  const auto res = feasible(lp);
  const auto* cert = std::get_if<FarkasCertificate>(&res);
  return cert && cert->verifies(lp);
}

bool lp_feasible(const PathSet& paths, const VerticalLineConfig& cfg) {
  const LpProblem lp = build_embedding_lp(paths.paths(), cfg);
  const auto res = feasible(lp);
  const auto* sol = std::get_if<LpSolution>(&res);
  return sol && lp.satisfied_by(sol->values);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: monoseq_derive <output-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  bool ok = true;

  const auto triple = search_nonrealizable_triple(9, 1, 200000);
  if (!triple || !(*triple == gen_nonrealizable_triple())) {
    std::cerr << "non-realizable search no longer reproduces the frozen triple\n";
    ok = false;
  }
  const PathSet frozen = gen_nonrealizable_triple();
  if (!allowable_order(adjust(frozen, 1, 2))) {
    std::cerr << "frozen triple is not allowable\n";
    ok = false;
  }
  const auto three = solve_three_free(frozen);
  const auto* no = std::get_if<NoEmbedding>(&three);
  if (!no || no->reason != NoReason::LpInfeasible || !no->certificate->verifies(*no->problem)) {
    std::cerr << "frozen triple is not certified infeasible\n";
    ok = false;
  }
  write_text_file(dir + "/nonrealizable_triple.json",
                  instance_to_json(Instance{frozen.n(), frozen.paths(), std::nullopt, {}}).dump(2) + "\n");

  const auto gap = find_gap_sensitive(7, 20000);
  const GapSensitive fixture = gap_sensitive_fixture();
  if (!gap || !(gap->paths == fixture.paths) || !(gap->feasible_cfg == fixture.feasible_cfg) ||
      !(gap->infeasible_cfg == fixture.infeasible_cfg)) {
    std::cerr << "gap-sensitive search no longer reproduces the frozen witness\n";
    ok = false;
  }
  if (!lp_feasible(fixture.paths, fixture.feasible_cfg) || !lp_infeasible(fixture.paths, fixture.infeasible_cfg)) {
    std::cerr << "gap-sensitive witness does not flip\n";
    ok = false;
  }
  write_text_file(dir + "/gap_sensitive.json", gap_sensitive_to_json(fixture).dump(2) + "\n");

  for (int m = 1; m <= 5; ++m) {
    const PathSet ps = gen_expo(m);
    write_text_file(dir + "/expo_m" + std::to_string(m) + ".json",
                    instance_to_json(Instance{ps.n(), ps.paths(), std::nullopt, {}}).dump(2) + "\n");
  }

  std::cout << (ok ? "fixtures verified and written to " : "fixture check FAILED; files written to ") << dir << '\n';
  return ok ? 0 : 1;
}
