#pragma once

#include "monoseq/digraphs.hpp"
#include "monoseq/embedder.hpp"
#include "monoseq/generators.hpp"
#include "monoseq/sequences.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace monoseq::cli {

using Json = nlohmann::json;

inline constexpr const char* kInstanceSchema = "monoseq.instance/1";
inline constexpr const char* kPointsSchema = "monoseq.points/1";
inline constexpr const char* kVerdictSchema = "monoseq.verdict/1";
inline constexpr const char* kOrderSchema = "monoseq.order/1";
inline constexpr const char* kCircseqSchema = "monoseq.circseq/1";
inline constexpr const char* kDualSchema = "monoseq.dual/1";
inline constexpr const char* kWiringSchema = "monoseq.wiring/1";
inline constexpr const char* kGmseSchema = "monoseq.gmse/1";
inline constexpr const char* kGapSchema = "monoseq.gap-sensitive/1";
inline constexpr const char* kBatchSchema = "monoseq.batch/1";
inline constexpr const char* kVerifySchema = "monoseq.verify/1";

// Input errors; the CLI maps them to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DigraphSpec {
  Digraph graph;
  std::optional<TopOrder> order;
};

struct Instance {
  int n = 0;
  std::vector<PathPerm> paths;
  std::optional<std::vector<Direction>> directions;
  std::vector<DigraphSpec> digraphs;
};

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json path_to_json(const PathPerm& p);
Json direction_to_json(const Direction& d);
Direction direction_from_json(const Json& j);
Json point_to_json(const Point2& p);
Point2 point_from_json(const Json& j);

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json points_to_json(const PointSet& pts, const std::vector<Direction>* dirs, const std::string* provenance);
PointSet points_from_json(const Json& j);
std::optional<std::vector<Direction>> point_directions_from_json(const Json& j);

Json embedding_to_json(const Embedding& e);
Json certificate_to_json(const FarkasCertificate& c, const LpProblem& p);
Json verdict_to_json(const EmbedResult& r);

Json wiring_to_json(const WiringDiagram& w);
WiringDiagram wiring_from_json(const Json& j);
Json gmse_to_json(const GmseInstance& g);
GmseInstance gmse_from_json(const Json& j);
Json gap_sensitive_to_json(const GapSensitive& g);
GapSensitive gap_sensitive_from_json(const Json& j);
Json circular_sequence_to_json(const CircularSequence& cs);

// Reads and parses a JSON file; throws InputError with the file name.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace monoseq::cli
