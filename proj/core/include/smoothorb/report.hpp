#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "smoothorb/classification.hpp"
#include "smoothorb/enumeration.hpp"
#include "smoothorb/grassmann.hpp"
#include "smoothorb/matroid.hpp"
#include "smoothorb/polytope.hpp"

namespace smoothorb {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Text, Json };

struct MatroidAnalysis {
  int n = 0;
  int k = 0;
  int dim = 0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  ClassifierVerdict verdict;
};

MatroidAnalysis analyze(const Matroid& m);

/// {"simple", "factors", "witness"}; absent parts are null.
Json to_json(const ClassifierVerdict& verdict);
/// Throws Errc::Parse on schema mismatch.
ClassifierVerdict verdict_from_json(const Json& j);

Json to_json(const ValidationReport& report);
Json to_json(const MatroidAnalysis& analysis);
Json to_json(const VertexGraph& graph);
Json to_json(const PlueckerVector& p);
Json to_json(const MomentPoint& mu);
Json to_json(const SmoothnessReport& report);
Json to_json(const BlockSplit& split, const ComponentDecomposition& partition);
Json to_json(const VerificationReport& report, bool timing);

// Every render_* result ends with a newline and is byte-stable for fixed input.
std::string render(const ValidationReport& report, OutputFormat format);
std::string render(const MatroidAnalysis& analysis, OutputFormat format);
std::string render(const VertexGraph& graph, OutputFormat format);
std::string render(const PlueckerVector& p, OutputFormat format);
std::string render(const MomentPoint& mu, OutputFormat format);
std::string render(const SmoothnessReport& report, OutputFormat format);
std::string render(const BlockSplit& split, const ComponentDecomposition& partition, OutputFormat format);
std::string render(const VerificationReport& report, OutputFormat format, bool timing = false);

}  // namespace smoothorb
