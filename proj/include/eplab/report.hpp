#pragma once

// JSON renderings of every report type, and the envelope each CLI
// invocation prints.  Non-finite doubles are written as null.

#include <string>

#include "json.hpp"

#include "eplab/classify.hpp"
#include "eplab/fuzz.hpp"
#include "eplab/generators.hpp"
#include "eplab/products.hpp"
#include "eplab/structure.hpp"

namespace eplab {

using Json = nlohmann::ordered_json;

std::string version_string();

struct ReportEnvelope {
  std::string command;
  Json inputs = Json::object();
  ToleranceConfig tolerances;
  Json result = Json::object();
  Json violations = Json::array();
  std::string version = version_string();
};

Json to_json(const ReportEnvelope& env);
ReportEnvelope envelope_from_json(const Json& j);

Json to_json(const ToleranceConfig& cfg);
ToleranceConfig tolerances_from_json(const Json& j);

Json to_json(const CMatrix& m);  // [[re, im], ...] row-major nested arrays
Json to_json(const RankDecision& d);
Json to_json(const ClassificationReport& r);
Json to_json(const BlockDecomposition& d);
Json to_json(const InclusionReport& r);
Json to_json(const Thm42Conditions& c);
Json to_json(const ProductReport& r);
Json to_json(const Thm53Report& r);
Json to_json(const RangeIdentityReport& r);
Json to_json(const JvReport& r);
Json to_json(const AngleReport& r);
Json to_json(const ExamplePair& ex);
Json to_json(const TruncationSeries& s);
Json to_json(const Violation& v);
Json to_json(const FuzzResult& r);

/// size,cos_min_angle,bouldin_cos,sigma_min_plus,ab_ep
std::string to_csv(const TruncationSeries& s);

}  // namespace eplab
