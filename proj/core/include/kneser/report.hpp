#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "kneser/classifier.hpp"
#include "kneser/profinite.hpp"
#include "kneser/transforms.hpp"

namespace kneser::report {

// {"surCritical", "conclusions", "witnesses", "roman", "measures", ...}
nlohmann::json classification(const ClassificationReport& r, const HybridGroup& g);
std::string classification_text(const ClassificationReport& r, const HybridGroup& g);

nlohmann::json step(const ETransformStep& s, const HybridGroup& g);
// One JSON object per line, then a final {"stop": reason} line.
std::string transcript_jsonl(const TransformTranscript& t, const HybridGroup& g);

nlohmann::json truncation(const TruncationPair& t);
nlohmann::json truncated_sum(const TruncatedSumReport& r);

}  // namespace kneser::report
