#pragma once

// JSON and CSV encodings of the toolkit's reports. Exact integers are written
// as decimal strings; non-finite reals become JSON null.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "somix/bounds.hpp"
#include "somix/branching.hpp"
#include "somix/diagnostics.hpp"
#include "somix/walk.hpp"

namespace somix::io {

using nlohmann::json;

inline constexpr const char* kProfileSchema = "somix.profile/1";
inline constexpr const char* kLemmaSchema = "somix.lemma_report/1";
inline constexpr const char* kTermsSchema = "somix.terms/1";
inline constexpr const char* kBoundSchema = "somix.bound_report/1";
inline constexpr const char* kMixingSchema = "somix.mixing_time/1";
inline constexpr const char* kTraceSchema = "somix.trace_stats/1";
inline constexpr const char* kDecaySchema = "somix.decay_check/1";

json to_json(const FourierProfile& profile);
json to_json(const LemmaReport& report);
json lemma_document(const std::vector<LemmaReport>& reports, double eps);
json terms_document(const OddLabel& label);
json to_json(const BoundReport& report);
json to_json(const MixingEstimate& estimate, int n, const AngleLaw& law);
json to_json(const TraceStats& stats);
json to_json(const DecayReport& report);

// Throws DomainError describing the first schema violation. Dispatches on the
// document's "schema" field.
void validate_document(const json& doc);

// %.17g, or "nan"/"inf" spelled out.
std::string format_real(double x);

void write_lemma_csv(std::ostream& out, const std::vector<LemmaReport>& reports);
void write_bound_csv(std::ostream& out, const BoundReport& report);
void write_trace_csv(std::ostream& out, const TraceStats& stats);

}  // namespace somix::io
