#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ellfm/duality_ss.hpp"
#include "ellfm/errors.hpp"
#include "ellfm/fm_calculus.hpp"
#include "ellfm/intersection_ring.hpp"
#include "ellfm/stability.hpp"

// JSON interchange. Rationals are strings "p/q" in lowest terms; every
// object below round-trips bit-exactly through dump/parse.

namespace ellfm {

using json = nlohmann::json;

void to_json(json& j, const Rational& q);
void from_json(const json& j, Rational& q);

void to_json(json& j, const SurfaceModel& m);
void from_json(const json& j, SurfaceModel& m);
void to_json(json& j, const SurfaceClass& x);
void from_json(const json& j, SurfaceClass& x);
void to_json(json& j, const ThreefoldClass& v);
void from_json(const json& j, ThreefoldClass& v);
void to_json(json& j, const DivisorClassX& D);
void from_json(const json& j, DivisorClassX& D);

void to_json(json& j, const LineBundleX& lb);
void from_json(const json& j, LineBundleX& lb);
void to_json(json& j, const TruncatedChar& v);
void from_json(const json& j, TruncatedChar& v);
void to_json(json& j, const Polarization& pol);
void from_json(const json& j, Polarization& pol);
void to_json(json& j, WitType w);
void from_json(const json& j, WitType& w);
void to_json(json& j, KernelChoice k);
void from_json(const json& j, KernelChoice& k);
void to_json(json& j, const TransformResult& t);

void to_json(json& j, const SheafScenario& sc);
void from_json(const json& j, SheafScenario& sc);
void to_json(json& j, const TermRef& t);
void from_json(const json& j, TermRef& t);
void to_json(json& j, const DerivedRelation& r);
void from_json(const json& j, DerivedRelation& r);
void to_json(json& j, const Conclusion& c);
void from_json(const json& j, Conclusion& c);
void to_json(json& j, const PageGrid& g);
void to_json(json& j, const EngineRun& run);

void to_json(json& j, const DestabilizerCandidate& c);
void from_json(const json& j, DestabilizerCandidate& c);
void to_json(json& j, const TraceStep& s);
void from_json(const json& j, TraceStep& s);
void to_json(json& j, const StabilityReport& r);
void from_json(const json& j, StabilityReport& r);

/// Summary without the per-candidate reports unless `with_reports`.
json scan_to_json(const ScanResult& res, bool with_reports);
json theorem_to_json(const TheoremSummary& t, bool with_reports);

/// Parses text into T, mapping JSON errors to InputError.
template <class T>
T parse_json(std::string_view text)
{
    try {
        return json::parse(text).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace ellfm
