#pragma once

#include <iosfwd>
#include <json.hpp>
#include <string>

#include "eah/bounds.hpp"
#include "eah/extremal.hpp"
#include "eah/local_heights.hpp"
#include "eah/sweep.hpp"

namespace eah::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Double rounded to 15 significant digits; null for non-finite values.
Json real(double v);
/// Text rendering with 15 significant digits.
std::string fmt(double v);

Json to_json(const Point& p);
Json to_json(const ReductionData& r);
Json to_json(const HeightBreakdown& h);
Json to_json(const BoundCheck& c);
Json to_json(const Certificate& c);
Json to_json(const ExtremalCandidate& c);
Json summary_json(const SweepReport& report);
Json sweep_json(const SweepReport& report);

/// Frozen CSV column set for sweep rows.
const char* csv_header();
void write_csv(std::ostream& os, const SweepReport& report);
void write_summary_text(std::ostream& os, const SweepReport& report);

}  // namespace eah::cli
