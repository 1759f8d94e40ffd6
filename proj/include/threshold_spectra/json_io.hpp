#pragma once

#include <string>

#include <json.hpp>

#include "threshold_spectra/brouwer.hpp"
#include "threshold_spectra/interlace.hpp"
#include "threshold_spectra/spectra.hpp"

namespace threshold_spectra {

/// Key order is insertion order, so serialized documents are stable.
using Json = nlohmann::ordered_json;

/// Significant digits kept for every floating value written out.
inline constexpr int kOutputDigits = 12;

/// x rounded to 12 significant digits. Idempotent.
double round_output(double x);

/// round_output(x) as a JSON number, or null when x is not finite.
Json output_number(double x);

/// Inverse of Provenance::to_string. Throws InputError on unknown tags.
Provenance parse_provenance(const std::string& tag);

TheoremId parse_theorem_id(const std::string& id);

void to_json(Json& j, const Spectrum& s);
void from_json(const Json& j, Spectrum& s);

void to_json(Json& j, const ChainLink& link);
void from_json(const Json& j, ChainLink& link);

void to_json(Json& j, const InterlacingReport& r);
void from_json(const Json& j, InterlacingReport& r);

void to_json(Json& j, const BrouwerReport& r);
void from_json(const Json& j, BrouwerReport& r);

/// 2-space indented document followed by a newline.
std::string dump(const Json& j);

}  // namespace threshold_spectra
