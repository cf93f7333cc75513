#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "coxric/dihedral.hpp"
#include "coxric/gamma.hpp"
#include "coxric/invariants.hpp"
#include "coxric/isoperimetry.hpp"
#include "coxric/spectral.hpp"

namespace coxric {

// Rounds to the given number of significant decimal digits.
double round_significant(double x, int digits = 12);
// Rounds every floating-point value in place; -0 becomes 0.
void round_floats(nlohmann::json& j);
// "%.12g"
std::string format_number(double x);

nlohmann::json to_json(const LocalFunction& f);
nlohmann::json to_json(const CurvatureReport& r, bool with_minimizer);
// Full spectrum when requested, otherwise min / gap / max only.
nlohmann::json to_json(const SpectralReport& r, bool full_spectrum);
nlohmann::json to_json(const GapVerdict& v);
nlohmann::json to_json(const IsoReport& r);
nlohmann::json to_json(const IsoSummary& s, bool all_reports);
nlohmann::json to_json(const ReflectionSubgroup& h);
nlohmann::json to_json(const SphereClass& c);
nlohmann::json to_json(const CheckTally& c);
nlohmann::json to_json(const StructureReport& r);
nlohmann::json to_json(const FactorizationReport& r);
nlohmann::json to_json(const SuiteReport& r);

// Exhaustive subsets are expanded from their bitmask.
std::vector<Vertex> subset_members(const IsoReport& r);

void write_iso_csv(std::ostream& out, const IsoSummary& s);

}  // namespace coxric
