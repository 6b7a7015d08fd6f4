#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "swanson/cli/verify.hpp"
#include "swanson/physics.hpp"
#include "swanson/spectral.hpp"

namespace swanson::cli {

using json = nlohmann::json;

inline constexpr const char* kSchema = "swanson/1";

// Payloads written under "data". Each converts to and from JSON losslessly.
struct SpectrumResult {
  std::vector<ConvergedEigenvalue> eigenvalues;
  std::vector<double> closed_form;
};

struct NumrangeResult {
  NumericalRangeBoundary boundary;
  std::vector<BoundaryPoint> tangency;  // one per theta
  std::vector<Complex> eigenvalues;
  HyperbolaComparison hyperbola;
};

struct CompressResult {
  int n_modes = 0;
  std::vector<double> lambdas;
  CMatrix q_inv;
  CMatrix q;
  CMatrix h_hat;
  double pseudo_hermiticity_residual = 0.0;
};

struct EvolveResult {
  int n_modes = 0;
  std::vector<Complex> c0;
  EvolutionTrace trace;
};

void to_json(json& j, const ConvergedEigenvalue& v);
void from_json(const json& j, ConvergedEigenvalue& v);
void to_json(json& j, const BoundaryPoint& p);
void from_json(const json& j, BoundaryPoint& p);
void to_json(json& j, const NumericalRangeBoundary& b);
void from_json(const json& j, NumericalRangeBoundary& b);
void to_json(json& j, const HyperbolaComparison& h);
void from_json(const json& j, HyperbolaComparison& h);
void to_json(json& j, const PseudospectrumGrid& g);
void from_json(const json& j, PseudospectrumGrid& g);
void to_json(json& j, const SpectrumResult& r);
void from_json(const json& j, SpectrumResult& r);
void to_json(json& j, const NumrangeResult& r);
void from_json(const json& j, NumrangeResult& r);
void to_json(json& j, const CompressResult& r);
void from_json(const json& j, CompressResult& r);
void to_json(json& j, const EvolveResult& r);
void from_json(const json& j, EvolveResult& r);
void to_json(json& j, const Check& c);
void from_json(const json& j, Check& c);
void to_json(json& j, const VerificationReport& r);
void from_json(const json& j, VerificationReport& r);

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

// {"schema": ..., "config": config, "data": data}
json envelope(const json& config, const json& data);

// Checks the schema tag and returns the "data" member.
const json& payload(const json& doc);

std::string dump(const json& doc);

std::string spectrum_csv(const SpectrumResult& r);
std::string pseudospectrum_csv(const PseudospectrumGrid& g);
std::string numrange_csv(const NumrangeResult& r);
std::string evolve_csv(const EvolveResult& r);
std::string verification_csv(const VerificationReport& r);

// Writes to a sibling temp file and renames it over path. Throws
// std::runtime_error naming the path on failure; path is untouched then.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

// One tangency estimate per support line: the mean of its intersections with
// the neighbouring lines (a point on the line itself).
std::vector<BoundaryPoint> tangency_points(const NumericalRangeBoundary& b);

}  // namespace swanson::cli

// The core result types live in namespace swanson; expose the converters there
// so that nlohmann's argument-dependent lookup finds them.
namespace swanson {
using cli::from_json;
using cli::to_json;
}  // namespace swanson
