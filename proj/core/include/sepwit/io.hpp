#ifndef SEPWIT_IO_HPP
#define SEPWIT_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "sepwit/witness.hpp"

namespace sepwit::io {

using json = nlohmann::json;

// Matrix JSON: {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json operator_to_json(const HermitianOperator& h);
HermitianOperator operator_from_json(const json& j);

// Pair JSON: {"A1": matrix, "A2": matrix, "B1": matrix, "B2": matrix}.
json pair_to_json(const ProductPair& pair);
ProductPair pair_from_json(const json& j);

// State JSON: {"dimA": n, "dimB": m, "matrix": matrix}.
json state_to_json(const DensityState& rho);
DensityState state_from_json(const json& j);

json witness_report_to_json(const WitnessReport& rep);
json effectiveness_to_json(const EffectivenessVerdict& v);
json detection_to_json(const DetectionReport& rep);

std::string region_to_csv(const PlanarRegion& region);
std::string cloud_to_csv(const PointCloud& cloud);

json load_json(const std::filesystem::path& path);

/// Atomic write: temp file in the target directory, then rename.
void write_file(const std::filesystem::path& path, const std::string& contents);

std::string to_string(ProductTestOutcome o);
std::string to_string(SideVerdict v);

}  // namespace sepwit::io

#endif
