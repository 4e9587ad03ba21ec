#ifndef SEPWIT_WITNESS_HPP
#define SEPWIT_WITNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "sepwit/optimizer.hpp"
#include "sepwit/range.hpp"

namespace sepwit {

enum class WitnessSide { min, max };

/// W_min(k1 H1 + k2 H2) = H - lambda_sep_min * I (resp. W_max), together with
/// the spectral data deciding whether it is a genuine witness.
struct WitnessReport {
    HermitianOperator W;
    WitnessSide side = WitnessSide::min;
    double k1 = 0.0, k2 = 0.0;
    double sep_extremum = 0.0;     // lambda-tensor-min or -max
    double global_extremum = 0.0;  // matching eigenvalue of k1 H1 + k2 H2
    bool is_witness = false;
    bool undecided = false;  // margin inside the tolerance band
    bool converged = true;
    Vector certifying_eigvec;
};

struct CommonEigenvectorRecord {
    Vector vector;
    double a1 = 0.0;
    double a2 = 0.0;
};

struct EffectivenessVerdict {
    bool commuting_A = false;
    bool commuting_B = false;
    std::vector<CommonEigenvectorRecord> common_A;
    std::vector<CommonEigenvectorRecord> common_B;
    bool cor1_satisfied = false;  // all common eigenvalue pairs are (0,0)
    bool thm1_satisfied = false;  // no common eigenvectors on either side
};

enum class ProductTestOutcome { contains_product, entangled_only, inconclusive };

enum class SideVerdict { min, max, both, neither, inconclusive };

struct GroundScanEntry {
    double k1 = 0.0, k2 = 0.0;
    ProductTestOutcome min_space = ProductTestOutcome::inconclusive;
    ProductTestOutcome max_space = ProductTestOutcome::inconclusive;
    SideVerdict side_entangled = SideVerdict::inconclusive;
};

struct DetectionReport {
    bool detected = false;
    Point2 point;
    std::optional<Point2> direction;
    std::optional<WitnessReport> witness;
};

struct RefinementResult {
    ProductPair refined;
    std::vector<CommonEigenvectorRecord> removed_A;
    std::vector<CommonEigenvectorRecord> removed_B;
};

struct DominanceCertificate {
    bool holds = false;
    bool inconclusive = false;
    double difference_min_eigenvalue = 0.0;
};

struct AppendixAResult {
    enum class Status { holds, fails, skipped } status = Status::skipped;
    double hausdorff_distance = 0.0;
    double diameter = 0.0;
    std::string note;
};

struct PerturbationEntry {
    double x = 0.0;
    bool ground_degenerate = false;
    bool separable_ground_exists = false;
    ProductTestOutcome test = ProductTestOutcome::inconclusive;
};

struct PerturbationScan {
    bool statement_a = false;         // H1's product ground vector is stabilized by (A2,B2)
    bool baseline_ground_product = true;
    std::vector<PerturbationEntry> entries;
};

WitnessReport build_witness(const ProductPair& pair, double k1, double k2, WitnessSide side,
                            const OptimizerConfig& cfg = {});

enum class Detection { detected, not_detected };
Detection detection_check(const WitnessReport& w, const DensityState& rho,
                          double tolerance = 1e-9);

DetectionReport detect_state(const ProductPair& pair, const DensityState& rho,
                             const PlanarRegion& region, const OptimizerConfig& cfg = {},
                             double tolerance = 1e-7);

/// Orthonormal bases of pairwise eigenspace intersections, one record per
/// intersection dimension.
std::vector<CommonEigenvectorRecord> common_eigenvectors(const HermitianOperator& a1,
                                                         const HermitianOperator& a2,
                                                         double tolerance = 1e-8);

EffectivenessVerdict effectiveness_check(const ProductPair& pair);

/// Does the span of the orthonormal basis contain a product vector?
ProductTestOutcome eigenspace_product_test(const std::vector<Vector>& basis, std::size_t dimA,
                                           std::size_t dimB, const OptimizerConfig& cfg = {});

std::vector<GroundScanEntry> ground_state_scan(const ProductPair& pair,
                                               const std::vector<Point2>& k_grid,
                                               const OptimizerConfig& cfg = {});

RefinementResult refine_pair(const ProductPair& pair);

/// PSD check of W_min(pair) - W_min(refined) for a single A-side removal.
DominanceCertificate dominance_certificate(const ProductPair& pair, const ProductPair& refined,
                                           double k1, double k2,
                                           const OptimizerConfig& cfg = {});

/// Block positivity of the projections of W onto Q_A (x) C^dB and its
/// orthocomplement, sampled on seeded product vectors. Throws when the split
/// is not W-invariant.
bool block_positive_projection_check(const HermitianOperator& w,
                                     const std::vector<Vector>& qa_basis, std::size_t dimA,
                                     std::size_t dimB, std::uint64_t seed = 7);

AppendixAResult appendix_a_check(const HermitianOperator& a1, const HermitianOperator& a2,
                                 std::size_t n_angles = 720);

PerturbationScan perturbation_scan(const ProductPair& pair, const std::vector<double>& x_values,
                                   const OptimizerConfig& cfg = {});

/// Sampled block positivity: min of <ab|W|ab> over seeded product vectors.
double sampled_product_minimum(const HermitianOperator& w, std::size_t dimA, std::size_t dimB,
                               std::size_t n_samples = 1000, std::uint64_t seed = 7);

}  // namespace sepwit

#endif
