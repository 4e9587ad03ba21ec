#ifndef SEPWIT_OPTIMIZER_HPP
#define SEPWIT_OPTIMIZER_HPP

#include <cstdint>

#include "sepwit/range.hpp"

namespace sepwit {

struct OptimizerConfig {
    int restarts = 32;
    int max_iters = 500;
    double tolerance = 1e-11;  // relative objective improvement
    std::uint64_t seed = 20240901;
};

/// Extreme expectation value over product states, with the attaining vectors.
/// Seesaw values are upper bounds for min (lower bounds for max); global
/// optimality is not claimed.
struct SepExtremum {
    double value = 0.0;
    Vector alpha;
    Vector beta;
    int iterations = 0;
    int restarts_used = 0;
    bool converged = false;
};

/// lambda-tensor-min of k1*A1(x)B1 + k2*A2(x)B2 by alternating minimum-
/// eigenvector iteration over the two factors.
SepExtremum sep_min(const ProductPair& pair, double k1, double k2,
                    const OptimizerConfig& cfg = {});

SepExtremum sep_max(const ProductPair& pair, double k1, double k2,
                    const OptimizerConfig& cfg = {});

/// Sampling oracle, independent of the seesaw: Bloch-grid sweep for qubit
/// subsystems, Haar sampling otherwise, then pattern-search polish.
SepExtremum brute_force_sep_min(const ProductPair& pair, double k1, double k2,
                                std::size_t n_samples = 4096, int refine_steps = 60,
                                std::uint64_t seed = 20240901);

}  // namespace sepwit

#endif
