#include "sepwit/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sepwit {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct FactorExpectations {
    double a1, a2, b1, b2;
};

double objective(const ProductPair& pair, double k1, double k2, const Vector& alpha,
                 const Vector& beta) {
    return k1 * expectation(pair.A1, alpha) * expectation(pair.B1, beta) +
           k2 * expectation(pair.A2, alpha) * expectation(pair.B2, beta);
}

Vector uniform_start(std::size_t dim) {
    Vector v(dim, Complex(1.0, 0.0));
    normalize(v);
    return v;
}

/// Minimum eigenvector of m, with degenerate ties resolved toward the
/// previous iterate (projection onto the grouped minimum eigenspace).
Vector min_eigvec_stable(const HermitianOperator& m, const Vector& previous) {
    const auto eig = eig_hermitian(m);
    const auto basis = eig.eigenspace_basis(0);
    if (basis.size() == 1) return basis[0];
    Vector proj(m.dim(), Complex(0.0));
    for (const auto& b : basis) {
        const Complex c = inner(b, previous);
        for (std::size_t i = 0; i < proj.size(); ++i) proj[i] += c * b[i];
    }
    if (norm(proj) > 1e-8) {
        normalize(proj);
        return proj;
    }
    return basis[0];
}

/// One seesaw run from the given start; monotone nonincreasing objective.
SepExtremum seesaw_run(const ProductPair& pair, double k1, double k2, Vector alpha,
                       Vector beta, const OptimizerConfig& cfg) {
    SepExtremum res;
    double value = objective(pair, k1, k2, alpha, beta);
    int iters = 0;
    bool converged = false;
    while (iters < cfg.max_iters) {
        ++iters;
        const double b1 = expectation(pair.B1, beta), b2 = expectation(pair.B2, beta);
        alpha = min_eigvec_stable(k1 * b1 * pair.A1 + k2 * b2 * pair.A2, alpha);
        const double a1 = expectation(pair.A1, alpha), a2 = expectation(pair.A2, alpha);
        beta = min_eigvec_stable(k1 * a1 * pair.B1 + k2 * a2 * pair.B2, beta);
        const double next = objective(pair, k1, k2, alpha, beta);
        if (next > value + 1e-12 * (1.0 + std::abs(value)))
            throw std::logic_error("seesaw objective increased");
        if (value - next < cfg.tolerance * (1.0 + std::abs(next))) {
            value = next;
            converged = true;
            break;
        }
        value = next;
    }
    res.value = value;
    res.alpha = std::move(alpha);
    res.beta = std::move(beta);
    res.iterations = iters;
    res.converged = converged;
    return res;
}

/// Coordinate descent on the real/imag components of (alpha, beta) with step
/// halving; each trial renormalizes the touched factor.
void polish(const ProductPair& pair, double k1, double k2, Vector& alpha, Vector& beta,
            double& value, int step_levels) {
    double step = 0.25;
    for (int level = 0; level < step_levels; ++level, step *= 0.5) {
        bool improved = true;
        int sweeps = 0;
        while (improved && sweeps++ < 8) {
            improved = false;
            for (int which = 0; which < 2; ++which) {
                Vector& v = which == 0 ? alpha : beta;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    for (const Complex delta :
                         {Complex(step, 0.0), Complex(-step, 0.0), Complex(0.0, step),
                          Complex(0.0, -step)}) {
                        Vector trial = v;
                        trial[i] += delta;
                        if (norm(trial) < 1e-12) continue;
                        normalize(trial);
                        const double f = which == 0 ? objective(pair, k1, k2, trial, beta)
                                                    : objective(pair, k1, k2, alpha, trial);
                        if (f < value - 1e-15 * (1.0 + std::abs(value))) {
                            value = f;
                            v = trial;
                            improved = true;
                        }
                    }
                }
            }
        }
        if (step < 1e-10) break;
    }
}

Vector bloch_vector(double theta, double phi) {
    return Vector{Complex(std::cos(theta / 2.0), 0.0),
                  std::polar(std::sin(theta / 2.0), phi)};
}

}  // namespace

SepExtremum sep_min(const ProductPair& pair, double k1, double k2,
                    const OptimizerConfig& cfg) {
    if (!std::isfinite(k1) || !std::isfinite(k2))
        throw std::invalid_argument("non-finite coefficients");

    HaarSampler rng(cfg.seed);
    SepExtremum best;
    bool have_best = false;
    for (int r = 0; r < std::max(cfg.restarts, 1); ++r) {
        Vector alpha = r == 0 ? uniform_start(pair.dimA()) : rng.unit_vector(pair.dimA());
        Vector beta = r == 0 ? uniform_start(pair.dimB()) : rng.unit_vector(pair.dimB());
        SepExtremum run = seesaw_run(pair, k1, k2, std::move(alpha), std::move(beta), cfg);
        if (!have_best || run.value < best.value) {
            run.restarts_used = r + 1;
            const int total_iters = have_best ? best.iterations + run.iterations
                                              : run.iterations;
            best = std::move(run);
            best.iterations = total_iters;
            have_best = true;
        } else {
            best.iterations += run.iterations;
            best.restarts_used = r + 1;
        }
    }
    return best;
}

SepExtremum sep_max(const ProductPair& pair, double k1, double k2,
                    const OptimizerConfig& cfg) {
    SepExtremum res = sep_min(pair, -k1, -k2, cfg);
    res.value = -res.value;
    return res;
}

SepExtremum brute_force_sep_min(const ProductPair& pair, double k1, double k2,
                                std::size_t n_samples, int refine_steps,
                                std::uint64_t seed) {
    if (!std::isfinite(k1) || !std::isfinite(k2))
        throw std::invalid_argument("non-finite coefficients");

    SepExtremum best;
    best.value = std::numeric_limits<double>::infinity();

    if (pair.dimA() == 2 && pair.dimB() == 2) {
        // Full Bloch-sphere grid per subsystem; the objective factorizes into
        // per-subsystem expectation pairs, so the pair minimum is a cheap
        // scan over precomputed tables.
        constexpr std::size_t n_theta = 49, n_phi = 96;
        std::vector<FactorExpectations> a_table, b_table;
        std::vector<Vector> a_vecs, b_vecs;
        for (std::size_t it = 0; it < n_theta; ++it) {
            const double theta = kPi * double(it) / double(n_theta - 1);
            for (std::size_t ip = 0; ip < n_phi; ++ip) {
                const double phi = 2.0 * kPi * double(ip) / double(n_phi);
                const Vector v = bloch_vector(theta, phi);
                a_vecs.push_back(v);
                a_table.push_back({expectation(pair.A1, v), expectation(pair.A2, v), 0, 0});
                b_vecs.push_back(v);
                b_table.push_back({expectation(pair.B1, v), expectation(pair.B2, v), 0, 0});
            }
        }
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < a_table.size(); ++i)
            for (std::size_t j = 0; j < b_table.size(); ++j) {
                const double f = k1 * a_table[i].a1 * b_table[j].a1 +
                                 k2 * a_table[i].a2 * b_table[j].a2;
                if (f < best.value) {
                    best.value = f;
                    bi = i;
                    bj = j;
                }
            }
        best.alpha = a_vecs[bi];
        best.beta = b_vecs[bj];
    } else {
        HaarSampler rng(seed);
        for (std::size_t s = 0; s < std::max<std::size_t>(n_samples, 1); ++s) {
            Vector alpha = rng.unit_vector(pair.dimA());
            Vector beta = rng.unit_vector(pair.dimB());
            const double f = objective(pair, k1, k2, alpha, beta);
            if (f < best.value) {
                best.value = f;
                best.alpha = std::move(alpha);
                best.beta = std::move(beta);
            }
        }
    }

    polish(pair, k1, k2, best.alpha, best.beta, best.value, refine_steps);
    best.converged = true;
    best.restarts_used = 1;
    return best;
}

}  // namespace sepwit
