#include "sepwit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sepwit {

namespace {

double witness_margin(double sep_extremum) {
    return 1e-7 * (1.0 + std::abs(sep_extremum));
}

double zero_eigenvalue_band(const HermitianOperator& h) {
    return tol::eigengroup_rel * (1.0 + eig_hermitian(h).spectral_radius());
}

struct EigenspaceCluster {
    double value = 0.0;            // representative eigenvalue
    std::vector<Vector> basis;
};

std::vector<EigenspaceCluster> cluster_eigenspaces(const SpectralDecomposition& eig) {
    const double band = tol::eigengroup_rel * (1.0 + eig.spectral_radius());
    std::vector<EigenspaceCluster> out;
    std::size_t i = 0;
    while (i < eig.eigenvalues.size()) {
        EigenspaceCluster c;
        double sum = 0.0;
        std::size_t j = i;
        while (j < eig.eigenvalues.size() &&
               (j == i || eig.eigenvalues[j] - eig.eigenvalues[j - 1] <= band)) {
            c.basis.push_back(eig.eigenvector(j));
            sum += eig.eigenvalues[j];
            ++j;
        }
        c.value = sum / double(c.basis.size());
        out.push_back(std::move(c));
        i = j;
    }
    return out;
}

ComplexMatrix projector_onto(const std::vector<Vector>& basis, std::size_t dim) {
    ComplexMatrix p(dim, dim);
    for (const auto& v : basis) p += outer(v);
    return p;
}

/// Maximum eigenvector with degenerate ties resolved toward `previous`.
Vector max_eigvec_stable(const HermitianOperator& m, const Vector& previous) {
    const auto eig = eig_hermitian(m);
    const auto basis = eig.eigenspace_basis(eig.eigenvalues.size() - 1);
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

/// Splits a Schmidt-rank-1 vector into its factors.
std::pair<Vector, Vector> split_product_vector(const Vector& v, std::size_t dimA,
                                               std::size_t dimB) {
    std::size_t best_col = 0;
    double best = -1.0;
    for (std::size_t j = 0; j < dimB; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < dimA; ++i) s += std::norm(v[i * dimB + j]);
        if (s > best) {
            best = s;
            best_col = j;
        }
    }
    Vector alpha(dimA);
    for (std::size_t i = 0; i < dimA; ++i) alpha[i] = v[i * dimB + best_col];
    normalize(alpha);
    Vector beta(dimB, Complex(0.0));
    for (std::size_t j = 0; j < dimB; ++j)
        for (std::size_t i = 0; i < dimA; ++i) beta[j] += std::conj(alpha[i]) * v[i * dimB + j];
    normalize(beta);
    return {std::move(alpha), std::move(beta)};
}

bool is_eigenvector_of(const HermitianOperator& a, const Vector& v, double tolerance = 1e-8) {
    const double lambda = expectation(a, v);
    Vector r = a.matrix().apply(v);
    double res = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) res += std::norm(r[i] - lambda * v[i]);
    return std::sqrt(res) <= tolerance * (1.0 + std::abs(lambda));
}

}  // namespace

WitnessReport build_witness(const ProductPair& pair, double k1, double k2, WitnessSide side,
                            const OptimizerConfig& cfg) {
    if (k1 == 0.0 && k2 == 0.0) throw std::invalid_argument("(k1,k2) must be nonzero");
    const HermitianOperator h = pair.combination(k1, k2);
    const auto eig = eig_hermitian(h);
    const HermitianOperator id = HermitianOperator::identity(h.dim());

    WitnessReport rep;
    rep.side = side;
    rep.k1 = k1;
    rep.k2 = k2;
    if (side == WitnessSide::min) {
        const SepExtremum sep = sep_min(pair, k1, k2, cfg);
        rep.sep_extremum = sep.value;
        rep.global_extremum = eig.eigenvalues.front();
        rep.W = h - sep.value * id;
        rep.certifying_eigvec = eig.eigenvector(0);
        rep.converged = sep.converged;
        const double gap = rep.sep_extremum - rep.global_extremum;
        rep.is_witness = gap > witness_margin(rep.sep_extremum);
        rep.undecided = std::abs(gap) <= witness_margin(rep.sep_extremum);
    } else {
        const SepExtremum sep = sep_max(pair, k1, k2, cfg);
        rep.sep_extremum = sep.value;
        rep.global_extremum = eig.eigenvalues.back();
        rep.W = sep.value * id - h;
        rep.certifying_eigvec = eig.eigenvector(eig.eigenvalues.size() - 1);
        rep.converged = sep.converged;
        const double gap = rep.global_extremum - rep.sep_extremum;
        rep.is_witness = gap > witness_margin(rep.sep_extremum);
        rep.undecided = std::abs(gap) <= witness_margin(rep.sep_extremum);
    }
    return rep;
}

Detection detection_check(const WitnessReport& w, const DensityState& rho, double tolerance) {
    return expectation(w.W, rho) < -tolerance ? Detection::detected : Detection::not_detected;
}

DetectionReport detect_state(const ProductPair& pair, const DensityState& rho,
                             const PlanarRegion& region, const OptimizerConfig& cfg,
                             double tolerance) {
    if (rho.dimA() != pair.dimA() || rho.dimB() != pair.dimB())
        throw std::invalid_argument("state/pair dimension mismatch");

    DetectionReport rep;
    rep.point = Point2{expectation(pair.H1(), rho), expectation(pair.H2(), rho)};
    rep.detected = contains(region, rep.point, tolerance) == Membership::outside;
    if (rep.detected) {
        rep.direction = separating_direction(region, rep.point, tolerance);
        if (rep.direction)
            rep.witness = build_witness(pair, rep.direction->x, rep.direction->y,
                                        WitnessSide::min, cfg);
    }
    return rep;
}

std::vector<CommonEigenvectorRecord> common_eigenvectors(const HermitianOperator& a1,
                                                         const HermitianOperator& a2,
                                                         double tolerance) {
    if (a1.dim() != a2.dim()) throw std::invalid_argument("dimension mismatch");
    const std::size_t d = a1.dim();
    const auto clusters1 = cluster_eigenspaces(eig_hermitian(a1));
    const auto clusters2 = cluster_eigenspaces(eig_hermitian(a2));
    const ComplexMatrix id = ComplexMatrix::identity(d);

    std::vector<CommonEigenvectorRecord> records;
    for (const auto& c1 : clusters1) {
        const ComplexMatrix p = projector_onto(c1.basis, d);
        for (const auto& c2 : clusters2) {
            const ComplexMatrix q = projector_onto(c2.basis, d);
            // Intersection of the two eigenspaces = kernel of the summed
            // complement projectors.
            const HermitianOperator m((id - p) + (id - q));
            const auto eig = eig_hermitian(m);
            for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
                if (eig.eigenvalues[k] > tolerance) break;
                records.push_back(CommonEigenvectorRecord{eig.eigenvector(k), c1.value,
                                                          c2.value});
            }
        }
    }
    return records;
}

EffectivenessVerdict effectiveness_check(const ProductPair& pair) {
    EffectivenessVerdict v;
    const double scaleA =
        1.0 + pair.A1.matrix().frobenius_norm() * pair.A2.matrix().frobenius_norm();
    const double scaleB =
        1.0 + pair.B1.matrix().frobenius_norm() * pair.B2.matrix().frobenius_norm();
    v.commuting_A = commutator_norm(pair.A1, pair.A2) < 1e-12 * scaleA;
    v.commuting_B = commutator_norm(pair.B1, pair.B2) < 1e-12 * scaleB;
    v.common_A = common_eigenvectors(pair.A1, pair.A2);
    v.common_B = common_eigenvectors(pair.B1, pair.B2);
    v.thm1_satisfied = v.common_A.empty() && v.common_B.empty();

    const double bandA =
        std::max(zero_eigenvalue_band(pair.A1), zero_eigenvalue_band(pair.A2));
    const double bandB =
        std::max(zero_eigenvalue_band(pair.B1), zero_eigenvalue_band(pair.B2));
    v.cor1_satisfied = true;
    for (const auto& r : v.common_A)
        if (std::abs(r.a1) > bandA || std::abs(r.a2) > bandA) v.cor1_satisfied = false;
    for (const auto& r : v.common_B)
        if (std::abs(r.a1) > bandB || std::abs(r.a2) > bandB) v.cor1_satisfied = false;
    return v;
}

ProductTestOutcome eigenspace_product_test(const std::vector<Vector>& basis, std::size_t dimA,
                                           std::size_t dimB, const OptimizerConfig& cfg) {
    if (basis.empty()) throw std::invalid_argument("empty eigenspace basis");
    if (basis.size() == 1) {
        return schmidt(basis[0], dimA, dimB).rank == 1 ? ProductTestOutcome::contains_product
                                                       : ProductTestOutcome::entangled_only;
    }

    // Maximize <ab|P|ab> for the span projector P by alternating maximum-
    // eigenvector steps; overlap 1 means a product vector lies in the span.
    const ComplexMatrix p = projector_onto(basis, dimA * dimB);
    HaarSampler rng(cfg.seed);
    double best = 0.0;
    for (int r = 0; r < std::max(cfg.restarts, 1); ++r) {
        Vector alpha = rng.unit_vector(dimA);
        Vector beta = rng.unit_vector(dimB);
        double overlap = 0.0;
        for (int it = 0; it < cfg.max_iters; ++it) {
            ComplexMatrix ma(dimA, dimA);
            for (std::size_t i = 0; i < dimA; ++i)
                for (std::size_t j = 0; j < dimA; ++j) {
                    Complex s = 0.0;
                    for (std::size_t k = 0; k < dimB; ++k)
                        for (std::size_t l = 0; l < dimB; ++l)
                            s += std::conj(beta[k]) * p(i * dimB + k, j * dimB + l) * beta[l];
                    ma(i, j) = s;
                }
            alpha = max_eigvec_stable(HermitianOperator(ma), alpha);
            ComplexMatrix mb(dimB, dimB);
            for (std::size_t k = 0; k < dimB; ++k)
                for (std::size_t l = 0; l < dimB; ++l) {
                    Complex s = 0.0;
                    for (std::size_t i = 0; i < dimA; ++i)
                        for (std::size_t j = 0; j < dimA; ++j)
                            s += std::conj(alpha[i]) * p(i * dimB + k, j * dimB + l) * alpha[j];
                    mb(k, l) = s;
                }
            beta = max_eigvec_stable(HermitianOperator(mb), beta);
            const double next = expectation(HermitianOperator(p), kron_vec(alpha, beta));
            if (next - overlap < cfg.tolerance * (1.0 + next)) {
                overlap = next;
                break;
            }
            overlap = next;
        }
        best = std::max(best, overlap);
        if (best > 1.0 - 1e-9) return ProductTestOutcome::contains_product;
    }
    if (best < 1.0 - 1e-6) return ProductTestOutcome::entangled_only;
    return ProductTestOutcome::inconclusive;
}

std::vector<GroundScanEntry> ground_state_scan(const ProductPair& pair,
                                               const std::vector<Point2>& k_grid,
                                               const OptimizerConfig& cfg) {
    std::vector<GroundScanEntry> out;
    for (const auto& k : k_grid) {
        if (k.x * k.y == 0.0) throw std::invalid_argument("k1*k2 must be nonzero");
        GroundScanEntry e;
        e.k1 = k.x;
        e.k2 = k.y;
        const auto eig = eig_hermitian(pair.combination(k.x, k.y));
        e.min_space = eigenspace_product_test(eig.eigenspace_basis(0), pair.dimA(),
                                              pair.dimB(), cfg);
        e.max_space = eigenspace_product_test(
            eig.eigenspace_basis(eig.eigenvalues.size() - 1), pair.dimA(), pair.dimB(), cfg);

        const bool min_ent = e.min_space == ProductTestOutcome::entangled_only;
        const bool max_ent = e.max_space == ProductTestOutcome::entangled_only;
        if (e.min_space == ProductTestOutcome::inconclusive ||
            e.max_space == ProductTestOutcome::inconclusive)
            e.side_entangled = SideVerdict::inconclusive;
        else if (min_ent && max_ent)
            e.side_entangled = SideVerdict::both;
        else if (min_ent)
            e.side_entangled = SideVerdict::min;
        else if (max_ent)
            e.side_entangled = SideVerdict::max;
        else
            e.side_entangled = SideVerdict::neither;
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

/// Removes one common eigenvector with a nonzero eigenvalue pair; returns the
/// record, or nullopt at the fixed point.
std::optional<CommonEigenvectorRecord> remove_one(HermitianOperator& a1,
                                                  HermitianOperator& a2) {
    const double band = std::max(zero_eigenvalue_band(a1), zero_eigenvalue_band(a2));
    for (const auto& r : common_eigenvectors(a1, a2)) {
        if (std::abs(r.a1) <= band && std::abs(r.a2) <= band) continue;
        a1 = a1 - r.a1 * HermitianOperator::projector(r.vector);
        a2 = a2 - r.a2 * HermitianOperator::projector(r.vector);
        return r;
    }
    return std::nullopt;
}

}  // namespace

RefinementResult refine_pair(const ProductPair& pair) {
    HermitianOperator a1 = pair.A1, a2 = pair.A2, b1 = pair.B1, b2 = pair.B2;
    std::vector<CommonEigenvectorRecord> removed_a, removed_b;
    const int cap = 4 * int(pair.dimA() + pair.dimB());
    for (int i = 0; i < cap; ++i) {
        auto r = remove_one(a1, a2);
        if (!r) break;
        removed_a.push_back(std::move(*r));
    }
    for (int i = 0; i < cap; ++i) {
        auto r = remove_one(b1, b2);
        if (!r) break;
        removed_b.push_back(std::move(*r));
    }
    return RefinementResult{ProductPair(a1, a2, b1, b2), std::move(removed_a),
                            std::move(removed_b)};
}

DominanceCertificate dominance_certificate(const ProductPair& pair, const ProductPair& refined,
                                           double k1, double k2, const OptimizerConfig& cfg) {
    DominanceCertificate cert;
    const SepExtremum sep1 = sep_min(pair, k1, k2, cfg);
    const SepExtremum sep2 = sep_min(refined, k1, k2, cfg);
    if (!sep1.converged || !sep2.converged) {
        cert.inconclusive = true;
        return cert;
    }
    const std::size_t d = pair.dimA() * pair.dimB();
    const HermitianOperator id = HermitianOperator::identity(d);
    const HermitianOperator w1 = pair.combination(k1, k2) - sep1.value * id;
    const HermitianOperator w2 = refined.combination(k1, k2) - sep2.value * id;
    cert.difference_min_eigenvalue = min_eigenvalue(w1 - w2);
    cert.holds = cert.difference_min_eigenvalue >= -1e-7;
    return cert;
}

bool block_positive_projection_check(const HermitianOperator& w,
                                     const std::vector<Vector>& qa_basis, std::size_t dimA,
                                     std::size_t dimB, std::uint64_t seed) {
    if (qa_basis.empty()) throw std::invalid_argument("empty A-side subspace");
    const std::size_t d = dimA * dimB;
    if (w.dim() != d) throw std::invalid_argument("dimension mismatch");

    const HermitianOperator pa(projector_onto(qa_basis, dimA));
    const ComplexMatrix p1 = kron(pa, HermitianOperator::identity(dimB)).matrix();
    const ComplexMatrix p2 = ComplexMatrix::identity(d) - p1;
    const ComplexMatrix off = p1 * w.matrix() * p2;
    if (off.max_abs() > 1e-9 * (1.0 + w.matrix().max_abs()))
        throw std::invalid_argument("subspace split is not invariant under W");

    const HermitianOperator wq1(p1 * w.matrix() * p1);
    const HermitianOperator wq2(p2 * w.matrix() * p2);
    return sampled_product_minimum(wq1, dimA, dimB, 1000, seed) >= -1e-7 &&
           sampled_product_minimum(wq2, dimA, dimB, 1000, seed + 1) >= -1e-7;
}

AppendixAResult appendix_a_check(const HermitianOperator& a1, const HermitianOperator& a2,
                                 std::size_t n_angles) {
    AppendixAResult res;
    const auto records = common_eigenvectors(a1, a2);
    if (records.size() != 1) {
        res.note = "requires exactly one common eigenvector";
        return res;
    }
    const PlanarRegion lhs = joint_range(a1, a2, n_angles);
    if (contains(lhs, Point2{0.0, 0.0}) == Membership::outside) {
        res.note = "premise violated: (0,0) is outside the joint range";
        return res;
    }
    const auto& rec = records.front();
    const HermitianOperator proj = HermitianOperator::projector(rec.vector);
    const HermitianOperator a1p = a1 - rec.a1 * proj;
    const HermitianOperator a2p = a2 - rec.a2 * proj;

    PointCloud cloud{supporting_points(a1p, a2p, n_angles)};
    cloud.points.push_back(Point2{rec.a1, rec.a2});
    const PlanarRegion rhs = convex_hull(cloud);

    res.hausdorff_distance = hausdorff(lhs, rhs);
    res.diameter = lhs.diameter();
    res.status = res.hausdorff_distance <= 2e-3 * res.diameter
                     ? AppendixAResult::Status::holds
                     : AppendixAResult::Status::fails;
    return res;
}

PerturbationScan perturbation_scan(const ProductPair& pair, const std::vector<double>& x_values,
                                   const OptimizerConfig& cfg) {
    const HermitianOperator h1 = pair.H1();
    const HermitianOperator h2 = pair.H2();
    const auto eig1 = eig_hermitian(h1);
    if (eig1.eigenspace_indices(0).size() != 1)
        throw std::invalid_argument("ground state of H1 is degenerate");

    PerturbationScan scan;
    const Vector ground = eig1.eigenvector(0);
    if (schmidt(ground, pair.dimA(), pair.dimB()).rank != 1) {
        scan.baseline_ground_product = false;
        scan.statement_a = false;
    } else {
        auto [alpha, beta] = split_product_vector(ground, pair.dimA(), pair.dimB());
        scan.statement_a =
            is_eigenvector_of(pair.A2, alpha) || is_eigenvector_of(pair.B2, beta);
    }

    for (double x : x_values) {
        PerturbationEntry e;
        e.x = x;
        const auto eig = eig_hermitian(h1 + x * h2);
        const auto basis = eig.eigenspace_basis(0);
        e.ground_degenerate = basis.size() > 1;
        e.test = eigenspace_product_test(basis, pair.dimA(), pair.dimB(), cfg);
        e.separable_ground_exists = e.test == ProductTestOutcome::contains_product;
        scan.entries.push_back(e);
    }
    return scan;
}

double sampled_product_minimum(const HermitianOperator& w, std::size_t dimA, std::size_t dimB,
                               std::size_t n_samples, std::uint64_t seed) {
    if (w.dim() != dimA * dimB) throw std::invalid_argument("dimension mismatch");
    HaarSampler rng(seed);
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < n_samples; ++s) {
        const Vector v = kron_vec(rng.unit_vector(dimA), rng.unit_vector(dimB));
        m = std::min(m, expectation(w, v));
    }
    return m;
}

}  // namespace sepwit
