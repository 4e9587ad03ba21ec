#ifndef SEPWIT_LINALG_HPP
#define SEPWIT_LINALG_HPP

#include <optional>
#include <vector>

#include "sepwit/matrix.hpp"

namespace sepwit {

namespace tol {
// Noise floors used throughout; geometry and optimizer tolerances live with
// their own modules.
inline constexpr double eig_offdiag_rel = 1e-12;     // Jacobi stop, relative to ||H||_F
inline constexpr int eig_max_sweeps = 100;
inline constexpr double hermiticity_rel = 1e-10;     // relative to 1 + ||H||_max
inline constexpr double schmidt_rank_rel = 1e-8;     // relative to largest singular value
inline constexpr double psd_default = 1e-9;
inline constexpr double eigengroup_rel = 1e-9;       // relative to 1 + spectral radius
}  // namespace tol

/// Validated d x d Hermitian matrix. Inputs within the hermiticity tolerance
/// are symmetrized as (H + H*)/2; anything worse is rejected.
class HermitianOperator {
public:
    HermitianOperator() = default;
    explicit HermitianOperator(ComplexMatrix m);

    static HermitianOperator zero(std::size_t dim) {
        return HermitianOperator(ComplexMatrix(dim, dim));
    }
    static HermitianOperator identity(std::size_t dim) {
        return HermitianOperator(ComplexMatrix::identity(dim));
    }
    /// |v><v| for a (not necessarily normalized) vector.
    static HermitianOperator projector(const Vector& v) { return HermitianOperator(outer(v)); }

    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

    friend HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
        return HermitianOperator(a.matrix_ + b.matrix_);
    }
    friend HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b) {
        return HermitianOperator(a.matrix_ - b.matrix_);
    }
    friend HermitianOperator operator*(double c, const HermitianOperator& a) {
        return HermitianOperator(a.matrix_ * Complex(c));
    }

private:
    ComplexMatrix matrix_;
};

struct SpectralDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // columns aligned with eigenvalues

    Vector eigenvector(std::size_t k) const {
        Vector v(eigenvectors.rows());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = eigenvectors(i, k);
        return v;
    }

    /// Indices of eigenvalues within the degeneracy tolerance of eigenvalues[k],
    /// i.e. the numerically grouped eigenspace containing index k.
    std::vector<std::size_t> eigenspace_indices(std::size_t k) const;

    /// Orthonormal basis of the grouped eigenspace containing index k.
    std::vector<Vector> eigenspace_basis(std::size_t k) const;

    double spectral_radius() const {
        double r = 0.0;
        for (double e : eigenvalues) r = std::max(r, std::abs(e));
        return r;
    }
};

/// PSD unit-trace matrix on C^{dimA} (x) C^{dimB}.
class DensityState {
public:
    DensityState(std::size_t dimA, std::size_t dimB, const ComplexMatrix& m);

    static DensityState from_pure(const Vector& v, std::size_t dimA, std::size_t dimB);
    static DensityState maximally_mixed(std::size_t dimA, std::size_t dimB);

    std::size_t dimA() const { return dimA_; }
    std::size_t dimB() const { return dimB_; }
    std::size_t dim() const { return dimA_ * dimB_; }
    const ComplexMatrix& matrix() const { return op_.matrix(); }
    const HermitianOperator& op() const { return op_; }

private:
    std::size_t dimA_;
    std::size_t dimB_;
    HermitianOperator op_;
};

struct SchmidtAnalysis {
    std::vector<double> coefficients;  // descending, nonnegative
    std::size_t rank;
};

/// Cyclic-Jacobi eigendecomposition for complex Hermitian matrices.
SpectralDecomposition eig_hermitian(const HermitianOperator& h);

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b);

double expectation(const HermitianOperator& h, const DensityState& rho);
double expectation(const HermitianOperator& h, const Vector& phi);

SchmidtAnalysis schmidt(const Vector& v, std::size_t dimA, std::size_t dimB);

ComplexMatrix partial_transpose(const DensityState& rho);

bool is_psd(const HermitianOperator& h, double tolerance = tol::psd_default);

double min_eigenvalue(const HermitianOperator& h);

double commutator_norm(const HermitianOperator& a, const HermitianOperator& b);

}  // namespace sepwit

#endif
