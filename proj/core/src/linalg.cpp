#include "sepwit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sepwit {

HermitianOperator::HermitianOperator(ComplexMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("Hermitian operator must be square");
    if (!m.finite()) throw std::invalid_argument("non-finite entries");
    double dev = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
    if (dev > tol::hermiticity_rel * (1.0 + m.max_abs()))
        throw std::invalid_argument("matrix is not Hermitian within tolerance");
    // Symmetrize residual rounding.
    matrix_ = ComplexMatrix(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            matrix_(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
}

std::vector<std::size_t> SpectralDecomposition::eigenspace_indices(std::size_t k) const {
    const double band = tol::eigengroup_rel * (1.0 + spectral_radius());
    std::vector<std::size_t> idx;
    // Eigenvalues are ascending; take the maximal chain around k whose
    // consecutive gaps stay within the band.
    std::size_t lo = k, hi = k;
    while (lo > 0 && eigenvalues[lo] - eigenvalues[lo - 1] <= band) --lo;
    while (hi + 1 < eigenvalues.size() && eigenvalues[hi + 1] - eigenvalues[hi] <= band) ++hi;
    for (std::size_t i = lo; i <= hi; ++i) idx.push_back(i);
    return idx;
}

std::vector<Vector> SpectralDecomposition::eigenspace_basis(std::size_t k) const {
    std::vector<Vector> basis;
    for (std::size_t i : eigenspace_indices(k)) basis.push_back(eigenvector(i));
    return basis;
}

DensityState::DensityState(std::size_t dimA, std::size_t dimB, const ComplexMatrix& m)
    : dimA_(dimA), dimB_(dimB), op_(m) {
    if (m.rows() != dimA * dimB) throw std::invalid_argument("state dimension mismatch");
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > 1e-9) throw std::invalid_argument("state trace is not 1");
    if (min_eigenvalue(op_) < -tol::psd_default)
        throw std::invalid_argument("state is not positive semi-definite");
}

DensityState DensityState::from_pure(const Vector& v, std::size_t dimA, std::size_t dimB) {
    Vector u = v;
    normalize(u);
    return DensityState(dimA, dimB, outer(u));
}

DensityState DensityState::maximally_mixed(std::size_t dimA, std::size_t dimB) {
    const std::size_t d = dimA * dimB;
    return DensityState(dimA, dimB, ComplexMatrix::identity(d) * Complex(1.0 / double(d)));
}

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

SpectralDecomposition eig_hermitian(const HermitianOperator& h) {
    const std::size_t n = h.dim();
    ComplexMatrix a = h.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double stop = tol::eig_offdiag_rel * std::max(a.frobenius_norm(), 1e-300);

    for (int sweep = 0; sweep < tol::eig_max_sweeps && offdiag_norm(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                // Phase factor turning the (p,q) block real, then a classic
                // Jacobi rotation on the real symmetric block.
                const Complex phase = apq / r;  // a(p,q) = r * phase
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Column rotation: [col_p, col_q] <- [c*col_p - conj(ph)*s*col_q,
                //                                     ph*s*col_p + c*col_q]
                const Complex sp = s * phase;
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - std::conj(sp) * aiq;
                    a(i, q) = sp * aip + c * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - sp * aqj;
                    a(q, j) = std::conj(sp) * apj + c * aqj;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - std::conj(sp) * viq;
                    v(i, q) = sp * vip + c * viq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    SpectralDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b) {
    const std::size_t da = a.dim(), db = b.dim();
    ComplexMatrix m(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    m(i * db + k, j * db + l) = a(i, j) * b(k, l);
    return HermitianOperator(m);
}

double expectation(const HermitianOperator& h, const DensityState& rho) {
    if (h.dim() != rho.dim()) throw std::invalid_argument("dimension mismatch");
    Complex t = 0.0;
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = 0; j < h.dim(); ++j) t += h(i, j) * rho.matrix()(j, i);
    return t.real();
}

double expectation(const HermitianOperator& h, const Vector& phi) {
    if (phi.size() != h.dim()) throw std::invalid_argument("dimension mismatch");
    return inner(phi, h.matrix().apply(phi)).real();
}

SchmidtAnalysis schmidt(const Vector& v, std::size_t dimA, std::size_t dimB) {
    if (v.size() != dimA * dimB) throw std::invalid_argument("vector length != dimA*dimB");
    const double vnorm = norm(v);
    if (vnorm == 0.0) throw std::invalid_argument("zero vector has no Schmidt decomposition");

    // Singular values of the dimA x dimB reshaping M, via the Hermitian
    // eigenproblem of M* M (or M M*, whichever is smaller).
    ComplexMatrix m(dimA, dimB);
    for (std::size_t i = 0; i < dimA; ++i)
        for (std::size_t j = 0; j < dimB; ++j) m(i, j) = v[i * dimB + j];
    const bool use_left = dimA <= dimB;
    const ComplexMatrix gram = use_left ? m * m.adjoint() : m.adjoint() * m;
    auto eig = eig_hermitian(HermitianOperator(gram));

    SchmidtAnalysis out;
    for (auto it = eig.eigenvalues.rbegin(); it != eig.eigenvalues.rend(); ++it)
        out.coefficients.push_back(std::sqrt(std::max(*it, 0.0)));
    const double cutoff = tol::schmidt_rank_rel * out.coefficients.front();
    out.rank = 0;
    for (double c : out.coefficients)
        if (c > cutoff) ++out.rank;
    return out;
}

ComplexMatrix partial_transpose(const DensityState& rho) {
    const std::size_t da = rho.dimA(), db = rho.dimB();
    ComplexMatrix r(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    r(i * db + l, j * db + k) = rho.matrix()(i * db + k, j * db + l);
    return r;
}

bool is_psd(const HermitianOperator& h, double tolerance) {
    return min_eigenvalue(h) >= -tolerance;
}

double min_eigenvalue(const HermitianOperator& h) {
    return eig_hermitian(h).eigenvalues.front();
}

double commutator_norm(const HermitianOperator& a, const HermitianOperator& b) {
    return (a.matrix() * b.matrix() - b.matrix() * a.matrix()).frobenius_norm();
}

}  // namespace sepwit
