#include <doctest.h>

#include "sepwit/linalg.hpp"
#include "sepwit/presets.hpp"
#include "test_util.hpp"

using namespace sepwit;
using presets::pauli_x;
using presets::pauli_z;

namespace {

double reconstruction_error(const HermitianOperator& h, const SpectralDecomposition& eig) {
    const std::size_t n = h.dim();
    ComplexMatrix rebuilt(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const Vector v = eig.eigenvector(k);
        rebuilt += outer(v) * Complex(eig.eigenvalues[k]);
    }
    return (h.matrix() - rebuilt).max_abs();
}

double orthonormality_error(const SpectralDecomposition& eig) {
    const auto& v = eig.eigenvectors;
    return (v.adjoint() * v - ComplexMatrix::identity(v.rows())).max_abs();
}

}  // namespace

TEST_CASE("hermitian validation") {
    ComplexMatrix bad(2, 2);
    bad(0, 1) = Complex(1.0, 0.0);
    bad(1, 0) = Complex(0.5, 0.0);
    CHECK_THROWS_AS(HermitianOperator{bad}, std::invalid_argument);

    ComplexMatrix nonfinite(2, 2);
    nonfinite(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(HermitianOperator{nonfinite}, std::invalid_argument);

    // Rounding-level asymmetry is symmetrized, not rejected.
    ComplexMatrix almost(2, 2);
    almost(0, 1) = Complex(1.0, 1e-12);
    almost(1, 0) = Complex(1.0, -1e-12 + 1e-14);
    const HermitianOperator h(almost);
    CHECK(std::abs(h(0, 1) - std::conj(h(1, 0))) == 0.0);
}

TEST_CASE("eig_hermitian on Pauli operators") {
    const auto ez = eig_hermitian(pauli_z());
    CHECK(ez.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ez.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));

    const auto ex = eig_hermitian(pauli_x());
    CHECK(ex.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ex.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    // eigenvectors (|0> -+ |1>)/sqrt(2) up to phase
    const Vector vmin = ex.eigenvector(0);
    CHECK(std::abs(std::abs(vmin[0]) - 1.0 / std::sqrt(2.0)) < 1e-10);
    CHECK(std::abs(vmin[0] + vmin[1]) < 1e-10);
}

TEST_CASE("eig_hermitian on X(x)X + Z(x)Z") {
    const HermitianOperator h =
        kron(pauli_x(), pauli_x()) + kron(pauli_z(), pauli_z());
    const auto eig = eig_hermitian(h);
    CHECK(eig.eigenvalues[0] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[2] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[3] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("eig residues on random Hermitian matrices up to d=9") {
    std::mt19937_64 gen(11);
    for (std::size_t d = 2; d <= 9; ++d) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto h = testutil::random_hermitian(gen, d);
            const auto eig = eig_hermitian(h);
            CHECK(reconstruction_error(h, eig) <= 1e-10);
            CHECK(orthonormality_error(eig) <= 1e-10);
            CHECK(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
        }
    }
}

TEST_CASE("eigenvalues invariant under unitary conjugation") {
    std::mt19937_64 gen(12);
    for (int rep = 0; rep < 10; ++rep) {
        const auto h = testutil::random_hermitian(gen, 5);
        const auto hc = testutil::random_unitary_conjugate(gen, h);
        const auto e1 = eig_hermitian(h).eigenvalues;
        const auto e2 = eig_hermitian(hc).eigenvalues;
        for (std::size_t i = 0; i < e1.size(); ++i) CHECK(std::abs(e1[i] - e2[i]) <= 1e-10);
    }
}

TEST_CASE("kron basics") {
    const auto i2 = HermitianOperator::identity(2);
    const auto i4 = kron(i2, i2);
    CHECK((i4.matrix() - ComplexMatrix::identity(4)).max_abs() == 0.0);

    const auto zz = kron(pauli_z(), pauli_z());
    CHECK(zz(0, 0) == Complex(1.0));
    CHECK(zz(1, 1) == Complex(-1.0));
    CHECK(zz(2, 2) == Complex(-1.0));
    CHECK(zz(3, 3) == Complex(1.0));

    const auto xz = kron(pauli_x(), pauli_z());
    CHECK(xz(0, 2) == Complex(1.0));
    CHECK(xz(1, 3) == Complex(-1.0));
    CHECK(xz(2, 0) == Complex(1.0));
    CHECK(xz(0, 0) == Complex(0.0));
}

TEST_CASE("kron spectrum is the product multiset") {
    std::mt19937_64 gen(13);
    const auto a = testutil::random_hermitian(gen, 3);
    const auto b = testutil::random_hermitian(gen, 2);
    auto spec = eig_hermitian(kron(a, b)).eigenvalues;
    std::vector<double> expected;
    for (double ea : eig_hermitian(a).eigenvalues)
        for (double eb : eig_hermitian(b).eigenvalues) expected.push_back(ea * eb);
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < spec.size(); ++i)
        CHECK(std::abs(spec[i] - expected[i]) <= 1e-10);
}

TEST_CASE("expectation values") {
    const HermitianOperator h =
        kron(pauli_x(), pauli_x()) + kron(pauli_z(), pauli_z());
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(expectation(h, Vector{s, 0, 0, s}) == doctest::Approx(2.0).epsilon(1e-13));

    CHECK(expectation(pauli_z(), DensityState::maximally_mixed(1, 2)) ==
          doctest::Approx(0.0).epsilon(1e-13));

    CHECK(expectation(kron(pauli_z(), pauli_z()), Vector{0, 1, 0, 0}) ==
          doctest::Approx(-1.0).epsilon(1e-13));

    CHECK_THROWS_AS(expectation(pauli_z(), Vector{1, 0, 0}), std::invalid_argument);
}

TEST_CASE("schmidt analysis") {
    CHECK(schmidt(Vector{1, 0, 0, 0}, 2, 2).rank == 1);
    CHECK(schmidt(Vector{1, 0, 0, 0}, 2, 2).coefficients[0] == doctest::Approx(1.0));

    const double s = 1.0 / std::sqrt(2.0);
    const auto bell = schmidt(Vector{s, 0, 0, s}, 2, 2);
    CHECK(bell.rank == 2);
    CHECK(bell.coefficients[0] == doctest::Approx(s).epsilon(1e-12));
    CHECK(bell.coefficients[1] == doctest::Approx(s).epsilon(1e-12));

    CHECK(schmidt(Vector{0, s, -s, 0}, 2, 2).rank == 2);
    CHECK_THROWS_AS(schmidt(Vector{0, 0, 0, 0}, 2, 2), std::invalid_argument);
}

TEST_CASE("schmidt rank 1 iff product vector") {
    std::mt19937_64 gen(14);
    for (int rep = 0; rep < 20; ++rep) {
        const Vector a = testutil::random_unit(gen, 3);
        const Vector b = testutil::random_unit(gen, 2);
        CHECK(schmidt(kron_vec(a, b), 3, 2).rank == 1);

        Vector mixed = kron_vec(a, b);
        const Vector a2 = testutil::random_unit(gen, 3);
        const Vector b2 = testutil::random_unit(gen, 2);
        const Vector other = kron_vec(a2, b2);
        for (std::size_t i = 0; i < mixed.size(); ++i) mixed[i] += 0.7 * other[i];
        normalize(mixed);
        // Generically entangled; verify via reconstruction from factors.
        const auto an = schmidt(mixed, 3, 2);
        if (an.rank == 1) {
            // then it must actually be a product vector; rebuild and compare
            WARN(an.coefficients[1] < 1e-8);
        }
    }
}

TEST_CASE("schmidt norm identity") {
    std::mt19937_64 gen(15);
    const Vector v = testutil::random_unit(gen, 6);
    const auto an = schmidt(v, 2, 3);
    double ss = 0.0;
    for (double c : an.coefficients) ss += c * c;
    CHECK(ss == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partial transpose") {
    const auto mixed = DensityState::maximally_mixed(2, 2);
    CHECK((partial_transpose(mixed) - mixed.matrix()).max_abs() == 0.0);

    const auto pt = partial_transpose(presets::singlet());
    CHECK(eig_hermitian(HermitianOperator(pt)).eigenvalues.front() ==
          doctest::Approx(-0.5).epsilon(1e-12));

    std::mt19937_64 gen(16);
    const Vector a = testutil::random_unit(gen, 2);
    const Vector b = testutil::random_unit(gen, 2);
    const auto prod = DensityState::from_pure(kron_vec(a, b), 2, 2);
    CHECK(is_psd(HermitianOperator(partial_transpose(prod))));
}

TEST_CASE("partial transpose is a trace-preserving involution") {
    // Separable mixture so the partial transpose is itself a valid state.
    std::mt19937_64 gen(17);
    ComplexMatrix m(6, 6);
    for (int i = 0; i < 4; ++i) {
        const Vector v = kron_vec(testutil::random_unit(gen, 2), testutil::random_unit(gen, 3));
        m += outer(v) * Complex(0.25);
    }
    const DensityState rho(2, 3, m);
    const auto pt = partial_transpose(rho);
    CHECK(pt.trace().real() == doctest::Approx(1.0).epsilon(1e-14));
    const auto back = partial_transpose(DensityState(2, 3, pt));
    CHECK((back - rho.matrix()).max_abs() < 1e-14);
}

TEST_CASE("is_psd") {
    CHECK(is_psd(HermitianOperator::identity(3)));
    CHECK_FALSE(is_psd(pauli_z()));
    const HermitianOperator h = kron(pauli_x(), pauli_x()) + kron(pauli_z(), pauli_z()) +
                                2.0 * HermitianOperator::identity(4);
    CHECK(is_psd(h));
}
