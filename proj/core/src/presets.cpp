#include "sepwit/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace sepwit::presets {

namespace {

HermitianOperator from_rows(std::size_t n, std::initializer_list<Complex> entries) {
    ComplexMatrix m(n, n);
    std::size_t k = 0;
    for (const auto& z : entries) {
        m(k / n, k % n) = z;
        ++k;
    }
    return HermitianOperator(m);
}

}  // namespace

HermitianOperator pauli_x() { return from_rows(2, {0, 1, 1, 0}); }

HermitianOperator pauli_z() { return from_rows(2, {1, 0, 0, -1}); }

ProductPair pauli_xxzz() { return ProductPair(pauli_x(), pauli_z(), pauli_x(), pauli_z()); }

ProductPair cor1_projectors() {
    const double s = 1.0 / std::sqrt(2.0);
    const Vector a1{1.0, 0.0};
    const Vector a2{s, s};
    const HermitianOperator p1 = HermitianOperator::projector(a1);
    const HermitianOperator p2 = HermitianOperator::projector(a2);
    return ProductPair(p1, p2, p1, p2);
}

ProductPair planted_common() {
    const HermitianOperator a1 = from_rows(3, {0, 1, 0, 1, 0, 0, 0, 0, 2});
    const HermitianOperator a2 = from_rows(3, {1, 0, 0, 0, -1, 0, 0, 0, 3});
    return ProductPair(a1, a2, pauli_x(), pauli_z());
}

ProductPair commuting() {
    const HermitianOperator p0 = from_rows(2, {1, 0, 0, 0});
    return ProductPair(pauli_z(), p0, pauli_z(), p0);
}

DensityState singlet() {
    const double s = 1.0 / std::sqrt(2.0);
    return DensityState::from_pure(Vector{0.0, s, -s, 0.0}, 2, 2);
}

DensityState bell_phi_plus() {
    const double s = 1.0 / std::sqrt(2.0);
    return DensityState::from_pure(Vector{s, 0.0, 0.0, s}, 2, 2);
}

ProductPair by_name(const std::string& name) {
    if (name == "pauli-xxzz") return pauli_xxzz();
    if (name == "cor1-projectors") return cor1_projectors();
    if (name == "planted-common") return planted_common();
    if (name == "commuting") return commuting();
    if (name == "pauli-xz")
        // Single-qubit pair embedded as (X, Z | I, I): the joint range of
        // (H1, H2) is then exactly Lambda(X, Z).
        return ProductPair(pauli_x(), pauli_z(), HermitianOperator::identity(2),
                           HermitianOperator::identity(2));
    throw std::invalid_argument("unknown preset: " + name);
}

std::vector<std::string> names() {
    return {"pauli-xz", "pauli-xxzz", "cor1-projectors", "planted-common", "commuting"};
}

}  // namespace sepwit::presets
