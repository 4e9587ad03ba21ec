#ifndef SEPWIT_PRESETS_HPP
#define SEPWIT_PRESETS_HPP

#include <string>
#include <vector>

#include "sepwit/range.hpp"

namespace sepwit::presets {

HermitianOperator pauli_x();
HermitianOperator pauli_z();

/// X (x) X, Z (x) Z on two qubits.
ProductPair pauli_xxzz();

/// H_i = |a_i><a_i| (x) |a_i><a_i| with |<a1|a2>|^2 = 1/2.
ProductPair cor1_projectors();

/// A-side X+(2), Z+(3) on C^3 (scalar block at e2), B-side (X, Z).
ProductPair planted_common();

/// Commuting on both sides; ineffective by construction.
ProductPair commuting();

/// |01> - |10> projector, normalized.
DensityState singlet();
/// |00> + |11> projector, normalized.
DensityState bell_phi_plus();

ProductPair by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace sepwit::presets

#endif
