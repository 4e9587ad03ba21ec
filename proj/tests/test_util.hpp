#ifndef SEPWIT_TEST_UTIL_HPP
#define SEPWIT_TEST_UTIL_HPP

#include <random>

#include "sepwit/linalg.hpp"
#include "sepwit/range.hpp"

namespace sepwit::testutil {

inline HermitianOperator random_hermitian(std::mt19937_64& gen, std::size_t d,
                                          double scale = 1.0) {
    std::normal_distribution<double> nd(0.0, scale);
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = nd(gen);
        for (std::size_t j = i + 1; j < d; ++j) {
            m(i, j) = Complex(nd(gen), nd(gen));
            m(j, i) = std::conj(m(i, j));
        }
    }
    return HermitianOperator(m);
}

inline Vector random_unit(std::mt19937_64& gen, std::size_t d) {
    std::normal_distribution<double> nd;
    Vector v(d);
    for (auto& z : v) z = Complex(nd(gen), nd(gen));
    normalize(v);
    return v;
}

inline HermitianOperator random_unitary_conjugate(std::mt19937_64& gen,
                                                  const HermitianOperator& h) {
    // Gram-Schmidt on random Gaussian columns gives a Haar unitary.
    const std::size_t d = h.dim();
    std::normal_distribution<double> nd;
    ComplexMatrix u(d, d);
    for (std::size_t c = 0; c < d; ++c) {
        Vector v(d);
        for (auto& z : v) z = Complex(nd(gen), nd(gen));
        for (std::size_t p = 0; p < c; ++p) {
            Complex proj = 0.0;
            for (std::size_t i = 0; i < d; ++i) proj += std::conj(u(i, p)) * v[i];
            for (std::size_t i = 0; i < d; ++i) v[i] -= proj * u(i, p);
        }
        normalize(v);
        for (std::size_t i = 0; i < d; ++i) u(i, c) = v[i];
    }
    return HermitianOperator(u.adjoint() * h.matrix() * u);
}

/// Random pair with no common eigenvectors on either side (verified), dims in
/// {2,3} depending on the generator.
inline ProductPair random_product_pair(std::mt19937_64& gen, std::size_t dA, std::size_t dB) {
    return ProductPair(random_hermitian(gen, dA), random_hermitian(gen, dA),
                       random_hermitian(gen, dB), random_hermitian(gen, dB));
}

}  // namespace sepwit::testutil

#endif
