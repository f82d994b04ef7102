#ifndef IMKIT_IMAGINARITY_HPP
#define IMKIT_IMAGINARITY_HPP

#include <vector>

#include "imkit/quantum_core.hpp"

namespace imkit {

/// Antisymmetric generator Y_pq = i(|p><q| - |q><p|), p < q. Hermitian,
/// traceless, squares to the projector onto span{|p>, |q>}.
struct AntisymmetricGenerator {
    std::size_t dim;
    std::size_t p, q;
    ComplexMatrix matrix;

    /// Rank-2 projector P_pq = Y_pq^2.
    ComplexMatrix projector() const;
};

/// All d(d-1)/2 generators in lexicographic (p, q) order. This order is
/// load-bearing: per-generator visibilities are serialized in it.
std::vector<AntisymmetricGenerator> antisymmetric_generators(std::size_t d);

/// rho = real_part + imag_part with real_part = (rho + rho^T)/2 symmetric
/// and imag_part = (rho - rho^T)/2 antisymmetric under transposition.
struct ImaginaritySplit {
    ComplexMatrix real_part;
    ComplexMatrix imag_part;
};

ImaginaritySplit split(const DensityMatrix& rho);

/// Y-twirl channel, closed form: diagonals -> 1/d, off-diagonals ->
/// (2/d) i Im(rho_mn). O(d^2).
DensityMatrix y_twirl(const DensityMatrix& rho);

/// Same channel evaluated as the operator sum
/// (rho + sum_{p<q} Y_pq rho Y_pq)/d. O(d^4); reference form for tests.
DensityMatrix y_twirl_kraus(const DensityMatrix& rho);

/// M_l1(rho) = sum_{i != j} |Im rho_ij|; zero iff rho is real within eps.
double l1_imaginarity(const DensityMatrix& rho);

/// C_l1(rho, A) = sum_{j != k} |<a_j|rho|a_k>|.
double l1_coherence(const DensityMatrix& rho, const OrthonormalBasis& basis);

/// True iff max |Im rho_ij| <= eps.
bool is_real_state(const DensityMatrix& rho, double eps = 1e-10);

} // namespace imkit

#endif
