#ifndef IMKIT_KD_HPP
#define IMKIT_KD_HPP

#include <vector>

#include "imkit/quantum_core.hpp"

namespace imkit {

/// Two-basis Kirkwood-Dirac quasiprobability Q_ik = <b_k|a_i><a_i|rho|b_k>.
/// Marginals reproduce the Born probabilities of the two bases; checked at
/// construction against the generating state.
struct KDTensor {
    std::size_t dim;
    std::vector<cplx> values; // row-major (i, k)
    OrthonormalBasis basis_a;
    OrthonormalBasis basis_b;
    double normalization_residual; // |sum Q - 1|
    double marginal_residual;      // worst row/column sum vs Born probability

    cplx operator()(std::size_t i, std::size_t k) const { return values[i * dim + k]; }
};

/// Three-index extended KD distribution over the ordered projector sequence
/// (A_i nearest rho, B_k, A_j):
///   Q*_ijk = <a_j|b_k> <b_k|a_i> <a_i|rho|a_j>.
/// Values are stored in lexicographic (i, j, k) order and this tuple order is
/// preserved in serialization.
struct ExtendedKDTensor {
    std::size_t dim;
    std::vector<cplx> values; // lexicographic (i, j, k)
    OrthonormalBasis basis_a;
    OrthonormalBasis basis_b;
    bool basis_b_unbiased;        // recorded validate_mub verdict
    double mub_worst_deviation;
    double normalization_residual;

    cplx operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return values[(i * dim + j) * dim + k];
    }
};

KDTensor kd(const DensityMatrix& rho, const OrthonormalBasis& basis_a,
            const OrthonormalBasis& basis_b, const Tolerances& tol = {},
            exec policy = exec::parallel);

ExtendedKDTensor extended_kd(const DensityMatrix& rho, const OrthonormalBasis& basis_a,
                             const OrthonormalBasis& basis_b, const Tolerances& tol = {},
                             exec policy = exec::parallel);

/// General l-observable form Q*_{i1..il} = Tr(P^(l)_{il} ... P^(1)_{i1} rho)
/// over an ordered list of bases (first basis applied nearest rho). Returns
/// the d^l values in lexicographic (i1, ..., il) order.
std::vector<cplx> extended_kd_general(const DensityMatrix& rho,
                                      const std::vector<OrthonormalBasis>& bases);

/// Nonpositivity functional sum |Q*| - 1. Equals l1_coherence(rho, basis_a)
/// when basis_b is mutually unbiased.
double nonpositivity(const ExtendedKDTensor& q, exec policy = exec::parallel);

/// State reconstruction rho = sum_ijk (|a_i><b_k| / <b_k|a_i>) Q*_ijk.
/// Refuses zero overlap denominators (never the case for an unbiased pair).
DensityMatrix reconstruct(const ExtendedKDTensor& q, const Tolerances& tol = {});

} // namespace imkit

#endif
