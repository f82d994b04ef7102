#ifndef IMKIT_QUANTUM_CORE_HPP
#define IMKIT_QUANTUM_CORE_HPP

#include <cstdint>
#include <vector>

#include "imkit/complex_matrix.hpp"
#include "imkit/errors.hpp"
#include "imkit/types.hpp"

namespace imkit {

/// Validated density operator: Hermitian, unit trace, positive semidefinite
/// within the tolerances it was built with. Immutable after construction.
class DensityMatrix {
public:
    std::size_t dim() const { return mat_.rows(); }
    const ComplexMatrix& matrix() const { return mat_; }
    cplx operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

    /// n-fold tensor power. Validity is preserved by the tensor product, so
    /// the result is adopted without re-running the eigenvalue check.
    DensityMatrix kron_power(std::size_t n) const;

    friend DensityMatrix make_density(const ComplexMatrix&, const Tolerances&);
    friend DensityMatrix adopt_density_unchecked(ComplexMatrix);

private:
    explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
    ComplexMatrix mat_;
};

/// Validates and constructs a density matrix. Hermiticity is enforced by
/// symmetrizing (rho + rho^dag)/2 only when the asymmetry is already below
/// eps; larger asymmetry is rejected. Throws NotHermitian, NotUnitTrace or
/// NotPSD with the measured residual.
DensityMatrix make_density(const ComplexMatrix& entries, const Tolerances& tol = {});

/// Adopts a matrix as a density operator without validation. For internal
/// constructions whose validity is a structural fact (tensor powers, exact
/// channel outputs in tests).
DensityMatrix adopt_density_unchecked(ComplexMatrix m);

/// Pure state |psi>, unit norm within eps.
class PureState {
public:
    PureState(std::vector<cplx> amplitudes, const Tolerances& tol = {});

    /// Bloch-sphere qubit cos(theta/2)|0> + sin(theta/2) e^{i alpha}|1>.
    static PureState qubit(double theta, double alpha);

    std::size_t dim() const { return amp_.size(); }
    const std::vector<cplx>& amplitudes() const { return amp_; }

private:
    std::vector<cplx> amp_;
};

/// |psi><psi| as a validated density matrix.
DensityMatrix pure_density(const PureState& psi, const Tolerances& tol = {});

/// Ordered orthonormal basis: d column vectors of length d, pairwise
/// orthonormal within eps. Stored as the columns of a d x d matrix.
class OrthonormalBasis {
public:
    OrthonormalBasis(ComplexMatrix columns, const Tolerances& tol = {});

    std::size_t dim() const { return mat_.rows(); }
    const ComplexMatrix& matrix() const { return mat_; }
    /// Component m of basis vector k.
    cplx component(std::size_t m, std::size_t k) const { return mat_(m, k); }
    std::vector<cplx> vector(std::size_t k) const;

private:
    ComplexMatrix mat_;
};

/// Standard basis of C^d. Throws DimensionTooSmall for d < 2.
OrthonormalBasis computational_basis(std::size_t d);

/// Discrete-Fourier partner of a basis: b_k = (1/sqrt d) sum_j w^{jk} a_j,
/// w = exp(2 pi i / d). Mutually unbiased with the input by construction.
OrthonormalBasis fourier_mub(const OrthonormalBasis& basis);

/// d = 2 family b_1 = (|0> + e^{i beta}|1>)/sqrt2, b_2 = (|0> - e^{i beta}|1>)/sqrt2.
OrthonormalBasis qubit_beta_basis(double beta);

struct MubCheck {
    bool unbiased;
    double worst_deviation; // max_ik | |<a_i|b_k>| - 1/sqrt(d) |
};

/// True iff every overlap modulus equals 1/sqrt(d) within eps.
MubCheck validate_mub(const OrthonormalBasis& a, const OrthonormalBasis& b, double eps = 1e-10);

/// d x d overlap matrix O(i, k) = <a_i|b_k>.
ComplexMatrix overlap_matrix(const OrthonormalBasis& a, const OrthonormalBasis& b);

/// Deterministic seeded Gaussian source (Box-Muller over mt19937_64), so
/// seeded draws are reproducible across standard libraries.
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : state_(seed) {}
    double normal();
    double uniform(); // [0, 1)

private:
    std::uint64_t next_u64();
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Random density matrix from a seeded complex Ginibre draw G: G G^dag / Tr.
DensityMatrix random_density(std::size_t d, std::uint64_t seed);

/// Same construction with a real Ginibre draw: a random state with zero
/// imaginary parts by construction.
DensityMatrix random_density_real(std::size_t d, std::uint64_t seed);

} // namespace imkit

#endif
