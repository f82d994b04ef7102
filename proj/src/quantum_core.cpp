#include "imkit/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace imkit {

DensityMatrix DensityMatrix::kron_power(std::size_t n) const {
    ComplexMatrix out = mat_;
    for (std::size_t t = 1; t < n; ++t) out = out.kron(mat_);
    return DensityMatrix(std::move(out));
}

DensityMatrix make_density(const ComplexMatrix& entries, const Tolerances& tol) {
    if (!entries.is_square()) throw DimensionMismatch(entries.rows(), entries.cols());
    const std::size_t d = entries.rows();

    double herm_residual = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            herm_residual =
                std::max(herm_residual, std::abs(entries(i, j) - std::conj(entries(j, i))));
    if (herm_residual > tol.eps) throw NotHermitian(herm_residual);

    ComplexMatrix sym(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            sym(i, j) = (entries(i, j) + std::conj(entries(j, i))) * 0.5;

    const double trace_residual = std::abs(sym.trace() - cplx{1.0, 0.0});
    if (trace_residual > tol.eps) throw NotUnitTrace(trace_residual);

    const auto eigs = hermitian_eigenvalues(sym);
    if (!eigs.empty() && eigs.front() < -tol.eps_psd) throw NotPSD(eigs.front());

    return DensityMatrix(std::move(sym));
}

DensityMatrix adopt_density_unchecked(ComplexMatrix m) { return DensityMatrix(std::move(m)); }

PureState::PureState(std::vector<cplx> amplitudes, const Tolerances& tol)
    : amp_(std::move(amplitudes)) {
    double n2 = 0.0;
    for (const cplx& a : amp_) n2 += std::norm(a);
    const double n = std::sqrt(n2);
    if (std::abs(n - 1.0) > tol.eps) throw NotNormalized(n);
}

PureState PureState::qubit(double theta, double alpha) {
    return PureState({cplx{std::cos(theta / 2), 0.0},
                      std::polar(std::sin(theta / 2), alpha)});
}

DensityMatrix pure_density(const PureState& psi, const Tolerances& tol) {
    const std::size_t d = psi.dim();
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            m(i, j) = psi.amplitudes()[i] * std::conj(psi.amplitudes()[j]);
    return make_density(m, tol);
}

OrthonormalBasis::OrthonormalBasis(ComplexMatrix columns, const Tolerances& tol)
    : mat_(std::move(columns)) {
    if (!mat_.is_square()) throw DimensionMismatch(mat_.rows(), mat_.cols());
    const std::size_t d = mat_.rows();
    double residual = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            cplx g{0.0, 0.0};
            for (std::size_t m = 0; m < d; ++m) g += std::conj(mat_(m, i)) * mat_(m, j);
            residual = std::max(residual, std::abs(g - (i == j ? cplx{1.0, 0.0} : cplx{0.0, 0.0})));
        }
    if (residual > tol.eps) throw NotOrthonormal(residual);
}

std::vector<cplx> OrthonormalBasis::vector(std::size_t k) const {
    std::vector<cplx> v(dim());
    for (std::size_t m = 0; m < dim(); ++m) v[m] = mat_(m, k);
    return v;
}

OrthonormalBasis computational_basis(std::size_t d) {
    if (d < 2) throw DimensionTooSmall(d);
    return OrthonormalBasis(ComplexMatrix::identity(d));
}

OrthonormalBasis fourier_mub(const OrthonormalBasis& basis) {
    const std::size_t d = basis.dim();
    ComplexMatrix cols(d, d);
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t m = 0; m < d; ++m) {
            cplx acc{0.0, 0.0};
            for (std::size_t j = 0; j < d; ++j) {
                const double phase = 2.0 * std::numbers::pi * static_cast<double>(j * k) /
                                     static_cast<double>(d);
                acc += std::polar(1.0, phase) * basis.component(m, j);
            }
            cols(m, k) = acc * inv_sqrt_d;
        }
    return OrthonormalBasis(std::move(cols));
}

OrthonormalBasis qubit_beta_basis(double beta) {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix cols(2, 2);
    cols(0, 0) = s;
    cols(1, 0) = std::polar(s, beta);
    cols(0, 1) = s;
    cols(1, 1) = -std::polar(s, beta);
    return OrthonormalBasis(std::move(cols));
}

MubCheck validate_mub(const OrthonormalBasis& a, const OrthonormalBasis& b, double eps) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
    const ComplexMatrix o = overlap_matrix(a, b);
    const double target = 1.0 / std::sqrt(static_cast<double>(a.dim()));
    double worst = 0.0;
    for (const cplx& v : o.entries()) worst = std::max(worst, std::abs(std::abs(v) - target));
    return {worst <= eps, worst};
}

ComplexMatrix overlap_matrix(const OrthonormalBasis& a, const OrthonormalBasis& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
    return a.matrix().adjoint() * b.matrix();
}

std::uint64_t GaussianRng::next_u64() {
    // splitmix64 step feeding an xorshift-style scramble; a self-contained
    // generator keeps seeded draws identical across standard libraries.
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double GaussianRng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double GaussianRng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(phi);
    have_spare_ = true;
    return r * std::cos(phi);
}

namespace {

DensityMatrix ginibre_density(std::size_t d, std::uint64_t seed, bool complex_entries) {
    GaussianRng rng(seed);
    ComplexMatrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const double re = rng.normal();
            const double im = complex_entries ? rng.normal() : 0.0;
            g(i, j) = cplx{re, im};
        }
    ComplexMatrix w = g * g.adjoint();
    const double tr = w.trace().real();
    return make_density(w * cplx{1.0 / tr, 0.0});
}

} // namespace

DensityMatrix random_density(std::size_t d, std::uint64_t seed) {
    return ginibre_density(d, seed, true);
}

DensityMatrix random_density_real(std::size_t d, std::uint64_t seed) {
    return ginibre_density(d, seed, false);
}

} // namespace imkit
