#include "imkit/imaginarity.hpp"

#include <cmath>

namespace imkit {

ComplexMatrix AntisymmetricGenerator::projector() const {
    ComplexMatrix pr(dim, dim);
    pr(p, p) = 1.0;
    pr(q, q) = 1.0;
    return pr;
}

std::vector<AntisymmetricGenerator> antisymmetric_generators(std::size_t d) {
    std::vector<AntisymmetricGenerator> gens;
    gens.reserve(d * (d - 1) / 2);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = p + 1; q < d; ++q) {
            ComplexMatrix m(d, d);
            m(p, q) = cplx{0.0, 1.0};
            m(q, p) = cplx{0.0, -1.0};
            gens.push_back({d, p, q, std::move(m)});
        }
    return gens;
}

ImaginaritySplit split(const DensityMatrix& rho) {
    const std::size_t d = rho.dim();
    ImaginaritySplit s{ComplexMatrix(d, d), ComplexMatrix(d, d)};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            s.real_part(i, j) = (rho(i, j) + rho(j, i)) * 0.5;
            s.imag_part(i, j) = (rho(i, j) - rho(j, i)) * 0.5;
        }
    return s;
}

DensityMatrix y_twirl(const DensityMatrix& rho) {
    const std::size_t d = rho.dim();
    const double inv_d = 1.0 / static_cast<double>(d);
    ComplexMatrix out(d, d);
    for (std::size_t m = 0; m < d; ++m) {
        out(m, m) = inv_d;
        for (std::size_t n = 0; n < d; ++n)
            if (m != n) out(m, n) = cplx{0.0, 2.0 * inv_d * rho(m, n).imag()};
    }
    return adopt_density_unchecked(std::move(out));
}

DensityMatrix y_twirl_kraus(const DensityMatrix& rho) {
    const std::size_t d = rho.dim();
    ComplexMatrix acc = rho.matrix();
    for (const auto& g : antisymmetric_generators(d)) acc = acc + g.matrix * rho.matrix() * g.matrix;
    return adopt_density_unchecked(acc * cplx{1.0 / static_cast<double>(d), 0.0});
}

double l1_imaginarity(const DensityMatrix& rho) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i)
        for (std::size_t j = 0; j < rho.dim(); ++j)
            if (i != j) sum += std::abs(rho(i, j).imag());
    return sum;
}

double l1_coherence(const DensityMatrix& rho, const OrthonormalBasis& basis) {
    if (rho.dim() != basis.dim()) throw DimensionMismatch(rho.dim(), basis.dim());
    const ComplexMatrix in_basis = basis.matrix().adjoint() * rho.matrix() * basis.matrix();
    double sum = 0.0;
    for (std::size_t j = 0; j < rho.dim(); ++j)
        for (std::size_t k = 0; k < rho.dim(); ++k)
            if (j != k) sum += std::abs(in_basis(j, k));
    return sum;
}

bool is_real_state(const DensityMatrix& rho, double eps) {
    for (std::size_t i = 0; i < rho.dim(); ++i)
        for (std::size_t j = 0; j < rho.dim(); ++j)
            if (std::abs(rho(i, j).imag()) > eps) return false;
    return true;
}

} // namespace imkit
