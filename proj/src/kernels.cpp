#include "imkit/kernels.hpp"

#include <cassert>
#include <cmath>
#include <cstdint>

namespace imkit::kernels {

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c,
            std::size_t ar, std::size_t inner, std::size_t bc, exec policy) {
    assert(a.size() == ar * inner && b.size() == inner * bc && c.size() == ar * bc);
    const bool par = policy == exec::parallel && ar * inner * bc >= 32768;
    const std::int64_t n = static_cast<std::int64_t>(ar);
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t i = 0; i < n; ++i) {
        const cplx* arow = a.data() + static_cast<std::size_t>(i) * inner;
        cplx* crow = c.data() + static_cast<std::size_t>(i) * bc;
        for (std::size_t j = 0; j < bc; ++j) {
            cplx acc{0.0, 0.0};
            for (std::size_t k = 0; k < inner; ++k) acc += arow[k] * b[k * bc + j];
            crow[j] = acc;
        }
    }
}

namespace {

std::size_t block_count(std::size_t n) { return (n + reduction_block - 1) / reduction_block; }

} // namespace

std::vector<cplx> power_sums(std::span<const cplx> values, std::size_t n_max, exec policy) {
    const std::size_t nb = block_count(values.size());
    // partials[block * n_max + (n-1)]
    std::vector<cplx> partials(nb * n_max, cplx{0.0, 0.0});
    const bool par = policy == exec::parallel && values.size() >= 4 * reduction_block;
    const std::int64_t nbi = static_cast<std::int64_t>(nb);
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t blk = 0; blk < nbi; ++blk) {
        const std::size_t lo = static_cast<std::size_t>(blk) * reduction_block;
        const std::size_t hi = std::min(values.size(), lo + reduction_block);
        cplx* out = partials.data() + static_cast<std::size_t>(blk) * n_max;
        for (std::size_t m = lo; m < hi; ++m) {
            cplx w = values[m];
            for (std::size_t n = 0; n < n_max; ++n) {
                out[n] += w;
                w *= values[m];
            }
        }
    }
    std::vector<cplx> sums(n_max, cplx{0.0, 0.0});
    for (std::size_t blk = 0; blk < nb; ++blk)
        for (std::size_t n = 0; n < n_max; ++n) sums[n] += partials[blk * n_max + n];
    return sums;
}

std::vector<cplx> ext_kd_values(std::span<const cplx> overlaps, std::span<const cplx> rho_a,
                                std::size_t d, exec policy) {
    assert(overlaps.size() == d * d && rho_a.size() == d * d);
    std::vector<cplx> q(d * d * d);
    const bool par = policy == exec::parallel && d >= 8;
    const std::int64_t nd = static_cast<std::int64_t>(d);
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t i = 0; i < nd; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const cplx rij = rho_a[static_cast<std::size_t>(i) * d + j];
            cplx* row = q.data() + (static_cast<std::size_t>(i) * d + j) * d;
            for (std::size_t k = 0; k < d; ++k)
                row[k] = overlaps[j * d + k] * std::conj(overlaps[static_cast<std::size_t>(i) * d + k]) * rij;
        }
    }
    return q;
}

void rank_one_accumulate(std::span<const cplx> coeffs,
                         const std::vector<std::vector<cplx>>& u,
                         const std::vector<std::vector<cplx>>& v,
                         std::span<cplx> s, std::size_t dim, exec policy) {
    assert(coeffs.size() == u.size() && u.size() == v.size() && s.size() == dim * dim);
    const bool par = policy == exec::parallel && dim >= 64;
    const std::int64_t nd = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t r = 0; r < nd; ++r) {
        cplx* row = s.data() + static_cast<std::size_t>(r) * dim;
        for (std::size_t t = 0; t < coeffs.size(); ++t) {
            const cplx cu = coeffs[t] * u[t][static_cast<std::size_t>(r)];
            const cplx* vt = v[t].data();
            for (std::size_t c = 0; c < dim; ++c) row[c] += cu * std::conj(vt[c]);
        }
    }
}

std::vector<double> intensity_grid(cplx tr_u_rho, std::span<const double> thetas, exec policy) {
    std::vector<double> out(thetas.size());
    const bool par = policy == exec::parallel && thetas.size() >= 4096;
    const std::int64_t n = static_cast<std::int64_t>(thetas.size());
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t j = 0; j < n; ++j) {
        const cplx ph{std::cos(thetas[static_cast<std::size_t>(j)]),
                      -std::sin(thetas[static_cast<std::size_t>(j)])};
        out[static_cast<std::size_t>(j)] = 0.5 * (1.0 + (tr_u_rho * ph).real());
    }
    return out;
}

double abs_sum(std::span<const cplx> values, exec policy) {
    const std::size_t nb = block_count(values.size());
    std::vector<double> partials(nb, 0.0);
    const bool par = policy == exec::parallel && values.size() >= 4 * reduction_block;
    const std::int64_t nbi = static_cast<std::int64_t>(nb);
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t blk = 0; blk < nbi; ++blk) {
        const std::size_t lo = static_cast<std::size_t>(blk) * reduction_block;
        const std::size_t hi = std::min(values.size(), lo + reduction_block);
        double acc = 0.0;
        for (std::size_t m = lo; m < hi; ++m) acc += std::abs(values[m]);
        partials[static_cast<std::size_t>(blk)] = acc;
    }
    double total = 0.0;
    for (double p : partials) total += p;
    return total;
}

} // namespace imkit::kernels
