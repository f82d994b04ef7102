#ifndef IMKIT_KERNELS_HPP
#define IMKIT_KERNELS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "imkit/types.hpp"

namespace imkit::kernels {

/// Fixed block size for partial-sum reductions. Partials are accumulated
/// per block in index order and folded serially, so the result does not
/// depend on the thread count and matches the serial policy bitwise.
inline constexpr std::size_t reduction_block = 1024;

/// C = A * B for row-major complex matrices (a: ar x inner, b: inner x bc).
/// Each output entry is a fixed-order dot product; rows run in parallel.
void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c,
            std::size_t ar, std::size_t inner, std::size_t bc, exec policy);

/// Power sums r_n = sum_m values[m]^n for n = 1..n_max, in flat index order.
/// Returns n_max complex sums.
std::vector<cplx> power_sums(std::span<const cplx> values, std::size_t n_max, exec policy);

/// Extended KD tensor values in lexicographic (i, j, k) order:
///   Q[i,j,k] = overlaps[j,k] * conj(overlaps[i,k]) * rho_a[i,j]
/// where overlaps[i,k] = <a_i|b_k> and rho_a[i,j] = <a_i|rho|a_j>, both d x d
/// row-major. Entries are independent; the loop runs in parallel.
std::vector<cplx> ext_kd_values(std::span<const cplx> overlaps, std::span<const cplx> rho_a,
                                std::size_t d, exec policy);

/// Accumulates S += sum_t coeff[t] * u[t] (x) conj(v[t])^T over terms in fixed
/// order, where u[t], v[t] are vectors of length dim. Entry-parallel.
void rank_one_accumulate(std::span<const cplx> coeffs,
                         const std::vector<std::vector<cplx>>& u,
                         const std::vector<std::vector<cplx>>& v,
                         std::span<cplx> s, std::size_t dim, exec policy);

/// I(theta_j) = (1 + Re(tr_u_rho * exp(-i theta_j))) / 2 for each grid point.
std::vector<double> intensity_grid(cplx tr_u_rho, std::span<const double> thetas, exec policy);

/// Sum of |values[m]| with block-deterministic reduction.
double abs_sum(std::span<const cplx> values, exec policy);

} // namespace imkit::kernels

#endif
