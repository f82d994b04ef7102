#ifndef IMKIT_TYPES_HPP
#define IMKIT_TYPES_HPP

#include <complex>
#include <cstdint>

namespace imkit {

using cplx = std::complex<double>;

/// Absolute tolerances used throughout the library. Defaults follow the
/// validation contracts of the state/basis constructors: eps for hermiticity,
/// trace and orthonormality residuals, eps_psd for the smallest eigenvalue,
/// eps_moment for the discarded imaginary part of a moment, eps_det for the
/// dead band around zero in Hankel determinant sign classification.
struct Tolerances {
    double eps = 1e-10;
    double eps_psd = 1e-9;
    double eps_moment = 1e-9;
    double eps_det = 1e-12;
};

/// Execution policy for the compute kernels. Both policies produce bitwise
/// identical results: parallel loops are either entrywise-independent or use
/// fixed-size block partial sums folded in index order.
enum class exec : std::uint8_t { serial, parallel };

} // namespace imkit

#endif
