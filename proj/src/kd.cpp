#include "imkit/kd.hpp"

#include <cmath>

#include "imkit/kernels.hpp"

namespace imkit {

namespace {

// rho expressed in basis a: R_ij = <a_i|rho|a_j>.
ComplexMatrix rho_in_basis(const DensityMatrix& rho, const OrthonormalBasis& a) {
    return a.matrix().adjoint() * rho.matrix() * a.matrix();
}

} // namespace

KDTensor kd(const DensityMatrix& rho, const OrthonormalBasis& basis_a,
            const OrthonormalBasis& basis_b, const Tolerances& tol, exec policy) {
    const std::size_t d = rho.dim();
    if (basis_a.dim() != d) throw DimensionMismatch(d, basis_a.dim());
    if (basis_b.dim() != d) throw DimensionMismatch(d, basis_b.dim());

    const ComplexMatrix o = overlap_matrix(basis_a, basis_b);       // <a_i|b_k>
    const ComplexMatrix rb = basis_a.matrix().adjoint() * rho.matrix() * basis_b.matrix();
    // Q_ik = conj(O_ik) * <a_i|rho|b_k>
    std::vector<cplx> q(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) q[i * d + k] = std::conj(o(i, k)) * rb(i, k);

    cplx total{0.0, 0.0};
    for (const cplx& v : q) total += v;

    // Marginal consistency against the Born probabilities of the generating state.
    const ComplexMatrix ra = rho_in_basis(rho, basis_a);
    const ComplexMatrix rbb = basis_b.matrix().adjoint() * rho.matrix() * basis_b.matrix();
    double marg = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        cplx row{0.0, 0.0};
        for (std::size_t k = 0; k < d; ++k) row += q[i * d + k];
        marg = std::max(marg, std::abs(row - ra(i, i)));
    }
    for (std::size_t k = 0; k < d; ++k) {
        cplx col{0.0, 0.0};
        for (std::size_t i = 0; i < d; ++i) col += q[i * d + k];
        marg = std::max(marg, std::abs(col - rbb(k, k)));
    }
    (void)policy;

    KDTensor out{d, std::move(q), basis_a, basis_b, std::abs(total - cplx{1.0, 0.0}), marg};
    if (out.normalization_residual > tol.eps || out.marginal_residual > tol.eps)
        throw Error("KDTensor consistency violated: normalization residual " +
                    std::to_string(out.normalization_residual) + ", marginal residual " +
                    std::to_string(out.marginal_residual));
    return out;
}

ExtendedKDTensor extended_kd(const DensityMatrix& rho, const OrthonormalBasis& basis_a,
                             const OrthonormalBasis& basis_b, const Tolerances& tol,
                             exec policy) {
    const std::size_t d = rho.dim();
    if (basis_a.dim() != d) throw DimensionMismatch(d, basis_a.dim());
    if (basis_b.dim() != d) throw DimensionMismatch(d, basis_b.dim());

    const ComplexMatrix o = overlap_matrix(basis_a, basis_b);
    const ComplexMatrix ra = rho_in_basis(rho, basis_a);
    std::vector<cplx> q = kernels::ext_kd_values(o.entries(), ra.entries(), d, policy);

    cplx total{0.0, 0.0};
    for (const cplx& v : q) total += v;
    const double norm_res = std::abs(total - cplx{1.0, 0.0});
    if (norm_res > tol.eps)
        throw Error("ExtendedKDTensor normalization residual " + std::to_string(norm_res));

    const MubCheck mc = validate_mub(basis_a, basis_b, tol.eps);
    return ExtendedKDTensor{d,       std::move(q),        basis_a, basis_b,
                            mc.unbiased, mc.worst_deviation, norm_res};
}

std::vector<cplx> extended_kd_general(const DensityMatrix& rho,
                                      const std::vector<OrthonormalBasis>& bases) {
    if (bases.size() < 2) throw Error("extended_kd_general: need at least two bases");
    const std::size_t d = rho.dim();
    for (const auto& b : bases)
        if (b.dim() != d) throw DimensionMismatch(d, b.dim());
    const std::size_t l = bases.size();

    std::size_t count = 1;
    for (std::size_t r = 0; r < l; ++r) count *= d;

    std::vector<cplx> out(count);
    std::vector<std::size_t> idx(l, 0);
    for (std::size_t flat = 0; flat < count; ++flat) {
        // Decode lexicographic (i1, ..., il): i1 is the most significant digit.
        std::size_t rem = flat;
        for (std::size_t r = l; r-- > 0;) {
            idx[r] = rem % d;
            rem /= d;
        }
        // P^(l)...P^(1) collapses to (prod_r <v_{r+1}|v_r>) |v_l><v_1| with v_r
        // the idx[r]-th vector of basis r, so the trace against rho is the
        // overlap chain times <v_1|rho|v_l>.
        cplx chain{1.0, 0.0};
        for (std::size_t r = 0; r + 1 < l; ++r) {
            cplx ov{0.0, 0.0};
            for (std::size_t m = 0; m < d; ++m)
                ov += std::conj(bases[r + 1].component(m, idx[r + 1])) * bases[r].component(m, idx[r]);
            chain *= ov;
        }
        cplx closing{0.0, 0.0};
        for (std::size_t m = 0; m < d; ++m) {
            cplx rv{0.0, 0.0};
            for (std::size_t n = 0; n < d; ++n) rv += rho(m, n) * bases[l - 1].component(n, idx[l - 1]);
            closing += std::conj(bases[0].component(m, idx[0])) * rv;
        }
        out[flat] = chain * closing;
    }
    return out;
}

double nonpositivity(const ExtendedKDTensor& q, exec policy) {
    return kernels::abs_sum(q.values, policy) - 1.0;
}

DensityMatrix reconstruct(const ExtendedKDTensor& q, const Tolerances& tol) {
    const std::size_t d = q.dim;
    const ComplexMatrix o = overlap_matrix(q.basis_a, q.basis_b); // <a_i|b_k>
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            if (std::abs(o(i, k)) < 1e-14) throw ZeroOverlap(i, k);

    // sum over j first: S_ik = sum_j Q*_ijk, then rho += S_ik |a_i><b_k| / <b_k|a_i>.
    ComplexMatrix acc(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            cplx s{0.0, 0.0};
            for (std::size_t j = 0; j < d; ++j) s += q(i, j, k);
            const cplx denom = std::conj(o(i, k)); // <b_k|a_i>
            const cplx w = s / denom;
            for (std::size_t m = 0; m < d; ++m)
                for (std::size_t n = 0; n < d; ++n)
                    acc(m, n) += w * q.basis_a.component(m, i) * std::conj(q.basis_b.component(n, k));
        }
    return make_density(acc, tol);
}

} // namespace imkit
