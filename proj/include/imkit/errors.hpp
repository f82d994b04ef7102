#ifndef IMKIT_ERRORS_HPP
#define IMKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace imkit {

/// Base class for all library errors. Every concrete error names the violated
/// invariant and carries the measured residual where one exists.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotHermitian : public Error {
public:
    double residual;
    explicit NotHermitian(double r)
        : Error("NotHermitian: max |rho_mn - conj(rho_nm)| = " + std::to_string(r)),
          residual(r) {}
};

class NotUnitTrace : public Error {
public:
    double residual;
    explicit NotUnitTrace(double r)
        : Error("NotUnitTrace: |Tr(rho) - 1| = " + std::to_string(r)), residual(r) {}
};

class NotPSD : public Error {
public:
    double min_eigenvalue;
    explicit NotPSD(double lmin)
        : Error("NotPSD: min eigenvalue = " + std::to_string(lmin)), min_eigenvalue(lmin) {}
};

class NotNormalized : public Error {
public:
    double norm;
    explicit NotNormalized(double n)
        : Error("NotNormalized: |psi| = " + std::to_string(n)), norm(n) {}
};

class NotOrthonormal : public Error {
public:
    double residual;
    explicit NotOrthonormal(double r)
        : Error("NotOrthonormal: max |<v_i|v_j> - delta_ij| = " + std::to_string(r)),
          residual(r) {}
};

class DimensionTooSmall : public Error {
public:
    std::size_t dim;
    explicit DimensionTooSmall(std::size_t d)
        : Error("DimensionTooSmall: d = " + std::to_string(d) + ", need d >= 2"), dim(d) {}
};

class DimensionMismatch : public Error {
public:
    std::size_t lhs, rhs;
    DimensionMismatch(std::size_t a, std::size_t b)
        : Error("DimensionMismatch: " + std::to_string(a) + " vs " + std::to_string(b)),
          lhs(a), rhs(b) {}
};

class ZeroOverlap : public Error {
public:
    std::size_t i, k;
    ZeroOverlap(std::size_t i_, std::size_t k_)
        : Error("ZeroOverlap: <b_" + std::to_string(k_) + "|a_" + std::to_string(i_) +
                "> vanishes; reconstruction denominator undefined"),
          i(i_), k(k_) {}
};

class NonRealMoment : public Error {
public:
    std::size_t order;
    double imag_residual;
    NonRealMoment(std::size_t n, double im)
        : Error("NonRealMoment: |Im r_" + std::to_string(n) + "| = " + std::to_string(im) +
                " exceeds the moment realness tolerance"),
          order(n), imag_residual(im) {}
};

class InsufficientMoments : public Error {
public:
    std::size_t have, need;
    InsufficientMoments(std::size_t h, std::size_t n)
        : Error("InsufficientMoments: have r_1..r_" + std::to_string(h) + ", need r_1..r_" +
                std::to_string(n)),
          have(h), need(n) {}
};

class NotUnitary : public Error {
public:
    double residual;
    explicit NotUnitary(double r)
        : Error("NotUnitary: ||U^dag U - I||_max = " + std::to_string(r)), residual(r) {}
};

class NotMUB : public Error {
public:
    double worst_deviation;
    explicit NotMUB(double w)
        : Error("NotMUB: worst | |<a_i|b_k>| - 1/sqrt(d) | = " + std::to_string(w)),
          worst_deviation(w) {}
};

class DegenerateContrast : public Error {
public:
    DegenerateContrast() : Error("DegenerateContrast: I_max + I_min below 1e-15") {}
};

class DenseLimitExceeded : public Error {
public:
    std::size_t requested, limit;
    DenseLimitExceeded(std::size_t req, std::size_t lim)
        : Error("DenseLimitExceeded: d^n = " + std::to_string(req) + " exceeds dense limit " +
                std::to_string(lim) + "; use the factorized moment contraction instead"),
          requested(req), limit(lim) {}
};

} // namespace imkit

#endif
