#pragma once

#include <cstdint>
#include <vector>

namespace hamspec {

/// Coefficients of the q-th cyclotomic polynomial, ascending degree.
/// Computed by exact integer polynomial division of x^q - 1 by the product
/// of the cyclotomic polynomials of the proper divisors of q.
std::vector<std::int64_t> cyclotomic_polynomial(int q);

/// Reduction tables modulo the q-th cyclotomic polynomial. An integer
/// combination sum_j c_j w^j of powers of a primitive q-th root of unity w
/// is zero exactly when the polynomial sum_j c_j x^j is divisible by the
/// cyclotomic polynomial; divisibility is decided by the linear map
/// x^j -> (x^j mod Phi_q), precomputed here for 0 <= j < q.
class CycloReducer {
public:
    explicit CycloReducer(int q);

    int q() const { return q_; }
    int degree() const { return degree_; } // deg Phi_q = phi(q)
    const std::vector<std::int64_t>& phi() const { return phi_; }

    /// Coefficients of x^j reduced mod Phi_q; length degree().
    const std::vector<std::int64_t>& power_row(int j) const;

    /// True iff sum_j counts[j] w^j == 0 exactly. counts has length q.
    bool is_zero(const std::vector<std::int64_t>& counts) const;
    bool is_zero(const std::int64_t* counts) const;

private:
    int q_;
    int degree_;
    std::vector<std::int64_t> phi_;
    std::vector<std::vector<std::int64_t>> rows_;
};

/// Exact representative of an element of Z[w], w a primitive q-th root of
/// unity, as the integer coefficient vector of 1, w, ..., w^(q-1).
struct CyclotomicInt {
    int q = 2;
    std::vector<std::int64_t> counts;

    static CyclotomicInt zero(int q);

    bool is_zero() const;
};

} // namespace hamspec
