#pragma once

#include "hamspec/domain.hpp"

#include <complex>
#include <optional>
#include <set>
#include <vector>

namespace hamspec {

inline constexpr double kDefaultZeroTolerance = 1e-9;

/// Fourier coefficients of a function over Z_q^n, indexed like the source
/// table (frequency vector u in mixed-radix order).
struct SpectrumTable {
    DomainParams params;
    std::vector<std::complex<double>> coeffs;
    double zero_tolerance = kDefaultZeroTolerance;
};

/// Weight-support view of a spectrum: which Hamming weights |u| carry a
/// nonzero coefficient. degree is the largest such weight (the table's
/// degree d), min_nonzero_weight the smallest nonzero one (d').
struct SpectrumReport {
    std::set<int> weight_support;
    std::optional<int> degree;
    std::optional<int> min_nonzero_weight;
    std::optional<int> max_weight;
};

/// chi_u(x) = w^<u,x> with w = exp(2*pi*i/q).
std::complex<double> char_value(const DomainParams& params, const Point& u, const Point& x);

/// The table of chi_u over the whole domain.
FunctionTable character_table(const DomainParams& params, const Point& u);

/// Normalized inner product <f,g> = q^-n sum_x f(x) conj(g(x)).
std::complex<double> inner_product(const FunctionTable& f, const FunctionTable& g);

/// Forward transform: fhat(u) = q^-n sum_x f(x) conj(chi_u(x)), computed by
/// axis-by-axis q-point DFT passes with a fixed summation order.
SpectrumTable transform(const FunctionTable& f, double zero_tolerance = kDefaultZeroTolerance);

/// f(x) = sum_u fhat(u) chi_u(x). Always returns a complex-mode table.
FunctionTable inverse_transform(const SpectrumTable& s);

SpectrumReport spectrum_report(const SpectrumTable& s);

/// Exact weight-support of an integer-valued table, using cyclotomic
/// zero-tests instead of a tolerance.
SpectrumReport exact_spectrum_report(const FunctionTable& f);

/// Zeroes every coefficient with |u| outside [k, m].
SpectrumTable project_weights(const SpectrumTable& s, int k, int m);

/// (Af)(x) = sum over neighbors y of f(y); characters are eigenfunctions
/// with eigenvalue lambda_{|u|}.
FunctionTable adjacency_apply(const FunctionTable& f);

/// Eigenvalue of H(n,q) on the weight-k eigenspace: n(q-1) - q*k.
long long lambda_k(int n, int q, int k);

/// True iff fhat(u) == 0 exactly, for integer-valued tables. Decides whether
/// q^n * fhat(u) = sum_j counts_j w^j vanishes by divisibility of the count
/// polynomial by the q-th cyclotomic polynomial.
bool exact_coefficient_is_zero(const FunctionTable& f, const Point& u);

/// sum_u |fhat(u)|^2 for a pm1 table; equals 1 up to roundoff.
double parseval_check(const FunctionTable& f);

} // namespace hamspec
