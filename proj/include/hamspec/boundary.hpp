#pragma once

#include "hamspec/domain.hpp"
#include "hamspec/fourier.hpp"

#include <vector>

namespace hamspec {

/// Partition of the alphabet at one coordinate into classes whose slices
/// agree: a and b share a class exactly when the restriction difference at
/// that coordinate vanishes identically. The coordinate is relevant iff
/// there are at least two classes.
struct CoordinateClasses {
    int coord = 1; // 1-based
    std::vector<std::vector<int>> classes; // each sorted; ordered by smallest symbol
    std::vector<int> class_sizes;

    int t() const { return static_cast<int>(classes.size()); }
    bool relevant() const { return t() >= 2; }

    /// Number of unordered symbol pairs taken from different classes.
    long long cross_pairs() const;
};

/// Indices where the table is nonzero; tolerance applies to complex tables
/// only, integer modes compare exactly.
std::vector<Index> support(const FunctionTable& f, double tol = kDefaultZeroTolerance);
long long support_size(const FunctionTable& f, double tol = kDefaultZeroTolerance);

/// The difference of the two slices x_coord = a and x_coord = b, as a table
/// over Z_q^(n-1) in the induced mixed-radix order (coordinate deleted).
/// coord is 1-based; requires a != b.
FunctionTable restriction(const FunctionTable& f, int coord, int a, int b);

/// Number of Hamming-graph edges {x,y} with f(x) != f(y).
long long nu(const FunctionTable& f, double tol = kDefaultZeroTolerance);

/// Number of boundary edges in direction coord between symbols a and b;
/// equals the support size of the corresponding restriction.
long long nu_iab(const FunctionTable& f, int coord, int a, int b,
                 double tol = kDefaultZeroTolerance);

/// (q^(n+1)/4) * sum_u |u| |fhat(u)|^2; agrees with nu for pm1 tables.
double nu_via_fourier(const FunctionTable& f);

/// 1-based coordinates with at least one non-vanishing restriction.
std::vector<int> relevant_indices(const FunctionTable& f, double tol = kDefaultZeroTolerance);

CoordinateClasses coordinate_classes(const FunctionTable& f, int coord,
                                     double tol = kDefaultZeroTolerance);

} // namespace hamspec
