#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace hamspec {

using Index = std::int64_t;

/// Hard cap on table length q^n.
inline constexpr Index kIndexCapacity = Index{1} << 31;

/// Parameters of the domain Z_q^n, i.e. the vertex set of the Hamming
/// graph H(n,q).
struct DomainParams {
    int n = 1; // number of coordinates
    int q = 2; // alphabet size

    /// q^n, validated against kIndexCapacity at construction.
    Index size() const;

    /// Vertex degree of H(n,q): n(q-1).
    long long graph_degree() const { return static_cast<long long>(n) * (q - 1); }

    /// Validates n >= 1, q >= 2 and q^n <= kIndexCapacity; throws
    /// std::invalid_argument otherwise.
    static DomainParams checked(int n, int q);

    friend bool operator==(const DomainParams&, const DomainParams&) = default;
};

/// A point of Z_q^n: n coordinates, each in [0, q).
struct Point {
    std::vector<int> coords;

    friend bool operator==(const Point&, const Point&) = default;
};

void validate_point(const DomainParams& params, const Point& p);

/// Mixed-radix index with coordinate 1 most significant:
/// index = sum_i coords[i] * q^(n-1-i). Bijective with index_to_point.
Index point_to_index(const DomainParams& params, const Point& p);
Point index_to_point(const DomainParams& params, Index index);

/// Number of nonzero coordinates.
int hamming_weight(const Point& p);
int hamming_weight_of_index(const DomainParams& params, Index index);

/// (u_1 x_1 + ... + u_n x_n) mod q.
int dot_mod_q(const DomainParams& params, const Point& u, const Point& x);

/// The n(q-1) points differing from p in exactly one coordinate, ordered by
/// coordinate index, then by replacement symbol.
std::vector<Point> neighbors(const DomainParams& params, const Point& p);
std::vector<Index> neighbor_indices(const DomainParams& params, Index index);

/// Visits every undirected edge {x,y} of H(n,q) exactly once, in a fixed
/// deterministic order: x ascending, differing coordinate ascending, larger
/// symbol ascending. The callback receives (x_index, y_index).
void for_each_edge(const DomainParams& params,
                   const std::function<void(Index, Index)>& fn);

/// n(q-1)q^n / 2.
long long edge_count(const DomainParams& params);

/// Value domain of a function table.
enum class ValueMode { PM1, ZeroOne, Integer, Complex };

const char* value_mode_name(ValueMode mode);
ValueMode value_mode_from_name(const std::string& name);

/// Dense table of values over Z_q^n in mixed-radix order. The numeric view
/// (complex) is always populated; integer modes additionally keep exact
/// integer values so that zero-tests and edge counts need no tolerance.
class FunctionTable {
public:
    FunctionTable(DomainParams params, ValueMode mode,
                  std::vector<std::complex<double>> values);
    FunctionTable(DomainParams params, ValueMode mode,
                  std::vector<std::int64_t> values);

    static FunctionTable constant(DomainParams params, ValueMode mode,
                                  std::int64_t value);

    const DomainParams& params() const { return params_; }
    ValueMode mode() const { return mode_; }
    Index size() const { return static_cast<Index>(values_.size()); }

    std::complex<double> value(Index i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<std::complex<double>>& values() const { return values_; }

    bool integer_valued() const { return mode_ != ValueMode::Complex; }
    std::int64_t int_value(Index i) const;
    const std::vector<std::int64_t>& int_values() const;

    /// Canonical Boolean form: zero-one tables map through f -> 1-2f,
    /// pm1 tables pass through. Other modes are rejected.
    FunctionTable to_pm1() const;

private:
    DomainParams params_;
    ValueMode mode_;
    std::vector<std::complex<double>> values_;
    std::vector<std::int64_t> int_values_; // empty for Complex mode
};

} // namespace hamspec
