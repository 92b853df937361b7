#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace hamspec {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt int_pow(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1u;
    }
    return result;
}

/// Smallest k with 2^k >= q, by integer bit arithmetic only.
inline int ceil_log2(std::int64_t q) {
    if (q < 1) throw std::invalid_argument("ceil_log2: argument must be positive");
    int k = 0;
    while ((std::int64_t{1} << k) < q) ++k;
    return k;
}

inline double to_double(const BigRational& r) { return r.convert_to<double>(); }

/// Floor of a nonnegative rational.
inline BigInt floor_rational(const BigRational& r) {
    return numerator(r) / denominator(r);
}

} // namespace hamspec
