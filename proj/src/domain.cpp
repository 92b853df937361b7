#include "hamspec/domain.hpp"

#include <stdexcept>
#include <string>

namespace hamspec {

namespace {

Index checked_size(int n, int q) {
    if (n < 1) throw std::invalid_argument("DomainParams: n must be >= 1");
    if (q < 2) throw std::invalid_argument("DomainParams: q must be >= 2");
    Index size = 1;
    for (int i = 0; i < n; ++i) {
        if (size > kIndexCapacity / q)
            throw std::invalid_argument("DomainParams: q^n exceeds index capacity");
        size *= q;
    }
    return size;
}

} // namespace

Index DomainParams::size() const { return checked_size(n, q); }

DomainParams DomainParams::checked(int n, int q) {
    checked_size(n, q);
    return DomainParams{n, q};
}

void validate_point(const DomainParams& params, const Point& p) {
    if (static_cast<int>(p.coords.size()) != params.n)
        throw std::invalid_argument("point has wrong number of coordinates");
    for (int c : p.coords)
        if (c < 0 || c >= params.q)
            throw std::invalid_argument("point coordinate out of range [0, q)");
}

Index point_to_index(const DomainParams& params, const Point& p) {
    validate_point(params, p);
    Index index = 0;
    for (int c : p.coords) index = index * params.q + c;
    return index;
}

Point index_to_point(const DomainParams& params, Index index) {
    if (index < 0 || index >= params.size())
        throw std::out_of_range("index out of range for domain");
    Point p;
    p.coords.assign(static_cast<std::size_t>(params.n), 0);
    for (int i = params.n - 1; i >= 0; --i) {
        p.coords[static_cast<std::size_t>(i)] = static_cast<int>(index % params.q);
        index /= params.q;
    }
    return p;
}

int hamming_weight(const Point& p) {
    int w = 0;
    for (int c : p.coords)
        if (c != 0) ++w;
    return w;
}

int hamming_weight_of_index(const DomainParams& params, Index index) {
    int w = 0;
    for (int i = 0; i < params.n; ++i) {
        if (index % params.q != 0) ++w;
        index /= params.q;
    }
    return w;
}

int dot_mod_q(const DomainParams& params, const Point& u, const Point& x) {
    validate_point(params, u);
    validate_point(params, x);
    long long acc = 0;
    for (int i = 0; i < params.n; ++i) {
        acc += static_cast<long long>(u.coords[static_cast<std::size_t>(i)]) *
               x.coords[static_cast<std::size_t>(i)];
    }
    return static_cast<int>(acc % params.q);
}

std::vector<Point> neighbors(const DomainParams& params, const Point& p) {
    validate_point(params, p);
    std::vector<Point> result;
    result.reserve(static_cast<std::size_t>(params.n) * (params.q - 1));
    for (int i = 0; i < params.n; ++i) {
        for (int s = 0; s < params.q; ++s) {
            if (s == p.coords[static_cast<std::size_t>(i)]) continue;
            Point nb = p;
            nb.coords[static_cast<std::size_t>(i)] = s;
            result.push_back(std::move(nb));
        }
    }
    return result;
}

std::vector<Index> neighbor_indices(const DomainParams& params, Index index) {
    const Index size = params.size();
    if (index < 0 || index >= size) throw std::out_of_range("vertex index out of range");
    std::vector<Index> result;
    result.reserve(static_cast<std::size_t>(params.n) * (params.q - 1));
    Index stride = size / params.q; // place value of coordinate 1
    Index rest = index;
    for (int i = 0; i < params.n; ++i) {
        const int digit = static_cast<int>(rest / stride);
        const Index base = index - static_cast<Index>(digit) * stride;
        for (int s = 0; s < params.q; ++s) {
            if (s == digit) continue;
            result.push_back(base + static_cast<Index>(s) * stride);
        }
        rest -= static_cast<Index>(digit) * stride;
        stride /= params.q;
    }
    return result;
}

void for_each_edge(const DomainParams& params,
                   const std::function<void(Index, Index)>& fn) {
    const Index size = params.size();
    for (Index x = 0; x < size; ++x) {
        Index stride = size / params.q;
        Index rest = x;
        for (int i = 0; i < params.n; ++i) {
            const int digit = static_cast<int>(rest / stride);
            const Index base = x - static_cast<Index>(digit) * stride;
            for (int s = digit + 1; s < params.q; ++s)
                fn(x, base + static_cast<Index>(s) * stride);
            rest -= static_cast<Index>(digit) * stride;
            stride /= params.q;
        }
    }
}

long long edge_count(const DomainParams& params) {
    return params.graph_degree() * params.size() / 2;
}

const char* value_mode_name(ValueMode mode) {
    switch (mode) {
        case ValueMode::PM1: return "pm1";
        case ValueMode::ZeroOne: return "01";
        case ValueMode::Integer: return "int";
        case ValueMode::Complex: return "cplx";
    }
    return "?";
}

ValueMode value_mode_from_name(const std::string& name) {
    if (name == "pm1") return ValueMode::PM1;
    if (name == "01") return ValueMode::ZeroOne;
    if (name == "int") return ValueMode::Integer;
    if (name == "cplx") return ValueMode::Complex;
    throw std::invalid_argument("unknown value mode: " + name);
}

namespace {

void validate_int_values(ValueMode mode, const std::vector<std::int64_t>& values) {
    switch (mode) {
        case ValueMode::PM1:
            for (std::int64_t v : values)
                if (v != 1 && v != -1)
                    throw std::invalid_argument("pm1 table value not in {-1, +1}");
            break;
        case ValueMode::ZeroOne:
            for (std::int64_t v : values)
                if (v != 0 && v != 1)
                    throw std::invalid_argument("zero-one table value not in {0, 1}");
            break;
        default:
            break;
    }
}

} // namespace

FunctionTable::FunctionTable(DomainParams params, ValueMode mode,
                             std::vector<std::complex<double>> values)
    : params_(params), mode_(mode), values_(std::move(values)) {
    if (mode != ValueMode::Complex)
        throw std::invalid_argument("complex value vector requires cplx mode");
    if (static_cast<Index>(values_.size()) != params_.size())
        throw std::invalid_argument("table length must equal q^n");
}

FunctionTable::FunctionTable(DomainParams params, ValueMode mode,
                             std::vector<std::int64_t> values)
    : params_(params), mode_(mode), int_values_(std::move(values)) {
    if (mode == ValueMode::Complex)
        throw std::invalid_argument("cplx mode requires complex values");
    if (static_cast<Index>(int_values_.size()) != params_.size())
        throw std::invalid_argument("table length must equal q^n");
    validate_int_values(mode, int_values_);
    values_.reserve(int_values_.size());
    for (std::int64_t v : int_values_) values_.emplace_back(static_cast<double>(v), 0.0);
}

FunctionTable FunctionTable::constant(DomainParams params, ValueMode mode,
                                      std::int64_t value) {
    if (mode == ValueMode::Complex) {
        return FunctionTable(params, mode,
                             std::vector<std::complex<double>>(
                                 static_cast<std::size_t>(params.size()),
                                 {static_cast<double>(value), 0.0}));
    }
    return FunctionTable(params, mode,
                         std::vector<std::int64_t>(static_cast<std::size_t>(params.size()), value));
}

std::int64_t FunctionTable::int_value(Index i) const {
    if (mode_ == ValueMode::Complex)
        throw std::logic_error("int_value on a complex table");
    return int_values_[static_cast<std::size_t>(i)];
}

const std::vector<std::int64_t>& FunctionTable::int_values() const {
    if (mode_ == ValueMode::Complex)
        throw std::logic_error("int_values on a complex table");
    return int_values_;
}

FunctionTable FunctionTable::to_pm1() const {
    if (mode_ == ValueMode::PM1) return *this;
    if (mode_ != ValueMode::ZeroOne)
        throw std::invalid_argument("to_pm1 requires a Boolean (pm1 or 01) table");
    std::vector<std::int64_t> values;
    values.reserve(int_values_.size());
    for (std::int64_t v : int_values_) values.push_back(1 - 2 * v);
    return FunctionTable(params_, ValueMode::PM1, std::move(values));
}

} // namespace hamspec
