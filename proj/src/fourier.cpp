#include "hamspec/fourier.hpp"

#include "hamspec/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hamspec {

namespace {

/// Powers w^0 .. w^(q-1) of the primitive q-th root of unity exp(2*pi*i/q).
std::vector<std::complex<double>> root_powers(int q) {
    std::vector<std::complex<double>> w(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) {
        const double angle = 2.0 * std::numbers::pi * j / q;
        w[static_cast<std::size_t>(j)] = {std::cos(angle), std::sin(angle)};
    }
    return w;
}

/// One q-point DFT pass over every slice along the given axis. The kernel
/// is w^(sign * s * t); summation order over s is fixed.
void axis_pass(std::vector<std::complex<double>>& data, const DomainParams& params,
               int axis, int sign) {
    const Index size = static_cast<Index>(data.size());
    const auto w = root_powers(params.q);
    const int q = params.q;
    Index stride = 1;
    for (int i = params.n - 1; i > axis; --i) stride *= q;
    const Index block = stride * q;

    std::vector<std::complex<double>> in(static_cast<std::size_t>(q));
    std::vector<std::complex<double>> out(static_cast<std::size_t>(q));
    for (Index base = 0; base < size; base += block) {
        for (Index off = 0; off < stride; ++off) {
            for (int s = 0; s < q; ++s)
                in[static_cast<std::size_t>(s)] =
                    data[static_cast<std::size_t>(base + off + s * stride)];
            for (int t = 0; t < q; ++t) {
                std::complex<double> acc{0.0, 0.0};
                for (int s = 0; s < q; ++s) {
                    int e = (s * t) % q;
                    if (sign < 0 && e != 0) e = q - e;
                    acc += in[static_cast<std::size_t>(s)] * w[static_cast<std::size_t>(e)];
                }
                out[static_cast<std::size_t>(t)] = acc;
            }
            for (int t = 0; t < q; ++t)
                data[static_cast<std::size_t>(base + off + t * stride)] =
                    out[static_cast<std::size_t>(t)];
        }
    }
}

} // namespace

std::complex<double> char_value(const DomainParams& params, const Point& u, const Point& x) {
    const int e = dot_mod_q(params, u, x);
    const double angle = 2.0 * std::numbers::pi * e / params.q;
    return {std::cos(angle), std::sin(angle)};
}

FunctionTable character_table(const DomainParams& params, const Point& u) {
    validate_point(params, u);
    const Index size = params.size();
    const auto w = root_powers(params.q);
    std::vector<std::complex<double>> values(static_cast<std::size_t>(size));
    for (Index x = 0; x < size; ++x) {
        Index rest = x;
        long long dot = 0;
        for (int i = params.n - 1; i >= 0; --i) {
            dot += static_cast<long long>(u.coords[static_cast<std::size_t>(i)]) *
                   static_cast<long long>(rest % params.q);
            rest /= params.q;
        }
        values[static_cast<std::size_t>(x)] = w[static_cast<std::size_t>(dot % params.q)];
    }
    return FunctionTable(params, ValueMode::Complex, std::move(values));
}

std::complex<double> inner_product(const FunctionTable& f, const FunctionTable& g) {
    if (!(f.params() == g.params()))
        throw std::invalid_argument("inner_product: mismatched domains");
    std::complex<double> acc{0.0, 0.0};
    const Index size = f.size();
    for (Index i = 0; i < size; ++i) acc += f.value(i) * std::conj(g.value(i));
    return acc / static_cast<double>(size);
}

SpectrumTable transform(const FunctionTable& f, double zero_tolerance) {
    if (zero_tolerance < 0)
        throw std::invalid_argument("transform: zero_tolerance must be nonnegative");
    const DomainParams params = f.params();
    std::vector<std::complex<double>> coeffs = f.values();
    for (int axis = 0; axis < params.n; ++axis) axis_pass(coeffs, params, axis, -1);
    const double scale = 1.0 / static_cast<double>(params.size());
    double coeff_energy = 0.0;
    for (auto& c : coeffs) {
        c *= scale;
        coeff_energy += std::norm(c);
    }
    if (zero_tolerance > 0) {
        // Parseval guard: sum |fhat|^2 must match <f,f> from the source table.
        double table_energy = 0.0;
        for (Index i = 0; i < f.size(); ++i) table_energy += std::norm(f.value(i));
        table_energy *= scale;
        if (std::abs(coeff_energy - table_energy) > 10.0 * zero_tolerance)
            throw std::runtime_error("transform: Parseval identity violated beyond tolerance");
    }
    return SpectrumTable{params, std::move(coeffs), zero_tolerance};
}

FunctionTable inverse_transform(const SpectrumTable& s) {
    if (static_cast<Index>(s.coeffs.size()) != s.params.size())
        throw std::invalid_argument("inverse_transform: coefficient length mismatch");
    std::vector<std::complex<double>> values = s.coeffs;
    for (int axis = 0; axis < s.params.n; ++axis) axis_pass(values, s.params, axis, +1);
    return FunctionTable(s.params, ValueMode::Complex, std::move(values));
}

namespace {

SpectrumReport report_from_support(std::set<int> support) {
    SpectrumReport report;
    report.weight_support = std::move(support);
    if (!report.weight_support.empty()) {
        report.degree = *report.weight_support.rbegin();
        report.max_weight = report.degree;
        auto it = report.weight_support.begin();
        if (*it == 0) ++it;
        if (it != report.weight_support.end()) report.min_nonzero_weight = *it;
    }
    return report;
}

} // namespace

SpectrumReport spectrum_report(const SpectrumTable& s) {
    std::set<int> support;
    const Index size = s.params.size();
    for (Index u = 0; u < size; ++u) {
        if (std::abs(s.coeffs[static_cast<std::size_t>(u)]) > s.zero_tolerance)
            support.insert(hamming_weight_of_index(s.params, u));
    }
    return report_from_support(std::move(support));
}

SpectrumReport exact_spectrum_report(const FunctionTable& f) {
    if (!f.integer_valued())
        throw std::invalid_argument("exact_spectrum_report requires an integer-valued table");
    const DomainParams params = f.params();
    const CycloReducer reducer(params.q);
    const Index size = params.size();
    std::set<int> support;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(params.q));
    for (Index u = 0; u < size; ++u) {
        const int w = hamming_weight_of_index(params, u);
        if (support.count(w)) continue;
        std::fill(counts.begin(), counts.end(), 0);
        const Point up = index_to_point(params, u);
        for (Index x = 0; x < size; ++x) {
            Index rest = x;
            long long dot = 0;
            for (int i = params.n - 1; i >= 0; --i) {
                dot += static_cast<long long>(up.coords[static_cast<std::size_t>(i)]) *
                       static_cast<long long>(rest % params.q);
                rest /= params.q;
            }
            const int e = static_cast<int>((params.q - dot % params.q) % params.q);
            counts[static_cast<std::size_t>(e)] += f.int_value(x);
        }
        if (!reducer.is_zero(counts)) support.insert(w);
    }
    return report_from_support(std::move(support));
}

SpectrumTable project_weights(const SpectrumTable& s, int k, int m) {
    if (k < 0 || k > m || m > s.params.n)
        throw std::invalid_argument("project_weights: window must satisfy 0 <= k <= m <= n");
    SpectrumTable out = s;
    const Index size = s.params.size();
    for (Index u = 0; u < size; ++u) {
        const int w = hamming_weight_of_index(s.params, u);
        if (w < k || w > m) out.coeffs[static_cast<std::size_t>(u)] = {0.0, 0.0};
    }
    return out;
}

FunctionTable adjacency_apply(const FunctionTable& f) {
    const DomainParams params = f.params();
    const Index size = params.size();
    std::vector<std::complex<double>> out(static_cast<std::size_t>(size), {0.0, 0.0});
    for (Index x = 0; x < size; ++x) {
        std::complex<double> acc{0.0, 0.0};
        Index stride = size / params.q;
        Index rest = x;
        for (int i = 0; i < params.n; ++i) {
            const int digit = static_cast<int>(rest / stride);
            const Index base = x - static_cast<Index>(digit) * stride;
            for (int s = 0; s < params.q; ++s) {
                if (s == digit) continue;
                acc += f.value(base + static_cast<Index>(s) * stride);
            }
            rest -= static_cast<Index>(digit) * stride;
            stride /= params.q;
        }
        out[static_cast<std::size_t>(x)] = acc;
    }
    return FunctionTable(params, ValueMode::Complex, std::move(out));
}

long long lambda_k(int n, int q, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("lambda_k: k must lie in [0, n]");
    if (q < 2) throw std::invalid_argument("lambda_k: q must be >= 2");
    return static_cast<long long>(n) * (q - 1) - static_cast<long long>(q) * k;
}

bool exact_coefficient_is_zero(const FunctionTable& f, const Point& u) {
    if (!f.integer_valued())
        throw std::invalid_argument("exact_coefficient_is_zero requires an integer-valued table");
    const DomainParams params = f.params();
    validate_point(params, u);
    CyclotomicInt acc = CyclotomicInt::zero(params.q);
    const Index size = params.size();
    for (Index x = 0; x < size; ++x) {
        Index rest = x;
        long long dot = 0;
        for (int i = params.n - 1; i >= 0; --i) {
            dot += static_cast<long long>(u.coords[static_cast<std::size_t>(i)]) *
                   static_cast<long long>(rest % params.q);
            rest /= params.q;
        }
        const int e = static_cast<int>((params.q - dot % params.q) % params.q);
        acc.counts[static_cast<std::size_t>(e)] += f.int_value(x);
    }
    return acc.is_zero();
}

double parseval_check(const FunctionTable& f) {
    if (f.mode() != ValueMode::PM1)
        throw std::invalid_argument("parseval_check requires a pm1 table");
    const SpectrumTable s = transform(f);
    double acc = 0.0;
    for (const auto& c : s.coeffs) acc += std::norm(c);
    return acc;
}

} // namespace hamspec
