#include "hamspec/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hamspec {

namespace {

using Poly = std::vector<std::int64_t>; // ascending degree, highest coeff nonzero

// Exact division of a by monic b; throws if the remainder is nonzero.
Poly divide_exact(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw std::logic_error("cyclotomic division underflow");
    Poly quot(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const std::int64_t c = a[i];
        if (c == 0) continue;
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (std::int64_t c : a)
        if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
    return quot;
}

Poly cyclotomic_impl(int q, std::map<int, Poly>& memo) {
    auto it = memo.find(q);
    if (it != memo.end()) return it->second;
    // x^q - 1 divided by the cyclotomic polynomials of all proper divisors.
    Poly num(static_cast<std::size_t>(q) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(q)] = 1;
    for (int d = 1; d < q; ++d) {
        if (q % d != 0) continue;
        num = divide_exact(std::move(num), cyclotomic_impl(d, memo));
    }
    memo.emplace(q, num);
    return num;
}

} // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int q) {
    if (q < 1) throw std::invalid_argument("cyclotomic_polynomial: q must be >= 1");
    static std::map<int, Poly> memo;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    return cyclotomic_impl(q, memo);
}

CycloReducer::CycloReducer(int q) : q_(q) {
    if (q < 2) throw std::invalid_argument("CycloReducer: q must be >= 2");
    phi_ = cyclotomic_polynomial(q);
    degree_ = static_cast<int>(phi_.size()) - 1;
    rows_.resize(static_cast<std::size_t>(q));
    // x^j mod Phi_q, built incrementally: row(j+1) = shift(row(j)) reduced once.
    std::vector<std::int64_t> cur(static_cast<std::size_t>(degree_), 0);
    for (int j = 0; j < q; ++j) {
        if (j < degree_) {
            cur.assign(static_cast<std::size_t>(degree_), 0);
            cur[static_cast<std::size_t>(j)] = 1;
        } else {
            std::vector<std::int64_t> next(static_cast<std::size_t>(degree_), 0);
            const std::int64_t top = cur[static_cast<std::size_t>(degree_ - 1)];
            for (int i = degree_ - 1; i > 0; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
            next[0] = 0;
            if (top != 0) {
                // x^degree = -(phi_0 + phi_1 x + ... + phi_{deg-1} x^{deg-1})
                for (int i = 0; i < degree_; ++i)
                    next[static_cast<std::size_t>(i)] -= top * phi_[static_cast<std::size_t>(i)];
            }
            cur = std::move(next);
        }
        rows_[static_cast<std::size_t>(j)] = cur;
    }
}

const std::vector<std::int64_t>& CycloReducer::power_row(int j) const {
    if (j < 0 || j >= q_) throw std::out_of_range("CycloReducer::power_row");
    return rows_[static_cast<std::size_t>(j)];
}

bool CycloReducer::is_zero(const std::int64_t* counts) const {
    for (int r = 0; r < degree_; ++r) {
        std::int64_t acc = 0;
        for (int j = 0; j < q_; ++j)
            acc += counts[j] * rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
        if (acc != 0) return false;
    }
    return true;
}

bool CycloReducer::is_zero(const std::vector<std::int64_t>& counts) const {
    if (static_cast<int>(counts.size()) != q_)
        throw std::invalid_argument("CycloReducer::is_zero: counts length must equal q");
    return is_zero(counts.data());
}

CyclotomicInt CyclotomicInt::zero(int q) {
    if (q < 2) throw std::invalid_argument("CyclotomicInt: q must be >= 2");
    return CyclotomicInt{q, std::vector<std::int64_t>(static_cast<std::size_t>(q), 0)};
}

bool CyclotomicInt::is_zero() const {
    CycloReducer reducer(q);
    return reducer.is_zero(counts);
}

} // namespace hamspec
