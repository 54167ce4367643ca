#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace entrobox {

/// Exponent vector of a monomial z^a = z_1^{a_1} ... z_N^{a_N}.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<std::uint32_t> exps) : exp_(std::move(exps)) {}
    static MultiIndex zero(std::size_t nvars) {
        return MultiIndex(std::vector<std::uint32_t>(nvars, 0));
    }
    static MultiIndex unit(std::size_t nvars, std::size_t j) {
        MultiIndex m = zero(nvars);
        m.exp_[j] = 1;
        return m;
    }

    std::size_t nvars() const { return exp_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exp_[i]; }

    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (std::uint32_t e : exp_) d += e;
        return d;
    }

    MultiIndex plus(const MultiIndex& o) const {
        if (o.nvars() != nvars()) throw std::invalid_argument("MultiIndex: nvars mismatch");
        MultiIndex r = *this;
        for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] += o.exp_[i];
        return r;
    }

    /// Componentwise difference, empty when any exponent would go negative.
    std::optional<MultiIndex> minus(const MultiIndex& o) const {
        if (o.nvars() != nvars()) throw std::invalid_argument("MultiIndex: nvars mismatch");
        MultiIndex r = *this;
        for (std::size_t i = 0; i < exp_.size(); ++i) {
            if (o.exp_[i] > r.exp_[i]) return std::nullopt;
            r.exp_[i] -= o.exp_[i];
        }
        return r;
    }

    MultiIndex permuted(const std::vector<std::size_t>& var_of_slot) const {
        MultiIndex r = zero(nvars());
        for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = exp_[var_of_slot[i]];
        return r;
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<std::uint32_t> exp_;
};

/// Monomial order with z_1 < z_2 < ... < z_N: compare exponents from the last
/// variable down, so z^a precedes z^b exactly when at the highest variable
/// where they differ a has the smaller exponent.
inline bool monomial_less(const MultiIndex& a, const MultiIndex& b) {
    std::size_t n = a.nvars();
    for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

struct MonomialLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return monomial_less(a, b);
    }
};

/// All multi-indices with |a| = degree over nvars variables, sorted by
/// monomial_less. There are C(nvars+degree-1, degree) of them.
std::vector<MultiIndex> enumerate_monomials(std::size_t nvars, std::uint32_t degree);

/// Exact binomial coefficient (throws on overflow of 64 bits).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

} // namespace entrobox
