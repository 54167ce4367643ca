#include "entrobox/depsys.hpp"

#include "entrobox/polyfit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace entrobox {

namespace {

std::vector<std::size_t> iota_vec(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

// Dense exact row echelon; returns rank. Rows are consumed one at a time, so
// callers can stream sparse rows through.
class ExactEchelon {
public:
    explicit ExactEchelon(std::size_t cols) : cols_(cols) {}

    std::size_t rank() const { return rows_.size(); }

    // Feeds one row; keeps it if independent of the current span.
    void feed(std::vector<ExactComplex> row) {
        for (;;) {
            std::size_t lead = cols_;
            for (std::size_t c = 0; c < cols_; ++c)
                if (!row[c].is_zero()) {
                    lead = c;
                    break;
                }
            if (lead == cols_) return;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                ExactComplex inv = row[lead].inverse();
                for (std::size_t c = lead; c < cols_; ++c) row[c] = row[c] * inv;
                pivots_[lead] = rows_.size();
                rows_.push_back(std::move(row));
                return;
            }
            const std::vector<ExactComplex>& base = rows_[it->second];
            ExactComplex factor = row[lead];
            for (std::size_t c = lead; c < cols_; ++c) row[c] = row[c] - factor * base[c];
        }
    }

private:
    std::size_t cols_;
    std::map<std::size_t, std::size_t> pivots_;
    std::vector<std::vector<ExactComplex>> rows_;
};

void validate_family(const std::vector<ExactPoly>& family) {
    if (family.empty()) throw std::invalid_argument("dependence system: empty family");
    const std::size_t n = family.front().nvars();
    const std::uint32_t m = family.front().degree();
    if (m < 1) throw std::invalid_argument("dependence system: degree must be >= 1");
    for (const auto& p : family)
        if (p.nvars() != n || p.degree() != m)
            throw std::invalid_argument("dependence system: family must share nvars and degree");
}

// Next k-combination of {0..n-1} in lexicographic order; false when done.
bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
    const std::size_t k = combo.size();
    for (std::size_t i = k; i-- > 0;) {
        if (combo[i] < n - k + i) {
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

DependenceOperators dependence_operators(const ExactPolyMatrix& jac) {
    const std::size_t r = jac.rows;
    const std::size_t n = jac.cols;
    if (r >= n)
        throw std::invalid_argument("dependence_operators: need more variables than rows");
    DependenceOperators ops;
    ops.Q = poly_minor(jac, iota_vec(r), iota_vec(r));
    ops.Qij.assign(r, std::vector<ExactPoly>());
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = r; j < n; ++j) {
            std::vector<std::size_t> cols;
            for (std::size_t c = 0; c < r; ++c)
                if (c != i) cols.push_back(c);
            cols.push_back(j);
            ExactPoly minor = poly_minor(jac, iota_vec(r), cols);
            // Cofactor sign (-1)^(r+1+i) for 1-based i = (-1)^(r+i) 0-based.
            if ((r + i) % 2 != 0) minor = minor.scaled(ExactComplex(-1L));
            ops.Qij[i].push_back(std::move(minor));
        }
    }
    return ops;
}

CoefficientSystem assemble_dependence_system(const std::vector<ExactPoly>& family) {
    validate_family(family);
    const std::size_t r = family.size();
    const std::size_t n = family.front().nvars();
    const std::uint32_t m = family.front().degree();
    if (r >= n)
        throw std::invalid_argument(
            "dependence system: family size must be smaller than the variable count");

    // Hunt a column subset with a symbolically nonzero r x r minor; permute it
    // to the front. No subset means the Jacobian has rank < r everywhere.
    ExactPolyMatrix jac0 = jacobian(family);
    std::vector<std::size_t> combo = iota_vec(r);
    std::vector<std::size_t> lead_cols;
    do {
        if (!poly_minor(jac0, iota_vec(r), combo).is_zero()) {
            lead_cols = combo;
            break;
        }
    } while (next_combination(combo, n));
    if (lead_cols.empty())
        throw std::runtime_error("dependence system: degenerate family (jacobian rank < r)");

    CoefficientSystem sys;
    sys.nvars = n;
    sys.r = r;
    sys.m = m;
    sys.var_permutation = lead_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (std::find(lead_cols.begin(), lead_cols.end(), c) == lead_cols.end())
            sys.var_permutation.push_back(c);
    for (const auto& p : family)
        sys.permuted_family.push_back(p.permuted_variables(sys.var_permutation));

    ExactPolyMatrix jac = jacobian(sys.permuted_family);
    DependenceOperators ops = dependence_operators(jac);

    sys.unknowns = enumerate_monomials(n, m);
    const std::uint32_t D = static_cast<std::uint32_t>(r) * (m - 1) + m - 1;
    sys.total_row_count =
        static_cast<std::uint64_t>(n - r) * binomial(n - 1 + D, D);

    struct RowKey {
        std::size_t j;
        MultiIndex delta;
        bool operator<(const RowKey& o) const {
            if (j != o.j) return j < o.j;
            return monomial_less(delta, o.delta);
        }
    };
    std::map<RowKey, std::map<std::size_t, ExactComplex>> buckets;

    for (std::size_t col = 0; col < sys.unknowns.size(); ++col) {
        const MultiIndex& gamma = sys.unknowns[col];
        for (std::size_t j = r; j < n; ++j) {
            if (gamma[j] > 0) {
                ExactComplex gj(static_cast<long>(gamma[j]));
                MultiIndex shifted = gamma;
                shifted[j] -= 1;
                for (const auto& [alpha, qa] : ops.Q.terms()) {
                    RowKey key{j, alpha.plus(shifted)};
                    auto& cell = buckets[key][col];
                    cell += gj * qa;
                }
            }
            for (std::size_t i = 0; i < r; ++i) {
                if (gamma[i] == 0) continue;
                ExactComplex gi(static_cast<long>(gamma[i]));
                MultiIndex shifted = gamma;
                shifted[i] -= 1;
                for (const auto& [beta, qb] : ops.Qij[i][j - r].terms()) {
                    RowKey key{j, beta.plus(shifted)};
                    auto& cell = buckets[key][col];
                    cell += gi * qb;
                }
            }
        }
    }

    for (auto& [key, cells] : buckets) {
        CoefficientSystem::Row row;
        row.j = key.j;
        row.delta = key.delta;
        for (auto& [col, val] : cells)
            if (!val.is_zero()) row.entries.emplace_back(col, std::move(val));
        if (!row.entries.empty()) sys.rows.push_back(std::move(row));
    }
    return sys;
}

std::size_t corank(const CoefficientSystem& system) {
    const std::size_t cols = system.column_count();
    if (static_cast<double>(system.rows.size()) * static_cast<double>(cols) > 2e8)
        throw std::invalid_argument("corank: system too large for exact elimination");
    ExactEchelon ech(cols);
    for (const auto& row : system.rows) {
        std::vector<ExactComplex> dense(cols);
        for (const auto& [col, val] : row.entries) dense[col] = val;
        ech.feed(std::move(dense));
    }
    const std::size_t result = cols - ech.rank();
    const std::uint64_t ceiling =
        binomial(system.m + system.r - 1, system.r - 1);
    if (result > ceiling)
        throw std::logic_error("corank: exceeds the proved monomial-count ceiling");
    return result;
}

bool satisfies_system(const CoefficientSystem& system, const ExactPoly& p) {
    if (p.nvars() != system.nvars || p.degree() != system.m)
        throw std::invalid_argument("satisfies_system: polynomial shape mismatch");
    std::vector<ExactComplex> vec(system.column_count());
    for (std::size_t c = 0; c < system.unknowns.size(); ++c)
        vec[c] = p.coefficient(system.unknowns[c]);
    for (const auto& row : system.rows) {
        ExactComplex acc;
        for (const auto& [col, val] : row.entries) acc += val * vec[col];
        if (!acc.is_zero()) return false;
    }
    return true;
}

ExactIndependence exact_linear_independence(const std::vector<ExactPoly>& family) {
    validate_family(family);
    const std::size_t n = family.front().nvars();
    const std::uint32_t m = family.front().degree();
    std::vector<MultiIndex> monos = enumerate_monomials(n, m);
    const std::size_t cols = monos.size();
    const std::size_t N = family.size();

    // Eliminate [A | I]; a zero A-part row exposes a vanishing combination.
    ExactIndependence out;
    std::vector<std::vector<ExactComplex>> work;
    for (std::size_t i = 0; i < N; ++i) {
        std::vector<ExactComplex> row(cols + N);
        for (std::size_t c = 0; c < cols; ++c) row[c] = family[i].coefficient(monos[c]);
        row[cols + i] = ExactComplex(1L);
        work.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < N; ++c) {
        std::size_t pivot = N;
        for (std::size_t i = rank; i < N; ++i)
            if (!work[i][c].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == N) continue;
        std::swap(work[rank], work[pivot]);
        ExactComplex inv = work[rank][c].inverse();
        for (std::size_t cc = 0; cc < cols + N; ++cc) work[rank][cc] = work[rank][cc] * inv;
        for (std::size_t i = 0; i < N; ++i) {
            if (i == rank || work[i][c].is_zero()) continue;
            ExactComplex f = work[i][c];
            for (std::size_t cc = 0; cc < cols + N; ++cc)
                work[i][cc] = work[i][cc] - f * work[rank][cc];
        }
        ++rank;
    }
    out.rank = rank;
    out.independent = rank == N;
    if (!out.independent) {
        // Any row with zero A-part carries the certificate in its I-part.
        for (std::size_t i = rank; i < N; ++i) {
            bool zero = true;
            for (std::size_t c = 0; c < cols; ++c)
                if (!work[i][c].is_zero()) {
                    zero = false;
                    break;
                }
            if (zero) {
                out.certificate.assign(work[i].begin() + static_cast<std::ptrdiff_t>(cols),
                                       work[i].end());
                break;
            }
        }
    }
    return out;
}

CorollaryReport corollary_check(const std::vector<ExactPoly>& family, std::size_t trials,
                                std::uint64_t seed, double tol) {
    validate_family(family);
    ExactIndependence indep = exact_linear_independence(family);
    if (!indep.independent) {
        std::ostringstream msg;
        msg << "corollary_check: family is linearly dependent (rank " << indep.rank << " of "
            << family.size() << ")";
        throw DependentFamilyError(msg.str(), indep.certificate);
    }

    CorollaryReport rep;
    rep.N = family.size();
    rep.m = family.front().degree();
    rep.rank = generic_rank(family, trials, seed, tol);
    rep.bound = std::pow(static_cast<double>(rep.N), 1.0 / static_cast<double>(rep.m)) -
                static_cast<double>(rep.m);
    rep.pass = static_cast<double>(rep.rank) >= rep.bound;

    if (rep.rank >= 1) {
        rep.monomial_count_bound = binomial(rep.m + rep.rank - 1, rep.rank - 1);
        rep.binom_variant_a = rep.m >= 2 ? binomial(rep.rank + rep.m - 2, rep.m - 2) : 0;
        rep.binom_variant_b = binomial(rep.rank + rep.m - 1, rep.m - 1);
        rep.chain_family_le_monomials = rep.N <= rep.monomial_count_bound;
        double power = std::pow(static_cast<double>(rep.rank + rep.m),
                                static_cast<double>(rep.m));
        rep.chain_monomials_le_power =
            static_cast<double>(rep.monomial_count_bound) <= power;
    }
    return rep;
}

} // namespace entrobox
