#pragma once

#include "entrobox/homopoly.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace entrobox {

/// Thrown when a family that should be linearly independent is not; carries an
/// exact dependency certificate (coefficients of a vanishing combination).
class DependentFamilyError : public std::runtime_error {
public:
    DependentFamilyError(std::string message, std::vector<ExactComplex> certificate)
        : std::runtime_error(std::move(message)), certificate_(std::move(certificate)) {}
    const std::vector<ExactComplex>& certificate() const { return certificate_; }

private:
    std::vector<ExactComplex> certificate_;
};

/// Determinant operators of a maximal-rank family p_1..p_r: the leading minor
/// Q and, per extra variable z_j (j > r) and row i, the signed minor Q_ij such
/// that  Q dP/dz_j + sum_i Q_ij dP/dz_i  equals the expansion of the
/// (r+1)x(r+1) Jacobian determinant of (p_1..p_r, P) in variables
/// (z_1..z_r, z_j). The sign is (-1)^(r+1+i) with 1-based i.
struct DependenceOperators {
    ExactPoly Q;
    std::vector<std::vector<ExactPoly>> Qij; // [i in 0..r-1][j-r-1 in 0..N-r-1]
};

DependenceOperators dependence_operators(const ExactPolyMatrix& jac);

/// The linear system on degree-m coefficient vectors cutting out every P whose
/// Jacobian stays rank r against the family. Variables are permuted so the
/// leading r x r minor is nonzero; the permutation is recorded.
struct CoefficientSystem {
    std::size_t nvars = 0;
    std::size_t r = 0;
    std::uint32_t m = 0;
    std::vector<std::size_t> var_permutation; // slot -> original variable
    std::vector<ExactPoly> permuted_family;
    std::vector<MultiIndex> unknowns; // all |gamma| = m, monomial order

    struct Row {
        std::size_t j = 0;  // equation family, 0-based variable index in (r, N)
        MultiIndex delta;   // |delta| = r(m-1) + m - 1
        std::vector<std::pair<std::size_t, ExactComplex>> entries; // (column, value)
    };
    std::vector<Row> rows;            // nonzero rows only
    std::uint64_t total_row_count = 0; // (N-r) * C(N-1+D, D), D = r(m-1)+m-1

    std::size_t column_count() const { return unknowns.size(); }
};

CoefficientSystem assemble_dependence_system(const std::vector<ExactPoly>& family);

/// Nullity of the system by exact Gaussian elimination. Also checks the
/// proved ceiling corank <= C(m+r-1, r-1).
std::size_t corank(const CoefficientSystem& system);

/// True when the polynomial's coefficient vector satisfies every row exactly.
/// The polynomial must be expressed in the system's permuted variables.
bool satisfies_system(const CoefficientSystem& system, const ExactPoly& p);

/// Exact rank of the family's coefficient matrix over Q(i); when the family
/// is dependent, returns a certificate instead of throwing.
struct ExactIndependence {
    bool independent = false;
    std::size_t rank = 0;
    std::vector<ExactComplex> certificate; // nonzero only when dependent
};

ExactIndependence exact_linear_independence(const std::vector<ExactPoly>& family);

struct CorollaryReport {
    std::size_t N = 0; // family size
    std::uint32_t m = 0;
    std::size_t rank = 0;
    double bound = 0.0; // N^(1/m) - m
    bool pass = false;
    // Arithmetic chain N <= C(m+rank-1, rank-1) <= (rank+m)^m re-deriving the
    // bound, plus the two neighbouring binomials surfaced for reports.
    std::uint64_t monomial_count_bound = 0; // C(m+rank-1, rank-1)
    std::uint64_t binom_variant_a = 0;      // C(rank+m-2, m-2), 0 when m < 2
    std::uint64_t binom_variant_b = 0;      // C(rank+m-1, m-1)
    bool chain_family_le_monomials = false;
    bool chain_monomials_le_power = false;
};

/// Verifies the generic-rank lower bound N^(1/m) - m on an exactly
/// independent family of N polynomials; throws DependentFamilyError otherwise.
CorollaryReport corollary_check(const std::vector<ExactPoly>& family, std::size_t trials = 8,
                                std::uint64_t seed = 1, double tol = 1e-9);

} // namespace entrobox
