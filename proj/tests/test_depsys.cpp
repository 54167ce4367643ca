#include "entrobox/depsys.hpp"
#include "entrobox/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace entrobox;

namespace {

ExactPoly ep(const std::string& text, std::size_t nvars, std::uint32_t degree) {
    return parse_poly(text, nvars, degree);
}

ExactPoly power_poly(std::size_t nvars, std::size_t var, std::uint32_t m) {
    MultiIndex mi = MultiIndex::zero(nvars);
    mi[var] = m;
    return ExactPoly::monomial(nvars, mi, ExactComplex(1L));
}

} // namespace

TEST_CASE("dependence operators for one polynomial") {
    // p = z1^2: Q = 2 z1, Q_12 = -dp/dz2 = 0.
    ExactPolyMatrix J1 = jacobian(std::vector<ExactPoly>{ep("1 * z1^2", 2, 2)});
    DependenceOperators ops1 = dependence_operators(J1);
    CHECK(to_text(ops1.Q) == "2 * z1^1");
    CHECK(ops1.Qij[0][0].is_zero());

    // p = z1^2 + z2^2: the system is 2 z1 dP/dz2 - 2 z2 dP/dz1 = 0.
    ExactPolyMatrix J2 = jacobian(std::vector<ExactPoly>{ep("1 * z1^2 + 1 * z2^2", 2, 2)});
    DependenceOperators ops2 = dependence_operators(J2);
    CHECK(to_text(ops2.Q) == "2 * z1^1");
    CHECK(ops2.Qij[0][0] == ep("-2 * z2^1", 2, 1));
}

TEST_CASE("coefficient system: single square, explicit solution space") {
    CoefficientSystem sys = assemble_dependence_system({ep("1 * z1^2", 2, 2)});
    CHECK(sys.column_count() == 3);
    CHECK(sys.total_row_count == 3); // (N - r) C(N - 1 + D, D) = C(3, 2)
    CHECK(corank(sys) == 1);         // only multiples of z1^2 survive
    CHECK(satisfies_system(sys, sys.permuted_family[0]));
    CHECK_FALSE(satisfies_system(sys, ep("1 * z1^1 z2^1", 2, 2)));
}

TEST_CASE("coefficient system: rotational example") {
    CoefficientSystem sys = assemble_dependence_system({ep("1 * z1^2 + 1 * z2^2", 2, 2)});
    CHECK(corank(sys) == 1); // solutions a (z1^2 + z2^2)
    CHECK(satisfies_system(sys, sys.permuted_family[0]));
    CHECK(satisfies_system(sys, ep("5 * z1^2 + 5 * z2^2", 2, 2)));
    CHECK_FALSE(satisfies_system(sys, ep("1 * z1^2", 2, 2)));
}

TEST_CASE("row and column counts match the combinatorial formulas") {
    struct Shape {
        std::size_t r, N;
        std::uint32_t m;
    };
    for (Shape s : {Shape{1, 3, 2}, Shape{2, 4, 2}, Shape{2, 3, 3}, Shape{1, 4, 3}}) {
        std::vector<ExactPoly> fam;
        for (std::size_t i = 0; i < s.r; ++i) fam.push_back(power_poly(s.N, i, s.m));
        CoefficientSystem sys = assemble_dependence_system(fam);
        std::uint64_t D = s.r * (s.m - 1) + s.m - 1;
        CHECK(sys.total_row_count == (s.N - s.r) * binomial(s.N - 1 + D, D));
        CHECK(sys.column_count() == binomial(s.N + s.m - 1, s.m));
        CHECK(sys.rows.size() <= sys.total_row_count);
    }
}

TEST_CASE("corank is sharp on the pure-power families") {
    struct Case {
        std::size_t r, N;
        std::uint32_t m;
        std::size_t expected; // count of degree-m monomials in r variables
    };
    for (Case c : {Case{1, 2, 2, 1}, Case{1, 3, 3, 1}, Case{2, 3, 2, 3}, Case{2, 3, 3, 4},
                   Case{2, 4, 2, 3}, Case{3, 4, 2, 6}}) {
        std::vector<ExactPoly> fam;
        for (std::size_t i = 0; i < c.r; ++i) fam.push_back(power_poly(c.N, i, c.m));
        CoefficientSystem sys = assemble_dependence_system(fam);
        CHECK(corank(sys) == c.expected);
        CHECK(c.expected == binomial(c.m + c.r - 1, c.r - 1));
        // Every degree-m polynomial in the first r variables solves the system.
        for (std::size_t v = 0; v < c.r; ++v)
            CHECK(satisfies_system(sys, sys.permuted_family[v]));
    }
}

TEST_CASE("membership of the defining family, mixed-term case") {
    // Exercises the cofactor signs with r = 2 where they differ from a naive
    // alternating pattern.
    std::vector<ExactPoly> fam = {ep("1 * z1^2 + 1 * z2^2", 3, 2),
                                  ep("1 * z2^2 + 1 * z1^1 z3^1", 3, 2)};
    CoefficientSystem sys = assemble_dependence_system(fam);
    CHECK(satisfies_system(sys, sys.permuted_family[0]));
    CHECK(satisfies_system(sys, sys.permuted_family[1]));
    std::size_t cr = corank(sys);
    CHECK(cr >= 2); // both family members solve it
    CHECK(cr <= binomial(2 + 2 - 1, 2 - 1));
}

TEST_CASE("corank agrees with the numeric oracle on small systems") {
    RandomStream rng(71);
    for (int rep = 0; rep < 12; ++rep) {
        std::size_t r = 1 + rep % 2;
        std::size_t N = 3;
        std::uint32_t m = 2;
        std::vector<ExactPoly> fam;
        for (std::size_t i = 0; i < r; ++i) {
            ExactPoly p = power_poly(N, i, m);
            ExactPoly noise = oracle::random_int_poly(N, m, rng, -1, 1);
            fam.push_back(p + noise);
        }
        CoefficientSystem sys;
        try {
            sys = assemble_dependence_system(fam);
        } catch (const std::runtime_error&) {
            continue; // degenerate a draw; skip
        }
        ExactPolyMatrix J = jacobian(sys.permuted_family);
        DependenceOperators ops = dependence_operators(J);
        std::size_t numeric =
            oracle::numeric_corank(ops.Q, ops.Qij, N, m, r);
        CHECK(corank(sys) == numeric);
    }
}

TEST_CASE("degenerate families are rejected") {
    // Two proportional polynomials: jacobian rank 1 < r = 2 everywhere.
    std::vector<ExactPoly> fam = {ep("1 * z1^2", 3, 2), ep("2 * z1^2", 3, 2)};
    CHECK_THROWS_AS(assemble_dependence_system(fam), std::runtime_error);
    // Family size must stay below the variable count.
    std::vector<ExactPoly> square = {ep("1 * z1^2", 2, 2), ep("1 * z2^2", 2, 2)};
    CHECK_THROWS_AS(assemble_dependence_system(square), std::invalid_argument);
}

TEST_CASE("variable permutation is recorded when the leading minor vanishes") {
    // p = z2^2 in three variables: dp/dz1 = 0, so column 2 must come first.
    CoefficientSystem sys = assemble_dependence_system({ep("1 * z2^2", 3, 2)});
    CHECK(sys.var_permutation[0] == 1);
    CHECK(corank(sys) == 1);
}

TEST_CASE("exact linear independence and certificates") {
    std::vector<ExactPoly> indep = {ep("1 * z1^2", 2, 2), ep("1 * z1^1 z2^1", 2, 2),
                                    ep("1 * z2^2", 2, 2)};
    ExactIndependence ok = exact_linear_independence(indep);
    CHECK(ok.independent);
    CHECK(ok.rank == 3);

    std::vector<ExactPoly> dep = {ep("1 * z1^2", 2, 2), ep("1 * z2^2", 2, 2),
                                  ep("2 * z1^2 + 3 * z2^2", 2, 2)};
    ExactIndependence bad = exact_linear_independence(dep);
    CHECK_FALSE(bad.independent);
    REQUIRE(bad.certificate.size() == 3);
    // The certificate combination vanishes exactly.
    ExactPoly combo(2, 2);
    for (std::size_t i = 0; i < 3; ++i) combo = combo + dep[i].scaled(bad.certificate[i]);
    CHECK(combo.is_zero());
}

TEST_CASE("corollary_check examples") {
    // N = 3, m = 2 in two variables: rank 2 >= 3^(1/2) - 2.
    std::vector<ExactPoly> fam = {ep("1 * z1^2", 2, 2), ep("1 * z1^1 z2^1", 2, 2),
                                  ep("1 * z2^2", 2, 2)};
    CorollaryReport rep = corollary_check(fam);
    CHECK(rep.rank == 2);
    CHECK(rep.bound == doctest::Approx(std::sqrt(3.0) - 2.0));
    CHECK(rep.pass);
    CHECK(rep.chain_family_le_monomials);
    CHECK(rep.chain_monomials_le_power);

    // Pure powers, N = r: rank r >= r^(1/m) - m trivially.
    for (std::uint32_t m : {2u, 3u}) {
        std::vector<ExactPoly> powers;
        for (std::size_t i = 0; i < 4; ++i) powers.push_back(power_poly(4, i, m));
        CorollaryReport r2 = corollary_check(powers);
        CHECK(r2.rank == 4);
        CHECK(r2.pass);
    }

    // Dependent family rejected with certificate.
    std::vector<ExactPoly> dep = {ep("1 * z1^2", 2, 2), ep("2 * z1^2", 2, 2)};
    CHECK_THROWS_AS(corollary_check(dep), DependentFamilyError);
}

TEST_CASE("random independent families satisfy the rank bound") {
    RandomStream rng(83);
    int done = 0;
    while (done < 10) {
        std::size_t N = 3 + rng.bits() % 8; // up to 10
        std::vector<ExactPoly> fam;
        for (std::size_t i = 0; i < N; ++i) {
            ExactPoly p = oracle::random_int_poly(N, 2, rng);
            if (p.is_zero()) p = power_poly(N, i, 2);
            fam.push_back(p);
        }
        ExactIndependence indep = exact_linear_independence(fam);
        if (!indep.independent) continue;
        CorollaryReport rep = corollary_check(fam, 4, 1000 + done);
        CHECK(rep.pass);
        std::size_t need = static_cast<std::size_t>(
            std::max(0.0, std::ceil(std::sqrt(static_cast<double>(N)) - 2.0)));
        CHECK(rep.rank >= need);
        ++done;
    }
}

TEST_CASE("perturbed families keep corank under the ceiling") {
    RandomStream rng(91);
    int done = 0;
    while (done < 8) {
        std::size_t r = 1 + rng.bits() % 2;
        std::uint32_t m = 2 + static_cast<std::uint32_t>(rng.bits() % 2);
        std::size_t N = 3 + rng.bits() % 2;
        std::vector<ExactPoly> fam;
        for (std::size_t i = 0; i < r; ++i)
            fam.push_back(power_poly(N, i, m) + oracle::random_int_poly(N, m, rng, -1, 1));
        try {
            CoefficientSystem sys = assemble_dependence_system(fam);
            std::size_t cr = corank(sys); // throws if above the ceiling
            CHECK(cr <= binomial(m + r - 1, r - 1));
            for (std::size_t i = 0; i < r; ++i)
                CHECK(satisfies_system(sys, sys.permuted_family[i]));
            ++done;
        } catch (const std::runtime_error&) {
            continue; // degenerate draw
        }
    }
}
