#include "entrobox/homopoly.hpp"
#include "entrobox/polyfit.hpp"
#include "entrobox/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace entrobox;

namespace {

ExactPoly ep(const std::string& text, std::size_t nvars, std::uint32_t degree) {
    return parse_poly(text, nvars, degree);
}

ComplexVector cvec(std::initializer_list<Complex> vals) {
    return ComplexVector(std::vector<Complex>(vals));
}

} // namespace

TEST_CASE("evaluate hand cases") {
    ExactPoly sq = ep("1 * z1^2", 2, 2);
    CHECK(sq.evaluate(cvec({3.0, 7.0})).real() == doctest::Approx(9.0));

    ExactPoly mix = ep("1 * z1^1 z2^1", 2, 2);
    CHECK(mix.evaluate(cvec({2.0, 5.0})).real() == doctest::Approx(10.0));

    CHECK(std::abs(mix.evaluate(cvec({0.0, 0.0}))) == doctest::Approx(0.0));
    CHECK_THROWS_AS(sq.evaluate(cvec({1.0})), std::invalid_argument);
}

TEST_CASE("homogeneity of evaluation") {
    RandomStream rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        ExactPoly p = oracle::random_int_poly(3, 3, rng);
        std::vector<Complex> ze(3);
        for (auto& z : ze) z = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        ComplexVector z(ze);
        Complex lambda(rng.uniform(-1, 1), rng.uniform(-1, 1));
        std::vector<Complex> sze(3);
        for (int i = 0; i < 3; ++i) sze[i] = lambda * ze[i];
        Complex lhs = p.evaluate(ComplexVector(sze));
        Complex rhs = std::pow(lambda, 3) * p.evaluate(z);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("jacobian symbolic oracle") {
    ExactPoly p = ep("1 * z1^2", 2, 2);
    ExactPolyMatrix J = jacobian(std::vector<ExactPoly>{p});
    CHECK(to_text(J.at(0, 0)) == "2 * z1^1");
    CHECK(J.at(0, 1).is_zero());

    // family (a^2 + ab, ab + b^2) -> [[2a+b, a], [b, a+2b]]
    ExactPoly p1 = ep("1 * z1^2 + 1 * z1^1 z2^1", 2, 2);
    ExactPoly p2 = ep("1 * z1^1 z2^1 + 1 * z2^2", 2, 2);
    ExactPolyMatrix J2 = jacobian(std::vector<ExactPoly>{p1, p2});
    CHECK(J2.at(0, 0) == ep("2 * z1^1 + 1 * z2^1", 2, 1));
    CHECK(J2.at(0, 1) == ep("1 * z1^1", 2, 1));
    CHECK(J2.at(1, 0) == ep("1 * z2^1", 2, 1));
    CHECK(J2.at(1, 1) == ep("1 * z1^1 + 2 * z2^1", 2, 1));

    for (const auto& entry : J2.entries) CHECK(entry.degree() == 1);
}

TEST_CASE("poly_minor oracle") {
    ExactPoly p = ep("1 * z1^2", 2, 2);
    ExactPolyMatrix J = jacobian(std::vector<ExactPoly>{p});
    CHECK(to_text(poly_minor(J, {0}, {0})) == "2 * z1^1");

    ExactPoly p1 = ep("1 * z1^2 + 1 * z1^1 z2^1", 2, 2);
    ExactPoly p2 = ep("1 * z1^1 z2^1 + 1 * z2^2", 2, 2);
    ExactPolyMatrix J2 = jacobian(std::vector<ExactPoly>{p1, p2});
    ExactPoly det = poly_minor(J2, {0, 1}, {0, 1});
    CHECK(det == ep("2 * z1^2 + 4 * z1^1 z2^1 + 2 * z2^2", 2, 2));
    CHECK(det.degree() == 2); // r(m-1) with r = 2, m = 2

    // Degree bookkeeping on a 3x3 minor of a degree-3 family.
    RandomStream rng(31);
    std::vector<ExactPoly> fam;
    for (int i = 0; i < 3; ++i) fam.push_back(oracle::random_int_poly(4, 3, rng));
    ExactPolyMatrix J3 = jacobian(fam);
    ExactPoly m3 = poly_minor(J3, {0, 1, 2}, {0, 2, 3});
    CHECK(m3.degree() == 6); // r(m-1) = 3 * 2
}

TEST_CASE("euler identity holds symbolically") {
    RandomStream rng(47);
    for (int rep = 0; rep < 30; ++rep) {
        std::size_t nvars = 2 + rng.bits() % 3;
        std::uint32_t degree = 1 + static_cast<std::uint32_t>(rng.bits() % 4);
        ExactPoly p = oracle::random_int_poly(nvars, degree, rng);
        CHECK(euler_residual(p).is_zero());
    }
}

TEST_CASE("text format round-trips bit-exactly") {
    ExactPoly a = ep("3/2 * z1^2 z3^1 + -1/3 * z2^3 + 2i * z1^1 z2^1 z3^1", 3, 3);
    CHECK(parse_poly(to_text(a), 3, 3) == a);

    ExactPoly b(3, 2);
    b.add_term(MultiIndex({2, 0, 0}), ExactComplex(mpq_class(7, 5), mpq_class(-2, 3)));
    b.add_term(MultiIndex({0, 1, 1}), ExactComplex(mpq_class(0), mpq_class(4, 9)));
    std::string text = to_text(b);
    CHECK(parse_poly(text, 3, 2) == b);
    CHECK(to_text(parse_poly(text, 3, 2)) == text);

    CHECK(to_text(ExactPoly(2, 2)) == "0");
    CHECK(parse_poly("0", 2, 2).is_zero());

    RandomStream rng(53);
    for (int rep = 0; rep < 40; ++rep) {
        ExactPoly p = oracle::random_int_poly(3, 2 + rep % 3, rng);
        // Sprinkle rational and imaginary coefficients.
        p.add_term(MultiIndex({static_cast<std::uint32_t>(2 + rep % 3), 0, 0}),
                   ExactComplex(mpq_class(rep + 1, 7), mpq_class(-rep, 11)));
        std::string t = to_text(p);
        CHECK(parse_poly(t, 3, 2 + rep % 3) == p);
        CHECK(to_text(parse_poly(t, 3, 2 + rep % 3)) == t);
    }

    CHECK_THROWS_AS(parse_poly("1 * z5^2", 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("1 * z1^1", 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("frog", 2, 2), std::invalid_argument);
}

TEST_CASE("coordinate polynomials: decoupled square map") {
    std::vector<NumericPoly> coords;
    coords.push_back(ep("1 * z1^2", 2, 2).to_numeric());
    coords.push_back(ep("1 * z2^2", 2, 2).to_numeric());
    PolyMap map = poly_map_from_family(coords);

    std::vector<ComplexVector> xs = {cvec({1.0, 0.0}), cvec({0.0, 1.0})};
    auto ps = coordinate_polynomials(map, xs);
    REQUIRE(ps.size() == 2);
    CHECK(std::abs(ps[0].coefficient(MultiIndex({2, 0})) - Complex(1.0)) < 1e-9);
    CHECK(ps[0].nterms() == 1);
    CHECK(std::abs(ps[1].coefficient(MultiIndex({0, 2})) - Complex(1.0)) < 1e-9);
    CHECK(ps[1].nterms() == 1);
}

TEST_CASE("coordinate polynomials: coupled map matches symbolic expansion") {
    // P(z) = (z1^2, z1 z2), x1 = (1,0), x2 = (1,1):
    // P(a1 x1 + a2 x2) = ((a1+a2)^2, (a1+a2) a2)
    //                  = (a1^2 + a1 a2) P(x1) + (a1 a2 + a2^2) P(x2).
    std::vector<NumericPoly> coords;
    coords.push_back(ep("1 * z1^2", 2, 2).to_numeric());
    coords.push_back(ep("1 * z1^1 z2^1", 2, 2).to_numeric());
    PolyMap map = poly_map_from_family(coords);

    std::vector<ComplexVector> xs = {cvec({1.0, 0.0}), cvec({1.0, 1.0})};
    auto ps = coordinate_polynomials(map, xs);
    REQUIRE(ps.size() == 2);
    auto near = [](Complex a, double b) { return std::abs(a - Complex(b)) < 1e-9; };
    CHECK(near(ps[0].coefficient(MultiIndex({2, 0})), 1.0));
    CHECK(near(ps[0].coefficient(MultiIndex({1, 1})), 1.0));
    CHECK(near(ps[0].coefficient(MultiIndex({0, 2})), 0.0));
    CHECK(near(ps[1].coefficient(MultiIndex({2, 0})), 0.0));
    CHECK(near(ps[1].coefficient(MultiIndex({1, 1})), 1.0));
    CHECK(near(ps[1].coefficient(MultiIndex({0, 2})), 1.0));
}

TEST_CASE("coordinate polynomials: delta property and reproduction") {
    RandomStream rng(61);
    // Random 3-variable quadratic map into C^4 with independent images.
    std::vector<NumericPoly> coords;
    for (int i = 0; i < 4; ++i)
        coords.push_back(oracle::random_int_poly(3, 2, rng).to_numeric());
    PolyMap map = poly_map_from_family(coords);

    std::vector<ComplexVector> xs;
    for (int j = 0; j < 3; ++j) {
        std::vector<Complex> e(3);
        for (auto& z : e) z = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        xs.push_back(ComplexVector(e));
    }
    auto ps = coordinate_polynomials(map, xs);
    REQUIRE(ps.size() == 3);

    // p_j(e_i) = delta_ij.
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) {
            std::vector<Complex> unit(3, Complex(0.0));
            unit[i] = 1.0;
            Complex v = ps[j].evaluate(ComplexVector(unit));
            CHECK(std::abs(v - (i == j ? Complex(1.0) : Complex(0.0))) < 1e-9);
        }

    // Reproduction of the projected map at fresh points: here the images span
    // a 3-dim subspace of C^4 and the orthogonal projection is implied.
    Eigen::MatrixXcd Y(4, 3);
    for (int j = 0; j < 3; ++j) {
        ComplexVector y = map.eval(xs[static_cast<std::size_t>(j)]);
        for (int i = 0; i < 4; ++i) Y(i, j) = y[static_cast<std::size_t>(i)];
    }
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<Complex> a(3);
        for (auto& z : a) z = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        std::vector<Complex> arg(3, Complex(0.0));
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t i = 0; i < 3; ++i) arg[i] += a[j] * xs[j][i];
        ComplexVector y = map.eval(ComplexVector(arg));
        Eigen::VectorXcd rhs(4);
        for (int i = 0; i < 4; ++i) rhs(i) = y[static_cast<std::size_t>(i)];
        Eigen::VectorXcd c = Y.colPivHouseholderQr().solve(rhs);
        double scale = std::max(1.0, rhs.norm());
        for (std::size_t j = 0; j < 3; ++j) {
            Complex pj = ps[j].evaluate(ComplexVector(a));
            CHECK(std::abs(pj - c(static_cast<Eigen::Index>(j))) <= 1e-9 * scale);
        }
    }
}

TEST_CASE("coordinate polynomials: dependent images are rejected") {
    std::vector<NumericPoly> coords;
    coords.push_back(ep("1 * z1^2", 2, 2).to_numeric());
    coords.push_back(ep("2 * z1^2", 2, 2).to_numeric()); // parallel images
    PolyMap map = poly_map_from_family(coords);
    std::vector<ComplexVector> xs = {cvec({1.0, 0.0}), cvec({0.0, 1.0})};
    CHECK_THROWS_AS(coordinate_polynomials(map, xs), std::runtime_error);
}

TEST_CASE("generic_rank cases") {
    // Diagonal powers: rank r.
    for (std::uint32_t m : {2u, 3u}) {
        std::vector<ExactPoly> fam;
        for (std::size_t i = 0; i < 3; ++i) {
            MultiIndex mi = MultiIndex::zero(4);
            mi[i] = m;
            fam.push_back(ExactPoly::monomial(4, mi, ExactComplex(1L)));
        }
        CHECK(generic_rank(fam, 4, 2) == 3);
    }

    // (a^2 + ab, ab + b^2): determinant 2(a+b)^2, generically nonzero.
    std::vector<ExactPoly> pair = {ep("1 * z1^2 + 1 * z1^1 z2^1", 2, 2),
                                   ep("1 * z1^1 z2^1 + 1 * z2^2", 2, 2)};
    CHECK(generic_rank(pair, 4, 3) == 2);

    // Dependent directions collapse the rank.
    std::vector<ExactPoly> thin = {ep("1 * z1^2", 3, 2), ep("3 * z1^2", 3, 2)};
    CHECK(generic_rank(thin, 4, 5) == 1);
}

TEST_CASE("coordinate polynomials of a full-span map satisfy the rank bound") {
    // Ten independent quadratics give a map whose image spans C^10; the
    // recovered coordinate family must have generic rank >= ceil(sqrt(10)-2).
    RandomStream rng(2718);
    std::vector<NumericPoly> coords;
    for (int i = 0; i < 10; ++i)
        coords.push_back(oracle::random_int_poly(10, 2, rng).to_numeric());
    PolyMap map = poly_map_from_family(coords);
    std::vector<ComplexVector> xs;
    for (int j = 0; j < 10; ++j) {
        std::vector<Complex> e(10);
        for (auto& z : e) z = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        xs.push_back(ComplexVector(e));
    }
    auto ps = coordinate_polynomials(map, xs);
    std::size_t rank = generic_rank(ps, 4, 99);
    CHECK(rank >= 2); // ceil(10^(1/2) - 2)
}
