#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dihedra/linalg.hpp"

using namespace dihedra;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                     const FieldSpec& f = FieldSpec::rationals()) {
    std::uniform_int_distribution<long> dist(-4, 4);
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::in_field(dist(rng), f);
    return m;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
    Scalar a(1, 3), b(1, 6);
    CHECK((a + b).str() == "1/2");
    CHECK((a - a).is_zero());
    CHECK(Scalar(2, 4).str() == "1/2");
    CHECK(Scalar::parse("-6/4").str() == "-3/2");
    CHECK((Scalar(3) / Scalar(-2)).str() == "-3/2");
    CHECK_THROWS(Scalar(1) / Scalar(0));
    CHECK_THROWS(Scalar::parse("1/0"));
}

TEST_CASE("prime field scalars") {
    Scalar a = Scalar::fp(3, 5), b = Scalar::fp(4, 5);
    CHECK((a + b).str() == "2");
    CHECK((a * b).str() == "2");
    CHECK((a / b).str() == "2");  // 3 * 4^{-1} = 3*4 = 12 = 2 mod 5
    CHECK((Scalar(1, 2) + Scalar::fp(0, 5)).str() == "3");  // 1/2 = 3 mod 5
    CHECK_THROWS(FieldSpec::prime_field(4));
    CHECK_THROWS(FieldSpec::prime_field(2));
    CHECK(FieldSpec::parse("F_7").prime == 7);
    CHECK(FieldSpec::parse("Q").is_rational());
}

TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(2)) == 2);
    CHECK(rank(Matrix(3, 4)) == 0);
    Matrix m(2, 2);
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = Scalar(2);
    m.at(1, 0) = Scalar(2);
    m.at(1, 1) = Scalar(4);
    CHECK(rank(m) == 1);  // row 2 = 2 * row 1
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(Matrix::identity(3)).empty());
    CHECK(kernel_basis(Matrix(2, 3)).size() == 3);
    Matrix m(1, 2);
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = Scalar(1);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] + ker[0][1] == Scalar(0));  // span{(1,-1)}
    CHECK_FALSE(ker[0][0].is_zero());
}

TEST_CASE("quotient_dim examples") {
    Matrix amb = Matrix::identity(2);
    Matrix sub(2, 1);
    sub.at(0, 0) = Scalar(1);
    CHECK(quotient_dim(amb, sub) == 1);
    CHECK(quotient_dim(amb, amb) == 0);

    // ambient three columns spanning a 3-dim space, sub spanning 2 of it
    Matrix a3 = Matrix::identity(3);
    Matrix s2(3, 2);
    s2.at(0, 0) = Scalar(1);
    s2.at(1, 1) = Scalar(1);
    CHECK(quotient_dim(a3, s2) == 1);

    CHECK_THROWS(quotient_dim(Matrix(2, 2), Matrix(3, 1)));
}

TEST_CASE("rank properties on random matrices") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t rows = 1 + iter % 5, cols = 1 + (iter * 7) % 6;
        Matrix m = random_matrix(rng, rows, cols);
        CHECK(rank(m) == rank(m.transposed()));
        CHECK(cols == rank(m) + kernel_basis(m).size());
        for (const auto& v : kernel_basis(m)) CHECK(is_zero(m.apply(v)));

        // permuting rows never changes the rank
        Matrix p(rows, rows);
        std::vector<std::size_t> perm(rows);
        for (std::size_t i = 0; i < rows; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t i = 0; i < rows; ++i) p.at(perm[i], i) = Scalar(1);
        CHECK(rank(p * m) == rank(m));
    }
}

TEST_CASE("rank properties over a prime field") {
    std::mt19937_64 rng(999);
    FieldSpec f = FieldSpec::prime_field(7);
    for (int iter = 0; iter < 15; ++iter) {
        Matrix m = random_matrix(rng, 3, 4, f);
        CHECK(rank(m) == rank(m.transposed()));
        CHECK(m.cols() == rank(m) + kernel_basis(m).size());
    }
}

TEST_CASE("matrix inverse") {
    Matrix m(2, 2);
    m.at(0, 0) = Scalar(2);
    m.at(0, 1) = Scalar(1);
    m.at(1, 1) = Scalar(3);
    CHECK(inverse(m) * m == Matrix::identity(2));
    Matrix sing(2, 2);
    sing.at(0, 0) = Scalar(1);
    CHECK_THROWS_AS(inverse(sing), std::domain_error);
}

TEST_CASE("subspace basis coordinates") {
    Matrix gens(3, 3);
    gens.at(0, 0) = Scalar(1);
    gens.at(1, 0) = Scalar(1);
    gens.at(1, 1) = Scalar(2);
    gens.at(0, 2) = Scalar(1);
    gens.at(1, 2) = Scalar(3);  // dependent on the first two
    SubspaceBasis sb(gens);
    CHECK(sb.dim() == 2);
    std::vector<Scalar> v{Scalar(2), Scalar(8), Scalar(0)};  // 2*g0 + 3*g1
    CHECK(sb.contains(v));
    std::vector<Scalar> c = sb.coords(v);
    // reconstruct
    std::vector<Scalar> back(3, Scalar(0));
    for (std::size_t k = 0; k < sb.dim(); ++k)
        for (std::size_t i = 0; i < 3; ++i) back[i] += c[k] * sb.basis().at(i, k);
    CHECK(back == v);
    std::vector<Scalar> outside{Scalar(0), Scalar(0), Scalar(1)};
    CHECK_FALSE(sb.contains(outside));
    CHECK_THROWS(sb.coords(outside));
}
