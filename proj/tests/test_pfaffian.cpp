#include "schurzeta/pfaffian.hpp"
#include "schurzeta/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace schurzeta;

namespace {

// Signed permutation expansion, the definition of the determinant.
Rational det_oracle(const Matrix<Rational>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Rational total(0);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Rational prod(1);
        for (int i = 0; i < n; ++i) prod *= a[i][perm[i]];
        total += inv % 2 == 0 ? prod : -prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Pfaffian straight from the 1-factor definition.
Rational pf_oracle(const Matrix<Rational>& a) {
    Rational total(0);
    for (const auto& factor : one_factors(static_cast<int>(a.size()))) {
        Rational prod(1);
        for (const auto& [i, j] : factor) prod *= a[i][j];
        total += one_factor_sign(factor) * prod;
    }
    if (a.empty()) total = 1;
    return total;
}

Matrix<Rational> random_matrix(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-9, 9);
    Matrix<Rational> a(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = d(rng);
    return a;
}

}  // namespace

TEST_CASE("determinant basics") {
    CHECK(determinant<Rational>({{Rational(7)}}) == 7);
    const Matrix<Rational> id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(determinant(id) == 1);
    CHECK(determinant_ring(id) == 1);
}

TEST_CASE("elimination matches the permutation expansion") {
    std::mt19937 rng(12345);
    for (int rep = 0; rep < 6; ++rep) {
        for (int n : {2, 3, 4, 5}) {
            const auto a = random_matrix(n, rng);
            const Rational expected = det_oracle(a);
            CHECK(determinant(a) == expected);
            CHECK(determinant_ring(a) == expected);
        }
    }
}

TEST_CASE("pfaffian basics") {
    CHECK(pfaffian(Matrix<Rational>{}) == 1);
    CHECK_THROWS_AS(pfaffian(Matrix<Rational>{{Rational(0)}}), std::invalid_argument);

    Matrix<Rational> two{{0, 5}, {0, 0}};
    CHECK(pfaffian(two) == 5);

    std::mt19937 rng(99);
    const auto a = random_matrix(4, rng);
    CHECK(pfaffian(a) == a[0][1] * a[2][3] - a[0][2] * a[1][3] + a[0][3] * a[1][2]);
}

TEST_CASE("one-factor counts (2n)!/(2^n n!)") {
    for (int n = 0; n <= 4; ++n) {
        const BigInt expected = factorial(2 * n) / (pow_bigint(2, n) * factorial(n));
        CHECK(BigInt(one_factors(2 * n).size()) == expected);
    }
}

TEST_CASE("recursive pfaffian equals the 1-factor oracle") {
    std::mt19937 rng(4242);
    for (int n : {2, 4, 6}) {
        for (int rep = 0; rep < 4; ++rep) {
            const auto a = random_matrix(n, rng);
            CHECK(pfaffian(a) == pf_oracle(a));
        }
    }
}

TEST_CASE("pf squared is the determinant of the antisymmetric completion") {
    std::mt19937 rng(777);
    for (int n : {2, 4, 6}) {
        auto a = random_matrix(n, rng);
        Matrix<Rational> anti(n, std::vector<Rational>(n, Rational(0)));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                anti[i][j] = a[i][j];
                anti[j][i] = -a[i][j];
            }
        const Rational pf = pfaffian(a);
        CHECK(pf * pf == determinant(anti));
    }
}

TEST_CASE("scaling row and column k scales the pfaffian") {
    std::mt19937 rng(31);
    auto a = random_matrix(6, rng);
    const Rational before = pfaffian(a);
    const Rational c(3, 2);
    const int k = 2;
    for (int j = 0; j < 6; ++j) {
        a[k][j] *= c;
        a[j][k] *= c;
    }
    CHECK(pfaffian(a) == c * before);
}
