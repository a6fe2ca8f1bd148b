#include "schurzeta/expansion.hpp"
#include "schurzeta/identities.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>

using namespace schurzeta;

namespace {

using Parts = std::vector<std::vector<int>>;

std::map<Parts, BigInt> as_map(const std::vector<ExpansionTerm>& terms) {
    std::map<Parts, BigInt> out;
    for (const auto& t : terms) out[t.parts] = t.coeff;
    return out;
}

// SD((3,1)) boxes in row-major order: 0=(1,1), 1=(1,2), 2=(1,3), 3=(2,2),
// i.e. s11, s12, s13, s22.
const std::map<Parts, BigInt> kPaper31 = {
    {{{0}, {1}, {2}, {3}}, 16}, {{{0, 1}, {2}, {3}}, 8}, {{{0}, {1, 2}, {3}}, 8},
    {{{0}, {1}, {2, 3}}, 16},   {{{0, 1, 2}, {3}}, 4},   {{{0, 1}, {2, 3}}, 8},
    {{{0}, {1, 2, 3}}, 4},      {{{0}, {1}, {3}, {2}}, 16}, {{{0, 1}, {3}, {2}}, 8},
    {{{0}, {1, 3}, {2}}, 8},
};

const std::map<Parts, BigInt> kPaper31Star = {
    {{{0}, {1}, {2}, {3}}, 16}, {{{0, 1}, {2}, {3}}, -8}, {{{0}, {1, 2}, {3}}, -8},
    {{{0}, {1}, {2, 3}}, -16},  {{{0, 1, 2}, {3}}, 4},    {{{0, 1}, {2, 3}}, 8},
    {{{0}, {1, 2, 3}}, 4},      {{{0}, {1}, {3}, {2}}, 16}, {{{0, 1}, {3}, {2}}, -8},
    {{{0}, {1, 3}, {2}}, -8},
};

}  // namespace

TEST_CASE("shape (3,1) reproduces the ten listed Q coefficients") {
    const PositionedShape shape = parse_shape("3,1", ShapeMode::Shifted);
    CHECK(as_map(expand_mzv(Family::QSST, shape)) == kPaper31);
    CHECK(as_map(expand_mzsv(Family::QSST, shape)) == kPaper31Star);
}

TEST_CASE("P coefficients are the Q coefficients over 2^r") {
    const PositionedShape shape = parse_shape("3,1", ShapeMode::Shifted);
    const auto q = as_map(expand_mzv(Family::QSST, shape));
    const auto p = as_map(expand_mzv(Family::PSST, shape));
    REQUIRE(p.size() == q.size());
    for (const auto& [parts, coeff] : q) CHECK(p.at(parts) * 4 == coeff);
}

TEST_CASE("row shapes carry the 2^dep pattern") {
    for (int r = 1; r <= 4; ++r) {
        const PositionedShape row = parse_shape(std::to_string(r), ShapeMode::Shifted);
        const auto terms = expand_mzv(Family::QSST, row);
        CHECK(terms.size() == (std::size_t{1} << (r - 1)));
        for (const auto& t : terms) CHECK(t.coeff == BigInt(1) << t.parts.size());
        const auto star = expand_mzsv(Family::QSST, row);
        for (const auto& t : star) {
            const int dep = static_cast<int>(t.parts.size());
            const BigInt expected = ((r - dep) % 2 == 0 ? 1 : -1) * (BigInt(1) << dep);
            CHECK(t.coeff == expected);
        }
    }
}

TEST_CASE("single box expands to 2 zeta(s)") {
    const auto terms = expand_mzv(Family::QSST, parse_shape("1", ShapeMode::Shifted));
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].coeff == 2);
    CHECK(terms[0].parts == Parts{{0}});
}

TEST_CASE("all Q coefficients are powers of two") {
    for (const char* text : {"2,1", "3,1", "3,2", "4,1", "3,2,1"}) {
        for (const auto& t : expand_mzv(Family::QSST, parse_shape(text, ShapeMode::Shifted))) {
            BigInt c = t.coeff;
            CHECK(c > 0);
            while (c % 2 == 0) c /= 2;
            CHECK(c == 1);
        }
    }
}

TEST_CASE("expansion evaluation equals enumeration") {
    for (const char* text : {"2", "2,1", "3,1"}) {
        const PositionedShape shape = parse_shape(text, ShapeMode::Shifted);
        std::vector<std::int64_t> exps;
        for (std::size_t i = 0; i < shape.size(); ++i) exps.push_back(1 + (i * 2 + 1) % 3);
        for (int N = 0; N <= 4; ++N) {
            CHECK(eval_by_expansion<ExactMode>(Family::QSST, shape, exps, N) ==
                  schur_zeta<ExactMode>(Family::QSST, shape, exps, N));
            CHECK(eval_by_expansion<ExactMode>(Family::PSST, shape, exps, N) ==
                  schur_zeta<ExactMode>(Family::PSST, shape, exps, N));
        }
    }
}

TEST_CASE("star expansion evaluates consistently too") {
    const PositionedShape shape = parse_shape("3,1", ShapeMode::Shifted);
    const std::vector<std::int64_t> exps{2, 1, 3, 2};
    for (int N = 1; N <= 6; ++N) {
        Rational total(0);
        for (const auto& t : expand_mzsv(Family::QSST, shape))
            total += Rational(t.coeff) * truncated_mzv_exact(term_index(t, exps), N, /*star=*/true);
        CHECK(total == schur_zeta<ExactMode>(Family::QSST, shape, exps, N));
    }
}

TEST_CASE("coarsenings and duality") {
    CHECK(coarsenings({1, 2}) == std::vector<Index>{{1, 2}, {3}});
    CHECK(dual_index({1, 2}) == Index{3});
    CHECK(dual_index({1, 1, 1, 2}) == Index{5});
    CHECK_THROWS_AS(dual_index({2, 1}), std::invalid_argument);

    // Involution on all admissible indices of weight <= 8.
    std::function<void(Index, long)> gen = [&](Index prefix, long rest) {
        if (rest == 0) {
            if (!prefix.empty() && prefix.back() >= 2) CHECK(dual_index(dual_index(prefix)) == prefix);
            return;
        }
        for (long v = 1; v <= rest; ++v) {
            Index next = prefix;
            next.push_back(v);
            gen(std::move(next), rest - v);
        }
    };
    for (long w = 2; w <= 8; ++w) gen({}, w);
}

TEST_CASE("sum formula census") {
    const auto census53 = sum_formula_census(5, 3);
    CHECK(census53.at(1) == 3);
    CHECK(census53.at(2) == 2);
    CHECK(census53.at(3) == 1);
    BigInt weighted = 0;
    for (const auto& [depth, count] : census53) weighted += (BigInt(1) << depth) * count;
    CHECK(weighted == 22);

    const auto census41 = sum_formula_census(4, 1);
    CHECK(census41.at(1) == 1);

    BigInt w42 = 0;
    for (const auto& [depth, count] : sum_formula_census(4, 2))
        w42 += (BigInt(1) << depth) * count;
    CHECK(w42 == 8);

    for (long k = 2; k <= 9; ++k)
        for (long r = 1; r < k; ++r) CHECK_NOTHROW(sum_formula_census(k, r));
}
