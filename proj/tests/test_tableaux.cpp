#include "schurzeta/tableau.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace schurzeta;

namespace {

// Brute force: filter the full alphabet product through is_valid.
BigInt brute_count(const TableauKind& kind, const PositionedShape& shape) {
    const auto letters = alphabet(kind);
    const int n = static_cast<int>(shape.size());
    if (letters.empty()) return n == 0 ? 1 : 0;
    BigInt count = 0;
    std::vector<int> pick(n, 0);
    while (true) {
        Tableau t;
        for (int i = 0; i < n; ++i) t.push_back(letters[pick[i]]);
        if (is_valid(kind, shape, t)) ++count;
        int pos = n - 1;
        while (pos >= 0 && pick[pos] + 1 == static_cast<int>(letters.size())) pick[pos--] = 0;
        if (pos < 0) break;
        ++pick[pos];
    }
    return count;
}

Tableau parse_row_major(const std::vector<std::string>& entries) {
    Tableau t;
    for (const auto& s : entries) t.push_back(parse_entry(s));
    return t;
}

}  // namespace

TEST_CASE("single-box counts") {
    const PositionedShape one = parse_shape("1", ShapeMode::Shifted);
    CHECK(count_tableaux(TableauKind{Family::QSST, 1}, one) == 2);
    CHECK(count_tableaux(TableauKind{Family::PSST, 1}, one) == 1);
    CHECK(count_tableaux(TableauKind{Family::SO, 1}, parse_shape("1", ShapeMode::Straight)) == 3);
}

TEST_CASE("row and column counts") {
    CHECK(count_tableaux(TableauKind{Family::QSST, 1}, parse_shape("2", ShapeMode::Shifted)) == 2);
    CHECK(count_tableaux(TableauKind{Family::SP, 1}, parse_shape("1,1", ShapeMode::Straight)) == 0);
    CHECK(count_tableaux(TableauKind{Family::SP, 2}, parse_shape("1,1", ShapeMode::Straight)) == 5);
    CHECK(count_tableaux(TableauKind{Family::QSST, 3}, PositionedShape{}) == 1);
}

TEST_CASE("the displayed symplectic tableau of shape (5,3,3,1) is valid") {
    const PositionedShape shape = parse_shape("5,3,3,1", ShapeMode::Straight);
    const Tableau t = parse_row_major(
        {"1~", "2", "2", "2~", "4", "2~", "3", "3", "3", "3~", "3~", "4"});
    CHECK(is_valid(TableauKind{Family::SP, 4}, shape, t));

    // Lowering the (4,1) entry below the symplectic bound breaks SP3.
    Tableau bad = t;
    bad[11] = parse_entry("3~");
    CHECK_FALSE(is_valid(TableauKind{Family::SP, 4}, shape, bad));
}

TEST_CASE("enumeration equals the brute-force filter") {
    const std::vector<std::pair<std::string, ShapeMode>> shapes = {
        {"2,1", ShapeMode::Shifted},
        {"3,1", ShapeMode::Shifted},
        {"2,2", ShapeMode::Straight},
        {"2,1,1", ShapeMode::Straight},
        {"2,1/1", ShapeMode::Shifted},
    };
    for (const auto& [text, mode] : shapes) {
        const PositionedShape shape = parse_shape(text, mode);
        for (int N = 0; N <= 3; ++N) {
            for (Family fam : {Family::PSST, Family::QSST, Family::SP, Family::SO}) {
                const TableauKind kind{fam, N};
                CHECK(count_tableaux(kind, shape) == brute_count(kind, shape));
            }
        }
    }
}

TEST_CASE("counts are monotone in the cap") {
    for (Family fam : {Family::PSST, Family::QSST, Family::SP, Family::SO}) {
        const PositionedShape shape = parse_shape(
            "2,1", fam == Family::PSST || fam == Family::QSST ? ShapeMode::Shifted : ShapeMode::Straight);
        BigInt prev = 0;
        for (int N = 0; N <= 4; ++N) {
            const BigInt cur = count_tableaux(TableauKind{fam, N}, shape);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("so-tableaux without infinity are the symplectic ones") {
    for (const char* text : {"2,1", "1,1", "3"}) {
        const PositionedShape shape = parse_shape(text, ShapeMode::Straight);
        for (int N = 1; N <= 3; ++N) {
            BigInt no_inf = 0;
            enumerate_tableaux(TableauKind{Family::SO, N}, shape, [&](const Tableau& t) {
                for (const Entry& e : t)
                    if (e.tag == EntryTag::Inf) return;
                ++no_inf;
            });
            CHECK(no_inf == count_tableaux(TableauKind{Family::SP, N}, shape));
        }
    }
}

TEST_CASE("enumeration is row-major lexicographic and duplicate-free") {
    const TableauKind kind{Family::QSST, 2};
    const PositionedShape shape = parse_shape("2,1", ShapeMode::Shifted);
    std::vector<std::vector<int>> keys;
    enumerate_tableaux(kind, shape, [&](const Tableau& t) {
        std::vector<int> k;
        for (const Entry& e : t) k.push_back(entry_key(kind, e));
        keys.push_back(std::move(k));
    });
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("entry serialization round-trips") {
    for (const char* s : {"3", "3'", "3~", "inf", "12'"}) {
        CHECK(entry_to_string(parse_entry(s)) == s);
    }
    CHECK_THROWS(is_valid(TableauKind{Family::SP, 2}, parse_shape("1", ShapeMode::Straight),
                          {Entry{1, EntryTag::Primed}}));
}
