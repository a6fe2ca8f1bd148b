#pragma once

#include "schurzeta/rational.hpp"
#include "schurzeta/shape.hpp"
#include "schurzeta/tableau.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace schurzeta {

/// One summand of a Schur P/Q expansion into multiple zeta indices.
/// parts[k] lists the boxes (indices into shape.boxes()) whose exponents sum
/// to the k-th entry of the index; the coefficient counts the prime/unprime
/// markings compatible with that value-collapse pattern.
struct ExpansionTerm {
    BigInt coeff;
    std::vector<std::vector<int>> parts;
};

namespace detail {

/// Weakly increasing surjective level assignments box -> {1..d}.
template <typename Visit>
void enumerate_level_functions(const PositionedShape& shape, Visit&& visit) {
    const int n = static_cast<int>(shape.size());
    if (n == 0) {
        std::vector<int> empty;
        visit(empty, 0);
        return;
    }
    std::vector<int> level(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            int d = *std::max_element(level.begin(), level.end());
            std::vector<char> used(d + 1, 0);
            for (int l : level) used[l] = 1;
            for (int l = 1; l <= d; ++l)
                if (!used[l]) return;
            visit(level, d);
            return;
        }
        const Box& b = shape.boxes()[i];
        int low = 1;
        if (const int li = shape.index_of(b.row, b.col - 1); li >= 0 && li < i)
            low = std::max(low, level[li]);
        if (const int ai = shape.index_of(b.row - 1, b.col); ai >= 0 && ai < i)
            low = std::max(low, level[ai]);
        for (int l = low; l <= n; ++l) {
            level[i] = l;
            rec(i + 1);
        }
    };
    rec(0);
}

/// Number of prime markings of a level pattern that satisfy PST1-PST3
/// (and PST4 for the P family): within each row and level class the primed
/// boxes form a prefix of length at most one, within each column and level
/// class the unprimed boxes form a suffix of length at most one.
inline BigInt marking_count(const PositionedShape& shape, const std::vector<int>& level,
                            bool p_family) {
    const int n = static_cast<int>(shape.size());
    BigInt count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto primed = [&](int i) { return (mask >> i) & 1; };
        bool ok = true;
        if (p_family) {
            for (int i = 0; i < n && ok; ++i)
                if (primed(i) && shape.boxes()[i].content() == 0) ok = false;
        }
        for (int i = 0; i < n && ok; ++i) {
            for (int j = i + 1; j < n && ok; ++j) {
                if (level[i] != level[j]) continue;
                const Box& a = shape.boxes()[i];
                const Box& b = shape.boxes()[j];
                if (a.row == b.row) {
                    // j is right of i: at most one prime per row-class, prime first.
                    if (primed(j)) ok = false;
                    if (primed(i) && primed(j)) ok = false;
                } else if (a.col == b.col) {
                    // j is below i: at most one unprimed per column-class, unprimed last.
                    if (!primed(i)) ok = false;
                }
            }
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace detail

/// Regroups sum over QSST (resp. PSST) of 1/M^s by the value-collapse
/// pattern: each surviving level function contributes its marking count on
/// the index whose k-th part is the exponent sum over the level-k boxes.
inline std::vector<ExpansionTerm> expand_mzv(Family family, const PositionedShape& shape) {
    if (family != Family::PSST && family != Family::QSST)
        throw std::invalid_argument("expand_mzv: family must be P or Q");
    std::vector<ExpansionTerm> out;
    detail::enumerate_level_functions(shape, [&](const std::vector<int>& level, int d) {
        const BigInt c = detail::marking_count(shape, level, family == Family::PSST);
        if (c == 0) return;
        ExpansionTerm term;
        term.coeff = c;
        term.parts.assign(d, {});
        for (int i = 0; i < static_cast<int>(level.size()); ++i)
            term.parts[level[i] - 1].push_back(i);
        out.push_back(std::move(term));
    });
    return out;
}

/// All coarsenings of the parts (merges of adjacent entries), as bitmask over
/// the dep-1 junctions.
inline std::vector<std::vector<int>> merge_parts(const std::vector<std::vector<int>>& parts,
                                                 std::uint64_t junctions) {
    std::vector<std::vector<int>> out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k > 0 && ((junctions >> (k - 1)) & 1)) {
            out.back().insert(out.back().end(), parts[k].begin(), parts[k].end());
        } else {
            out.push_back(parts[k]);
        }
    }
    for (auto& part : out) std::sort(part.begin(), part.end());  // canonical keys
    return out;
}

/// Dual expression over zeta-star indices, via the inclusion-exclusion
/// zeta(gamma) = sum over coarsenings delta of (-1)^(dep gamma - dep delta) zeta*(delta).
inline std::vector<ExpansionTerm> expand_mzsv(Family family, const PositionedShape& shape) {
    std::map<std::vector<std::vector<int>>, BigInt> acc;
    for (const ExpansionTerm& t : expand_mzv(family, shape)) {
        const std::size_t dep = t.parts.size();
        const std::uint64_t patterns = dep == 0 ? 1 : (std::uint64_t{1} << (dep - 1));
        for (std::uint64_t m = 0; m < patterns; ++m) {
            auto merged = merge_parts(t.parts, m);
            const int sign_exp = static_cast<int>(dep - merged.size());
            BigInt c = t.coeff;
            if (sign_exp % 2 == 1) c = -c;
            acc[std::move(merged)] += c;
        }
    }
    std::vector<ExpansionTerm> out;
    for (auto& [parts, coeff] : acc)
        if (coeff != 0) out.push_back(ExpansionTerm{coeff, parts});
    return out;
}

/// Numeric index of a term under a box -> exponent assignment.
inline std::vector<std::int64_t> term_index(const ExpansionTerm& t,
                                            const std::vector<std::int64_t>& exponents) {
    std::vector<std::int64_t> idx;
    idx.reserve(t.parts.size());
    for (const auto& part : t.parts) {
        std::int64_t s = 0;
        for (int b : part) s += exponents[b];
        idx.push_back(s);
    }
    return idx;
}

using Index = std::vector<std::int64_t>;

/// All merges of adjacent parts (the coarsening order behind E = sum of M).
inline std::vector<Index> coarsenings(const Index& idx) {
    std::vector<Index> out;
    const std::size_t dep = idx.size();
    const std::uint64_t patterns = dep == 0 ? 1 : (std::uint64_t{1} << (dep - 1));
    for (std::uint64_t m = 0; m < patterns; ++m) {
        Index merged;
        for (std::size_t k = 0; k < dep; ++k) {
            if (k > 0 && ((m >> (k - 1)) & 1))
                merged.back() += idx[k];
            else
                merged.push_back(idx[k]);
        }
        out.push_back(std::move(merged));
    }
    return out;
}

inline bool admissible(const Index& idx) {
    if (idx.empty()) return false;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] < 1) return false;
    return idx.back() >= 2;
}

/// Duality involution via the run-length encoding
/// ({1}^{a1-1}, b1+1, ..., {1}^{am-1}, bm+1)  ->  ({1}^{bm-1}, am+1, ..., {1}^{b1-1}, a1+1).
inline Index dual_index(const Index& idx) {
    if (!admissible(idx)) throw std::invalid_argument("dual_index: index not admissible");
    std::vector<std::pair<std::int64_t, std::int64_t>> runs;  // (a_i, b_i)
    std::size_t pos = 0;
    while (pos < idx.size()) {
        std::int64_t a = 1;
        while (idx[pos] == 1) {
            ++a;
            ++pos;
        }
        runs.emplace_back(a, idx[pos] - 1);
        ++pos;
    }
    Index out;
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
        for (std::int64_t i = 0; i < it->second - 1; ++i) out.push_back(1);
        out.push_back(it->first + 1);
    }
    return out;
}

/// Over all admissible compositions of k into r parts, expands the row shape
/// and tallies how often each collapsed index occurs. The count depends only
/// on the depth and must equal C(k-i-1, r-i); returns depth -> count after
/// checking that uniformity.
inline std::map<int, BigInt> sum_formula_census(long k, long r) {
    if (!(k > r && r >= 1)) throw std::invalid_argument("sum_formula_census: need k > r >= 1");
    std::map<Index, BigInt> occurrences;

    std::vector<std::int64_t> comp(r);
    std::function<void(long, long)> gen = [&](long pos, long rest) {
        if (pos == r - 1) {
            if (rest < 2) return;
            comp[pos] = rest;
            const std::uint64_t patterns = std::uint64_t{1} << (r - 1);
            for (std::uint64_t m = 0; m < patterns; ++m) {
                Index merged;
                for (long j = 0; j < r; ++j) {
                    if (j > 0 && ((m >> (j - 1)) & 1))
                        merged.back() += comp[j];
                    else
                        merged.push_back(comp[j]);
                }
                occurrences[merged] += 1;
            }
            return;
        }
        for (long v = 1; v <= rest - (r - 1 - pos) - 1; ++v) {
            comp[pos] = v;
            gen(pos + 1, rest - v);
        }
    };
    gen(0, k);

    std::map<int, BigInt> by_depth;
    for (const auto& [idx, count] : occurrences) {
        const int depth = static_cast<int>(idx.size());
        const BigInt expected = binomial(k - depth - 1, r - depth);
        if (count != expected)
            throw std::runtime_error("sum_formula_census: count mismatch at depth " +
                                     std::to_string(depth));
        by_depth[depth] = count;
    }
    return by_depth;
}

}  // namespace schurzeta
