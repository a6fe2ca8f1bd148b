#pragma once

#include "schurzeta/expansion.hpp"
#include "schurzeta/pfaffian.hpp"
#include "schurzeta/strip.hpp"
#include "schurzeta/zeta.hpp"

#include <complex>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace schurzeta {

struct Residual {
    long N;
    double delta;
};

struct CheckReport {
    std::string id;
    std::map<std::string, std::string> params;
    std::string mode;  // "exact" | "numeric" | "exact+numeric"
    std::string lhs, rhs;
    std::vector<Residual> residuals;
    bool pass = false;
    std::string note;
};

/// Residual policy for numeric checks: non-increasing deltas over the grid
/// and the last residual below the configured bound.
struct NumericPolicy {
    std::vector<long> grid{500, 1000, 2000};
    double bound = 0.05;
};

namespace detail {

inline std::string fmt_params(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

inline std::string fmt_params64(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

inline bool apply_policy(CheckReport& report, const NumericPolicy& policy,
                         const std::function<double(long)>& residual_at) {
    bool monotone = true;
    double prev = 0.0;
    for (std::size_t g = 0; g < policy.grid.size(); ++g) {
        const double d = residual_at(policy.grid[g]);
        report.residuals.push_back(Residual{policy.grid[g], d});
        if (g > 0 && d > prev) monotone = false;
        prev = d;
    }
    const bool small = !report.residuals.empty() && report.residuals.back().delta <= policy.bound;
    return monotone && small;
}

}  // namespace detail

/// Evaluates a Schur P/Q zeta through its MZV expansion; exact at every
/// finite truncation, which is what the cross-oracle tests lean on.
template <typename Mode>
typename Mode::scalar eval_by_expansion(Family family, const PositionedShape& shape,
                                        const std::vector<std::int64_t>& exponents, long N) {
    typename Mode::scalar total = Mode::zero();
    for (const ExpansionTerm& t : expand_mzv(family, shape)) {
        const Index idx = term_index(t, exponents);
        std::vector<typename Mode::exponent> conv(idx.begin(), idx.end());
        typename Mode::scalar c;
        if constexpr (std::is_same_v<Mode, ExactMode>)
            c = Rational(t.coeff);
        else
            c = typename Mode::scalar(static_cast<double>(t.coeff));
        total += c * truncated_mzv<Mode>(conv, N);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Pfaffian expression of the Schur Q-multiple zeta functions (two-row entries)
// ---------------------------------------------------------------------------

/// zeta^{Q,N} over the two-row shifted shape SD((p,q)) with the variable
/// tableau whose top row carries vars_top and bottom row vars_bottom
/// (positionally). A zero-length row contributes nothing; (p,q)=(0,0) is the
/// empty shape with value 1.
inline Rational q_two_row_zeta(int p, int q, const std::vector<std::int64_t>& vars_top,
                               const std::vector<std::int64_t>& vars_bottom, int N) {
    if (p == 0 && q == 0) return Rational(1);
    if (static_cast<int>(vars_top.size()) != p || static_cast<int>(vars_bottom.size()) != q)
        throw std::invalid_argument("q_two_row_zeta: variable rows do not match the parts");
    std::vector<int> lambda;
    lambda.push_back(p);
    if (q > 0) lambda.push_back(q);
    const PositionedShape shape = PositionedShape::shifted(lambda);
    std::vector<std::int64_t> exps;
    for (const Box& b : shape.boxes())
        exps.push_back(b.row == 1 ? vars_top[b.col - 1] : vars_bottom[b.col - 2]);
    return schur_zeta<ExactMode>(Family::QSST, shape, exps, N);
}

/// Row i of a diag-constant assignment on SD(lambda): contents 0..lambda_i-1.
inline std::vector<std::int64_t> diag_row_vars(const std::vector<std::int64_t>& a, int len) {
    if (static_cast<int>(a.size()) < len)
        throw std::invalid_argument("diag-constant vars do not reach content " + std::to_string(len - 1));
    return std::vector<std::int64_t>(a.begin(), a.begin() + len);
}

/// Entry matrix of the Q-pfaffian identity: a_{ij} = zeta^Q_{(lambda_i,lambda_j)} with
/// the two-row tableau taking rows i and j of svars (svars[i][m] is the m-th
/// box of row i, i.e. s_{i,i+m}).
inline Matrix<Rational> q_pfaffian_matrix(const std::vector<int>& lambda,
                                          const std::vector<std::vector<std::int64_t>>& svars, int N) {
    const int r = static_cast<int>(lambda.size());
    Matrix<Rational> m(r, std::vector<Rational>(r, Rational(0)));
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            m[i][j] = q_two_row_zeta(lambda[i], lambda[j], svars[i], svars[j], N);
    return m;
}

/// Q-pfaffian identity: zeta^{Q,N}_lambda(s) = pf(M_lambda) for diag-constant
/// variables; exact at every finite truncation. lambda is padded with a
/// trailing zero part when its length is odd.
inline CheckReport verify_q_pfaffian(std::vector<int> lambda, const std::vector<std::int64_t>& a,
                                     int N) {
    CheckReport report;
    report.id = "q_pfaffian";
    report.params = {{"lambda", detail::fmt_params(lambda)},
                     {"diag", detail::fmt_params64(a)},
                     {"N", std::to_string(N)}};
    report.mode = "exact";

    const PositionedShape shape = PositionedShape::shifted(lambda);
    const Rational lhs = schur_zeta<ExactMode>(Family::QSST, shape,
                                               VarTableau::diag_row(a).integer_exponents(shape), N);

    if (lambda.size() % 2 == 1) lambda.push_back(0);
    std::vector<std::vector<std::int64_t>> svars;
    for (int part : lambda) svars.push_back(diag_row_vars(a, part));
    const Rational rhs = pfaffian(q_pfaffian_matrix(lambda, svars, N));

    report.lhs = to_string(lhs);
    report.rhs = to_string(rhs);
    report.pass = lhs == rhs;
    return report;
}

// ---------------------------------------------------------------------------
// Diagonal-permutation sums
// ---------------------------------------------------------------------------

/// Sum over all per-diagonal permutations of the variables of both sides of
/// the pfaffian identity. The exact comparison is attempted at the given N;
/// the numeric verdict follows the residual policy. The report records which
/// of the two held ("exact holds" is an empirical observation, not asserted).
inline CheckReport verify_diag_sum(const std::vector<int>& lambda,
                                   const std::map<std::pair<int, int>, std::int64_t>& svars, int N,
                                   const NumericPolicy& policy = {}) {
    CheckReport report;
    report.id = "diag_sum";
    report.params = {{"lambda", detail::fmt_params(lambda)}, {"N", std::to_string(N)}};

    {
        std::map<std::pair<int, int>, VarValue> as_values;
        for (const auto& [box, v] : svars) as_values[box] = VarValue(v);
        if (!in_domain(lambda, VarTableau::by_box(std::move(as_values)), Domain::W_QH))
            throw std::domain_error("verify_diag_sum: variables outside W_{lambda,H}^Q");
    }

    const PositionedShape shape = PositionedShape::shifted(lambda);
    std::map<int, std::vector<Box>> diagonals;
    for (const Box& b : shape.boxes()) diagonals[b.content()].push_back(b);

    // All products of per-diagonal permutations, as box -> source box maps.
    std::vector<std::map<std::pair<int, int>, std::pair<int, int>>> perms{{}};
    for (auto& [content, boxes] : diagonals) {
        std::vector<int> order(boxes.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::vector<std::map<std::pair<int, int>, std::pair<int, int>>> next;
        do {
            for (const auto& base : perms) {
                auto m = base;
                for (std::size_t i = 0; i < boxes.size(); ++i)
                    m[{boxes[i].row, boxes[i].col}] = {boxes[order[i]].row, boxes[order[i]].col};
                next.push_back(std::move(m));
            }
        } while (std::next_permutation(order.begin(), order.end()));
        perms = std::move(next);
    }

    const auto vars_for = [&](const std::map<std::pair<int, int>, std::pair<int, int>>& perm) {
        std::map<std::pair<int, int>, std::int64_t> out;
        for (const auto& [dst, src] : perm) out[dst] = svars.at(src);
        return out;
    };

    const auto padded = [&] {
        auto l = lambda;
        if (l.size() % 2 == 1) l.push_back(0);
        return l;
    }();

    const auto svar_rows = [&](const std::map<std::pair<int, int>, std::int64_t>& vars) {
        std::vector<std::vector<std::int64_t>> rows;
        for (std::size_t i = 0; i < padded.size(); ++i) {
            std::vector<std::int64_t> row;
            for (int m = 0; m < padded[i]; ++m)
                row.push_back(vars.at({static_cast<int>(i) + 1, static_cast<int>(i) + 1 + m}));
            rows.push_back(std::move(row));
        }
        return rows;
    };

    // Exact comparison by enumeration at the given N.
    Rational lhs(0), rhs(0);
    for (const auto& perm : perms) {
        const auto vars = vars_for(perm);
        std::vector<std::int64_t> exps;
        for (const Box& b : shape.boxes()) exps.push_back(vars.at({b.row, b.col}));
        lhs += schur_zeta<ExactMode>(Family::QSST, shape, exps, N);
        rhs += pfaffian(q_pfaffian_matrix(padded, svar_rows(vars), N));
    }
    report.lhs = to_string(lhs);
    report.rhs = to_string(rhs);
    const bool exact_holds = lhs == rhs;

    // Numeric grid through the (exact) MZV regrouping, so large N stays cheap.
    const auto two_row_float = [&](int p, int q, const std::vector<std::int64_t>& top,
                                   const std::vector<std::int64_t>& bottom, long n) {
        if (p == 0 && q == 0) return std::complex<double>(1.0, 0.0);
        std::vector<int> l{p};
        if (q > 0) l.push_back(q);
        const PositionedShape two = PositionedShape::shifted(l);
        std::vector<std::int64_t> exps;
        for (const Box& b : two.boxes())
            exps.push_back(b.row == 1 ? top[b.col - 1] : bottom[b.col - 2]);
        return eval_by_expansion<FloatMode>(Family::QSST, two, exps, n);
    };
    const bool numeric_ok = detail::apply_policy(report, policy, [&](long n) {
        std::complex<double> l(0), r(0);
        for (const auto& perm : perms) {
            const auto vars = vars_for(perm);
            std::vector<std::int64_t> exps;
            for (const Box& b : shape.boxes()) exps.push_back(vars.at({b.row, b.col}));
            l += eval_by_expansion<FloatMode>(Family::QSST, shape, exps, n);
            const auto rows = svar_rows(vars);
            const int rr = static_cast<int>(padded.size());
            Matrix<std::complex<double>> m(rr, std::vector<std::complex<double>>(rr, {0, 0}));
            for (int i = 0; i < rr; ++i)
                for (int j = i + 1; j < rr; ++j)
                    m[i][j] = two_row_float(padded[i], padded[j], rows[i], rows[j], n);
            r += pfaffian(m);
        }
        return std::abs(l - r);
    });

    report.mode = "exact+numeric";
    report.note = exact_holds ? "exact equality held at N=" + std::to_string(N)
                              : "exact equality did not hold; numeric policy consulted";
    report.pass = exact_holds || numeric_ok;
    return report;
}

// ---------------------------------------------------------------------------
// Skew Q-pfaffian
// ---------------------------------------------------------------------------

/// zeta^Q over a single row of given length whose leftmost box has the given
/// content, with diag-constant vars; length 0 -> 1, negative -> 0.
inline Rational q_row_zeta(int length, int first_content, const std::vector<std::int64_t>& a, int N) {
    if (length < 0) return Rational(0);
    if (length == 0) return Rational(1);
    std::vector<Box> boxes;
    for (int m = 0; m < length; ++m) boxes.push_back(Box{1, 1 + first_content + m});
    const PositionedShape row{boxes};
    std::vector<std::int64_t> exps;
    for (const Box& b : row.boxes()) exps.push_back(a.at(b.content()));
    return schur_zeta<ExactMode>(Family::QSST, row, exps, N);
}

/// Skew Q-pfaffian identity: zeta^{Q,N}_{lambda/mu}(s) = pf [[M_lambda, H],[0,0]]
/// with H's columns running over mu in reverse (b_{ij} is the single-row
/// zeta of length lambda_i - mu_{s-j+1} starting at content mu_{s-j+1}).
inline CheckReport verify_skew_pfaffian(std::vector<int> lambda, std::vector<int> mu,
                                        const std::vector<std::int64_t>& a, int N) {
    CheckReport report;
    report.id = "skew_pfaffian";
    report.params = {{"lambda", detail::fmt_params(lambda)},
                     {"mu", detail::fmt_params(mu)},
                     {"diag", detail::fmt_params64(a)},
                     {"N", std::to_string(N)}};
    report.mode = "exact";

    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    const PositionedShape skew = PositionedShape::shifted(lambda, mu);
    std::vector<std::int64_t> exps;
    for (const Box& b : skew.boxes()) exps.push_back(a.at(b.content()));
    const Rational lhs = schur_zeta<ExactMode>(Family::QSST, skew, exps, N);

    if ((lambda.size() + mu.size()) % 2 == 1) lambda.push_back(0);
    const int r = static_cast<int>(lambda.size());
    const int s = static_cast<int>(mu.size());
    Matrix<Rational> m(r + s, std::vector<Rational>(r + s, Rational(0)));
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            m[i][j] = q_two_row_zeta(lambda[i], lambda[j], diag_row_vars(a, lambda[i]),
                                     diag_row_vars(a, lambda[j]), N);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) {
            const int inner = mu[s - 1 - j];
            m[i][r + j] = q_row_zeta(lambda[i] - inner, inner, a, N);
        }
    const Rational rhs = pfaffian(m);

    report.lhs = to_string(lhs);
    report.rhs = to_string(rhs);
    report.pass = lhs == rhs;
    return report;
}

// ---------------------------------------------------------------------------
// Outside-decomposition pfaffian
// ---------------------------------------------------------------------------

inline Rational q_shape_zeta_diag(const PositionedShape& shape, const std::vector<std::int64_t>& a,
                                  int N) {
    std::vector<std::int64_t> exps;
    for (const Box& b : shape.boxes()) exps.push_back(a.at(b.content()));
    return schur_zeta<ExactMode>(Family::QSST, shape, exps, N);
}

/// The pfaffian side of the outside-decomposition identity, generic over the
/// entry ring (truncated zetas or quasi-symmetric polynomials). One vertex
/// per strip plus one anchor per off-diagonal strip, ordered along the main
/// diagonal by the cell each bar reaches, anchors right after their strips,
/// an empty pad last when the count is odd. Undefined splices contribute 0.
template <typename T>
T outside_pfaffian_rhs(const OutsideDecomposition& dec,
                       const std::function<T(const PositionedShape&)>& value_of) {
    const int r = static_cast<int>(dec.strips().size());
    std::vector<Strip> bars(r);
    std::vector<int> bar_row(r);
    int off_count = 0;
    for (int i = 0; i < r; ++i) {
        const SpliceResult b = bar_strip(dec.strips()[i], dec);
        if (b.kind != SpliceResult::Kind::Shape)
            throw std::invalid_argument("outside pfaffian: strip bar undefined");
        bars[i] = *b.strip;
        bar_row[i] = bars[i].box_at_content(0).row;
        if (!dec.strips()[i].has_content(0)) ++off_count;
    }

    struct Vertex {
        int kind;  // 0 = strip, 1 = pad, 2 = anchor of strip `which`
        int which;
    };
    std::vector<int> order(r);
    for (int i = 0; i < r; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return bar_row[x] < bar_row[y]; });
    std::vector<Vertex> verts;
    for (int i : order) {
        verts.push_back({0, i});
        if (!dec.strips()[i].has_content(0)) verts.push_back({2, i});
    }
    if ((r + off_count) % 2 == 1) verts.push_back({1, -1});

    const int n = static_cast<int>(verts.size());
    Matrix<T> mat(n, std::vector<T>(n, T(0)));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const Vertex &vx = verts[x], &vy = verts[y];
            if (vx.kind == 0 && vy.kind == 0) {
                mat[x][y] = value_of(juxtapose(bars[vx.which], bars[vy.which]));
            } else if (vx.kind == 0 && vy.kind == 1) {
                mat[x][y] = value_of(bars[vx.which].shape());
            } else if (vx.kind == 0 && vy.kind == 2) {
                const auto res = hash_strips(dec.strips()[vx.which], dec.strips()[vy.which], dec);
                if (res.kind == SpliceResult::Kind::Shape)
                    mat[x][y] = value_of(res.shape());
                else if (res.kind == SpliceResult::Kind::Empty)
                    mat[x][y] = T(1);
            } else if (vx.kind == 2 && vy.kind == 0) {
                const auto res = hash_strips(dec.strips()[vy.which], dec.strips()[vx.which], dec);
                if (res.kind == SpliceResult::Kind::Shape)
                    mat[x][y] = T(0) - value_of(res.shape());
                else if (res.kind == SpliceResult::Kind::Empty)
                    mat[x][y] = T(-1);
            }
        }
    return pfaffian(mat);
}

/// Outside-decomposition identity: the Q-zeta of the parent
/// equals the pfaffian built by outside_pfaffian_rhs, exact at each N.
inline CheckReport verify_outside_pfaffian(const std::vector<int>& lambda, const std::vector<int>& mu,
                                           const OutsideDecomposition& dec,
                                           const std::vector<std::int64_t>& a, int N) {
    CheckReport report;
    report.id = "outside_pfaffian";
    report.params = {{"lambda", detail::fmt_params(lambda)},
                     {"mu", detail::fmt_params(mu)},
                     {"diag", detail::fmt_params64(a)},
                     {"N", std::to_string(N)},
                     {"strips", std::to_string(dec.strips().size())}};
    report.mode = "exact";

    const Rational lhs = q_shape_zeta_diag(dec.parent(), a, N);
    const Rational rhs = outside_pfaffian_rhs<Rational>(
        dec, [&](const PositionedShape& s) { return q_shape_zeta_diag(s, a, N); });
    report.lhs = to_string(lhs);
    report.rhs = to_string(rhs);
    report.pass = lhs == rhs;
    return report;
}

// ---------------------------------------------------------------------------
// Symplectic / orthogonal determinants
// ---------------------------------------------------------------------------

inline Rational spso_shape_zeta_diag(Family family, const PositionedShape& shape,
                                     const std::vector<std::int64_t>& a, int a_offset, int N) {
    std::vector<std::int64_t> exps;
    for (const Box& b : shape.boxes()) exps.push_back(a.at(b.content() + a_offset));
    return schur_zeta<ExactMode>(family, shape, exps, N);
}

/// det(zeta^{sp/so,N}_{theta_i # theta_j}) = zeta^{sp/so,N}_{lambda/mu} for any
/// outside decomposition; exact at each cap N. a is indexed by content + offset
/// (offset = number of negative contents of the parent).
inline CheckReport verify_spso_determinant(Family family, const std::vector<int>& lambda,
                                           const std::vector<int>& mu, const OutsideDecomposition& dec,
                                           const std::vector<std::int64_t>& a, int N) {
    if (family != Family::SP && family != Family::SO)
        throw std::invalid_argument("verify_spso_determinant: family must be sp or so");
    CheckReport report;
    report.id = family == Family::SP ? "sp_determinant" : "so_determinant";
    report.params = {{"lambda", detail::fmt_params(lambda)},
                     {"mu", detail::fmt_params(mu)},
                     {"diag", detail::fmt_params64(a)},
                     {"N", std::to_string(N)}};
    report.mode = "exact";

    int min_content = 0;
    for (const Box& b : dec.parent().boxes()) min_content = std::min(min_content, b.content());
    const int offset = -min_content;

    const Rational lhs = spso_shape_zeta_diag(family, dec.parent(), a, offset, N);

    const int r = static_cast<int>(dec.strips().size());
    Matrix<Rational> mat(r, std::vector<Rational>(r, Rational(0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) {
                mat[i][j] = spso_shape_zeta_diag(family, dec.strips()[i].shape(), a, offset, N);
                continue;
            }
            // Undefined splices carry the zero of the negative-length-row
            // convention, as in the classical Jacobi-Trudi border cases.
            const SpliceResult res = hash_strips(dec.strips()[i], dec.strips()[j], dec);
            if (!res.defined()) continue;
            mat[i][j] = res.kind == SpliceResult::Kind::Empty
                            ? Rational(1)
                            : spso_shape_zeta_diag(family, res.shape(), a, offset, N);
        }

    const Rational rhs = determinant(mat);
    report.lhs = to_string(lhs);
    report.rhs = to_string(rhs);
    report.pass = lhs == rhs;
    return report;
}

// ---------------------------------------------------------------------------
// Decomposition into truncated multiple zeta (star) functions
// ---------------------------------------------------------------------------

namespace detail {

/// Sum over sign choices of zeta^N with merged junction i (-1 = none) and all
/// variables forced above `lower`.
inline Rational sp_signed_sum(const std::vector<std::int64_t>& s, int merged, long lower, long N,
                              bool star) {
    const int r = static_cast<int>(s.size());
    std::vector<int> free_pos;
    for (int j = 0; j < r; ++j)
        if (merged < 0 || (j != merged && j != merged + 1)) free_pos.push_back(j);
    Rational total(0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_pos.size()); ++mask) {
        std::vector<std::int64_t> idx;
        std::size_t bit = 0;
        for (int j = 0; j < r; ++j) {
            if (j == merged) {
                idx.push_back(star ? s[j + 1] - s[j] : s[j] - s[j + 1]);
                ++j;  // consumed s[j+1] as well
                continue;
            }
            const bool neg = (mask >> bit++) & 1;
            idx.push_back(neg ? -s[j] : s[j]);
        }
        total += truncated_mzv<ExactMode>(idx, N, star, lower);
    }
    return total;
}

/// Column shape: the identity is the stated one for r <= 3 (the printed
/// correction terms cover at most one merged junction).
inline Rational sp_column_rhs(const std::vector<std::int64_t>& s, long N) {
    const int r = static_cast<int>(s.size());
    if (r > 3)
        throw std::invalid_argument("sp column decomposition: identity implemented for r <= 3");
    if (r == 0) return Rational(1);
    Rational total = sp_signed_sum(s, -1, 0, N, false);
    for (int i = 0; i + 1 < r; ++i) total += sp_signed_sum(s, i, 0, N, false);
    for (int i = 1; i < r; ++i) {
        // Violating configurations: m_j = j (either bar) for j < i, m_i = i,
        // m_{i+1} = i-bar, tail strictly above i.
        Rational prefix(1);
        for (int j = 1; j < i; ++j)
            prefix *= pow_rational(Rational(j), s[j - 1]) + pow_rational(Rational(j), -s[j - 1]);
        prefix *= pow_rational(Rational(i), s[i] - s[i - 1]);
        const std::vector<std::int64_t> tail(s.begin() + i + 1, s.end());
        total -= prefix * sp_signed_sum(tail, -1, i, N, false);
    }
    return total;
}

/// Row shape: inclusion-exclusion over non-adjacent merged junctions, star sums.
inline Rational sp_row_rhs(const std::vector<std::int64_t>& s, long N) {
    const int r = static_cast<int>(s.size());
    if (r == 0) return Rational(1);
    Rational total(0);
    for (std::uint64_t merges = 0; merges < (std::uint64_t{1} << (r - 1)); ++merges) {
        if (merges & (merges << 1)) continue;  // no two adjacent plus signs
        int count = 0;
        for (int j = 0; j < r - 1; ++j)
            if ((merges >> j) & 1) ++count;
        // Walk the pattern: merged pair (j, j+1) contributes s_{j+1}-s_j.
        Rational sub(0);
        std::vector<int> singles;
        std::vector<std::int64_t> base;
        for (int j = 0; j < r; ++j) {
            if (j < r - 1 && ((merges >> j) & 1)) {
                base.push_back(s[j + 1] - s[j]);
                ++j;
            } else {
                base.push_back(s[j]);
                singles.push_back(static_cast<int>(base.size()) - 1);
            }
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << singles.size()); ++mask) {
            std::vector<std::int64_t> idx = base;
            for (std::size_t b = 0; b < singles.size(); ++b)
                if ((mask >> b) & 1) idx[singles[b]] = -idx[singles[b]];
            sub += truncated_mzv<ExactMode>(idx, N, /*star=*/true);
        }
        total += (count % 2 == 0) ? sub : -sub;
    }
    return total;
}

}  // namespace detail

enum class DecompositionShape { Column, Row };

/// Decomposition identities: exact relations between sp/so zetas on column
/// and row shapes and signed sums of truncated MZV / MZSV.
inline CheckReport verify_decomposition_identity(Family family, DecompositionShape shape_kind,
                                                 const std::vector<std::int64_t>& s, int N) {
    if (family != Family::SP && family != Family::SO)
        throw std::invalid_argument("verify_decomposition_identity: family must be sp or so");
    const int r = static_cast<int>(s.size());
    if (r < 1) throw std::invalid_argument("verify_decomposition_identity: r >= 1 required");

    CheckReport report;
    report.id = std::string(family == Family::SP ? "sp" : "so") + "_decomposition_" +
                (shape_kind == DecompositionShape::Column ? "column" : "row");
    report.params = {{"s", detail::fmt_params64(s)}, {"N", std::to_string(N)}};
    report.mode = "exact";

    const PositionedShape shape = shape_kind == DecompositionShape::Column
                                      ? PositionedShape::straight(std::vector<int>(r, 1))
                                      : PositionedShape::straight({r});
    std::vector<std::int64_t> exps(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i) exps[i] = s[i];
    const Rational lhs = schur_zeta<ExactMode>(family, shape, exps, N);

    Rational rhs(0);
    const auto one_family = [&](const std::vector<std::int64_t>& args) {
        return shape_kind == DecompositionShape::Column ? detail::sp_column_rhs(args, N)
                                                        : detail::sp_row_rhs(args, N);
    };
    if (family == Family::SP) {
        rhs = one_family(s);
    } else if (shape_kind == DecompositionShape::Row) {
        // A row holds at most one infinity (in its last box).
        rhs = one_family(s);
        rhs += one_family(std::vector<std::int64_t>(s.begin(), s.end() - 1));
    } else {
        // Down a column the infinity symbols stack (they form a vertical
        // strip), so every suffix of the column may consist of infinities.
        for (int R = 0; R <= r; ++R)
            rhs += one_family(std::vector<std::int64_t>(s.begin(), s.begin() + R));
    }

    report.lhs = to_string(lhs);
    report.rhs = to_string(rhs);
    report.pass = lhs == rhs;
    return report;
}

// ---------------------------------------------------------------------------
// Sum formula, qstar and related identities
// ---------------------------------------------------------------------------

/// Occurrence counts of collapsed indices over all admissible compositions of
/// k into r parts (the census behind the sum formula).
inline std::map<Index, BigInt> sum_formula_occurrences(long k, long r) {
    std::map<Index, BigInt> occ;
    std::vector<std::int64_t> comp(r);
    std::function<void(long, long)> gen = [&](long pos, long rest) {
        if (pos == r - 1) {
            if (rest < 2) return;
            comp[pos] = rest;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << (r - 1)); ++m) {
                Index merged;
                for (long j = 0; j < r; ++j) {
                    if (j > 0 && ((m >> (j - 1)) & 1))
                        merged.back() += comp[j];
                    else
                        merged.push_back(comp[j]);
                }
                occ[merged] += 1;
            }
            return;
        }
        for (long v = 1; v <= rest - r + pos; ++v) {
            comp[pos] = v;
            gen(pos + 1, rest - v);
        }
    };
    if (r >= 1 && k > r) gen(0, k);
    return occ;
}

inline double float_mzv(const Index& idx, long N, bool star = false) {
    std::vector<std::complex<double>> conv(idx.begin(), idx.end());
    return truncated_mzv<FloatMode>(conv, N, star).real();
}

/// Sum formula: exact depth census against C(k-i-1, r-i) plus the
/// numeric comparison of the composition sum with (sum_i 2^i C(k-i-1,r-i)) zeta^N(k).
inline CheckReport verify_sum_formula(long k, long r, const NumericPolicy& policy = {}) {
    CheckReport report;
    report.id = "sum_formula";
    report.params = {{"k", std::to_string(k)}, {"r", std::to_string(r)}};
    report.mode = "exact+numeric";

    bool census_ok = true;
    try {
        sum_formula_census(k, r);
    } catch (const std::exception& e) {
        census_ok = false;
        report.note = e.what();
    }

    const auto occ = sum_formula_occurrences(k, r);
    Rational factor(0);
    for (long i = 1; i <= r; ++i) factor += Rational(BigInt(1) << i) * Rational(binomial(k - i - 1, r - i));
    const double rhs_factor = static_cast<double>(factor);

    double last_lhs = 0, last_rhs = 0;
    const bool numeric_ok = detail::apply_policy(report, policy, [&](long n) {
        double lhs = 0;
        for (const auto& [idx, count] : occ)
            lhs += static_cast<double>(count) * std::pow(2.0, static_cast<double>(idx.size())) *
                   float_mzv(idx, n);
        const double rhs = rhs_factor * float_mzv({k}, n);
        last_lhs = lhs;
        last_rhs = rhs;
        return std::abs(lhs - rhs);
    });

    std::ostringstream ls, rs;
    ls.precision(12);
    rs.precision(12);
    ls << last_lhs;
    rs << last_rhs;
    report.lhs = ls.str();
    report.rhs = rs.str();
    if (census_ok && report.note.empty()) report.note = "census matched C(k-i-1, r-i)";
    report.pass = census_ok && numeric_ok;
    return report;
}

/// Row-shape Q zeta at integer exponents through the 2^dep expansion (float).
inline double q_row_value_float(const std::vector<std::int64_t>& ks, long N) {
    const PositionedShape row = PositionedShape::straight({static_cast<int>(ks.size())});
    double total = 0;
    for (const ExpansionTerm& t : expand_mzv(Family::QSST, row))
        total += static_cast<double>(t.coeff) * float_mzv(term_index(t, ks), N);
    return total;
}

/// Qstar identity: zeta^Q_{(r)}(k) = zeta*(1,{2}^{(k_1-1)/2},...,1,{2}^{(k_r-1)/2})
/// for odd entries with k_r >= 3; numeric over the grid.
inline CheckReport verify_qstar(const std::vector<std::int64_t>& ks, const NumericPolicy& policy = {}) {
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] % 2 == 0 || ks[i] < 1)
            throw std::invalid_argument("verify_qstar: entries must be positive odd");
        if (i + 1 == ks.size() && ks[i] < 3)
            throw std::invalid_argument("verify_qstar: last entry must be >= 3");
    }
    CheckReport report;
    report.id = "qstar";
    report.params = {{"k", detail::fmt_params64(ks)}};
    report.mode = "numeric";

    Index star_idx;
    for (const std::int64_t k : ks) {
        star_idx.push_back(1);
        for (std::int64_t j = 0; j < (k - 1) / 2; ++j) star_idx.push_back(2);
    }

    report.pass = detail::apply_policy(report, policy, [&](long n) {
        return std::abs(q_row_value_float(ks, n) - float_mzv(star_idx, n, /*star=*/true));
    });
    return report;
}

/// zeta^Q_{(k-2)}(1,...,1,3) = (k-1)/2 * zeta^Q_{(1)}(k) for k >= 4.
inline CheckReport verify_cor113(long k, const NumericPolicy& policy = {}) {
    if (k < 4) throw std::invalid_argument("verify_cor113: k >= 4 required");
    CheckReport report;
    report.id = "cor113";
    report.params = {{"k", std::to_string(k)}};
    report.mode = "numeric";

    std::vector<std::int64_t> ks(k - 2, 1);
    ks.back() = 3;
    report.pass = detail::apply_policy(report, policy, [&](long n) {
        const double lhs = q_row_value_float(ks, n);
        const double rhs = (static_cast<double>(k - 1) / 2.0) * 2.0 * float_mzv({k}, n);
        return std::abs(lhs - rhs);
    });
    return report;
}

/// Duality-type evaluation: zeta^Q_{(k-1)}(1,...,1,2) = (2^k - 2) zeta(k).
inline CheckReport verify_dual_cor(long k, const NumericPolicy& policy = {}) {
    if (k < 2) throw std::invalid_argument("verify_dual_cor: k >= 2 required");
    CheckReport report;
    report.id = "dual_cor";
    report.params = {{"k", std::to_string(k)}};
    report.mode = "numeric";

    std::vector<std::int64_t> ks(k - 1, 1);
    ks.back() = 2;
    report.pass = detail::apply_policy(report, policy, [&](long n) {
        const double lhs = q_row_value_float(ks, n);
        const double rhs = (std::pow(2.0, static_cast<double>(k)) - 2.0) * float_mzv({k}, n);
        return std::abs(lhs - rhs);
    });
    return report;
}

// ---------------------------------------------------------------------------
// Remark (contentrem): splice shapes are content-aware
// ---------------------------------------------------------------------------

/// Exhibits N <= maxN and integer exponents with
/// zeta^{sp,N}_{theta_2 # theta_1} != zeta^{sp,N}_{(2,1,1)} for the column
/// decomposition of (3,2), the two shapes sharing one variable display.
inline CheckReport verify_content_remark(int maxN = 4) {
    CheckReport report;
    report.id = "content_remark";
    report.params = {{"maxN", std::to_string(maxN)}};
    report.mode = "exact";

    const PositionedShape parent = PositionedShape::straight({3, 2});
    const OutsideDecomposition dec = OutsideDecomposition::by_columns(parent);
    const SpliceResult splice = hash_strips(dec.strips()[1], dec.strips()[0], dec);
    const PositionedShape spliced = splice.shape();  // contents -1,0,1,2

    const PositionedShape naive = PositionedShape::straight({2, 1, 1});

    const std::vector<std::vector<std::int64_t>> candidates = {
        {0, 0, 0, 0}, {1, 0, 0, 0}, {2, 1, 1, 0}, {1, 1, 2, 2}};
    for (int N = 1; N <= maxN; ++N) {
        for (const auto& a : candidates) {
            // a = (a_{-1}, a_0, a_1, a_2); the naive shape takes the same
            // values at the corresponding display positions.
            std::vector<std::int64_t> spliced_exps;
            for (const Box& b : spliced.boxes()) spliced_exps.push_back(a.at(b.content() + 1));
            std::vector<std::int64_t> naive_exps;
            for (const Box& b : naive.boxes()) {
                const int corresponding = b.row == 1 ? b.col : -(b.row - 2);
                naive_exps.push_back(a.at(corresponding + 1));
            }
            const Rational lhs = schur_zeta<ExactMode>(Family::SP, spliced, spliced_exps, N);
            const Rational rhs = schur_zeta<ExactMode>(Family::SP, naive, naive_exps, N);
            if (lhs != rhs) {
                report.lhs = to_string(lhs);
                report.rhs = to_string(rhs);
                report.note = "witness at N=" + std::to_string(N) + ", a=" + detail::fmt_params64(a);
                report.pass = true;
                return report;
            }
        }
    }
    report.note = "no witness found";
    report.pass = false;
    return report;
}

}  // namespace schurzeta
