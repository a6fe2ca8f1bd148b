#pragma once

#include "schurzeta/expansion.hpp"
#include "schurzeta/identities.hpp"
#include "schurzeta/pfaffian.hpp"
#include "schurzeta/strip.hpp"
#include "schurzeta/tableau.hpp"
#include "schurzeta/zeta.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurzeta {

/// Sparse polynomial with big-integer coefficients. Exponent vectors are
/// stored with trailing zeros trimmed, so equality does not depend on a
/// nominal variable count. Zero coefficients are never stored.
class Poly {
public:
    using Exponents = std::vector<int>;

    Poly() = default;
    Poly(int c) { add_term({}, BigInt(c)); }  // ring literal, also used by pfaffian
    explicit Poly(const BigInt& c) { add_term({}, c); }

    static Poly monomial(Exponents exps, BigInt c = BigInt(1)) {
        Poly p;
        p.add_term(std::move(exps), c);
        return p;
    }

    /// Highest variable index appearing, plus one.
    int nvars() const { return nvars_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const Poly& other) const { return terms_ == other.terms_; }

    Poly& operator+=(const Poly& other) {
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& other) {
        for (const auto& [e, c] : other.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly() - a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }
    Poly& operator*=(const Poly& other) { return *this = *this * other; }

    /// Substitute variable i by values[i].
    Rational evaluate(const std::vector<Rational>& values) const {
        Rational total(0);
        for (const auto& [e, c] : terms_) {
            Rational term(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) term *= pow_rational(values.at(i), e[i]);
            total += term;
        }
        return total;
    }

private:
    void add_term(Exponents e, const BigInt& c) {
        if (c == 0) return;
        while (!e.empty() && e.back() == 0) e.pop_back();
        nvars_ = std::max(nvars_, static_cast<int>(e.size()));
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int nvars_ = 0;
    std::map<Exponents, BigInt> terms_;
};

/// Monomial quasi-symmetric polynomial M_gamma in t_1..t_N (strict chains);
/// depth beyond N gives the zero polynomial.
inline Poly monomial_M(const std::vector<int>& gamma, int N) {
    for (int g : gamma)
        if (g < 1) throw std::invalid_argument("monomial_M: composition parts must be positive");
    Poly out;
    const int n = static_cast<int>(gamma.size());
    std::vector<int> m(n);
    std::function<void(int, int)> rec = [&](int pos, int low) {
        if (pos == n) {
            Poly::Exponents e(N, 0);
            for (int i = 0; i < n; ++i) e[m[i] - 1] += gamma[i];
            out += Poly::monomial(std::move(e));
            return;
        }
        for (int v = low; v <= N; ++v) {
            m[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);
    return out;
}

/// Essential quasi-symmetric polynomial E_gamma (weak chains).
inline Poly essential_E(const std::vector<int>& gamma, int N) {
    for (int g : gamma)
        if (g < 1) throw std::invalid_argument("essential_E: composition parts must be positive");
    Poly out;
    const int n = static_cast<int>(gamma.size());
    std::vector<int> m(n);
    std::function<void(int, int)> rec = [&](int pos, int low) {
        if (pos == n) {
            Poly::Exponents e(N, 0);
            for (int i = 0; i < n; ++i) e[m[i] - 1] += gamma[i];
            out += Poly::monomial(std::move(e));
            return;
        }
        for (int v = low; v <= N; ++v) {
            m[pos] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, 1);
    return out;
}

/// Schur-type quasi-symmetric polynomial: sum over tableaux of
/// prod t_{|entry|}^{s_box}. Marked families live in t_1..t_N; sp/so use the
/// doubled family (t_1..t_N, u_1..u_N), barred entries contributing u so the
/// object stays a polynomial; infinity contributes nothing. Exponents must be
/// nonnegative integers.
inline Poly schur_qsym(Family family, const PositionedShape& shape,
                       const std::vector<std::int64_t>& exponents, int N) {
    if (exponents.size() != shape.size())
        throw std::invalid_argument("schur_qsym: exponents do not cover the shape");
    for (const std::int64_t s : exponents)
        if (s < 0) throw std::invalid_argument("schur_qsym: negative exponent");
    const bool doubled = family == Family::SP || family == Family::SO;
    const int nvars = doubled ? 2 * N : N;
    Poly out;
    enumerate_tableaux(TableauKind{family, N}, shape, [&](const Tableau& t) {
        Poly::Exponents e(nvars, 0);
        for (std::size_t i = 0; i < t.size(); ++i) {
            switch (t[i].tag) {
                case EntryTag::Plain:
                case EntryTag::Primed: e[t[i].value - 1] += static_cast<int>(exponents[i]); break;
                case EntryTag::Barred: e[N + t[i].value - 1] += static_cast<int>(exponents[i]); break;
                case EntryTag::Inf: break;
            }
        }
        out += Poly::monomial(std::move(e));
    });
    return out;
}

/// The evaluation e sending t_i -> 1/i, and u_i -> i for doubled polynomials
/// whose t-arity is N.
inline Rational specialize_e(const Poly& p, int N) {
    std::vector<Rational> values;
    for (int i = 1; i <= N; ++i) values.emplace_back(1, i);
    for (int i = 1; static_cast<int>(values.size()) < p.nvars(); ++i) values.emplace_back(i);
    return p.evaluate(values);
}

// ---------------------------------------------------------------------------
// Polynomial-level identity checks (strictly stronger than evaluation checks)
// ---------------------------------------------------------------------------

inline Poly qsym_shape_diag(Family family, const PositionedShape& shape,
                            const std::vector<std::int64_t>& a, int a_offset, int N) {
    std::vector<std::int64_t> exps;
    for (const Box& b : shape.boxes()) exps.push_back(a.at(b.content() + a_offset));
    return schur_qsym(family, shape, exps, N);
}

/// S^Q_lambda = pf(S^Q two-row matrix) as an exact polynomial identity.
inline bool qsym_q_pfaffian_holds(std::vector<int> lambda, const std::vector<std::int64_t>& a, int N) {
    const PositionedShape shape = PositionedShape::shifted(lambda);
    const Poly lhs = qsym_shape_diag(Family::QSST, shape, a, 0, N);
    if (lambda.size() % 2 == 1) lambda.push_back(0);
    const int r = static_cast<int>(lambda.size());
    Matrix<Poly> m(r, std::vector<Poly>(r, Poly()));
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            if (lambda[i] == 0 && lambda[j] == 0) {
                m[i][j] = Poly(1);
                continue;
            }
            std::vector<int> pair{lambda[i]};
            if (lambda[j] > 0) pair.push_back(lambda[j]);
            m[i][j] = qsym_shape_diag(Family::QSST, PositionedShape::shifted(pair), a, 0, N);
        }
    return lhs == pfaffian(m);
}

/// Skew version: S^Q_{lambda/mu} = pf [[M, H],[0,0]] as polynomials, with the
/// same reversed-mu border block as the zeta-level check.
inline bool qsym_skew_pfaffian_holds(std::vector<int> lambda, std::vector<int> mu,
                                     const std::vector<std::int64_t>& a, int N) {
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    const Poly lhs = qsym_shape_diag(Family::QSST, PositionedShape::shifted(lambda, mu), a, 0, N);

    if ((lambda.size() + mu.size()) % 2 == 1) lambda.push_back(0);
    const int r = static_cast<int>(lambda.size());
    const int s = static_cast<int>(mu.size());
    const auto two_row = [&](int p, int q) {
        if (p == 0 && q == 0) return Poly(1);
        std::vector<int> pair{p};
        if (q > 0) pair.push_back(q);
        return qsym_shape_diag(Family::QSST, PositionedShape::shifted(pair), a, 0, N);
    };
    const auto row = [&](int length, int first_content) {
        if (length < 0) return Poly(0);
        if (length == 0) return Poly(1);
        std::vector<Box> boxes;
        for (int m = 0; m < length; ++m) boxes.push_back(Box{1, 1 + first_content + m});
        return qsym_shape_diag(Family::QSST, PositionedShape{boxes}, a, 0, N);
    };
    Matrix<Poly> m(r + s, std::vector<Poly>(r + s, Poly(0)));
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) m[i][j] = two_row(lambda[i], lambda[j]);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) {
            const int inner = mu[s - 1 - j];
            m[i][r + j] = row(lambda[i] - inner, inner);
        }
    return lhs == pfaffian(m);
}

/// Outside-decomposition version of the Q-type pfaffian, polynomial level.
inline bool qsym_outside_pfaffian_holds(const OutsideDecomposition& dec,
                                        const std::vector<std::int64_t>& a, int N) {
    const Poly lhs = qsym_shape_diag(Family::QSST, dec.parent(), a, 0, N);
    const Poly rhs = outside_pfaffian_rhs<Poly>(
        dec, [&](const PositionedShape& s) { return qsym_shape_diag(Family::QSST, s, a, 0, N); });
    return lhs == rhs;
}

/// det(S^{sp/so} splice matrix) = S^{sp/so} of the parent, polynomial level.
inline bool qsym_spso_determinant_holds(Family family, const OutsideDecomposition& dec,
                                        const std::vector<std::int64_t>& a, int N) {
    int min_content = 0;
    for (const Box& b : dec.parent().boxes()) min_content = std::min(min_content, b.content());
    const int offset = -min_content;
    const Poly lhs = qsym_shape_diag(family, dec.parent(), a, offset, N);

    const int r = static_cast<int>(dec.strips().size());
    Matrix<Poly> mat(r, std::vector<Poly>(r, Poly()));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) {
                mat[i][j] = qsym_shape_diag(family, dec.strips()[i].shape(), a, offset, N);
                continue;
            }
            const SpliceResult res = hash_strips(dec.strips()[i], dec.strips()[j], dec);
            if (!res.defined()) continue;  // zero entry, as in the zeta-level check
            mat[i][j] = res.kind == SpliceResult::Kind::Empty
                            ? Poly(1)
                            : qsym_shape_diag(family, res.shape(), a, offset, N);
        }
    return lhs == determinant_ring(mat);
}

}  // namespace schurzeta
