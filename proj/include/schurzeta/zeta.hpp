#pragma once

#include "schurzeta/rational.hpp"
#include "schurzeta/shape.hpp"
#include "schurzeta/tableau.hpp"
#include "schurzeta/vartab.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace schurzeta {

/// Exact arithmetic: big rationals, integer exponents only.
struct ExactMode {
    using scalar = Rational;
    using exponent = std::int64_t;

    static scalar zero() { return Rational(0); }
    static scalar one() { return Rational(1); }

    /// (num/den)^(-s)
    static scalar weight(long num, long den, exponent s) {
        return pow_rational(Rational(num, den), -s);
    }
};

/// Floating arithmetic: complex doubles, complex exponents.
struct FloatMode {
    using scalar = std::complex<double>;
    using exponent = std::complex<double>;

    static scalar zero() { return {0.0, 0.0}; }
    static scalar one() { return {1.0, 0.0}; }

    static scalar weight(long num, long den, exponent s) {
        const double base = static_cast<double>(num) / static_cast<double>(den);
        return std::exp(-s * std::log(base));
    }
};

/// zeta^N(k_1,...,k_r) = sum over lower < m_1 < ... < m_r <= N of prod m_i^{-k_i}.
/// Star variant uses <= between the summation variables. Prefix-sum recurrence,
/// O(r N) scalar operations; the empty index gives 1.
template <typename Mode>
typename Mode::scalar truncated_mzv(const std::vector<typename Mode::exponent>& idx, long N,
                                    bool star = false, long lower = 0) {
    const int r = static_cast<int>(idx.size());
    std::vector<typename Mode::scalar> acc(r + 1, Mode::zero());
    acc[0] = Mode::one();
    for (long m = lower + 1; m <= N; ++m) {
        if (star) {
            for (int j = 1; j <= r; ++j) acc[j] += acc[j - 1] * Mode::weight(m, 1, idx[j - 1]);
        } else {
            for (int j = r; j >= 1; --j) acc[j] += acc[j - 1] * Mode::weight(m, 1, idx[j - 1]);
        }
    }
    return acc[r];
}

inline Rational truncated_mzv_exact(const std::vector<std::int64_t>& idx, long N, bool star = false,
                                    long lower = 0) {
    return truncated_mzv<ExactMode>(idx, N, star, lower);
}

/// Schur-type zeta via tableau summation. For marked families N truncates the
/// entry values; for SP/SO it is the intrinsic alphabet cap. Exponents are
/// read per box; the empty shape gives 1.
template <typename Mode>
typename Mode::scalar schur_zeta(Family family, const PositionedShape& shape,
                                 const std::vector<typename Mode::exponent>& exponents, int N) {
    if (exponents.size() != shape.size())
        throw std::invalid_argument("schur_zeta: exponents do not cover the shape");
    const TableauKind kind{family, N};
    typename Mode::scalar total = Mode::zero();
    enumerate_tableaux(kind, shape, [&](const Tableau& t) {
        typename Mode::scalar w = Mode::one();
        for (std::size_t i = 0; i < t.size(); ++i) {
            const auto [num, den] = entry_weight_base(t[i]);
            w *= Mode::weight(num, den, exponents[i]);
        }
        total += w;
    });
    return total;
}

inline Rational schur_zeta_exact(Family family, const PositionedShape& shape, const VarTableau& vars,
                                 int N) {
    return schur_zeta<ExactMode>(family, shape, vars.integer_exponents(shape), N);
}

inline std::complex<double> schur_zeta_float(Family family, const PositionedShape& shape,
                                             const VarTableau& vars, int N) {
    return schur_zeta<FloatMode>(family, shape, vars.complex_exponents(shape), N);
}

enum class Domain { W_Q, W_QH };

/// Convergence-domain membership for shifted shapes.
/// W_Q:  Re >= 1 off the corners, Re > 1 on the corners.
/// W_QH: Re >= 1 off H(lambda), Re > 1 on H(lambda), where H collects the
/// boxes whose content equals some lambda_i - i.
inline bool in_domain(const std::vector<int>& lambda, const VarTableau& vars, Domain which) {
    const PositionedShape shape = PositionedShape::shifted(lambda);
    std::vector<Box> critical;
    if (which == Domain::W_Q) {
        critical = shape.corners();
    } else {
        std::set<int> ends;
        for (std::size_t i = 0; i < lambda.size(); ++i)
            ends.insert(lambda[i] - static_cast<int>(i) - 1);
        for (const Box& b : shape.boxes())
            if (ends.count(b.content())) critical.push_back(b);
    }
    for (const Box& b : shape.boxes()) {
        const double re = vars.at(b).as_complex().real();
        const bool crit = std::find(critical.begin(), critical.end(), b) != critical.end();
        if (crit ? !(re > 1.0) : !(re >= 1.0)) return false;
    }
    return true;
}

struct GridPoint {
    long N;
    std::complex<double> value;
    double delta;  // |value - previous value|; 0 for the first point
};

/// Evaluates a truncated series on an increasing N-grid and reports the
/// successive differences. Tolerance policy is the caller's business.
inline std::vector<GridPoint> approx_infinite(const std::function<std::complex<double>(long)>& eval,
                                              const std::vector<long>& grid) {
    std::vector<GridPoint> out;
    for (long N : grid) {
        const std::complex<double> v = eval(N);
        const double delta = out.empty() ? 0.0 : std::abs(v - out.back().value);
        out.push_back(GridPoint{N, v, delta});
    }
    return out;
}

}  // namespace schurzeta
