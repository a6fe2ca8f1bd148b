#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace schurzeta {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

template <typename T>
void require_square(const Matrix<T>& a) {
    for (const auto& row : a)
        if (row.size() != a.size()) throw std::invalid_argument("matrix is not square");
}

inline bool pivot_larger(const std::complex<double>& a, const std::complex<double>& b) {
    return std::abs(a) > std::abs(b);
}

template <typename T>
bool pivot_larger(const T& a, const T& b) {
    // Exact types: any nonzero pivot will do.
    return b == T(0) && !(a == T(0));
}

}  // namespace detail

/// Gaussian elimination; exact over field scalars (rationals pick the first
/// nonzero pivot, floats the largest by modulus).
template <typename T>
T determinant(Matrix<T> a) {
    detail::require_square(a);
    const std::size_t n = a.size();
    T det = T(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (detail::pivot_larger(a[i][k], a[pivot][k])) pivot = i;
        if (a[pivot][k] == T(0)) return T(0);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const T f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

/// Cofactor expansion; needs only ring operations, so it also serves
/// polynomial matrices. Intended for small n.
template <typename T>
T determinant_ring(const Matrix<T>& a) {
    detail::require_square(a);
    const int n = static_cast<int>(a.size());
    std::vector<int> cols(n);
    for (int j = 0; j < n; ++j) cols[j] = j;

    std::function<T(int, std::vector<int>&)> rec = [&](int row, std::vector<int>& active) -> T {
        if (active.empty()) return T(1);
        T sum = T(0);
        for (std::size_t j = 0; j < active.size(); ++j) {
            const int col = active[j];
            std::vector<int> rest;
            rest.reserve(active.size() - 1);
            for (std::size_t l = 0; l < active.size(); ++l)
                if (l != j) rest.push_back(active[l]);
            T term = a[row][col] * rec(row + 1, rest);
            if (j % 2 == 1) sum -= term; else sum += term;
        }
        return sum;
    };
    return rec(0, cols);
}

/// Pfaffian of the strictly-upper data of an n x n matrix (n even; n = 0 gives 1),
/// by recursive first-row expansion. Ring operations only.
template <typename T>
T pfaffian(const Matrix<T>& a) {
    detail::require_square(a);
    const int n = static_cast<int>(a.size());
    if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");

    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;

    std::function<T(std::vector<int>&)> rec = [&](std::vector<int>& idx) -> T {
        if (idx.empty()) return T(1);
        T sum = T(0);
        const int v0 = idx[0];
        for (std::size_t j = 1; j < idx.size(); ++j) {
            std::vector<int> rest;
            rest.reserve(idx.size() - 2);
            for (std::size_t l = 1; l < idx.size(); ++l)
                if (l != j) rest.push_back(idx[l]);
            T term = a[v0][idx[j]] * rec(rest);
            if (j % 2 == 0) sum -= term; else sum += term;
        }
        return sum;
    };
    return rec(active);
}

/// All 1-factors (perfect matchings) of {0,...,2n-1}, each as a list of edges
/// (i,j) with i < j, lexicographically by the smallest free vertex.
inline std::vector<std::vector<std::pair<int, int>>> one_factors(int m) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (m % 2 != 0) return out;
    std::vector<int> free_v(m);
    for (int i = 0; i < m; ++i) free_v[i] = i;
    std::vector<std::pair<int, int>> current;

    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& rest) {
        if (rest.empty()) {
            out.push_back(current);
            return;
        }
        const int a = rest[0];
        for (std::size_t j = 1; j < rest.size(); ++j) {
            std::vector<int> next;
            next.reserve(rest.size() - 2);
            for (std::size_t l = 1; l < rest.size(); ++l)
                if (l != j) next.push_back(rest[l]);
            current.emplace_back(a, rest[j]);
            rec(next);
            current.pop_back();
        }
    };
    rec(free_v);
    return out;
}

/// Sign of a 1-factor: the parity of the permutation (e1.a, e1.b, e2.a, ...).
inline int one_factor_sign(const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> perm;
    perm.reserve(edges.size() * 2);
    for (const auto& [a, b] : edges) {
        perm.push_back(a);
        perm.push_back(b);
    }
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace schurzeta
