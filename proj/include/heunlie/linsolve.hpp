#pragma once

// Exact linear algebra over Q(i): Gaussian elimination and decomposition of an
// operator in a finite operator basis.

#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "heunlie/exactnum.hpp"
#include "heunlie/operator.hpp"

namespace heunlie {

using Matrix = std::vector<std::vector<Complex>>;

/// Solves A·v = b (any shape). Returns a solution with free variables set to
/// zero, or nullopt if the system is inconsistent.
inline std::optional<std::vector<Complex>> solve_linear(Matrix a, std::vector<Complex> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Complex inv = a[r][c].inv();
        for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Complex f = a[i][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<Complex> v(cols);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = b[i];
    return v;
}

namespace detail {

// (kind tag, shift or order, degree) indexes one scalar coefficient of an operator.
using CoeffKey = std::tuple<int, Complex, std::size_t>;

struct CoeffKeyLess {
    bool operator()(const CoeffKey& a, const CoeffKey& b) const {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        ComplexLess less;
        if (less(std::get<1>(a), std::get<1>(b))) return true;
        if (less(std::get<1>(b), std::get<1>(a))) return false;
        return std::get<2>(a) < std::get<2>(b);
    }
};

inline std::map<CoeffKey, Complex, CoeffKeyLess> flatten(const Operator& op) {
    std::map<CoeffKey, Complex, CoeffKeyLess> out;
    for (const auto& [s, p] : op.shift_terms())
        for (std::size_t k = 0; k < p.coeffs().size(); ++k)
            if (!p.coeffs()[k].is_zero()) out[{0, s, k}] = p.coeffs()[k];
    for (const auto& [j, p] : op.diff_terms())
        for (std::size_t k = 0; k < p.coeffs().size(); ++k)
            if (!p.coeffs()[k].is_zero()) out[{1, Complex(static_cast<long>(j)), k}] = p.coeffs()[k];
    return out;
}

}  // namespace detail

/// Coefficients c with target = sum c_k basis_k, if target lies in the span.
inline std::optional<std::vector<Complex>> decompose(const Operator& target, const std::vector<Operator>& basis) {
    std::map<detail::CoeffKey, std::size_t, detail::CoeffKeyLess> rows;
    std::vector<std::map<detail::CoeffKey, Complex, detail::CoeffKeyLess>> flat;
    flat.reserve(basis.size());
    for (const auto& b : basis) flat.push_back(detail::flatten(b));
    auto tflat = detail::flatten(target);
    for (const auto& f : flat)
        for (const auto& [k, v] : f) rows.emplace(k, 0);
    for (const auto& [k, v] : tflat) rows.emplace(k, 0);
    std::size_t idx = 0;
    for (auto& [k, i] : rows) i = idx++;
    Matrix a(rows.size(), std::vector<Complex>(basis.size()));
    std::vector<Complex> rhs(rows.size());
    for (std::size_t c = 0; c < flat.size(); ++c)
        for (const auto& [k, v] : flat[c]) a[rows[k]][c] = v;
    for (const auto& [k, v] : tflat) rhs[rows[k]] = v;
    return solve_linear(std::move(a), std::move(rhs));
}

inline Operator combine(const std::vector<Complex>& coeffs, const std::vector<Operator>& basis) {
    Operator out;
    for (std::size_t k = 0; k < coeffs.size() && k < basis.size(); ++k)
        if (!coeffs[k].is_zero()) out += basis[k] * coeffs[k];
    return out;
}

}  // namespace heunlie
