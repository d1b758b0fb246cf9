#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nholo/arith.hpp"
#include "nholo/qexpansion.hpp"
#include "nholo/rational.hpp"

namespace nholo {

/// Holomorphic modular form of level SL2(Z), represented by its q-expansion.
struct HolomorphicForm {
    int weight = 0;
    QExpansion series;
    bool is_cusp = false;

    HolomorphicForm(int w, QExpansion s)
        : weight(w), series(std::move(s)), is_cusp(series.coeff(0).is_zero()) {}
};

/// Weights k with a one-dimensional cusp space; the only cusp eigenforms
/// this library constructs. Weight 24 is deliberately absent (dim S_24 = 2,
/// irrational Hecke eigenvalues).
inline constexpr std::array<int, 6> one_dimensional_cusp_weights{12, 16, 18, 20, 22, 26};

inline bool has_unique_cusp_eigenform(int k) {
    for (int w : one_dimensional_cusp_weights) {
        if (w == k) return true;
    }
    return false;
}

/// Eisenstein series E_k = 1 - (2k/B_k) sum_{n>=1} sigma_{k-1}(n) q^n,
/// normalized to constant term 1. Requires even k >= 4.
inline HolomorphicForm eisenstein(int k, std::size_t precision) {
    if (k < 4 || k % 2 != 0) {
        throw std::domain_error("eisenstein: weight must be even and >= 4, got " +
                                std::to_string(k));
    }
    const Rational factor = Rational(-2 * static_cast<long>(k)) / bernoulli(k);
    std::vector<Rational> c(precision < 1 ? 1 : precision);
    c[0] = 1;
    for (std::size_t n = 1; n < c.size(); ++n) {
        c[n] = factor * Rational(sigma(static_cast<long>(n), k - 1));
    }
    return HolomorphicForm(k, QExpansion(std::move(c)));
}

/// The discriminant cusp form Delta = (E_4^3 - E_6^2) / 1728.
inline HolomorphicForm delta12(std::size_t precision) {
    if (precision < 2) {
        throw precision_error("delta12: needs precision >= 2 to carry the q coefficient");
    }
    const QExpansion e4 = eisenstein(4, precision).series;
    const QExpansion e6 = eisenstein(6, precision).series;
    QExpansion series = Rational(1, 1728) * (e4 * e4 * e4 - e6 * e6);
    return HolomorphicForm(12, std::move(series));
}

/// The unique normalized cusp eigenform Delta_k of weight k for
/// k in {12, 16, 18, 20, 22, 26}, built as Delta * E_{k-12} and scaled to
/// q-coefficient 1. Since dim S_k = 1, any nonzero cusp form of weight k is
/// automatically the eigenform.
inline HolomorphicForm cusp_eigenform(int k, std::size_t precision) {
    if (!has_unique_cusp_eigenform(k)) {
        throw std::domain_error("cusp_eigenform: weight " + std::to_string(k) +
                                " has no unique normalized cusp form here (weight 24 "
                                "is excluded: its eigenvalues are irrational)");
    }
    HolomorphicForm delta = delta12(precision);
    if (k == 12) return delta;
    QExpansion series = delta.series * eisenstein(k - 12, precision).series;
    series = (Rational(1) / series.coeff(1)) * series;
    return HolomorphicForm(k, std::move(series));
}

}  // namespace nholo
