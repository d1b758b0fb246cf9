#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nholo/rational.hpp"

namespace nholo {

/// Truncated q-series with exact rational coefficients.
///
/// A value of precision N stores the coefficients of q^0 .. q^(N-1); every
/// coefficient beyond the window is unknown, not zero. Binary operations
/// truncate to the shorter operand. Instances are immutable once built.
class QExpansion {
public:
    /// Zero series of the given precision (N >= 1).
    explicit QExpansion(std::size_t precision) : c_(checked(precision)) {}

    /// Takes ownership of a coefficient vector; precision = its length.
    explicit QExpansion(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::domain_error("QExpansion: precision must be >= 1");
    }

    static QExpansion zero(std::size_t precision) { return QExpansion(precision); }

    static QExpansion one(std::size_t precision) {
        std::vector<Rational> c(checked(precision));
        c[0] = 1;
        return QExpansion(std::move(c));
    }

    /// The monomial q (zero when precision is 1).
    static QExpansion q(std::size_t precision) {
        std::vector<Rational> c(checked(precision));
        if (precision >= 2) c[1] = 1;
        return QExpansion(std::move(c));
    }

    std::size_t precision() const { return c_.size(); }

    /// Coefficient of q^m; m must be below the precision.
    const Rational& coeff(std::size_t m) const {
        if (m >= c_.size()) {
            throw precision_error("QExpansion::coeff: index " + std::to_string(m) +
                                  " beyond precision " + std::to_string(c_.size()));
        }
        return c_[m];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
    }

    /// Restriction to the first n coefficients (1 <= n <= precision).
    QExpansion truncate(std::size_t n) const {
        if (n < 1) throw std::domain_error("QExpansion::truncate: precision must be >= 1");
        if (n > c_.size()) {
            throw precision_error("QExpansion::truncate: requested " + std::to_string(n) +
                                  " coefficients, have " + std::to_string(c_.size()));
        }
        return QExpansion(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<long>(n)));
    }

    friend QExpansion operator+(const QExpansion& a, const QExpansion& b) {
        const std::size_t n = std::min(a.precision(), b.precision());
        std::vector<Rational> c(n);
        for (std::size_t m = 0; m < n; ++m) c[m] = a.c_[m] + b.c_[m];
        return QExpansion(std::move(c));
    }

    friend QExpansion operator-(const QExpansion& a, const QExpansion& b) {
        const std::size_t n = std::min(a.precision(), b.precision());
        std::vector<Rational> c(n);
        for (std::size_t m = 0; m < n; ++m) c[m] = a.c_[m] - b.c_[m];
        return QExpansion(std::move(c));
    }

    QExpansion operator-() const {
        std::vector<Rational> c(c_.size());
        for (std::size_t m = 0; m < c_.size(); ++m) c[m] = -c_[m];
        return QExpansion(std::move(c));
    }

    /// Cauchy product truncated to the shorter precision.
    friend QExpansion operator*(const QExpansion& a, const QExpansion& b) {
        const std::size_t n = std::min(a.precision(), b.precision());
        std::vector<Rational> c(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (b.c_[j].is_zero()) continue;
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return QExpansion(std::move(c));
    }

    friend QExpansion operator*(const Rational& s, const QExpansion& a) {
        std::vector<Rational> c(a.c_.size());
        for (std::size_t m = 0; m < a.c_.size(); ++m) c[m] = s * a.c_[m];
        return QExpansion(std::move(c));
    }

    /// Exact equality: same precision and identical coefficients.
    friend bool operator==(const QExpansion& a, const QExpansion& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QExpansion& a, const QExpansion& b) { return !(a == b); }

    /// "1 + 240*q + 2160*q^2 + O(q^3)" style rendering.
    friend std::ostream& operator<<(std::ostream& os, const QExpansion& a) {
        bool wrote = false;
        for (std::size_t m = 0; m < a.c_.size(); ++m) {
            const Rational& x = a.c_[m];
            if (x.is_zero()) continue;
            if (wrote) {
                os << (x.sign() < 0 ? " - " : " + ");
            } else if (x.sign() < 0) {
                os << "-";
            }
            const Rational mag = abs(x);
            if (m == 0) {
                os << mag.str();
            } else {
                if (mag != Rational(1)) os << mag.str() << "*";
                os << "q";
                if (m > 1) os << "^" << m;
            }
            wrote = true;
        }
        if (!wrote) os << "0";
        os << " + O(q^" << a.c_.size() << ")";
        return os;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

private:
    static std::size_t checked(std::size_t precision) {
        if (precision < 1) throw std::domain_error("QExpansion: precision must be >= 1");
        return precision;
    }

    std::vector<Rational> c_;
};

inline QExpansion scale(const Rational& s, const QExpansion& a) { return s * a; }

/// D = q d/dq: the coefficient of q^m becomes m * a_m. Precision preserved.
inline QExpansion d_operator(const QExpansion& a) {
    std::vector<Rational> c(a.precision());
    for (std::size_t m = 1; m < a.precision(); ++m) {
        c[m] = Rational(Int(static_cast<unsigned long>(m))) * a.coeff(m);
    }
    return QExpansion(std::move(c));
}

/// Outcome of testing b = c * a over the common precision window.
struct ProportionalityResult {
    enum class Kind { ratio, zero_pair, none };

    Kind kind = Kind::none;
    Rational value;  // meaningful only when kind == ratio

    bool has_ratio() const { return kind == Kind::ratio; }
    bool is_zero_pair() const { return kind == Kind::zero_pair; }

    static ProportionalityResult ratio(Rational c) {
        return {Kind::ratio, std::move(c)};
    }
    static ProportionalityResult zero_pair() { return {Kind::zero_pair, Rational()}; }
    static ProportionalityResult none() { return {Kind::none, Rational()}; }
};

namespace detail {

// Shared scalar across a list of coefficient pairs (a_i, b_i): find c with
// b_i = c * a_i for all i. Used directly for series and, via concatenation
// of components, for nearly holomorphic forms.
inline ProportionalityResult proportionality_pairs(
    const std::vector<std::pair<Rational, Rational>>& pairs) {
    std::optional<Rational> c;
    bool a_all_zero = true;
    for (const auto& [a, b] : pairs) {
        if (a.is_zero()) {
            if (!b.is_zero()) return ProportionalityResult::none();
            continue;
        }
        a_all_zero = false;
        const Rational r = b / a;
        if (!c) {
            c = r;
        } else if (*c != r) {
            return ProportionalityResult::none();
        }
    }
    if (a_all_zero) return ProportionalityResult::zero_pair();
    return ProportionalityResult::ratio(*c);
}

}  // namespace detail

/// Finds c with b = c * a over the overlap min(N_a, N_b), which must be >= 2.
inline ProportionalityResult proportionality(const QExpansion& a, const QExpansion& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    if (n < 2) {
        throw precision_error("proportionality: overlap precision " + std::to_string(n) +
                              " is below 2");
    }
    std::vector<std::pair<Rational, Rational>> pairs;
    pairs.reserve(n);
    for (std::size_t m = 0; m < n; ++m) pairs.emplace_back(a.coeff(m), b.coeff(m));
    return detail::proportionality_pairs(pairs);
}

}  // namespace nholo
