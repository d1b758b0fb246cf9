#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nholo/forms.hpp"
#include "nholo/qexpansion.hpp"
#include "nholo/rational.hpp"

namespace nholo {

/// Nearly holomorphic modular form, stored as a polynomial in the
/// non-holomorphic generator Y = 1/(4 pi Im z) with q-expansion coefficients:
///
///     F = sum_{i=0}^{p} components[i] * Y^i.
///
/// All components share one precision, trailing zero components are trimmed
/// (the zero form has no components), and the total weight is carried as
/// data. With D = q d/dq the generator satisfies D(Y) = Y^2, which keeps the
/// whole calculus inside exact rational arithmetic.
class NearlyHolomorphicForm {
public:
    NearlyHolomorphicForm(int weight, std::size_t precision, std::vector<QExpansion> components)
        : weight_(weight), precision_(precision), components_(std::move(components)) {
        if (precision_ < 1) {
            throw std::domain_error("NearlyHolomorphicForm: precision must be >= 1");
        }
        for (const QExpansion& c : components_) {
            if (c.precision() != precision_) {
                throw std::domain_error(
                    "NearlyHolomorphicForm: components must share one precision");
            }
        }
        while (!components_.empty() && components_.back().is_zero()) components_.pop_back();
    }

    static NearlyHolomorphicForm zero(int weight, std::size_t precision) {
        return NearlyHolomorphicForm(weight, precision, {});
    }

    int weight() const { return weight_; }
    std::size_t precision() const { return precision_; }

    /// Y-degree; -1 for the zero form.
    int degree() const { return static_cast<int>(components_.size()) - 1; }

    bool is_zero() const { return components_.empty(); }

    const std::vector<QExpansion>& components() const { return components_; }

    /// Component at Y^i; the zero series for i beyond the degree.
    QExpansion component(std::size_t i) const {
        if (i < components_.size()) return components_[i];
        return QExpansion::zero(precision_);
    }

    NearlyHolomorphicForm truncate(std::size_t n) const {
        std::vector<QExpansion> comps;
        comps.reserve(components_.size());
        for (const QExpansion& c : components_) comps.push_back(c.truncate(n));
        return NearlyHolomorphicForm(weight_, n, std::move(comps));
    }

    friend bool operator==(const NearlyHolomorphicForm& a, const NearlyHolomorphicForm& b) {
        return a.weight_ == b.weight_ && a.precision_ == b.precision_ &&
               a.components_ == b.components_;
    }
    friend bool operator!=(const NearlyHolomorphicForm& a, const NearlyHolomorphicForm& b) {
        return !(a == b);
    }

    friend std::ostream& operator<<(std::ostream& os, const NearlyHolomorphicForm& f) {
        os << "[weight " << f.weight_ << "]";
        if (f.is_zero()) return os << " 0 + O(q^" << f.precision_ << ")";
        for (std::size_t i = 0; i < f.components_.size(); ++i) {
            os << "\n  Y^" << i << ": " << f.components_[i];
        }
        return os;
    }

private:
    int weight_;
    std::size_t precision_;
    std::vector<QExpansion> components_;
};

/// Embeds a holomorphic form as a degree-0 nearly holomorphic form.
inline NearlyHolomorphicForm from_holomorphic(const HolomorphicForm& f) {
    return NearlyHolomorphicForm(f.weight, f.series.precision(), {f.series});
}

/// Maass-Shimura operator: raises the weight by 2. On a weight-w form the
/// operator acts as D - wY, and D(Y^i) = i Y^{i+1}, so collecting by powers
/// of Y gives
///
///     out[i] = D(in[i]) + (i - 1 - w) * in[i-1].
inline NearlyHolomorphicForm maass_shimura(const NearlyHolomorphicForm& f) {
    const int w = f.weight();
    if (f.is_zero()) return NearlyHolomorphicForm::zero(w + 2, f.precision());
    const std::size_t out_len = f.components().size() + 1;
    std::vector<QExpansion> out;
    out.reserve(out_len);
    for (std::size_t i = 0; i < out_len; ++i) {
        QExpansion c = d_operator(f.component(i));
        if (i >= 1) {
            const Rational coef(static_cast<long>(i) - 1 - w);
            c = c + coef * f.component(i - 1);
        }
        out.push_back(std::move(c));
    }
    return NearlyHolomorphicForm(w + 2, f.precision(), std::move(out));
}

/// r-fold Maass-Shimura iterate of a nearly holomorphic form.
inline NearlyHolomorphicForm iterate_maass(NearlyHolomorphicForm f, int r) {
    if (r < 0) throw std::domain_error("iterate_maass: negative iteration count");
    for (int i = 0; i < r; ++i) f = maass_shimura(f);
    return f;
}

/// delta_k^(r): the r-fold Maass-Shimura iterate of a holomorphic form of
/// weight k. Result has weight k + 2r and Y-degree exactly r when f != 0.
inline NearlyHolomorphicForm delta_iter(const HolomorphicForm& f, int r) {
    return iterate_maass(from_holomorphic(f), r);
}

/// Graded product: weights add, components convolve.
inline NearlyHolomorphicForm nmul(const NearlyHolomorphicForm& a,
                                  const NearlyHolomorphicForm& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    const int w = a.weight() + b.weight();
    if (a.is_zero() || b.is_zero()) return NearlyHolomorphicForm::zero(w, n);
    const NearlyHolomorphicForm at = a.precision() == n ? a : a.truncate(n);
    const NearlyHolomorphicForm bt = b.precision() == n ? b : b.truncate(n);
    const std::size_t out_len = at.components().size() + bt.components().size() - 1;
    std::vector<QExpansion> out(out_len, QExpansion::zero(n));
    for (std::size_t i = 0; i < at.components().size(); ++i) {
        for (std::size_t j = 0; j < bt.components().size(); ++j) {
            out[i + j] = out[i + j] + at.components()[i] * bt.components()[j];
        }
    }
    return NearlyHolomorphicForm(w, n, std::move(out));
}

/// Sum of two forms of the same weight. Mixed weights are a domain error:
/// the classifier relies on weight bookkeeping staying exact.
inline NearlyHolomorphicForm nadd(const NearlyHolomorphicForm& a,
                                  const NearlyHolomorphicForm& b) {
    if (a.weight() != b.weight()) {
        throw std::domain_error("nadd: weight mismatch (" + std::to_string(a.weight()) +
                                " vs " + std::to_string(b.weight()) + ")");
    }
    const std::size_t n = std::min(a.precision(), b.precision());
    const std::size_t len = std::max(a.components().size(), b.components().size());
    std::vector<QExpansion> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(a.component(i).truncate(n) + b.component(i).truncate(n));
    }
    return NearlyHolomorphicForm(a.weight(), n, std::move(out));
}

inline NearlyHolomorphicForm nscale(const Rational& c, const NearlyHolomorphicForm& f) {
    std::vector<QExpansion> out;
    out.reserve(f.components().size());
    for (const QExpansion& comp : f.components()) out.push_back(c * comp);
    return NearlyHolomorphicForm(f.weight(), f.precision(), std::move(out));
}

inline NearlyHolomorphicForm operator*(const NearlyHolomorphicForm& a,
                                       const NearlyHolomorphicForm& b) {
    return nmul(a, b);
}
inline NearlyHolomorphicForm operator+(const NearlyHolomorphicForm& a,
                                       const NearlyHolomorphicForm& b) {
    return nadd(a, b);
}
inline NearlyHolomorphicForm operator-(const NearlyHolomorphicForm& a,
                                       const NearlyHolomorphicForm& b) {
    return nadd(a, nscale(Rational(-1), b));
}
inline NearlyHolomorphicForm operator*(const Rational& c, const NearlyHolomorphicForm& f) {
    return nscale(c, f);
}

/// True iff every component of index >= 1 vanishes.
inline bool is_holomorphic(const NearlyHolomorphicForm& f) { return f.degree() <= 0; }

/// The Y^0 component.
inline QExpansion holomorphic_part(const NearlyHolomorphicForm& f) { return f.component(0); }

/// Single scalar c with b = c * a jointly across all Y-components, over the
/// common precision window (>= 2 required).
inline ProportionalityResult proportionality(const NearlyHolomorphicForm& a,
                                             const NearlyHolomorphicForm& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    if (n < 2) {
        throw precision_error("proportionality: overlap precision " + std::to_string(n) +
                              " is below 2");
    }
    const std::size_t deg =
        std::max(a.components().size(), b.components().size());
    std::vector<std::pair<Rational, Rational>> pairs;
    pairs.reserve(deg * n);
    for (std::size_t i = 0; i < deg; ++i) {
        const QExpansion ai = a.component(i);
        const QExpansion bi = b.component(i);
        for (std::size_t m = 0; m < n; ++m) pairs.emplace_back(ai.coeff(m), bi.coeff(m));
    }
    if (pairs.empty()) return ProportionalityResult::zero_pair();
    return detail::proportionality_pairs(pairs);
}

/// Canonical JSON record: weight, precision, degree, and per-component
/// coefficient lists as exact fraction strings. Round-trips bit-exactly.
inline nlohmann::ordered_json to_json(const NearlyHolomorphicForm& f) {
    nlohmann::ordered_json j;
    j["weight"] = f.weight();
    j["precision"] = f.precision();
    j["degree"] = f.degree();
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (const QExpansion& c : f.components()) {
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (const Rational& x : c.coeffs()) coeffs.push_back(x.str());
        comps.push_back(std::move(coeffs));
    }
    j["components"] = std::move(comps);
    return j;
}

inline NearlyHolomorphicForm nearly_from_json(const nlohmann::json& j) {
    const int weight = j.at("weight").get<int>();
    const std::size_t precision = j.at("precision").get<std::size_t>();
    std::vector<QExpansion> comps;
    for (const auto& comp : j.at("components")) {
        std::vector<Rational> coeffs;
        coeffs.reserve(comp.size());
        for (const auto& s : comp) coeffs.push_back(Rational::from_string(s.get<std::string>()));
        if (coeffs.size() != precision) {
            throw std::domain_error("nearly_from_json: component length disagrees with precision");
        }
        comps.emplace_back(std::move(coeffs));
    }
    return NearlyHolomorphicForm(weight, precision, std::move(comps));
}

}  // namespace nholo
