#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nholo/rational.hpp"

namespace nholo {

/// Binomial coefficient C(n, r) for n >= 0, with C(n, r) = 0 when r < 0 or
/// r > n. Negative n is rejected: no caller in this library needs it.
inline Int binomial(long n, long r) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (r < 0 || r > n) return 0;
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(r));
    return result;
}

/// Bernoulli number B_k for even k >= 0, with B_0 = 1 and B_2 = 1/6.
/// Computed by the recurrence sum_{i=0}^{m} C(m+1, i) B_i = 0 (m >= 1),
/// which needs the odd-index value B_1 = -1/2 internally.
inline Rational bernoulli(long k) {
    if (k < 0 || k % 2 != 0) {
        throw std::domain_error("bernoulli: index must be even and nonnegative, got " +
                                std::to_string(k));
    }
    std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
    b[0] = 1;
    for (long m = 1; m <= k; ++m) {
        Rational acc = 0;
        for (long i = 0; i < m; ++i) {
            acc += Rational(binomial(m + 1, i)) * b[static_cast<std::size_t>(i)];
        }
        b[static_cast<std::size_t>(m)] = -acc / Rational(Int(m + 1));
    }
    return b[static_cast<std::size_t>(k)];
}

/// Divisor power sum sigma_e(n) = sum_{d | n} d^e for n >= 1, e >= 0.
inline Int sigma(long n, long e) {
    if (n < 1) throw std::domain_error("sigma: n must be positive");
    if (e < 0) throw std::domain_error("sigma: exponent must be nonnegative");
    Int total = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d == 0) {
            Int p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d),
                          static_cast<unsigned long>(e));
            total += p;
        }
    }
    return total;
}

/// d^e as a big integer, for d >= 1, e >= 0.
inline Int int_pow(long d, long e) {
    if (d < 1 || e < 0) throw std::domain_error("int_pow: requires d >= 1, e >= 0");
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(e));
    return p;
}

}  // namespace nholo
