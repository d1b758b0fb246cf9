#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace nholo {

/// Arbitrary-precision integer (GMP).
using Int = mpz_class;

/// Thrown when a series carries too few coefficients for the requested
/// operation (truncation, Hecke action, proportionality test, ...).
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational number. Always kept in lowest terms with positive
/// denominator; zero is canonically 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : v_(n) {}

    Rational(const Int& num, const Int& den) : v_(num, den) { normalize(); }
    Rational(long num, long den) : v_(Int(num), Int(den)) { normalize(); }

    explicit Rational(const mpq_class& q) : v_(q) { normalize(); }

    /// Parses "p/q" or "p" (base 10). Throws std::invalid_argument on
    /// malformed input or zero denominator.
    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (s.empty() || q.set_str(s, 10) != 0) {
            throw std::invalid_argument("Rational::from_string: cannot parse '" + s + "'");
        }
        if (q.get_den() == 0) {
            throw std::invalid_argument("Rational::from_string: zero denominator in '" + s + "'");
        }
        return Rational(q);
    }

    const Int& numerator() const { return v_.get_num(); }
    const Int& denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Canonical decimal string: "p" when the denominator is 1, else "p/q".
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) {
        return Rational(mpq_class(abs(a.v_)), already_canonical{});
    }

private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : v_(std::move(q)) {}

    void normalize() {
        if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }

    // GMP arithmetic keeps canonical operands canonical, so the operators
    // above never re-normalize.
    mpq_class v_;
};

}  // namespace nholo
