#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace brackets {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator and denominator.
/// Always reduced (gcd = 1), denominator > 0, zero stored as 0/1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long long n) : value_(static_cast<long long>(n)) {}
    Rational(const BigInt& n) : value_(n) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = boost::multiprecision::cpp_rational(num, den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p" or "p/q" (q > 0 after reduction).
    static Rational from_string(const std::string& text) {
        Rational r;
        try {
            r.value_ = boost::multiprecision::cpp_rational(text);
        } catch (const std::exception&) {
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        }
        return r;
    }

    BigInt num() const { return boost::multiprecision::numerator(value_); }
    BigInt den() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_negative() const { return value_ < 0; }
    bool is_positive() const { return value_ > 0; }
    bool is_integer() const { return den() == 1; }
    bool is_one() const { return value_ == 1; }

    /// True for 0, -1, -2, ... (the gamma poles).
    bool is_nonpositive_integer() const { return is_integer() && value_ <= 0; }

    /// Largest integer <= *this.
    BigInt floor() const {
        BigInt n = num(), d = den();
        BigInt q = n / d;
        if (n < 0 && q * d != n) --q;
        return q;
    }

    Rational operator-() const { return Rational(-value_); }
    Rational operator+(const Rational& o) const { return Rational(value_ + o.value_); }
    Rational operator-(const Rational& o) const { return Rational(value_ - o.value_); }
    Rational operator*(const Rational& o) const { return Rational(value_ * o.value_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(value_ / o.value_);
    }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational abs() const { return is_negative() ? -*this : *this; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den(), num());
    }

    bool operator==(const Rational& o) const { return value_ == o.value_; }
    bool operator!=(const Rational& o) const { return value_ != o.value_; }
    bool operator<(const Rational& o) const { return value_ < o.value_; }
    bool operator<=(const Rational& o) const { return value_ <= o.value_; }
    bool operator>(const Rational& o) const { return value_ > o.value_; }
    bool operator>=(const Rational& o) const { return value_ >= o.value_; }

    double to_double() const { return value_.convert_to<double>(); }

    std::string to_string() const {
        if (is_integer()) return num().str();
        return num().str() + "/" + den().str();
    }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
    boost::multiprecision::cpp_rational value_;
};

/// base^exp for integer exp; base must be nonzero when exp < 0.
inline Rational pow(const Rational& base, long long exp) {
    if (exp == 0) return Rational(1);
    Rational b = exp < 0 ? base.inverse() : base;
    unsigned long long e = exp < 0 ? static_cast<unsigned long long>(-exp)
                                   : static_cast<unsigned long long>(exp);
    Rational acc(1);
    while (e > 0) {
        if (e & 1ULL) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline Rational factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    BigInt acc = 1;
    for (long long k = 2; k <= n; ++k) acc *= k;
    return Rational(acc);
}

}  // namespace brackets
