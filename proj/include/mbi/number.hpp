#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace mbi {

using Rational = boost::multiprecision::cpp_rational;

/// Thrown for malformed numeric input or arithmetic that leaves the
/// representable range (integer overflow, division by zero).
class NumberError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A scalar that is either an exact integer, an exact rational or a binary64
/// float.
///
/// Mixed arithmetic promotes Int -> Rational -> Float, so an exact `1` acts as
/// the unit for both weight representations. Division of two integers is
/// exact and yields a Rational.
class Number {
public:
    enum class Rep { Int, Rational, Float };

    Number() : v_(std::int64_t{0}) {}
    Number(std::int64_t i) : v_(i) {}  // NOLINT(google-explicit-constructor)
    Number(int i) : v_(std::int64_t{i}) {}  // NOLINT(google-explicit-constructor)
    Number(double d) : v_(d) {}  // NOLINT(google-explicit-constructor)
    Number(const Rational& r) : v_(r) {}  // NOLINT(google-explicit-constructor)

    static Number ratio(std::int64_t num, std::int64_t den);

    /// Parses "12", "-3", "7/4", "0.125" or "1e-3". Decimal and fraction
    /// literals become exact rationals unless `as_float` is set.
    static Number parse(std::string_view text, bool as_float = false);

    Rep rep() const { return static_cast<Rep>(v_.index()); }
    bool is_exact() const { return rep() != Rep::Float; }

    std::int64_t as_int() const;
    Rational as_rational() const;
    double as_double() const;

    /// Converts to the given representation. Int conversion requires an
    /// integral value; converting a float to an exact rep is exact in binary.
    Number to(Rep target) const;

    friend Number operator+(const Number& a, const Number& b);
    friend Number operator-(const Number& a, const Number& b);
    friend Number operator*(const Number& a, const Number& b);
    friend Number operator/(const Number& a, const Number& b);
    Number operator-() const;

    Number& operator+=(const Number& o) { return *this = *this + o; }
    Number& operator*=(const Number& o) { return *this = *this * o; }

    /// Numeric comparison across representations (IEEE semantics when a
    /// float is involved).
    friend bool operator==(const Number& a, const Number& b);
    friend bool operator<(const Number& a, const Number& b);
    friend bool operator<=(const Number& a, const Number& b) { return !(b < a); }
    friend bool operator>(const Number& a, const Number& b) { return b < a; }
    friend bool operator>=(const Number& a, const Number& b) { return !(a < b); }

    bool is_zero() const;
    bool is_positive() const;

    /// Integers verbatim, rationals as "p/q" (or "p" when integral), floats
    /// with 9 significant digits.
    std::string str() const;

private:
    std::variant<std::int64_t, Rational, double> v_;
};

/// Equality within an absolute tolerance. Exact operands compare exactly.
bool approx_equal(const Number& a, const Number& b, double tolerance);

std::ostream& operator<<(std::ostream& os, const Number& n);

}  // namespace mbi
