#include "mbi/number.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace mbi {

namespace {

using boost::multiprecision::cpp_int;

Rational pow10(int exponent) {
    cpp_int p = 1;
    for (int i = 0; i < std::abs(exponent); ++i) p *= 10;
    return exponent >= 0 ? Rational(p) : Rational(cpp_int(1), p);
}

// Collapse an integral rational back to Int when it fits.
Number normalize_exact(const Rational& r) {
    if (denominator(r) == 1) {
        const cpp_int& n = numerator(r);
        if (n >= std::numeric_limits<std::int64_t>::min() &&
            n <= std::numeric_limits<std::int64_t>::max()) {
            return Number(static_cast<std::int64_t>(n));
        }
    }
    return Number(r);
}

Number::Rep common_rep(const Number& a, const Number& b) {
    return static_cast<Number::Rep>(
        std::max(static_cast<int>(a.rep()), static_cast<int>(b.rep())));
}

}  // namespace

Number Number::ratio(std::int64_t num, std::int64_t den) {
    if (den == 0) throw NumberError("zero denominator");
    return Number(Rational(num, den));
}

Number Number::parse(std::string_view text, bool as_float) {
    if (text.empty()) throw NumberError("empty numeric literal");
    if (as_float) {
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            return Number(parse(text, false).as_double());
        }
        double d = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            throw NumberError("malformed number '" + std::string(text) + "'");
        }
        return Number(d);
    }

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Number num = parse(text.substr(0, slash), false);
        Number den = parse(text.substr(slash + 1), false);
        if (num.rep() != Rep::Int || den.rep() != Rep::Int) {
            throw NumberError("fraction '" + std::string(text) + "' needs integer parts");
        }
        if (den.is_zero()) throw NumberError("zero denominator in '" + std::string(text) + "'");
        return normalize_exact(num.as_rational() / den.as_rational());
    }

    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    cpp_int mantissa = 0;
    int frac_digits = 0;
    bool any_digit = false;
    bool in_fraction = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            mantissa = mantissa * 10 + (c - '0');
            any_digit = true;
            if (in_fraction) ++frac_digits;
        } else if (c == '.' && !in_fraction) {
            in_fraction = true;
        } else {
            break;
        }
    }
    int exponent = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        auto [ptr, ec] = std::from_chars(text.data() + i + (text[i] == '+' ? 1 : 0),
                                         text.data() + text.size(), exponent);
        if (ec != std::errc{}) throw NumberError("malformed exponent in '" + std::string(text) + "'");
        i = static_cast<std::size_t>(ptr - text.data());
    }
    if (!any_digit || i != text.size()) {
        throw NumberError("malformed number '" + std::string(text) + "'");
    }
    if (negative) mantissa = -mantissa;
    return normalize_exact(Rational(mantissa) * pow10(exponent - frac_digits));
}

std::int64_t Number::as_int() const {
    switch (rep()) {
        case Rep::Int:
            return std::get<std::int64_t>(v_);
        case Rep::Rational: {
            const auto& r = std::get<Rational>(v_);
            if (denominator(r) != 1) throw NumberError("non-integral value " + str());
            return static_cast<std::int64_t>(numerator(r));
        }
        case Rep::Float: {
            double d = std::get<double>(v_);
            if (std::floor(d) != d) throw NumberError("non-integral value " + str());
            return static_cast<std::int64_t>(d);
        }
    }
    return 0;
}

Rational Number::as_rational() const {
    switch (rep()) {
        case Rep::Int:
            return Rational(std::get<std::int64_t>(v_));
        case Rep::Rational:
            return std::get<Rational>(v_);
        case Rep::Float: {
            double d = std::get<double>(v_);
            if (!std::isfinite(d)) throw NumberError("non-finite value has no exact form");
            return Rational(d);
        }
    }
    return {};
}

double Number::as_double() const {
    switch (rep()) {
        case Rep::Int:
            return static_cast<double>(std::get<std::int64_t>(v_));
        case Rep::Rational:
            return static_cast<double>(std::get<Rational>(v_));
        case Rep::Float:
            return std::get<double>(v_);
    }
    return 0;
}

Number Number::to(Rep target) const {
    switch (target) {
        case Rep::Int:
            return Number(as_int());
        case Rep::Rational:
            return Number(as_rational());
        case Rep::Float:
            return Number(as_double());
    }
    return *this;
}

Number operator+(const Number& a, const Number& b) {
    switch (common_rep(a, b)) {
        case Number::Rep::Int: {
            std::int64_t r = 0;
            if (__builtin_add_overflow(a.as_int(), b.as_int(), &r)) throw NumberError("integer overflow in +");
            return Number(r);
        }
        case Number::Rep::Rational:
            return Number(a.as_rational() + b.as_rational());
        case Number::Rep::Float:
            return Number(a.as_double() + b.as_double());
    }
    return {};
}

Number operator-(const Number& a, const Number& b) { return a + (-b); }

Number operator*(const Number& a, const Number& b) {
    switch (common_rep(a, b)) {
        case Number::Rep::Int: {
            std::int64_t r = 0;
            if (__builtin_mul_overflow(a.as_int(), b.as_int(), &r)) throw NumberError("integer overflow in *");
            return Number(r);
        }
        case Number::Rep::Rational:
            return Number(a.as_rational() * b.as_rational());
        case Number::Rep::Float:
            return Number(a.as_double() * b.as_double());
    }
    return {};
}

Number operator/(const Number& a, const Number& b) {
    if (common_rep(a, b) == Number::Rep::Float) return Number(a.as_double() / b.as_double());
    if (b.is_zero()) throw NumberError("division by zero");
    if (common_rep(a, b) == Number::Rep::Int) return normalize_exact(a.as_rational() / b.as_rational());
    return Number(a.as_rational() / b.as_rational());
}

Number Number::operator-() const {
    switch (rep()) {
        case Rep::Int: {
            std::int64_t r = 0;
            if (__builtin_sub_overflow(std::int64_t{0}, std::get<std::int64_t>(v_), &r)) {
                throw NumberError("integer overflow in negation");
            }
            return Number(r);
        }
        case Rep::Rational:
            return Number(Rational(-std::get<Rational>(v_)));
        case Rep::Float:
            return Number(-std::get<double>(v_));
    }
    return {};
}

bool operator==(const Number& a, const Number& b) {
    switch (common_rep(a, b)) {
        case Number::Rep::Int:
            return a.as_int() == b.as_int();
        case Number::Rep::Rational:
            return a.as_rational() == b.as_rational();
        case Number::Rep::Float:
            return a.as_double() == b.as_double();
    }
    return false;
}

bool operator<(const Number& a, const Number& b) {
    switch (common_rep(a, b)) {
        case Number::Rep::Int:
            return a.as_int() < b.as_int();
        case Number::Rep::Rational:
            return a.as_rational() < b.as_rational();
        case Number::Rep::Float:
            return a.as_double() < b.as_double();
    }
    return false;
}

bool Number::is_zero() const { return *this == Number(0); }

bool Number::is_positive() const { return Number(0) < *this; }

std::string Number::str() const {
    switch (rep()) {
        case Rep::Int:
            return std::to_string(std::get<std::int64_t>(v_));
        case Rep::Rational: {
            const auto& r = std::get<Rational>(v_);
            if (denominator(r) == 1) return numerator(r).str();
            return numerator(r).str() + "/" + denominator(r).str();
        }
        case Rep::Float: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.9g", std::get<double>(v_));
            return buf;
        }
    }
    return {};
}

bool approx_equal(const Number& a, const Number& b, double tolerance) {
    if (a.is_exact() && b.is_exact()) return a == b;
    return std::fabs(a.as_double() - b.as_double()) <= tolerance;
}

std::ostream& operator<<(std::ostream& os, const Number& n) { return os << n.str(); }

}  // namespace mbi
