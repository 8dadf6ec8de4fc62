#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace ddbar {

// Exact rational scalar. GMP keeps mpq values in canonical form (reduced,
// positive denominator) through all arithmetic; construction from text goes
// through parse_rational, which validates the grammar first.
using Rational = mpq_class;

// Accepts "p" or "p/q", digits only, optional leading '-' on p, q nonzero.
// Anything else (spaces, '+', empty parts, zero denominator) is a ParseError.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, else "p/q"; inverse of parse_rational.
std::string format_rational(const Rational& value);

// Gaussian rational a + b*i, the coefficient field of every complex here.
struct Complex {
    Rational re, im;

    Complex() : re(0), im(0) {}
    Complex(int r) : re(r), im(0) {}
    Complex(Rational r) : re(std::move(r)), im(0) {}
    Complex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Complex i() { return Complex(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    Complex conj() const { return Complex(re, -im); }

    Complex operator-() const { return Complex(-re, -im); }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }

    // Exact division; InternalError on zero divisor (pivots are nonzero by
    // construction everywhere this is reached).
    friend Complex operator/(const Complex& a, const Complex& b);

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

// "a+bi" rendering for diagnostics and error messages.
std::string format_complex(const Complex& z);
std::ostream& operator<<(std::ostream& os, const Complex& z);

} // namespace ddbar
