#include "ddbar/rational.hpp"

#include "ddbar/errors.hpp"

#include <cctype>
#include <ostream>

namespace ddbar {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string body = text;
    bool negative = false;
    if (!body.empty() && body[0] == '-') {
        negative = true;
        body = body.substr(1);
    }
    std::string num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("invalid rational literal: \"" + text + "\"");
    mpz_class n(num), d(den);
    if (d == 0)
        throw ParseError("zero denominator in rational literal: \"" + text + "\"");
    if (negative) n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Complex operator/(const Complex& a, const Complex& b) {
    if (b.is_zero()) throw InternalError("division by zero Gaussian rational");
    Rational norm = b.re * b.re + b.im * b.im;
    Complex prod = a * b.conj();
    return Complex(prod.re / norm, prod.im / norm);
}

std::string format_complex(const Complex& z) {
    if (z.im == 0) return format_rational(z.re);
    std::string im_part = format_rational(z.im) + "i";
    if (z.re == 0) return im_part;
    if (z.im > 0) return format_rational(z.re) + "+" + im_part;
    return format_rational(z.re) + im_part;
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << format_complex(z);
}

} // namespace ddbar
