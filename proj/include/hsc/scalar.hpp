#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hsc {

using Rat = mpq_class;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gaussian rational a + b*i. The coefficient field for all exact work.
struct Scalar {
    Rat re, im;

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}
    Scalar(const Rat& r) : re(r), im(0) {}
    Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return Scalar(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
    Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(a.re + b.re, a.im + b.im); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(a.re - b.re, a.im - b.im); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        Rat n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("Scalar: division by zero");
        return Scalar((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

// i^e for arbitrary (possibly negative) integer exponent.
inline Scalar i_pow(long e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return Scalar(1);
        case 1: return Scalar::i();
        case 2: return Scalar(-1);
        default: return -Scalar::i();
    }
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// "p" or "p/q", no floats, canonicalized with positive denominator.
Rat parse_rat(const std::string& s);

// "p/q", "p/q+r/s i", "p/q-r/s i" or pure imaginary "r/s i".
Scalar parse_scalar(const std::string& s);

std::string scalar_str(const Scalar& s);

}  // namespace hsc
