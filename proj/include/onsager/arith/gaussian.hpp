#pragma once

#include <compare>
#include <gmpxx.h>
#include <string>

namespace onsager::arith {

// Arbitrary-precision rational; gmp keeps numerator/denominator coprime with a
// positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Element of Q(i). Every coefficient in the library lives here so that
// xi = i(q - 1/q) is an ordinary field element.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT(implicit)
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // Lexicographic on (re, im); only used for deterministic ordering.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

private:
    Rational re_{0};
    Rational im_{0};
};

using GR = GaussianRational;

// "3", "-1/2", "i", "-2*i", "(1+2*i)". `is_compound` is true when both parts
// are nonzero (the rendering is then already parenthesized).
std::string to_string(const Rational& r);
std::string to_string(const GaussianRational& z);
bool is_compound(const GaussianRational& z);

}  // namespace onsager::arith
