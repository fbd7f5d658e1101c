#include "onsager/arith/gaussian.hpp"

#include "onsager/errors.hpp"

namespace onsager::arith {

Rational make_rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero Gaussian rational");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero Gaussian rational");
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool is_compound(const GaussianRational& z) { return !z.is_real() && sgn(z.re()) != 0; }

std::string to_string(const GaussianRational& z) {
    if (z.is_real()) return to_string(z.re());
    std::string im;
    if (z.im() == 1) {
        im = "i";
    } else if (z.im() == -1) {
        im = "-i";
    } else {
        im = to_string(z.im()) + "*i";
    }
    if (sgn(z.re()) == 0) return im;
    std::string out = "(" + to_string(z.re());
    if (im.front() != '-') out += "+";
    return out + im + ")";
}

}  // namespace onsager::arith
