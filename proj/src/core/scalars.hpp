#pragma once

// Scalar tiers for series accumulation: double, double-double, and an
// arbitrary-precision real backed by MPFR.  Series code is templated on the
// real type; Cx<R> supplies the complex arithmetic on top.

#include <mpfr.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

namespace betacp {

// ---------------------------------------------------------------- double-double

struct DD {
    double hi = 0.0, lo = 0.0;

    DD() = default;
    DD(double h) : hi(h), lo(0.0) {}
    DD(double h, double l) : hi(h), lo(l) {}
};

namespace ddops {

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}
inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}
inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

}  // namespace ddops

inline DD operator+(DD a, DD b) {
    using namespace ddops;
    DD s = two_sum(a.hi, b.hi);
    DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}
inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }
inline DD operator*(DD a, DD b) {
    using namespace ddops;
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}
inline DD operator/(DD a, DD b) {
    using namespace ddops;
    double q1 = a.hi / b.hi;
    DD r = a - DD(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - DD(q2) * b;
    double q3 = r.hi / b.hi;
    DD q = quick_two_sum(q1, q2);
    return q + DD(q3);
}
inline DD& operator+=(DD& a, DD b) { a = a + b; return a; }
inline DD& operator-=(DD& a, DD b) { a = a - b; return a; }
inline DD& operator*=(DD& a, DD b) { a = a * b; return a; }
inline DD& operator/=(DD& a, DD b) { a = a / b; return a; }
inline bool operator<(DD a, DD b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(DD a, DD b) { return b < a; }
inline bool operator==(DD a, DD b) { return a.hi == b.hi && a.lo == b.lo; }
inline DD abs(DD a) { return (a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0)) ? -a : a; }
inline DD hypot(DD a, DD b);
inline DD sqrt(DD a) {
    if (a.hi == 0.0) return DD(0.0);
    double x = std::sqrt(a.hi);
    DD x2 = DD(x) * DD(x);
    // one Newton step: x + (a - x^2)/(2x)
    DD corr = (a - x2) / DD(2.0 * x);
    return DD(x) + corr;
}
inline DD hypot(DD a, DD b) { return sqrt(a * a + b * b); }

// ---------------------------------------------------------------- BigFloat (MPFR)

class BigFloat {
  public:
    // Working precision for newly created values, in bits.
    static inline mpfr_prec_t default_prec = 192;

    BigFloat() { mpfr_init2(v_, default_prec); mpfr_set_zero(v_, 1); }
    BigFloat(double x) { mpfr_init2(v_, default_prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(long x) { mpfr_init2(v_, default_prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    BigFloat operator-() const { BigFloat r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat& operator+=(const BigFloat& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    friend BigFloat abs(const BigFloat& a) { BigFloat r; mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
    friend BigFloat sqrt(const BigFloat& a) { BigFloat r; mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
    friend BigFloat exp(const BigFloat& a) { BigFloat r; mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r; }
    friend BigFloat log(const BigFloat& a) { BigFloat r; mpfr_log(r.v_, a.v_, MPFR_RNDN); return r; }
    friend BigFloat sin(const BigFloat& a) { BigFloat r; mpfr_sin(r.v_, a.v_, MPFR_RNDN); return r; }
    friend BigFloat cos(const BigFloat& a) { BigFloat r; mpfr_cos(r.v_, a.v_, MPFR_RNDN); return r; }
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat atan2(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_atan2(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }

  private:
    mpfr_t v_;
};

struct ScopedBigPrec {
    mpfr_prec_t saved;
    explicit ScopedBigPrec(mpfr_prec_t bits) : saved(BigFloat::default_prec) { BigFloat::default_prec = bits; }
    ~ScopedBigPrec() { BigFloat::default_prec = saved; }
};

// ------------------------------------------------------------------ Cx<R>

template <class R>
struct Cx {
    R re{}, im{};
    Cx() = default;
    Cx(R r) : re(std::move(r)) {}
    Cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}
};

template <class R> Cx<R> operator+(const Cx<R>& a, const Cx<R>& b) { return {a.re + b.re, a.im + b.im}; }
template <class R> Cx<R> operator-(const Cx<R>& a, const Cx<R>& b) { return {a.re - b.re, a.im - b.im}; }
template <class R> Cx<R> operator-(const Cx<R>& a) { return {-a.re, -a.im}; }
template <class R> Cx<R> operator*(const Cx<R>& a, const Cx<R>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class R> Cx<R> operator/(const Cx<R>& a, const Cx<R>& b) {
    R d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
template <class R> Cx<R>& operator+=(Cx<R>& a, const Cx<R>& b) { a = a + b; return a; }
template <class R> Cx<R>& operator*=(Cx<R>& a, const Cx<R>& b) { a = a * b; return a; }
template <class R> R abs(const Cx<R>& a) { using std::hypot; return hypot(a.re, a.im); }

// ------------------------------------------------------------------ traits

inline double to_double(double x) { return x; }
inline double to_double(const DD& x) { return x.hi; }
inline double to_double(const BigFloat& x) { return x.to_double(); }

template <class R> struct RealOf { static R from(double x) { return R(x); } };

inline double abs(double x) { return std::fabs(x); }
using std::sqrt;

}  // namespace betacp
