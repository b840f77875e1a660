#pragma once

// Minimal double-double arithmetic (~31 significant digits) for the few
// places where plain doubles cannot survive the cancellation: forming the
// characteristic-polynomial coefficients of rho*rho~ and polishing its
// near-degenerate small roots. Internal to the library.

#include <cmath>

namespace qc::detail {

struct dd {
  double hi = 0.0;
  double lo = 0.0;

  constexpr dd() = default;
  constexpr dd(double h) : hi(h) {}
  constexpr dd(double h, double l) : hi(h), lo(l) {}

  explicit operator double() const { return hi; }
};

inline dd two_sum(double a, double b) {
  const double s = a + b;
  const double v = s - a;
  return {s, (a - (s - v)) + (b - v)};
}

inline dd quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd operator+(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
  const double q1 = a.hi / b.hi;
  dd r = a - dd(q1) * b;
  const double q2 = r.hi / b.hi;
  r = r - dd(q2) * b;
  const double q3 = r.hi / b.hi;
  dd q = quick_two_sum(q1, q2);
  return q + dd(q3);
}

inline bool operator<(dd a, dd b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}

struct ddc {
  dd re;
  dd im;

  constexpr ddc() = default;
  ddc(dd r) : re(r) {}
  ddc(dd r, dd i) : re(r), im(i) {}
  ddc(double r, double i) : re(r), im(i) {}
};

inline ddc operator+(ddc a, ddc b) { return {a.re + b.re, a.im + b.im}; }
inline ddc operator-(ddc a, ddc b) { return {a.re - b.re, a.im - b.im}; }
inline ddc operator-(ddc a) { return {-a.re, -a.im}; }

inline ddc operator*(ddc a, ddc b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline ddc conj(ddc a) { return {a.re, -a.im}; }

inline ddc operator/(ddc a, ddc b) {
  const dd denom = b.re * b.re + b.im * b.im;
  const ddc num = a * conj(b);
  return {num.re / denom, num.im / denom};
}

inline double abs_approx(ddc a) {
  return std::hypot(a.re.hi, a.im.hi);
}

}  // namespace qc::detail
