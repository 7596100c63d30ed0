#pragma once

// Arithmetic in the three-dimensional commutative associative algebra over
// the complex field with basis {1, rho, rho^2} and rho^3 = 0.  An element is
// the component triple (a, b, c) ~ a + b*rho + c*rho^2.  The projection onto
// the scalar component is a continuous multiplicative functional; its kernel
// {b*rho + c*rho^2} is the unique maximal ideal (the radical) and consists of
// exactly the non-invertible elements.

#include <cmath>
#include <complex>
#include <string>

#include "error.hpp"

namespace a3 {

using Complex = std::complex<double>;

struct A3Element {
  Complex a{};
  Complex b{};
  Complex c{};

  A3Element() = default;
  A3Element(Complex a_, Complex b_ = Complex{}, Complex c_ = Complex{})
      : a(a_), b(b_), c(c_) {}
  A3Element(double re) : a(re) {}

  friend bool operator==(const A3Element&, const A3Element&) = default;
};

inline const A3Element one{1.0};
inline const A3Element rho{Complex{0.0}, Complex{1.0}, Complex{0.0}};
inline const A3Element rho2{Complex{0.0}, Complex{0.0}, Complex{1.0}};

inline A3Element operator+(const A3Element& x, const A3Element& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c};
}

inline A3Element operator-(const A3Element& x, const A3Element& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c};
}

inline A3Element operator-(const A3Element& x) { return {-x.a, -x.b, -x.c}; }

// Cauchy product truncated at rho^2 since rho^3 = 0.  Terms are grouped
// palindromically so that x*y and y*x round identically.
inline A3Element operator*(const A3Element& x, const A3Element& y) {
  return {x.a * y.a, x.a * y.b + x.b * y.a,
          (x.a * y.c + x.c * y.a) + x.b * y.b};
}

inline A3Element operator*(const Complex& s, const A3Element& x) {
  return {s * x.a, s * x.b, s * x.c};
}
inline A3Element operator*(const A3Element& x, const Complex& s) { return s * x; }
inline A3Element operator*(double s, const A3Element& x) {
  return Complex{s} * x;
}
inline A3Element operator*(const A3Element& x, double s) {
  return Complex{s} * x;
}

// The multiplicative functional: a + b*rho + c*rho^2 -> a.
inline Complex scalar(const A3Element& x) { return x.a; }

// Euclidean norm sqrt(|a|^2 + |b|^2 + |c|^2).
inline double norm(const A3Element& x) {
  return std::sqrt(std::norm(x.a) + std::norm(x.b) + std::norm(x.c));
}

inline bool approx_equal(const A3Element& x, const A3Element& y,
                         double tol = 1e-12) {
  return std::abs(x.a - y.a) <= tol && std::abs(x.b - y.b) <= tol &&
         std::abs(x.c - y.c) <= tol;
}

// Nilpotent part of a point: lambda1*rho + lambda2*rho^2.  Any product of
// three radical elements is zero.
struct Radical {
  Complex b{};
  Complex c{};

  Radical() = default;
  Radical(Complex b_, Complex c_) : b(b_), c(c_) {}

  A3Element to_element() const { return {Complex{}, b, c}; }
  // n^2 retains only a rho^2 component, equal to b^2.
  Radical squared() const { return {Complex{}, b * b}; }

  friend bool operator==(const Radical&, const Radical&) = default;
};

inline Radical operator*(const Radical& x, const Radical& y) {
  return {Complex{}, x.b * y.b};
}

inline Radical radical_part(const A3Element& x) { return {x.b, x.c}; }

// An element is invertible iff its scalar component stays clear of zero;
// the relative floor keeps the decision scale-aware, the absolute floor
// guards subnormal blowup.
inline constexpr double kInvertAbsoluteFloor = 1e-300;
inline constexpr double kInvertRelativeFloor = 1e-12;

inline bool is_invertible(const A3Element& x) {
  const double s = std::abs(x.a);
  return s > kInvertAbsoluteFloor && s > kInvertRelativeFloor * norm(x);
}

// (a + n)^{-1} = (1 - n/a + n^2/a^2) / a with n = b*rho + c*rho^2, exact
// because n^3 = 0.  Componentwise: (1/a, -b/a^2, (b^2 - a c)/a^3).
inline A3Element invert(const A3Element& x) {
  if (!is_invertible(x)) {
    raise(errc::not_invertible,
          "scalar component too close to the radical (|a| = " +
              std::to_string(std::abs(x.a)) + ")");
  }
  const Complex inv_a = 1.0 / x.a;
  const Complex inv_a2 = inv_a * inv_a;
  return {inv_a, -x.b * inv_a2, (x.b * x.b - x.a * x.c) * inv_a2 * inv_a};
}

inline A3Element operator/(const A3Element& x, const A3Element& y) {
  return x * invert(y);
}
inline A3Element operator/(const A3Element& x, const Complex& s) {
  return {x.a / s, x.b / s, x.c / s};
}
inline A3Element operator/(const A3Element& x, double s) {
  return x / Complex{s};
}

// g(a + n) = g(a) + g'(a) n + g''(a) n^2 / 2, exact (not a truncation)
// because n^3 = 0 and n^2 = b^2 rho^2.
inline A3Element apply_jet(const Complex& g0, const Complex& g1,
                           const Complex& g2, const A3Element& x) {
  return {g0, g1 * x.b, g1 * x.c + 0.5 * g2 * (x.b * x.b)};
}

inline A3Element exp(const A3Element& x) {
  const Complex e = std::exp(x.a);
  return apply_jet(e, e, e, x);
}

inline A3Element sin(const A3Element& x) {
  const Complex s = std::sin(x.a), c = std::cos(x.a);
  return apply_jet(s, c, -s, x);
}

inline A3Element cos(const A3Element& x) {
  const Complex s = std::sin(x.a), c = std::cos(x.a);
  return apply_jet(c, -s, -c, x);
}

// Principal branch on the scalar component.
inline A3Element log(const A3Element& x) {
  if (!is_invertible(x)) {
    raise(errc::not_invertible, "log of a radical-adjacent element");
  }
  const Complex g1 = 1.0 / x.a;
  return apply_jet(std::log(x.a), g1, -g1 * g1, x);
}

// Square-and-multiply, shared by the algebra and plain-complex lanes so both
// evaluation routes perform the identical rounding sequence on the scalar
// component.
template <class T>
T pow_squaring(T base, unsigned k, T unit) {
  T acc = unit;
  while (k != 0) {
    if (k & 1u) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

inline A3Element powi(const A3Element& x, int k) {
  if (k < 0) {
    const unsigned uk = 0u - static_cast<unsigned>(k);
    return pow_squaring(invert(x), uk, one);
  }
  return pow_squaring(x, static_cast<unsigned>(k), one);
}

inline Complex powi(const Complex& z, int k) {
  if (k < 0) {
    if (std::abs(z) <= kInvertAbsoluteFloor) {
      raise(errc::singular_evaluation, "negative power of (near) zero");
    }
    const unsigned uk = 0u - static_cast<unsigned>(k);
    return pow_squaring(1.0 / z, uk, Complex{1.0});
  }
  return pow_squaring(z, static_cast<unsigned>(k), Complex{1.0});
}

}  // namespace a3
