#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace spreadlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt ipow(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Exact value of a finite double (every finite double is a dyadic rational).
inline BigRat exact_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("exact_rational: non-finite value");
  return BigRat(x);
}

inline BigRat rat_pow(const BigRat& base, unsigned e) {
  return BigRat(ipow(numerator(base), e), ipow(denominator(base), e));
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// log2 that survives values beyond double range
inline double log2_big(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log2_big: non-positive");
  unsigned bits = msb(v);
  if (bits <= 900) return std::log2(v.convert_to<double>());
  BigInt top = v >> (bits - 64);
  return std::log2(top.convert_to<double>()) + double(bits - 64);
}

// value = (num/den)^(1/root); the form exact spread radii are kept in.
struct RootedRatio {
  BigInt num = 1;
  BigInt den = 1;
  unsigned root = 1;

  double value() const {
    long bits = long(msb(num)) - long(msb(den));
    if (bits > -900 && bits < 900) {
      double ratio = BigRat(num, den).convert_to<double>();
      return root == 1 ? ratio : std::pow(ratio, 1.0 / double(root));
    }
    double lg = log2_big(num) - log2_big(den);
    return std::exp2(lg / double(root));
  }
};

// Compare (n1/d1)^(1/a) vs (n2/d2)^(1/b) exactly via cross-exponentiation.
inline int compare(const RootedRatio& x, const RootedRatio& y) {
  BigInt lhs = ipow(x.num, y.root) * ipow(y.den, x.root);
  BigInt rhs = ipow(y.num, x.root) * ipow(x.den, y.root);
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

// (num/den)^(1/root) >= p/q, exactly.
inline bool rooted_geq(const RootedRatio& x, const BigRat& r) {
  if (r <= 0) return true;
  BigInt lhs = x.num * ipow(denominator(r), x.root);
  BigInt rhs = x.den * ipow(numerator(r), x.root);
  return lhs >= rhs;
}

}  // namespace spreadlab
