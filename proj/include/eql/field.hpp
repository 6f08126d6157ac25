#ifndef EQL_FIELD_HPP
#define EQL_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact base fields: rationals, Gaussian rationals and prime fields.
// Every computation in the library is exact; there is no floating point
// anywhere in the core.

namespace eql {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Parse "p/q" or "p".
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash)), den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(num, den);
}

inline std::string rat_str(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

// Gaussian rationals Q(i).
struct GaussRat {
  Rat re, im;

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)), im(0) {}
  GaussRat(int r) : re(r), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("division by zero Gaussian rational");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
  GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
  GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }
  GaussRat& operator/=(const GaussRat& b) { return *this = *this / b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  friend GaussRat conj(const GaussRat& a) { return {a.re, -a.im}; }
};

// Prime field F_P.  P must be prime; the arithmetic does not check this.
template <int P>
struct Fp {
  static_assert(P >= 2);
  int v = 0;

  Fp() = default;
  Fp(long long x) : v(static_cast<int>(((x % P) + P) % P)) {}
  Fp(const Rat& x)
      : v(0) {
    // reduction of a rational with denominator prime to P
    long long n = static_cast<long long>(numerator(x) % P);
    long long d = static_cast<long long>(denominator(x) % P);
    if (d == 0) throw std::domain_error("rational not defined mod P");
    *this = Fp(n) / Fp(d);
  }

  friend Fp operator+(Fp a, Fp b) { return Fp(static_cast<long long>(a.v) + b.v); }
  friend Fp operator-(Fp a, Fp b) { return Fp(static_cast<long long>(a.v) - b.v); }
  friend Fp operator-(Fp a) { return Fp(-static_cast<long long>(a.v)); }
  friend Fp operator*(Fp a, Fp b) { return Fp(static_cast<long long>(a.v) * b.v); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }

  Fp inv() const {
    if (v == 0) throw std::domain_error("division by zero in F_p");
    // extended Euclid
    int a = v, b = P, x0 = 1, x1 = 0;
    while (b) {
      int q = a / b;
      a -= q * b; std::swap(a, b);
      x0 -= q * x1; std::swap(x0, x1);
    }
    return Fp(x0);
  }
};

// Traits used by operations that are only meaningful over some fields.
template <class K>
struct field_traits {
  static constexpr int characteristic = 0;
  static constexpr bool ordered_abs = false;
  static constexpr bool finite = false;
};

template <>
struct field_traits<Rat> {
  static constexpr int characteristic = 0;
  static constexpr bool ordered_abs = true;
  static constexpr bool finite = false;
  static Rat abs(const Rat& x) { return rat_abs(x); }
};

template <>
struct field_traits<GaussRat> {
  static constexpr int characteristic = 0;
  static constexpr bool ordered_abs = true;
  static constexpr bool finite = false;
  // max-norm surrogate for |a|; only used by the growth diagnostic
  static Rat abs(const GaussRat& x) {
    Rat r = rat_abs(x.re), i = rat_abs(x.im);
    return r > i ? r : i;
  }
};

template <int P>
struct field_traits<Fp<P>> {
  static constexpr int characteristic = P;
  static constexpr bool ordered_abs = false;
  static constexpr bool finite = true;
  static constexpr int order = P;
  static std::vector<Fp<P>> elements() {
    std::vector<Fp<P>> out;
    for (int i = 0; i < P; ++i) out.push_back(Fp<P>(i));
    return out;
  }
};

}  // namespace eql

#endif
