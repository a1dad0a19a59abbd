#pragma once

// Exact arithmetic over Q and over cyclotomic fields Q(zeta_n).
//
// A Cyclotomic stores sum_i c_i zeta_n^i in the power basis
// {1, zeta_n, ..., zeta_n^(phi(n)-1)}, reduced modulo the n-th cyclotomic
// polynomial. Binary operations lift both operands to the lcm of their
// conductors; equality is therefore conductor independent.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace orbirr {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Canonical text form: "3/2", "-1", "0".
std::string to_string(const BigRational& q);

/// Parses "a" or "a/b" with optional sign; result is canonical.
BigRational parse_rational(std::string_view text);

/// n/d in canonical form; d must be nonzero.
BigRational make_rational(long n, long d = 1);

bool is_integer(const BigRational& q);

/// Upper bound on conductors accepted by Cyclotomic (default 256).
std::uint32_t conductor_cap();
void set_conductor_cap(std::uint32_t cap);

std::uint32_t euler_phi(std::uint32_t n);

/// Integer coefficients of Phi_n, lowest degree first. Cached, thread-safe.
const std::vector<BigInt>& cyclotomic_polynomial(std::uint32_t n);

class Cyclotomic {
 public:
  /// Zero.
  Cyclotomic();
  Cyclotomic(const BigRational& q);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long value);            // NOLINT(google-explicit-constructor)

  /// Builds sum_e coeffs[e] zeta_n^e for arbitrary exponents e (taken mod n),
  /// then reduces.
  static Cyclotomic from_exponents(std::uint32_t n, std::span<const BigRational> coeffs);

  std::uint32_t conductor() const { return conductor_; }
  /// Power-basis coefficients, size phi(conductor).
  const std::vector<BigRational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws InvalidInput unless is_rational().
  BigRational rational_value() const;

  /// Same value expressed with conductor m, a multiple of the current one.
  Cyclotomic lift_to(std::uint32_t m) const;

  Cyclotomic conjugate() const;
  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;
  /// x * zeta_n^k, computed by an exponent shift.
  Cyclotomic times_root_of_unity(std::uint32_t n, long k) const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator/=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Lifts to the common conductor, then compares coefficient vectors
  /// lexicographically. A total order on values of one fixed conductor; lift
  /// mixed inputs to a common conductor first. Not compatible with field
  /// operations.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  /// Evaluation at zeta_n = exp(2 pi i / n). Display only.
  std::complex<double> to_complex() const;

  /// Text syntax, e.g. "z8^3 - 1/2*z8 + 1"; rational values print as rationals.
  std::string to_string() const;
  static Cyclotomic parse(std::string_view text);

 private:
  Cyclotomic(std::uint32_t n, std::vector<BigRational> coeffs);

  std::uint32_t conductor_;
  std::vector<BigRational> coeffs_;
};

/// zeta_n^k in normal form. Throws InvalidInput for n = 0.
Cyclotomic root_of_unity(std::uint32_t n, long k);

/// Multiplicative order of x if x is a root of unity, else 0.
std::uint32_t root_of_unity_order(const Cyclotomic& x);

}  // namespace orbirr
