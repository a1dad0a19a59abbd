#include "orbirr/exact_num.hpp"

#include <atomic>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <utility>

#include "orbirr/errors.hpp"

namespace orbirr {

namespace {

std::atomic<std::uint32_t> g_conductor_cap{256};

void check_conductor(std::uint32_t n) {
  if (n == 0) throw InvalidInput("cyclotomic conductor must be positive");
  if (n > g_conductor_cap.load()) {
    throw CapExceeded("cyclotomic conductor " + std::to_string(n) + " exceeds cap " +
                      std::to_string(g_conductor_cap.load()));
  }
}

std::uint32_t lcm32(std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(std::lcm<std::uint64_t>(a, b));
}

std::uint32_t mod_exponent(long e, std::uint32_t n) {
  long r = e % static_cast<long>(n);
  if (r < 0) r += n;
  return static_cast<std::uint32_t>(r);
}

// Reduces a dense vector of length n (exponents mod n) modulo Phi_n and
// truncates to phi(n) coefficients.
std::vector<BigRational> reduce_dense(std::uint32_t n, std::vector<BigRational> dense) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const std::size_t deg = phi_poly.size() - 1;
  BigRational t;
  for (std::size_t i = dense.size(); i-- > deg;) {
    if (sgn(dense[i]) == 0) continue;
    t = dense[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (sgn(phi_poly[j]) != 0) dense[i - deg + j] -= t * phi_poly[j];
    }
    dense[i] = 0;
  }
  dense.resize(deg);
  return dense;
}

// Scatters the power-basis coefficients of x into a dense length-m vector,
// m a multiple of x's conductor.
void scatter(const Cyclotomic& x, std::uint32_t m, std::vector<BigRational>& dense) {
  const std::uint32_t step = m / x.conductor();
  const auto& c = x.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) != 0) dense[(i * step) % m] += c[i];
  }
}

// Dense polynomials over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<BigRational>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  Poly q;
  if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1);
  const BigRational& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    BigRational t = a.back() / lead;
    q[shift] = t;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= t * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

}  // namespace

std::string to_string(const BigRational& q) { return q.get_str(); }

BigRational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  const auto valid = [](std::string_view part) {
    if (!part.empty() && part.front() == '-') part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den.front() == '-') {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  const BigInt denominator(den);
  if (sgn(denominator) == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  BigRational q{BigInt(num), denominator};
  q.canonicalize();
  return q;
}

BigRational make_rational(long n, long d) {
  if (d == 0) throw InvalidInput("zero denominator");
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

std::uint32_t conductor_cap() { return g_conductor_cap.load(); }
void set_conductor_cap(std::uint32_t cap) { g_conductor_cap.store(cap); }

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(std::uint32_t n) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::vector<BigInt>> cache;
  thread_local std::vector<const std::vector<BigInt>*> local;
  if (n == 0) throw InvalidInput("cyclotomic polynomial of order 0");
  if (n < local.size() && local[n] != nullptr) return *local[n];
  const auto remember = [n](const std::vector<BigInt>& poly) -> const std::vector<BigInt>& {
    if (local.size() <= n) local.resize(n + 1, nullptr);
    local[n] = &poly;
    return poly;
  };
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return remember(it->second);
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<BigInt> p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& f = cyclotomic_polynomial(d);
    std::vector<BigInt> q(p.size() - f.size() + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
      q[i] = p[i + f.size() - 1];  // f is monic
      for (std::size_t j = 0; j < f.size(); ++j) p[i + j] -= q[i] * f[j];
    }
    p = std::move(q);
  }
  std::lock_guard lock(mutex);
  return remember(cache.emplace(n, std::move(p)).first->second);
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(const BigRational& q) : conductor_(1), coeffs_{q} {}

Cyclotomic::Cyclotomic(long value) : conductor_(1), coeffs_{BigRational(value)} {}

Cyclotomic::Cyclotomic(std::uint32_t n, std::vector<BigRational> coeffs)
    : conductor_(n), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::from_exponents(std::uint32_t n, std::span<const BigRational> coeffs) {
  check_conductor(n);
  std::vector<BigRational> dense(n);
  for (std::size_t e = 0; e < coeffs.size(); ++e) dense[e % n] += coeffs[e];
  return Cyclotomic(n, reduce_dense(n, std::move(dense)));
}

Cyclotomic root_of_unity(std::uint32_t n, long k) {
  check_conductor(n);
  std::vector<BigRational> dense(n);
  dense[mod_exponent(k, n)] = 1;
  return Cyclotomic::from_exponents(n, dense);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

BigRational Cyclotomic::rational_value() const {
  if (!is_rational()) throw InvalidInput("cyclotomic value " + to_string() + " is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::lift_to(std::uint32_t m) const {
  if (m == conductor_) return *this;
  if (m == 0 || m % conductor_ != 0) {
    throw InvalidInput("cannot lift conductor " + std::to_string(conductor_) + " to " +
                       std::to_string(m));
  }
  check_conductor(m);
  std::vector<BigRational> dense(m);
  scatter(*this, m, dense);
  return Cyclotomic(m, reduce_dense(m, std::move(dense)));
}

Cyclotomic Cyclotomic::conjugate() const {
  if (is_rational()) return *this;
  std::vector<BigRational> dense(conductor_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    dense[(conductor_ - i) % conductor_] = coeffs_[i];
  }
  return Cyclotomic(conductor_, reduce_dense(conductor_, std::move(dense)));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw InvalidInput("inversion of zero in cyclotomic field");
  if (is_rational()) return Cyclotomic(BigRational(1 / coeffs_[0]));
  // Extended Euclid: u * a + v * Phi = 1, track only u.
  Poly modulus;
  for (const auto& c : cyclotomic_polynomial(conductor_)) modulus.emplace_back(c);
  Poly a(coeffs_.begin(), coeffs_.end());
  trim(a);
  Poly r0 = modulus, r1 = a;
  Poly s0, s1{BigRational(1)};
  while (r1.size() > 1) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw InternalInconsistency("cyclotomic polynomial is reducible");
  const BigRational scale = 1 / r1[0];
  std::vector<BigRational> dense(conductor_);
  for (std::size_t i = 0; i < s1.size(); ++i) dense[i] = s1[i] * scale;
  return Cyclotomic(conductor_, reduce_dense(conductor_, std::move(dense)));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1L), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (other.conductor_ == conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }
  if (other.is_rational()) {
    coeffs_[0] += other.coeffs_[0];
    return *this;
  }
  if (is_rational()) {
    BigRational q = coeffs_[0];
    *this = other;
    coeffs_[0] += q;
    return *this;
  }
  const std::uint32_t m = lcm32(conductor_, other.conductor_);
  check_conductor(m);
  std::vector<BigRational> dense(m);
  scatter(*this, m, dense);
  scatter(other, m, dense);
  conductor_ = m;
  coeffs_ = reduce_dense(m, std::move(dense));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.is_rational()) {
    for (auto& c : coeffs_) c *= other.coeffs_[0];
    return *this;
  }
  if (is_rational()) {
    BigRational q = coeffs_[0];
    *this = other;
    for (auto& c : coeffs_) c *= q;
    return *this;
  }
  if (conductor_ != other.conductor_) {
    const std::uint32_t m = lcm32(conductor_, other.conductor_);
    *this = lift_to(m);
    return *this *= other.lift_to(m);
  }
  // Same conductor: multiply in the power basis, then divide by Phi_n.
  const auto& b = other.coeffs_;
  std::vector<BigRational> prod(2 * coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) != 0) prod[i + j] += coeffs_[i] * b[j];
    }
  }
  coeffs_ = reduce_dense(conductor_, std::move(prod));
  return *this;
}

Cyclotomic Cyclotomic::times_root_of_unity(std::uint32_t n, long k) const {
  const std::uint32_t m = lcm32(conductor_, n);
  check_conductor(m);
  const std::uint32_t step = m / conductor_;
  const std::uint32_t shift = mod_exponent(k, n) * (m / n);
  std::vector<BigRational> dense(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) dense[(i * step + shift) % m] = coeffs_[i];
  }
  return Cyclotomic(m, reduce_dense(m, std::move(dense)));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& other) { return *this *= other.inverse(); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return Cyclotomic::compare(a, b) == 0; }

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_ && a.is_rational() && b.is_rational()) {
    return cmp(a.coeffs_[0], b.coeffs_[0]) < 0 ? -1 : (a.coeffs_[0] == b.coeffs_[0] ? 0 : 1);
  }
  const std::uint32_t m = lcm32(a.conductor_, b.conductor_);
  const Cyclotomic la = a.lift_to(m), lb = b.lift_to(m);
  for (std::size_t i = 0; i < la.coeffs_.size(); ++i) {
    const int c = cmp(la.coeffs_[i], lb.coeffs_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / conductor_;
    sum += coeffs_[i].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return orbirr::to_string(coeffs_[0]);
  const std::string root = "z" + std::to_string(conductor_);
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigRational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const BigRational mag = abs(c);
    if (i == 0) {
      out += orbirr::to_string(mag);
      continue;
    }
    if (mag != 1) out += orbirr::to_string(mag) + "*";
    out += root;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto fail = [&](std::size_t pos, const std::string& what) -> Cyclotomic {
    throw InvalidInput("cyclotomic literal '" + std::string(text) + "': " + what +
                       " at offset " + std::to_string(pos));
  };
  if (s.empty()) return fail(0, "empty literal");

  std::size_t pos = 0;
  const auto read_digits = [&](std::string& out) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    out = s.substr(start, pos - start);
    return !out.empty();
  };

  Cyclotomic total;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      return fail(pos, "expected '+' or '-'");
    }
    first = false;

    BigRational coeff(1);
    bool have_coeff = false;
    std::string digits;
    if (read_digits(digits)) {
      coeff = BigRational(BigInt(digits));
      have_coeff = true;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::string den;
        if (!read_digits(den) || BigInt(den) == 0) return fail(pos, "bad denominator");
        coeff = BigRational(BigInt(digits), BigInt(den));
        coeff.canonicalize();
      }
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 'z') return fail(pos, "expected root after '*'");
      }
    }

    Cyclotomic term(coeff);
    if (pos < s.size() && s[pos] == 'z') {
      ++pos;
      std::string order;
      if (!read_digits(order)) return fail(pos, "expected conductor after 'z'");
      long exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        bool neg_exp = false;
        if (pos < s.size() && s[pos] == '-') {
          neg_exp = true;
          ++pos;
        }
        std::string e;
        if (!read_digits(e)) return fail(pos, "expected exponent");
        exponent = std::stol(e) * (neg_exp ? -1 : 1);
      }
      const unsigned long n = std::stoul(order);
      if (n == 0 || n > conductor_cap()) return fail(pos, "conductor out of range");
      term *= root_of_unity(static_cast<std::uint32_t>(n), exponent);
    } else if (!have_coeff) {
      return fail(pos, "expected number or root");
    }
    if (negative) term = -term;
    total += term;
  }
  return total;
}

std::uint32_t root_of_unity_order(const Cyclotomic& x) {
  if (x.is_zero()) return 0;
  const std::uint32_t bound = std::lcm<std::uint32_t>(2, x.conductor());
  const Cyclotomic one(1L);
  for (std::uint32_t k = 1; k <= bound; ++k) {
    if (bound % k == 0 && x.pow(static_cast<long>(k)) == one) return k;
  }
  return 0;
}

}  // namespace orbirr
