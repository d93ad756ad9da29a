#ifndef CYCLO_CYCNUM_HPP
#define CYCLO_CYCNUM_HPP

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclo/context.hpp"

namespace cyclo {

using Rational = mpq_class;

class ContextMismatch : public std::invalid_argument {
 public:
  ContextMismatch() : std::invalid_argument("CycNum contexts differ") {}
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("inverse of zero in Q(zeta_n)") {}
};

/// An exact element of Q(zeta_n), stored canonically as an integer
/// coefficient vector of length deg Phi_n over one positive denominator,
/// with gcd(content, denominator) = 1. Equality is representation equality.
class CycNum {
 public:
  CycNum() : ctx_(nullptr), den_(1) {}
  explicit CycNum(const CyclotomicContext& ctx);               // zero
  CycNum(const CyclotomicContext& ctx, const Rational& c);     // constant
  CycNum(const CyclotomicContext& ctx, long c);
  /// From an arbitrary-degree rational polynomial in zeta; reduces mod Phi_n.
  CycNum(const CyclotomicContext& ctx, const std::vector<Rational>& poly);

  const CyclotomicContext& context() const { return *ctx_; }
  bool has_context() const { return ctx_ != nullptr; }

  /// Coefficient of zeta^i in the canonical representative, as a rational.
  Rational coeff(std::size_t i) const;
  /// Shared positive denominator of the canonical representative.
  const mpz_class& denominator() const { return den_; }
  /// Integer numerator coefficient of zeta^i.
  const mpz_class& numerator(std::size_t i) const { return num_.at(i); }
  std::size_t degree_bound() const { return ctx_->degree(); }

  bool is_zero() const;
  bool is_rational() const;  // all coefficients above zeta^0 vanish
  /// Value as a rational; throws std::domain_error if not rational.
  Rational rational_value() const;

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
  CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

  CycNum operator*(const Rational& r) const;

  /// Multiplicative inverse via the extended gcd of the representative
  /// with Phi_n over Q. Throws DivisionByZero on zero.
  CycNum inv() const;
  CycNum operator/(const CycNum& b) const { return *this * b.inv(); }

  /// Image under zeta -> zeta^(n-1), i.e. complex conjugation.
  CycNum conj() const;

  /// Evaluate the representative at exp(2*pi*i/n). The computation runs
  /// at `digits` decimal digits of working precision before the final
  /// rounding to double.
  std::complex<double> to_complex(unsigned digits = 19) const;
  /// Same evaluation, real and imaginary parts as decimal strings with
  /// `digits` significant digits.
  std::pair<std::string, std::string> to_complex_string(unsigned digits) const;

  /// Cyclotomic literal format: `c0 + c1*z^1 + ... + ck*z^k`, each ci a
  /// signed integer or p/q in lowest terms, zero terms omitted, `0` when
  /// all vanish.
  std::string to_string() const;
  static CycNum parse(const CyclotomicContext& ctx, const std::string& text);

 private:
  friend class CyclotomicContext;
  void reduce_and_normalize(std::vector<mpz_class>& raw);
  void normalize();

  const CyclotomicContext* ctx_;
  std::vector<mpz_class> num_;  // length ctx_->degree()
  mpz_class den_;               // > 0, coprime to content(num_)

  friend CycNum zeta_pow(const CyclotomicContext& ctx, long k);
};

/// Canonical representation of zeta^(k mod n).
CycNum zeta_pow(const CyclotomicContext& ctx, long k);

inline CycNum operator*(const Rational& r, const CycNum& a) { return a * r; }

}  // namespace cyclo

#endif
