#ifndef CYCLO_CONTEXT_HPP
#define CYCLO_CONTEXT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace cyclo {

using IntPoly = std::vector<mpz_class>;  // coefficient vector, index = degree

/// n-th cyclotomic polynomial, computed by exact recursive division of
/// x^n - 1 by the product of Phi_d over proper divisors d of n.
IntPoly cyclotomic_polynomial(unsigned n);

/// Fixes the conductor n and the canonical representation of Q(zeta_n)
/// as Q[x]/Phi_n(x). Immutable after construction; share by const ref.
class CyclotomicContext {
 public:
  explicit CyclotomicContext(unsigned n);

  unsigned n() const { return n_; }
  std::size_t degree() const { return degree_; }
  const IntPoly& phi() const { return phi_; }

  /// zeta^k reduced mod Phi_n, as an integer coefficient vector of
  /// length degree(). k is taken mod n.
  const IntPoly& zeta_power(long k) const;

 private:
  unsigned n_;
  IntPoly phi_;
  std::size_t degree_;
  std::vector<IntPoly> powers_;  // zeta^0 .. zeta^(n-1), reduced
};

}  // namespace cyclo

#endif
