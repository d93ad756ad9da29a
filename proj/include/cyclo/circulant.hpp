#ifndef CYCLO_CIRCULANT_HPP
#define CYCLO_CIRCULANT_HPP

#include <vector>

#include "cyclo/matrix.hpp"

namespace cyclo {

/// Periodic symbol f_n, stored as its n values f(0)..f(n-1); f is looked
/// up at the argument mod n.
class CirculantSymbol {
 public:
  CirculantSymbol(const CyclotomicContext& ctx, std::vector<CycNum> values);

  const CyclotomicContext& context() const { return *ctx_; }
  unsigned n() const { return ctx_->n(); }
  /// f(k), any integer k
  const CycNum& value(long k) const;

 private:
  const CyclotomicContext* ctx_;
  std::vector<CycNum> values_;
};

/// Eigenvalues lambda_i = sum_k f(k) zeta^(-ki) of the circulant of f,
/// together with the indices where they vanish.
struct SpectrumResult {
  std::vector<CycNum> lambdas;
  std::vector<unsigned> zero_indices;
};

/// f(k) = 1/(1 - zeta^k) off 0, f(0) = 0. Requires odd n > 1.
CirculantSymbol from_sun1(const CyclotomicContext& ctx);

/// f(k) = (1 + zeta^k)/(1 - zeta^k) off 0, f(0) = 0. Requires odd n > 1.
CirculantSymbol from_sun2(const CyclotomicContext& ctx);

/// f(k) = (a + b*zeta^(ck))/(1 - zeta^k) off 0, f(0) = 0. Whether the DFT
/// has a vanishing coefficient is not guaranteed; check dft_eigenvalues.
CirculantSymbol from_abc(const CyclotomicContext& ctx, long a, long b, long c);

/// n x n matrix with entry (i,j) = f(i - j).
ExactMatrix build_matrix(const CirculantSymbol& sym);

SpectrumResult dft_eigenvalues(const CirculantSymbol& sym);

/// Exact normality check: M M* = M* M for the circulant M of sym.
bool check_condition_iii(const CirculantSymbol& sym);

}  // namespace cyclo

#endif
