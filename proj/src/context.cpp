#include "cyclo/context.hpp"

#include <stdexcept>

namespace cyclo {

namespace {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Quotient of a by monic b; the division is exact by construction here.
IntPoly poly_div_exact(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) throw std::logic_error("inexact poly division");
  IntPoly q(a.size() - b.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + b.size() - 1];  // b is monic
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  for (const auto& c : a)
    if (c != 0) throw std::logic_error("inexact poly division");
  return q;
}

}  // namespace

IntPoly cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n >= 1");
  if (n == 1) return {-1, 1};  // x - 1
  IntPoly xn_minus_1(n + 1);
  xn_minus_1[0] = -1;
  xn_minus_1[n] = 1;
  IntPoly divisor_product{1};
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) divisor_product = poly_mul(divisor_product, cyclotomic_polynomial(d));
  return poly_div_exact(xn_minus_1, divisor_product);
}

CyclotomicContext::CyclotomicContext(unsigned n) : n_(n) {
  if (n < 2) throw std::invalid_argument("CyclotomicContext: n >= 2 required");
  phi_ = cyclotomic_polynomial(n);
  degree_ = phi_.size() - 1;
  // Reduced forms of zeta^0..zeta^(n-1); Phi_n is monic so they stay integral.
  powers_.reserve(n);
  for (unsigned k = 0; k < n; ++k) {
    IntPoly p(k + 1);
    p[k] = 1;
    // long division by the monic phi_
    for (std::size_t i = p.size(); i-- > degree_;) {
      mpz_class lead = p[i];
      if (lead == 0) continue;
      p[i] = 0;
      for (std::size_t j = 0; j < degree_; ++j) p[i - degree_ + j] -= lead * phi_[j];
    }
    p.resize(degree_);
    powers_.push_back(std::move(p));
  }
}

const IntPoly& CyclotomicContext::zeta_power(long k) const {
  long m = k % static_cast<long>(n_);
  if (m < 0) m += n_;
  return powers_[static_cast<std::size_t>(m)];
}

}  // namespace cyclo
