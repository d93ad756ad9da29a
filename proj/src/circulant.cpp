#include "cyclo/circulant.hpp"

namespace cyclo {

CirculantSymbol::CirculantSymbol(const CyclotomicContext& ctx, std::vector<CycNum> values)
    : ctx_(&ctx), values_(std::move(values)) {
  if (values_.size() != ctx.n())
    throw std::invalid_argument("symbol needs exactly n values");
}

const CycNum& CirculantSymbol::value(long k) const {
  long m = k % static_cast<long>(ctx_->n());
  if (m < 0) m += ctx_->n();
  return values_[static_cast<std::size_t>(m)];
}

static void require_odd(const CyclotomicContext& ctx, const char* who) {
  if (ctx.n() % 2 == 0 || ctx.n() <= 1)
    throw std::invalid_argument(std::string(who) + ": n must be odd and > 1");
}

CirculantSymbol from_sun1(const CyclotomicContext& ctx) {
  require_odd(ctx, "from_sun1");
  std::vector<CycNum> v;
  v.emplace_back(ctx);  // f(0) = 0
  for (unsigned k = 1; k < ctx.n(); ++k)
    v.push_back((CycNum(ctx, 1) - zeta_pow(ctx, k)).inv());
  return CirculantSymbol(ctx, std::move(v));
}

CirculantSymbol from_sun2(const CyclotomicContext& ctx) {
  require_odd(ctx, "from_sun2");
  std::vector<CycNum> v;
  v.emplace_back(ctx);
  for (unsigned k = 1; k < ctx.n(); ++k) {
    const CycNum zk = zeta_pow(ctx, k);
    v.push_back((CycNum(ctx, 1) + zk) * (CycNum(ctx, 1) - zk).inv());
  }
  return CirculantSymbol(ctx, std::move(v));
}

CirculantSymbol from_abc(const CyclotomicContext& ctx, long a, long b, long c) {
  std::vector<CycNum> v;
  v.emplace_back(ctx);
  for (unsigned k = 1; k < ctx.n(); ++k) {
    const CycNum numer = CycNum(ctx, a) + CycNum(ctx, b) * zeta_pow(ctx, c * static_cast<long>(k));
    v.push_back(numer * (CycNum(ctx, 1) - zeta_pow(ctx, k)).inv());
  }
  return CirculantSymbol(ctx, std::move(v));
}

ExactMatrix build_matrix(const CirculantSymbol& sym) {
  const unsigned n = sym.n();
  ExactMatrix m(sym.context(), n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      m.at(i, j) = sym.value(static_cast<long>(i) - static_cast<long>(j));
  return m;
}

SpectrumResult dft_eigenvalues(const CirculantSymbol& sym) {
  const CyclotomicContext& ctx = sym.context();
  const unsigned n = sym.n();
  SpectrumResult r;
  for (unsigned i = 0; i < n; ++i) {
    CycNum lambda(ctx);
    for (unsigned k = 0; k < n; ++k) {
      if (sym.value(k).is_zero()) continue;
      lambda += sym.value(k) * zeta_pow(ctx, -static_cast<long>(k) * static_cast<long>(i));
    }
    if (lambda.is_zero()) r.zero_indices.push_back(i);
    r.lambdas.push_back(std::move(lambda));
  }
  return r;
}

bool check_condition_iii(const CirculantSymbol& sym) {
  const ExactMatrix m = build_matrix(sym);
  const ExactMatrix mstar = m.conj_transpose();
  return m * mstar == mstar * m;
}

}  // namespace cyclo
