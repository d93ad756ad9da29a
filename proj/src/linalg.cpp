#include "cyclo/linalg.hpp"

#include <algorithm>
#include <set>

namespace cyclo {

BasisSpec BasisSpec::all_but(const CyclotomicContext& ctx, unsigned excluded) {
  BasisSpec spec{&ctx, {}};
  for (unsigned j = 0; j < ctx.n(); ++j)
    if (j != excluded) spec.included.push_back(j);
  return spec;
}

static void validate(const BasisSpec& spec) {
  const unsigned n = spec.ctx->n();
  if (spec.included.size() != n - 1)
    throw std::invalid_argument("basis needs exactly n-1 Fourier vectors");
  std::set<unsigned> seen(spec.included.begin(), spec.included.end());
  if (seen.size() != spec.included.size() || *seen.rbegin() >= n)
    throw std::invalid_argument("basis exponents must be distinct and < n");
}

ExactMatrix fourier_basis(const BasisSpec& spec) {
  validate(spec);
  const CyclotomicContext& ctx = *spec.ctx;
  const unsigned n = ctx.n();
  ExactMatrix u(ctx, n - 1, n - 1);
  for (unsigned i = 1; i < n; ++i)
    for (std::size_t t = 0; t < spec.included.size(); ++t)
      u.at(i - 1, t) = zeta_pow(ctx, static_cast<long>(spec.included[t]) * i);
  return u;
}

ExactMatrix build_B_s(const CyclotomicContext& ctx, long s) {
  if (s % static_cast<long>(ctx.n()) == 0)
    throw std::invalid_argument("build_B_s: s must not be 0 mod n");
  const unsigned n = ctx.n();
  ExactMatrix b(ctx, n - 1, n - 1);
  for (unsigned i = 1; i < n; ++i)
    b.at(i - 1, i - 1) = CycNum(ctx, 1) - zeta_pow(ctx, s * static_cast<long>(i));
  return b;
}

ExactMatrix build_C_s(const ExactMatrix& a, long s) {
  return a * build_B_s(a.context(), s);
}

ExactMatrix change_of_basis(const ExactMatrix& c, const BasisSpec& spec) {
  const ExactMatrix u = fourier_basis(spec);
  return u.solve(c * u);
}

static ExactMatrix fourier_vector(const CyclotomicContext& ctx, unsigned j) {
  const unsigned n = ctx.n();
  ExactMatrix v(ctx, n - 1, 1);
  for (unsigned i = 1; i < n; ++i)
    v.at(i - 1, 0) = zeta_pow(ctx, static_cast<long>(j) * i);
  return v;
}

bool verify_c1_recurrence(const CyclotomicContext& ctx) {
  const unsigned n = ctx.n();
  if (n % 2 == 0) throw std::invalid_argument("verify_c1_recurrence: n must be odd");
  const ExactMatrix a = build_matrix(from_sun1(ctx)).minor(n);
  const ExactMatrix c1 = build_C_s(a, 1);
  const long half = (static_cast<long>(n) - 1) / 2;
  for (unsigned s = 0; s < n; ++s) {
    const ExactMatrix lhs = c1 * fourier_vector(ctx, s);
    ExactMatrix rhs(ctx, n - 1, 1);
    if (s < n - 1) {
      rhs = fourier_vector(ctx, s).scaled(CycNum(ctx, half - static_cast<long>(s))) -
            fourier_vector(ctx, s + 1).scaled(CycNum(ctx, half - static_cast<long>(s) - 1));
    } else {
      rhs = (fourier_vector(ctx, n - 1) + fourier_vector(ctx, 0)).scaled(CycNum(ctx, -half));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

TriangularReport assert_block_triangular(const ExactMatrix& r, const BasisSpec& spec,
                                         unsigned break_index) {
  validate(spec);
  if (r.rows() != r.cols() || r.rows() != spec.included.size())
    throw std::invalid_argument("assert_block_triangular: shape mismatch");
  // split where the excluded exponent would sit in the spec's order
  std::size_t split = 0;
  while (split < spec.included.size() && spec.included[split] < break_index) ++split;
  TriangularReport report;
  for (std::size_t i = 0; i < split; ++i) report.block_partition.first.push_back(spec.included[i]);
  for (std::size_t i = split; i < spec.included.size(); ++i)
    report.block_partition.second.push_back(spec.included[i]);
  const std::size_t m = r.rows();
  for (std::size_t i = 0; i < m; ++i) report.diagonal.push_back(r.at(i, i));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const bool same_block = (i < split) == (j < split);
      const bool forbidden = same_block ? (i < j) : (i >= split);  // upper in X/Z, or the 0 block
      if (forbidden && !r.at(i, j).is_zero()) report.violating_positions.emplace_back(i, j);
    }
  return report;
}

bool verify_integer_spectrum(const ExactMatrix& m, const std::vector<long>& candidates) {
  if (candidates.size() != m.rows())
    throw std::invalid_argument("verify_integer_spectrum: candidate count must equal dimension");
  std::set<long> distinct(candidates.begin(), candidates.end());
  if (distinct.size() != candidates.size())
    throw std::invalid_argument("verify_integer_spectrum: candidates must be distinct");
  const CyclotomicContext& ctx = m.context();
  return std::all_of(candidates.begin(), candidates.end(), [&](long c) {
    return m.charpoly_eval(CycNum(ctx, c)).is_zero();
  });
}

bool verify_eei(const CirculantSymbol& sym, unsigned i, unsigned j) {
  if (!check_condition_iii(sym))
    throw std::invalid_argument("verify_eei: symbol is not normal (condition (iii) fails)");
  const CyclotomicContext& ctx = sym.context();
  const unsigned n = sym.n();
  if (i >= n || j < 1 || j > n) throw std::out_of_range("verify_eei: index out of range");
  const SpectrumResult spec = dft_eigenvalues(sym);
  CycNum lhs(ctx, Rational(1, n));
  for (unsigned k = 0; k < n; ++k)
    if (k != i) lhs *= spec.lambdas[i] - spec.lambdas[k];
  const CycNum rhs = build_matrix(sym).minor(j).charpoly_eval(spec.lambdas[i]);
  return lhs == rhs;
}

}  // namespace cyclo
