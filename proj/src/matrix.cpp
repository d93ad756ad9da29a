#include "cyclo/matrix.hpp"

#include <cstdint>
#include <vector>

namespace cyclo {

namespace {

// --- word-size modular arithmetic for the determinant's CRT backend ---

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      fs.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

struct EvalPrime {
  std::uint64_t p;  // prime with p = 1 (mod n)
  std::uint64_t w;  // element of exact multiplicative order n mod p
};

// Primes p = 1 (mod n) descending from 2^62, each with a primitive n-th
// root of unity mod p, so x^n - 1 splits completely over F_p.
std::vector<EvalPrime> eval_primes(std::uint64_t n, const mpz_class& needed_product) {
  const auto qs = prime_factors(n);
  std::vector<EvalPrime> out;
  mpz_class prod = 1;
  std::uint64_t p = ((std::uint64_t{1} << 62) / n) * n + 1;
  for (; prod <= needed_product; p -= n) {
    mpz_class cand(static_cast<unsigned long>(p));
    if (!mpz_probab_prime_p(cand.get_mpz_t(), 40)) continue;
    std::uint64_t w = 0;
    for (std::uint64_t r = 2; r < 200; ++r) {
      const std::uint64_t c = powmod(r, (p - 1) / n, p);
      bool primitive = (n == 1) ? c == 1 : c != 1;
      for (const auto q : qs) primitive = primitive && powmod(c, n / q, p) != 1;
      if (primitive) {
        w = c;
        break;
      }
    }
    if (w == 0) continue;
    out.push_back({p, w});
    prod *= cand;
  }
  return out;
}

std::uint64_t mpz_mod_u64(const mpz_class& v, std::uint64_t p) {
  mpz_class r = v % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

// Determinant of an m x m matrix over F_p by Gaussian elimination.
std::uint64_t det_mod_p(std::vector<std::uint64_t> a, std::size_t m, std::uint64_t p) {
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot * m + col] == 0) ++pivot;
    if (pivot == m) return 0;
    if (pivot != col) {
      for (std::size_t j = col; j < m; ++j) std::swap(a[pivot * m + j], a[col * m + j]);
      det = p - det;
    }
    const std::uint64_t pv = a[col * m + col];
    det = mulmod(det, pv, p);
    const std::uint64_t pinv = invmod(pv, p);
    for (std::size_t i = col + 1; i < m; ++i) {
      const std::uint64_t f = mulmod(a[i * m + col], pinv, p);
      if (f == 0) continue;
      for (std::size_t j = col; j < m; ++j) {
        const std::uint64_t s = mulmod(f, a[col * m + j], p);
        a[i * m + j] = (a[i * m + j] + p - s) % p;
      }
    }
  }
  return det % p;
}

}  // namespace

ExactMatrix::ExactMatrix(const CyclotomicContext& ctx, std::size_t rows, std::size_t cols)
    : ctx_(&ctx), rows_(rows), cols_(cols), entries_(rows * cols, CycNum(ctx)) {}

ExactMatrix ExactMatrix::identity(const CyclotomicContext& ctx, std::size_t m) {
  ExactMatrix r(ctx, m, m);
  for (std::size_t i = 0; i < m; ++i) r.at(i, i) = CycNum(ctx, 1);
  return r;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  ExactMatrix r(*a.ctx_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycNum& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * b.at(k, j);
      }
    }
  return r;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix shape mismatch in sum");
  ExactMatrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
  return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix shape mismatch in difference");
  ExactMatrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
  return r;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

ExactMatrix ExactMatrix::scaled(const CycNum& c) const {
  ExactMatrix r = *this;
  for (auto& e : r.entries_) e *= c;
  return r;
}

ExactMatrix ExactMatrix::conj_transpose() const {
  ExactMatrix r(*ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

// Exact determinant by modular evaluation. Direct elimination over Q(zeta_n)
// suffers severe coefficient blowup (the pivots' inverses dominate), so
// instead:
//   1. scale each row to integer coordinates, lift entries to the group ring
//      Z[x]/(x^n - 1), where the determinant has integer coefficients with an
//      easy a-priori bound;
//   2. for primes p = 1 (mod n), x^n - 1 splits over F_p: evaluate the
//      entries at all n roots of unity, take n scalar determinants mod p, and
//      recover the coefficient vector mod p by an inverse DFT;
//   3. CRT the coefficients across enough primes to pass the bound, lift
//      symmetrically, reduce mod Phi_n and restore the denominator.
// Every step is a ring homomorphism, so the result is exact.
CycNum ExactMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t m = rows_;
  const std::uint64_t n = ctx_->n();
  const std::size_t deg = ctx_->degree();
  if (m == 0) return CycNum(*ctx_, 1);

  // Integer lift: per-row common denominator, entries as integer coefficient
  // vectors of length deg (a valid preimage in Z[x]/(x^n - 1)).
  std::vector<mpz_class> lifted(m * m * deg);
  mpz_class den = 1;
  mpz_class maxc = 0;
  for (std::size_t i = 0; i < m; ++i) {
    mpz_class row_den = 1;
    for (std::size_t j = 0; j < m; ++j)
      mpz_lcm(row_den.get_mpz_t(), row_den.get_mpz_t(), at(i, j).denominator().get_mpz_t());
    for (std::size_t j = 0; j < m; ++j) {
      const CycNum& e = at(i, j);
      const mpz_class scale = row_den / e.denominator();
      for (std::size_t k = 0; k < deg; ++k) {
        mpz_class& c = lifted[(i * m + j) * deg + k];
        c = e.numerator(k) * scale;
        mpz_class a = abs(c);
        if (a > maxc) maxc = a;
      }
    }
    den *= row_den;
  }
  if (maxc == 0) return CycNum(*ctx_);  // zero matrix

  // Coefficient bound in the group ring: the Leibniz expansion has m! terms,
  // each a product of m entries; a product of m polynomials with coefficients
  // bounded by maxc has coefficients bounded by n^(m-1) * maxc^m.
  mpz_class bound;
  mpz_fac_ui(bound.get_mpz_t(), static_cast<unsigned long>(m));
  mpz_class t;
  mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m - 1));
  bound *= t;
  mpz_pow_ui(t.get_mpz_t(), maxc.get_mpz_t(), static_cast<unsigned long>(m));
  bound *= t;

  const auto primes = eval_primes(n, 2 * bound);

  // Per prime: n scalar determinants (one per root of unity), inverse DFT.
  std::vector<std::vector<std::uint64_t>> coeffs_mod(primes.size());
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    const auto [p, w] = primes[pi];
    std::vector<std::uint64_t> pow(n);  // w^t for t = 0..n-1
    pow[0] = 1;
    for (std::size_t tdx = 1; tdx < n; ++tdx) pow[tdx] = mulmod(pow[tdx - 1], w, p);
    std::vector<std::vector<std::uint64_t>> entry_c(m * m, std::vector<std::uint64_t>(deg));
    for (std::size_t e = 0; e < m * m; ++e)
      for (std::size_t k = 0; k < deg; ++k) entry_c[e][k] = mpz_mod_u64(lifted[e * deg + k], p);
    std::vector<std::uint64_t> dets(n);
    std::vector<std::uint64_t> scalar(m * m);
    for (std::size_t tdx = 0; tdx < n; ++tdx) {
      const std::uint64_t x = pow[tdx];
      for (std::size_t e = 0; e < m * m; ++e) {
        std::uint64_t acc = 0;
        for (std::size_t k = deg; k-- > 0;) acc = (mulmod(acc, x, p) + entry_c[e][k]) % p;
        scalar[e] = acc;
      }
      dets[tdx] = det_mod_p(scalar, m, p);
    }
    // coeff_j = n^{-1} * sum_t dets[t] * w^{-jt}
    const std::uint64_t ninv = invmod(n % p, p);
    auto& cm = coeffs_mod[pi];
    cm.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t tdx = 0; tdx < n; ++tdx)
        acc = (acc + mulmod(dets[tdx], pow[(n - (j * tdx) % n) % n], p)) % p;
      cm[j] = mulmod(acc, ninv, p);
    }
  }

  // CRT per coefficient (Garner), then symmetric lift against the bound.
  mpz_class modulus = 1;
  for (const auto& ep : primes) modulus *= mpz_class(static_cast<unsigned long>(ep.p));
  std::vector<Rational> poly(n);
  for (std::size_t j = 0; j < n; ++j) {
    mpz_class x = 0, mprod = 1;
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
      const std::uint64_t p = primes[pi].p;
      const std::uint64_t xp = mpz_mod_u64(x, p);
      const std::uint64_t diff = (coeffs_mod[pi][j] + p - xp) % p;
      const std::uint64_t step = mulmod(diff, invmod(mpz_mod_u64(mprod, p), p), p);
      x += mprod * mpz_class(static_cast<unsigned long>(step));
      mprod *= mpz_class(static_cast<unsigned long>(p));
    }
    if (2 * x > modulus) x -= modulus;
    Rational c(x, den);
    c.canonicalize();
    poly[j] = c;
  }
  return CycNum(*ctx_, poly);
}

ExactMatrix ExactMatrix::minor(std::size_t j) const {
  if (rows_ != cols_) throw std::invalid_argument("minor of non-square matrix");
  if (j < 1 || j > rows_) throw std::out_of_range("minor index out of range");
  ExactMatrix r(*ctx_, rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, ri = 0; i < rows_; ++i) {
    if (i == j - 1) continue;
    for (std::size_t k = 0, rk = 0; k < cols_; ++k) {
      if (k == j - 1) continue;
      r.at(ri, rk) = at(i, k);
      ++rk;
    }
    ++ri;
  }
  return r;
}

ExactMatrix ExactMatrix::solve(const ExactMatrix& b) const {
  if (rows_ != cols_) throw std::invalid_argument("solve needs a square matrix");
  if (b.rows_ != rows_) throw std::invalid_argument("solve shape mismatch");
  ExactMatrix w = *this;
  ExactMatrix x = b;
  const std::size_t m = rows_;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && w.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m) throw SingularMatrix();
    if (pivot != col) {
      for (std::size_t j = col; j < m; ++j) std::swap(w.at(pivot, j), w.at(col, j));
      for (std::size_t j = 0; j < x.cols_; ++j) std::swap(x.at(pivot, j), x.at(col, j));
    }
    const CycNum pinv = w.at(col, col).inv();
    for (std::size_t j = col; j < m; ++j) w.at(col, j) *= pinv;
    for (std::size_t j = 0; j < x.cols_; ++j) x.at(col, j) *= pinv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == col || w.at(i, col).is_zero()) continue;
      const CycNum factor = w.at(i, col);
      for (std::size_t j = col; j < m; ++j) w.at(i, j) -= factor * w.at(col, j);
      for (std::size_t j = 0; j < x.cols_; ++j) x.at(i, j) -= factor * x.at(col, j);
    }
  }
  return x;
}

CycNum ExactMatrix::charpoly_eval(const CycNum& t) const {
  if (rows_ != cols_) throw std::invalid_argument("charpoly of non-square matrix");
  ExactMatrix w = *this;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) w.at(i, j) = -w.at(i, j);
    w.at(i, i) += t;
  }
  return w.determinant();
}

}  // namespace cyclo
