#ifndef CYCLO_MATRIX_HPP
#define CYCLO_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cyclo/cycnum.hpp"

namespace cyclo {

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

/// Dense matrix over Q(zeta_n); all entries share one context. Immutable
/// use is the norm: operations return new matrices.
class ExactMatrix {
 public:
  ExactMatrix(const CyclotomicContext& ctx, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(const CyclotomicContext& ctx, std::size_t m);

  const CyclotomicContext& context() const { return *ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycNum& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const CycNum& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  ExactMatrix scaled(const CycNum& c) const;
  ExactMatrix conj_transpose() const;

  /// Exact determinant by Gaussian elimination, pivoting on the first
  /// nonzero entry per column; det of the 0x0 matrix is 1.
  CycNum determinant() const;

  /// Principal minor: delete row j and column j (1-based, matching the
  /// usual statement of the identities).
  ExactMatrix minor(std::size_t j) const;

  /// Exact X with (*this) * X = b. Throws SingularMatrix.
  ExactMatrix solve(const ExactMatrix& b) const;

  /// det(t*I - *this), the characteristic polynomial at t.
  CycNum charpoly_eval(const CycNum& t) const;

 private:
  const CyclotomicContext* ctx_;
  std::size_t rows_, cols_;
  std::vector<CycNum> entries_;
};

}  // namespace cyclo

#endif
