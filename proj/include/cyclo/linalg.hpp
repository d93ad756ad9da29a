#ifndef CYCLO_LINALG_HPP
#define CYCLO_LINALG_HPP

#include <utility>
#include <vector>

#include "cyclo/circulant.hpp"
#include "cyclo/matrix.hpp"

namespace cyclo {

/// An ordered choice of n-1 of the Fourier vectors u_0..u_{n-1}; any such
/// choice is a basis of the (n-1)-dimensional space.
struct BasisSpec {
  const CyclotomicContext* ctx;
  std::vector<unsigned> included;  // distinct exponents, size n-1

  /// All exponents except `excluded`, ascending.
  static BasisSpec all_but(const CyclotomicContext& ctx, unsigned excluded);
};

/// Outcome of the block-lower-triangularity check.
struct TriangularReport {
  std::vector<CycNum> diagonal;
  std::vector<std::pair<std::size_t, std::size_t>> violating_positions;
  std::pair<std::vector<unsigned>, std::vector<unsigned>> block_partition;
  bool ok() const { return violating_positions.empty(); }
};

/// (n-1)x(n-1) matrix whose t-th column is u_{included[t]}, coordinates
/// zeta^(j*i) for row i = 1..n-1.
ExactMatrix fourier_basis(const BasisSpec& spec);

/// Diagonal matrix diag(1 - zeta^(i*s)), i = 1..n-1. s must not be 0 mod n.
ExactMatrix build_B_s(const CyclotomicContext& ctx, long s);

/// C_s = A * B_s.
ExactMatrix build_C_s(const ExactMatrix& a, long s);

/// U^(-1) * C * U with U = fourier_basis(spec).
ExactMatrix change_of_basis(const ExactMatrix& c, const BasisSpec& spec);

/// Checks the exact action of C_1 (sun1) on every Fourier vector:
/// C_1 u_s = ((n-1)/2 - s) u_s - ((n-1)/2 - s - 1) u_{s+1} for s < n-1,
/// and C_1 u_{n-1} = -(n-1)/2 (u_{n-1} + u_0).
bool verify_c1_recurrence(const CyclotomicContext& ctx);

/// Checks that R, in the basis order of spec split where break_index would
/// sit, has the form [[X, Y], [0, Z]] with X and Z lower-triangular.
TriangularReport assert_block_triangular(const ExactMatrix& r, const BasisSpec& spec,
                                         unsigned break_index);

/// True iff every candidate is a root of the characteristic polynomial of
/// M; with |candidates| = dim(M) and distinct entries this pins the
/// spectrum exactly.
bool verify_integer_spectrum(const ExactMatrix& m, const std::vector<long>& candidates);

/// Eigenvector-eigenvalue identity for the circulant of sym at eigenvalue
/// index i (0-based) and deleted row/column j (1-based):
/// (1/n) * prod_{k != i} (lambda_i - lambda_k) = det(lambda_i I - M_j).
/// Requires a normal symbol (condition (iii)).
bool verify_eei(const CirculantSymbol& sym, unsigned i, unsigned j);

}  // namespace cyclo

#endif
