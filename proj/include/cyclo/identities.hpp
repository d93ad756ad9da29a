#ifndef CYCLO_IDENTITIES_HPP
#define CYCLO_IDENTITIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/circulant.hpp"
#include "cyclo/linalg.hpp"

namespace cyclo {

enum class Identity { sun1, sun2, theorem3, lemma1, eei, spectrum, scaling };
enum class Method { brute, det, spectrum, minor_thm, direct };

std::string to_string(Identity id);
std::string to_string(Method m);

/// One verification outcome; lhs and rhs are exact and verified is their
/// canonical equality.
struct VerificationReport {
  Identity identity;
  unsigned n;
  Method method;
  CycNum lhs;
  CycNum rhs;
  bool verified;
  std::int64_t elapsed_ms;
  std::string details;
};

/// (-1)^((n-1)/2) * (((n-1)/2)!)^2 / n, the sun1 right-hand side.
Rational rhs_sun1(unsigned n);
/// (-1)^((n-1)/2) * ((n-2)!!)^2 / n, the sun2 right-hand side.
Rational rhs_sun2(unsigned n);

/// The signed derangement sum of Theorem 1, computed by the chosen route
/// and compared exactly to rhs_sun1(n).
VerificationReport verify_sun1(const CyclotomicContext& ctx, Method method,
                               unsigned workers = 1);
VerificationReport verify_sun2(const CyclotomicContext& ctx, Method method,
                               unsigned workers = 1);

/// det M_j = (1/n) prod_{i != s} lambda_i for every deleted index j and
/// every vanishing DFT index s. Throws if condition (ii) or (iii) fails.
std::vector<VerificationReport> verify_theorem3(const CirculantSymbol& sym);

/// Every instance of the appendix lemma: (l1), (l2) over the full (s, k)
/// grid plus the two one-dimensional sum families (s1)/(s2).
VerificationReport verify_lemma1(const CyclotomicContext& ctx);

/// det(B_1) = n always; for prime n also det(B_s) = n and
/// det(C_s) = n det(A) for every admissible s. For composite n the s with
/// det(B_s) != n are recorded in details (expected, not a failure).
VerificationReport verify_scaling(const CyclotomicContext& ctx);

/// The displayed eigenvector sum identity for C_s and the singularity
/// checks charpoly(C_s, s) = 0 over the admissible s range.
VerificationReport verify_c_s_eigenvalue(const CyclotomicContext& ctx);

/// Per-instance eigenvector-eigenvalue identity report for (i, j).
VerificationReport verify_eei_report(const CirculantSymbol& sym, unsigned i, unsigned j);

}  // namespace cyclo

#endif
