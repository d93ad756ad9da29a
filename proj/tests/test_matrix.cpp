#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyclo/circulant.hpp"
#include "cyclo/linalg.hpp"

using namespace cyclo;

namespace {

ExactMatrix random_matrix(const CyclotomicContext& ctx, std::size_t m, std::mt19937& rng,
                          bool zero_diagonal = false) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  ExactMatrix r(ctx, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (zero_diagonal && i == j) continue;
      std::vector<Rational> poly(ctx.degree());
      for (auto& c : poly) c = Rational(coeff(rng));
      r.at(i, j) = CycNum(ctx, poly);
    }
  return r;
}

// cofactor-expansion determinant, the independent oracle for elimination
CycNum cofactor_det(const ExactMatrix& m) {
  const std::size_t s = m.rows();
  if (s == 0) return CycNum(m.context(), 1);
  if (s == 1) return m.at(0, 0);
  CycNum det(m.context());
  for (std::size_t j = 0; j < s; ++j) {
    if (m.at(0, j).is_zero()) continue;
    ExactMatrix sub(m.context(), s - 1, s - 1);
    for (std::size_t r = 1; r < s; ++r)
      for (std::size_t c = 0, cc = 0; c < s; ++c) {
        if (c == j) continue;
        sub.at(r - 1, cc++) = m.at(r, c);
      }
    const CycNum term = m.at(0, j) * cofactor_det(sub);
    if (j % 2)
      det -= term;
    else
      det += term;
  }
  return det;
}

}  // namespace

TEST_CASE("determinant basics") {
  CyclotomicContext ctx(5);
  CHECK(ExactMatrix::identity(ctx, 4).determinant() == CycNum(ctx, 1));
  CHECK(ExactMatrix(ctx, 0, 0).determinant() == CycNum(ctx, 1));
  CHECK(ExactMatrix(ctx, 3, 3).determinant() == CycNum(ctx, 0));
}

TEST_CASE("det(B_1) = n for n = 3, 5, 7") {
  for (unsigned n : {3u, 5u, 7u}) {
    CyclotomicContext ctx(n);
    CHECK(build_B_s(ctx, 1).determinant() == CycNum(ctx, static_cast<long>(n)));
  }
}

TEST_CASE("sun1 corner minor determinant at n=3 is -1/3") {
  CyclotomicContext ctx(3);
  const ExactMatrix a = build_matrix(from_sun1(ctx)).minor(3);
  CHECK(a.determinant() == CycNum(ctx, Rational(-1, 3)));
}

TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
  std::mt19937 rng(17);
  for (unsigned n : {3u, 5u}) {
    CyclotomicContext ctx(n);
    for (std::size_t m = 1; m <= 4; ++m)
      for (int rep = 0; rep < 10; ++rep) {
        const ExactMatrix a = random_matrix(ctx, m, rng);
        CHECK(a.determinant() == cofactor_det(a));
      }
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937 rng(23);
  CyclotomicContext ctx(5);
  for (std::size_t m = 2; m <= 4; ++m)
    for (int rep = 0; rep < 8; ++rep) {
      const ExactMatrix a = random_matrix(ctx, m, rng);
      const ExactMatrix b = random_matrix(ctx, m, rng);
      CHECK((a * b).determinant() == a.determinant() * b.determinant());
    }
}

TEST_CASE("minor") {
  CyclotomicContext ctx(5);
  const ExactMatrix id5 = ExactMatrix::identity(ctx, 5);
  for (std::size_t j = 1; j <= 5; ++j) CHECK(id5.minor(j) == ExactMatrix::identity(ctx, 4));
  CHECK_THROWS_AS(id5.minor(0), std::out_of_range);
  CHECK_THROWS_AS(id5.minor(6), std::out_of_range);

  ExactMatrix two(ctx, 2, 2);
  two.at(0, 0) = CycNum(ctx, 7);
  CHECK(two.minor(2).rows() == 1);
  CHECK(two.minor(2).at(0, 0) == CycNum(ctx, 7));
}

TEST_CASE("solve") {
  std::mt19937 rng(31);
  CyclotomicContext ctx(7);
  const ExactMatrix b = random_matrix(ctx, 3, rng);
  CHECK(ExactMatrix::identity(ctx, 3).solve(b) == b);
  for (int rep = 0; rep < 10; ++rep) {
    const ExactMatrix a = random_matrix(ctx, 3, rng);
    if (a.determinant().is_zero()) continue;
    CHECK(a * a.solve(b) == b);
  }
  CHECK_THROWS_AS(ExactMatrix(ctx, 2, 2).solve(ExactMatrix(ctx, 2, 1)), SingularMatrix);
}

TEST_CASE("charpoly_eval") {
  CyclotomicContext ctx(5);
  CHECK(ExactMatrix(ctx, 2, 2).charpoly_eval(CycNum(ctx, 5)) == CycNum(ctx, 25));

  // matrix with spectrum {1, -1}
  ExactMatrix swap(ctx, 2, 2);
  swap.at(0, 1) = CycNum(ctx, 1);
  swap.at(1, 0) = CycNum(ctx, 1);
  CHECK(swap.charpoly_eval(CycNum(ctx, 1)).is_zero());
  CHECK(swap.charpoly_eval(CycNum(ctx, -1)).is_zero());
  CHECK(!swap.charpoly_eval(CycNum(ctx, 2)).is_zero());

  // sun1 C_1 at n=5 has spectrum {+-1, +-2}; 3 is not an eigenvalue
  const ExactMatrix a = build_matrix(from_sun1(ctx)).minor(5);
  const ExactMatrix c1 = build_C_s(a, 1);
  CHECK(!c1.charpoly_eval(CycNum(ctx, 3)).is_zero());
  CHECK(c1.charpoly_eval(CycNum(ctx, 2)).is_zero());
}

TEST_CASE("change_of_basis preserves determinant and charpoly values") {
  std::mt19937 rng(37);
  CyclotomicContext ctx(5);
  const BasisSpec basis = BasisSpec::all_but(ctx, 2);
  for (int rep = 0; rep < 5; ++rep) {
    const ExactMatrix c = random_matrix(ctx, 4, rng);
    const ExactMatrix r = change_of_basis(c, basis);
    CHECK(r.determinant() == c.determinant());
    const CycNum t = zeta_pow(ctx, 1) + CycNum(ctx, 2);
    CHECK(r.charpoly_eval(t) == c.charpoly_eval(t));
  }
  CHECK(change_of_basis(ExactMatrix::identity(ctx, 4), basis) ==
        ExactMatrix::identity(ctx, 4));
}

TEST_CASE("B_s construction and degenerate cases") {
  CyclotomicContext c3(3);
  const ExactMatrix b1 = build_B_s(c3, 1);
  CHECK(b1.at(0, 0) == CycNum(c3, 1) - zeta_pow(c3, 1));
  CHECK(b1.at(1, 1) == CycNum(c3, 1) - zeta_pow(c3, 2));
  CHECK(b1.at(0, 1).is_zero());
  CHECK_THROWS_AS(build_B_s(c3, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_B_s(c3, 3), std::invalid_argument);

  // n=9, s=3: the diagonal hits 1 - zeta^0 = 0 twice
  CyclotomicContext c9(9);
  CHECK(build_B_s(c9, 3).determinant().is_zero());
  CHECK(build_B_s(c9, 1).determinant() == CycNum(c9, 9));

  // n=7 prime: js runs over a permutation of the exponents
  CyclotomicContext c7(7);
  CHECK(build_B_s(c7, 2).determinant() == CycNum(c7, 7));
}

TEST_CASE("C_s at n=3") {
  CyclotomicContext ctx(3);
  const ExactMatrix a = build_matrix(from_sun1(ctx)).minor(3);
  const ExactMatrix c1 = build_C_s(a, 1);
  CHECK(c1.at(0, 0).is_zero());
  CHECK(c1.at(1, 1).is_zero());
  CHECK(c1.at(0, 1) == CycNum(ctx, 1));
  CHECK(c1.at(1, 0) == CycNum(ctx, 1));

  const ExactMatrix a2 = build_matrix(from_sun2(ctx)).minor(3);
  const ExactMatrix c1p = build_C_s(a2, 1);
  CHECK(c1p.at(0, 1) == CycNum(ctx, 1) + zeta_pow(ctx, 2));
  CHECK(c1p.at(1, 0) == CycNum(ctx, 1) + zeta_pow(ctx, 1));
  CHECK(c1p.determinant() == CycNum(ctx, -1));
}

TEST_CASE("det(C_1) = n det(A) for n = 3, 5, 7") {
  for (unsigned n : {3u, 5u, 7u}) {
    CyclotomicContext ctx(n);
    const ExactMatrix a = build_matrix(from_sun1(ctx)).minor(n);
    CHECK(build_C_s(a, 1).determinant() ==
          CycNum(ctx, static_cast<long>(n)) * a.determinant());
  }
}

TEST_CASE("fourier basis") {
  CyclotomicContext c3(3);
  BasisSpec spec{&c3, {0, 2}};
  const ExactMatrix u = fourier_basis(spec);
  CHECK(u.at(0, 0) == CycNum(c3, 1));
  CHECK(u.at(1, 0) == CycNum(c3, 1));
  CHECK(u.at(0, 1) == zeta_pow(c3, 2));
  CHECK(u.at(1, 1) == zeta_pow(c3, 1));

  // sum of all n Fourier vectors is zero
  for (unsigned n : {3u, 5u, 7u}) {
    CyclotomicContext ctx(n);
    ExactMatrix total(ctx, n - 1, 1);
    for (unsigned j = 0; j < n; ++j)
      for (unsigned i = 1; i < n; ++i)
        total.at(i - 1, 0) += zeta_pow(ctx, static_cast<long>(j) * i);
    CHECK(total == ExactMatrix(ctx, n - 1, 1));
  }
}

TEST_CASE("every (n-1)-subset of Fourier vectors is a basis, n <= 9") {
  for (unsigned n = 3; n <= 9; ++n) {
    CyclotomicContext ctx(n);
    for (unsigned excluded = 0; excluded < n; ++excluded) {
      const BasisSpec spec = BasisSpec::all_but(ctx, excluded);
      CHECK(!fourier_basis(spec).determinant().is_zero());
    }
  }
}

TEST_CASE("change_of_basis of sun1 C_1 at n=3 in basis (0,2)") {
  CyclotomicContext ctx(3);
  const ExactMatrix a = build_matrix(from_sun1(ctx)).minor(3);
  const ExactMatrix r = change_of_basis(build_C_s(a, 1), BasisSpec{&ctx, {0, 2}});
  CHECK(r.at(0, 0) == CycNum(ctx, 1));
  CHECK(r.at(0, 1) == CycNum(ctx, -1));
  CHECK(r.at(1, 0).is_zero());
  CHECK(r.at(1, 1) == CycNum(ctx, -1));
}

TEST_CASE("change_of_basis of sun2 C'_1 at n=3 in basis (1,2)") {
  CyclotomicContext ctx(3);
  const ExactMatrix a = build_matrix(from_sun2(ctx)).minor(3);
  const ExactMatrix r = change_of_basis(build_C_s(a, 1), BasisSpec{&ctx, {1, 2}});
  CHECK(r.at(0, 0) == CycNum(ctx, 1));
  CHECK(r.at(0, 1).is_zero());
  CHECK(r.at(1, 0) == CycNum(ctx, 1));
  CHECK(r.at(1, 1) == CycNum(ctx, -1));
}

TEST_CASE("c1 recurrence holds for odd n") {
  for (unsigned n : {3u, 5u, 7u, 9u}) {
    CyclotomicContext ctx(n);
    CHECK(verify_c1_recurrence(ctx));
  }
}

TEST_CASE("block triangular report for sun1") {
  CyclotomicContext ctx(5);
  const ExactMatrix a = build_matrix(from_sun1(ctx)).minor(5);
  const BasisSpec basis = BasisSpec::all_but(ctx, 2);
  const ExactMatrix r = change_of_basis(build_C_s(a, 1), basis);
  const TriangularReport rep = assert_block_triangular(r, basis, 2);
  CHECK(rep.ok());
  REQUIRE(rep.diagonal.size() == 4);
  CHECK(rep.diagonal[0] == CycNum(ctx, 2));
  CHECK(rep.diagonal[1] == CycNum(ctx, 1));
  CHECK(rep.diagonal[2] == CycNum(ctx, -1));
  CHECK(rep.diagonal[3] == CycNum(ctx, -2));
  CHECK(rep.block_partition.first == std::vector<unsigned>{0, 1});
  CHECK(rep.block_partition.second == std::vector<unsigned>{3, 4});
}

TEST_CASE("block triangular negative control: dense random matrix") {
  std::mt19937 rng(41);
  CyclotomicContext ctx(5);
  const BasisSpec basis = BasisSpec::all_but(ctx, 2);
  const TriangularReport rep =
      assert_block_triangular(random_matrix(ctx, 4, rng), basis, 2);
  CHECK(!rep.ok());
}

TEST_CASE("integer spectrum verification") {
  CyclotomicContext c7(7);
  const ExactMatrix a7 = build_matrix(from_sun1(c7)).minor(7);
  CHECK(verify_integer_spectrum(build_C_s(a7, 1), {1, -1, 2, -2, 3, -3}));

  CyclotomicContext c5(5);
  const ExactMatrix a5s2 = build_matrix(from_sun2(c5)).minor(5);
  CHECK(verify_integer_spectrum(build_C_s(a5s2, 1), {1, -1, 3, -3}));

  const ExactMatrix a5 = build_matrix(from_sun1(c5)).minor(5);
  CHECK(!verify_integer_spectrum(build_C_s(a5, 1), {1, -1, 3, -3}));  // 3 is not a root
  CHECK_THROWS_AS(verify_integer_spectrum(build_C_s(a5, 1), {1, 1, 2, -2}),
                  std::invalid_argument);
}

TEST_CASE("eigenvector-eigenvalue identity, n=5, all pairs") {
  CyclotomicContext ctx(5);
  for (const auto& sym : {from_sun1(ctx), from_sun2(ctx)})
    for (unsigned i = 0; i < 5; ++i)
      for (unsigned j = 1; j <= 5; ++j) CHECK(verify_eei(sym, i, j));
}
