#include "cyclo/derangements.hpp"

#include <thread>

namespace cyclo {

mpz_class count_derangements(unsigned m) {
  mpz_class prev2 = 1, prev1 = 0;  // D(0), D(1)
  if (m == 0) return prev2;
  for (unsigned k = 2; k <= m; ++k) {
    mpz_class cur = (k - 1) * (prev1 + prev2);
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

namespace {

// inversions contributed by placing value v (0-based) after the values
// flagged in `used`: the count of already-placed values greater than v
int added_inversions(const std::vector<char>& used, unsigned v) {
  int inv = 0;
  for (std::size_t w = v + 1; w < used.size(); ++w) inv += used[w];
  return inv;
}

struct Enumerator {
  unsigned m;
  const std::function<void(const SignedPermutation&)>& visit;
  std::vector<char> used;
  SignedPermutation perm;

  void rec(unsigned pos, int parity) {
    if (pos == m) {
      perm.sign = parity ? -1 : 1;
      visit(perm);
      return;
    }
    for (unsigned v = 0; v < m; ++v) {
      if (used[v] || v == pos) continue;
      used[v] = 1;
      perm.mapping[pos] = v + 1;
      rec(pos + 1, parity ^ (added_inversions(used, v) & 1));
      used[v] = 0;
    }
  }
};

struct BruteSummer {
  const ExactMatrix& mat;
  unsigned m;
  std::vector<char> used;
  CycNum sum;

  explicit BruteSummer(const ExactMatrix& mat_)
      : mat(mat_), m(static_cast<unsigned>(mat_.rows())), used(m, 0), sum(mat_.context()) {}

  void rec(unsigned pos, int parity, const CycNum& prefix) {
    if (pos == m) {
      if (parity)
        sum -= prefix;
      else
        sum += prefix;
      return;
    }
    for (unsigned v = 0; v < m; ++v) {
      if (used[v] || v == pos) continue;
      const CycNum& entry = mat.at(pos, v);
      if (entry.is_zero()) continue;  // the whole term vanishes
      used[v] = 1;
      rec(pos + 1, parity ^ (added_inversions(used, v) & 1), prefix * entry);
      used[v] = 0;
    }
  }
};

}  // namespace

void for_each_derangement(unsigned m,
                          const std::function<void(const SignedPermutation&)>& visit) {
  if (m == 0) {
    SignedPermutation empty{{}, 1};
    visit(empty);
    return;
  }
  Enumerator e{m, visit, std::vector<char>(m, 0), SignedPermutation{std::vector<unsigned>(m), 1}};
  e.rec(0, 0);
}

CycNum brute_det(const ExactMatrix& m, unsigned workers) {
  if (m.rows() != m.cols()) throw std::invalid_argument("brute_det: matrix must be square");
  const CyclotomicContext& ctx = m.context();
  const unsigned size = static_cast<unsigned>(m.rows());
  for (unsigned i = 0; i < size; ++i)
    if (!m.at(i, i).is_zero())
      throw std::invalid_argument("brute_det: diagonal must be exactly zero");
  if (size == 0) return CycNum(ctx, 1);
  if (size == 1) return CycNum(ctx);

  // independent sub-enumerations per image of position 1
  auto subtotal = [&](unsigned v) {
    BruteSummer s(m);
    if (m.at(0, v).is_zero()) return CycNum(ctx);
    s.used[v] = 1;
    s.rec(1, 0, m.at(0, v));
    return s.sum;
  };

  std::vector<CycNum> parts(size, CycNum(ctx));
  if (workers <= 1) {
    for (unsigned v = 1; v < size; ++v) parts[v] = subtotal(v);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (unsigned v = 1 + t; v < size; v += workers) parts[v] = subtotal(v);
      });
    for (auto& th : pool) th.join();
  }
  CycNum total(ctx);
  for (unsigned v = 1; v < size; ++v) total += parts[v];
  return total;
}

}  // namespace cyclo
