#ifndef CYCLO_DERANGEMENTS_HPP
#define CYCLO_DERANGEMENTS_HPP

#include <functional>
#include <vector>

#include "cyclo/matrix.hpp"

namespace cyclo {

/// A permutation of {1..m} (1-based images) with its sign.
struct SignedPermutation {
  std::vector<unsigned> mapping;
  int sign;

  bool is_derangement() const {
    for (std::size_t j = 0; j < mapping.size(); ++j)
      if (mapping[j] == j + 1) return false;
    return true;
  }
};

/// Subfactorial D(m) via D(m) = (m-1)(D(m-1) + D(m-2)).
mpz_class count_derangements(unsigned m);

/// Visits every derangement of {1..m} exactly once, in lexicographic order
/// of the image sequence, with its sign.
void for_each_derangement(unsigned m, const std::function<void(const SignedPermutation&)>& visit);

/// Signed derangement sum sum_{tau in D(m)} sign(tau) prod_j m[j][tau(j)].
/// Requires an exactly zero diagonal (the restriction to derangements is
/// only valid there). `workers` > 1 partitions the enumeration by the
/// image of position 1; the exact sum is independent of the partition.
CycNum brute_det(const ExactMatrix& m, unsigned workers = 1);

}  // namespace cyclo

#endif
