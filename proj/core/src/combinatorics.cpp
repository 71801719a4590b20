#include "courant/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace courant {

long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<int>> increasing_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> t(static_cast<std::size_t>(k));
  std::iota(t.begin(), t.end(), 0);
  for (;;) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

long tuple_rank(std::span<const int> tuple, int n) {
  const int k = static_cast<int>(tuple.size());
  long rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    int c = tuple[static_cast<std::size_t>(i)];
    if (c <= prev || c >= n) throw std::invalid_argument("tuple_rank: tuple not strictly increasing in range");
    for (int j = prev + 1; j < c; ++j) rank += binomial(n - 1 - j, k - 1 - i);
    prev = c;
  }
  return rank;
}

int sort_with_sign(std::span<int> indices) {
  int sign = 1;
  // Insertion sort; tuples here are at most a handful of entries long.
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
      if (indices[j - 1] == indices[j]) return 0;
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i - 1] == indices[i]) return 0;
  return sign;
}

std::vector<SignedPermutation> permutations_with_sign(int k) {
  std::vector<SignedPermutation> out;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
    out.push_back({p, inversions % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace courant
