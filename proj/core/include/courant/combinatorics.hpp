#pragma once

#include <span>
#include <vector>

namespace courant {

long binomial(int n, int k);

// All strictly increasing k-tuples drawn from {0..n-1}, in lexicographic order.
std::vector<std::vector<int>> increasing_tuples(int n, int k);

// Position of a strictly increasing tuple in increasing_tuples(n, k).
long tuple_rank(std::span<const int> tuple, int n);

// Sorts in place and returns the sign of the sorting permutation, or 0 when
// an index repeats.
int sort_with_sign(std::span<int> indices);

// Every permutation of {0..k-1} with its sign, in lexicographic order.
struct SignedPermutation {
  std::vector<int> perm;
  int sign;
};
std::vector<SignedPermutation> permutations_with_sign(int k);

}  // namespace courant
