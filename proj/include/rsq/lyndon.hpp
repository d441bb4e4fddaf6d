#ifndef RSQ_LYNDON_HPP
#define RSQ_LYNDON_HPP

#include <memory>
#include <utility>
#include <vector>

#include "rsq/rootdata.hpp"

namespace rsq {

using Word = std::vector<int>;

// Lexicographic order in which a proper prefix is smaller than the word.
bool word_less(const Word& a, const Word& b);
bool is_lyndon(const Word& w);
std::pair<Word, Word> standard_factorization(const Word& w);
std::vector<Word> canonical_factorization(const Word& w);

// Positive roots listed in increasing order of their standard Lyndon words.
struct ConvexOrder {
  std::shared_ptr<const RootSystem> rs;
  std::vector<int> roots;          // indices into rs->positive_roots(), increasing
  std::vector<Word> word_of_root;  // indexed like rs->positive_roots()
  std::vector<int> position;       // position of each root in `roots`

  const Root& root_at(int k) const { return rs->positive_roots()[roots[k]]; }
  int size() const { return static_cast<int>(roots.size()); }
  bool less(int root_a, int root_b) const { return position[root_a] < position[root_b]; }
};

ConvexOrder lalonde_ram(const RootSystem& rs);
// Order given explicitly as a list of root indices.
ConvexOrder order_from_list(const RootSystem& rs, const std::vector<int>& roots);
bool is_convex(const ConvexOrder& order);

// The explicit per-family orders written with gamma_ij and beta_ij.
std::vector<int> printed_order(const RootSystem& rs);

// Roots free of alpha_1, with letters shifted down by one, give the order of rank n - 1.
bool is_telescopic(const ConvexOrder& order);

// Minimal pair (alpha, beta) of a non-simple root, from the standard
// factorization of its word. Returns root indices.
std::pair<int, int> minimal_pair(const ConvexOrder& order, int root);
// Exhaustive test of the minimal-pair condition.
bool satisfies_min_pair(const ConvexOrder& order, int root, int alpha, int beta);

}  // namespace rsq

#endif
