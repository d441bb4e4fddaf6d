#include "rsq/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsq {

bool word_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_lyndon: empty word");
  for (std::size_t a = 1; a < w.size(); ++a) {
    Word suffix(w.begin() + a, w.end());
    if (!word_less(w, suffix)) return false;
  }
  return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2 || !is_lyndon(w)) throw std::invalid_argument("standard_factorization: need a Lyndon word of length >= 2");
  for (std::size_t k = w.size() - 1; k >= 1; --k) {
    Word prefix(w.begin(), w.begin() + k);
    if (is_lyndon(prefix)) return {prefix, Word(w.begin() + k, w.end())};
  }
  throw std::logic_error("unreachable");
}

std::vector<Word> canonical_factorization(const Word& w) {
  // Duval's algorithm
  std::vector<Word> out;
  std::size_t i = 0;
  const std::size_t n = w.size();
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && w[k] <= w[j]) {
      k = w[k] < w[j] ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.emplace_back(w.begin() + i, w.begin() + i + (j - k));
      i += j - k;
    }
  }
  return out;
}

namespace {

void fill_positions(ConvexOrder& o) {
  o.position.assign(o.rs->positive_roots().size(), -1);
  for (int k = 0; k < static_cast<int>(o.roots.size()); ++k) o.position[o.roots[k]] = k;
}

}  // namespace

ConvexOrder lalonde_ram(const RootSystem& rs) {
  const auto& roots = rs.positive_roots();
  ConvexOrder o;
  o.rs = std::make_shared<const RootSystem>(rs);
  o.word_of_root.assign(roots.size(), Word{});
  std::vector<int> by_height(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) by_height[i] = static_cast<int>(i);
  std::stable_sort(by_height.begin(), by_height.end(),
                   [&](int a, int b) { return roots[a].height < roots[b].height; });
  for (int g : by_height) {
    if (roots[g].height == 1) {
      int i = static_cast<int>(std::find(roots[g].alpha.begin(), roots[g].alpha.end(), 1) - roots[g].alpha.begin());
      o.word_of_root[g] = Word{i + 1};
      continue;
    }
    Word best;
    for (std::size_t g1 = 0; g1 < roots.size(); ++g1) {
      if (roots[g1].height >= roots[g].height) continue;
      auto g2 = rs.root_index(roots[g].eps - roots[g1].eps);
      if (!g2) continue;
      const Word& w1 = o.word_of_root[g1];
      const Word& w2 = o.word_of_root[*g2];
      if (!word_less(w1, w2)) continue;
      Word cat = w1;
      cat.insert(cat.end(), w2.begin(), w2.end());
      if (best.empty() || word_less(best, cat)) best = cat;
    }
    o.word_of_root[g] = best;
  }
  o.roots = by_height;
  std::sort(o.roots.begin(), o.roots.end(),
            [&](int a, int b) { return word_less(o.word_of_root[a], o.word_of_root[b]); });
  fill_positions(o);
  return o;
}

ConvexOrder order_from_list(const RootSystem& rs, const std::vector<int>& list) {
  ConvexOrder o;
  o.rs = std::make_shared<const RootSystem>(rs);
  o.roots = list;
  o.word_of_root.assign(rs.positive_roots().size(), Word{});
  fill_positions(o);
  for (int p : o.position)
    if (p < 0) throw std::invalid_argument("order does not cover all positive roots");
  return o;
}

bool is_convex(const ConvexOrder& o) {
  const auto& roots = o.rs->positive_roots();
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = 0; b < roots.size(); ++b) {
      if (!o.less(static_cast<int>(a), static_cast<int>(b))) continue;
      auto c = o.rs->root_index(roots[a].eps + roots[b].eps);
      if (!c) continue;
      if (!(o.less(static_cast<int>(a), *c) && o.less(*c, static_cast<int>(b)))) return false;
    }
  }
  return true;
}

std::pair<int, int> minimal_pair(const ConvexOrder& o, int root) {
  const Word& w = o.word_of_root.at(root);
  if (w.size() < 2) throw std::invalid_argument("minimal_pair: root is simple");
  auto [w1, w2] = standard_factorization(w);
  int a = -1, b = -1;
  for (std::size_t i = 0; i < o.word_of_root.size(); ++i) {
    if (o.word_of_root[i] == w1) a = static_cast<int>(i);
    if (o.word_of_root[i] == w2) b = static_cast<int>(i);
  }
  if (a < 0 || b < 0) throw std::logic_error("minimal_pair: factor is not a root word");
  return {a, b};
}

bool satisfies_min_pair(const ConvexOrder& o, int root, int alpha, int beta) {
  const auto& roots = o.rs->positive_roots();
  if (roots[alpha].eps + roots[beta].eps != roots[root].eps) return false;
  if (!(o.less(alpha, root) && o.less(root, beta))) return false;
  for (std::size_t a2 = 0; a2 < roots.size(); ++a2) {
    auto b2 = o.rs->root_index(roots[root].eps - roots[a2].eps);
    if (!b2) continue;
    int x = static_cast<int>(a2), y = *b2;
    if (o.less(alpha, x) && o.less(x, root) && o.less(root, y) && o.less(y, beta)) return false;
  }
  return true;
}

std::vector<int> printed_order(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<Weight> seq;
  auto g = [&](int i, int j) { seq.push_back(gamma_root(rs, i, j)); };
  auto b = [&](int i, int j) { seq.push_back(beta_root(rs, i, j)); };
  switch (rs.family()) {
    case Family::A:
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) g(i, j);
      break;
    case Family::B:
      for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) g(i, j);
        for (int j = n; j > i; --j) b(i, j);
      }
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) {
        for (int j = i; j < n; ++j) g(i, j);
        b(i, i);
        g(i, n);
        for (int j = n - 1; j > i; --j) b(i, j);
      }
      g(n, n);
      break;
    case Family::D:
      for (int i = 1; i <= n - 2; ++i) {
        for (int j = i; j < n; ++j) g(i, j);
        for (int j = n; j > i; --j) b(i, j);
      }
      g(n - 1, n - 1);
      b(n - 1, n);
      break;
  }
  std::vector<int> out;
  for (const auto& w : seq) out.push_back(*rs.root_index(w));
  return out;
}

bool is_telescopic(const ConvexOrder& o) {
  const auto& rs = *o.rs;
  const int n = rs.rank();
  const int lo = rs.family() == Family::D ? 3 : min_rank(rs.family());
  if (n - 1 < lo) return true;
  auto small = RootSystem::build(rs.family(), n - 1);
  auto os = lalonde_ram(small);
  std::vector<Word> kept, expect;
  for (int r : o.roots)
    if (rs.positive_roots()[r].alpha[0] == 0) {
      Word w = o.word_of_root[r];
      for (auto& l : w) --l;
      kept.push_back(w);
    }
  for (int r : os.roots) expect.push_back(os.word_of_root[r]);
  return kept == expect;
}

}  // namespace rsq
