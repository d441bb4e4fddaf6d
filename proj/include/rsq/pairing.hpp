#ifndef RSQ_PAIRING_HPP
#define RSQ_PAIRING_HPP

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "rsq/lyndon.hpp"
#include "rsq/report.hpp"
#include "rsq/rootdata.hpp"
#include "rsq/scalar.hpp"

namespace rsq {

// Element of the positive half (words in e_i followed by omega_nu) or the
// negative half (words in f_i followed by omega'_nu). Cartan exponents are
// in simple-root coordinates.
class HalfElement {
 public:
  enum class Side { Plus, Minus };
  using Key = std::pair<Word, std::vector<int>>;

  HalfElement() = default;
  HalfElement(std::shared_ptr<const RootSystem> rs, RingPtr ring, Side side);

  static HalfElement one(std::shared_ptr<const RootSystem> rs, RingPtr ring, Side side);
  static HalfElement generator(std::shared_ptr<const RootSystem> rs, RingPtr ring, Side side, int i);
  static HalfElement cartan(std::shared_ptr<const RootSystem> rs, RingPtr ring, Side side, std::vector<int> nu);

  Side side() const { return side_; }
  const RingPtr& ring() const { return ring_; }
  const RootSystem& root_system() const { return *rs_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, const Scalar& c);

  HalfElement operator+(const HalfElement& o) const;
  HalfElement operator-(const HalfElement& o) const;
  HalfElement operator*(const HalfElement& o) const;
  HalfElement pow(int m) const;
  friend HalfElement operator*(const Scalar& c, const HalfElement& x);
  bool operator==(const HalfElement& o) const { return side_ == o.side_ && terms_ == o.terms_; }

  // Degree of a word in simple-root coordinates (letters counted, sign ignored).
  std::vector<int> word_degree(const Word& w) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  RingPtr ring_;
  Side side_ = Side::Plus;
  std::map<Key, Scalar> terms_;
};

// Sum of c * (left (x) right) over normal-ordered keys.
struct TensorTerm {
  HalfElement::Key left, right;
  Scalar coeff;
};
std::vector<TensorTerm> coproduct(const HalfElement& x);

class PairingOracle {
 public:
  // Which argument gets split by the coproduct at each recursion step.
  enum class Strategy { SplitMinus, SplitPlus };

  PairingOracle(std::shared_ptr<const RootSystem> rs, RingPtr ring, Strategy strategy = Strategy::SplitMinus);

  Scalar pair(const HalfElement& y, const HalfElement& x);
  Scalar pair_words(const Word& f_word, const Word& e_word);

  const RootSystem& root_system() const { return *rs_; }
  const RingPtr& ring() const { return ring_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }

 private:
  Scalar pair_keys(const HalfElement::Key& y, const HalfElement::Key& x);
  Scalar generator_pair(int i, int j) const;

  std::shared_ptr<const RootSystem> rs_;
  RingPtr ring_;
  Strategy strategy_;
  std::mutex mu_;
  std::map<std::pair<Word, Word>, Scalar> memo_;
};

struct AbstractRootVector {
  HalfElement e, f;
};

// Root vectors of all positive roots, indexed like rs.positive_roots(),
// built by the minimal-pair recursion.
std::vector<AbstractRootVector> abstract_root_vectors(const ConvexOrder& order, const RingPtr& ring);

// (f_gamma^m, e_gamma^m) computed by the oracle.
Scalar pairing_power(PairingOracle& oracle, const std::vector<AbstractRootVector>& rv, int root, int m);
// c_gamma from the recursion over minimal pairs.
std::vector<Scalar> c_gamma_table(const ConvexOrder& order, const RingPtr& ring);
// s_gamma^{-m(m-1)/2} c_gamma^m [m]_{r_gamma,s_gamma}!
Scalar pairing_power_from_c(const RootSystem& rs, const RingPtr& ring, int root, const Scalar& c, int m);
// Per-family closed formulas for (f_gamma^m, e_gamma^m).
Scalar pairing_power_closed(const RootSystem& rs, const RingPtr& ring, int root, int m);

// p_{alpha,beta} = max{k >= 0 : alpha - k beta is a root}
int root_string_p(const RootSystem& rs, const Weight& alpha, const Weight& beta);

Report verify_pairing_constants(const ConvexOrder& order, const RingPtr& ring, int max_m);
Report verify_pbw_orthogonality(const ConvexOrder& order, const RingPtr& ring, int max_height);

}  // namespace rsq

#endif
